"""Builders for the structured tuple families and random test instances.

Every builder returns a MultiOperator whose commutation invariant holds by
construction: scaled tuples and polynomial families commute exactly, block
and tensor constructions commute exactly in the cross terms and inherit
the base residuals elsewhere.
"""

from dataclasses import dataclass

import numpy as np

from .defect import MultiOperator
from .errors import BetaNotNormalized, DMismatch, InvalidParams
from .linalg import as_matrix, fro_norm, kron

#: allowed deviation of sum(beta_j^2) from 1
BETA_TOL = 1e-12


@dataclass(frozen=True)
class ScaledTupleSpec:
    """A single operator spread over d slots with l2-normalized weights."""

    base: np.ndarray
    beta: tuple

    def __post_init__(self):
        object.__setattr__(self, "base", as_matrix(self.base))
        beta = tuple(float(b) for b in self.beta)
        object.__setattr__(self, "beta", beta)
        if abs(sum(b * b for b in beta) - 1.0) > BETA_TOL:
            raise BetaNotNormalized(
                f"sum of squared weights is {sum(b * b for b in beta)!r}, not 1")


@dataclass(frozen=True)
class JordanAugmentSpec:
    """Block upper-bidiagonal augmentation of a base tuple.

    Component k of the result is the q x q block matrix with the base
    component A_k down the diagonal and mu_k * I on the superdiagonal.
    """

    base_tuple: MultiOperator
    mu: tuple
    q: int

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(complex(m) for m in self.mu))
        if len(self.mu) != self.base_tuple.d:
            raise InvalidParams("need one mu per tuple component")
        if self.q < 1:
            raise InvalidParams("q must be >= 1")


def scaled_tuple(spec):
    """The tuple (beta_1 R, ..., beta_d R); commutes exactly."""
    return MultiOperator([b * spec.base for b in spec.beta])


def reference_pair():
    """The canonical 3x3 pair that is (1,1)-isosymmetric but neither
    1-isometric nor 1-symmetric: a rank-one nilpotent plus the identity."""
    r1 = np.zeros((3, 3), dtype=np.complex128)
    r1[1, 0] = 1.0
    return MultiOperator([r1, np.eye(3, dtype=np.complex128)])


def tensor_sum_parts(r, q):
    """The pair (R_k (x) I, I (x) Q_k) on the product space.

    The two returned tuples cross-commute exactly (entrywise, including
    adjoints); their sum is :func:`tensor_sum` of the inputs.
    """
    if r.d != q.d:
        raise DMismatch("tuples must have the same number of components")
    eye_r = np.eye(r.dim, dtype=np.complex128)
    eye_q = np.eye(q.dim, dtype=np.complex128)
    left = MultiOperator([kron(m, eye_q) for m in r.matrices])
    right = MultiOperator([kron(eye_r, m) for m in q.matrices])
    return left, right


def tensor_sum(r, q):
    """Component k = R_k (x) I + I (x) Q_k; dims multiply."""
    left, right = tensor_sum_parts(r, q)
    return MultiOperator([a + b for a, b in zip(left.matrices, right.matrices)])


def jordan_augment_parts(spec):
    """The block-diagonal part and the nilpotent superdiagonal part.

    The first tuple repeats each base component q times down the diagonal;
    the second is mu_k times the block shift, which is exactly q-nilpotent
    (or identically zero when all mu_k vanish) and cross-commutes exactly
    with the first.
    """
    a = spec.base_tuple
    eye_q = np.eye(spec.q, dtype=np.complex128)
    shift = np.zeros((spec.q, spec.q), dtype=np.complex128)
    for i in range(spec.q - 1):
        shift[i, i + 1] = 1.0
    eye_dim = np.eye(a.dim, dtype=np.complex128)
    diag = MultiOperator([kron(eye_q, m) for m in a.matrices])
    nil = MultiOperator([mu * kron(shift, eye_dim) for mu in spec.mu])
    return diag, nil


def jordan_augment(spec):
    """Block q x q upper-bidiagonal tuple over the base tuple."""
    diag, nil = jordan_augment_parts(spec)
    return MultiOperator([a + b for a, b in zip(diag.matrices, nil.matrices)])


def _block_shift(dim, q):
    """Nilpotent matrix of index exactly q: shift blocks of size <= q."""
    n = np.zeros((dim, dim), dtype=np.complex128)
    for start in range(0, dim, q):
        stop = min(start + q, dim)
        for i in range(start, stop - 1):
            n[i, i + 1] = 1.0
    return n


def nilpotent_tuple(d, dim, order, seed):
    """Random commuting tuple with Q^gamma = 0 for every |gamma| = order.

    Each component is a random polynomial with zero constant term in one
    fixed shift of nilpotency index ``order``, so products of ``order``
    components vanish exactly (strictly triangular support).  The linear
    coefficient is bounded away from zero so the order is exact.
    """
    if order < 1 or order > dim:
        raise InvalidParams(f"need 1 <= order <= dim, got order={order}")
    rng = np.random.default_rng(seed)
    shift = _block_shift(dim, order)
    powers = [np.linalg.matrix_power(shift, p) for p in range(order)]
    mats = []
    for _ in range(d):
        m = np.zeros((dim, dim), dtype=np.complex128)
        lead = rng.uniform(0.5, 1.5) * np.exp(2j * np.pi * rng.uniform())
        if order > 1:
            m = m + lead * powers[1]
        for p in range(2, order):
            c = 0.5 * (rng.standard_normal() + 1j * rng.standard_normal())
            m = m + c * powers[p]
        mats.append(m)
    return MultiOperator(mats)


def random_commuting_tuple(d, dim, seed, conjugate=True):
    """Random commuting tuple: polynomials in one fixed random matrix.

    Commutation is exact up to rounding without any simultaneous
    triangularization; components are scaled to Frobenius norm <= 1 so the
    defect zero-test scale factors stay moderate.  Deterministic in
    ``seed`` (PCG64 stream).
    """
    if dim > 64:
        raise InvalidParams("random tuples are capped at dim 64")
    rng = np.random.default_rng(seed)
    t = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    t = t / max(1.0, fro_norm(t))
    deg = min(dim - 1, 3)
    powers = [np.linalg.matrix_power(t, p) for p in range(deg + 1)]
    mats = []
    for _ in range(d):
        coeffs = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
        m = sum(c * p for c, p in zip(coeffs, powers))
        mats.append(m / max(1.0, fro_norm(m)))
    if conjugate and dim > 1:
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        u, _ = np.linalg.qr(g)
        mats = [u @ m @ u.conj().T for m in mats]
    return MultiOperator(mats)


def identity_tuple(d, dim):
    """The tuple of d identity matrices."""
    return MultiOperator([np.eye(dim, dtype=np.complex128)] * d)
