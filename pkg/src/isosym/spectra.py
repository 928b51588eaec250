"""Joint point spectrum of commuting tuples and the spectral checks.

The joint point spectrum is computed by recursive eigenspace intersection:
take an eigenvalue cluster of the first component, extract the null space
of the shifted operator, compress the remaining components onto it (the
eigenspace is invariant because the tuple commutes) and recurse.  In
finite dimension this is the whole approximate point spectrum as well.
"""

from dataclasses import dataclass, field

import numpy as np

from .classify import is_isosymmetric
from .defect import op_sum
from .errors import ConvergenceFailure, HypothesisUnmet, InvalidParams, \
    InvarianceViolation
from .linalg import TOL_RANK, adjoint, fro_norm

#: default tolerance of the spectral checks (residuals and gap tests)
TOL_SPECTRA = 1e-7
#: relative width used to merge near-degenerate eigenvalues
CLUSTER_TOL = 1e-7
#: cap on the dimension of a joint-spectrum computation
MAX_JOINT_DIM = 128


@dataclass(frozen=True)
class JointEigenpair:
    """A joint eigenvalue with an orthonormal basis of its eigenspace."""

    mu: tuple              # one complex entry per tuple component
    basis: np.ndarray      # dim x k, orthonormal columns
    residual: float        # max ||(R_l - mu_l) v|| over l and basis columns


@dataclass(frozen=True)
class SpectralClassification:
    """Location of one joint eigenvalue relative to the two allowed sets."""

    mu: tuple
    on_sphere: bool        # | ||mu||_2 - 1 | <= tol
    real_sum: bool         # | Im sum_l mu_l | <= tol
    compliant: bool        # on_sphere or real_sum


@dataclass(frozen=True)
class OrthogonalityCheck:
    """Gram test between the eigenspaces of two joint eigenvalues."""

    mu: tuple
    mu_prime: tuple
    gram_norm: float
    required_orthogonal: bool
    compliant: bool
    gate_product: float    # | sum_j mu_j conj(mu'_j) - 1 |
    gate_sum: float        # | sum_j (mu_j - conj(mu'_j)) |


@dataclass(frozen=True)
class ZeroCoordinateEntry:
    """One joint eigenvalue with a vanishing coordinate product."""

    mu: tuple
    product_modulus: float
    coordinate_sum: complex
    adjoint_sum_distance: float  # distance of the sum to the nearest
                                 # eigenvalue of (sum_l R_l)*
    consistent: bool


@dataclass(frozen=True)
class ZeroCoordinateReport:
    """Per-point contrapositive check of the zero-coordinate exclusion.

    A vanishing-product joint eigenvalue is only possible when the sum of
    its coordinates is itself an eigenvalue of the adjoint of the summed
    tuple; each such point is listed with that verdict.
    """

    entries: list = field(default_factory=list)
    consistent: bool = True


def _clusters(values, radius):
    """Partition eigenvalues into connected groups of pairwise-near values."""
    k = len(values)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if abs(values[i] - values[j]) <= radius:
                pi, pj = find(i), find(j)
            else:
                continue
            if pi != pj:
                parent[pi] = pj
    groups = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _null_basis(shifted, cluster_radius, ambient_scale):
    """Orthonormal null-space basis, widened to absorb the cluster spread."""
    _, s, vh = np.linalg.svd(shifted)
    smax = s[0] if s.size else 0.0
    thresh = max(TOL_RANK * smax,
                 4.0 * cluster_radius + 64.0 * np.finfo(float).eps * ambient_scale)
    keep = int(np.sum(s > thresh))
    if keep == shifted.shape[0]:
        keep = shifted.shape[0] - 1  # the eigenvalue exists; keep at least one
    return np.ascontiguousarray(vh[keep:].conj().T)


def _recurse(ops, carrier, mu_prefix, out, tol):
    if not ops:
        out.append((mu_prefix, carrier))
        return
    a = ops[0]
    try:
        vals = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    scale = 1.0 + fro_norm(a)
    for group in _clusters(list(vals), CLUSTER_TOL * scale):
        members = vals[group]
        lam = complex(np.mean(members))
        radius = float(np.max(np.abs(members - lam)))
        w = _null_basis(a - lam * np.eye(a.shape[0]), radius, scale)
        rest = []
        for op in ops[1:]:
            proj = op @ w
            resid = fro_norm(proj - w @ (w.conj().T @ proj))
            if resid > 10.0 * tol * (1.0 + fro_norm(op)):
                raise InvarianceViolation(
                    f"eigenspace not invariant (residual {resid:.3e}); "
                    "the tuple may not commute")
            rest.append(w.conj().T @ proj)
        _recurse(rest, carrier @ w, mu_prefix + (lam,), out, tol)


def joint_point_spectrum(r, tol=TOL_SPECTRA):
    """All mu in C^d with a common eigenvector, with eigenspace bases.

    Eigenvalues within CLUSTER_TOL (relative) are merged before null-space
    extraction.  Results are sorted by (re, im) per coordinate; every
    returned pair satisfies residual <= tol * (1 + max_j ||R_j||).
    """
    if r.dim > MAX_JOINT_DIM:
        raise InvalidParams(f"dimension {r.dim} exceeds {MAX_JOINT_DIM}")
    raw = []
    _recurse(list(r.matrices), np.eye(r.dim, dtype=np.complex128), (), raw, tol)
    bound = tol * (1.0 + r.max_norm())
    pairs = []
    for mu, basis in raw:
        resid = 0.0
        for lam, op in zip(mu, r.matrices):
            resid = max(resid, fro_norm(op @ basis - lam * basis))
        if resid > bound:
            raise ConvergenceFailure(
                f"joint eigenpair residual {resid:.3e} exceeds {bound:.3e}")
        gram = basis.conj().T @ basis
        if fro_norm(gram - np.eye(basis.shape[1])) > 1e-10:
            raise ConvergenceFailure("eigenspace basis lost orthonormality")
        pairs.append(JointEigenpair(mu=mu, basis=basis, residual=resid))
    pairs.sort(key=lambda p: tuple((z.real, z.imag) for z in p.mu))
    return pairs


def _require_isosymmetric(r, m, n):
    verdict = is_isosymmetric(r, m, n)
    if not verdict.holds:
        raise HypothesisUnmet(
            f"tuple is not ({m},{n})-isosymmetric "
            f"(defect norm {verdict.defect_norm:.3e})")


def classify_spectrum(r, m, n, tol=TOL_SPECTRA):
    """Locate every joint eigenvalue of an (m,n)-isosymmetric tuple.

    Each point must lie on the unit sphere of C^d or have a real
    coordinate sum; non-compliance is reported, not raised.
    """
    _require_isosymmetric(r, m, n)
    out = []
    for pair in joint_point_spectrum(r, tol):
        norm = float(np.sqrt(sum(abs(z) ** 2 for z in pair.mu)))
        on_sphere = abs(norm - 1.0) <= tol
        real_sum = abs(sum(pair.mu).imag) <= tol
        out.append(SpectralClassification(mu=pair.mu, on_sphere=on_sphere,
                                          real_sum=real_sum,
                                          compliant=on_sphere or real_sum))
    return out


def check_orthogonality(r, m, n, tol=1e-8):
    """Pairwise Gram test between joint eigenspaces.

    A pair (mu, mu') must be orthogonal whenever both gate quantities are
    nonzero: sum_j mu_j conj(mu'_j) != 1 and sum_j (mu_j - conj(mu'_j)) != 0,
    each tested against tol.  Pairs failing a gate carry no constraint.
    """
    _require_isosymmetric(r, m, n)
    pairs = joint_point_spectrum(r, max(tol, TOL_SPECTRA))
    out = []
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            mu = pairs[i].mu
            mup = pairs[j].mu
            g1 = abs(sum(a * b.conjugate() for a, b in zip(mu, mup)) - 1.0)
            g2 = abs(sum(a - b.conjugate() for a, b in zip(mu, mup)))
            required = g1 > tol and g2 > tol
            gram = fro_norm(pairs[i].basis.conj().T @ pairs[j].basis)
            out.append(OrthogonalityCheck(
                mu=mu, mu_prime=mup, gram_norm=gram,
                required_orthogonal=required,
                compliant=(not required) or gram <= tol,
                gate_product=g1, gate_sum=g2))
    return out


def check_zero_coordinate_exclusion(r, m, n, tol=TOL_SPECTRA):
    """Contrapositive of the zero-coordinate exclusion, point by point."""
    _require_isosymmetric(r, m, n)
    adj_sum = adjoint(op_sum(r))
    try:
        adj_eigs = np.linalg.eigvals(adj_sum)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    scale = 1.0 + fro_norm(adj_sum)
    entries = []
    for pair in joint_point_spectrum(r, tol):
        prod = 1.0
        for z in pair.mu:
            prod *= abs(z)
        if prod > tol:
            continue
        total = sum(pair.mu)
        dist = float(np.min(np.abs(adj_eigs - total)))
        entries.append(ZeroCoordinateEntry(
            mu=pair.mu, product_modulus=prod, coordinate_sum=total,
            adjoint_sum_distance=dist, consistent=dist <= tol * scale))
    return ZeroCoordinateReport(entries=entries,
                                consistent=all(e.consistent for e in entries))
