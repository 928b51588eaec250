"""Naive reference implementations used as independent test oracles.

Everything here is written with plain numpy loops and matrix_power, with
multi-index enumeration via itertools -- deliberately sharing no code with
the package's kernel-backed evaluation paths.
"""

import math
from itertools import product

import numpy as np


def degree_indices(d, k):
    """All multi-indices of degree k via filtered cartesian product."""
    return [g for g in product(range(k + 1), repeat=d) if sum(g) == k]


def gamma_power(mats, gamma):
    out = np.eye(mats[0].shape[0], dtype=np.complex128)
    for mat, g in zip(mats, gamma):
        out = out @ np.linalg.matrix_power(mat, g)
    return out


def naive_s(mats, l):
    dim = mats[0].shape[0]
    fwd = sum(mats)
    bwd = sum(m.conj().T for m in mats)
    out = np.zeros((dim, dim), dtype=np.complex128)
    for k in range(l + 1):
        coeff = (-1) ** (l - k) * math.comb(l, k)
        out += coeff * (np.linalg.matrix_power(bwd, k)
                        @ np.linalg.matrix_power(fwd, l - k))
    return out


def naive_m(mats, l):
    d = len(mats)
    dim = mats[0].shape[0]
    stars = [m.conj().T for m in mats]
    out = np.zeros((dim, dim), dtype=np.complex128)
    for k in range(l + 1):
        coeff = (-1) ** (l - k) * math.comb(l, k)
        for gamma in degree_indices(d, k):
            weight = math.factorial(k)
            for g in gamma:
                weight //= math.factorial(g)
            out += coeff * weight * (gamma_power(stars, gamma)
                                     @ gamma_power(mats, gamma))
    return out


def naive_lambda(mats, m, n):
    """The weighted-sum form around the symmetry defect."""
    d = len(mats)
    dim = mats[0].shape[0]
    stars = [mat.conj().T for mat in mats]
    mid = naive_s(mats, n)
    out = np.zeros((dim, dim), dtype=np.complex128)
    for k in range(m + 1):
        coeff = (-1) ** (m - k) * math.comb(m, k)
        for gamma in degree_indices(d, k):
            weight = math.factorial(k)
            for g in gamma:
                weight //= math.factorial(g)
            out += coeff * weight * (gamma_power(stars, gamma) @ mid
                                     @ gamma_power(mats, gamma))
    return out


def random_tuple_mats(d, dim, seed, degree=2):
    """Commuting matrices (polynomials in one matrix), oracle-side."""
    rng = np.random.default_rng(seed)
    t = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    t /= np.linalg.norm(t)
    mats = []
    for _ in range(d):
        coeffs = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
        mats.append(sum(c * np.linalg.matrix_power(t, p)
                        for p, c in enumerate(coeffs)))
    return mats
