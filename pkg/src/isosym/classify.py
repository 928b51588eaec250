"""Class membership verdicts, minimal-order search and family ranks."""

from dataclasses import dataclass

from .defect import isosymmetry_defect, isometry_defect, symmetry_defect, \
    isosymmetry_defect_matrix
from .errors import HypothesisUnmet, InvalidParams
from .linalg import matrix_rank

#: width of the indeterminate band around the zero tolerance, as a factor
STRICTNESS_BAND = 10.0


@dataclass(frozen=True)
class ClassVerdict:
    """Holds/fails verdict for one membership test."""

    property: str          # "m_isometric", "n_symmetric" or "mn_isosymmetric"
    orders: tuple
    holds: bool
    defect_norm: float
    tolerance: float


@dataclass(frozen=True)
class MinimalOrders:
    """Minimal antichain of vanishing orders inside a scanned box."""

    staircase: list        # [(m, n), ...], no pair dominating another
    search_bounds: tuple   # (m_max, n_max)
    exhausted: bool        # False when nothing vanished inside the bounds


@dataclass(frozen=True)
class FamilyRank:
    """Rank report for a defect family along one axis."""

    rank: int
    independent: bool
    hypothesis: str        # "met" or "indeterminate"


def _verdict(prop, orders, report):
    return ClassVerdict(property=prop, orders=orders, holds=report.is_zero,
                        defect_norm=report.norm,
                        tolerance=report.tolerance_used)


def is_m_isometric(r, m, tol=None):
    """Does M_m(r) vanish?"""
    if m < 1:
        raise InvalidParams("m must be >= 1")
    return _verdict("m_isometric", (m,), isometry_defect(r, m, tol))


def is_n_symmetric(r, n, tol=None):
    """Does S_n(r) vanish?"""
    if n < 1:
        raise InvalidParams("n must be >= 1")
    return _verdict("n_symmetric", (n,), symmetry_defect(r, n, tol))


def is_isosymmetric(r, m, n, tol=None):
    """Does L_{m,n}(r) vanish?"""
    if m + n < 1:
        raise InvalidParams("m + n must be >= 1")
    return _verdict("mn_isosymmetric", (m, n), isosymmetry_defect(r, m, n, tol))


def minimal_orders(r, m_max, n_max, tol=None):
    """Minimal (m, n) pairs with vanishing defect inside a box.

    Scans diagonals of the (m, n) lattice in increasing m + n.  Once a zero
    cell is found, everything it dominates is zero too (one recurrence step
    maps a vanishing defect to a vanishing defect), so dominated cells are
    pruned rather than evaluated; what remains of the zero set is exactly
    the minimal antichain.
    """
    if not (0 <= m_max <= 12 and 0 <= n_max <= 12):
        raise InvalidParams("scan bounds are capped at 12")
    found = []
    for total in range(m_max + n_max + 1):
        for m in range(min(m_max, total), -1, -1):
            n = total - m
            if n < 0 or n > n_max:
                continue
            if any(m >= zm and n >= zn for zm, zn in found):
                continue
            if isosymmetry_defect(r, m, n, tol).is_zero:
                found.append((m, n))
    found.sort()
    return MinimalOrders(staircase=found, search_bounds=(m_max, n_max),
                         exhausted=bool(found))


def defect_family_rank(r, m, n, direction, tol=None):
    """Numerical rank of a one-axis defect family.

    direction "vary_m": the family {L_{k,n-1} : k = 0..m-1} (independent
    means rank m); "vary_n": {L_{m-1,l} : l = 0..n-1} (rank n).  Requires
    the corner defect L_{m-1,n-1} to be nonzero; when its norm is inside
    the strictness band just above the tolerance the rank is still
    reported but flagged "indeterminate".
    """
    if direction not in ("vary_m", "vary_n"):
        raise InvalidParams(f"unknown direction {direction!r}")
    if direction == "vary_m" and (m < 2 or n < 1):
        raise InvalidParams("vary_m needs m >= 2 and n >= 1")
    if direction == "vary_n" and (n < 2 or m < 1):
        raise InvalidParams("vary_n needs n >= 2 and m >= 1")
    corner = isosymmetry_defect(r, m - 1, n - 1, tol)
    if corner.is_zero:
        raise HypothesisUnmet(
            f"L_({m - 1},{n - 1}) vanishes (norm {corner.norm:.3e}); "
            "the independence hypothesis needs it nonzero")
    hypothesis = ("indeterminate"
                  if corner.norm <= STRICTNESS_BAND * corner.tolerance_used
                  else "met")
    if direction == "vary_m":
        family = [isosymmetry_defect_matrix(r, k, n - 1) for k in range(m)]
        size = m
    else:
        family = [isosymmetry_defect_matrix(r, m - 1, l) for l in range(n)]
        size = n
    rank = matrix_rank(family)
    return FamilyRank(rank=rank, independent=rank == size,
                      hypothesis=hypothesis)
