"""Wronskians of linear systems at (possibly singular) Gorenstein points.

At a point with branches ``Q_1..Q_s`` every section is restricted to each
branch as a series in that branch's parameter.  The derivation used on a
branch is ``D f = m * df/dt`` with ``m`` the branch multiplier, and the
Wronskian on the branch is ``det(D^i v_j)`` with rows indexed by the
derivative order and columns by the basis.  The weight of the point is the
sum of the branch orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import InconsistentModel, LinearDependenceError, PrecisionExhausted
from .localring import BranchModel, SingularPointModel
from .series import Known, Order, TruncatedSeries, series_det, series_order

CERTIFICATION_SLACK = 8


@dataclass(frozen=True)
class LocalLinearSystem:
    """``sections[j][b]`` is the j-th basis section restricted to branch ``b``."""

    sections: Tuple[Tuple[TruncatedSeries, ...], ...]
    d: Optional[int] = None
    g: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "sections", tuple(tuple(s) for s in self.sections))
        if not self.sections:
            raise ValueError("a linear system needs at least one section")
        widths = {len(s) for s in self.sections}
        if len(widths) != 1:
            raise ValueError(f"sections have differing branch counts {sorted(widths)}")

    @classmethod
    def on_one_branch(cls, sections: Sequence[TruncatedSeries], **kw) -> "LocalLinearSystem":
        return cls(tuple((s,) for s in sections), **kw)

    @property
    def r(self) -> int:
        return len(self.sections) - 1

    @property
    def n_branches(self) -> int:
        return len(self.sections[0])

    def on_branch(self, b: int) -> Tuple[TruncatedSeries, ...]:
        return tuple(s[b] for s in self.sections)


@dataclass(frozen=True)
class VanishingProfile:
    vanishing_sequence: Tuple[int, ...]
    gap_sequence: Tuple[int, ...]
    weight: int


@dataclass(frozen=True)
class WeightReport:
    per_branch_order: Tuple[Order, ...]
    total_weight: int
    lower_bound: int
    extraweight: int


def certification_precision(r: int, max_degree: int, conductor_order: int) -> int:
    """Working precision that comfortably certifies the Wronskian order."""
    return (r + 1) * (max_degree + conductor_order + 1) + CERTIFICATION_SLACK


def _check_attached(point: SingularPointModel, sys: LocalLinearSystem) -> None:
    if sys.n_branches != len(point.branches):
        raise ValueError(
            f"linear system has {sys.n_branches} branch restrictions, point has {len(point.branches)} branches"
        )
    for j, sec in enumerate(sys.sections):
        consts = {s.coeffs[0] for s in sec}
        if len(consts) > 1:
            raise ValueError(f"section {j}: constant terms {sorted(consts)} differ across branches")
        for b, s in enumerate(sec):
            if s.is_zero():
                raise ValueError(
                    f"section {j} vanishes identically on branch {point.branches[b].name!r}"
                )


def wl_derivative_tower(f: TruncatedSeries, branch: BranchModel, r: int) -> List[TruncatedSeries]:
    """Return ``[f, Df, ..., D^r f]`` with ``D f = multiplier * df/dt``.

    >>> from gorenstein_wp.series import parse_series
    >>> b = BranchModel.from_multiplier("Q", parse_series("t^2", 10))
    >>> wl_derivative_tower(parse_series("t^3", 10), b, 1)[1]
    TruncatedSeries(3*t^4 + O(t^9))
    """
    tower = [f]
    for i in range(r):
        prev = tower[-1]
        if prev.precision < 2:
            raise PrecisionExhausted(
                f"derivative {i + 1} on branch {branch.name!r} needs more coefficients",
                branch=branch.name,
                suggested_precision=2 * f.precision + r,
            )
        tower.append(branch.multiplier * prev.derivative())
    return tower


def wl_wronskian(point: SingularPointModel, sys: LocalLinearSystem) -> List[TruncatedSeries]:
    """One Wronskian series per branch of ``point``."""
    _check_attached(point, sys)
    r = sys.r
    out = []
    for b, branch in enumerate(point.branches):
        towers = [wl_derivative_tower(s, branch, r) for s in sys.on_branch(b)]
        # rows: derivative order; columns: basis element
        matrix = [[towers[j][i] for j in range(r + 1)] for i in range(r + 1)]
        out.append(series_det(matrix))
    return out


def point_weight(point: SingularPointModel, sys: LocalLinearSystem) -> WeightReport:
    wronskians = wl_wronskian(point, sys)
    orders = tuple(series_order(w) for w in wronskians)
    for branch, order in zip(point.branches, orders):
        if not isinstance(order, Known):
            raise PrecisionExhausted(
                f"Wronskian on branch {branch.name!r} vanishes modulo t^{order.precision}; "
                f"its order is not determined, raise the working precision",
                branch=branch.name,
                suggested_precision=2 * max(s.precision for sec in sys.sections for s in sec),
            )
    r = sys.r
    total = sum(o.k for o in orders)
    bound = point.delta_p * r * (r + 1)
    extra = total - bound
    if extra < 0:
        raise InconsistentModel(
            f"total weight {total} is below the floor delta*r(r+1) = {bound}; "
            "the sections or multipliers do not describe a Gorenstein point"
        )
    return WeightReport(orders, total, bound, extra)


def vanishing_sequence(sections: Sequence[TruncatedSeries]) -> VanishingProfile:
    """Orders of vanishing of an adapted basis of the span of ``sections``.

    Column reduction on the coefficient matrix: walk the rows (powers of t)
    upward, and at each row take the leftmost unused column with a nonzero
    entry as pivot, clearing that row from the other unused columns.
    """
    if not sections:
        raise ValueError("no sections given")
    n = min(s.precision for s in sections)
    r = len(sections) - 1
    if n < r + 1:
        raise PrecisionExhausted(f"precision {n} cannot hold {r + 1} distinct orders")
    cols = [list(s.coeffs[:n]) for s in sections]
    free = list(range(len(cols)))
    orders: List[int] = []
    for row in range(n):
        pivot = next((j for j in free if cols[j][row]), None)
        if pivot is None:
            continue
        free.remove(pivot)
        orders.append(row)
        p = cols[pivot]
        for j in free:
            c = cols[j][row]
            if c:
                factor = Fraction(c) / p[row]
                cols[j] = [x - factor * y for x, y in zip(cols[j], p)]
        if not free:
            break
    if free:
        raise LinearDependenceError(
            f"only {len(orders)} independent orders below t^{n}: the sections are "
            "linearly dependent, or the precision is too low to separate them"
        )
    a = tuple(orders)
    return VanishingProfile(
        vanishing_sequence=a,
        gap_sequence=tuple(x + 1 for x in a),
        weight=sum(a) - r * (r + 1) // 2,
    )


def brill_segre(r: int, d: int, g: int) -> int:
    """Total ramification weight of a g^r_d on a Gorenstein curve of arithmetic genus g."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return (r + 1) * d + (g - 1) * r * (r + 1)


def cusp_weight(r: int) -> int:
    """Weight of an ordinary cusp for an r-dimensional projective system: r(r+1) + r."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return r * (r + 2)


def sw_pair_count(g: int) -> int:
    """Number of pairs (P, Q) on a general genus g-1 curve with P special for K(2Q)."""
    if g < 1:
        raise ValueError("g must be at least 1")
    return 6 * g**4 + 14 * g**3 + 10 * g**2 - 14 * g - 16
