"""Numerical semigroups and branch/conductor models of Gorenstein points.

For a unibranch monomial singularity ``k[[t^a, t^b, ...]]`` the value
semigroup determines everything: the gaps count the delta invariant and the
conductor is the first integer after the last gap.  A multibranch point is
described branch by branch through the series ``m(t)`` such that a local
generator of the dualising module reads ``dt / m(t)`` up to a unit; the
order of ``m`` on a branch is that branch's share of the conductor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import FrozenSet, Iterable, Sequence, Tuple

from .errors import NonGorenstein
from .series import Known, TruncatedSeries, series_order


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: Tuple[int, ...]
    elements_below_conductor: FrozenSet[int]
    gaps: FrozenSet[int]
    delta: int
    conductor: int
    frobenius: int
    symmetric: bool

    def __contains__(self, n: int) -> bool:
        return n >= self.conductor or n in self.elements_below_conductor


@dataclass(frozen=True)
class GorensteinReport:
    is_gorenstein: bool
    n_p: int
    delta: int
    symmetric: bool

    def __bool__(self):
        return self.is_gorenstein


def semigroup_from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Enumerate the semigroup generated by ``gens`` below its conductor.

    The Frobenius number is below ``min(gens) * max(gens)``, so membership
    is computed by a reachability sweep up to that bound.
    """
    gens = tuple(sorted(set(int(g) for g in gens)))
    if not gens:
        raise ValueError("need at least one generator")
    if gens[0] <= 0:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    if reduce(gcd, gens) != 1:
        raise ValueError(f"gcd{gens} != 1: the complement of the semigroup is infinite")

    bound = gens[0] * gens[-1]
    member = [False] * (bound + 1)
    member[0] = True
    for n in range(1, bound + 1):
        member[n] = any(n >= g and member[n - g] for g in gens)

    gaps = frozenset(n for n in range(bound + 1) if not member[n])
    conductor = max(gaps) + 1 if gaps else 0
    elements = frozenset(n for n in range(conductor) if member[n])
    symmetric = all(member[x] != member[conductor - 1 - x] for x in range(conductor))
    return NumericalSemigroup(
        generators=gens,
        elements_below_conductor=elements,
        gaps=gaps,
        delta=len(gaps),
        conductor=conductor,
        frobenius=conductor - 1,
        symmetric=symmetric,
    )


def gorenstein_test_monomial(s: NumericalSemigroup) -> GorensteinReport:
    # for a monomial branch the conductor ideal is t^c k[[t]], so n_P = c
    return GorensteinReport(
        is_gorenstein=s.conductor == 2 * s.delta,
        n_p=s.conductor,
        delta=s.delta,
        symmetric=s.symmetric,
    )


@dataclass(frozen=True)
class BranchModel:
    """One preimage of the singular point on the normalisation.

    ``multiplier`` is the series ``m`` with the derivation ``D f = m * df/dt``;
    its order is the conductor order on this branch.
    """

    name: str
    multiplier: TruncatedSeries
    conductor_order: int
    variable: str = "t"

    def __post_init__(self):
        order = series_order(self.multiplier)
        if order != Known(self.conductor_order):
            raise ValueError(
                f"branch {self.name!r}: multiplier has order {order}, "
                f"expected Known({self.conductor_order})"
            )

    @classmethod
    def from_multiplier(cls, name: str, multiplier: TruncatedSeries, variable: str = "t") -> "BranchModel":
        order = series_order(multiplier)
        if not isinstance(order, Known):
            raise ValueError(f"branch {name!r}: multiplier vanishes to the working precision")
        return cls(name, multiplier, order.k, variable)

    @property
    def is_smooth(self) -> bool:
        return self.conductor_order == 0


@dataclass(frozen=True)
class SingularPointModel:
    branches: Tuple[BranchModel, ...]
    n_p: int
    delta_p: int

    @property
    def is_smooth(self) -> bool:
        return self.delta_p == 0


def build_singular_point(branches: Sequence[BranchModel]) -> SingularPointModel:
    branches = tuple(branches)
    if not branches:
        raise ValueError("a point needs at least one branch")
    names = [b.name for b in branches]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate branch names in {names}")
    if len(branches) > 1:
        # the conductor sits inside the maximal ideal once there are two branches
        flat = [b.name for b in branches if b.conductor_order == 0]
        if flat:
            raise ValueError(f"branches {flat} have conductor order 0 at a multibranch point")
    n_p = sum(b.conductor_order for b in branches)
    if n_p % 2:
        raise NonGorenstein(n_p)
    return SingularPointModel(branches=branches, n_p=n_p, delta_p=n_p // 2)
