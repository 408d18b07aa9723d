"""Divisor classes on families of stable curves and enumerative pipelines.

Classes live in the span of ``lambda, delta_0, ..., delta_[g/2]`` with
rational coefficients.  ``kappa_1`` never appears on its own; it is replaced
by ``12 lambda - sum(delta_i)`` as soon as it is produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Mapping, Tuple, Union

from .errors import InternalConsistencyError

Number = Union[int, Fraction]

LAMBDA = "lambda"

# Automatic degeneracy AD^4 of the cusp y^2 = x^3.  Reference value only:
# no algorithm for non-nodal germs is provided.
AD4_CUSP = 10

# Coefficients of the genus-3 hyperflex class as printed in the source
# literature: 308 lambda - 32 delta_0 - 82 delta_1.
PRINTED_HYPERFLEX_G3 = (308, 32, 82)


def delta(i: int) -> str:
    return f"delta{i}"


@dataclass(frozen=True)
class DivisorClass:
    genus: int
    lambda_coeff: Fraction = Fraction(0)
    delta_coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be at least 1")
        top = self.genus // 2
        coeffs = {}
        for i, c in dict(self.delta_coeffs).items():
            if not 0 <= i <= top:
                raise ValueError(f"delta_{i} does not exist in genus {self.genus}")
            coeffs[i] = Fraction(c)
        for i in range(top + 1):
            coeffs.setdefault(i, Fraction(0))
        object.__setattr__(self, "lambda_coeff", Fraction(self.lambda_coeff))
        object.__setattr__(self, "delta_coeffs", dict(sorted(coeffs.items())))

    @classmethod
    def of(cls, genus: int, lam: Number, *deltas: Number) -> "DivisorClass":
        """``DivisorClass.of(3, 9, -1, -3)`` is ``9 lambda - delta_0 - 3 delta_1``."""
        return cls(genus, Fraction(lam), dict(enumerate(deltas)))

    @classmethod
    def kappa1(cls, genus: int) -> "DivisorClass":
        """kappa_1 rewritten through the Grothendieck-Riemann-Roch relation."""
        return cls(genus, Fraction(12), {i: Fraction(-1) for i in range(genus // 2 + 1)})

    def symbols(self) -> Dict[str, Fraction]:
        out = {LAMBDA: self.lambda_coeff}
        out.update({delta(i): c for i, c in self.delta_coeffs.items()})
        return out

    def _same_genus(self, other: "DivisorClass") -> None:
        if other.genus != self.genus:
            raise ValueError(f"cannot combine genus {self.genus} and genus {other.genus} classes")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._same_genus(other)
        return DivisorClass(
            self.genus,
            self.lambda_coeff + other.lambda_coeff,
            {i: c + other.delta_coeffs[i] for i, c in self.delta_coeffs.items()},
        )

    def __neg__(self) -> "DivisorClass":
        return self * -1

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __mul__(self, k: Number) -> "DivisorClass":
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return DivisorClass(
            self.genus, self.lambda_coeff * k, {i: c * k for i, c in self.delta_coeffs.items()}
        )

    __rmul__ = __mul__

    def is_proportional_to(self, other: "DivisorClass") -> bool:
        self._same_genus(other)
        a, b = list(self.symbols().values()), list(other.symbols().values())
        return all(x * b[j] == y * a[j] for j in range(len(a)) for x, y in zip(a, b))

    def __str__(self) -> str:
        parts = []
        for name, c in self.symbols().items():
            if c:
                parts.append(f"{'-' if c < 0 else '+'} {abs(c)}*{name}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class DegreeAssignment:
    degrees: Mapping[str, Fraction]

    @classmethod
    def of(cls, lam: Number, *deltas: Number) -> "DegreeAssignment":
        d = {LAMBDA: Fraction(lam)}
        d.update({delta(i): Fraction(x) for i, x in enumerate(deltas)})
        return cls(d)


def evaluate_class(c: DivisorClass, deg: DegreeAssignment) -> Fraction:
    """Degree of ``c`` on a one-parameter family with the given symbol degrees.

    Symbols whose coefficient is zero may be left out of ``deg``.
    """
    total = Fraction(0)
    for name, coeff in c.symbols().items():
        if not coeff:
            continue
        if name not in deg.degrees:
            raise KeyError(f"degree assignment has no value for {name}")
        total += coeff * Fraction(deg.degrees[name])
    return total


def harris_mumford_degrees(g: int) -> DegreeAssignment:
    """Pencil of elliptic tails glued to a fixed genus g-1 curve: (1, 12, -1, 0, ...)."""
    return DegreeAssignment.of(1, 12, -1, *([0] * max(0, g // 2 - 1)))


def quartic_pencil_degrees() -> DegreeAssignment:
    """General pencil of plane quartics: lambda = 3, delta_0 = 27 nodal fibres, no delta_1."""
    return DegreeAssignment.of(3, pencil_nodes(2, 4), 0)


# -- jets -----------------------------------------------------------------

def jet_c1(k: int) -> Tuple[int, int]:
    """c_1 of det J^k(L) as ``(zeta coefficient, eta coefficient)``.

    The Chern roots of J^k(L) are ``zeta + j*eta`` for ``j = 0..k``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    return k + 1, k * (k + 1) // 2


def jet_c2(k: int) -> Tuple[int, int, int]:
    """c_2 of J^k(L) as ``(A, B, C)`` meaning ``A eta^2 + B eta zeta + C zeta^2``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    pairs = [(i, j) for i in range(k + 1) for j in range(i + 1, k + 1)]
    a = sum(i * j for i, j in pairs)
    b = sum(i + j for i, j in pairs)
    return a, b, comb(k + 1, 2)


@dataclass(frozen=True)
class ChernModel:
    """Intersection numbers of eta = c_1(omega) and zeta = c_1(L) on a fibred surface."""

    eta_sq: Fraction
    eta_zeta: Fraction
    zeta_sq: Fraction

    def degree(self, a: Number, b: Number, c: Number) -> Fraction:
        return a * self.eta_sq + b * self.eta_zeta + c * self.zeta_sq


def plane_pencil_model(d: int) -> ChernModel:
    """Blown-up general pencil of degree-d plane curves with L the pullback of O(d).

    The three degrees are taken as given data, not derived here.
    """
    return ChernModel(Fraction(3 * d * d - 12 * d + 9), Fraction(2 * d - 3), Fraction(1))


def pencil_nodes(n: int, d: int) -> int:
    """Singular members of a general pencil of degree-d hypersurfaces in P^n."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return (n + 1) * (d - 1) ** n


def ad_node(m: int) -> int:
    if m < 0:
        raise ValueError("m must be non-negative")
    return comb(m + 1, 4)


def hyperflex_count(d: int) -> int:
    """Hyperflexes in a general pencil of plane curves of degree d.

    Computed as c_2(J^3) minus the nodal automatic degeneracies, and checked
    against the closed form 6(d-3)(3d-2).
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    chern = plane_pencil_model(d).degree(*jet_c2(3))
    pipeline = chern - ad_node(4) * pencil_nodes(2, d)
    closed = 6 * (d - 3) * (3 * d - 2)
    if pipeline != closed:
        raise InternalConsistencyError(f"hyperflex count for d={d}: pipeline {pipeline} != closed form {closed}")
    return closed


# -- special Weierstrass points -------------------------------------------

def multiplicity_m(g: int, i: int) -> int:
    """Vanishing order of the relative Wronskian along a genus-i component of a Delta_i fibre."""
    if not 1 <= i <= g - 1:
        raise ValueError(f"need 1 <= i <= g-1, got g={g}, i={i}")
    return comb(g - i + 1, 2)


@dataclass(frozen=True)
class SwClassBreakdown:
    g: int
    m: Dict[int, int]
    c: Dict[int, Fraction]
    b: Dict[int, Fraction]
    a0: Fraction
    lambda_coeff: Fraction
    final: DivisorClass


def _lambda_coeff(g: int) -> int:
    via_grr = 3 * g * (g + 1) * (g * g + g + 2) - 2 * (g * g + g + 1) * (g - 1)
    expanded = 2 + 6 * g + 9 * g**2 + 4 * g**3 + 3 * g**4
    if via_grr != expanded:
        raise InternalConsistencyError(f"lambda coefficient for g={g}: {via_grr} != {expanded}")
    return via_grr


def sw_class(g: int) -> SwClassBreakdown:
    """Class of the locus of curves with a special Weierstrass point, with all intermediates."""
    if g < 1:
        raise ValueError("g must be at least 1")
    big_b = _lambda_coeff(g)
    shift = Fraction(g * (g + 1) * (g * g + g + 2), 4)
    m: Dict[int, int] = {}
    c: Dict[int, Fraction] = {}
    b: Dict[int, Fraction] = {}
    for i in range(1, g // 2 + 1):
        mi, mgi = multiplicity_m(g, i), multiplicity_m(g, g - i)
        m[i], m[g - i] = mi, mgi
        k_dot_f = 2 * (i * mi + (g - i) * mgi) - mi - mgi
        c[i] = Fraction((g * g + g + 1) * k_dot_f + (mi - mgi) ** 2)
        b[i] = c[i] + shift
        closed = (g**3 + 3 * g**2 + 2 * g + 2) * i * (g - i)
        if b[i] != closed:
            raise InternalConsistencyError(f"b_{i} for g={g}: {b[i]} != {closed}")

    a0 = Fraction(g * (g + 1) * (2 * g * g + g + 3), 6)
    if g >= 2:
        # the elliptic-tail pencil carries no special Weierstrass limits: B - 12 a0 + b1 = 0
        from_pencil = (big_b + b[1]) / 12
        if from_pencil != a0:
            raise InternalConsistencyError(f"a_0 for g={g}: {from_pencil} != {a0}")

    final = DivisorClass(g, Fraction(big_b), {0: -a0, **{i: -bi for i, bi in b.items()}})
    return SwClassBreakdown(g, m, c, b, a0, Fraction(big_b), final)


def hyperelliptic_class_g3() -> DivisorClass:
    h = DivisorClass.of(3, 9, -1, -3)
    if 8 * h != DivisorClass.of(3, 72, -8, -24):
        raise InternalConsistencyError("8 [H] != 72 lambda - 8 delta_0 - 24 delta_1")
    return h


@dataclass(frozen=True)
class HyperflexClassG3:
    divisor_class: DivisorClass
    printed: Tuple[int, int, int]
    delta1_discrepancy: bool

    @property
    def delta1_computed(self) -> Fraction:
        return -self.divisor_class.delta_coeffs[1]


def hyperflex_class_g3() -> HyperflexClassG3:
    """Genus-3 hyperflex locus: [wt(2)] - 16 [H], each hyperelliptic curve counted 16 times."""
    cls = sw_class(3).final - 16 * hyperelliptic_class_g3()
    computed = (cls.lambda_coeff, -cls.delta_coeffs[0], -cls.delta_coeffs[1])
    return HyperflexClassG3(
        divisor_class=cls,
        printed=PRINTED_HYPERFLEX_G3,
        delta1_discrepancy=computed[2] != PRINTED_HYPERFLEX_G3[2],
    )
