"""All dataclasses for the vector-field analysis pipeline. No logic; polynomial classes appear in annotations only."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from src.poly import BiPoly, HomogeneousForm, UniPoly

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"
UNCERTIFIED = "uncertified"
INCONCLUSIVE = "inconclusive"
VERDICT_STATUSES = {HOLDS, FAILS, NOT_APPLICABLE, UNCERTIFIED, INCONCLUSIVE}


@dataclass(frozen=True)
class LinearSolution:
    particular: tuple[Fraction, ...]
    nullspace: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.nullspace)


@dataclass(frozen=True)
class RowReduction:
    """RREF of a matrix M together with the row operations E that produced it (E·M = reduced)."""

    reduced: tuple[tuple[Fraction, ...], ...]
    pivots: tuple[int, ...]
    transform: tuple[tuple[Fraction, ...], ...]
    columns: int

    @property
    def rank(self) -> int:
        return len(self.pivots)


@dataclass(frozen=True)
class PointClass:
    """
    A Galois-conjugate class of affine points.

    x_factor is monic irreducible over Q; y_factor is monic squarefree with coefficients
    in Q[t]/(x_factor) (plain Fractions when x_factor is linear). The class consists of
    the deg(x_factor)·deg(y_factor) points (α, β) with x_factor(α) = 0, y_factor(α, β) = 0.
    """
    x_factor: UniPoly
    y_factor: UniPoly
    approx: tuple[tuple[complex, complex], ...] = ()

    @property
    def size(self) -> int:
        return self.x_factor.degree * self.y_factor.degree

    @property
    def is_rational(self) -> bool:
        return self.size == 1


@dataclass(frozen=True)
class VectorField:
    P: BiPoly
    Q: BiPoly
    m: int


@dataclass(frozen=True)
class ProjectivePoint:
    """A zero of a binary form: exact [x : y] when `coords` is set, else the class [1 : z], factor(z) = 0."""
    multiplicity: int
    coords: tuple[Fraction, Fraction] | None = None
    factor: UniPoly | None = None
    approx: tuple[complex, ...] = ()

    @property
    def class_size(self) -> int:
        return 1 if self.factor is None else self.factor.degree


@dataclass(frozen=True)
class DarbouxDivisor:
    points: tuple[ProjectivePoint, ...]

    @property
    def total(self) -> int:
        return sum(p.multiplicity * p.class_size for p in self.points)


@dataclass(frozen=True)
class InfinityChart:
    A: BiPoly
    B: BiPoly
    F: BiPoly | None = None
    K: BiPoly | None = None


@dataclass(frozen=True)
class Certificate:
    field: VectorField
    f: BiPoly
    k: BiPoly
    irreducibility: str = "unknown"  # verified | unknown | reducible

    @property
    def n(self) -> int:
        return self.f.degree

    @property
    def first_integral(self) -> bool:
        return self.k.is_zero


@dataclass(frozen=True)
class CertificateCheck:
    holds: bool
    residual: BiPoly


@dataclass
class Verdict:
    name: str
    status: str
    detail: str = ""
    values: dict = field(default_factory=dict)


@dataclass(frozen=True)
class BoundRule:
    kind: str  # smooth | nodal | k | explicit
    value: int | None = None

    @property
    def label(self) -> str:
        if self.kind == "k":
            return f"k:{self.value}"
        if self.kind == "explicit":
            return f"explicit:{self.value}"
        return self.kind


@dataclass(frozen=True)
class LeadingForm:
    factors: tuple[tuple[HomogeneousForm, int], ...]
    form: HomogeneousForm
    complete: bool

    @property
    def n(self) -> int:
        return sum(mult for _, mult in self.factors)


@dataclass(frozen=True)
class SearchConfig:
    bound_rule: BoundRule
    max_degree: int | None = None
    max_branches: int = 256
    workers: int = 1


@dataclass
class SearchReport:
    certificates: list[Certificate]
    candidates_per_degree: dict[int, int]
    complete: bool
    max_degree: int
    bound_rule: BoundRule
    integrability: Verdict
    first_integral_families: list[BiPoly] = field(default_factory=list)
    truncated: bool = False


@dataclass(frozen=True)
class SingularLocation:
    """Where a singular point sits: chart is 'affine', 'infinity-u' ([1:v0:0]) or 'infinity-y' ([0:1:0])."""
    chart: str
    point: PointClass

    @property
    def at_infinity(self) -> bool:
        return self.chart != "affine"


@dataclass
class SingularPoint:
    location: SingularLocation
    multiplicity: int | None = None
    int_number: int | None = None
    nu: int | None = None
    branches: int | None = None
    delta_std: int | None = None
    delta_alt: int | None = None
    certified: bool = False
    note: str = ""

    @property
    def size(self) -> int:
        return self.location.point.size


@dataclass(frozen=True)
class InfinityPoint:
    """A point of the curve on the line at infinity, with its V1/V2/V3 class."""
    kind: str  # V1 | V2 | V3
    multiplicity: int
    coords: tuple[Fraction, Fraction] | None = None
    factor: UniPoly | None = None

    @property
    def class_size(self) -> int:
        return 1 if self.factor is None else self.factor.degree


@dataclass
class InfinityClassification:
    n: int
    points: list[InfinityPoint]
    r: int
    k: int
    s: int
    sum_m: int
    sum_l: int


@dataclass
class GenusReport:
    n: int
    g: int | None
    points: list[SingularPoint]
    sum_branches: int | None
    shear: int
    uncertified_points: list[SingularPoint] = field(default_factory=list)
    m: int | None = None
    genus_rhs: int | None = None
    genus_bound: Verdict | None = None


@dataclass
class RamificationReport:
    n: int
    g: int
    deg_R1: int
    deg_R2: int
    infinity_branching: Verdict
    finite_branching: Verdict | None = None


@dataclass
class AnalysisConfig:
    bound_rule: str = "smooth"
    max_degree: int | None = None
    shear_seed: int = 1
    branch_depth_cap: int = 32
    max_certified_class_degree: int = 2
    max_branches: int = 256
    workers: int = 1


@dataclass
class SystemFile:
    path: Path
    P: BiPoly | None
    Q: BiPoly | None
    curves: list[BiPoly]
    curve_texts: list[str]
    max_degree: int | None = None
    bound_rule: str | None = None
    shear_seed: int | None = None
