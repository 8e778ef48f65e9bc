"""Case systems forcing a constant product angle, and the example gallery.

For each curvature pair with kappa1 != kappa2, constancy of the low-order
derivatives of det Q at l = 0 yields three polynomial relations among the
angle value C and the invariants (rho, H12, H13).  Eliminating the invariants
leaves a cubic that the angle value must satisfy, so C can take only finitely
many values.  This module evaluates those systems both ways, solves the
cubics robustly, and builds the classified hypersurface families for
numerical verification.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .ambient import ProductPoint, ProductVector
from .hypersurface import Immersion
from .jacobi import (
    CaseParams,
    FocalPointError,
    detq_derivative_formula,
    frame_shape_at,
    parallel_mean_curvature,
)
from .spaceform import GeometryError, ModelPoint, ModelVector, zero_vector


class CaseId(enum.Enum):
    """The three mixed-curvature products."""

    S2xH2 = "s2h2"
    S2xR2 = "s2r2"
    H2xR2 = "h2r2"

    @property
    def kappa1(self) -> int:
        return {"s2h2": 1, "s2r2": 1, "h2r2": -1}[self.value]

    @property
    def kappa2(self) -> int:
        return {"s2h2": -1, "s2r2": 0, "h2r2": 0}[self.value]

    @classmethod
    def from_tag(cls, tag: str) -> "CaseId":
        for case in cls:
            if case.value == tag.lower():
                return case
        raise GeometryError(f"unknown case tag {tag!r}; expected one of s2h2, s2r2, h2r2")

    @classmethod
    def from_kappas(cls, kappa1: int, kappa2: int) -> "CaseId":
        for case in cls:
            if (case.kappa1, case.kappa2) == (kappa1, kappa2):
                return case
        raise GeometryError(f"no mixed case for curvature pair ({kappa1}, {kappa2})")


@dataclass(frozen=True)
class AlphaRecord:
    """Values of the constant derivative combinations for one case."""

    alpha1: float
    alpha2: float
    alpha3: float
    alpha4: Optional[float] = None


def case_alphas(case: CaseId, C, rho, H12, H13) -> AlphaRecord:
    """Evaluate the three (or four) constant combinations of a case.

    These are the closed forms of the derivative orders 2, 4, 6 specialized
    to the case's curvature pair; the sphere-times-hyperbolic case needs the
    order-10 expression as a fourth value.
    """
    c = C
    if case is CaseId.S2xH2:
        a1 = rho + c
        a2 = -1 - 2 * c * c + (4 - 4 * c) * H12 - (4 + 4 * c) * H13 - 2 * c * rho
        a3 = (
            c
            + 4 * c**3
            + (-4 - 12 * c + 16 * c * c) * H12
            + (-4 + 12 * c + 16 * c * c) * H13
            + (4 * c * c - 1) * rho
        )
        a4 = detq_derivative_formula(10, CaseParams(1, -1, c), rho=rho, H12=H12, H13=H13)
        return AlphaRecord(a1, a2, a3, a4)
    if case is CaseId.S2xR2:
        a1 = (c - 3) / 2 + rho
        a2 = -((1 + c) * (-5 + 3 * c + 4 * rho + 16 * H13)) / 4
        a3 = ((1 + c) ** 2 * (6 * rho + 48 * H13 + 5 * c - 7)) / 8
        return AlphaRecord(a1, a2, a3)
    a1 = (3 - c) / 2 + rho
    a2 = -((1 + c) * (-5 + 3 * c - 4 * rho - 16 * H13)) / 4
    a3 = ((1 + c) ** 2 * (6 * rho + 48 * H13 - 5 * c + 7)) / 8
    return AlphaRecord(a1, a2, a3)


@dataclass(frozen=True)
class SolvedInvariants:
    rho: float
    H13: float
    H12: Optional[float] = None


def invariants_from_alphas(case: CaseId, ar: AlphaRecord, C) -> SolvedInvariants:
    """Solve the case system for the invariants at a given angle value.

    Inverts the relations of :func:`case_alphas`; the sphere-times-hyperbolic
    case recovers all of (rho, H12, H13), the flat-factor cases (rho, H13).
    """
    c = C
    a1, a2, a3 = ar.alpha1, ar.alpha2, ar.alpha3
    if case is CaseId.S2xH2:
        _require_nonzero(1 - c, "1-C")
        _require_nonzero(1 + c, "1+C")
        rho = a1 - c
        h12 = -(4 * a1 * c * c - (2 * a1 - 4 * a2 - 2) * c + a1 - a2 + a3 - 1) / (8 * (1 - c))
        h13 = -(4 * a1 * c * c + (2 * a1 + 4 * a2 + 2) * c + a1 + a2 + a3 + 1) / (8 * (1 + c))
        return SolvedInvariants(rho=rho, H13=h13, H12=h12)
    if case is CaseId.S2xR2:
        _require_nonzero(1 + c, "1+C")
        rho = a1 + (3 - c) / 2
        h13 = -((1 + c) ** 2 + 4 * a1 * (1 + c) + 4 * a2) / (16 * (1 + c))
        return SolvedInvariants(rho=rho, H13=h13)
    _require_nonzero(1 + c, "1+C")
    rho = a1 + (c - 3) / 2
    h13 = ((1 + c) ** 2 - 4 * a1 * (1 + c) + 4 * a2) / (16 * (1 + c))
    return SolvedInvariants(rho=rho, H13=h13)


def _require_nonzero(value, label: str) -> None:
    if abs(value) <= 1e-8:
        raise GeometryError(f"degenerate denominator: {label} vanishes (value {float(value)!r})")


@dataclass(frozen=True)
class ConstancyPolynomial:
    """Cubic that the angle value must satisfy, in the stated variable."""

    coefficients: tuple  # ascending, length 4
    variable: str  # "C" or "1+C"

    def evaluate_at_angle(self, c):
        x = c if self.variable == "C" else 1 + c
        acc = 0
        for coeff in reversed(self.coefficients):
            acc = acc * x + coeff
        return acc

    def roots_in_angle(self) -> list["PolyRoot"]:
        shift = 0.0 if self.variable == "C" else -1.0
        lo, hi = (-1.0, 1.0) if self.variable == "C" else (0.0, 2.0)
        roots = solve_polynomial(self.coefficients, lo=lo, hi=hi)
        return [
            PolyRoot(value=r.value + shift, multiplicity=r.multiplicity, in_range=r.in_range)
            for r in roots
        ]


def constancy_polynomial(case: CaseId, ar: AlphaRecord) -> ConstancyPolynomial:
    """The printed cubic annihilating the angle value, per case.

    Sphere-times-hyperbolic: 16 a2 C^3 + (16 a1 + 12 a3) C^2 + (4 a2 + 4) C
    - a1 - 2 a3 - a4 in the variable C (the C and C^3 coefficients cannot
    both vanish).  The flat-factor cases are monic cubics in 1 + C.
    """
    a1, a2, a3 = ar.alpha1, ar.alpha2, ar.alpha3
    if case is CaseId.S2xH2:
        if ar.alpha4 is None:
            raise GeometryError("the sphere-times-hyperbolic cubic needs alpha4")
        return ConstancyPolynomial(
            coefficients=(-a1 - 2 * a3 - ar.alpha4, 4 * a2 + 4, 16 * a1 + 12 * a3, 16 * a2),
            variable="C",
        )
    if case is CaseId.S2xR2:
        return ConstancyPolynomial(coefficients=(8 * a3, 12 * a2, 6 * a1, 1), variable="1+C")
    return ConstancyPolynomial(coefficients=(-8 * a3, 12 * a2, -6 * a1, 1), variable="1+C")


# ---------------------------------------------------------------------------
# real roots of the constancy cubics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyRoot:
    value: float
    multiplicity: int
    in_range: bool


def solve_polynomial(coefficients: Sequence[float], lo: float = -1.0, hi: float = 1.0) -> list[PolyRoot]:
    """All real roots of a polynomial of degree at most three.

    Exact-degeneracy cases (multiple roots, dropped leading coefficients) are
    classified through the discriminant; distinct roots are found in closed
    form and Newton-polished on the original polynomial.  Roots are sorted,
    merged at 1e-10 and flagged against [lo, hi].
    """
    coeffs = [float(x) for x in coefficients]
    if len(coeffs) > 4:
        raise GeometryError("only polynomials of degree <= 3 are supported")
    scale = max(abs(x) for x in coeffs) if coeffs else 0.0
    if scale == 0.0:
        raise GeometryError("all coefficients vanish")
    while coeffs and coeffs[-1] == 0.0:
        coeffs.pop()
    degree = len(coeffs) - 1

    if degree == 0:
        raw: list[tuple[float, int]] = []
    elif degree == 1:
        raw = [(-coeffs[0] / coeffs[1], 1)]
    elif degree == 2:
        raw = _quadratic_roots(coeffs)
    else:
        raw = _cubic_roots(coeffs)

    polished = []
    for r, mult in raw:
        if mult == 1:
            r = _newton_polish(coeffs, r)
        polished.append((r, mult))
    polished.sort(key=lambda t: t[0])

    merged: list[tuple[float, int]] = []
    for r, mult in polished:
        if merged and abs(r - merged[-1][0]) <= 1e-10:
            merged[-1] = (merged[-1][0], merged[-1][1] + mult)
        else:
            merged.append((r, mult))
    return [
        PolyRoot(value=r, multiplicity=m, in_range=(lo - 1e-12 <= r <= hi + 1e-12))
        for r, m in merged
    ]


def _poly_eval(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _newton_polish(coeffs: Sequence[float], x: float, iterations: int = 3) -> float:
    deriv = [k * c for k, c in enumerate(coeffs)][1:]
    for _ in range(iterations):
        d = _poly_eval(deriv, x)
        if d == 0.0:
            break
        step = _poly_eval(coeffs, x) / d
        if not math.isfinite(step):
            break
        x -= step
    return x


def _quadratic_roots(coeffs: Sequence[float]) -> list[tuple[float, int]]:
    c0, c1, c2 = coeffs
    scale = max(abs(c0), abs(c1), abs(c2))
    disc = c1 * c1 - 4.0 * c2 * c0
    if abs(disc) <= 1e-13 * scale * scale:
        return [(-c1 / (2.0 * c2), 2)]
    if disc < 0.0:
        return []
    q = -0.5 * (c1 + math.copysign(math.sqrt(disc), c1))
    r1 = q / c2
    r2 = c0 / q if q != 0.0 else -c1 / c2 - r1
    return [(r1, 1), (r2, 1)]


def _cubic_roots(coeffs: Sequence[float]) -> list[tuple[float, int]]:
    d, c, b, a = coeffs
    scale = max(abs(a), abs(b), abs(c), abs(d))
    disc = (
        18.0 * a * b * c * d
        - 4.0 * b**3 * d
        + b * b * c * c
        - 4.0 * a * c**3
        - 27.0 * a * a * d * d
    )
    disc0 = b * b - 3.0 * a * c
    if abs(disc) <= 1e-13 * scale**4:
        if abs(disc0) <= 1e-13 * scale * scale:
            return [(-b / (3.0 * a), 3)]
        double = (9.0 * a * d - b * c) / (2.0 * disc0)
        simple = (4.0 * a * b * c - 9.0 * a * a * d - b**3) / (a * disc0)
        return [(double, 2), (simple, 1)]
    # depressed cubic t^3 + p t + q with x = t - b/(3a)
    p = (3.0 * a * c - b * b) / (3.0 * a * a)
    q = (2.0 * b**3 - 9.0 * a * b * c + 27.0 * a * a * d) / (27.0 * a**3)
    shift = -b / (3.0 * a)
    if disc > 0.0:
        # three distinct real roots: trigonometric form
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = min(1.0, max(-1.0, 3.0 * q / (p * m)))
        theta = math.acos(arg)
        return [(shift + m * math.cos((theta - 2.0 * math.pi * k) / 3.0), 1) for k in range(3)]
    # one real root: Cardano with a cancellation-free branch
    half_q = -0.5 * q
    root = math.sqrt(half_q * half_q + (p / 3.0) ** 3)
    u = half_q + math.copysign(root, half_q) if half_q != 0.0 else root
    u = math.copysign(abs(u) ** (1.0 / 3.0), u)
    t = u + (-p / 3.0) / u if u != 0.0 else 0.0
    return [(shift + t, 1)]


# ---------------------------------------------------------------------------
# classified example hypersurfaces
# ---------------------------------------------------------------------------

FAMILY_CURVE_X_FACTOR = "curve_x_factor"
FAMILY_FACTOR_X_CURVE = "factor_x_curve"
FAMILY_PSI = "psi"


@dataclass(frozen=True)
class ExampleSpec:
    """Parameters of one classified example hypersurface.

    Families: a constant-curvature curve times a full factor (either order),
    or the ruled hypersurface over a horocycle in the hyperbolic-times-flat
    product, built from a strip constant 0 < c < 1 and an orthonormal flat
    pair (V0, W0).
    """

    family: str
    kappa1: int = -1
    kappa2: int = 0
    k: float = 1.0
    c: float = 0.25
    V0: tuple[float, float] = (1.0, 0.0)
    W0: tuple[float, float] = (0.0, 1.0)
    X0: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.family not in (FAMILY_CURVE_X_FACTOR, FAMILY_FACTOR_X_CURVE, FAMILY_PSI):
            raise GeometryError(f"unknown example family {self.family!r}")
        if self.family == FAMILY_PSI:
            if (self.kappa1, self.kappa2) != (-1, 0):
                raise GeometryError("the ruled example lives in the hyperbolic-times-flat product")
            if not 0.0 < self.c < 1.0:
                raise GeometryError(f"the strip constant must satisfy 0 < c < 1, got {self.c}")
            v0 = np.asarray(self.V0, dtype=float)
            w0 = np.asarray(self.W0, dtype=float)
            if (
                abs(v0 @ v0 - 1.0) > 1e-12
                or abs(w0 @ w0 - 1.0) > 1e-12
                or abs(v0 @ w0) > 1e-12
            ):
                raise GeometryError("V0 and W0 must be orthonormal in the flat factor")
        else:
            if self.kappa1 == self.kappa2:
                raise GeometryError("example families require distinct curvatures")
            if self.k < 0.0:
                raise GeometryError("curve curvature is parametrized by k >= 0")

    def label(self) -> str:
        if self.family == FAMILY_PSI:
            return f"psi(c={self.c:g})"
        side = "first" if self.family == FAMILY_CURVE_X_FACTOR else "second"
        return f"curve(k={self.k:g},{side})x({self.kappa1},{self.kappa2})"


def constant_curvature_curve(kappa: int, k: float) -> tuple[Callable, Callable]:
    """Unit-speed curve of constant geodesic curvature k and its derivative.

    Flat plane: lines and circles of radius 1/k.  Sphere: great and small
    circles.  Hyperbolic plane: geodesics (k = 0), equidistants (k < 1), the
    horocycle (k = 1) and circles (k > 1), all on the hyperboloid.
    """
    if k < 0.0:
        raise GeometryError("curve curvature must be nonnegative")
    if kappa == 0:
        if k == 0.0:
            return (lambda t: np.array([t, 0.0]), lambda t: np.array([1.0, 0.0]))
        radius = 1.0 / k
        return (
            lambda t: np.array([radius * math.cos(k * t), radius * math.sin(k * t)]),
            lambda t: np.array([-math.sin(k * t), math.cos(k * t)]),
        )
    if kappa == 1:
        rho = 1.0 / math.sqrt(1.0 + k * k)
        z0 = k * rho
        return (
            lambda t: np.array([rho * math.cos(t / rho), rho * math.sin(t / rho), z0]),
            lambda t: np.array([-math.sin(t / rho), math.cos(t / rho), 0.0]),
        )
    if k == 0.0:
        return (
            lambda t: np.array([math.cosh(t), math.sinh(t), 0.0]),
            lambda t: np.array([math.sinh(t), math.cosh(t), 0.0]),
        )
    if k < 1.0:
        d = math.atanh(k)
        w = 1.0 / math.cosh(d)
        return (
            lambda t: np.array(
                [math.cosh(d) * math.cosh(w * t), math.cosh(d) * math.sinh(w * t), math.sinh(d)]
            ),
            lambda t: np.array([math.sinh(w * t), math.cosh(w * t), 0.0]),
        )
    if k == 1.0:
        return (
            lambda t: np.array([(2.0 + t * t) / 2.0, t, t * t / 2.0]),
            lambda t: np.array([t, 1.0, t]),
        )
    rho = math.atanh(1.0 / k)
    w = 1.0 / math.sinh(rho)
    return (
        lambda t: np.array(
            [math.cosh(rho), math.sinh(rho) * math.cos(w * t), math.sinh(rho) * math.sin(w * t)]
        ),
        lambda t: np.array([0.0, -math.sin(w * t), math.cos(w * t)]),
    )


def _factor_chart(kappa: int) -> tuple[Callable, Callable, Callable]:
    """Chart of a full factor in two parameters, with both partials."""
    if kappa == 0:
        return (
            lambda a, b: np.array([a, b]),
            lambda a, b: np.array([1.0, 0.0]),
            lambda a, b: np.array([0.0, 1.0]),
        )
    if kappa == 1:
        return (
            lambda a, b: np.array([math.cos(a) * math.cos(b), math.cos(a) * math.sin(b), math.sin(a)]),
            lambda a, b: np.array([-math.sin(a) * math.cos(b), -math.sin(a) * math.sin(b), math.cos(a)]),
            lambda a, b: np.array([-math.cos(a) * math.sin(b), math.cos(a) * math.cos(b), 0.0]),
        )
    return (
        lambda a, b: np.array([math.sqrt(1.0 + a * a + b * b), a, b]),
        lambda a, b: np.array([a / math.sqrt(1.0 + a * a + b * b), 1.0, 0.0]),
        lambda a, b: np.array([b / math.sqrt(1.0 + a * a + b * b), 0.0, 1.0]),
    )


def build_example(spec: ExampleSpec) -> Immersion:
    """Immersion of a classified example, with its analytic jacobian."""
    if spec.family == FAMILY_PSI:
        return _build_psi(spec)
    if spec.family == FAMILY_CURVE_X_FACTOR:
        curve_kappa, factor_kappa = spec.kappa1, spec.kappa2
    else:
        curve_kappa, factor_kappa = spec.kappa2, spec.kappa1
    gamma, dgamma = constant_curvature_curve(curve_kappa, spec.k)
    chart2, d2a, d2b = _factor_chart(factor_kappa)

    curve_first = spec.family == FAMILY_CURVE_X_FACTOR

    def chart(u: np.ndarray) -> ProductPoint:
        pc = ModelPoint(curve_kappa, gamma(u[0]))
        pf = ModelPoint(factor_kappa, chart2(u[1], u[2]))
        return ProductPoint(pc, pf) if curve_first else ProductPoint(pf, pc)

    def jacobian(u: np.ndarray):
        pc = ModelPoint(curve_kappa, gamma(u[0]))
        pf = ModelPoint(factor_kappa, chart2(u[1], u[2]))
        tc = ModelVector(pc, dgamma(u[0]))
        ta = ModelVector(pf, d2a(u[1], u[2]))
        tb = ModelVector(pf, d2b(u[1], u[2]))
        zc = zero_vector(pc)
        zf = zero_vector(pf)
        if curve_first:
            return (
                ProductVector(tc, zf),
                ProductVector(zc, ta),
                ProductVector(zc, tb),
            )
        return (
            ProductVector(zf, tc),
            ProductVector(ta, zc),
            ProductVector(tb, zc),
        )

    return Immersion(
        kappa1=spec.kappa1,
        kappa2=spec.kappa2,
        chart=chart,
        jacobian=jacobian,
        name=spec.label(),
    )


def horocycle_with_normal(r: float) -> tuple[np.ndarray, np.ndarray]:
    """The reference horocycle ((2+r^2)/2, r, r^2/2) and its unit normal."""
    return (
        np.array([(2.0 + r * r) / 2.0, r, r * r / 2.0]),
        np.array([r * r / 2.0, r, (-2.0 + r * r) / 2.0]),
    )


def _build_psi(spec: ExampleSpec) -> Immersion:
    c = spec.c
    sc = math.sqrt(c)
    s1c = math.sqrt(1.0 - c)
    v0 = np.asarray(spec.V0, dtype=float)
    w0 = np.asarray(spec.W0, dtype=float)
    x0 = np.asarray(spec.X0, dtype=float)

    def chart(u: np.ndarray) -> ProductPoint:
        t, r, s = u
        g, n = horocycle_with_normal(r)
        p = math.cosh(t * sc) * g + math.sinh(t * sc) * n
        q = x0 + s * v0 + t * s1c * w0
        return ProductPoint(ModelPoint(-1, p), ModelPoint(0, q))

    def jacobian(u: np.ndarray):
        t, r, s = u
        g, n = horocycle_with_normal(r)
        ch, sh = math.cosh(t * sc), math.sinh(t * sc)
        p = ModelPoint(-1, ch * g + sh * n)
        q = ModelPoint(0, x0 + s * v0 + t * s1c * w0)
        # both the horocycle and its normal differentiate to (r, 1, r)
        dgdr = np.array([r, 1.0, r])
        dt = ProductVector(
            ModelVector(p, sc * (sh * g + ch * n)),
            ModelVector(q, s1c * w0),
        )
        dr = ProductVector(
            ModelVector(p, (ch + sh) * dgdr),
            zero_vector(q),
        )
        ds = ProductVector(zero_vector(p), ModelVector(q, v0))
        return dt, dr, ds

    return Immersion(
        kappa1=-1,
        kappa2=0,
        chart=chart,
        jacobian=jacobian,
        name=spec.label(),
    )


def build_perturbed_psi(c: float = 0.25, amplitude: float = 0.1) -> Immersion:
    """Negative control: the ruled example with c replaced by c(1 + a sin r).

    Still lands on the product manifold but is not isoparametric; its angle
    function visibly varies over any grid.
    """

    def chart(u: np.ndarray) -> ProductPoint:
        t, r, s = u
        cr = c * (1.0 + amplitude * math.sin(r))
        g, n = horocycle_with_normal(r)
        p = math.cosh(t * math.sqrt(cr)) * g + math.sinh(t * math.sqrt(cr)) * n
        q = s * np.array([1.0, 0.0]) + t * math.sqrt(1.0 - cr) * np.array([0.0, 1.0])
        return ProductPoint(ModelPoint(-1, p), ModelPoint(0, q))

    return Immersion(kappa1=-1, kappa2=0, chart=chart, name=f"psi-perturbed(c={c:g})")


def gallery_specs(curvatures: Sequence[float] = (0.0, 0.5, 1.0, 2.0)) -> list[ExampleSpec]:
    """The classified examples over all mixed curvature pairs."""
    specs = []
    for case in CaseId:
        for k in curvatures:
            specs.append(
                ExampleSpec(
                    family=FAMILY_CURVE_X_FACTOR, kappa1=case.kappa1, kappa2=case.kappa2, k=k
                )
            )
            specs.append(
                ExampleSpec(
                    family=FAMILY_FACTOR_X_CURVE, kappa1=case.kappa1, kappa2=case.kappa2, k=k
                )
            )
    specs.append(ExampleSpec(family=FAMILY_PSI))
    return specs


# ---------------------------------------------------------------------------
# the isoparametric verification report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StatSummary:
    """Constancy statistics of one scalar field over the sample grid."""

    mean: float
    max_dev: float  # largest |value - mean|
    spread: float  # max - min
    std: float

    @classmethod
    def of(cls, values: Sequence[float]) -> "StatSummary":
        arr = np.asarray(values, dtype=float)
        mean = float(np.mean(arr))
        return cls(
            mean=mean,
            max_dev=float(np.max(np.abs(arr - mean))),
            spread=float(np.max(arr) - np.min(arr)),
            std=float(np.std(arr)),
        )


@dataclass(frozen=True)
class IsoparametricReport:
    name: str
    grid_points: int
    l_samples: tuple[float, ...]
    tol: float
    angle: StatSummary
    principal: tuple[StatSummary, StatSummary, StatSummary]
    mean_curvature: dict[float, StatSummary]
    focal_events: tuple[str, ...]
    angle_pass: bool
    principal_pass: bool
    mean_curvature_pass: bool

    @property
    def passed(self) -> bool:
        return self.angle_pass and self.principal_pass and self.mean_curvature_pass


def isoparametric_report(
    imm: Immersion,
    grid: Optional[Sequence[np.ndarray]] = None,
    l_samples: Sequence[float] = (-0.2, -0.1, 0.1, 0.2),
    tol: float = 1e-5,
) -> IsoparametricReport:
    """Constancy report for the angle, principal curvatures and flow H(l).

    The parallel mean curvature H(l) is evaluated through the det Q closed
    form from the shape data at each grid point; focal points are recorded
    and the run continues.  Each statistic passes when its largest deviation
    over the grid stays below ``tol``.
    """
    if grid is None:
        grid = imm.grid(5)
    l_samples = tuple(float(l) for l in l_samples)

    angles: list[float] = []
    principals: list[np.ndarray] = []
    h_of_l: dict[float, list[float]] = {l: [] for l in l_samples}
    focal: list[str] = []

    for u in grid:
        fs, cp, rec = frame_shape_at(imm, u)
        angles.append(rec.C)
        principals.append(rec.principal_curvatures())
        for l in l_samples:
            try:
                h_of_l[l].append(parallel_mean_curvature(fs, cp, l))
            except FocalPointError:
                focal.append(f"focal point at u={np.asarray(u).tolist()}, l={l:g}")

    principal_stats = tuple(
        StatSummary.of([pc[i] for pc in principals]) for i in range(3)
    )
    angle_stats = StatSummary.of(angles)
    h_stats = {l: StatSummary.of(vals) for l, vals in h_of_l.items() if vals}

    return IsoparametricReport(
        name=imm.name,
        grid_points=len(list(grid)),
        l_samples=l_samples,
        tol=tol,
        angle=angle_stats,
        principal=principal_stats,
        mean_curvature=h_stats,
        focal_events=tuple(focal),
        angle_pass=angle_stats.max_dev <= tol,
        principal_pass=all(s.max_dev <= tol for s in principal_stats),
        mean_curvature_pass=all(s.max_dev <= tol for s in h_stats.values()),
    )
