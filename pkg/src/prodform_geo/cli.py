"""Batch verification harness with deterministic JSON/CSV reports.

Commands
--------
identities   product-structure and curvature identities on random tangents
detq         series oracle vs closed-form derivatives, det Q equivalence
cases        case-system round trips and constancy-cubic annihilation
gallery      classified examples vs their expected invariants
flow         dump H(l), C and principal curvatures of one example along l

Exit status: 0 all checks pass, 1 any check fails, 2 usage or config error.
Reports are written atomically and are byte-identical for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .ambient import (
    ProductVector,
    complex_structures,
    curvature_tensor,
    product_metric,
    product_structure,
    random_product_point,
    random_product_tangent,
)
from .classify import (
    CaseId,
    ExampleSpec,
    FAMILY_CURVE_X_FACTOR,
    FAMILY_FACTOR_X_CURVE,
    FAMILY_PSI,
    build_example,
    build_perturbed_psi,
    case_alphas,
    constancy_polynomial,
    gallery_specs,
    invariants_from_alphas,
    isoparametric_report,
)
from .hypersurface import ricci, shape_operator
from .jacobi import (
    FocalPointError,
    FrameShape,
    detq_closed_form,
    detq_derivative_formula,
    detq_taylor,
    frame_shape_at,
    parallel_mean_curvature,
    parallel_shape,
    q_matrix,
    q_matrix_prime,
)
from .spaceform import GeometryError, random_tangent, zero_vector

CASES = ("s2h2", "s2r2", "h2r2")

DEFAULT_TOLS = {
    "identities": 1e-12,
    "detq": 1e-10,
    "detq_matrix": 1e-12,
    "cases": 1e-10,
    "gallery_angle": 1e-8,
    "gallery_curvature": 1e-6,
    "gallery_ricci": 1e-8,
}


class ConfigError(ValueError):
    """Invalid run configuration."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    case: Optional[str] = None
    samples: int = 1000
    seed: int = 0
    tol: Optional[float] = None
    grid: int = 5
    l_values: tuple[float, ...] = (-0.2, -0.1, 0.1, 0.2)
    out: Optional[str] = None
    fmt: str = "json"
    family: Optional[str] = None
    c: float = 0.25
    k: float = 1.0

    def validate(self) -> None:
        if self.command not in ("identities", "detq", "cases", "gallery", "flow"):
            raise ConfigError(f"unknown command {self.command!r}")
        if self.case is not None and self.case not in CASES:
            raise ConfigError(f"--case must be one of {CASES}, got {self.case!r}")
        if self.samples < 1:
            raise ConfigError("--samples must be at least 1")
        if self.tol is not None and self.tol <= 0:
            raise ConfigError("--tol must be positive")
        if self.grid < 2:
            raise ConfigError("--grid must be at least 2")
        if not self.l_values:
            raise ConfigError("--l needs at least one value")
        if self.fmt not in ("json", "csv"):
            raise ConfigError(f"--format must be json or csv, got {self.fmt!r}")
        if self.family is not None and self.family not in (
            FAMILY_PSI,
            FAMILY_CURVE_X_FACTOR,
            FAMILY_FACTOR_X_CURVE,
        ):
            raise ConfigError(f"unknown family {self.family!r}")
        if not 0.0 < self.c < 1.0:
            raise ConfigError("--c must lie strictly between 0 and 1")

    def selected_cases(self) -> list[CaseId]:
        if self.case is None:
            return [CaseId.from_tag(tag) for tag in CASES]
        return [CaseId.from_tag(self.case)]

    def tolerance(self, key: str) -> float:
        return self.tol if self.tol is not None else DEFAULT_TOLS[key]


@dataclass
class CheckResult:
    name: str
    anchor: str
    samples: int
    max_abs_err: float
    max_rel_err: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "samples": self.samples,
            "max_abs_err": self.max_abs_err,
            "max_rel_err": self.max_rel_err,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    seed: int
    config: dict
    checks: list[CheckResult] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    def add(self, check: CheckResult) -> None:
        self.checks.append(check)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def body(self) -> dict:
        return {
            "version": __version__,
            "seed": self.seed,
            "config": self.config,
            "checks": [c.as_dict() for c in self.checks],
            "rows": self.rows,
            "summary": {
                "total": len(self.checks),
                "passed": sum(c.passed for c in self.checks),
                "failed": sum(not c.passed for c in self.checks),
            },
        }


class ErrorTracker:
    """Running maxima of absolute and scale-relative errors."""

    def __init__(self):
        self.max_abs = 0.0
        self.max_rel = 0.0

    def record(self, got: float, want: float) -> None:
        err = abs(got - want)
        self.max_abs = max(self.max_abs, err)
        self.max_rel = max(self.max_rel, err / max(1.0, abs(got), abs(want)))

    def record_abs(self, err: float, scale: float = 1.0) -> None:
        err = abs(err)
        self.max_abs = max(self.max_abs, err)
        self.max_rel = max(self.max_rel, err / max(1.0, abs(scale)))

    def check(self, name: str, anchor: str, samples: int, tol: float, use_rel: bool = True) -> CheckResult:
        err = self.max_rel if use_rel else self.max_abs
        return CheckResult(
            name=name,
            anchor=anchor,
            samples=samples,
            max_abs_err=self.max_abs,
            max_rel_err=self.max_rel,
            passed=bool(err <= tol),
        )


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def run_identities(cfg: RunConfig, report: VerificationReport) -> None:
    tol = cfg.tolerance("identities")
    for case in cfg.selected_cases():
        rng = np.random.default_rng(cfg.seed)
        trackers = {
            name: ErrorTracker()
            for name in (
                "p_involution",
                "p_symmetric",
                "p_isometry",
                "p_eq_minus_j1j2",
                "p_eq_minus_j2j1",
                "j1_squared",
                "j2_squared",
                "sectional_first",
                "sectional_second",
                "sectional_mixed",
            )
        }
        for _ in range(cfg.samples):
            p = random_product_point(case.kappa1, case.kappa2, rng)
            x = random_product_tangent(p, rng)
            y = random_product_tangent(p, rng)

            ppx = product_structure(product_structure(x))
            trackers["p_involution"].record_abs(
                max(
                    float(np.max(np.abs(ppx.first.coords - x.first.coords))),
                    float(np.max(np.abs(ppx.second.coords - x.second.coords))),
                )
            )
            trackers["p_symmetric"].record(
                product_metric(product_structure(x), y),
                product_metric(product_structure(y), x),
            )
            trackers["p_isometry"].record(
                product_metric(product_structure(x), product_structure(y)),
                product_metric(x, y),
            )
            j1x, j2x = complex_structures(x)
            mj1j2 = -complex_structures(j2x)[0]
            mj2j1 = -complex_structures(j1x)[1]
            px = product_structure(x)
            trackers["p_eq_minus_j1j2"].record_abs(_vector_gap(mj1j2, px))
            trackers["p_eq_minus_j2j1"].record_abs(_vector_gap(mj2j1, px))
            trackers["j1_squared"].record_abs(_vector_gap(complex_structures(j1x)[0], -x))
            trackers["j2_squared"].record_abs(_vector_gap(complex_structures(j2x)[1], -x))

            a = _unit_first_factor(p, rng)
            ja = complex_structures(a)[0]
            trackers["sectional_first"].record(curvature_tensor(a, ja, ja, a), float(case.kappa1))
            b = _unit_second_factor(p, rng)
            jb = complex_structures(b)[0]
            trackers["sectional_second"].record(curvature_tensor(b, jb, jb, b), float(case.kappa2))
            trackers["sectional_mixed"].record(curvature_tensor(a, b, b, a), 0.0)

        for name, tracker in trackers.items():
            report.add(
                tracker.check(
                    f"{case.value}.{name}",
                    anchor=f"ambient.{name}",
                    samples=cfg.samples,
                    tol=tol,
                )
            )


def _vector_gap(x: ProductVector, y: ProductVector) -> float:
    return max(
        float(np.max(np.abs(x.first.coords - y.first.coords))),
        float(np.max(np.abs(x.second.coords - y.second.coords))),
    )


def _unit_first_factor(p, rng) -> ProductVector:
    v = random_tangent(p.first, rng)
    v = v.scale(1.0 / v.norm())
    return ProductVector(v, zero_vector(p.second))


def _unit_second_factor(p, rng) -> ProductVector:
    w = random_tangent(p.second, rng)
    w = w.scale(1.0 / w.norm())
    return ProductVector(zero_vector(p.first), w)


def random_frame_shape(case: CaseId, rng: np.random.Generator, exact: bool) -> FrameShape:
    """Random symmetric shape matrix with entries in [-2, 2] and |C| < 0.95.

    Exact mode draws from a fine rational grid so the series oracle runs in
    exact arithmetic.
    """
    if exact:
        entries = [Fraction(int(n), 1000) for n in rng.integers(-2000, 2001, size=6)]
        c = Fraction(int(rng.integers(-949, 950)), 1000)
    else:
        entries = list(rng.uniform(-2.0, 2.0, size=6))
        c = float(rng.uniform(-0.95, 0.95))
    a11, a22, a33, a12, a13, a23 = entries
    a = ((a11, a12, a13), (a12, a22, a23), (a13, a23, a33))
    return FrameShape(A=a, kappa1=case.kappa1, kappa2=case.kappa2, C=c)


def run_detq(cfg: RunConfig, report: VerificationReport) -> None:
    tol = cfg.tolerance("detq")
    tol_matrix = cfg.tol if cfg.tol is not None else DEFAULT_TOLS["detq_matrix"]
    for case in cfg.selected_cases():
        orders = (1, 2, 4, 6, 10) if case is CaseId.S2xH2 else (1, 2, 4, 6)
        rng = np.random.default_rng(cfg.seed)
        derivative_trackers = {k: ErrorTracker() for k in orders}
        det_tracker = ErrorTracker()
        trace_tracker = ErrorTracker()

        for _ in range(cfg.samples):
            fs = random_frame_shape(case, rng, exact=True)
            cp = fs.case
            series = detq_taylor(fs, cp, order=12)
            for k in orders:
                oracle = series.derivative_at_zero(k)
                formula = detq_derivative_formula(
                    k, cp, H=fs.H, rho=fs.rho, H12=fs.H12, H13=fs.H13
                )
                derivative_trackers[k].record(float(formula), float(oracle))

            fsf = random_frame_shape(case, rng, exact=False)
            cpf = fsf.case
            l = float(rng.uniform(-0.4, 0.4))
            q = q_matrix(fsf, cpf, l)
            det_direct = float(np.linalg.det(q))
            det_closed = detq_closed_form(fsf, cpf, l)
            det_tracker.record_abs(det_direct - det_closed, scale=0.0)
            if abs(det_closed) > 1e-3:
                trace = float(np.trace(parallel_shape(q, q_matrix_prime(fsf, cpf, l))))
                trace_tracker.record(trace, parallel_mean_curvature(fsf, cpf, l))

        for k in orders:
            report.add(
                derivative_trackers[k].check(
                    f"{case.value}.derivative_order_{k}",
                    anchor=f"jacobi.detq.d{k}",
                    samples=cfg.samples,
                    tol=tol,
                )
            )
        report.add(
            det_tracker.check(
                f"{case.value}.detq_matrix_vs_closed_form",
                anchor="jacobi.detq.matrix_equivalence",
                samples=cfg.samples,
                tol=tol_matrix,
                use_rel=False,
            )
        )
        report.add(
            trace_tracker.check(
                f"{case.value}.trace_vs_log_derivative",
                anchor="jacobi.detq.jacobi_formula",
                samples=cfg.samples,
                tol=tol,
            )
        )


def run_cases(cfg: RunConfig, report: VerificationReport) -> None:
    tol = cfg.tolerance("cases")
    for case in cfg.selected_cases():
        rng = np.random.default_rng(cfg.seed)
        annihilation = ErrorTracker()
        roundtrip = ErrorTracker()
        nonvanishing = ErrorTracker()
        for _ in range(cfg.samples):
            c0 = float(rng.uniform(-0.9, 0.9))
            rho = float(rng.uniform(-3.0, 3.0))
            h13 = float(rng.uniform(-3.0, 3.0))
            h12 = float(rng.uniform(-3.0, 3.0)) if case is CaseId.S2xH2 else 0.0
            ar = case_alphas(case, c0, rho, h12, h13)
            poly = constancy_polynomial(case, ar)
            coeff_scale = max(abs(x) for x in poly.coefficients)
            annihilation.record_abs(
                poly.evaluate_at_angle(c0) / coeff_scale, scale=0.0
            )
            if coeff_scale == 0.0:
                nonvanishing.record_abs(1.0)
            solved = invariants_from_alphas(case, ar, c0)
            roundtrip.record(solved.rho, rho)
            roundtrip.record(solved.H13, h13)
            if case is CaseId.S2xH2:
                roundtrip.record(solved.H12, h12)
        report.add(
            annihilation.check(
                f"{case.value}.cubic_annihilates_angle",
                anchor=f"classify.{case.value}.constancy_cubic",
                samples=cfg.samples,
                tol=1e-8,
                use_rel=False,
            )
        )
        report.add(
            roundtrip.check(
                f"{case.value}.invariants_round_trip",
                anchor=f"classify.{case.value}.solved_system",
                samples=cfg.samples,
                tol=tol,
            )
        )
        report.add(
            nonvanishing.check(
                f"{case.value}.coefficients_nonvanishing",
                anchor=f"classify.{case.value}.coefficient_guard",
                samples=cfg.samples,
                tol=tol,
                use_rel=False,
            )
        )


def _gallery_selection(cfg: RunConfig) -> list[ExampleSpec]:
    specs = gallery_specs()
    if cfg.family is not None:
        specs = [s for s in specs if s.family == cfg.family]
        if cfg.family == FAMILY_PSI:
            specs = [replace(s, c=cfg.c) for s in specs]
    if not specs:
        raise ConfigError("gallery selection is empty")
    return specs


def run_gallery(cfg: RunConfig, report: VerificationReport) -> None:
    tol_angle = cfg.tol if cfg.tol is not None else DEFAULT_TOLS["gallery_angle"]
    tol_curv = cfg.tol if cfg.tol is not None else DEFAULT_TOLS["gallery_curvature"]
    tol_ricci = cfg.tol if cfg.tol is not None else DEFAULT_TOLS["gallery_ricci"]

    for spec in _gallery_selection(cfg):
        imm = build_example(spec)
        grid = imm.grid(cfg.grid)
        rep = isoparametric_report(imm, grid=grid, l_samples=cfg.l_values, tol=tol_curv)

        angle_tracker = ErrorTracker()
        angle_tracker.record_abs(rep.angle.max_dev, scale=0.0)
        if spec.family == FAMILY_PSI:
            angle_tracker.record(rep.angle.mean, 1.0 - 2.0 * spec.c)
        else:
            expected = 1.0 if spec.family == FAMILY_CURVE_X_FACTOR else -1.0
            angle_tracker.record(rep.angle.mean, expected)
        report.add(
            angle_tracker.check(
                f"{imm.name}.angle_constancy",
                anchor="classify.gallery.angle",
                samples=rep.grid_points,
                tol=tol_angle,
                use_rel=False,
            )
        )

        curv_tracker = ErrorTracker()
        for stat in rep.principal:
            curv_tracker.record_abs(stat.max_dev, scale=0.0)
        for stats in rep.mean_curvature.values():
            curv_tracker.record_abs(stats.max_dev, scale=0.0)
        if spec.family != FAMILY_PSI:
            got = sorted(s.mean for s in rep.principal)
            want = sorted((spec.k, 0.0, 0.0))
            gap = min(
                max(abs(g - w) for g, w in zip(got, sorted(want))),
                max(abs(g - w) for g, w in zip(got, sorted(-x for x in want))),
            )
            curv_tracker.record_abs(gap, scale=0.0)
        report.add(
            curv_tracker.check(
                f"{imm.name}.curvature_constancy",
                anchor="classify.gallery.principal_curvatures",
                samples=rep.grid_points,
                tol=tol_curv,
                use_rel=False,
            )
        )

        ricci_tracker = ErrorTracker()
        for u in grid:
            rec = shape_operator(imm, u)
            trace = sum(ricci(e, rec) for e in rec.basis)
            ricci_tracker.record(trace, rec.rho)
        report.add(
            ricci_tracker.check(
                f"{imm.name}.ricci_trace_vs_scalar",
                anchor="hypersurface.ricci.trace",
                samples=rep.grid_points,
                tol=tol_ricci,
                use_rel=False,
            )
        )

    if cfg.family in (None, FAMILY_PSI):
        control = isoparametric_report(
            build_perturbed_psi(cfg.c), l_samples=cfg.l_values, tol=1e-3
        )
        report.add(
            CheckResult(
                name="psi_negative_control_fails",
                anchor="classify.gallery.negative_control",
                samples=control.grid_points,
                max_abs_err=control.angle.max_dev,
                max_rel_err=control.angle.max_dev,
                passed=bool(control.angle.max_dev > 1e-3),
            )
        )


def run_flow(cfg: RunConfig, report: VerificationReport) -> None:
    family = cfg.family or FAMILY_PSI
    case = CaseId.from_tag(cfg.case) if cfg.case else CaseId.H2xR2
    if family == FAMILY_PSI:
        spec = ExampleSpec(family=FAMILY_PSI, c=cfg.c)
    else:
        spec = ExampleSpec(family=family, kappa1=case.kappa1, kappa2=case.kappa2, k=cfg.k)
    imm = build_example(spec)

    focal_events = 0
    for u in imm.grid(cfg.grid):
        fs, cp, rec = frame_shape_at(imm, u)
        pcs = rec.principal_curvatures()
        for l in (0.0,) + tuple(cfg.l_values):
            row = {
                "u1": float(u[0]),
                "u2": float(u[1]),
                "u3": float(u[2]),
                "l": float(l),
                "H": None,
                "C": rec.C,
                "k1": float(pcs[0]),
                "k2": float(pcs[1]),
                "k3": float(pcs[2]),
            }
            try:
                row["H"] = parallel_mean_curvature(fs, cp, l)
            except FocalPointError:
                # recorded as a missing value; the run continues
                focal_events += 1
                row["H"] = None
            report.rows.append(row)
    report.add(
        CheckResult(
            name=f"{imm.name}.flow_dump",
            anchor="cli.flow.dump",
            samples=len(report.rows),
            max_abs_err=float(focal_events),
            max_rel_err=float(focal_events),
            passed=True,
        )
    )


# ---------------------------------------------------------------------------
# report output
# ---------------------------------------------------------------------------


def _atomic_write(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def render_json(report: VerificationReport) -> str:
    return json.dumps(report.body(), indent=2, sort_keys=True) + "\n"


CSV_COLUMNS = ("u1", "u2", "u3", "l", "H", "C", "k1", "k2", "k3")


def render_csv(report: VerificationReport) -> str:
    if report.rows:
        lines = [",".join(CSV_COLUMNS)]
        for row in report.rows:
            lines.append(
                ",".join(
                    "" if row[col] is None else f"{float(row[col]):.17g}"
                    for col in CSV_COLUMNS
                )
            )
    else:
        lines = ["name,samples,max_abs_err,max_rel_err,pass"]
        for check in report.checks:
            lines.append(
                f"{check.name},{check.samples},{check.max_abs_err:.17g},"
                f"{check.max_rel_err:.17g},{int(check.passed)}"
            )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# configuration and entry point
# ---------------------------------------------------------------------------


def _parse_config_file(path: str) -> dict:
    values: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{line_no}: expected 'key = value'")
                key, _, value = line.partition("=")
                values[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prodform-geo",
        description="Verification harness for product space-form hypersurface identities.",
    )
    parser.add_argument("command", choices=["identities", "detq", "cases", "gallery", "flow"])
    parser.add_argument("--config", help="flat key = value config file; flags win")
    parser.add_argument("--case", choices=list(CASES))
    parser.add_argument("--samples", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--tol", type=float)
    parser.add_argument("--grid", type=int)
    parser.add_argument("--l", dest="l_values", help="comma-separated flow distances")
    parser.add_argument("--out", help="report path")
    parser.add_argument("--format", dest="fmt", choices=["json", "csv"])
    parser.add_argument("--family", choices=[FAMILY_PSI, FAMILY_CURVE_X_FACTOR, FAMILY_FACTOR_X_CURVE])
    parser.add_argument("--c", type=float, help="strip constant of the ruled example")
    parser.add_argument("--k", type=float, help="curve curvature for the product families")
    return parser


_CONFIG_TYPES = {
    "case": str,
    "samples": int,
    "seed": int,
    "tol": float,
    "grid": int,
    "out": str,
    "fmt": str,
    "format": str,
    "family": str,
    "c": float,
    "k": float,
    "l": str,
    "l_values": str,
}


def build_config(args: argparse.Namespace) -> RunConfig:
    values: dict = {}
    if args.config:
        raw = _parse_config_file(args.config)
        for key, text in raw.items():
            if key in ("l", "l_values"):
                values["l_values"] = text
            elif key in ("format", "fmt"):
                values["fmt"] = text
            elif key in _CONFIG_TYPES:
                try:
                    values[key] = _CONFIG_TYPES[key](text)
                except ValueError as exc:
                    raise ConfigError(f"config key {key}: {exc}") from exc
            else:
                raise ConfigError(f"unknown config key {key!r}")
    for key in ("case", "samples", "seed", "tol", "grid", "out", "fmt", "family", "c", "k"):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    if args.l_values is not None:
        values["l_values"] = args.l_values
    if isinstance(values.get("l_values"), str):
        try:
            values["l_values"] = tuple(float(x) for x in values["l_values"].split(",") if x.strip())
        except ValueError as exc:
            raise ConfigError(f"--l: {exc}") from exc
    cfg = RunConfig(command=args.command, **values)
    cfg.validate()
    return cfg


def run(cfg: RunConfig) -> VerificationReport:
    """Dispatch one configured run and return its report."""
    cfg.validate()
    report = VerificationReport(seed=cfg.seed, config=_config_echo(cfg))
    dispatch = {
        "identities": run_identities,
        "detq": run_detq,
        "cases": run_cases,
        "gallery": run_gallery,
        "flow": run_flow,
    }
    dispatch[cfg.command](cfg, report)
    return report


def _config_echo(cfg: RunConfig) -> dict:
    return {
        "command": cfg.command,
        "case": cfg.case,
        "samples": cfg.samples,
        "seed": cfg.seed,
        "tol": cfg.tol,
        "grid": cfg.grid,
        "l_values": list(cfg.l_values),
        "format": cfg.fmt,
        "family": cfg.family,
        "c": cfg.c,
        "k": cfg.k,
    }


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        report = run(cfg)
    except (ConfigError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    text = render_csv(report) if cfg.fmt == "csv" else render_json(report)
    if cfg.out:
        _atomic_write(cfg.out, text)
    else:
        sys.stdout.write(text)

    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(
            f"[{status}] {check.name} (samples={check.samples}, "
            f"max_abs={check.max_abs_err:.3e}, max_rel={check.max_rel_err:.3e})",
            file=sys.stderr,
        )
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
