import numpy as np
import pytest

from prodform_geo.classify import (
    AlphaRecord,
    CaseId,
    ExampleSpec,
    FAMILY_CURVE_X_FACTOR,
    FAMILY_FACTOR_X_CURVE,
    FAMILY_PSI,
    build_example,
    build_perturbed_psi,
    case_alphas,
    constancy_polynomial,
    constant_curvature_curve,
    gallery_specs,
    horocycle_with_normal,
    invariants_from_alphas,
    isoparametric_report,
    solve_polynomial,
)
from prodform_geo.spaceform import GeometryError, lorentz_form


class TestCaseAlphas:
    def test_sphere_hyperbolic_all_zero_inputs(self):
        ar = case_alphas(CaseId.S2xH2, 0.0, 0.0, 0.0, 0.0)
        assert ar.alpha1 == 0.0
        assert ar.alpha2 == -1.0
        assert ar.alpha3 == 0.0
        assert ar.alpha4 == 0.0

    def test_sphere_flat_first_combination(self):
        c, rho = 0.3, 1.2
        ar = case_alphas(CaseId.S2xR2, c, rho, 0.5, 0.7)
        assert abs(ar.alpha1 - ((-3 + c) / 2 + rho)) < 1e-15
        assert ar.alpha4 is None

    def test_hyperbolic_flat_first_combination(self):
        c, rho = -0.4, 0.9
        ar = case_alphas(CaseId.H2xR2, c, rho, 0.5, 0.7)
        assert abs(ar.alpha1 - ((3 - c) / 2 + rho)) < 1e-15


class TestInvariantsFromAlphas:
    def test_sphere_hyperbolic_rho(self):
        ar = AlphaRecord(alpha1=2.0, alpha2=0.3, alpha3=-0.4, alpha4=1.0)
        solved = invariants_from_alphas(CaseId.S2xH2, ar, 0.25)
        assert solved.rho == 2.0 - 0.25

    def test_sphere_flat_rho(self):
        ar = AlphaRecord(alpha1=1.0, alpha2=0.0, alpha3=0.0)
        solved = invariants_from_alphas(CaseId.S2xR2, ar, 0.5)
        assert abs(solved.rho - (1.0 + 1.5 - 0.25)) < 1e-15
        assert solved.H12 is None

    @pytest.mark.parametrize("case", list(CaseId))
    def test_round_trip(self, case):
        rng = np.random.default_rng(0)
        for _ in range(200):
            c = float(rng.uniform(-0.9, 0.9))
            rho = float(rng.uniform(-3, 3))
            h13 = float(rng.uniform(-3, 3))
            h12 = float(rng.uniform(-3, 3)) if case is CaseId.S2xH2 else 0.0
            ar = case_alphas(case, c, rho, h12, h13)
            solved = invariants_from_alphas(case, ar, c)
            assert abs(solved.rho - rho) < 1e-10 * max(1.0, abs(rho))
            assert abs(solved.H13 - h13) < 1e-10 * max(1.0, abs(h13))
            if case is CaseId.S2xH2:
                assert abs(solved.H12 - h12) < 1e-10 * max(1.0, abs(h12))

    def test_degenerate_denominator_named(self):
        ar = AlphaRecord(alpha1=1.0, alpha2=1.0, alpha3=1.0, alpha4=1.0)
        with pytest.raises(GeometryError, match="1-C"):
            invariants_from_alphas(CaseId.S2xH2, ar, 1.0)
        with pytest.raises(GeometryError, match=r"1\+C"):
            invariants_from_alphas(CaseId.S2xR2, AlphaRecord(1.0, 1.0, 1.0), -1.0)

    @pytest.mark.parametrize("case", list(CaseId))
    def test_reverse_round_trip_from_alphas(self, case):
        # start from the combinations, solve, re-evaluate; the flat-factor
        # systems determine only two invariants, so their third combination
        # is dependent and only the independent ones round-trip
        rng = np.random.default_rng(5)
        for _ in range(100):
            c = float(rng.uniform(-0.9, 0.9))
            ar = AlphaRecord(
                alpha1=float(rng.uniform(-3, 3)),
                alpha2=float(rng.uniform(-3, 3)),
                alpha3=float(rng.uniform(-3, 3)),
                alpha4=0.0 if case is CaseId.S2xH2 else None,
            )
            solved = invariants_from_alphas(case, ar, c)
            h12 = solved.H12 if solved.H12 is not None else 0.0
            back = case_alphas(case, c, solved.rho, h12, solved.H13)
            assert abs(back.alpha1 - ar.alpha1) < 1e-10 * max(1.0, abs(ar.alpha1))
            assert abs(back.alpha2 - ar.alpha2) < 1e-10 * max(1.0, abs(ar.alpha2))
            if case is CaseId.S2xH2:
                assert abs(back.alpha3 - ar.alpha3) < 1e-10 * max(1.0, abs(ar.alpha3))


class TestConstancyPolynomial:
    def test_all_zero_alphas_flat_case(self):
        poly = constancy_polynomial(CaseId.S2xR2, AlphaRecord(0.0, 0.0, 0.0))
        assert poly.coefficients == (0.0, 0.0, 0.0, 1)
        roots = poly.roots_in_angle()
        assert len(roots) == 1
        assert roots[0].value == -1.0
        assert roots[0].multiplicity == 3

    def test_all_zero_alphas_sphere_hyperbolic(self):
        poly = constancy_polynomial(
            CaseId.S2xH2, AlphaRecord(0.0, 0.0, 0.0, alpha4=0.0)
        )
        assert poly.coefficients == (0.0, 4.0, 0.0, 0.0)
        roots = poly.roots_in_angle()
        assert [r.value for r in roots] == [0.0]

    def test_missing_alpha4_rejected(self):
        with pytest.raises(GeometryError):
            constancy_polynomial(CaseId.S2xH2, AlphaRecord(1.0, 1.0, 1.0))

    def test_linear_and_cubic_coefficients_cannot_both_vanish(self):
        # the angle coefficient is 4 a2 + 4 and the cubic one 16 a2
        rng = np.random.default_rng(1)
        alphas = list(rng.uniform(-5, 5, size=50)) + [0.0, -1.0]
        for a2 in alphas:
            poly = constancy_polynomial(
                CaseId.S2xH2, AlphaRecord(0.0, float(a2), 0.0, alpha4=0.0)
            )
            assert abs(poly.coefficients[1]) + abs(poly.coefficients[3]) > 0

    @pytest.mark.parametrize("case", list(CaseId))
    def test_annihilates_the_generating_angle(self, case):
        rng = np.random.default_rng(2)
        for _ in range(300):
            c0 = float(rng.uniform(-0.9, 0.9))
            rho = float(rng.uniform(-3, 3))
            h13 = float(rng.uniform(-3, 3))
            h12 = float(rng.uniform(-3, 3)) if case is CaseId.S2xH2 else 0.0
            ar = case_alphas(case, c0, rho, h12, h13)
            poly = constancy_polynomial(case, ar)
            residual = abs(poly.evaluate_at_angle(c0))
            assert residual < 1e-8 * max(abs(x) for x in poly.coefficients)

    @pytest.mark.parametrize("case", list(CaseId))
    def test_roots_include_the_generating_angle(self, case):
        rng = np.random.default_rng(3)
        for _ in range(50):
            c0 = float(rng.uniform(-0.9, 0.9))
            rho = float(rng.uniform(-2, 2))
            h13 = float(rng.uniform(-2, 2))
            h12 = float(rng.uniform(-2, 2)) if case is CaseId.S2xH2 else 0.0
            ar = case_alphas(case, c0, rho, h12, h13)
            roots = constancy_polynomial(case, ar).roots_in_angle()
            in_range = [r.value for r in roots if r.in_range]
            assert any(abs(r - c0) < 1e-8 for r in in_range)


class TestSolvePolynomial:
    def test_triple_root(self):
        roots = solve_polynomial((1.0, 3.0, 3.0, 1.0))
        assert len(roots) == 1
        assert roots[0].value == -1.0
        assert roots[0].multiplicity == 3
        assert roots[0].in_range

    def test_factorable_cubic(self):
        roots = solve_polynomial((0.0, -1.0, 0.0, 1.0))  # C^3 - C
        values = [r.value for r in roots]
        assert np.allclose(values, [-1.0, 0.0, 1.0], atol=1e-12)
        assert all(r.in_range for r in roots)

    def test_out_of_range_annotation(self):
        roots = solve_polynomial((-6.0, 11.0, -6.0, 1.0))  # roots 1, 2, 3
        flags = {round(r.value): r.in_range for r in roots}
        assert flags == {1: True, 2: False, 3: False}

    def test_double_root_detected(self):
        # (x - 1)^2 (x + 2) = x^3 - 3x + 2
        roots = solve_polynomial((2.0, -3.0, 0.0, 1.0))
        mults = {round(r.value, 6): r.multiplicity for r in roots}
        assert mults == {1.0: 2, -2.0: 1}

    def test_quadratic_and_linear_degradation(self):
        roots = solve_polynomial((-1.0, 0.0, 1.0, 0.0))  # x^2 - 1
        assert np.allclose([r.value for r in roots], [-1.0, 1.0], atol=1e-14)
        roots = solve_polynomial((-0.5, 1.0, 0.0, 0.0))  # x - 0.5
        assert roots[0].value == 0.5

    def test_residuals_on_random_cubics(self):
        rng = np.random.default_rng(4)
        for _ in range(300):
            coeffs = tuple(rng.uniform(-5, 5, size=4))
            scale = max(abs(x) for x in coeffs)
            for root in solve_polynomial(coeffs):
                value = sum(c * root.value**k for k, c in enumerate(coeffs))
                assert abs(value) < 1e-8 * scale

    def test_all_zero_coefficients_rejected(self):
        with pytest.raises(GeometryError):
            solve_polynomial((0.0, 0.0, 0.0, 0.0))


class TestConstantCurvatureCurves:
    @pytest.mark.parametrize("kappa", [-1, 0, 1])
    @pytest.mark.parametrize("k", [0.0, 0.5, 1.0, 2.0])
    def test_unit_speed(self, kappa, k):
        gamma, dgamma = constant_curvature_curve(kappa, k)
        from prodform_geo.spaceform import form

        for t in (-1.0, 0.0, 0.7):
            speed = form(kappa, dgamma(t), dgamma(t))
            assert abs(speed - 1.0) < 1e-12

    @pytest.mark.parametrize("kappa", [-1, 1])
    @pytest.mark.parametrize("k", [0.0, 0.5, 1.0, 2.0])
    def test_stays_on_quadric(self, kappa, k):
        gamma, _ = constant_curvature_curve(kappa, k)
        from prodform_geo.spaceform import form

        for t in (-1.3, 0.0, 2.1):
            assert abs(form(kappa, gamma(t), gamma(t)) - kappa) < 1e-12

    def test_negative_curvature_rejected(self):
        with pytest.raises(GeometryError):
            constant_curvature_curve(0, -1.0)


class TestHorocycle:
    def test_on_hyperboloid_for_all_parameters(self):
        for r in np.linspace(-3, 3, 25):
            g, _ = horocycle_with_normal(r)
            assert abs(lorentz_form(g, g) + 1.0) < 1e-12

    def test_normal_is_unit_and_orthogonal(self):
        for r in np.linspace(-3, 3, 25):
            g, n = horocycle_with_normal(r)
            assert abs(lorentz_form(g, n)) < 1e-12
            assert abs(lorentz_form(n, n) - 1.0) < 1e-12


class TestBuildExample:
    def test_psi_base_point(self):
        imm = build_example(ExampleSpec(family=FAMILY_PSI, c=0.25))
        p = imm.chart(np.zeros(3))
        assert np.array_equal(p.first.coords, [1.0, 0.0, 0.0])
        assert np.array_equal(p.second.coords, [0.0, 0.0])

    def test_psi_requires_strip_constant_in_range(self):
        with pytest.raises(GeometryError):
            ExampleSpec(family=FAMILY_PSI, c=1.5)
        with pytest.raises(GeometryError):
            ExampleSpec(family=FAMILY_PSI, c=0.0)

    def test_psi_requires_orthonormal_flat_pair(self):
        with pytest.raises(GeometryError):
            ExampleSpec(family=FAMILY_PSI, V0=(1.0, 0.0), W0=(1.0, 0.0))
        with pytest.raises(GeometryError):
            ExampleSpec(family=FAMILY_PSI, V0=(2.0, 0.0))

    def test_psi_wrong_product_rejected(self):
        with pytest.raises(GeometryError):
            ExampleSpec(family=FAMILY_PSI, kappa1=1, kappa2=0)

    def test_families_need_distinct_curvatures(self):
        with pytest.raises(GeometryError):
            ExampleSpec(family=FAMILY_CURVE_X_FACTOR, kappa1=1, kappa2=1)

    def test_unknown_family_rejected(self):
        with pytest.raises(GeometryError):
            ExampleSpec(family="spiral")

    def test_psi_lands_on_product(self):
        imm = build_example(ExampleSpec(family=FAMILY_PSI, c=0.7))
        for u in imm.grid(3):
            p = imm.chart(u)
            assert abs(lorentz_form(p.first.coords, p.first.coords) + 1.0) < 1e-12


class TestIsoparametricReport:
    def test_circle_times_factor_passes(self):
        imm = build_example(
            ExampleSpec(family=FAMILY_FACTOR_X_CURVE, kappa1=1, kappa2=0, k=1.0)
        )
        rep = isoparametric_report(imm, grid=imm.grid(3), tol=1e-5)
        assert rep.passed
        assert abs(abs(rep.angle.mean) - 1.0) < 1e-12
        pcs = sorted(abs(s.mean) for s in rep.principal)
        assert np.allclose(pcs, [0.0, 0.0, 1.0], atol=1e-6)

    def test_psi_passes_with_expected_angle(self):
        imm = build_example(ExampleSpec(family=FAMILY_PSI, c=0.25))
        rep = isoparametric_report(imm, grid=imm.grid(3), tol=1e-5)
        assert rep.passed
        assert abs(rep.angle.mean - 0.5) < 1e-8
        assert rep.angle.max_dev < 1e-8

    def test_perturbed_psi_fails(self):
        rep = isoparametric_report(build_perturbed_psi(0.25), tol=1e-3)
        assert not rep.angle_pass
        assert rep.angle.max_dev > 1e-3

    def test_gallery_covers_all_cases(self):
        specs = gallery_specs()
        pairs = {(s.kappa1, s.kappa2) for s in specs}
        assert pairs == {(1, -1), (1, 0), (-1, 0)}
        families = {s.family for s in specs}
        assert families == {FAMILY_CURVE_X_FACTOR, FAMILY_FACTOR_X_CURVE, FAMILY_PSI}

    def test_full_gallery_passes_at_default_grid(self):
        for spec in gallery_specs():
            imm = build_example(spec)
            rep = isoparametric_report(
                imm, grid=imm.grid(5), l_samples=(-0.2, -0.1, 0.1, 0.2), tol=1e-5
            )
            assert rep.passed, f"{imm.name}: {rep}"
            assert not rep.focal_events
