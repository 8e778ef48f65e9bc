import math

import numpy as np
import pytest

from prodform_geo.ambient import ProductPoint, ProductVector, product_metric
from prodform_geo.classify import (
    ExampleSpec,
    FAMILY_CURVE_X_FACTOR,
    FAMILY_FACTOR_X_CURVE,
    FAMILY_PSI,
    build_example,
)
from prodform_geo.hypersurface import (
    Immersion,
    ShapeRecord,
    angle_function,
    angle_of_normal,
    gram_schmidt,
    ricci,
    shape_operator,
    tangent_basis,
    unit_normal,
)
from prodform_geo.spaceform import (
    DegeneratePointError,
    GeometryError,
    ModelPoint,
    zero_vector,
)


def psi_immersion(c=0.25):
    return build_example(ExampleSpec(family=FAMILY_PSI, c=c))


def psi_without_jacobian(c=0.25):
    analytic = psi_immersion(c)
    return Immersion(
        kappa1=analytic.kappa1,
        kappa2=analytic.kappa2,
        chart=analytic.chart,
        domain=analytic.domain,
        jacobian=None,
        name="psi-fd",
    )


GRID = [
    np.array([0.0, 0.0, 0.0]),
    np.array([0.5, -0.5, 0.5]),
    np.array([-1.0, 1.0, -1.0]),
    np.array([0.3, 0.9, -0.7]),
]


class TestTangentBasis:
    def test_affine_graph_has_constant_basis(self):
        def chart(u):
            return ProductPoint(
                ModelPoint(0, [u[0], u[1]]), ModelPoint(0, [u[2], 0.5 * u[0]])
            )

        imm = Immersion(kappa1=0, kappa2=0, chart=chart)
        first = tangent_basis(imm, np.zeros(3))
        second = tangent_basis(imm, np.array([0.4, -0.7, 0.9]))
        for a, b in zip(first, second):
            assert np.allclose(a.first.coords, b.first.coords, atol=1e-9)
            assert np.allclose(a.second.coords, b.second.coords, atol=1e-9)

    def test_psi_s_direction(self):
        imm = psi_immersion()
        _, _, ds = tangent_basis(imm, np.zeros(3))
        assert np.array_equal(ds.first.coords, [0.0, 0.0, 0.0])
        assert np.array_equal(ds.second.coords, [1.0, 0.0])

    def test_finite_differences_match_analytic_jacobian(self):
        analytic = psi_immersion()
        numeric = psi_without_jacobian()
        for u in GRID:
            ta = tangent_basis(analytic, u)
            tn = tangent_basis(numeric, u)
            for a, b in zip(ta, tn):
                assert np.max(np.abs(a.first.coords - b.first.coords)) < 1e-8
                assert np.max(np.abs(a.second.coords - b.second.coords)) < 1e-8

    def test_degenerate_immersion_detected(self):
        def chart(u):
            # ignores u3 entirely
            return ProductPoint(
                ModelPoint(0, [u[0], u[1]]), ModelPoint(0, [u[0] - u[1], 0.0])
            )

        imm = Immersion(kappa1=0, kappa2=0, chart=chart)
        with pytest.raises(DegeneratePointError):
            tangent_basis(imm, np.zeros(3))


class TestUnitNormal:
    def test_great_circle_times_factor(self):
        spec = ExampleSpec(family=FAMILY_CURVE_X_FACTOR, kappa1=1, kappa2=-1, k=0.0)
        imm = build_example(spec)
        n = unit_normal(imm, np.array([0.3, 0.1, -0.2]))
        # the great circle lies in the plane x3 = 0, so the normal is +-e3
        assert abs(abs(n.first.coords[2]) - 1.0) < 1e-12
        assert np.array_equal(n.second.coords, [0.0, 0.0, 0.0])

    def test_orthogonal_to_tangents_and_unit(self):
        imm = psi_immersion()
        for u in GRID:
            n = unit_normal(imm, u)
            assert abs(product_metric(n, n) - 1.0) < 1e-10
            for t in tangent_basis(imm, u):
                assert abs(product_metric(n, t)) < 1e-10 * max(1.0, t.norm())

    def test_component_norms_split_by_angle(self):
        imm = psi_immersion()
        from prodform_geo.spaceform import metric

        for u in GRID:
            n = unit_normal(imm, u)
            c, _ = angle_of_normal(n)
            assert abs(metric(n.first, n.first) - (1.0 + c) / 2.0) < 1e-10
            assert abs(metric(n.second, n.second) - (1.0 - c) / 2.0) < 1e-10

    def test_psi_normal_matches_analytic_form(self):
        c = 0.25
        imm = psi_immersion(c)
        sign = None
        for u in GRID:
            t, r, _ = u
            n = unit_normal(imm, u)
            gamma = np.array([(2.0 + r * r) / 2.0, r, r * r / 2.0])
            normal = np.array([r * r / 2.0, r, (-2.0 + r * r) / 2.0])
            u1 = math.sinh(t * math.sqrt(c)) * gamma + math.cosh(t * math.sqrt(c)) * normal
            expected_first = math.sqrt(1.0 - c) * u1
            expected_second = -math.sqrt(c) * np.array([0.0, 1.0])
            if sign is None:
                overlap = float(
                    n.first.coords @ expected_first + n.second.coords @ expected_second
                )
                sign = 1.0 if overlap > 0 else -1.0
            assert np.max(np.abs(n.first.coords - sign * expected_first)) < 1e-9
            assert np.max(np.abs(n.second.coords - sign * expected_second)) < 1e-9

    def test_orientation_is_deterministic(self):
        imm = psi_immersion()
        u = GRID[1]
        n1 = unit_normal(imm, u)
        n2 = unit_normal(imm, u)
        assert np.array_equal(n1.first.coords, n2.first.coords)

    def test_hint_flips_sign(self):
        imm = psi_immersion()
        u = GRID[1]
        n = unit_normal(imm, u)
        flipped = unit_normal(imm, u, hint=-n)
        assert np.array_equal(flipped.first.coords, -n.first.coords)


class TestAngleFunction:
    def test_curve_times_factor_has_angle_one(self):
        imm = build_example(
            ExampleSpec(family=FAMILY_CURVE_X_FACTOR, kappa1=1, kappa2=0, k=1.0)
        )
        for u in GRID:
            c, v = angle_function(imm, u)
            assert c == 1.0
            assert v.first.norm() == 0.0 and v.second.norm() == 0.0

    def test_factor_times_curve_has_angle_minus_one(self):
        imm = build_example(
            ExampleSpec(family=FAMILY_FACTOR_X_CURVE, kappa1=1, kappa2=0, k=1.0)
        )
        for u in GRID:
            c, v = angle_function(imm, u)
            assert c == -1.0
            assert v.first.norm() == 0.0 and v.second.norm() == 0.0

    def test_psi_angle_constant(self):
        c_target = 1.0 - 2.0 * 0.25
        imm = psi_immersion(0.25)
        values = [angle_function(imm, u)[0] for u in GRID]
        assert max(abs(v - c_target) for v in values) < 1e-10

    def test_companion_norm_identity(self):
        imm = psi_immersion()
        for u in GRID:
            c, v = angle_function(imm, u)
            assert abs(product_metric(v, v) - (1.0 - c * c)) < 1e-10


class TestShapeOperator:
    def test_circle_times_factor_principal_curvatures(self):
        k = 0.5
        imm = build_example(
            ExampleSpec(family=FAMILY_CURVE_X_FACTOR, kappa1=1, kappa2=-1, k=k)
        )
        rec = shape_operator(imm, GRID[1])
        pcs = np.sort(np.abs(rec.principal_curvatures()))
        assert np.max(np.abs(pcs - np.array([0.0, 0.0, k]))) < 1e-6

    def test_geodesic_times_factor_is_totally_geodesic(self):
        imm = build_example(
            ExampleSpec(family=FAMILY_CURVE_X_FACTOR, kappa1=-1, kappa2=0, k=0.0)
        )
        rec = shape_operator(imm, GRID[3])
        assert np.max(np.abs(rec.A)) < 1e-7
        assert abs(rec.H) < 1e-7 and abs(rec.K) < 1e-12

    def test_trace_identity_links_invariants(self):
        imm = psi_immersion()
        for u in GRID:
            rec = shape_operator(imm, u)
            lhs = 2.0 * (rec.H12 + rec.H13 + rec.H23)
            rhs = (
                rec.rho
                - (rec.kappa1 + rec.kappa2)
                + (rec.kappa1 - rec.kappa2) * rec.C
            )
            assert abs(lhs - rhs) < 1e-8

    def test_basis_covariance_under_rotation(self):
        imm = psi_immersion()
        u = GRID[1]
        tangents = tangent_basis(imm, u)
        basis = gram_schmidt(tangents)
        rec = shape_operator(imm, u, basis=basis)
        rng = np.random.default_rng(3)
        r, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        rotated = tuple(
            basis[0].scale(r[0, i]) + basis[1].scale(r[1, i]) + basis[2].scale(r[2, i])
            for i in range(3)
        )
        rec_rot = shape_operator(imm, u, basis=rotated)
        assert np.max(np.abs(rec_rot.A - r.T @ rec.A @ r)) < 1e-6

    def test_non_orthonormal_basis_rejected(self):
        imm = psi_immersion()
        u = GRID[1]
        t = tangent_basis(imm, u)
        with pytest.raises(GeometryError):
            shape_operator(imm, u, basis=t)

    def test_record_enforces_symmetry(self):
        imm = psi_immersion()
        rec = shape_operator(imm, GRID[0])
        with pytest.raises(GeometryError):
            ShapeRecord(
                A=rec.A + np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]),
                basis=rec.basis,
                normal=rec.normal,
                kappa1=rec.kappa1,
                kappa2=rec.kappa2,
                C=rec.C,
            )


class TestRicci:
    def test_zero_vector_gives_zero(self):
        imm = psi_immersion()
        rec = shape_operator(imm, GRID[0])
        p = rec.normal.base
        zero = ProductVector(zero_vector(p.first), zero_vector(p.second))
        assert ricci(zero, rec) == 0.0

    def test_trace_recovers_scalar_curvature(self):
        for spec in (
            ExampleSpec(family=FAMILY_PSI, c=0.25),
            ExampleSpec(family=FAMILY_CURVE_X_FACTOR, kappa1=1, kappa2=-1, k=1.0),
            ExampleSpec(family=FAMILY_FACTOR_X_CURVE, kappa1=-1, kappa2=0, k=2.0),
        ):
            imm = build_example(spec)
            for u in GRID[:2]:
                rec = shape_operator(imm, u)
                trace = sum(ricci(e, rec) for e in rec.basis)
                assert abs(trace - rec.rho) < 1e-8

    def test_matches_independent_evaluation(self):
        # flat shape operator, balanced normal: re-evaluate the display inline
        imm = psi_immersion(0.5)  # C = 0
        u = GRID[1]
        tangents = tangent_basis(imm, u)
        basis = gram_schmidt(tangents)
        n = unit_normal(imm, u)
        c, _ = angle_of_normal(n)
        rec = shape_operator(imm, u, basis=basis)
        zero_a = ShapeRecord(
            A=np.zeros((3, 3)),
            basis=rec.basis,
            normal=n,
            kappa1=imm.kappa1,
            kappa2=imm.kappa2,
            C=c,
        )
        rng = np.random.default_rng(4)
        w = rng.normal(size=3)
        x = basis[0].scale(w[0]) + basis[1].scale(w[1]) + basis[2].scale(w[2])

        from prodform_geo.ambient import product_structure

        px = product_structure(x)
        xx = product_metric(x, x)
        xpx = product_metric(x, px)
        pxn = product_metric(px, n)
        expected = imm.kappa1 / 4.0 * ((1 - c) * xx + (1 - c) * xpx + pxn**2)
        expected += imm.kappa2 / 4.0 * ((1 + c) * xx - (1 + c) * xpx + pxn**2)
        assert abs(ricci(x, zero_a) - expected) < 1e-12 * max(1.0, abs(expected))
