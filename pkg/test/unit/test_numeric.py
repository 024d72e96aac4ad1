from fractions import Fraction
from unittest import TestCase

from projflow import ContinuationError
from projflow import DEFAULT_SETTINGS
from projflow import PreconditionError
from projflow import SamplingDefaults
from projflow.algebra import RationalFunction
from projflow.fields import LinearMap
from projflow.fields import RationalFlow
from projflow.fields import VectorField
from projflow.numeric import accept_real
from projflow.numeric import branch_eval
from projflow.numeric import chart_flows
from projflow.numeric import CheckName
from projflow.numeric import ClosedFormComposition
from projflow.numeric import CombinationFlow
from projflow.numeric import ComposedFlow
from projflow.numeric import ConjugatedFlow
from projflow.numeric import Constant
from projflow.numeric import flow_integrate
from projflow.numeric import from_rational_function
from projflow.numeric import ImplicitBranch
from projflow.numeric import implicit_eval
from projflow.numeric import IntegratedFlow
from projflow.numeric import RationalScaledFlow
from projflow.numeric import reports_document
from projflow.numeric import residual
from projflow.numeric import root
from projflow.numeric import RootAnchor
from projflow.numeric import SamplePlan
from projflow.numeric import SCHEMA_VERSION
from projflow.numeric import singular_loci
from projflow.numeric import solve_partner_pointwise
from projflow.numeric import Variable
from projflow.numeric import VerificationReport
from projflow.numeric import verify_agreement
from projflow.numeric import verify_boundary
from projflow.numeric import verify_commute
from projflow.numeric import verify_composition
from projflow.numeric import verify_implicit_pde
from projflow.numeric import verify_orbit
from projflow.numeric import verify_pde
from projflow.numeric import verify_translation
from projflow.partner import partner_bundle
from projflow.partner import psi_field

x, y = RationalFunction.x(), RationalFunction.y()
X, Y, Z, W = Variable("x"), Variable("y"), Variable("z"), Variable("w")

FAST = DEFAULT_SETTINGS.model_copy(update={"sampling": SamplingDefaults(count=20)})

RADIAL = RationalFlow.parse("x/(1 - x)", "y/(1 - x)")
SUPERFLOW = RationalFlow.parse("x + (x - y)^2", "y + (x - y)^2")


def plan(x_range=(1.0, 2.0), y_range=(0.2, 0.8), seed=7) -> SamplePlan:
    return SamplePlan(seed=seed, count=20, x_range=x_range, y_range=y_range)


class TestBranchEvaluation(TestCase):

    def test_real_anchor_of_odd_root(self):
        """
        Test that the real anchor takes the real cube root of a negative number.
        """
        value = branch_eval(root(Constant(-8), Fraction(1, 3), RootAnchor.REAL), {}, 0.0)
        self.assertAlmostEqual(value.real, -2.0)
        self.assertAlmostEqual(value.imag, 0.0)

    def test_principal_root_without_winding(self):
        """
        Test that sqrt(1 - z) continued to z = 0.75 is 1/2.
        """
        value = branch_eval(root(1 - Z, Fraction(1, 2), RootAnchor.PRINCIPAL), {}, 0.75)
        self.assertAlmostEqual(value.real, 0.5)

    def test_continuation_leaves_principal_branch(self):
        """
        Test that sqrt(a(z)²) follows a(z) = 1 - (2 + 2i)z rather than the principal root.
        """
        a = 1 - Constant(2 + 2j) * Z
        value = branch_eval(root(a**2, Fraction(1, 2), RootAnchor.PRINCIPAL), {}, 1.0)
        self.assertAlmostEqual(value, -1 - 2j)

    def test_accept_real(self):
        """
        Test that negligible imaginary parts are dropped and others refused.
        """
        self.assertEqual(accept_real(1 + 1e-12j), 1.0)
        self.assertIsNone(accept_real(1 + 1e-3j))

    def test_rational_function_expression(self):
        """
        Test that the expression of x/(1 - x) evaluates like the function.
        """
        expression = from_rational_function(x / (1 - x))
        self.assertAlmostEqual(branch_eval(expression, {"x": 0.5}, 0.0).real, 1.0)


class TestImplicitBranch(TestCase):

    def test_partner_branch_follows_sign_of_x(self):
        """
        Test that the root of a²(zy + 1) = x² continued from a = x keeps the sign of x.
        """
        branch = ImplicitBranch.from_equation(partner_bundle(x**2 / y).a_equation)
        expected = 2 / 2.5**0.5
        self.assertAlmostEqual(implicit_eval(branch, {"x": 2.0, "y": 3.0}, 0.5).real, expected)
        self.assertAlmostEqual(implicit_eval(branch, {"x": -2.0, "y": 3.0}, 0.5).real, -expected)

    def test_pointwise_partner_values(self):
        """
        Test that for V = x²/y the scaled values are a = x/sqrt(zy + 1) and u = sqrt(yV/(1 - zV)).
        """
        a, u = solve_partner_pointwise(x**2 / y, (2.0, 3.0), 0.5)
        self.assertAlmostEqual(a.real, 2 / 2.5**0.5)
        self.assertAlmostEqual(u.real, 12**0.5)

    def test_base_value_must_be_a_root(self):
        """
        Test that Newton's method failing at the base value raises ContinuationError.
        """
        branch = ImplicitBranch([Constant(-4), Constant(0), Constant(1)])
        with self.assertRaises(ContinuationError):
            implicit_eval(branch, {"x": 0.0, "y": 1.0}, 0.5)


class TestFlows(TestCase):

    def test_integrated_radial_flow(self):
        """
        Test that integrating x² • xy from (1/2, 1/2) to z = 1/2 gives (2/3, 2/3).
        """
        u, v = flow_integrate(VectorField(x**2, x * y), (0.5, 0.5), 0.5)
        self.assertAlmostEqual(u, 2 / 3, places=9)
        self.assertAlmostEqual(v, 2 / 3, places=9)

    def test_rational_and_integrated_superflow_agree(self):
        """
        Test that the superflow evaluated exactly and by integration coincide.
        """
        exact = RationalScaledFlow(SUPERFLOW)((1.0, 0.5), 0.1)
        integrated = IntegratedFlow(SUPERFLOW.field)((1.0, 0.5), 0.1)
        self.assertAlmostEqual(exact[0].real, 1.025)
        self.assertAlmostEqual(exact[1].real, 0.525)
        self.assertLess(residual(exact, integrated), 1e-10)

    def test_conjugated_flow_by_swap(self):
        """
        Test that conjugating x/(1 - xz) • y/(1 - xz) by the swap divides by 1 - yz.
        """
        flow = ConjugatedFlow(RationalScaledFlow(RADIAL), LinearMap.swap())
        u, v = flow((0.5, 0.25), 0.1)
        self.assertAlmostEqual(u.real, 0.5 / 0.975)
        self.assertAlmostEqual(v.real, 0.25 / 0.975)

    def test_composed_flow_adds_parameters(self):
        """
        Test that φ^z ∘ φ^w = φ^(z + w) for a rational flow.
        """
        flow = RationalScaledFlow(RADIAL)
        composed = ComposedFlow(flow, flow)
        self.assertLess(residual(flow((0.3, 0.4), 0.15), composed((0.3, 0.4), 0.1, 0.05)), 1e-12)

    def test_combination_flow_of_commuting_jumps(self):
        """
        Test that the flow of 2F + 3G for the jumps x and y is p/(1 - 2wx - 3wy).
        """
        first = RationalScaledFlow(RADIAL)
        second = RationalScaledFlow(RationalFlow.parse("x/(1 - y)", "y/(1 - y)"))
        u, v = CombinationFlow(first, second, Fraction(2), Fraction(3))((0.3, 0.4), 0.1)
        self.assertAlmostEqual(u.real, 0.3 / 0.82)
        self.assertAlmostEqual(v.real, 0.4 / 0.82)

    def test_combination_flow_without_first_part(self):
        """
        Test that with m = 0 the combination is the second flow at scaled time.
        """
        first = RationalScaledFlow(RADIAL)
        second = RationalScaledFlow(RationalFlow.parse("x/(1 - y)", "y/(1 - y)"))
        combined = CombinationFlow(first, second, Fraction(0), Fraction(1, 2))
        self.assertLess(residual(second((0.3, 0.4), 0.05), combined((0.3, 0.4), 0.1)), 1e-14)


class TestSampling(TestCase):

    def test_draw_is_reproducible(self):
        """
        Test that the same seed draws the same samples.
        """
        self.assertEqual(plan().draw(), plan().draw())
        self.assertEqual(len(plan().draw()), 20)

    def test_samples_avoid_singular_loci(self):
        """
        Test that every sample keeps its distance from x - y = 0.
        """
        loci = singular_loci(y / (x - y))
        for sample in plan((0.0, 1.0), (0.0, 1.0)).draw(loci):
            self.assertGreater(abs(sample.x - sample.y) / 2**0.5, 0.05)

    def test_box_inside_exclusion_zone(self):
        """
        Test that a box entirely near a singular curve raises PreconditionError.
        """
        loci = singular_loci(y / (x - y))
        with self.assertRaises(PreconditionError):
            plan((0.0, 0.01), (0.0, 0.01)).draw(loci)

    def test_empty_range_is_rejected(self):
        """
        Test that a range with low > high is invalid.
        """
        with self.assertRaises(ValueError):
            SamplePlan(seed=1, x_range=(1.0, 0.0), y_range=(0.0, 1.0))

    def test_singular_loci_skip_polynomials(self):
        """
        Test that only non-constant denominators are collected, once each.
        """
        loci = singular_loci(x / y, x * y, y**2 / y**3, x / (x - y))
        self.assertEqual(len(loci), 2)


class TestChecks(TestCase):

    def test_residual(self):
        """
        Test the relative residual max |a - b|/(1 + |a|).
        """
        self.assertAlmostEqual(residual([1.0, 2.0], [1.0, 2.5]), 0.5 / 3)

    def test_rational_flow_passes_its_checks(self):
        """
        Test translation, PDE and boundary checks of x/(1 - x) • y/(1 - x).
        """
        flow = RationalScaledFlow(RADIAL)
        box = plan((0.1, 0.5), (0.1, 0.5))
        field = VectorField(x**2, x * y)
        for report in (
            verify_translation(flow, box, settings=FAST),
            verify_pde(flow, field, box, settings=FAST),
            verify_boundary(flow, field, box, settings=FAST),
        ):
            self.assertTrue(report.passed, msg=str(report))

    def test_level_zero_flows_commute(self):
        """
        Test that two level 0 flows commute numerically.
        """
        first = RationalScaledFlow(RADIAL)
        second = RationalScaledFlow(RationalFlow.parse("x/(1 - y)", "y/(1 - y)"))
        report = verify_commute(first, second, plan((0.1, 0.5), (0.1, 0.5)), settings=FAST)
        self.assertTrue(report.passed)
        self.assertLess(report.max_residual, 1e-10)

    def test_non_commuting_flows_fail(self):
        """
        Test that the superflow and a level 0 flow fail the commutation check.
        """
        report = verify_commute(
            RationalScaledFlow(SUPERFLOW), RationalScaledFlow(RADIAL), plan(), settings=FAST
        )
        self.assertFalse(report.passed)
        self.assertEqual(report.check, CheckName.COMMUTE)

    def test_superflow_preserves_orbit(self):
        """
        Test that x - y is constant along the superflow.
        """
        report = verify_orbit(RationalScaledFlow(SUPERFLOW), x - y, plan(), settings=FAST)
        self.assertTrue(report.passed)

    def test_level_zero_composition_closed_form(self):
        """
        Test that the flows of the jumps x and y compose to p/(1 - zx - wy).
        """
        first = RationalScaledFlow(RADIAL)
        second = RationalScaledFlow(RationalFlow.parse("x/(1 - y)", "y/(1 - y)"))
        scale = 1 - Z * X - W * Y
        closed_form = ClosedFormComposition(X / scale, Y / scale)
        report = verify_composition(first, second, closed_form, plan((0.1, 0.5), (0.1, 0.5)), settings=FAST)
        self.assertTrue(report.passed)
        self.assertEqual(report.check, CheckName.COMPOSITION)

    def test_implicit_partner_pde(self):
        """
        Test the implicit PDE residual of a in a²(zy + 1) = x² against -xy/2 • -y².
        """
        orbit = x**2 / y
        bundle = partner_bundle(orbit)
        _, psi = chart_flows(bundle)
        report = verify_implicit_pde(
            psi, bundle.a_equation, psi_field(orbit), plan((0.5, 1.0), (0.8, 1.2)), settings=FAST
        )
        self.assertTrue(report.passed)
        self.assertLess(report.max_residual, 1e-9)

    def test_pde_fails_for_wrong_field(self):
        """
        Test that the PDE check detects a field that does not belong to the flow.
        """
        report = verify_pde(
            RationalScaledFlow(RADIAL), VectorField(x**2, 0), plan((0.1, 0.5), (0.1, 0.5)), settings=FAST
        )
        self.assertFalse(report.passed)

    def test_boundary_fails_without_decay(self):
        """
        Test that a difference quotient whose error stalls fails the boundary
        check even though the error is below the tolerance.
        """
        report = verify_boundary(
            RationalScaledFlow(RADIAL),
            VectorField(Fraction(1001, 1000) * x**2, x * y),
            plan((0.1, 0.5), (0.1, 0.5)),
            settings=FAST,
        )
        self.assertFalse(report.passed)
        self.assertEqual(report.check, CheckName.BOUNDARY)

    def test_agreement_of_exact_and_integrated_flows(self):
        """
        Test that the superflow evaluated exactly agrees with its integrated flow.
        """
        report = verify_agreement(
            RationalScaledFlow(SUPERFLOW), IntegratedFlow(SUPERFLOW.field), plan(), settings=FAST
        )
        self.assertTrue(report.passed)
        self.assertEqual(report.check, CheckName.AGREEMENT)

    def test_agreement_fails_for_different_flows(self):
        """
        Test that the agreement check separates a flow from its conjugate by the swap.
        """
        flow = RationalScaledFlow(RADIAL)
        report = verify_agreement(
            flow, ConjugatedFlow(flow, LinearMap.swap()), plan((0.1, 0.5), (0.6, 0.9)), settings=FAST
        )
        self.assertFalse(report.passed)


class TestReports(TestCase):

    def test_non_finite_residual_fails(self):
        """
        Test that an infinite residual fails the report.
        """
        report = VerificationReport.from_residuals(CheckName.COMMUTE, 7, [1e-10, float("inf")], 1e-8)
        self.assertFalse(report.passed)
        self.assertEqual(report.samples, 2)

    def test_json_document(self):
        """
        Test the serialised form of a passing report.
        """
        report = VerificationReport.from_residuals(CheckName.ORBIT, 3, [1e-12, 2e-12], 1e-8, label="E2")
        document = reports_document([report])
        self.assertEqual(document["schema_version"], SCHEMA_VERSION)
        entry = document["reports"][0]
        self.assertEqual(set(entry), {"check", "seed", "samples", "max_residual", "tolerance", "pass"})
        self.assertEqual(entry["check"], "orbit")
        self.assertTrue(entry["pass"])
        self.assertEqual(entry["max_residual"], 2e-12)
