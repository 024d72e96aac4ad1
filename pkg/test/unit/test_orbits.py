import random
from fractions import Fraction
from unittest import TestCase

from projflow import InconsistentInputError
from projflow import LevelZeroError
from projflow import PreconditionError
from projflow.algebra import parse_rational_function
from projflow.algebra import RationalFunction
from projflow.algebra import UnivariateRationalFunction
from projflow.algebra._rings import X1
from projflow.fields import commute_check
from projflow.fields import conjugate_field
from projflow.fields import VectorField
from projflow.orbits import alpha_from_wronskian
from projflow.orbits import beta_from_W
from projflow.orbits import gcdex_diophantine
from projflow.orbits import hermite_logpart
from projflow.orbits import hermite_reduce
from projflow.orbits import level1_check
from projflow.orbits import level1_problem
from projflow.orbits import LevelKind
from projflow.orbits import orbit_function
from projflow.orbits import orbit_trace
from projflow.orbits import rational_ode_solve
from projflow.orbits import RationalODEProblem
from projflow.orbits import satisfies_orbit_equation
from projflow.orbits import scalar_ratio
from projflow.orbits import wronskian_constants

x, y = RationalFunction.x(), RationalFunction.y()
t = UnivariateRationalFunction.x()

QUADRATIC = VectorField.parse("2*x^2 - 3*x*y", "x*y - 2*y^2")
SUPERFLOW = VectorField.parse("(x - y)^2", "(x - y)^2")
SUPERFLOW_PARTNER = VectorField.parse("x^2 - y^2", "2*x*y - 2*y^2")


def random_form(rng: random.Random, degree: int) -> RationalFunction:
    """
    A nonzero polynomial form of the given degree with small integer coefficients.
    """
    while True:
        form = RationalFunction(0)
        for power in range(degree + 1):
            form = form + rng.randint(-3, 3) * x**power * y ** (degree - power)
        if not form.is_zero:
            return form


class TestIntegration(TestCase):

    def test_hermite_reduce_double_pole(self):
        """
        Test that 1/x² reduces to the derivative of -1/x with no remainder.
        """
        gen = X1.gens[0]
        rational, remainder = hermite_reduce(X1.one, gen**2)
        self.assertEqual(rational, -1 / t)
        self.assertTrue(remainder.is_zero)

    def test_gcdex_diophantine(self):
        """
        Test that the returned cofactors solve s a + t b = c with deg s < deg b.
        """
        gen = X1.gens[0]
        a, b, c = gen**2 + 1, gen - 1, gen + 3
        s, cofactor = gcdex_diophantine(a, b, c)
        self.assertEqual(s * a + cofactor * b, c)
        self.assertLess(s.degree(), b.degree())

    def test_residues_of_quadratic_log_derivative(self):
        """
        Test that (x - 2)/(x(1 - x)) has residues -2 at x and 1 at x - 1.
        """
        integral = hermite_logpart((t - 2) / (t * (1 - t)))
        gen = X1.gens[0]
        self.assertTrue(integral.rational_part.is_zero)
        self.assertEqual(integral.residues, [(gen, Fraction(-2)), (gen - 1, Fraction(1))])
        self.assertTrue(integral.is_elementary_rational)

    def test_irrational_residues_are_marked(self):
        """
        Test that 1/(x² - x + 1) yields an algebraic residue marker.
        """
        integral = hermite_logpart(1 / (t**2 - t + 1))
        self.assertEqual(len(integral.algebraic), 1)
        self.assertIsNone(integral.derivative())

    def test_antiderivative_differentiates_back(self):
        """
        Test that the derivative of the computed integral is the integrand.
        """
        rng = random.Random(3)
        for _ in range(100):
            pole = rng.randint(-4, 4)
            rational = (rng.randint(-3, 3) + rng.randint(-3, 3) * t) / (t - pole) ** rng.randint(1, 3)
            if rng.random() < 0.3:
                rational = rational + rng.randint(1, 3) / (t**2 + 1)
            logs = UnivariateRationalFunction(0)
            for shift in rng.sample([p for p in range(-5, 6) if p != pole], 2):
                logs = logs + Fraction(rng.randint(-4, 4), rng.randint(1, 3)) / (t - shift)
            integrand = rational.diff() + logs + rng.randint(-2, 2) * t
            integral = hermite_logpart(integrand)
            self.assertEqual(integral.algebraic, [])
            self.assertEqual(integral.derivative(), integrand)


class TestOrbitFunction(TestCase):

    def test_quadratic_field_has_level_one(self):
        """
        Test that the quadratic field has W = (x - y)y²/x².
        """
        report = orbit_function(QUADRATIC)
        self.assertIs(report.kind, LevelKind.FINITE)
        self.assertEqual(report.level, 1)
        self.assertEqual(report.W, parse_rational_function("(x - y)*y^2/x^2"))
        self.assertTrue(satisfies_orbit_equation(QUADRATIC, report.W))

    def test_superflow_orbit(self):
        """
        Test that the superflow has W = x - y.
        """
        self.assertEqual(orbit_function(SUPERFLOW).W, x - y)

    def test_horizontal_field_has_orbit_y(self):
        """
        Test that a field with zero second component has W = y.
        """
        self.assertEqual(orbit_function(VectorField(x**3 / y, 0)).W, y)

    def test_level_two(self):
        """
        Test that -xy • y² has level 2 with W² = xy.
        """
        field = VectorField(-x * y, y**2)
        report = orbit_function(field)
        self.assertEqual(report.level, 2)
        self.assertEqual(report.orbit_power, x * y)
        self.assertIsNone(report.W)
        self.assertTrue(satisfies_orbit_equation(field, x * y, level=2))

    def test_level_zero(self):
        """
        Test that a radial field has level 0 and no trace.
        """
        report = orbit_function(VectorField(x**2, x * y))
        self.assertIs(report.kind, LevelKind.ZERO)
        self.assertEqual(report.level, 0)
        self.assertIsNone(report.trace)
        with self.assertRaises(LevelZeroError):
            orbit_trace(VectorField(x**2, x * y))

    def test_rational_part_means_no_finite_level(self):
        """
        Test that W_x/W = 1/x² leaves no finite level.
        """
        report = orbit_function(VectorField(x * y - x**2, y**2))
        self.assertIs(report.kind, LevelKind.NOT_FINITE)
        self.assertIsNone(report.level)

    def test_irrational_residues_mean_no_finite_level(self):
        """
        Test that irrational residues of W_x/W leave no finite level.
        """
        report = orbit_function(VectorField.parse("x^2 + y^2", "y^2"))
        self.assertIs(report.kind, LevelKind.NOT_FINITE)
        self.assertEqual(len(report.to_dict()["algebraic_residues"]), 1)

    def test_report_serialises(self):
        """
        Test the dictionary form of a level 1 report.
        """
        document = orbit_function(QUADRATIC).to_dict()
        self.assertEqual(document["kind"], "finite")
        self.assertEqual(document["level"], 1)
        self.assertEqual(
            {entry["residue"] for entry in document["residues"]}, {"-2", "1"}
        )

    def test_trace_is_minus_one_homogeneous(self):
        """
        Test that the trace of a level 1 field has degree -1.
        """
        self.assertEqual(orbit_trace(QUADRATIC).homogeneity, -1)

    def test_scalar_ratio(self):
        """
        Test constant ratios of proportional and non proportional functions.
        """
        self.assertEqual(scalar_ratio(2 * x * y, x * y), 2)
        self.assertIsNone(scalar_ratio(x**2, x * y))
        self.assertEqual(scalar_ratio(RationalFunction(0), RationalFunction(0)), 0)


class TestLevelOneCriterion(TestCase):

    def test_quadratic_field_passes(self):
        """
        Test that the quadratic field satisfies the level 1 criterion.
        """
        self.assertTrue(level1_check(QUADRATIC))

    def test_particular_solution_solves_the_problem(self):
        """
        Test that the particular solution has zero residual.
        """
        problem = level1_problem(QUADRATIC)
        solution = rational_ode_solve(problem)
        self.assertIsNotNone(solution.particular)
        self.assertTrue(problem.residual(solution.particular).is_zero)
        self.assertTrue(solution.all_rational)

    def test_conjugated_horizontal_fields_pass(self):
        """
        Test that radial conjugates of V²/V_x • 0 have level 1 with W = yA and
        pass the level 1 criterion.
        """
        rng = random.Random(17)
        checked = 0
        while checked < 100:
            orbit = random_form(rng, 1)
            if rng.random() < 0.5:
                orbit = random_form(rng, 2) / random_form(rng, 1)
            ratio = random_form(rng, 1) / random_form(rng, 1)
            if orbit.diff("x").is_zero:
                continue
            field = conjugate_field(ratio, VectorField(orbit**2 / orbit.diff("x"), 0))
            self.assertTrue(level1_check(field), msg=str(field))
            report = orbit_function(field)
            self.assertEqual(report.level, 1, msg=str(field))
            self.assertTrue(scalar_ratio(report.W, y * ratio), msg=str(field))
            checked += 1

    def test_non_level_one_field_fails(self):
        """
        Test that (x² + y²) • xy fails the level 1 criterion.
        """
        self.assertFalse(level1_check(VectorField.parse("x^2 + y^2", "x*y")))

    def test_level_zero_is_rejected(self):
        """
        Test that the criterion is undefined at level 0.
        """
        with self.assertRaises(LevelZeroError):
            level1_check(VectorField(x**2, x * y))

    def test_zero_leading_coefficient_is_rejected(self):
        """
        Test that a f' + b f = c needs a nonzero a.
        """
        with self.assertRaises(PreconditionError):
            RationalODEProblem(UnivariateRationalFunction(0), t, t)


class TestWronskian(TestCase):

    def test_beta_of_quadratic_field(self):
        """
        Test that β = y³/(2x) for the quadratic field.
        """
        orbit = parse_rational_function("(x - y)*y^2/x^2")
        self.assertEqual(beta_from_W(QUADRATIC, orbit), parse_rational_function("y^3/(2*x)"))

    def test_superflow_partner_from_wronskian(self):
        """
        Test that the superflow partner is recovered with constant c = 1.
        """
        beta = beta_from_W(SUPERFLOW, x - y)
        self.assertEqual(beta, 2 * x * y - 2 * y**2)
        alpha = alpha_from_wronskian(SUPERFLOW, x - y, beta)
        self.assertEqual(VectorField(alpha, beta), SUPERFLOW_PARTNER)
        self.assertTrue(commute_check(SUPERFLOW, SUPERFLOW_PARTNER).commute)

    def test_wronskian_constant(self):
        """
        Test that αϱ - βϖ = W(xϱ - yϖ) for the superflow pair.
        """
        constant, _ = wronskian_constants(SUPERFLOW, SUPERFLOW_PARTNER, x - y, x - y)
        self.assertEqual(constant, 1)

    def test_wrong_orbit_is_inconsistent(self):
        """
        Test that a function other than the orbit leaves a non rational integral.
        """
        with self.assertRaises(InconsistentInputError):
            beta_from_W(QUADRATIC, x)
