import random
from fractions import Fraction
from unittest import TestCase

from sympy import QQ

from projflow import NotHomogeneousError
from projflow import ParseError
from projflow import SingularPointError
from projflow.algebra import ANY_DEGREE
from projflow.algebra import dehomogenize
from projflow.algebra import format_rational_function
from projflow.algebra import homogeneity_degree
from projflow.algebra import NOT_HOMOGENEOUS
from projflow.algebra import parse_rational_function
from projflow.algebra import rational_roots
from projflow.algebra import RationalFunction
from projflow.algebra import rehomogenize
from projflow.algebra import require_degree
from projflow.algebra import resultant
from projflow.algebra import solve_linear_system
from projflow.algebra import squarefree_factor
from projflow.algebra import UnivariateRationalFunction
from projflow.algebra._linear import solve_over_qq
from projflow.algebra._rings import X1
from projflow.algebra._rings import XT

x, y = RationalFunction.x(), RationalFunction.y()


def random_form(rng: random.Random, degree: int, positive: bool = False) -> RationalFunction:
    """
    A random nonzero homogeneous polynomial of ``degree``.
    """
    while True:
        total = RationalFunction(0)
        for i in range(degree + 1):
            coefficient = rng.randint(1, 4) if positive else rng.randint(-3, 3)
            total = total + coefficient * x**i * y ** (degree - i)
        if not total.is_zero:
            return total


class TestParsing(TestCase):

    def test_parse_reduces_to_canonical_form(self):
        """
        Test that equal rational functions parse to equal, reduced objects.
        """
        self.assertEqual(parse_rational_function("2*x/(2*y)"), x / y)
        self.assertEqual(
            parse_rational_function("(x^2 - y^2)/(x - y)"), x + y
        )

    def test_parse_rejects_symbols_outside_grammar(self):
        """
        Test that names other than x and y raise ParseError.
        """
        with self.assertRaises(ParseError):
            parse_rational_function("x + z")
        with self.assertRaises(ParseError):
            parse_rational_function("sin(x)")

    def test_parse_rejects_unbalanced_expression(self):
        """
        Test that a syntactically broken expression raises ParseError.
        """
        with self.assertRaises(ParseError):
            parse_rational_function("x + (")

    def test_format_reads_back(self):
        """
        Test that formatted functions parse back to themselves.
        """
        for text in ("(x - y)*y^2/x^2", "x^2/y", "2*x*y - 2*y^2", "-x*y^3/(x - y)^2"):
            f = parse_rational_function(text)
            self.assertEqual(parse_rational_function(format_rational_function(f)), f)


class TestHomogeneity(TestCase):

    def test_degrees_of_simple_functions(self):
        """
        Test the degree of homogeneous, mixed and zero functions.
        """
        self.assertEqual(homogeneity_degree(parse_rational_function("(x - y)*y^2/x^2")), 1)
        self.assertEqual(homogeneity_degree(parse_rational_function("y^3/x")), 2)
        self.assertIs(homogeneity_degree(parse_rational_function("x^2 + y")), NOT_HOMOGENEOUS)
        self.assertIs(homogeneity_degree(RationalFunction(0)), ANY_DEGREE)

    def test_sentinels_are_falsy(self):
        """
        Test that the degree sentinels are falsy and printable.
        """
        self.assertFalse(NOT_HOMOGENEOUS)
        self.assertFalse(ANY_DEGREE)
        self.assertIn("NOT_HOMOGENEOUS", repr(NOT_HOMOGENEOUS))

    def test_require_degree_raises(self):
        """
        Test that require_degree rejects a function of the wrong degree.
        """
        require_degree(x * y, 2)
        require_degree(RationalFunction(0), 5)
        with self.assertRaises(NotHomogeneousError):
            require_degree(x * y, 1)

    def test_dehomogenize_restricts_to_unit_line(self):
        """
        Test that (x - y)y²/x² restricted to y = 1 is (x - 1)/x².
        """
        t = UnivariateRationalFunction.x()
        f = parse_rational_function("(x - y)*y^2/x^2")
        self.assertEqual(dehomogenize(f, 1), (t - 1) / t**2)

    def test_scaling_identity_on_random_forms(self):
        """
        Test f(xz, yz) = z^d f(x, y) exactly for random homogeneous quotients.
        """
        rng = random.Random(1)
        for _ in range(100):
            numer_degree = rng.randint(0, 3)
            denom_degree = rng.randint(0, 2)
            f = random_form(rng, numer_degree) / random_form(rng, denom_degree, positive=True)
            degree = numer_degree - denom_degree
            self.assertEqual(f.homogeneity, degree)
            point = (Fraction(rng.randint(1, 9), rng.randint(1, 5)), Fraction(rng.randint(1, 9), 7))
            scale = Fraction(rng.randint(1, 6), rng.randint(1, 6))
            self.assertEqual(
                f(point[0] * scale, point[1] * scale), scale**degree * f(*point)
            )

    def test_rehomogenize_inverts_dehomogenize(self):
        """
        Test that rehomogenizing the restriction to y = 1 returns the function.
        """
        rng = random.Random(2)
        for _ in range(100):
            numer_degree = rng.randint(0, 3)
            denom_degree = rng.randint(0, 2)
            f = random_form(rng, numer_degree) / random_form(rng, denom_degree, positive=True)
            degree = numer_degree - denom_degree
            self.assertEqual(rehomogenize(dehomogenize(f, degree), degree), f)


class TestArithmetic(TestCase):

    def test_substitute_and_scaled(self):
        """
        Test composition with rational functions and scaling of arguments.
        """
        f = x / y
        self.assertEqual(f.substitute(y, x), y / x)
        self.assertEqual((x * y).scaled(2), 4 * x * y)

    def test_exact_evaluation_and_singularity(self):
        """
        Test exact evaluation and the error at a pole.
        """
        f = parse_rational_function("y^3/x")
        self.assertEqual(f(2, 1), Fraction(1, 2))
        with self.assertRaises(SingularPointError):
            f(0, 1)
        with self.assertRaises(SingularPointError):
            f.evaluate_numeric(0.0, 1.0)

    def test_diff_is_quotient_rule(self):
        """
        Test partial derivatives of a quotient.
        """
        f = x**2 / y
        self.assertEqual(f.diff("x"), 2 * x / y)
        self.assertEqual(f.diff("y"), -(x**2) / y**2)

    def test_split_polynomial_part(self):
        """
        Test that (x³ + 1)/x splits into x² and 1/x.
        """
        t = UnivariateRationalFunction.x()
        polynomial, proper = ((t**3 + 1) / t).split_polynomial_part()
        self.assertEqual(UnivariateRationalFunction(polynomial), t**2)
        self.assertEqual(proper, 1 / t)


class TestFactorization(TestCase):

    def test_squarefree_factor_expands_back(self):
        """
        Test that the squarefree decomposition multiplies back to the input.
        """
        t = X1.gens[0]
        poly = 3 * (t - 1) ** 2 * (t + 2)
        factorization = squarefree_factor(poly)
        self.assertEqual(factorization.expand(), poly)
        self.assertEqual({m for _, m in factorization.factors}, {1, 2})

    def test_rational_roots_with_multiplicity(self):
        """
        Test the rational roots of (2x - 1)(x + 3)²(x² + 1).
        """
        t = X1.gens[0]
        poly = (2 * t - 1) * (t + 3) ** 2 * (t**2 + 1)
        self.assertEqual(rational_roots(poly), [-3, -3, Fraction(1, 2)])

    def test_resultant_vanishes_at_common_root(self):
        """
        Test that res_x(x² - t, x - 1) has the single root t = 1.
        """
        gx, gt = XT.gens
        self.assertEqual(rational_roots(resultant(gx**2 - gt, gx - 1)), [1])


class TestLinearSystems(TestCase):

    def test_unique_solution(self):
        """
        Test a regular 2×2 system.
        """
        self.assertEqual(solve_linear_system([[1, 1], [1, -1]], [3, 1]), [2, 1])

    def test_inconsistent_system(self):
        """
        Test that an inconsistent system has no solution.
        """
        self.assertIsNone(solve_linear_system([[1, 1], [2, 2]], [1, 3]))

    def test_free_variables_are_zero(self):
        """
        Test that free variables of an underdetermined system are set to 0.
        """
        self.assertEqual(solve_linear_system([[1, 1]], [2]), [2, 0])

    def test_solution_stays_in_the_ground_domain(self):
        """
        Test that solving over QQ returns QQ elements, including free variables.
        """
        solution = solve_over_qq([[QQ(1), QQ(2)]], [QQ(1, 3)])
        self.assertEqual(solution, [QQ(1, 3), QQ.zero])
        for value in solution:
            self.assertTrue(QQ.of_type(value))
        self.assertIsNone(solve_over_qq([[QQ(1)], [QQ(1)]], [QQ(1), QQ(2)]))
