import random
from fractions import Fraction
from unittest import TestCase

from projflow import DegenerateOrbitError
from projflow import LevelZeroError
from projflow import NotHomogeneousError
from projflow import NotLevelOneError
from projflow import PreconditionError
from projflow import SingularPointError
from projflow.algebra import parse_rational_function
from projflow.algebra import RationalFunction
from projflow.algebra._rings import TXYZ
from projflow.fields import commute_check
from projflow.fields import VectorField
from projflow.partner import chart_orbit
from projflow.partner import CombinedOrbit
from projflow.partner import commuting_family
from projflow.partner import ImplicitEquation
from projflow.partner import normalize_to_horizontal
from projflow.partner import partner_bundle
from projflow.partner import partner_fields_from_V
from projflow.partner import phi_field
from projflow.partner import psi_field

x, y = RationalFunction.x(), RationalFunction.y()

QUADRATIC = VectorField.parse("2*x^2 - 3*x*y", "x*y - 2*y^2")
SUPERFLOW = VectorField.parse("(x - y)^2", "(x - y)^2")


def random_orbit(rng: random.Random) -> RationalFunction:
    """
    A random 1-homogeneous quotient with small integer coefficients.
    """
    denom_degree = rng.randint(0, 2)
    while True:
        numer = sum(
            (rng.randint(-3, 3) * x**i * y ** (denom_degree + 1 - i) for i in range(denom_degree + 2)),
            RationalFunction(0),
        )
        denom = sum(
            (rng.randint(1, 3) * x**i * y ** (denom_degree - i) for i in range(denom_degree + 1)),
            RationalFunction(0),
        )
        if not numer.is_zero:
            return numer / denom


class TestPartnerFields(TestCase):

    def test_fields_of_x_squared_over_y(self):
        """
        Test the pair of V = x²/y: x³/(2y) • 0 and -xy/2 • -y².
        """
        phi, psi = partner_fields_from_V(x**2 / y)
        self.assertEqual(phi, VectorField(x**3 / (2 * y), 0))
        self.assertEqual(psi, VectorField(-x * y / 2, -(y**2)))

    def test_psi_field_of_x_minus_y(self):
        """
        Test that V = x - y gives the partner -y² • -y².
        """
        self.assertEqual(psi_field(x - y), VectorField(-(y**2), -(y**2)))
        self.assertEqual(phi_field(x - y), VectorField((x - y) ** 2, 0))

    def test_pair_commutes_for_random_orbits(self):
        """
        Test that the two fields built from any admissible V commute.
        """
        rng = random.Random(4)
        checked = 0
        while checked < 100:
            orbit = random_orbit(rng)
            if orbit.diff("x").is_zero:
                with self.assertRaises(DegenerateOrbitError):
                    partner_fields_from_V(orbit)
                continue
            phi, psi = partner_fields_from_V(orbit)
            self.assertTrue(commute_check(phi, psi).commute, msg=f"V={orbit}")
            checked += 1

    def test_degenerate_and_inhomogeneous_orbits(self):
        """
        Test that V = c y and non 1-homogeneous V are rejected.
        """
        with self.assertRaises(DegenerateOrbitError):
            partner_bundle(3 * y)
        with self.assertRaises(NotHomogeneousError):
            partner_bundle(x * y)


class TestPartnerBundle(TestCase):

    def test_relations_of_x_squared_over_y(self):
        """
        Test the scaled relation of a for V = x²/y: a²(wy + 1) - x².
        """
        t, gx, gy, gz = TXYZ.gens
        bundle = partner_bundle(x**2 / y)
        self.assertEqual(bundle.a_equation.scaled, t**2 * (gz * gy + 1) - gx**2)
        self.assertEqual(bundle.a_equation.degree, 2)
        self.assertTrue(bundle.a_equation.is_root_at_origin())
        self.assertTrue(bundle.u_equation.is_root_at_origin())
        self.assertTrue(bundle.independent)

    def test_bundle_serialises(self):
        """
        Test that the bundle prints every part.
        """
        document = partner_bundle(x - y).to_dict()
        self.assertEqual(document["V"], "x - y")
        self.assertEqual(set(document), {"V", "phi_field", "psi_field", "a_equation", "u_equation", "combined_orbit"})

    def test_implicit_equation_is_primitive(self):
        """
        Test that the common factor in x, y, z is removed from the relation.
        """
        t, gx, gy, gz = TXYZ.gens
        equation = ImplicitEquation("a", "w", (gz * gy + 1) * (t - gx))
        self.assertEqual(equation.scaled, t - gx)
        self.assertEqual(str(equation), "a - x")

    def test_numeric_residual_of_relation(self):
        """
        Test the residual of a² (wy + 1) - x² at an exact root.
        """
        equation = partner_bundle(x**2 / y).a_equation
        root = 2 / (1 + 0.5 * 3) ** 0.5
        self.assertAlmostEqual(abs(equation.residual(root, 2.0, 3.0, 0.5)), 0.0, places=12)


class TestCombinedOrbit(TestCase):

    def test_template_values(self):
        """
        Test that Vy/(zV + wy) gives W at (1, 0) and V at (0, 1).
        """
        orbit = x**2 / y
        template = CombinedOrbit(orbit * y, orbit, y)
        self.assertEqual(template.at(1, 0), y)
        self.assertEqual(template.at(0, 1), orbit)

    def test_reparametrized(self):
        """
        Test that the template of (F, mF + kG) is Ŵ(z + mw, kw).
        """
        template = CombinedOrbit(x * y, x, y)
        moved = template.reparametrized(2, 3)
        self.assertEqual(moved.at(5, 7), template.at(5 + 2 * 7, 3 * 7))

    def test_numeric_singularity(self):
        """
        Test that a vanishing denominator zR + wS raises SingularPointError.
        """
        template = CombinedOrbit(x * y, x, y)
        self.assertAlmostEqual(template.evaluate_numeric(1.0, 2.0, 1.0, 1.0).real, 2 / 3)
        with self.assertRaises(SingularPointError):
            template.evaluate_numeric(1.0, -1.0, 1.0, 1.0)


class TestCommutingFamily(TestCase):

    def test_normalization_of_quadratic_field(self):
        """
        Test that the quadratic field becomes x³/y • 0 in the chart A = y/W.
        """
        normalization = normalize_to_horizontal(QUADRATIC)
        self.assertEqual(normalization.normalized_field, VectorField(x**3 / y, 0))
        self.assertEqual(normalization.ratio, parse_rational_function("x^2/(x*y - y^2)"))

    def test_chart_orbit(self):
        """
        Test that the horizontal field x³/y • 0 has chart orbit 2x²/y.
        """
        self.assertEqual(chart_orbit(VectorField(x**3 / y, 0)), 2 * x**2 / y)
        self.assertEqual(chart_orbit(phi_field(x - y)), x - y)

    def test_quadratic_family(self):
        """
        Test that the partner of the quadratic field is -y³/(2x) • -y³/(2x).
        """
        family = commuting_family(QUADRATIC)
        partner = parse_rational_function("-y^3/(2*x)")
        self.assertEqual(family.partner, VectorField(partner, partner))
        self.assertTrue(commute_check(family.field, family.partner).commute)
        self.assertEqual(
            family.coordinates(VectorField.parse("y^3/x", "y^3/x")), (Fraction(0), Fraction(-2))
        )
        self.assertEqual(family.combined_orbit.at(1, 0), parse_rational_function("(x - y)*y^2/x^2"))

    def test_superflow_family(self):
        """
        Test that the superflow partner is -(x² - y²) • -(2xy - 2y²).
        """
        family = commuting_family(SUPERFLOW)
        self.assertEqual(family.partner, VectorField.parse("y^2 - x^2", "2*y^2 - 2*x*y"))
        self.assertEqual(family.member(2, 1), 2 * SUPERFLOW + family.partner)

    def test_with_partner_keeps_template_consistent(self):
        """
        Test that rebasing the family keeps W and rescales the partner orbit.
        """
        family = commuting_family(SUPERFLOW)
        rebased = family.with_partner(-1 * family.partner)
        self.assertEqual(rebased.combined_orbit.at(1, 0), x - y)
        self.assertEqual(rebased.combined_orbit.at(0, 1), -1 * family.combined_orbit.at(0, 1))
        with self.assertRaises(PreconditionError):
            family.with_partner(SUPERFLOW)

    def test_members_commute_with_field(self):
        """
        Test that every member zF + wG commutes with F.
        """
        family = commuting_family(QUADRATIC)
        rng = random.Random(5)
        for _ in range(100):
            z = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            w = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            self.assertTrue(commute_check(family.field, family.member(z, w)).commute)

    def test_level_zero_and_higher_levels_are_rejected(self):
        """
        Test the errors for level 0 and level 2 fields.
        """
        with self.assertRaises(LevelZeroError):
            commuting_family(VectorField(x**2, x * y))
        with self.assertRaises(NotLevelOneError):
            commuting_family(VectorField(-x * y, y**2))
