"""
The worked examples: monomial orbits, the superflow, a quadratic and a
cubic field, each with a commuting partner and explicit flows.
"""

from fractions import Fraction

from projflow._errors import PreconditionError
from projflow.algebra import parse_rational_function
from projflow.algebra import RationalFunction
from projflow.algebra._rings import TXYZ
from projflow.examples._goldens import GOLDENS
from projflow.examples._goldens import monomial_goldens
from projflow.examples._record import ExampleRecord
from projflow.examples._record import IdentityCheck
from projflow.examples._record import SampleDomain
from projflow.examples._registry import ExampleRegistry
from projflow.fields import RationalFlow
from projflow.fields import VectorField
from projflow.numeric import chart_flows
from projflow.numeric import ClosedFormComposition
from projflow.numeric import ClosedFormFlow
from projflow.numeric import Expr
from projflow.numeric import ImplicitBranch
from projflow.numeric import ImplicitFlow
from projflow.numeric import RationalScaledFlow
from projflow.numeric import root
from projflow.numeric import RootAnchor
from projflow.numeric import variable
from projflow.partner import CombinedOrbit
from projflow.partner import ImplicitEquation
from projflow.partner import partner_bundle

EXAMPLES = ExampleRegistry()

X, Y, Z, W, T = variable("x"), variable("y"), variable("z"), variable("w"), variable("t")

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

# keeps both radicals of u and v real and the orbit template finite. The
# tracked root of the partner cubic meets the other two where 6wW = 1 with
# W = x²y²/(x - y)³, past w = 0.06 on this box; ψ is evaluated up to z + w.
CUBIC_CONE = SampleDomain(
    x_range=(-0.6, -0.5), y_range=(-1.3, -1.2), z_range=(0.0, 0.015), w_range=(0.0, 0.015)
)


@EXAMPLES.example("E1", variants=({"n": -2}, {"n": 0}, {"n": 1}, {"n": 2}))
def monomial(n: int = 1) -> ExampleRecord:
    """
    V = x^(n+1) y^(-n) with the flows

        φ = x(1 - V)^(-1/(n+1)) • y        ψ = x(y + 1)^(-n/(n+1)) • y/(y + 1)
    """
    if n == -1:
        raise PreconditionError(f"{n=} makes V = y, which has no partner")
    x, y = RationalFunction.x(), RationalFunction.y()
    orbit = x ** (n + 1) * y ** (-n)
    field = VectorField(Fraction(1, n + 1) * x ** (n + 2) * y ** (-n), 0)
    partner = VectorField(Fraction(-n, n + 1) * x * y, -(y**2))
    phi_exponent, psi_exponent = Fraction(-1, n + 1), Fraction(-n, n + 1)
    rational_flows = None
    if phi_exponent.denominator == 1:
        rational_flows = (
            RationalFlow(x * (1 - orbit) ** int(phi_exponent), y),
            RationalFlow(x * (y + 1) ** int(psi_exponent), y / (y + 1)),
        )
    phi = ClosedFormFlow(X * (1 - Z * X ** (n + 1) * Y ** (-n)) ** phi_exponent, Y)
    psi = ClosedFormFlow(X * (Z * Y + 1) ** psi_exponent, Y / (Z * Y + 1))
    chart_phi, chart_psi = chart_flows(partner_bundle(orbit))
    return ExampleRecord(
        f"E1:n={n}",
        f"monomial orbit V = x^{n + 1}*y^{-n}",
        field,
        partner,
        phi,
        psi,
        CombinedOrbit(orbit * y, orbit, y),
        SampleDomain(x_range=(0.5, 1.0), y_range=(0.8, 1.2)),
        monomial_goldens(n),
        rational_flows=rational_flows,
        identity=IdentityCheck(
            chart_phi, chart_psi, SampleDomain(x_range=(0.2, 0.4), y_range=(0.8, 1.2))
        ),
    )


def _superflow_composition() -> ClosedFormComposition:
    """
    φ^z ∘ ψ^w = (x + (z - w)s², y + zs²)/(1 - ws)² with s = x - y, which
    φ keeps fixed.
    """
    s = X - Y
    scale = (1 - W * s) ** 2
    return ClosedFormComposition((X + (Z - W) * s**2) / scale, (Y + Z * s**2) / scale)


@EXAMPLES.example("E2")
def superflow() -> ExampleRecord:
    """
    The rational flow x + (x-y)² • y + (x-y)² and its rational partner.
    """
    phi_flow = RationalFlow.parse("x + (x - y)^2", "y + (x - y)^2")
    psi_flow = RationalFlow.parse("(x - (x - y)^2)/(x - y - 1)^2", "y/(x - y - 1)^2")
    return ExampleRecord(
        "E2",
        "superflow",
        VectorField.parse("(x - y)^2", "(x - y)^2"),
        VectorField.parse("x^2 - y^2", "2*x*y - 2*y^2"),
        RationalScaledFlow(phi_flow),
        RationalScaledFlow(psi_flow),
        CombinedOrbit(
            parse_rational_function("(x - y)^2"),
            parse_rational_function("x - y"),
            RationalFunction.y(),
        ),
        SampleDomain(x_range=(1.0, 2.0), y_range=(0.2, 0.8)),
        GOLDENS["E2"],
        rational_flows=(phi_flow, psi_flow),
        composition=_superflow_composition(),
    )


@EXAMPLES.example("E3")
def quadratic() -> ExampleRecord:
    """
    The field (2x² - 3xy) • (xy - 2y²), whose flow and partner flow
    involve one square root each.
    """
    r = 1 - 2 * Z * (X - Y)
    sqrt_r = r**HALF
    d = X + Y + 2 * Z * Y**2
    phi = ClosedFormFlow(
        (X * Y * sqrt_r + X**2) / (d * r), (Y**2 * sqrt_r + X * Y) / (d * sqrt_r)
    )
    s = (1 - 2 * Z * Y**2 / X + 2 * Z * Y**3 / X**2) ** HALF
    psi = ClosedFormFlow((X - Y) * X * s / (X * s - Y), (X * Y - Y**2) / (X * s - Y))
    x, y = RationalFunction.x(), RationalFunction.y()
    return ExampleRecord(
        "E3",
        "quadratic field",
        VectorField.parse("2*x^2 - 3*x*y", "x*y - 2*y^2"),
        VectorField.parse("y^3/x", "y^3/x"),
        phi,
        psi,
        CombinedOrbit((x - y) * y**2, x**2, -(y**2)),
        SampleDomain(x_range=(1.0, 2.0), y_range=(0.2, 0.6)),
        GOLDENS["E3"],
        control_domain=SampleDomain(
            x_range=(1.0, 1.4),
            y_range=(0.3, 0.6),
            z_range=(0.2, 0.3),
            w_range=(0.2, 0.3),
        ),
    )


def _cardano(x: Expr, y: Expr, z: Expr) -> Expr:
    """
    The scaled first coordinate u(xz, yz)/z of the cubic flow; the second
    is the same with x and y exchanged.
    """
    p = y - 3 * x + 6 * x**2 * z
    q = x - 3 * y + 6 * y**2 * z
    s = root(p / q, HALF, RootAnchor.PRINCIPAL)
    cubes = root(x + y * s, THIRD, RootAnchor.REAL) + root(x - y * s, THIRD, RootAnchor.REAL)
    return cubes * x * (x - y) / (root(q, THIRD, RootAnchor.REAL) * p) - 2 * x**2 / p


def cubic_partner_equation() -> ImplicitEquation:
    """
    The scaled cubic relation of the partner coordinate a:

        (9ax - 8x² - 3ay)x²y² + (3y + 6y²w - x) a (ay - 3ax + 3x²)² = 0
    """
    t, x, y, z = TXYZ.gens
    poly = (9 * t * x - 8 * x**2 - 3 * t * y) * x**2 * y**2 + (
        3 * y + 6 * y**2 * z - x
    ) * t * (t * y - 3 * t * x + 3 * x**2) ** 2
    return ImplicitEquation("a", "w", poly)


@EXAMPLES.example("E4")
def cubic() -> ExampleRecord:
    """
    The field (2x² + xy) • (xy + 2y²): its flow by Cardano's formulas with
    real cube roots on the cone x - 3y > 0, y - 3x > 0, the partner flow
    a • b with a a root of a cubic and b = a²(y - 3x)/x² + 3a.
    """
    phi = ClosedFormFlow(_cardano(X, Y, Z), _cardano(Y, X, Z))
    psi = ImplicitFlow(
        ImplicitBranch.from_equation(cubic_partner_equation()),
        T**2 * (Y - 3 * X) / X**2 + 3 * T,
    )
    x, y = RationalFunction.x(), RationalFunction.y()
    return ExampleRecord(
        "E4",
        "cubic field",
        VectorField.parse("2*x^2 + x*y", "x*y + 2*y^2"),
        VectorField.parse("-x*y^3/(x - y)^2", "(3*x*y^3 - 2*y^4)/(x - y)^2"),
        phi,
        psi,
        CombinedOrbit(x**2 * y**2, (y - x) ** 3, y**2 * (3 * x - y)),
        CUBIC_CONE,
        GOLDENS["E4"],
        partner_equation=cubic_partner_equation(),
    )
