"""
Evaluators of scaled flows φ^z(p) = φ(pz)/z.
"""

from abc import ABC
from abc import abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Optional
from typing import Tuple

from projflow._settings import DEFAULT_SETTINGS
from projflow._settings import Settings
from projflow.algebra import RationalFunction
from projflow.fields import BirationalMap
from projflow.fields import FieldPair
from projflow.fields import RationalFlow
from projflow.numeric._continuation import branch_eval
from projflow.numeric._continuation import ImplicitBranch
from projflow.numeric._continuation import implicit_eval
from projflow.numeric._expr import Expr
from projflow.numeric._expr import from_polynomial
from projflow.numeric._expr import Variable
from projflow.numeric._integrate import flow_integrate
from projflow.partner import partner_bundle
from projflow.partner import PartnerBundle

Point = Tuple[complex, complex]


class ScaledFlow(ABC):
    """
    A one-parameter projective flow evaluated in scaled form.
    """

    settings: Settings = DEFAULT_SETTINGS

    @abstractmethod
    def __call__(self, point: Point, z: float) -> Point:
        """
        Returns φ^z(point).
        """


class ClosedFormFlow(ScaledFlow):
    """
    A flow given by expressions in x, y and the parameter z.
    """

    def __init__(self, u: Expr, v: Expr, settings: Settings = DEFAULT_SETTINGS):
        self.u = u
        self.v = v
        self.settings = settings

    def __call__(self, point: Point, z: float) -> Point:
        env = {"x": point[0], "y": point[1]}
        return (
            branch_eval(self.u, env, z, settings=self.settings),
            branch_eval(self.v, env, z, settings=self.settings),
        )


class RationalScaledFlow(ClosedFormFlow):
    """
    A rational flow u • v, evaluated through u(xz, yz)/z written without
    the removable singularity at z = 0.
    """

    def __init__(self, flow: RationalFlow, settings: Settings = DEFAULT_SETTINGS):
        (u_numer, u_denom), (v_numer, v_denom) = flow.scaled_polynomials()
        super().__init__(
            from_polynomial(u_numer) / from_polynomial(u_denom),
            from_polynomial(v_numer) / from_polynomial(v_denom),
            settings,
        )
        self.flow = flow


class IntegratedFlow(ScaledFlow):
    """
    The flow of a vector field by numerical integration.
    """

    def __init__(self, field: FieldPair, settings: Settings = DEFAULT_SETTINGS):
        self.field = field
        self.settings = settings

    def __call__(self, point: Point, z: float) -> Point:
        x, y = flow_integrate(
            self.field, (point[0].real, point[1].real), z, settings=self.settings
        )
        return complex(x), complex(y)


class ImplicitFlow(ScaledFlow):
    """
    A flow whose first coordinate is an implicit branch; the second is an
    expression in x, y, z and the first coordinate, named t.
    """

    def __init__(
        self,
        branch: ImplicitBranch,
        second: Expr,
        settings: Settings = DEFAULT_SETTINGS,
    ):
        self.branch = branch
        self.second = second
        self.settings = settings

    def __call__(self, point: Point, z: float) -> Point:
        env = {"x": point[0], "y": point[1]}
        first = implicit_eval(self.branch, env, z, settings=self.settings)
        second = branch_eval(
            self.second, {**env, "t": first}, z, settings=self.settings
        )
        return first, second


class ConjugatedFlow(ScaledFlow):
    """
    m⁻¹ ∘ φ^z ∘ m for a 1-homogeneous birational map m.
    """

    def __init__(self, flow: ScaledFlow, map: BirationalMap):
        self.flow = flow
        self.map = map
        self.inverse = map.inverse()

    def __call__(self, point: Point, z: float) -> Point:
        moved = self.map.apply((complex(point[0]), complex(point[1])))
        return self.inverse.apply(self.flow(moved, z))


class CombinationFlow(ScaledFlow):
    """
    The flow w -> φ^(mw) ∘ ψ^(kw) of mF + kG for commuting F and G with
    flows φ and ψ.
    """

    def __init__(self, first: ScaledFlow, second: ScaledFlow, m: Fraction, k: Fraction):
        self.first = first
        self.second = second
        self.m = float(m)
        self.k = float(k)

    def __call__(self, point: Point, z: float) -> Point:
        moved = self.second(point, self.k * z)
        if self.m == 0:
            return moved
        return self.first(moved, self.m * z)


class ComposedFlow:
    """
    (z, w) -> φ^z ∘ ψ^w.
    """

    def __init__(self, first: ScaledFlow, second: ScaledFlow):
        self.first = first
        self.second = second

    def __call__(self, point: Point, z: float, w: float) -> Point:
        return self.first(self.second(point, w), z)


class ClosedFormComposition:
    """
    (z, w) -> expressions in x, y, z and w, continued in z at fixed w.
    """

    def __init__(self, u: Expr, v: Expr, settings: Settings = DEFAULT_SETTINGS):
        self.u = u
        self.v = v
        self.settings = settings

    def __call__(self, point: Point, z: float, w: float) -> Point:
        env = {"x": point[0], "y": point[1], "w": w}
        return (
            branch_eval(self.u, env, z, settings=self.settings),
            branch_eval(self.v, env, z, settings=self.settings),
        )


def chart_flows(
    bundle: PartnerBundle, settings: Settings = DEFAULT_SETTINGS
) -> Tuple[ImplicitFlow, ImplicitFlow]:
    """
    The flows of ``bundle.phi_field`` and ``bundle.psi_field``: u • y and
    a • y/(zy + 1).
    """
    y, z = Variable("y"), Variable("z")
    phi = ImplicitFlow(ImplicitBranch.from_equation(bundle.u_equation), y, settings)
    psi = ImplicitFlow(
        ImplicitBranch.from_equation(bundle.a_equation), y / (z * y + 1), settings
    )
    return phi, psi


@lru_cache(maxsize=64)
def _cached_chart_flows(orbit: RationalFunction) -> Tuple[ImplicitFlow, ImplicitFlow]:
    return chart_flows(partner_bundle(orbit))


def solve_partner_pointwise(
    orbit: RationalFunction,
    point: Tuple[float, float],
    z: float,
    settings: Optional[Settings] = None,
) -> Tuple[complex, complex]:
    """
    The scaled values (a, u) at ``point``: the branches of

        V(a, y/(zy + 1)) = V(x, y)      V(u, y) = V/(1 - zV)

    continued from a = u = x at z = 0.

    Raises:
        ContinuationError: the branches cannot be followed to ``z``.
    """
    phi, psi = _cached_chart_flows(orbit)
    settings = settings or DEFAULT_SETTINGS
    env = {"x": point[0], "y": point[1]}
    a = implicit_eval(psi.branch, env, z, settings=settings)
    u = implicit_eval(phi.branch, env, z, settings=settings)
    return a, u
