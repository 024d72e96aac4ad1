from projflow.algebra import RationalFunction
from projflow.algebra import require_degree
from projflow.fields._rational_flow import RationalFlow
from projflow.fields._vector_field import FieldPair


def is_level0(field: FieldPair) -> bool:
    """
    True iff y*ϖ - x*ϱ vanishes identically (orbits are lines through 0).
    """
    x, y = RationalFunction.x(), RationalFunction.y()
    return (y * field.first - x * field.second).is_zero


def compose_level0(jump: RationalFunction, kick: RationalFunction) -> RationalFlow:
    """
    Composition of the level 0 flows x/(1-J) • y/(1-J) and x/(1-K) • y/(1-K):

        x/(1 - J - K) • y/(1 - J - K)

    Raises:
        NotHomogeneousError: J or K is not 1-homogeneous.
    """
    require_degree(jump, 1, "J")
    require_degree(kick, 1, "K")
    denominator = 1 - jump - kick
    return RationalFlow(
        RationalFunction.x() / denominator, RationalFunction.y() / denominator
    )
