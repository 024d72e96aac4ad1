from projflow._errors import LevelZeroError
from projflow.algebra import RationalFunction
from projflow.fields import FieldPair


def orbit_trace(field: FieldPair) -> RationalFunction:
    """
    The trace T = (2ϱ + xϱ_x - yϖ_x)/(xϱ - yϖ) of the linear system
    satisfied by the fields commuting with ``field``.

    Raises:
        LevelZeroError: xϱ - yϖ vanishes identically.
    """
    x, y = RationalFunction.x(), RationalFunction.y()
    varpi, rho = field
    cross = x * rho - y * varpi
    if cross.is_zero:
        raise LevelZeroError(f"{field} has level 0, its trace is undefined")
    return (2 * rho + x * rho.diff("x") - y * varpi.diff("x")) / cross
