from projflow.fields._vector_field import FieldPair


def lie_bracket(first: FieldPair, second: FieldPair) -> FieldPair:
    """
    Lie bracket of ``first = ϖ•ϱ`` and ``second = α•β``:

        (ϖ α_x + ϱ α_y - α ϖ_x - β ϖ_y) • (ϖ β_x + ϱ β_y - α ϱ_x - β ϱ_y)

    The result is returned as a raw pair since its components are
    3-homogeneous (or zero).
    """
    varpi, rho = first
    alpha, beta = second

    def derivative(f):
        return varpi * f.diff("x") + rho * f.diff("y")

    return FieldPair(
        derivative(alpha) - alpha * varpi.diff("x") - beta * varpi.diff("y"),
        derivative(beta) - alpha * rho.diff("x") - beta * rho.diff("y"),
    )


def commutation_system(first: FieldPair, second: FieldPair) -> FieldPair:
    """
    Residuals of the commutation system

        ϖ_x α + ϖ_y β = ϖ α_x + ϱ α_y
        ϱ_x α + ϱ_y β = ϖ β_x + ϱ β_y

    written as (left - right) for each equation.
    """
    varpi, rho = first
    alpha, beta = second
    return FieldPair(
        varpi.diff("x") * alpha
        + varpi.diff("y") * beta
        - varpi * alpha.diff("x")
        - rho * alpha.diff("y"),
        rho.diff("x") * alpha
        + rho.diff("y") * beta
        - varpi * beta.diff("x")
        - rho * beta.diff("y"),
    )


class CommutationResult:
    """
    Outcome of an exact commutation test.

    Args:
        witness: the reduced residual pair of the commutation system; zero
            exactly when the fields commute.
    """

    def __init__(self, witness: FieldPair):
        self.witness = witness

    @property
    def commute(self) -> bool:
        return self.witness.is_zero

    def __bool__(self) -> bool:
        return self.commute

    def __repr__(self) -> str:
        return f"CommutationResult(commute={self.commute}, witness={self.witness})"


def commute_check(first: FieldPair, second: FieldPair) -> CommutationResult:
    """
    Decides exactly whether the flows of two vector fields commute, i.e.
    whether their Lie bracket vanishes identically.
    """
    return CommutationResult(commutation_system(first, second))
