from projflow._errors import PreconditionError
from projflow.algebra import RationalFunction
from projflow.algebra import require_degree
from projflow.fields._vector_field import VectorField


def conjugate_field(ratio: RationalFunction, field: VectorField) -> VectorField:
    """
    Vector field of ℓ⁻¹ ∘ φ ∘ ℓ for the radial map ℓ(x, y) = (xA, yA):

        ϖ' = A ϖ - A_y (x ϱ - y ϖ)
        ϱ' = A ϱ + A_x (x ϱ - y ϖ)

    so that x ϱ' - y ϖ' = A (x ϱ - y ϖ).

    Raises:
        NotHomogeneousError: ``ratio`` is not 0-homogeneous.
        PreconditionError: ``ratio`` is zero.
    """
    if ratio.is_zero:
        raise PreconditionError("conjugation by A=0 is undefined")
    require_degree(ratio, 0, "A")
    cross = field.cross_term
    return VectorField(
        ratio * field.first - ratio.diff("y") * cross,
        ratio * field.second + ratio.diff("x") * cross,
    )
