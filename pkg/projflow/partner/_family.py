import logging
from fractions import Fraction
from typing import Optional
from typing import Tuple
from typing import Union

from projflow._errors import NotAlgebraicError
from projflow._errors import PreconditionError
from projflow.algebra import dehomogenize
from projflow.algebra import RationalFunction
from projflow.algebra import rehomogenize
from projflow.fields import conjugate_field
from projflow.fields import FieldPair
from projflow.fields import VectorField
from projflow.orbits import hermite_logpart
from projflow.partner._bundle import CombinedOrbit
from projflow.partner._bundle import partner_bundle
from projflow.partner._bundle import PartnerBundle
from projflow.partner._normalization import normalize_to_horizontal
from projflow.partner._normalization import NormalizationResult

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def chart_orbit(normalized: VectorField) -> RationalFunction:
    """
    The V with V²/V_x = ϖ for a horizontal field ϖ • 0, from
    -1/V = ∫ dx/ϖ with integration constant 0.

    Raises:
        NotAlgebraicError: the integral is not rational.
    """
    integral = hermite_logpart(dehomogenize(1 / normalized.first, -2))
    if not integral.is_rational:
        raise NotAlgebraicError(
            f"∫ dx/ϖ is not rational for ϖ={normalized.first}"
        )
    return rehomogenize(-1 / integral.rational_part, 1)


class CommutingFamily:
    """
    The fields zF + wG commuting with a level 1 field F.

    Args:
        field: F.
        partner: G, conjugated back from the horizontal chart.
        normalization: the chart of F.
        bundle: the partner bundle in the chart.
        combined_orbit: orbit template of zF + wG in the original
            coordinates.
    """

    def __init__(
        self,
        field: VectorField,
        partner: VectorField,
        normalization: NormalizationResult,
        bundle: PartnerBundle,
        combined_orbit: CombinedOrbit,
    ):
        self.field = field
        self.partner = partner
        self.normalization = normalization
        self.bundle = bundle
        self.combined_orbit = combined_orbit

    @property
    def basis(self) -> Tuple[VectorField, VectorField]:
        return self.field, self.partner

    def member(self, z: Scalar, w: Scalar) -> VectorField:
        return z * self.field + w * self.partner

    def coordinates(self, other: FieldPair) -> Optional[Tuple[Fraction, Fraction]]:
        """
        The constants (z, w) with other = zF + wG, or None when ``other``
        is outside the family.
        """
        f1, f2 = self.field
        g1, g2 = self.partner
        h1, h2 = other
        determinant = f1 * g2 - f2 * g1
        if determinant.is_zero:
            raise PreconditionError(f"{self.field} and {self.partner} are dependent")
        z = ((h1 * g2 - h2 * g1) / determinant).constant_value()
        w = ((f1 * h2 - f2 * h1) / determinant).constant_value()
        if z is None or w is None:
            return None
        return z, w

    def with_partner(self, partner: VectorField) -> "CommutingFamily":
        """
        The same family described by the basis (F, partner), where partner
        = mF + kG with k != 0; the orbit template is reparametrized.

        Raises:
            PreconditionError: ``partner`` is not of that form.
        """
        coordinates = self.coordinates(partner)
        if coordinates is None or coordinates[1] == 0:
            raise PreconditionError(f"{partner} does not complete F to a basis")
        m, k = coordinates
        return CommutingFamily(
            self.field,
            partner,
            self.normalization,
            self.bundle,
            self.combined_orbit.reparametrized(m, k),
        )

    def __repr__(self) -> str:
        return f"CommutingFamily(field={self.field}, partner={self.partner})"


def commuting_family(field: VectorField) -> CommutingFamily:
    """
    Builds a partner G with every zF + wG commuting with F: normalize F to
    a horizontal field, recover V in that chart, take the partner of V and
    conjugate it back.

    Raises:
        LevelZeroError: ``field`` has level 0.
        NotLevelOneError: ``field`` is not level 1.
        NotAlgebraicError: the horizontal chart has no rational V.
    """
    normalization = normalize_to_horizontal(field)
    orbit = chart_orbit(normalization.normalized_field)
    bundle = partner_bundle(orbit)
    ratio = normalization.ratio
    partner = conjugate_field(1 / ratio, bundle.psi_field)
    y = RationalFunction.y()
    combined = CombinedOrbit(orbit * y / ratio, orbit, y)
    logger.info(f"commuting partner of {field}: {partner}")
    return CommutingFamily(field, partner, normalization, bundle, combined)
