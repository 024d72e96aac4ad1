import logging
from fractions import Fraction
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict

from projflow._settings import DEFAULT_SETTINGS
from projflow._settings import Settings
from projflow.algebra import parse_rational_function
from projflow.algebra import RationalFunction
from projflow.algebra._rings import TXY_T
from projflow.algebra._rings import XY
from projflow.fields import commute_check
from projflow.fields import conjugate_field
from projflow.fields import field_of_rational_flow
from projflow.fields import mirror_field
from projflow.fields import RationalFlow
from projflow.fields import VectorField
from projflow.numeric import chart_flows
from projflow.numeric import ClosedFormComposition
from projflow.numeric import CombinationFlow
from projflow.numeric import ConjugatedFlow
from projflow.numeric import IntegratedFlow
from projflow.numeric import SamplePlan
from projflow.numeric import ScaledFlow
from projflow.numeric import singular_loci
from projflow.numeric import verify_agreement
from projflow.numeric import verify_boundary
from projflow.numeric import verify_commute
from projflow.numeric import verify_composition
from projflow.numeric import verify_identity
from projflow.numeric import verify_implicit_pde
from projflow.numeric import verify_orbit
from projflow.numeric import verify_pde
from projflow.numeric import verify_translation
from projflow.numeric import VerificationReport
from projflow.orbits import beta_from_W
from projflow.orbits import level1_check
from projflow.orbits import LevelKind
from projflow.orbits import orbit_function
from projflow.orbits import scalar_ratio
from projflow.partner import CombinedOrbit
from projflow.partner import commuting_family
from projflow.partner import ImplicitEquation
from projflow.partner import partner_bundle
from projflow.partner import psi_field

logger = logging.getLogger(__name__)

Interval = Tuple[float, float]

_TEMPLATE_PROBES = ((1, 0), (0, 1), (1, 1), (2, 3))


class SampleDomain(BaseModel):
    """
    The box sampled for an example, chosen so that every branch involved
    stays real and clear of its singular curves.
    """

    model_config = ConfigDict(frozen=True)

    x_range: Interval
    y_range: Interval
    z_range: Interval = (0.0, 0.1)
    w_range: Interval = (0.0, 0.1)

    def plan(self, seed: int, settings: Settings = DEFAULT_SETTINGS) -> SamplePlan:
        sampling = settings.sampling
        return SamplePlan(
            seed=seed,
            count=sampling.count,
            x_range=self.x_range,
            y_range=self.y_range,
            z_range=self.z_range,
            w_range=self.w_range,
            exclusion_radius=sampling.exclusion_radius,
            oversampling=sampling.oversampling,
        )


class GoldenDiff(NamedTuple):
    example: str
    key: str
    expected: str
    actual: str


class IdentityCheck(NamedTuple):
    phi: ScaledFlow
    psi: ScaledFlow
    domain: SampleDomain


class ExampleRecord:
    """
    A worked example: a level 1 field F with a commuting partner G, their
    flows in scaled form, the orbit template of φ^z ∘ ψ^w and the box
    on which all of it is checked.

    Args:
        example_id: registry id, ``"E3"`` or ``"E1:n=2"``.
        title: one line description.
        field: F.
        partner: G.
        phi: evaluator of the flow of F.
        psi: evaluator of the flow of G.
        combined_orbit: Ŵ(z, w), constant along φ^z ∘ ψ^w.
        domain: sampling box.
        goldens: expected values of the re-derivation, as expression
            strings.
        rational_flows: the two flows when they are rational.
        identity: flows and box for the identity check at parameter 1.
        control_domain: sampling box for perturbed partners.
        composition: closed form of φ^z ∘ ψ^w.
        partner_equation: relation E(a, x, y, w) = 0 of the first
            coordinate of ψ when it is implicit.
    """

    def __init__(
        self,
        example_id: str,
        title: str,
        field: VectorField,
        partner: VectorField,
        phi: ScaledFlow,
        psi: ScaledFlow,
        combined_orbit: CombinedOrbit,
        domain: SampleDomain,
        goldens: Dict[str, str],
        rational_flows: Optional[Tuple[RationalFlow, RationalFlow]] = None,
        identity: Optional[IdentityCheck] = None,
        control_domain: Optional[SampleDomain] = None,
        composition: Optional[ClosedFormComposition] = None,
        partner_equation: Optional[ImplicitEquation] = None,
    ):
        self.example_id = example_id
        self.title = title
        self.field = field
        self.partner = partner
        self.phi = phi
        self.psi = psi
        self.combined_orbit = combined_orbit
        self.domain = domain
        self.goldens = goldens
        self.rational_flows = rational_flows
        self.identity = identity
        self.control_domain = control_domain
        self.composition = composition
        self.partner_equation = partner_equation

    @classmethod
    def from_orbit(cls, orbit: RationalFunction, domain: SampleDomain) -> "ExampleRecord":
        """
        The record of the partner pair built from a 1-homogeneous V, its
        flows given by the implicit relations of the bundle.

        Raises:
            NotHomogeneousError: V is not 1-homogeneous.
            DegenerateOrbitError: V = c*y.
        """
        bundle = partner_bundle(orbit)
        phi, psi = chart_flows(bundle)
        return cls(
            f"V={orbit}",
            "partner pair of a given orbit function",
            bundle.phi_field,
            bundle.psi_field,
            phi,
            psi,
            bundle.combined_orbit,
            domain,
            goldens={},
        )

    @property
    def orbit(self) -> RationalFunction:
        """
        The orbit function of F, Ŵ(1, 0).
        """
        return self.combined_orbit.at(1, 0)

    @property
    def partner_orbit(self) -> RationalFunction:
        return self.combined_orbit.at(0, 1)

    def loci(self, partner: Optional[VectorField] = None) -> List:
        partner = self.partner if partner is None else partner
        return singular_loci(*self.field, *partner, self.orbit, self.partner_orbit)

    def derived_flows(
        self, settings: Settings = DEFAULT_SETTINGS
    ) -> Tuple[ScaledFlow, Optional[ScaledFlow]]:
        """
        The flows of F and G rebuilt from F alone: the chart flows of the
        commuting family carried back by the inverse of the normalizing
        map. G = mF + kG' for the built partner G' becomes φ^(mw) ∘ ψ'^(kw);
        the second flow is None when G has no such form.
        """
        family = commuting_family(self.field)
        back = family.normalization.map.inverse()
        chart_phi, chart_psi = chart_flows(family.bundle, settings)
        phi = ConjugatedFlow(chart_phi, back)
        coordinates = family.coordinates(self.partner)
        if coordinates is None or not coordinates[1]:
            logger.warning(f"{self.example_id}: {self.partner} is not mF + kG'")
            return phi, None
        m, k = coordinates
        return phi, CombinationFlow(phi, ConjugatedFlow(chart_psi, back), m, k)

    def verify(
        self,
        seed: int = 7,
        settings: Settings = DEFAULT_SETTINGS,
        perturbation: Optional[VectorField] = None,
    ) -> List[VerificationReport]:
        """
        Runs every numeric check of the example, including the agreement of
        phi and psi with the flows rebuilt by ``derived_flows``. With
        ``perturbation`` the partner becomes G + perturbation, its flow is
        integrated numerically and the control box is sampled; the
        commutation check is then expected to fail.
        """
        partner, psi, domain = self.partner, self.psi, self.domain
        if perturbation is not None:
            partner = self.partner + perturbation
            psi = IntegratedFlow(partner, settings=settings)
            domain = self.control_domain or self.domain
            logger.info(f"{self.example_id}: partner perturbed to {partner}")
        plan = domain.plan(seed, settings)
        loci = self.loci(partner)
        name = self.example_id
        common = dict(loci=loci, settings=settings)
        reports = [
            verify_translation(self.phi, plan, label=f"{name} phi", **common),
            verify_translation(psi, plan, label=f"{name} psi", **common),
            verify_pde(self.phi, self.field, plan, label=f"{name} phi", **common),
            verify_pde(psi, partner, plan, label=f"{name} psi", **common),
            verify_commute(self.phi, psi, plan, label=name, **common),
            verify_orbit(self.phi, self.orbit, plan, label=f"{name} phi", **common),
            verify_orbit(psi, self.partner_orbit, plan, label=f"{name} psi", **common),
            verify_orbit(
                self.phi,
                self.combined_orbit,
                plan,
                second=psi,
                label=f"{name} phi∘psi",
                **common,
            ),
            verify_boundary(self.phi, self.field, plan, label=f"{name} phi", **common),
            verify_boundary(psi, partner, plan, label=f"{name} psi", **common),
        ]
        if perturbation is None:
            derived_phi, derived_psi = self.derived_flows(settings)
            reports.append(
                verify_agreement(self.phi, derived_phi, plan, label=f"{name} phi", **common)
            )
            if derived_psi is not None:
                reports.append(
                    verify_agreement(psi, derived_psi, plan, label=f"{name} psi", **common)
                )
        if self.composition is not None and perturbation is None:
            reports.append(
                verify_composition(self.phi, psi, self.composition, plan, label=name, **common)
            )
        if self.partner_equation is not None and perturbation is None:
            reports.append(
                verify_implicit_pde(
                    psi, self.partner_equation, partner, plan, label=f"{name} a", **common
                )
            )
        if self.identity is not None and perturbation is None:
            reports.append(
                verify_identity(
                    self.identity.phi,
                    self.identity.psi,
                    self.identity.domain.plan(seed, settings),
                    label=name,
                    **common,
                )
            )
        failed = [report for report in reports if not report.passed]
        logger.info(
            f"{name}: {len(reports) - len(failed)} of {len(reports)} checks pass"
        )
        return reports

    def rederive(self, settings: Settings = DEFAULT_SETTINGS) -> List[GoldenDiff]:
        """
        Rebuilds the orbit function, the partner, the orbit template and
        the flow relations from F alone and compares them with the goldens
        and with the record. Returns the differences, empty when all agree.
        """
        diffs: List[GoldenDiff] = []

        def expect(key: str, expected, actual) -> None:
            if expected != actual:
                diffs.append(GoldenDiff(self.example_id, key, str(expected), str(actual)))

        report = orbit_function(self.field)
        expect("level", f"{LevelKind.FINITE.value} 1", f"{report.kind.value} {report.level}")
        if report.W is None:
            return diffs
        if "W" in self.goldens:
            golden_orbit = parse_rational_function(self.goldens["W"])
            if not scalar_ratio(report.W, golden_orbit):
                expect("W", golden_orbit, report.W)
        expect("level1_check", True, level1_check(self.field, settings))
        expect("commute", True, commute_check(self.field, self.partner).commute)

        family = commuting_family(self.field)
        coordinates = family.coordinates(self.partner)
        if "partner_scale" in self.goldens:
            scale = Fraction(self.goldens["partner_scale"])
            expect("partner_scale", (Fraction(0), scale), coordinates)
        if coordinates is not None and coordinates[1]:
            template = family.with_partner(self.partner).combined_orbit
            expect("combined_orbit", True, _same_template(template, self.combined_orbit))

        if "beta" in self.goldens:
            expect("beta", parse_rational_function(self.goldens["beta"]), beta_from_W(self.field, report.W))
        if "mirror" in self.goldens:
            c, d = (Fraction(part) for part in self.goldens["mirror"].split(","))
            expect("mirror", c * self.field + d * self.partner, mirror_field(self.partner))
        if "chart" in self.goldens:
            ratio, orbit = (
                parse_rational_function(part) for part in self.goldens["chart"].split(";")
            )
            expect("chart", psi_field(orbit), conjugate_field(ratio, self.field))
        for key, equation in (("u", family.bundle.u_equation), ("a", family.bundle.a_equation)):
            if key in self.goldens:
                expect(key, parse_rational_function(self.goldens[key]), linear_solution(equation))
        if self.rational_flows is not None:
            phi_flow, psi_flow = self.rational_flows
            expect("phi_field", self.field, field_of_rational_flow(phi_flow))
            expect("psi_field", self.partner, field_of_rational_flow(psi_flow))

        for diff in diffs:
            logger.warning(f"{diff.example} {diff.key}: expected {diff.expected}, got {diff.actual}")
        return diffs

    def __repr__(self) -> str:
        return f"ExampleRecord({self.example_id!r}, {self.title!r})"


def _same_template(first: CombinedOrbit, second: CombinedOrbit) -> bool:
    """
    True when the two templates agree up to one constant factor.
    """
    ratios = set()
    for z, w in _TEMPLATE_PROBES:
        ratios.add(scalar_ratio(first.at(z, w), second.at(z, w)))
    return len(ratios) == 1 and None not in ratios and Fraction(0) not in ratios


def linear_solution(equation: ImplicitEquation) -> Optional[RationalFunction]:
    """
    The unscaled solution t = -c0/c1 of a relation of degree 1 in t, None
    for higher degrees.
    """
    poly = equation.unscaled
    if poly.degree(TXY_T) != 1:
        return None
    parts: List[dict] = [{}, {}]
    for (k, i, j), coeff in poly.terms():
        parts[k][(i, j)] = coeff
    constant, slope = (XY.from_dict(part) for part in parts)
    return RationalFunction(-constant) / RationalFunction(slope)
