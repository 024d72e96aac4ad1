"""
The four commands. Each prints a plain text report, optionally writes a
JSON document and returns its exit code.
"""

import json
import logging
from pathlib import Path
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from projflow._errors import NotAlgebraicError
from projflow._errors import ParseError
from projflow._settings import DEFAULT_SETTINGS
from projflow._settings import Settings
from projflow.algebra import parse_rational_function
from projflow.cli._exit_codes import ExitCode
from projflow.examples import EXAMPLES
from projflow.examples import ExampleRecord
from projflow.examples import SampleDomain
from projflow.fields import commute_check
from projflow.fields import VectorField
from projflow.numeric import reports_document
from projflow.numeric import VerificationReport
from projflow.orbits import level1_check
from projflow.orbits import LevelKind
from projflow.orbits import orbit_function
from projflow.partner import commuting_family
from projflow.partner import partner_bundle

logger = logging.getLogger(__name__)

_PERTURBED_COMPONENTS = {"alpha": 0, "first": 0, "beta": 1, "second": 1}


def write_json(path: Optional[Path], document: Dict[str, Any]) -> None:
    if path is None:
        return
    path.write_text(json.dumps(document, indent=2, sort_keys=True) + "\n")
    logger.info(f"wrote {path}")


def parse_perturbation(text: str) -> VectorField:
    """
    ``"beta:+y^2"`` becomes the field 0 • y².

    Raises:
        ParseError: the component or the expression is malformed.
        NotHomogeneousError: the expression is not 2-homogeneous.
    """
    name, separator, expression = text.partition(":")
    if not separator or name not in _PERTURBED_COMPONENTS:
        raise ParseError(
            f"{text=} is not <component>:<expression> with component one of "
            f"{sorted(_PERTURBED_COMPONENTS)}"
        )
    value = parse_rational_function(expression.strip())
    if _PERTURBED_COMPONENTS[name] == 0:
        return VectorField(value, 0)
    return VectorField(0, value)


def run_analyze(
    field_text: Tuple[str, str],
    settings: Settings = DEFAULT_SETTINGS,
    json_path: Optional[Path] = None,
) -> ExitCode:
    """
    Level classification of a field, its orbit function and, for level 1,
    the basis of the commuting family.
    """
    field = VectorField.parse(*field_text)
    report = orbit_function(field)
    document: Dict[str, Any] = {
        "field": [str(component) for component in field],
        "orbit": report.to_dict(),
    }
    print(f"field: {field}")
    if report.kind is LevelKind.ZERO:
        print("level: 0")
    elif report.kind is LevelKind.NOT_FINITE:
        print("level: not finite")
    else:
        print(f"level: {report.level}")
        print(f"W^{report.level}: {report.orbit_power}")
    if report.trace is not None:
        print(f"trace: {report.trace}")
    for factor, residue in report.residues:
        print(f"residue {residue} at {factor}")
    if report.kind is not LevelKind.ZERO:
        level1 = level1_check(field, settings)
        document["level1"] = level1
        print(f"level 1 criterion: {'holds' if level1 else 'fails'}")
    if report.W is not None:
        try:
            family = commuting_family(field)
        except NotAlgebraicError as error:
            print(f"no rational partner: {error}")
        else:
            document["family"] = {
                "basis": [[str(c) for c in member] for member in family.basis],
                "combined_orbit": str(family.combined_orbit),
            }
            print(f"commuting family: z*F + w*G with G = {family.partner}")
            print(f"orbits of zF + wG: {family.combined_orbit}")
    write_json(json_path, document)
    return ExitCode.PASS


def run_partner(
    orbit_text: str, json_path: Optional[Path] = None
) -> ExitCode:
    """
    The partner bundle of V and an exact commutation check of its fields.
    """
    bundle = partner_bundle(parse_rational_function(orbit_text))
    result = commute_check(bundle.phi_field, bundle.psi_field)
    document = {**bundle.to_dict(), "commute": result.commute}
    for key, value in document.items():
        print(f"{key}: {value}")
    write_json(json_path, document)
    return ExitCode.PASS if result.commute else ExitCode.FAIL


def _print_reports(reports: Sequence[VerificationReport]) -> None:
    for report in reports:
        status = "pass" if report.passed else "FAIL"
        print(
            f"{report.check.value:<12}{report.label or '':<24}"
            f"{report.max_residual:<12.3e}{report.tolerance:<10.1e}{status}"
        )


def run_verify(
    example_id: Optional[str] = None,
    orbit_text: Optional[str] = None,
    box: Tuple[float, float, float, float] = (0.5, 1.0, 0.8, 1.2),
    seed: int = 7,
    settings: Settings = DEFAULT_SETTINGS,
    perturbation: Optional[str] = None,
    json_path: Optional[Path] = None,
) -> ExitCode:
    """
    Numeric checks of a registered example, or of the partner pair of a
    given V sampled on ``box`` = (x0, x1, y0, y1).
    """
    if example_id is not None:
        record: ExampleRecord = EXAMPLES.resolve(example_id)
    elif orbit_text is not None:
        domain = SampleDomain(x_range=box[:2], y_range=box[2:])
        record = ExampleRecord.from_orbit(parse_rational_function(orbit_text), domain)
    else:
        raise ParseError("verify needs --example or --orbit")
    perturbed = None if perturbation is None else parse_perturbation(perturbation)
    reports = record.verify(seed=seed, settings=settings, perturbation=perturbed)
    _print_reports(reports)
    write_json(json_path, reports_document(reports))
    return ExitCode.PASS if all(report.passed for report in reports) else ExitCode.FAIL


def run_examples(
    verify: bool = False,
    seed: int = 7,
    settings: Settings = DEFAULT_SETTINGS,
    json_path: Optional[Path] = None,
) -> ExitCode:
    """
    Re-derives every registered example from its field and compares with
    the goldens; with ``verify`` the numeric checks run as well.
    """
    failed = False
    rows: List[Dict[str, Any]] = []
    reports: List[VerificationReport] = []
    for record in EXAMPLES.resolve_all():
        diffs = record.rederive(settings)
        row: Dict[str, Any] = {
            "id": record.example_id,
            "title": record.title,
            "W": str(record.orbit),
            "diffs": [diff._asdict() for diff in diffs],
        }
        failed = failed or bool(diffs)
        status = "ok" if not diffs else f"{len(diffs)} diffs"
        if verify:
            checks = record.verify(seed=seed, settings=settings)
            reports.extend(checks)
            passed = sum(report.passed for report in checks)
            row["checks_passed"] = passed
            row["checks"] = len(checks)
            failed = failed or passed < len(checks)
            status += f", {passed}/{len(checks)} checks"
        rows.append(row)
        print(f"{record.example_id:<10}{record.title:<40}{status}")
        for diff in diffs:
            print(f"    {diff.key}: expected {diff.expected}, got {diff.actual}")
    document: Dict[str, Any] = {"examples": rows}
    if verify:
        document.update(reports_document(reports))
    write_json(json_path, document)
    return ExitCode.FAIL if failed else ExitCode.PASS
