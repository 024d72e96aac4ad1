import io
import json
import tempfile
from contextlib import redirect_stderr
from contextlib import redirect_stdout
from pathlib import Path
from unittest import TestCase

from projflow import DegenerateOrbitError
from projflow import NotAlgebraicError
from projflow import ParseError
from projflow import UndecidedError
from projflow.algebra import RationalFunction
from projflow.cli import exit_code_for
from projflow.cli import ExitCode
from projflow.cli import main
from projflow.cli import parse_perturbation
from projflow.fields import VectorField

x, y = RationalFunction.x(), RationalFunction.y()


def run(*argv: str) -> int:
    with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
        return main(list(argv))


class TestExitCodes(TestCase):

    def test_error_mapping(self):
        """
        Test that errors map to the documented exit codes.
        """
        self.assertEqual(exit_code_for(ParseError("bad")), ExitCode.PARSE)
        self.assertEqual(exit_code_for(DegenerateOrbitError("V = y")), ExitCode.PRECONDITION)
        self.assertEqual(exit_code_for(NotAlgebraicError("log")), ExitCode.PRECONDITION)
        self.assertEqual(exit_code_for(UndecidedError("limit")), ExitCode.UNDECIDED)
        self.assertEqual([int(code) for code in ExitCode], [0, 1, 2, 3, 4])


class TestPerturbation(TestCase):

    def test_components(self):
        """
        Test that alpha and beta perturbations land in the right component.
        """
        self.assertEqual(parse_perturbation("beta:+y^2"), VectorField(0, y**2))
        self.assertEqual(parse_perturbation("alpha:x*y"), VectorField(x * y, 0))

    def test_malformed_perturbation(self):
        """
        Test that a missing or unknown component raises ParseError.
        """
        for text in ("y^2", "gamma:y^2", "beta:y^2 +"):
            with self.assertRaises(ParseError, msg=text):
                parse_perturbation(text)


class TestCommands(TestCase):

    def test_analyze(self):
        """
        Test that analysing the quadratic field succeeds.
        """
        self.assertEqual(run("analyze", "--field", "2*x^2 - 3*x*y", "x*y - 2*y^2"), 0)

    def test_analyze_writes_json(self):
        """
        Test the JSON document of the analyze command.
        """
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "analyze.json"
            self.assertEqual(run("analyze", "--field", "(x - y)^2", "(x - y)^2", "--json", str(path)), 0)
            document = json.loads(path.read_text())
        self.assertEqual(document["orbit"]["kind"], "finite")
        self.assertEqual(document["orbit"]["level"], 1)
        self.assertTrue(document["level1"])
        self.assertEqual(len(document["family"]["basis"]), 2)

    def test_partner(self):
        """
        Test that the partner pair of x - y commutes.
        """
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "partner.json"
            self.assertEqual(run("partner", "--orbit", "x - y", "--json", str(path)), 0)
            document = json.loads(path.read_text())
        self.assertTrue(document["commute"])
        self.assertIn("a_equation", document)

    def test_parse_error(self):
        """
        Test that a malformed expression exits with code 2.
        """
        self.assertEqual(run("partner", "--orbit", "x + ("), 2)
        self.assertEqual(run("verify", "--example", "E1:n"), 2)

    def test_precondition_error(self):
        """
        Test that violated preconditions exit with code 3.
        """
        self.assertEqual(run("partner", "--orbit", "3*y"), 3)
        self.assertEqual(run("analyze", "--field", "x^3", "y^2"), 3)
        self.assertEqual(run("verify", "--example", "E9"), 3)

    def test_verify_example_writes_reports(self):
        """
        Test that verifying the superflow passes and writes every report.
        """
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "verify.json"
            self.assertEqual(run("verify", "--example", "E2", "--seed", "3", "--json", str(path)), 0)
            document = json.loads(path.read_text())
        self.assertEqual(document["schema_version"], 1)
        self.assertEqual(len(document["reports"]), 13)
        self.assertTrue(all(report["pass"] and report["seed"] == 3 for report in document["reports"]))

    def test_verify_cubic_example_passes(self):
        """
        Test that verifying the cubic field exits 0 with the default sample count.
        """
        self.assertEqual(run("verify", "--example", "E4", "--seed", "3"), 0)

    def test_tolerance_override_fails_checks(self):
        """
        Test that an impossibly strict tolerance makes verification fail.
        """
        self.assertEqual(run("verify", "--example", "E2", "--tol", "0"), 1)

    def test_command_is_required(self):
        """
        Test that argparse rejects a missing command.
        """
        with self.assertRaises(SystemExit):
            run()
