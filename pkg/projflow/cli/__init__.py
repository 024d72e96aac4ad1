"""
Command line front end.

Usage:
```
projflow analyze --field "2*x^2-3*x*y" "x*y-2*y^2"
projflow partner --orbit "x^2/y"
projflow verify --example E3 --seed 7 --json report.json
projflow verify --example E3 --perturb "beta:+y^2"
projflow examples --verify
```

Exit codes: 0 pass, 1 a check failed, 2 parse error, 3 precondition
violated, 4 undecided.
"""

from projflow.cli._commands import parse_perturbation
from projflow.cli._commands import run_analyze
from projflow.cli._commands import run_examples
from projflow.cli._commands import run_partner
from projflow.cli._commands import run_verify
from projflow.cli._commands import write_json
from projflow.cli._exit_codes import exit_code_for
from projflow.cli._exit_codes import ExitCode
from projflow.cli._main import build_parser
from projflow.cli._main import configure_logging
from projflow.cli._main import main

__all__ = [
    "ExitCode",
    "build_parser",
    "configure_logging",
    "exit_code_for",
    "main",
    "parse_perturbation",
    "run_analyze",
    "run_examples",
    "run_partner",
    "run_verify",
    "write_json",
]
