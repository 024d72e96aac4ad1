import re
from tokenize import TokenError

from sympy import Symbol
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import convert_xor
from sympy.parsing.sympy_parser import parse_expr
from sympy.parsing.sympy_parser import standard_transformations
from sympy.polys.domains import QQ
from sympy.polys.fields import field
from sympy.polys.orderings import grlex

from projflow._errors import ParseError
from projflow.algebra._formatting import format_fraction
from projflow.algebra._rational_function import RationalFunction

_GRAMMAR = re.compile(r"[0-9xy+\-*/^()\s]+")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_FIELD = field("x,y", QQ, grlex)[0]
_SYMBOLS = {"x": Symbol("x"), "y": Symbol("y")}


def parse_rational_function(text: str) -> RationalFunction:
    """
    Parses an expression over integers, ``p/q`` rationals, the variables
    ``x`` and ``y``, the operators ``+ - * / ^`` (integer exponents) and
    parentheses.

    Raises:
        ParseError: ``text`` is outside the grammar or not rational.
    """
    if not isinstance(text, str) or _GRAMMAR.fullmatch(text) is None:
        raise ParseError(f"{text=} is outside the expression grammar")
    try:
        expression = parse_expr(
            text, local_dict=dict(_SYMBOLS), transformations=_TRANSFORMATIONS
        )
        fraction = _FIELD.from_expr(expression)
    except (
        SyntaxError,
        TokenError,
        TypeError,
        ValueError,
        ZeroDivisionError,
        SympifyError,
    ) as error:
        raise ParseError(
            f"{text=} is not a rational function of x and y"
        ) from error
    return RationalFunction(fraction.numer, fraction.denom)


def format_rational_function(f: RationalFunction) -> str:
    """
    Prints ``f`` so that ``parse_rational_function`` reads it back exactly.
    """
    return format_fraction(f.numer, f.denom)
