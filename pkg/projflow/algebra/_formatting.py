from fractions import Fraction

from sympy.polys.rings import PolyElement

from projflow.algebra._rings import to_scalar


def format_scalar(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_polynomial(poly: PolyElement) -> str:
    """
    Prints ``poly`` in the input grammar (``^`` for powers, ``p/q`` scalars).
    """
    if not poly:
        return "0"
    names = [str(symbol) for symbol in poly.ring.symbols]
    text = ""
    for index, (monom, coeff) in enumerate(poly.terms()):
        value = to_scalar(coeff)
        factors = [
            name if exponent == 1 else f"{name}^{exponent}"
            for name, exponent in zip(names, monom)
            if exponent
        ]
        magnitude = abs(value)
        if not factors:
            body = format_scalar(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_scalar(magnitude)] + factors)
        if index == 0:
            text = f"-{body}" if value < 0 else body
        else:
            text += f" - {body}" if value < 0 else f" + {body}"
    return text


def format_fraction(numer: PolyElement, denom: PolyElement) -> str:
    if denom == denom.ring.one:
        return format_polynomial(numer)
    return f"({format_polynomial(numer)})/({format_polynomial(denom)})"
