"""
Pinned results of re-deriving each worked example from its vector field.

``W`` is compared up to a constant factor. ``partner_scale`` is k in
G = k * G', G' being the partner built by ``commuting_family``. ``u`` and
``a`` are the unscaled flow coordinates when their relations are linear.
``mirror`` holds (c, d) with mirror(G) = cF + dG. ``chart`` holds A and V
with conjugate_field(A, F) = psi_field(V).
"""

from typing import Dict
from typing import Final

GOLDENS: Final[Dict[str, Dict[str, str]]] = {
    "E1:n=-2": {"W": "y", "partner_scale": "1", "u": "x - y^2", "a": "x/(y + 1)^2"},
    "E1:n=0": {"W": "y", "partner_scale": "1", "u": "x/(1 - x)", "a": "x"},
    "E1:n=1": {"W": "y", "partner_scale": "1"},
    "E1:n=2": {"W": "y", "partner_scale": "1"},
    # 2xy - 2y^2 is the exact integral; 2xy - y^2 does not commute with F
    "E2": {"W": "x - y", "partner_scale": "-1", "beta": "2*x*y - 2*y^2"},
    "E3": {"W": "(x - y)*y^2/x^2", "partner_scale": "-2", "beta": "y^3/(2*x)"},
    "E4": {
        "W": "x^2*y^2/(x - y)^3",
        "partner_scale": "-6",
        "mirror": "-1,-1",
        "chart": "y*(y - 3*x)/(6*x^2);(3*x - y)*y^3/(x - y)^3",
    },
}


def monomial_goldens(n: int) -> Dict[str, str]:
    """
    Goldens of the monomial example for any n; the orbit of F is y and the
    partner comes out unscaled for every n.
    """
    return GOLDENS.get(f"E1:n={n}", {"W": "y", "partner_scale": "1"})
