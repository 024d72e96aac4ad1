from fractions import Fraction
from typing import List
from typing import Optional
from typing import Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from projflow.algebra._rings import to_domain
from projflow.algebra._rings import to_scalar


def solve_over_qq(rows: Sequence[Sequence], rhs: Sequence) -> Optional[List]:
    """
    ``solve_linear_system`` on ``QQ`` elements, returning ``QQ`` elements.
    Exact scalars are accepted as well.
    """
    if not rows:
        return []
    width = len(rows[0])
    augmented = DomainMatrix(
        [
            [to_domain(value) for value in row] + [to_domain(value)]
            for row, value in zip(rows, rhs)
        ],
        (len(rows), width + 1),
        QQ,
    )
    reduced, pivots = augmented.rref()
    if width in pivots:
        return None
    solution = [QQ.zero] * width
    entries = reduced.to_list()
    for row_index, column in enumerate(pivots):
        solution[column] = entries[row_index][width]
    return solution


def solve_linear_system(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> Optional[List[Fraction]]:
    """
    Exact solution of ``rows @ v = rhs`` over the rationals by row
    reduction; free variables are set to 0.

    Returns:
        One solution, or None when the system is inconsistent.
    """
    solution = solve_over_qq(rows, rhs)
    if solution is None:
        return None
    return [to_scalar(value) for value in solution]
