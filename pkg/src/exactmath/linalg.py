from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.exactmath.polynomial import to_fraction


def solve_linear(
    rows: Sequence[Dict[int, Fraction]], rhs: Sequence[Fraction], ncols: int
) -> Optional[List[Fraction]]:
    """
    Exact particular solution of a sparse linear system over the rationals.

    Each row maps column index to coefficient. Free variables are set to
    zero. Returns None when the system is inconsistent.
    """
    if ncols == 0:
        return [] if all(not b for b in rhs) else None
    if not rows:
        return [Fraction(0)] * ncols
    dense = []
    for row, b in zip(rows, rhs):
        line = [QQ(0)] * (ncols + 1)
        for j, c in row.items():
            line[j] = QQ(c.numerator, c.denominator)
        line[ncols] = QQ(b.numerator, b.denominator)
        dense.append(line)
    matrix = DomainMatrix(dense, (len(dense), ncols + 1), QQ)
    reduced, pivots = matrix.rref()
    if ncols in pivots:
        return None
    entries = reduced.to_Matrix()
    solution = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        solution[p] = to_fraction(entries[i, ncols]) / to_fraction(entries[i, p])
    return solution


def rank(rows: Sequence[Dict[int, Fraction]], ncols: int) -> int:
    """Exact rank of a sparse rational matrix given by its rows."""
    if ncols == 0 or not rows:
        return 0
    dense = []
    for row in rows:
        line = [QQ(0)] * ncols
        for j, c in row.items():
            line[j] = QQ(c.numerator, c.denominator)
        dense.append(line)
    _, pivots = DomainMatrix(dense, (len(dense), ncols), QQ).rref()
    return len(pivots)
