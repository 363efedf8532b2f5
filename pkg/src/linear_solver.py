"""Exact linear systems over Q via sympy's DomainMatrix RREF."""
from fractions import Fraction

from src.poly import rational_from_native
from src.types import LinearSolution, RowReduction


def row_reduce(matrix: list[list[Fraction]]) -> RowReduction:
    """Reduce [M | I] so the right-hand side of any later system can be pushed through the same operations."""
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if any(len(row) != cols for row in matrix):
        raise ValueError("Not all rows are of equal length")
    if rows == 0:
        return RowReduction(reduced=(), pivots=(), transform=(), columns=cols)

    augmented = []
    for i, row in enumerate(matrix):
        entries = [Fraction(a) for a in row] + [Fraction(int(i == j)) for j in range(rows)]
        augmented.append([QQ(a.numerator, a.denominator) for a in entries])
    rref, pivots = DomainMatrix(augmented, (rows, cols + rows), QQ).rref()

    reduced, transform = [], []
    for row in rref.to_list():
        values = [rational_from_native(a) for a in row]
        reduced.append(tuple(values[:cols]))
        transform.append(tuple(values[cols:]))
    return RowReduction(
        reduced=tuple(reduced),
        pivots=tuple(p for p in pivots if p < cols),
        transform=tuple(transform),
        columns=cols,
    )


def reduce_rhs(reduction: RowReduction, rhs: list) -> tuple[list, list]:
    """
    Push b through the row operations.

    Returns the values the pivot variables take when every free variable is 0, and the
    compatibility conditions (entries that must vanish for M·x = b to be solvable).
    Entries of b may be Fractions or sympy expressions.
    """
    if len(rhs) != len(reduction.transform):
        raise ValueError(f"Matrix has {len(reduction.transform)} rows but rhs has {len(rhs)} entries")
    transformed = [sum((e * b for e, b in zip(row, rhs) if e != 0), 0) for row in reduction.transform]
    return transformed[: reduction.rank], transformed[reduction.rank:]


def nullspace(reduction: RowReduction) -> list[tuple[Fraction, ...]]:
    """One basis vector per free column, ascending; the free column itself carries a 1."""
    pivot_set = set(reduction.pivots)
    basis = []
    for c in range(reduction.columns):
        if c in pivot_set:
            continue
        v = [Fraction(0)] * reduction.columns
        v[c] = Fraction(1)
        for r, p in enumerate(reduction.pivots):
            v[p] = -reduction.reduced[r][c]
        basis.append(tuple(v))
    return basis


def solve_linear_system(matrix: list[list[Fraction]], rhs: list[Fraction]) -> LinearSolution | None:
    """
    Solve M·x = b exactly.

    Returns None when the system is inconsistent. Otherwise returns the particular
    solution with every free variable set to 0, plus a nullspace basis with one
    vector per free column (ascending column order).
    """
    if len(matrix) != len(rhs):
        raise ValueError(f"Matrix has {len(matrix)} rows but rhs has {len(rhs)} entries")
    reduction = row_reduce(matrix)
    values, conditions = reduce_rhs(reduction, [Fraction(b) for b in rhs])
    if any(c != 0 for c in conditions):
        return None

    particular = [Fraction(0)] * reduction.columns
    for p, value in zip(reduction.pivots, values):
        particular[p] = Fraction(value)
    return LinearSolution(particular=tuple(particular), nullspace=tuple(nullspace(reduction)))
