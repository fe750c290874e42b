"""Dense exact linear algebra over Fraction.

Everything here is deterministic: elimination scans columns left to right
and picks the first nonzero pivot, so identical inputs give identical
reduced forms, kernel bases, and particular solutions on every run.
"""

from fractions import Fraction


def rref(rows, ncols):
    """Reduced row echelon form. Returns (new_rows, pivot_columns)."""
    m = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m, pivots


def nullspace(rows, ncols):
    """Deterministic kernel basis: one vector per free column, ascending."""
    m, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][free]
        basis.append(v)
    return basis


def solve_affine(rows, rhs, ncols):
    """Solve A u = b exactly.

    Returns (feasible, particular, kernel_basis); particular is None when
    the system is infeasible.
    """
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    m, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return False, None, []
    particular = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        particular[p] = m[i][ncols]
    kernel = nullspace(rows, ncols)
    return True, particular, kernel


def solve_sparse(equations, ncols):
    """Solve a sparse linear system given as [(col->coeff dict, rhs), ...].

    Rows are folded one at a time into an echelon basis keyed by leading
    column (first nonzero in column order), which keeps large structured
    systems with few nonzeros per row tractable.  Returns
    (feasible, particular, kernel_basis) with list-of-Fraction vectors;
    fully deterministic for a fixed equation order.
    """
    pivots = {}
    for row, rhs in equations:
        row = {c: Fraction(v) for c, v in row.items() if v}
        rhs = Fraction(rhs)
        while True:
            if not row:
                if rhs:
                    return False, None, []
                break
            lead = min(row)
            if lead not in pivots:
                inv = 1 / row[lead]
                pivots[lead] = ({c: v * inv for c, v in row.items()}, rhs * inv)
                break
            prow, prhs = pivots[lead]
            factor = row.pop(lead)
            for c, v in prow.items():
                if c == lead:
                    continue
                acc = row.get(c, Fraction(0)) - factor * v
                if acc:
                    row[c] = acc
                else:
                    row.pop(c, None)
            rhs -= factor * prhs

    order = sorted(pivots, reverse=True)

    def back_substitute(free_values, homogeneous):
        v = [Fraction(0)] * ncols
        for col, val in free_values.items():
            v[col] = val
        for p in order:
            prow, prhs = pivots[p]
            acc = Fraction(0) if homogeneous else prhs
            for c, coeff in prow.items():
                if c != p:
                    acc -= coeff * v[c]
            v[p] = acc
        return v

    particular = back_substitute({}, homogeneous=False)
    kernel = [
        back_substitute({f: Fraction(1)}, homogeneous=True)
        for f in range(ncols)
        if f not in pivots
    ]
    return True, particular, kernel
