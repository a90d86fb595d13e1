"""Phase-one simplex over :class:`fractions.Fraction` for small feasibility LPs.

Only used to decide ``A x = b, x >= 0`` exactly when every coefficient is
rational.  Bland's rule keeps it cycle free; problem sizes here are tiny
(tens of rows), so a dense tableau is fine.
"""

from fractions import Fraction


def feasible_point(A, b):
    """Return a basic feasible ``x`` of ``A x = b, x >= 0`` or ``None``.

    ``A`` is a list of rows, ``b`` a list; entries must be ints or Fractions.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    # normalize so that b >= 0, then append one artificial per row
    tab = []
    for i in range(rows):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * a) for a in A[i]]
        row += [Fraction(1 if j == i else 0) for j in range(rows)]
        row.append(Fraction(sign * b[i]))
        tab.append(row)
    basis = [cols + i for i in range(rows)]
    width = cols + rows

    # objective: minimize sum of artificials -> reduced costs in terms of nonbasics
    obj = [Fraction(0)] * (width + 1)
    for row in tab:
        for j in range(width + 1):
            obj[j] -= row[j]
    for i in range(rows):
        obj[cols + i] = Fraction(0)

    while True:
        entering = next((j for j in range(width) if obj[j] < 0), None)
        if entering is None:
            break
        leave, best = None, None
        for i in range(rows):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # unbounded; impossible for phase one
            raise ArithmeticError("phase-one LP unbounded")
        _pivot(tab, obj, leave, entering)
        basis[leave] = entering

    if -obj[-1] != 0:
        return None
    x = [Fraction(0)] * cols
    for i, j in enumerate(basis):
        if j < cols:
            x[j] = tab[i][-1]
    return x


def _pivot(tab, obj, r, c):
    piv = tab[r][c]
    prow = [v / piv for v in tab[r]]
    tab[r] = prow
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [a - f * p for a, p in zip(row, prow)]
    if obj[c] != 0:
        f = obj[c]
        obj[:] = [a - f * p for a, p in zip(obj, prow)]
