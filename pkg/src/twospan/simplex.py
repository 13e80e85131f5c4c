"""Exact linear programming over the rationals.

A dense two-phase primal simplex with Bland's rule.  The tableau is kept
fraction-free: every entry is an integer and the whole tableau carries one
positive integer denominator, so each pivot is three integer
multiplications and one exact division per entry.  Bland's rule makes the
method terminating and deterministic on every input.

Only what the cut LP needs is supported: minimize ``c . x`` subject to rows
``a . x >= b`` or ``a . x <= b`` with implicit ``x >= 0``.
"""

from __future__ import annotations

from fractions import Fraction

GE = ">="
LE = "<="


class LpInfeasibleError(ValueError):
    """The constraint system has no feasible point."""


class LpUnboundedError(ValueError):
    """The objective is unbounded below on the feasible region."""


def _to_int_row(coeffs, rhs) -> tuple[list[int], int]:
    """Scale one row to integers (multiply by the lcm of denominators)."""
    fr = [Fraction(c) for c in coeffs]
    fb = Fraction(rhs)
    denom = fb.denominator
    for c in fr:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    return [int(c * denom) for c in fr], int(fb * denom)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class _Tableau:
    """Scaled integer tableau: true value of cell (i, j) is T[i][j] / denom."""

    def __init__(self, nrows: int, ncols: int):
        self.rows: list[list[int]] = []
        self.rhs: list[int] = []
        self.obj: list[int] = [0] * ncols
        self.objrhs = 0
        self.denom = 1
        self.basis: list[int] = []
        self.ncols = ncols

    def pivot(self, r: int, c: int) -> None:
        rows, rhs, d = self.rows, self.rhs, self.denom
        prow = rows[r]
        p = prow[c]
        assert p > 0
        pr_rhs = rhs[r]
        for i in range(len(rows)):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for j in range(self.ncols):
                    row[j] = (row[j] * p - f * prow[j]) // d
                rhs[i] = (rhs[i] * p - f * pr_rhs) // d
            else:
                for j in range(self.ncols):
                    row[j] = row[j] * p // d
                rhs[i] = rhs[i] * p // d
        f = self.obj[c]
        obj = self.obj
        if f:
            for j in range(self.ncols):
                obj[j] = (obj[j] * p - f * prow[j]) // d
            self.objrhs = (self.objrhs * p - f * pr_rhs) // d
        else:
            for j in range(self.ncols):
                obj[j] = obj[j] * p // d
            self.objrhs = self.objrhs * p // d
        self.denom = p
        self.basis[r] = c

    def set_objective(self, costs: list[int]) -> None:
        """Load reduced costs for a phase: obj[j] = denom*c_j - sum c_B T[i][j]."""
        d = self.denom
        obj = [c * d for c in costs]
        objrhs = 0
        for i, b in enumerate(self.basis):
            cb = costs[b]
            if cb:
                row = self.rows[i]
                for j in range(self.ncols):
                    obj[j] -= cb * row[j]
                objrhs -= cb * self.rhs[i]
        self.obj = obj
        self.objrhs = objrhs

    def run(self, allowed: int) -> None:
        """Bland pivoting until optimal; entering columns must be < allowed."""
        rows, rhs = self.rows, self.rhs
        while True:
            obj = self.obj
            enter = -1
            for j in range(allowed):
                if obj[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return
            leave = -1
            lb = lcoef = 0
            for i in range(len(rows)):
                a = rows[i][enter]
                if a > 0:
                    if leave < 0 or rhs[i] * lcoef < lb * a or (
                        rhs[i] * lcoef == lb * a
                        and self.basis[i] < self.basis[leave]
                    ):
                        leave, lb, lcoef = i, rhs[i], a
            if leave < 0:
                raise LpUnboundedError("objective unbounded below")
            self.pivot(leave, enter)

    def value(self) -> Fraction:
        return Fraction(-self.objrhs, self.denom)


def lp_minimize(objective, rows) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Minimize ``objective . x`` s.t. the given rows and ``x >= 0``.

    ``rows`` is a sequence of ``(coeffs, sense, rhs)`` with sense ``">="``
    or ``"<="``.  Returns ``(optimal value, x)`` exactly.
    """
    nv = len(objective)
    int_rows = []
    for coeffs, sense, rhs in rows:
        if len(coeffs) != nv:
            raise ValueError("row length mismatch")
        a, b = _to_int_row(coeffs, rhs)
        if b < 0:  # normalize to nonnegative rhs, flipping the sense
            a = [-x for x in a]
            b = -b
            sense = GE if sense == LE else LE
        int_rows.append((a, sense, b))
    nrows = len(int_rows)
    # columns: structural | one slack/surplus per row | one artificial per row
    ncols = nv + 2 * nrows
    t = _Tableau(nrows, ncols)
    art_used = []
    for i, (a, sense, b) in enumerate(int_rows):
        row = a + [0] * (2 * nrows)
        row[nv + i] = 1 if sense == LE else -1
        if sense == LE:
            t.basis.append(nv + i)
            art_used.append(False)
        else:
            row[nv + nrows + i] = 1
            t.basis.append(nv + nrows + i)
            art_used.append(True)
        t.rows.append(row)
        t.rhs.append(b)

    scale = _objective_scale(objective)
    cobj = [int(Fraction(c) * scale) for c in objective] + [0] * (2 * nrows)
    if any(art_used):
        phase1 = [0] * ncols
        for i, used in enumerate(art_used):
            if used:
                phase1[nv + nrows + i] = 1
        t.set_objective(phase1)
        t.run(allowed=nv + nrows)  # artificials may only leave
        if t.objrhs != 0:
            raise LpInfeasibleError("no feasible point")
        _drive_out_artificials(t, nv, nrows)
    t.set_objective(cobj)
    t.run(allowed=nv + nrows)
    x = [Fraction(0)] * nv
    for i, b in enumerate(t.basis):
        if b < nv:
            x[b] = Fraction(t.rhs[i], t.denom)
    return Fraction(t.value(), scale), tuple(x)


def _objective_scale(objective) -> int:
    denom = 1
    for c in objective:
        cd = Fraction(c).denominator
        denom = denom * cd // _gcd(denom, cd)
    return denom


def _drive_out_artificials(t: _Tableau, nv: int, nrows: int) -> None:
    """Pivot basic artificials (at value 0) onto real columns where possible.

    A row whose real columns are all zero is redundant; it is kept with its
    artificial basic at value zero, which later pivots cannot disturb.
    """
    for i in range(len(t.rows)):
        if t.basis[i] >= nv + nrows:
            col = -1
            for j in range(nv + nrows):
                if t.rows[i][j] != 0:
                    col = j
                    break
            if col < 0:
                continue
            if t.rows[i][col] < 0:
                # the row is an equality with rhs 0; negating keeps it valid
                t.rows[i] = [-x for x in t.rows[i]]
                t.rhs[i] = -t.rhs[i]
            t.pivot(i, col)
