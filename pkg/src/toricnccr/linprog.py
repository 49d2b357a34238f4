"""Exact rational linear feasibility (phase-one simplex, Bland's rule).

Small dense tableau over ``Fraction``.  Used for sign-vector realizability
and for the relaxations inside the integer feasibility search; problem
sizes are a few dozen variables at most.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    sense: str  # one of "==", "<=", ">="
    rhs: Fraction


def constraint(coeffs: Sequence, sense: str, rhs) -> Constraint:
    if sense not in ("==", "<=", ">="):
        raise ValueError(f"unknown constraint sense {sense!r}")
    return Constraint(tuple(Fraction(c) for c in coeffs), sense, Fraction(rhs))


def find_feasible(n: int, constraints: Sequence[Constraint],
                  lower: Optional[Sequence] = None,
                  upper: Optional[Sequence] = None) -> Optional[list[Fraction]]:
    """Return a point satisfying every constraint and bound, or ``None``.

    ``lower[j]`` / ``upper[j]`` may be ``None`` for an unbounded side.  When
    the system is feasible the returned point is a vertex of the shifted
    standard-form polyhedron, so it is often integral for nice inputs.
    """
    lower = list(lower) if lower is not None else [None] * n
    upper = list(upper) if upper is not None else [None] * n
    for lo, hi in zip(lower, upper):
        if lo is not None and hi is not None and lo > hi:
            return None

    # Substitute each original variable by standard nonnegative columns:
    # x = lo + y, x = hi - y, or x = y+ - y-.
    cols = []  # per original var: list of (std_col, sign), offset
    offsets = []
    nstd = 0
    extra_rows = []
    for j in range(n):
        lo, hi = lower[j], upper[j]
        if lo is not None:
            cols.append([(nstd, 1)])
            offsets.append(Fraction(lo))
            if hi is not None:
                extra_rows.append(({nstd: Fraction(1)}, "<=", Fraction(hi) - Fraction(lo)))
            nstd += 1
        elif hi is not None:
            cols.append([(nstd, -1)])
            offsets.append(Fraction(hi))
            nstd += 1
        else:
            cols.append([(nstd, 1), (nstd + 1, -1)])
            offsets.append(Fraction(0))
            nstd += 2

    rows = []
    for con in constraints:
        if len(con.coeffs) != n:
            raise ValueError("constraint length does not match variable count")
        row = {}
        rhs = con.rhs
        for j, a in enumerate(con.coeffs):
            if a == 0:
                continue
            rhs -= a * offsets[j]
            for c, sgn in cols[j]:
                row[c] = row.get(c, Fraction(0)) + sgn * a
        rows.append((row, con.sense, rhs))
    rows.extend(extra_rows)

    # slacks
    nslack = sum(1 for _, s, _ in rows if s != "==")
    width = nstd + nslack
    A = []
    b = []
    k = nstd
    for row, sense, rhs in rows:
        line = [Fraction(0)] * width
        for c, a in row.items():
            line[c] = a
        if sense == "<=":
            line[k] = Fraction(1)
            k += 1
        elif sense == ">=":
            line[k] = Fraction(-1)
            k += 1
        if rhs < 0:
            line = [-x for x in line]
            rhs = -rhs
        A.append(line)
        b.append(rhs)

    y = _phase_one(A, b, width)
    if y is None:
        return None
    x = []
    for j in range(n):
        val = offsets[j]
        for c, sgn in cols[j]:
            val += sgn * y[c]
        x.append(val)
    return x


def _phase_one(A, b, width):
    """Feasibility of ``A y = b, y >= 0`` with ``b >= 0``."""
    m = len(A)
    if m == 0:
        return [Fraction(0)] * width
    total = width + m
    # tableau rows: coefficients | rhs
    T = [A[i] + [Fraction(int(i == r)) for r in range(m)] + [b[i]] for i in range(m)]
    basis = [width + i for i in range(m)]
    # objective: minimise sum of artificials -> reduced costs
    obj = [Fraction(0)] * (total + 1)
    for i in range(m):
        for c in range(total + 1):
            obj[c] -= T[i][c]
    for i in range(m):
        obj[width + i] += 1
    while True:
        enter = next((c for c in range(total) if obj[c] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen in phase one (bounded below by 0)
            break
        _pivot(T, obj, leave, enter)
        basis[leave] = enter
    if obj[-1] != 0:
        return None
    y = [Fraction(0)] * width
    for i, c in enumerate(basis):
        if c < width:
            y[c] = T[i][-1]
    return y


def _pivot(T, obj, r, c):
    pv = T[r][c]
    T[r] = [x / pv for x in T[r]]
    pr = T[r]
    for i in range(len(T)):
        if i != r:
            f = T[i][c]
            if f:
                T[i] = [x - f * y for x, y in zip(T[i], pr)]
    f = obj[c]
    if f:
        obj[:] = [x - f * y for x, y in zip(obj, pr)]
