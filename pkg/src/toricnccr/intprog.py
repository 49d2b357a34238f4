"""Exact integer feasibility for ``A x = t`` with sign constraints on some columns.

Free (unconstrained) columns are removed first: with the Smith form
``U F V = D`` of the free block, ``t - P y`` lies in the lattice spanned by
the free columns iff the rows of ``U (t - P y)`` past the rank vanish and the
leading rows are divisible by the invariant factors.  What remains is a
nonnegative integer problem with equations and congruences, decided by
depth-first branch and bound over exact LP relaxations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Optional, Sequence

from . import lattice
from .errors import BudgetExceeded
from .linprog import constraint, find_feasible

DEFAULT_BUDGET = 10**6


@dataclass
class _Reduced:
    eq_rows: list       # (coeffs over y, rhs)
    cong_rows: list     # (coeffs over y, rhs, modulus)
    U: list
    V: list
    diag: list
    rank: int


def _reduce(A, t, pos_cols, free_cols) -> _Reduced:
    m = len(A)
    P = [[A[i][j] for j in pos_cols] for i in range(m)]
    if not free_cols:
        return _Reduced([(P[i], t[i]) for i in range(m)], [], lattice.identity(m), [], [], 0)
    Fm = [[A[i][j] for j in free_cols] for i in range(m)]
    U, D, V = lattice.smith_normal_form(Fm)
    diag = [D[i][i] for i in range(min(m, len(free_cols)))]
    r = sum(1 for x in diag if x != 0)
    UP = lattice.matmul(U, P) if pos_cols else [[] for _ in range(m)]
    Ut = lattice.matvec(U, t)
    eqs = [(UP[i], Ut[i]) for i in range(r, m)]
    congs = [(UP[i], Ut[i], diag[i]) for i in range(r) if diag[i] != 1]
    return _Reduced(eqs, congs, U, V, diag, r)


def _lattice_solvable(A, t) -> bool:
    """Whether ``A x = t`` has any integer solution, ignoring signs."""
    U, D, _ = lattice.smith_normal_form(A)
    Ut = lattice.matvec(U, t)
    for i, v in enumerate(Ut):
        d = D[i][i] if i < len(D[i]) else 0
        if (d == 0 and v != 0) or (d != 0 and v % d):
            return False
    return True


def _congruences_ok(congs, y) -> Optional[int]:
    """Index of the first violated congruence, or None."""
    for k, (row, rhs, mod) in enumerate(congs):
        if (sum(a * v for a, v in zip(row, y)) - rhs) % mod:
            return k
    return None


def find_integer_solution(matrix: Sequence[Sequence[int]], target: Sequence[int],
                          nonneg_mask: Sequence[bool],
                          budget: int = DEFAULT_BUDGET) -> Optional[list[int]]:
    """An integer ``x`` with ``matrix @ x == target`` and ``x[j] >= 0`` where
    ``nonneg_mask[j]``; ``None`` if none exists.

    Raises :class:`BudgetExceeded` when ``budget`` branch-and-bound nodes are
    used up without a verdict.
    """
    A = [list(map(int, row)) for row in matrix]
    t = [int(x) for x in target]
    m = len(A)
    if len(t) != m:
        raise ValueError(f"dimension mismatch: {m} rows but target of length {len(t)}")
    n = len(nonneg_mask)
    if any(len(row) != n for row in A):
        raise ValueError(f"dimension mismatch: mask has {n} entries, rows have {[len(r) for r in A]}")
    # without this, an unsatisfiable congruence on an unbounded relaxation
    # would send the search on forever
    if n and not _lattice_solvable(A, t):
        return None
    pos_cols = [j for j in range(n) if nonneg_mask[j]]
    free_cols = [j for j in range(n) if not nonneg_mask[j]]
    red = _reduce(A, t, pos_cols, free_cols)
    k = len(pos_cols)
    eq_cons = [constraint(row, "==", rhs) for row, rhs in red.eq_rows]

    y = _branch_and_bound(k, eq_cons, red.cong_rows, budget)
    if y is None:
        return None
    x = [0] * n
    for j, v in zip(pos_cols, y):
        x[j] = v
    if free_cols:
        P = [[A[i][j] for j in pos_cols] for i in range(m)]
        rest = [ti - sum(a * v for a, v in zip(P[i], y)) for i, ti in enumerate(t)]
        w = lattice.matvec(red.U, rest)
        zp = [w[i] // red.diag[i] if i < red.rank else 0 for i in range(len(free_cols))]
        z = lattice.matvec(red.V, zp)
        for j, v in zip(free_cols, z):
            x[j] = v
    # the reduction is exact; this guards the bookkeeping above
    assert lattice.matvec(A, x) == t
    return x


def integer_feasibility(matrix, target, nonneg_mask, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether ``matrix @ x == target`` has an integer solution with
    ``x[j] >= 0`` for the masked columns."""
    return find_integer_solution(matrix, target, nonneg_mask, budget) is not None


def _branch_and_bound(k, eq_cons, congs, budget):
    stack = [([Fraction(0)] * k, [None] * k)]
    nodes = 0
    while stack:
        lo, hi = stack.pop()
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(budget)
        x = find_feasible(k, eq_cons, lo, hi)
        if x is None:
            continue
        frac = next((j for j, v in enumerate(x) if v.denominator != 1), None)
        if frac is not None:
            v = x[frac]
            lo_up = list(lo)
            lo_up[frac] = Fraction(ceil(v))
            hi_down = list(hi)
            hi_down[frac] = Fraction(floor(v))
            stack.append((lo_up, hi))
            stack.append((lo, hi_down))
            continue
        y = [int(v) for v in x]
        bad = _congruences_ok(congs, y)
        if bad is None:
            return y
        row, _, mod = congs[bad]
        j = next((j for j in range(k) if row[j] % mod and (hi[j] is None or lo[j] < hi[j])), None)
        if j is None:
            continue  # every variable that moves this residue is pinned
        v = y[j]
        left = list(hi)
        left[j] = Fraction(v - 1)
        mid_lo, mid_hi = list(lo), list(hi)
        mid_lo[j] = mid_hi[j] = Fraction(v)
        right = list(lo)
        right[j] = Fraction(v + 1)
        stack.append((right, hi))
        stack.append((lo, left))
        stack.append((mid_lo, mid_hi))
    return None
