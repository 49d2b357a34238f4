"""Naive reference implementations.

Nothing here shares code with the fast paths (no representability table,
no residue bookkeeping, no LP): agreement between the two is evidence,
not a tautology.
"""
from __future__ import annotations

import itertools
from typing import Sequence

MAX_CANDIDATES = 30


def brute_S(pos: Sequence[int], neg: Sequence[int], window: int) -> set[int]:
    """Non-CM weights in ``[-window, window]`` by enumerating coefficient
    vectors ``N + sum c_i a_i`` directly."""
    N = sum(pos)
    gens = sorted(set(list(pos) + [-x for x in neg]))
    if window < N:
        return set()
    budget = window - N

    sums = set()

    def walk(i, acc):
        if i == len(gens):
            sums.add(acc)
            return
        c = 0
        while acc + c * gens[i] <= budget:
            walk(i + 1, acc + c * gens[i])
            c += 1

    walk(0, 0)
    plus = {N + s for s in sums}
    return plus | {-x for x in plus}


def brute_maximal_cliques(S: set[int], window: int) -> list[tuple]:
    """Maximal cliques containing 0, normalised to minimum 0.

    ``S`` must cover ``[-2*window, 2*window]``.  Candidates are the integers
    ``z`` in ``[-window, window]`` with ``z`` not in ``S``; every subset
    containing 0 is explored by include/exclude recursion.
    """
    cands = [z for z in range(-window, window + 1) if z != 0 and z not in S]
    if len(cands) + 1 > MAX_CANDIDATES:
        raise ValueError(f"search space too large: {len(cands) + 1} candidates (limit {MAX_CANDIDATES})")

    def ok(a, b):
        return (a - b) not in S and (b - a) not in S

    cliques = []

    def rec(i, chosen):
        if i == len(cands):
            cliques.append(tuple(chosen))
            return
        z = cands[i]
        if all(ok(z, m) for m in chosen):
            rec(i + 1, chosen + [z])
        rec(i + 1, chosen)

    rec(0, [0])
    maximal = []
    for c in cliques:
        members = set(c)
        if any(z not in members and all(ok(z, m) for m in c) for z in cands):
            continue
        lo = min(c)
        maximal.append(tuple(sorted(x - lo for x in c)))
    return sorted(set(maximal))


def brute_local_weights(config, cls, mu, box: int) -> bool:
    """Bounded search for ``mu`` in the local weight form of ``cls``.

    ``a_i, b_i`` range over ``[0, box]`` and ``c_i`` over ``[-box, box]``.
    True is conclusive; False only means no witness inside the box.
    """
    if box < 1:
        raise ValueError("box must be at least 1")
    if isinstance(mu, int):
        mu = (mu,)
    ws = config.weights
    s = config.rank
    signs = [sum(l * a for l, a in zip(cls.witness, w)) for w in ws]
    plus = [i for i, v in enumerate(signs) if v > 0]
    minus = [i for i, v in enumerate(signs) if v < 0]
    zero = [i for i, v in enumerate(signs) if v == 0]
    base = [-sum(ws[i][k] for i in plus) for k in range(s)]
    ranges = ([range(0, box + 1)] * (len(plus) + len(minus))
              + [range(-box, box + 1)] * len(zero))
    for coeffs in itertools.product(*ranges):
        v = list(base)
        for c, i in zip(coeffs, plus + minus + zero):
            sgn = -1 if i in plus else 1
            for k in range(s):
                v[k] += sgn * c * ws[i][k]
        if tuple(v) == tuple(mu):
            return True
    return False
