"""Rank-one data: the non-Cohen-Macaulay weights as a shifted semigroup.

For a faithful unimodular weight list on the one-dimensional torus put
``gens = positive weights + negated negative weights`` and ``N = sum of the
positive weights``.  The non-CM weights are ``S = S_plus u (-S_plus)`` where
``S_plus = N + <gens>`` (nonnegative integer combinations).  Everything past
``N + F`` (``F`` the Frobenius number of ``gens``) lies in ``S_plus``, so the
CM set is finite and contained in ``[-B, B]`` with ``B = N + F``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import ConfigError, NotFaithful, NotUnimodular, OneSided
from .weights import WeightConfig, strip_zero_weights

log = logging.getLogger(__name__)


def representable_table(gens: Sequence[int], limit: int) -> list[bool]:
    """``table[n]`` says whether ``n`` is a nonnegative combination of gens,
    for ``0 <= n <= limit``."""
    table = [False] * (limit + 1)
    if limit < 0:
        return table
    table[0] = True
    for g in sorted(set(gens)):
        for n in range(g, limit + 1):
            if table[n - g]:
                table[n] = True
    return table


def frobenius_number(gens: Sequence[int]) -> int:
    """Largest integer not representable by ``gens``; -1 if there is none."""
    gens = [int(g) for g in gens]
    if not gens or any(g <= 0 for g in gens):
        raise ConfigError("generators must be positive integers")
    g = 0
    for a in gens:
        g = gcd(g, a)
    if g != 1:
        raise ConfigError(f"generators have gcd {g}, not 1")
    if 1 in gens:
        return -1
    # F < (min-1)(max-1) <= max^2
    bound = max(gens) ** 2
    table = representable_table(gens, bound)
    return max((n for n in range(bound + 1) if not table[n]), default=-1)


@dataclass(frozen=True)
class Rank1Data:
    pos: tuple
    neg: tuple
    gens: tuple
    N: int
    F: int
    B: int
    rep_table: tuple  # over [0, max(F, 0)]

    def representable(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.F:
            return True
        return self.rep_table[n]


def build_rank1(config: WeightConfig) -> Rank1Data:
    if config.rank != 1:
        raise ConfigError(f"rank-one data needs rank 1, got rank {config.rank}")
    if any(w[0] == 0 for w in config.weights):
        log.warning("stripping %d zero weight(s); they do not affect the CM property",
                    sum(1 for w in config.weights if w[0] == 0))
        config = strip_zero_weights(config)
    ws = [w[0] for w in config.weights]
    pos = tuple(sorted(w for w in ws if w > 0))
    neg = tuple(sorted(w for w in ws if w < 0))
    if not pos or not neg:
        raise OneSided("all weights have the same sign")
    g = 0
    for w in ws:
        g = gcd(g, w)
    if g != 1:
        raise NotFaithful(f"weights have gcd {g}; divide every weight by {g} first")
    if sum(ws) != 0:
        raise NotUnimodular(f"weights sum to {sum(ws)}, not 0")
    gens = tuple(sorted(pos + tuple(-w for w in neg)))
    F = frobenius_number(gens)
    N = sum(pos)
    table = representable_table(gens, max(F, 0))
    return Rank1Data(pos, neg, gens, N, F, N + F, tuple(table))


def in_S_plus(data: Rank1Data, n: int) -> bool:
    return n >= data.N and data.representable(n - data.N)


def in_S(data: Rank1Data, n: int) -> bool:
    return in_S_plus(data, abs(n))


def cm_set(data: Rank1Data) -> list[int]:
    """All weights outside S, ascending."""
    out = []
    for mu in range(-data.B - 1, data.B + 2):
        if not in_S(data, mu):
            out.append(mu)
    return out


def p_of(data: Rank1Data, i: int) -> int:
    """Smallest ``p > 0`` with ``i + p*N`` in ``S_plus``."""
    if not 0 <= i < data.N:
        raise ValueError(f"residue {i} outside [0, {data.N})")
    p = 1
    while not in_S_plus(data, i + p * data.N):
        p += 1
    return p


def q_of(data: Rank1Data, i: int) -> int:
    """Largest ``q < 0`` with ``i + q*N`` in ``S_minus``."""
    if not 0 <= i < data.N:
        raise ValueError(f"residue {i} outside [0, {data.N})")
    q = -1
    while not in_S_plus(data, -(i + q * data.N)):
        q -= 1
    return q
