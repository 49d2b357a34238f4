"""Random configurations and the oracle cross-validation checks.

``check_config`` runs every fast path of the package against its
independent oracle (or against a second fast path) on one configuration
and returns one :class:`CheckResult` per check.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Optional

from . import oracle
from .cliques import enumerate_maximal_cliques, residue_profile
from .cm_general import check_hypotheses, cm_verdicts
from .mutation import (check_tilting_certificate, mutate_max, mutation_graph,
                       negative_subset_sums_present, normalize_to_standard)
from .semigroup import build_rank1, cm_set, in_S
from .weights import WeightConfig, profile, validate


def random_rank1_config(rng: random.Random, max_weight: int = 9, max_d: int = 8,
                        max_N: Optional[int] = 8, max_B: Optional[int] = 14) -> WeightConfig:
    """A random faithful, unimodular, generic rank-one configuration.

    ``max_N`` / ``max_B`` keep the instance small enough for the brute-force
    clique oracle; pass ``None`` to drop a bound.  Half of the draws avoid
    weight +-1 so that nontrivial Frobenius numbers show up.
    """
    if max_d < 4:
        raise ValueError("generic rank-one configs need at least 4 weights")
    for _ in range(100000):
        d = rng.randint(4, max_d)
        npos = rng.randint(2, d - 2)
        nneg = d - npos
        least = rng.choice([1, 2]) if max_weight >= 2 else 1
        pos = [rng.randint(least, max_weight) for _ in range(npos)]
        N = sum(pos)
        if N < nneg * least:
            continue
        cuts = sorted(rng.sample(range(1, N), nneg - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [N])]
        if max(parts) > max_weight or min(parts) < least:
            continue
        ws = pos + [-p for p in parts]
        rng.shuffle(ws)
        if reduce(gcd, ws) != 1:
            continue
        config = validate(1, ws)
        data = build_rank1(config)
        if max_N is not None and data.N > max_N:
            continue
        if max_B is not None and data.B > max_B:
            continue
        return config
    raise RuntimeError("could not draw a configuration within the bounds")


def random_rank1_suite(n: int, seed: int, **bounds) -> list[WeightConfig]:
    rng = random.Random(seed)
    return [random_rank1_config(rng, **bounds) for _ in range(n)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witness: dict = field(default_factory=dict)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


def check_config(config: WeightConfig) -> list[CheckResult]:
    """Cross-validate one configuration.

    Raises :class:`Falsification` from the underlying operations; other
    disagreements are reported as failed results.
    """
    results = []
    prof = profile(config)
    if config.rank != 1:
        if check_hypotheses(config) or not prof.unimodular:
            results.append(CheckResult("hypotheses", False,
                                       "rank > 1 checks need a faithful, generic, weakly symmetric, unimodular config"))
            return results
        radius = 3
        mus = list(itertools.product(range(-radius, radius + 1), repeat=config.rank))
        v = cm_verdicts(config, mus)
        bad = [mu for mu in mus if tuple(-x for x in mu) in v and v[mu] != v[tuple(-x for x in mu)]]
        results.append(CheckResult("duality", not bad, f"{len(mus)} weights", {"mismatch": bad}))
        return results

    data = build_rank1(config)
    window = 4 * max(data.B, 1)
    S = oracle.brute_S(data.pos, data.neg, window)
    bad = [n for n in range(-window, window + 1) if (n in S) != in_S(data, n)]
    results.append(CheckResult("semigroup_vs_bruteforce", not bad, f"window {window}", {"mismatch": bad}))

    fast = enumerate_maximal_cliques(data)
    bk = enumerate_maximal_cliques(data, "bronkerbosch")
    results.append(CheckResult("backtrack_vs_bronkerbosch", fast == bk, f"{len(fast)} cliques"))
    try:
        brute = oracle.brute_maximal_cliques(oracle.brute_S(data.pos, data.neg, 2 * data.B), data.B)
    except ValueError as exc:
        results.append(CheckResult("cliques_vs_bruteforce", True, f"skipped ({exc})"))
    else:
        results.append(CheckResult("cliques_vs_bruteforce", fast == brute,
                                   f"{len(brute)} oracle cliques",
                                   {"fast": fast, "oracle": brute} if fast != brute else {}))
        sizes_ok = all(len(c) == data.N for c in brute)
        for c in brute:
            residue_profile(c, data.N)
        results.append(CheckResult("clique_size_equals_N", sizes_ok, f"N={data.N}"))

    steps = 0
    cor74 = True
    for c in fast:
        path = normalize_to_standard(data, c)
        steps += len(path)
        check_tilting_certificate(data, mutate_max(data, c))
        for st in path.steps:
            check_tilting_certificate(data, st)
        cor74 = cor74 and negative_subset_sums_present(data, c)
    mutation_graph(data)
    results.append(CheckResult("mutation_and_certificates", True, f"{steps} normalisation steps"))
    results.append(CheckResult("negative_subset_sums", cor74))

    if not check_hypotheses(config):
        mus = range(-2 * data.B, 2 * data.B + 1)
        v = cm_verdicts(config, mus)
        cms = set(cm_set(data))
        bad = [m for m in mus if v[(m,)] != (m in cms)]
        results.append(CheckResult("general_vs_rank1", not bad, f"mu in [-{2 * data.B}, {2 * data.B}]",
                                   {"mismatch": bad}))
        bad = [m for m in mus if v[(m,)] != v[(-m,)]]
        results.append(CheckResult("duality", not bad, "", {"mismatch": bad}))
    return results


def all_passed(results) -> bool:
    return all(r.passed for r in results)
