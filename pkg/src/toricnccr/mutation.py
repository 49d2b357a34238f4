"""Mutation of maximal cliques and the walk down to the standard clique.

Mutating a maximal clique replaces its largest element ``m`` by ``m - N``.
The result is again a maximal clique, and on cliques normalised to
``0 = min`` the largest element strictly drops until the clique is
``[0, N-1]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .cliques import (Clique, enumerate_maximal_cliques, format_clique, is_maximal_clique,
                      make_clique, normalize, standard_clique)
from .errors import Falsification
from .semigroup import Rank1Data, in_S_plus


@dataclass(frozen=True)
class MutationStep:
    before: Clique
    removed: int
    added: int
    after_raw: Clique
    translation: int
    after: Clique


@dataclass(frozen=True)
class MutationPath:
    start: Clique
    end: Clique
    steps: tuple = ()

    def __len__(self):
        return len(self.steps)


def _require_maximal(data: Rank1Data, clique: Sequence[int]) -> Clique:
    c = make_clique(clique)
    if not c or not is_maximal_clique(data, c):
        raise ValueError(f"{{{format_clique(c)}}} is not a maximal Cohen-Macaulay clique")
    return c


def mutate_max(data: Rank1Data, clique: Sequence[int]) -> MutationStep:
    c = _require_maximal(data, clique)
    top = c[-1]
    raw = make_clique(c[:-1] + (top - data.N,))
    after = normalize(raw)
    if not is_maximal_clique(data, raw):
        raise Falsification("mutation of a maximal clique is not maximal",
                            witness={"before": list(c), "after": list(raw)})
    return MutationStep(c, top, top - data.N, raw, -raw[0], after)


def mutate_min(data: Rank1Data, clique: Sequence[int]) -> MutationStep:
    """Replace the smallest element ``m`` by ``m + N``.

    Computed as negate, mutate_max, negate; valid because ``S = -S``.
    """
    c = _require_maximal(data, clique)
    mirrored = mutate_max(data, [-x for x in c])
    raw = make_clique(-x for x in mirrored.after_raw)
    return MutationStep(c, -mirrored.removed, -mirrored.added, raw, -raw[0], normalize(raw))


def normalize_to_standard(data: Rank1Data, clique: Sequence[int]) -> MutationPath:
    """Mutate (largest element down by N) until reaching ``[0, N-1]``."""
    c = normalize(_require_maximal(data, clique))
    start = c
    target = standard_clique(data.N)
    steps = []
    while c != target:
        step = mutate_max(data, c)
        if step.after[-1] >= c[-1]:
            raise Falsification("span failed to decrease under mutation",
                                witness={"before": list(c), "after": list(step.after)})
        steps.append(step)
        c = step.after
    return MutationPath(start, c, tuple(steps))


@dataclass(frozen=True)
class MutationGraph:
    nodes: tuple                 # normalised maximal cliques, sorted
    edges: dict = field(hash=False)  # node -> node reached by mutate_max
    standard: Clique = ()

    def reaches_standard(self, node: Clique) -> bool:
        seen = set()
        while node not in seen:
            if node == self.standard:
                return True
            seen.add(node)
            node = self.edges[node]
        return node == self.standard


def mutation_graph(data: Rank1Data, algorithm: str = "backtrack") -> MutationGraph:
    nodes = tuple(enumerate_maximal_cliques(data, algorithm))
    node_set = set(nodes)
    edges = {}
    for c in nodes:
        nxt = mutate_max(data, c).after
        if nxt not in node_set:
            raise Falsification("mutation leaves the set of enumerated cliques",
                                witness={"from": list(c), "to": list(nxt)})
        edges[c] = nxt
    g = MutationGraph(nodes, edges, standard_clique(data.N))
    for c in nodes:
        if not g.reaches_standard(c):
            raise Falsification("standard clique not reachable", witness={"from": list(c)})
    return g


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of the two non-membership checks behind the tilting argument.

    ``checked_a`` lists ``mu - removed + N`` for ``mu`` in the mutated set,
    ``checked_b`` lists ``removed - mu`` for the other elements of the
    original set; none may lie in ``S_plus``.
    """
    step: MutationStep
    checked_a: tuple
    checked_b: tuple
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def check_tilting_certificate(data: Rank1Data, step: MutationStep,
                              raise_on_failure: bool = True) -> CertificateReport:
    before = make_clique(step.before)
    raw = make_clique(step.after_raw)
    if (step.removed != before[-1] or step.added != step.removed - data.N
            or raw != make_clique([x for x in before if x != step.removed] + [step.added])):
        raise ValueError("malformed mutation step")
    top = step.removed
    a_vals = tuple(mu - top + data.N for mu in raw)
    b_vals = tuple(top - mu for mu in before if mu < top)
    violations = tuple([("a", v) for v in a_vals if in_S_plus(data, v)]
                       + [("b", v) for v in b_vals if in_S_plus(data, v)])
    report = CertificateReport(step, a_vals, b_vals, violations)
    if violations and raise_on_failure:
        raise Falsification("tilting certificate violated",
                            witness={"before": list(before), "violations": list(violations)})
    return report


def negative_subset_sums_present(data: Rank1Data, clique: Sequence[int]) -> bool:
    """``max + (sum of a nonempty proper subset of the negative weights)``
    lies in the clique, for a maximal clique.

    The full subset is excluded: it sums to ``-N`` and ``max - N`` is never
    in a clique containing ``max``.
    """
    c = set(clique)
    top = max(c)
    for k in range(1, len(data.neg)):
        for sub in combinations(data.neg, k):
            if top + sum(sub) not in c:
                return False
    return True
