"""Cohen-Macaulay cliques of integers for the one-dimensional torus.

A clique is a finite set of integers whose pairwise differences all avoid
the non-CM set ``S``.  Cliques are handled as sorted tuples of ints; the
canonical representative of a translation class has minimum 0.

Finiteness of the search: if ``C`` is a clique containing 0 then every
``z`` that could be added satisfies ``z - 0 not in S``, so ``|z| <= B``.
Maximal cliques of the integers containing 0 are therefore exactly the
maximal cliques of the compatibility graph on the CM set (which lies in
``[-B, B]``) that contain 0.
"""
from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Sequence

from .errors import Falsification
from .semigroup import Rank1Data, cm_set, in_S

Clique = tuple  # strictly increasing tuple of ints


def make_clique(elements: Iterable[int]) -> Clique:
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise ValueError(f"duplicate elements in {sorted(elements)}")
    return tuple(sorted(int(x) for x in elements))


def normalize(clique: Sequence[int]) -> Clique:
    """Translate so the minimum is 0."""
    c = make_clique(clique)
    if not c:
        return c
    return tuple(x - c[0] for x in c)


def translate(clique: Sequence[int], t: int) -> Clique:
    return tuple(sorted(x + t for x in clique))


def format_clique(clique: Sequence[int]) -> str:
    return ",".join(str(x) for x in sorted(clique))


def parse_clique(text: str) -> Clique:
    text = text.strip().strip("{}")
    if not text:
        return ()
    return make_clique(int(tok) for tok in text.split(","))


def is_cm_clique(data: Rank1Data, elements: Sequence[int]) -> bool:
    c = make_clique(elements)
    return all(not in_S(data, c[j] - c[i]) for i in range(len(c)) for j in range(i + 1, len(c)))


def _compatible(data: Rank1Data, z: int, clique: Iterable[int]) -> bool:
    return all(not in_S(data, z - m) for m in clique)


def is_maximal_clique(data: Rank1Data, clique: Sequence[int]) -> bool:
    c = make_clique(clique)
    if not c:
        return False
    if not is_cm_clique(data, c):
        raise ValueError(f"{{{format_clique(c)}}} is not a Cohen-Macaulay clique")
    members = set(c)
    for z in range(c[0] - data.B, c[-1] + data.B + 1):
        if z not in members and _compatible(data, z, c):
            return False
    return True


def residue_profile(clique: Sequence[int], N: int) -> dict[int, int]:
    """Map each residue mod ``N`` to the unique clique element in it.

    A maximal clique has exactly one element in every residue class; any
    other outcome raises :class:`Falsification`.
    """
    prof: dict[int, list[int]] = {r: [] for r in range(N)}
    for m in clique:
        prof[m % N].append(m)
    for r, ms in prof.items():
        if len(ms) != 1:
            raise Falsification(f"residue {r} mod {N} holds {len(ms)} elements",
                                witness={"residue": r, "elements": ms, "clique": list(clique)})
    return {r: ms[0] for r, ms in prof.items()}


def blockers(data: Rank1Data, clique: Sequence[int], j: int) -> list[int]:
    """Elements ``m`` of the clique with ``j - m`` in S."""
    if j in clique:
        raise ValueError(f"{j} is already in the clique")
    return [m for m in sorted(clique) if in_S(data, j - m)]


def is_interval(clique: Sequence[int]) -> bool:
    c = sorted(clique)
    return bool(c) and c[-1] - c[0] == len(c) - 1 and len(set(c)) == len(c)


def is_half_sigma_translate(data: Rank1Data, clique: Sequence[int]) -> bool:
    """Whether the clique is ``(nu + closure(Sigma)/2)`` intersected with Z
    for some rational ``nu``.

    The closure of Sigma is ``[-N, N]`` here.  The integer points of
    ``[nu - N/2, nu + N/2]`` only change when ``nu`` crosses a half-integer,
    so testing ``nu`` on the quarter-integer grid is exhaustive.
    """
    c = make_clique(clique)
    if not c:
        return False
    half = Fraction(data.N, 2)
    k_lo = floor((c[0] - half - 1) * 4)
    k_hi = ceil((c[-1] + half + 1) * 4)
    for k in range(k_lo, k_hi + 1):
        nu = Fraction(k, 4)
        pts = tuple(range(ceil(nu - half), floor(nu + half) + 1))
        if pts == c:
            return True
    return False


# --------------------------------------------------------------------------
# enumeration


def _backtrack(data: Rank1Data) -> list[Clique]:
    N = data.N
    cm = [m for m in cm_set(data) if 0 < m]
    by_res = {r: [m for m in cm if m % N == r] for r in range(1, N)}
    out = []

    def extend(chosen, r):
        if r == N:
            out.append(tuple(sorted(chosen)))
            return
        for m in by_res[r]:
            if _compatible(data, m, chosen):
                chosen.append(m)
                extend(chosen, r + 1)
                chosen.pop()

    extend([0], 1)
    for c in out:
        if not is_maximal_clique(data, c):
            raise Falsification("a clique with one element per residue is not maximal",
                                witness={"clique": list(c), "N": N})
    return sorted(set(out))


def _bron_kerbosch(adj: dict[int, set[int]]) -> list[frozenset]:
    """Maximal cliques by Bron-Kerbosch with Tomita pivoting."""
    found = []

    def expand(R, P, X):
        if not P and not X:
            found.append(frozenset(R))
            return
        pivot = max(P | X, key=lambda u: (len(adj[u] & P), u))
        for v in sorted(P - adj[pivot]):
            expand(R | {v}, P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    expand(set(), set(adj), set())
    return found


def _bron_kerbosch_cliques(data: Rank1Data) -> list[Clique]:
    verts = [m for m in cm_set(data) if m != 0]
    adj = {u: {v for v in verts if v != u and not in_S(data, u - v)} for u in verts}
    out = set()
    for K in _bron_kerbosch(adj):
        out.add(normalize(K | {0}))
    if not verts:
        out.add((0,))
    return sorted(out)


def enumerate_maximal_cliques(data: Rank1Data, algorithm: str = "backtrack") -> list[Clique]:
    """All maximal CM cliques up to translation, normalised to minimum 0.

    ``algorithm="backtrack"`` walks residue classes 1..N-1 in order and picks
    at most one element per class; ``"bronkerbosch"`` runs generic maximal
    clique enumeration on the windowed compatibility graph and is kept as an
    independent cross-check.
    """
    if algorithm == "backtrack":
        return _backtrack(data)
    if algorithm == "bronkerbosch":
        return _bron_kerbosch_cliques(data)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def standard_clique(N: int) -> Clique:
    return tuple(range(N))
