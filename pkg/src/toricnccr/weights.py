"""Torus weight configurations and their configuration-level predicates.

A configuration is the rank ``s`` of the torus plus the ordered list of
weights of the representation, each an integer vector of length ``s``.
Indices into the weight list are 0-based throughout the package.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import lattice
from .errors import ConfigError
from .linprog import constraint, find_feasible

DEFAULT_MAX_D = 16

Character = tuple  # tuple[int, ...] of length rank


def _as_int(x) -> int:
    # bool is an int subclass; floats are never accepted, not even 2.0
    if isinstance(x, bool) or not isinstance(x, int):
        raise ConfigError(f"expected an exact integer, got {x!r}")
    return x


@dataclass(frozen=True)
class WeightConfig:
    rank: int
    weights: tuple  # tuple of Characters

    @property
    def d(self) -> int:
        return len(self.weights)

    def matrix(self) -> list[list[int]]:
        """The ``rank x d`` matrix whose columns are the weights."""
        return lattice.transpose(self.weights)

    def as_document(self) -> dict:
        if self.rank == 1:
            ws = [w[0] for w in self.weights]
        else:
            ws = [list(w) for w in self.weights]
        return {"rank": self.rank, "weights": ws}

    def __str__(self):
        if self.rank == 1:
            return "[" + ",".join(str(w[0]) for w in self.weights) + "]"
        return "[" + ",".join("(" + ",".join(map(str, w)) + ")" for w in self.weights) + "]"


def validate(rank, weights) -> WeightConfig:
    """Build a :class:`WeightConfig`, checking shapes and integrality.

    For ``rank == 1`` bare integers are accepted as weights.
    """
    rank = _as_int(rank)
    if rank < 1:
        raise ConfigError("rank must be at least 1")
    weights = list(weights)
    if not weights:
        raise ConfigError("empty weight list")
    out = []
    for w in weights:
        if isinstance(w, (list, tuple)):
            vec = tuple(_as_int(x) for x in w)
        elif rank == 1:
            vec = (_as_int(w),)
        else:
            raise ConfigError(f"dimension mismatch: weight {w!r} is not a vector of length {rank}")
        if len(vec) != rank:
            raise ConfigError(f"dimension mismatch: weight {w!r} has length {len(vec)}, rank is {rank}")
        out.append(vec)
    return WeightConfig(rank, tuple(out))


def config_from_document(doc) -> WeightConfig:
    if not isinstance(doc, dict) or "rank" not in doc or "weights" not in doc:
        raise ConfigError("config document needs 'rank' and 'weights' fields")
    if not isinstance(doc["weights"], list):
        raise ConfigError("'weights' must be a list")
    return validate(doc["rank"], doc["weights"])


def load_config(path) -> WeightConfig:
    """Read a JSON config file ``{"rank": s, "weights": [...]}``."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc
    return config_from_document(doc)


def delta(config: WeightConfig) -> Character:
    """Sum of all weights."""
    return tuple(sum(w[k] for w in config.weights) for k in range(config.rank))


def pairing(lam: Sequence, alpha: Sequence) -> Fraction | int:
    return sum(a * b for a, b in zip(lam, alpha))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# --------------------------------------------------------------------------
# lambda classes


@dataclass(frozen=True)
class LambdaClass:
    """Equivalence class of one-parameter subgroups by sign pattern.

    ``T_minus`` (the set usually written T_lambda), ``T_zero`` and ``T_plus``
    are 0-based index sets of weights pairing negatively, to zero and
    positively with ``witness``.
    """
    sign_vector: tuple
    witness: tuple
    T_minus: frozenset = field(compare=False)
    T_zero: frozenset = field(compare=False)
    T_plus: frozenset = field(compare=False)
    d_lambda: int = field(compare=False)
    h0_lambda: int = field(compare=False)

    def negate(self, config: WeightConfig) -> "LambdaClass":
        return lambda_class_of(config, tuple(-x for x in self.witness))


def lambda_class_of(config: WeightConfig, lam: Sequence) -> LambdaClass:
    """The class of a given (nonzero) cocharacter ``lam``."""
    if len(lam) != config.rank:
        raise ConfigError(f"dimension mismatch: cocharacter has length {len(lam)}, rank is {config.rank}")
    signs = tuple(_sign(pairing(lam, a)) for a in config.weights)
    return _make_class(config, signs, tuple(lam))


def _make_class(config, signs, witness) -> LambdaClass:
    Tm = frozenset(i for i, s in enumerate(signs) if s < 0)
    T0 = frozenset(i for i, s in enumerate(signs) if s == 0)
    Tp = frozenset(i for i, s in enumerate(signs) if s > 0)
    zero_weights = [config.weights[i] for i in sorted(T0)]
    h0 = lattice.rank(zero_weights) if zero_weights else 0
    return LambdaClass(signs, witness, Tm, T0, Tp, config.d - len(Tm), h0)


def _integer_witness(x: Sequence[Fraction]) -> tuple:
    """Scale a rational vector to a primitive integer vector, keeping its sign."""
    den = 1
    for v in x:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints) if g else tuple(ints)


def _realize(config, signs) -> Optional[list[Fraction]]:
    cons = []
    for s, a in zip(signs, config.weights):
        if s > 0:
            cons.append(constraint(a, ">=", 1))
        elif s < 0:
            cons.append(constraint(a, "<=", -1))
        else:
            cons.append(constraint(a, "==", 0))
    return find_feasible(config.rank, cons)


def enumerate_lambda_classes(config: WeightConfig, max_d: int = DEFAULT_MAX_D) -> list[LambdaClass]:
    """All realizable nonzero sign vectors of ``(<lam, alpha_i>)_i``.

    Each class carries a primitive integer witness.  The all-zero pattern is
    never returned.  The result is sorted by sign vector.
    """
    if config.d > max_d:
        raise ConfigError(f"d={config.d} exceeds the lambda-class enumeration cap {max_d}")
    if config.rank == 1:
        out = []
        for lam in ((1,), (-1,)):
            cls = lambda_class_of(config, lam)
            if any(cls.sign_vector):
                out.append(cls)
        return sorted(out, key=lambda c: c.sign_vector)

    # Parallel weights share their sign up to orientation, so search over
    # distinct lines and expand afterwards.
    lines = sorted({lattice.primitive(w) for w in config.weights if any(w)})
    line_of = []
    for w in config.weights:
        if not any(w):
            line_of.append((None, 0))
            continue
        p = lattice.primitive(w)
        line_of.append((lines.index(p), _sign(pairing(p, w))))

    found = []

    def dfs(prefix, witness):
        k = len(prefix)
        if k == len(lines):
            if any(prefix):
                found.append((prefix, _integer_witness(witness)))
            return
        current = _sign(pairing(witness, lines[k]))
        seen_nonzero = any(prefix)
        for s in (1, 0, -1):
            # antipodal symmetry: the first nonzero sign is taken to be +
            if s == -1 and not seen_nonzero:
                continue
            cand = prefix + (s,)
            if s == current:
                dfs(cand, witness)
                continue
            sub = WeightConfig(config.rank, tuple(lines[:k + 1]))
            x = _realize(sub, cand)
            if x is not None:
                dfs(cand, x)

    dfs((), [Fraction(0)] * config.rank)
    out = []
    for signs, wit in found:
        full = tuple(0 if li is None else o * signs[li] for li, o in line_of)
        if not any(full):
            continue
        out.append(_make_class(config, full, wit))
        out.append(_make_class(config, tuple(-x for x in full), tuple(-v for v in wit)))
    return sorted(out, key=lambda c: c.sign_vector)


# --------------------------------------------------------------------------
# profile


@dataclass(frozen=True)
class ConfigProfile:
    faithful: bool
    generic: bool
    weakly_symmetric: bool
    quasi_symmetric: bool
    unimodular: bool
    delta: Character
    zero_weight_count: int

    def as_document(self) -> dict:
        return {
            "faithful": self.faithful,
            "generic": self.generic,
            "weakly_symmetric": self.weakly_symmetric,
            "quasi_symmetric": self.quasi_symmetric,
            "unimodular": self.unimodular,
            "delta": list(self.delta),
            "zero_weight_count": self.zero_weight_count,
        }


def _lines(config) -> dict:
    """Group nonzero weights by line: primitive direction -> list of weights."""
    lines: dict = {}
    for w in config.weights:
        if any(w):
            lines.setdefault(lattice.primitive(w), []).append(w)
    return lines


def is_faithful(config: WeightConfig) -> bool:
    if config.rank == 1:
        g = 0
        for w in config.weights:
            g = gcd(g, w[0])
        return g == 1
    divs = lattice.elementary_divisors(config.matrix())
    return len(divs) == config.rank and all(x == 1 for x in divs)


def is_weakly_symmetric(config: WeightConfig) -> bool:
    for direction, ws in _lines(config).items():
        signs = {_sign(pairing(direction, w)) for w in ws}
        if signs != {1, -1}:
            return False
    return True


def is_quasi_symmetric(config: WeightConfig) -> bool:
    for ws in _lines(config).values():
        if any(sum(w[k] for w in ws) for k in range(config.rank)):
            return False
    return True


def is_generic(config: WeightConfig, classes: Optional[list[LambdaClass]] = None) -> bool:
    """Every nonzero cocharacter pairs positively with at least two weights."""
    if config.rank == 1:
        pos = sum(1 for w in config.weights if w[0] > 0)
        neg = sum(1 for w in config.weights if w[0] < 0)
        return pos >= 2 and neg >= 2
    if lattice.rank(config.weights) < config.rank:
        # some nonzero cocharacter kills every weight
        return False
    if classes is None:
        classes = enumerate_lambda_classes(config)
    return all(len(c.T_plus) >= 2 for c in classes)


def profile(config: WeightConfig) -> ConfigProfile:
    dl = delta(config)
    return ConfigProfile(
        faithful=is_faithful(config),
        generic=is_generic(config),
        weakly_symmetric=is_weakly_symmetric(config),
        quasi_symmetric=is_quasi_symmetric(config),
        unimodular=not any(dl),
        delta=dl,
        zero_weight_count=sum(1 for w in config.weights if not any(w)),
    )


# --------------------------------------------------------------------------
# the zonotope  { sum a_i alpha_i : a_i in ]-1, 0] }


@dataclass(frozen=True)
class Facet:
    """Pair of parallel supporting hyperplanes ``lo <= <normal, x> <= hi``."""
    normal: tuple
    lo: int
    hi: int


@dataclass(frozen=True)
class Zonotope:
    """Exact description of the zonotope swept by ``]-1, 0]`` coefficients.

    ``facets`` and ``equalities`` describe the closure; the set itself
    contains the relative interior and is contained in the closure.  For
    rank 1 the set is exactly the interval ``(lo, hi)`` with the stated
    closedness flags.
    """
    rank: int
    vertices: tuple
    facets: tuple
    equalities: tuple  # normals n with <n, x> = 0 on the whole span
    lo: Optional[int] = None
    hi: Optional[int] = None
    lo_closed: bool = False
    hi_closed: bool = False

    def in_closure(self, v: Sequence) -> bool:
        if any(pairing(n, v) != 0 for n in self.equalities):
            return False
        return all(f.lo <= pairing(f.normal, v) <= f.hi for f in self.facets)

    def in_relative_interior(self, v: Sequence) -> bool:
        if any(pairing(n, v) != 0 for n in self.equalities):
            return False
        return all(f.lo < pairing(f.normal, v) < f.hi for f in self.facets)

    def contains(self, v: Sequence) -> bool:
        """Exact membership for rank 1; relative-interior test otherwise."""
        if self.rank == 1:
            x = v[0] if isinstance(v, (list, tuple)) else v
            above = x >= self.lo if self.lo_closed else x > self.lo
            below = x <= self.hi if self.hi_closed else x < self.hi
            return above and below
        return self.in_relative_interior(v)

    def describe(self) -> str:
        if self.rank == 1:
            left = "[" if self.lo_closed else "("
            right = "]" if self.hi_closed else ")"
            return f"{left}{self.lo},{self.hi}{right}"
        parts = [f"{f.lo} < <{','.join(map(str, f.normal))}, x> < {f.hi}" for f in self.facets]
        parts += [f"<{','.join(map(str, n))}, x> = 0" for n in self.equalities]
        return "; ".join(parts) if parts else "{0}"


def facet_normals(config: WeightConfig) -> list[tuple]:
    """Primitive normals (inside span of the weights) of the hyperplanes
    spanned by the weights.

    These are exactly the facet directions of the zonotope, taken within
    the linear span of the weights.
    """
    nonzero = sorted({w for w in config.weights if any(w)})
    r = lattice.rank(nonzero) if nonzero else 0
    if r == 0:
        return []
    annihilator = lattice.nullspace(nonzero, config.rank)
    normals = set()
    for subset in itertools.combinations(nonzero, r - 1):
        sub = list(subset)
        if sub and lattice.rank(sub) != r - 1:
            continue
        # n orthogonal to the subset and to the annihilator lies in the span
        ker = lattice.nullspace(sub + [list(a) for a in annihilator], config.rank)
        if len(ker) == 1:
            normals.add(lattice.primitive(ker[0]))
    return sorted(normals)


def sigma_zonotope(config: WeightConfig) -> Zonotope:
    if config.rank == 1:
        pos = sum(w[0] for w in config.weights if w[0] > 0)
        neg = sum(w[0] for w in config.weights if w[0] < 0)
        lo, hi = -pos, -neg
        # an endpoint needs a coefficient of -1 unless no weight pushes that way
        facets = (Facet((1,), lo, hi),) if (lo, hi) != (0, 0) else ()
        return Zonotope(1, tuple(sorted({(lo,), (hi,)})), facets, (),
                        lo=lo, hi=hi, lo_closed=pos == 0, hi_closed=neg == 0)
    normals = facet_normals(config)
    facets = []
    for n in normals:
        vals = [pairing(n, w) for w in config.weights]
        hi = -sum(v for v in vals if v < 0)
        lo = -sum(v for v in vals if v > 0)
        facets.append(Facet(n, lo, hi))
    nonzero = [w for w in config.weights if any(w)]
    equalities = tuple(lattice.nullspace(nonzero, config.rank)) if nonzero else tuple(
        tuple(int(i == j) for j in range(config.rank)) for i in range(config.rank))
    vertices = set()
    if nonzero:
        zero_idx = frozenset(i for i, w in enumerate(config.weights) if not any(w))
        for cls in enumerate_lambda_classes(config):
            if cls.T_zero == zero_idx:
                vertices.add(tuple(-sum(config.weights[i][k] for i in cls.T_minus)
                                   for k in range(config.rank)))
    else:
        vertices.add(tuple(0 for _ in range(config.rank)))
    return Zonotope(config.rank, tuple(sorted(vertices)), tuple(facets), equalities)


def is_generic_character(config: WeightConfig, chi) -> bool:
    """Whether ``chi`` is parallel to the zonotope but to none of its faces.

    When the weights do not span, "parallel to the zonotope" is read as
    lying in the span of the weights.
    """
    if isinstance(chi, int) and not isinstance(chi, bool) and config.rank == 1:
        chi = (chi,)
    chi = tuple(_as_int(x) for x in chi)
    if len(chi) != config.rank:
        raise ConfigError(f"dimension mismatch: character has length {len(chi)}, rank is {config.rank}")
    nonzero = [w for w in config.weights if any(w)]
    if not nonzero or not any(chi):
        return False
    if config.rank == 1:
        return True
    if not lattice.in_span(nonzero, chi):
        return False
    return all(pairing(n, chi) != 0 for n in facet_normals(config))


def strip_zero_weights(config: WeightConfig) -> WeightConfig:
    ws = tuple(w for w in config.weights if any(w))
    if not ws:
        raise ConfigError("all weights are zero")
    return WeightConfig(config.rank, ws)


def iter_characters(rank: int, radius: int) -> Iterable[Character]:
    """All integer vectors in the cube ``[-radius, radius]^rank``."""
    return itertools.product(range(-radius, radius + 1), repeat=rank)
