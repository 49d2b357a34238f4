import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from toricnccr.errors import ConfigError
from toricnccr.weights import (enumerate_lambda_classes, is_generic_character, lambda_class_of,
                               load_config, pairing, profile, sigma_zonotope, validate)


def test_validate_examples(golden, skew):
    assert (golden.rank, golden.d) == (1, 6)
    assert (skew.rank, skew.d) == (2, 6)
    with pytest.raises(ConfigError, match="dimension mismatch"):
        validate(1, [(1, 0)])
    with pytest.raises(ConfigError, match="empty"):
        validate(1, [])
    with pytest.raises(ConfigError):
        validate(1, [1.0, -1])
    with pytest.raises(ConfigError):
        validate(2, [(1, 0), (1,)])


def test_load_config(tmp_path):
    p = tmp_path / "c.json"
    p.write_text('{"rank": 2, "weights": [[1, 0], [-1, 0]]}')
    assert load_config(p).weights == ((1, 0), (-1, 0))
    p.write_text('{"rank": 1, "weights": [1.5, -1]}')
    with pytest.raises(ConfigError):
        load_config(p)


def test_profile_golden(golden):
    prof = profile(golden)
    assert prof.faithful and prof.generic and prof.weakly_symmetric
    assert prof.quasi_symmetric and prof.unimodular
    assert prof.delta == (0,)


def test_profile_skew(skew):
    prof = profile(skew)
    assert prof.unimodular and not prof.weakly_symmetric
    assert prof.delta == (0, 0)


def test_profile_one_sided_line():
    prof = profile(validate(1, [1, 1, -1]))
    assert prof.weakly_symmetric and not prof.quasi_symmetric
    assert not prof.unimodular and not prof.generic


def test_faithful_uses_elementary_divisors():
    assert not profile(validate(2, [(2, 0), (0, 2), (-2, -2)])).faithful
    assert not profile(validate(2, [(1, 1), (-1, -1)])).faithful  # rank deficient
    assert not profile(validate(2, [(1, 0), (1, 2), (-2, -2)])).faithful  # index 2
    assert profile(validate(2, [(1, 0), (1, 1), (-2, -1)])).faithful


def test_zero_weights_do_not_break_weak_symmetry():
    prof = profile(validate(1, [0, 1, -1, 1, -1]))
    assert prof.weakly_symmetric and prof.zero_weight_count == 1


def test_lambda_classes_rank1(golden):
    classes = enumerate_lambda_classes(golden)
    assert len(classes) == 2
    assert sorted(c.witness for c in classes) == [(-1,), (1,)]
    plus = next(c for c in classes if c.witness == (1,))
    # 0-based positions of the positive weights 2, 2, 3
    assert plus.T_plus == {3, 4, 5} and plus.T_minus == {0, 1, 2}
    minus = next(c for c in classes if c.witness == (-1,))
    assert minus.T_plus == {0, 1, 2}


def test_lambda_class_skew(skew):
    cls = lambda_class_of(skew, (2, 1))
    assert [pairing((2, 1), w) for w in skew.weights] == [2, 4, 1, -1, -3, -3]
    assert cls.T_plus == {0, 1, 2}
    realised = {c.sign_vector for c in enumerate_lambda_classes(skew)}
    assert cls.sign_vector in realised


def _brute_sign_vectors(config, radius=6):
    # all sign patterns of integer cocharacters in a box; for these tiny
    # configs every face of the arrangement contains a point of the box
    out = set()
    for lam in itertools.product(range(-radius, radius + 1), repeat=config.rank):
        if any(lam):
            sv = tuple((pairing(lam, w) > 0) - (pairing(lam, w) < 0) for w in config.weights)
            if any(sv):
                out.add(sv)
    return out


@pytest.mark.parametrize("ws", [
    [(1, 0), (2, 0), (0, 1), (-1, 1), (-1, -1), (-1, -1)],
    [(1, 0), (-1, 0), (0, 1), (0, -1)],
    [(1, 0), (0, 1), (-1, -1), (1, 1)],
    [(1, 2), (-1, -2), (2, 1), (-2, -1), (0, 0)],
])
def test_lambda_classes_match_box_search(ws):
    config = validate(2, ws)
    classes = enumerate_lambda_classes(config)
    assert {c.sign_vector for c in classes} == _brute_sign_vectors(config)


rank2_weights = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=6)


@settings(max_examples=60, deadline=None)
@given(rank2_weights)
def test_lambda_class_witnesses(ws):
    config = validate(2, ws)
    classes = enumerate_lambda_classes(config)
    svs = {c.sign_vector for c in classes}
    for c in classes:
        assert lambda_class_of(config, c.witness).sign_vector == c.sign_vector
        assert tuple(-s for s in c.sign_vector) in svs
        assert c.d_lambda == config.d - len(c.T_minus)
        assert any(c.sign_vector)
    assert [c.sign_vector for c in classes] == sorted(svs)


@settings(max_examples=60, deadline=None)
@given(rank2_weights, st.randoms(use_true_random=False))
def test_profile_permutation_invariant(ws, rnd):
    config = validate(2, ws)
    shuffled = list(ws)
    rnd.shuffle(shuffled)
    assert profile(config) == profile(validate(2, shuffled))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=6))
def test_quasi_symmetric_implies_others(ws):
    # close the list under negation half the time so quasi-symmetry occurs
    for cand in (ws, ws + [(-a, -b) for a, b in ws]):
        prof = profile(validate(2, cand))
        if prof.quasi_symmetric:
            assert prof.weakly_symmetric and prof.unimodular


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_rank1_generic_matches_lambda_definition(ws):
    config = validate(1, ws)
    by_classes = bool(enumerate_lambda_classes(config)) and all(
        len(c.T_plus) >= 2 for c in enumerate_lambda_classes(config)) and len(
        enumerate_lambda_classes(config)) == 2
    assert profile(config).generic == by_classes


def test_sigma_rank1():
    assert sigma_zonotope(validate(1, [-3, -2, -2, 2, 2, 3])).describe() == "(-7,7)"
    z = sigma_zonotope(validate(1, [1, -1]))
    assert (z.lo, z.hi) == (-1, 1) and not z.contains(1) and z.contains(0)
    z = sigma_zonotope(validate(1, [1, 1]))
    assert z.describe() == "(-2,0]"


def _corner_points(config):
    # direct Minkowski sum of the coefficient segments: corners a_i in {-1, 0}
    pts = set()
    for eps in itertools.product((-1, 0), repeat=config.d):
        pts.add(tuple(sum(e * w[k] for e, w in zip(eps, config.weights)) for k in range(config.rank)))
    return pts


def test_sigma_square(square):
    z = sigma_zonotope(square)
    assert set(z.vertices) == {(-1, -1), (-1, 1), (1, -1), (1, 1)}
    assert {(f.normal, f.lo, f.hi) for f in z.facets} == {((1, 0), -1, 1), ((0, 1), -1, 1)}
    assert z.contains((0, 0)) and not z.contains((1, 0))
    assert z.in_closure((1, 1))


@pytest.mark.parametrize("ws", [
    [(1, 0), (-1, 0), (0, 1), (0, -1)],
    [(1, 0), (2, 0), (0, 1), (-1, 1), (-1, -1), (-1, -1)],
    [(1, 0), (0, 1), (-1, -1), (1, 2), (-2, 1)],
])
def test_sigma_facets_against_convex_hull(ws):
    config = validate(2, ws)
    z = sigma_zonotope(config)
    pts = sorted(_corner_points(config))
    hull = ConvexHull(pts)
    hull_vertices = {pts[i] for i in hull.vertices}
    assert set(z.vertices) == hull_vertices
    for v in pts:
        assert z.in_closure(v)
    # every hull facet direction appears among the exact facet normals
    normals = {f.normal for f in z.facets}
    for eq in hull.equations:
        a, b = eq[0], eq[1]
        scale = max(abs(a), abs(b))
        cand = (round(a / scale * 12), round(b / scale * 12))
        from toricnccr.lattice import primitive
        assert primitive(cand) in normals


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=4),
       st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.tuples(st.integers(1, 3), st.integers(1, 3)))
def test_sigma_symmetry_when_unimodular(ws, v, den):
    config = validate(2, ws + [(-a, -b) for a, b in ws])
    z = sigma_zonotope(config)
    p = (Fraction(v[0], den[0]), Fraction(v[1], den[1]))
    q = (-p[0], -p[1])
    assert z.contains(p) == z.contains(q)
    assert z.in_closure(p) == z.in_closure(q)


def test_generic_character(golden, square):
    assert is_generic_character(golden, 1)
    assert is_generic_character(square, (1, 1))
    assert not is_generic_character(square, (1, 0))
    assert not is_generic_character(golden, 0)
    with pytest.raises(ConfigError):
        is_generic_character(square, (1, 1, 1))


def test_generic_character_matches_hull_edges():
    # independent route: edges of the closed zonotope from scipy's hull
    config = validate(2, [(1, 0), (0, 1), (-1, -1), (1, 2), (-2, 1)])
    pts = sorted(_corner_points(config))
    hull = ConvexHull(pts)
    edge_dirs = []
    for s in hull.simplices:
        a, b = pts[s[0]], pts[s[1]]
        edge_dirs.append((b[0] - a[0], b[1] - a[1]))
    rng = random.Random(3)
    for _ in range(50):
        chi = (rng.randint(-5, 5), rng.randint(-5, 5))
        parallel = any(chi[0] * e[1] - chi[1] * e[0] == 0 for e in edge_dirs)
        assert is_generic_character(config, chi) == (any(chi) and not parallel)
