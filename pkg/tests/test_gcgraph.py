import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gcilab.autgroup import conjugation_by, from_generator_images, identity_automorphism, inner
from gcilab.gcgraph import (CycleCensus, EmptySubset, GraphTooLarge, LoopCondition, NotInvolutoryAutomorphism,
                            NotUndirected, ValencyOutOfScope, build_graph, cayley_graph,
                            cayley_reduction_check, census, census_fast, cycle_census, validate_subset)

import oracles


def oracle_census(alpha, members):
    """Components straight from the edge rule alpha(x^-1) y in S, on image tuples."""
    g = alpha.group
    rows = [tuple(int(v) for v in r) for r in g.elements]
    S = {rows[s] for s in members}
    n = len(rows)
    adj = [set() for _ in range(n)]
    for x in range(n):
        ax_inv = oracles.inverse(rows[int(alpha(x))])
        for y in range(n):
            if oracles.compose(ax_inv, rows[y]) in S:
                adj[x].add(y)
                adj[y].add(x)
    assert all(len(a) == len(S) for a in adj)
    sizes = oracles.components(n, lambda v: adj[v])
    if len(S) == 1:
        return CycleCensus.k2(len(sizes))
    return CycleCensus.from_lengths(2, sizes)


def valid_pairs(alpha):
    """Every valid two-element subset of the form {a, alpha(a^-1)}."""
    g = alpha.group
    out = set()
    for a in range(g.order):
        b = int(alpha(g.inv[a]))
        if a == b:
            continue
        try:
            s = validate_subset(alpha, (a, b))
        except Exception:
            continue
        out.add(s.members)
    return sorted(out)


# -- validate_subset ------------------------------------------------------------


def test_validate_a5_inner_pair(A5):
    g = A5.group
    x = g.index("(1 2)(3 4)")
    alpha = inner(g, x)
    pairs = valid_pairs(alpha)
    assert pairs
    a, b = pairs[0]
    assert int(alpha(g.inv[a])) == b


def test_validate_condition_one(A5):
    g = A5.group
    with pytest.raises(NotInvolutoryAutomorphism) as exc:
        validate_subset(inner(g, g.index("(1 2 3)")), [g.index("(1 2)(3 4)")])
    assert exc.value.condition == 1


def test_validate_condition_two(A5):
    g = A5.group
    x = g.index("(1 2)(3 4)")
    alpha = inner(g, x)
    h = g.index("(1 3 5)")
    s = int(g.mul(alpha(h), g.inv[h]))
    assert s != 0
    with pytest.raises(LoopCondition) as exc:
        validate_subset(alpha, [s])
    assert exc.value.condition == 2
    with pytest.raises(LoopCondition):
        validate_subset(alpha, [0])


def test_validate_condition_three(A5):
    g = A5.group
    alpha = identity_automorphism(g)
    with pytest.raises(NotUndirected) as exc:
        validate_subset(alpha, [g.index("(1 2 3)")])
    assert exc.value.condition == 3


def test_validate_empty(A5):
    with pytest.raises(EmptySubset):
        validate_subset(identity_automorphism(A5.group), [])


def test_validate_dedupes(A5):
    g = A5.group
    t = g.index("(1 2)(3 4)")
    s = validate_subset(identity_automorphism(g), [t, t])
    assert len(s) == 1
    assert s.describe() == "{(1 2)(3 4)}"


# -- build_graph / cycle_census ----------------------------------------------------------


def test_involution_k2(A5, L27):
    for entry in (A5, L27):
        g = entry.group
        x = int(g.involutions()[0])
        for alpha in (identity_automorphism(g), inner(g, x)):
            c = cycle_census(build_graph(validate_subset(alpha, [x])))
            assert c == CycleCensus.k2(g.order // 2)
            assert c.to_json() == {"k2": g.order // 2}
            assert str(c) == f"{g.order // 2}K2"


def test_edge_count_and_regularity(A5):
    g = A5.group
    alpha = inner(g, g.index("(1 2)(3 4)"))
    for pair in valid_pairs(alpha):
        graph = build_graph(validate_subset(alpha, pair))
        assert len(graph.edge_list) == 60
        deg = np.bincount(graph.edge_list.ravel(), minlength=60)
        assert (deg == 2).all()


def test_cap(A5):
    g = A5.group
    s = validate_subset(identity_automorphism(g), [int(g.involutions()[0])])
    with pytest.raises(GraphTooLarge):
        build_graph(s, cap=59)


def test_valency_scope(A5):
    g = A5.group
    inv = [int(v) for v in g.involutions()[:3]]
    graph = build_graph(validate_subset(identity_automorphism(g), inv))
    with pytest.raises(ValencyOutOfScope):
        cycle_census(graph)
    with pytest.raises(ValencyOutOfScope):
        census(graph.subset)


def test_census_against_oracle_a5(A5):
    aut = A5.aut
    for h, t, _ in aut.involution_classes():
        alpha = aut.automorphism(h, t)
        for pair in valid_pairs(alpha)[::3]:
            s = validate_subset(alpha, pair)
            assert cycle_census(build_graph(s)) == oracle_census(alpha, pair)


def test_census_serialization():
    c = CycleCensus.from_lengths(2, [6, 3, 6, 6, 3, 6, 6, 6, 6, 6, 6])
    assert c.to_json() == {"cycles": {"3": 2, "6": 9}}
    assert str(c) == "2C3 u 9C6"
    assert c.vertices == 60
    assert list(c.to_json()["cycles"]) == ["3", "6"]


def test_identity_gc_equals_cayley(A5, L27):
    for entry in (A5, L27):
        g = entry.group
        rng = np.random.default_rng(4)
        for _ in range(5):
            a = int(rng.integers(1, g.order))
            S = {a, int(g.inv[a])}
            gc = build_graph(validate_subset(identity_automorphism(g), S))
            cay = cayley_graph(g, S)
            assert np.array_equal(gc.edge_list, cay.edges())
            # Cayley edges are g -> g s
            for u, v in gc.edge_list[:20]:
                assert int(g.mul(g.inv[u], v)) in S or int(g.mul(g.inv[v], u)) in S


# -- census_fast ------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["A5", "A6", "L2(7)"])
def test_census_fast_equals_materialized(load, name):
    aut = load(name).aut
    for h, t, _ in aut.involution_classes():
        alpha = aut.automorphism(h, t)
        for a, b in valid_pairs(alpha):
            s = validate_subset(alpha, (a, b))
            assert census_fast(alpha, a) == cycle_census(build_graph(s))


def test_census_two_inverted_members(A6):
    alpha = conjugation_by(A6.group, "(1 2)")
    g = A6.group
    inv = [int(v) for v in np.nonzero(alpha.table[g.inv] == g.all)[0]]
    checked = 0
    for a, b in itertools.combinations(inv, 2):
        try:
            s = validate_subset(alpha, (a, b))
        except Exception:
            continue
        assert census(s) == cycle_census(build_graph(s))
        checked += 1
        if checked > 40:
            break
    assert checked


def test_a5_inner_censuses(A5):
    g = A5.group
    alpha = inner(g, g.index("(1 2)(3 4)"))
    seen = {str(census_fast(alpha, a)) for a, _ in valid_pairs(alpha)}
    assert seen == {"10C6", "6C10"}


def test_odd_order_gives_single_cycle_length(L27):
    g = L27.group
    for x in g.involutions()[:4]:
        alpha = inner(g, int(x))
        for a, _ in valid_pairs(alpha):
            n = g.order_of(int(g.mul(x, a)))
            c = census_fast(alpha, a)
            if n % 2:
                assert c.as_dict() == {2 * n: g.order // (2 * n)}
            else:
                assert set(c.as_dict()) <= {n, n // 2}


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_census_fast_random_m11(M11, seed):
    g = M11.group
    rng = np.random.default_rng(seed)
    x = int(rng.choice(g.involutions()))
    alpha = inner(g, x)
    a = int(rng.integers(1, g.order))
    try:
        s = validate_subset(alpha, (a, int(alpha(g.inv[a]))))
    except Exception:
        return
    c = census_fast(alpha, a)
    assert c.vertices == g.order
    assert census(s) == c


# -- cycle statements on small groups -----------------------------------------------------------


def _inner_pairs_by_order(alpha, x):
    g = alpha.group
    out = {}
    for a, _ in valid_pairs(alpha):
        out.setdefault(g.order_of(int(g.mul(x, a))), []).append(a)
    return out


def test_distinct_orders_distinct_censuses_a5(A5):
    g = A5.group
    for x in g.involutions():
        alpha = inner(g, int(x))
        by_order = _inner_pairs_by_order(alpha, int(x))
        censuses = {n: {census_fast(alpha, a) for a in reps} for n, reps in by_order.items()}
        for n1, n2 in itertools.combinations(censuses, 2):
            assert not censuses[n1] & censuses[n2]


def test_distinct_orders_can_share_census_a8(load):
    """Regression: in A8 two pairs with o(xa) = 3 and o(xa) = 6 give the same census."""
    g = load("A8").group
    x = g.index("(4 8)(5 7)")
    alpha = inner(g, x)
    a1 = g.index("(5 7 8)")
    a2 = g.index("(1 2 3 7 6 5 4)")
    assert g.order_of(int(g.mul(x, a1))) == 3
    assert g.order_of(int(g.mul(x, a2))) == 6
    c1, c2 = census_fast(alpha, a1), census_fast(alpha, a2)
    assert c1 == c2 == CycleCensus(2, ((6, 3360),))
    assert cycle_census(build_graph(validate_subset(alpha, (a1, int(alpha(g.inv[a1])))))) == c1
    assert cycle_census(build_graph(validate_subset(alpha, (a2, int(alpha(g.inv[a2])))))) == c2


def _cayley_triples(alpha):
    g = alpha.group
    inv = [int(v) for v in np.nonzero(alpha.table[g.inv] == g.all)[0]]
    for a, b in itertools.combinations(inv, 2):
        try:
            validate_subset(alpha, (a, b))
        except Exception:
            continue
        yield a, b


def test_cayley_reduction_a5_has_no_triples(A5):
    aut = A5.aut
    for h, t, _ in aut.involution_classes():
        assert not list(_cayley_triples(aut.automorphism(h, t)))


def test_cayley_reduction_fails_on_a6(A6):
    """The two-inverted-member graph has cycles twice as long as the Cayley side."""
    alpha = conjugation_by(A6.group, "(1 2)")
    g = A6.group
    triples = list(_cayley_triples(alpha))
    assert len(triples) == 105
    for a, b in triples[:10]:
        assert not cayley_reduction_check(alpha, a, b)
        n = g.order_of(int(g.mul(g.inv[a], b)))
        assert census(validate_subset(alpha, (a, b))).as_dict() == {2 * n: 360 // (2 * n)}


def test_cayley_reduction_preconditions(A6):
    alpha = conjugation_by(A6.group, "(1 2)")
    a, b = next(_cayley_triples(alpha))
    with pytest.raises(ValueError):
        cayley_reduction_check(alpha, a, a)
    with pytest.raises(ValueError):
        cayley_reduction_check(alpha, 0, b)


def test_l27_quoted_pair(L27):
    """The quoted S2 is not a valid subset under the quoted outer map."""
    from gcilab.jobs import L27_PAIR
    g = L27.group
    x1, x2 = g.gen_index
    beta = from_generator_images(g, [g.perm(x1), g.perm(x2).inverse()])
    s2 = [g.index(p) for p in L27_PAIR["S2"]]
    with pytest.raises(NotUndirected):
        validate_subset(beta, s2)
    sigma = inner(g, g.index("(1 5)(3 4)"))
    assert str(census(validate_subset(sigma, s2))) == "42C4"
    outer = {str(census(validate_subset(beta, pair))) for pair in valid_pairs(beta)}
    outer |= {str(census(validate_subset(beta, pair))) for pair in _cayley_triples(beta)}
    assert "42C4" not in outer
