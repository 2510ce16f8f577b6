import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gcilab.autgroup import (AutGroup, NotAHomomorphism, NotBijective, NotInvolutory, PreconditionError,
                             aut_stabilizer, build_aut_group, centralizer_size, check_homomorphism,
                             conjugation_by, delta_subgroup, from_generator_images, fusion_class_count,
                             identity_automorphism, inner, inner_element, quasi_fusion_class,
                             quasi_fusion_labels, signed_fix_data, verify_lemma_plus1)

import oracles


def symmetric_tables(group):
    """Aut(A_n) for n != 6 as conjugation by S_n, built from image tuples only."""
    index = {tuple(int(v) for v in row): i for i, row in enumerate(group.elements)}
    rows = [tuple(int(v) for v in row) for row in group.elements]
    tables = []
    for p in oracles.symmetric_group(group.degree):
        tables.append(np.asarray([index[oracles.conj(r, p)] for r in rows]))
    return tables


@pytest.fixture(scope="module")
def a5_aut_tables(A5):
    return symmetric_tables(A5.group)


def all_tables(aut):
    return [aut.table(h, t) for h, t in aut.elements()]


# -- construction ---------------------------------------------------------------


def test_inner_identity(A5):
    g = A5.group
    assert inner(g, 0).is_identity()
    assert inner(g, 0) == identity_automorphism(g)


def test_inner_involution_squares_to_one(L27):
    g = L27.group
    for x in g.involutions()[:10]:
        a = inner(g, int(x))
        assert (a * a).is_identity()
        assert a.is_involutory()


def test_inner_fixed_set_a5(A5):
    g = A5.group
    x = g.index("(1 2)(3 4)")
    fixed = signed_fix_data(inner(g, x)).fixed
    brute = [i for i in range(60) if g.perm(i) * g.perm(x) == g.perm(x) * g.perm(i)]
    assert fixed.size == 4 == len(brute)


def test_from_images_identity(L27):
    g = L27.group
    a = from_generator_images(g, [g.perm(s) for s in g.gen_index])
    assert a.is_identity()


def test_from_images_l27_beta(L27):
    g = L27.group
    x1, x2 = g.gen_index
    beta = from_generator_images(g, [g.perm(x1), g.perm(x2).inverse()])
    assert beta.is_involutory() and not beta.is_identity()
    assert inner_element(g, beta) is None
    assert check_homomorphism(beta)


def test_from_images_l34_beta(load):
    g = load("L3(4)").group
    beta = from_generator_images(g, ["(1 15)(2 10)(4 17)(5 13)(6 11)(7 19)(8 9)(12 14)",
                                     "(2 13 16 21)(3 9 11 15)(4 8 10 20)(5 6 7 14)(12 17)(18 19)"])
    assert beta.is_involutory()
    assert inner_element(g, beta) is None
    assert check_homomorphism(beta, samples=2000)


def test_from_images_rejects_relation_violation(L27):
    g = L27.group
    x1, x2 = g.gen_index
    with pytest.raises(NotAHomomorphism):
        # x1 has order 2, x2 order 3
        from_generator_images(g, [g.perm(x2), g.perm(x1)])


def test_from_images_rejects_non_bijective(A5):
    g = A5.group
    with pytest.raises((NotBijective, NotAHomomorphism)):
        from_generator_images(g, ["()", "()"])


def test_conjugation_by_rejects_non_normalizer(L27):
    with pytest.raises(NotAHomomorphism):
        conjugation_by(L27.group, "(1 2)")


# -- signed fixed points --------------------------------------------------------------


def test_signed_fix_a6_outer(A6):
    beta = conjugation_by(A6.group, "(1 2)")
    d = signed_fix_data(beta)
    assert d.fixed.size == 24
    assert d.omega.size == 15
    assert d.inverted.size > 15
    assert d.inverted.size == 30


def test_signed_fix_identity(A5):
    d = signed_fix_data(identity_automorphism(A5.group))
    assert d.fixed.size == 60
    assert d.omega.tolist() == [0]


def test_signed_fix_a5_inner(A5):
    g = A5.group
    d = signed_fix_data(inner(g, g.index("(1 2)(3 4)")))
    assert d.omega.size == 15 and d.inverted.size == 16
    # brute force over the 60 elements
    x = g.perm(g.index("(1 2)(3 4)"))
    inv_brute = [i for i in range(60) if x * g.perm(i) * x == g.perm(i).inverse()]
    assert d.inverted.tolist() == inv_brute


def test_signed_fix_rejects_non_involution(A5):
    g = A5.group
    with pytest.raises(NotInvolutory):
        signed_fix_data(inner(g, g.index("(1 2 3)")))


def _check_signed_invariants(alpha):
    g = alpha.group
    d = signed_fix_data(alpha)
    assert np.isin(d.omega, d.inverted).all()
    assert np.isin(g.inv[d.inverted], d.inverted).all()
    assert np.isin(g.inv[d.omega], d.omega).all()
    assert d.omega.size * d.fixed.size == g.order


@pytest.mark.parametrize("name", ["A5", "A6", "L2(7)", "L2(8)", "M11", "A7"])
def test_signed_invariants_every_involution(load, name):
    aut = load(name).aut
    for hs, t in aut.involutions():
        for h in hs:
            _check_signed_invariants(aut.automorphism(int(h), t))


@pytest.mark.parametrize("name", ["L3(4)", "A8", "Sz(8)"])
def test_signed_invariants_class_reps(load, name):
    aut = load(name).aut
    for h, t, _ in aut.involution_classes():
        _check_signed_invariants(aut.automorphism(h, t))


def test_lemma_plus1(A5, L27):
    g = A5.group
    assert verify_lemma_plus1(inner(g, g.index("(1 2)(3 4)")))
    for x in L27.group.involutions():
        assert verify_lemma_plus1(inner(L27.group, int(x)))


def test_lemma_plus1_rejects_outer(A6):
    with pytest.raises(PreconditionError):
        verify_lemma_plus1(conjugation_by(A6.group, "(1 2)"))


def test_lemma_plus1_rejects_two_classes(load):
    g = load("A8").group
    with pytest.raises(PreconditionError):
        verify_lemma_plus1(inner(g, int(g.involutions()[0])))


# -- Aut(G) -------------------------------------------------------------------------


@pytest.mark.parametrize("name,order", [("A5", 120), ("A6", 1440), ("L2(7)", 336), ("L2(8)", 1512),
                                        ("M11", 7920), ("L3(4)", 241920), ("Sz(8)", 87360)])
def test_aut_orders(load, name, order):
    e = load(name)
    assert e.aut.order == order == e.order * e.out


def test_aut_a5_chain_order(A5, a5_aut_tables):
    assert A5.aut.chain().order == 120
    assert {t.tobytes() for t in all_tables(A5.aut)} == {t.tobytes() for t in a5_aut_tables}


def test_aut_generators_are_homomorphisms(load):
    for name in ("A6", "L2(8)", "L3(4)"):
        for gen in load(name).aut.generators:
            assert check_homomorphism(gen)


def test_build_aut_rejects_inner_map(A5):
    g = A5.group
    x = g.index("(1 2)(3 4)")
    images = [g.perm(g.conj(s, x)) for s in g.gen_index]
    with pytest.raises(ValueError, match="inner"):
        build_aut_group(g, [images])


def test_build_aut_rejects_wrong_out(A5):
    with pytest.raises(ValueError):
        AutGroup(A5.group, A5.aut.outer_generators, declared_out=4)


def test_compact_arithmetic_matches_tables(A6):
    aut = A6.aut
    rng = np.random.default_rng(0)
    for _ in range(50):
        a = aut.random_element(rng)
        b = aut.random_element(rng)
        ta, tb = aut.table(*a), aut.table(*b)
        assert np.array_equal(aut.table(*aut.mul(*a, *b)), ta[tb])
        inv = aut.inv(*a)
        assert np.array_equal(aut.table(*inv)[ta], np.arange(A6.order))
        assert aut.decompose(ta) == a


def test_delta_is_subgroup(A6):
    aut = A6.aut
    alpha = conjugation_by(A6.group, "(1 2)")
    delta = delta_subgroup(aut, alpha)
    chain = delta.chain()
    rng = np.random.default_rng(5)
    gens = delta.generators
    from gcilab.permgroup import contains
    for _ in range(1000):
        i, j = rng.integers(0, len(gens), 2)
        assert contains(chain, (gens[i] * gens[j]).table)


# -- stabilizers, Delta ----------------------------------------------------------------------


def brute_centralizer(tables, alpha):
    return [t for t in tables if np.array_equal(t[alpha.table], alpha.table[t])]


def test_stabilizer_identity(A5):
    st_ = aut_stabilizer(A5.aut, identity_automorphism(A5.group))
    assert st_.order == 120 and st_.orbit_size == 1


def test_stabilizer_a5_inner(A5, a5_aut_tables):
    g = A5.group
    alpha = inner(g, g.index("(1 2)(3 4)"))
    st_ = aut_stabilizer(A5.aut, alpha)
    assert st_.order == 8 == len(brute_centralizer(a5_aut_tables, alpha))
    assert st_.orbit_size * st_.order == 120
    assert centralizer_size(A5.aut, alpha) == 8


def test_stabilizer_a6_outer(A6):
    aut = A6.aut
    alpha = conjugation_by(A6.group, "(1 2)")
    st_ = aut_stabilizer(aut, alpha)
    brute = brute_centralizer(all_tables(aut), alpha)
    assert st_.order == len(brute)
    conj_orbit = {(aut.table(h, t)[alpha.table][aut.table(*aut.inv(h, t))]).tobytes() for h, t in aut.elements()}
    assert st_.order == aut.order // len(conj_orbit)
    for gen in st_.generators:
        assert np.array_equal(gen.table[alpha.table], alpha.table[gen.table])


def test_stabilizer_rejects_foreign(A5):
    from gcilab.autgroup import Automorphism
    bogus = Automorphism(A5.group, np.roll(np.arange(60), 1))
    with pytest.raises(PreconditionError):
        aut_stabilizer(A5.aut, bogus)


def test_delta_m11_is_aut(M11):
    g = M11.group
    alpha = inner(g, int(g.involutions()[0]))
    assert delta_subgroup(M11.aut, alpha).order == 7920


def test_delta_a5_inner(A5, a5_aut_tables):
    g = A5.group
    alpha = inner(g, g.index("(1 2)(3 4)"))
    delta = delta_subgroup(A5.aut, alpha)
    assert delta.order == 120
    # product-set closure of Inn and the brute centralizer
    cent = brute_centralizer(a5_aut_tables, alpha)
    prod = {inner(g, h).table[c].tobytes() for h in range(60) for c in cent}
    assert len(prod) == 120


def test_delta_identity(A6):
    assert delta_subgroup(A6.aut, identity_automorphism(A6.group)).order == 1440


# -- quasi-fusion -----------------------------------------------------------------------


def test_quasi_fusion_of_one_is_omega(load):
    for name in ("A5", "A6", "L2(7)"):
        aut = load(name).aut
        for h, t, _ in aut.involution_classes():
            alpha = aut.automorphism(h, t)
            st_ = aut_stabilizer(aut, alpha)
            assert quasi_fusion_class(alpha, 0, st_).tolist() == signed_fix_data(alpha).omega.tolist()


def test_quasi_fusion_sigma_a_singleton(L27):
    g = L27.group
    aut = L27.aut
    for x in g.involutions()[:5]:
        alpha = inner(g, int(x))
        assert quasi_fusion_class(alpha, int(x), aut_stabilizer(aut, alpha)).tolist() == [int(x)]


def test_quasi_fusion_partition(A6):
    aut = A6.aut
    for h, t, _ in aut.involution_classes():
        alpha = aut.automorphism(h, t)
        labels = quasi_fusion_labels(alpha, aut_stabilizer(aut, alpha))
        assert labels.min() == 0 and labels.size == A6.order
        # each class equals the brute-force orbit of its smallest member
        for lab in np.unique(labels):
            members = np.nonzero(labels == lab)[0]
            assert set(quasi_fusion_class(alpha, int(members[-1]), aut_stabilizer(aut, alpha))) == set(members)


def test_quasi_fusion_brute_a5(A5, a5_aut_tables):
    g = A5.group
    aut = A5.aut
    for h, t, _ in aut.involution_classes():
        alpha = aut.automorphism(h, t)
        cent = brute_centralizer(a5_aut_tables, alpha)
        st_ = aut_stabilizer(aut, alpha)
        for a in range(0, 60, 7):
            brute = {int(g.mul(g.mul(alpha(x), c[a]), g.inv[x])) for x in range(60) for c in cent}
            assert set(quasi_fusion_class(alpha, a, st_).tolist()) == brute


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 359))
def test_equivariance(A6, seed, a):
    aut = A6.aut
    rng = np.random.default_rng(seed)
    reps = aut.involution_classes()
    h, t, _ = reps[seed % len(reps)]
    alpha = aut.automorphism(h, t)
    d = aut.random_element(rng)
    delta = aut.automorphism(*d)
    beta = alpha.conjugate_by(delta)
    lhs = np.sort(delta(quasi_fusion_class(alpha, a, aut_stabilizer(aut, alpha))))
    rhs = quasi_fusion_class(beta, int(delta(a)), aut_stabilizer(aut, beta))
    assert lhs.tolist() == rhs.tolist()


# -- fusion counts --------------------------------------------------------------------------


def test_fusion_counts(A5, a5_aut_tables):
    assert fusion_class_count(A5.aut, 1) == 1
    assert fusion_class_count(A5.aut, 5) == 1
    g = A5.group
    fives = [i for i in range(60) if g.order_of(i) == 5]
    orbit = {int(t[fives[0]]) for t in a5_aut_tables}
    assert orbit == set(fives)


def test_fusion_count_nondivisor_warns(A5):
    with pytest.warns(UserWarning):
        assert fusion_class_count(A5.aut, 7) == 0


@pytest.mark.parametrize("name", ["L2(8)", "M11", "Sz(8)"])
def test_fusion_two_is_one(load, name):
    assert fusion_class_count(load(name).aut, 2) == 1
