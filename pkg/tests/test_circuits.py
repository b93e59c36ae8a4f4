import random

from hypothesis import given
from hypothesis import strategies as st

from instances import a2, crown, crown5, crown7, loop, presentations, two_cycle
from qhh.basis import enumerate_basis, is_nonzero
from qhh.circuits import (
    CyclicPair,
    canonical_word,
    circuit_of,
    classify,
    cyclic_pairs,
    enumerate_W,
    least_rotation,
    period_multiplicity,
    relation_occurrences,
    rotations,
)
from qhh.presentation import vertex_path


def pair_words(pairs):
    label = lambda q: " ".join(q.arrows) or q.source
    return sorted((label(p.left), label(p.right)) for p in pairs)


def test_cyclic_pair_examples():
    b = enumerate_basis(a2())
    assert pair_words(cyclic_pairs("Q0", "B", b)) == [("u", "u"), ("v", "v")]
    b = enumerate_basis(loop(2))
    assert pair_words(cyclic_pairs("Q1", "B", b)) == [("a", "a"), ("a", "u")]
    zb = cyclic_pairs("Z", "B", b)
    assert pair_words(zb) == [("a a", "a"), ("a a", "u")]
    # only (aa, u) lies over the circuit of aa; (aa, a) closes up to aaa
    over_aa = [q for q in zb if circuit_of(q.cycle()).word == ("a", "a")]
    assert pair_words(over_aa) == [("a a", "u")]


def test_circuit_of_examples():
    k = circuit_of(vertex_path("u"))
    assert k.is_trivial and k.vertex == "u"
    p = two_cycle(["a b", "b a"])
    assert circuit_of(p.path(["b", "a"])) == circuit_of(p.path(["a", "b"]))


def gamma(n, m):
    return tuple(([f"a{i}" for i in range(n - 1, 0, -1)] + ["a0"]) * m)


def test_crown_powers_are_distinct_circuits():
    words = {circuit_of(crown(3, 4).path(gamma(3, m))) for m in (1, 2, 3)}
    assert len(words) == 3
    for m in (1, 2, 3):
        assert period_multiplicity(canonical_word(gamma(3, m))) == (3, m)


def test_period_multiplicity_examples():
    assert period_multiplicity(("a", "a")) == (1, 2)
    assert period_multiplicity(("a", "b", "c", "d")) == (4, 1)


def brute_min_rotation(w):
    return min(tuple(w[i:] + w[:i]) for i in range(len(w))) if w else ()


@given(st.lists(st.sampled_from("abc"), max_size=12))
def test_booth_matches_brute_force(w):
    w = tuple(w)
    assert canonical_word(w) == brute_min_rotation(w)
    if w:
        i = least_rotation(w)
        assert w[i:] + w[:i] == brute_min_rotation(w)


@given(st.lists(st.sampled_from("ab"), min_size=1, max_size=12))
def test_period_properties(w):
    l, m = period_multiplicity(w)
    assert len(w) % l == 0 and m >= 1 and l * m == len(w)
    assert (m == 1) == (len(set(rotations(w))) == len(w) == len(rotations(w)))
    assert len(rotations(w)) == l


def test_W_on_loop():
    p = loop(2)
    W = enumerate_W(p, enumerate_basis(p))
    assert [g.arrows for g, _ in W] == [("a", "a")]
    census = classify(p, enumerate_basis(p))
    assert census.circuits[circuit_of(p.path(["a", "a"]))].w == 1


def test_z5_canonical_circuit():
    p = crown5()
    census = classify(p, enumerate_basis(p))
    c = census.circuits[circuit_of(p.path(["a4", "a3", "a2", "a1", "a0"]))]
    assert len(c.z_pairs) == 2 and c.w == 1
    assert c.efficient


def test_z7_census():
    p = crown7()
    census = classify(p, enumerate_basis(p))
    assert census.s == 0 and census.e == 1
    (c,) = census.efficient
    assert c.key == circuit_of(p.path(gamma(7, 1)))
    assert c.w == 1
    assert all(c.is_p_prime(q) for q in (2, 3, 5, 7, 11))


def test_crown_family_census():
    for n in (2, 3, 4):
        for m in (2, 3, 4):
            p = crown(n, m)
            census = classify(p, enumerate_basis(p))
            strong = {c.key for c in census.strong}
            assert strong == {circuit_of(p.path(gamma(n, i))) for i in range(1, m)}
            (eff,) = census.efficient
            assert eff.key == circuit_of(p.path(gamma(n, m)))
            assert eff.multiplicity == m
            for q in (2, 3, 5):
                assert eff.is_p_prime(q) == (m % q != 0)


def test_loop_census():
    p = loop(2)
    census = classify(p, enumerate_basis(p))
    assert census.s == 1 and census.e == 1
    (c,) = census.efficient
    assert c.word == ("a", "a") and c.multiplicity == 2


@given(presentations())
def test_census_invariants(p):
    b = enumerate_basis(p)
    census = classify(p, b)
    assert census.w == census.q1_b - census.q0_b + census.n_vertices
    for c in census.circuits.values():
        if c.trivial or not c.efficient:
            assert c.w == 0
        if c.strong and not c.trivial:
            assert c.useful
            for rot in rotations(c.word):
                assert is_nonzero(p.path(rot), b)
        if c.efficient:
            assert c.useful and not c.strong
    for gamma_, key in census.W:
        occ = relation_occurrences(gamma_, p.relations)
        assert len(occ) == 1 and occ[0][0] == 0


@given(presentations(), st.randoms(use_true_random=False))
def test_census_independent_of_basis_order(p, rnd: random.Random):
    b = enumerate_basis(p)
    shuffled = list(b.paths)
    rnd.shuffle(shuffled)
    b2 = type(b)(p, tuple(shuffled), {q: i for i, q in enumerate(shuffled)}, b.by_endpoints, b.by_length, b.max_length)
    c1, c2 = classify(p, b), classify(p, b2)
    summary = lambda c: sorted(
        (k, x.strong, x.useful, x.efficient, x.w, len(x.q1_pairs), len(x.z_pairs))
        for k, x in c.circuits.items()
    )
    assert summary(c1) == summary(c2)


def test_cyclic_pair_flip():
    p = crown7()
    b = enumerate_basis(p)
    for pair in cyclic_pairs("B", "B", b)[:50]:
        assert pair.flip().flip() == pair
        assert circuit_of(pair.flip().cycle()) == circuit_of(pair.cycle())
        assert isinstance(pair, CyclicPair)
