import pytest
from hypothesis import given
from hypothesis import strategies as st

from instances import a2, build, crown, crown7, loop, point, presentations, unchecked_loop
from qhh.basis import build_automaton, enumerate_basis, is_finite_dimensional, is_nonzero
from qhh.errors import InfiniteDimensional
from qhh.generator import all_paths
from qhh.presentation import Path, vertex_path


def brute_basis(p, bound):
    """Every path of length <= bound with no relation as a factor."""
    rels = [r.arrows for r in p.relations]

    def clean(w):
        return not any(w[i : i + len(r)] == r for r in rels for i in range(len(w) - len(r) + 1))

    out = {vertex_path(v) for v in p.vertices}
    out.update(q for q in all_paths(p, 1, bound) if clean(q.arrows))
    return out


def test_loop_automaton_states():
    aut = build_automaton(loop(2))
    s0 = aut.start("u")
    s1 = aut.step(s0, "a")
    assert aut.suffix(s0) == () and aut.suffix(s1) == ("a",)
    assert aut.step(s1, "a") is None
    assert aut.live_states() == {s0, s1}


def test_no_relations_mirror_arrows():
    p = a2()
    aut = build_automaton(p)
    for st_ in aut.live_states():
        assert aut.suffix(st_) == ()
    assert list(aut.transitions(aut.start("u"))) == [("a", ("v", 0))]
    assert list(aut.transitions(aut.start("v"))) == []


def test_crown_states_track_relation_prefixes():
    p = crown7()
    aut = build_automaton(p)
    traversal = [tuple(reversed(r.arrows)) for r in p.relations]
    for s in aut.live_states():
        word = tuple(reversed(aut.suffix(s)))
        assert any(len(word) < len(t) and t[: len(word)] == word for t in traversal)


def test_finiteness():
    assert is_finite_dimensional(build_automaton(loop(2)))
    assert not is_finite_dimensional(build_automaton(unchecked_loop()))
    assert is_finite_dimensional(build_automaton(crown7()))
    with pytest.raises(InfiniteDimensional) as exc:
        enumerate_basis(unchecked_loop())
    assert exc.value.cycle == ("a",)


def test_small_bases():
    b = enumerate_basis(point())
    assert [q.arrows for q in b] == [()] and len(b) == 1
    b = enumerate_basis(loop(2))
    assert sorted(q.arrows for q in b) == [(), ("a",)]


def test_crown_n2_m2_basis():
    p = crown(2, 2)
    b = enumerate_basis(p)
    assert len(b) == len(brute_basis(p, 4))
    assert set(b.paths) == brute_basis(p, 4)


def test_is_nonzero_examples():
    p = loop(2)
    b = enumerate_basis(p)
    assert is_nonzero(vertex_path("u"), b)
    assert not is_nonzero(p.path(["a", "a"]), b)
    c7 = crown7()
    assert not is_nonzero(c7.path(["a3", "a2", "a1", "a0"]), enumerate_basis(c7))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_loop_power_dimension(n):
    assert len(enumerate_basis(loop(n))) == n


@given(presentations())
def test_basis_matches_brute_force(p):
    b = enumerate_basis(p)
    assert set(b.paths) == brute_basis(p, b.max_length + 1)


@given(presentations())
def test_basis_structure(p):
    b = enumerate_basis(p)
    assert len(b.by_length.get(0, [])) == len(p.vertices)
    assert len(b.by_length.get(1, [])) == len(p.arrows)
    for q in b.paths:
        for i in range(q.length):
            for j in range(i + 1, q.length + 1):
                sub = p.path(q.arrows[i:j])
                assert sub in b


@given(presentations(), st.data())
def test_products_and_automaton_agree(p, data):
    b = enumerate_basis(p)
    aut = build_automaton(p)
    beta = data.draw(st.sampled_from(b.paths))
    for a in p.arrows:
        ap = Path((a.id,), a.source, a.target)
        if a.source != beta.target:
            continue
        prod = ap * beta
        assert is_nonzero(prod, b) == aut.accepts(prod)
        rels = [r.arrows for r in p.relations]
        has_rel = any(prod.arrows[i : i + len(r)] == r for r in rels for i in range(prod.length))
        assert (b.mul(ap, beta) is None) == has_rel
