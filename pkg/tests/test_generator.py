import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from instances import build
from qhh.basis import build_automaton, enumerate_basis, is_finite_dimensional
from qhh.generator import (
    GenConfig,
    coverage,
    exhaustive,
    generate,
    minimalize,
    take,
    two_nilpotent,
)
from qhh.presentation import Presentation, is_tree_without_double_arrows, serialize_presentation, validate


def test_replay_equality():
    cfg = GenConfig(max_vertices=2, max_arrows=2, seed=42)
    a = [serialize_presentation(p) for p in take(cfg, 25)]
    b = [serialize_presentation(p) for p in take(cfg, 25)]
    assert a == b
    other = [serialize_presentation(p) for p in take(GenConfig(max_vertices=2, max_arrows=2, seed=43), 25)]
    assert a != other


def test_exhaustive_single_loop():
    q = Presentation.build(["u"], [("a", "u", "u")], [], "loop")
    found = sorted(tuple(r.arrows for r in p.relations) for p in exhaustive(q, 3))
    assert found == [(("a", "a"),), (("a", "a", "a"),)]
    everything = list(exhaustive(q, 3, require_finite=False))
    assert len(everything) == 3


def test_exhaustive_two_cycle_is_complete():
    q = Presentation.build(["u", "v"], [("a", "u", "v"), ("b", "v", "u")], [], "c2")
    found = list(exhaustive(q, 3))
    keys = {frozenset(r.arrows for r in p.relations) for p in found}
    assert len(keys) == len(found)
    words = [("b", "a"), ("a", "b"), ("a", "b", "a"), ("b", "a", "b")]
    for mask in itertools.product([0, 1], repeat=4):
        rels = [w for w, m in zip(words, mask) if m]
        p = q.with_relations([q.path(w) for w in rels])
        try:
            validate(p)
        except Exception:
            continue
        finite = is_finite_dimensional(build_automaton(p))
        assert (frozenset(rels) in keys) == finite


@given(st.integers(0, 10**9), st.sampled_from(["any", "tree", "nontree"]), st.booleans())
def test_emitted_instances_are_valid_and_finite(seed, kind, connected):
    cfg = GenConfig(seed=seed, kind=kind, connected=connected)
    for p in take(cfg, 3):
        validate(p)
        assert is_finite_dimensional(build_automaton(p))
        assert len(enumerate_basis(p)) <= cfg.max_basis
        rels = [r.arrows for r in p.relations]
        assert all(2 <= len(r) <= cfg.max_relation_length for r in rels)
        assert len(p.vertices) <= cfg.max_vertices and len(p.arrows) <= cfg.max_arrows
        if kind == "tree":
            assert is_tree_without_double_arrows(p) and len(p.vertices) >= 2
        if kind == "nontree":
            assert not is_tree_without_double_arrows(p)


def test_infinite_allowed_when_not_required():
    cfg = GenConfig(seed=1, require_finite=False, relation_density=0.0)
    assert any(not is_finite_dimensional(build_automaton(p)) for p in take(cfg, 30))


def test_minimalize():
    q = build(["u"], [("a", "u", "u")])
    out = minimalize([q.path(["a"] * 3), q.path(["a", "a"]), q.path(["a", "a"])])
    assert [r.arrows for r in out] == [("a", "a")]


def test_two_nilpotent():
    p = two_nilpotent(Presentation.build(["u", "v"], [("a", "u", "v"), ("b", "v", "u")], []))
    assert sorted(r.arrows for r in p.relations) == [("a", "b"), ("b", "a")]
    assert enumerate_basis(p).max_length == 1


def test_default_run_coverage():
    cov = coverage(take(GenConfig(seed=0), 200))
    assert cov.total == 200
    assert all(v > 0 for v in cov.buckets().values()), cov.buckets()


def test_bad_configs():
    with pytest.raises(ValueError):
        GenConfig(max_relation_length=1)
    with pytest.raises(ValueError):
        GenConfig(kind="tree", max_vertices=1)
    with pytest.raises(ValueError):
        GenConfig(relation_density=2)
    gen = generate(GenConfig(seed=3))
    assert next(gen).name == "g3_0" and next(gen).name == "g3_1"
