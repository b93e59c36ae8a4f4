import pytest
from hypothesis import given

from instances import a2, build, chars, crown, crown5, crown7, disjoint_loops, loop, presentations
from qhh import oracle
from qhh.basis import enumerate_basis
from qhh.circuits import classify
from qhh.errors import InternalCrossCheckFailure
from qhh.hh1 import dim_hh1, hh1_vanishes, total_hh1
from qhh.presentation import connected_components


def hh1(p, ch):
    return dim_hh1(classify(p, enumerate_basis(p)), ch)


@pytest.mark.parametrize("ch", [0, 2, 3, 5, 7])
def test_z5_crown_vanishes(ch):
    p = crown5()
    assert hh1(p, ch).dimension == 0
    assert hh1_vanishes(classify(p, enumerate_basis(p)), ch)[0]


@pytest.mark.parametrize("ch", [0, 2, 3, 5, 7])
def test_z7_crown_vanishes(ch):
    p = crown7()
    assert hh1(p, ch).dimension == 0
    assert hh1_vanishes(classify(p, enumerate_basis(p)), ch)[0]


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("ch", [0, 2, 3, 5])
def test_crown_family(n, m, ch):
    expected = m if ch and m % ch == 0 else m - 1
    assert hh1(crown(n, m), ch).dimension == expected


def test_loop():
    assert hh1(loop(2), 0).dimension == 1
    assert hh1(loop(2), 2).dimension == 2
    ok, why = hh1_vanishes(classify(loop(2), enumerate_basis(loop(2))), 0)
    assert not ok and why is not None


def test_both_expressions_reported():
    r = hh1(crown(3, 3), 3)
    assert r.via_w == r.via_pair_counts == r.dimension == 3
    assert sum(r.per_circuit.values()) == 3


def test_cross_check_failure_is_loud():
    p = crown7()
    census = classify(p, enumerate_basis(p))
    census.q1_b += 1
    with pytest.raises(InternalCrossCheckFailure) as exc:
        dim_hh1(census, 0)
    assert "via_pair_counts" in exc.value.details


def test_total_over_components():
    assert total_hh1(connected_components(disjoint_loops()), 0) == 2
    assert total_hh1(connected_components(a2()), 3) == 0
    p = crown7()
    assert total_hh1(connected_components(p), 5) == hh1(p, 5).dimension


def test_tree_has_no_homology():
    p = build(["1", "2", "3", "4"], [("x", "1", "2"), ("y", "2", "3"), ("z", "4", "2")], ["y x"])
    for ch in (0, 2, 3):
        assert hh1(p, ch).dimension == 0


@given(presentations(), chars())
def test_formula_matches_homology_oracle(p, ch):
    b = enumerate_basis(p)
    assert hh1(p, ch).dimension == oracle.hh1_homology_dim(oracle.build_chain_slice(p, b), ch)


@given(presentations(), chars())
def test_vanishing_criterion_is_biconditional(p, ch):
    census = classify(p, enumerate_basis(p))
    assert hh1_vanishes(census, ch)[0] == (dim_hh1(census, ch).dimension == 0)


@given(presentations())
def test_characteristic_gap(p):
    census = classify(p, enumerate_basis(p))
    d0 = dim_hh1(census, 0).dimension
    for q in (2, 3, 5):
        gap = dim_hh1(census, q).dimension - d0
        assert gap == census.e - census.e_p_prime(q) >= 0
