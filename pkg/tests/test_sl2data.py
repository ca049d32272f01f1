"""Adjoint sl2-module data: grading pipeline vs closed formulas."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2magical.orbits import (
    Partition,
    enumerate_partitions,
    weighted_dynkin_from_partition,
)
from sl2magical.rootsystems import LieType, ad_grading, build_root_system
from sl2magical.sl2data import (
    dim_c_formula,
    dim_g0_formula,
    dim_v_rho_formula,
    is_even_triple,
    module_multiplicities,
    multiplicities_formula,
)


def _data_via_grading(t, p):
    rs = build_root_system(t)
    wdd = weighted_dynkin_from_partition(t, p)
    return module_multiplicities(ad_grading(rs, wdd))


def test_a4_subregular_row():
    t = LieType.of("A", 4)
    assert multiplicities_formula(t, Partition.parse("2^2,1")) == {0: 4, 1: 4, 2: 4}


def test_a4_principal_row():
    t = LieType.of("A", 4)
    n = multiplicities_formula(t, Partition.parse("5"))
    assert n == {2: 1, 4: 1, 6: 1, 8: 1}


def test_d4_very_even_row():
    t = LieType.of("D", 4)
    assert multiplicities_formula(t, Partition.parse("2^4")) == {0: 10, 2: 6}


def test_b2_subregular_row():
    t = LieType.of("B", 2)
    assert multiplicities_formula(t, Partition.parse("2^2,1")) == {0: 3, 1: 2, 2: 1}


@pytest.mark.parametrize("name", ["A3", "B2", "C3", "D4"])
def test_formula_matches_grading(name):
    t = LieType.of(name)
    for p in enumerate_partitions(t.family.value, t.matrix_size):
        d = _data_via_grading(t, p)
        assert multiplicities_formula(t, p) == d.as_dict()


def test_closed_dims_are_sums():
    t = LieType.of("C", 3)
    for p in enumerate_partitions("C", 6):
        n = multiplicities_formula(t, p)
        assert dim_c_formula(t, p) == n.get(0, 0)
        assert dim_g0_formula(t, p) == sum(v for j, v in n.items() if j % 2 == 0)
        assert dim_v_rho_formula(t, p) == sum(n.values())
        assert sum(v * (j + 1) for j, v in n.items()) == t.dim


def test_trivial_orbit_data():
    t = LieType.of("A", 3)
    p = Partition.parse("1^4")
    assert multiplicities_formula(t, p) == {0: t.dim}
    assert dim_c_formula(t, p) == t.dim


def test_even_triple_flag():
    t = LieType.of("A", 3)
    even = _data_via_grading(t, Partition.parse("2^2"))
    odd = _data_via_grading(t, Partition.parse("2,1,1"))
    assert is_even_triple(even)
    assert not is_even_triple(odd)


def test_data_accessors():
    t = LieType.of("A", 4)
    d = _data_via_grading(t, Partition.parse("2^2,1"))
    assert d.n_at(1) == 4
    assert d.n_at(7) == 0
    assert d.max_weight == 2
    assert d.dim_c == 4
    assert d.dim_g0 == 8
    assert d.dim_v_rho == 12
    assert d.n_row() == (4, 4, 4)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["A", "B", "C", "D"]), st.data())
def test_grading_weights_symmetric(letter, data):
    rank = {"A": 1, "B": 2, "C": 2, "D": 3}[letter]
    t = LieType.of(letter, data.draw(st.integers(min_value=rank, max_value=5)))
    parts = list(enumerate_partitions(letter, t.matrix_size))
    p = data.draw(st.sampled_from(parts))
    rs = build_root_system(t)
    g = ad_grading(rs, weighted_dynkin_from_partition(t, p))
    # ad_h spectrum is symmetric and its weight-j multiples recombine into
    # nonnegative module multiplicities
    for w in g.weights:
        assert g.dim_at(w) == g.dim_at(-w)
    d = module_multiplicities(g)
    assert all(v > 0 for v in d.as_dict().values())
    assert sum(m * (j + 1) for j, m in d.n) == t.dim
