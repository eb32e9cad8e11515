"""Tests for Freudenthal's recursion, Weyl's dimension formula, tensor
coefficients, and Levi restriction checks."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidchar.errors import NotDominant, SupportFull
from rigidchar.rootsystem import (
    minus_w0,
    rho_height,
    root_system,
    weyl_orbit,
)
from rigidchar.charring import saturated_dominants
from rigidchar.weylchar import (
    character_table,
    freudenthal_char,
    levi_check,
    levi_subsystem,
    restrict_weight,
    tensor_coeffs,
    weyl_dimension,
)

CONFIGS = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4)]


def small_weights(rank, bound=2):
    return st.tuples(*[st.integers(min_value=0, max_value=bound)] * rank)


# ---------------------------------------------------------------------------
# Freudenthal


def test_adjoint_a2():
    rs = root_system("A", 2)
    assert freudenthal_char(rs, (1, 1)) == {(1, 1): 1, (0, 0): 2}


def test_adjoint_b2():
    rs = root_system("B", 2)
    assert freudenthal_char(rs, (0, 2)) == {(0, 2): 1, (1, 0): 1, (0, 0): 2}


def test_freudenthal_rejects_nondominant():
    with pytest.raises(NotDominant):
        freudenthal_char(root_system("A", 2), (1, -1))


@pytest.mark.parametrize("series,rank", CONFIGS)
@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_multiplicities_positive_on_saturated_set(series, rank, data):
    rs = root_system(series, rank)
    lam = data.draw(small_weights(rank))
    ch = freudenthal_char(rs, lam)
    assert set(ch) == set(saturated_dominants(rs, lam))
    assert all(m >= 1 for m in ch.values())
    assert ch[lam] == 1


@pytest.mark.parametrize("series,rank", CONFIGS)
@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_character_self_dual_under_minus_w0(series, rank, data):
    rs = root_system(series, rank)
    lam = data.draw(small_weights(rank))
    ch = freudenthal_char(rs, lam)
    dual = {minus_w0(rs, mu): m for mu, m in ch.items()}
    assert dual == freudenthal_char(rs, minus_w0(rs, lam))


def test_character_table_caches_rows():
    rs = root_system("A", 2)
    table = character_table(rs)
    assert table.row((1, 1)) is table.row((1, 1))
    assert table.row((1, 1)) == freudenthal_char(rs, (1, 1))


# ---------------------------------------------------------------------------
# Dimensions


@pytest.mark.parametrize(
    "series,rank,lam,dim",
    [
        ("A", 2, (1, 1), 8),
        ("A", 2, (1, 0), 3),
        ("A", 3, (0, 1, 0), 6),
        ("B", 2, (1, 0), 5),
        ("B", 2, (0, 1), 4),
        ("B", 3, (0, 0, 1), 8),
        ("C", 3, (1, 0, 0), 6),
        ("D", 4, (1, 0, 0, 0), 8),
        ("D", 4, (0, 0, 0, 1), 8),
    ],
)
def test_weyl_dimension_examples(series, rank, lam, dim):
    assert weyl_dimension(root_system(series, rank), lam) == dim


@pytest.mark.parametrize("series,rank", CONFIGS)
@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_dimension_equals_orbit_weighted_sum(series, rank, data):
    rs = root_system(series, rank)
    lam = data.draw(small_weights(rank))
    ch = freudenthal_char(rs, lam)
    total = sum(m * len(weyl_orbit(rs, mu)) for mu, m in ch.items())
    assert total == weyl_dimension(rs, lam)


# ---------------------------------------------------------------------------
# Tensor coefficients


def test_tensor_a2():
    rs = root_system("A", 2)
    assert tensor_coeffs(rs, (1, 0), (0, 1)) == {(1, 1): 1, (0, 0): 1}


def test_tensor_a1():
    rs = root_system("A", 1)
    assert tensor_coeffs(rs, (1,), (1,)) == {(2,): 1, (0,): 1}


@pytest.mark.parametrize("series,rank", CONFIGS)
@settings(max_examples=10, deadline=None)
@given(data=st.data())
def test_tensor_symmetric_and_dimension_preserving(series, rank, data):
    rs = root_system(series, rank)
    a = data.draw(small_weights(rank, 1))
    b = data.draw(small_weights(rank, 1))
    c = tensor_coeffs(rs, a, b)
    assert c == tensor_coeffs(rs, b, a)
    total = sum(n * weyl_dimension(rs, lam) for lam, n in c.items())
    assert total == weyl_dimension(rs, a) * weyl_dimension(rs, b)


def test_tensor_cartan_component():
    rs = root_system("B", 3)
    a, b = (1, 0, 1), (0, 1, 0)
    c = tensor_coeffs(rs, a, b)
    top = (1, 1, 1)
    assert c[top] == 1
    assert all(rho_height(rs, lam) <= rho_height(rs, top) for lam in c)


# ---------------------------------------------------------------------------
# Levi restriction


def test_levi_subsystem_shape():
    b3 = root_system("B", 3)
    sub = levi_subsystem(b3, (0, 1))
    assert sub.rank == 2
    assert [list(r) for r in sub.cartan] == [[2, -1], [-1, 2]]


def test_restrict_weight():
    assert restrict_weight((3, 1, 2), (0, 2)) == (3, 2)


def test_levi_check_true_on_proper_support():
    b3 = root_system("B", 3)
    # lam - mu = alpha_2 + alpha_3: support {2, 3}, proper
    assert levi_check(b3, (0, 1, 0), (1, 0, 0))


def test_levi_check_full_support_raises():
    a2 = root_system("A", 2)
    with pytest.raises(SupportFull):
        levi_check(a2, (1, 1), (0, 0))


@pytest.mark.parametrize("series,rank", [("A", 3), ("B", 3), ("D", 4)])
def test_levi_check_sweep_small(series, rank):
    rs = root_system(series, rank)
    lam = (1,) * rank
    for mu in saturated_dominants(rs, lam):
        if mu == lam:
            continue
        try:
            assert levi_check(rs, lam, mu)
        except SupportFull:
            pass
