import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abacrystal.abacus import AbacusConfig, abacus_f_descending, compact_for_weight, descending_configs
from abacrystal.charformula import lambda_prime
from abacrystal.cpp import (
    CylindricPartition,
    InvalidCPPError,
    abacus_to_cpp,
    box_candidates,
    cpp_e,
    cpp_f,
    cpp_to_abacus,
    enumerate_cpps,
    is_valid,
    lambda_of_cpp,
    reflect,
    validate,
    zero_cpp,
)
from abacrystal.verify import bijection_report

# boundary of the period-9 example: n = 3, ell = 6
WIDE_CHARGES = (2, 1, 1, 1, 0, 0)


def test_wide_boundary_weights():
    z = zero_cpp(3, WIDE_CHARGES)
    assert lambda_of_cpp(z) == (2, 3, 1)
    r = reflect(z)
    assert (r.n, r.ell) == (6, 3)
    assert lambda_of_cpp(r) == (1, 1, 0, 0, 1, 0) == lambda_prime((2, 3, 1))


def test_validate_rejects_bad_arrays():
    with pytest.raises(InvalidCPPError):
        validate(CylindricPartition(3, 2, (0, 1), ((), ())))
    with pytest.raises(InvalidCPPError):
        validate(CylindricPartition(3, 2, (1, 0), ((1,), (2, 2))))
    assert is_valid(CylindricPartition(3, 2, (1, 0), ((2,), (1,))))


def test_json_roundtrip():
    p = CylindricPartition(3, 2, (1, 0), ((3, 1), (2, 1, 1)))
    assert CylindricPartition.from_json(p.to_json()) == p


@pytest.mark.parametrize("lam", [(1, 1, 0), (2, 1), (1, 2, 1), (2, 3, 1)])
def test_reflection_is_a_size_preserving_involution(lam):
    charges = compact_for_weight(lam).charges
    for p in enumerate_cpps(len(lam), charges, 6):
        r = reflect(p)
        assert is_valid(r)
        assert r.size == p.size
        assert reflect(r) == p


@pytest.mark.parametrize("lam", [(1, 1, 0), (2, 1), (1, 1)])
def test_bijection_and_transport_small(lam):
    report = bijection_report(lam, 8)
    assert report["pass"], report
    assert report["objects"] == report["cpps"]


def test_weight_zero_has_one_object_each_side():
    report = bijection_report((1, 1, 0), 0)
    assert report["objects"] == report["cpps"] == 1 and report["pass"]


def test_box_blocked_by_neighbour_row_still_brackets():
    psi = AbacusConfig.from_rows(3, [(1, (3,)), (0, (2, 1))])
    pi = abacus_to_cpp(psi)
    assert cpp_to_abacus(pi) == psi
    assert cpp_f(pi, 0) == abacus_to_cpp(abacus_f_descending(psi, 0))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(1, 1, 0), (2, 1), (1, 2, 1), (0, 1, 0, 1)]), st.data())
def test_candidate_boxes_have_distinct_order_keys(lam, data):
    configs = list(descending_configs(compact_for_weight(lam), 6))
    pi = abacus_to_cpp(data.draw(st.sampled_from(configs)))
    for i in range(len(lam)):
        box_candidates(pi, i)  # asserts distinct keys
        up = cpp_f(pi, i)
        if up is not None:
            assert cpp_e(up, i) == pi
            assert up.size == pi.size + 1


def test_enumeration_counts_small():
    # (n, ell) = (2, 1): ordinary partitions
    counts = [0] * 8
    for p in enumerate_cpps(2, (0,), 7):
        counts[p.size] += 1
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15]


def test_figure_array_is_the_tight_figure():
    pi = CylindricPartition(3, 4, (2, 1, 1, 0), ((3, 1), (3, 2), (2, 1), (4, 2)))
    assert is_valid(pi)
    assert pi.size == 18
    assert lambda_of_cpp(pi) == (1, 2, 1)
    tight = AbacusConfig.from_rows(3, [(2, (2, 1, 1)), (1, (2, 2, 1)), (1, (2, 1)), (0, (2, 2, 1, 1))])
    assert cpp_to_abacus(pi) == tight
    assert abacus_to_cpp(tight) == pi
