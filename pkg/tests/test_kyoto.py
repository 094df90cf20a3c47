import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abacrystal.abacus import AbacusConfig, AbacusCrystal, compact_for_weight
from abacrystal.charformula import dimq_V
from abacrystal.crystal import affine_cartan, check_local_axioms, explore, q_character
from abacrystal.kyoto import (
    J,
    NotTightError,
    Path,
    PathCrystal,
    PerfectCrystal,
    ground_factor,
    ground_state_path,
    path_e,
    path_f,
    paths_up_to,
    perfect_elements,
)
from abacrystal.verify import PERFECT_3_2_EDGES, kyoto_report, perfect_crystal_edges


def test_perfect_crystal_level_two_rank_three_edges():
    assert perfect_crystal_edges(3, 2) == PERFECT_3_2_EDGES
    assert len(perfect_elements(3, 2)) == 6


@pytest.mark.parametrize("n,ell", [(2, 1), (2, 3), (3, 2), (4, 2)])
def test_perfect_crystal_strings(n, ell):
    pc = PerfectCrystal(n, ell)
    for b in pc.elements():
        for i in range(n):
            up = pc.f(b, i)
            assert pc.phi(b, i) == (0 if up is None else 1 + pc.phi(up, i))
            if up is not None:
                assert pc.e(up, i) == b


@pytest.mark.parametrize("lam", [(1, 1), (1, 1, 0), (1, 2, 1), (2, 0, 1)])
def test_ground_state_is_periodic_and_balanced(lam):
    n = len(lam)
    pc = PerfectCrystal(n, sum(lam))
    for k in range(1, 50 * n):
        assert ground_factor(lam, k) == ground_factor(lam, k + n)
        left, right = ground_factor(lam, k + 1), ground_factor(lam, k)
        # neighbours cancel exactly: phi of the deeper factor equals epsilon of the next
        for i in range(n):
            assert pc.phi(left, i) == pc.epsilon(right, i)


def test_ground_state_path_is_highest_weight():
    p = ground_state_path((1, 2, 1))
    crystal = PathCrystal(3)
    assert all(crystal.e(p, i) is None for i in range(3))
    assert [crystal.phi(p, i) for i in range(3)] == [1, 2, 1]


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([(1, 1), (1, 1, 0), (2, 1)]), st.integers(1, 3), st.data())
def test_operators_ignore_extra_ground_factors(lam, depth, data):
    p = data.draw(st.sampled_from(list(paths_up_to(lam, depth))))
    for i in range(len(lam)):
        for extra in (0, 1, 5):
            assert path_f(p, i, p.support + extra) == path_f(p, i)
            assert path_e(p, i, p.support + extra) == path_e(p, i)


def test_depth_must_cover_support():
    p = Path((1, 1), ((2, (0, 0)),))
    with pytest.raises(ValueError):
        path_f(p, 0, 1)


def test_path_json_and_overrides():
    lam = (1, 1, 0)
    p = Path(lam, ((1, ground_factor(lam, 1)), (2, (0, 2))))
    assert p.overrides == ((2, (0, 2)),)
    assert Path.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        Path(lam, ((0, (0, 1)),))


@pytest.mark.parametrize("lam", [(1, 1), (1, 1, 0), (2, 1), (2, 0)])
def test_abacus_ball_maps_onto_path_ball(lam):
    assert kyoto_report(lam, 6)["pass"]


def test_path_ball_counts_match_specialized_character():
    g = explore(PathCrystal(3), ground_state_path((1, 1, 0)), 7)
    assert q_character(g, 7) == list(dimq_V((1, 1, 0), 3, 7))


def test_path_ball_passes_local_axioms():
    g = explore(PathCrystal(3), ground_state_path((1, 2, 0)), 6)
    assert check_local_axioms(g, affine_cartan(3)).passed


def test_J_rejects_loose_configurations():
    loose = AbacusConfig.from_rows(3, [(1, (5, 3, 2, 2, 1)), (0, (5, 4, 3, 2, 1)), (0, (4, 3, 1, 1)), (0, (4, 3, 1))])
    with pytest.raises(NotTightError):
        J(loose)


def test_J_sends_compact_to_ground_state():
    for lam in [(1, 2, 1), (0, 1, 0, 1), (3, 1)]:
        assert J(compact_for_weight(lam)) == ground_state_path(lam)


def test_J_is_equivariant_on_a_ball():
    g = explore(AbacusCrystal(4, "descending"), compact_for_weight((0, 1, 0, 1)), 5)
    for s, i, t in g.edges:
        assert path_f(J(s), i) == J(t)
