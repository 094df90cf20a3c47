from collections import Counter, deque

import pytest

from abacrystal.commutor import (
    FactorModel,
    WordCrystal,
    NotReducedError,
    build_B,
    data_is_injective,
    hook_content_dimension,
    involution_violations,
    is_crystal_isomorphism,
    is_reduced_longest,
    kashiwara_down,
    longest_words,
    schutzenberger,
    shapes_up_to,
    sigma_table,
    standard_crystal,
    tensor_elements,
    verify_star_characterization,
    word_weight,
)


def reverse_complement(word, m):
    return tuple(m + 1 - a for a in reversed(word))


def matching_isomorphism(left, right, m):
    """Oracle for multiplicity-free products: pair highest weight elements by weight, then walk f."""
    model = FactorModel(m)

    def weight_of(x):
        return tuple(map(sum, zip(*(word_weight(w, m) for w in x))))

    def highs(shapes):
        return {
            weight_of(x): x
            for x in tensor_elements(shapes, m)
            if all(model.epsilon(x, i) == 0 for i in model.indices)
        }

    src, dst = highs(left + right), highs(right + left)
    assert src.keys() == dst.keys()
    table = {}
    for wt, x in src.items():
        table[x] = dst[wt]
        queue = deque([x])
        while queue:
            a = queue.popleft()
            for i in model.indices:
                b = model.f(a, i)
                if b is not None and b not in table:
                    table[b] = model.f(table[a], i)
                    queue.append(b)
    return table


def is_multiplicity_free(shapes, m):
    model = FactorModel(m)
    highs = [x for x in tensor_elements(shapes, m) if all(model.epsilon(x, i) == 0 for i in model.indices)]
    weights = Counter(tuple(map(sum, zip(*(word_weight(w, m) for w in x)))) for x in highs)
    return max(weights.values()) == 1


def test_irreducible_sizes():
    assert len(build_B((1,), 3)) == 3
    assert len(build_B((2, 1), 3)) == 8
    assert len(build_B((1, 1, 1), 3)) == 1
    assert len(build_B((), 3)) == 1
    for lam in shapes_up_to(5, 4):
        assert len(build_B(lam, 4)) == hook_content_dimension(lam, 4)
    with pytest.raises(ValueError):
        build_B((1, 1, 1, 1), 3)


def test_standard_crystal_involution_reverses_letters():
    xi = schutzenberger(build_B((1,), 3))
    assert xi == {(1,): (3,), (2,): (2,), (3,): (1,)}
    assert standard_crystal(3) == [(1,), (2,), (3,)]


@pytest.mark.parametrize("lam", [(2,), (3,), (1, 1), (1, 1, 1), (4,)])
@pytest.mark.parametrize("m", [3, 4])
def test_involution_on_rows_and_columns_is_reverse_complement(lam, m):
    if len(lam) > m:
        pytest.skip("too many rows")
    B = build_B(lam, m)
    xi = schutzenberger(B)
    assert xi == {w: reverse_complement(w, m) for w in B.vertices}


@pytest.mark.parametrize("lam,mu", [((1,), (1,)), ((2,), (1,)), ((1, 1), (1,)), ((2,), (1, 1)), ((2, 1), (1,))])
def test_commutor_agrees_with_unique_isomorphism(lam, mu):
    m = 3
    assert is_multiplicity_free((lam, mu), m)
    assert sigma_table((lam,), (mu,), m) == matching_isomorphism((lam,), (mu,), m)


def test_commutor_on_square_of_standard_is_identity():
    table = sigma_table(((1,),), ((1,),), 3)
    assert all(x == y for x, y in table.items())


def test_naive_flip_is_not_a_morphism():
    flip = {x: (x[1], x[0]) for x in tensor_elements(((2,), (1,)), 3)}
    assert not is_crystal_isomorphism(flip, 3)
    assert is_crystal_isomorphism(sigma_table(((2,),), ((1,),), 3), 3)


def test_commutor_squares_to_identity_small():
    for lam in shapes_up_to(2, 3):
        for mu in shapes_up_to(2, 3):
            assert not involution_violations(lam, mu, 3)


def test_reduced_words():
    assert longest_words(3) == [(1, 2, 1), (2, 1, 2)]
    assert longest_words(2) == [(1,)]
    assert all(is_reduced_longest(w, 4) for w in longest_words(4))
    assert not is_reduced_longest((1, 1, 2), 3)
    with pytest.raises(NotReducedError):
        kashiwara_down((1,), (1, 1, 2), WordCrystal(3), 3)


@pytest.mark.parametrize("lam", [(2, 1), (3, 1), (2, 2, 1)])
def test_string_data_is_injective(lam):
    B = build_B(lam, 4)
    for w in longest_words(4):
        assert data_is_injective(B, w)


@pytest.mark.parametrize("lam,mu", [((1,), (1,)), ((2, 1), (1,)), ((2,), (2, 1)), ((1, 1), (2, 1))])
def test_string_data_relations_at_highest_elements(lam, mu):
    for w in longest_words(3):
        reports = verify_star_characterization(lam, mu, 3, w)
        assert reports
        assert all(r["pass"] for r in reports), [r["checks"] for r in reports if not r["pass"]]
