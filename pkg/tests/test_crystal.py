from hypothesis import given
from hypothesis import strategies as st

from abacrystal.commutor import WordCrystal
from abacrystal.crystal import (
    CLOSE,
    OPEN,
    TensorModel,
    check_local_axioms,
    components,
    explore,
    finite_cartan,
    first_open,
    highest_weight_elements,
    last_close,
    q_character,
    tensor_e,
    tensor_f,
    uncanceled,
)


class StringCrystal:
    """sl2 crystal of dimension size+1; element k has phi = size - k."""

    indices = (1,)

    def __init__(self, size):
        self.size = size

    def f(self, k, i):
        return k + 1 if k < self.size else None

    def e(self, k, i):
        return k - 1 if k > 0 else None

    def epsilon(self, k, i):
        return k

    def phi(self, k, i):
        return self.size - k


def seeds_of(model, elements):
    """Highest weight elements at degree 0."""
    return [(x, 0) for x in elements if all(model.e(x, i) is None for i in model.indices)]


def test_bracket_helpers():
    brackets = [(CLOSE, "a"), (OPEN, "b"), (CLOSE, "c"), (OPEN, "d"), (OPEN, "e"), (CLOSE, "f")]
    assert uncanceled(brackets) == (1, 1)
    assert first_open(brackets) == "d"
    assert last_close(brackets) == "a"
    assert first_open([]) is None and last_close([(OPEN, 0)]) is None


def test_sl2_tensor_square_splits_by_clebsch_gordan():
    model = TensorModel(StringCrystal(2))
    g = explore(model, seeds_of(model, [(a, b) for a in range(3) for b in range(3)]), 10)
    assert sorted(len(c) for c in components(g)) == [1, 3, 5]


class Mixed:
    """Pairs go through the tensor rule, integers through the string crystal."""

    indices = (1,)

    def __init__(self, size):
        self.base = StringCrystal(size)
        self.pair = TensorModel(self.base)

    def _pick(self, b):
        return self.pair if isinstance(b, tuple) else self.base

    def f(self, b, i):
        return self._pick(b).f(b, i)

    def e(self, b, i):
        return self._pick(b).e(b, i)

    def epsilon(self, b, i):
        return self._pick(b).epsilon(b, i)

    def phi(self, b, i):
        return self._pick(b).phi(b, i)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_tensor_product_is_associative(a, b, c):
    mixed = Mixed(3)
    flat = TensorModel(StringCrystal(3))
    for op in (tensor_f, tensor_e):
        x = op(mixed, ((a, b), c), 1)
        y = op(mixed, (a, (b, c)), 1)
        z = op(flat.base, (a, b, c), 1)
        assert (None if x is None else (*x[0], x[1])) == z
        assert (None if y is None else (y[0], *y[1])) == z


def test_standard_square_of_sl3_has_components_6_and_3():
    words = [(a, b) for a in (1, 2, 3) for b in (1, 2, 3)]
    g = explore(WordCrystal(3), seeds_of(WordCrystal(3), words), 10)
    assert sorted(len(c) for c in components(g)) == [3, 6]
    assert sorted(highest_weight_elements(g)) == [(1, 1), (1, 2)]


def test_word_crystal_passes_local_axioms():
    words = [(a, b, c) for a in (1, 2, 3) for b in (1, 2, 3) for c in (1, 2, 3)]
    g = explore(WordCrystal(3), seeds_of(WordCrystal(3), words), 20)
    report = check_local_axioms(g, finite_cartan(3))
    assert report.passed, report.violations[:3]


def test_recolored_edge_is_caught():
    words = [(a, b) for a in (1, 2, 3) for b in (1, 2, 3)]
    g = explore(WordCrystal(3), seeds_of(WordCrystal(3), words), 10)
    s, i, t = g.edges[0]
    g.edges[0] = (s, 3 - i, t)
    assert not check_local_axioms(g, finite_cartan(3)).passed


def test_exploration_does_not_depend_on_color_order():
    seeds = [((1, 1, 2), 0)]
    a = explore(WordCrystal(4), seeds, 6)
    b = explore(WordCrystal(4), seeds, 6, reverse_colors=True)
    assert a.vertex_set() == b.vertex_set()
    assert a.edge_set() == b.edge_set()
    assert a.degree == b.degree
    assert q_character(a, 6) == q_character(b, 6)
