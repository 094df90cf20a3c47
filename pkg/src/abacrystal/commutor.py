"""Type A_{m-1} crystals of words, the Schutzenberger involution and the
crystal commutor.

Letters are 1..m and f_i turns a letter i into i+1.  A word is read left to
right with each letter contributing ")" if it is i+1 and "(" if it is i, so
highest weight words are lattice words such as 1 1 2 3.  Elements of a tensor
product of irreducible crystals are tuples of words, one per factor; the
operators act on the concatenation.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .crystal import CLOSE, OPEN, first_open, last_close, uncanceled
from .partitions import conjugate, normalize, partitions_of


class NotIrreducibleError(RuntimeError):
    pass


class NotReducedError(ValueError):
    pass


# -- words -------------------------------------------------------------------


def _word_brackets(word: Sequence[int], i: int):
    out = []
    for pos, a in enumerate(word):
        if a == i + 1:
            out.append((CLOSE, pos))
        elif a == i:
            out.append((OPEN, pos))
    return out


def word_f(word: tuple[int, ...], i: int) -> tuple[int, ...] | None:
    pos = first_open(_word_brackets(word, i))
    if pos is None:
        return None
    return word[:pos] + (i + 1,) + word[pos + 1 :]


def word_e(word: tuple[int, ...], i: int) -> tuple[int, ...] | None:
    pos = last_close(_word_brackets(word, i))
    if pos is None:
        return None
    return word[:pos] + (i,) + word[pos + 1 :]


def word_epsilon(word: Sequence[int], i: int) -> int:
    return uncanceled(_word_brackets(word, i))[0]


def word_phi(word: Sequence[int], i: int) -> int:
    return uncanceled(_word_brackets(word, i))[1]


def word_weight(word: Iterable[int], m: int) -> tuple[int, ...]:
    out = [0] * m
    for a in word:
        out[a - 1] += 1
    return tuple(out)


class WordCrystal:
    """Tensor powers of the standard crystal, elements are letter tuples."""

    def __init__(self, m: int):
        if m < 2:
            raise ValueError("m must be at least 2")
        self.m = m
        self.indices = tuple(range(1, m))

    def f(self, w, i):
        return word_f(w, i)

    def e(self, w, i):
        return word_e(w, i)

    def epsilon(self, w, i):
        return word_epsilon(w, i)

    def phi(self, w, i):
        return word_phi(w, i)


def standard_crystal(m: int) -> list[tuple[int]]:
    return [(a,) for a in range(1, m + 1)]


class FactorModel:
    """Tensor product of factors, elements are tuples of words."""

    def __init__(self, m: int):
        self.m = m
        self.indices = tuple(range(1, m))

    @staticmethod
    def _split(flat, like):
        out, pos = [], 0
        for w in like:
            out.append(flat[pos : pos + len(w)])
            pos += len(w)
        return tuple(out)

    def f(self, x, i):
        y = word_f(sum(x, ()), i)
        return None if y is None else self._split(y, x)

    def e(self, x, i):
        y = word_e(sum(x, ()), i)
        return None if y is None else self._split(y, x)

    def epsilon(self, x, i):
        return word_epsilon(sum(x, ()), i)

    def phi(self, x, i):
        return word_phi(sum(x, ()), i)


def closure(model, seed) -> list:
    """Connected component of seed under all e_i and f_i, in BFS order."""
    seen = {seed}
    order = [seed]
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for i in model.indices:
            for y in (model.f(x, i), model.e(x, i)):
                if y is not None and y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
    return order


# -- irreducible crystals ----------------------------------------------------


def highest_word(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(r for r, part in enumerate(lam, start=1) for _ in range(part))


def hook_content_dimension(lam: Sequence[int], m: int) -> int:
    """Number of semistandard tableaux of shape lam with entries <= m."""
    lam = normalize(lam)
    conj = conjugate(lam)
    num = den = 1
    for r, part in enumerate(lam):
        for c in range(part):
            num *= m + c - r
            den *= (part - c - 1) + (conj[c] - r - 1) + 1
    return num // den


@dataclass(frozen=True)
class IrreducibleCrystal:
    m: int
    lam: tuple[int, ...]
    vertices: tuple[tuple[int, ...], ...] = field(repr=False)
    highest: tuple[int, ...]
    lowest: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)


@lru_cache(maxsize=None)
def _build(lam: tuple[int, ...], m: int) -> IrreducibleCrystal:
    model = WordCrystal(m)
    top = highest_word(lam)
    if any(word_epsilon(top, i) for i in model.indices):
        raise AssertionError(f"{top} is not highest weight")
    verts = tuple(sorted(closure(model, top)))
    if len(verts) != hook_content_dimension(lam, m):
        raise AssertionError(f"component of {top} has {len(verts)} elements")
    lows = [w for w in verts if all(word_phi(w, i) == 0 for i in model.indices)]
    if len(lows) != 1:
        raise NotIrreducibleError(f"{len(lows)} lowest weight elements")
    return IrreducibleCrystal(m, lam, verts, top, lows[0])


def build_B(lam: Sequence[int], m: int) -> IrreducibleCrystal:
    lam = normalize(lam)
    if len(lam) > m:
        raise ValueError(f"{lam} has more than {m} rows")
    return _build(lam, m)


def shapes_up_to(size: int, m: int) -> list[tuple[int, ...]]:
    """Partitions of 0..size with at most m rows."""
    return [p for s in range(size + 1) for p in partitions_of(s) if len(p) <= m]


# -- Schutzenberger involution -----------------------------------------------


def theta(i: int, m: int) -> int:
    return m - i


def _component_xi(model, m: int, comp: list) -> dict:
    highs = [x for x in comp if all(model.epsilon(x, i) == 0 for i in model.indices)]
    lows = [x for x in comp if all(model.phi(x, i) == 0 for i in model.indices)]
    if len(highs) != 1 or len(lows) != 1:
        raise NotIrreducibleError(f"component with {len(highs)} highest and {len(lows)} lowest elements")
    xi = {highs[0]: lows[0]}
    queue = deque([highs[0]])
    while queue:
        x = queue.popleft()
        for i in model.indices:
            y = model.f(x, i)
            if y is None:
                continue
            z = model.e(xi[x], theta(i, m))
            if z is None:
                raise AssertionError("xi propagation fell off the crystal")
            if y in xi:
                if xi[y] != z:
                    raise AssertionError(f"xi propagation conflict at {y}")
                continue
            xi[y] = z
            queue.append(y)
    if len(xi) != len(comp):
        raise AssertionError("xi propagation did not cover the component")
    return xi


def schutzenberger(B: IrreducibleCrystal) -> dict:
    return _component_xi(WordCrystal(B.m), B.m, list(B.vertices))


@lru_cache(maxsize=None)
def tensor_xi(shapes: tuple[tuple[int, ...], ...], m: int) -> dict:
    """xi on B_{shapes[0]} (x) B_{shapes[1]} (x) ..., computed per component."""
    model = FactorModel(m)
    crystals = [build_B(s, m) for s in shapes]
    xi = {}
    for x in itertools.product(*(B.vertices for B in crystals)):
        if x in xi:
            continue
        comp = closure(model, x)
        xi.update(_component_xi(model, m, comp))
    return xi


def tensor_elements(shapes: Sequence[Sequence[int]], m: int) -> list[tuple]:
    crystals = [build_B(s, m) for s in shapes]
    return list(itertools.product(*(B.vertices for B in crystals)))


# -- commutor ----------------------------------------------------------------


def sigma_HK(left: Sequence[Sequence[int]], right: Sequence[Sequence[int]], x: tuple, m: int) -> tuple:
    """Commutor from (x) left (x) right to (x) right (x) left.

    `left` and `right` are groups of shapes; x is a tuple of words, one per
    shape.  Both expressions of the commutor are evaluated and compared.
    """
    left = tuple(normalize(s) for s in left)
    right = tuple(normalize(s) for s in right)
    a, b = x[: len(left)], x[len(left) :]
    xi_left, xi_right = tensor_xi(left, m), tensor_xi(right, m)
    out = tensor_xi(right + left, m)[xi_right[b] + xi_left[a]]
    both = tensor_xi(left + right, m)[x]
    other = xi_right[both[len(left) :]] + xi_left[both[: len(left)]]
    if out != other:
        raise AssertionError(f"the two forms of the commutor disagree at {x}")
    return out


def sigma_table(left, right, m: int) -> dict:
    return {x: sigma_HK(left, right, x, m) for x in tensor_elements(tuple(left) + tuple(right), m)}


def is_crystal_isomorphism(table: dict, m: int) -> bool:
    model = FactorModel(m)
    if len(set(table.values())) != len(table):
        return False
    for x, y in table.items():
        for i in model.indices:
            fx, fy = model.f(x, i), model.f(y, i)
            if (fx is None) != (fy is None) or (fx is not None and table[fx] != fy):
                return False
            ex, ey = model.e(x, i), model.e(y, i)
            if (ex is None) != (ey is None) or (ex is not None and table[ex] != ey):
                return False
    return True


def involution_violations(lam, mu, m: int) -> list:
    """Elements x with sigma_{B,A}(sigma_{A,B}(x)) != x."""
    out = []
    for x in tensor_elements((lam, mu), m):
        y = sigma_HK((lam,), (mu,), x, m)
        if sigma_HK((mu,), (lam,), y, m) != x:
            out.append(x)
    return out


def cactus_violations(lam, mu, nu, m: int) -> list:
    """Elements where (s_{B,C} (x) 1) s_{A,B(x)C} differs from s_{A,C(x)B} (1 (x) s_{B,C})."""
    out = []
    for x in tensor_elements((lam, mu, nu), m):
        a, bc = x[:1], x[1:]
        y = sigma_HK((lam,), (mu, nu), x, m)
        lhs = sigma_HK((mu,), (nu,), y[:2], m) + y[2:]
        cb = sigma_HK((mu,), (nu,), bc, m)
        rhs = sigma_HK((lam,), (nu, mu), a + cb, m)
        if lhs != rhs:
            out.append(x)
    return out


# -- Kashiwara data ----------------------------------------------------------


def _perm_of(word: Sequence[int], m: int) -> list[int]:
    """One-line notation of s_{i_1} ... s_{i_k} acting on positions."""
    perm = list(range(m))
    for i in word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return perm


def is_reduced_longest(word: Sequence[int], m: int) -> bool:
    perm = _perm_of(word, m)
    inv = sum(1 for a in range(m) for b in range(a + 1, m) if perm[a] > perm[b])
    return inv == len(word) == m * (m - 1) // 2


def staircase_word(m: int) -> tuple[int, ...]:
    """1, 2 1, 3 2 1, ... : a reduced word for the longest permutation."""
    return tuple(j for k in range(1, m) for j in range(k, 0, -1))


def longest_words(m: int) -> list[tuple[int, ...]]:
    """Distinct reduced words used for checks: the staircase and its theta-twist."""
    w = staircase_word(m)
    twisted = tuple(theta(i, m) for i in w)
    return [w] if twisted == w else [w, twisted]


def _require_reduced(word, m):
    if not is_reduced_longest(word, m):
        raise NotReducedError(f"{word} is not a reduced word for the longest element of S_{m}")


def kashiwara_down(b, word: Sequence[int], model, m: int | None = None) -> tuple[int, ...]:
    if m is not None:
        _require_reduced(word, m)
    data = []
    for i in word:
        p = model.phi(b, i)
        for _ in range(p):
            b = model.f(b, i)
        data.append(p)
    return tuple(data)


def kashiwara_up(b, word: Sequence[int], model, m: int | None = None) -> tuple[int, ...]:
    if m is not None:
        _require_reduced(word, m)
    data = []
    for i in word:
        q = model.epsilon(b, i)
        for _ in range(q):
            b = model.e(b, i)
        data.append(q)
    return tuple(data)


def coroot_pairing(word: Sequence[int], k: int, nu: Sequence[int]) -> int:
    """<w_{k-1} alpha_{i_k}^vee, nu> with w_{k-1} = s_{i_1} ... s_{i_{k-1}}; k from 1."""
    i = word[k - 1]
    vec = [0] * len(nu)
    vec[i - 1], vec[i] = 1, -1
    for j in reversed(word[: k - 1]):
        vec[j - 1], vec[j] = vec[j], vec[j - 1]
    return sum(a * b for a, b in zip(vec, nu))


def verify_star_characterization(lam, mu, m: int, word: Sequence[int] | None = None) -> list[dict]:
    """Check the Kashiwara data relations at every highest weight element of B_lam (x) B_mu."""
    lam, mu = normalize(lam), normalize(mu)
    word = tuple(staircase_word(m) if word is None else word)
    _require_reduced(word, m)
    M = len(word)
    rev = word[::-1]
    twisted = tuple(theta(i, m) for i in rev)
    words = WordCrystal(m)
    pair = FactorModel(m)
    B_lam, B_mu = build_B(lam, m), build_B(mu, m)
    down_table = {}
    for b in B_lam.vertices:
        down_table.setdefault(kashiwara_down(b, twisted, words), []).append(b)
    xi_lam = schutzenberger(B_lam)
    reports = []
    for c in B_mu.vertices:
        x = (B_lam.highest, c)
        if any(pair.epsilon(x, i) for i in pair.indices):
            continue
        nu = tuple(a + b for a, b in zip(word_weight(B_lam.highest, m), word_weight(c, m)))
        image = sigma_HK((lam,), (mu,), x, m)
        checks = {"first_factor_is_highest": image[0] == B_mu.highest}
        b = image[1]
        p = kashiwara_down(c, word, words)
        q = kashiwara_down(b, twisted, words)
        r = tuple(coroot_pairing(word, k, nu) for k in range(1, M + 1))
        checks["down_data_sum"] = all(p[k - 1] + q[M - k] == r[k - 1] for k in range(1, M + 1))
        low = x
        for i in word:
            while pair.phi(low, i):
                low = pair.f(low, i)
        checks["lowest_has_lowest_right_factor"] = low[1] == B_mu.lowest
        q_up = kashiwara_up(low[0], rev, words)
        checks["up_data_sum"] = all(p[k - 1] + q_up[M - k] == r[k - 1] for k in range(1, M + 1))
        checks["xi_matches_lowest"] = xi_lam[b] == low[0]
        target = tuple(r[M - k] - p[M - k] for k in range(1, M + 1))
        checks["data_determines_image"] = down_table.get(target) == [b]
        reports.append(
            {
                "lambda": list(lam),
                "mu": list(mu),
                "highest_weight_element": [list(w) for w in x],
                "image": [list(w) for w in image],
                "word": list(word),
                "checks": checks,
                "pass": all(checks.values()),
            }
        )
    return reports


def data_is_injective(B: IrreducibleCrystal, word: Sequence[int]) -> bool:
    words = WordCrystal(B.m)
    _require_reduced(word, B.m)
    seen = {kashiwara_down(b, word, words) for b in B.vertices}
    return len(seen) == len(B.vertices)
