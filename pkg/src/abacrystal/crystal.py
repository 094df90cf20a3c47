"""Abstract crystals: string lengths, the bracket rule, bounded exploration and
local axiom checks.

A crystal model is any object with an ``indices`` sequence and methods
``e(b, i)`` and ``f(b, i)`` returning an element or ``None``.  Elements must be
hashable; equality of elements is graph identity.  Models may also supply
``epsilon(b, i)`` and ``phi(b, i)`` shortcuts.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Protocol, Sequence

DEFAULT_CAP = 10_000

OPEN, CLOSE = 1, -1


class IntegrabilityError(RuntimeError):
    """An e or f string did not terminate within the iteration cap."""


class ExplorationError(RuntimeError):
    """Exploration exceeded its size cap or found inconsistent degrees."""


class UnderExploredError(RuntimeError):
    """A query needs vertices beyond the explored ball."""


class CrystalModel(Protocol):
    indices: Sequence[int]

    def e(self, b: Any, i: int) -> Any | None: ...

    def f(self, b: Any, i: int) -> Any | None: ...


def epsilon(model, b, i: int, cap: int = DEFAULT_CAP) -> int:
    """Length of the e_i string above b, by iteration."""
    count = 0
    x = model.e(b, i)
    while x is not None:
        count += 1
        if count > cap:
            raise IntegrabilityError(f"e_{i} string exceeds {cap} steps")
        x = model.e(x, i)
    return count


def phi(model, b, i: int, cap: int = DEFAULT_CAP) -> int:
    """Length of the f_i string below b, by iteration."""
    count = 0
    x = model.f(b, i)
    while x is not None:
        count += 1
        if count > cap:
            raise IntegrabilityError(f"f_{i} string exceeds {cap} steps")
        x = model.f(x, i)
    return count


def _eps(model, b, i):
    fast = getattr(model, "epsilon", None)
    return fast(b, i) if fast is not None else epsilon(model, b, i)


def _phi(model, b, i):
    fast = getattr(model, "phi", None)
    return fast(b, i) if fast is not None else phi(model, b, i)


# -- bracket sequences -------------------------------------------------------
#
# A bracket sequence is a list of (sign, tag) pairs read left to right, with
# sign OPEN for "(" and CLOSE for ")".  A "(" cancels against a later ")".


def first_open(brackets: Sequence[tuple[int, Any]]):
    """Tag of the leftmost uncanceled "(", or None."""
    pending = 0
    found = None
    for sign, tag in reversed(brackets):
        if sign == CLOSE:
            pending += 1
        elif pending:
            pending -= 1
        else:
            found = tag
    return found


def last_close(brackets: Sequence[tuple[int, Any]]):
    """Tag of the rightmost uncanceled ")", or None."""
    pending = 0
    found = None
    for sign, tag in brackets:
        if sign == OPEN:
            pending += 1
        elif pending:
            pending -= 1
        else:
            found = tag
    return found


def uncanceled(brackets: Sequence[tuple[int, Any]]) -> tuple[int, int]:
    """(number of uncanceled ")", number of uncanceled "(")."""
    opens = closes = 0
    for sign, _ in brackets:
        if sign == OPEN:
            opens += 1
        elif opens:
            opens -= 1
        else:
            closes += 1
    return closes, opens


def tensor_brackets(model, word: Sequence, i: int) -> list[tuple[int, int]]:
    out = []
    for pos, b in enumerate(word):
        out.extend([(CLOSE, pos)] * _eps(model, b, i))
        out.extend([(OPEN, pos)] * _phi(model, b, i))
    return out


def tensor_f(model, word: Sequence, i: int):
    """f_i on a tensor product b_1 (x) ... (x) b_k of elements of `model`."""
    pos = first_open(tensor_brackets(model, word, i))
    if pos is None:
        return None
    out = list(word)
    out[pos] = model.f(word[pos], i)
    return tuple(out)


def tensor_e(model, word: Sequence, i: int):
    pos = last_close(tensor_brackets(model, word, i))
    if pos is None:
        return None
    out = list(word)
    out[pos] = model.e(word[pos], i)
    return tuple(out)


def tensor_epsilon(model, word: Sequence, i: int) -> int:
    return uncanceled(tensor_brackets(model, word, i))[0]


def tensor_phi(model, word: Sequence, i: int) -> int:
    return uncanceled(tensor_brackets(model, word, i))[1]


class TensorModel:
    """Tensor products of a base model, elements are tuples of factors."""

    def __init__(self, base):
        self.base = base
        self.indices = tuple(base.indices)

    def e(self, word, i):
        return tensor_e(self.base, word, i)

    def f(self, word, i):
        return tensor_f(self.base, word, i)

    def epsilon(self, word, i):
        return tensor_epsilon(self.base, word, i)

    def phi(self, word, i):
        return tensor_phi(self.base, word, i)


# -- graphs ------------------------------------------------------------------


@dataclass
class CrystalGraph:
    """A bounded ball of a crystal.

    ``vertices`` is in discovery order, ``degree`` maps vertex to principal
    degree, ``edges`` lists f-edges (source, color, target), and ``strings``
    caches (epsilon, phi) per vertex and color.
    """

    indices: tuple[int, ...]
    bound: int
    vertices: list = field(default_factory=list)
    degree: dict = field(default_factory=dict)
    edges: list = field(default_factory=list)
    strings: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.vertices)

    def f_map(self) -> dict:
        out = {}
        for s, i, t in self.edges:
            out[(s, i)] = t
        return out

    def e_map(self) -> dict:
        out = {}
        for s, i, t in self.edges:
            out[(t, i)] = s
        return out

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def by_degree(self, d: int) -> list:
        return [v for v in self.vertices if self.degree[v] == d]


def explore(
    model,
    seeds,
    bound: int,
    max_vertices: int = 2_000_000,
    reverse_colors: bool = False,
) -> CrystalGraph:
    """Breadth-first closure under f_i up to `bound`, and under e_i.

    `seeds` is an element or a list of (element, degree) pairs.  Degrees are
    propagated structurally: +1 along f, -1 along e, and a conflict raises.
    """
    if isinstance(seeds, list):
        start = list(seeds)
    else:
        start = [(seeds, 0)]
    colors = tuple(model.indices)
    if reverse_colors:
        colors = colors[::-1]
    g = CrystalGraph(indices=tuple(model.indices), bound=bound)
    queue = deque()

    def visit(v, d):
        if v in g.degree:
            if g.degree[v] != d:
                raise ExplorationError(f"inconsistent degree for {v!r}: {g.degree[v]} vs {d}")
            return
        if len(g.vertices) >= max_vertices:
            raise ExplorationError(f"more than {max_vertices} vertices")
        g.degree[v] = d
        g.vertices.append(v)
        queue.append(v)

    for v, d in start:
        if d <= bound:
            visit(v, d)
    edges = set()
    while queue:
        v = queue.popleft()
        d = g.degree[v]
        for i in colors:
            if d < bound:
                w = model.f(v, i)
                if w is not None:
                    visit(w, d + 1)
                    edges.add((v, i, w))
            u = model.e(v, i)
            if u is not None:
                visit(u, d - 1)
                edges.add((u, i, v))
    order = {v: k for k, v in enumerate(g.vertices)}
    g.edges = sorted(edges, key=lambda e: (order[e[0]], e[1], order[e[2]]))
    for v in g.vertices:
        g.strings[v] = {i: (_eps(model, v, i), _phi(model, v, i)) for i in g.indices}
    return g


def components(g: CrystalGraph) -> list[list]:
    """Connected components (undirected), each in discovery order."""
    adj = {v: [] for v in g.vertices}
    for s, _, t in g.edges:
        adj[s].append(t)
        adj[t].append(s)
    seen = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        order = {u: k for k, u in enumerate(g.vertices)}
        out.append(sorted(comp, key=order.__getitem__))
    return out


def highest_weight_elements(g: CrystalGraph) -> list:
    return [v for v in g.vertices if all(g.strings[v][i][0] == 0 for i in g.indices)]


def q_character(g: CrystalGraph, maxdeg: int) -> list[int]:
    """Vertex counts per principal degree 0..maxdeg."""
    if maxdeg > g.bound:
        raise UnderExploredError(f"graph explored to degree {g.bound}, asked for {maxdeg}")
    out = [0] * (maxdeg + 1)
    for v in g.vertices:
        d = g.degree[v]
        if 0 <= d <= maxdeg:
            out[d] += 1
    return out


# -- local axioms ------------------------------------------------------------


def affine_cartan(n: int) -> Callable[[int, int], int]:
    def a(i, j):
        if i == j:
            return 2
        if n == 2:
            return -2
        return -1 if (i - j) % n in (1, n - 1) else 0

    return a


def finite_cartan(m: int) -> Callable[[int, int], int]:
    """Type A_{m-1} with nodes 1..m-1."""

    def a(i, j):
        if i == j:
            return 2
        return -1 if abs(i - j) == 1 else 0

    return a


@dataclass
class AxiomReport:
    passed: bool = True
    checked_vertices: int = 0
    violations: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    def fail(self, rule: str, witness):
        self.passed = False
        self.violations.append({"rule": rule, "witness": repr(witness)})

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "checked_vertices": self.checked_vertices,
            "violations": self.violations[:20],
            "violation_count": len(self.violations),
            "skipped": self.skipped,
        }


class _Outside(Exception):
    pass


def check_local_axioms(g: CrystalGraph, cartan: Callable[[int, int], int], stop_at_first: bool = False) -> AxiomReport:
    """Verify string structure and the simply-laced local axioms on a ball.

    Everything is read from the recorded edges and cached string lengths, so a
    corrupted edge is reported even if the underlying model is sound.  Checks
    that would need vertices beyond the ball are skipped.
    """
    rep = AxiomReport()
    I = g.indices
    fwd, back = {}, {}
    for s, i, t in g.edges:
        if (s, i) in fwd and fwd[(s, i)] != t:
            rep.fail("f not a function", (s, i))
        if (t, i) in back and back[(t, i)] != s:
            rep.fail("e not a function", (t, i))
        fwd[(s, i)] = t
        back[(t, i)] = s
    eps = {v: {i: g.strings[v][i][0] for i in I} for v in g.vertices}
    ph = {v: {i: g.strings[v][i][1] for i in I} for v in g.vertices}

    def F(x, i):
        if x is None:
            return None
        if ph[x][i] == 0:
            return None
        y = fwd.get((x, i))
        if y is None:
            raise _Outside
        return y

    def E(x, i):
        if x is None:
            return None
        if eps[x][i] == 0:
            return None
        y = back.get((x, i))
        if y is None:
            raise _Outside
        return y

    # (a) strings
    for s, i, t in g.edges:
        if ph[s][i] == 0 or eps[t][i] == 0:
            rep.fail("edge against zero string", (s, i, t))
        elif ph[t][i] != ph[s][i] - 1 or eps[t][i] != eps[s][i] + 1:
            rep.fail("string lengths not shifted along edge", (s, i, t))
    for v in g.vertices:
        for i in I:
            if eps[v][i] > 0 and (v, i) not in back:
                rep.fail("missing e edge", (v, i))
            if ph[v][i] > 0 and (v, i) not in fwd and g.degree[v] < g.bound:
                rep.fail("missing f edge", (v, i))
        if stop_at_first and not rep.passed:
            return rep

    simply_laced = all(cartan(i, j) in (0, -1) for i in I for j in I if i != j)
    if not simply_laced:
        rep.skipped.append("rank-2 local axioms need a simply-laced Cartan matrix")
        return rep

    # Stembridge's conventions with delta = -epsilon:
    #   Delta_i delta(x, j) = eps_j(x) - eps_j(E_i x)
    #   Delta_i phi(x, j)   = phi_j(E_i x) - phi_j(x)
    #   nabla_i phi(y, j)   = phi_j(y) - phi_j(F_i y)
    def up_delta(x, i, j):
        return eps[x][j] - eps[E(x, i)][j]

    def up_phi(x, i, j):
        return ph[E(x, i)][j] - ph[x][j]

    def down_phi(y, i, j):
        return ph[y][j] - ph[F(y, i)][j]

    for x in g.vertices:
        rep.checked_vertices += 1
        for i in I:
            for j in I:
                if i == j:
                    continue
                for check in (_check_up, _check_down):
                    try:
                        check(x, i, j, cartan(i, j), E, F, up_delta, up_phi, down_phi, eps, ph, rep)
                    except _Outside:
                        pass
        if stop_at_first and not rep.passed:
            return rep
    return rep


def _check_up(x, i, j, a, E, F, up_delta, up_phi, down_phi, eps, ph, rep):
    if eps[x][i] == 0:
        return
    dd, dp = up_delta(x, i, j), up_phi(x, i, j)
    if dd + dp != a:
        rep.fail("P3", (x, i, j))
    if dd > 0 or dp > 0:
        rep.fail("P4", (x, i, j))
    if eps[x][j] == 0:
        return
    if dd == 0:
        y1, y2 = E(E(x, j), i), E(E(x, i), j)
        if y1 is None or y1 != y2 or down_phi(y1, j, i) != 0:
            rep.fail("P5", (x, i, j))
    if dd == -1 and up_delta(x, j, i) == -1:
        y1 = E(E(E(E(x, i), j), j), i)
        y2 = E(E(E(E(x, j), i), i), j)
        if y1 is None or y1 != y2:
            rep.fail("P6", (x, i, j))
        elif down_phi(y1, i, j) != -1 or down_phi(y1, j, i) != -1:
            rep.fail("P6", (x, i, j))


def _check_down(x, i, j, a, E, F, up_delta, up_phi, down_phi, eps, ph, rep):
    if ph[x][i] == 0 or ph[x][j] == 0:
        return
    np_ = down_phi(x, i, j)
    if np_ == 0:
        y1, y2 = F(F(x, j), i), F(F(x, i), j)
        if y1 is None or y1 != y2 or up_delta(y1, j, i) != 0:
            rep.fail("P5'", (x, i, j))
    if np_ == -1 and down_phi(x, j, i) == -1:
        y1 = F(F(F(F(x, i), j), j), i)
        y2 = F(F(F(F(x, j), i), i), j)
        if y1 is None or y1 != y2:
            rep.fail("P6'", (x, i, j))
        elif up_delta(y1, i, j) != -1 or up_delta(y1, j, i) != -1:
            rep.fail("P6'", (x, i, j))


# -- export ------------------------------------------------------------------


def to_json(g: CrystalGraph, encode: Callable[[Any], Any] = repr) -> dict:
    index = {v: k for k, v in enumerate(g.vertices)}
    return {
        "vertices": [{"id": index[v], "degree": g.degree[v], "element": encode(v)} for v in g.vertices],
        "edges": [[index[s], i, index[t]] for s, i, t in g.edges],
    }


def to_dot(g: CrystalGraph, label: Callable[[Any], str] = str, name: str = "crystal") -> str:
    palette = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]
    index = {v: k for k, v in enumerate(g.vertices)}
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        text = label(v).replace('"', '\\"')
        lines.append(f'  v{index[v]} [label="{text}"];')
    for s, i, t in g.edges:
        color = palette[i % len(palette)]
        lines.append(f'  v{index[s]} -> v{index[t]} [label="{i}", color={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
