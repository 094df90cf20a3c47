"""Cylindric plane partitions of type (n, ell).

A cylindric partition is stored by its fundamental domain: rows 0..ell-1,
row i starting at column ``charges[i]`` with weakly decreasing entries.  The
array extends to every row index through ``pi[i + ell][j] = pi[i][j + n]``,
so row ell is row 0 with its start moved n columns to the left.  Cells left of
a row's start are undefined and behave as +infinity in the inequalities.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .abacus import AbacusConfig, NotDescendingError, is_descending
from .crystal import CLOSE, OPEN, first_open, last_close, uncanceled
from .partitions import BeadRow, conjugate, normalize


class InvalidCPPError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CylindricPartition:
    n: int
    ell: int
    charges: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "charges", tuple(int(c) for c in self.charges))
        object.__setattr__(self, "rows", tuple(normalize(r) for r in self.rows))
        if len(self.charges) != self.ell or len(self.rows) != self.ell:
            raise InvalidCPPError("need ell charges and ell rows")

    def entry(self, i: int, j: int) -> float | int:
        """pi[i][j] for any integers; +inf where undefined."""
        q, r = divmod(i, self.ell)
        j = j + q * self.n
        start = self.charges[r]
        if j < start:
            return math.inf
        row = self.rows[r]
        k = j - start
        return row[k] if k < len(row) else 0

    def start(self, i: int) -> int:
        q, r = divmod(i, self.ell)
        return self.charges[r] - q * self.n

    @property
    def size(self) -> int:
        return sum(sum(r) for r in self.rows)

    def to_json(self) -> dict:
        return {"n": self.n, "l": self.ell, "charges": list(self.charges), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "CylindricPartition":
        return cls(int(data["n"]), int(data["l"]), tuple(data["charges"]), tuple(tuple(r) for r in data["rows"]))

    def render(self) -> str:
        """One line per row, entries placed under their column index."""
        lo = min(self.charges)
        hi = max(c + len(r) for c, r in zip(self.charges, self.rows)) + 1
        head = "col " + " ".join(f"{j:>2}" for j in range(lo, hi))
        lines = [head]
        for i in range(self.ell):
            cells = []
            for j in range(lo, hi):
                v = self.entry(i, j)
                cells.append(" ." if v == math.inf else f"{v:>2}")
            lines.append(f"r{i:<2} " + " ".join(cells))
        return "\n".join(lines)


def validate(pi: CylindricPartition) -> None:
    """Raise InvalidCPPError unless pi satisfies the cylindric inequalities."""
    p = pi.charges
    ell, n = pi.ell, pi.n
    for i in range(ell - 1):
        if p[i] < p[i + 1]:
            raise InvalidCPPError(f"row starts must weakly decrease: {p}")
    if p[ell - 1] < p[0] - n:
        raise InvalidCPPError(f"last start {p[ell - 1]} is left of the wrapped first start {p[0] - n}")
    for i in range(ell):
        lo = pi.start(i)
        hi = lo + len(pi.rows[i]) + 1
        for j in range(lo, hi):
            if pi.entry(i, j) < pi.entry(i + 1, j):
                raise InvalidCPPError(f"column {j}: row {i} smaller than row {i + 1}")


def is_valid(pi: CylindricPartition) -> bool:
    try:
        validate(pi)
    except InvalidCPPError:
        return False
    return True


def zero_cpp(n: int, charges: Sequence[int]) -> CylindricPartition:
    return CylindricPartition(n, len(charges), tuple(charges), tuple(() for _ in charges))


def abacus_to_cpp(psi: AbacusConfig) -> CylindricPartition:
    """Entry (i, charge_i + m - 1) counts beads right of the m-th gap of row i."""
    if not is_descending(psi):
        raise NotDescendingError("configuration is not descending")
    rows = tuple(conjugate(r.parts) for r in psi.rows)
    return CylindricPartition(psi.n, psi.ell, psi.charges, rows)


def cpp_to_abacus(pi: CylindricPartition) -> AbacusConfig:
    validate(pi)
    return AbacusConfig(pi.n, tuple(BeadRow(c, conjugate(r)) for c, r in zip(pi.charges, pi.rows)))


def lambda_of_cpp(pi: CylindricPartition, rotation: int = 0) -> tuple[int, ...]:
    """m_i counts rows whose first entry lies on a diagonal of color i."""
    m = [0] * pi.n
    for c in pi.charges:
        m[(c + rotation) % pi.n] += 1
    return tuple(m)


def reflect(pi: CylindricPartition) -> CylindricPartition:
    """Transpose the periodic array; the result has type (ell, n)."""
    n, ell = pi.n, pi.ell
    new_starts = []
    for a in range(n):
        # smallest b with start(b) <= a; starts decrease in b
        b = 0
        while pi.start(b) > a:
            b += 1
        while pi.start(b - 1) <= a:
            b -= 1
        new_starts.append(b)
    rows = []
    for a, b0 in enumerate(new_starts):
        row = []
        b = b0
        while True:
            v = pi.entry(b, a)
            if v == 0:
                break
            row.append(v)
            b += 1
        rows.append(tuple(row))
    return CylindricPartition(ell, n, tuple(new_starts), tuple(rows))


# -- crystal operators through t-ordering ------------------------------------


def _t(pi: CylindricPartition, row: int, col: int, height: int) -> int:
    """ell * t for the box at (row, col, height); exact integer."""
    return pi.n * row + pi.ell * (col - height)


def _color(pi: CylindricPartition, col: int, height: int) -> int:
    return (col - height + 1) % pi.n


def box_candidates(pi: CylindricPartition, i: int):
    """Addable and removable boxes of color i as sorted brackets.

    Addability is judged inside each row's own partition: a box blocked only by
    the neighbouring row still contributes its bracket, because it still
    cancels.  The chosen box is never blocked, so results stay cylindric.

    Tags are (row, col, +1) for an addable box and (row, col, -1) for a
    removable one.  Raises AssertionError if two boxes share a t-value.
    """
    out = []
    for r in range(pi.ell):
        start = pi.start(r)
        stop = start + len(pi.rows[r]) + 1
        for j in range(start, stop):
            v = pi.entry(r, j)
            # add on top of column j
            h = v + 1
            if pi.entry(r, j - 1) >= h and _color(pi, j, h) == i % pi.n:
                out.append((_t(pi, r, j, h), OPEN, (r, j, +1)))
            # remove the top of column j
            if v >= 1 and pi.entry(r, j + 1) < v and _color(pi, j, v) == i % pi.n:
                out.append((_t(pi, r, j, v), CLOSE, (r, j, -1)))
    out.sort(key=lambda x: x[0])
    ts = [x[0] for x in out]
    assert len(set(ts)) == len(ts), "two candidate boxes share a t-value"
    return [(sign, tag) for _, sign, tag in out]


def _apply(pi: CylindricPartition, tag) -> CylindricPartition:
    r, j, delta = tag
    row = list(pi.rows[r])
    k = j - pi.charges[r]
    if k == len(row):
        row.append(0)
    row[k] += delta
    rows = list(pi.rows)
    rows[r] = tuple(row)
    return CylindricPartition(pi.n, pi.ell, pi.charges, tuple(rows))


def _checked(pi: CylindricPartition, tag) -> CylindricPartition | None:
    if tag is None:
        return None
    out = _apply(pi, tag)
    assert is_valid(out), "crystal move left the cylindric set"
    return out


def cpp_f(pi: CylindricPartition, i: int) -> CylindricPartition | None:
    return _checked(pi, first_open(box_candidates(pi, i)))


def cpp_e(pi: CylindricPartition, i: int) -> CylindricPartition | None:
    return _checked(pi, last_close(box_candidates(pi, i)))


class CPPCrystal:
    def __init__(self, n: int):
        self.n = n
        self.indices = tuple(range(n))

    def f(self, pi, i):
        return cpp_f(pi, i)

    def e(self, pi, i):
        return cpp_e(pi, i)

    def epsilon(self, pi, i):
        return uncanceled(box_candidates(pi, i))[0]

    def phi(self, pi, i):
        return uncanceled(box_candidates(pi, i))[1]


# -- enumeration -------------------------------------------------------------


def _rows_between(start: int, upper, lower, budget: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Weakly decreasing rows from column `start` with lower(j) <= v <= upper(j)."""

    def rec(j, prev, left):
        lo = lower(j)
        if lo == 0:
            yield (), 0
        hi = min(prev, upper(j), left)
        for v in range(max(lo, 1), hi + 1):
            for rest, s in rec(j + 1, v, left - v):
                yield (v,) + rest, s + v

    yield from rec(start, math.inf, budget)


def enumerate_cpps(n: int, charges: Sequence[int], max_weight: int) -> Iterator[CylindricPartition]:
    """Every cylindric partition with these row starts and size <= max_weight, once each."""
    charges = tuple(charges)
    ell = len(charges)
    validate(zero_cpp(n, charges))

    def row_lookup(row, start):
        def get(j):
            if j < start:
                return math.inf
            k = j - start
            return row[k] if k < len(row) else 0

        return get

    for row0, s0 in _rows_between(charges[0], lambda j: math.inf, lambda j: 0, max_weight):
        first = row_lookup(row0, charges[0])
        wrapped = lambda j, first=first: first(j + n)  # row ell, as a floor for every later row
        # every later row sits above row ell, which is row 0 moved n columns left
        costs = [sum(first(j + n) for j in range(charges[r], charges[0] + len(row0) - n + 1)) for r in range(ell)]

        def rec(idx, above, left):
            if idx == ell:
                yield ()
                return
            start = charges[idx]

            def lower(j):
                v = wrapped(j)
                return 0 if v == math.inf else v

            remaining_min = sum(costs[idx + 1 :])
            for row, s in _rows_between(start, above, lower, left - remaining_min):
                get = row_lookup(row, start)
                for rest in rec(idx + 1, get, left - s):
                    yield (row,) + rest

        for rest in rec(1, first, max_weight - s0):
            yield CylindricPartition(n, ell, charges, (row0,) + rest)
