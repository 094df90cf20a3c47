"""Colored multi-runner abacus configurations and their crystal operators.

Rows are indexed 0..ell-1 from the bottom.  Row i extends to all integers by
``psi(i + ell) = psi(i) - n`` (every bead shifted n sites to the left).  The
gap between sites g-1 and g carries color g mod n; a bead at site x moving
right crosses the gap of color (x+1) mod n.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .crystal import CLOSE, OPEN, first_open, last_close, uncanceled
from .partitions import BeadRow, merge_rows, move_bead, partitions_of, split_row


class NotDescendingError(ValueError):
    """An operation that needs a descending configuration got another one."""


class NotCompactError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class AbacusConfig:
    n: int
    rows: tuple[BeadRow, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        rows = tuple(r if isinstance(r, BeadRow) else BeadRow(*r) for r in self.rows)
        if not rows:
            raise ValueError("need at least one row")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, n: int, rows: Iterable) -> "AbacusConfig":
        out = []
        for r in rows:
            if isinstance(r, BeadRow):
                out.append(r)
            else:
                c, parts = r
                out.append(BeadRow(c, tuple(parts)))
        return cls(n, tuple(out))

    @property
    def ell(self) -> int:
        return len(self.rows)

    @property
    def charges(self) -> tuple[int, ...]:
        return tuple(r.charge for r in self.rows)

    def row(self, i: int) -> BeadRow:
        """Row i for any integer i, using the n-shifted periodic extension."""
        q, r = divmod(i, self.ell)
        return self.rows[r].shifted(-q * self.n)

    def psi(self, i: int, k: int) -> int:
        """Position of the k-th bead from the right in row i."""
        q, r = divmod(i, self.ell)
        return self.rows[r].bead(k) - q * self.n

    def depth(self) -> int:
        """Number of strands that can differ from the compact configuration."""
        return max(len(r.parts) for r in self.rows)

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [r.to_json() for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "AbacusConfig":
        return cls(int(data["n"]), tuple(BeadRow.from_json(r) for r in data["rows"]))

    def render(self, lo: int | None = None, hi: int | None = None) -> str:
        """Text picture, top row first; '|' marks the origin."""
        if lo is None:
            lo = min(r.floor for r in self.rows) - 1
        if hi is None:
            hi = max(r.ceiling for r in self.rows) + 1
        lines = []
        for r in reversed(self.rows):
            cells = []
            for x in range(lo, hi + 1):
                if x == 0:
                    cells.append("|")
                cells.append("●" if r.occupied(x) else "○")
            lines.append("".join(cells))
        return "\n".join(lines)


def compact_config(n: int, charges: Sequence[int]) -> AbacusConfig:
    return AbacusConfig(n, tuple(BeadRow(c, ()) for c in charges))


def compact_for_weight(lam: Sequence[int]) -> AbacusConfig:
    """Canonical compact descending configuration with the given dominant weight.

    Charges are the residues 0..n-1, residue i repeated lam[i] times, listed
    in decreasing order from the bottom row.
    """
    n = len(lam)
    charges = [i for i in range(n - 1, -1, -1) for _ in range(lam[i])]
    if not charges:
        raise ValueError("level must be positive")
    return compact_config(n, charges)


# -- general bracket rule ----------------------------------------------------


def _row_brackets(psi: AbacusConfig, i: int):
    """Brackets for color i, ordered by gap then row; tags are (row, site)."""
    lo = min(r.floor for r in psi.rows)
    hi = max(r.ceiling for r in psi.rows) + 1
    first = lo + ((i - lo) % psi.n)
    out = []
    for g in range(first, hi + 1, psi.n):
        for r, row in enumerate(psi.rows):
            left, right = row.occupied(g - 1), row.occupied(g)
            if left and not right:
                out.append((OPEN, (r, g - 1)))
            elif right and not left:
                out.append((CLOSE, (r, g)))
    return out


def _step(psi: AbacusConfig, r: int, site: int, delta: int) -> AbacusConfig:
    row = psi.rows[r]
    k = row.index_of(site)
    parts = list(row.parts) + [0] * max(0, k - len(row.parts))
    parts[k - 1] += delta
    rows = list(psi.rows)
    rows[r] = BeadRow(row.charge, tuple(parts))
    return AbacusConfig(psi.n, tuple(rows))


def abacus_f(psi: AbacusConfig, i: int) -> AbacusConfig | None:
    tag = first_open(_row_brackets(psi, i))
    if tag is None:
        return None
    return _step(psi, tag[0], tag[1], +1)


def abacus_e(psi: AbacusConfig, i: int) -> AbacusConfig | None:
    tag = last_close(_row_brackets(psi, i))
    if tag is None:
        return None
    return _step(psi, tag[0], tag[1], -1)


def abacus_epsilon(psi: AbacusConfig, i: int) -> int:
    return uncanceled(_row_brackets(psi, i))[0]


def abacus_phi(psi: AbacusConfig, i: int) -> int:
    return uncanceled(_row_brackets(psi, i))[1]


# -- descending configurations ----------------------------------------------


def strand(psi: AbacusConfig, k: int) -> tuple[int, ...]:
    return tuple(r.bead(k) for r in psi.rows)


def is_descending(psi: AbacusConfig) -> bool:
    depth = psi.depth() + 1
    for i in range(psi.ell):
        for k in range(1, depth + 1):
            if psi.psi(i, k) < psi.psi(i + 1, k):
                return False
    return True


def _require_descending(psi: AbacusConfig):
    if not is_descending(psi):
        raise NotDescendingError("configuration is not descending")


def _strand_brackets(psi: AbacusConfig, i: int):
    """Brackets of the strand-by-strand rule, tags are (row, site, strand).

    Strands are read from the deepest one that can matter down to strand 1.
    Beyond the depth every strand is compact and the strings telescope, so the
    deepest strand kept contributes only its opening brackets.
    """
    n = psi.n
    depth = psi.depth() + 1
    out = []
    for k in range(depth, 0, -1):
        beads = sorted(((r.bead(k), idx) for idx, r in enumerate(psi.rows)))
        if k < depth:
            out.extend((CLOSE, (idx, x, k)) for x, idx in beads if x % n == i % n)
        out.extend((OPEN, (idx, x, k)) for x, idx in beads if (x + 1) % n == i % n)
    return out


def abacus_f_descending(psi: AbacusConfig, i: int) -> AbacusConfig | None:
    _require_descending(psi)
    tag = first_open(_strand_brackets(psi, i))
    if tag is None:
        return None
    r, x, _ = tag
    return _step(psi, r, x, +1)


def abacus_e_descending(psi: AbacusConfig, i: int) -> AbacusConfig | None:
    _require_descending(psi)
    tag = last_close(_strand_brackets(psi, i))
    if tag is None:
        return None
    r, x, _ = tag
    return _step(psi, r, x, -1)


def moved_strand(psi: AbacusConfig, i: int) -> int | None:
    """Strand of the bead that f_i moves under the strand rule."""
    tag = first_open(_strand_brackets(psi, i))
    return None if tag is None else tag[2]


def compactify(psi: AbacusConfig) -> AbacusConfig:
    return AbacusConfig(psi.n, tuple(r.compact() for r in psi.rows))


def weight(psi: AbacusConfig) -> int:
    return sum(r.size for r in psi.rows)


def lambda_of(psi0: AbacusConfig) -> tuple[int, ...]:
    """Dominant weight coefficients of a compact descending configuration."""
    if any(r.parts for r in psi0.rows):
        raise NotCompactError("configuration is not compact")
    _require_descending(psi0)
    m = [0] * psi0.n
    for c in psi0.charges:
        m[c % psi0.n] += 1
    return tuple(m)


def shift(psi: AbacusConfig) -> AbacusConfig:
    """Move the bottom row to the top, n sites further left."""
    rows = psi.rows[1:] + (psi.rows[0].shifted(-psi.n),)
    return AbacusConfig(psi.n, rows)


def _with_strand(psi: AbacusConfig, k: int, positions: Sequence[int]) -> AbacusConfig:
    rows = []
    for r, x in zip(psi.rows, positions):
        parts = list(r.parts) + [0] * max(0, k - len(r.parts))
        parts[k - 1] = x + k - r.charge
        rows.append(BeadRow(r.charge, tuple(parts)))
    return AbacusConfig(psi.n, tuple(rows))


def strand_slack(psi: AbacusConfig, k: int) -> int:
    """How many times strand k can be shifted down one row and stay right of strand k+1."""
    ell = psi.ell
    t = 0
    while all(psi.psi(i + t + 1, k) > psi.psi(i, k + 1) for i in range(ell)):
        t += 1
    return t


def tighten(psi: AbacusConfig, k: int) -> AbacusConfig | None:
    """Shift strand k down one row if it stays strictly right of strand k+1."""
    _require_descending(psi)
    ell = psi.ell
    new = [psi.psi(i + 1, k) for i in range(ell)]
    if not all(new[i] > psi.psi(i, k + 1) for i in range(ell)):
        return None
    return _with_strand(psi, k, new)


def untighten(psi: AbacusConfig, k: int) -> AbacusConfig | None:
    """Inverse of tighten: shift strand k up one row if it stays left of strand k-1."""
    _require_descending(psi)
    ell = psi.ell
    new = [psi.psi(i - 1, k) for i in range(ell)]
    if k > 1 and not all(new[i] < psi.psi(i, k - 1) for i in range(ell)):
        return None
    return _with_strand(psi, k, new)


def is_tight(psi: AbacusConfig) -> bool:
    _require_descending(psi)
    return all(strand_slack(psi, k) == 0 for k in range(1, psi.depth() + 1))


def decompose(psi: AbacusConfig) -> tuple[AbacusConfig, tuple[int, ...]]:
    """Split a descending configuration into a tight one and a partition.

    Strand k can drop by its slack over strand k+1; the partition has
    lambda_k = slack_k + slack_{k+1} + ... and the tight configuration is
    reached by tightening the strands from the deepest one outward.
    """
    _require_descending(psi)
    depth = psi.depth()
    slack = [strand_slack(psi, k) for k in range(1, depth + 1)]
    lam = [sum(slack[k:]) for k in range(depth)]
    gamma = psi
    for k in range(depth, 0, -1):
        for _ in range(lam[k - 1]):
            gamma = tighten(gamma, k)
    while lam and lam[-1] == 0:
        lam.pop()
    return gamma, tuple(lam)


def recompose(gamma: AbacusConfig, lam: Sequence[int]) -> AbacusConfig:
    """Inverse of decompose: untighten strand k by lam_k rows, strand 1 first."""
    psi = gamma
    for k, amount in enumerate(lam, start=1):
        for _ in range(amount):
            nxt = untighten(psi, k)
            if nxt is None:
                raise ValueError(f"strand {k} cannot be raised {amount} times")
            psi = nxt
    return psi


def sources(psi0: AbacusConfig, max_weight: int) -> Iterator[tuple[AbacusConfig, int]]:
    """Highest weight descending configurations over psi0, with their weights."""
    for s in range(max_weight // psi0.n + 1):
        for lam in partitions_of(s):
            yield recompose(psi0, lam), psi0.n * s


def descending_configs(psi0: AbacusConfig, max_weight: int) -> Iterator[AbacusConfig]:
    """Brute force: all descending configurations over psi0 with weight <= max_weight."""
    charges = psi0.charges

    def rows_from(idx, budget):
        if idx == len(charges):
            yield ()
            return
        for s in range(budget + 1):
            for p in partitions_of(s):
                for rest in rows_from(idx + 1, budget - s):
                    yield (BeadRow(charges[idx], p),) + rest

    for rows in rows_from(0, max_weight):
        psi = AbacusConfig(psi0.n, rows)
        if is_descending(psi):
            yield psi


class AbacusCrystal:
    """Crystal model on abacus configurations; `rule` is 'general' or 'descending'."""

    def __init__(self, n: int, rule: str = "general"):
        self.n = n
        self.indices = tuple(range(n))
        if rule not in ("general", "descending"):
            raise ValueError(rule)
        self.rule = rule

    def f(self, psi, i):
        return abacus_f(psi, i) if self.rule == "general" else abacus_f_descending(psi, i)

    def e(self, psi, i):
        return abacus_e(psi, i) if self.rule == "general" else abacus_e_descending(psi, i)

    def epsilon(self, psi, i):
        if self.rule == "general":
            return abacus_epsilon(psi, i)
        return uncanceled(_strand_brackets(psi, i))[0]

    def phi(self, psi, i):
        if self.rule == "general":
            return abacus_phi(psi, i)
        return uncanceled(_strand_brackets(psi, i))[1]


# -- ribbons on a single partition ------------------------------------------


def _ribbon_brackets(parts, n, ell, i, charge):
    row = BeadRow(charge, tuple(parts))
    lo = row.floor
    hi = row.ceiling + ell
    out = []
    for k in range(lo, hi + 1):
        if (k // ell) % n != i % n:
            continue
        top, bottom = row.occupied(k), row.occupied(k - ell)
        if bottom and not top:
            out.append((OPEN, k))
        elif top and not bottom:
            out.append((CLOSE, k))
    return out


def partition_f(parts, n: int, ell: int, i: int, charge: int = 0):
    """Add the ell-ribbon picked by the bracket rule; None if no uncanceled '('.

    A ribbon whose rightmost box sits above k moves a bead from k-ell to k and
    has color floor(k/ell) mod n.  Brackets are read left to right in k.
    """
    k = first_open(_ribbon_brackets(parts, n, ell, i, charge))
    if k is None:
        return None
    row = BeadRow(charge, tuple(parts))
    return move_bead(row, k - ell, ell).parts


def partition_e(parts, n: int, ell: int, i: int, charge: int = 0):
    k = last_close(_ribbon_brackets(parts, n, ell, i, charge))
    if k is None:
        return None
    row = BeadRow(charge, tuple(parts))
    return move_bead(row, k, -ell).parts


def partition_to_abacus(parts, n: int, ell: int, charge: int = 0) -> AbacusConfig:
    return AbacusConfig(n, tuple(split_row(BeadRow(charge, tuple(parts)), ell)))


def abacus_to_partition(psi: AbacusConfig) -> tuple[tuple[int, ...], int]:
    row = merge_rows(psi.rows)
    return row.parts, row.charge


class PartitionCrystal:
    """Ribbon-adding crystal on partitions of a fixed charge."""

    def __init__(self, n: int, ell: int, charge: int = 0):
        self.n, self.ell, self.charge = n, ell, charge
        self.indices = tuple(range(n))

    def f(self, parts, i):
        return partition_f(parts, self.n, self.ell, i, self.charge)

    def e(self, parts, i):
        return partition_e(parts, self.n, self.ell, i, self.charge)
