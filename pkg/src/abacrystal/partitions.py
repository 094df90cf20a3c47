"""Partitions, bead rows, ribbons, cores and quotients.

A bead sitting at the half-integer p + 1/2 is stored as the integer p.  A row
of beads is kept as its charge together with a partition; the k-th bead from
the right (k >= 1) then sits at ``parts[k-1] - k + charge`` with missing parts
read as zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class BeadError(ValueError):
    """Raised when a bead move starts on an empty site or lands on a bead."""


def normalize(parts: Iterable[int]) -> tuple[int, ...]:
    """Return parts as a tuple with trailing zeros removed, checking order."""
    out = tuple(int(x) for x in parts)
    while out and out[-1] == 0:
        out = out[:-1]
    if any(x < 0 for x in out):
        raise ValueError(f"negative part in {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"parts not weakly decreasing: {out}")
    return out


def size(parts: Sequence[int]) -> int:
    return sum(parts)


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > j) for j in range(parts[0]))


def partitions_of(k: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of k in reverse lexicographic order."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, first):
            yield (first,) + rest


def partitions_up_to(k: int) -> Iterator[tuple[int, ...]]:
    for s in range(k + 1):
        yield from partitions_of(s)


@dataclass(frozen=True, order=True)
class BeadRow:
    """A row of beads, stored as (charge, partition)."""

    charge: int
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", normalize(self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def bead(self, k: int) -> int:
        """Position of the k-th bead from the right, k >= 1."""
        part = self.parts[k - 1] if k <= len(self.parts) else 0
        return part - k + self.charge

    def beads(self, count: int) -> list[int]:
        return [self.bead(k) for k in range(1, count + 1)]

    @property
    def floor(self) -> int:
        """Every position strictly below this one is occupied."""
        return self.charge - len(self.parts)

    @property
    def ceiling(self) -> int:
        """Every position strictly above this one is empty."""
        return self.bead(1)

    def occupied(self, x: int) -> bool:
        if x < self.floor:
            return True
        if x > self.ceiling:
            return False
        return x in self.beads(len(self.parts) + 1)

    def index_of(self, x: int) -> int | None:
        """Which bead (counted from the right) sits at x, or None."""
        if x > self.ceiling:
            return None
        if x < self.floor:
            return self.charge - x
        for k in range(1, len(self.parts) + 2):
            b = self.bead(k)
            if b == x:
                return k
            if b < x:
                return None
        return None

    def shifted(self, offset: int) -> "BeadRow":
        return BeadRow(self.charge + offset, self.parts)

    def compact(self) -> "BeadRow":
        return BeadRow(self.charge, ())

    def to_json(self) -> dict:
        return {"charge": self.charge, "parts": list(self.parts)}

    @classmethod
    def from_json(cls, data: dict) -> "BeadRow":
        return cls(int(data["charge"]), tuple(data.get("parts", ())))


def row_from_positions(positions: Iterable[int], below: int) -> BeadRow:
    """Build a row whose beads are `positions` (all >= below) plus every site < below."""
    pos = sorted(set(positions), reverse=True)
    if pos and pos[-1] < below:
        raise ValueError("positions must lie at or above the dense region")
    # compacting the window leaves its beads at below .. below+len(pos)-1
    charge = below + len(pos)
    parts = [x + k - charge for k, x in enumerate(pos, start=1)]
    return BeadRow(charge, tuple(parts))


def partition_to_beads(parts: Sequence[int], charge: int = 0) -> BeadRow:
    return BeadRow(charge, tuple(parts))


def beads_to_partition(row: BeadRow) -> tuple[tuple[int, ...], int]:
    return row.parts, row.charge


def move_bead(row: BeadRow, src: int, steps: int) -> BeadRow:
    """Move the bead at src by `steps` sites (positive is to the right)."""
    if not row.occupied(src):
        raise BeadError(f"no bead at {src}")
    dst = src + steps
    if steps != 0 and row.occupied(dst):
        raise BeadError(f"site {dst} already holds a bead")
    window_lo = min(row.floor, dst, src)
    window_hi = max(row.ceiling, dst)
    occ = {x for x in range(window_lo, window_hi + 1) if row.occupied(x)}
    occ.discard(src)
    occ.add(dst)
    return row_from_positions(occ, window_lo)


def add_ribbon(parts: Sequence[int], length: int, rightmost: int, charge: int = 0):
    """Add a ribbon whose rightmost box sits above `rightmost`; None if impossible.

    Boxes sit above integer sites; the box above k separates bead sites k-1 and k.
    """
    row = BeadRow(charge, tuple(parts))
    src = rightmost - length
    if not row.occupied(src) or row.occupied(rightmost):
        return None
    return move_bead(row, src, length).parts


def remove_ribbon(parts: Sequence[int], length: int, rightmost: int, charge: int = 0):
    row = BeadRow(charge, tuple(parts))
    if not row.occupied(rightmost) or row.occupied(rightmost - length):
        return None
    return move_bead(row, rightmost, -length).parts


def split_row(row: BeadRow, ell: int) -> list[BeadRow]:
    """Distribute a bead row onto ell runners: site x goes to runner x mod ell, column x div ell."""
    lo = row.floor - ell
    hi = row.ceiling + ell
    lo -= lo % ell
    runners = []
    for r in range(ell):
        cols = [x // ell for x in range(lo, hi + 1) if x % ell == r and row.occupied(x)]
        runners.append(row_from_positions(cols, lo // ell))
    return runners


def merge_rows(runners: Sequence[BeadRow]) -> BeadRow:
    """Inverse of split_row."""
    ell = len(runners)
    lo = min(r.floor for r in runners) - 1
    hi = max(r.ceiling for r in runners) + 1
    occ = [g * ell + r for r, row in enumerate(runners) for g in range(lo, hi + 1) if row.occupied(g)]
    return row_from_positions(occ, lo * ell)


def l_quotient(parts: Sequence[int], ell: int, charge: int = 0) -> list[BeadRow]:
    return split_row(BeadRow(charge, tuple(parts)), ell)


def l_core(parts: Sequence[int], ell: int, charge: int = 0) -> tuple[int, ...]:
    runners = split_row(BeadRow(charge, tuple(parts)), ell)
    return merge_rows([r.compact() for r in runners]).parts


def gl_matrix_unit(row: BeadRow, p: int, direction: str) -> BeadRow | None:
    """Elementary matrix action on a bead row.

    direction "left" is E_{p,p+1}: bead at p+1 moves to p.
    direction "right" is E_{p+1,p}: bead at p moves to p+1.
    """
    if direction == "left":
        src, dst = p + 1, p
    elif direction == "right":
        src, dst = p, p + 1
    else:
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    if not row.occupied(src) or row.occupied(dst):
        return None
    return move_bead(row, src, dst - src)
