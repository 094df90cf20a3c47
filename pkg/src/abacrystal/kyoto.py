"""Paths in the level-ell perfect crystal of symmetric fillings.

An element of the perfect crystal is a weakly increasing tuple of ell values
in 0..n-1 (value v standing for the half-integer v + 1/2).  A path is the
semi-infinite word ... b_3 b_2 b_1, equal to the ground state path except at
finitely many positions.  Brackets are read left to right, so the deepest
factor comes first.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .abacus import AbacusConfig, is_descending, is_tight, strand
from .crystal import CLOSE, OPEN, first_open, last_close, uncanceled


class NotTightError(ValueError):
    pass


# -- perfect crystal ---------------------------------------------------------


def perfect_elements(n: int, ell: int) -> list[tuple[int, ...]]:
    """All sorted ell-tuples over 0..n-1, in lexicographic order."""

    def rec(lo, left):
        if left == 0:
            yield ()
            return
        for v in range(lo, n):
            for rest in rec(v, left - 1):
                yield (v,) + rest

    return list(rec(0, ell))


def _replace(b: tuple[int, ...], old: int, new: int) -> tuple[int, ...]:
    out = list(b)
    out.remove(old)
    out.append(new)
    return tuple(sorted(out))


def pc_f(b: tuple[int, ...], i: int, n: int) -> tuple[int, ...] | None:
    old = (i - 1) % n
    if old not in b:
        return None
    return _replace(b, old, i % n)


def pc_e(b: tuple[int, ...], i: int, n: int) -> tuple[int, ...] | None:
    old = i % n
    if old not in b:
        return None
    return _replace(b, old, (i - 1) % n)


def pc_phi(b: tuple[int, ...], i: int, n: int) -> int:
    return b.count((i - 1) % n)


def pc_epsilon(b: tuple[int, ...], i: int, n: int) -> int:
    return b.count(i % n)


class PerfectCrystal:
    def __init__(self, n: int, ell: int):
        self.n, self.ell = n, ell
        self.indices = tuple(range(n))

    def elements(self):
        return perfect_elements(self.n, self.ell)

    def f(self, b, i):
        return pc_f(b, i, self.n)

    def e(self, b, i):
        return pc_e(b, i, self.n)

    def phi(self, b, i):
        return pc_phi(b, i, self.n)

    def epsilon(self, b, i):
        return pc_epsilon(b, i, self.n)


# -- ground state and paths --------------------------------------------------


def ground_factor(lam: Sequence[int], k: int) -> tuple[int, ...]:
    """k-th factor of the ground state path: value v appears m_{v+k} times."""
    n = len(lam)
    return tuple(v for v in range(n) for _ in range(lam[(v + k) % n]))


@dataclass(frozen=True, order=True)
class Path:
    """Ground state path of weight `lam` with finitely many factors replaced."""

    lam: tuple[int, ...]
    overrides: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        lam = tuple(int(m) for m in self.lam)
        if len(lam) < 2 or any(m < 0 for m in lam) or sum(lam) < 1:
            raise ValueError(f"bad dominant weight {lam}")
        object.__setattr__(self, "lam", lam)
        clean = {}
        for k, b in self.overrides:
            if k < 1:
                raise ValueError("path positions start at 1")
            b = tuple(sorted(b))
            if len(b) != sum(lam) or any(not 0 <= v < len(lam) for v in b):
                raise ValueError(f"factor {b} is not an element of the perfect crystal")
            if b != ground_factor(lam, k):
                clean[k] = b
        object.__setattr__(self, "overrides", tuple(sorted(clean.items())))

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def ell(self) -> int:
        return sum(self.lam)

    @property
    def support(self) -> int:
        """Largest position differing from the ground state (0 if none)."""
        return self.overrides[-1][0] if self.overrides else 0

    def factor(self, k: int) -> tuple[int, ...]:
        for pos, b in self.overrides:
            if pos == k:
                return b
        return ground_factor(self.lam, k)

    def with_factor(self, k: int, b: tuple[int, ...]) -> "Path":
        d = dict(self.overrides)
        d[k] = b
        return Path(self.lam, tuple(d.items()))

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "overrides": [[k, list(b)] for k, b in self.overrides]}

    @classmethod
    def from_json(cls, data: dict) -> "Path":
        return cls(tuple(data["lambda"]), tuple((int(k), tuple(b)) for k, b in data["overrides"]))

    def __str__(self) -> str:
        k = max(self.support, 1)
        return " ".join("".join(map(str, self.factor(j))) for j in range(k, 0, -1))


def ground_state_path(lam: Sequence[int], n: int | None = None, ell: int | None = None) -> Path:
    if n is not None and len(lam) != n:
        raise ValueError(f"expected {n} coefficients")
    if ell is not None and sum(lam) != ell:
        raise ValueError(f"weight has level {sum(lam)}, expected {ell}")
    return Path(tuple(lam))


def _path_brackets(p: Path, i: int, depth: int):
    """Sentinel for the tail beyond `depth`, then factors depth..1."""
    n = p.n
    out = [(OPEN, depth + 1)] * pc_phi(p.factor(depth + 1), i, n)
    for k in range(depth, 0, -1):
        b = p.factor(k)
        out.extend([(CLOSE, k)] * pc_epsilon(b, i, n))
        out.extend([(OPEN, k)] * pc_phi(b, i, n))
    return out


def path_f(p: Path, i: int, depth: int | None = None) -> Path | None:
    depth = p.support if depth is None else depth
    if depth < p.support:
        raise ValueError("depth must cover every override")
    k = first_open(_path_brackets(p, i, depth))
    if k is None:
        return None
    return p.with_factor(k, pc_f(p.factor(k), i, p.n))


def path_e(p: Path, i: int, depth: int | None = None) -> Path | None:
    depth = p.support if depth is None else depth
    if depth < p.support:
        raise ValueError("depth must cover every override")
    k = last_close(_path_brackets(p, i, depth))
    if k is None:
        return None
    return p.with_factor(k, pc_e(p.factor(k), i, p.n))


class PathCrystal:
    def __init__(self, n: int):
        self.n = n
        self.indices = tuple(range(n))

    def f(self, p, i):
        return path_f(p, i)

    def e(self, p, i):
        return path_e(p, i)

    def epsilon(self, p, i):
        return uncanceled(_path_brackets(p, i, p.support))[0]

    def phi(self, p, i):
        return uncanceled(_path_brackets(p, i, p.support))[1]


# -- abacus to path ----------------------------------------------------------


def strand_residues(psi: AbacusConfig, k: int) -> tuple[int, ...]:
    return tuple(sorted(x % psi.n for x in strand(psi, k)))


def J(psi: AbacusConfig, lam: Sequence[int] | None = None) -> Path:
    """Path whose k-th factor holds the residues of strand k."""
    if not is_descending(psi) or not is_tight(psi):
        raise NotTightError("J needs a tight descending configuration")
    if lam is None:
        lam = [0] * psi.n
        for c in psi.charges:
            lam[c % psi.n] += 1
    depth = psi.depth()
    return Path(tuple(lam), tuple((k, strand_residues(psi, k)) for k in range(1, depth + 2)))


def paths_up_to(lam: Sequence[int], depth: int) -> Iterator[Path]:
    """Every path whose overrides lie in positions 1..depth (brute force)."""
    lam = tuple(lam)
    elems = perfect_elements(len(lam), sum(lam))

    def rec(k):
        if k == 0:
            yield ()
            return
        for rest in rec(k - 1):
            for b in elems:
                yield rest + ((k, b),)

    for ov in rec(depth):
        yield Path(lam, ov)
