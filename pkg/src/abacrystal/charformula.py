"""Truncated q-series and closed product formulas for cylindric partition counts.

Dominant weights of affine sl_n are coefficient tuples ``(m_0, ..., m_{n-1})``
of the fundamental weights; the level is their sum.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class QSeries:
    """Power series in q known exactly up to q^degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, degree: int) -> "QSeries":
        return cls((1,) + (0,) * degree)

    def _check(self, other: "QSeries"):
        if other.degree != self.degree:
            raise ValueError(f"truncation mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        return QSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return QSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(tuple(other * c for c in self.coeffs))
        self._check(other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return series_pow(self, k)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def truncate(self, degree: int) -> "QSeries":
        if degree > self.degree:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.coeffs[: degree + 1])

    def times_binomial(self, a: int, sign: int = -1) -> "QSeries":
        """Multiply by (1 + sign*q^a)."""
        c = list(self.coeffs)
        for j in range(len(c) - 1, a - 1, -1):
            c[j] += sign * c[j - a]
        return QSeries(tuple(c))

    def over_binomial(self, a: int) -> "QSeries":
        """Divide by (1 - q^a), a >= 1."""
        if a <= 0:
            raise ZeroDivisionError("1 - q^0 has no inverse")
        c = list(self.coeffs)
        for j in range(a, len(c)):
            c[j] += c[j - a]
        return QSeries(tuple(c))


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    d = a.degree
    out = [0] * (d + 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j in range(d + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return QSeries(tuple(out))


def series_pow(a: QSeries, k: int) -> QSeries:
    if k < 0:
        return series_pow(series_inv(a), -k)
    out = QSeries.one(a.degree)
    base = a
    while k:
        if k & 1:
            out = series_mul(out, base)
        base = series_mul(base, base)
        k >>= 1
    return out


def series_inv(a: QSeries) -> QSeries:
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise ZeroDivisionError("only series with constant term +-1 invert over the integers")
    d = a.degree
    inv = [0] * (d + 1)
    inv[0] = c0
    for k in range(1, d + 1):
        s = sum(a.coeffs[j] * inv[k - j] for j in range(1, k + 1))
        inv[k] = -s * c0
    return QSeries(tuple(inv))


def series_inv_cyclotomic(k: int, degree: int) -> QSeries:
    """Expansion of 1/(1 - q^k)."""
    return QSeries.one(degree).over_binomial(k)


def euler_product(step: int, degree: int) -> QSeries:
    """prod_{k>=1} 1/(1 - q^{step*k})."""
    s = QSeries.one(degree)
    for a in range(step, degree + 1, step):
        s = s.over_binomial(a)
    return s


def level(lam: Sequence[int]) -> int:
    return sum(lam)


def dimq_V(lam: Sequence[int], n: int, degree: int) -> QSeries:
    """Principally specialized character of the irreducible module V(lam).

    Product over positive roots of ((1 - q^<lam+rho, a>)/(1 - q^<rho, a>))^mult.
    Real roots are +-(alpha_a + ... + alpha_b) + k*delta, imaginary roots are
    k*delta with multiplicity n-1; <lam+rho, delta> = level + n.
    """
    if len(lam) != n:
        raise ValueError(f"expected {n} coefficients, got {len(lam)}")
    N = level(lam) + n
    s = QSeries.one(degree)
    finite = []
    for a in range(1, n):
        for b in range(a, n):
            finite.append((sum(lam[i] + 1 for i in range(a, b + 1)), b - a + 1))
    k = 0
    while k * n <= degree:
        for num, den in finite:
            # positive finite root plus k*delta, and its negative plus (k+1)*delta
            for nm, dn in ((num + k * N, den + k * n), (-num + (k + 1) * N, -den + (k + 1) * n)):
                if dn <= degree:
                    s = s.over_binomial(dn)
                    if nm <= degree:
                        s = s.times_binomial(nm)
        if k >= 1 and k * n <= degree:
            for _ in range(n - 1):
                s = s.over_binomial(k * n)
                if k * N <= degree:
                    s = s.times_binomial(k * N)
        k += 1
    return s


def Z_weyl(lam: Sequence[int], n: int, degree: int) -> QSeries:
    """dimq_V times the Fock factor prod 1/(1 - q^{nk})."""
    return series_mul(dimq_V(lam, n, degree), euler_product(n, degree))


@dataclass(frozen=True)
class BoundaryProfile:
    """Positions 1..N; B[i] = 1 on n of them, A = 1 - B."""

    n: int
    ell: int
    B: tuple[int, ...]

    def __post_init__(self):
        if len(self.B) != self.n + self.ell:
            raise ValueError("profile length must be n + ell")
        if sum(self.B) != self.n:
            raise ValueError(f"profile must have exactly {self.n} B-steps")

    @property
    def N(self) -> int:
        return self.n + self.ell

    @property
    def A(self) -> tuple[int, ...]:
        return tuple(1 - b for b in self.B)

    def word(self) -> str:
        return "".join("B" if b else "A" for b in self.B)


def profile_of(lam: Sequence[int], n: int, ell: int) -> BoundaryProfile:
    """B-steps sit at a + m_0 + ... + m_{a-1} for a = 1..n."""
    if level(lam) != ell:
        raise ValueError(f"weight has level {level(lam)}, expected {ell}")
    N = n + ell
    B = [0] * N
    for a in range(1, n + 1):
        pos = a + sum(lam[:a])
        B[(pos - 1) % N] = 1
    return BoundaryProfile(n, ell, tuple(B))


def Z_borodin(profile: BoundaryProfile, degree: int) -> QSeries:
    """prod_k 1/(1-q^{kN}) * prod_k prod_{A[i]=B[j]=1} 1/(1 - q^{(i-j mod N) + (k-1)N})."""
    N = profile.N
    s = euler_product(N, degree)
    A, B = profile.A, profile.B
    for i in range(1, N + 1):
        if not A[i - 1]:
            continue
        for j in range(1, N + 1):
            if not B[j - 1]:
                continue
            base = (i - j) % N
            e = base
            while e <= degree:
                s = s.over_binomial(e)
                e += N
    return s


def lambda_prime(lam: Sequence[int]) -> tuple[int, ...]:
    """Rank-level dual weight: sum over i of the fundamental weight (m_i + ... + m_{n-1}) mod ell."""
    n = len(lam)
    ell = level(lam)
    if ell < 1:
        raise ValueError("level must be positive")
    out = [0] * ell
    for i in range(n):
        out[sum(lam[i:]) % ell] += 1
    return tuple(out)


def parse_weight(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
