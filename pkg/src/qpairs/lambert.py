"""Generalized Lambert series at monomial arguments.

``Sigma(a, b, c) = sum_n q^{2c n(n+1) + b n} / (1 - q^{a + c n})`` and
``U_ell(b) = sum_n q^{6n^2 + b n} / (1 - q^{ell(3n+1)})``, both bilateral.

A term with a negative denominator exponent ``d`` is expanded as
``1/(1 - q^d) = -q^{-d} / (1 - q^{-d})`` so every term is a one-sided
geometric series.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ZZ, LaurentSeries


class PoleError(ZeroDivisionError):
    """``Sigma(a, b, c)`` with ``a = 0 (mod c)`` has a term ``1/(1 - 1)``."""


def _scan(lower_bound, limit: int):
    """Yield every integer n (outward from 0) whose ``lower_bound(n) <= limit``.

    ``lower_bound`` must be convex on each of n >= 0 and n < 0, so once it
    exceeds ``limit`` and is not decreasing in the scan direction it stays above.
    """
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        cur = lower_bound(n)
        while True:
            nxt = lower_bound(n + direction)
            if cur > limit and nxt >= cur:
                break
            if cur <= limit:
                yield n
            n += direction
            cur = nxt


def _geometric_terms(num: int, d: int, order: int, out: dict, weight: int = 1) -> None:
    """Add ``weight * q^num / (1 - q^d)`` to ``out`` through ``order``."""
    if d > 0:
        e, sgn = num, weight
    else:
        d = -d
        e, sgn = num + d, -weight
    while e <= order:
        out[e] = out.get(e, 0) + sgn
        e += d


@dataclass(frozen=True)
class SigmaSpec:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.c < 1:
            raise ValueError("Sigma base exponent c must be positive")
        if self.a % self.c == 0:
            raise PoleError(f"Sigma({self.a},{self.b},{self.c}) has a pole (z = q^a with a = 0 mod c)")

    def numerator_exponent(self, n: int) -> int:
        return 2 * self.c * n * (n + 1) + self.b * n

    def min_exponent(self, n: int) -> int:
        """Lowest exponent contributed by the n-th term."""
        d = self.a + self.c * n
        if d == 0:
            raise PoleError(f"term n={n} of {self} has a pole")
        return self.numerator_exponent(n) + max(0, -d)

    def loose_bound(self, n: int) -> int:
        a, b, c = self.a, self.b, self.c
        return 2 * c * n * (n + 1) - abs(b) * abs(n) - c * abs(n) - abs(a)

    def terms(self, order: int) -> list[int]:
        """Every n whose term reaches exponent ``order`` or below."""
        return [n for n in _scan(self.loose_bound, order) if self.min_exponent(n) <= order]

    def valuation(self) -> int:
        """A lower bound (in fact the minimum) of the exponents over all terms."""
        best = self.min_exponent(0)
        while True:
            cands = [self.min_exponent(n) for n in _scan(self.loose_bound, best)]
            new = min(cands)
            if new >= best:
                return best
            best = new

    def series(self, order: int) -> LaurentSeries:
        out: dict[int, int] = {}
        for n in self.terms(order):
            _geometric_terms(self.numerator_exponent(n), self.a + self.c * n, order, out)
        return LaurentSeries.from_dict(ZZ, out, order, lo=min(self.valuation(), order + 1))

    def __str__(self) -> str:
        return f"Sigma({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class UellSpec:
    ell: int
    b: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be positive")

    def numerator_exponent(self, n: int) -> int:
        return 6 * n * n + self.b * n

    def min_exponent(self, n: int) -> int:
        d = self.ell * (3 * n + 1)
        return self.numerator_exponent(n) + max(0, -d)

    def loose_bound(self, n: int) -> int:
        return 6 * n * n - abs(self.b) * abs(n)

    def terms(self, order: int) -> list[int]:
        return [n for n in _scan(self.loose_bound, order) if self.min_exponent(n) <= order]

    def valuation(self) -> int:
        best = self.min_exponent(0)
        while True:
            new = min(self.min_exponent(n) for n in _scan(self.loose_bound, best))
            if new >= best:
                return best
            best = new

    def series(self, order: int) -> LaurentSeries:
        out: dict[int, int] = {}
        for n in self.terms(order):
            _geometric_terms(self.numerator_exponent(n), self.ell * (3 * n + 1), order, out)
        return LaurentSeries.from_dict(ZZ, out, order, lo=min(self.valuation(), order + 1))

    def __str__(self) -> str:
        return f"U_{self.ell}({self.b})"


def sigma(a: int, b: int, c: int, order: int) -> LaurentSeries:
    """``Sigma(q^a, q^b, q^c)`` through ``q^order``."""
    return SigmaSpec(a, b, c).series(order)


def sigma_min_exponent(a: int, b: int, c: int, n: int) -> int:
    """Lowest exponent of the n-th term of ``Sigma(a, b, c)``."""
    if (a + c * n) == 0:
        raise PoleError(f"term n={n} of Sigma({a},{b},{c}) has a pole")
    return 2 * c * n * (n + 1) + b * n + max(0, -(a + c * n))


def u_ell(ell: int, b: int, order: int) -> LaurentSeries:
    """``U_ell(b)`` through ``q^order``."""
    return UellSpec(ell, b).series(order)
