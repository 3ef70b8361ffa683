"""Partition pairs in ST, the paircrank, and the generating functions ST(q), ST(z,q).

A pair ``(pi1, pi2)`` is in ST when ``pi1`` is non-empty, ``s(pi1) <= s(pi2)``
and ``l(pi2) < 2 s(pi1)``; equivalently every part of ``pi2`` lies in
``[s(pi1), 2 s(pi1))``.

Three independent constructions of ST(z, q) are provided:

* :func:`st_series_z_def` -- the defining product sum;
* :func:`st_series_z_lambert` -- the bilateral Lambert form over ``(q;q)_inf``;
* :func:`st_series_z_crankform` -- the rearrangement in which the power of z
  is the paircrank.

Each takes an optional ``z``: a unit of some coefficient ring (e.g. a root
of unity in Z[zeta_t]) at which to evaluate directly.  Without it the series
is computed over Laurent polynomials in z.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import ZZ, ZZ_z, LaurentSeries, ring_of

ENUMERATION_CEILING = 25


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(x > y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def count(self) -> int:
        return len(self.parts)

    @property
    def smallest(self):
        return self.parts[0] if self.parts else math.inf

    @property
    def largest(self) -> int:
        return self.parts[-1] if self.parts else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts)) if self.parts else "()"


@dataclass(frozen=True, order=True)
class PartitionPair:
    pi1: Partition
    pi2: Partition = field(default_factory=Partition)

    @classmethod
    def of(cls, pi1, pi2=()) -> "PartitionPair":
        return cls(Partition(tuple(pi1)), Partition(tuple(pi2)))

    @property
    def size(self) -> int:
        return self.pi1.size + self.pi2.size

    def is_st(self) -> bool:
        return (
            self.pi1.count > 0
            and self.pi1.smallest <= self.pi2.smallest
            and self.pi2.largest < 2 * self.pi1.smallest
        )

    def __str__(self) -> str:
        return f"({self.pi1}, {self.pi2 if self.pi2.count else 'empty'})"


def partitions_between(n: int, lo: int, hi: int):
    """Yield partitions of n (non-decreasing tuples) with every part in [lo, hi]."""
    if n == 0:
        yield ()
        return
    for first in range(lo, min(hi, n) + 1):
        for rest in partitions_between(n - first, first, hi):
            yield (first,) + rest


def enumerate_st_pairs(n: int) -> list[PartitionPair]:
    """All ST pairs of total size n, sorted lexicographically on (pi1, pi2)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    pairs = []
    for s in range(1, n + 1):
        for n1 in range(s, n + 1):
            firsts = [(s,) + rest for rest in partitions_between(n1 - s, s, n1)]
            if not firsts:
                continue
            seconds = list(partitions_between(n - n1, s, 2 * s - 1))
            for p1 in firsts:
                for p2 in seconds:
                    pairs.append(PartitionPair(Partition(p1), Partition(p2)))
    pairs.sort(key=lambda p: (p.pi1.parts, p.pi2.parts))
    return pairs


def st_count(n: int) -> int:
    """sT(n) by enumeration."""
    return len(enumerate_st_pairs(n))


def paircrank(p: PartitionPair) -> int:
    if not p.is_st():
        raise ValueError(f"{p} is not an ST pair")
    k = p.pi2.count
    if k == 0:
        return p.pi1.count - 1
    bound = p.pi1.smallest + k
    return sum(1 for x in p.pi1.parts if x >= bound) - k


@dataclass
class CrankTable:
    """``counts[(m, n)]`` = number of ST pairs of n with paircrank m, for n <= max_n."""

    max_n: int
    counts: Counter

    def column(self, n: int) -> dict:
        self._check(n)
        return {m: c for (m, k), c in sorted(self.counts.items()) if k == n and c}

    def st(self, n: int) -> int:
        return sum(self.column(n).values())

    def _check(self, n: int) -> None:
        if not 0 <= n <= self.max_n:
            raise ValueError(f"n={n} outside table range 0..{self.max_n}")

    @classmethod
    def from_series(cls, series: LaurentSeries, max_n: int) -> "CrankTable":
        """Read C(m, n) off a two-variable series over ZZ[z, 1/z]."""
        if series.ring is not ZZ_z:
            raise ValueError("crank table needs a series over ZZ[z,1/z]")
        counts = Counter()
        for n in range(0, max_n + 1):
            for m, c in series.coeff(n).items():
                counts[(m, n)] = c
        return cls(max_n, counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CrankTable):
            return NotImplemented
        strip = lambda c: {k: v for k, v in c.items() if v}  # noqa: E731
        return self.max_n == other.max_n and strip(self.counts) == strip(other.counts)


def crank_table_enum(max_n: int) -> CrankTable:
    counts = Counter()
    for n in range(max_n + 1):
        for p in enumerate_st_pairs(n):
            counts[(paircrank(p), n)] += 1
    return CrankTable(max_n, counts)


def crank_mod_counts(table: CrankTable, t: int, n: int) -> list[int]:
    """``[C(0,t,n), ..., C(t-1,t,n)]``."""
    if t < 1:
        raise ValueError("modulus must be positive")
    out = [0] * t
    for m, c in table.column(n).items():
        out[m % t] += c
    return out


# ---------------------------------------------------------------------------
# generating functions
# ---------------------------------------------------------------------------


def _partition_series(order: int) -> LaurentSeries:
    """1/(q;q)_inf."""
    s = LaurentSeries.one(ZZ, order)
    for k in range(1, order + 1):
        s = s.over_one_minus(1, k)
    return s


def st_series(order: int) -> LaurentSeries:
    """``ST(q) = sum_{n>=1} q^n / ((q^n;q)_inf (q^n;q)_n)``, over ZZ."""
    if order < 1:
        raise ValueError("order must be at least 1")
    total = LaurentSeries.zero(ZZ, order)
    # tail = 1/(q^n;q)_inf, built downward from n = order
    tail = LaurentSeries.one(ZZ, order)
    for n in range(order, 0, -1):
        tail = tail.over_one_minus(1, n)
        term = tail.truncate(order - n)
        for k in range(n, 2 * n):
            if k > order - n:
                break
            term = term.over_one_minus(1, k)
        total = total + term.shift(n)
    return total


def _z_pair(z):
    if z is None:
        return ZZ_z, ZZ_z.z, ZZ_z.zinv
    ring = ring_of(z)
    return ring, z, ring.unit_inverse(z)


def st_series_z_def(order: int, z=None) -> LaurentSeries:
    """``sum_{n>=1} q^n (q^{2n};q)_inf / (z q^n, q^n / z; q)_inf``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    ring, z, zi = _z_pair(z)
    # u_n = (q^{2n};q)_inf / (z q^n, q^n/z; q)_inf, needed through q^{order-n}
    u = LaurentSeries.one(ring, order - 1)
    for k in range(2, order):
        u = u.times_one_minus(1, k)
    for k in range(1, order):
        u = u.over_one_minus(z, k).over_one_minus(zi, k)
    total = LaurentSeries.zero(ring, order)
    for n in range(1, order + 1):
        total = total + u.shift(n)
        if n == order:
            break
        # u_{n+1} = u_n (1 - z q^n)(1 - q^n/z) / ((1 - q^{2n})(1 - q^{2n+1}))
        u = u.truncate(order - n - 1)
        u = u.times_one_minus(z, n).times_one_minus(zi, n)
        u = u.over_one_minus(1, 2 * n).over_one_minus(1, 2 * n + 1)
    return total


def st_series_z_lambert(order: int, z=None) -> LaurentSeries:
    """``(q;q)_inf^{-1} sum_n q^{6n^2+4n+1} (1 - q^{6n+2}) / ((1 - z q^{3n+1})(1 - q^{3n+1}/z))``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    ring, z, zi = _z_pair(z)
    total = LaurentSeries.zero(ring, order)
    n_max = math.isqrt(order) + 1
    for n in range(-n_max, n_max + 1):
        e = 6 * n * n + 4 * n + 1
        if e > order:
            continue
        d = 3 * n + 1
        if d < 0:
            # (1 - z q^d)(1 - q^d/z) = q^{2d} (1 - z q^{-d})(1 - q^{-d}/z)
            e -= 2 * d
            d = -d
        # numerator q^e - q^{e+6n+2}; both exponents are >= 6n^2+4n+1 >= 1
        lo = min(e, e + 6 * n + 2)
        g = LaurentSeries.one(ring, order - lo)
        g = g.over_one_minus(z, d).over_one_minus(zi, d)
        term = g.shift(e).truncate(order) - g.shift(e + 6 * n + 2).truncate(order)
        total = total + term.extend_lo(0)
    return total * _partition_series(order).to_ring(ring)


def crankform_terms(order: int, z=None) -> tuple[LaurentSeries, LaurentSeries]:
    """The two sums of the crank rearrangement of ST(z, q).

    First: ``sum_{n>=1} q^n / (z q^n; q)_inf`` (pairs with empty pi2).
    Second: ``sum_{n,k>=1} q^n / ((q^n;q)_k (z q^{n+k};q)_inf) *
    z^{-k} q^{kn} (q;q)_{n+k-1} / ((q;q)_{n-1} (q;q)_k)`` (both non-empty).
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    ring, z, zi = _z_pair(z)
    first = LaurentSeries.zero(ring, order)
    second = LaurentSeries.zero(ring, order)
    # g = 1/(z q^m; q)_inf, built downward
    g = LaurentSeries.one(ring, order)
    for m in range(order, 0, -1):
        g = g.over_one_minus(z, m)
        first = first + g.truncate(order - m).shift(m)
        # pairs (n, k) with n + k = m, k >= 1: the factor 1/(z q^{n+k};q)_inf is g
        inner = None
        for k in range(1, m):
            n = m - k
            low = n * (k + 1)
            if low > order:
                continue
            # q^n/(q^n;q)_k  times  q^{kn} (q;q)_{n+k-1}/((q;q)_{n-1}(q;q)_k).
            # (q;q)_{n+k-1}/(q;q)_{n-1} is (q^n;q)_k, so the first two loops cancel; they are
            # kept so the code follows the rearranged sum factor by factor.
            part = LaurentSeries.one(ZZ, order - low)
            for j in range(n, n + k):
                part = part.over_one_minus(1, j)
            for j in range(n, n + k):
                part = part.times_one_minus(1, j)
            for j in range(1, k + 1):
                part = part.over_one_minus(1, j)
            part = part.to_ring(ring).scale(zi ** k).shift(low)
            inner = part if inner is None else inner + part
        if inner is not None:
            second = second + (inner.extend_lo(0) * g).truncate(order)
    return first, second


def st_series_z_crankform(order: int, z=None) -> LaurentSeries:
    first, second = crankform_terms(order, z)
    return first + second


# ---------------------------------------------------------------------------
# the "occurrences of smallest parts" reading
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def smallest_part_occurrences(n: int, bound: str = "pi1") -> int:
    """Weighted count behind the alternative description of sT(n).

    Sums, over pairs (pi1, pi2) of n with pi1 non-empty and every part of pi2
    strictly above s(pi1) and strictly below ``2 s(pi1)`` (``bound="pi1"``) or
    ``2 s(pi2)`` (``bound="pi2"``), the number of times s(pi1) occurs in pi1.
    """
    if bound not in ("pi1", "pi2"):
        raise ValueError("bound must be 'pi1' or 'pi2'")
    total = 0
    for n1 in range(1, n + 1):
        for p1 in partitions_between(n1, 1, n1):
            s = p1[0]
            weight = p1.count(s)
            rest = n - n1
            if bound == "pi1":
                total += weight * sum(1 for _ in partitions_between(rest, s + 1, 2 * s - 1))
            else:
                total += weight * sum(
                    1 for p2 in partitions_between(rest, s + 1, rest) if not p2 or p2[-1] < 2 * p2[0]
                )
    return total
