"""Truncated Laurent series in q over an exact coefficient ring.

A :class:`LaurentSeries` knows its coefficients exactly for exponents
``lo <= e <= order``; everything above ``order`` is unknown.  Every
operation propagates the guaranteed order pessimistically, and asking for a
coefficient above it raises instead of returning a silent zero.
"""

from __future__ import annotations

from .rings import ZZ, ZZ_z, CyclotomicRing, NotAUnitError, RingError


class TruncationError(ValueError):
    """A coefficient beyond the guaranteed order was requested."""


class RingMismatchError(RingError):
    pass


class LaurentSeries:
    __slots__ = ("ring", "lo", "order", "coeffs")

    def __init__(self, ring, coeffs, lo: int = 0, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = lo + len(coeffs) - 1
        if lo > order + 1:
            # nothing is known, the lowest tracked exponent sits just above order
            lo = order + 1
        n = order - lo + 1
        if len(coeffs) < n:
            coeffs.extend([ring.zero] * (n - len(coeffs)))
        elif len(coeffs) > n:
            del coeffs[n:]
        self.ring = ring
        self.lo = lo
        self.order = order
        self.coeffs = tuple(coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring, order: int) -> "LaurentSeries":
        return cls(ring, (), lo=0, order=order)

    @classmethod
    def one(cls, ring, order: int) -> "LaurentSeries":
        return cls.monomial(ring, ring.one, 0, order)

    @classmethod
    def monomial(cls, ring, c, e: int, order: int) -> "LaurentSeries":
        if e > order:
            return cls(ring, (), lo=order + 1, order=order)
        return cls(ring, [c], lo=e, order=order)

    @classmethod
    def from_dict(cls, ring, terms: dict, order: int, lo: int | None = None) -> "LaurentSeries":
        if lo is None:
            lo = min(terms) if terms else 0
        out = [ring.zero] * max(0, order - lo + 1)
        for e, c in terms.items():
            if e < lo:
                raise ValueError(f"exponent {e} below lo={lo}")
            if e <= order:
                out[e - lo] = out[e - lo] + c
        return cls(ring, out, lo=lo, order=order)

    # -- inspection --------------------------------------------------------

    def coeff(self, e: int):
        return series_coeff(self, e)

    __getitem__ = coeff

    def items(self):
        """Yield ``(exponent, coefficient)`` for nonzero stored coefficients."""
        lo = self.lo
        for i, c in enumerate(self.coeffs):
            if c:
                yield lo + i, c

    def to_dict(self) -> dict:
        return dict(self.items())

    def valuation(self) -> int | None:
        """Exponent of the first nonzero coefficient, or None if all known ones vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.lo + i
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def coefficient_list(self, start: int, stop: int) -> list:
        """Coefficients for ``start <= e <= stop`` (stop must not exceed order)."""
        return [self.coeff(e) for e in range(start, stop + 1)]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return series_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return series_add(self, -other)

    def __neg__(self):
        return LaurentSeries(self.ring, [-c for c in self.coeffs], self.lo, self.order)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            return series_inverse(self) ** (-n)
        result = LaurentSeries.one(self.ring, self.order - self.lo)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "LaurentSeries":
        """Multiply every coefficient by a ring element (or int)."""
        if not self.ring.contains(c):
            c = self.ring.coerce(c)
        return LaurentSeries(self.ring, [x * c for x in self.coeffs], self.lo, self.order)

    def inverse(self) -> "LaurentSeries":
        return series_inverse(self)

    def shift(self, k: int) -> "LaurentSeries":
        return series_shift(self, k)

    def truncate(self, order: int) -> "LaurentSeries":
        if order >= self.order:
            return self
        return LaurentSeries(self.ring, self.coeffs[: max(0, order - self.lo + 1)], self.lo, order)

    def extend_lo(self, lo: int) -> "LaurentSeries":
        """Same series with the tracked range starting at ``lo`` (padding zeros)."""
        if lo >= self.lo:
            return self
        pad = [self.ring.zero] * (self.lo - lo)
        return LaurentSeries(self.ring, pad + list(self.coeffs), lo, self.order)

    def times_one_minus(self, c, m: int) -> "LaurentSeries":
        """Multiply by ``(1 - c q^m)`` for ``m >= 1``; the order is unchanged."""
        if m < 1:
            raise ValueError("binomial step needs m >= 1")
        a = self.coeffs
        n = len(a)
        if m >= n:
            return self
        if c == 1:
            tail = [x - y for x, y in zip(a[m:], a[: n - m])]
        else:
            tail = [x - c * y for x, y in zip(a[m:], a[: n - m])]
        return LaurentSeries(self.ring, a[:m] + tuple(tail), self.lo, self.order)

    def over_one_minus(self, c, m: int) -> "LaurentSeries":
        """Divide by ``(1 - c q^m)`` for ``m >= 1``; the order is unchanged."""
        if m < 1:
            raise ValueError("binomial step needs m >= 1")
        out = list(self.coeffs)
        n = len(out)
        one = c == 1
        for s in range(m, n, m):
            prev = out[s - m: s]
            if one:
                out[s: s + m] = [x + y for x, y in zip(out[s: s + m], prev)]
            else:
                out[s: s + m] = [x + c * y for x, y in zip(out[s: s + m], prev)]
        return LaurentSeries(self.ring, out, self.lo, self.order)

    def map_coeffs(self, f, ring) -> "LaurentSeries":
        return LaurentSeries(ring, [f(c) for c in self.coeffs], self.lo, self.order)

    def to_ring(self, ring) -> "LaurentSeries":
        """Coerce an integer series into another ring."""
        if ring is self.ring:
            return self
        if self.ring is not ZZ:
            raise RingMismatchError(f"can only coerce from ZZ, not {self.ring!r}")
        return self.map_coeffs(ring.coerce, ring)

    def dissect(self, t: int, r: int) -> "LaurentSeries":
        return dissect(self, t, r)

    def compose_power(self, t: int) -> "LaurentSeries":
        """Substitute q -> q^t (t >= 1)."""
        if t < 1:
            raise ValueError("q -> q^t needs t >= 1")
        if t == 1:
            return self
        zero = self.ring.zero
        out = []
        for c in self.coeffs:
            out.append(c)
            out.extend([zero] * (t - 1))
        # the t-1 exponents after t*order are known zeros; t*(order+1) is not known
        return LaurentSeries(self.ring, out, t * self.lo, t * self.order + t - 1)

    # -- comparison --------------------------------------------------------

    def first_difference(self, other: "LaurentSeries"):
        """Lowest exponent where the two series differ up to their common order, or None."""
        _check_rings(self, other)
        diff = self - other
        return diff.valuation()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.ring is not other.ring:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self) -> str:
        return f"LaurentSeries({self.ring!r}, {self.to_dict()!r}, lo={self.lo}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for e, c in self.items():
            cs = str(c)
            if e == 0:
                terms.append(cs)
                continue
            qe = "q" if e == 1 else f"q^{e}"
            if cs == "1":
                terms.append(qe)
            elif cs == "-1":
                terms.append("-" + qe)
            elif any(ch in cs[1:] for ch in "+-") or " " in cs:
                terms.append(f"({cs})*{qe}")
            else:
                terms.append(f"{cs}*{qe}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def _check_rings(a: LaurentSeries, b: LaurentSeries) -> None:
    if a.ring is not b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    _check_rings(a, b)
    order = min(a.order, b.order)
    lo = min(a.lo, b.lo)
    n = order - lo + 1
    if n <= 0:
        return LaurentSeries(a.ring, (), lo, order)
    out = [a.ring.zero] * n
    for src in (a, b):
        off = src.lo - lo
        k = min(len(src.coeffs), n - off)
        if k > 0:
            out[off: off + k] = [x + y for x, y in zip(out[off: off + k], src.coeffs[:k])]
    return LaurentSeries(a.ring, out, lo, order)


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Cauchy product, exact up to ``min(a.order + b.lo, b.order + a.lo)``."""
    _check_rings(a, b)
    order = min(a.order + b.lo, b.order + a.lo)
    lo = a.lo + b.lo
    n = order - lo + 1
    if n <= 0:
        return LaurentSeries(a.ring, (), lo, order)
    x, y = a.coeffs, b.coeffs
    # iterate over the sparser operand
    if sum(1 for c in x if c) > sum(1 for c in y if c):
        x, y = y, x
    out = [a.ring.zero] * n
    for i, c in enumerate(x):
        if i >= n:
            break
        if not c:
            continue
        k = min(len(y), n - i)
        if c == 1:
            out[i: i + k] = [o + v for o, v in zip(out[i: i + k], y[:k])]
        elif c == -1:
            out[i: i + k] = [o - v for o, v in zip(out[i: i + k], y[:k])]
        else:
            out[i: i + k] = [o + c * v for o, v in zip(out[i: i + k], y[:k])]
    return LaurentSeries(a.ring, out, lo, order)


def series_inverse(a: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse; the leading coefficient must be a unit."""
    v = a.valuation()
    if v is None:
        raise NotAUnitError("cannot invert a series with no known nonzero coefficient")
    ring = a.ring
    lead = a.coeff(v)
    if not ring.is_unit(lead):
        raise NotAUnitError(f"leading coefficient {lead} at q^{v} is not a unit")
    inv_lead = ring.unit_inverse(lead)
    u = a.coeffs[v - a.lo:]  # u[0] = lead, known through index a.order - v
    n = len(u)
    b = [ring.zero] * n
    b[0] = inv_lead
    for k in range(1, n):
        acc = ring.zero
        for j in range(1, k + 1):
            uj = u[j]
            if uj:
                acc = acc + uj * b[k - j]
        b[k] = -(acc * inv_lead) if acc else ring.zero
    # q^{-v} / u, known through a.order - 2v
    return LaurentSeries(ring, b, -v, a.order - 2 * v)


def series_shift(a: LaurentSeries, k: int) -> LaurentSeries:
    """Multiply by q^k."""
    return LaurentSeries(a.ring, a.coeffs, a.lo + k, a.order + k)


def series_coeff(a: LaurentSeries, e: int):
    if e > a.order:
        raise TruncationError(f"coefficient of q^{e} requested but series known only through q^{a.order}")
    if e < a.lo:
        return a.ring.zero
    return a.coeffs[e - a.lo]


def dissect(a: LaurentSeries, t: int, r: int) -> LaurentSeries:
    """Component g with g[m] = a[t*m + r]; a = sum_r q^r g_r(q^t)."""
    if t < 1 or not 0 <= r < t:
        raise ValueError(f"need t >= 1 and 0 <= r < t, got t={t}, r={r}")
    order = (a.order - r) // t
    lo = -((r - a.lo) // t)  # ceil((a.lo - r) / t)
    out = [a.coeff(t * m + r) for m in range(lo, order + 1)]
    return LaurentSeries(a.ring, out, lo, order)


def reassemble(parts, t: int) -> LaurentSeries:
    """Inverse of :func:`dissect`: sum_r q^r parts[r](q^t)."""
    total = None
    for r, g in enumerate(parts):
        piece = series_shift(g.compose_power(t), r)
        total = piece if total is None else series_add(total, piece)
    return total


def eval_at_root_of_unity(a: LaurentSeries, t: int) -> LaurentSeries:
    """Map each z-polynomial coefficient p(z) to p(zeta_t) in Z[zeta_t]."""
    if a.ring is not ZZ_z:
        raise RingMismatchError("evaluation at a root of unity needs a series over ZZ[z,1/z]")
    ring = CyclotomicRing(t)
    return a.map_coeffs(lambda p: p.evaluate(t), ring)


def specialize_z_at_one(a: LaurentSeries) -> LaurentSeries:
    """Map each z-polynomial coefficient p(z) to p(1)."""
    if a.ring is not ZZ_z:
        raise RingMismatchError("z = 1 specialization needs a series over ZZ[z,1/z]")
    return a.map_coeffs(lambda p: p.at_one(), ZZ)
