"""q-Pochhammer symbols, Jacobi brackets and theta functions as truncated series.

Brackets ``<q^a>_{q^b} = (q^a, q^{b-a}; q^b)_inf`` with ``a`` outside ``(0, b)``
are reduced with ``<z>_q = -z <qz>_q`` to a sign, a power of q and a bracket
with ``0 < a' < b``; the reduced bracket has constant term 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ZZ, ZZ_z, CyclotomicInt, LaurentSeries, ZPoly


class ZeroBracket(ZeroDivisionError):
    """A bracket ``<q^a>_{q^b}`` with ``a = 0 (mod b)``, which vanishes identically."""


class DivergentProduct(ValueError):
    """An infinite product that is not a formal power series in q."""


@dataclass(frozen=True)
class Monomial:
    """``coeff * z^zexp * q^qexp``; ``coeff`` must be a unit of the target ring."""

    coeff: object = 1
    qexp: int = 0
    zexp: int = 0

    def ring(self):
        if self.zexp:
            return ZZ_z
        if isinstance(self.coeff, CyclotomicInt):
            from .algebra import CyclotomicRing

            return CyclotomicRing(self.coeff.t)
        if isinstance(self.coeff, ZPoly):
            return ZZ_z
        return ZZ

    def element(self, ring):
        """The ring element ``coeff * z^zexp``."""
        if self.zexp:
            if ring is not ZZ_z:
                raise ValueError("a z-power needs the crank polynomial ring")
            return ZPoly.monomial(1, self.zexp) * ring.coerce(self.coeff)
        return ring.coerce(self.coeff)


def _times_factor(s: LaurentSeries, c, m: int) -> LaurentSeries:
    """Multiply by ``(1 - c q^m)`` for any integer m."""
    if m >= 1:
        return s.times_one_minus(c, m)
    ring = s.ring
    if m == 0:
        return s.scale(ring.one - c)
    # 1 - c q^m = -c q^m (1 - c^{-1} q^{-m})
    cinv = ring.unit_inverse(c)
    return s.times_one_minus(cinv, -m).scale(-c).shift(m)


def pochhammer_finite(x: Monomial, base: int, n: int, order: int, ring=None) -> LaurentSeries:
    """``prod_{k<n} (1 - x q^{base*k})`` through ``q^order``."""
    if base < 1:
        raise ValueError("base must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    ring = ring or x.ring()
    c = x.element(ring)
    steps = [x.qexp + base * k for k in range(n)]
    drop = -sum(m for m in steps if m < 0)
    s = LaurentSeries.one(ring, order + drop)
    for m in steps:
        if m <= order + drop:
            s = _times_factor(s, c, m)
    return s.truncate(order)


def pochhammer_inf(x: Monomial, base: int, order: int, ring=None) -> LaurentSeries:
    """``prod_{k>=0} (1 - x q^{base*k})`` through ``q^order``."""
    if base < 1:
        raise ValueError("base must be positive")
    if x.qexp <= 0 and x.zexp == 0:
        raise DivergentProduct(f"(x q^{x.qexp}; q^{base})_inf does not converge as a formal series")
    ring = ring or x.ring()
    c = x.element(ring)
    drop = 0
    k = 0
    while x.qexp + base * k < 0:
        drop -= x.qexp + base * k
        k += 1
    s = LaurentSeries.one(ring, order + drop)
    k = 0
    while x.qexp + base * k <= order + drop:
        s = _times_factor(s, c, x.qexp + base * k)
        k += 1
    return s.truncate(order)


def euler_product(base: int, order: int) -> LaurentSeries:
    """``(q^base; q^base)_inf``."""
    return pochhammer_inf(Monomial(1, base), base, order)


def normalize_bracket(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(sign, shift, r)`` with ``<q^a>_{q^b} = sign q^shift <q^r>_{q^b}`` and ``0 < r <= b/2``."""
    if b < 1:
        raise ValueError("bracket base must be positive")
    if a % b == 0:
        raise ZeroBracket(f"<q^{a}>_(q^{b}) vanishes")
    sign, shift = 1, 0
    while a < 0:
        # <q^a> = -q^a <q^{a+b}>
        sign, shift, a = -sign, shift + a, a + b
    while a > b:
        # <q^a> = -q^{b-a} <q^{a-b}>
        sign, shift, a = -sign, shift + b - a, a - b
    return sign, shift, min(a, b - a)


def bracket_steps(r: int, b: int, order: int) -> list[int]:
    """Exponents m of the factors ``(1 - q^m)`` of the reduced bracket ``<q^r>_{q^b}`` up to order."""
    steps = []
    for start in (r, b - r):
        m = start
        while m <= order:
            steps.append(m)
            m += b
    return steps


def apply_steps(s: LaurentSeries, steps, power: int = 1) -> LaurentSeries:
    """Multiply by ``prod_m (1 - q^m)^power`` (power may be negative)."""
    if power >= 0:
        for _ in range(power):
            for m in steps:
                s = s.times_one_minus(1, m)
    else:
        for _ in range(-power):
            for m in steps:
                s = s.over_one_minus(1, m)
    return s


def jacobi_bracket(a: int, b: int, order: int) -> LaurentSeries:
    """``<q^a>_{q^b} = (q^a, q^{b-a}; q^b)_inf`` through ``q^order``; may have negative exponents."""
    sign, shift, r = normalize_bracket(a, b)
    inner = order - shift
    s = LaurentSeries.one(ZZ, max(inner, -1))
    s = apply_steps(s, bracket_steps(r, b, inner))
    if sign < 0:
        s = -s
    return s.shift(shift).truncate(order)


def jtheta(a: int, b: int, order: int) -> LaurentSeries:
    """``j(q^a; q^b) = <q^a>_{q^b} (q^b; q^b)_inf``; zero when ``a = 0 (mod b)``."""
    if a % b == 0:
        return LaurentSeries.zero(ZZ, order)
    _, shift, _ = normalize_bracket(a, b)
    return jacobi_bracket(a, b, order) * euler_product(b, order - min(shift, 0))


def _theta_exponent(a: int, b: int, n: int) -> int:
    return a * n + b * n * (n - 1) // 2


def jtheta_sum_oracle(a: int, b: int, order: int) -> LaurentSeries:
    """``sum_n (-1)^n q^{a n + b n(n-1)/2}``, summed directly without any product."""
    # exponent is a convex quadratic in n with vertex near 1/2 - a/b
    centre = (b - 2 * a) // (2 * b)
    terms: dict[int, int] = {}
    for direction in (1, -1):
        n = centre if direction == 1 else centre - 1
        while True:
            e = _theta_exponent(a, b, n)
            if e > order and (direction * (2 * b * n - b + 2 * a) > 0):
                break
            if e <= order:
                terms[e] = terms.get(e, 0) + (-1) ** (n % 2)
            n += direction
    lo = min(terms) if terms else order + 1
    return LaurentSeries.from_dict(ZZ, terms, order, lo=lo)
