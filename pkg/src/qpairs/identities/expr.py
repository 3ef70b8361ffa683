"""A tiny expression algebra for q-series identities.

An :class:`Expr` is a finite sum of :class:`Term` objects, each of the form
``coeff * q^shift * prod F^e``.  Factors are eta products ``(q^c;q^c)_inf``,
reduced Jacobi brackets, Lambert sums, U-sums and named custom series.  Eta
and bracket factors have constant term 1, so they are units and may carry
negative exponents; the other factors may only appear in numerators.

Comparison is done by clearing denominators: every term is multiplied by the
least common denominator of the unit factors.  The multiplier is ``1 + O(q)``,
so the first nonzero exponent of ``lhs - rhs`` and its coefficient are the same
before and after clearing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..algebra import LaurentSeries
from ..lambert import SigmaSpec, UellSpec
from ..qseries import ZeroBracket, bracket_steps, normalize_bracket


@dataclass(frozen=True)
class Eta:
    """``(q^c; q^c)_inf``."""

    c: int

    def key(self):
        return (0, self.c, 0)

    def steps(self, limit: int) -> list[int]:
        return list(range(self.c, limit + 1, self.c))

    def __str__(self) -> str:
        return f"E({self.c})"


@dataclass(frozen=True)
class Bracket:
    """Reduced ``<q^r>_{q^c}`` with ``0 < r <= c/2``."""

    r: int
    c: int

    def key(self):
        return (1, self.c, self.r)

    def steps(self, limit: int) -> list[int]:
        return bracket_steps(self.r, self.c, limit)

    def __str__(self) -> str:
        return f"<{self.r}>_{self.c}"


@dataclass(frozen=True)
class Custom:
    """A named series ``fn(ring, order)`` whose exponents are all ``>= lo``."""

    name: str
    fn: Callable = field(compare=False, hash=False)
    lo: int = 0

    def key(self):
        return (4, self.name, 0)

    def valuation(self) -> int:
        return self.lo

    def series(self, ring, order: int) -> LaurentSeries:
        return self.fn(ring, order)

    def __str__(self) -> str:
        return self.name


UNIT_KINDS = (Eta, Bracket)


def _factor_key(f):
    if isinstance(f, SigmaSpec):
        return (2, f.c, (f.a, f.b))
    if isinstance(f, UellSpec):
        return (3, f.ell, f.b)
    return f.key()


def _factor_series(f, ring, order: int) -> LaurentSeries:
    if isinstance(f, Custom):
        s = f.series(ring, order)
    else:
        s = f.series(order)
    return s.to_ring(ring) if s.ring is not ring else s


@dataclass(frozen=True)
class Term:
    coeff: object
    shift: int
    factors: tuple = ()  # sorted ((factor, exponent), ...), exponents nonzero

    @staticmethod
    def make(coeff, shift, powers: dict) -> "Term":
        items = sorted(((f, e) for f, e in powers.items() if e), key=lambda fe: _factor_key(fe[0]))
        return Term(coeff, shift, tuple(items))

    def powers(self) -> dict:
        return dict(self.factors)

    def __mul__(self, other: "Term") -> "Term":
        p = self.powers()
        for f, e in other.factors:
            p[f] = p.get(f, 0) + e
        return Term.make(self.coeff * other.coeff, self.shift + other.shift, p)

    def __str__(self) -> str:
        parts = [str(self.coeff)]
        if self.shift:
            parts.append(f"q^{self.shift}")
        for f, e in self.factors:
            parts.append(str(f) if e == 1 else f"{f}^{e}")
        return "*".join(parts)


class Expr:
    """A sum of terms; supports ``+ - *``, scalars, and division by unit monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        self.terms = tuple(terms)

    @classmethod
    def zero(cls) -> "Expr":
        return cls(())

    @classmethod
    def const(cls, c=1) -> "Expr":
        return cls((Term(c, 0),)) if c != 0 else cls(())

    @classmethod
    def factor(cls, f, power: int = 1) -> "Expr":
        return cls((Term.make(1, 0, {f: power}),))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = _lift(other)
        return Expr(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return Expr(Term(-t.coeff, t.shift, t.factors) for t in self.terms)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        return Expr(a * b for a in self.terms for b in other.terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other.is_zero():
            raise ZeroBracket("division by a vanishing product")
        if len(other.terms) != 1:
            raise ValueError("can only divide by a single monomial in unit factors")
        (t,) = other.terms
        if any(not isinstance(f, UNIT_KINDS) for f, _ in t.factors):
            raise ValueError("can only divide by eta and bracket factors")
        if t.coeff not in (1, -1):
            raise ValueError("divisor coefficient must be +-1")
        inv = Term.make(t.coeff, -t.shift, {f: -e for f, e in t.factors})
        return Expr(a * inv for a in self.terms)

    def __rtruediv__(self, other):
        return _lift(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return Expr.const(1) / (self ** (-n))
        out = Expr.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __str__(self) -> str:
        return " + ".join(map(str, self.terms)) or "0"


def _lift(x) -> Expr:
    if isinstance(x, Expr):
        return x
    return Expr.const(x)


# -- constructors used by the registry --------------------------------------


def Q(k: int) -> Expr:
    return Expr((Term(1, k),))


def E(c: int) -> Expr:
    if c < 1:
        raise ValueError("eta base must be positive")
    return Expr.factor(Eta(c))


def B(a: int, c: int) -> Expr:
    """``<q^a>_{q^c}``, normalized; the zero expression when ``a = 0 (mod c)``."""
    try:
        sign, shift, r = normalize_bracket(a, c)
    except ZeroBracket:
        return Expr.zero()
    return Expr((Term.make(sign, shift, {Bracket(r, c): 1}),))


def S(a: int, b: int, c: int) -> Expr:
    return Expr.factor(SigmaSpec(a, b, c))


def U(ell: int, b: int) -> Expr:
    return Expr.factor(UellSpec(ell, b))


def C(name: str, fn, lo: int = 0) -> Expr:
    return Expr.factor(Custom(name, fn, lo))


def prod(items) -> Expr:
    out = Expr.const(1)
    for x in items:
        out = out * x
    return out


# -- evaluation -------------------------------------------------------------


def clear_denominators(terms) -> tuple[list[Term], dict]:
    """Multiply every term by the least common denominator of its unit factors."""
    lcd: dict = {}
    for t in terms:
        for f, e in t.factors:
            if e < 0:
                if not isinstance(f, UNIT_KINDS):
                    raise ValueError(f"{f} may not appear in a denominator")
                lcd[f] = max(lcd.get(f, 0), -e)
    if not lcd:
        return list(terms), lcd
    mult = Term.make(1, 0, lcd)
    return [t * mult for t in terms], lcd


def term_series(t: Term, ring, order: int) -> LaurentSeries:
    """A term with nonnegative exponents, through ``q^order``."""
    series_factors = []
    unit_steps = []
    for f, e in t.factors:
        if e < 0:
            raise ValueError("clear denominators before evaluating")
        if isinstance(f, UNIT_KINDS):
            unit_steps.append((f, e))
        else:
            series_factors.extend([f] * e)
    vals = [f.valuation() for f in series_factors]
    base = order - t.shift - sum(vals)
    run = LaurentSeries.one(ring, base)
    for f, v in zip(series_factors, vals):
        run = run * _factor_series(f, ring, base + v)
    span = run.order - run.lo
    for f, e in unit_steps:
        steps = f.steps(span)
        for _ in range(e):
            for m in steps:
                run = run.times_one_minus(1, m)
    coeff = t.coeff if ring.contains(t.coeff) else ring.coerce(t.coeff)
    return run.scale(coeff).shift(t.shift)


def evaluate(expr: Expr, ring, order: int) -> LaurentSeries:
    """Sum of the (already cleared) terms through ``q^order``."""
    total = LaurentSeries.zero(ring, order)
    for t in expr.terms:
        total = total + term_series(t, ring, order)
    return total


def difference_series(lhs: Expr, rhs: Expr, ring, order: int) -> LaurentSeries:
    """``D * (lhs - rhs)`` through ``q^order``, where D = 1 + O(q) clears all denominators."""
    terms, _ = clear_denominators((lhs - rhs).terms)
    return evaluate(Expr(terms), ring, order)


__all__ = [
    "B",
    "Bracket",
    "C",
    "Custom",
    "E",
    "Eta",
    "Expr",
    "Q",
    "S",
    "Term",
    "U",
    "clear_denominators",
    "difference_series",
    "evaluate",
    "prod",
    "term_series",
]
