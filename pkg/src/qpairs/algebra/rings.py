"""Exact coefficient rings.

Three scalar domains are used by the series code:

* ``ZZ``    -- Python ints (arbitrary precision).
* ``ZZ_z``  -- Laurent polynomials in a crank variable ``z`` (:class:`ZPoly`).
* ``CyclotomicRing(t)`` -- the cyclotomic integers Z[zeta_t] for a prime ``t``
  (:class:`CyclotomicInt`).

Elements are plain values with arithmetic operators; a ring object carries the
things an element cannot know on its own (zero, one, coercion from ints and
unit inversion).
"""

from __future__ import annotations

from functools import lru_cache


class RingError(ValueError):
    pass


class NotAUnitError(RingError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Laurent polynomials in z
# ---------------------------------------------------------------------------


class ZPoly:
    """Laurent polynomial in ``z`` with integer coefficients.

    Stored densely as ``coeffs[i]`` = coefficient of ``z**(lo + i)`` with no
    zero entries at either end, so equal polynomials have equal storage.
    """

    __slots__ = ("lo", "coeffs")

    def __init__(self, coeffs=(), lo: int = 0):
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        end = len(coeffs)
        while end > start and not coeffs[end - 1]:
            end -= 1
        if start == end:
            self.lo = 0
            self.coeffs = ()
        else:
            self.lo = lo + start
            self.coeffs = tuple(coeffs[start:end])

    @classmethod
    def monomial(cls, c: int, k: int) -> "ZPoly":
        return cls((c,), k)

    @classmethod
    def from_dict(cls, d: dict) -> "ZPoly":
        d = {k: v for k, v in d.items() if v}
        if not d:
            return cls()
        lo, hi = min(d), max(d)
        return cls([d.get(k, 0) for k in range(lo, hi + 1)], lo)

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def items(self):
        """Yield ``(exponent, coefficient)`` for the nonzero terms."""
        lo = self.lo
        for i, c in enumerate(self.coeffs):
            if c:
                yield lo + i, c

    def to_dict(self) -> dict:
        return dict(self.items())

    def __getitem__(self, k: int) -> int:
        i = k - self.lo
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ZPoly.monomial(other, 0)
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if not self.coeffs:
            return hash(0)
        if self.lo == 0 and len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash((self.lo, self.coeffs))

    def __neg__(self) -> "ZPoly":
        return ZPoly([-c for c in self.coeffs], self.lo)

    def __add__(self, other) -> "ZPoly":
        if isinstance(other, int):
            other = ZPoly.monomial(other, 0)
        elif not isinstance(other, ZPoly):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for src in (self, other):
            off = src.lo - lo
            for i, c in enumerate(src.coeffs):
                out[off + i] += c
        return ZPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other) -> "ZPoly":
        if isinstance(other, int):
            other = ZPoly.monomial(other, 0)
        elif not isinstance(other, ZPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ZPoly":
        return (-self) + other

    def __mul__(self, other) -> "ZPoly":
        if isinstance(other, int):
            if other == 0:
                return ZPoly()
            return ZPoly([c * other for c in self.coeffs], self.lo)
        if not isinstance(other, ZPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZPoly()
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, y in enumerate(b):
            if y:
                out[j:j + len(a)] = [o + x * y for o, x in zip(out[j:j + len(a)], a)]
        return ZPoly(out, self.lo + other.lo)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ZPoly":
        if n < 0:
            return ZZ_z.unit_inverse(self) ** (-n)
        result = ZPoly.monomial(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def at_one(self) -> int:
        return sum(self.coeffs)

    def substitute_inverse(self) -> "ZPoly":
        """Return ``p(1/z)``."""
        return ZPoly(self.coeffs[::-1], -self.hi) if self.coeffs else self

    def evaluate(self, t: int) -> "CyclotomicInt":
        """Evaluate at a primitive ``t``-th root of unity, reduced mod Phi_t."""
        v = [0] * t
        for k, c in self.items():
            v[k % t] += c
        return CyclotomicInt.from_powers(t, v)

    def __repr__(self) -> str:
        return f"ZPoly({self.to_dict()!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.items():
            if k == 0:
                mono = str(c)
            else:
                zk = "z" if k == 1 else f"z^{k}"
                mono = zk if c == 1 else "-" + zk if c == -1 else f"{c}*{zk}"
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Cyclotomic integers
# ---------------------------------------------------------------------------


class CyclotomicInt:
    """Element ``a_0 + a_1 zeta + ... + a_{t-2} zeta^{t-2}`` of Z[zeta_t], t prime."""

    __slots__ = ("t", "coeffs")

    def __init__(self, t: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != t - 1:
            raise RingError(f"Z[zeta_{t}] elements need {t - 1} coefficients")
        self.t = t
        self.coeffs = coeffs

    @classmethod
    def from_powers(cls, t: int, v) -> "CyclotomicInt":
        """Reduce ``sum v[k] zeta^k`` (k < t) using zeta^{t-1} = -(1 + ... + zeta^{t-2})."""
        top = v[t - 1]
        if top:
            return cls(t, [v[k] - top for k in range(t - 1)])
        return cls(t, v[: t - 1])

    @classmethod
    def zeta(cls, t: int, k: int = 1) -> "CyclotomicInt":
        v = [0] * t
        v[k % t] = 1
        return cls.from_powers(t, v)

    @classmethod
    def integer(cls, t: int, n: int) -> "CyclotomicInt":
        return cls(t, (n,) + (0,) * (t - 2))

    def powers(self) -> list:
        return list(self.coeffs) + [0]

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _lift(self, other):
        if isinstance(other, CyclotomicInt):
            if other.t != self.t:
                raise RingError(f"cannot mix Z[zeta_{self.t}] and Z[zeta_{other.t}]")
            return other
        if isinstance(other, int):
            return CyclotomicInt.integer(self.t, other)
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.t == other.t and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.t, self.coeffs))

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.t, [-c for c in self.coeffs])

    def __add__(self, other) -> "CyclotomicInt":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return CyclotomicInt(self.t, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other) -> "CyclotomicInt":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return CyclotomicInt(self.t, [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other) -> "CyclotomicInt":
        return (-self) + other

    def __mul__(self, other) -> "CyclotomicInt":
        if isinstance(other, int):
            return CyclotomicInt(self.t, [c * other for c in self.coeffs])
        other = self._lift(other)
        if other is None:
            return NotImplemented
        t = self.t
        v = [0] * t
        b = other.coeffs
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(b):
                    if y:
                        v[(i + j) % t] += x * y
        return CyclotomicInt.from_powers(t, v)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CyclotomicInt":
        if n < 0:
            return CyclotomicRing(self.t).unit_inverse(self) ** (-n)
        result = CyclotomicInt.integer(self.t, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"CyclotomicInt({self.t}, {self.coeffs!r})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            zk = f"zeta{self.t}" if k == 1 else f"zeta{self.t}^{k}"
            terms.append(zk if c == 1 else "-" + zk if c == -1 else f"{c}*{zk}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


# ---------------------------------------------------------------------------
# Ring descriptors
# ---------------------------------------------------------------------------


class IntegerRing:
    name = "ZZ"
    zero = 0
    one = 1

    def coerce(self, n):
        if not isinstance(n, int):
            raise RingError(f"{n!r} is not an integer")
        return n

    def contains(self, x) -> bool:
        return isinstance(x, int)

    def is_unit(self, x) -> bool:
        return x in (1, -1)

    def unit_inverse(self, x):
        if x not in (1, -1):
            raise NotAUnitError(f"{x} is not a unit of ZZ")
        return x

    def __repr__(self) -> str:
        return "ZZ"


class CrankPolyRing:
    name = "ZZ[z,1/z]"

    def __init__(self):
        self.zero = ZPoly()
        self.one = ZPoly.monomial(1, 0)
        self.z = ZPoly.monomial(1, 1)
        self.zinv = ZPoly.monomial(1, -1)

    def coerce(self, n):
        if isinstance(n, ZPoly):
            return n
        if isinstance(n, int):
            return ZPoly.monomial(n, 0)
        raise RingError(f"cannot coerce {n!r} into {self.name}")

    def contains(self, x) -> bool:
        return isinstance(x, ZPoly)

    def is_unit(self, x) -> bool:
        return len(x.coeffs) == 1 and x.coeffs[0] in (1, -1)

    def unit_inverse(self, x):
        if not self.is_unit(x):
            raise NotAUnitError(f"{x} is not a unit of {self.name}")
        return ZPoly.monomial(x.coeffs[0], -x.lo)

    def __repr__(self) -> str:
        return "ZZ_z"


class CyclotomicRing:
    """Z[zeta_t] for prime ``t``; instances are cached per ``t``."""

    _instances: dict = {}

    def __new__(cls, t: int):
        if t in cls._instances:
            return cls._instances[t]
        if not _is_prime(t):
            raise RingError(f"cyclotomic order must be prime, got {t}")
        self = super().__new__(cls)
        self.t = t
        self.name = f"ZZ[zeta_{t}]"
        self.zero = CyclotomicInt.integer(t, 0)
        self.one = CyclotomicInt.integer(t, 1)
        cls._instances[t] = self
        return self

    def __getnewargs__(self):
        return (self.t,)

    def zeta(self, k: int = 1) -> CyclotomicInt:
        return CyclotomicInt.zeta(self.t, k)

    def coerce(self, n):
        if isinstance(n, CyclotomicInt) and n.t == self.t:
            return n
        if isinstance(n, int):
            return CyclotomicInt.integer(self.t, n)
        raise RingError(f"cannot coerce {n!r} into {self.name}")

    def contains(self, x) -> bool:
        return isinstance(x, CyclotomicInt) and x.t == self.t

    @lru_cache(maxsize=None)
    def _units(self) -> dict:
        units = {}
        for k in range(self.t):
            u = self.zeta(k)
            units[u] = self.zeta(-k)
            units[-u] = -self.zeta(-k)
        return units

    def is_unit(self, x) -> bool:
        return x in self._units()

    def unit_inverse(self, x):
        try:
            return self._units()[x]
        except KeyError:
            raise NotAUnitError(f"{x} is not of the form +-zeta^k in {self.name}") from None

    def __repr__(self) -> str:
        return f"CyclotomicRing({self.t})"


ZZ = IntegerRing()
ZZ_z = CrankPolyRing()


def ring_of(x):
    """The ring descriptor an element belongs to."""
    if isinstance(x, bool):
        raise RingError("booleans are not ring elements")
    if isinstance(x, int):
        return ZZ
    if isinstance(x, ZPoly):
        return ZZ_z
    if isinstance(x, CyclotomicInt):
        return CyclotomicRing(x.t)
    raise RingError(f"{x!r} is not an element of a known ring")
