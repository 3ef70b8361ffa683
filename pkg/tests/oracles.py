"""Slow, independent reference computations used by the tests.

Nothing here imports the series engine.  Series are plain ``{exponent: int}``
dicts and products are expanded by schoolbook multiplication.
"""

from __future__ import annotations

# the fifteen pairs listed for sT(5), as (pi1, pi2) with parts in increasing order
PRINTED_ST5 = [
    ((5,), ()),
    ((1, 4), ()),
    ((2, 3), ()),
    ((1, 1, 3), ()),
    ((1, 2, 2), ()),
    ((1, 1, 1, 2), ()),
    ((1, 1, 1, 1, 1), ()),
    ((1, 3), (1,)),
    ((1, 1, 2), (1,)),
    ((1, 1, 1, 1), (1,)),
    ((1, 2), (1, 1)),
    ((1, 1, 1), (1, 1)),
    ((2,), (3,)),
    ((1, 1), (1, 1, 1)),
    ((1,), (1, 1, 1, 1)),
]


def poly_mul(a: dict, b: dict, order: int) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            if i + j <= order:
                out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def poly_add(a: dict, b: dict, scale: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def product_one_minus(exps, order: int) -> dict:
    """prod (1 - q^e) for the given positive exponents, through q^order."""
    out = {0: 1}
    for e in exps:
        if e <= order:
            out = poly_mul(out, {0: 1, e: -1}, order)
    return out


def geometric(d: int, order: int) -> dict:
    """1/(1 - q^d) for d >= 1, through q^order."""
    return {k * d: 1 for k in range(order // d + 1)}


def euler(order: int, base: int = 1) -> dict:
    return product_one_minus(range(base, order + 1, base), order)


def bracket_direct(a: int, b: int, order: int) -> dict:
    """(q^a; q^b)(q^{b-a}; q^b) for 0 < a < b, multiplied factor by factor."""
    assert 0 < a < b
    exps = [a + b * k for k in range(order // b + 1)] + [b - a + b * k for k in range(order // b + 1)]
    return product_one_minus(exps, order)


def partitions(n: int, max_part: int | None = None):
    """All partitions of n as non-increasing tuples."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def partition_counts(order: int) -> list[int]:
    return [sum(1 for _ in partitions(n)) for n in range(order + 1)]


def st_pairs_brute(n: int) -> list[tuple]:
    """All (pi1, pi2) of total size n meeting the ST conditions, by filtering every split."""
    out = []
    for k in range(1, n + 1):
        for p1 in partitions(k):
            s1 = p1[-1]
            for p2 in partitions(n - k):
                if p2 and (min(p2) < s1 or max(p2) >= 2 * s1):
                    continue
                out.append((tuple(sorted(p1)), tuple(sorted(p2))))
    return out


def paircrank_brute(p1, p2) -> int:
    if not p2:
        return len(p1) - 1
    s = min(p1)
    return sum(1 for x in p1 if x >= s + len(p2)) - len(p2)


def crank_counts_brute(n: int) -> dict:
    out: dict = {}
    for p1, p2 in st_pairs_brute(n):
        m = paircrank_brute(p1, p2)
        out[m] = out.get(m, 0) + 1
    return out


def sigma_direct(a: int, b: int, c: int, order: int, n_range: int = 40) -> dict:
    """Sigma(q^a, q^b, q^c) by expanding every term over a wide n-range.

    Terms with a + cn < 0 are rewritten as -q^{-d} / (1 - q^{-d}).
    """
    out: dict = {}
    for n in range(-n_range, n_range + 1):
        num = 2 * c * n * (n + 1) + b * n
        d = a + c * n
        assert d != 0
        if d > 0:
            term = {num + e: v for e, v in geometric(d, max(0, order - num)).items()}
        else:
            start = num - d
            if start > order:
                continue
            term = {start + e: -v for e, v in geometric(-d, order - start).items()}
        out = poly_add(out, {e: v for e, v in term.items() if e <= order})
    return out


def theta_sum(a: int, b: int, order: int, n_range: int = 60) -> dict:
    out: dict = {}
    for n in range(-n_range, n_range + 1):
        e = a * n + b * n * (n - 1) // 2
        if e <= order:
            out[e] = out.get(e, 0) + (-1) ** (n % 2)
    return {k: v for k, v in out.items() if v}


def pentagonal(order: int) -> dict:
    out: dict = {}
    for n in range(-order - 1, order + 2):
        e = n * (3 * n - 1) // 2
        if e <= order:
            out[e] = out.get(e, 0) + (-1) ** (n % 2)
    return {k: v for k, v in out.items() if v}


def series_dict(s) -> dict:
    """Nonzero coefficients of a LaurentSeries as a plain dict."""
    return dict(s.items())

