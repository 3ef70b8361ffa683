"""Running registry checks and collecting reports."""

from __future__ import annotations

import random

from .registry import BY_NAME, REGISTRY
from .report import IdentityCheck, IdentityReport

DEFAULT_SEED = 1729


class OrderTooSmall(ValueError):
    pass


def list_checks() -> list[IdentityCheck]:
    return list(REGISTRY)


def get_check(name: str) -> IdentityCheck:
    try:
        return BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}; use --list to see the registry") from None


def verify(name: str, order: int | None = None, inject=None, seed: int | None = None) -> IdentityReport:
    """Check ``name`` through ``q^order``.

    ``inject = (k, c)`` adds ``c q^k`` to the left side of every comparison,
    which is how the fault-injection tests make a true identity fail on purpose.
    """
    check = get_check(name)
    order = check.default_order if order is None else order
    if order < check.min_order:
        raise OrderTooSmall(f"{name} needs order >= {check.min_order}, got {order}")
    if inject is not None and isinstance(inject, int):
        inject = (inject, 1)
    seed = DEFAULT_SEED if seed is None else seed
    parts = check.build(order, random.Random(seed))

    report = IdentityReport(name, order, True, seed=seed if check.randomized else None)
    for part in parts:
        outcomes = []
        for reading in part.readings:
            d = reading.diff(order, inject)
            outcomes.append((reading.label, d.valuation(), d))
        if len(outcomes) > 1:
            said = "; ".join(
                f"{lbl}: {'vanishes' if v is None else f'nonzero at exponent {v}'}" for lbl, v, _ in outcomes
            )
            report.notes.append(f"{part.label}: {said}")
        if any(v is None for _, v, _ in outcomes):
            continue
        if report.passed:
            _, v, d = outcomes[0]
            report.passed = False
            report.first_bad_exponent = v
            report.discrepancy = str(d.coeff(v))
            report.part = part.label
    return report


def verify_all(orders: dict | None = None, seed: int | None = None, names=None) -> list[IdentityReport]:
    orders = orders or {}
    chosen = names or [c.name for c in REGISTRY]
    return [verify(n, orders.get(n), seed=seed) for n in chosen]
