"""Result and descriptor types for identity checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable


@dataclass
class IdentityReport:
    name: str
    order: int
    passed: bool
    first_bad_exponent: int | None = None
    discrepancy: str | None = None
    seed: int | None = None
    part: str | None = None  # label of the first failing sub-identity
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} (order {self.order})"
        if not self.passed:
            line += f": first bad exponent {self.first_bad_exponent}, difference {self.discrepancy}"
            if self.part:
                line += f" in [{self.part}]"
        return line


@dataclass(frozen=True)
class IdentityCheck:
    """Registry entry.  ``build(order, rng)`` returns the list of parts to compare."""

    name: str
    default_order: int
    description: str
    lhs_route: str
    rhs_route: str
    ring: str
    build: Callable = field(repr=False, compare=False)
    min_order: int = 1
    randomized: bool = False

    def descriptor(self) -> dict:
        return {
            "name": self.name,
            "default_order": self.default_order,
            "min_order": self.min_order,
            "ring": self.ring,
            "randomized": self.randomized,
            "lhs_route": self.lhs_route,
            "rhs_route": self.rhs_route,
            "description": self.description,
        }
