"""Named identity checks, evaluated to a finite order in q."""

from .registry import REGISTRY, clear_caches
from .report import IdentityCheck, IdentityReport
from .runner import DEFAULT_SEED, OrderTooSmall, get_check, list_checks, verify, verify_all

__all__ = [
    "DEFAULT_SEED",
    "IdentityCheck",
    "IdentityReport",
    "OrderTooSmall",
    "REGISTRY",
    "clear_caches",
    "get_check",
    "list_checks",
    "verify",
    "verify_all",
]
