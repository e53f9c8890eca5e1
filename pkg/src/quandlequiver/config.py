"""Default size caps, overridable through environment variables.

Every cap guards an enumeration whose size is known before any work is
done, so exceeding one raises (or degrades) immediately instead of
grinding away at a hopeless loop.
"""

from __future__ import annotations

import os

_DEFAULTS = {
    "QUANDLEQUIVER_ENUM_CAP": 10**6,      # kernel vectors materialized per call
    "QUANDLEQUIVER_ORACLE_CAP": 10**7,    # candidate top states propagated per call
    "QUANDLEQUIVER_ENDO_CAP": 10**6,      # naive m**m bound for brute-force search
    "QUANDLEQUIVER_ISO_BUDGET": 10**7,    # node expansions in isomorphism search
}


def _get(name: str) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return _DEFAULTS[name]
    value = int(raw)
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {raw!r}")
    return value


def enumeration_cap() -> int:
    return _get("QUANDLEQUIVER_ENUM_CAP")


def oracle_cap() -> int:
    return _get("QUANDLEQUIVER_ORACLE_CAP")


def endo_cap() -> int:
    return _get("QUANDLEQUIVER_ENDO_CAP")


def iso_budget() -> int:
    return _get("QUANDLEQUIVER_ISO_BUDGET")
