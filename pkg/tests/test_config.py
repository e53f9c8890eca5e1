"""Tests for environment-variable cap overrides."""

import pytest

from quandlequiver.braids import torus_braid
from quandlequiver.colorings import enumerate_colorings_linear, enumerate_colorings_oracle
from quandlequiver.config import endo_cap, enumeration_cap, iso_budget, oracle_cap
from quandlequiver.errors import CapExceededError
from quandlequiver.quandles import DihedralQuandle


def test_defaults():
    assert enumeration_cap() == 10**6
    assert oracle_cap() == 10**7
    assert endo_cap() == 10**6
    assert iso_budget() == 10**7


def test_env_overrides_read_at_call_time(monkeypatch):
    monkeypatch.setenv("QUANDLEQUIVER_ENUM_CAP", "123")
    monkeypatch.setenv("QUANDLEQUIVER_ORACLE_CAP", "456")
    monkeypatch.setenv("QUANDLEQUIVER_ENDO_CAP", "789")
    monkeypatch.setenv("QUANDLEQUIVER_ISO_BUDGET", "99")
    assert enumeration_cap() == 123
    assert oracle_cap() == 456
    assert endo_cap() == 789
    assert iso_budget() == 99


def test_invalid_override_rejected(monkeypatch):
    monkeypatch.setenv("QUANDLEQUIVER_ENUM_CAP", "0")
    with pytest.raises(ValueError):
        enumeration_cap()
    monkeypatch.setenv("QUANDLEQUIVER_ENUM_CAP", "-5")
    with pytest.raises(ValueError):
        enumeration_cap()


def test_env_cap_governs_backends(monkeypatch):
    monkeypatch.setenv("QUANDLEQUIVER_ORACLE_CAP", "100")
    with pytest.raises(CapExceededError):
        enumerate_colorings_oracle(torus_braid(3, 0), DihedralQuandle(5))
    monkeypatch.setenv("QUANDLEQUIVER_ENUM_CAP", "100")
    degraded = enumerate_colorings_linear(torus_braid(3, 0), 5)
    assert degraded.count == 125
    assert degraded.colorings is None
