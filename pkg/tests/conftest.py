"""Pytest configuration and common fixtures for enlattice tests."""

import os
from pathlib import Path

import pytest

from enlattice.config import RunSettings
from enlattice.picard import PicardLattice, make_lattice


@pytest.fixture(autouse=True)
def isolated_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Keep tests away from the developer's own config and ENLATTICE_* env."""
    for key in list(os.environ):
        if key.startswith("ENLATTICE_"):
            monkeypatch.delenv(key, raising=False)
    config_home = tmp_path / "xdg-config"
    config_home.mkdir()
    monkeypatch.setenv("XDG_CONFIG_HOME", str(config_home))
    return config_home


@pytest.fixture
def lattice():
    """Factory for X_n."""

    def _make(n: int) -> PicardLattice:
        return make_lattice(n)

    return _make


@pytest.fixture
def x2() -> PicardLattice:
    return make_lattice(2)


@pytest.fixture
def x4() -> PicardLattice:
    return make_lattice(4)


@pytest.fixture
def x5() -> PicardLattice:
    return make_lattice(5)


@pytest.fixture
def x6() -> PicardLattice:
    return make_lattice(6)


@pytest.fixture
def x7() -> PicardLattice:
    return make_lattice(7)


@pytest.fixture
def x8() -> PicardLattice:
    return make_lattice(8)


@pytest.fixture
def quick_settings() -> RunSettings:
    """Small sample counts so sampled identities stay fast."""
    return RunSettings(samples=300, dgon_nodes=2_000_000, orbit_cap=100_000, seed=7)
