"""Shared fixtures: one representation table and lattice per rank."""

from __future__ import annotations

import pytest

from spintorus import LatticeSpec, PolarizationData, build_generators


@pytest.fixture(scope="session")
def tables():
    return {k: build_generators(k) for k in (1, 2, 3)}


@pytest.fixture(scope="session")
def lattices():
    return {k: LatticeSpec.default(k) for k in (1, 2, 3)}


@pytest.fixture(scope="session")
def polarizations(lattices):
    return {k: PolarizationData.default(lattices[k]) for k in (1, 2, 3)}
