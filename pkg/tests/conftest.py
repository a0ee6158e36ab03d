"""Shared fixtures: standard fields, Hopf algebras and example (co)actions."""

from __future__ import annotations

import random

import pytest

from hopf_partial import (
    CayleyTable,
    Field,
    QQ,
    build_sweedler4,
    group_algebra,
)
from hopf_partial.catalog import (
    diagonal_algebra,
    global_z2_swap,
    partial_s3_on_k2,
    partial_z2_on_k2,
    partial_z3_on_k2,
    regular_coaction,
    sweedler_on_b,
    sweedler_on_k,
    trivial_coaction,
    zero_coaction,
)


@pytest.fixture(scope="session")
def F():
    return QQ


@pytest.fixture(scope="session")
def F5():
    return Field.prime(5)


@pytest.fixture(scope="session")
def kz2(F):
    return group_algebra(CayleyTable.cyclic(2), F)


@pytest.fixture(scope="session")
def kz3(F):
    return group_algebra(CayleyTable.cyclic(3), F)


@pytest.fixture(scope="session")
def sweedler(F):
    return build_sweedler4(F)


@pytest.fixture(scope="session")
def coaction_suite(F, kz2, kz3):
    """The named coaction examples exercised throughout the suite."""
    a1 = diagonal_algebra(1, F)
    a3 = diagonal_algebra(3, F)
    return {
        "trivial-k2": trivial_coaction(diagonal_algebra(2, F), kz2),
        "trivial-k3": trivial_coaction(a3, kz2),
        "zero": zero_coaction(a1, kz2),
        "sweedler-on-k-0": sweedler_on_k(F, "0"),
        "sweedler-on-k-half": sweedler_on_k(F, "1/2"),
        "sweedler-on-k-1": sweedler_on_k(F, "1"),
        "sweedler-on-B": sweedler_on_b(F),
        "regular-z2": regular_coaction(CayleyTable.cyclic(2), F),
        "regular-z3": regular_coaction(CayleyTable.cyclic(3), F),
    }


@pytest.fixture(scope="session")
def group_action_suite(F):
    return {
        "partial-z2": partial_z2_on_k2(F),
        "global-z2-swap": global_z2_swap(F),
        "partial-z3": partial_z3_on_k2(F),
        "partial-s3": partial_s3_on_k2(F),
    }


@pytest.fixture()
def rng():
    return random.Random(20260810)
