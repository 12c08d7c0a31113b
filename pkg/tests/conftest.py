"""Shared fixtures and independent oracles.

The brute-force routines here deliberately avoid the canonical-form
machinery: automorphisms and isomorphisms are found by filtering vertex
permutations directly against the face sets, so they can certify the fast
implementations.
"""

from __future__ import annotations

import itertools
import random

import pytest

from flatland import (
    Triangulation,
    build_triangulation,
    construct_family,
    parse_name,
    relabel,
)

TETRAHEDRON = (4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])

# Two apexes (3, 4) over the 3-cycle 0-1-2: a 5-vertex sphere with mixed
# degrees (4, 4, 4, 3, 3).
DOUBLE_PYRAMID = (
    5,
    [(0, 1, 3), (1, 2, 3), (0, 2, 3), (0, 1, 4), (1, 2, 4), (0, 2, 4)],
)


def fam(name: str) -> Triangulation:
    return construct_family(parse_name(name)).complex


def apply_perm_faces(perm, faces):
    return frozenset(tuple(sorted((perm[a], perm[b], perm[c]))) for a, b, c in faces)


def brute_force_automorphisms(t: Triangulation) -> set[tuple[int, ...]]:
    """All vertex permutations preserving the face set, by exhaustive filter."""
    target = t.face_set()
    out = set()
    for perm in itertools.permutations(range(t.n)):
        for a, b, c in t.faces:
            if tuple(sorted((perm[a], perm[b], perm[c]))) not in target:
                break
        else:
            out.add(perm)
    return out


def brute_force_isomorphism(a: Triangulation, b: Triangulation):
    """Some face-preserving bijection a -> b, or None, by exhaustive filter."""
    if a.n != b.n or a.f2 != b.f2:
        return None
    target = b.face_set()
    for perm in itertools.permutations(range(a.n)):
        for x, y, z in a.faces:
            if tuple(sorted((perm[x], perm[y], perm[z]))) not in target:
                break
        else:
            return perm
    return None


def shuffled(t: Triangulation, seed: int) -> Triangulation:
    rng = random.Random(seed)
    perm = list(range(t.n))
    rng.shuffle(perm)
    return relabel(t, perm)


@pytest.fixture(scope="session")
def tetrahedron() -> Triangulation:
    return build_triangulation(*TETRAHEDRON)


@pytest.fixture(scope="session")
def double_pyramid() -> Triangulation:
    return build_triangulation(*DOUBLE_PYRAMID)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    try:
        from tests import test_acceptance
    except ImportError:
        import test_acceptance  # tests run with rootdir on sys.path
    lines = getattr(test_acceptance, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
