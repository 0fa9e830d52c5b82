"""Generators for the named graph families used throughout the test suites.

All families default to a constant vertex membership c with strong edges
(edge membership equal to c, which is sigma ^ sigma under constant sigma).
An optional sigma_list replaces the constant vertex memberships while the
edge values stay at c; that combination deliberately breaks strength and
is the tool for hunting unbalanced near-miss graphs.
"""

from fractions import Fraction
from typing import Sequence

from .errors import BadParameterError
from .graph import FuzzyGraph, build
from .values import as_value

FAMILIES = (
    "complete_kn",
    "cycle_strong",
    "petersen_strong",
    "complete_bipartite_strong",
    "path_strong",
    "edgeless",
)

# Outer 5-cycle o1..o5, inner pentagram i1..i5, spokes ok-ik.
_PETERSEN_EDGES = (
    ("o1", "o2"), ("o2", "o3"), ("o3", "o4"), ("o4", "o5"), ("o5", "o1"),
    ("o1", "i1"), ("o2", "i2"), ("o3", "i3"), ("o4", "i4"), ("o5", "i5"),
    ("i1", "i3"), ("i3", "i5"), ("i5", "i2"), ("i2", "i4"), ("i4", "i1"),
)


def _sigma_rows(names: Sequence[str], c: Fraction, sigma_list) -> list[tuple[str, Fraction]]:
    if sigma_list is None:
        return [(name, c) for name in names]
    if len(sigma_list) != len(names):
        raise BadParameterError(
            f"sigma_list has {len(sigma_list)} entries for {len(names)} vertices"
        )
    return [(name, as_value(raw)) for name, raw in zip(names, sigma_list)]


def generate(family: str, n: int | None = None, c=Fraction(1), sigma_list=None) -> FuzzyGraph:
    """Build one graph from a named family.

    family is one of FAMILIES; n is the size parameter (ignored for
    petersen_strong); c is the shared membership value. Build-time errors
    (for instance a sigma_list entry below c) propagate from build().
    """
    if family not in FAMILIES:
        raise BadParameterError(f"unknown family {family!r}; expected one of {FAMILIES}")
    c = as_value(c)
    if c == 0:
        raise BadParameterError("family membership c must be positive")

    if family == "petersen_strong":
        names = sorted({u for u, _ in _PETERSEN_EDGES} | {v for _, v in _PETERSEN_EDGES})
        vertices = _sigma_rows(names, c, sigma_list)
        return build(vertices, [(u, v, c) for u, v in _PETERSEN_EDGES])

    if n is None or n < 1:
        raise BadParameterError(f"family {family!r} needs n >= 1, got {n!r}")

    if family == "complete_bipartite_strong":
        left = [f"a{i}" for i in range(1, n + 1)]
        right = [f"b{i}" for i in range(1, n + 1)]
        vertices = _sigma_rows(left + right, c, sigma_list)
        edges = [(u, v, c) for u in left for v in right]
        return build(vertices, edges)

    names = [f"v{i}" for i in range(1, n + 1)]
    vertices = _sigma_rows(names, c, sigma_list)
    if family == "complete_kn":
        edges = [(names[i], names[j], c) for i in range(n) for j in range(i + 1, n)]
    elif family == "cycle_strong":
        if n < 3:
            raise BadParameterError(f"cycle_strong needs n >= 3, got {n}")
        edges = [(names[i], names[(i + 1) % n], c) for i in range(n)]
    elif family == "path_strong":
        edges = [(names[i], names[i + 1], c) for i in range(n - 1)]
    else:  # edgeless
        edges = []
    return build(vertices, edges)
