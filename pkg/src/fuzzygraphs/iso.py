"""Isomorphism and self-complementarity of small fuzzy graphs.

An isomorphism is a vertex bijection preserving both membership maps
exactly. The search is plain backtracking, pruned by the exact
(sigma, degree, total degree) signature of each vertex; that is plenty at
the audit scale this package works at, so there is no canonical-form
machinery.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import TooLargeError
from .graph import FuzzyGraph, complement, vertex_degrees

SEARCH_GUARD = 12


@dataclass(frozen=True)
class GraphMorphism:
    """A witnessing bijection from the first graph's vertices to the second's."""

    mapping: dict[str, str]


def is_valid_morphism(g1: FuzzyGraph, g2: FuzzyGraph, mapping: dict[str, str]) -> bool:
    """Check the two preservation equations directly; independent of the search."""
    if sorted(mapping) != sorted(g1.sigma) or sorted(mapping.values()) != sorted(g2.sigma):
        return False
    if any(g1.sigma[v] != g2.sigma[mapping[v]] for v in g1.sigma):
        return False
    ids = sorted(g1.sigma)
    for i, u in enumerate(ids):
        for v in ids[i + 1 :]:
            if g1.mu_at(u, v) != g2.mu_at(mapping[u], mapping[v]):
                return False
    return True


def _signatures(g: FuzzyGraph) -> dict[str, tuple[Fraction, Fraction, Fraction]]:
    degrees = vertex_degrees(g)
    return {v: (g.sigma[v], degrees[v][0], degrees[v][1]) for v in g.sigma}


def find_isomorphism(g1: FuzzyGraph, g2: FuzzyGraph) -> GraphMorphism | None:
    """A membership-preserving bijection between the graphs, or None.

    Guarded to graphs of at most SEARCH_GUARD vertices.
    """
    n1, n2 = len(g1.sigma), len(g2.sigma)
    if max(n1, n2) > SEARCH_GUARD:
        raise TooLargeError(
            f"isomorphism search beyond {SEARCH_GUARD} vertices is not supported"
        )
    if n1 != n2 or len(g1.mu) != len(g2.mu):
        return None

    sig1 = _signatures(g1)
    sig2 = _signatures(g2)
    candidates = {
        v: sorted(w for w in g2.sigma if sig2[w] == sig1[v]) for v in g1.sigma
    }
    if any(not c for c in candidates.values()):
        return None

    # most-constrained vertex first keeps the branching shallow
    order = sorted(g1.sigma, key=lambda v: (len(candidates[v]), v))
    assigned: dict[str, str] = {}
    used: set[str] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in candidates[v]:
            if w in used:
                continue
            if any(g1.mu_at(v, prev) != g2.mu_at(w, assigned[prev]) for prev in assigned):
                continue
            assigned[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del assigned[v]
            used.remove(w)
        return False

    if extend(0):
        return GraphMorphism(dict(assigned))
    return None


def is_self_complementary(g: FuzzyGraph) -> tuple[bool, GraphMorphism | None]:
    """Whether g is isomorphic to its own complement, with the witness."""
    morphism = find_isomorphism(g, complement(g))
    return morphism is not None, morphism
