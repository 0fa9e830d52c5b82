"""Fuzzy graph data model: construction, complement, subgraphs, degrees,
and the complete/strong/regular/constant classification.

A fuzzy graph carries a vertex membership map sigma (values in (0, 1]) and
a symmetric edge membership map mu with 0 < mu(u, v) <= sigma(u) ^ sigma(v),
where ^ is minimum. Edges are stored under sorted endpoint pairs, so
symmetry is structural. Absent pairs mean mu = 0; the edge set is the
support of mu.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import (
    BadParameterError,
    DuplicateEdgeError,
    DuplicateVertexError,
    EmptyGraphError,
    EmptySelectionError,
    MembershipBoundError,
    ReservedCharacterError,
    SelfLoopError,
    UnknownEndpointError,
    UnknownVertexError,
    ZeroSigmaVertexError,
)
from .values import ZERO, as_value

# Reserved for naming product vertices "left~right" in the ops module.
PRODUCT_SEPARATOR = "~"


def pair_key(u: str, v: str) -> tuple[str, str]:
    """Unordered edge key: the two endpoints in sorted order."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class FuzzyGraph:
    """An immutable fuzzy graph.

    sigma maps vertex id to its membership; mu maps sorted endpoint pairs
    to edge memberships. Instances must be created through build() or the
    other module-level constructors, which enforce all invariants. Treat
    the dicts as read-only; every operation returns a new graph.
    """

    sigma: dict[str, Fraction]
    mu: dict[tuple[str, str], Fraction]

    def vertex_ids(self) -> list[str]:
        return sorted(self.sigma)

    def edge_keys(self) -> list[tuple[str, str]]:
        return sorted(self.mu)

    def mu_at(self, u: str, v: str) -> Fraction:
        """Edge membership of the pair, zero when it is not an edge."""
        return self.mu.get(pair_key(u, v), ZERO)

    def sigma_min(self, u: str, v: str) -> Fraction:
        return min(self.sigma[u], self.sigma[v])

    def sigma_sum(self) -> Fraction:
        return sum(self.sigma.values(), ZERO)

    def mu_sum(self) -> Fraction:
        return sum(self.mu.values(), ZERO)


@dataclass(frozen=True)
class ClassificationReport:
    """Facts established by classify().

    regular_degree / totally_regular_degree / constant_sigma / constant_mu
    are None when the graph does not have the property; constant_mu is also
    None for an edgeless graph (no support to be constant on).
    """

    is_complete: bool
    is_strong: bool
    regular_degree: Fraction | None
    totally_regular_degree: Fraction | None
    constant_sigma: Fraction | None
    constant_mu: Fraction | None


def _check_vertex_id(vid) -> str:
    if not isinstance(vid, str) or not vid:
        raise BadParameterError(f"vertex id must be a non-empty string, got {vid!r}")
    if PRODUCT_SEPARATOR in vid:
        raise ReservedCharacterError(
            f"vertex id {vid!r} contains {PRODUCT_SEPARATOR!r}, reserved for product vertices"
        )
    return vid


def assemble(sigma: dict[str, Fraction], mu: dict[tuple[str, str], Fraction]) -> FuzzyGraph:
    """Validate already-normalized maps and wrap them in a FuzzyGraph.

    Internal constructor shared by build(), complement(), and the binary
    operations. Expects Fraction values and sorted-pair edge keys; does not
    apply the reserved-character rule (product vertices contain '~').
    Zero-valued mu entries are dropped.
    """
    if not sigma:
        raise EmptyGraphError("a fuzzy graph needs at least one vertex")
    for vid, value in sigma.items():
        if value == ZERO:
            raise ZeroSigmaVertexError(f"vertex {vid!r} has membership 0")
    clean_mu: dict[tuple[str, str], Fraction] = {}
    for (u, v), value in mu.items():
        if u == v:
            raise SelfLoopError(f"edge ({u!r}, {v!r}) is a loop")
        if u not in sigma or v not in sigma:
            missing = u if u not in sigma else v
            raise UnknownEndpointError(f"edge endpoint {missing!r} is not a vertex")
        if value == ZERO:
            continue
        bound = min(sigma[u], sigma[v])
        if value > bound:
            raise MembershipBoundError(
                f"mu({u!r}, {v!r}) = {value} exceeds sigma minimum {bound}"
            )
        clean_mu[pair_key(u, v)] = value
    return FuzzyGraph(sigma, clean_mu)


def build(vertices: Iterable[tuple], edges: Iterable[tuple] = ()) -> FuzzyGraph:
    """Construct a validated fuzzy graph from (id, sigma) and (u, v, mu) rows.

    Membership values may be Fractions, ints, or exact text ('1/2', '0.35').
    Raises a specific FuzzyGraphError subclass for each way the input can be
    wrong; zero-valued mu entries are checked, then dropped.
    """
    sigma: dict[str, Fraction] = {}
    for vid, raw in vertices:
        _check_vertex_id(vid)
        if vid in sigma:
            raise DuplicateVertexError(f"vertex {vid!r} listed twice")
        value = as_value(raw)
        if value == ZERO:
            raise ZeroSigmaVertexError(f"vertex {vid!r} has membership 0")
        sigma[vid] = value
    if not sigma:
        raise EmptyGraphError("a fuzzy graph needs at least one vertex")

    mu: dict[tuple[str, str], Fraction] = {}
    seen: set[tuple[str, str]] = set()
    for u, v, raw in edges:
        if u not in sigma or v not in sigma:
            missing = u if u not in sigma else v
            raise UnknownEndpointError(f"edge endpoint {missing!r} is not a vertex")
        if u == v:
            raise SelfLoopError(f"edge ({u!r}, {v!r}) is a loop")
        key = pair_key(u, v)
        if key in seen:
            raise DuplicateEdgeError(f"edge {key!r} listed twice")
        seen.add(key)
        value = as_value(raw)
        if value == ZERO:
            continue
        bound = min(sigma[u], sigma[v])
        if value > bound:
            raise MembershipBoundError(
                f"mu({u!r}, {v!r}) = {value} exceeds sigma minimum {bound}"
            )
        mu[key] = value
    return FuzzyGraph(sigma, mu)


def complement(g: FuzzyGraph) -> FuzzyGraph:
    """Complement: same sigma; mu'(u, v) = sigma(u) ^ sigma(v) - mu(u, v).

    Pairs whose complement membership is zero are stored as absent, so the
    complement of a complete graph is edgeless. Applying complement twice
    returns a graph equal to the original.
    """
    ids = sorted(g.sigma)
    mu: dict[tuple[str, str], Fraction] = {}
    for u, v in combinations(ids, 2):
        rest = g.sigma_min(u, v) - g.mu_at(u, v)
        if rest > ZERO:
            mu[(u, v)] = rest
    return FuzzyGraph(dict(g.sigma), mu)


def induced_subgraph(g: FuzzyGraph, members: Iterable[str]) -> FuzzyGraph:
    """Restrict g to a non-empty vertex subset, keeping all memberships.

    The result has exactly the edges of g with both endpoints selected,
    with unchanged mu values.
    """
    selected = set(members)
    if not selected:
        raise EmptySelectionError("vertex selection is empty")
    for vid in selected:
        if vid not in g.sigma:
            raise UnknownVertexError(f"vertex {vid!r} is not in the graph")
    sigma = {vid: g.sigma[vid] for vid in selected}
    mu = {key: val for key, val in g.mu.items() if key[0] in selected and key[1] in selected}
    return FuzzyGraph(sigma, mu)


def vertex_degrees(g: FuzzyGraph) -> dict[str, tuple[Fraction, Fraction]]:
    """Per-vertex (degree, total degree).

    degree(u) is the sum of incident edge memberships; total degree adds
    sigma(u). Summing degrees over all vertices gives exactly twice the sum
    of edge memberships.
    """
    degree = {vid: ZERO for vid in g.sigma}
    for (u, v), value in g.mu.items():
        degree[u] += value
        degree[v] += value
    return {vid: (degree[vid], degree[vid] + g.sigma[vid]) for vid in g.sigma}


def classify(g: FuzzyGraph) -> ClassificationReport:
    """Report completeness, strength, regularity, and constant functions.

    Complete: mu(u, v) = sigma(u) ^ sigma(v) for every pair of distinct
    vertices. Strong: the same equation on the edge support only, so every
    complete graph is strong. Regular / totally regular report the shared
    degree when all (total) degrees agree. constant_sigma / constant_mu
    report the shared value when sigma (mu on its support) is constant.
    """
    n = len(g.sigma)
    is_strong = all(value == g.sigma_min(u, v) for (u, v), value in g.mu.items())
    is_complete = is_strong and len(g.mu) == n * (n - 1) // 2

    degrees = vertex_degrees(g)
    degree_values = {d for d, _ in degrees.values()}
    total_values = {t for _, t in degrees.values()}
    regular = degree_values.pop() if len(degree_values) == 1 else None
    totally = total_values.pop() if len(total_values) == 1 else None

    sigma_values = set(g.sigma.values())
    constant_sigma = sigma_values.pop() if len(sigma_values) == 1 else None
    mu_values = set(g.mu.values())
    constant_mu = mu_values.pop() if len(mu_values) == 1 else None

    return ClassificationReport(
        is_complete=is_complete,
        is_strong=is_strong,
        regular_degree=regular,
        totally_regular_degree=totally,
        constant_sigma=constant_sigma,
        constant_mu=constant_mu,
    )
