"""Density and balancedness.

The density of a fuzzy graph is D(G) = 2 * (sum of edge memberships) /
(sum of vertex memberships). A graph is balanced when no non-empty induced
subgraph has strictly larger density (the membership-preserving subgraph
with the most edges on a vertex subset is the induced one, so quantifying
over induced subgraphs suffices).

Two independent deciders are provided. Enumeration scans every non-empty
vertex subset with integer-scaled arithmetic and a deterministic tie rule.
The flow method solves the fractional program by Dinkelbach iteration: for
a density guess lambda it asks, via a minimum s-t cut on the classic
densest-subgraph network, whether some subset W has
2*mu(E[W]) - lambda*sigma(W) > 0, and moves lambda up to that subset's
density until no improving subset exists. All capacities are scaled to
exact integers, so both methods return exact rationals.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import BadParameterError, TooLargeError
from .graph import FuzzyGraph, induced_subgraph

# Non-empty subsets double per vertex; past this the flow method is the way.
ENUMERATION_GUARD = 24

METHODS = ("enumeration", "flow")


@dataclass(frozen=True)
class Density:
    """An exact density value together with its two sums.

    value = numerator_sum / denominator_sum, where numerator_sum is twice
    the edge membership total and denominator_sum is the vertex membership
    total (always positive for a valid graph).
    """

    value: Fraction
    numerator_sum: Fraction
    denominator_sum: Fraction


@dataclass(frozen=True)
class BalanceVerdict:
    """Outcome of a balance check.

    witness is a strictly denser vertex subset, present exactly when the
    graph is not balanced. method records which decider produced it.
    """

    balanced: bool
    graph_density: Density
    max_subgraph_density: Density
    witness: tuple[str, ...] | None
    method: str


def star_density(g: FuzzyGraph) -> Density:
    numerator = 2 * g.mu_sum()
    denominator = g.sigma_sum()
    return Density(Fraction(numerator, denominator), numerator, denominator)


def _scaled_ints(g: FuzzyGraph, ids: list[str]):
    """Common-denominator integer views: sigma*L per vertex, 2*mu*L per edge."""
    denominators = [v.denominator for v in g.sigma.values()]
    denominators += [v.denominator for v in g.mu.values()]
    scale = lcm(*denominators) if denominators else 1
    index = {vid: i for i, vid in enumerate(ids)}
    sigma_int = [int(g.sigma[vid] * scale) for vid in ids]
    edges_int = [
        (index[u], index[v], int(2 * value * scale)) for (u, v), value in g.mu.items()
    ]
    return sigma_int, edges_int


def _max_density_enumeration(g: FuzzyGraph) -> tuple[tuple[str, ...], Density]:
    ids = sorted(g.sigma)
    n = len(ids)
    if n > ENUMERATION_GUARD:
        raise TooLargeError(
            f"enumeration over {n} vertices exceeds the guard of {ENUMERATION_GUARD}; "
            "use the flow method"
        )
    sigma_int, edges_int = _scaled_ints(g, ids)
    # rows[i][j] = scaled 2*mu for j < i, for incremental subset sums
    rows: list[dict[int, int]] = [dict() for _ in range(n)]
    for i, j, w in edges_int:
        hi, lo = (i, j) if i > j else (j, i)
        rows[hi][lo] = w

    best_num = 0
    best_den = 0  # zero marks "nothing seen yet"
    best_size = n + 1
    best_ids: tuple[str, ...] = ()
    members: list[int] = []

    def consider(esum: int, ssum: int) -> None:
        nonlocal best_num, best_den, best_size, best_ids
        if best_den != 0:
            diff = esum * best_den - best_num * ssum
            if diff < 0:
                return
            if diff == 0:
                # same density: prefer the smallest subset, then lexicographic ids
                if len(members) > best_size:
                    return
                candidate = tuple(ids[i] for i in members)
                if len(members) == best_size and candidate >= best_ids:
                    return
                best_size, best_ids = len(members), candidate
                return
        best_num, best_den = esum, ssum
        best_size = len(members)
        best_ids = tuple(ids[i] for i in members)

    def walk(i: int, esum: int, ssum: int) -> None:
        if i == n:
            if members:
                consider(esum, ssum)
            return
        walk(i + 1, esum, ssum)
        row = rows[i]
        gain = sum(row[j] for j in members if j in row) if row else 0
        members.append(i)
        walk(i + 1, esum + gain, ssum + sigma_int[i])
        members.pop()

    walk(0, 0, 0)
    return best_ids, star_density(induced_subgraph(g, best_ids))


class _MaxFlow:
    """Dinic blocking-flow maximum flow over integer capacities."""

    def __init__(self, node_count: int):
        self.adj: list[list[list[int]]] = [[] for _ in range(node_count)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.adj[u].append([v, cap, len(self.adj[v])])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1])

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * len(self.adj)
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for to, cap, _ in self.adj[u]:
                if cap > 0 and level[to] < 0:
                    level[to] = level[u] + 1
                    queue.append(to)
        return level if level[t] >= 0 else None

    def _push(self, u: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return limit
        while it[u] < len(self.adj[u]):
            edge = self.adj[u][it[u]]
            to, cap, rev = edge
            if cap > 0 and level[to] == level[u] + 1:
                pushed = self._push(to, t, min(limit, cap), level, it)
                if pushed > 0:
                    edge[1] -= pushed
                    self.adj[to][rev][1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        # any augmenting path is bottlenecked by some source arc
        limit = sum(edge[1] for edge in self.adj[s]) + 1
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            it = [0] * len(self.adj)
            while True:
                pushed = self._push(s, t, limit, level, it)
                if pushed == 0:
                    break
                flow += pushed

    def source_side(self, s: int) -> set[int]:
        """Nodes reachable from s in the residual graph (min-cut source side)."""
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for to, cap, _ in self.adj[u]:
                if cap > 0 and to not in seen:
                    seen.add(to)
                    queue.append(to)
        return seen


def _improving_subset(
    sigma_int: list[int], edges_int: list[tuple[int, int, int]], lam: Fraction
) -> list[int] | None:
    """Vertex indices W with 2*mu(E[W]) - lam*sigma(W) > 0, or None.

    Min cut on: source -> edge node (capacity 2*mu*L*Q), edge node -> both
    endpoints (infinite), vertex -> sink (capacity P*sigma*L), for
    lam = P/Q. The cut equals total - max_W f(W), so a strictly positive
    excess pins an improving W on the source side.
    """
    n, m = len(sigma_int), len(edges_int)
    p, q = lam.numerator, lam.denominator
    total = sum(w for _, _, w in edges_int) * q
    infinite = total + 1
    source, sink = 0, 1
    net = _MaxFlow(2 + n + m)
    for k, (i, j, w) in enumerate(edges_int):
        node = 2 + n + k
        net.add_edge(source, node, w * q)
        net.add_edge(node, 2 + i, infinite)
        net.add_edge(node, 2 + j, infinite)
    for i, s in enumerate(sigma_int):
        net.add_edge(2 + i, sink, p * s)
    flow = net.max_flow(source, sink)
    if flow >= total:
        return None
    side = net.source_side(source)
    return [i for i in range(n) if (2 + i) in side]


def _max_density_flow(g: FuzzyGraph) -> tuple[tuple[str, ...], Density]:
    ids = sorted(g.sigma)
    if not g.mu:
        return tuple(ids), star_density(g)
    sigma_int, edges_int = _scaled_ints(g, ids)
    lam = Fraction(sum(w for _, _, w in edges_int), sum(sigma_int))
    best = list(range(len(ids)))
    while True:
        improved = _improving_subset(sigma_int, edges_int, lam)
        if improved is None:
            break
        chosen = set(improved)
        esum = sum(w for i, j, w in edges_int if i in chosen and j in chosen)
        ssum = sum(sigma_int[i] for i in improved)
        lam = Fraction(esum, ssum)
        best = improved
    members = tuple(ids[i] for i in best)
    return members, star_density(induced_subgraph(g, members))


def max_density_subgraph(
    g: FuzzyGraph, method: str = "enumeration"
) -> tuple[tuple[str, ...], Density]:
    """A non-empty vertex subset of maximum induced density, with that density.

    Enumeration is deterministic: among all maximizers it returns the
    smallest, lexicographically least subset. The flow method returns some
    exact maximizer without a determinism promise.
    """
    if method == "enumeration":
        return _max_density_enumeration(g)
    if method == "flow":
        return _max_density_flow(g)
    raise BadParameterError(f"unknown method {method!r}; expected one of {METHODS}")


def balance_check(g: FuzzyGraph, method: str = "enumeration") -> BalanceVerdict:
    """Decide balancedness: no induced subgraph may be strictly denser.

    A subgraph whose density ties the graph's does not break balance.
    """
    graph_density = star_density(g)
    witness, best = max_density_subgraph(g, method)
    balanced = best.value <= graph_density.value
    return BalanceVerdict(
        balanced=balanced,
        graph_density=graph_density,
        max_subgraph_density=best,
        witness=None if balanced else witness,
        method=method,
    )
