"""The seven binary operations on fuzzy graphs.

Union and join work on disjoint vertex sets. The five products live on
V1 x V2 with product vertices named "left~right" and vertex membership
sigma1 ^ sigma2. Their edge sets are assembled from four rules:

  (a) u1 = v1 and (u2, v2) an edge of g2,   value sigma1(u1) ^ mu2(u2, v2)
  (b) u2 = v2 and (u1, v1) an edge of g1,   value sigma2(u2) ^ mu1(u1, v1)
  (c) u2 != v2 and (u1, v1) an edge of g1,  value sigma2(u2) ^ sigma2(v2) ^ mu1(u1, v1)
  (d) (u1, v1) and (u2, v2) both edges,     value mu1(u1, v1) ^ mu2(u2, v2)

cartesian = (a)+(b); composition = (a)+(b)+(c); direct = (d);
semidirect = (a)+(d); strong = (a)+(b)+(d). The rules cover disjoint pair
sets, so each operation's edge set is a disjoint union of its rules.
"""

from fractions import Fraction

from .errors import BadParameterError, ReservedCharacterError, VertexCollisionError
from .graph import PRODUCT_SEPARATOR, FuzzyGraph, assemble, pair_key

OP_KINDS = ("union", "join", "cartesian", "composition", "direct", "semidirect", "strong")


def product_vertex(left: str, right: str) -> str:
    """Render the product vertex id for the pair (left, right)."""
    return f"{left}{PRODUCT_SEPARATOR}{right}"


def _check_product_operands(g1: FuzzyGraph, g2: FuzzyGraph) -> None:
    # Product naming is only unambiguous for '~'-free factor ids, which also
    # rules out products of products.
    for g in (g1, g2):
        for vid in g.sigma:
            if PRODUCT_SEPARATOR in vid:
                raise ReservedCharacterError(
                    f"factor vertex {vid!r} contains {PRODUCT_SEPARATOR!r}; "
                    "products of product graphs are not supported"
                )


def _union_maps(g1: FuzzyGraph, g2: FuzzyGraph):
    overlap = g1.sigma.keys() & g2.sigma.keys()
    if overlap:
        raise VertexCollisionError(f"operands share vertex ids: {sorted(overlap)}")
    sigma = {**g1.sigma, **g2.sigma}
    mu = {**g1.mu, **g2.mu}
    return sigma, mu


def combine(kind: str, g1: FuzzyGraph, g2: FuzzyGraph) -> FuzzyGraph:
    """Apply one of the seven binary operations and validate the result."""
    if kind not in OP_KINDS:
        raise BadParameterError(f"unknown operation {kind!r}; expected one of {OP_KINDS}")

    if kind == "union":
        sigma, mu = _union_maps(g1, g2)
        return assemble(sigma, mu)

    if kind == "join":
        sigma, mu = _union_maps(g1, g2)
        for u in g1.sigma:
            for v in g2.sigma:
                mu[pair_key(u, v)] = min(g1.sigma[u], g2.sigma[v])
        return assemble(sigma, mu)

    _check_product_operands(g1, g2)
    sigma = {
        product_vertex(u, v): min(g1.sigma[u], g2.sigma[v])
        for u in g1.sigma
        for v in g2.sigma
    }
    mu: dict[tuple[str, str], Fraction] = {}

    def put(a1: str, a2: str, b1: str, b2: str, value: Fraction) -> None:
        mu[pair_key(product_vertex(a1, a2), product_vertex(b1, b2))] = value

    if kind in ("cartesian", "composition", "semidirect", "strong"):
        # rule (a)
        for u1 in g1.sigma:
            for (u2, v2), m2 in g2.mu.items():
                put(u1, u2, u1, v2, min(g1.sigma[u1], m2))
    if kind in ("cartesian", "composition", "strong"):
        # rule (b)
        for u2 in g2.sigma:
            for (u1, v1), m1 in g1.mu.items():
                put(u1, u2, v1, u2, min(g2.sigma[u2], m1))
    if kind == "composition":
        # rule (c): both orientations of each distinct right-hand pair
        for (u1, v1), m1 in g1.mu.items():
            for u2 in g2.sigma:
                for v2 in g2.sigma:
                    if u2 == v2:
                        continue
                    put(u1, u2, v1, v2, min(g2.sigma[u2], g2.sigma[v2], m1))
    if kind in ("direct", "semidirect", "strong"):
        # rule (d): two product edges per edge pair
        for (u1, v1), m1 in g1.mu.items():
            for (u2, v2), m2 in g2.mu.items():
                value = min(m1, m2)
                put(u1, u2, v1, v2, value)
                put(u1, v2, v1, u2, value)

    return assemble(sigma, mu)
