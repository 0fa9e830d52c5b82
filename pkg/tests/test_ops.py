from fractions import Fraction as F

import pytest

from fuzzygraphs import build, combine, generate
from fuzzygraphs.errors import (
    BadParameterError,
    ReservedCharacterError,
    VertexCollisionError,
)


def edge_graph(u, v, mu, su=1, sv=1):
    return build([(u, su), (v, sv)], [(u, v, mu)])


def test_direct_product_example():
    g1 = edge_graph("a1", "b1", F(2, 5))
    g2 = edge_graph("a2", "b2", F(7, 10))
    p = combine("direct", g1, g2)
    assert sorted(p.sigma) == ["a1~a2", "a1~b2", "b1~a2", "b1~b2"]
    assert p.mu == {
        ("a1~a2", "b1~b2"): F(2, 5),
        ("a1~b2", "b1~a2"): F(2, 5),
    }


def test_cartesian_with_single_vertex():
    g1 = edge_graph("a", "b", F(2, 5))
    g2 = build([("x", F(7, 10))])
    p = combine("cartesian", g1, g2)
    assert p.mu == {("a~x", "b~x"): F(2, 5)}
    assert p.sigma == {"a~x": F(7, 10), "b~x": F(7, 10)}


def test_composition_exceeds_cartesian():
    g1 = edge_graph("a", "b", F(1, 2))
    g2 = build([("x", 1), ("y", 1)])
    p = combine("composition", g1, g2)
    assert set(p.mu) == {
        ("a~x", "b~x"),
        ("a~y", "b~y"),
        ("a~x", "b~y"),
        ("a~y", "b~x"),
    }
    assert set(p.mu.values()) == {F(1, 2)}
    c = combine("cartesian", g1, g2)
    assert set(c.mu) < set(p.mu)


def test_join_of_single_vertices():
    j = combine("join", build([("a", F(3, 10))]), build([("b", F(9, 10))]))
    assert j.mu == {("a", "b"): F(3, 10)}


def test_union_sums():
    g1 = build([("a", F(1, 2)), ("b", 1)], [("a", "b", F(1, 4))])
    g2 = build([("x", F(1, 3))])
    u = combine("union", g1, g2)
    assert u.sigma_sum() == g1.sigma_sum() + g2.sigma_sum()
    assert u.mu_sum() == g1.mu_sum() + g2.mu_sum()


def test_union_join_collision():
    g1 = build([("a", 1)])
    g2 = build([("a", 1)])
    with pytest.raises(VertexCollisionError):
        combine("union", g1, g2)
    with pytest.raises(VertexCollisionError):
        combine("join", g1, g2)


def test_join_edge_count():
    g1 = generate("path_strong", 3, F(1, 2))
    g2 = generate("complete_bipartite_strong", 2, F(1, 3))
    j = combine("join", g1, g2)
    assert len(j.mu) == len(g1.mu) + len(g2.mu) + len(g1.sigma) * len(g2.sigma)


def test_product_vertex_counts():
    g1 = generate("cycle_strong", 3, F(1, 2))
    g2 = generate("path_strong", 4, F(1, 4))
    for kind in ("cartesian", "composition", "direct", "semidirect", "strong"):
        assert len(combine(kind, g1, g2).sigma) == 12


def test_edge_set_algebra():
    g1 = generate("cycle_strong", 4, F(1, 2))
    g2 = generate("path_strong", 3, F(3, 4))
    cart = combine("cartesian", g1, g2)
    direct = combine("direct", g1, g2)
    semi = combine("semidirect", g1, g2)
    strong = combine("strong", g1, g2)
    comp = combine("composition", g1, g2)
    assert set(cart.mu) & set(direct.mu) == set()
    merged = {**cart.mu, **direct.mu}
    assert strong.mu == merged
    assert set(semi.mu) <= set(strong.mu)
    assert all(strong.mu[k] == v for k, v in semi.mu.items())
    assert set(cart.mu) <= set(comp.mu)
    assert all(comp.mu[k] == v for k, v in cart.mu.items())


def test_products_of_products_rejected():
    g = edge_graph("a", "b", F(1, 2))
    p = combine("direct", g, g)
    with pytest.raises(ReservedCharacterError):
        combine("direct", p, g)


def test_unknown_kind():
    g = build([("a", 1)])
    with pytest.raises(BadParameterError):
        combine("tensor", g, g)


def test_outputs_respect_membership_bound():
    g1 = build([("a", F(1, 5)), ("b", 1)], [("a", "b", F(1, 5))])
    g2 = build([("x", F(2, 3)), ("y", F(1, 2))], [("x", "y", F(1, 4))])
    for kind in ("cartesian", "composition", "direct", "semidirect", "strong"):
        p = combine(kind, g1, g2)
        for (u, v), value in p.mu.items():
            assert 0 < value <= min(p.sigma[u], p.sigma[v])
