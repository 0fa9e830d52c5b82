from fractions import Fraction as F

import pytest

from fuzzygraphs import (
    SampleProfile,
    balance_check,
    build,
    derive,
    generate,
    induced_subgraph,
    max_density_subgraph,
    sample_graph,
    star_density,
)
from fuzzygraphs.errors import BadParameterError, TooLargeError


@pytest.mark.parametrize(
    "family,n,c,expected",
    [
        ("complete_kn", 5, F(1, 2), F(4)),
        ("cycle_strong", 6, F(3, 10), F(2)),
        ("petersen_strong", None, F(1), F(3)),
        ("complete_bipartite_strong", 3, F(1, 2), F(3)),
    ],
)
def test_family_densities(family, n, c, expected):
    g = generate(family, n, c)
    assert star_density(g).value == expected


def test_density_edgeless_and_hand_value():
    assert star_density(generate("edgeless", 3, 1)).value == 0
    g = build([("a", F(2, 5)), ("b", F(3, 5))], [("a", "b", F(3, 10))])
    d = star_density(g)
    assert d.value == F(3, 5)
    assert d.numerator_sum == F(3, 5)
    assert d.denominator_sum == F(1)


def test_max_density_subgraph_edge_plus_isolated():
    g = build([("a", 1), ("b", 1), ("c", 1)], [("a", "b", 1)])
    members, density = max_density_subgraph(g)
    assert members == ("a", "b")
    assert density.value == F(1)


def test_max_density_subgraph_complete_graph_full_set():
    g = generate("complete_kn", 4, F(1, 2))
    members, density = max_density_subgraph(g)
    assert members == ("v1", "v2", "v3", "v4")
    assert density.value == F(3)


def test_max_density_subgraph_single_vertex():
    g = build([("a", F(1, 3))])
    members, density = max_density_subgraph(g)
    assert members == ("a",)
    assert density.value == F(0)


def test_witness_tie_break_is_smallest_then_lexicographic():
    g = build(
        [("a", 1), ("b", 1), ("c", 1), ("d", 1)],
        [("a", "b", F(1, 2)), ("c", "d", F(1, 2))],
    )
    members, density = max_density_subgraph(g)
    assert members == ("a", "b")
    assert density.value == F(1, 2)
    assert balance_check(g).balanced  # ties do not break balance


def test_balance_k6_balanced():
    verdict = balance_check(generate("complete_kn", 6, F(1, 4)))
    assert verdict.balanced
    assert verdict.witness is None
    assert verdict.max_subgraph_density.value == verdict.graph_density.value == F(5)


def test_balance_unbalanced_with_witness():
    g = build([("a", 1), ("b", 1), ("c", 1)], [("a", "b", 1)])
    verdict = balance_check(g)
    assert not verdict.balanced
    assert verdict.witness == ("a", "b")
    assert verdict.graph_density.value == F(2, 3)
    assert verdict.max_subgraph_density.value == F(1)


def test_balance_petersen():
    verdict = balance_check(generate("petersen_strong", c=F(1, 2)))
    assert verdict.balanced
    assert verdict.max_subgraph_density.value == F(3)


def test_tie_density_subgraph_does_not_violate():
    g = build([("a", 1), ("b", 1)], [("a", "b", F(1, 2))])
    verdict = balance_check(g)
    assert verdict.graph_density.value == F(1, 2)
    assert verdict.balanced


def test_full_set_consistency():
    g = sample_graph(SampleProfile("generic", 8, 16), 99)
    assert star_density(induced_subgraph(g, g.vertex_ids())).value == star_density(g).value


def test_flow_agrees_with_enumeration_on_samples():
    profile = SampleProfile("generic", 9, 12)
    for i in range(40):
        g = sample_graph(profile, derive(5, i))
        _, enum_density = max_density_subgraph(g, "enumeration")
        members, flow_density = max_density_subgraph(g, "flow")
        assert enum_density.value == flow_density.value
        # the flow witness really attains the reported density
        assert star_density(induced_subgraph(g, members)).value == flow_density.value


def test_flow_handles_edgeless():
    g = generate("edgeless", 4, F(1, 2))
    members, density = max_density_subgraph(g, "flow")
    assert density.value == 0
    assert len(members) >= 1


def test_enumeration_guard():
    g = generate("edgeless", 25, F(1, 2))
    with pytest.raises(TooLargeError):
        max_density_subgraph(g, "enumeration")
    with pytest.raises(TooLargeError):
        balance_check(g)


def test_flow_works_beyond_enumeration_guard():
    g = generate("cycle_strong", 30, F(1, 2))
    members, density = max_density_subgraph(g, "flow")
    assert density.value == F(2)
    assert star_density(induced_subgraph(g, members)).value == F(2)
    assert balance_check(g, "flow").balanced


def test_flow_finds_dense_spot_in_large_sparse_graph():
    names = [f"x{i:02d}" for i in range(1, 27)]
    g = build([(v, 1) for v in names], [("x01", "x02", 1)])
    members, density = max_density_subgraph(g, "flow")
    assert density.value == F(1)
    assert set(members) == {"x01", "x02"}
    verdict = balance_check(g, "flow")
    assert not verdict.balanced and verdict.witness is not None


def test_unknown_method():
    g = build([("a", 1)])
    with pytest.raises(BadParameterError):
        max_density_subgraph(g, "magic")


def test_relabeling_preserves_verdict():
    g = build(
        [("a", F(1, 2)), ("b", 1), ("c", F(3, 4))],
        [("a", "b", F(1, 2)), ("b", "c", F(1, 4))],
    )
    relabeled = build(
        [("x", F(1, 2)), ("y", 1), ("z", F(3, 4))],
        [("x", "y", F(1, 2)), ("y", "z", F(1, 4))],
    )
    v1 = balance_check(g)
    v2 = balance_check(relabeled)
    assert v1.balanced == v2.balanced
    assert v1.graph_density.value == v2.graph_density.value
    assert v1.max_subgraph_density.value == v2.max_subgraph_density.value
