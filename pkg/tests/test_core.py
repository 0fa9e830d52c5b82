from fractions import Fraction as F

import pytest

from fuzzygraphs import (
    build,
    classify,
    complement,
    generate,
    induced_subgraph,
    vertex_degrees,
)
from fuzzygraphs.errors import (
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
    ValueRangeError,
    ZeroSigmaVertexError,
)


def test_build_maximal_memberships():
    g = build([("a", 1), ("b", 1)], [("a", "b", 1)])
    assert g.sigma == {"a": F(1), "b": F(1)}
    assert g.mu == {("a", "b"): F(1)}


def test_build_membership_bound_violation():
    with pytest.raises(MembershipBoundError):
        build([("a", F(2, 5)), ("b", F(3, 5))], [("a", "b", F(1, 2))])


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build([("a", F(1, 2))], [("a", "a", F(1, 4))])


def test_build_error_matrix():
    with pytest.raises(EmptyGraphError):
        build([])
    with pytest.raises(ZeroSigmaVertexError):
        build([("a", 0)])
    with pytest.raises(DuplicateVertexError):
        build([("a", 1), ("a", 1)])
    with pytest.raises(UnknownEndpointError):
        build([("a", 1)], [("a", "z", "1/2")])
    with pytest.raises(ValueRangeError):
        build([("a", "3/2")])
    with pytest.raises(ReservedCharacterError):
        build([("a~b", 1)])
    with pytest.raises(DuplicateEdgeError):
        build([("a", 1), ("b", 1)], [("a", "b", "1/2"), ("b", "a", "1/2")])


def test_build_drops_zero_mu_entries():
    g = build([("a", 1), ("b", 1)], [("a", "b", 0)])
    assert g.mu == {}


def test_complement_hand_value():
    g = build([("a", F(3, 5)), ("b", F(4, 5))], [("a", "b", F(1, 2))])
    c = complement(g)
    assert c.mu == {("a", "b"): F(1, 10)}
    assert c.sigma == g.sigma


def test_complement_of_edgeless_is_complete():
    g = build([("a", 1), ("b", 1), ("c", 1)])
    c = complement(g)
    assert len(c.mu) == 3
    assert set(c.mu.values()) == {F(1)}
    assert classify(c).is_complete


def test_complement_of_complete_is_edgeless():
    g = generate("complete_kn", 4, F(1, 2))
    assert complement(g).mu == {}


def test_complement_involution():
    g = build(
        [("a", F(3, 5)), ("b", F(4, 5)), ("c", F(1, 4))],
        [("a", "b", F(1, 2)), ("a", "c", F(1, 8))],
    )
    assert complement(complement(g)) == g


def test_induced_subgraph_identity_and_restriction():
    g = build([("a", 1), ("b", 1), ("c", 1)], [("a", "b", F(1, 2))])
    assert induced_subgraph(g, g.vertex_ids()) == g
    sub = induced_subgraph(g, ["a", "b"])
    assert sub.sigma == {"a": F(1), "b": F(1)}
    assert sub.mu == {("a", "b"): F(1, 2)}
    only_c = induced_subgraph(g, ["c"])
    assert only_c.mu == {}


def test_induced_subgraph_petersen_outer_cycle():
    g = generate("petersen_strong", c=F(1, 2))
    outer = induced_subgraph(g, ["o1", "o2", "o3", "o4", "o5"])
    cycle = generate("cycle_strong", 5, F(1, 2))
    # same shape and values as a strong 5-cycle: 5 edges of 1/2
    assert len(outer.mu) == 5
    assert set(outer.mu.values()) == set(cycle.mu.values())
    assert all(d == F(1) for d, _ in vertex_degrees(outer).values())


def test_induced_subgraph_errors():
    g = build([("a", 1)])
    with pytest.raises(EmptySelectionError):
        induced_subgraph(g, [])
    with pytest.raises(UnknownVertexError):
        induced_subgraph(g, ["z"])


def test_degrees_petersen():
    g = generate("petersen_strong", c=F(1, 2))
    for degree, total in vertex_degrees(g).values():
        assert degree == F(3, 2)
        assert total == F(2)


def test_degrees_isolated_and_single_edge():
    g = build([("a", F(4, 5)), ("b", 1), ("c", F(1, 3))], [("a", "b", F(3, 10))])
    degs = vertex_degrees(g)
    assert degs["a"] == (F(3, 10), F(3, 10) + F(4, 5))
    assert degs["b"] == (F(3, 10), F(13, 10))
    assert degs["c"] == (F(0), F(1, 3))


def test_handshake_identity():
    g = generate("petersen_strong", c=F(3, 4))
    total = sum(d for d, _ in vertex_degrees(g).values())
    assert total == 2 * g.mu_sum()


def test_classify_complete_k4():
    rep = classify(generate("complete_kn", 4, F(1, 2)))
    assert rep.is_complete and rep.is_strong
    assert rep.regular_degree == F(3, 2)
    assert rep.totally_regular_degree == F(2)
    assert rep.constant_sigma == F(1, 2)
    assert rep.constant_mu == F(1, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6])
@pytest.mark.parametrize("c", [F(1, 4), F(2, 3), F(1)])
def test_classify_complete_family_identities(n, c):
    rep = classify(generate("complete_kn", n, c))
    assert rep.is_complete
    assert rep.regular_degree == (n - 1) * c
    assert rep.totally_regular_degree == n * c
    assert rep.constant_sigma == c


def test_classify_strong_not_complete():
    g = build([("a", F(2, 5)), ("b", 1), ("c", 1)], [("a", "b", F(2, 5))])
    rep = classify(g)
    assert rep.is_strong and not rep.is_complete


def test_classify_regular_not_totally_regular():
    g = build([("a", F(1, 2)), ("b", 1)], [("a", "b", F(1, 2))])
    rep = classify(g)
    assert rep.regular_degree == F(1, 2)
    assert rep.totally_regular_degree is None


def test_classify_complete_implies_strong_even_for_single_vertex():
    rep = classify(build([("a", F(1, 3))]))
    assert rep.is_complete and rep.is_strong
    assert rep.regular_degree == F(0)
    assert rep.constant_mu is None


def test_generate_complete_kn_counts():
    g = generate("complete_kn", 5, F(1, 2))
    assert len(g.mu) == 10
    assert g.sigma_sum() == F(5, 2)


def test_generate_petersen_counts():
    g = generate("petersen_strong", c=F(1))
    assert len(g.sigma) == 10
    assert len(g.mu) == 15
    assert set(g.mu.values()) == {F(1)}


def test_generate_other_families():
    assert generate("edgeless", 3, 1).mu == {}
    assert len(generate("path_strong", 4, F(1, 4)).mu) == 3
    assert len(generate("cycle_strong", 6, F(1, 4)).mu) == 6
    knn = generate("complete_bipartite_strong", 3, F(1, 2))
    assert len(knn.sigma) == 6 and len(knn.mu) == 9


def test_generate_sigma_list():
    g = generate("complete_kn", 3, F(1, 4), sigma_list=[F(1, 4), F(1, 2), 1])
    assert g.sigma == {"v1": F(1, 4), "v2": F(1, 2), "v3": F(1)}
    assert set(g.mu.values()) == {F(1, 4)}
    rep = classify(g)
    assert rep.constant_mu == F(1, 4) and rep.constant_sigma is None


def test_generate_bad_parameters():
    with pytest.raises(BadParameterError):
        generate("no_such_family", 3, 1)
    with pytest.raises(BadParameterError):
        generate("complete_kn", 0, 1)
    with pytest.raises(BadParameterError):
        generate("cycle_strong", 2, 1)
    with pytest.raises(BadParameterError):
        generate("complete_kn", 3, 0)
    with pytest.raises(BadParameterError):
        generate("complete_kn", 3, 1, sigma_list=[1, 1])
    with pytest.raises(MembershipBoundError):
        generate("complete_kn", 2, F(1, 2), sigma_list=[F(1, 4), 1])
