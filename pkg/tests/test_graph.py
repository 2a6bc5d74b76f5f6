"""Graph construction and exact invariants, cross-checked by brute force."""

import math
import random

import pytest

from zdg import (
    DisconnectedError,
    Graph,
    TooFewVerticesError,
    bridges,
    builtin_example,
    center,
    chromatic_number,
    clique_number,
    complete_multipartite_partition,
    cut_vertices,
    gamma,
    gamma_bar,
    girth,
    group_with_zero,
    has_clique_of_size,
    median,
    metrics,
    minimal_edge_cutsets,
    minimal_vertex_cutsets,
    null_semigroup,
    orthogonal_union,
    powerset_semigroup,
    to_dot,
)
from oracles import (
    brute_chromatic_number,
    brute_clique_number,
    brute_girth,
    random_graph,
)

INF = math.inf


def path4():
    return Graph(range(4), [(0, 1), (1, 2), (2, 3)])


def cycle(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


# -- construction ----------------------------------------------------------------


def test_gamma_of_ex34_is_the_path():
    g = gamma(builtin_example("ex3.4"))
    assert g.vertices == (1, 2, 3, 4)
    assert g.edges() == ((1, 2), (2, 3), (3, 4))
    assert [g.label_of(v) for v in g.vertices] == ["a", "b", "c", "d"]


def test_gamma_of_ex45_is_the_wheel():
    g = gamma(builtin_example("ex4.5"))
    assert g.n == 6
    assert g.edge_count == 10
    assert g.degree(6) == 5  # f is adjacent to everything


def test_gamma_bar_contains_gamma():
    for ex in ("ex3.4", "ex3.5", "ex3.8", "ex4.5"):
        s = builtin_example(ex)
        assert set(gamma(s).edges()) <= set(gamma_bar(s).edges())


def test_gamma_bar_of_ex45_is_complete():
    g = gamma_bar(builtin_example("ex4.5"))
    assert g.edge_count == 15


def test_gamma_equals_gamma_bar_on_ex35():
    s = builtin_example("ex3.5")
    assert gamma(s).edges() == gamma_bar(s).edges()


def test_loops_are_rejected():
    with pytest.raises(ValueError):
        Graph(range(2), [(0, 0)])


def test_square_zero_element_is_a_vertex():
    s = builtin_example("ex3.5")  # z^2 = 0 makes z a zero divisor
    assert 3 in gamma(s).vertices


# -- metrics ----------------------------------------------------------------------


def test_path_metrics():
    m = metrics(path4())
    assert m.radius == 2
    assert m.diameter == 3
    assert m.girth == INF
    assert m.connected


def test_cycle_metrics():
    m = metrics(cycle(5))
    assert m.radius == m.diameter == 2
    assert m.girth == 5


def test_disconnected_metrics_use_infinity():
    g = Graph(range(4), [(0, 1), (2, 3)])
    m = metrics(g)
    assert not m.connected
    assert m.diameter == INF
    assert len(m.components) == 2
    assert m.component_diameters == (1, 1)


def test_radius_diameter_inequality_on_corpus():
    from zdg import EnumerationOptions, enumerate_semigroups

    for s in enumerate_semigroups(EnumerationOptions(order=5, up_to_iso=True)):
        g = gamma(s)
        if g.n == 0:
            continue
        m = metrics(g)
        assert m.radius <= m.diameter <= 2 * m.radius


def test_distance_one_iff_edge():
    g = gamma(builtin_example("ex4.5"))
    m = metrics(g)
    for i, u in enumerate(g.vertices):
        for j, v in enumerate(g.vertices):
            if i != j:
                assert (m.dist[i][j] == 1) == g.has_edge(u, v)


# -- center, median, separators ----------------------------------------------------


def test_center_and_median_of_path():
    g = path4()
    assert center(g) == frozenset({1, 2})
    assert median(g) == frozenset({1, 2})


def test_center_requires_connected():
    g = Graph(range(4), [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError):
        center(g)
    with pytest.raises(DisconnectedError):
        median(g)


def test_cut_vertices_and_bridges_of_path():
    g = path4()
    assert cut_vertices(g) == frozenset({1, 2})
    assert bridges(g) == ((0, 1), (1, 2), (2, 3))


def test_cycle_has_no_cut_structure():
    g = cycle(4)
    assert cut_vertices(g) == frozenset()
    assert bridges(g) == ()


def test_minimal_vertex_cutsets_of_path():
    g = path4()
    assert minimal_vertex_cutsets(g) == (frozenset({1}), frozenset({2}))


def test_minimal_vertex_cutsets_of_cycle():
    cuts = minimal_vertex_cutsets(cycle(4))
    # opposite vertex pairs
    assert set(cuts) == {frozenset({0, 2}), frozenset({1, 3})}


def test_minimal_vertex_cutsets_respect_cap():
    g = gamma(builtin_example("ex4.5"))
    for t in minimal_vertex_cutsets(g, size_cap=3):
        assert len(t) <= 3


def test_minimal_vertex_cutsets_need_three_vertices():
    with pytest.raises(TooFewVerticesError):
        minimal_vertex_cutsets(Graph(range(2), [(0, 1)]))


def test_minimal_edge_cutsets_of_path():
    assert minimal_edge_cutsets(path4()) == (
        ((0, 1),),
        ((1, 2),),
        ((2, 3),),
    )


def test_minimal_edge_cutsets_of_cycle():
    cuts = minimal_edge_cutsets(cycle(4))
    assert all(len(c) == 2 for c in cuts)
    assert len(cuts) == 6  # any two edges of C4 disconnect it


def test_single_edge_graph_cutset():
    g = Graph(range(2), [(0, 1)])
    assert minimal_edge_cutsets(g) == (((0, 1),),)


# -- clique and coloring -------------------------------------------------------------


def test_ex45_clique_and_chromatic():
    g = gamma(builtin_example("ex4.5"))
    omega, witness = clique_number(g)
    chi, coloring = chromatic_number(g)
    assert (omega, chi) == (3, 4)
    assert len(witness) == 3
    assert all(g.has_edge(u, v) for u in witness for v in witness if u != v)
    # the returned coloring is proper and uses exactly chi colors
    pos = {v: i for i, v in enumerate(g.vertices)}
    for u, v in g.edges():
        assert coloring[pos[u]] != coloring[pos[v]]
    assert len(set(coloring)) == chi


def test_has_clique_of_size():
    g = gamma(powerset_semigroup(3))
    assert has_clique_of_size(g, 3)
    assert not has_clique_of_size(g, 4)
    with pytest.raises(ValueError):
        has_clique_of_size(g, 0)


def test_exact_invariants_match_brute_force_on_random_graphs():
    rng = random.Random(1793)
    for _ in range(60):
        g = random_graph(rng, max_n=7)
        assert clique_number(g)[0] == brute_clique_number(g)
        assert chromatic_number(g)[0] == brute_chromatic_number(g)
        assert girth(g) == brute_girth(g)


def test_empty_and_single_vertex_graphs():
    empty = Graph((), ())
    single = Graph((5,), ())
    assert clique_number(empty) == (0, ())
    assert chromatic_number(empty) == (0, ())
    assert clique_number(single)[0] == 1
    assert chromatic_number(single)[0] == 1
    assert girth(single) == INF


# -- complete multipartite recognition ------------------------------------------------


def test_complete_bipartite_recognition():
    g = gamma(orthogonal_union([group_with_zero(3), group_with_zero(3)]))
    part = complete_multipartite_partition(g)
    assert part is not None
    assert sorted(sorted(p) for p in part.parts) == [[1, 2], [3, 4]]
    assert part.r == 2


def test_complete_multipartite_of_null_semigroup():
    g = gamma(null_semigroup(5))  # K4
    part = complete_multipartite_partition(g)
    assert part is not None and part.r == 4


def test_path_is_not_complete_multipartite():
    assert complete_multipartite_partition(path4()) is None


def test_star_is_complete_bipartite():
    g = gamma(builtin_example("ex3.8"))
    part = complete_multipartite_partition(g)
    assert part is not None
    assert sorted(len(p) for p in part.parts) == [1, 2]


# -- dot and induced -------------------------------------------------------------------


def test_dot_output_mentions_every_vertex_and_edge():
    s = builtin_example("ex3.4")
    out = to_dot(gamma(s))
    for name in ("a", "b", "c", "d"):
        assert '"%s"' % name in out
    assert '"a" -- "b";' in out
    assert out.startswith("graph gamma {")


def test_induced_subgraph_of_ex34():
    g = gamma(builtin_example("ex3.4"))
    sub = g.induced([1, 2, 3])  # a, b, c
    assert sub.edges() == ((1, 2), (2, 3))
    assert sub.label_of(1) == "a"


def test_induced_on_all_vertices_is_identity():
    g = gamma(builtin_example("ex4.5"))
    sub = g.induced(g.vertices)
    assert sub.edges() == g.edges()


def test_complement_of_cycle4():
    comp = cycle(4).complement()
    assert comp.edges() == ((0, 2), (1, 3))
