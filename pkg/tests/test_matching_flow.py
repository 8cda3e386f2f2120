import pytest

from trestles.graphs import DomainError, Graph, Tree, path_graph, spider
from trestles.matching_flow import (
    ArcAssignment,
    Matching,
    feasible_assignment,
    max_bipartite_matching,
    minimal_hall_violator,
    theorem1_matching,
)
from trestles.patterns import tree_profile


def test_matching_validation():
    g = path_graph(4)
    Matching(g, ((0, 1), (2, 3)))
    with pytest.raises(DomainError):
        Matching(g, ((0, 1), (1, 2)))  # shared vertex
    with pytest.raises(DomainError):
        Matching(g, ((0, 2),))  # not an edge


def test_max_bipartite_matching_simple():
    adjacency = {0: [10, 11], 1: [10], 2: [11, 12]}
    m = max_bipartite_matching([0, 1, 2], adjacency)
    assert len(m) == 3
    assert sorted(m) == [0, 1, 2]
    assert len(set(m.values())) == 3


def test_theorem1_matching_on_spider():
    s = spider(3)
    m = theorem1_matching(s, {0})
    assert m is not None and m.size() == 1
    (edge,) = m.edge_list
    assert 0 in edge


def test_theorem1_matching_fails_on_shared_neighbour():
    # two designated vertices forced onto one shared partner
    g = Graph(3, [(0, 1), (1, 2)])
    assert theorem1_matching(g, {0, 2}) is None


def test_minimal_hall_violator_none_when_saturated():
    s = spider(3)
    assert minimal_hall_violator(s, {0}) is None


def test_minimal_hall_violator_single():
    # star whose red centre has only red neighbours has an empty
    # bipartite neighbourhood
    t = Tree(4, [(0, 1), (0, 2), (0, 3)])
    violator = minimal_hall_violator(t, {0, 1, 2, 3})
    assert violator is not None
    assert len(violator.neighbourhood) == len(violator.red_set) - 1


def test_assignment_demand_system():
    t = spider(3)
    a = feasible_assignment(t, 3)
    assert a is not None
    assert a.satisfies_demands(3)
    profile = tree_profile(t)
    assert a.in_sum(0) == max(0, profile.n(0) - 2) == 1
    assert all(a.out_sum(v) <= 3 - profile.n(v) for v in range(t.n))


def test_assignment_infeasible_for_spider4():
    assert feasible_assignment(spider(4), 3) is None


def test_assignment_k2_only_for_caterpillars():
    assert feasible_assignment(path_graph(5), 2) is not None
    assert feasible_assignment(spider(3), 2) is None


def test_assignment_values_validation():
    t = path_graph(3)
    a = ArcAssignment(t)
    with pytest.raises(DomainError):
        a.set_value(0, 2, 1)  # not a tree edge
    with pytest.raises(DomainError):
        a.set_value(0, 1, -1)
    a.set_value(0, 1, 2)
    a.set_value(0, 1, 0)
    assert a.values == {}


def test_domain_guards():
    with pytest.raises(DomainError):
        feasible_assignment(path_graph(5), 1)
    with pytest.raises(DomainError):
        feasible_assignment(Tree(2, [(0, 1)]), 3)
