"""Bipartite matching, minimal Hall violators, and arc-assignment flow.

Three decision engines live here:

* the one-end-in-X matching used by the general 3-trestle condition,
* inclusion-minimal Hall violators in the red-black bipartite subgraph,
* the flow-feasibility test for arc assignments on trees (the i(v)/o(v)
  demand system) together with assignment extraction from a known
  trestle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import DomainError, Graph, InternalInvariantError, Tree
from .patterns import tree_profile


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint edge set of a host graph."""

    host: Graph
    edge_list: tuple[tuple[int, int], ...]
    role: str = "matching"

    def __post_init__(self):
        used = set()
        for u, v in self.edge_list:
            if not self.host.has_edge(u, v):
                raise DomainError(f"({u},{v}) is not a host edge")
            if u in used or v in used:
                raise DomainError(f"({u},{v}) reuses a matched vertex")
            used.add(u)
            used.add(v)

    def covered(self) -> set[int]:
        return {v for e in self.edge_list for v in e}

    def partner(self, v: int) -> int | None:
        for a, b in self.edge_list:
            if a == v:
                return b
            if b == v:
                return a
        return None

    def size(self) -> int:
        return len(self.edge_list)


@dataclass(frozen=True)
class HallViolator:
    """A red set R with |N(R)| < |R| in the red-black bipartite graph."""

    red_set: frozenset[int]
    neighbourhood: frozenset[int]


@dataclass
class ArcAssignment:
    """Non-negative integers on the arcs of a tree's symmetric orientation."""

    tree: Tree
    values: dict[tuple[int, int], int] = field(default_factory=dict)

    def value(self, u: int, v: int) -> int:
        if not self.tree.has_edge(u, v):
            raise DomainError(f"({u},{v}) is not a tree edge")
        return self.values.get((u, v), 0)

    def set_value(self, u: int, v: int, a: int) -> None:
        if not self.tree.has_edge(u, v):
            raise DomainError(f"({u},{v}) is not a tree edge")
        if a < 0:
            raise DomainError("arc values are non-negative")
        if a:
            self.values[(u, v)] = a
        else:
            self.values.pop((u, v), None)

    def in_sum(self, v: int) -> int:
        return sum(self.value(u, v) for u in self.tree.adj[v])

    def out_sum(self, v: int) -> int:
        return sum(self.value(v, u) for u in self.tree.adj[v])

    def satisfies_demands(self, k: int) -> bool:
        """The exact in-demand / out-cap system for parameter ``k``."""
        profile = tree_profile(self.tree)
        for v in range(self.tree.n):
            nv = profile.n(v)
            if nv > k:
                return False
            if self.in_sum(v) != max(0, nv - 2):
                return False
            if self.out_sum(v) > k - nv:
                return False
        return True

    def to_jsonable(self) -> dict[str, int]:
        return {
            f"{u}->{v}": a
            for (u, v), a in sorted(self.values.items())
        }


def _augment(adjacency: dict[int, list[int]], free: int, match_of: dict[int, int]) -> bool:
    """One round of Kuhn's augmenting-path search from ``free``."""
    visited: set[int] = set()

    def try_vertex(x: int) -> bool:
        for y in adjacency.get(x, ()):
            if y in visited:
                continue
            visited.add(y)
            if y not in match_of or try_vertex(match_of[y]):
                match_of[y] = x
                return True
        return False

    return try_vertex(free)


def max_bipartite_matching(left: list[int], adjacency: dict[int, list[int]]) -> dict[int, int]:
    """Maximum matching; returns left -> right assignment.

    ``adjacency`` maps each left vertex to its (sorted) right
    neighbours.  Deterministic: left vertices are processed in the given
    order and neighbours in list order.
    """
    match_of: dict[int, int] = {}
    for x in left:
        _augment(adjacency, x, match_of)
    return {x: y for y, x in match_of.items()}


def theorem1_matching(g: Graph, centre_set: set[int]) -> Matching | None:
    """A matching of size |X| whose edges have exactly one end in X.

    X is the given centre set; pairs are drawn from the host edges with
    exactly one end in X.  Returns None iff no saturating matching
    exists.
    """
    for v in centre_set:
        if not 0 <= v < g.n:
            raise DomainError(f"centre {v} out of range")
    left = sorted(centre_set)
    adjacency = {
        x: [y for y in g.adj[x] if y not in centre_set] for x in left
    }
    assignment = max_bipartite_matching(left, adjacency)
    if len(assignment) < len(left):
        return None
    edges = tuple(sorted((min(x, y), max(x, y)) for x, y in assignment.items()))
    return Matching(g, edges)


def _red_black_adjacency(g: Graph, red: set[int]) -> dict[int, list[int]]:
    return {r: [y for y in g.adj[r] if y not in red] for r in sorted(red)}


def _saturates(adjacency: dict[int, list[int]], subset: list[int]) -> bool:
    sub_adj = {x: adjacency[x] for x in subset}
    return len(max_bipartite_matching(subset, sub_adj)) == len(subset)


def _reachability_violator(adjacency: dict[int, list[int]], subset: list[int]) -> tuple[set[int], set[int]]:
    """Deficient set via alternating reachability from an unmatched vertex."""
    assignment = max_bipartite_matching(subset, {x: adjacency[x] for x in subset})
    unmatched = [x for x in subset if x not in assignment]
    if not unmatched:
        raise InternalInvariantError("asked for a violator of a saturatable set")
    partner = {y: x for x, y in assignment.items()}
    start = unmatched[0]
    reached_left = {start}
    reached_right: set[int] = set()
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adjacency[x]:
                if y in reached_right:
                    continue
                reached_right.add(y)
                x2 = partner.get(y)
                if x2 is not None and x2 not in reached_left:
                    reached_left.add(x2)
                    nxt.append(x2)
        frontier = nxt
    return reached_left, reached_right


def minimal_hall_violator(g: Graph, red: set[int]) -> HallViolator | None:
    """Inclusion-minimal Hall violator of the red side, or None.

    The bipartite graph consists of the host edges with exactly one red
    end.  Starting from the alternating-reachability violator of an
    unmatched red vertex, the shrink loop descends into any co-singleton
    that is still unsaturatable; on exit every proper subset is
    saturatable, which certifies inclusion-minimality.
    """
    for v in red:
        if not 0 <= v < g.n:
            raise DomainError(f"red vertex {v} out of range")
    adjacency = _red_black_adjacency(g, red)
    subset = sorted(red)
    if _saturates(adjacency, subset):
        return None
    violator, _ = _reachability_violator(adjacency, subset)
    while True:
        shrunk = False
        for r in sorted(violator):
            rest = sorted(violator - {r})
            if rest and not _saturates(adjacency, rest):
                violator, _ = _reachability_violator(adjacency, rest)
                shrunk = True
                break
        if not shrunk:
            break
    neighbourhood = {y for x in violator for y in adjacency[x]}
    if len(neighbourhood) >= len(violator):
        raise InternalInvariantError("shrink loop produced a non-violator")
    return HallViolator(frozenset(violator), frozenset(neighbourhood))


# ---------------------------------------------------------------------------
# Flow feasibility for arc assignments.
# ---------------------------------------------------------------------------


class _FlowNet:
    """Tiny Edmonds-Karp max-flow, adjacency-list residual network."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.nxt: list[int] = []
        self.first = [-1] * n

    def add_edge(self, u: int, v: int, cap: int) -> int:
        idx = len(self.head)
        for a, b, c in ((u, v, cap), (v, u, 0)):
            self.head.append(b)
            self.cap.append(c)
            self.nxt.append(self.first[a])
            self.first[a] = len(self.head) - 1
        return idx

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            parent_edge = [-1] * self.n
            parent_edge[s] = -2
            queue = [s]
            while queue and parent_edge[t] == -1:
                nxt_queue = []
                for u in queue:
                    e = self.first[u]
                    while e != -1:
                        v = self.head[e]
                        if self.cap[e] > 0 and parent_edge[v] == -1:
                            parent_edge[v] = e
                            nxt_queue.append(v)
                        e = self.nxt[e]
                queue = nxt_queue
            if parent_edge[t] == -1:
                return total
            # trace back, find bottleneck
            bottleneck = None
            v = t
            while v != s:
                e = parent_edge[v]
                bottleneck = self.cap[e] if bottleneck is None else min(bottleneck, self.cap[e])
                v = self.head[e ^ 1]
            v = t
            while v != s:
                e = parent_edge[v]
                self.cap[e] -= bottleneck
                self.cap[e ^ 1] += bottleneck
                v = self.head[e ^ 1]
            total += bottleneck

    def flow_on(self, edge_index: int) -> int:
        # flow equals the residual capacity of the reverse edge
        return self.cap[edge_index ^ 1]


def feasible_assignment(t: Tree, k: int) -> ArcAssignment | None:
    """An integral assignment meeting the i/o demand system, or None.

    Network: source -> v_out with capacity k - n(v); u_out -> v_in for
    every arc (u, v), unbounded; v_in -> sink with capacity
    max{0, n(v) - 2}.  Feasible iff the max flow saturates every sink
    edge; the arc values are read off the integral flow.
    """
    if k < 2:
        raise DomainError("trestle parameter k must be at least 2")
    if t.n < 3:
        raise DomainError("trees on fewer than 3 vertices are out of domain")
    profile = tree_profile(t)
    if any(profile.n(v) > k for v in range(t.n)):
        return None
    demand = [max(0, profile.n(v) - 2) for v in range(t.n)]
    total_demand = sum(demand)
    if total_demand == 0:
        return ArcAssignment(t)
    big = total_demand + 1
    # node layout: source, sink, v_out = 2 + v, v_in = 2 + n + v
    net = _FlowNet(2 + 2 * t.n)
    source, sink = 0, 1
    for v in range(t.n):
        net.add_edge(source, 2 + v, k - profile.n(v))
        net.add_edge(2 + t.n + v, sink, demand[v])
    arc_edge = {}
    for u in range(t.n):
        for v in t.adj[u]:
            arc_edge[(u, v)] = net.add_edge(2 + u, 2 + t.n + v, big)
    if net.max_flow(source, sink) < total_demand:
        return None
    result = ArcAssignment(t)
    for (u, v), idx in sorted(arc_edge.items()):
        flow = net.flow_on(idx)
        if flow:
            result.set_value(u, v, flow)
    if not result.satisfies_demands(k):
        raise InternalInvariantError("flow solution violates the demand system")
    return result


def assignment_from_trestle(t: Tree, trestle_edges: tuple[tuple[int, int], ...]) -> ArcAssignment:
    """Extract an arc assignment from a k-trestle of the tree square.

    For every vertex x with neighbour set U, the value max{0, n(x) - 2}
    is distributed over the arcs u -> x with per-arc cap deg_N(u) - 1,
    where N is the trestle-induced graph on U.
    """
    profile = tree_profile(t)
    in_trestle = {(min(a, b), max(a, b)) for a, b in trestle_edges}
    result = ArcAssignment(t)
    for x in range(t.n):
        nbrs = t.adj[x]
        need = max(0, profile.n(x) - 2)
        if len(nbrs) <= 1:
            continue  # leaf: its single in-arc stays 0
        deg_in_n = {
            u: sum(
                1
                for w in nbrs
                if w != u and (min(u, w), max(u, w)) in in_trestle
            )
            for u in nbrs
        }
        for u in nbrs:
            if need == 0:
                break
            give = min(need, deg_in_n[u] - 1)
            if give > 0:
                result.set_value(u, x, give)
                need -= give
        if need:
            raise InternalInvariantError(
                f"cannot distribute in-demand at vertex {x}; certificate is not a trestle?"
            )
    return result
