"""Constructive 3-trestles in squares of S(K_{1,4})-free graphs.

Given a host graph together with a matching that pairs every centre of
an induced S(K_{1,3}) with exactly one non-centre neighbour, the builder
produces a 3-trestle of the square in which every unmatched vertex has
degree exactly 2.  The recursion splits the graph at a cutvertex of
maximal degree, solves each branch with a pendant dummy standing in for
the rest of the graph, and reassembles the branch solutions through a
theta graph spanned over the cutvertex's neighbourhood.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import (
    DomainError,
    Graph,
    InternalInvariantError,
    cutvertices,
    components,
    is_connected,
    is_path_graph,
    is_two_connected,
    path_endpoints,
    square,
)
from .matching_flow import Matching
from .oracle import fleischner_hamilton
from .path_cover import linear_forest_for
from .patterns import centres, is_spider_free
from .verify import TrestleCertificate, verify_trestle


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _cycle_edges(order: list[int]) -> set[tuple[int, int]]:
    return {
        _norm(order[i], order[(i + 1) % len(order)]) for i in range(len(order))
    }


def path_square_cycle(p: Graph) -> list[tuple[int, int]]:
    """Hamilton cycle of the square of a path.

    Walks the even positions in ascending order, then the odd positions
    in descending order; consecutive vertices are at distance at most 2
    along the path.
    """
    if not is_path_graph(p):
        raise DomainError("host is not a path")
    a, b = path_endpoints(p)
    start = min(a, b)
    order = [start]
    prev = -1
    while len(order) < p.n:
        cur = order[-1]
        nxt = [w for w in p.adj[cur] if w != prev]
        prev = cur
        order.append(nxt[0])
    seq = order[0::2] + order[1::2][::-1]
    return sorted(_cycle_edges(seq))


def _bounded_alpha(g: Graph, cap: int = 4) -> int:
    """min(independence number, cap); enough to check the alpha <= 3 bound."""
    best = 1 if g.n else 0
    for size in range(min(cap, g.n), 1, -1):
        for combo in combinations(range(g.n), size):
            if all(
                not g.has_edge(u, v) for u, v in combinations(combo, 2)
            ):
                return size
    return best


def _spanning_tree_with(g: Graph, forced: list[tuple[int, int]]) -> list[set[int]]:
    """Adjacency sets of a spanning tree containing all forced edges."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adj: list[set[int]] = [set() for _ in range(g.n)]

    def take(u: int, v: int) -> bool:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
        adj[u].add(v)
        adj[v].add(u)
        return True

    for u, v in forced:
        if not take(u, v):
            raise InternalInvariantError("forced edges contain a cycle")
    for u, v in g.edges():
        take(u, v)
    return adj


def _expand_pairs(
    path: tuple[int, ...],
    pairs: list[tuple[int, int]],
    sq: Graph,
    nc: set[int],
    a_vertex: int | None,
) -> list[int]:
    """Replace each contracted pair by (u, w) or (w, u).

    The result must be a path in the square; one end must lie in nc,
    and if a_vertex sits inside one of the pairs it is forced to be the
    very first vertex of the sequence.
    """
    seq = list(path)
    a_pos = None
    for pos, i in enumerate(seq):
        if a_vertex is not None and a_vertex in pairs[i]:
            a_pos = pos
    if a_pos is not None:
        if a_pos == len(seq) - 1:
            seq.reverse()
        elif a_pos != 0:
            raise InternalInvariantError("anchored pair is not at a path end")

    options = []
    for i in seq:
        u, w = pairs[i]
        options.append([(u, w), (w, u)])
    if a_pos is not None:
        u, w = pairs[seq[0]]
        first = (a_vertex, w if a_vertex == u else u)
        options[0] = [first]

    # an nc-end exists iff the first pair leads with u (always in nc) or
    # the last pair trails with u; the anchored case has a in front
    attempts: list[tuple[int | None, int | None]]
    if a_pos is not None:
        attempts = [(None, None)]
    else:
        attempts = [(0, None), (None, 1)]
    for first_forced, last_forced in attempts:
        opts = [list(o) for o in options]
        if first_forced is not None:
            opts[0] = [options[0][first_forced]]
        if last_forced is not None:
            opts[-1] = [options[-1][last_forced]]
        feas = [[False] * len(opts[p]) for p in range(len(seq))]
        feas[-1] = [True] * len(opts[-1])
        for p in range(len(seq) - 2, -1, -1):
            for o, (_, y) in enumerate(opts[p]):
                feas[p][o] = any(
                    feas[p + 1][o2] and sq.has_edge(y, opts[p + 1][o2][0])
                    for o2 in range(len(opts[p + 1]))
                )
        if not any(feas[0]):
            continue
        out: list[int] = []
        choice = next(o for o in range(len(opts[0])) if feas[0][o])
        out.extend(opts[0][choice])
        for p in range(1, len(seq)):
            prev_last = out[-1]
            choice = next(
                o
                for o in range(len(opts[p]))
                if feas[p][o] and sq.has_edge(prev_last, opts[p][o][0])
            )
            out.extend(opts[p][choice])
        return out
    raise InternalInvariantError("pair expansion found no square path")


def _build(g: Graph, partner: dict[int, int]) -> set[tuple[int, int]]:
    n = g.n
    if is_path_graph(g):
        return set(path_square_cycle(g))
    if n <= 4:
        # connected, not a path, at most 4 vertices: diameter <= 2, so
        # the square is complete and the identity cycle works
        return _cycle_edges(list(range(n)))
    if is_two_connected(g):
        return _cycle_edges(fleischner_hamilton(g))

    cand = [v for v in cutvertices(g) if g.degree(v) >= 3]
    if not cand:
        raise InternalInvariantError("no cutvertex of degree >= 3 in a non-path host")
    top = max(g.degree(v) for v in cand)
    c = min(v for v in cand if g.degree(v) == top)

    nc = set(g.adj[c])
    closed = nc | {c}
    m_edges = sorted(
        {_norm(u, v) for u, v in partner.items()}
    )
    m_far = [e for e in m_edges if not (e[0] in closed and e[1] in closed)]

    star = [(c, w) for w in g.adj[c]]
    tree_adj = _spanning_tree_with(g, star + m_far)
    tree_graph = Graph(n, [
        (u, v) for u in range(n) for v in tree_adj[u] if u < v
    ])

    comps = components(tree_graph, removed={c})
    nontrivial = sorted(
        (sorted(comp) for comp in comps if len(comp) >= 2), key=min
    )
    if not nontrivial:
        # c is adjacent to everything, the square is complete
        return _cycle_edges(list(range(n)))

    sq = square(g)
    result: set[tuple[int, int]] = set()
    pairs: list[tuple[int, int]] = []
    extra_edges: list[tuple[int, int]] = []

    for comp in nontrivial:
        inside = set(comp)
        gates = [v for v in comp if v in nc]
        if len(gates) != 1:
            raise InternalInvariantError("branch meets the neighbourhood more than once")
        u_i = gates[0]

        old = sorted(inside | {c})
        index = {v: i for i, v in enumerate(old)}
        y = len(old)
        h_edges = [
            (index[a], index[b])
            for a, b in g.edges()
            if a in index and b in index
        ]
        h_edges.append((index[c], y))
        h = Graph(len(old) + 1, h_edges)

        x_local = centres(h, 3)
        sub_partner: dict[int, int] = {}
        for a, b in m_edges:
            if a in inside and b in inside:
                la, lb = index[a], index[b]
                if la in x_local or lb in x_local:
                    sub_partner[la] = lb
                    sub_partner[lb] = la
        engaged_to = None
        t_i = partner.get(u_i)
        if index[u_i] in x_local and t_i is not None and t_i not in inside:
            if t_i not in closed:
                raise InternalInvariantError("engaged vertex outside the closed neighbourhood")
            sub_partner[index[u_i]] = index[c]
            sub_partner[index[c]] = index[u_i]
            engaged_to = t_i
        for x in x_local:
            if x not in sub_partner:
                raise InternalInvariantError("branch matching misses a centre")

        sub = _build(h, sub_partner)

        lc, ly = index[c], y
        if _norm(lc, ly) not in sub or _norm(index[u_i], ly) not in sub:
            raise InternalInvariantError("dummy leaf is not wired to the cut and its gate")
        o_i = set()
        for p, q in sub:
            if p in (lc, ly) or q in (lc, ly):
                other = q if p in (lc, ly) else p
                if other not in (lc, ly):
                    o_i.add(old[other])
            else:
                extra_edges.append(_norm(old[p], old[q]))
        if not (2 <= len(o_i) <= 3) or u_i not in o_i:
            raise InternalInvariantError(f"entry set {sorted(o_i)} is malformed")
        w_i = min(o_i - {u_i})
        if w_i in nc:
            raise InternalInvariantError("second entry vertex fell into the neighbourhood")
        pairs.append((u_i, w_i))
        rest = o_i - {u_i, w_i}
        if rest:
            if engaged_to is None:
                raise InternalInvariantError("three entries but the gate is not engaged")
            v_i = rest.pop()
            e_i = _norm(v_i, engaged_to)
            if not sq.has_edge(*e_i):
                raise InternalInvariantError("engagement edge is not in the square")
            extra_edges.append(e_i)

    contracted = Graph(
        len(pairs),
        [
            (i, j)
            for i in range(len(pairs))
            for j in range(i + 1, len(pairs))
            if any(
                g.has_edge(p, q)
                for p in pairs[i]
                for q in pairs[j]
            )
        ],
    )
    alpha = _bounded_alpha(contracted)
    if alpha > 3:
        raise InternalInvariantError("contracted pair graph has independence number > 3")
    a_vertex = partner.get(c)
    if alpha == 3 and a_vertex is None:
        raise InternalInvariantError("three independent pairs but the cutvertex is unmatched")

    anchor = {i for i, (u, _) in enumerate(pairs) if u == a_vertex}
    forest = linear_forest_for(contracted, anchor)
    expanded = [
        _expand_pairs(p, pairs, sq, nc, a_vertex) for p in forest.paths
    ]

    w_set = {v for pair in pairs for v in pair}
    p_rest = sorted(v for v in nc if v not in w_set)
    if p_rest:
        if a_vertex in p_rest:
            tail = [a_vertex] + [v for v in p_rest if v != a_vertex]
        else:
            tail = p_rest
        # pick a component to absorb the leftover neighbourhood path; when
        # three components exist, the anchored one must be left alone
        host_idx = None
        for i, comp in enumerate(expanded):
            if len(expanded) == 3 and a_vertex in comp:
                continue
            host_idx = i
            break
        if host_idx is None:
            raise InternalInvariantError("no component can absorb the leftover path")
        comp = expanded[host_idx]
        join_end = comp[0] if comp[0] in nc else comp[-1]
        if a_vertex is not None and len(expanded) == 3 and join_end == a_vertex:
            raise InternalInvariantError("absorbing component is anchored")
        if join_end not in nc:
            raise InternalInvariantError("component has no end in the neighbourhood")
        if comp[0] == join_end:
            comp = comp[::-1]
        if not sq.has_edge(comp[-1], tail[-1]):
            raise InternalInvariantError("leftover path cannot attach in the square")
        expanded[host_idx] = comp + tail[::-1]

    ell: list[int] = []
    ell_prime: list[int] = []
    theta: set[tuple[int, int]] = set()
    for comp in expanded:
        for a, b in zip(comp, comp[1:]):
            theta.add(_norm(a, b))
        ends = [comp[0], comp[-1]]
        if a_vertex in ends:
            lead = a_vertex
        else:
            in_nc = [e for e in ends if e in nc]
            if not in_nc:
                raise InternalInvariantError("path has no end in the neighbourhood")
            lead = min(in_nc)
        ends.remove(lead)
        ell.append(lead)
        ell_prime.append(ends[0])
    for v in ell_prime:
        theta.add(_norm(c, v))
    if len(ell) == 1:
        theta.add(_norm(c, ell[0]))
    elif len(ell) == 2:
        theta.add(_norm(ell[0], ell[1]))
    else:
        if a_vertex not in ell:
            raise InternalInvariantError("three paths but none is anchored")
        for v in ell:
            if v != a_vertex:
                theta.add(_norm(a_vertex, v))

    for e in theta:
        if not sq.has_edge(*e):
            raise InternalInvariantError(f"theta edge {e} is not in the square")

    result = set(theta)
    for u, w in pairs:
        e = _norm(u, w)
        if e not in result:
            raise InternalInvariantError("pair edge missing from the theta graph")
        result.remove(e)
    result.update(extra_edges)
    return result


def build_general_trestle(
    g: Graph, matching_edges
) -> TrestleCertificate:
    """3-trestle certificate with unmatched vertices of degree exactly 2.

    The host must be connected, S(K_{1,4})-free, and the matching must
    pair each centre of an induced S(K_{1,3}) with a non-centre
    neighbour, one centre per edge.
    """
    if g.n < 3:
        raise DomainError("need at least 3 vertices")
    if not is_connected(g):
        raise DomainError("host graph is not connected")
    if not is_spider_free(g, 4):
        raise DomainError("host graph contains an induced S(K_{1,4})")
    x = centres(g, 3)
    edges = tuple(sorted({_norm(u, v) for u, v in matching_edges}))
    m = Matching(g, edges)
    for u, v in edges:
        if (u in x) == (v in x):
            raise DomainError(f"matching edge ({u},{v}) must have exactly one centre end")
    if not x <= m.covered():
        raise DomainError("matching does not saturate the centre set")
    partner = {}
    for u, v in edges:
        partner[u] = v
        partner[v] = u
    trestle = _build(g, partner)
    cert = TrestleCertificate.of(g, trestle, 3, matching_edges=edges)
    report = verify_trestle(cert)
    if not report.passed():
        raise InternalInvariantError(
            f"built trestle failed verification: {report.failed_checks()}"
        )
    return cert
