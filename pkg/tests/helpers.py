"""Deterministic instance generators shared by unit and acceptance tests."""

import functools
import random

from trestles.graphs import Graph, Tree, is_two_connected
from trestles.matching_flow import theorem1_matching
from trestles.patterns import centres, is_spider_free


@functools.lru_cache(maxsize=1)
def base_patterns():
    """Derived base obstruction patterns, computed once per test run."""
    from trestles.obstruction import derive_base_patterns

    return derive_base_patterns(max_n=16)


def random_bounded_tree(rng: random.Random, n: int, maxdeg: int = 4) -> Tree:
    """Random labelled tree with all degrees at most maxdeg."""
    while True:
        edges = []
        deg = [0] * n
        ok = True
        for v in range(1, n):
            candidates = [u for u in range(v) if deg[u] < maxdeg]
            if not candidates:
                ok = False
                break
            u = rng.choice(candidates)
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
        if ok:
            return Tree(n, edges)


def random_caterpillar(rng: random.Random, n: int) -> Tree:
    """Spine plus randomly attached legs; always S(K_{1,3})-free."""
    spine_len = rng.randint(max(1, n // 3), n)
    spine_len = min(spine_len, n)
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    for v in range(spine_len, n):
        edges.append((rng.randrange(spine_len), v))
    return Tree(n, edges)


def sprinkle_chords(rng: random.Random, g: Graph, count: int) -> Graph:
    """Add up to count extra edges between vertices at distance two."""
    edges = set(g.edges())
    candidates = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v) and any(w in g.adj[v] for w in g.adj[u])
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:count])
    return Graph(g.n, edges)


def matched_spider_free_instances(seed: int, count: int, max_n: int = 40):
    """Yield (graph, matching) pairs meeting the builder's precondition.

    Hosts are S(K_{1,4})-free, connected, not 2-connected beyond oracle
    reach, and come with a saturating one-end-per-centre matching.  A
    mix of trees, caterpillars, and lightly chorded trees.
    """
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(5, max_n)
        style = rng.randrange(3)
        if style == 0:
            g: Graph = random_bounded_tree(rng, n)
        elif style == 1:
            g = random_caterpillar(rng, n)
        else:
            g = sprinkle_chords(rng, random_bounded_tree(rng, n), rng.randint(1, 3))
        if not is_spider_free(g, 4):
            continue
        if g.n > 8 and is_two_connected(g):
            continue
        x = centres(g, 3)
        matching = theorem1_matching(g, x)
        if matching is None:
            continue
        produced += 1
        yield g, matching
