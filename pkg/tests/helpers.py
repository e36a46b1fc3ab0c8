"""Independent brute-force oracles used to freeze expected values.

Everything here enumerates raw search spaces directly and stays independent
of the library's search paths, so a library bug cannot hide in its own test.
"""

from __future__ import annotations

import random
from itertools import permutations, product

from critickit import Cover, Graph, ListAssignment, build_graph


def brute_is_k_colorable(g: Graph, k: int) -> bool:
    edges = g.edges()
    return any(
        all(c[u] != c[v] for u, v in edges)
        for c in product(range(k), repeat=g.n)
    )


def brute_count_colorings(g: Graph, k: int) -> int:
    edges = g.edges()
    return sum(
        1
        for c in product(range(k), repeat=g.n)
        if all(c[u] != c[v] for u, v in edges)
    )


def brute_is_list_colorable(g: Graph, assignment: ListAssignment) -> bool:
    edges = g.edges()
    domains = [sorted(l) for l in assignment.lists]
    if any(not d for d in domains) and g.n >= 1:
        return False
    return any(
        all(c[u] != c[v] for u, v in edges) for c in product(*domains)
    )


def brute_count_list_colorings(g: Graph, assignment: ListAssignment) -> int:
    edges = g.edges()
    domains = [sorted(l) for l in assignment.lists]
    return sum(
        1 for c in product(*domains) if all(c[u] != c[v] for u, v in edges)
    )


def _cover_conflicts(cover: Cover):
    conflicts = []
    for u, v, pairs in cover.matchings:
        for i, j in pairs:
            conflicts.append((u, i, v, j))
    return conflicts


def brute_find_transversal(cover: Cover):
    conflicts = _cover_conflicts(cover)
    for choice in product(*(range(s) for s in cover.sizes)):
        if all(not (choice[u] == i and choice[v] == j) for u, i, v, j in conflicts):
            return choice
    return None


def brute_count_transversals(cover: Cover) -> int:
    conflicts = _cover_conflicts(cover)
    return sum(
        1
        for choice in product(*(range(s) for s in cover.sizes))
        if all(not (choice[u] == i and choice[v] == j) for u, i, v, j in conflicts)
    )


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism with degree pruning; fine up to ~9 vertices."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(v: int) -> bool:
        if v == g.n:
            return True
        for w in range(h.n):
            if used[w] or g.degree(v) != h.degree(w):
                continue
            if any(
                mapping[u] != -1 and g.has_edge(u, v) != h.has_edge(mapping[u], w)
                for u in range(v)
            ):
                continue
            mapping[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return extend(0)


def random_graph(rng: random.Random, n: int, p: float = 0.5, connected: bool = False) -> Graph:
    edges = set()
    if connected and n > 1:
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            j = rng.randrange(i)
            edges.add((min(order[i], order[j]), max(order[i], order[j])))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return build_graph(n, sorted(edges))


def random_assignment(rng: random.Random, n: int, k: int, pool: int) -> ListAssignment:
    pool = max(pool, k)
    return ListAssignment.of(
        [rng.sample(range(pool), k) for _ in range(n)]
    )


def random_cover(rng: random.Random, g: Graph, max_size: int = 3) -> Cover:
    sizes = [rng.randint(1, max_size) for _ in range(g.n)]
    matchings = {}
    for u, v in g.edges():
        count = rng.randint(0, min(sizes[u], sizes[v]))
        sources = rng.sample(range(sizes[u]), count)
        targets = rng.sample(range(sizes[v]), count)
        matchings[(u, v)] = dict(zip(sources, targets))
    from critickit import make_cover

    return make_cover(g, sizes, matchings)


def random_relabeling(rng: random.Random, cover: Cover):
    out = []
    for s in cover.sizes:
        perm = list(range(s))
        rng.shuffle(perm)
        out.append(tuple(perm))
    return out
