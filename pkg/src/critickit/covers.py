"""DP-coloring engine: covers, transversals, canonicity, symmetry-reduced
full-cover scans, DP-chromatic number, robust criticality and minimum
transversal counts.

Colors of a cover are (vertex, index) pairs; the auxiliary color graph is
never materialized.  Each host edge carries a partial injection between the
two index ranges, stored once per edge with ``u < v``.

Full covers are scanned up to per-vertex index relabeling by gauge fixing on
a spanning tree: tree matchings are forced to the identity, non-tree
matchings range over all permutations.  Every full cover is
relabel-equivalent to exactly one gauge-fixed cover, and in the gauge-fixed
picture a cover is canonical iff every non-tree permutation is the identity.
"""

from __future__ import annotations

from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from .coloring import ColoringVerdict, chromatic_number, classify_criticality
from .errors import BudgetExceeded, CoverError, GraphError
from .graphs import Graph, connected_components, degeneracy, spanning_tree
from .limits import Budget, SearchLimits
from .listcoloring import ListAssignment

ROBUSTLY_CRITICAL = "robustly_critical"
NOT_CRITICAL = "not_critical"
NONCANONICAL_BAD_COVER_FOUND = "noncanonical_bad_cover_found"
UNKNOWN = "unknown"

Matching = tuple[int, int, tuple[tuple[int, int], ...]]


@dataclass(frozen=True)
class Cover:
    """A cover of ``graph``: list sizes per vertex plus one partial injection
    per host edge.

    ``matchings`` holds one entry ``(u, v, pairs)`` per host edge with
    ``u < v``, entries sorted by edge and pairs sorted ascending; ``(i, j)``
    in pairs means index i of u is matched to index j of v.  The dataclass
    itself is a plain container; use :func:`validate_cover` to check the
    cover invariants.
    """

    graph: Graph
    sizes: tuple[int, ...]
    matchings: tuple[Matching, ...]

    def is_uniform(self) -> bool:
        return len(set(self.sizes)) <= 1

    @property
    def fold(self) -> int:
        """Common list size of a uniform cover."""
        if not self.is_uniform():
            raise CoverError("cover has unequal list sizes")
        return self.sizes[0] if self.sizes else 0


def make_cover(graph: Graph, sizes, matchings) -> Cover:
    """Normalize raw parts into a Cover: ``matchings`` maps edge pairs (either
    orientation) to ``{source_index: target_index}``."""
    normalized = {}
    for (u, v), mapping in matchings.items():
        if u > v:
            u, v = v, u
            mapping = {j: i for i, j in mapping.items()}
        normalized[(u, v)] = tuple(sorted(mapping.items()))
    entries = tuple(
        (u, v, normalized.get((u, v), ())) for u, v in graph.edges()
    )
    extra = set(normalized) - {(u, v) for u, v in graph.edges()}
    if extra:
        raise CoverError(f"matching stored on non-edge {sorted(extra)[0]}")
    return Cover(graph, tuple(sizes), entries)


def make_canonical_cover(graph: Graph, k: int) -> Cover:
    """The cover encoding ordinary k-coloring: identity matching everywhere."""
    if k < 0:
        raise CoverError(f"k must be non-negative, got {k}")
    identity = tuple((i, i) for i in range(k))
    return Cover(
        graph,
        (k,) * graph.n,
        tuple((u, v, identity) for u, v in graph.edges()),
    )


def make_near_canonical(graph: Graph, k: int, edge: tuple[int, int]) -> Cover:
    """Canonical k-fold cover with one edge's matching emptied."""
    if k < 1:
        raise CoverError(f"near-canonical cover needs k >= 1, got {k}")
    u, v = min(edge), max(edge)
    if not graph.has_edge(u, v):
        raise CoverError(f"({edge[0]}, {edge[1]}) is not an edge")
    identity = tuple((i, i) for i in range(k))
    return Cover(
        graph,
        (k,) * graph.n,
        tuple(
            (a, b, () if (a, b) == (u, v) else identity) for a, b in graph.edges()
        ),
    )


def cover_from_assignment(graph: Graph, assignment: ListAssignment) -> Cover:
    """The cover whose transversals correspond one-to-one to proper colorings
    from the assignment.  Index i of vertex v stands for the i-th smallest
    color of its list; same-color indices across an edge are matched."""
    if assignment.n != graph.n:
        raise CoverError(
            f"assignment covers {assignment.n} vertices, graph has {graph.n}"
        )
    ordered = [sorted(assignment.lists[v]) for v in range(graph.n)]
    position = [{c: i for i, c in enumerate(colors)} for colors in ordered]
    entries = []
    for u, v in graph.edges():
        shared = set(ordered[u]) & set(ordered[v])
        entries.append(
            (u, v, tuple(sorted((position[u][c], position[v][c]) for c in shared)))
        )
    return Cover(graph, tuple(len(colors) for colors in ordered), tuple(entries))


def cover_violation(cover: Cover) -> str | None:
    """The first violated cover invariant with its location, or None."""
    g = cover.graph
    if len(cover.sizes) != g.n:
        return f"sizes has {len(cover.sizes)} entries for {g.n} vertices"
    for v, s in enumerate(cover.sizes):
        if s < 0:
            return f"negative list size at vertex {v}"
    seen = set()
    for u, v, pairs in cover.matchings:
        if not (0 <= u < v < g.n):
            return f"matching endpoint order/range violated at ({u}, {v})"
        if not g.has_edge(u, v):
            return f"matching stored on non-edge ({u}, {v})"
        if (u, v) in seen:
            return f"duplicate matching entry for edge ({u}, {v})"
        seen.add((u, v))
        sources = [i for i, _ in pairs]
        targets = [j for _, j in pairs]
        if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
            return f"matching on edge ({u}, {v}) is not injective"
        if any(not 0 <= i < cover.sizes[u] for i in sources) or any(
            not 0 <= j < cover.sizes[v] for j in targets
        ):
            return f"matching on edge ({u}, {v}) uses out-of-range indices"
    missing = {(u, v) for u, v in g.edges()} - seen
    if missing:
        return f"no matching entry for edge {sorted(missing)[0]}"
    return None


def validate_cover(cover: Cover) -> bool:
    return cover_violation(cover) is None


def is_full(cover: Cover) -> bool:
    """True iff every edge matching is a perfect bijection; requires equal
    list sizes."""
    k = cover.fold
    return all(len(pairs) == k for _, _, pairs in cover.matchings)


def complete_to_full(cover: Cover) -> Cover:
    """Extend every partial matching to a bijection, pairing unmatched
    indices in ascending order; existing pairs are preserved (idempotent on
    full covers)."""
    k = cover.fold
    entries = []
    for u, v, pairs in cover.matchings:
        free_src = sorted(set(range(k)) - {i for i, _ in pairs})
        free_dst = sorted(set(range(k)) - {j for _, j in pairs})
        entries.append((u, v, tuple(sorted(pairs + tuple(zip(free_src, free_dst))))))
    return Cover(cover.graph, cover.sizes, tuple(entries))


def _forward_maps(cover: Cover) -> list[list[tuple[int, dict[int, int]]]]:
    """For each vertex v, the constraints arriving from assigned neighbors
    u < v, as (u, map from u-indices to forbidden v-indices)."""
    incoming: list[list[tuple[int, dict[int, int]]]] = [[] for _ in range(cover.graph.n)]
    for u, v, pairs in cover.matchings:
        incoming[v].append((u, dict(pairs)))
    return incoming


def find_transversal(cover: Cover) -> tuple[int, ...] | None:
    """One index choice per vertex with no matched pair selected, or None
    after exhausting the search."""
    n = cover.graph.n
    if n == 0:
        return ()
    if any(s == 0 for s in cover.sizes):
        return None
    incoming = _forward_maps(cover)
    choice = [0] * n

    def rec(v: int) -> bool:
        if v == n:
            return True
        forbidden = 0
        for u, mapping in incoming[v]:
            j = mapping.get(choice[u])
            if j is not None:
                forbidden |= 1 << j
        for i in range(cover.sizes[v]):
            if not forbidden >> i & 1:
                choice[v] = i
                if rec(v + 1):
                    return True
        return False

    if not rec(0):
        return None
    return tuple(choice)


def count_transversals(cover: Cover) -> int:
    """Exact number of transversals (no early exit)."""
    n = cover.graph.n
    if n == 0:
        return 1
    incoming = _forward_maps(cover)
    choice = [0] * n

    def rec(v: int) -> int:
        if v == n:
            return 1
        forbidden = 0
        for u, mapping in incoming[v]:
            j = mapping.get(choice[u])
            if j is not None:
                forbidden |= 1 << j
        total = 0
        for i in range(cover.sizes[v]):
            if not forbidden >> i & 1:
                choice[v] = i
                total += rec(v + 1)
        return total

    return rec(0)


def is_bad(cover: Cover) -> bool:
    """A cover is bad when it admits no transversal."""
    return find_transversal(cover) is None


def canonical_labeling(cover: Cover) -> tuple[tuple[int, ...], ...] | None:
    """Per-vertex bijections of list indices to ``0..k-1`` under which
    matched means equal labels, or None when no such labeling exists.

    Requires all lists of one size and all matchings perfect (otherwise
    None); labels are propagated along a spanning tree of each host
    component and every remaining edge is checked.
    """
    g = cover.graph
    if g.n == 0:
        return ()
    if not cover.is_uniform():
        return None
    k = cover.fold
    if any(len(pairs) != k for _, _, pairs in cover.matchings):
        return None
    forward = {(u, v): dict(pairs) for u, v, pairs in cover.matchings}
    neighbors_map: dict[int, list[int]] = {v: sorted(g.adj[v]) for v in range(g.n)}
    labels: list[tuple[int, ...] | None] = [None] * g.n
    for comp in connected_components(g):
        root = comp[0]
        labels[root] = tuple(range(k))
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in neighbors_map[u]:
                if labels[w] is not None:
                    continue
                if (u, w) in forward:
                    mapping = forward[(u, w)]
                    lw = [0] * k
                    for i, j in mapping.items():
                        lw[j] = labels[u][i]
                else:
                    mapping = forward[(w, u)]
                    lw = [0] * k
                    for i, j in mapping.items():
                        lw[i] = labels[u][j]
                labels[w] = tuple(lw)
                queue.append(w)
    for u, v, pairs in cover.matchings:
        for i, j in pairs:
            if labels[u][i] != labels[v][j]:
                return None
    return tuple(labels)  # type: ignore[arg-type]


def relabel_cover(cover: Cover, relabelings) -> Cover:
    """Apply per-vertex index bijections: ``relabelings[v][i]`` is the new
    index of old index i.  Preserves transversal counts, badness and
    canonicity."""
    entries = []
    for u, v, pairs in cover.matchings:
        entries.append(
            (u, v, tuple(sorted((relabelings[u][i], relabelings[v][j]) for i, j in pairs)))
        )
    return Cover(cover.graph, cover.sizes, tuple(entries))


def normalize_cover(cover: Cover, tree: list[tuple[int, int]] | None = None) -> Cover:
    """Relabel list indices so every spanning-tree matching is the identity.

    Requires a full cover on a connected host.  The result is
    relabel-equivalent to the input.
    """
    if not is_full(cover):
        raise CoverError("normalize_cover requires a full cover")
    g = cover.graph
    if tree is None:
        tree = spanning_tree(g)
    k = cover.fold
    forward = {(u, v): dict(pairs) for u, v, pairs in cover.matchings}
    sigma: list[tuple[int, ...] | None] = [None] * g.n
    if g.n:
        sigma[0] = tuple(range(k))
    for parent, child in tree:
        if (parent, child) in forward:
            mapping = forward[(parent, child)]
        else:
            mapping = {j: i for i, j in forward[(child, parent)].items()}
        # force the tree matching to identity: sigma_child(m(i)) = sigma_parent(i)
        s = [0] * k
        for i, j in mapping.items():
            s[j] = sigma[parent][i]
        sigma[child] = tuple(s)
    return relabel_cover(cover, sigma)


# ---------------------------------------------------------------------------
# Gauge-fixed full-cover enumeration and scans
# ---------------------------------------------------------------------------


def _gauge_edges(g: Graph) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    tree = spanning_tree(g)
    in_tree = {frozenset(e) for e in tree}
    nontree = [e for e in g.edges() if frozenset(e) not in in_tree]
    return tree, nontree


def _gauge_cover(
    g: Graph,
    k: int,
    tree: list[tuple[int, int]],
    nontree: list[tuple[int, int]],
    perms: list[tuple[int, ...]],
    combo: tuple[int, ...],
) -> Cover:
    identity = tuple((i, i) for i in range(k))
    entries = {}
    for u, v in tree:
        entries[(min(u, v), max(u, v))] = identity
    for (u, v), p in zip(nontree, combo):
        entries[(u, v)] = tuple((i, perms[p][i]) for i in range(k))
    return Cover(
        g,
        (k,) * g.n,
        tuple((u, v, tuple(sorted(entries[(u, v)]))) for u, v in g.edges()),
    )


def enumerate_full_covers(
    g: Graph, k: int, limits: SearchLimits | None = None
) -> Iterator[Cover]:
    """All gauge-fixed full k-fold covers, in lexicographic permutation order
    over the sorted non-tree edges (last edge varies fastest).  Every full
    k-fold cover of g is relabel-equivalent to exactly one emitted cover.
    Raises :class:`BudgetExceeded` as an explicit truncation signal."""
    if k < 1:
        raise CoverError(f"enumerate_full_covers needs k >= 1, got {k}")
    tree, nontree = _gauge_edges(g)
    perms = list(permutations(range(k)))
    budget = (limits or SearchLimits()).start()
    for combo in product(range(len(perms)), repeat=len(nontree)):
        budget.spend()
        yield _gauge_cover(g, k, tree, nontree, perms, combo)


class _GaugeScan:
    """Survivor-set DFS over gauge-fixed full k-fold covers.

    The state at depth d is the set of transversals compatible with the
    permutations chosen on the first d non-tree edges, stored as a bitset
    over the transversals of the tree-only cover.  Choosing a permutation can
    only shrink the set, so a subtree can be dismissed wholesale once some
    transversal is guaranteed to survive every completion: the number of
    survivors each remaining edge can still remove is at most the best
    assignment-sum of its pair-count matrix, and if the sum of those bounds
    is below the current survivor count, every completion stays colorable.

    Work is accounted per cover decided; subtrees dismissed by the bound are
    charged in full.
    """

    def __init__(self, g: Graph, k: int, budget: Budget):
        self.g = g
        self.k = k
        self.budget = budget
        self.tree, self.nontree = _gauge_edges(g)
        self.perms = list(permutations(range(k)))
        self.nperm = len(self.perms)
        self.depth_total = len(self.nontree)
        transversals = self._tree_transversals()
        self.full_mask = (1 << len(transversals)) - 1
        self.kill = self._kill_masks(transversals)

    def _tree_transversals(self) -> list[tuple[int, ...]]:
        n, k = self.g.n, self.k
        lower: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.tree:
            lower[max(u, v)].append(min(u, v))
        out: list[tuple[int, ...]] = []
        choice = [0] * n

        def rec(v: int) -> None:
            if v == n:
                out.append(tuple(choice))
                return
            for i in range(k):
                if all(choice[u] != i for u in lower[v]):
                    choice[v] = i
                    rec(v + 1)

        if k > 0 or n == 0:
            rec(0)
        return out

    def _kill_masks(self, transversals: list[tuple[int, ...]]) -> list[list[int]]:
        kill = []
        for u, v in self.nontree:
            by_pair: dict[tuple[int, int], int] = {}
            for idx, t in enumerate(transversals):
                key = (t[u], t[v])
                by_pair[key] = by_pair.get(key, 0) | (1 << idx)
            per_perm = []
            for p in self.perms:
                mask = 0
                for a in range(self.k):
                    mask |= by_pair.get((a, p[a]), 0)
                per_perm.append(mask)
            kill.append(per_perm)
        return kill

    def _subtree_size(self, depth: int) -> int:
        return self.nperm ** (self.depth_total - depth)

    def _no_completion_is_bad(self, depth: int, survivors: int) -> bool:
        size = survivors.bit_count()
        bound = 0
        for e in range(depth, self.depth_total):
            best = 0
            for mask in self.kill[e]:
                c = (survivors & mask).bit_count()
                if c > best:
                    best = c
            bound += best
            if bound >= size:
                return False
        return bound < size

    def cover_at(self, combo: tuple[int, ...]) -> Cover:
        return _gauge_cover(self.g, self.k, self.tree, self.nontree, self.perms, combo)

    # -- find a bad cover -------------------------------------------------

    def find_bad(self, skip_canonical: bool, first_perm: int | None = None):
        """Lexicographically first bad gauge-fixed cover (skipping the
        all-identity one when ``skip_canonical``), or None after deciding the
        whole space.  Returns (combo or None)."""

        def dfs(depth: int, survivors: int, prefix: tuple[int, ...], identity: bool):
            if survivors == 0:
                count = self._subtree_size(depth)
                rest = self.depth_total - depth
                if skip_canonical and identity:
                    if count == 1:
                        self.budget.spend(1)
                        return None
                    # lexicographically first non-identity completion
                    return prefix + (0,) * (rest - 1) + (1,)
                return prefix + (0,) * rest
            if depth == self.depth_total:
                self.budget.spend(1)
                return None  # survivors nonempty: colorable
            if self._no_completion_is_bad(depth, survivors):
                self.budget.spend(self._subtree_size(depth))
                return None
            for p in range(self.nperm):
                found = dfs(
                    depth + 1,
                    survivors & ~self.kill[depth][p],
                    prefix + (p,),
                    identity and p == 0,
                )
                if found is not None:
                    return found
            return None

        if first_perm is None:
            return dfs(0, self.full_mask, (), True)
        if self.depth_total == 0:
            raise CoverError("no non-tree edge to partition on")
        return dfs(
            1,
            self.full_mask & ~self.kill[0][first_perm],
            (first_perm,),
            first_perm == 0,
        )

    # -- minimize the transversal count -----------------------------------

    def min_transversals(self):
        """(min count, lexicographically first minimizing combo).  Progress is
        kept on ``self.best_value``/``self.best_combo`` so callers can report
        a best-so-far upper bound when the budget trips."""
        self.best_value: int | None = None
        self.best_combo: tuple[int, ...] | None = None

        def dfs(depth: int, survivors: int, prefix: tuple[int, ...]):
            if survivors == 0:
                self.budget.spend(self._subtree_size(depth))
                if self.best_value is None or self.best_value > 0:
                    self.best_value = 0
                    self.best_combo = prefix + (0,) * (self.depth_total - depth)
                return
            if depth == self.depth_total:
                self.budget.spend(1)
                count = survivors.bit_count()
                if self.best_value is None or count < self.best_value:
                    self.best_value = count
                    self.best_combo = prefix
                return
            if self.best_value is not None:
                size = survivors.bit_count()
                bound = 0
                for e in range(depth, self.depth_total):
                    most = 0
                    for mask in self.kill[e]:
                        c = (survivors & mask).bit_count()
                        if c > most:
                            most = c
                    bound += most
                if size - bound >= self.best_value:
                    self.budget.spend(self._subtree_size(depth))
                    return
            for p in range(self.nperm):
                dfs(depth + 1, survivors & ~self.kill[depth][p], prefix + (p,))

        dfs(0, self.full_mask, ())
        return self.best_value, self.best_combo


@dataclass(frozen=True)
class RobustVerdict:
    """Outcome of the robust-criticality scan.

    ``witness`` is a deletion witness (edge/vertex) for ``not_critical`` or a
    verified bad non-canonical full cover for
    ``noncanonical_bad_cover_found``.  ``covers_scanned`` counts gauge-fixed
    covers decided (all of them on a completed scan).
    """

    decision: str
    k: int
    witness: Cover | tuple[int, int] | int | None
    covers_scanned: int
    criticality: ColoringVerdict | None = None


def _scan_partition(payload):
    """Worker for parallel robust scans: one first-edge permutation each."""
    n, edges, k, first_perm, max_nodes, skip_canonical = payload
    from .graphs import build_graph

    g = build_graph(n, edges)
    budget = SearchLimits(max_nodes=max_nodes).start()
    scan = _GaugeScan(g, k, budget)
    try:
        combo = scan.find_bad(skip_canonical, first_perm=first_perm)
    except BudgetExceeded as exc:
        return ("budget", exc.spent, None)
    return ("done", budget.spent, combo)


def robust_criticality_verdict(
    g: Graph,
    limits: SearchLimits | None = None,
    workers: int = 1,
    deterministic: bool = True,
) -> RobustVerdict:
    """Decide robust criticality by scanning all gauge-fixed full covers at
    one below the chromatic number.

    Completing a partial cover only removes transversals, so a bad cover of a
    critical graph always has a bad full extension and scanning full covers
    is enough; gauge fixing makes "canonical" synonymous with "all non-tree
    permutations are the identity".
    """
    if g.n < 1:
        raise GraphError("robust criticality needs at least one vertex")
    spanning_tree(g)  # connectivity precondition
    verdict = classify_criticality(g)
    k = verdict.chromatic_number
    if not verdict.is_critical:
        return RobustVerdict(NOT_CRITICAL, k, verdict.witness, 0, verdict)
    limits = limits or SearchLimits()
    budget = limits.start()
    scan = _GaugeScan(g, k - 1, budget)
    try:
        if workers > 1 and not deterministic and scan.depth_total >= 1:
            combo, scanned = _parallel_find_bad(g, k - 1, scan, limits, workers)
        else:
            combo = scan.find_bad(skip_canonical=True)
            scanned = budget.spent
    except BudgetExceeded as exc:
        return RobustVerdict(UNKNOWN, k, None, exc.spent, verdict)
    if combo is None:
        return RobustVerdict(ROBUSTLY_CRITICAL, k, None, scanned, verdict)
    witness = scan.cover_at(combo)
    if find_transversal(witness) is not None or canonical_labeling(witness) is not None:
        raise CoverError("internal error: witness failed re-verification")
    return RobustVerdict(NONCANONICAL_BAD_COVER_FOUND, k, witness, scanned, verdict)


def _parallel_find_bad(g, k, scan, limits, workers):
    """Partition the scan by the first non-tree edge's permutation.  Each
    partition gets the node budget; the first witness wins (early exit)."""
    payloads = [
        (g.n, g.edges(), k, p, limits.max_nodes, True) for p in range(scan.nperm)
    ]
    scanned = 0
    witness_combo = None
    budget_tripped = False
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(_scan_partition, payload) for payload in payloads}
        try:
            while futures:
                done, futures = wait(futures, return_when=FIRST_COMPLETED)
                for fut in done:
                    status, spent, combo = fut.result()
                    scanned += spent
                    if status == "budget":
                        budget_tripped = True
                    elif combo is not None and witness_combo is None:
                        witness_combo = combo
                if witness_combo is not None:
                    break
        finally:
            for fut in futures:
                fut.cancel()
    if witness_combo is None and budget_tripped:
        raise BudgetExceeded("partition budget exhausted", spent=scanned)
    return witness_combo, scanned


def dp_chromatic_number(g: Graph, limits: SearchLimits | None = None) -> int:
    """Least k with every full k-fold cover colorable (equivalently, every
    k-fold cover: completing a cover never adds transversals).

    Once k exceeds the degeneracy, every cover is colorable by greedy choice
    along a peeling order (each earlier neighbor forbids at most one index),
    so scanning is only needed below that.  On budget exhaustion raises
    :class:`BudgetExceeded` with ``lower_bound`` set to the best proven bound.
    """
    if g.n == 0:
        return 0
    spanning_tree(g)
    greedy_cap = degeneracy(g) + 1
    k = chromatic_number(g)
    while k < greedy_cap:
        budget = (limits or SearchLimits()).start()
        scan = _GaugeScan(g, k, budget)
        try:
            combo = scan.find_bad(skip_canonical=False)
        except BudgetExceeded as exc:
            raise BudgetExceeded(
                f"dp_chromatic_number undecided at k={k}",
                spent=exc.spent,
                lower_bound=k,
            ) from exc
        if combo is None:
            return k
        k += 1
    return k


@dataclass(frozen=True)
class PdpResult:
    value: int
    cover: Cover
    covers_scanned: int


def pdp_value(g: Graph, k: int, limits: SearchLimits | None = None) -> PdpResult:
    """Minimum transversal count over all gauge-fixed full k-fold covers,
    with a minimizing cover (relabeling preserves counts and completing a
    cover never increases them, so this is the minimum over all k-fold
    covers).  Ties resolve to the lexicographically first cover, so the
    canonical cover is returned whenever it attains the minimum."""
    if g.n < 1:
        raise GraphError("pdp_value needs at least one vertex")
    if k < 1:
        raise CoverError(f"pdp_value needs k >= 1, got {k}")
    spanning_tree(g)
    budget = (limits or SearchLimits()).start()
    scan = _GaugeScan(g, k, budget)
    try:
        value, combo = scan.min_transversals()
    except BudgetExceeded as exc:
        raise BudgetExceeded(
            "pdp_value undecided",
            spent=exc.spent,
            best_upper_bound=getattr(scan, "best_value", None),
        ) from exc
    return PdpResult(value, scan.cover_at(combo), budget.spent)
