"""Executable checks of the structural facts behind robust criticality, run
exhaustively (or by seeded sampling when too large) on concrete small graphs.

Each check returns a :class:`LemmaReport`; counterexample payloads carry
enough data to replay the violation through the cover and list modules.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .coloring import classify_criticality
from .covers import (
    NONCANONICAL_BAD_COVER_FOUND,
    ROBUSTLY_CRITICAL,
    UNKNOWN,
    Cover,
    canonical_labeling,
    enumerate_full_covers,
    find_transversal,
    robust_criticality_verdict,
)
from .errors import BudgetExceeded, DisconnectedError, GraphError
from .graphs import Graph, clique, encode_graph6, induced_subgraph, join
from .jsonio import assignment_to_doc, cover_to_doc
from .limits import SearchLimits
from .listcoloring import UNKNOWN as LIST_UNKNOWN
from .listcoloring import YES, ListAssignment, strong_criticality_verdict

ALL_PASS = "all_pass"
COUNTEREXAMPLE = "counterexample"
SKIPPED_PRECONDITION = "skipped_precondition"
TRUNCATED = "truncated"

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    graph6: str
    checked: int
    outcome: str
    mode: str
    counterexample: dict | None = None
    detail: str | None = None

    def to_doc(self) -> dict:
        return {
            "schema": "critickit/lemma-report/1",
            "lemma": self.lemma,
            "graph6": self.graph6,
            "checked": self.checked,
            "outcome": self.outcome,
            "mode": self.mode,
            "counterexample": self.counterexample,
            "detail": self.detail,
        }


@lru_cache(maxsize=None)
def partial_injections(a: int, b: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All partial injections from indices 0..a-1 into 0..b-1, as sorted pair
    tuples, ordered ascending by their pair set."""
    out = []
    for size in range(min(a, b) + 1):
        for sources in combinations(range(a), size):
            for targets in permutations(range(b), size):
                out.append(tuple(zip(sources, targets)))
    return tuple(sorted(out))


def _transversal_exists_raw(n: int, sizes, incoming) -> bool:
    """Backtracking transversal existence on raw structures; ``incoming[v]``
    lists (u, mapping) constraints with u < v."""
    choice = [0] * n

    def rec(v: int) -> bool:
        if v == n:
            return True
        forbidden = 0
        for u, mapping in incoming[v]:
            j = mapping.get(choice[u])
            if j is not None:
                forbidden |= 1 << j
        for i in range(sizes[v]):
            if not forbidden >> i & 1:
                choice[v] = i
                if rec(v + 1):
                    return True
        return False

    return rec(0)


def _seed(*parts) -> int:
    return zlib.crc32(":".join(str(p) for p in parts).encode())


class _ProfileCovers:
    """Iterate covers with a fixed size profile as per-edge injection picks."""

    def __init__(self, g: Graph, sizes):
        self.g = g
        self.sizes = tuple(sizes)
        self.edges = g.edges()
        self.options = [
            [dict(pairs) for pairs in partial_injections(self.sizes[u], self.sizes[v])]
            for u, v in self.edges
        ]
        self.total = 1
        for opts in self.options:
            self.total *= len(opts)

    def incoming_for(self, picks) -> list[list[tuple[int, dict]]]:
        incoming: list[list[tuple[int, dict]]] = [[] for _ in range(self.g.n)]
        for (u, v), opts, pick in zip(self.edges, self.options, picks):
            incoming[v].append((u, opts[pick]))
        return incoming

    def cover_at(self, picks) -> Cover:
        entries = tuple(
            (u, v, tuple(sorted(self.options[e][picks[e]].items())))
            for e, (u, v) in enumerate(self.edges)
        )
        return Cover(self.g, self.sizes, entries)

    def iter_picks(self, limits: SearchLimits, seed_parts) -> tuple[str, int, object]:
        """Choose exhaustive or sampled iteration: estimated search nodes are
        covers times (n+1); sampling is seeded and draws with replacement."""
        estimated = self.total * (self.g.n + 1)
        if estimated <= limits.max_nodes:
            return EXHAUSTIVE, self.total, product(
                *(range(len(opts)) for opts in self.options)
            )
        count = max(1, limits.max_nodes // (self.g.n + 1))
        rng = random.Random(_seed(*seed_parts))

        def sample():
            for _ in range(count):
                yield tuple(rng.randrange(len(opts)) for opts in self.options)

        return f"{SAMPLED}:{count}", count, sample()


def check_excess_lemma(
    g: Graph, sizes, limits: SearchLimits | None = None
) -> LemmaReport:
    """On a robustly critical graph, a bad cover with every list of size at
    least k-1 must be a canonical (k-1)-fold cover; in particular no bad
    cover exists once some list is strictly larger."""
    limits = limits or SearchLimits()
    word = encode_graph6(g)
    sizes = tuple(sizes)
    if len(sizes) != g.n:
        raise GraphError(f"size profile has {len(sizes)} entries for {g.n} vertices")
    try:
        rv = robust_criticality_verdict(g, limits)
    except DisconnectedError:
        return LemmaReport(
            "excess", word, 0, SKIPPED_PRECONDITION, "-", detail="graph is disconnected"
        )
    if rv.decision != ROBUSTLY_CRITICAL:
        return LemmaReport(
            "excess", word, 0, SKIPPED_PRECONDITION, "-",
            detail=f"graph not verified robustly critical (got {rv.decision})",
        )
    k = rv.k
    if any(s < k - 1 for s in sizes):
        return LemmaReport(
            "excess", word, 0, SKIPPED_PRECONDITION, "-",
            detail=f"profile {sizes} has a list smaller than k-1={k - 1}",
        )
    profile = _ProfileCovers(g, sizes)
    mode, _, picks_iter = profile.iter_picks(limits, ("excess", word, sizes, k))
    checked = 0
    for picks in picks_iter:
        checked += 1
        incoming = profile.incoming_for(picks)
        if _transversal_exists_raw(g.n, sizes, incoming):
            continue
        cover = profile.cover_at(picks)
        if any(s != k - 1 for s in sizes) or canonical_labeling(cover) is None:
            return LemmaReport(
                "excess", word, checked, COUNTEREXAMPLE, mode,
                counterexample={"cover": cover_to_doc(cover)},
                detail="bad cover that is not a canonical (k-1)-fold cover",
            )
    return LemmaReport("excess", word, checked, ALL_PASS, mode)


def _full_extensions(cover: Cover):
    """All full covers extending a uniform partial cover, pairing the
    unmatched indices in every injective way."""
    k = cover.fold
    per_edge = []
    for u, v, pairs in cover.matchings:
        free_src = sorted(set(range(k)) - {i for i, _ in pairs})
        free_dst = sorted(set(range(k)) - {j for _, j in pairs})
        per_edge.append(
            [
                tuple(sorted(pairs + tuple(zip(free_src, perm))))
                for perm in permutations(free_dst)
            ]
        )
    for combo in product(*per_edge):
        yield Cover(
            cover.graph,
            cover.sizes,
            tuple(
                (u, v, pairs)
                for (u, v, _), pairs in zip(cover.matchings, combo)
            ),
        )


def check_full_extension_lemma(
    g: Graph, limits: SearchLimits | None = None
) -> LemmaReport:
    """On a critical graph, a bad non-full (k-1)-fold cover has no canonical
    full extension."""
    limits = limits or SearchLimits()
    word = encode_graph6(g)
    cv = classify_criticality(g)
    if not cv.is_critical:
        return LemmaReport(
            "full-extension", word, 0, SKIPPED_PRECONDITION, "-",
            detail="graph is not critical",
        )
    k = cv.chromatic_number
    fold = k - 1
    sizes = (fold,) * g.n
    profile = _ProfileCovers(g, sizes)
    mode, _, picks_iter = profile.iter_picks(limits, ("full-extension", word, k))
    checked = 0
    for picks in picks_iter:
        checked += 1
        if all(
            len(profile.options[e][p]) == fold for e, p in enumerate(picks)
        ):
            continue  # full covers are outside the lemma's hypothesis
        incoming = profile.incoming_for(picks)
        if _transversal_exists_raw(g.n, sizes, incoming):
            continue
        cover = profile.cover_at(picks)
        for extension in _full_extensions(cover):
            checked += 1
            if canonical_labeling(extension) is not None:
                return LemmaReport(
                    "full-extension", word, checked, COUNTEREXAMPLE, mode,
                    counterexample={
                        "cover": cover_to_doc(cover),
                        "canonical_extension": cover_to_doc(extension),
                    },
                    detail="bad non-full cover with a canonical full extension",
                )
    return LemmaReport("full-extension", word, checked, ALL_PASS, mode)


def check_pair_reduction(
    g: Graph, x: int, y: int, limits: SearchLimits | None = None
) -> LemmaReport:
    """If two non-adjacent vertices with at most one common neighbor can be
    removed from a critical graph leaving a robustly critical one, the graph
    itself is robustly critical."""
    limits = limits or SearchLimits()
    word = encode_graph6(g)

    def skipped(reason: str) -> LemmaReport:
        return LemmaReport("pair", word, 0, SKIPPED_PRECONDITION, "-", detail=reason)

    if not (0 <= x < g.n and 0 <= y < g.n) or x == y:
        return skipped(f"need two distinct vertices, got x={x}, y={y}")
    if g.has_edge(x, y):
        return skipped(f"vertices {x} and {y} are adjacent")
    common = g.adj[x] & g.adj[y]
    if len(common) > 1:
        return skipped(f"vertices {x} and {y} have {len(common)} common neighbors")
    if not classify_criticality(g).is_critical:
        return skipped("graph is not critical")
    reduced = induced_subgraph(g, set(range(g.n)) - {x, y})
    try:
        rv_reduced = robust_criticality_verdict(reduced, limits)
    except DisconnectedError:
        return skipped(f"graph minus {{{x}, {y}}} is disconnected")
    if rv_reduced.decision != ROBUSTLY_CRITICAL:
        return skipped(
            f"graph minus {{{x}, {y}}} is not verified robustly critical "
            f"(got {rv_reduced.decision})"
        )
    rv = robust_criticality_verdict(g, limits)
    if rv.decision == ROBUSTLY_CRITICAL:
        return LemmaReport("pair", word, rv.covers_scanned, ALL_PASS, EXHAUSTIVE)
    if rv.decision == UNKNOWN:
        return LemmaReport(
            "pair", word, rv.covers_scanned, TRUNCATED, EXHAUSTIVE,
            detail="budget exhausted during the full-cover scan",
        )
    return LemmaReport(
        "pair", word, rv.covers_scanned, COUNTEREXAMPLE, EXHAUSTIVE,
        counterexample={"cover": cover_to_doc(rv.witness)}
        if isinstance(rv.witness, Cover)
        else {"witness": str(rv.witness)},
        detail=f"expected robustly critical, got {rv.decision}",
    )


def _labeling_constraints(cover: Cover, members: list[int], fold: int):
    """Equal-label constraints between list indices of distinct members that
    share a matched neighbor color."""
    forward = {(u, v): dict(pairs) for u, v, pairs in cover.matchings}

    def edge_map(a: int, b: int) -> dict[int, int]:
        if (a, b) in forward:
            return forward[(a, b)]
        return {j: i for i, j in forward[(b, a)].items()}

    g = cover.graph
    constraints = []
    for xi in range(len(members)):
        for yi in range(xi + 1, len(members)):
            x, y = members[xi], members[yi]
            for w in sorted(g.adj[x] & g.adj[y]):
                mx = edge_map(x, w)
                my_inv = edge_map(w, y)
                for i in range(fold):
                    l = mx.get(i)
                    if l is None:
                        continue
                    j = my_inv.get(l)
                    if j is not None:
                        constraints.append((xi, i, yi, j))
    return constraints


def check_induction_lemma(
    g: Graph, independent_set, limits: SearchLimits | None = None
) -> LemmaReport:
    """If removing an independent set leaves a robustly (k-1)-critical graph,
    then every bad full (k-1)-fold cover admitting a compatible labeling of
    the set's lists is canonical."""
    limits = limits or SearchLimits()
    word = encode_graph6(g)
    members = sorted(set(independent_set))

    def skipped(reason: str) -> LemmaReport:
        return LemmaReport("induction", word, 0, SKIPPED_PRECONDITION, "-", detail=reason)

    if any(not 0 <= v < g.n for v in members):
        return skipped("independent set contains out-of-range vertices")
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if g.has_edge(u, v):
                return skipped(f"set is not independent: edge ({u}, {v})")
    rest = induced_subgraph(g, set(range(g.n)) - set(members))
    if rest.n == 0:
        return skipped("removing the set leaves no vertices")
    try:
        rv_rest = robust_criticality_verdict(rest, limits)
    except DisconnectedError:
        return skipped("graph minus the set is disconnected")
    if rv_rest.decision != ROBUSTLY_CRITICAL:
        return skipped(
            f"graph minus the set is not verified robustly critical "
            f"(got {rv_rest.decision})"
        )
    fold = rv_rest.k  # covers of g are scanned at (k-1) = fold
    if fold < 1:
        return skipped("reduced graph has chromatic number 0")
    checked = 0
    label_perms = list(permutations(range(fold)))
    try:
        for cover in enumerate_full_covers(g, fold, limits):
            checked += 1
            if find_transversal(cover) is not None:
                continue
            constraints = _labeling_constraints(cover, members, fold)
            is_canonical = canonical_labeling(cover) is not None
            for assignment in product(label_perms, repeat=len(members)):
                if any(
                    assignment[xi][i] != assignment[yi][j]
                    for xi, i, yi, j in constraints
                ):
                    continue
                checked += 1
                if not is_canonical:
                    return LemmaReport(
                        "induction", word, checked, COUNTEREXAMPLE, EXHAUSTIVE,
                        counterexample={
                            "cover": cover_to_doc(cover),
                            "labeling": {
                                str(v): list(assignment[xi])
                                for xi, v in enumerate(members)
                            },
                        },
                        detail="bad full cover with a compatible labeling is not canonical",
                    )
    except BudgetExceeded:
        return LemmaReport(
            "induction", word, checked, TRUNCATED, EXHAUSTIVE,
            detail="budget exhausted during cover enumeration",
        )
    return LemmaReport("induction", word, checked, ALL_PASS, EXHAUSTIVE)


def check_join_preserves(
    g: Graph, t: int, limits: SearchLimits | None = None
) -> LemmaReport:
    """Joining a robustly critical graph with a clique preserves robust
    criticality (and strong criticality)."""
    limits = limits or SearchLimits()
    if t < 1:
        raise GraphError(f"join size must be positive, got {t}")
    joined = join(g, clique(t))
    word = encode_graph6(joined)
    try:
        rv_g = robust_criticality_verdict(g, limits)
    except DisconnectedError:
        return LemmaReport(
            "join", word, 0, SKIPPED_PRECONDITION, "-", detail="base graph is disconnected"
        )
    if rv_g.decision != ROBUSTLY_CRITICAL:
        return LemmaReport(
            "join", word, 0, SKIPPED_PRECONDITION, "-",
            detail=f"base graph not verified robustly critical (got {rv_g.decision})",
        )
    rv = robust_criticality_verdict(joined, limits)
    if rv.decision == UNKNOWN:
        return LemmaReport(
            "join", word, rv.covers_scanned, TRUNCATED, EXHAUSTIVE,
            detail="budget exhausted scanning the join",
        )
    if rv.decision != ROBUSTLY_CRITICAL:
        return LemmaReport(
            "join", word, rv.covers_scanned, COUNTEREXAMPLE, EXHAUSTIVE,
            counterexample={"cover": cover_to_doc(rv.witness)}
            if isinstance(rv.witness, Cover)
            else {"witness": str(rv.witness)},
            detail=f"join verdict: {rv.decision}",
        )
    sv = strong_criticality_verdict(joined, "critical", limits)
    if sv.decision == LIST_UNKNOWN:
        return LemmaReport(
            "join", word, rv.covers_scanned, TRUNCATED, EXHAUSTIVE,
            detail="budget exhausted during the strong-criticality search",
        )
    if sv.decision != YES:
        payload = (
            {"assignment": assignment_to_doc(sv.witness)}
            if isinstance(sv.witness, ListAssignment)
            else {"witness": str(sv.witness)}
        )
        return LemmaReport(
            "join", word, rv.covers_scanned, COUNTEREXAMPLE, EXHAUSTIVE,
            counterexample=payload,
            detail=f"strong criticality verdict: {sv.decision}",
        )
    return LemmaReport("join", word, rv.covers_scanned, ALL_PASS, EXHAUSTIVE)
