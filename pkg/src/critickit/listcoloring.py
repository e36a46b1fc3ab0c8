"""List assignments, choosability, and strong-criticality decisions.

Bad-assignment search never picks colors from an unbounded universe: an
assignment is identified, up to renaming of colors, with the multiset of its
color support sets (one vertex subset per color).  Enumerating those block
systems in a canonical order removes the renaming symmetry exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .coloring import ColoringVerdict, chromatic_number, classify_criticality
from .errors import AssignmentError, BudgetExceeded, GraphError
from .graphs import Graph
from .limits import SearchLimits

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex finite color sets; color ids are non-negative integers."""

    lists: tuple[frozenset[int], ...]

    @classmethod
    def uniform(cls, n: int, colors) -> "ListAssignment":
        return cls(tuple(frozenset(colors) for _ in range(n)))

    @classmethod
    def of(cls, lists) -> "ListAssignment":
        return cls(tuple(frozenset(l) for l in lists))

    @property
    def n(self) -> int:
        return len(self.lists)


def is_constant_assignment(assignment: ListAssignment) -> bool:
    """True iff all lists are equal as sets (vacuously true when empty)."""
    lists = assignment.lists
    return all(l == lists[0] for l in lists)


def find_list_coloring(g: Graph, assignment: ListAssignment) -> tuple[int, ...] | None:
    """A proper coloring choosing each vertex's color from its list, or None."""
    if assignment.n != g.n:
        raise AssignmentError(
            f"assignment covers {assignment.n} vertices, graph has {g.n}"
        )
    order = sorted(range(g.n), key=lambda v: (len(assignment.lists[v]), v))
    color: dict[int, int] = {}

    def rec(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for c in sorted(assignment.lists[v]):
            if all(color.get(u) != c for u in g.adj[v]):
                color[v] = c
                if rec(i + 1):
                    return True
                del color[v]
        return False

    if not rec(0):
        return None
    return tuple(color[v] for v in range(g.n))


def is_list_colorable(g: Graph, assignment: ListAssignment) -> bool:
    return find_list_coloring(g, assignment) is not None


@dataclass(frozen=True)
class BlockSystem:
    """A multiset of vertex subsets (one block per color), as sorted bitmasks.

    ``blocks[i]`` has bit v set iff vertex v carries color i.  Sorting the
    masks non-decreasingly makes the encoding canonical: two assignments
    related by a color bijection yield the same system.
    """

    n: int
    multiplicity: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.n) - 1
        for i, b in enumerate(self.blocks):
            if b == 0:
                raise AssignmentError(f"block {i} is empty")
            if b & ~full:
                raise AssignmentError(f"block {i} uses vertices outside 0..{self.n - 1}")
        if list(self.blocks) != sorted(self.blocks):
            raise AssignmentError("blocks must be sorted non-decreasingly")


def assignment_from_blocks(system: BlockSystem) -> ListAssignment:
    """Read the assignment off a block system: block i gives color i to its
    vertices.  Rejects systems whose coverage is not exactly the multiplicity,
    naming the first offending vertex."""
    lists = []
    for v in range(system.n):
        lst = frozenset(i for i, b in enumerate(system.blocks) if b >> v & 1)
        if len(lst) != system.multiplicity:
            raise AssignmentError(
                f"vertex {v} lies in {len(lst)} blocks, expected {system.multiplicity}"
            )
        lists.append(lst)
    return ListAssignment(tuple(lists))


def block_systems(n: int, k: int, limits: SearchLimits | None = None) -> Iterator[BlockSystem]:
    """All block systems with multiplicity k on n vertices, in canonical
    (lexicographic, non-decreasing mask) order.  Unpruned; intended for small
    instances and cross-checks."""
    budget = (limits or SearchLimits()).start()
    rem = [k] * n
    blocks: list[int] = []

    def positives() -> int:
        mask = 0
        for v in range(n):
            if rem[v]:
                mask |= 1 << v
        return mask

    def submasks_ascending(pos: int, lo: int) -> list[int]:
        out = []
        s = pos
        while True:
            if s >= lo and s > 0:
                out.append(s)
            if s == 0:
                break
            s = (s - 1) & pos
        out.reverse()
        return out

    def rec(min_mask: int) -> Iterator[BlockSystem]:
        budget.spend()
        pos = positives()
        if pos == 0:
            yield BlockSystem(n, k, tuple(blocks))
            return
        if pos < min_mask:
            return
        for mask in submasks_ascending(pos, min_mask):
            for v in range(n):
                if mask >> v & 1:
                    rem[v] -= 1
            blocks.append(mask)
            yield from rec(mask)
            blocks.pop()
            for v in range(n):
                if mask >> v & 1:
                    rem[v] += 1

    if n == 0 or k == 0:
        if n >= 0:
            yield BlockSystem(n, k, ())
        return
    yield from rec(1)


class _BadAssignmentSearch:
    """Exhaustive-up-to-renaming search for a bad non-constant k-assignment.

    Blocks are placed in non-decreasing mask order.  A branch is abandoned as
    soon as every completion of the current partial system is colorable,
    which is certified as follows: pick a proper partial coloring that colors
    each vertex either with one of its current colors or defers it, where the
    deferred set D must be peelable (every nonempty subset of D has a vertex
    with fewer neighbors inside D than pending blocks).  Any completion hands
    each deferred vertex one fresh color per pending block, fresh colors
    never clash with current ones, and peelability lets a reverse-peel greedy
    pick pairwise-compatible fresh colors inside D.
    """

    def __init__(self, g: Graph, k: int, limits: SearchLimits | None):
        self.g = g
        self.n = g.n
        self.k = k
        self.adj = [0] * g.n
        for u, v in g.edges():
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
        self.full = (1 << g.n) - 1
        self.budget = (limits or SearchLimits()).start()
        self.rem = [k] * g.n
        self.blocks: list[int] = []
        self.systems_checked = 0

    def _peelable(self, d_mask: int) -> bool:
        while d_mask:
            for v in range(self.n):
                if d_mask >> v & 1 and (self.adj[v] & d_mask).bit_count() < self.rem[v]:
                    d_mask &= ~(1 << v)
                    break
            else:
                return False
        return True

    def _all_completions_colorable(self, lists: list[tuple[int, ...]]) -> bool:
        order = sorted(
            range(self.n), key=lambda v: (len(lists[v]) + (self.rem[v] > 0), v)
        )
        color: list[int | None] = [None] * self.n

        def rec(i: int, deferred: int) -> bool:
            if i == self.n:
                return self._peelable(deferred)
            v = order[i]
            if self.rem[v] > 0 and rec(i + 1, deferred | (1 << v)):
                return True
            av = self.adj[v]
            for c in lists[v]:
                ok = True
                rest = av
                while rest:
                    u = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    if color[u] == c:
                        ok = False
                        break
                if ok:
                    color[v] = c
                    if rec(i + 1, deferred):
                        color[v] = None
                        return True
                    color[v] = None
            return False

        return rec(0, 0)

    def _colorable(self, lists: list[tuple[int, ...]]) -> bool:
        return is_list_colorable(
            self.g, ListAssignment(tuple(frozenset(l) for l in lists))
        )

    def _submasks_ascending(self, pos: int, lo: int) -> list[int]:
        out = []
        s = pos
        while True:
            if s >= lo and s > 0:
                out.append(s)
            if s == 0:
                break
            s = (s - 1) & pos
        out.reverse()
        return out

    def run(self) -> BlockSystem | None:
        if self.n == 0 or self.k == 0:
            return None  # the only system is empty, hence constant
        return self._rec(1, [()] * self.n)

    def _rec(self, min_mask: int, lists: list[tuple[int, ...]]) -> BlockSystem | None:
        self.budget.spend()
        pos = 0
        for v in range(self.n):
            if self.rem[v]:
                pos |= 1 << v
        if pos == 0:
            self.systems_checked += 1
            if all(b == self.full for b in self.blocks):
                return None  # the constant assignment, never a witness
            if not self._colorable(lists):
                return BlockSystem(self.n, self.k, tuple(self.blocks))
            return None
        if pos < min_mask:
            return None  # no admissible block can cover what remains
        if self._all_completions_colorable(lists):
            return None
        index = len(self.blocks)
        for mask in self._submasks_ascending(pos, min_mask):
            for v in range(self.n):
                if mask >> v & 1:
                    self.rem[v] -= 1
            self.blocks.append(mask)
            found = self._rec(
                mask,
                [lists[v] + (index,) if mask >> v & 1 else lists[v] for v in range(self.n)],
            )
            self.blocks.pop()
            for v in range(self.n):
                if mask >> v & 1:
                    self.rem[v] += 1
            if found is not None:
                return found
        return None


def find_bad_nonconstant_assignment(
    g: Graph, k: int, limits: SearchLimits | None = None
) -> ListAssignment | None:
    """A non-constant k-assignment admitting no proper coloring, or None if
    none exists.  The search is exhaustive up to color renaming; raises
    :class:`~critickit.errors.BudgetExceeded` when limits trip, which is an
    explicit unknown, never a silent "none"."""
    if k < 0:
        raise AssignmentError(f"k must be non-negative, got {k}")
    system = _BadAssignmentSearch(g, k, limits).run()
    if system is None:
        return None
    return assignment_from_blocks(system)


def list_chromatic_number(g: Graph, limits: SearchLimits | None = None) -> int:
    """Least k such that no bad k-assignment exists.

    Starts at the chromatic number (below it the constant assignment is
    already bad) and grows k until the block-system search finds nothing.
    """
    if g.n == 0:
        return 0
    k = chromatic_number(g)
    while find_bad_nonconstant_assignment(g, k, limits) is not None:
        k += 1
    return k


@dataclass(frozen=True)
class StrongVerdict:
    """Decision for strong criticality / strong chromatic-choosability.

    ``witness``: a deletion witness (edge tuple or vertex id) when the
    criticality part fails, or a bad non-constant assignment when the list
    part fails; None on yes.
    """

    decision: str
    k: int
    mode: str
    witness: tuple[int, int] | int | ListAssignment | None
    criticality: ColoringVerdict


def strong_criticality_verdict(
    g: Graph, mode: str = "critical", limits: SearchLimits | None = None
) -> StrongVerdict:
    """Is every bad (chi-1)-assignment constant, on top of the criticality
    requirement selected by ``mode`` ("critical" or "vertex_critical")?
    Budget exhaustion yields decision "unknown"."""
    if mode not in ("critical", "vertex_critical"):
        raise GraphError(f"unknown mode {mode!r}")
    if g.n < 1:
        raise GraphError("strong criticality needs at least one vertex")
    verdict = classify_criticality(g)
    k = verdict.chromatic_number
    ok = verdict.is_critical if mode == "critical" else verdict.is_vertex_critical
    if not ok:
        return StrongVerdict(NO, k, mode, verdict.witness, verdict)
    try:
        bad = find_bad_nonconstant_assignment(g, k - 1, limits)
    except BudgetExceeded:
        return StrongVerdict(UNKNOWN, k, mode, None, verdict)
    if bad is not None:
        return StrongVerdict(NO, k, mode, bad, verdict)
    return StrongVerdict(YES, k, mode, None, verdict)
