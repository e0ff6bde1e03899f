"""Inexact detection of pattern edge sets inside a system edge set.

The detector looks for the largest level ``n`` at which some ``n``-edge
fragment of the pattern embeds into the system.  A fragment embeds when an
injective node mapping sends each of its edges onto a distinct system edge
with the same relation code and self-loop flag, and the matched system
edges hang together as one weakly connected piece.  Every distinct matched
system subset at the winning level is reported as one occurrence.

Levels are tried from the full pattern size downward: a hit at the top
level means the pattern exists completely, a hit below it means partial
existence, and no hit at any level means absence.  Below the top level
only fragments that are themselves weakly connected are eligible, so a
partial occurrence is always a coherent piece of the pattern rather than
scattered edges.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum

from .graph import EdgeTuple, RelationKind, is_weakly_connected

__all__ = [
    "EmptyPatternError",
    "LevelOutOfRangeError",
    "Verdict",
    "NodeMapping",
    "MatchRow",
    "MatchTable",
    "DetectionReport",
    "PruneProfile",
    "edge_compatible",
    "candidate_prune",
    "find_matches",
    "detect",
]


class EmptyPatternError(ValueError):
    """Detection needs a pattern with at least one edge."""


class LevelOutOfRangeError(ValueError):
    """The requested match level is outside 1..|pattern edges|."""


class Verdict(Enum):
    """Existence classification for one pattern against one system."""

    COMPLETE = "complete"
    PARTIAL = "partial"
    ABSENT = "absent"


NodeMapping = dict[str, str]
"""Partial map from pattern node to system node; kept injective throughout."""


def edge_compatible(
    system_edge: EdgeTuple,
    pattern_edge: EdgeTuple,
    mapping: Mapping[str, str],
) -> NodeMapping | None:
    """Try to align one system edge with one pattern edge.

    Returns a copy of ``mapping`` extended with pattern source -> system
    source and pattern target -> system target, or None when the relation
    codes or self-loop flags differ, an endpoint is already bound to a
    different node, or the extension would break injectivity.  The input
    mapping is never mutated.
    """
    if system_edge.relation is not pattern_edge.relation:
        return None
    if system_edge.self_loop != pattern_edge.self_loop:
        return None
    extended = dict(mapping)
    bound = set(extended.values())
    for pattern_node, system_node in (
        (pattern_edge.source, system_edge.source),
        (pattern_edge.target, system_edge.target),
    ):
        current = extended.get(pattern_node)
        if current is not None:
            if current != system_node:
                return None
        elif system_node in bound:
            return None
        else:
            extended[pattern_node] = system_node
            bound.add(system_node)
    return extended


@dataclass(frozen=True)
class MatchRow:
    """One occurrence: pattern edges aligned position-wise with system edges.

    ``system_edges[i]`` is the image of ``pattern_edges[i]`` under
    ``mapping``.  Rows are identified by their system edge set; the stored
    alignment is one witness for it.
    """

    pattern_edges: tuple[EdgeTuple, ...]
    system_edges: tuple[EdgeTuple, ...]
    mapping: dict[str, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pattern_edges", tuple(self.pattern_edges))
        object.__setattr__(self, "system_edges", tuple(self.system_edges))
        if len(self.pattern_edges) != len(self.system_edges):
            raise ValueError("pattern and system edge lists differ in length")
        if not self.pattern_edges:
            raise ValueError("a match row cannot be empty")
        if len(set(self.system_edges)) != len(self.system_edges):
            raise ValueError("system edges within a row must be distinct")
        if len(set(self.mapping.values())) != len(self.mapping):
            raise ValueError("node mapping must be injective")
        for pattern_edge, system_edge in zip(self.pattern_edges, self.system_edges):
            if (
                pattern_edge.relation is not system_edge.relation
                or pattern_edge.self_loop != system_edge.self_loop
                or self.mapping.get(pattern_edge.source) != system_edge.source
                or self.mapping.get(pattern_edge.target) != system_edge.target
            ):
                raise ValueError("mapping does not align pattern edges with system edges")
        if not is_weakly_connected(self.system_edges):
            raise ValueError("matched system edges must be weakly connected")

    def system_key(self) -> tuple[EdgeTuple, ...]:
        """Canonical identity of the row: its system edges in sorted order."""
        return tuple(sorted(self.system_edges))


@dataclass(frozen=True)
class MatchTable:
    """All occurrences found at one level.

    ``level`` is the column count (edges matched per row); the row count is
    the occurrence count.  Level 0 with no rows is the empty table carried
    by an absent verdict.  Rows are kept sorted by their system edge sets,
    with no two rows sharing one.
    """

    level: int
    rows: tuple[MatchRow, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.level < 0:
            raise ValueError("level cannot be negative")
        if self.level == 0 and self.rows:
            raise ValueError("a level-0 table cannot have rows")
        for row in self.rows:
            if len(row.system_edges) != self.level:
                raise ValueError("every row must match exactly `level` edges")
        keys = [row.system_key() for row in self.rows]
        if sorted(set(keys)) != keys:
            raise ValueError("rows must be unique and canonically ordered")

    def __len__(self) -> int:
        return len(self.rows)

    def system_edge_sets(self) -> set[frozenset[EdgeTuple]]:
        """The row identities, convenient for comparisons."""
        return {frozenset(row.system_edges) for row in self.rows}


@dataclass(frozen=True)
class DetectionReport:
    """Outcome of matching one pattern against one system edge set."""

    pattern_name: str
    verdict: Verdict
    pattern_size: int
    table: MatchTable

    def __post_init__(self) -> None:
        if self.pattern_size < 1:
            raise ValueError("pattern_size must be at least 1")
        rows = len(self.table)
        level = self.table.level
        consistent = (
            (self.verdict is Verdict.COMPLETE and level == self.pattern_size and rows >= 1)
            or (self.verdict is Verdict.PARTIAL and 0 < level < self.pattern_size and rows >= 1)
            or (self.verdict is Verdict.ABSENT and level == 0 and rows == 0)
        )
        if not consistent:
            raise ValueError(
                f"verdict {self.verdict.value!r} is inconsistent with "
                f"level {level} and {rows} row(s)"
            )

    @property
    def level(self) -> int | None:
        """Matched level, or None when the pattern is absent."""
        return self.table.level if self.verdict is not Verdict.ABSENT else None

    @property
    def occurrences(self) -> int:
        return len(self.table)


@dataclass(frozen=True)
class PruneProfile:
    """Relation-code supply and demand counts used to skip dead fragments.

    Pruning is result-neutral: a fragment is skipped only when it demands
    more edges of some relation code than the system holds, in which case
    no injective alignment onto distinct system edges can exist anyway.
    """

    level: int
    system_counts: dict[RelationKind, int]
    pattern_counts: dict[RelationKind, int]

    def admits(self, pattern_edges: Iterable[EdgeTuple]) -> bool:
        demanded = Counter(edge.relation for edge in pattern_edges)
        return all(self.system_counts.get(kind, 0) >= need for kind, need in demanded.items())

    def admits_level(self) -> bool:
        """Whether any size-``level`` fragment could embed at all.

        A fragment draws at most min(supply, demand) edges per relation
        code, so if those minima cannot add up to the level, the whole
        level is empty.
        """
        usable = sum(
            min(self.system_counts.get(kind, 0), need)
            for kind, need in self.pattern_counts.items()
        )
        return usable >= self.level


def candidate_prune(
    system_edges: Iterable[EdgeTuple],
    pattern_edges: Iterable[EdgeTuple],
    n: int,
) -> PruneProfile:
    """Summarize relation-code counts on both sides for level ``n``."""
    supply = Counter(edge.relation for edge in frozenset(system_edges))
    demand = Counter(edge.relation for edge in frozenset(pattern_edges))
    return PruneProfile(level=n, system_counts=dict(supply), pattern_counts=dict(demand))


class _SystemIndex:
    """Candidate lookup tables over the system edge set.

    Buckets hold sorted tuples so iteration order is deterministic.  The
    (relation, source, target) key is unique because the self-loop flag is
    determined by the endpoints; partial-binding buckets carry the flag in
    the key so a non-loop pattern edge never sees loop candidates.
    """

    def __init__(self, edges: frozenset[EdgeTuple]) -> None:
        by_kind: dict[tuple[RelationKind, int], list[EdgeTuple]] = {}
        by_source: dict[tuple[RelationKind, int, str], list[EdgeTuple]] = {}
        by_target: dict[tuple[RelationKind, int, str], list[EdgeTuple]] = {}
        exact: dict[tuple[RelationKind, str, str], EdgeTuple] = {}
        for edge in sorted(edges):
            by_kind.setdefault((edge.relation, edge.self_loop), []).append(edge)
            by_source.setdefault((edge.relation, edge.self_loop, edge.source), []).append(edge)
            by_target.setdefault((edge.relation, edge.self_loop, edge.target), []).append(edge)
            exact[(edge.relation, edge.source, edge.target)] = edge
        self._by_kind = {key: tuple(bucket) for key, bucket in by_kind.items()}
        self._by_source = {key: tuple(bucket) for key, bucket in by_source.items()}
        self._by_target = {key: tuple(bucket) for key, bucket in by_target.items()}
        self._exact = exact

    def candidates(
        self, pattern_edge: EdgeTuple, mapping: Mapping[str, str]
    ) -> tuple[EdgeTuple, ...]:
        bound_source = mapping.get(pattern_edge.source)
        bound_target = mapping.get(pattern_edge.target)
        if bound_source is not None and bound_target is not None:
            hit = self._exact.get((pattern_edge.relation, bound_source, bound_target))
            return (hit,) if hit is not None else ()
        if bound_source is not None:
            return self._by_source.get(
                (pattern_edge.relation, pattern_edge.self_loop, bound_source), ()
            )
        if bound_target is not None:
            return self._by_target.get(
                (pattern_edge.relation, pattern_edge.self_loop, bound_target), ()
            )
        return self._by_kind.get((pattern_edge.relation, pattern_edge.self_loop), ())


def _eligible_fragments(
    pattern: frozenset[EdgeTuple], n: int
) -> Iterator[tuple[EdgeTuple, ...]]:
    """Size-``n`` pattern fragments eligible at level ``n``, canonical order.

    The full pattern is the only fragment at the top level; below it a
    fragment must be weakly connected on its own.
    """
    ordered = tuple(sorted(pattern))
    if n == len(ordered):
        yield ordered
        return
    for combination in itertools.combinations(ordered, n):
        if is_weakly_connected(combination):
            yield combination


def _search_order(fragment: tuple[EdgeTuple, ...]) -> list[EdgeTuple]:
    """Reorder fragment edges so each one touches the prefix when possible,
    keeping candidate lists narrow during the search."""
    remaining = list(fragment)
    order: list[EdgeTuple] = []
    placed: set[str] = set()
    while remaining:
        pick = None
        if order:
            for edge in remaining:
                if edge.source in placed or edge.target in placed:
                    pick = edge
                    break
        if pick is None:
            pick = remaining[0]
        remaining.remove(pick)
        order.append(pick)
        placed.update((pick.source, pick.target))
    return order


def _embeddings(
    fragment: tuple[EdgeTuple, ...], index: _SystemIndex
) -> Iterator[tuple[NodeMapping, dict[EdgeTuple, EdgeTuple]]]:
    """Yield (node mapping, pattern edge -> system edge alignment) for every
    injective embedding of ``fragment`` into the indexed system."""
    order = _search_order(fragment)
    mapping: NodeMapping = {}
    taken_nodes: set[str] = set()
    taken_edges: set[EdgeTuple] = set()
    alignment: dict[EdgeTuple, EdgeTuple] = {}

    def bind(pattern_edge: EdgeTuple, system_edge: EdgeTuple) -> list[str] | None:
        added: list[str] = []
        for p_node, s_node in (
            (pattern_edge.source, system_edge.source),
            (pattern_edge.target, system_edge.target),
        ):
            current = mapping.get(p_node)
            if current is not None:
                if current != s_node:
                    break
            elif s_node in taken_nodes:
                break
            else:
                mapping[p_node] = s_node
                taken_nodes.add(s_node)
                added.append(p_node)
        else:
            return added
        for p_node in added:
            taken_nodes.discard(mapping.pop(p_node))
        return None

    def walk(depth: int) -> Iterator[tuple[NodeMapping, dict[EdgeTuple, EdgeTuple]]]:
        if depth == len(order):
            yield dict(mapping), dict(alignment)
            return
        pattern_edge = order[depth]
        for system_edge in index.candidates(pattern_edge, mapping):
            if system_edge in taken_edges:
                continue
            added = bind(pattern_edge, system_edge)
            if added is None:
                continue
            taken_edges.add(system_edge)
            alignment[pattern_edge] = system_edge
            yield from walk(depth + 1)
            del alignment[pattern_edge]
            taken_edges.discard(system_edge)
            for p_node in added:
                taken_nodes.discard(mapping.pop(p_node))

    yield from walk(0)


def find_matches(
    system_edges: Iterable[EdgeTuple],
    pattern_edges: Iterable[EdgeTuple],
    n: int,
    *,
    prune: bool = True,
) -> MatchTable:
    """All occurrences at exactly level ``n``.

    Each row records one distinct weakly connected size-``n`` subset of
    ``system_edges`` onto which some eligible size-``n`` pattern fragment
    maps injectively, together with one witnessing alignment.  Rows come
    back canonically ordered.  ``prune`` toggles the relation-count skip,
    which never changes the result.  Raises ``LevelOutOfRangeError`` when
    ``n`` is not in 1..|pattern| and ``EmptyPatternError`` for an edgeless
    pattern.
    """
    system = frozenset(system_edges)
    pattern = frozenset(pattern_edges)
    if not pattern:
        raise EmptyPatternError("pattern has no edges")
    if not 0 < n <= len(pattern):
        raise LevelOutOfRangeError(f"level must be in 1..{len(pattern)}, got {n}")
    profile = candidate_prune(system, pattern, n) if prune else None
    if len(system) < n or (profile is not None and not profile.admits_level()):
        return MatchTable(level=n)
    index = _SystemIndex(system)
    found: dict[frozenset[EdgeTuple], MatchRow] = {}
    for fragment in _eligible_fragments(pattern, n):
        if profile is not None and not profile.admits(fragment):
            continue
        for mapping, alignment in _embeddings(fragment, index):
            system_images = tuple(alignment[pattern_edge] for pattern_edge in fragment)
            key = frozenset(system_images)
            if key in found or not is_weakly_connected(system_images):
                continue
            found[key] = MatchRow(
                pattern_edges=fragment,
                system_edges=system_images,
                mapping=dict(sorted(mapping.items())),
            )
    rows = tuple(sorted(found.values(), key=MatchRow.system_key))
    return MatchTable(level=n, rows=rows)


def detect(
    system_edges: Iterable[EdgeTuple],
    pattern_edges: Iterable[EdgeTuple],
    pattern_name: str = "",
    *,
    prune: bool = True,
) -> DetectionReport:
    """Classify a pattern's presence at the largest matchable level.

    Tries level n = |pattern| first and walks down; the first level with
    occurrences decides the verdict.  An empty system is valid input and
    yields absence; an empty pattern is an error.
    """
    system = frozenset(system_edges)
    pattern = frozenset(pattern_edges)
    if not pattern:
        raise EmptyPatternError("pattern has no edges")
    for level in range(len(pattern), 0, -1):
        table = find_matches(system, pattern, level, prune=prune)
        if table.rows:
            verdict = Verdict.COMPLETE if level == len(pattern) else Verdict.PARTIAL
            return DetectionReport(pattern_name, verdict, len(pattern), table)
    return DetectionReport(pattern_name, Verdict.ABSENT, len(pattern), MatchTable(level=0))
