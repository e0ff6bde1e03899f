"""Typed directed multigraph primitives built on a 4-field edge encoding.

A class model is a named graph whose nodes are class identifiers and whose
edges carry one of three relationship kinds (association, dependency,
generalization) plus a derived self-loop flag.  Edges are value objects
with set semantics: a graph never holds two identical 4-field edges.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import IntEnum

__all__ = [
    "RelationKind",
    "EdgeTuple",
    "ClassGraph",
    "InvalidNodeError",
    "GraphIntegrityError",
    "EmptyEdgeSetError",
    "make_edge",
    "edge_set",
    "is_weakly_connected",
]


class InvalidNodeError(ValueError):
    """A node identifier is empty or contains forbidden characters."""


class GraphIntegrityError(ValueError):
    """A graph references a node that is not in its node set."""


class EmptyEdgeSetError(ValueError):
    """An operation that needs at least one edge received none."""


class RelationKind(IntEnum):
    """Relationship codes carried by class-model edges."""

    ASSOCIATION = 1
    DEPENDENCY = 2
    GENERALIZATION = 3


def _check_identifier(value: str, what: str = "node identifier") -> str:
    # Identifiers must survive the whitespace-tokenized, '#'-commented text
    # format unchanged, hence the character restrictions.
    if not isinstance(value, str) or not value:
        raise InvalidNodeError(f"{what} must be a non-empty string")
    if "#" in value or any(ch.isspace() for ch in value):
        raise InvalidNodeError(f"{what} {value!r} may not contain whitespace or '#'")
    return value


@dataclass(frozen=True, order=True)
class EdgeTuple:
    """A directed edge as the 4-field value (source, target, relation, self_loop).

    ``self_loop`` is derived from the endpoints (1 iff source == target) and
    cannot be supplied by callers, so an inconsistent flag is unrepresentable.
    Ordering is lexicographic over the four fields, which doubles as the
    canonical edge order wherever output must be deterministic.
    """

    source: str
    target: str
    relation: RelationKind
    self_loop: int = field(init=False)

    def __post_init__(self) -> None:
        _check_identifier(self.source)
        _check_identifier(self.target)
        object.__setattr__(self, "relation", RelationKind(self.relation))
        object.__setattr__(self, "self_loop", 1 if self.source == self.target else 0)

    def as_tuple(self) -> tuple[str, str, int, int]:
        return (self.source, self.target, int(self.relation), self.self_loop)


def make_edge(source: str, target: str, relation: RelationKind | int) -> EdgeTuple:
    """Build an edge, deriving the self-loop flag from the endpoints."""
    return EdgeTuple(source, target, RelationKind(relation))


@dataclass(frozen=True)
class ClassGraph:
    """A named set of class nodes plus the edge set connecting them.

    Nodes without any relationship are allowed; multiple edges between the
    same ordered pair are allowed when their relation codes differ.  The
    name may be empty for anonymous graphs.
    """

    name: str
    nodes: frozenset[str]
    edges: frozenset[EdgeTuple]

    def __post_init__(self) -> None:
        if self.name:
            _check_identifier(self.name, "model name")
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", frozenset(self.edges))
        for node in self.nodes:
            _check_identifier(node)
        missing = {
            endpoint
            for edge in self.edges
            for endpoint in (edge.source, edge.target)
            if endpoint not in self.nodes
        }
        if missing:
            raise GraphIntegrityError(
                f"edges reference undeclared nodes: {', '.join(sorted(missing))}"
            )

    @classmethod
    def from_edges(
        cls,
        name: str,
        edges: Iterable[EdgeTuple],
        isolated: Iterable[str] = (),
    ) -> "ClassGraph":
        """Build a graph whose node set is collected from the edges."""
        edge_pool = frozenset(edges)
        nodes = {e.source for e in edge_pool} | {e.target for e in edge_pool}
        nodes.update(isolated)
        return cls(name=name, nodes=frozenset(nodes), edges=edge_pool)


def edge_set(graph: ClassGraph) -> frozenset[EdgeTuple]:
    """The graph's edge set (one element per distinct 4-field edge)."""
    return graph.edges


def is_weakly_connected(edges: Iterable[EdgeTuple]) -> bool:
    """True iff the edges form one connected component ignoring direction.

    A single edge, including a self-loop, counts as connected.  Raises
    ``EmptyEdgeSetError`` for an empty collection because connectivity of
    nothing is undefined here.
    """
    edges = tuple(edges)
    if not edges:
        raise EmptyEdgeSetError("connectivity is undefined for an empty edge set")
    neighbors: dict[str, set[str]] = {}
    for edge in edges:
        neighbors.setdefault(edge.source, set()).add(edge.target)
        neighbors.setdefault(edge.target, set()).add(edge.source)
    start = edges[0].source
    seen = {start}
    stack = [start]
    while stack:
        for other in neighbors[stack.pop()]:
            if other not in seen:
                seen.add(other)
                stack.append(other)
    return len(seen) == len(neighbors)
