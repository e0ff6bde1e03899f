"""Pattern catalog: built-in pattern graphs plus user-supplied definitions.

Pattern names are case-insensitive and stored lowercase.  User catalogs are
directories of ``.cg`` files (or a single file); a user entry whose name
collides with a built-in shadows it.  Isolated nodes in a pattern file are
legal but never constrain matching, which works on edges alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .graph import ClassGraph, InvalidNodeError, RelationKind, make_edge
from .model import ModelSyntaxError, scan_declarations

__all__ = ["CatalogError", "PatternCatalog", "builtin_catalog", "load_catalog", "CATALOG_SUFFIX"]

CATALOG_SUFFIX = ".cg"


class CatalogError(ValueError):
    """A catalog path, entry or pattern definition is unusable."""


@dataclass(frozen=True)
class PatternCatalog:
    """Mapping from lowercase pattern name to its pattern graph."""

    entries: dict[str, ClassGraph]
    user_names: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", dict(self.entries))
        object.__setattr__(self, "user_names", frozenset(self.user_names))
        for name, graph in self.entries.items():
            if name != name.lower():
                raise CatalogError(f"catalog keys must be lowercase, got {name!r}")
            if not graph.edges:
                raise CatalogError(f"pattern {name!r} has no edges")
        unknown = self.user_names - set(self.entries)
        if unknown:
            raise CatalogError(f"user names missing from entries: {', '.join(sorted(unknown))}")

    def names(self) -> list[str]:
        return sorted(self.entries)

    def get(self, name: str) -> ClassGraph | None:
        return self.entries.get(name.lower())

    def is_user_defined(self, name: str) -> bool:
        return name.lower() in self.user_names

    def __contains__(self, name: str) -> bool:
        return name.lower() in self.entries

    def __len__(self) -> int:
        return len(self.entries)


_ASSOC = RelationKind.ASSOCIATION
_GEN = RelationKind.GENERALIZATION


def builtin_catalog() -> PatternCatalog:
    """The four pattern graphs the detector ships with."""
    entries = {
        "composite": ClassGraph.from_edges(
            "composite",
            [make_edge("c", "a", _ASSOC), make_edge("b", "a", _GEN), make_edge("c", "a", _GEN)],
        ),
        "facade": ClassGraph.from_edges("facade", [make_edge("P", "Q", _ASSOC)]),
        "prototype": ClassGraph.from_edges(
            "prototype",
            [make_edge("b", "a", _ASSOC), make_edge("c", "a", _GEN)],
        ),
        "singleton": ClassGraph.from_edges("singleton", [make_edge("A", "A", _ASSOC)]),
    }
    return PatternCatalog(entries=entries)


def load_catalog(source: str | Path | None = None) -> PatternCatalog:
    """Built-ins merged with user definitions from ``source``.

    ``source`` may be None (built-ins only), a ``.cg`` file, or a directory
    scanned for ``*.cg`` in sorted order.  Each entry is named by its
    ``model`` header, falling back to the filename stem.  Raises
    ``CatalogError`` for unreadable paths, unparseable entries, duplicate
    user names, or zero-edge patterns.
    """
    builtins = builtin_catalog()
    if source is None:
        return builtins
    path = Path(source)
    if path.is_dir():
        files = sorted(path.glob(f"*{CATALOG_SUFFIX}"))
    elif path.is_file():
        files = [path]
    else:
        raise CatalogError(f"catalog path not found: {path}")
    user: dict[str, ClassGraph] = {}
    for file in files:
        try:
            document = scan_declarations(file.read_text(encoding="utf-8"))
            graph = document.to_graph()
        except OSError as err:
            raise CatalogError(f"catalog entry {file.name!r}: {err}") from err
        except (ModelSyntaxError, InvalidNodeError) as err:
            raise CatalogError(f"catalog entry {file.name!r}: {err}") from err
        name = (document.name or file.stem).lower()
        if not graph.edges:
            raise CatalogError(f"catalog entry {file.name!r}: pattern has no edges")
        if name in user:
            raise CatalogError(f"catalog entry {file.name!r}: duplicate pattern name {name!r}")
        user[name] = graph
    return PatternCatalog(entries={**builtins.entries, **user}, user_names=frozenset(user))
