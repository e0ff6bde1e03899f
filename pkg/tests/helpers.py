"""Shared builders for the test suite."""

from dpdetect import RelationKind, make_edge

RELATIONS = tuple(RelationKind)


def edges(*specs):
    """frozenset of edges from (source, target, relation-code) triples."""
    return frozenset(make_edge(s, t, RelationKind(r)) for s, t, r in specs)


# The six-edge system used by the golden tests, matching tests/fixtures/sample_system.cg.
SAMPLE_SYSTEM = edges(
    ("a", "b", 1),
    ("c", "b", 1),
    ("a", "c", 1),
    ("d", "b", 3),
    ("e", "c", 3),
    ("d", "c", 2),
)


def random_system(rng, max_nodes=7, max_edges=10):
    names = [f"n{i}" for i in range(rng.randint(2, max_nodes))]
    out = set()
    for _ in range(rng.randint(1, max_edges)):
        out.add(make_edge(rng.choice(names), rng.choice(names), rng.choice(RELATIONS)))
    return frozenset(out)


def random_pattern(rng, max_nodes=6, max_edges=3):
    names = [f"p{i}" for i in range(rng.randint(1, max_nodes))]
    out = set()
    for _ in range(rng.randint(1, max_edges)):
        out.add(make_edge(rng.choice(names), rng.choice(names), rng.choice(RELATIONS)))
    return frozenset(out)


def random_instance(rng):
    return random_system(rng), random_pattern(rng)


def row_sets(table):
    return {frozenset(row.system_edges) for row in table.rows}


def pair_rows(table):
    """Row identities as (source, target) pair sets, for terse goldens."""
    return {frozenset((e.source, e.target) for e in row.system_edges) for row in table.rows}


def relabel(edge_pool, bijection):
    return frozenset(
        make_edge(bijection[e.source], bijection[e.target], e.relation) for e in edge_pool
    )


def random_bijection(rng, edge_pool):
    nodes = sorted({n for e in edge_pool for n in (e.source, e.target)})
    targets = [f"r{i}" for i in range(len(nodes))]
    rng.shuffle(targets)
    return dict(zip(nodes, targets))


def reports_agree(ours, reference):
    return (
        ours.verdict is reference.verdict
        and ours.level == reference.level
        and ours.occurrences == reference.occurrences
        and ours.table.system_edge_sets() == reference.table.system_edge_sets()
    )
