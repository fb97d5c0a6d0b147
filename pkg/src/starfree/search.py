"""Exhaustive extremal searches over enumerated graph classes, with records.

A search scans one isomorphism-free class, filters by star-forest freeness,
maximises the spectral radius, and records the outcome next to the matching
closed-form bound.  Records serialise to JSON lines (graph6 payloads,
deterministic key order) so runs diff cleanly, and merge associatively so a
scan can be partitioned across workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .enumeration import EnumerationCache, GraphClass, enumerate_graphs
from .errors import DivisionByZeroK2, EmptyClass, ParamOutOfRange, ParseError
from .families import (
    order_threshold,
    radius_bound_bipartite,
    radius_bound_general,
    signless_radius_bound,
)
from .graphs import edge_count, graph6_encode
from .spectra import signless_laplacian_radius, spectral_radius
from .star_forests import StarForest, avoids_star_forest, coarse_edge_bound

RHO_TIE_TOL = 1e-9


@dataclass(frozen=True)
class SearchRecord:
    """Outcome of one exhaustive radius search.

    ``argmax`` lists every maximiser up to isomorphism in canonical graph6.
    ``bound_value`` is the applicable closed-form ceiling at these parameters
    and ``bound_applicable`` whether n clears the proved order threshold (for
    an all-2s forest on a bipartite class, the explicit small threshold
    11k - 4 counts as cleared).  ``gap`` is bound_value - max_rho.
    """

    n: int
    graph_class: GraphClass
    forest: StarForest
    count_enumerated: int
    count_free: int
    max_rho: float
    argmax: tuple[str, ...]
    bound_value: float | None
    bound_applicable: bool
    gap: float | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "class": self.graph_class.value,
            "forest": self.forest.text(),
            "count_enumerated": self.count_enumerated,
            "count_free": self.count_free,
            "max_rho": self.max_rho,
            "argmax": list(self.argmax),
            "bound_value": self.bound_value,
            "bound_applicable": self.bound_applicable,
            "gap": self.gap,
        }

    @staticmethod
    def from_json_dict(d: dict) -> "SearchRecord":
        from .star_forests import parse_star_forest

        return SearchRecord(
            n=int(d["n"]),
            graph_class=GraphClass(d["class"]),
            forest=parse_star_forest(d["forest"]),
            count_enumerated=int(d["count_enumerated"]),
            count_free=int(d["count_free"]),
            max_rho=float(d["max_rho"]),
            argmax=tuple(d["argmax"]),
            bound_value=None if d["bound_value"] is None else float(d["bound_value"]),
            bound_applicable=bool(d["bound_applicable"]),
            gap=None if d["gap"] is None else float(d["gap"]),
        )


def applicable_bound(n: int, forest: StarForest, graph_class: GraphClass):
    """(bound_value, bound_applicable) for this class at these parameters.

    The bound is the bipartite ceiling sqrt((k-1)(n-k+1)) on bipartite
    classes and the general ceiling otherwise; it needs k >= 2.  The order
    thresholds are compared exactly (they are rationals far beyond float
    range); a k = 2 threshold with zero denominator simply never applies.
    """
    k = forest.k
    d_k = forest.degrees[-1]
    if k < 2 or n < k:
        return None, False
    bipartite = graph_class.bipartite_only
    connected = graph_class.connected_only
    value = radius_bound_bipartite(n, k) if bipartite else radius_bound_general(n, k, d_k)
    applicable = False
    # connected classes get their tighter proved thresholds
    if bipartite:
        kind = "f_value" if connected else "thm_1_8_and_cor_1_9"
    else:
        kind = "thm_3_1" if connected else "thm_1_7"
    try:
        applicable = n >= order_threshold(kind, forest)
    except DivisionByZeroK2:
        applicable = False
    if bipartite and all(d == 2 for d in forest.degrees) and n >= 11 * k - 4:
        applicable = True
    return value, applicable


def extremal_search(
    n: int,
    forest: StarForest,
    graph_class: GraphClass = GraphClass.ALL,
    cache: EnumerationCache | None = None,
) -> SearchRecord:
    """Scan the class, keep the forest-free graphs, maximise the radius."""
    count_enumerated = 0
    count_free = 0
    best: list[tuple[float, str]] = []
    max_rho = float("-inf")
    for g in enumerate_graphs(n, graph_class, cache):
        count_enumerated += 1
        if not avoids_star_forest(g, forest):
            continue
        count_free += 1
        rho = spectral_radius(g)
        if rho > max_rho + RHO_TIE_TOL:
            max_rho = rho
            best = [(rho, graph6_encode(g))]
        elif rho >= max_rho - RHO_TIE_TOL:
            max_rho = max(max_rho, rho)
            best.append((rho, graph6_encode(g)))
    if count_free == 0:
        raise EmptyClass(
            f"no {forest}-free graph of order {n} in class {graph_class.value!r}"
        )
    argmax = tuple(sorted(g6 for rho, g6 in best if rho >= max_rho - RHO_TIE_TOL))
    bound_value, bound_applicable = applicable_bound(n, forest, graph_class)
    gap = None if bound_value is None else bound_value - max_rho
    return SearchRecord(
        n=n,
        graph_class=graph_class,
        forest=forest,
        count_enumerated=count_enumerated,
        count_free=count_free,
        max_rho=max_rho,
        argmax=argmax,
        bound_value=bound_value,
        bound_applicable=bound_applicable,
        gap=gap,
    )


def merge_search_records(a: SearchRecord, b: SearchRecord) -> SearchRecord:
    """Combine two records of disjoint shards of the same scan.

    Associative and commutative, so shards may merge in any order.
    """
    if (a.n, a.graph_class, a.forest) != (b.n, b.graph_class, b.forest):
        raise ParamOutOfRange("cannot merge records of different searches")
    max_rho = max(a.max_rho, b.max_rho)
    winners: set[str] = set()
    for rec in (a, b):
        if rec.max_rho >= max_rho - RHO_TIE_TOL:
            winners.update(rec.argmax)
    argmax = tuple(sorted(winners))
    bound_value = a.bound_value if a.bound_value is not None else b.bound_value
    gap = None if bound_value is None else bound_value - max_rho
    return SearchRecord(
        n=a.n,
        graph_class=a.graph_class,
        forest=a.forest,
        count_enumerated=a.count_enumerated + b.count_enumerated,
        count_free=a.count_free + b.count_free,
        max_rho=max_rho,
        argmax=argmax,
        bound_value=bound_value,
        bound_applicable=a.bound_applicable or b.bound_applicable,
        gap=gap,
    )


# ---------------------------------------------------------------------------
# property scans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeBoundViolation:
    graph6: str
    edges: int
    bound: int


def verify_edge_bound(
    n: int,
    forest: StarForest,
    graph_class: GraphClass = GraphClass.ALL,
    cache: EnumerationCache | None = None,
) -> list[EdgeBoundViolation]:
    """Check every forest-free graph against the coarse edge bound.

    The bound is proved for every n >= order(forest), so the expected result
    is an empty list; anything returned is an implementation counterexample.
    """
    bound = coarse_edge_bound(forest, n)  # validates k >= 2 and the n floor
    out = []
    for g in enumerate_graphs(n, graph_class, cache):
        if not avoids_star_forest(g, forest):
            continue
        e = edge_count(g)
        if e > bound:
            out.append(EdgeBoundViolation(graph6_encode(g), e, bound))
    return out


@dataclass(frozen=True)
class QMarginRow:
    graph6: str
    q: float
    margin: float


@dataclass(frozen=True)
class QMarginTable:
    """Signless-Laplacian margins q(G) - bound for every forest-free graph.

    Entries above the bound are candidate small-order counterexamples to the
    conjectured ceiling; they are recorded, not treated as failures (the
    conjecture is asymptotic).
    """

    n: int
    graph_class: GraphClass
    forest: StarForest
    bound_value: float
    rows: tuple[QMarginRow, ...]
    max_margin: float
    exceeders: tuple[str, ...]


def conjecture_margin_table(
    n: int,
    forest: StarForest,
    graph_class: GraphClass = GraphClass.ALL,
    cache: EnumerationCache | None = None,
) -> QMarginTable:
    k = forest.k
    if k < 2:
        raise ParamOutOfRange(f"the conjectured ceiling needs k >= 2, got k={k}")
    bound = signless_radius_bound(n, k, forest.degrees[-1])
    rows = []
    for g in enumerate_graphs(n, graph_class, cache):
        if not avoids_star_forest(g, forest):
            continue
        q = signless_laplacian_radius(g)
        rows.append(QMarginRow(graph6_encode(g), q, q - bound))
    rows.sort(key=lambda r: r.graph6)
    max_margin = max((r.margin for r in rows), default=float("-inf"))
    exceeders = tuple(r.graph6 for r in rows if r.margin > RHO_TIE_TOL)
    return QMarginTable(n, graph_class, forest, bound, tuple(rows), max_margin, exceeders)


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------


def write_records(records, path) -> None:
    """Write SearchRecords as JSON lines (sorted keys, no metadata)."""
    with open(path, "w", encoding="ascii") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_json_dict(), sort_keys=True))
            fh.write("\n")


def read_records(path) -> list[SearchRecord]:
    """Read JSON-line SearchRecords; ParseError carries the 1-based line number."""
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append(SearchRecord.from_json_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
                raise ParseError(f"bad search record: {exc}", line=lineno) from None
    return out
