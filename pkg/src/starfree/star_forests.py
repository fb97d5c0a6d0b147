"""Star forests: degree-list representation, exact containment, two edge bounds.

A star forest is a vertex-disjoint union of stars, recorded by the sorted
list of leaf counts d1 >= ... >= dk >= 1.  Containment of a star forest as a
subgraph is decided exactly: candidate center subsets are enumerated, roles
are matched to centers by degrees, and the leaf assignment is settled by a
maximum-flow feasibility check (unit leaf capacities make disjointness exact).
A brute-force oracle with the same semantics backs the fast path in tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import ParamOutOfRange, ParseError
from .graphs import Graph, degrees

MAX_STARS = 8  # center-subset enumeration is exponential in the star count


@dataclass(frozen=True)
class StarForest:
    """Leaf counts of the stars, normalised to non-increasing order."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.degrees) == 0:
            raise ParamOutOfRange("a star forest needs at least one star")
        if any(d < 1 for d in self.degrees):
            raise ParamOutOfRange(f"every star needs at least one leaf: {self.degrees}")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def k(self) -> int:
        return len(self.degrees)

    @property
    def leaf_total(self) -> int:
        return sum(self.degrees)

    @property
    def order(self) -> int:
        return self.leaf_total + self.k

    def text(self, with_count: bool = False) -> str:
        body = ",".join(str(d) for d in self.degrees)
        return f"{self.k}:{body}" if with_count else body

    def __str__(self) -> str:
        return self.text()


def parse_star_forest(text: str) -> StarForest:
    """Parse ``d1,d2,...`` or ``k:d1,d2,...`` (degrees are sorted on parse)."""
    body = text.strip()
    if ":" in body:
        head, _, body = body.partition(":")
        try:
            k = int(head)
        except ValueError:
            raise ParseError(f"bad star count {head!r} in star forest {text!r}") from None
    else:
        k = None
    try:
        ds = tuple(int(p) for p in body.split(",") if p.strip() != "")
    except ValueError:
        raise ParseError(f"bad star forest text {text!r}") from None
    if not ds:
        raise ParseError(f"empty star forest text {text!r}")
    if k is not None and k != len(ds):
        raise ParseError(f"star count {k} does not match {len(ds)} degrees in {text!r}")
    return StarForest(ds)


# ---------------------------------------------------------------------------
# containment
# ---------------------------------------------------------------------------


def _leaf_assignment_exists(g: Graph, centers: tuple[int, ...], caps: tuple[int, ...]) -> bool:
    """Max-flow feasibility: can center i get caps[i] private leaves?

    Bipartite b-matching via augmenting paths (Ford-Fulkerson with the
    centers as a super-source); each leaf holds at most one unit.
    """
    cmask = 0
    for c in centers:
        cmask |= 1 << c
    leaf_pool = 0
    for c in centers:
        leaf_pool |= g.adj[c] & ~cmask
    leaves = []
    index = {}
    while leaf_pool:
        v = (leaf_pool & -leaf_pool).bit_length() - 1
        leaf_pool &= leaf_pool - 1
        index[v] = len(leaves)
        leaves.append(v)

    neigh = []
    for c in centers:
        row = g.adj[c] & ~cmask
        lst = []
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            lst.append(index[v])
        neigh.append(lst)

    match = [-1] * len(leaves)  # leaf -> center index
    load = [0] * len(centers)

    def augment(ci: int, seen: list[bool]) -> bool:
        for li in neigh[ci]:
            if seen[li]:
                continue
            seen[li] = True
            other = match[li]
            if other == -1 or augment(other, seen):
                # unmatched, or the current owner rerouted to another leaf
                match[li] = ci
                return True
        return False

    need = sum(caps)
    if len(leaves) < need:
        return False
    flow = 0
    progress = True
    while progress and flow < need:
        progress = False
        for ci in range(len(centers)):
            while load[ci] < caps[ci]:
                if augment(ci, [False] * len(leaves)):
                    load[ci] += 1
                    flow += 1
                    progress = True
                else:
                    break
    return flow == need


def contains_star_forest(g: Graph, forest: StarForest) -> bool:
    """True iff g contains vertex-disjoint stars with the forest's leaf counts.

    Centers cannot serve as leaves of other stars (the stars are vertex
    disjoint); an edge between two chosen centers is simply unused.
    """
    k = forest.k
    if k > MAX_STARS:
        raise ParamOutOfRange(f"containment supports at most {MAX_STARS} stars, got {k}")
    d = forest.degrees
    if g.n < forest.order:
        return False
    deg = degrees(g)
    cands = [v for v in range(g.n) if deg[v] >= d[-1]]
    if len(cands) < k:
        return False
    cands.sort(key=lambda v: -deg[v])
    # role multiset collapsed: permutations of equal leaf counts are identical
    assignments = sorted(set(itertools.permutations(d)), reverse=True)
    sorted_d = list(d)
    for centers in itertools.combinations(cands, k):
        cmask = 0
        for c in centers:
            cmask |= 1 << c
        out = [(g.adj[c] & ~cmask).bit_count() for c in centers]
        ranked = sorted(out, reverse=True)
        if any(ranked[i] < sorted_d[i] for i in range(k)):
            continue
        for caps in assignments:
            if all(out[i] >= caps[i] for i in range(k)):
                if _leaf_assignment_exists(g, centers, caps):
                    return True
    return False


def contains_star_forest_oracle(g: Graph, forest: StarForest) -> bool:
    """Exhaustive reference: try every center and every leaf subset.

    Exponential; meant for orders up to about 10.  Shares no machinery with
    the flow-based decision procedure.
    """
    d = forest.degrees

    def place(i: int, used: int) -> bool:
        if i == len(d):
            return True
        for c in range(g.n):
            if used >> c & 1:
                continue
            avail = g.adj[c] & ~used & ~(1 << c)
            free = []
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                free.append(v)
            if len(free) < d[i]:
                continue
            for leaves in itertools.combinations(free, d[i]):
                taken = used | (1 << c)
                for v in leaves:
                    taken |= 1 << v
                if place(i + 1, taken):
                    return True
        return False

    if g.n < forest.order:
        return False
    return place(0, 0)


def avoids_star_forest(g: Graph, forest: StarForest) -> bool:
    """The freeness predicate: no subgraph of g is the given star forest."""
    return not contains_star_forest(g, forest)


# ---------------------------------------------------------------------------
# edge bounds
# ---------------------------------------------------------------------------


def coarse_edge_bound(forest: StarForest, n: int) -> int:
    """Crude degree-counting edge bound for forest-free graphs of order n.

    Valid whenever n >= order(forest):  (sum d + 2k - 3) n - (k-1)(sum d + k - 1).
    """
    k = forest.k
    if k < 2:
        raise ParamOutOfRange(f"the coarse edge bound needs at least two stars, got k={k}")
    if n < forest.order:
        raise ParamOutOfRange(f"order {n} is below the forest order {forest.order}")
    s = forest.leaf_total
    return (s + 2 * k - 3) * n - (k - 1) * (s + k - 1)


def tight_edge_bound(forest: StarForest, n: int) -> int:
    """Asymptotically sharp edge bound (requires every star to have >= 2 leaves).

    max over 1 <= i <= k of (i-1)(n-i+1) + C(i-1,2) + floor((d_i - 1)(n-i+1)/2).
    """
    k = forest.k
    d = forest.degrees
    if k < 2:
        raise ParamOutOfRange(f"the tight edge bound needs at least two stars, got k={k}")
    if d[-1] < 2:
        raise ParamOutOfRange(f"the tight edge bound needs every star to have >= 2 leaves: {d}")
    if n < forest.order:
        raise ParamOutOfRange(f"order {n} is below the forest order {forest.order}")
    best = 0
    for i in range(1, k + 1):
        term = (i - 1) * (n - i + 1) + comb(i - 1, 2) + (d[i - 1] - 1) * (n - i + 1) // 2
        best = max(best, term)
    return best
