"""Compact undirected simple graphs on at most 64 vertices.

A graph is stored as one 64-bit neighbour mask per vertex, which makes
neighbourhood intersection, degree counting and subset tests single integer
operations.  All values are immutable; every operation returns a new Graph.

Also provides isomorphism-complete canonical codes (minimal upper-triangle
bit string over the vertex orderings compatible with the equitable degree
refinement, found by backtracking with automorphism-orbit pruning) and the
graph6 text codec used for all graph I/O.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import BadEdge, OrderTooLarge, ParamOutOfRange, ParseError

MAX_ORDER = 64

#: Default ceiling for canonical labelling; beyond this the backtracking
#: search is not guaranteed to be cheap and callers must opt in explicitly.
CANONICAL_CEILING = 12


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: ``adj[v]`` is the neighbour bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __repr__(self) -> str:  # keep pytest diffs readable
        return f"Graph(n={self.n}, edges={edges(self)})"


@dataclass(frozen=True)
class CanonicalCode:
    """Isomorphism-invariant identifier: order plus packed canonical bit string.

    Two graphs have equal CanonicalCode iff they are isomorphic.  ``code``
    packs the upper triangle of the canonical adjacency matrix column by
    column (the graph6 bit order), most significant bit first.
    """

    n: int
    code: bytes


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical relabelling of a graph plus the automorphisms discovered.

    ``generators`` are permutations (tuples mapping vertex -> image) of the
    canonical graph; they generate a subgroup of its automorphism group and
    are used by the enumerator to prune equivalent vertex augmentations.
    """

    graph: Graph
    code: CanonicalCode
    generators: tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def from_edges(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on vertices 0..n-1 with the given edges.

    Duplicate edges collapse; loops and out-of-range endpoints are rejected.
    """
    if n < 0 or n > MAX_ORDER:
        raise OrderTooLarge(f"graph order {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edge_list:
        if u == v:
            raise BadEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise BadEdge(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    if n < 0 or n > MAX_ORDER:
        raise OrderTooLarge(f"graph order {n} outside 0..{MAX_ORDER}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise OrderTooLarge(f"join order {n} exceeds {MAX_ORDER}")
    g_all = (1 << g.n) - 1
    h_all = ((1 << h.n) - 1) << g.n
    adj = [g.adj[v] | h_all for v in range(g.n)]
    adj += [(h.adj[v] << g.n) | g_all for v in range(h.n)]
    return Graph(n, tuple(adj))


def union(g: Graph, h: Graph) -> Graph:
    """Vertex-disjoint union; h's vertices are shifted above g's."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise OrderTooLarge(f"union order {n} exceeds {MAX_ORDER}")
    adj = list(g.adj) + [h.adj[v] << g.n for v in range(h.n)]
    return Graph(n, tuple(adj))


def disjoint_copies(k: int, g: Graph) -> Graph:
    """Union of k vertex-disjoint copies of g (k >= 1)."""
    if k < 1:
        raise ParamOutOfRange(f"need at least one copy, got k={k}")
    if k * g.n > MAX_ORDER:
        raise OrderTooLarge(f"{k} copies of an order-{g.n} graph exceed {MAX_ORDER}")
    out = g
    for _ in range(k - 1):
        out = union(out, g)
    return out


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n)))


def add_vertex(g: Graph, neighbour_mask: int) -> Graph:
    """Append vertex g.n adjacent to the vertices set in neighbour_mask."""
    if g.n + 1 > MAX_ORDER:
        raise OrderTooLarge(f"order {g.n + 1} exceeds {MAX_ORDER}")
    if neighbour_mask >> g.n:
        raise BadEdge("neighbour mask has bits outside the existing vertices")
    bit = 1 << g.n
    adj = [g.adj[v] | bit if neighbour_mask >> v & 1 else g.adj[v] for v in range(g.n)]
    adj.append(neighbour_mask)
    return Graph(g.n + 1, tuple(adj))


def delete_last_vertex(g: Graph) -> Graph:
    if g.n == 0:
        raise BadEdge("cannot delete from the order-0 graph")
    keep = (1 << (g.n - 1)) - 1
    return Graph(g.n - 1, tuple(g.adj[v] & keep for v in range(g.n - 1)))


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Relabel so that old vertex v becomes perm[v]."""
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        old = g.adj[v]
        while old:
            u = (old & -old).bit_length() - 1
            row |= 1 << perm[u]
            old &= old - 1
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj))


# ---------------------------------------------------------------------------
# structural facts
# ---------------------------------------------------------------------------


def degrees(g: Graph) -> tuple[int, ...]:
    return tuple(row.bit_count() for row in g.adj)


def max_degree(g: Graph) -> int:
    return max((row.bit_count() for row in g.adj), default=0)


def edge_count(g: Graph) -> int:
    return sum(row.bit_count() for row in g.adj) // 2


def edges(g: Graph) -> list[tuple[int, int]]:
    out = []
    for v in range(g.n):
        row = g.adj[v] >> (v + 1) << (v + 1)
        while row:
            u = (row & -row).bit_length() - 1
            out.append((v, u))
            row &= row - 1
    return out


def has_edge(g: Graph, u: int, v: int) -> bool:
    return bool(g.adj[u] >> v & 1)


def is_connected(g: Graph) -> bool:
    """Connectivity; the order-0 and order-1 graphs count as connected."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, lowest vertex first."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_bipartite(g: Graph) -> Optional[tuple[int, int]]:
    """Return a 2-colouring as a pair of vertex masks, or None.

    Each component is coloured from its lowest vertex, which lands in the
    first mask, so the output is deterministic.
    """
    colour = [-1] * g.n
    side = [0, 0]
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        side[0] |= 1 << start
        queue = [start]
        while queue:
            v = queue.pop()
            row = g.adj[v]
            want = 1 - colour[v]
            while row:
                u = (row & -row).bit_length() - 1
                row &= row - 1
                if colour[u] == -1:
                    colour[u] = want
                    side[want] |= 1 << u
                    queue.append(u)
                elif colour[u] != want:
                    return None
    return side[0], side[1]


def is_triangle_free(g: Graph) -> bool:
    for v in range(g.n):
        row = g.adj[v] >> (v + 1) << (v + 1)
        while row:
            u = (row & -row).bit_length() - 1
            row &= row - 1
            if g.adj[v] & g.adj[u]:
                return False
    return True


def check_invariants(g: Graph) -> None:
    """Raise AssertionError unless adjacency is symmetric, loop-free, in range."""
    assert 0 <= g.n <= MAX_ORDER and len(g.adj) == g.n
    full = (1 << g.n) - 1
    for v in range(g.n):
        assert g.adj[v] & ~full == 0, f"vertex {v} has neighbours >= n"
        assert g.adj[v] >> v & 1 == 0, f"loop at {v}"
        row = g.adj[v]
        while row:
            u = (row & -row).bit_length() - 1
            row &= row - 1
            assert g.adj[u] >> v & 1, f"asymmetric pair ({v},{u})"


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------


def _twin_generators(n: int, adj: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Transpositions of twin vertices (equal neighbourhoods, with or without
    the mutual edge) — automorphisms known before any search."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        for v in range(u + 1, n):
            au, av = adj[u], adj[v]
            if au == av or (au >> v & 1 and au ^ (1 << v) == av ^ (1 << u)):
                parent[find(u)] = find(v)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    gens = []
    ident = list(range(n))
    for members in classes.values():
        for a, b in zip(members, members[1:]):
            sigma = ident.copy()
            sigma[a], sigma[b] = b, a
            gens.append(tuple(sigma))
    return gens


def _equitable_colors(n: int, adj: tuple[int, ...]) -> list[int]:
    """Stable colour refinement with isomorphism-invariant colour ids.

    Colours start as degrees; each round recolours by (own colour, sorted
    neighbour-colour multiset), with ids assigned by the sorted order of the
    distinct signatures.  Refinement only ever splits cells, so the partition
    is stable exactly when the colour count stops growing.
    """
    colors = [adj[v].bit_count() for v in range(n)]
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            row = adj[v]
            neigh = []
            while row:
                u = (row & -row).bit_length() - 1
                row &= row - 1
                neigh.append(colors[u])
            neigh.sort()
            sigs.append((colors[v], tuple(neigh)))
        table = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colors = [table[sig] for sig in sigs]
        if len(table) == ncolors:
            return colors
        ncolors = len(table)


def _min_code_search(n: int, adj: tuple[int, ...]):
    """Minimal column-major upper-triangle bit string over the orderings the
    canonical labelling allows: vertices are placed cell by cell of the
    equitable (colour-refinement) partition, cells in invariant colour order.

    cols[j] holds the j bits of column j (adjacency of the vertex at position
    j to positions 0..j-1, most significant bit = position 0), so comparing
    int lists compares bit strings.  Pruning: (a) branch-and-bound against
    the best code found so far, (b) one candidate per orbit of the known
    automorphisms — twin swaps seeded up front plus whatever the search
    discovers when two orderings produce the same code.
    Returns (cols, perm, generators).
    """
    deg = [adj[v].bit_count() for v in range(n)]
    if n <= 1:
        return [0] * n, list(range(n)), []
    colors = _equitable_colors(n, adj)
    # positions are filled cell by cell in increasing colour id
    position_color = sorted(colors)

    prefix: list[int] = []
    cols: list[int] = [0] * n
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    gens: list[tuple[int, ...]] = _twin_generators(n, adj)
    gen_set = set(gens)

    def orbit_find(fixers):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in fixers:
            for v in range(n):
                rv, rg = find(v), find(g[v])
                if rv != rg:
                    parent[rv] = rg
        return find

    def dfs(depth: int, keys: dict[int, int]) -> None:
        nonlocal best_cols, best_perm
        if depth == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols.copy()
                best_perm = prefix.copy()
            elif cols == best_cols:
                sigma = [0] * n
                for i in range(n):
                    sigma[best_perm[i]] = prefix[i]
                tsigma = tuple(sigma)
                if any(sigma[i] != i for i in range(n)) and tsigma not in gen_set:
                    gens.append(tsigma)
                    gen_set.add(tsigma)
            return

        want = position_color[depth]
        cands = sorted((col, deg[v], v) for v, col in keys.items() if colors[v] == want)

        tried: list[int] = []
        find = None
        gens_seen = -1
        tight = best_cols is not None and cols[:depth] == best_cols[:depth]
        for col, _, v in cands:
            if gens:
                if find is None or gens_seen != len(gens):
                    fixers = [g for g in gens if all(g[p] == p for p in prefix)]
                    find = orbit_find(fixers) if fixers else None
                    gens_seen = len(gens)
                if find is not None:
                    rv = find(v)
                    if any(find(u) == rv for u in tried):
                        tried.append(v)
                        continue
            if tight:
                bc = best_cols[depth]
                if col > bc:
                    break  # candidates are sorted; the rest only get worse
            prefix.append(v)
            cols[depth] = col
            child_keys = {
                u: key << 1 | (adj[u] >> v & 1) for u, key in keys.items() if u != v
            }
            dfs(depth + 1, child_keys)
            prefix.pop()
            tried.append(v)
            # best can only have moved to a descendant, so we are tight now
            tight = best_cols is not None and cols[:depth] == best_cols[:depth]

    dfs(0, {v: 0 for v in range(n)})
    cols[0] = 0
    return best_cols, best_perm, gens


def _pack_cols(n: int, cols: list[int]) -> bytes:
    bits = []
    for j in range(1, n):
        col = cols[j]
        for shift in range(j - 1, -1, -1):
            bits.append(col >> shift & 1)
    out = bytearray()
    for i in range(0, len(bits), 8):
        byte = 0
        for b in bits[i : i + 8]:
            byte = byte << 1 | b
        byte <<= 8 - min(8, len(bits) - i)
        out.append(byte)
    return bytes(out)


def canonical_form(g: Graph, ceiling: int = CANONICAL_CEILING) -> CanonicalForm:
    """Canonical relabelling, code, and discovered automorphism generators."""
    if g.n > ceiling:
        raise OrderTooLarge(f"canonical labelling capped at order {ceiling}, got {g.n}")
    cols, perm, gens = _min_code_search(g.n, g.adj)
    inv = [0] * g.n
    for pos, v in enumerate(perm):
        inv[v] = pos
    canon = relabel(g, tuple(inv))
    # conjugate the generators into the canonical labelling
    canon_gens = tuple(
        tuple(inv[sigma[perm[i]]] for i in range(g.n)) for sigma in gens
    )
    code = CanonicalCode(g.n, _pack_cols(g.n, cols))
    return CanonicalForm(canon, code, canon_gens)


def canonical_code(g: Graph, ceiling: int = CANONICAL_CEILING) -> CanonicalCode:
    if g.n > ceiling:
        raise OrderTooLarge(f"canonical labelling capped at order {ceiling}, got {g.n}")
    cols, _, _ = _min_code_search(g.n, g.adj)
    return CanonicalCode(g.n, _pack_cols(g.n, cols))


def canonicalize(g: Graph, ceiling: int = CANONICAL_CEILING) -> Graph:
    return canonical_form(g, ceiling).graph


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------


def _triangle_bits(g: Graph) -> Iterator[int]:
    for j in range(1, g.n):
        for i in range(j):
            yield g.adj[i] >> j & 1


def graph6_encode(g: Graph) -> str:
    """Encode in graph6 text form (one line, no trailing newline)."""
    if g.n <= 62:
        head = chr(63 + g.n)
    else:
        head = "~" + "".join(chr(63 + (g.n >> s & 63)) for s in (12, 6, 0))
    out = [head]
    acc = 0
    filled = 0
    for bit in _triangle_bits(g):
        acc = acc << 1 | bit
        filled += 1
        if filled == 6:
            out.append(chr(63 + acc))
            acc = 0
            filled = 0
    if filled:
        acc <<= 6 - filled
        out.append(chr(63 + acc))
    return "".join(out)


def graph6_decode(line: str) -> Graph:
    """Decode one graph6 line; raises ParseError with the offending byte offset."""
    s = line.rstrip("\r\n")
    if not s:
        raise ParseError("empty graph6 input", offset=0)
    pos = 0
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            if len(s) < 8:
                raise ParseError("truncated graph6 order field", offset=len(s))
            chunk, pos = s[2:8], 8
        else:
            if len(s) < 4:
                raise ParseError("truncated graph6 order field", offset=len(s))
            chunk, pos = s[1:4], 4
        n = 0
        for i, c in enumerate(chunk):
            v = ord(c) - 63
            if not 0 <= v <= 63:
                raise ParseError(f"invalid graph6 byte {c!r}", offset=pos - len(chunk) + i)
            n = n << 6 | v
    else:
        n = ord(s[0]) - 63
        if not 0 <= n <= 62:
            raise ParseError(f"invalid graph6 order byte {s[0]!r}", offset=0)
        pos = 1
    if n > MAX_ORDER:
        raise OrderTooLarge(f"graph6 order {n} exceeds {MAX_ORDER}")

    need = (n * (n - 1) // 2 + 5) // 6
    data = s[pos:]
    if len(data) < need:
        raise ParseError(f"graph6 data truncated: need {need} bytes, got {len(data)}", offset=len(s))
    if len(data) > need:
        raise ParseError("trailing bytes after graph6 data", offset=pos + need)

    adj = [0] * n
    bit_index = 0
    total = n * (n - 1) // 2
    for off, c in enumerate(data):
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise ParseError(f"invalid graph6 byte {c!r}", offset=pos + off)
        for shift in range(5, -1, -1):
            if bit_index >= total:
                break
            if v >> shift & 1:
                i, j = _triangle_position(bit_index)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit_index += 1
    return Graph(n, tuple(adj))


def _triangle_position(k: int) -> tuple[int, int]:
    # column-major upper triangle: k-th bit lies in column j, row i
    j = 1
    while k >= j:
        k -= j
        j += 1
    return k, j
