"""Bit-vector graphs with exact maximum-independent-set machinery.

A graph stores one adjacency row per vertex as a Python int, bit ``u`` of
row ``v`` meaning ``u ~ v``.  A set bit on the diagonal is a self-loop; a
self-looped vertex is barred from every independent set.  All exact solvers
are deterministic: fixed vertex order, fixed branching order, no randomness.
"""

from __future__ import annotations

import hashlib
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .bits import iter_bits
from .errors import BudgetExceededError, CapExceededError, GraphFormatError

DEFAULT_NODE_BUDGET = 20_000_000
DEFAULT_ENUM_CAP = 200_000


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of an n-vertex graph, stored as a bit mask."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("bits out of range for vertex count")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in indices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            bits |= 1 << v
        return cls(n, bits)

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1


@dataclass(frozen=True)
class Graph:
    """Undirected graph on indexed vertices with bit-vector adjacency rows.

    ``n == 0`` is permitted only as the sentinel produced by taking an
    induced subgraph on the empty set; ``make_graph`` requires ``n >= 1``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits outside the vertex range")
            for u in iter_bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def has_loop(self, v: int) -> bool:
        return (self.adj[v] >> v) & 1 == 1

    @property
    def loops_mask(self) -> int:
        return sum(1 << v for v in range(self.n) if (self.adj[v] >> v) & 1)

    @property
    def n_edges(self) -> int:
        """Number of distinct edges, counting each self-loop once."""
        total = sum(row.bit_count() for row in self.adj)
        loops = self.loops_mask.bit_count()
        return (total - loops) // 2 + loops

    def edges(self) -> list[tuple[int, int]]:
        """Distinct edges as (u, v) pairs with u <= v, sorted."""
        out = []
        for v in range(self.n):
            for u in iter_bits(self.adj[v] >> v):
                out.append((v, v + u))
        return out

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()


@dataclass(frozen=True)
class MISResult:
    """Exact maximum independent set: size, a witness, and the ratio alpha/n."""

    alpha: int
    witness: VertexSet
    alpha_bar: Fraction


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; (v, v) declares a self-loop.

    Duplicate edges collapse; adjacency comes out symmetric.
    """
    if n <= 0:
        raise ValueError("make_graph needs n >= 1")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph() -> Graph:
    """The 0-vertex sentinel; alpha of it is defined as 0."""
    return Graph(0, ())


def graph_fingerprint(G: Graph) -> str:
    """Short stable digest of the adjacency structure, for result records."""
    h = hashlib.sha256()
    h.update(str(G.n).encode())
    for row in G.adj:
        h.update(b",")
        h.update(row.to_bytes((G.n + 7) // 8 or 1, "little"))
    return h.hexdigest()[:12]


# ---------------------------------------------------------------------------
# Exact solvers.  Maximum independent sets in G are maximum cliques in the
# complement, searched by branch and bound with a greedy-coloring upper
# bound on the candidate set (the standard exact approach at this scale).
# ---------------------------------------------------------------------------


def _complement_rows(G: Graph) -> tuple[list[int], int]:
    """Complement adjacency restricted to non-self-looped vertices."""
    allowed = ((1 << G.n) - 1) & ~G.loops_mask if G.n else 0
    rows = [0] * G.n
    for v in iter_bits(allowed):
        rows[v] = allowed & ~G.adj[v] & ~(1 << v)
    return rows, allowed


def _color_bound(P: int, rows: Sequence[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of P in the complement view.

    Returns vertices ordered by color class and the per-vertex class number;
    a clique can use at most one vertex per class, so the class number of a
    vertex bounds any clique inside the vertices ordered up to it.
    """
    order: list[int] = []
    bound: list[int] = []
    color = 0
    rest = P
    while rest:
        color += 1
        q = rest
        while q:
            v = (q & -q).bit_length() - 1
            bit = 1 << v
            q &= ~rows[v]
            q ^= bit
            rest ^= bit
            order.append(v)
            bound.append(color)
    return order, bound


def max_independent_set(G: Graph, budget: int = DEFAULT_NODE_BUDGET) -> MISResult:
    """Exact alpha(G) with a witness.

    Deterministic: the witness is the first optimum reached under the fixed
    branching order.  Raises :class:`BudgetExceededError` carrying the best
    lower/upper bounds when the node budget runs out.
    """
    if G.n == 0:
        return MISResult(0, VertexSet(0, 0), Fraction(0))
    rows, allowed = _complement_rows(G)
    if allowed == 0:
        return MISResult(0, VertexSet(G.n, 0), Fraction(0))

    sys.setrecursionlimit(max(sys.getrecursionlimit(), G.n + 1000))
    best_size = 0
    best_mask = 0
    nodes = 0
    _, root_bound = _color_bound(allowed, rows)
    root_upper = root_bound[-1] if root_bound else 0

    def expand(r_mask: int, r_size: int, P: int) -> None:
        nonlocal best_size, best_mask, nodes
        if P == 0:
            if r_size > best_size:
                best_size = r_size
                best_mask = r_mask
            return
        order, bound = _color_bound(P, rows)
        local = P
        for i in range(len(order) - 1, -1, -1):
            if r_size + bound[i] <= best_size:
                return
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"independent-set search exceeded {budget} nodes",
                    lower_bound=best_size,
                    upper_bound=root_upper,
                    nodes=nodes,
                )
            v = order[i]
            bit = 1 << v
            expand(r_mask | bit, r_size + 1, local & rows[v])
            local ^= bit

    expand(0, 0, allowed)
    return MISResult(best_size, VertexSet(G.n, best_mask), Fraction(best_size, G.n))


def enumerate_maximum_independent_sets(
    G: Graph, cap: int = DEFAULT_ENUM_CAP, budget: int = DEFAULT_NODE_BUDGET
) -> list[VertexSet]:
    """All independent sets of size exactly alpha(G), sorted by bit mask.

    Raises :class:`CapExceededError` (carrying the count found so far) once
    more than ``cap`` sets exist.
    """
    alpha = max_independent_set(G, budget=budget).alpha
    if G.n == 0 or alpha == 0:
        return [VertexSet(G.n, 0)]
    rows, allowed = _complement_rows(G)
    found: list[int] = []
    nodes = 0

    def expand(r_mask: int, r_size: int, P: int) -> None:
        nonlocal nodes
        if r_size == alpha:
            found.append(r_mask)
            if len(found) > cap:
                raise CapExceededError(
                    f"more than {cap} maximum independent sets", found=len(found)
                )
            return
        if P == 0:
            return
        order, bound = _color_bound(P, rows)
        local = P
        for i in range(len(order) - 1, -1, -1):
            if r_size + bound[i] < alpha:
                return
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"enumeration exceeded {budget} nodes", lower_bound=alpha, nodes=nodes
                )
            v = order[i]
            bit = 1 << v
            expand(r_mask | bit, r_size + 1, local & rows[v])
            local ^= bit

    expand(0, 0, allowed)
    return [VertexSet(G.n, m) for m in sorted(found)]


def enumerate_maximal_independent_sets(
    G: Graph, min_size: int = 0, cap: int = DEFAULT_ENUM_CAP
) -> list[VertexSet]:
    """Containment-maximal independent sets of size >= min_size, sorted.

    Bron-Kerbosch with pivoting on the complement-clique view.
    """
    if G.n == 0:
        return [VertexSet(0, 0)] if min_size <= 0 else []
    rows, allowed = _complement_rows(G)
    found: list[int] = []

    def bk(R: int, P: int, X: int) -> None:
        if P == 0 and X == 0:
            if R.bit_count() >= min_size:
                found.append(R)
                if len(found) > cap:
                    raise CapExceededError(
                        f"more than {cap} maximal independent sets", found=len(found)
                    )
            return
        if R.bit_count() + P.bit_count() < min_size:
            return
        # pivot: vertex of P|X maximizing |P & rows[u]|, lowest index on ties
        best_u = -1
        best_cnt = -1
        for u in iter_bits(P | X):
            cnt = (P & rows[u]).bit_count()
            if cnt > best_cnt:
                best_cnt = cnt
                best_u = u
        ext = P & ~rows[best_u]
        for v in iter_bits(ext):
            bit = 1 << v
            bk(R | bit, P & rows[v], X & rows[v])
            P ^= bit
            X |= bit

    bk(0, allowed, 0)
    return [VertexSet(G.n, m) for m in sorted(found)]


def induced_subgraph(G: Graph, S: VertexSet) -> Graph:
    """Subgraph on S, vertices reindexed in increasing original order.

    The empty S yields the 0-vertex sentinel graph.
    """
    if S.n != G.n:
        raise ValueError("vertex set size does not match the graph")
    keep = S.indices()
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in iter_bits(G.adj[v] & S.bits):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(keep), tuple(adj))


def subset_alpha_table(G: Graph) -> list[int]:
    """alpha(G[W]) for every vertex subset W, indexed by W's bit mask.

    O(2^n) dynamic program; intended for n <= ~20.  Self-looped vertices
    contribute nothing, matching the solvers above.
    """
    n = G.n
    loops = G.loops_mask
    closed = [G.adj[v] | (1 << v) for v in range(n)]
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        without = table[mask ^ (1 << v)]
        if (loops >> v) & 1:
            table[mask] = without
        else:
            table[mask] = max(without, 1 + table[mask & ~closed[v]])
    return table


# ---------------------------------------------------------------------------
# Text format: header "graph <n> <m>", one "e <u> <v>" line per edge
# (0-based, self-loop as "e v v"), optional "c ..." comment lines.
# ---------------------------------------------------------------------------


def write_graph_text(G: Graph, labels: Sequence[str] | None = None) -> str:
    edges = G.edges()
    lines = [f"graph {G.n} {len(edges)}"]
    if labels is not None:
        if len(labels) != G.n:
            raise ValueError("need one label per vertex")
        for v, lab in enumerate(labels):
            lines.append(f"c label {v} {lab}")
    lines.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    n = None
    declared = 0
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "graph":
            if n is not None:
                raise GraphFormatError(line_no, "duplicate header")
            if len(fields) != 3:
                raise GraphFormatError(line_no, "expected 'graph <n> <m>'")
            try:
                n, declared = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(line_no, "non-integer header fields") from None
            if n <= 0 or declared < 0:
                raise GraphFormatError(line_no, "header values out of range")
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError(line_no, "edge before header")
            if len(fields) != 3:
                raise GraphFormatError(line_no, "expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(line_no, "non-integer endpoints") from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(line_no, f"endpoint out of range for n={n}")
            edges.append((u, v))
        else:
            raise GraphFormatError(line_no, f"unrecognized line {line!r}")
    if n is None:
        raise GraphFormatError(1, "missing 'graph <n> <m>' header")
    if len(edges) != declared:
        raise GraphFormatError(
            1, f"header declares {declared} edges but file has {len(edges)}"
        )
    return make_graph(n, edges)
