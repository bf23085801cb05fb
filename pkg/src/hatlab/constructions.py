"""Generators for the graph families the toolkit studies.

Vertex indexing conventions (fixed so witnesses are comparable across runs):

* ``kneser_hypercube(n)``: vertex ``i`` is the n-bit word ``i`` (bit ``j``
  of the word is coordinate ``x_{j+1}``).
* ``shift_graph(k)``: ordered pairs (i, j), i != j, over {1..2k}, indexed
  lexicographically.
* products: flat index is mixed-radix with the left factor as the major
  digit, so ``flat((g, h)) = g * |V(H)| + h``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .bits import iter_bits, iter_submasks, point_to_str
from .errors import SizeLimitError
from .graph_core import Graph
from .rng import chance

DEFAULT_SIZE_LIMIT = 4096


@dataclass(frozen=True)
class ProductIndex:
    """Mixed-radix codec between flat vertex indices and coordinate tuples."""

    factor_sizes: tuple[int, ...]

    @property
    def size(self) -> int:
        return math.prod(self.factor_sizes)

    def flat(self, coords: tuple[int, ...]) -> int:
        if len(coords) != len(self.factor_sizes):
            raise ValueError("coordinate arity mismatch")
        idx = 0
        for c, base in zip(coords, self.factor_sizes):
            if not 0 <= c < base:
                raise ValueError(f"coordinate {c} out of range for factor of size {base}")
            idx = idx * base + c
        return idx

    def coords(self, flat: int) -> tuple[int, ...]:
        if not 0 <= flat < self.size:
            raise ValueError("flat index out of range")
        out = []
        for base in reversed(self.factor_sizes):
            out.append(flat % base)
            flat //= base
        return tuple(reversed(out))

    def fiber(self, free_pos: int, fixed: tuple[int, ...]) -> list[int]:
        """Flat indices obtained by varying coordinate ``free_pos`` while the
        remaining coordinates are pinned to ``fixed`` (in increasing position
        order)."""
        if len(fixed) != len(self.factor_sizes) - 1:
            raise ValueError("need one fixed coordinate per non-free position")
        out = []
        for c in range(self.factor_sizes[free_pos]):
            coords = list(fixed)
            coords.insert(free_pos, c)
            out.append(self.flat(tuple(coords)))
        return out


def kneser_hypercube(n: int) -> Graph:
    """Graph on all n-bit words with edges between disjoint supports.

    The all-zero word is self-looped (its support is disjoint from itself),
    so independent sets are exactly the intersecting families of {0,1}^n.
    Adjacency construction costs O(3^n); keep n modest.
    """
    if not 1 <= n <= 20:
        raise SizeLimitError("kneser_hypercube needs 1 <= n <= 20")
    size = 1 << n
    full = size - 1
    adj = []
    for x in range(size):
        row = 0
        for y in iter_submasks(full ^ x):
            row |= 1 << y
        adj.append(row)
    return Graph(size, tuple(adj))


def hamming_product(G: Graph, H: Graph, limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    """Product where (x, v) ~ (y, u) iff (x == y and v ~ u) or (v == u and x ~ y).

    Self-loops propagate: (x, v) is self-looped iff x or v is.  Flat indexing
    puts G as the major factor.
    """
    size = G.n * H.n
    if size > limit:
        raise SizeLimitError(f"product has {size} vertices, over the limit of {limit}")
    nH = H.n
    # bits of spread[g] sit at positions g' * nH for each neighbor g' of g
    spread = [sum(1 << (gp * nH) for gp in iter_bits(G.adj[g])) for g in range(G.n)]
    adj = []
    for g in range(G.n):
        base = g * nH
        for h in range(H.n):
            adj.append((H.adj[h] << base) | (spread[g] << h))
    return Graph(size, tuple(adj))


def hamming_power(G: Graph, t: int, limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    """t-fold left-associated product of G with itself."""
    if t < 1:
        raise ValueError("power needs t >= 1")
    if G.n**t > limit:
        raise SizeLimitError(f"power has {G.n ** t} vertices, over the limit of {limit}")
    return reduce(lambda acc, _: hamming_product(acc, G, limit=limit), range(t - 1), G)


def shift_graph(k: int) -> Graph:
    """Ordered pairs over {1..2k}; (a,b) ~ (c,d) iff b == c or d == a.

    The vertices are the arcs of the complete directed graph on 2k points;
    adjacency means the two arcs form a (possibly closed) directed 2-path.
    """
    if k < 1:
        raise ValueError("shift_graph needs k >= 1")
    points = 2 * k
    pairs = [(i, j) for i in range(1, points + 1) for j in range(1, points + 1) if i != j]
    n = len(pairs)
    adj = [0] * n
    for p, (a, b) in enumerate(pairs):
        for q in range(p + 1, n):
            c, d = pairs[q]
            if b == c or d == a:
                adj[p] |= 1 << q
                adj[q] |= 1 << p
    return Graph(n, tuple(adj))


def shift_graph_labels(k: int) -> list[str]:
    points = 2 * k
    return [
        f"({i},{j})" for i in range(1, points + 1) for j in range(1, points + 1) if i != j
    ]


def cayley_distance_graph(m: int, t: int, limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    """m-bit words, adjacent iff their Hamming distance exceeds m - 2t.

    Requires m even and 4t^2 <= m.  Translation-invariant (a Cayley graph of
    Z_2^m), and never self-looped since distance 0 <= m - 2t here.
    """
    if m < 2 or m % 2 != 0:
        raise ValueError("cayley_distance_graph needs even m >= 2")
    if t < 1 or 4 * t * t > m:
        raise ValueError("cayley_distance_graph needs t >= 1 with 4*t^2 <= m")
    size = 1 << m
    if size > limit:
        raise SizeLimitError(f"graph has {size} vertices, over the limit of {limit}")
    cut = m - 2 * t
    offsets = [w for w in range(size) if w.bit_count() > cut]
    adj = []
    for x in range(size):
        row = 0
        for w in offsets:
            row |= 1 << (x ^ w)
        adj.append(row)
    return Graph(size, tuple(adj))


def hypercube_labels(n: int) -> list[str]:
    return [point_to_str(w, n) for w in range(1 << n)]


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each unordered pair is an edge independently with probability p.

    Reproducible: the coin for pair (u, v) is keyed by (seed, u, v) alone.
    """
    if n < 1:
        raise ValueError("random_gnp needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if chance(p, seed, u, v):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def product_labels(factor_labels: list[list[str]]) -> list[str]:
    """Labels for a product graph, major factor first."""
    codec = ProductIndex(tuple(len(lab) for lab in factor_labels))
    out = []
    for flat in range(codec.size):
        coords = codec.coords(flat)
        out.append("(" + ",".join(factor_labels[i][c] for i, c in enumerate(coords)) + ")")
    return out
