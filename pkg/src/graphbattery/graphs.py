"""Simple undirected graphs stored as upper-triangle bitsets.

Vertices are labeled 0..n-1. The unordered pair (i, j) with i < j occupies
bit ``(2n - i - 1) * i // 2 + (j - i - 1)`` of ``bits`` (row-major upper
triangle). Graphs are immutable values; every operation here is a pure
function of its inputs.

Isomorphism handling is exact: canonical forms are obtained by minimizing
the bit-packed adjacency over all n! vertex relabelings, which is cheap up
to n = 8 (40320 permutations applied as vectorized bit shuffles).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "AtlasRecord",
    "pair_count",
    "pair_index",
    "from_bits",
    "from_edges",
    "star",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "pineapple",
    "perturbed_star",
    "is_connected",
    "degrees",
    "degree_stats",
    "independence_number",
    "automorphism_count",
    "canonical_bits",
    "canonical_form",
    "graph_key",
    "relabel",
    "enumerate_connected",
    "enumerate_graphs",
    "atlas_sort",
    "to_edge_list",
    "from_edge_list",
    "to_hex",
    "from_hex",
]

MAX_CANONICAL_N = 8
MAX_AUTOMORPHISM_N = 10


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, i: int, j: int) -> int:
    """Bit position of the unordered pair (i, j) in an n-vertex bitset."""
    if i > j:
        i, j = j, i
    return (2 * n - i - 1) * i // 2 + (j - i - 1)


@functools.lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count, edge bitset, cached edge count."""

    n: int
    bits: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        if not 0 <= self.bits < (1 << pair_count(self.n)):
            raise ValueError("edge bitset out of range for vertex count")
        if self.m != self.bits.bit_count():
            raise ValueError("cached edge count disagrees with bitset")

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return bool(self.bits >> pair_index(self.n, i, j) & 1)

    def edges(self) -> list[tuple[int, int]]:
        ps = _pairs(self.n)
        return [ps[b] for b in _iter_bits(self.bits)]

    def adjacency(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency as float64."""
        a = np.zeros((self.n, self.n))
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1.0
        return a


def _iter_bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def from_bits(n: int, bits: int) -> Graph:
    return Graph(n, bits, bits.bit_count())


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse."""
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    bits = 0
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"vertex out of range: ({i}, {j}) with n={n}")
        if i == j:
            raise ValueError(f"self-loop rejected: ({i}, {j})")
        bits |= 1 << pair_index(n, i, j)
    return from_bits(n, bits)


# ---------------------------------------------------------------------------
# named constructors

def star(n: int) -> Graph:
    """Hub at vertex 0 joined to the n-1 leaves."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return from_edges(n, [(0, j) for j in range(1, n)])


def path(n: int) -> Graph:
    if n < 2:
        raise ValueError("path needs n >= 2")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    return from_bits(n, (1 << pair_count(n)) - 1)


def complete_bipartite(p: int, q: int) -> Graph:
    """Parts {0..p-1} and {p..p+q-1}, all cross edges."""
    if p < 1 or q < 1:
        raise ValueError("both parts need at least one vertex")
    return from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def pineapple(n: int, q: int) -> Graph:
    """q-clique on {0..q-1} plus n-q pendant vertices all attached to vertex 0."""
    if not 1 <= q <= n:
        raise ValueError("need 1 <= q <= n")
    edges = [(i, j) for i in range(q) for j in range(i + 1, q)]
    edges += [(0, v) for v in range(q, n)]
    return from_edges(n, edges)


def perturbed_star(n: int) -> Graph:
    """Star plus one edge between two leaves."""
    if n < 3:
        raise ValueError("perturbed star needs n >= 3")
    g = star(n)
    return from_bits(n, g.bits | (1 << pair_index(n, 1, 2)))


# ---------------------------------------------------------------------------
# combinatorial observables

def _row_masks(g: Graph) -> list[int]:
    rows = [0] * g.n
    for i, j in g.edges():
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return rows


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    rows = _row_masks(g)
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def degrees(g: Graph) -> list[int]:
    return [r.bit_count() for r in _row_masks(g)]


def degree_stats(g: Graph) -> tuple[float, float, float]:
    """(mean degree, relative rms degree fluctuation, euclidean degree norm)."""
    if g.m == 0:
        raise ValueError("degree statistics need at least one edge")
    d = np.array(degrees(g), dtype=float)
    mean = 2.0 * g.m / g.n
    rms = float(np.sqrt(np.mean((d - mean) ** 2)) / mean)
    return mean, rms, float(np.linalg.norm(d))


def independence_number(g: Graph) -> int:
    """Exact maximum independent set size by bitmask branch and bound."""
    rows = _row_masks(g)
    best = 0

    def rec(avail: int, size: int):
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if avail == 0:
            best = max(best, size)
            return
        # branch on the highest-degree vertex inside avail
        v, dv = -1, -1
        t = avail
        while t:
            low = t & -t
            u = low.bit_length() - 1
            t ^= low
            du = (rows[u] & avail).bit_count()
            if du > dv:
                v, dv = u, du
        if dv == 0:
            best = max(best, size + avail.bit_count())
            return
        rec(avail & ~(rows[v] | (1 << v)), size + 1)
        rec(avail & ~(1 << v), size)

    rec((1 << g.n) - 1, 0)
    return best


# ---------------------------------------------------------------------------
# isomorphism machinery: exhaustive permutation minimization

@functools.lru_cache(maxsize=None)
def _perm_vertex_table(n: int) -> np.ndarray:
    """(n!, n) int64 array of all vertex permutations in lexicographic order."""
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


@functools.lru_cache(maxsize=None)
def _perm_shift_table(n: int) -> np.ndarray:
    """(n!, P) int64 table, entry [p, b] = bitmask of pair b's image under p."""
    perms = _perm_vertex_table(n)
    tbl = np.empty((perms.shape[0], pair_count(n)), dtype=np.int64)
    for b, (i, j) in enumerate(_pairs(n)):
        a, c = perms[:, i], perms[:, j]
        lo, hi = np.minimum(a, c), np.maximum(a, c)
        tbl[:, b] = np.int64(1) << ((2 * n - lo - 1) * lo // 2 + (hi - lo - 1))
    return tbl


def _orbit_images(g: Graph) -> np.ndarray:
    """Bitsets of all n! relabelings of g (n <= 8)."""
    tbl = _perm_shift_table(g.n)
    idx = list(_iter_bits(g.bits))
    if not idx:
        return np.zeros(tbl.shape[0], dtype=np.int64)
    return np.bitwise_or.reduce(tbl[:, idx], axis=1)


def _perm_chunks(n: int, chunk: int):
    it = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def canonical_bits(g: Graph) -> int:
    """Minimal adjacency bitset over all vertex relabelings; exact for n <= 8."""
    if g.n > MAX_CANONICAL_N:
        raise ValueError(f"exhaustive canonical form supports n <= {MAX_CANONICAL_N}")
    if g.n == 1:
        return 0
    return int(_orbit_images(g).min())


def canonical_form(g: Graph) -> Graph:
    return from_bits(g.n, canonical_bits(g))


def graph_key(g: Graph) -> bytes:
    """Canonical-form byte string; equal iff the graphs are isomorphic."""
    nbytes = max(1, (pair_count(g.n) + 7) // 8)
    return canonical_bits(g).to_bytes(nbytes, "big")


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    return from_edges(g.n, [(perm[i], perm[j]) for i, j in g.edges()])


def automorphism_count(g: Graph) -> int:
    """Number of adjacency-preserving vertex permutations (n <= 10)."""
    if g.n > MAX_AUTOMORPHISM_N:
        raise ValueError(f"exhaustive automorphism count supports n <= {MAX_AUTOMORPHISM_N}")
    if g.n == 1:
        return 1
    if g.n <= MAX_CANONICAL_N:
        return int((_orbit_images(g) == g.bits).sum())
    # n in {9, 10}: chunked so the shift tables stay small
    edges = g.edges()
    n, count = g.n, 0
    for chunk in _perm_chunks(n, 120_000):
        acc = np.zeros(chunk.shape[0], dtype=np.int64)
        for i, j in edges:
            a, c = chunk[:, i], chunk[:, j]
            lo, hi = np.minimum(a, c), np.maximum(a, c)
            acc |= np.int64(1) << ((2 * n - lo - 1) * lo // 2 + (hi - lo - 1))
        count += int((acc == g.bits).sum())
    return count


# ---------------------------------------------------------------------------
# exhaustive isomorphism-free enumeration

@functools.lru_cache(maxsize=None)
def enumerate_connected(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs on n vertices.

    Grows classes by attaching a fresh vertex to every nonempty subset of each
    (n-1)-vertex class and deduplicating by canonical form. Every connected
    graph has a non-cut vertex, so the augmentation is exhaustive. Output is
    sorted by canonical bitset.
    """
    if not 1 <= n <= MAX_CANONICAL_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_CANONICAL_N}")
    if n == 1:
        return (from_bits(1, 0),)
    shift_map = [pair_index(n, i, j) for i, j in _pairs(n - 1)]
    leaf_bit = [1 << pair_index(n, v, n - 1) for v in range(n - 1)]
    subset_bits = []
    for s in range(1, 1 << (n - 1)):
        extra = 0
        for v in _iter_bits(s):
            extra |= leaf_bit[v]
        subset_bits.append(extra)
    candidates = set()
    for g in enumerate_connected(n - 1):
        base = 0
        for b in _iter_bits(g.bits):
            base |= 1 << shift_map[b]
        for extra in subset_bits:
            candidates.add(base | extra)
    classes = {canonical_bits(from_bits(n, c)) for c in candidates}
    return tuple(from_bits(n, b) for b in sorted(classes))


def _compose_components(n: int, parts: list[Graph]) -> Graph:
    bits = 0
    offset = 0
    for comp in parts:
        for i, j in comp.edges():
            bits |= 1 << pair_index(n, i + offset, j + offset)
        offset += comp.n
    return from_bits(n, bits)


@functools.lru_cache(maxsize=None)
def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """All isomorphism classes on n vertices, disconnected ones included.

    Built as multisets of connected classes (component decomposition is
    unique, so no extra isomorphism filtering is needed).
    """
    if not 1 <= n <= MAX_CANONICAL_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_CANONICAL_N}")
    comp = {k: enumerate_connected(k) for k in range(1, n + 1)}
    out: list[Graph] = []

    def rec(remaining: int, max_size: int, max_idx: int, parts: list[Graph]):
        if remaining == 0:
            out.append(_compose_components(n, parts))
            return
        for k in range(min(remaining, max_size), 0, -1):
            hi = max_idx if k == max_size else len(comp[k]) - 1
            for idx in range(hi, -1, -1):
                parts.append(comp[k][idx])
                rec(remaining - k, k, idx, parts)
                parts.pop()

    rec(n, n, len(comp[n]) - 1, [])
    return tuple(sorted(out, key=lambda g: (g.m, g.bits)))


# ---------------------------------------------------------------------------
# atlas-style ordering

@dataclass(frozen=True)
class AtlasRecord:
    index: int
    graph: Graph
    m: int
    degseq: tuple[int, ...]
    aut: int


def atlas_sort(graphs: Sequence[Graph]) -> list[AtlasRecord]:
    """Sort by (edge count, ascending degree sequence, automorphism count).

    Ties are broken by canonical bitset so the ordering is total and
    reproducible. Index is the 0-based rank.
    """
    if not graphs:
        return []
    n0 = graphs[0].n
    if any(g.n != n0 for g in graphs):
        raise ValueError("atlas ordering requires graphs on the same vertex count")
    keyed = [
        (g.m, tuple(sorted(degrees(g))), automorphism_count(g), canonical_bits(g), g)
        for g in graphs
    ]
    keyed.sort(key=lambda t: t[:4])
    return [
        AtlasRecord(i, g, mm, ds, aut) for i, (mm, ds, aut, _, g) in enumerate(keyed)
    ]


# ---------------------------------------------------------------------------
# serialization

def to_edge_list(g: Graph) -> str:
    """Text format: header line ``n m``, then one ``i j`` line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines += [f"{i} {j}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not rows:
        raise ValueError("empty edge-list text")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError("header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    edges = []
    for ln in rows[1:]:
        i, j = ln.split()
        edges.append((int(i), int(j)))
    g = from_edges(n, edges)
    if g.m != m:
        raise ValueError(f"header claims {m} edges, body has {g.m}")
    return g


def to_hex(g: Graph) -> str:
    """Upper-triangle bitset as lowercase hex, zero-padded, high nibble first."""
    width = max(1, (pair_count(g.n) + 3) // 4)
    return format(g.bits, f"0{width}x")


def from_hex(n: int, s: str) -> Graph:
    return from_bits(n, int(s, 16))
