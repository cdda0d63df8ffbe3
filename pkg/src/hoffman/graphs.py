"""Ordinary simple graphs: bitset storage, clique search, and file I/O.

Graphs are immutable after construction, so values can be shared freely
across threads; every operation in this module is a pure function.  The
enumeration routines are exponential in the worst case and are guarded by an
input-size limit; the intended instances are desk scale.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CliqueLimitExceeded

MAX_VERTICES = 10_000


class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with bitset adjacency."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if n > MAX_VERTICES:
            raise ValueError(f"graphs with more than {MAX_VERTICES} vertices are not supported")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    # -- basic accessors ---------------------------------------------------

    def bits(self, v: int) -> int:
        """Neighborhood of ``v`` as an integer bitset."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            for k in _iter_bits(rest):
                yield (u, u + 1 + k)

    def edge_count(self) -> int:
        return sum(self._adj[u].bit_count() for u in range(self.n)) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices`` (relabelled 0..k-1 in given order)."""
        idx = {v: i for i, v in enumerate(vertices)}
        edges = [
            (idx[u], idx[v])
            for i, u in enumerate(vertices)
            for v in vertices[i + 1:]
            if self.has_edge(u, v)
        ]
        return Graph(len(vertices), edges)

    def adjacency_rows(self) -> list[list[int]]:
        return [[1 if self.has_edge(i, j) else 0 for j in range(self.n)] for i in range(self.n)]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _bitset(vertices: Iterable[int]) -> int:
    b = 0
    for v in vertices:
        b |= 1 << v
    return b


# -- construction helpers --------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- mu parameter ----------------------------------------------------------

def mu_parameter(G: Graph) -> int:
    """Largest number of common neighbors over non-adjacent vertex pairs.

    Returns 0 when no non-adjacent pair exists (complete graphs).
    """
    best = 0
    for u in range(G.n):
        au = G.bits(u)
        for v in range(u + 1, G.n):
            if not (au >> v) & 1:
                common = (au & G.bits(v)).bit_count()
                if common > best:
                    best = common
    return best


# -- maximal clique enumeration --------------------------------------------

@dataclass(frozen=True)
class CliqueSet:
    """A list of cliques of a host graph, each stored as a sorted tuple."""

    cliques: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.cliques]


def maximal_cliques(G: Graph, min_size: int = 1, limit: int = 100_000) -> CliqueSet:
    """All inclusion-maximal cliques of order >= ``min_size``.

    Bron-Kerbosch with pivoting over bitset candidate sets.  The output is
    sorted lexicographically by vertex list, so downstream indexings are
    reproducible.  Raises :class:`CliqueLimitExceeded` once more than
    ``limit`` maximal cliques have been found.
    """
    if min_size < 1:
        raise ValueError("min_size must be positive")
    if limit < 1:
        raise ValueError("limit must be positive")
    found: list[tuple[int, ...]] = []
    count = 0
    adj = G._adj

    def extend(r: list[int], p: int, x: int) -> None:
        nonlocal count
        if p == 0 and x == 0:
            count += 1
            if count > limit:
                raise CliqueLimitExceeded(f"more than {limit} maximal cliques")
            if len(r) >= min_size:
                found.append(tuple(sorted(r)))
            return
        # pivot: vertex of p|x with the most neighbors inside p
        pivot = -1
        best = -1
        for u in _iter_bits(p | x):
            cnt = (p & adj[u]).bit_count()
            if cnt > best:
                best = cnt
                pivot = u
        for v in _iter_bits(p & ~adj[pivot]):
            r.append(v)
            extend(r, p & adj[v], x & adj[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    if G.n:
        extend([], (1 << G.n) - 1, 0)
    return CliqueSet(tuple(sorted(found)))


# -- independent sets -------------------------------------------------------

def _mis_size(cand: int, adj: Sequence[int]) -> int:
    """Order of a maximum independent set inside the bitset ``cand``."""
    if cand == 0:
        return 0
    # branch on a vertex of maximum degree within cand
    best_v = -1
    best_d = -1
    for v in _iter_bits(cand):
        d = (adj[v] & cand).bit_count()
        if d > best_d:
            best_d = d
            best_v = v
    if best_d == 0:
        return cand.bit_count()
    without = _mis_size(cand & ~(1 << best_v), adj)
    with_v = 1 + _mis_size(cand & ~adj[best_v] & ~(1 << best_v), adj)
    return max(without, with_v)


def maximum_independent_set(G: Graph, within: Optional[Iterable[int]] = None) -> tuple[int, ...]:
    """Lexicographically smallest maximum independent set.

    ``within`` restricts the search to a vertex subset (default: all).
    """
    cand = _bitset(within) if within is not None else (1 << G.n) - 1
    adj = G._adj
    alpha = _mis_size(cand, adj)
    chosen: list[int] = []
    for v in range(G.n):
        if not (cand >> v) & 1:
            continue
        rest = cand & ~adj[v] & ~(1 << v)
        if len(chosen) + 1 + _mis_size(rest, adj) == alpha:
            chosen.append(v)
            cand = rest
    return tuple(chosen)


def max_independent_set_in_neighborhood(G: Graph, x: int) -> tuple[int, ...]:
    """Maximum independent set within N(x); ties broken lexicographically."""
    if not 0 <= x < G.n:
        raise ValueError(f"vertex {x} out of range")
    return maximum_independent_set(G, _iter_bits(G.bits(x)))


# -- file formats ------------------------------------------------------------

def graph_from_json(obj) -> Graph:
    """Build a graph from ``{"n": int, "edges": [[u, v], ...]}``."""
    if not isinstance(obj, dict) or "n" not in obj:
        raise ValueError("graph JSON must be an object with keys 'n' and 'edges'")
    return Graph(int(obj["n"]), obj.get("edges", []))


def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges()]}


def parse_graph6(text: str | bytes) -> Graph:
    """Decode a graph6 string (standard format, optional ``>>graph6<<`` header)."""
    if isinstance(text, str):
        data = text.strip().encode("ascii")
    else:
        data = text.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise ValueError("empty graph6 string")
    vals = [b - 63 for b in data]
    if any(v < 0 or v > 63 for v in vals):
        raise ValueError("invalid graph6 character")
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    else:
        raise ValueError("truncated graph6 header")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise ValueError("graph6 body too short")
    bits = []
    for v in body[:need]:
        for k in range(5, -1, -1):
            bits.append((v >> k) & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def load_graph(text: str) -> Graph:
    """Autodetect JSON (first byte ``{``) versus graph6 and parse."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(json.loads(stripped))
    return parse_graph6(stripped)


def load_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return load_graph(fh.read())
