"""Hoffman graphs: construction, special matrices, expansions, and catalogs.

A Hoffman graph is a graph whose vertices are labelled fat or slim, with no
two fat vertices adjacent and every fat vertex adjacent to at least one slim
vertex.  We store the slim graph, plus the slim neighborhood of each fat
vertex; fat-fat edges are unrepresentable by construction.

The eigenvalues of a Hoffman graph are those of its special matrix
S = A_slim - D^T D, where D is the fat-slim incidence matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import IndexOutOfFamily, InvalidSubset, SizeLimit
from .exact import RationalMatrix, is_psd_exact, lambda_min_float
from .graphs import Graph

ISOMORPHISM_SIZE_LIMIT = 64


class HoffmanGraph:
    """Immutable Hoffman graph given by slim edges and fat neighborhoods."""

    __slots__ = ("n_slim", "slim_edges", "fat_neighbors")

    def __init__(
        self,
        n_slim: int,
        slim_edges: Iterable[Sequence[int]] = (),
        fat_neighbors: Iterable[Iterable[int]] = (),
    ):
        if n_slim < 0:
            raise ValueError("slim count must be non-negative")
        edges = set()
        for u, v in slim_edges:
            if not (0 <= u < n_slim and 0 <= v < n_slim) or u == v:
                raise ValueError(f"bad slim edge ({u},{v})")
            edges.add((min(u, v), max(u, v)))
        fats = tuple(frozenset(f) for f in fat_neighbors)
        for f in fats:
            if not f:
                raise ValueError("every fat vertex needs at least one slim neighbor")
            if any(not 0 <= s < n_slim for s in f):
                raise ValueError("fat neighborhood out of slim range")
        self.n_slim = n_slim
        self.slim_edges = frozenset(edges)
        self.fat_neighbors = fats

    @property
    def n_fat(self) -> int:
        return len(self.fat_neighbors)

    def fat_degree(self, v: int) -> int:
        return sum(1 for f in self.fat_neighbors if v in f)

    def slim_adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.slim_edges

    def slim_graph(self) -> Graph:
        return Graph(self.n_slim, self.slim_edges)

    def underlying_graph(self) -> Graph:
        """Ordinary graph on slim vertices 0..n_slim-1 then fat vertices."""
        edges = list(self.slim_edges)
        for k, f in enumerate(self.fat_neighbors):
            edges.extend((s, self.n_slim + k) for s in f)
        return Graph(self.n_slim + self.n_fat, edges)

    def to_json(self) -> dict:
        return {
            "slim": self.n_slim,
            "fat": self.n_fat,
            "slim_edges": sorted(list(e) for e in self.slim_edges),
            "fat_adj": [sorted(f) for f in self.fat_neighbors],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HoffmanGraph":
        h = cls(int(obj["slim"]), obj.get("slim_edges", []), obj.get("fat_adj", []))
        if "fat" in obj and int(obj["fat"]) != h.n_fat:
            raise ValueError("fat count does not match fat_adj length")
        return h

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HoffmanGraph)
            and self.n_slim == other.n_slim
            and self.slim_edges == other.slim_edges
            and sorted(self.fat_neighbors, key=sorted) == sorted(other.fat_neighbors, key=sorted)
        )

    def __hash__(self) -> int:
        return hash((self.n_slim, self.slim_edges, frozenset(self.fat_neighbors)))

    def __repr__(self) -> str:
        return f"HoffmanGraph(slim={self.n_slim}, fat={self.n_fat})"


def load_hoffman_file(path: str) -> HoffmanGraph:
    with open(path, "r", encoding="ascii") as fh:
        return HoffmanGraph.from_json(json.load(fh))


# -- special matrices ---------------------------------------------------------

@dataclass(frozen=True)
class SpecialMatrix:
    """Integer matrix A_slim - D^T D over the slim vertices, in index order."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)

    def principal(self, indices: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.entries[i][j] for j in indices) for i in indices)

    def to_rational(self) -> RationalMatrix:
        return RationalMatrix(self.entries)


def special_matrix(h: HoffmanGraph) -> SpecialMatrix:
    n = h.n_slim
    s = [[0] * n for _ in range(n)]
    for u, v in h.slim_edges:
        s[u][v] = s[v][u] = 1
    for f in h.fat_neighbors:
        for u in f:
            for v in f:
                s[u][v] -= 1
    return SpecialMatrix(tuple(tuple(row) for row in s))


def lambda_min_hoffman(h: HoffmanGraph) -> float:
    """Smallest eigenvalue of the special matrix (floating, reporting only)."""
    return lambda_min_float(special_matrix(h).to_rational())


def hoffman_at_least(h: HoffmanGraph, t) -> bool:
    """Exact decision of lambda_min(h) >= -t via PSD(S + tI) over rationals."""
    return is_psd_exact(special_matrix(h).to_rational().shifted(Fraction(t)))


# -- clique expansion --------------------------------------------------------

def expand(h: HoffmanGraph, p: int) -> Graph:
    """Replace each fat vertex by a slim p-clique joined to its neighbors."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    edges = list(h.slim_edges)
    n = h.n_slim
    for f in h.fat_neighbors:
        block = range(n, n + p)
        edges.extend((i, j) for i, j in combinations(block, 2))
        edges.extend((s, i) for s in f for i in block)
        n += p
    return Graph(n, edges)


def is_t_fat(h: HoffmanGraph, t: int) -> bool:
    """True when every slim vertex has at least t fat neighbors."""
    return all(h.fat_degree(v) >= t for v in range(h.n_slim))


# -- induced subgraphs and decompositions --------------------------------------

def induced_by_slim(h: HoffmanGraph, W: Iterable[int]) -> HoffmanGraph:
    """Induced Hoffman subgraph generated by a slim subset W.

    Keeps W plus every fat vertex with a neighbor in W.
    """
    ws = sorted(set(W))
    if any(not 0 <= w < h.n_slim for w in ws):
        raise InvalidSubset(f"subset {ws} not contained in the slim vertex range")
    pos = {w: i for i, w in enumerate(ws)}
    edges = [(pos[u], pos[v]) for u, v in h.slim_edges if u in pos and v in pos]
    fats = []
    for f in h.fat_neighbors:
        inter = sorted(pos[s] for s in f if s in pos)
        if inter:
            fats.append(inter)
    return HoffmanGraph(len(ws), edges, fats)


def decompose(h: HoffmanGraph) -> list[HoffmanGraph]:
    """Finest decomposition into induced Hoffman subgraphs.

    Slim vertices are grouped by connected components of the off-diagonal
    support of the special matrix; that support being block diagonal is
    exactly the decomposability condition, so no partition search is needed.
    """
    s = special_matrix(h).entries
    n = h.n_slim
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if s[i][j] != 0:
                parent[find(i)] = find(j)
    comps: dict[int, list[int]] = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v)
    ordered = sorted(comps.values(), key=min)
    return [induced_by_slim(h, comp) for comp in ordered]


# -- isomorphism ----------------------------------------------------------------

def hoffman_isomorphic(h1: HoffmanGraph, h2: HoffmanGraph) -> bool:
    """Label-preserving isomorphism test by backtracking on slim vertices.

    Once a slim bijection is fixed, the fat sides match iff the multisets of
    fat neighborhoods (as slim sets) coincide, since fat vertices are
    mutually non-adjacent.
    """
    total = h1.n_slim + h1.n_fat + h2.n_slim + h2.n_fat
    if total > ISOMORPHISM_SIZE_LIMIT:
        raise SizeLimit(f"combined vertex count {total} exceeds {ISOMORPHISM_SIZE_LIMIT}")
    if h1.n_slim != h2.n_slim or h1.n_fat != h2.n_fat:
        return False
    n = h1.n_slim
    fats1 = sorted(sorted(f) for f in h1.fat_neighbors)
    fats2 = sorted(sorted(f) for f in h2.fat_neighbors)

    def signature(h: HoffmanGraph, v: int) -> tuple[int, int]:
        return (sum(1 for u in range(h.n_slim) if u != v and h.slim_adjacent(u, v)), h.fat_degree(v))

    sig1 = [signature(h1, v) for v in range(n)]
    sig2 = [signature(h2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return False

    mapping: list[Optional[int]] = [None] * n
    used = [False] * n

    def fats_match() -> bool:
        mapped = sorted(sorted(mapping[s] for s in f) for f in fats1)
        return mapped == fats2

    def place(v: int) -> bool:
        if v == n:
            return fats_match()
        for w in range(n):
            if used[w] or sig1[v] != sig2[w]:
                continue
            ok = True
            for u in range(v):
                if h1.slim_adjacent(u, v) != h2.slim_adjacent(mapping[u], w):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if place(v + 1):
                return True
            mapping[v] = None
            used[w] = False
        return False

    return place(0)


# -- matrix families -------------------------------------------------------------

def m_matrix(kind: int, a: Optional[int] = None, t: int = 2) -> tuple[tuple[int, ...], ...]:
    """The order-1/2/3 matrix templates m_1..m_9 with parameter checks.

    Kinds 1 and 2 require a <= -2; kinds 3 and 4 require a = 1 or a <= -1;
    kinds 5..9 take no parameter.
    """
    if t < 1:
        raise IndexOutOfFamily("t must be a positive integer")
    if kind in (1, 2):
        if a is None or a > -2:
            raise IndexOutOfFamily(f"kind {kind} requires a <= -2, got {a}")
    elif kind in (3, 4):
        if a is None or (a != 1 and a > -1):
            raise IndexOutOfFamily(f"kind {kind} requires a = 1 or a <= -1, got {a}")
    elif kind in (5, 6, 7, 8, 9):
        if a is not None:
            raise IndexOutOfFamily(f"kind {kind} takes no parameter a")
    else:
        raise IndexOutOfFamily(f"unknown kind {kind}")
    if kind == 1:
        return ((-t + a,),)
    if kind == 2:
        return ((-t, a), (a, -t))
    if kind == 3:
        return ((-t - 1, a), (a, -t))
    if kind == 4:
        return ((-t - 1, a), (a, -t - 1))
    if kind == 5:
        return ((-t, -1, -1), (-1, -t, -1), (-1, -1, -t))
    if kind == 6:
        return ((-t, 1, 1), (1, -t, -1), (1, -1, -t))
    if kind == 7:
        return ((-t, 0, 1), (0, -t, -1), (1, -1, -t))
    if kind == 8:
        return ((-t, 0, 1), (0, -t, 1), (1, 1, -t))
    return ((-t, 0, -1), (0, -t, -1), (-1, -1, -t))


# -- parametric constructors -----------------------------------------------------

def slim_with_fats(t: int) -> HoffmanGraph:
    """One slim vertex with t fat neighbors; special matrix (-t)."""
    if t < 1:
        raise ValueError("t must be positive")
    return HoffmanGraph(1, [], [[0]] * t)


def clique_with_two_fats(s: int) -> HoffmanGraph:
    """s slim vertices forming a clique, each adjacent to the same two fats."""
    if s < 1:
        raise ValueError("s must be positive")
    edges = [(i, j) for i in range(s) for j in range(i + 1, s)]
    return HoffmanGraph(s, edges, [list(range(s))] * 2)


def pendant_slim_pair(s: int) -> HoffmanGraph:
    """Two adjacent slims; the first has s fat neighbors, the other none."""
    if s < 1:
        raise ValueError("s must be positive")
    return HoffmanGraph(2, [(0, 1)], [[0]] * s)


# -- catalogs ----------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    id: str
    hoffman: HoffmanGraph


def _entry(id: str, n_slim: int, edges, fats) -> CatalogEntry:
    return CatalogEntry(id, HoffmanGraph(n_slim, edges, fats))


# The nine fixed Hoffman graphs whose special matrices realize the forbidden
# templates at t = 2.  Subscripts follow the matrix each one realizes; the
# two h_8 entries are the two distinct realizations of m_8(2).
_CATALOG_H: tuple[CatalogEntry, ...] = (
    _entry("h_{1,-2}", 1, [], [[0], [0], [0], [0]]),
    _entry("h_{3,1}", 2, [(0, 1)], [[0], [0], [0], [1], [1]]),
    _entry("h_{3,-1}", 2, [(0, 1)], [[0], [0, 1], [0, 1]]),
    _entry("h_{4,-2}", 2, [(0, 1)], [[0, 1], [0, 1], [0, 1]]),
    _entry("h_5", 3, [(0, 1), (0, 2), (1, 2)], [[0, 1, 2], [0, 1, 2]]),
    _entry("h_6", 3, [(0, 1), (0, 2), (1, 2)], [[0, 1], [0, 1], [2], [2]]),
    _entry("h_7", 3, [(0, 1), (1, 2)], [[0, 1], [0, 1], [2], [2]]),
    _entry("h_8^{(1)}", 3, [(0, 1), (1, 2)], [[0], [0], [1], [1], [2], [2]]),
    _entry("h_8^{(2)}", 3, [(0, 1), (0, 2), (1, 2)], [[0], [0, 1], [1], [2], [2]]),
)

# The five indecomposable 2-fat building blocks whose special matrices are
# (-3) or the two-block +/-1 pattern; "box" and "twin" share a special matrix
# but are non-isomorphic.
_CATALOG_G2: tuple[CatalogEntry, ...] = (
    _entry("fan3", 1, [], [[0], [0], [0]]),
    _entry("g2_quad", 4, [(0, 3), (1, 2)],
           [[0, 1], [0, 2], [1, 3], [2, 3]]),
    _entry("g2_triple", 3, [(0, 1)], [[0, 2], [0], [1], [1, 2]]),
    _entry("box", 2, [(0, 1)], [[0, 1], [0, 1]]),
    _entry("g2_twin", 2, [], [[0], [0, 1], [1]]),
)

_CATALOG_MISC: tuple[CatalogEntry, ...] = (
    _entry("path2fat", 1, [], [[0], [0]]),
)

_CATALOG_BY_ID = {e.id: e for e in _CATALOG_H + _CATALOG_G2 + _CATALOG_MISC}


def catalog(id: str):
    """Named Hoffman graphs; ``"H"`` and ``"G2"`` return the full families.

    Individual ids: the nine forbidden-template realizations ``h_{1,-2}``,
    ``h_{3,1}``, ``h_{3,-1}``, ``h_{4,-2}``, ``h_5`` .. ``h_7``,
    ``h_8^{(1)}``, ``h_8^{(2)}``; the five building blocks ``fan3``,
    ``g2_quad``, ``g2_triple``, ``box``, ``g2_twin``; and ``path2fat``.
    """
    if id == "H":
        return _CATALOG_H
    if id == "G2":
        return _CATALOG_G2
    try:
        return _CATALOG_BY_ID[id]
    except KeyError:
        raise IndexOutOfFamily(f"unknown catalog id {id!r}") from None
