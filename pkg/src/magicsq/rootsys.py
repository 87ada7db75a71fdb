"""Root systems for the finite Dynkin types, in Bourbaki numbering.

Roots live in simple-root coordinates (small signed integer vectors);
no Euclidean embedding is ever constructed.  The Cartan matrix is stored
with the convention

    cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j)

(pairing of the i-th simple root against the j-th simple coroot), which
reproduces the commonly printed matrices for F4 ([-2] in row 2, column 3,
0-indexed row 1/col 2) and G2 ([-3] in row 2, column 1).  The simple
reflection s_j therefore acts through column j:

    s_j(v)_j = v_j - sum_i cartan[i][j] * v_i,   other coordinates fixed.

Bourbaki node numbering, pinned here once and for all:

    A_n : path 1-2-...-n
    B_n : path 1-...-n, a_n short
    C_n : path 1-...-n, a_n long
    D_n : path 1-...-(n-1), node n attached to node n-2
    E_n : path 1-3-4-5-6(-7)(-8), node 2 attached to node 4
    F_4 : path 1-2-3-4, a_1 a_2 long, a_3 a_4 short
    G_2 : a_1 short, a_2 long

Signed-root encoding used throughout the package: a nonnegative index r
denotes the positive root positive_roots[r]; the bitwise complement ~r
denotes its negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

_SERIES_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

# Series whose diagram admits a nontrivial involution (outer twist label 2).
_TWISTABLE = {"A", "D", "E"}


@dataclass(frozen=True, slots=True)
class CartanType:
    """A Dynkin type (series, rank) with an optional outer-twist label.

    The twist label records quasi-split outer forms such as 2E6; it is
    metadata only and has no effect on the root data.
    """

    series: str
    rank: int
    outer_twist: int = 1

    def __post_init__(self):
        ok = _SERIES_RANKS.get(self.series)
        if ok is None or not ok(self.rank):
            raise ValueError(f"invalid Dynkin type {self.series}{self.rank}")
        if self.outer_twist not in (1, 2):
            raise ValueError(f"outer twist must be 1 or 2, got {self.outer_twist}")
        if self.outer_twist == 2:
            if self.series not in _TWISTABLE or (self.series == "A" and self.rank < 2):
                raise ValueError(
                    f"type {self.series}{self.rank} has no diagram involution"
                )
            if self.series == "E" and self.rank != 6:
                raise ValueError(f"type E{self.rank} has no diagram involution")

    @classmethod
    def from_string(cls, label: str) -> "CartanType":
        """Parse labels like ``E6``, ``2E6``, ``A3``, ``1D6``."""
        s = label.strip()
        twist = 1
        if s and s[0] in "12" and len(s) > 1 and s[1].isalpha():
            twist = int(s[0])
            s = s[1:]
        if len(s) < 2 or not s[0].isalpha():
            raise ValueError(f"cannot parse Dynkin type {label!r}")
        return cls(s[0].upper(), int(s[1:]), twist)

    def __str__(self) -> str:
        prefix = "2" if self.outer_twist == 2 else ""
        return f"{prefix}{self.series}{self.rank}"


def _edges(series: str, rank: int) -> list[tuple[int, int]]:
    # 1-based node pairs; single edges only, multiplicities handled separately
    if series in ("A", "B", "C", "F", "G"):
        return [(i, i + 1) for i in range(1, rank)]
    if series == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    if series == "E":
        return [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] + [
            (i, i + 1) for i in range(6, rank)
        ]
    raise AssertionError(series)


def cartan_matrix(ctype: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with cartan[i][j] = 2(a_i,a_j)/(a_j,a_j), 0-indexed."""
    n = ctype.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for (p, q) in _edges(ctype.series, n):
        a[p - 1][q - 1] = -1
        a[q - 1][p - 1] = -1
    s = ctype.series
    if s == "B":
        # a_n short: the long root row n-1 pairs to -2 against coroot n
        a[n - 2][n - 1] = -2
    elif s == "C":
        # a_n long
        a[n - 1][n - 2] = -2
    elif s == "F":
        # a_2 long, a_3 short
        a[1][2] = -2
    elif s == "G":
        # a_2 long
        a[1][0] = -3
    return tuple(tuple(row) for row in a)


class RootSystem:
    """Immutable closed root system with simple-reflection tables."""

    __slots__ = (
        "ctype",
        "cartan",
        "positive_roots",
        "rank",
        "num_positive",
        "simple_reflection_tables",
        "_root_index",
        "_simple_pos",
    )

    def __init__(self, ctype: CartanType):
        self.ctype = ctype
        self.cartan = cartan_matrix(ctype)
        self.rank = ctype.rank
        self.positive_roots = _close_positive_roots(self.cartan)
        self.num_positive = len(self.positive_roots)
        self._root_index = {v: i for i, v in enumerate(self.positive_roots)}
        self._simple_pos = tuple(
            self._root_index[tuple(1 if j == i else 0 for j in range(self.rank))]
            for i in range(self.rank)
        )
        self.simple_reflection_tables = tuple(
            self._reflection_table(i) for i in range(self.rank)
        )

    def _reflect(self, v: tuple[int, ...], j: int) -> tuple[int, ...]:
        c = sum(self.cartan[i][j] * v[i] for i in range(self.rank))
        w = list(v)
        w[j] = v[j] - c
        return tuple(w)

    def _reflection_table(self, j: int) -> tuple[int, ...]:
        out = []
        for v in self.positive_roots:
            w = self._reflect(v, j)
            if all(x >= 0 for x in w):
                out.append(self._root_index[w])
            else:
                out.append(~self._root_index[tuple(-x for x in w)])
        return tuple(out)

    def root_index(self, v: Sequence[int]) -> int:
        return self._root_index[tuple(v)]

    def simple_root_index(self, node: int) -> int:
        """Index of simple root a_node (1-based node) in positive_roots."""
        return self._simple_pos[node - 1]

    def node_set(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1))

    def check_nodes(self, nodes: Iterable[int]) -> frozenset[int]:
        ns = frozenset(nodes)
        if not ns <= self.node_set():
            raise ValueError(f"nodes {sorted(ns)} not within 1..{self.rank}")
        return ns

    def positive_count_in(self, nodes: Iterable[int]) -> int:
        """Number of positive roots supported on the given node set."""
        ns = self.check_nodes(nodes)
        allowed = [(i + 1) in ns for i in range(self.rank)]
        count = 0
        for v in self.positive_roots:
            if all(allowed[i] for i, c in enumerate(v) if c):
                count += 1
        return count

    def __repr__(self) -> str:
        return f"RootSystem({self.ctype}, {self.num_positive} positive roots)"


def _close_positive_roots(cartan) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

    def reflect(v, j):
        c = sum(cartan[i][j] * v[i] for i in range(n))
        w = list(v)
        w[j] = v[j] - c
        return tuple(w)

    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for v in frontier:
            for j in range(n):
                w = reflect(v, j)
                if all(x >= 0 for x in w) and w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt
    # graded lexicographic: height first, then coordinates
    return tuple(sorted(roots, key=lambda v: (sum(v), v)))


@lru_cache(maxsize=None)
def build_root_system(ctype: CartanType) -> RootSystem:
    """Construct (and memoize) the root system for a valid Cartan type."""
    return RootSystem(ctype)


@dataclass(frozen=True, slots=True)
class DiagramAut:
    """Permutation of Dynkin nodes; node_permutation[i-1] is the image of node i."""

    node_permutation: tuple[int, ...]

    def __call__(self, node: int) -> int:
        return self.node_permutation[node - 1]

    @property
    def is_identity(self) -> bool:
        return all(p == i + 1 for i, p in enumerate(self.node_permutation))

    def inverse(self) -> "DiagramAut":
        inv = [0] * len(self.node_permutation)
        for i, p in enumerate(self.node_permutation):
            inv[p - 1] = i + 1
        return DiagramAut(tuple(inv))

    def stabilizes(self, nodes: Iterable[int]) -> bool:
        ns = set(nodes)
        return {self(n) for n in ns} == ns


def identity_aut(rs: RootSystem) -> DiagramAut:
    return DiagramAut(tuple(range(1, rs.rank + 1)))


def diagram_aut(rs: RootSystem, node_permutation: Sequence[int]) -> DiagramAut:
    """Validated diagram automorphism: must preserve the Cartan matrix."""
    perm = tuple(node_permutation)
    if sorted(perm) != list(range(1, rs.rank + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{rs.rank}")
    a = rs.cartan
    for i in range(rs.rank):
        for j in range(rs.rank):
            if a[perm[i] - 1][perm[j] - 1] != a[i][j]:
                raise ValueError(f"{perm} does not preserve the Cartan matrix")
    return DiagramAut(perm)


def opposition_involution(rs: RootSystem) -> DiagramAut:
    """Node permutation induced by -w0 (identity when w0 = -1)."""
    # Build w0 greedily: keep appending any ascent until none remain.
    n = rs.num_positive
    act = list(range(n))
    tables = rs.simple_reflection_tables
    while True:
        for i in range(rs.rank):
            if act[rs._simple_pos[i]] >= 0:
                tab = tables[i]
                act = [act[x] if x >= 0 else ~act[~x] for x in tab]
                break
        else:
            break
    perm = []
    for i in range(rs.rank):
        img = act[rs._simple_pos[i]]
        if img >= 0:
            raise AssertionError("longest element must negate every simple root")
        target = rs.positive_roots[~img]
        if sum(target) != 1:
            raise AssertionError("w0 image of a simple root must be simple")
        perm.append(target.index(1) + 1)
    return diagram_aut(rs, perm)


def sub_diagram_type(rs: RootSystem, nodes: Iterable[int]) -> list[CartanType]:
    """Connected components of the induced sub-diagram, classified by type.

    Components are reported in order of their smallest node.  The rank-2
    double-edge component is labeled B2 (B2 and C2 coincide).
    """
    ns = sorted(rs.check_nodes(nodes))
    if not ns:
        return []
    a = rs.cartan
    adj = {
        p: [q for q in ns if q != p and a[p - 1][q - 1] != 0] for p in ns
    }
    seen: set[int] = set()
    out = []
    for start in ns:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            p = stack.pop()
            for q in adj[p]:
                if q not in seen:
                    seen.add(q)
                    comp.append(q)
                    stack.append(q)
        out.append(_classify_component(a, sorted(comp), adj))
    return out


def _classify_component(a, comp, adj) -> CartanType:
    k = len(comp)
    if k == 1:
        return CartanType("A", 1)
    mult = {}
    for p in comp:
        for q in adj[p]:
            if p < q:
                mult[(p, q)] = a[p - 1][q - 1] * a[q - 1][p - 1]
    if any(m == 3 for m in mult.values()):
        if k != 2:
            raise ValueError("triple edge in a component of rank > 2")
        return CartanType("G", 2)
    doubles = [e for e, m in mult.items() if m == 2]
    if not doubles:
        degs = {p: len(adj[p]) for p in comp}
        branch = [p for p in comp if degs[p] == 3]
        if not branch:
            return CartanType("A", k)
        if len(branch) > 1 or max(degs.values()) > 3:
            raise ValueError("component is not of finite type")
        c = branch[0]
        sizes = sorted(
            (_branch_size(c, q, adj) for q in adj[c]), reverse=True
        )
        if sizes[1] == 1:
            return CartanType("D", k)
        if sizes[1] == 2 and sizes[2] == 1 and sizes[0] in (2, 3, 4):
            return CartanType("E", k)
        raise ValueError("component is not of finite type")
    if len(doubles) > 1:
        raise ValueError("component is not of finite type")
    p, q = doubles[0]
    # cartan[i][j] = -2 puts the short root in column j
    short = q if a[p - 1][q - 1] == -2 else p
    long_ = p if short == q else q
    if k == 2:
        return CartanType("B", 2)
    short_side = _side_size(short, long_, adj)
    long_side = k - short_side
    if short_side == 1:
        return CartanType("B", k)
    if long_side == 1:
        return CartanType("C", k)
    if k == 4 and short_side == 2:
        return CartanType("F", 4)
    raise ValueError("component is not of finite type")


def _branch_size(center, first, adj) -> int:
    count = 0
    prev, cur = center, first
    while True:
        count += 1
        nxt = [q for q in adj[cur] if q != prev]
        if not nxt:
            return count
        if len(nxt) > 1:
            raise ValueError("component is not of finite type")
        prev, cur = cur, nxt[0]


def _side_size(start, blocked, adj) -> int:
    seen = {start}
    stack = [start]
    while stack:
        p = stack.pop()
        for q in adj[p]:
            if q != blocked and q not in seen:
                seen.add(q)
                stack.append(q)
    return len(seen)


def root_system_to_json(rs: RootSystem) -> dict:
    """Golden-file form: type label, Cartan matrix, ordered positive roots."""
    return {
        "type": str(rs.ctype),
        "cartan": [list(row) for row in rs.cartan],
        "positive_roots": [list(v) for v in rs.positive_roots],
    }
