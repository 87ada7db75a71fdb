"""Weyl group elements, coset representatives, and double cosets.

Elements are canonicalized by their permutation action on the signed
root set (see rootsys for the encoding: nonnegative index = positive
root, bitwise complement = its negative).  Length is the number of
positive roots sent to negative ones and is cached on the element.

Enumeration never materializes the full group unless explicitly asked:
minimal coset representatives of W/W_J are grown breadth-first from the
identity by left multiplication with simple reflections, keeping only
J-reduced elements, so the seen-set holds representatives only.  Rank 8
full-group enumeration is refused outright; for rank <= 7 a guard flag
must be passed once the group order exceeds a comfort threshold.

For Poincare-type counting, ``coset_length_counts`` runs the same
breadth-first walk on weight-coordinate vectors (the W-orbit of the
dominant vector with stabilizer W_J), which keeps at most two levels in
memory and never builds permutations at all.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .polyring import IntPoly
from .rootsys import (
    DiagramAut,
    RootSystem,
    build_root_system,
    sub_diagram_type,
)

# Full-group enumeration guard: refuse rank 8 outright, demand an explicit
# flag for rank <= 7 groups beyond this many elements.
_FULL_GROUP_SOFT_LIMIT = 100_000
_LEAN_COUNT_LIMIT = 2_000_000


@dataclass(frozen=True, slots=True)
class WeylElement:
    """Group element as its action on positive-root indices (signed)."""

    action: tuple[int, ...]
    length: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "length", sum(1 for a in self.action if a < 0)
        )

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def apply(self, signed_root: int) -> int:
        a = self.action
        return a[signed_root] if signed_root >= 0 else ~a[~signed_root]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(r) = self(other(r))
        sa = self.action
        return WeylElement(
            tuple(sa[x] if x >= 0 else ~sa[~x] for x in other.action)
        )

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.action)
        for r, y in enumerate(self.action):
            if y >= 0:
                inv[y] = r
            else:
                inv[~y] = ~r
        return WeylElement(tuple(inv))


@dataclass(frozen=True, slots=True)
class CosetRep:
    """Minimal-length representative of a right coset w * W_J."""

    element: WeylElement
    parabolic: frozenset[int]


@dataclass(frozen=True, slots=True)
class DoubleCosetCell:
    """One double coset W_I w W_J, recorded through its W^J orbit."""

    min_rep: WeylElement
    left_nodes: frozenset[int]
    right_nodes: frozenset[int]
    orbit_size: int
    star_invariant: bool


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(tuple(range(rs.num_positive)))


def simple_reflection(rs: RootSystem, node: int) -> WeylElement:
    if not 1 <= node <= rs.rank:
        raise ValueError(f"node {node} out of range")
    return WeylElement(rs.simple_reflection_tables[node - 1])


def _left_mul(table: tuple[int, ...], action: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(table[a] if a >= 0 else ~table[~a] for a in action)


def _right_mul(action: tuple[int, ...], table: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(action[x] if x >= 0 else ~action[~x] for x in table)


def right_descents(rs: RootSystem, w: WeylElement) -> frozenset[int]:
    """Nodes i with l(w s_i) < l(w), i.e. w(a_i) negative."""
    return frozenset(
        i + 1 for i in range(rs.rank) if w.action[rs.simple_root_index(i + 1)] < 0
    )


def left_descents(rs: RootSystem, w: WeylElement) -> frozenset[int]:
    return right_descents(rs, w.inverse())


def reduced_word(rs: RootSystem, w: WeylElement) -> list[int]:
    """One reduced word for w, by repeatedly peeling the smallest right descent."""
    word: list[int] = []
    act = w.action
    tables = rs.simple_reflection_tables
    while True:
        for i in range(rs.rank):
            if act[rs.simple_root_index(i + 1)] < 0:
                word.append(i + 1)
                act = _right_mul(act, tables[i])
                break
        else:
            break
    word.reverse()
    return word


def fundamental_degrees(rs: RootSystem) -> list[int]:
    """Degrees d_1 <= ... <= d_rank, from the root-height partition.

    The partition counting positive roots by height is conjugate to the
    partition of the exponents; degrees are exponents plus one.
    """
    heights = Counter(sum(v) for v in rs.positive_roots)
    top = max(heights)
    m = [heights.get(h, 0) for h in range(1, top + 1)]
    exponents = [sum(1 for mh in m if mh >= k) for k in range(1, rs.rank + 1)]
    return sorted(e + 1 for e in exponents)


def weyl_order(rs: RootSystem) -> int:
    """|W|, the product of the fundamental degrees."""
    return math.prod(fundamental_degrees(rs))


def parabolic_order(rs: RootSystem, nodes: Iterable[int]) -> int:
    """Order of the parabolic subgroup W_J, via its component types."""
    total = 1
    for ct in sub_diagram_type(rs, nodes):
        total *= weyl_order(build_root_system(ct))
    return total


def _coset_bfs(
    rs: RootSystem,
    generator_nodes: Sequence[int],
    reduced_nodes: frozenset[int],
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (length, action) for minimal reps, breadth-first, sorted per level.

    Generators are left-multiplied; an element stays iff it has no right
    descent inside reduced_nodes.  Every minimal representative of length
    l+1 arises from one of length l this way, so levels are complete.
    """
    tables = [rs.simple_reflection_tables[i - 1] for i in generator_nodes]
    jpos = [rs.simple_root_index(j) for j in sorted(reduced_nodes)]
    ident = tuple(range(rs.num_positive))
    seen = {ident}
    level = [ident]
    length = 0
    while level:
        for act in level:
            yield length, act
        nxt = set()
        for act in level:
            for tab in tables:
                u = _left_mul(tab, act)
                if u in seen or u in nxt:
                    continue
                if all(u[p] >= 0 for p in jpos):
                    nxt.add(u)
        seen.update(nxt)
        level = sorted(nxt)
        length += 1


def minimal_coset_reps(
    rs: RootSystem,
    parabolic: Iterable[int],
    *,
    allow_full_group: bool = False,
) -> Iterator[CosetRep]:
    """Stream the minimal-length representatives of W / W_parabolic.

    Deterministic order: by (length, action tuple).  An empty parabolic
    enumerates the whole group, which is refused for rank 8 and demands
    allow_full_group=True beyond a size threshold for rank <= 7.
    Guards fire at call time, not at first consumption.
    """
    J = rs.check_nodes(parabolic)
    if not J:
        if rs.rank >= 8:
            raise ValueError(
                "full-group enumeration is disabled for rank 8; "
                "use coset-quotient algorithms instead"
            )
        if weyl_order(rs) > _FULL_GROUP_SOFT_LIMIT and not allow_full_group:
            raise ValueError(
                f"enumerating all {weyl_order(rs)} elements needs "
                "allow_full_group=True"
            )
    gens = list(range(1, rs.rank + 1))

    def stream() -> Iterator[CosetRep]:
        for _, act in _coset_bfs(rs, gens, J):
            yield CosetRep(WeylElement(act), J)

    return stream()


def coset_length_counts(
    rs: RootSystem,
    parabolic: Iterable[int],
    *,
    max_elements: int = _LEAN_COUNT_LIMIT,
) -> dict[int, int]:
    """Count minimal coset representatives of W/W_J by length.

    Walks the W-orbit of the dominant weight vector whose stabilizer is
    W_J.  Crossing wall i from the positive side adds exactly one
    inversion, so breadth-first levels are length classes and only two
    levels live in memory at a time.
    """
    J = rs.check_nodes(parabolic)
    expected = weyl_order(rs) // parabolic_order(rs, J)
    if expected > max_elements:
        raise ValueError(
            f"coset family of size {expected} exceeds max_elements={max_elements}"
        )
    n = rs.rank
    rows = rs.cartan
    start = tuple(0 if (i + 1) in J else 1 for i in range(n))
    counts: dict[int, int] = {}
    level = {start}
    length = 0
    total = 0
    while level:
        counts[length] = len(level)
        total += len(level)
        nxt = set()
        for u in level:
            for i in range(n):
                ui = u[i]
                if ui > 0:
                    row = rows[i]
                    nxt.add(tuple(u[j] - ui * row[j] for j in range(n)))
        level = nxt
        length += 1
    if total != expected:
        raise AssertionError(
            f"orbit size {total} != |W|/|W_J| = {expected}; root data corrupt"
        )
    return counts


def length_counts_to_poly(counts: dict[int, int]) -> IntPoly:
    out = [0] * (max(counts) + 1)
    for length, c in counts.items():
        out[length] = c
    return IntPoly(out)


def chain_length_polynomial(rs: RootSystem) -> IntPoly:
    """Length generating function of W, by a parabolic chain of quotients.

    W factors as nested quotients W_{J_0}/W_{J_1} * ... with lengths
    adding, so the product of the quotient generating functions equals
    sum_w t^l(w).  Each quotient is a small coset enumeration; the full
    group is never materialized (works for E8).
    """
    nodes = sorted(rs.node_set())
    poly = IntPoly.one()
    for k in range(len(nodes)):
        gen_nodes = nodes[k:]
        reduced = frozenset(nodes[k + 1 :])
        counts: Counter[int] = Counter()
        for length, _ in _coset_bfs(rs, gen_nodes, reduced):
            counts[length] += 1
        poly = poly * length_counts_to_poly(dict(counts))
    return poly


def weyl_order_by_cosets(rs: RootSystem) -> int:
    """|W| recomputed by explicit coset-orbit enumeration (cross-check)."""
    return chain_length_polynomial(rs)(1)


def longest_element_length(rs: RootSystem, parabolic: Iterable[int]) -> int:
    """Length of the longest minimal representative of W/W_parabolic.

    Equals the number of positive roots not supported on the parabolic
    node set; with the circled-node convention this is the dimension of
    the flag variety whose Levi sits on ``parabolic``.
    """
    J = rs.check_nodes(parabolic)
    return rs.num_positive - rs.positive_count_in(J)


def _star_table(rs: RootSystem, star: DiagramAut) -> tuple[int, ...]:
    """Positive-root permutation induced by a diagram automorphism."""
    perm = []
    for v in rs.positive_roots:
        w = [0] * rs.rank
        for i, c in enumerate(v):
            w[star(i + 1) - 1] = c
        perm.append(rs.root_index(w))
    return tuple(perm)


def _conjugate_by_star(
    action: tuple[int, ...], table: tuple[int, ...], inv_table: tuple[int, ...]
) -> tuple[int, ...]:
    # (star w star^-1)(a_r) = star(w(star^-1 a_r)); positivity is preserved
    out = []
    for r in range(len(action)):
        y = action[inv_table[r]]
        out.append(table[y] if y >= 0 else ~table[~y])
    return tuple(out)


def double_cosets(
    rs: RootSystem,
    left: Iterable[int],
    right: Iterable[int],
    star: DiagramAut | None = None,
) -> list[DoubleCosetCell]:
    """Partition W/W_right into W_left orbits (the double cosets W_I\\W/W_J).

    Each cell records its unique minimal-length representative, its size
    (number of right cosets it contains), and whether the star action
    maps the cell to itself.  star=None means the identity action, under
    which every cell is invariant.  Cells are sorted by (length, action).
    """
    I = rs.check_nodes(left)
    J = rs.check_nodes(right)
    if star is not None:
        if not star.stabilizes(I):
            raise ValueError(f"star action does not stabilize left nodes {sorted(I)}")
        if not star.stabilizes(J):
            raise ValueError(f"star action does not stabilize right nodes {sorted(J)}")

    reps: list[tuple[int, tuple[int, ...]]] = [
        (rep.element.length, rep.element.action) for rep in minimal_coset_reps(rs, J)
    ]
    rep_index = {act: k for k, (_, act) in enumerate(reps)}
    tables = rs.simple_reflection_tables
    jpos = [(j, rs.simple_root_index(j)) for j in sorted(J)]

    def project(act: tuple[int, ...]) -> tuple[int, ...]:
        # peel right descents inside J until the representative is J-reduced
        while True:
            for j, p in jpos:
                if act[p] < 0:
                    act = _right_mul(act, tables[j - 1])
                    break
            else:
                return act

    cell_of = [-1] * len(reps)
    cells: list[list[int]] = []
    left_tables = [tables[i - 1] for i in sorted(I)]
    for start in range(len(reps)):
        if cell_of[start] >= 0:
            continue
        cid = len(cells)
        members = [start]
        cell_of[start] = cid
        stack = [start]
        while stack:
            k = stack.pop()
            act = reps[k][1]
            for tab in left_tables:
                u = project(_left_mul(tab, act))
                ku = rep_index[u]
                if cell_of[ku] < 0:
                    cell_of[ku] = cid
                    members.append(ku)
                    stack.append(ku)
        cells.append(members)

    if star is None or star.is_identity:
        star_cell = list(range(len(cells)))
    else:
        table = _star_table(rs, star)
        inv_table = _star_table(rs, star.inverse())
        star_cell = []
        for members in cells:
            min_k = min(members, key=lambda k: (reps[k][0], reps[k][1]))
            mapped = _conjugate_by_star(reps[min_k][1], table, inv_table)
            star_cell.append(cell_of[rep_index[mapped]])

    out = []
    for cid, members in enumerate(cells):
        lengths = [reps[k][0] for k in members]
        shortest = min(lengths)
        if lengths.count(shortest) != 1:
            raise AssertionError("double coset minimal representative not unique")
        min_rep = WeylElement(reps[members[lengths.index(shortest)]][1])
        out.append(
            DoubleCosetCell(
                min_rep=min_rep,
                left_nodes=I,
                right_nodes=J,
                orbit_size=len(members),
                star_invariant=star_cell[cid] == cid,
            )
        )
    out.sort(key=lambda c: (c.min_rep.length, c.min_rep.action))
    if sum(c.orbit_size for c in out) != len(reps):
        raise AssertionError("double coset orbit sizes do not partition W/W_J")
    return out
