"""Chermak-Delgado measure and lattice."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GradednessViolation, InternalLatticeError
from .group import Group, Subgroup, _check_parent, center, centralizer, induced_group, set_product
from .subgroups import DEFAULT_BUDGET, SubgroupSet, subgroups_containing


def measure(g: Group, h: Subgroup) -> int:
    """``|H| * |C_G(H)|``."""
    _check_parent(g, h)
    return h.order * centralizer(g, h).order


def max_measure(g: Group, *, budget: int = DEFAULT_BUDGET) -> int:
    return cd_lattice(g, budget=budget).max_measure


@dataclass(frozen=True, eq=False)
class CDLattice:
    parent: Group
    max_measure: int
    nodes: SubgroupSet
    edges: tuple[tuple[int, int], ...]
    top: int
    bottom: int
    height: tuple[int, ...]
    depth: tuple[int, ...]
    lattice_height: int
    _up: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, h: object) -> bool:
        return h in self.nodes

    def __getitem__(self, i: int) -> Subgroup:
        return self.nodes[i]

    def index(self, h: Subgroup | int) -> int:
        return self.nodes.index(h)

    @property
    def top_subgroup(self) -> Subgroup:
        return self.nodes[self.top]

    @property
    def bottom_subgroup(self) -> Subgroup:
        return self.nodes[self.bottom]

    def height_of(self, h: Subgroup) -> int:
        return self.height[self.index(h)]

    def depth_of(self, h: Subgroup) -> int:
        return self.depth[self.index(h)]

    def covers(self, i: int) -> tuple[int, ...]:
        """Node indices covering node ``i``."""
        return self._up[i]

    def meet(self, x: int, y: int) -> int:
        bits = self.nodes[x].bits & self.nodes[y].bits
        if bits not in self.nodes:
            raise InternalLatticeError(f"meet of nodes {x} and {y} is not a lattice member")
        return self.nodes.index(bits)

    def join(self, x: int, y: int) -> int:
        hk, closed = set_product(self.nodes[x], self.nodes[y])
        if not closed or hk not in self.nodes:
            raise InternalLatticeError(f"join of nodes {x} and {y} is not a lattice member")
        return self.nodes.index(hk)

    def duality(self, x: int) -> int:
        """Index of ``C_G(node x)``."""
        c = centralizer(self.parent, self.nodes[x])
        if c not in self.nodes:
            raise InternalLatticeError(f"centralizer of node {x} is not a lattice member")
        return self.nodes.index(c)

    def atoms(self) -> list[int]:
        return [i for i, h in enumerate(self.height) if h == 1]

    def coatoms(self) -> list[int]:
        return [i for i, d in enumerate(self.depth) if d == 1]


def cd_lattice(g: Group, *, budget: int = DEFAULT_BUDGET) -> CDLattice:
    """The Chermak-Delgado lattice of ``g``.

    Only subgroups containing ``Z(G)`` are enumerated; every lattice member
    contains the center, so nothing is lost.
    """
    cached = g._memo.get("cd")
    if cached is not None:
        return cached
    candidates = subgroups_containing(g, center(g), budget=budget)
    measures = [measure(g, h) for h in candidates]
    best = max(measures)
    nodes = SubgroupSet(g, [h for h, m in zip(candidates, measures) if m == best], presorted=True)
    lat = _build(g, best, nodes)
    g._memo["cd"] = lat
    return lat


def _build(g: Group, best: int, nodes: SubgroupSet) -> CDLattice:
    n = len(nodes)
    bits = [h.bits for h in nodes]
    # canonical order sorts by order, so any strict superset comes later
    above = [[j for j in range(i + 1, n) if bits[i] & ~bits[j] == 0] for i in range(n)]
    up = []
    for i in range(n):
        sup = above[i]
        covers = [j for j in sup if not any(bits[k] & ~bits[j] == 0 for k in sup if k < j)]
        up.append(tuple(covers))
    edges = tuple((i, j) for i in range(n) for j in up[i])

    bottoms = [i for i in range(n) if all(bits[i] & ~b == 0 for b in bits)]
    tops = [i for i in range(n) if all(b & ~bits[i] == 0 for b in bits)]
    if len(bottoms) != 1 or len(tops) != 1:
        raise InternalLatticeError(f"{g.name}: maximal-measure subgroups have no unique top/bottom")
    bottom, top = bottoms[0], tops[0]

    # longest path from the bottom, in topological (canonical) order
    height = [0] * n
    for i in range(n):
        for j in up[i]:
            height[j] = max(height[j], height[i] + 1)
    depth = [0] * n
    for i in reversed(range(n)):
        for j in up[i]:
            depth[i] = max(depth[i], depth[j] + 1)
    total = height[top]
    for i, j in edges:
        if height[j] != height[i] + 1 or depth[i] != depth[j] + 1:
            raise GradednessViolation(
                f"{g.name}: chains through cover {i} < {j} have different lengths", witness=(i, j)
            )
    if depth[bottom] != total or any(h + d != total for h, d in zip(height, depth)):
        raise GradednessViolation(f"{g.name}: height + depth is not constant")

    return CDLattice(
        parent=g,
        max_measure=best,
        nodes=nodes,
        edges=edges,
        top=top,
        bottom=bottom,
        height=tuple(height),
        depth=tuple(depth),
        lattice_height=total,
        _up=tuple(up),
    )


@dataclass(frozen=True, eq=False)
class LiftedCD:
    """``CD(H)`` computed on ``H``'s own Cayley table, mapped back into ``G``."""

    lattice: CDLattice
    nodes: tuple[Subgroup, ...]
    heights: dict[int, int]
    depths: dict[int, int]

    @property
    def max_measure(self) -> int:
        return self.lattice.max_measure

    @property
    def lattice_height(self) -> int:
        return self.lattice.lattice_height

    @property
    def top(self) -> Subgroup:
        return self.nodes[self.lattice.top]

    @property
    def bottom(self) -> Subgroup:
        return self.nodes[self.lattice.bottom]

    def bit_set(self) -> frozenset[int]:
        return frozenset(self.heights)

    def __contains__(self, h: object) -> bool:
        return isinstance(h, Subgroup) and h.bits in self.heights

    def __len__(self) -> int:
        return len(self.nodes)


def cd_of_subgroup(h: Subgroup, *, budget: int = DEFAULT_BUDGET) -> LiftedCD:
    """``CD(H)`` for a subgroup ``H`` of ``G``, as subgroups of ``G``.

    The lattice is recomputed from ``H``'s induced multiplication table, so
    it shares nothing with ``CD(G)`` beyond the parent's element numbering.
    """
    g = h.parent
    key = ("cd_of", h.bits)
    if key in g._memo:
        return g._memo[key]
    sub, incl = induced_group(h)
    lat = cd_lattice(sub, budget=budget)
    nodes = tuple(Subgroup(g, incl.image_bits(x.bits)) for x in lat.nodes)
    out = LiftedCD(
        lattice=lat,
        nodes=nodes,
        heights={x.bits: lat.height[i] for i, x in enumerate(nodes)},
        depths={x.bits: lat.depth[i] for i, x in enumerate(nodes)},
    )
    g._memo[key] = out
    return out
