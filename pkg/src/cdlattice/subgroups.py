"""Subgroup enumeration and intervals."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import EnumerationBudgetExceeded, NotNested, ParentMismatch
from .group import Group, Subgroup, _extend, check_order_cap, iter_bits, popcount

DEFAULT_BUDGET = 10**6


def canonical_key(bits: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: order first, then the sorted element list."""
    return popcount(bits), tuple(iter_bits(bits))


class SubgroupSet:
    """A deduplicated, canonically ordered collection of subgroups of one group."""

    def __init__(self, parent: Group, items: Iterable[Subgroup], *, presorted: bool = False) -> None:
        self.parent = parent
        uniq = {}
        for h in items:
            if h.parent is not parent:
                raise ParentMismatch("subgroup from a different group")
            uniq.setdefault(h.bits, h)
        ordered = list(uniq.values())
        if not presorted:
            ordered.sort(key=lambda h: canonical_key(h.bits))
        self.items: tuple[Subgroup, ...] = tuple(ordered)
        self._index = {h.bits: i for i, h in enumerate(self.items)}

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self.items)

    def __getitem__(self, i: int) -> Subgroup:
        return self.items[i]

    def __contains__(self, h: object) -> bool:
        if isinstance(h, Subgroup):
            return h.parent is self.parent and h.bits in self._index
        if isinstance(h, int):
            return h in self._index
        return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.parent is other.parent and self.bit_set() == other.bit_set()

    def __repr__(self) -> str:
        return f"SubgroupSet({self.parent.name}, {len(self)} subgroups)"

    def index(self, h: Subgroup | int) -> int:
        bits = h.bits if isinstance(h, Subgroup) else h
        return self._index[bits]

    def bit_set(self) -> frozenset[int]:
        return frozenset(self._index)

    def filter(self, keep) -> "SubgroupSet":
        return SubgroupSet(self.parent, [h for h in self.items if keep(h)], presorted=True)


def _enumerate_above(g: Group, floor: Subgroup, budget: int) -> list[Subgroup]:
    """All subgroups containing ``floor``.

    Every such ``K != floor`` equals ``<H, x>`` for a maximal subgroup ``H``
    of ``K`` that still contains ``floor`` and any ``x`` in ``K - H``, so
    joining each found subgroup with single elements reaches everything.
    ``<H, x>`` depends only on the coset ``H x^k`` for ``k`` prime to the
    order of ``x``, which lets whole cosets be skipped per ``H``.
    """
    t = g.table
    n = g.order
    cyclic_gens = _cyclic_generators(g)
    found: dict[int, tuple[list[int], list[int]]] = {
        floor.bits: (list(floor.elements), list(floor.generators))
    }
    queue = [floor.bits]
    i = 0
    while i < len(queue):
        hbits = queue[i]
        i += 1
        helems, hgens = found[hbits]
        covered = hbits
        for x in range(n):
            if (covered >> x) & 1:
                continue
            for y in cyclic_gens[x]:
                for h in helems:
                    covered |= 1 << t[h][y]
            kelems, kbits = _extend(g, helems, hbits, hgens, x)
            if kbits not in found:
                found[kbits] = (kelems, hgens + [x])
                queue.append(kbits)
                if len(found) > budget:
                    raise EnumerationBudgetExceeded(
                        f"more than {budget} subgroups in {g.name}", witness=budget
                    )
    return [Subgroup(g, b) for b in found]


def _cyclic_generators(g: Group) -> list[list[int]]:
    """``out[x]`` lists every generator of the cyclic group ``<x>``."""
    memo = g._memo
    if "cyclic_generators" not in memo:
        from math import gcd

        out = []
        for x in range(g.order):
            pw = g.powers(x)
            k = len(pw)
            out.append([pw[j] for j in range(1, k) if gcd(j, k) == 1] or [x])
        memo["cyclic_generators"] = out
    return memo["cyclic_generators"]


def subgroups_containing(
    g: Group, floor: Subgroup, *, budget: int = DEFAULT_BUDGET, cap: int | None = None
) -> SubgroupSet:
    """All subgroups ``H`` with ``floor <= H <= G``, in canonical order."""
    if floor.parent is not g:
        raise ParentMismatch(f"floor subgroup does not belong to {g.name!r}")
    check_order_cap(g.order, cap)
    key = ("above", floor.bits)
    cached = g._memo.get(key)
    if cached is not None and len(cached) <= budget:
        return cached
    result = SubgroupSet(g, _enumerate_above(g, floor, budget))
    g._memo[key] = result
    return result


def all_subgroups(g: Group, *, budget: int = DEFAULT_BUDGET, cap: int | None = None) -> SubgroupSet:
    """Every subgroup of ``g``, sorted by order and then by element list."""
    return subgroups_containing(g, g.trivial, budget=budget, cap=cap)


def interval(s: SubgroupSet | Sequence[Subgroup], lower: Subgroup, upper: Subgroup) -> SubgroupSet:
    """Members ``X`` of ``s`` with ``lower <= X <= upper``."""
    if lower.parent is not upper.parent:
        raise ParentMismatch("interval bounds belong to different groups")
    if not lower <= upper:
        raise NotNested("lower bound is not contained in upper bound")
    parent = s.parent if isinstance(s, SubgroupSet) else lower.parent
    lo, hi = lower.bits, upper.bits
    keep = [x for x in s if x.bits & lo == lo and x.bits & ~hi == 0]
    return SubgroupSet(parent, keep, presorted=isinstance(s, SubgroupSet))
