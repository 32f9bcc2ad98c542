"""Finite groups as Cayley tables, and their subgroups as integer bitsets.

Elements of a group of order ``n`` are the integers ``0..n-1`` with the
identity pinned at ``0``; ``table[a][b]`` is the product ``a*b``.  A subgroup
is stored as a Python ``int`` whose bit ``i`` is set iff element ``i`` belongs
to it, so intersection is ``&`` and containment is ``a & ~b == 0``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Union

import numpy as np

from .errors import (
    IndexOutOfRange,
    MalformedCycle,
    NoIdentityAtZero,
    NotAssociative,
    NotASubgroup,
    NotHomomorphism,
    NotIsomorphism,
    NotLatinSquare,
    NotSquare,
    OrderCapExceeded,
    ParentMismatch,
    PointOutOfRange,
)

DEFAULT_ORDER_CAP = 2048
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 512
ORDER_CAP_ENV = "CDLAT_ORDER_CAP"


def order_cap() -> int:
    """The active order cap: ``$CDLAT_ORDER_CAP`` if set, else 2048."""
    raw = os.environ.get(ORDER_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ORDER_CAP
    return int(raw)


def check_order_cap(n: int, cap: int | None = None, what: str = "group") -> None:
    limit = order_cap() if cap is None else cap
    if n > limit:
        raise OrderCapExceeded(f"{what} of order {n} exceeds the order cap {limit}", witness=n)


def bits_of(indices: Iterable[int]) -> int:
    value = 0
    for i in indices:
        value |= 1 << i
    return value


def iter_bits(value: int) -> Iterator[int]:
    index = 0
    while value:
        if value & 1:
            yield index
        value >>= 1
        index += 1


def popcount(value: int) -> int:
    return bin(value).count("1")


class Group:
    """A finite group given by its full multiplication table.

    The constructor trusts its input.  Use :func:`group_from_cayley_table`
    for tables that come from outside the library.
    """

    def __init__(self, name: str, table: Sequence[Sequence[int]]) -> None:
        self.name = name
        self.table: tuple[tuple[int, ...], ...] = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        # row x contains 0 exactly once, at the inverse of x
        self.inverse: tuple[int, ...] = tuple(row.index(0) for row in self.table)
        self._memo: dict = {}

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    @cached_property
    def full_bits(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def commuting(self) -> tuple[int, ...]:
        """``commuting[x]`` is the bitset of elements commuting with ``x``."""
        t = self.table
        n = self.order
        out = []
        for x in range(n):
            row = t[x]
            bits = 0
            for y in range(n):
                if row[y] == t[y][x]:
                    bits |= 1 << y
            out.append(bits)
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        return all(c == self.full_bits for c in self.commuting)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.table[y][x]
            k += 1
        return k

    def powers(self, x: int) -> list[int]:
        """``[1, x, x^2, ...]`` up to but excluding the return to the identity."""
        out = [0]
        y = x
        while y != 0:
            out.append(y)
            y = self.table[y][x]
        return out

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, self.full_bits)

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, 1)


# -- validation ---------------------------------------------------------------


def verify_group_axioms(
    table: Sequence[Sequence[int]],
    *,
    exhaustive_limit: int = EXHAUSTIVE_ASSOCIATIVITY_LIMIT,
    seed: int = 0,
) -> None:
    """Raise if ``table`` is not the Cayley table of a group with identity 0.

    Associativity is checked on every triple up to ``exhaustive_limit``;
    above it, on ``10 n^2`` random triples drawn from a seeded generator.
    """
    n = len(table)
    if n == 0:
        raise NotSquare("empty table")
    for r, row in enumerate(table):
        if len(row) != n:
            raise NotSquare(f"row {r} has length {len(row)}, expected {n}", witness=r)
    t = np.asarray(table, dtype=np.int64)
    if t.min() < 0 or t.max() >= n:
        bad = tuple(int(i) for i in np.argwhere((t < 0) | (t >= n))[0])
        raise NotSquare(f"entry at {bad} is outside 0..{n - 1}", witness=bad)

    ident = np.arange(n)
    if not np.array_equal(t[0], ident) or not np.array_equal(t[:, 0], ident):
        x = int(np.flatnonzero((t[0] != ident) | (t[:, 0] != ident))[0])
        raise NoIdentityAtZero(
            f"index 0 is not an identity: 0*{x}={t[0, x]}, {x}*0={t[x, 0]}", witness=(0, x)
        )

    srt_rows = np.sort(t, axis=1)
    bad_rows = np.flatnonzero((srt_rows != ident).any(axis=1))
    if bad_rows.size:
        r = int(bad_rows[0])
        vals, counts = np.unique(t[r], return_counts=True)
        v = int(vals[counts > 1][0])
        cols = [int(c) for c in np.flatnonzero(t[r] == v)[:2]]
        raise NotLatinSquare(
            f"row {r} repeats value {v} at columns {cols[0]} and {cols[1]}",
            witness=(r, cols[0], cols[1]),
        )
    srt_cols = np.sort(t, axis=0)
    bad_cols = np.flatnonzero((srt_cols != ident[:, None]).any(axis=0))
    if bad_cols.size:
        c = int(bad_cols[0])
        vals, counts = np.unique(t[:, c], return_counts=True)
        v = int(vals[counts > 1][0])
        rows = [int(r) for r in np.flatnonzero(t[:, c] == v)[:2]]
        raise NotLatinSquare(
            f"column {c} repeats value {v} at rows {rows[0]} and {rows[1]}",
            witness=(rows[0], rows[1], c),
        )

    if n <= exhaustive_limit:
        for a in range(n):
            lhs = t[t[a]]  # lhs[b, c] = (a*b)*c
            rhs = t[a][t]  # rhs[b, c] = a*(b*c)
            diff = lhs != rhs
            if diff.any():
                b, c = (int(i) for i in np.argwhere(diff)[0])
                raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})", witness=(a, b, c))
    else:
        rng = np.random.default_rng(seed)
        triples = rng.integers(0, n, size=(10 * n * n, 3))
        a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
        diff = t[t[a, b], c] != t[a, t[b, c]]
        if diff.any():
            i = int(np.flatnonzero(diff)[0])
            w = (int(a[i]), int(b[i]), int(c[i]))
            raise NotAssociative(f"({w[0]}*{w[1]})*{w[2]} != {w[0]}*({w[1]}*{w[2]})", witness=w)


def group_from_cayley_table(
    table: Sequence[Sequence[int]],
    name: str = "G",
    *,
    exhaustive_limit: int = EXHAUSTIVE_ASSOCIATIVITY_LIMIT,
    cap: int | None = None,
) -> Group:
    check_order_cap(len(table), cap)
    verify_group_axioms(table, exhaustive_limit=exhaustive_limit)
    return Group(name, table)


# -- permutation groups ---------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> tuple[int, ...]:
    """Parse cycle notation into a 0-based image tuple.

    Cycles use 1-based points and are composed left to right, so
    ``"(1 2)(2 3)"`` applies ``(1 2)`` first.
    """
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise MalformedCycle(f"unparseable cycle notation {text!r}", witness=text)
    perm = list(range(degree))
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        try:
            points = [int(tok) for tok in tokens]
        except ValueError:
            raise MalformedCycle(f"non-integer point in cycle ({body})", witness=text) from None
        for p in points:
            if not 1 <= p <= degree:
                raise PointOutOfRange(f"point {p} outside 1..{degree}", witness=p)
        if len(set(points)) != len(points):
            raise MalformedCycle(f"repeated point in cycle ({body})", witness=text)
        cycle = list(range(degree))
        for i, p in enumerate(points):
            cycle[p - 1] = points[(i + 1) % len(points)] - 1
        # left-to-right: first perm, then this cycle
        perm = [cycle[perm[x]] for x in range(degree)]
    return tuple(perm)


def group_from_permutations(
    generators: Sequence[str],
    degree: int,
    name: str | None = None,
    *,
    cap: int | None = None,
) -> Group:
    """Enumerate the permutation group generated by ``generators``.

    Elements are numbered in breadth-first discovery order (right
    multiplication by each generator in turn), starting from the identity.
    """
    if degree < 1:
        raise PointOutOfRange(f"degree must be positive, got {degree}", witness=degree)
    limit = order_cap() if cap is None else cap
    gens = [parse_permutation(g, degree) for g in generators]
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elements):
        x = elements[i]
        i += 1
        for s in gens:
            y = tuple(s[x[p]] for p in range(degree))
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                if len(elements) > limit:
                    raise OrderCapExceeded(
                        f"generated group exceeds the order cap {limit}", witness=limit
                    )
    table = [[index[tuple(b[a[p]] for p in range(degree))] for b in elements] for a in elements]
    return Group(name or "<" + ", ".join(generators) + ">", table)


# -- subgroups ------------------------------------------------------------------


class Subgroup:
    """A subgroup of ``parent`` stored as a membership bitset.

    Equality and hashing go by the bitset (and parent identity).  The
    constructor trusts that ``bits`` is closed; use :func:`subgroup_from_elements`
    or :func:`subgroup_closure` on untrusted input.
    """

    __slots__ = ("parent", "bits", "__dict__")

    def __init__(self, parent: Group, bits: int) -> None:
        self.parent = parent
        self.bits = bits

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        els = self.elements
        shown = ", ".join(map(str, els[:8])) + (", ..." if len(els) > 8 else "")
        return f"Subgroup(order={self.order}, {{{shown}}})"

    def __contains__(self, x: int) -> bool:
        return (self.bits >> x) & 1 == 1

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __le__(self, other: "Subgroup") -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "Subgroup") -> bool:
        return self.bits != other.bits and self.bits & ~other.bits == 0

    def __ge__(self, other: "Subgroup") -> bool:
        return other <= self

    def __gt__(self, other: "Subgroup") -> bool:
        return other < self

    @cached_property
    def order(self) -> int:
        return popcount(self.bits)

    @cached_property
    def elements(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily in element order."""
        g = self.parent
        elems, bits, gens = [0], 1, []
        for x in self.elements:
            if not (bits >> x) & 1:
                elems, bits = _extend(g, elems, bits, gens, x)
                gens.append(x)
        return tuple(gens)

    @cached_property
    def is_abelian(self) -> bool:
        comm = self.parent.commuting
        return all(self.bits & ~comm[x] == 0 for x in self.generators)

    def intersection(self, other: "Subgroup") -> "Subgroup":
        _same_parent(self, other)
        return Subgroup(self.parent, self.bits & other.bits)

    __and__ = intersection


def _same_parent(*subgroups: Subgroup) -> Group:
    g = subgroups[0].parent
    for h in subgroups[1:]:
        if h.parent is not g:
            raise ParentMismatch(
                f"subgroups belong to different groups ({g.name!r} vs {h.parent.name!r})"
            )
    return g


def _check_parent(g: Group, h: Subgroup) -> None:
    if h.parent is not g:
        raise ParentMismatch(f"subgroup belongs to {h.parent.name!r}, not {g.name!r}")


def _extend(
    g: Group, elems: list[int], bits: int, gens: Sequence[int], x: int
) -> tuple[list[int], int]:
    """Close ``<H, x>`` where ``H`` has elements ``elems``, bitset ``bits``
    and generators ``gens``.

    Builds the result as a union of right cosets ``H*y``: whenever
    ``y*s`` falls outside for a generator ``s``, its whole coset is added.
    """
    t = g.table
    all_gens = list(gens) + [x]
    members = bits
    out = list(elems)
    reps = [0]
    i = 0
    while i < len(reps):
        y = reps[i]
        i += 1
        row = t[y]
        for s in all_gens:
            z = row[s]
            if not (members >> z) & 1:
                for h in elems:
                    w = t[h][z]
                    members |= 1 << w
                    out.append(w)
                reps.append(z)
    return out, members


def is_closed(g: Group, bits: int) -> bool:
    if not bits & 1:
        return False
    t = g.table
    els = list(iter_bits(bits))
    for a in els:
        row = t[a]
        for b in els:
            if not (bits >> row[b]) & 1:
                return False
    return True


def subgroup_from_elements(g: Group, elements: Iterable[int]) -> Subgroup:
    """Wrap an explicit element set, raising :class:`NotASubgroup` unless closed."""
    els = list(elements)
    for x in els:
        if not 0 <= x < g.order:
            raise IndexOutOfRange(f"element {x} outside 0..{g.order - 1}", witness=x)
    bits = bits_of(els) | 1
    if not is_closed(g, bits):
        raise NotASubgroup(f"{sorted(set(els))} is not closed in {g.name}", witness=sorted(set(els)))
    return Subgroup(g, bits)


def subgroup_closure(g: Group, seed: Iterable[int]) -> Subgroup:
    """The smallest subgroup of ``g`` containing ``seed``."""
    elems, bits, gens = [0], 1, []
    for x in seed:
        if not 0 <= x < g.order:
            raise IndexOutOfRange(f"element {x} outside 0..{g.order - 1}", witness=x)
        if not (bits >> x) & 1:
            elems, bits = _extend(g, elems, bits, gens, x)
            gens.append(x)
    return Subgroup(g, bits)


def join(h: Subgroup, k: Subgroup) -> Subgroup:
    """``<H, K>``, computed by closure (never by the set product)."""
    g = _same_parent(h, k)
    elems, bits, gens = list(h.elements), h.bits, list(h.generators)
    for x in k.generators:
        if not (bits >> x) & 1:
            elems, bits = _extend(g, elems, bits, gens, x)
            gens.append(x)
    return Subgroup(g, bits)


def centralizer(g: Group, h: Subgroup) -> Subgroup:
    """``C_G(H)``: elements of ``g`` commuting with every element of ``h``."""
    _check_parent(g, h)
    comm = g.commuting
    bits = g.full_bits
    for x in h.generators:
        bits &= comm[x]
    return Subgroup(g, bits)


def center(g: Group) -> Subgroup:
    memo = g._memo
    if "center" not in memo:
        memo["center"] = centralizer(g, g.whole)
    return memo["center"]


def commutes(a: Subgroup, b: Subgroup) -> bool:
    """True iff ``ab = ba`` for every ``a`` in ``A`` and ``b`` in ``B``."""
    g = _same_parent(a, b)
    comm = g.commuting
    return all(b.bits & ~comm[x] == 0 for x in a.generators)


def product_bits(h: Subgroup, k: Subgroup) -> int:
    """Bitset of the set product ``HK``."""
    g = _same_parent(h, k)
    t = g.table
    kel = k.elements
    out = 0
    seen = 0
    for x in h.elements:
        if (seen >> x) & 1:
            continue
        row = t[x]
        coset = 0
        for y in kel:
            coset |= 1 << row[y]
        out |= coset
        # x*(H∩K) lands in the same coset x*K
        seen |= coset
    return out


def set_product(h: Subgroup, k: Subgroup) -> tuple[int, bool]:
    """``(HK as a bitset, whether HK is a subgroup)``.

    ``HK`` is a subgroup exactly when ``HK = KH``.
    """
    hk = product_bits(h, k)
    return hk, hk == product_bits(k, h)


def product_subgroup(h: Subgroup, k: Subgroup) -> Subgroup | None:
    hk, ok = set_product(h, k)
    return Subgroup(h.parent, hk) if ok else None


# -- homomorphisms and products ---------------------------------------------------

Domain = Union[Group, Subgroup]


def _domain_elements(d: Domain) -> tuple[int, ...]:
    return tuple(range(d.order)) if isinstance(d, Group) else d.elements


def _domain_group(d: Domain) -> Group:
    return d if isinstance(d, Group) else d.parent


@dataclass(frozen=True, eq=False)
class GroupHomomorphism:
    """An element map between groups (or subgroups, in parent numbering)."""

    source: Domain
    target: Domain
    mapping: Mapping[int, int]
    injective: bool = False
    isomorphism: bool = False

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image_bits(self, bits: int | None = None) -> int:
        src = _domain_elements(self.source) if bits is None else iter_bits(bits)
        return bits_of(self.mapping[x] for x in src)

    def image(self, h: Subgroup | None = None) -> Subgroup:
        return Subgroup(_domain_group(self.target), self.image_bits(None if h is None else h.bits))

    def validate(self) -> None:
        src = _domain_elements(self.source)
        tgt = set(_domain_elements(self.target))
        sg, tg = _domain_group(self.source), _domain_group(self.target)
        if set(self.mapping) != set(src):
            raise NotHomomorphism("map is not defined exactly on the source elements")
        for x in src:
            if self.mapping[x] not in tgt:
                raise NotHomomorphism(f"{x} maps outside the target", witness=(x,))
        if self.mapping[0] != 0:
            raise NotHomomorphism("identity does not map to identity", witness=(0,))
        for a in src:
            for b in src:
                if self.mapping[sg.table[a][b]] != tg.table[self.mapping[a]][self.mapping[b]]:
                    raise NotHomomorphism(
                        f"phi({a}*{b}) != phi({a})*phi({b})", witness=(a, b)
                    )
        images = set(self.mapping.values())
        if (self.injective or self.isomorphism) and len(images) != len(src):
            raise NotIsomorphism("map is not injective")
        if self.isomorphism and images != tgt:
            raise NotIsomorphism("map is not surjective")


def direct_product(
    a: Group, b: Group, name: str | None = None, *, cap: int | None = None
) -> tuple[Group, GroupHomomorphism, GroupHomomorphism]:
    """``A x B`` on pairs encoded as ``i*|B| + j``, with both embeddings."""
    na, nb = a.order, b.order
    check_order_cap(na * nb, cap, "direct product")
    ta, tb = a.table, b.table
    table = []
    for i in range(na):
        for j in range(nb):
            ra, rb = ta[i], tb[j]
            table.append([ra[k] * nb + rb[l] for k in range(na) for l in range(nb)])
    g = Group(name or f"{a.name}x{b.name}", table)
    emb_a = GroupHomomorphism(a, g, {i: i * nb for i in range(na)}, injective=True)
    emb_b = GroupHomomorphism(b, g, {j: j for j in range(nb)}, injective=True)
    return g, emb_a, emb_b


def induced_group(h: Subgroup, name: str | None = None) -> tuple[Group, GroupHomomorphism]:
    """``H`` as a group in its own right, with its inclusion into the parent.

    Element ``i`` of the new group is the ``i``-th smallest member of ``H``,
    so the identity stays at 0.
    """
    g = h.parent
    els = h.elements
    pos = {x: i for i, x in enumerate(els)}
    t = g.table
    table = [[pos[t[x][y]] for y in els] for x in els]
    sub = Group(name or f"{g.name}|{h.order}", table)
    return sub, GroupHomomorphism(sub, g, dict(enumerate(els)), injective=True)
