"""Central products: external construction, internal decompositions, projections."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Mapping

from .errors import NotCentral, NotCentralDecomposition, NotHomomorphism, NotIsomorphism
from .group import (
    Group,
    GroupHomomorphism,
    Subgroup,
    _same_parent,
    center,
    centralizer,
    check_order_cap,
    commutes,
    product_bits,
)
from .subgroups import DEFAULT_BUDGET, all_subgroups


@dataclass(frozen=True, eq=False)
class CentralProductSpec:
    """Amalgamation data: identify ``U <= Z(A)`` with ``V <= Z(B)`` via ``phi``."""

    a: Group
    b: Group
    u: Subgroup
    v: Subgroup
    phi: GroupHomomorphism

    @classmethod
    def from_map(
        cls, a: Group, b: Group, u: Subgroup, v: Subgroup, phi: Mapping[int, int]
    ) -> "CentralProductSpec":
        return cls(a, b, u, v, GroupHomomorphism(u, v, dict(phi), isomorphism=True))

    @classmethod
    def direct(cls, a: Group, b: Group) -> "CentralProductSpec":
        return cls.from_map(a, b, a.trivial, b.trivial, {0: 0})

    def validate(self) -> None:
        if self.u.parent is not self.a or self.v.parent is not self.b:
            raise NotCentral("U and V must be subgroups of A and B respectively")
        za, zb = center(self.a), center(self.b)
        if not self.u <= za:
            raise NotCentral(f"U is not contained in Z({self.a.name})", witness=self.u.elements)
        if not self.v <= zb:
            raise NotCentral(f"V is not contained in Z({self.b.name})", witness=self.v.elements)
        if self.phi.source != self.u or self.phi.target != self.v:
            raise NotIsomorphism("phi must map U onto V")
        try:
            self.phi.validate()
        except NotHomomorphism as exc:
            if isinstance(exc, NotIsomorphism):
                raise
            raise NotIsomorphism(f"phi is not an isomorphism: {exc}", witness=exc.witness) from None


@dataclass(frozen=True, eq=False)
class CentralProductResult:
    group: Group
    embed_a: GroupHomomorphism
    embed_b: GroupHomomorphism
    amalgam: Subgroup

    @property
    def image_a(self) -> Subgroup:
        return self.embed_a.image()

    @property
    def image_b(self) -> Subgroup:
        return self.embed_b.image()


def central_product(spec: CentralProductSpec, name: str | None = None, *, cap: int | None = None) -> CentralProductResult:
    """``(A x B) / {(u, phi(u)^-1)}``.

    Each coset is labeled by its lexicographically least pair ``(a, b)``;
    elements of the result are numbered in increasing order of that label,
    which puts the identity at 0.
    """
    spec.validate()
    a, b = spec.a, spec.b
    na, nb = a.order, b.order
    order = na * nb // spec.u.order
    check_order_cap(order, cap, "central product")
    binv = b.inverse
    kernel = [(u, binv[spec.phi(u)]) for u in spec.u.elements]

    ta, tb = a.table, b.table
    label = [-1] * (na * nb)
    reps: list[tuple[int, int]] = []
    for x in range(na):
        for y in range(nb):
            if label[x * nb + y] >= 0:
                continue
            k = len(reps)
            reps.append((x, y))
            for u, w in kernel:
                label[ta[x][u] * nb + tb[y][w]] = k

    table = [
        [label[ta[x1][x2] * nb + tb[y1][y2]] for (x2, y2) in reps]
        for (x1, y1) in reps
    ]
    g = Group(name or f"{a.name}*{b.name}", table)
    emb_a = GroupHomomorphism(a, g, {x: label[x * nb] for x in range(na)}, injective=True)
    emb_b = GroupHomomorphism(b, g, {y: label[y] for y in range(nb)}, injective=True)
    amalgam = Subgroup(g, emb_a.image_bits() & emb_b.image_bits())
    return CentralProductResult(g, emb_a, emb_b, amalgam)


@dataclass(frozen=True)
class InternalDecomposition:
    a: Subgroup
    b: Subgroup
    proper: bool


def is_central_decomposition(g: Group, a: Subgroup, b: Subgroup) -> bool:
    """``G = AB`` as sets and ``[A, B] = 1``."""
    _same_parent(a, b)
    return a.parent is g and commutes(a, b) and product_bits(a, b) == g.full_bits


def is_proper(g: Group, a: Subgroup, b: Subgroup) -> bool:
    z = center(g)
    return z < a < g.whole and z < b < g.whole


def require_central_decomposition(g: Group, a: Subgroup, b: Subgroup) -> None:
    if not is_central_decomposition(g, a, b):
        raise NotCentralDecomposition(
            f"{g.name} is not the central product of the given subgroups",
            witness={"A": list(a.elements), "B": list(b.elements)},
        )


def internal_decompositions(g: Group, *, budget: int = DEFAULT_BUDGET) -> list[InternalDecomposition]:
    """Every unordered pair ``{A, B}`` of subgroups with ``G = AB`` and ``[A, B] = 1``.

    Pairs are reported with ``A`` at the smaller canonical index.
    """
    memo = g._memo
    if "decompositions" in memo:
        return memo["decompositions"]
    subs = all_subgroups(g, budget=budget)
    n = g.order
    full = g.full_bits
    out = []
    for i, a in enumerate(subs):
        ca = centralizer(g, a)
        # B <= C_G(A) and G = A C_G(A) are both forced
        if a.order * ca.order != n * _pop(a.bits & ca.bits):
            continue
        for b in subs.items[i:]:
            if b.bits & ~ca.bits:
                continue
            if a.order * b.order != n * _pop(a.bits & b.bits):
                continue
            if product_bits(a, b) != full:
                continue
            out.append(InternalDecomposition(a, b, is_proper(g, a, b)))
    memo["decompositions"] = out
    return out


def _pop(x: int) -> int:
    return bin(x).count("1")


def pi_projection(
    g: Group, a: Subgroup, b: Subgroup, u: Subgroup, side: Literal["A", "B"] = "A"
) -> Subgroup:
    """The ``A``-parts (or ``B``-parts) of all factorizations of elements of ``U``.

    ``{a in A : ab in U for some b in B}`` is ``A`` intersected with ``UB``.
    """
    require_central_decomposition(g, a, b)
    _same_parent(a, u)
    if side == "A":
        return Subgroup(g, a.bits & product_bits(u, b))
    if side == "B":
        return Subgroup(g, b.bits & product_bits(a, u))
    raise ValueError(f"side must be 'A' or 'B', got {side!r}")
