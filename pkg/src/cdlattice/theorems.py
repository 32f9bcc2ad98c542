"""Executable checks for statements about CD lattices of central products.

Each ``check_*`` function evaluates one statement on concrete input and
returns a :class:`CheckReport` (bundles return a list).  A statement whose
hypothesis does not hold on the input is reported as ``skip``, never
``pass``.  Failures carry the first counterexample in canonical order.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .central import (
    InternalDecomposition,
    internal_decompositions,
    is_central_decomposition,
    is_proper,
    pi_projection,
    require_central_decomposition,
)
from .errors import PreconditionFailed
from .group import (
    Group,
    Subgroup,
    center,
    centralizer,
    direct_product,
    is_closed,
    iter_bits,
    join,
    popcount,
    product_bits,
)
from .lattice import cd_lattice, cd_of_subgroup, measure
from .subgroups import all_subgroups, interval, subgroups_containing

PASS, FAIL, SKIP, ERROR = "pass", "fail", "skip", "error"


@dataclass
class CheckReport:
    statement: str
    input: str
    status: str
    witness: dict | None = None
    ms: float = 0.0
    info: dict | None = field(default=None, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self, timings: bool = True) -> dict:
        out = {
            "statement": self.statement,
            "input": self.input,
            "status": self.status,
            "witness": self.witness,
            "ms": round(self.ms, 3) if timings else 0,
        }
        if self.info is not None:
            out["info"] = self.info
        return out


class Info(dict):
    """Returned by a check body to pass with informational statistics."""


class _Skip(Exception):
    pass


def _elements(h: Subgroup | int) -> list[int]:
    return list(h.elements) if isinstance(h, Subgroup) else list(iter_bits(h))


def _describe(g: Group, *subgroups: Subgroup, names: str = "AB") -> str:
    subs = all_subgroups(g)
    parts = [f"{n}=#{subs.index(h)}(|{n}|={h.order})" for n, h in zip(names, subgroups)]
    return f"{g.name} [{', '.join(parts)}]" if parts else g.name


def _check(statement: str):
    """Wrap a check body: time it and turn its return value into a report.

    The body returns ``None`` (pass), an :class:`Info` (pass with stats) or a
    witness dict (fail), and raises :class:`PreconditionFailed` to skip.
    """

    def deco(body: Callable[..., Any]) -> Callable[..., CheckReport]:
        @functools.wraps(body)
        def run(*args, label: str | None = None, **kwargs) -> CheckReport:
            start = time.perf_counter()
            name = label if label is not None else _default_label(args)
            info = None
            try:
                result = body(*args, **kwargs)
            except PreconditionFailed as exc:
                status, witness = SKIP, {"reason": str(exc)}
            else:
                if result is None:
                    status, witness = PASS, None
                elif isinstance(result, Info):
                    status, witness, info = PASS, None, dict(result)
                else:
                    status, witness = FAIL, result
            ms = (time.perf_counter() - start) * 1000.0
            return CheckReport(statement, name, status, witness, ms, info)

        run.statement = statement
        return run

    return deco


def _default_label(args: Sequence[Any]) -> str:
    if not args:
        return ""
    first = args[0]
    if isinstance(first, Group) and len(args) > 1 and isinstance(args[1], Group):
        return "x".join(a.name for a in args if isinstance(a, Group))
    if isinstance(first, Group):
        subs = [a for a in args[1:] if isinstance(a, Subgroup)]
        return _describe(first, *subs[:2]) if subs else first.name
    if isinstance(first, Subgroup):
        return first.parent.name
    return "x".join(a.name for a in args if isinstance(a, Group))


# -- lemmas about a single group ------------------------------------------------


@_check("lemma-iss")
def check_lemma_iss(g: Group) -> dict | None:
    """``m(H) m(K) <= m(<H,K>) m(H ∩ K)``, with equality exactly when
    ``<H,K> = HK`` and ``C(H ∩ K) = C(H) C(K)``, over all pairs."""
    subs = all_subgroups(g)
    cent = {h.bits: centralizer(g, h) for h in subs}
    m = {h.bits: h.order * cent[h.bits].order for h in subs}
    items = subs.items
    for i, h in enumerate(items):
        for k in items[i:]:
            j = join(h, k)
            meet = h & k
            lhs = m[h.bits] * m[k.bits]
            rhs = m[j.bits] * m[meet.bits]
            equal_parts = product_bits(h, k) == j.bits and cent[meet.bits].bits == product_bits(
                cent[h.bits], cent[k.bits]
            )
            if lhs > rhs or (lhs == rhs) != equal_parts:
                return {
                    "H": _elements(h),
                    "K": _elements(k),
                    "lhs": lhs,
                    "rhs": rhs,
                    "equalityConditions": equal_parts,
                }
    return None


@_check("lemma-an1")
def check_lemma_an1(g: Group) -> dict | None:
    """``m_H(K)/m_G(K) <= m_H(X)/m_G(X)`` for every chain ``K <= X <= H``,
    with equality exactly when ``C_G(K) ⊆ H C_G(X)``.  Ratios are compared
    by cross-multiplication."""
    subs = all_subgroups(g)
    cent = {h.bits: centralizer(g, h) for h in subs}
    below = {h.bits: [x for x in subs if x <= h] for h in subs}
    hc_cache: dict[tuple[int, int], int] = {}
    for h in subs:
        for x in below[h.bits]:
            cx = cent[x.bits]
            key = (h.bits, cx.bits)
            if key not in hc_cache:
                hc_cache[key] = product_bits(h, cx)
            hcx = hc_cache[key]
            m_h_x = x.order * popcount(h.bits & cx.bits)
            m_g_x = x.order * cx.order
            for k in below[x.bits]:
                ck = cent[k.bits]
                m_h_k = k.order * popcount(h.bits & ck.bits)
                m_g_k = k.order * ck.order
                lhs, rhs = m_h_k * m_g_x, m_h_x * m_g_k
                cond = ck.bits & ~hcx == 0
                if lhs > rhs or (lhs == rhs) != cond:
                    return {
                        "K": _elements(k),
                        "X": _elements(x),
                        "H": _elements(h),
                        "ratioLeft": [m_h_k, m_g_k],
                        "ratioRight": [m_h_x, m_g_x],
                        "equalityCondition": cond,
                    }
    return None


def _an2_violation(g: Group, h: Subgroup, x: Subgroup) -> dict | None:
    cdg = cd_lattice(g)
    cdh = cd_of_subgroup(h)
    cx = centralizer(g, x)
    for y in cdg.nodes:
        j = join(x, y)
        meet = x & y
        problems = []
        if j not in cdg:
            problems.append("<X,Y> not in CD(G)")
        if meet not in cdh:
            problems.append("X∩Y not in CD(H)")
        if product_bits(x, y) != j.bits:
            problems.append("<X,Y> != XY")
        if centralizer(g, meet).bits != product_bits(cx, centralizer(g, y)):
            problems.append("C(X∩Y) != C(X)C(Y)")
        if problems:
            return {"H": _elements(h), "X": _elements(x), "Y": _elements(y), "violations": problems}
    return None


def _an2_applies(g: Group, h: Subgroup, x: Subgroup) -> bool:
    return x <= h and product_bits(h, centralizer(g, x)) == g.full_bits and x in cd_of_subgroup(h)


@_check("lemma-an2")
def check_lemma_an2(g: Group, h: Subgroup | None = None, x: Subgroup | None = None) -> dict | Info | None:
    """With ``G = H C_G(X)``, ``X <= H`` and ``X`` in ``CD(H)``: for every
    ``Y`` in ``CD(G)``, ``<X,Y> = XY`` is in ``CD(G)``, ``X ∩ Y`` is in
    ``CD(H)`` and ``C(X ∩ Y) = C(X) C(Y)``.

    Given ``h`` and ``x`` checks that instance; otherwise every qualifying
    pair ``(H, X)`` of the group.
    """
    if h is not None and x is not None:
        if not _an2_applies(g, h, x):
            raise PreconditionFailed("need X <= H, G = H C_G(X) and X in CD(H)")
        return _an2_violation(g, h, x)
    count = 0
    for hh in all_subgroups(g):
        for xx in cd_of_subgroup(hh).nodes:
            if product_bits(hh, centralizer(g, xx)) != g.full_bits:
                continue
            count += 1
            bad = _an2_violation(g, hh, xx)
            if bad:
                return bad
    return Info(instances=count)


# -- statements about one central decomposition ---------------------------------


def _product_form(g: Group, a: Subgroup, b: Subgroup, x: Subgroup) -> tuple[Subgroup, Subgroup] | None:
    h = pi_projection(g, a, b, x, "A")
    k = pi_projection(g, a, b, x, "B")
    return (h, k) if product_bits(h, k) == x.bits else None


@_check("prop-almost")
def check_prop_almost(g: Group, a: Subgroup, b: Subgroup) -> dict | None:
    require_central_decomposition(g, a, b)
    cdg = cd_lattice(g)
    cda, cdb = cd_of_subgroup(a), cd_of_subgroup(b)
    ab = a & b
    forms = []
    for x in cdg.nodes:
        f = _product_form(g, a, b, x)
        if f is not None:
            forms.append((x, *f))
    if not forms:
        raise PreconditionFailed("no CD(G) member factors as HK with H <= A, K <= B")
    if cdg.max_measure * ab.order**2 != cda.max_measure * cdb.max_measure:
        return {"mG": cdg.max_measure, "mA": cda.max_measure, "mB": cdb.max_measure, "amalgam": ab.order}
    for xa in cda.nodes:
        for yb in cdb.nodes:
            if product_bits(xa, yb) not in cdg.nodes:
                return {"X": _elements(xa), "Y": _elements(yb), "reason": "XY not in CD(G)"}
    for x, h, k in forms:
        if product_bits(h, ab) not in cda.heights:
            return {"HK": _elements(x), "H": _elements(h), "reason": "H(A∩B) not in CD(A)"}
        if product_bits(k, ab) not in cdb.heights:
            return {"HK": _elements(x), "K": _elements(k), "reason": "K(A∩B) not in CD(B)"}
    return None


@_check("thm-central-product")
def check_thm_central_product(g: Group, a: Subgroup, b: Subgroup) -> dict | Info:
    """``CD(A) CD(B) ⊆ CD(G)``; tops and bottoms multiply."""
    require_central_decomposition(g, a, b)
    cdg = cd_lattice(g)
    cda, cdb = cd_of_subgroup(a), cd_of_subgroup(b)
    products = set()
    for x in cda.nodes:
        for y in cdb.nodes:
            xy = product_bits(x, y)
            if xy not in cdg.nodes:
                return {"X": _elements(x), "Y": _elements(y), "reason": "XY not in CD(G)"}
            products.add(xy)
    if product_bits(cda.top, cdb.top) != cdg.top_subgroup.bits:
        return {"reason": "T_A T_B != T_G", "TA": _elements(cda.top), "TB": _elements(cdb.top)}
    if product_bits(cda.bottom, cdb.bottom) != cdg.bottom_subgroup.bits:
        return {"reason": "B_A B_B != B_G", "BA": _elements(cda.bottom), "BB": _elements(cdb.bottom)}
    return Info(products=len(products), members=len(cdg), strict=len(products) < len(cdg))


@_check("cor-mstar")
def check_corollary_mstar(g: Group, a: Subgroup, b: Subgroup) -> dict | None:
    """``m*(G) |A ∩ B|^2 = m*(A) m*(B)``."""
    require_central_decomposition(g, a, b)
    mg = cd_lattice(g).max_measure
    ma, mb = cd_of_subgroup(a).max_measure, cd_of_subgroup(b).max_measure
    z = (a & b).order
    if mg * z * z != ma * mb:
        return {"mG": mg, "mA": ma, "mB": mb, "amalgam": z}
    return None


@_check("thm-levels")
def check_thm_levels(g: Group, a: Subgroup, b: Subgroup) -> dict | None:
    require_central_decomposition(g, a, b)
    cdg = cd_lattice(g)
    cda, cdb = cd_of_subgroup(a), cd_of_subgroup(b)
    if cdg.lattice_height != cda.lattice_height + cdb.lattice_height:
        return {
            "reason": "lattice heights do not add",
            "heightG": cdg.lattice_height,
            "heightA": cda.lattice_height,
            "heightB": cdb.lattice_height,
        }
    for i, x in enumerate(cdg.nodes):
        f = _product_form(g, a, b, x)
        if f is None:
            continue
        h, k = f
        if h.bits not in cda.heights or k.bits not in cdb.heights:
            return {"HK": _elements(x), "reason": "factor not in CD(A) or CD(B)"}
        if cdg.height[i] != cda.heights[h.bits] + cdb.heights[k.bits]:
            return {"HK": _elements(x), "reason": "heights do not add"}
        if cdg.depth[i] != cda.depths[h.bits] + cdb.depths[k.bits]:
            return {"HK": _elements(x), "reason": "depths do not add"}
    return None


@_check("prop-nonproper")
def check_prop_nonproper(g: Group, a: Subgroup, b: Subgroup) -> dict | None:
    """With ``G = AB`` and ``B <= Z(G)``: ``CD(G) = CD(A) B``."""
    if product_bits(a, b) != g.full_bits or not b <= center(g):
        raise PreconditionFailed("need G = AB with B central")
    expected = {product_bits(x, b) for x in cd_of_subgroup(a).nodes}
    actual = set(cd_lattice(g).nodes.bit_set())
    return _set_mismatch(actual, expected)


def _set_mismatch(actual: set[int] | frozenset[int], expected: set[int] | frozenset[int]) -> dict | None:
    if actual == expected:
        return None
    extra = sorted(actual - expected, key=lambda b: (popcount(b), _elements(b)))
    missing = sorted(expected - actual, key=lambda b: (popcount(b), _elements(b)))
    return {
        "unexpected": [_elements(x) for x in extra[:1]],
        "missing": [_elements(x) for x in missing[:1]],
        "sizes": [len(actual), len(expected)],
    }


@_check("lemma-pi-is-subgroup")
def check_lemma_pi_is_subgroup(g: Group, a: Subgroup, b: Subgroup) -> dict | None:
    """``A ∩ B <= pi_A(U) <= A`` is a subgroup for every ``U <= G`` (and
    likewise for ``B``)."""
    require_central_decomposition(g, a, b)
    ab = a & b
    for u in all_subgroups(g):
        for side, factor in (("A", a), ("B", b)):
            p = pi_projection(g, a, b, u, side)
            if not is_closed(g, p.bits) or not (ab <= p <= factor):
                return {"U": _elements(u), "side": side, "projection": _elements(p)}
    return None


@_check("lemma-pi")
def check_lemma_pi(g: Group, a: Subgroup, b: Subgroup) -> dict | None:
    """``K <= B``, ``A ∩ B <= U`` and ``K <= U ⊆ AK`` imply ``U = pi_A(U) K``."""
    require_central_decomposition(g, a, b)
    subs = all_subgroups(g)
    ab = a & b
    for k in subs:
        if not k <= b:
            continue
        ak = product_bits(a, k)
        for u in subs:
            if not (ab <= u and k <= u and u.bits & ~ak == 0):
                continue
            p = pi_projection(g, a, b, u, "A")
            if product_bits(p, k) != u.bits:
                return {"K": _elements(k), "U": _elements(u), "piA": _elements(p)}
    return None


@_check("lemma-prod")
def check_lemma_prod(g: Group, a: Subgroup, b: Subgroup) -> dict | None:
    """For ``H_i`` between ``A ∩ B`` and ``A`` and ``K_i`` between ``A ∩ B``
    and ``B``: ``H1 K1 ⊆ H2 K2`` forces ``H1 <= H2`` and ``K1 <= K2``."""
    if product_bits(a, b) != g.full_bits:
        raise PreconditionFailed("need G = AB")
    subs = all_subgroups(g)
    ab = a & b
    hs = list(interval(subs, ab, a))
    ks = list(interval(subs, ab, b))
    prods = [(h, k, product_bits(h, k)) for h in hs for k in ks]
    for h1, k1, p1 in prods:
        for h2, k2, p2 in prods:
            if p1 & ~p2:
                continue
            if not (h1 <= h2 and k1 <= k2) or (p1 == p2 and (h1 != h2 or k1 != k2)):
                return {
                    "H1": _elements(h1),
                    "K1": _elements(k1),
                    "H2": _elements(h2),
                    "K2": _elements(k2),
                }
    return None


@_check("prop-direct")
def check_prop_direct(a: Group, b: Group) -> dict | None:
    """``CD(A x B) = CD(A) CD(B)`` on the constructed direct product."""
    g, ea, eb = direct_product(a, b)
    expected = {
        product_bits(ea.image(x), eb.image(y)) for x in cd_lattice(a).nodes for y in cd_lattice(b).nodes
    }
    return _set_mismatch(set(cd_lattice(g).nodes.bit_set()), expected)


@_check("cor-g-in-cd")
def check_cor_G_in_CD(g: Group, decompositions: Sequence[InternalDecomposition] | None = None) -> dict | Info:
    """``G`` is in ``CD(G)`` iff ``A`` is in ``CD(A)`` and ``B`` in ``CD(B)``."""
    decs = internal_decompositions(g) if decompositions is None else decompositions
    lhs = g.whole in cd_lattice(g)
    for d in decs:
        rhs = d.a in cd_of_subgroup(d.a) and d.b in cd_of_subgroup(d.b)
        if lhs != rhs:
            return {"A": _elements(d.a), "B": _elements(d.b), "GinCD": lhs}
    return Info(decompositions=len(decs), GinCD=lhs)


# -- structural statements ---------------------------------------------------------


def _no_proper(g: Group) -> bool:
    return not any(d.proper for d in internal_decompositions(g))


@_check("prop-small-cd-lattice")
def check_small_cd_lattice(g: Group) -> dict | None:
    """``CD(G) = {Z(G), G}`` rules out proper central decompositions."""
    cdg = cd_lattice(g)
    if cdg.nodes.bit_set() != {center(g).bits, g.full_bits}:
        raise PreconditionFailed("CD(G) != {Z(G), G}")
    for d in internal_decompositions(g):
        if d.proper:
            return {"A": _elements(d.a), "B": _elements(d.b)}
    return None


def _rich_hypothesis(g: Group) -> None:
    cdg = cd_lattice(g)
    if g.whole not in cdg or cdg.lattice_height <= 1:
        raise PreconditionFailed("need G in CD(G) and CD(G) of height > 1")


@_check("lemma-nonabelian-atom")
def check_nonabelian_atom(g: Group) -> dict | None:
    """A nonabelian atom ``A`` gives a proper central product ``G = A C_G(A)``."""
    _rich_hypothesis(g)
    cdg = cd_lattice(g)
    atoms = [cdg[i] for i in cdg.atoms() if not cdg[i].is_abelian]
    if not atoms:
        raise PreconditionFailed("no nonabelian atom")
    for x in atoms:
        c = centralizer(g, x)
        if not (is_central_decomposition(g, x, c) and is_proper(g, x, c)):
            return {"atom": _elements(x), "centralizer": _elements(c)}
    return None


@_check("lemma-abel-atoms")
def check_abel_atoms(g: Group) -> dict | None:
    """With no proper central decomposition, every atom is abelian."""
    _rich_hypothesis(g)
    if not _no_proper(g):
        raise PreconditionFailed("G admits a proper central product")
    cdg = cd_lattice(g)
    for i in cdg.atoms():
        if not cdg[i].is_abelian:
            return {"atom": _elements(cdg[i])}
    return None


@_check("lemma-coatom")
def check_coatom(g: Group) -> dict | None:
    """Each coatom ``C`` has ``C_G(C) = Z(C)`` or ``G = C C_G(C)`` proper."""
    _rich_hypothesis(g)
    cdg = cd_lattice(g)
    for i in cdg.coatoms():
        c = cdg[i]
        cc = centralizer(g, c)
        if cc == c & cc:
            continue
        if is_central_decomposition(g, c, cc) and is_proper(g, c, cc):
            continue
        return {"coatom": _elements(c), "centralizer": _elements(cc)}
    return None


@_check("prop-heights-2-3")
def check_heights_2_3(g: Group) -> dict | None:
    """At height 2 or 3: no proper central product iff all atoms abelian."""
    cdg = cd_lattice(g)
    if g.whole not in cdg or cdg.lattice_height not in (2, 3):
        raise PreconditionFailed("need G in CD(G) and CD(G) of height 2 or 3")
    no_proper = _no_proper(g)
    abelian_atoms = all(cdg[i].is_abelian for i in cdg.atoms())
    if no_proper != abelian_atoms:
        return {"noProperCentralProduct": no_proper, "allAtomsAbelian": abelian_atoms}
    return None


def check_structure_props(g: Group, label: str | None = None) -> list[CheckReport]:
    return [
        check(g, label=label)
        for check in (
            check_small_cd_lattice,
            check_nonabelian_atom,
            check_abel_atoms,
            check_coatom,
            check_heights_2_3,
        )
    ]


@_check("remark-height-4")
def check_height_four_remark(g: Group) -> dict | None:
    """``Q8 * Q8``: height 4, every atom abelian of order 4, yet a proper
    central product exists, so the height 2-3 equivalence stops there."""
    cdg = cd_lattice(g)
    atoms = [cdg[i] for i in cdg.atoms()]
    facts = {
        "height": cdg.lattice_height,
        "atomOrders": sorted({x.order for x in atoms}),
        "allAtomsAbelian": all(x.is_abelian for x in atoms),
        "properDecomposition": not _no_proper(g),
    }
    ok = (
        facts["height"] == 4
        and facts["atomOrders"] == [4]
        and facts["allAtomsAbelian"]
        and facts["properDecomposition"]
    )
    return None if ok else facts


# -- interval statements -------------------------------------------------------------


def _center_of(g: Group, h: Subgroup) -> Subgroup:
    return h & centralizer(g, h)


@_check("lemma-interval-of-product")
def check_interval_of_product(g: Group) -> dict | None:
    """``CD(H C_G(H)) = [Z(H) : H C_G(H)]`` inside ``CD(G)``."""
    cdg = cd_lattice(g)
    for h in cdg.nodes:
        c = centralizer(g, h)
        hc = Subgroup(g, product_bits(h, c))
        expected = interval(cdg.nodes, h & c, hc).bit_set()
        bad = _set_mismatch(cd_of_subgroup(hc).bit_set(), expected)
        if bad:
            return {"H": _elements(h), **bad}
    return None


@_check("cor-subgroups-in-cd")
def check_subgroups_in_cd(g: Group) -> dict | None:
    """``CD(H) = [Z(H) : H]`` inside ``CD(G)`` for every member ``H``."""
    cdg = cd_lattice(g)
    for h in cdg.nodes:
        expected = interval(cdg.nodes, _center_of(g, h), h).bit_set()
        bad = _set_mismatch(cd_of_subgroup(h).bit_set(), expected)
        if bad:
            return {"H": _elements(h), **bad}
    return None


@_check("cor-full-transitive")
def check_full_transitive(g: Group) -> dict | None:
    """If ``CD(G)`` is every subgroup above ``Z(G)``, then ``CD(H)`` is every
    subgroup of ``H`` above ``Z(H)``, for all ``H <= G``."""
    if cd_lattice(g).nodes.bit_set() != subgroups_containing(g, center(g)).bit_set():
        raise PreconditionFailed("CD(G) != [Z(G) : G] in L(G)")
    subs = all_subgroups(g)
    for h in subs:
        expected = interval(subs, _center_of(g, h), h).bit_set()
        bad = _set_mismatch(cd_of_subgroup(h).bit_set(), expected)
        if bad:
            return {"H": _elements(h), **bad}
    return None


def check_interval_results(g: Group, label: str | None = None) -> list[CheckReport]:
    return [
        check(g, label=label)
        for check in (check_interval_of_product, check_subgroups_in_cd, check_full_transitive)
    ]


@_check("remark-a4")
def check_a4_remark(g: Group) -> dict | None:
    """``A4`` is not in ``CD(A4)``, hence lies in no CD lattice at all."""
    cdg = cd_lattice(g)
    if g.whole in cdg:
        return {"members": [_elements(x) for x in cdg.nodes]}
    return None
