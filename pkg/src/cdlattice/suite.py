"""Run every check over a selection of catalog groups and constructed products."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .catalog import catalog_group, catalog_names
from .central import CentralProductSpec, InternalDecomposition, central_product, internal_decompositions
from .errors import CDLatticeError
from .group import Group, Subgroup, center, direct_product
from .subgroups import DEFAULT_BUDGET, all_subgroups
from .theorems import (
    ERROR,
    FAIL,
    PASS,
    SKIP,
    CheckReport,
    check_a4_remark,
    check_abel_atoms,
    check_coatom,
    check_cor_G_in_CD,
    check_corollary_mstar,
    check_full_transitive,
    check_height_four_remark,
    check_heights_2_3,
    check_interval_of_product,
    check_lemma_an1,
    check_lemma_an2,
    check_lemma_iss,
    check_lemma_pi,
    check_lemma_pi_is_subgroup,
    check_lemma_prod,
    check_nonabelian_atom,
    check_prop_almost,
    check_prop_direct,
    check_prop_nonproper,
    check_small_cd_lattice,
    check_subgroups_in_cd,
    check_thm_central_product,
    check_thm_levels,
)

DEFAULT_CATALOG_MAX_ORDER = 32
DEFAULT_MAX_DECOMPOSITIONS = 256

GROUP_CHECKS = (
    check_lemma_iss,
    check_lemma_an1,
    check_lemma_an2,
    check_cor_G_in_CD,
    check_small_cd_lattice,
    check_nonabelian_atom,
    check_abel_atoms,
    check_coatom,
    check_heights_2_3,
    check_interval_of_product,
    check_subgroups_in_cd,
    check_full_transitive,
)

DECOMPOSITION_CHECKS = (
    check_prop_almost,
    check_thm_central_product,
    check_corollary_mstar,
    check_thm_levels,
    check_lemma_pi_is_subgroup,
    check_lemma_pi,
    check_lemma_prod,
    check_prop_nonproper,
)

STATEMENTS: tuple[str, ...] = tuple(
    sorted(
        {c.statement for c in GROUP_CHECKS + DECOMPOSITION_CHECKS}
        | {check_prop_direct.statement, check_a4_remark.statement, check_height_four_remark.statement}
    )
)


@dataclass(frozen=True)
class FamilyMember:
    """A constructed test input: ``A * B`` amalgamating ``U`` with ``V``.

    ``u`` and ``v`` list element indices; ``None`` means a direct product.
    """

    name: str
    a: str
    b: str
    u: tuple[int, ...] | None = None
    v: tuple[int, ...] | None = None

    @property
    def direct(self) -> bool:
        return self.u is None

    def order(self) -> int:
        n = catalog_group(self.a).order * catalog_group(self.b).order
        return n if self.u is None else n // len(self.u)

    def build(self) -> tuple[Group, Subgroup, Subgroup]:
        a, b = catalog_group(self.a), catalog_group(self.b)
        if self.u is None:
            spec = CentralProductSpec.direct(a, b)
        else:
            u = Subgroup(a, sum(1 << i for i in self.u))
            v = Subgroup(b, sum(1 << i for i in self.v))
            spec = CentralProductSpec.from_map(a, b, u, v, dict(zip(self.u, self.v)))
        res = central_product(spec, self.name)
        return res.group, res.image_a, res.image_b


# Z(Q8) = Z(D8) = {0, 2}; {0, 2} is also the order-2 subgroup of C4.
FAMILY: tuple[FamilyMember, ...] = (
    FamilyMember("Q8*Q8", "Q8", "Q8", (0, 2), (0, 2)),
    FamilyMember("D8*C4", "D8", "C4", (0, 2), (0, 2)),
    FamilyMember("Q8*C4", "Q8", "C4", (0, 2), (0, 2)),
    FamilyMember("D8*D8", "D8", "D8", (0, 2), (0, 2)),
    FamilyMember("Q8xQ8", "Q8", "Q8"),
    FamilyMember("C2xQ8", "C2", "Q8"),
    FamilyMember("Q8xC2", "Q8", "C2"),
    FamilyMember("D8xC2", "D8", "C2"),
    FamilyMember("S3xC3", "S3", "C3"),
)

FAMILY_BY_NAME = {m.name: m for m in FAMILY}


def build_input(name: str) -> tuple[Group, tuple[Subgroup, Subgroup] | None]:
    """A suite input by name: a catalog group or a family member."""
    if name in FAMILY_BY_NAME:
        g, a, b = FAMILY_BY_NAME[name].build()
        return g, (a, b)
    return catalog_group(name), None


@dataclass(frozen=True)
class Selector:
    """Which inputs and statements a suite run covers.

    ``max_order`` bounds catalog groups (default 32) and family members
    (default unbounded); ``names`` restricts to named inputs; ``statements``
    to statement ids.  An empty tuple selects nothing.
    """

    max_order: int | None = None
    names: tuple[str, ...] | None = None
    statements: tuple[str, ...] | None = None

    def inputs(self) -> list[str]:
        cat_max = DEFAULT_CATALOG_MAX_ORDER if self.max_order is None else self.max_order
        out = catalog_names(cat_max)
        out += [m.name for m in FAMILY if self.max_order is None or m.order() <= self.max_order]
        if self.names is not None:
            wanted = set(self.names)
            out = [n for n in out if n in wanted] + [
                n for n in self.names if n not in out and (n in FAMILY_BY_NAME or _is_catalog(n))
            ]
        return out

    def wants(self, statement: str) -> bool:
        return self.statements is None or statement in self.statements


def _is_catalog(name: str) -> bool:
    try:
        catalog_group(name)
    except CDLatticeError:
        return False
    return True


def _over_decompositions(
    check: Callable[..., CheckReport],
    g: Group,
    decs: Sequence[InternalDecomposition],
    label: str,
) -> CheckReport:
    """Fold one decomposition-level check over many decompositions."""
    start = time.perf_counter()
    ran = skipped = 0
    for d in decs:
        rep = check(g, d.a, d.b)
        if rep.status == SKIP:
            skipped += 1
            continue
        ran += 1
        if rep.status != PASS:
            rep.input = f"{label} :: {rep.input}"
            rep.ms = (time.perf_counter() - start) * 1000.0
            return rep
    ms = (time.perf_counter() - start) * 1000.0
    if ran == 0:
        return CheckReport(
            check.statement, label, SKIP, {"reason": "hypothesis not met on any decomposition"}, ms
        )
    return CheckReport(check.statement, label, PASS, None, ms, {"decompositions": ran, "skipped": skipped})


def _safe(statement: str, label: str, fn: Callable[[], CheckReport | list[CheckReport]]) -> list[CheckReport]:
    start = time.perf_counter()
    try:
        out = fn()
    except CDLatticeError as exc:
        ms = (time.perf_counter() - start) * 1000.0
        return [CheckReport(statement, label, ERROR, {"error": type(exc).__name__, "message": str(exc)}, ms)]
    return out if isinstance(out, list) else [out]


def _select_decompositions(
    g: Group, defining: tuple[Subgroup, Subgroup] | None, limit: int | None
) -> tuple[list[InternalDecomposition], int]:
    decs = internal_decompositions(g)
    total = len(decs)
    if limit is not None and total > limit:
        z = center(g)
        keep = [d for d in decs if d.proper or {d.a, d.b} == {g.whole, z}]
        rest = [d for d in decs if d not in keep]
        decs = keep + rest[: max(0, limit - len(keep))]
    if defining is not None:
        a, b = defining
        if not any({d.a, d.b} == {a, b} for d in decs):
            decs = [InternalDecomposition(a, b, False)] + list(decs)
    return list(decs), total


def run_input(
    name: str,
    selector: Selector = Selector(),
    *,
    budget: int = DEFAULT_BUDGET,
    max_decompositions: int | None = DEFAULT_MAX_DECOMPOSITIONS,
) -> list[CheckReport]:
    reports: list[CheckReport] = []
    try:
        g, defining = build_input(name)
        all_subgroups(g, budget=budget)
    except CDLatticeError as exc:
        return [CheckReport("input", name, ERROR, {"error": type(exc).__name__, "message": str(exc)})]

    for check in GROUP_CHECKS:
        if selector.wants(check.statement):
            reports += _safe(check.statement, name, lambda c=check: c(g, label=name))

    decs, total = _select_decompositions(g, defining, max_decompositions)
    if len(decs) < total:
        reports.append(
            CheckReport(
                "decompositions",
                name,
                SKIP,
                {"reason": f"checked {len(decs)} of {total} central decompositions (limit)"},
            )
        )
    for check in DECOMPOSITION_CHECKS:
        if selector.wants(check.statement):
            reports += _safe(
                check.statement, name, lambda c=check: _over_decompositions(c, g, decs, name)
            )

    member = FAMILY_BY_NAME.get(name)
    if member is not None and member.direct and selector.wants(check_prop_direct.statement):
        a, b = catalog_group(member.a), catalog_group(member.b)
        reports += _safe("prop-direct", name, lambda: check_prop_direct(a, b, label=name))
    if name == "A4" and selector.wants(check_a4_remark.statement):
        reports += _safe("remark-a4", name, lambda: check_a4_remark(g, label=name))
    if name == "Q8*Q8" and selector.wants(check_height_four_remark.statement):
        reports += _safe("remark-height-4", name, lambda: check_height_four_remark(g, label=name))
    return reports


def run_suite(
    selector: Selector = Selector(),
    budget: int = DEFAULT_BUDGET,
    *,
    max_decompositions: int | None = DEFAULT_MAX_DECOMPOSITIONS,
) -> list[CheckReport]:
    """Run the selected checks; reports are sorted by (statement, input)."""
    reports: list[CheckReport] = []
    for name in selector.inputs():
        reports += run_input(name, selector, budget=budget, max_decompositions=max_decompositions)
    reports.sort(key=lambda r: (r.statement, r.input))
    return reports


def summarize(reports: Iterable[CheckReport]) -> dict[str, int]:
    counts = {PASS: 0, FAIL: 0, SKIP: 0, ERROR: 0}
    for r in reports:
        counts[r.status] += 1
    return counts
