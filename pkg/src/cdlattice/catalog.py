"""Named small groups with fixed, reproducible element numbering.

Presentations (element ``i`` is listed first, the identity is always 0):

``C<n>``
    ``x^i`` at index ``i``.
``D<2n>``
    dihedral of order ``2n``; ``r^a s^b`` at ``a + n*b`` with ``s r s = r^-1``.
``Q8``, ``Q16``
    generalized quaternion of order ``4m``; ``x^a y^b`` at ``a + 2m*b`` with
    ``y^2 = x^m`` and ``y x y^-1 = x^-1``.  In ``Q8``: ``1 = x`` is ``i``,
    ``2`` is ``-1``, ``4 = y`` is ``j``, ``5 = x*y`` is ``k``.
``S<n>``, ``A<n>`` (``n <= 5``)
    permutation groups on ``n`` points, BFS-numbered from the generators
    ``(1 2 ... n), (1 2)`` and ``(1 2 3), (1 2 ... n or n-1)`` respectively.
``E<p>^<k>``
    elementary abelian; the vector ``v`` sits at ``sum v_i p^i``.
``X+<p^3>``, ``X-<p^3>`` for ``p in {2, 3}``
    extraspecial groups of order ``p^3``.  ``X+8`` is ``D8`` and ``X-8`` is
    ``Q8``.  ``X+27`` is the Heisenberg group ``(a, b, c)`` at ``a + 3b + 9c``
    with ``(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')``.  ``X-27`` is
    ``C9 : C3``, ``x^a y^b`` at ``a + 9b`` with ``y x y^-1 = x^4``.
"""

from __future__ import annotations

import re
from typing import Callable

from .errors import UnknownCatalogName
from .group import Group, check_order_cap, group_from_permutations


def _from_mul(name: str, n: int, mul: Callable[[int, int], int]) -> Group:
    return Group(name, [[mul(a, b) for b in range(n)] for a in range(n)])


def cyclic(n: int) -> Group:
    return _from_mul(f"C{n}", n, lambda a, b: (a + b) % n)


def dihedral(order: int) -> Group:
    n = order // 2

    def mul(x: int, y: int) -> int:
        a, b = x % n, x // n
        c, d = y % n, y // n
        return (a + (c if b == 0 else -c)) % n + n * ((b + d) % 2)

    return _from_mul(f"D{order}", order, mul)


def quaternion(order: int) -> Group:
    m = order // 4
    n = 2 * m

    def mul(x: int, y: int) -> int:
        a, b = x % n, x // n
        c, d = y % n, y // n
        if b == 0:
            return (a + c) % n + n * d
        if d == 0:
            return (a - c) % n + n
        return (a - c + m) % n

    return _from_mul(f"Q{order}", order, mul)


def elementary_abelian(p: int, k: int) -> Group:
    n = p**k

    def mul(x: int, y: int) -> int:
        out, scale = 0, 1
        for _ in range(k):
            out += ((x % p + y % p) % p) * scale
            x //= p
            y //= p
            scale *= p
        return out

    return _from_mul(f"E{p}^{k}", n, mul)


def heisenberg(p: int) -> Group:
    def mul(x: int, y: int) -> int:
        a, b, c = x % p, (x // p) % p, x // (p * p)
        a2, b2, c2 = y % p, (y // p) % p, y // (p * p)
        return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)

    return _from_mul(f"X+{p**3}", p**3, mul)


def extraspecial_minus_odd(p: int) -> Group:
    q = p * p
    twist = 1 + p

    def mul(x: int, y: int) -> int:
        a, b = x % q, x // q
        c, d = y % q, y // q
        return (a + c * pow(twist, b, q)) % q + q * ((b + d) % p)

    return _from_mul(f"X-{p**3}", p**3, mul)


def symmetric(n: int) -> Group:
    if n <= 1:
        return group_from_permutations([], 1, name=f"S{n}")
    if n == 2:
        return group_from_permutations(["(1 2)"], 2, name="S2")
    cycle = "(" + " ".join(str(i) for i in range(1, n + 1)) + ")"
    return group_from_permutations([cycle, "(1 2)"], n, name=f"S{n}")


def alternating(n: int) -> Group:
    if n <= 2:
        return group_from_permutations([], max(n, 1), name=f"A{n}")
    if n == 3:
        return group_from_permutations(["(1 2 3)"], 3, name="A3")
    # an odd-length cycle on all points, or on all but one when n is even
    m = n if n % 2 else n - 1
    long = "(" + " ".join(str(i) for i in range(n - m + 1, n + 1)) + ")"
    return group_from_permutations(["(1 2 3)", long], n, name=f"A{n}")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


_PATTERNS: list[tuple[re.Pattern[str], Callable[..., Group | None]]] = [
    (re.compile(r"C(\d+)"), lambda n: cyclic(int(n)) if int(n) >= 1 else None),
    (
        re.compile(r"D(\d+)"),
        lambda n: dihedral(int(n)) if int(n) >= 2 and int(n) % 2 == 0 else None,
    ),
    (re.compile(r"Q(8|16)"), lambda n: quaternion(int(n))),
    (re.compile(r"S(\d+)"), lambda n: symmetric(int(n)) if 1 <= int(n) <= 5 else None),
    (re.compile(r"A(\d+)"), lambda n: alternating(int(n)) if 1 <= int(n) <= 5 else None),
    (
        re.compile(r"E(\d+)\^(\d+)"),
        lambda p, k: elementary_abelian(int(p), int(k))
        if _is_prime(int(p)) and int(k) >= 1
        else None,
    ),
    (re.compile(r"X\+(8|27)"), lambda n: dihedral(8) if n == "8" else heisenberg(3)),
    (re.compile(r"X-(8|27)"), lambda n: quaternion(8) if n == "8" else extraspecial_minus_odd(3)),
]

_SIZE_HINT: list[tuple[re.Pattern[str], Callable[..., int]]] = [
    (re.compile(r"C(\d+)"), lambda n: int(n)),
    (re.compile(r"D(\d+)"), lambda n: int(n)),
    (re.compile(r"E(\d+)\^(\d+)"), lambda p, k: int(p) ** int(k)),
]


def catalog_group(name: str, *, cap: int | None = None) -> Group:
    """Build the catalog group called ``name`` (see module docstring)."""
    for pattern, size in _SIZE_HINT:
        m = pattern.fullmatch(name)
        if m:
            check_order_cap(size(*m.groups()), cap, name)
    for pattern, build in _PATTERNS:
        m = pattern.fullmatch(name)
        if m:
            g = build(*m.groups())
            if g is not None:
                g.name = name
                return g
    raise UnknownCatalogName(f"unknown catalog group {name!r}", witness=name)


# The fixed list the verification suite and `catalog list` iterate over.
CATALOG: tuple[str, ...] = (
    *(f"C{n}" for n in range(1, 17)),
    "C32",
    "C64",
    *(f"D{n}" for n in range(4, 34, 2)),
    "D64",
    "Q8",
    "Q16",
    "S3",
    "S4",
    "S5",
    "A4",
    "A5",
    *(f"E2^{k}" for k in range(2, 7)),
    "E3^2",
    "E3^3",
    "E5^2",
    "E7^2",
    "X+27",
    "X-27",
)

_ORDERS: dict[str, int] = {}


def catalog_order(name: str) -> int:
    if name not in _ORDERS:
        _ORDERS[name] = catalog_group(name).order
    return _ORDERS[name]


def catalog_names(max_order: int | None = None) -> list[str]:
    """Catalog names, optionally restricted to order ``<= max_order``."""
    if max_order is None:
        return list(CATALOG)
    return [n for n in CATALOG if catalog_order(n) <= max_order]
