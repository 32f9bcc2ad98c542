from __future__ import annotations

import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cdlattice.catalog import catalog_group, catalog_names
from cdlattice.central import CentralProductSpec, central_product
from cdlattice.group import Subgroup


@functools.lru_cache(maxsize=None)
def group(name: str):
    """Catalog groups are memoized so their internal caches are shared across tests."""
    return catalog_group(name)


def amalgamated(a_name: str, b_name: str, u=(0, 2), v=(0, 2)):
    a, b = group(a_name), group(b_name)
    spec = CentralProductSpec.from_map(
        a, b, Subgroup(a, sum(1 << i for i in u)), Subgroup(b, sum(1 << i for i in v)), dict(zip(u, v))
    )
    return central_product(spec, f"{a_name}*{b_name}")


@functools.lru_cache(maxsize=None)
def product_matrix():
    """The central products the properties are exercised on: ``name -> (G, A, B)``."""
    out = {}
    for name, a, b in [("Q8*Q8", "Q8", "Q8"), ("D8*C4", "D8", "C4"), ("Q8*C4", "Q8", "C4"), ("D8*D8", "D8", "D8")]:
        r = amalgamated(a, b)
        out[name] = (r.group, r.image_a, r.image_b)
    for name, a, b in [("Q8xQ8", "Q8", "Q8"), ("C2xQ8", "C2", "Q8")]:
        r = central_product(CentralProductSpec.direct(group(a), group(b)), name)
        out[name] = (r.group, r.image_a, r.image_b)
    return out


def small_catalog(max_order: int):
    return [group(n) for n in catalog_names(max_order)]


@pytest.fixture
def q8():
    return group("Q8")


@pytest.fixture
def s3():
    return group("S3")


@pytest.fixture
def q8q8():
    return product_matrix()["Q8*Q8"]
