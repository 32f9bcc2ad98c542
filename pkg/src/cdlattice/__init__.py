"""Chermak-Delgado lattices of finite groups and of their central products."""

from .catalog import catalog_group, catalog_names
from .central import (
    CentralProductResult,
    CentralProductSpec,
    InternalDecomposition,
    central_product,
    internal_decompositions,
    pi_projection,
)
from .group import (
    Group,
    GroupHomomorphism,
    Subgroup,
    center,
    centralizer,
    commutes,
    direct_product,
    group_from_cayley_table,
    group_from_permutations,
    set_product,
    subgroup_closure,
)
from .lattice import CDLattice, cd_lattice, cd_of_subgroup, max_measure, measure
from .subgroups import SubgroupSet, all_subgroups, interval, subgroups_containing

__version__ = "0.1.0"

__all__ = [
    "CDLattice",
    "CentralProductResult",
    "CentralProductSpec",
    "Group",
    "GroupHomomorphism",
    "InternalDecomposition",
    "Subgroup",
    "SubgroupSet",
    "all_subgroups",
    "catalog_group",
    "catalog_names",
    "cd_lattice",
    "cd_of_subgroup",
    "center",
    "central_product",
    "centralizer",
    "commutes",
    "direct_product",
    "group_from_cayley_table",
    "group_from_permutations",
    "internal_decompositions",
    "interval",
    "max_measure",
    "measure",
    "pi_projection",
    "set_product",
    "subgroup_closure",
    "subgroups_containing",
]
