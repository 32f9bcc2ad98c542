"""JSON and DOT formats.

Group files are either ``{"name", "order", "table"}`` or
``{"name", "degree", "generators"}``.  A central-product spec is
``{"A": ref, "B": ref, "U": [...], "V": [...], "phi": [[u, v], ...]}`` where a
group ref is a catalog name, a path to a group file (relative paths resolve
against the spec's directory) or an inline group object.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .catalog import catalog_group
from .central import CentralProductResult, CentralProductSpec
from .errors import InvalidInput, UnknownCatalogName
from .group import Group, group_from_cayley_table, group_from_permutations, subgroup_from_elements
from .lattice import CDLattice


def group_from_json(obj: Any) -> Group:
    if not isinstance(obj, dict):
        raise InvalidInput("group JSON must be an object")
    name = obj.get("name", "G")
    if not isinstance(name, str):
        raise InvalidInput("'name' must be a string")
    if "table" in obj:
        table = obj["table"]
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise InvalidInput("'table' must be a list of lists")
        if not all(isinstance(x, int) and not isinstance(x, bool) for r in table for x in r):
            raise InvalidInput("'table' entries must be integers")
        if "order" in obj and obj["order"] != len(table):
            raise InvalidInput(f"'order' is {obj['order']} but the table has {len(table)} rows")
        return group_from_cayley_table(table, name)
    if "generators" in obj:
        gens, degree = obj["generators"], obj.get("degree")
        if not isinstance(gens, list) or not all(isinstance(x, str) for x in gens):
            raise InvalidInput("'generators' must be a list of cycle-notation strings")
        if not isinstance(degree, int) or isinstance(degree, bool):
            raise InvalidInput("'degree' must be an integer")
        return group_from_permutations(gens, degree, name)
    raise InvalidInput("group JSON needs either 'table' or 'generators'")


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise InvalidInput(f"{path}: {exc.strerror or exc}") from None


def load_group(path: str | Path) -> Group:
    return group_from_json(read_json(path))


def resolve_group(ref: Any, base_dir: Path | None = None) -> Group:
    """A catalog name, a group file path, or an inline group object."""
    if isinstance(ref, dict):
        return group_from_json(ref)
    if not isinstance(ref, str):
        raise InvalidInput(f"cannot interpret group reference {ref!r}")
    try:
        return catalog_group(ref)
    except UnknownCatalogName:
        pass
    path = Path(ref)
    if base_dir is not None and not path.is_absolute():
        path = base_dir / path
    if not path.exists():
        raise UnknownCatalogName(f"{ref!r} is neither a catalog group nor a file", witness=ref)
    return load_group(path)


def group_to_json(g: Group) -> dict:
    return {"name": g.name, "order": g.order, "table": [list(r) for r in g.table]}


def _index_list(obj: Any, key: str) -> list[int]:
    val = obj.get(key)
    if not isinstance(val, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in val):
        raise InvalidInput(f"'{key}' must be a list of element indices")
    return val


def central_spec_from_json(obj: Any, base_dir: Path | None = None) -> CentralProductSpec:
    if not isinstance(obj, dict):
        raise InvalidInput("central-product spec must be a JSON object")
    for key in ("A", "B"):
        if key not in obj:
            raise InvalidInput(f"spec is missing {key!r}")
    a = resolve_group(obj["A"], base_dir)
    b = resolve_group(obj["B"], base_dir)
    u_list = _index_list(obj, "U") if "U" in obj else [0]
    v_list = _index_list(obj, "V") if "V" in obj else [0]
    pairs = obj.get("phi", [[0, 0]])
    if not isinstance(pairs, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p) for p in pairs
    ):
        raise InvalidInput("'phi' must be a list of [u, v] index pairs")
    u = subgroup_from_elements(a, u_list)
    v = subgroup_from_elements(b, v_list)
    phi = {}
    for x, y in pairs:
        if x in phi and phi[x] != y:
            raise InvalidInput(f"'phi' maps {x} twice")
        phi[x] = y
    return CentralProductSpec.from_map(a, b, u, v, phi)


def load_central_spec(path: str | Path) -> CentralProductSpec:
    return central_spec_from_json(read_json(path), Path(path).resolve().parent)


def central_result_to_json(res: CentralProductResult) -> dict:
    out = group_to_json(res.group)
    out["embedA"] = [res.embed_a(x) for x in range(res.embed_a.source.order)]
    out["embedB"] = [res.embed_b(x) for x in range(res.embed_b.source.order)]
    out["amalgam"] = list(res.amalgam.elements)
    return out


def lattice_document(lat: CDLattice) -> dict:
    g = lat.parent
    atoms, coatoms = set(lat.atoms()), set(lat.coatoms())
    nodes = [
        {
            "index": i,
            "elements": list(h.elements),
            "order": h.order,
            "measure": lat.max_measure,
            "height": lat.height[i],
            "depth": lat.depth[i],
            "isAtom": i in atoms,
            "isCoatom": i in coatoms,
        }
        for i, h in enumerate(lat.nodes)
    ]
    return {
        "group": {"name": g.name, "order": g.order},
        "maxMeasure": lat.max_measure,
        "latticeHeight": lat.lattice_height,
        "nodes": nodes,
        "edges": [list(e) for e in lat.edges],
        "top": lat.top,
        "bottom": lat.bottom,
    }


def lattice_dot(lat: CDLattice) -> str:
    """Hasse diagram, bottom-to-top, one ``rank=same`` row per height."""
    name = lat.parent.name.replace("\\", "\\\\").replace('"', '\\"')
    lines = [
        "digraph CD {",
        f'  label="CD({name}), m*={lat.max_measure}";',
        "  rankdir=BT;",
        "  node [shape=box];",
    ]
    for i, h in enumerate(lat.nodes):
        lines.append(f'  n{i} [label="|H|={h.order}, m={lat.max_measure}"];')
    for level in range(lat.lattice_height + 1):
        row = " ".join(f"n{i};" for i, hh in enumerate(lat.height) if hh == level)
        lines.append(f"  {{ rank=same; {row} }}")
    for lo, hi in lat.edges:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
