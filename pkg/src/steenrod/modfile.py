"""Module-definition files: a JSON schema for :class:`GradedModule`.

The document is a single JSON object:

.. code-block:: json

    {
      "name": "rp2",
      "top_degree": 2,
      "unit": null,
      "generators": [["t1", 1], ["t2", 2]],
      "sq": {"t1": {"1": ["t2"]}},
      "products": {"t1,t2": [], "t1,t1": ["t2"]}
    }

``sq`` maps a generator id to a map from square index (as a string,
JSON keys being strings) to the list of target ids.  ``products`` keys
are comma-joined id pairs; pairs are stored with the smaller id first.
Absent entries mean zero in both tables.  Generator ids must match
``[A-Za-z][A-Za-z0-9_]*``.  Loading checks structure only (ids exist,
shapes are right); semantic checks belong to ``verify_axioms``, so a
deliberately wrong action table still loads and can be reported on.

Serialization is canonical: sorted keys, sorted lists, two-space
indent.  load(save(M)) reproduces the module exactly.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .modules import GradedModule

_ID_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


def module_to_dict(module: GradedModule) -> dict:
    sq: dict[str, dict[str, list[str]]] = {}
    for (gid, i), targets in sorted(module.sq.items()):
        sq.setdefault(gid, {})[str(i)] = sorted(targets)
    products = {
        f"{g},{h}": sorted(targets)
        for (g, h), targets in sorted(module.products.items())
    }
    return {
        "name": module.name,
        "top_degree": module.top_degree,
        "unit": module.unit,
        "generators": [[gid, d] for gid, d in module.generators],
        "sq": sq,
        "products": products,
    }


def module_from_dict(doc: dict) -> GradedModule:
    if not isinstance(doc, dict):
        raise ValueError("module document must be a JSON object")
    for key in ("name", "top_degree", "generators", "sq", "products"):
        if key not in doc:
            raise ValueError(f"module document is missing the {key!r} field")

    name = doc["name"]
    top_degree = doc["top_degree"]
    if not isinstance(name, str) or not isinstance(top_degree, int):
        raise ValueError("'name' must be a string and 'top_degree' an int")

    generators: list[tuple[str, int]] = []
    ids: set[str] = set()
    for entry in doc["generators"]:
        gid, d = entry
        if not isinstance(gid, str) or not _ID_RE.match(gid):
            raise ValueError(f"bad generator id {gid!r}")
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"generator {gid!r} needs a positive integer degree")
        if gid in ids:
            raise ValueError(f"duplicate generator id {gid!r}")
        ids.add(gid)
        generators.append((gid, d))

    unit = doc.get("unit")
    if unit is not None and (not isinstance(unit, str) or not _ID_RE.match(unit)):
        raise ValueError(f"bad unit id {unit!r}")

    def known(gid: str, context: str) -> str:
        if gid not in ids:
            raise ValueError(f"{context} refers to unknown generator {gid!r}")
        return gid

    sq: dict[tuple[str, int], frozenset[str]] = {}
    for gid, table in doc["sq"].items():
        known(gid, "sq table")
        for index, targets in table.items():
            i = int(index)
            if i < 1:
                raise ValueError(f"sq index {index!r} for {gid!r} must be >= 1")
            value = frozenset(known(t, f"Sq{i}({gid})") for t in targets)
            if value:
                sq[(gid, i)] = value

    products: dict[tuple[str, str], frozenset[str]] = {}
    for key, targets in doc["products"].items():
        parts = key.split(",")
        if len(parts) != 2:
            raise ValueError(f"product key {key!r} must be 'id,id'")
        g, h = (known(p, "product table") for p in parts)
        pair = (g, h) if g <= h else (h, g)
        value = frozenset(known(t, f"{g} cup {h}") for t in targets)
        if value:
            products[pair] = value

    return GradedModule(name, tuple(generators), sq, products, top_degree, unit)


def dumps(module: GradedModule) -> str:
    return json.dumps(module_to_dict(module), sort_keys=True, indent=2) + "\n"


def loads(text: str) -> GradedModule:
    return module_from_dict(json.loads(text))


def save(module: GradedModule, path: str | Path) -> None:
    Path(path).write_text(dumps(module), encoding="utf-8")


def load(path: str | Path) -> GradedModule:
    return loads(Path(path).read_text(encoding="utf-8"))
