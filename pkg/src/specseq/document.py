"""JSON serialization of multicomplexes.

Schema (format_version "1")::

    {"format_version": "1",
     "modules": {"p,q": [name, ...], ...},
     "maps": {"i": [{"from": name, "to": name, "coef": int}, ...], ...}}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .multicomplex import Multicomplex, MulticomplexError

FORMAT_VERSION = "1"


class DocumentError(ValueError):
    pass


def to_document(mc: Multicomplex) -> dict[str, Any]:
    seen = set()
    for names in mc.generators.values():
        for name in names:
            if name in seen:
                raise DocumentError(f"generator name {name!r} is used in two cells")
            seen.add(name)
    modules = {f"{p},{q}": list(names) for (p, q), names in mc.generators.items()}
    maps: dict[str, list[dict[str, Any]]] = {}
    for i, src, tgt, coef in mc.entries():
        maps.setdefault(str(i), []).append({"from": src, "to": tgt, "coef": coef})
    return {"format_version": FORMAT_VERSION, "modules": modules, "maps": maps}


def dumps(mc: Multicomplex) -> str:
    return json.dumps(to_document(mc), indent=2, ensure_ascii=False) + "\n"


def _cell_key(key: str) -> tuple[int, int]:
    parts = key.split(",")
    try:
        p, q = (int(x.strip()) for x in parts)
    except ValueError:
        raise DocumentError(f"modules: key {key!r} is not of the form 'p,q'") from None
    if p < 0 or q < 0:
        raise DocumentError(f"modules: cell {key!r} lies outside the first quadrant")
    return p, q


def from_document(doc: Any) -> Multicomplex:
    if not isinstance(doc, dict):
        raise DocumentError("top level must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentError(f"format_version: expected {FORMAT_VERSION!r}, got {version!r}")
    unknown = set(doc) - {"format_version", "modules", "maps"}
    if unknown:
        raise DocumentError(f"unknown top-level field(s): {', '.join(sorted(unknown))}")
    modules = doc.get("modules", {})
    maps = doc.get("maps", {})
    if not isinstance(modules, dict):
        raise DocumentError("modules: must be an object")
    if not isinstance(maps, dict):
        raise DocumentError("maps: must be an object")

    gens: dict[tuple[int, int], list[str]] = {}
    for key, names in modules.items():
        cell = _cell_key(key)
        if cell in gens:
            raise DocumentError(f"modules: cell {key!r} listed twice")
        if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
            raise DocumentError(f"modules[{key!r}]: must be a list of names")
        gens[cell] = names

    entries = []
    seen = set()
    for key, items in maps.items():
        try:
            i = int(key)
        except ValueError:
            raise DocumentError(f"maps: key {key!r} is not an integer") from None
        if i < 0:
            raise DocumentError(f"maps: negative map index {i}")
        if not isinstance(items, list):
            raise DocumentError(f"maps[{key!r}]: must be a list")
        for k, item in enumerate(items):
            where = f"maps[{key!r}][{k}]"
            if not isinstance(item, dict) or set(item) != {"from", "to", "coef"}:
                raise DocumentError(f"{where}: expected fields from, to, coef")
            src, tgt, coef = item["from"], item["to"], item["coef"]
            if not isinstance(src, str) or not isinstance(tgt, str):
                raise DocumentError(f"{where}: from/to must be strings")
            if isinstance(coef, bool) or not isinstance(coef, int):
                raise DocumentError(f"{where}.coef: must be an integer")
            if coef == 0:
                raise DocumentError(f"{where}.coef: must be nonzero")
            if (i, src, tgt) in seen:
                raise DocumentError(f"{where}: duplicate entry {src} -> {tgt}")
            seen.add((i, src, tgt))
            entries.append((i, src, tgt, coef))
    try:
        return Multicomplex.from_entries(gens, entries)
    except MulticomplexError as exc:
        raise DocumentError(str(exc)) from exc


def loads(text: str) -> Multicomplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def parse(path: str | Path) -> Multicomplex:
    """Read a multicomplex document from ``path``."""
    return loads(Path(path).read_text(encoding="utf-8"))
