"""Text, JSON and Graphviz renderings of groups and pages."""

from __future__ import annotations

from typing import Any, Sequence

from .assembly import FilteredComplex
from .linalg import InducedMap, Subquotient
from .spectral import Page


def structure_str(group: Subquotient) -> str:
    """Render as ``Z^a ⊕ Z/f1 ⊕ ...``; ``0`` for the trivial group."""
    parts = []
    if group.free_rank == 1:
        parts.append("Z")
    elif group.free_rank > 1:
        parts.append(f"Z^{group.free_rank}")
    parts.extend(f"Z/{f}" for f in group.torsion)
    return " ⊕ ".join(parts) if parts else "0"


def expression(vector: Sequence[int], names: Sequence[str]) -> str:
    """Linear combination of basis names, e.g. ``x_{2,0} - x_{1,1}``."""
    out = ""
    for c, name in zip(vector, names):
        if not c:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)} "
        if not out:
            out = ("-" if c < 0 else "") + mag + name
        else:
            out += (" - " if c < 0 else " + ") + mag + name
    return out or "0"


def names_in_degree(fc: FilteredComplex, n: int) -> list[str]:
    return [g.name for g in fc.basis(n)]


def rep_strings(fc: FilteredComplex, s: int, t: int, group: Subquotient) -> list[str]:
    names = names_in_degree(fc, s + t)
    return [expression(rep, names) for rep in group.reps]


def group_json(fc: FilteredComplex, s: int, t: int, group: Subquotient) -> dict[str, Any]:
    return {
        "s": s,
        "t": t,
        "structure": structure_str(group),
        "free_rank": group.free_rank,
        "torsion": list(group.torsion),
        "reps": rep_strings(fc, s, t, group),
        "rep_vectors": [list(v) for v in group.reps],
    }


def map_json(src: tuple[int, int], dst: tuple[int, int], dmap: InducedMap) -> dict[str, Any]:
    return {"from": list(src), "to": list(dst), "matrix": dmap.matrix.tolist()}


def page_json(p: Page) -> dict[str, Any]:
    fc = p.complex
    return {
        "r": p.r,
        "cells": [group_json(fc, s, t, c) for (s, t), c in sorted(p.nonzero().items())],
        "differentials": [
            map_json(st, p.target(*st), d) for st, d in sorted(p.nonzero_differentials().items())
        ],
    }


def grid(cells: dict[tuple[int, int], Subquotient], width: int, height: int) -> str:
    """Rows t descending, columns s ascending, like the usual page pictures."""
    labels = {st: structure_str(c) for st, c in cells.items()}
    colw = max([len(v) for v in labels.values()] + [3])
    lines = []
    for t in range(height - 1, -1, -1):
        row = [labels.get((s, t), "0").ljust(colw) for s in range(width)]
        lines.append(f"t={t:<2} | " + "  ".join(row).rstrip())
    lines.append("     +-" + "-" * ((colw + 2) * width))
    lines.append("       " + "  ".join(f"s={s}".ljust(colw) for s in range(width)).rstrip())
    return "\n".join(lines)


def page_table(p: Page, label: str | None = None) -> str:
    fc = p.complex
    size = max(fc.max_degree + 1, 1)
    out = [f"E^{p.r}" if label is None else label]
    out.append(grid(p.cells, size, size))
    for (s, t), c in sorted(p.nonzero().items()):
        reps = ", ".join(rep_strings(fc, s, t, c))
        out.append(f"  ({s},{t}): {structure_str(c)}  generated by [{reps}]")
    for (s, t), d in sorted(p.nonzero_differentials().items()):
        out.append(f"  d^{p.r}: ({s},{t}) -> ({s - p.r},{t + p.r - 1})  matrix {d.matrix.tolist()}")
    return "\n".join(out)


def _dot_id(r: int, s: int, t: int) -> str:
    return f"E{r}_{s}_{t}"


def pages_dot(pages: Sequence[Page]) -> str:
    """One cluster per page, a node per nonzero cell and an edge per nonzero d^r."""
    lines = ["digraph spectral_sequence {", "  rankdir=RL;", "  node [shape=box];"]
    for p in pages:
        lines.append(f"  subgraph cluster_E{p.r} {{")
        lines.append(f'    label="E^{p.r}";')
        for (s, t), c in sorted(p.nonzero().items()):
            lines.append(f'    {_dot_id(p.r, s, t)} [label="({s},{t}): {structure_str(c)}"];')
        lines.append("  }")
        for (s, t), d in sorted(p.nonzero_differentials().items()):
            ts, tt = p.target(s, t)
            lines.append(
                f'  {_dot_id(p.r, s, t)} -> {_dot_id(p.r, ts, tt)} [label="d^{p.r} {d.matrix.tolist()}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
