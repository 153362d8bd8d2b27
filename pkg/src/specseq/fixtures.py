"""Built-in multicomplexes where the page differentials and the structure maps part ways."""

from __future__ import annotations

from typing import Callable

from .multicomplex import Multicomplex


def _x(p: int, q: int, letter: str = "x") -> str:
    return f"{letter}_{{{p},{q}}}"


def example1() -> Multicomplex:
    """Double complex whose d^2 is nonzero although d_2 = 0."""
    return example2(2)


def example2(r: int, letter: str = "x") -> Multicomplex:
    """Double complex on the diagonals p+q = r and r-1 with d^r surjective.

    ``r = 2`` is the three-cell staircase of ``example1``.
    """
    if r < 2:
        raise ValueError("example2 needs r >= 2")
    gens = {(p, r - p): [_x(p, r - p, letter)] for p in range(1, r + 1)}
    gens.update({(p, r - 1 - p): [_x(p, r - 1 - p, letter)] for p in range(r)})
    entries = []
    for p in range(1, r + 1):
        q = r - p
        if q >= 1:
            entries.append((0, _x(p, q, letter), _x(p, q - 1, letter), 1))
        entries.append((1, _x(p, q, letter), _x(p - 1, q, letter), 1))
    return Multicomplex.from_entries(gens, entries)


def example3() -> Multicomplex:
    """Adds d_2(x_{2,0}) = x_{0,1}; the sequence degenerates at E^2."""
    return example3_general(2)


def example3_general(r: int, letter: str = "x") -> Multicomplex:
    """``example2(r)`` plus d_r(x_{r,0}) = (-1)^r x_{0,r-1}."""
    base = example2(r, letter)
    entries = base.entries() + [(r, _x(r, 0, letter), _x(0, r - 1, letter), (-1) ** r)]
    return Multicomplex.from_entries(base.generators, entries)


def example4() -> Multicomplex:
    """d^2 is onto while the map induced by d_2 misses [x_{0,1}]."""
    gens = {
        (0, 1): ["x_{0,1}", "x̃_{0,1}"],
        (1, 1): ["x_{1,1}"],
        (1, 0): ["x_{1,0}"],
        (2, 0): ["x_{2,0}", "x̃_{2,0}"],
    }
    entries = [
        (0, "x_{1,1}", "x_{1,0}", 1),
        (1, "x_{1,1}", "x_{0,1}", 1),
        (1, "x_{2,0}", "x_{1,0}", 1),
        (2, "x̃_{2,0}", "x̃_{0,1}", 1),
    ]
    return Multicomplex.from_entries(gens, entries)


def direct_sum(*parts: Multicomplex) -> Multicomplex:
    """Disjoint union of generators; names must not collide."""
    gens: dict[tuple[int, int], list[str]] = {}
    entries = []
    for mc in parts:
        for cell, names in mc.generators.items():
            gens.setdefault(cell, []).extend(names)
        entries.extend(mc.entries())
    return Multicomplex.from_entries(gens, entries)


def combined() -> Multicomplex:
    """example1 next to example2(3): d^r differs from d_r at r = 2 and r = 3."""
    return direct_sum(example1(), example2(3, letter="y"))


EXAMPLE2_RANGE = range(2, 13)

FIXTURES: dict[str, tuple[Callable[..., Multicomplex], bool]] = {
    "example1": (example1, False),
    "example2": (example2, True),
    "example3": (example3, False),
    "example3-general": (example3_general, True),
    "example4": (example4, False),
    "combined": (combined, False),
}


def fixture_names() -> list[str]:
    return list(FIXTURES)


def get_fixture(name: str, r: int | None = None) -> Multicomplex:
    """Look up a fixture; parametrized ones take ``r`` in [2, 12] (default 3)."""
    try:
        build, parametrized = FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None
    if not parametrized:
        if r is not None:
            raise ValueError(f"fixture {name!r} takes no parameter")
        return build()
    r = 3 if r is None else r
    if r not in EXAMPLE2_RANGE:
        raise ValueError(f"parameter r must lie in [2, 12], got {r}")
    return build(r)


def all_fixtures() -> dict[str, Multicomplex]:
    """Every fixture, with the parametrized families expanded over r."""
    out = {}
    for name, (build, parametrized) in FIXTURES.items():
        if parametrized:
            for r in EXAMPLE2_RANGE:
                out[f"{name}[r={r}]"] = build(r)
        else:
            out[name] = build()
    return out
