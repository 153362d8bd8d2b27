"""Small conveniences shared by the test modules."""

from specseq.assembly import FilteredComplex


def vec(fc: FilteredComplex, n: int, combo: dict[str, int]) -> tuple[int, ...]:
    """Vector of C_n from a {generator name: coefficient} combination."""
    names = [g.name for g in fc.basis(n)]
    out = [0] * len(names)
    for name, c in combo.items():
        out[names.index(name)] += c
    return tuple(out)


def up_to_sign(a, b) -> bool:
    return tuple(a) == tuple(b) or tuple(a) == tuple(-x for x in b)


def x(p: int, q: int, letter: str = "x") -> str:
    return f"{letter}_{{{p},{q}}}"
