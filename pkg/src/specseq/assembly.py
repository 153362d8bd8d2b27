"""Filtered total complexes assembled from multicomplexes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .linalg import IntMatrix, Lattice
from .multicomplex import Multicomplex, MulticomplexError, validate


class FilteredComplexError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    """A basis vector of C_n carrying its filtration degree."""

    name: str
    filtration: int
    bidegree: tuple[int, int] | None = None


@dataclass(frozen=True)
class FilteredComplex:
    """Chain complex of free abelian groups with a filtration on the basis.

    ``degrees[n]`` is the ordered basis of C_n and ``boundary[n]`` the matrix
    of C_n -> C_{n-1}. Filtration degrees must lie in ``[0, n]`` (first
    quadrant), and the boundary may not raise filtration.
    """

    degrees: Mapping[int, tuple[Generator, ...]]
    boundary: Mapping[int, IntMatrix]

    __hash__ = None  # type: ignore[assignment]

    def __post_init__(self):
        top = max((n for n, g in self.degrees.items() if g), default=-1)
        degrees = {n: tuple(self.degrees.get(n, ())) for n in range(top + 1)}
        for n, gens in degrees.items():
            for g in gens:
                if not 0 <= g.filtration <= n:
                    raise FilteredComplexError(
                        f"generator {g.name} in degree {n} has filtration {g.filtration}"
                    )
        dim = lambda n: len(degrees.get(n, ()))  # noqa: E731
        boundary = {}
        for n in range(top + 1):
            m = self.boundary.get(n)
            if m is None:
                m = IntMatrix.zeros(dim(n - 1), dim(n))
            if m.shape != (dim(n - 1), dim(n)):
                raise FilteredComplexError(
                    f"boundary in degree {n} has shape {m.shape}, expected {(dim(n - 1), dim(n))}"
                )
            boundary[n] = m
        for n, m in self.boundary.items():
            if n not in boundary and not m.is_zero():
                raise FilteredComplexError(f"boundary given in empty degree {n}")
        for n in range(1, top + 1):
            if not (boundary[n - 1] @ boundary[n]).is_zero():
                raise FilteredComplexError(f"boundary does not square to zero in degree {n}")
            src, tgt = degrees[n], degrees[n - 1]
            for a in range(len(src)):
                for b in range(len(tgt)):
                    if boundary[n][b, a] and tgt[b].filtration > src[a].filtration:
                        raise FilteredComplexError("boundary raises filtration")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "boundary", boundary)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=-1)

    @property
    def max_filtration(self) -> int:
        return max((g.filtration for gs in self.degrees.values() for g in gs), default=-1)

    def dim(self, n: int) -> int:
        return len(self.degrees.get(n, ()))

    def basis(self, n: int) -> tuple[Generator, ...]:
        return self.degrees.get(n, ())

    def d(self, n: int) -> IntMatrix:
        """Boundary C_n -> C_{n-1}, for any integer n."""
        found = self.boundary.get(n)
        if found is not None:
            return found
        return IntMatrix.zeros(self.dim(n - 1), self.dim(n))

    def filtration_indices(self, s: int, n: int) -> list[int]:
        return [k for k, g in enumerate(self.basis(n)) if g.filtration <= s]


def assemble(mc: Multicomplex) -> FilteredComplex:
    """Total complex: C_n is the sum of X_{p,q} over p+q = n, by decreasing p."""
    if not validate(mc).ok:
        raise FilteredComplexError("relations violated")
    top = mc.max_total_degree
    layout: dict[int, list[tuple[int, int]]] = {}
    offsets: dict[tuple[int, int], int] = {}
    degrees = {}
    for n in range(top + 1):
        layout[n] = [(p, n - p) for p in range(n, -1, -1) if mc.rank(p, n - p)]
        gens = []
        for p, q in layout[n]:
            offsets[(p, q)] = len(gens)
            gens.extend(Generator(name, p, (p, q)) for name in mc.names(p, q))
        degrees[n] = tuple(gens)
    boundary = {}
    for n in range(top + 1):
        rows = [[0] * len(degrees[n]) for _ in degrees.get(n - 1, ())]
        for (i, p, q), block in mc.maps.items():
            if p + q != n:
                continue
            r0, c0 = offsets[(p - i, q + i - 1)], offsets[(p, q)]
            for b in range(block.nrows):
                for a in range(block.ncols):
                    rows[r0 + b][c0 + a] += block[b, a]
        boundary[n] = IntMatrix(rows, len(degrees[n]))
    return FilteredComplex(degrees, boundary)


def component_map(mc: Multicomplex, i: int, n: int) -> IntMatrix:
    """d_i alone as a map C_n -> C_{n-1} of the assembled complex."""
    src = [(p, n - p) for p in range(n, -1, -1) if mc.rank(p, n - p)]
    tgt = [(p, n - 1 - p) for p in range(n - 1, -1, -1) if mc.rank(p, n - 1 - p)]
    col_off, row_off = {}, {}
    k = 0
    for cell in src:
        col_off[cell] = k
        k += mc.rank(*cell)
    ncols = k
    k = 0
    for cell in tgt:
        row_off[cell] = k
        k += mc.rank(*cell)
    rows = [[0] * ncols for _ in range(k)]
    for (p, q) in src:
        tc = (p - i, q + i - 1)
        if tc not in row_off:
            continue
        block = mc.block(i, p, q)
        for b in range(block.nrows):
            for a in range(block.ncols):
                rows[row_off[tc] + b][col_off[(p, q)] + a] = block[b, a]
    return IntMatrix(rows, ncols)


def filtration_lattice(fc: FilteredComplex, s: int, n: int) -> Lattice:
    """F_s C_n as a coordinate sublattice of C_n."""
    return Lattice.coordinate(fc.filtration_indices(s, n), fc.dim(n))


def extract_multicomplex(fc: FilteredComplex) -> Multicomplex:
    """Split the boundary into blocks d_i by filtration drop i."""
    gens: dict[tuple[int, int], list[str]] = {}
    where = {}
    for n, basis in fc.degrees.items():
        for g in basis:
            if g.bidegree is None:
                raise FilteredComplexError(f"generator {g.name} carries no (p,q) label")
            p, q = g.bidegree
            if p + q != n or p != g.filtration:
                raise FilteredComplexError(f"generator {g.name} has inconsistent labels")
            where[(n, g.name)] = (p, q, len(gens.setdefault((p, q), [])))
            gens[(p, q)].append(g.name)
    acc: dict[tuple[int, int, int], list[list[int]]] = {}
    for n in range(1, fc.max_degree + 1):
        m = fc.d(n)
        src, tgt = fc.basis(n), fc.basis(n - 1)
        for a in range(m.ncols):
            p, q, ka = where[(n, src[a].name)]
            for b in range(m.nrows):
                if not m[b, a]:
                    continue
                pt, qt, kb = where[(n - 1, tgt[b].name)]
                i = p - pt
                if i < 0:
                    raise FilteredComplexError("boundary raises filtration")
                block = acc.setdefault(
                    (i, p, q), [[0] * len(gens[(p, q)]) for _ in gens[(pt, qt)]]
                )
                block[kb][ka] = m[b, a]
    maps = {key: IntMatrix(rows, len(gens[key[1:]])) for key, rows in acc.items()}
    try:
        return Multicomplex({c: tuple(v) for c, v in gens.items()}, maps)
    except MulticomplexError as exc:
        raise FilteredComplexError(str(exc)) from exc
