"""Homology, filtered homology and the associated graded module."""

from __future__ import annotations

from dataclasses import dataclass, field

from .assembly import FilteredComplex
from .linalg import Lattice, Subquotient, image_basis, kernel_basis, lattice_sum, subquotient, zero_group


@dataclass(frozen=True)
class GradedGroup:
    """Groups indexed by total degree; missing degrees are zero."""

    groups: dict[int, Subquotient] = field(default_factory=dict)

    def __getitem__(self, n: int) -> Subquotient:
        return self.groups.get(n) or zero_group(0)

    def nonzero(self) -> dict[int, Subquotient]:
        return {n: g for n, g in self.groups.items() if not g.is_zero()}


@dataclass(frozen=True)
class BigradedGroup:
    """Groups indexed by (s, t); missing cells are zero."""

    groups: dict[tuple[int, int], Subquotient] = field(default_factory=dict)

    def __getitem__(self, st: tuple[int, int]) -> Subquotient:
        return self.groups.get(st) or zero_group(0)

    def nonzero(self) -> dict[tuple[int, int], Subquotient]:
        return {st: g for st, g in self.groups.items() if not g.is_zero()}


def cycles(fc: FilteredComplex, n: int, s: int | None = None) -> Lattice:
    """Cycles of C_n, restricted to F_s C_n when ``s`` is given."""
    dim = fc.dim(n)
    idx = list(range(dim)) if s is None else fc.filtration_indices(s, n)
    if not idx:
        return Lattice.zero(dim)
    ker = kernel_basis(fc.d(n).submatrix(range(fc.d(n).nrows), idx))
    vecs = []
    for y in ker.gens:
        v = [0] * dim
        for k, c in zip(idx, y):
            v[k] = c
        vecs.append(v)
    return Lattice.spanned_by(vecs, dim)


def boundaries(fc: FilteredComplex, n: int) -> Lattice:
    """Image of C_{n+1} -> C_n."""
    return image_basis(fc.d(n + 1))


def chain_homology(fc: FilteredComplex) -> GradedGroup:
    return GradedGroup(
        {n: subquotient(cycles(fc, n), boundaries(fc, n)) for n in range(fc.max_degree + 1)}
    )


def _filtered_cycles(fc: FilteredComplex, n: int, s: int) -> Lattice:
    # Cycles of F_s plus all boundaries: the lift of F_s H_n to C_n.
    return lattice_sum(cycles(fc, n, s), boundaries(fc, n))


def filtered_homology(fc: FilteredComplex, s: int) -> GradedGroup:
    """F_s H_n: classes of H_n represented by cycles in F_s C_n."""
    return GradedGroup(
        {
            n: subquotient(_filtered_cycles(fc, n, s), boundaries(fc, n))
            for n in range(fc.max_degree + 1)
        }
    )


def homology_coordinates(h: Subquotient, part: Subquotient) -> list[tuple[int, ...]]:
    """Coordinates in ``h`` of the generators of a subgroup ``part`` of ``h``."""
    return [h.project(rep) for rep in part.reps]


def associated_graded(fc: FilteredComplex) -> BigradedGroup:
    """GH_{s,t} = F_s H_{s+t} / F_{s-1} H_{s+t}.

    By the third isomorphism theorem this equals the quotient of the lifted
    lattices, which keeps torsion exact without passing through H_n.
    """
    out = {}
    for n in range(fc.max_degree + 1):
        lower = _filtered_cycles(fc, n, -1)
        for s in range(n + 1):
            upper = _filtered_cycles(fc, n, s)
            out[(s, n - s)] = subquotient(upper, lower)
            lower = upper
    return BigradedGroup(out)
