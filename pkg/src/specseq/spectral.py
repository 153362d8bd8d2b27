"""Pages, differentials and convergence of the spectral sequence of a filtration.

Every page is computed straight from the closed-form quotient
Z^r_{s,t} / (Z^{r-1}_{s-1,t+1} + d Z^{r-1}_{s+r-1,t-r+2}); the homology of
the previous page is only used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .assembly import FilteredComplex, assemble, component_map
from .homology import BigradedGroup, associated_graded, cycles
from .linalg import (
    InducedMap,
    IntMatrix,
    Lattice,
    Subquotient,
    homology_of_maps,
    induce,
    image_basis,
    kernel_basis,
    lattice_sum,
    preimage,
    subquotient,
    zero_group,
)
from .multicomplex import Multicomplex, validate

Cell = tuple[int, int]


class SpectralSequenceError(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""


def z_lattice(fc: FilteredComplex, r: int, s: int, t: int) -> Lattice:
    """Z^r_{s,t}: chains of F_s C_{s+t} whose boundary lies in F_{s-r}.

    For r <= 0 the condition is automatic and this is F_s C_{s+t}.
    """
    n = s + t
    dim = fc.dim(n)
    src = fc.filtration_indices(s, n)
    if not src:
        return Lattice.zero(dim)
    if r <= 0:
        return Lattice.coordinate(src, dim)
    d = fc.d(n)
    high = [k for k, g in enumerate(fc.basis(n - 1)) if g.filtration > s - r]
    ker = kernel_basis(d.submatrix(high, src))
    vecs = []
    for y in ker.gens:
        v = [0] * dim
        for k, c in zip(src, y):
            v[k] = c
        vecs.append(v)
    return Lattice.spanned_by(vecs, dim)


def z_infinity(fc: FilteredComplex, s: int, t: int) -> Lattice:
    """Z^inf_{s,t}: cycles lying in F_s C_{s+t}."""
    if s < 0:
        return Lattice.zero(fc.dim(s + t))
    return cycles(fc, s + t, s)


def _boundary_image(fc: FilteredComplex, lattice: Lattice, n: int) -> Lattice:
    # d applied to a sublattice of C_n
    return lattice.image(fc.d(n))


def _cell(fc: FilteredComplex, r: int, s: int, t: int) -> Subquotient:
    n = s + t
    num = z_lattice(fc, r, s, t)
    den = lattice_sum(
        z_lattice(fc, r - 1, s - 1, t + 1),
        _boundary_image(fc, z_lattice(fc, r - 1, s + r - 1, t - r + 2), n + 1),
    )
    if num.ambient_rank != den.ambient_rank:  # pragma: no cover
        raise SpectralSequenceError(f"ambient mismatch at ({s},{t})")
    return subquotient(num, den)


def cells_of(fc: FilteredComplex) -> list[Cell]:
    """All (s, t) with s, t >= 0 and s + t within the complex, row-major."""
    return [(s, n - s) for n in range(fc.max_degree + 1) for s in range(n + 1)]


@dataclass(frozen=True)
class Page:
    """The page E^r with its differentials d^r: E^r_{s,t} -> E^r_{s-r,t+r-1}."""

    complex: FilteredComplex = field(repr=False)
    r: int
    cells: dict[Cell, Subquotient]
    differentials: dict[Cell, InducedMap]

    def cell(self, s: int, t: int) -> Subquotient:
        found = self.cells.get((s, t))
        if found is not None:
            return found
        return zero_group(self.complex.dim(s + t))

    def structure(self) -> dict[Cell, tuple[int, tuple[int, ...]]]:
        return {st: c.structure for st, c in self.cells.items()}

    def nonzero(self) -> dict[Cell, Subquotient]:
        return {st: c for st, c in self.cells.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.nonzero()

    def target(self, s: int, t: int) -> Cell:
        return (s - self.r, t + self.r - 1)

    def differential(self, s: int, t: int) -> InducedMap:
        return self.differentials[(s, t)]

    def nonzero_differentials(self) -> dict[Cell, InducedMap]:
        return {st: d for st, d in self.differentials.items() if not d.is_zero()}


def page(fc: FilteredComplex, r: int) -> Page:
    """Compute E^r and every d^r.

    r = 0 gives F_s/F_{s-1} with d^0 induced by the boundary.
    """
    if r < 0:
        raise ValueError("page index must be >= 0")
    cells = {(s, t): _cell(fc, r, s, t) for s, t in cells_of(fc)}
    diffs = {}
    for (s, t), dom in cells.items():
        tgt = (s - r, t + r - 1)
        cod = cells.get(tgt)
        if cod is None:
            cod = _cell(fc, r, *tgt)
        dr = induce(fc.d(s + t), dom, cod)
        if not dr.well_defined:
            raise SpectralSequenceError(
                f"d^{r} not well defined at ({s},{t}): {dr.reason}, image {dr.offending}"
            )
        diffs[(s, t)] = dr
    return Page(fc, r, cells, diffs)


def differential_squares_zero(p: Page) -> bool:
    """Check d^r d^r = 0 in quotient coordinates through every cell."""
    for (s, t), first in p.differentials.items():
        mid = p.target(s, t)
        second = p.differentials.get(mid)
        if second is None:
            continue
        comp = second.matrix @ first.matrix
        for row, mod in zip(comp.rows, second.codomain.moduli):
            if any((x % mod if mod else x) for x in row):
                return False
    return True


def page_homology(p: Page, s: int, t: int) -> Subquotient:
    """ker d^r / im d^r at (s, t), computed from the page matrices alone."""
    here = p.cell(s, t)
    out = p.differentials.get((s, t))
    src = (s + p.r, t - p.r + 1)
    incoming = p.differentials.get(src)
    if out is None:
        outgoing_m = IntMatrix.zeros(0, here.ngens)
        target_moduli: tuple[int, ...] = ()
    else:
        outgoing_m = out.matrix
        target_moduli = out.codomain.moduli
    if incoming is None:
        incoming_m = IntMatrix.zeros(here.ngens, 0)
    else:
        incoming_m = incoming.matrix
    return homology_of_maps(incoming_m, outgoing_m, here.moduli, target_moduli)


def turn_page(p: Page) -> Page:
    """Compute the next page and check it against the homology of ``p``."""
    nxt = page(p.complex, p.r + 1)
    for (s, t), c in nxt.cells.items():
        h = page_homology(p, s, t)
        if h.structure != c.structure:
            raise SpectralSequenceError(
                f"turning mismatch at ({s},{t}): H(E^{p.r}) = {h.structure}, E^{p.r + 1} = {c.structure}"
            )
    return nxt


def stabilization_bound(fc: FilteredComplex | None, s: int, t: int) -> int:
    """Smallest r from which d^r into and out of (s, t) vanish in the first quadrant."""
    return max(s + 1, t + 2)


def global_stabilization(fc: FilteredComplex) -> int:
    return max((stabilization_bound(fc, s, t) for s, t in cells_of(fc)), default=1)


def _e_infinity_direct(fc: FilteredComplex, s: int, t: int) -> Subquotient:
    n = s + t
    num = z_infinity(fc, s, t)
    lower = z_infinity(fc, s - 1, t + 1)
    # boundaries landing inside F_s C_n
    d = fc.d(n + 1)
    high = [k for k, g in enumerate(fc.basis(n)) if g.filtration > s]
    pre = kernel_basis(d.submatrix(high, range(d.ncols)))
    bounded = pre.image(d)
    return subquotient(num, lattice_sum(lower, bounded))


def e_infinity(fc: FilteredComplex) -> Page:
    """E^inf, computed as the stable page cell by cell and by the direct formula."""
    cells = {}
    for s, t in cells_of(fc):
        stable = _cell(fc, stabilization_bound(fc, s, t), s, t)
        direct = _e_infinity_direct(fc, s, t)
        if stable.structure != direct.structure:
            raise SpectralSequenceError(
                f"E-infinity mismatch at ({s},{t}): {stable.structure} vs {direct.structure}"
            )
        cells[(s, t)] = direct
    # Indexed by the global stabilization page, where every d^r has left the quadrant.
    big_r = global_stabilization(fc)
    diffs = {}
    for (s, t), c in cells.items():
        cod = zero_group(fc.dim(s + t - 1))
        diffs[(s, t)] = InducedMap(c, cod, IntMatrix.zeros(0, c.ngens), True)
    return Page(fc, big_r, cells, diffs)


@dataclass(frozen=True)
class ConvergenceReport:
    e_infinity: Page
    graded: BigradedGroup
    mismatches: tuple[tuple[Cell, tuple, tuple], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_convergence(fc: FilteredComplex) -> ConvergenceReport:
    """Compare E^inf with the associated graded of homology cell by cell."""
    einf = e_infinity(fc)
    gh = associated_graded(fc)
    bad = []
    for st in cells_of(fc):
        a, b = einf.cell(*st).structure, gh[st].structure
        if a != b:
            bad.append((st, a, b))
    return ConvergenceReport(einf, gh, tuple(bad))


def column_homology(mc: Multicomplex, s: int, t: int) -> Subquotient:
    """H_t of the column complex (X_{s,*}, d_0)."""
    out_map = mc.block(0, s, t)
    in_map = mc.block(0, s, t + 1)
    return subquotient(kernel_basis(out_map), image_basis(in_map))


@dataclass(frozen=True)
class ColumnReport:
    mismatches: tuple[tuple[Cell, tuple, tuple], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_e1_columns(mc: Multicomplex) -> ColumnReport:
    """Check E^1_{s,t} against H_{s+t}(X_{s,*}, d_0) for every cell."""
    if not validate(mc).ok:
        raise ValueError("relations violated")
    fc = assemble(mc)
    e1 = page(fc, 1)
    bad = []
    for s, t in cells_of(fc):
        a, b = e1.cell(s, t).structure, column_homology(mc, s, t).structure
        if a != b:
            bad.append(((s, t), a, b))
    return ColumnReport(tuple(bad))


@dataclass(frozen=True)
class ComparisonReport:
    """d^r against the partial map induced by the structure map d_r at (s, t).

    ``admissible`` holds the numerator elements x with d_i(x) = 0 for i < r;
    ``induced_domain`` is its image in E^r_{s,t}; ``induced_image`` the
    subgroup of the target cell generated by the classes [d_r(x)];
    ``dr_image`` the image of the page differential.
    """

    r: int
    s: int
    t: int
    cell: Subquotient
    target: Subquotient
    differential: InducedMap
    admissible: Lattice
    induced_domain: Subquotient
    induced_image: Subquotient
    dr_image: Subquotient
    induced_defined: bool
    agrees: bool

    @property
    def dr_is_zero(self) -> bool:
        return self.dr_image.is_zero()

    @property
    def domain_is_full(self) -> bool:
        return self.induced_domain.numerator == self.cell.numerator


def _compare(mc: Multicomplex, fc: FilteredComplex, r: int, s: int, t: int, dom: Subquotient, cod: Subquotient, dr: InducedMap) -> ComparisonReport:
    n = s + t
    admissible = dom.numerator
    for i in range(r):
        admissible = preimage(component_map(mc, i, n), Lattice.zero(fc.dim(n - 1)), within=admissible)
    d_r = component_map(mc, r, n)
    # restrict to x whose d_r(x) has a class in the target cell
    usable = preimage(d_r, cod.numerator, within=admissible)
    defined = usable == admissible
    domain_num = lattice_sum(admissible, dom.denominator)
    induced_domain = subquotient(domain_num, dom.denominator)
    induced_image = subquotient(lattice_sum(usable.image(d_r), cod.denominator), cod.denominator)
    dr_image = subquotient(lattice_sum(dom.numerator.image(fc.d(n)), cod.denominator), cod.denominator)
    d = fc.d(n)
    agrees = (
        defined
        and domain_num == dom.numerator
        and all(cod.project(d.apply(a)) == cod.project(d_r.apply(a)) for a in admissible.gens)
    )
    return ComparisonReport(
        r, s, t, dom, cod, dr, admissible, induced_domain, induced_image, dr_image, defined, agrees
    )


def induced_map_on_page(mc: Multicomplex, r: int, s: int, t: int) -> ComparisonReport:
    """Compare d^r with the map induced by d_r at the cell (s, t)."""
    if r < 1:
        raise ValueError("comparison needs r >= 1")
    if not validate(mc).ok:
        raise ValueError("relations violated")
    fc = assemble(mc)
    dom = _cell(fc, r, s, t)
    cod = _cell(fc, r, s - r, t + r - 1)
    dr = induce(fc.d(s + t), dom, cod)
    if not dr.well_defined:
        raise SpectralSequenceError(f"d^{r} not well defined at ({s},{t})")
    return _compare(mc, fc, r, s, t, dom, cod, dr)


def compare_page(mc: Multicomplex, r: int, fc: FilteredComplex | None = None, p: Page | None = None) -> dict[Cell, ComparisonReport]:
    """Comparison reports for every cell of page r."""
    fc = assemble(mc) if fc is None else fc
    p = page(fc, r) if p is None else p
    out = {}
    for (s, t), dom in p.cells.items():
        dr = p.differentials[(s, t)]
        out[(s, t)] = _compare(mc, fc, r, s, t, dom, dr.codomain, dr)
    return out
