"""Exact linear algebra over the integers.

Everything here works on Python ints, so entries never overflow. Lattices are
subgroups of Z^n kept in a canonical echelon (Hermite) form, which makes
lattice equality a plain tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Vector = tuple[int, ...]


class LatticeError(ValueError):
    """Raised on dimension mismatches and violated subgroup preconditions."""


class IntMatrix:
    """Immutable dense integer matrix; zero rows or columns are allowed."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence[int]] = (), ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise ValueError(f"ragged row of length {len(row)}, expected {ncols}")
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> "IntMatrix":
        for c in columns:
            if len(c) != nrows:
                raise ValueError(f"column of length {len(c)}, expected {nrows}")
        return cls([[c[i] for c in columns] for i in range(nrows)], len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self._rows

    @property
    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._rows)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.columns, self.nrows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self._rows]}, ncols={self.ncols})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, c)) for c in cols] for row in self._rows],
            other.ncols,
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return IntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
            self.ncols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self._rows], self.ncols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def apply(self, v: Sequence[int]) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for matrix with {self.ncols} columns")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self._rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix([[self._rows[i][j] for j in cols] for i in rows], len(cols))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows:
            raise ValueError("hstack needs equal row counts")
        return IntMatrix([a + b for a, b in zip(self._rows, other._rows)], self.ncols + other.ncols)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self._rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


# --------------------------------------------------------------------------
# Normal forms


def _echelon(rows: list[list[int]], width: int, transform: list[list[int]] | None = None) -> int:
    """Row-reduce ``rows`` in place to Hermite form; returns the rank.

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``.
    The nonzero rows come first. Every row operation is mirrored on
    ``transform`` when given, so ``transform`` ends up as U with U @ A = H.
    """

    def addmul(i: int, j: int, q: int) -> None:
        # row_i -= q * row_j
        ri, rj = rows[i], rows[j]
        for k in range(width):
            if rj[k]:
                ri[k] -= q * rj[k]
        if transform is not None:
            ti, tj = transform[i], transform[j]
            for k in range(len(tj)):
                if tj[k]:
                    ti[k] -= q * tj[k]

    def swap(i: int, j: int) -> None:
        rows[i], rows[j] = rows[j], rows[i]
        if transform is not None:
            transform[i], transform[j] = transform[j], transform[i]

    pr = 0
    nrows = len(rows)
    for col in range(width):
        if pr == nrows:
            break
        while True:
            nz = [i for i in range(pr, nrows) if rows[i][col] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(rows[i][col]))
            swap(pr, best)
            clean = True
            for i in range(pr + 1, nrows):
                if rows[i][col]:
                    addmul(i, pr, rows[i][col] // rows[pr][col])
                    if rows[i][col]:
                        clean = False
            if clean:
                break
        if rows[pr][col] == 0:
            continue
        if rows[pr][col] < 0:
            rows[pr] = [-x for x in rows[pr]]
            if transform is not None:
                transform[pr] = [-x for x in transform[pr]]
        for i in range(pr):
            if rows[i][col]:
                addmul(i, pr, rows[i][col] // rows[pr][col])
        pr += 1
    return pr


def _hnf_vectors(vectors: Iterable[Sequence[int]], n: int) -> tuple[Vector, ...]:
    rows = [list(v) for v in vectors]
    rank = _echelon(rows, n)
    return tuple(tuple(r) for r in rows[:rank])


def hnf(m: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form of the column lattice of ``m``.

    Zero columns are dropped, so the result has independent columns.
    """
    return IntMatrix.from_columns(_hnf_vectors(m.columns, m.nrows), m.nrows)


def _snf_full(m: IntMatrix):
    """Smith form with transforms and their inverses.

    Returns ``(u, d, v, u_inv, v_inv)`` as lists of lists with d = u m v.
    """
    r, c = m.shape
    a = m.tolist()
    u = IntMatrix.identity(r).tolist()
    ui = IntMatrix.identity(r).tolist()
    v = IntMatrix.identity(c).tolist()
    vi = IntMatrix.identity(c).tolist()

    def row_add(i: int, j: int, q: int) -> None:
        # R_i += q R_j
        for k in range(c):
            a[i][k] += q * a[j][k]
        for k in range(r):
            u[i][k] += q * u[j][k]
            ui[k][j] -= q * ui[k][i]

    def col_add(i: int, j: int, q: int) -> None:
        # C_i += q C_j
        for k in range(r):
            a[k][i] += q * a[k][j]
        for k in range(c):
            v[k][i] += q * v[k][j]
            vi[j][k] -= q * vi[i][k]

    def row_swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for row in ui:
            row[i], row[j] = row[j], row[i]

    def col_swap(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vi[i], vi[j] = vi[j], vi[i]

    for t in range(min(r, c)):
        entries = [(abs(a[i][j]), i, j) for i in range(t, r) for j in range(t, c) if a[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        row_swap(t, i0)
        col_swap(t, j0)
        while True:
            for i in range(t + 1, r):
                if a[i][t]:
                    row_add(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, c):
                if a[t][j]:
                    col_add(j, t, -(a[t][j] // a[t][t]))
            rest = [(abs(a[i][t]), i, t) for i in range(t + 1, r) if a[i][t]]
            rest += [(abs(a[t][j]), t, j) for j in range(t + 1, c) if a[t][j]]
            if rest:
                _, i0, j0 = min(rest)
                row_swap(t, i0)
                col_swap(t, j0)
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            row_add(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
            for row in ui:
                row[t] = -row[t]
    return u, a, v, ui, vi


def snf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(u, d, v)`` with ``d == u @ m @ v``.

    ``u`` and ``v`` are unimodular and the diagonal of ``d`` is a nonnegative
    divisibility chain.
    """
    u, d, v, _, _ = _snf_full(m)
    r, c = m.shape
    return IntMatrix(u, r), IntMatrix(d, c), IntMatrix(v, c)


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    _, d, _, _, _ = _snf_full(m)
    return tuple(d[i][i] for i in range(min(m.shape)) if d[i][i])


# --------------------------------------------------------------------------
# Lattices


@dataclass(frozen=True)
class Lattice:
    """A subgroup of Z^ambient_rank.

    ``gens`` is the canonical echelon basis: pivot positions strictly
    increase, pivots are positive and entries of earlier generators in a later
    pivot position are reduced into ``[0, pivot)``.
    """

    ambient_rank: int
    gens: tuple[Vector, ...] = ()

    @classmethod
    def spanned_by(cls, vectors: Iterable[Sequence[int]], ambient_rank: int) -> "Lattice":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient_rank:
                raise LatticeError(f"vector of length {len(v)} in Z^{ambient_rank}")
        return cls(ambient_rank, _hnf_vectors(vectors, ambient_rank))

    @classmethod
    def zero(cls, ambient_rank: int) -> "Lattice":
        return cls(ambient_rank, ())

    @classmethod
    def full(cls, ambient_rank: int) -> "Lattice":
        return cls(ambient_rank, IntMatrix.identity(ambient_rank).rows)

    @classmethod
    def coordinate(cls, indices: Iterable[int], ambient_rank: int) -> "Lattice":
        """Sublattice spanned by the given standard basis vectors."""
        idx = sorted(set(indices))
        return cls(ambient_rank, tuple(tuple(int(k == i) for k in range(ambient_rank)) for i in idx))

    @property
    def rank(self) -> int:
        return len(self.gens)

    @property
    def basis(self) -> IntMatrix:
        return IntMatrix.from_columns(self.gens, self.ambient_rank)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(g) if x) for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def coords(self, v: Sequence[int]) -> tuple[int, ...] | None:
        """Coordinates of ``v`` in ``gens``, or None when ``v`` is not a member."""
        if len(v) != self.ambient_rank:
            raise LatticeError(f"vector of length {len(v)} in Z^{self.ambient_rank}")
        w = list(v)
        out = []
        for g, p in zip(self.gens, self.pivots):
            q, rem = divmod(w[p], g[p])
            if rem:
                return None
            if q:
                for k in range(p, len(w)):
                    w[k] -= q * g[k]
            out.append(q)
        if any(w):
            return None
        return tuple(out)

    def __contains__(self, v: Sequence[int]) -> bool:
        return self.coords(v) is not None

    def contains_lattice(self, other: "Lattice") -> bool:
        _check_rank(self, other)
        return all(g in self for g in other.gens)

    def reduce(self, v: Sequence[int]) -> Vector:
        """Canonical representative of the coset ``v + self``."""
        w = list(v)
        for g, p in zip(self.gens, self.pivots):
            q = w[p] // g[p]
            if q:
                for k in range(p, len(w)):
                    w[k] -= q * g[k]
        return tuple(w)

    def image(self, f: IntMatrix) -> "Lattice":
        """The lattice f(self)."""
        if f.ncols != self.ambient_rank:
            raise LatticeError(f"map with {f.ncols} columns applied to Z^{self.ambient_rank}")
        return Lattice.spanned_by((f.apply(g) for g in self.gens), f.nrows)


def _check_rank(a: Lattice, b: Lattice) -> None:
    if a.ambient_rank != b.ambient_rank:
        raise LatticeError(f"ambient rank mismatch: {a.ambient_rank} vs {b.ambient_rank}")


def contains(a: Lattice, v: Sequence[int]) -> bool:
    return v in a


def coords(a: Lattice, v: Sequence[int]) -> tuple[int, ...] | None:
    return a.coords(v)


def kernel_basis(m: IntMatrix) -> Lattice:
    """All integer x with m x = 0; the result is saturated."""
    rows = [list(c) for c in m.columns]
    transform = IntMatrix.identity(m.ncols).tolist()
    rank = _echelon(rows, m.nrows, transform)
    return Lattice.spanned_by(transform[rank:], m.ncols)


def image_basis(m: IntMatrix) -> Lattice:
    return Lattice.spanned_by(m.columns, m.nrows)


def lattice_sum(a: Lattice, b: Lattice) -> Lattice:
    _check_rank(a, b)
    return Lattice.spanned_by(a.gens + b.gens, a.ambient_rank)


def preimage(f: IntMatrix, target: Lattice, within: Lattice | None = None) -> Lattice:
    """All x in ``within`` (default: everything) with f x in ``target``."""
    if f.nrows != target.ambient_rank:
        raise LatticeError("map codomain does not match target lattice")
    within = Lattice.full(f.ncols) if within is None else within
    if within.ambient_rank != f.ncols:
        raise LatticeError("map domain does not match source lattice")
    k = within.rank
    fb = [f.apply(g) for g in within.gens]
    # Solve F y = T z; kernel of [F | -T], then keep the y part.
    stacked = IntMatrix.from_columns(fb + [tuple(-x for x in g) for g in target.gens], f.nrows)
    ker = kernel_basis(stacked)
    ys = [y[:k] for y in ker.gens]
    return Lattice.spanned_by(
        (tuple(sum(c * g[i] for c, g in zip(y, within.gens)) for i in range(f.ncols)) for y in ys),
        f.ncols,
    )


def intersect(a: Lattice, b: Lattice) -> Lattice:
    _check_rank(a, b)
    return preimage(IntMatrix.identity(a.ambient_rank), b, within=a)


# --------------------------------------------------------------------------
# Subquotients


@dataclass(frozen=True)
class Subquotient:
    """The abelian group numerator/denominator with chosen generators.

    ``reps`` lists one ambient vector per generator, free generators first
    and then torsion generators with orders ``torsion``.
    """

    numerator: Lattice
    denominator: Lattice
    free_rank: int
    torsion: tuple[int, ...]
    reps: tuple[Vector, ...]
    # Row k maps numerator coordinates to the k-th quotient coordinate.
    _proj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    @property
    def ambient_rank(self) -> int:
        return self.numerator.ambient_rank

    @property
    def structure(self) -> tuple[int, tuple[int, ...]]:
        return (self.free_rank, self.torsion)

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def moduli(self) -> tuple[int, ...]:
        """0 for each free coordinate, the order for each torsion coordinate."""
        return (0,) * self.free_rank + self.torsion

    @property
    def order(self) -> int | None:
        """Group order, None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for f in self.torsion:
            out *= f
        return out

    def is_zero(self) -> bool:
        return self.ngens == 0

    def project(self, v: Sequence[int]) -> tuple[int, ...]:
        """Quotient coordinates of the class of ``v`` (torsion parts reduced)."""
        y = self.numerator.coords(v)
        if y is None:
            raise LatticeError("vector does not lie in the numerator")
        out = []
        for row, mod in zip(self._proj, self.moduli):
            z = sum(a * b for a, b in zip(row, y))
            out.append(z % mod if mod else z)
        return tuple(out)

    def contains_class(self, v: Sequence[int]) -> bool:
        """True when ``v`` lies in the numerator, so its class is an element here."""
        return v in self.numerator

    def is_trivial_class(self, v: Sequence[int]) -> bool:
        return v in self.denominator

    def lift(self, coords: Sequence[int]) -> Vector:
        """An ambient representative of the class with the given coordinates."""
        out = [0] * self.ambient_rank
        for c, rep in zip(coords, self.reps):
            for i, x in enumerate(rep):
                out[i] += c * x
        return tuple(out)


def subquotient(num: Lattice, den: Lattice) -> Subquotient:
    """Structure of num/den via the Smith form of den written in num's basis."""
    _check_rank(num, den)
    cols = []
    for g in den.gens:
        c = num.coords(g)
        if c is None:
            raise LatticeError("denominator not contained in numerator")
        cols.append(c)
    k = num.rank
    rel = IntMatrix.from_columns(cols, k)
    u, d, _, ui, _ = _snf_full(rel)
    diag = [d[i][i] for i in range(min(k, den.rank))]
    rho = sum(1 for x in diag if x)
    n = num.ambient_rank

    def ambient(j: int) -> Vector:
        # column j of (num basis) @ u^-1
        return tuple(sum(ui[i][j] * num.gens[i][a] for i in range(k)) for a in range(n))

    free_idx = list(range(rho, k))
    tors_idx = [j for j in range(rho) if diag[j] > 1]

    # Rebase the free part onto the Hermite basis of its span for readable reps.
    free_vecs = [ambient(j) for j in free_idx]
    free_span = Lattice.spanned_by(free_vecs, n)
    change = [free_span.coords(v) for v in free_vecs]
    free_proj = [
        tuple(sum(change[i][a] * u[free_idx[i]][b] for i in range(len(free_idx))) for b in range(k))
        for a in range(len(free_idx))
    ]
    proj = tuple(free_proj) + tuple(tuple(u[j]) for j in tors_idx)
    reps = tuple(den.reduce(g) for g in free_span.gens) + tuple(den.reduce(ambient(j)) for j in tors_idx)
    return Subquotient(
        numerator=num,
        denominator=den,
        free_rank=len(free_idx),
        torsion=tuple(diag[j] for j in tors_idx),
        reps=reps,
        _proj=proj,
    )


def zero_group(ambient_rank: int) -> Subquotient:
    return subquotient(Lattice.zero(ambient_rank), Lattice.zero(ambient_rank))


# --------------------------------------------------------------------------
# Induced maps


@dataclass(frozen=True)
class InducedMap:
    """A map between subquotients induced by an ambient integer matrix.

    When ``well_defined`` is False, ``matrix`` is None and ``offending`` holds
    an image vector that escapes the codomain numerator or denominator.
    """

    domain: Subquotient
    codomain: Subquotient
    matrix: IntMatrix | None
    well_defined: bool
    offending: Vector | None = None
    reason: str = ""

    def is_zero(self) -> bool:
        return self.matrix is not None and self.matrix.is_zero()

    def __call__(self, coords: Sequence[int]) -> tuple[int, ...]:
        if self.matrix is None:
            raise LatticeError("map is not well defined")
        out = self.matrix.apply(coords)
        return tuple(z % m if m else z for z, m in zip(out, self.codomain.moduli))


def induce(f: IntMatrix, dom: Subquotient, cod: Subquotient) -> InducedMap:
    if f.shape != (cod.ambient_rank, dom.ambient_rank):
        raise LatticeError(
            f"map of shape {f.shape} between Z^{dom.ambient_rank} and Z^{cod.ambient_rank}"
        )
    for g in dom.numerator.gens:
        img = f.apply(g)
        if img not in cod.numerator:
            return InducedMap(dom, cod, None, False, img, "numerator not mapped into numerator")
    for g in dom.denominator.gens:
        img = f.apply(g)
        if img not in cod.denominator:
            return InducedMap(dom, cod, None, False, img, "denominator not mapped into denominator")
    cols = [cod.project(f.apply(rep)) for rep in dom.reps]
    return InducedMap(dom, cod, IntMatrix.from_columns(cols, cod.ngens), True)


def homology_of_maps(
    incoming: IntMatrix, outgoing: IntMatrix, moduli: Sequence[int], target_moduli: Sequence[int]
) -> Subquotient:
    """ker(outgoing)/im(incoming) for maps given in quotient coordinates.

    The middle group is Z^g modulo ``moduli`` (0 meaning free), the outgoing
    target is Z^h modulo ``target_moduli``. Computed on the free
    presentations, so torsion is handled exactly.
    """
    g = len(moduli)
    rel_mid = Lattice.spanned_by(
        (tuple(m if i == j else 0 for i in range(g)) for j, m in enumerate(moduli) if m), g
    )
    h = len(target_moduli)
    rel_out = Lattice.spanned_by(
        (tuple(m if i == j else 0 for i in range(h)) for j, m in enumerate(target_moduli) if m), h
    )
    cycles = preimage(outgoing, rel_out)
    boundaries = lattice_sum(image_basis(incoming), rel_mid)
    return subquotient(cycles, boundaries)
