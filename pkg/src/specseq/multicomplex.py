"""First-quadrant multicomplexes: data model, relation checks, random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .linalg import IntMatrix

Cell = tuple[int, int]

#: Seed used by the test suite and ``specseq selftest`` when none is given.
DEFAULT_SEED = 20080514


class MulticomplexError(ValueError):
    pass


def target_cell(i: int, p: int, q: int) -> Cell:
    """Bidegree reached from (p, q) by the structure map d_i."""
    return (p - i, q + i - 1)


@dataclass(frozen=True, eq=True)
class Multicomplex:
    """Bigraded free abelian groups X_{p,q} with maps d_i of bidegree (-i, i-1).

    ``generators`` maps each cell (p, q) to its ordered generator names;
    ``maps`` maps (i, p, q) to the block of d_i leaving X_{p,q}. Empty cells
    and zero blocks are dropped on construction, so two multicomplexes with
    the same data compare equal.
    """

    generators: Mapping[Cell, tuple[str, ...]]
    maps: Mapping[tuple[int, int, int], IntMatrix]

    __hash__ = None  # type: ignore[assignment]

    def __post_init__(self):
        gens = {}
        for (p, q), names in sorted(self.generators.items()):
            names = tuple(names)
            if p < 0 or q < 0:
                raise MulticomplexError(f"cell ({p},{q}) lies outside the first quadrant")
            if len(set(names)) != len(names):
                raise MulticomplexError(f"duplicate generator name in cell ({p},{q})")
            if names:
                gens[(p, q)] = names
        maps = {}
        for (i, p, q), block in sorted(self.maps.items(), key=lambda kv: kv[0]):
            if i < 0:
                raise MulticomplexError(f"negative map index {i}")
            src = len(gens.get((p, q), ()))
            tgt_cell = target_cell(i, p, q)
            tgt = len(gens.get(tgt_cell, ()))
            if block.shape != (tgt, src):
                raise MulticomplexError(
                    f"block d_{i} at ({p},{q}) has shape {block.shape}, expected {(tgt, src)}"
                )
            if block.is_zero():
                continue
            maps[(i, p, q)] = block
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "maps", maps)

    @classmethod
    def from_entries(
        cls,
        generators: Mapping[Cell, Sequence[str]],
        entries: Iterable[tuple[int, str, str, int]],
    ) -> "Multicomplex":
        """Build from sparse entries ``(i, source name, target name, coef)``.

        Names must be unique across the whole multicomplex.
        """
        where = {}
        for cell, names in generators.items():
            for k, name in enumerate(names):
                if name in where:
                    raise MulticomplexError(f"duplicate generator name {name!r}")
                where[name] = (cell, k)
        acc: dict[tuple[int, int, int], list[list[int]]] = {}
        for i, src, tgt, coef in entries:
            if src not in where:
                raise MulticomplexError(f"unknown generator {src!r}")
            if tgt not in where:
                raise MulticomplexError(f"unknown generator {tgt!r}")
            (p, q), a = where[src]
            tc, b = where[tgt]
            if tc != target_cell(i, p, q):
                raise MulticomplexError(
                    f"degree shift mismatch for map {i}: {src} at ({p},{q}) -> {tgt} at {tc}"
                )
            block = acc.setdefault((i, p, q), [[0] * len(generators[(p, q)]) for _ in generators[tc]])
            block[b][a] += coef
        maps = {
            key: IntMatrix(rows, len(generators[key[1:]])) for key, rows in acc.items()
        }
        return cls(dict(generators), maps)

    @property
    def support(self) -> tuple[Cell, ...]:
        return tuple(self.generators)

    @property
    def max_i(self) -> int:
        """Largest i with a nonzero d_i, or -1 when every map vanishes."""
        return max((i for i, _, _ in self.maps), default=-1)

    @property
    def max_total_degree(self) -> int:
        return max((p + q for p, q in self.generators), default=-1)

    def rank(self, p: int, q: int) -> int:
        return len(self.generators.get((p, q), ()))

    def names(self, p: int, q: int) -> tuple[str, ...]:
        return self.generators.get((p, q), ())

    def block(self, i: int, p: int, q: int) -> IntMatrix:
        """d_i: X_{p,q} -> X_{p-i,q+i-1}; zero when absent."""
        found = self.maps.get((i, p, q))
        if found is not None:
            return found
        return IntMatrix.zeros(self.rank(*target_cell(i, p, q)), self.rank(p, q))

    def entries(self) -> list[tuple[int, str, str, int]]:
        """Sparse listing ``(i, source, target, coef)`` in a fixed order."""
        out = []
        for (i, p, q), block in self.maps.items():
            src = self.generators[(p, q)]
            tgt = self.generators[target_cell(i, p, q)]
            for a in range(block.ncols):
                for b in range(block.nrows):
                    if block[b, a]:
                        out.append((i, src[a], tgt[b], block[b, a]))
        return out


@dataclass(frozen=True)
class Violation:
    n: int
    p: int
    q: int
    residual: IntMatrix


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(mc: Multicomplex) -> ValidationReport:
    """Check sum_{i+j=n} d_i d_j = 0 on every cell for n up to 2 * max_i."""
    out = []
    for n in range(2 * mc.max_i + 1):
        for p, q in mc.support:
            tp, tq = p - n, q + n - 2
            if tp < 0 or tq < 0 or not mc.rank(tp, tq):
                continue
            total = IntMatrix.zeros(mc.rank(tp, tq), mc.rank(p, q))
            for j in range(n + 1):
                i = n - j
                mp, mq = target_cell(j, p, q)
                if mp < 0 or mq < 0:
                    continue
                total = total + mc.block(i, mp, mq) @ mc.block(j, p, q)
            if not total.is_zero():
                out.append(Violation(n, p, q, total))
    return ValidationReport(tuple(out))


def is_double_complex(mc: Multicomplex) -> bool:
    return mc.max_i <= 1


def transpose_double(mc: Multicomplex) -> Multicomplex:
    """Swap p and q; the new d_0 is the old d_1 and vice versa."""
    if not is_double_complex(mc):
        raise MulticomplexError("not a double complex")
    gens = {(q, p): names for (p, q), names in mc.generators.items()}
    maps = {(1 - i, q, p): block for (i, p, q), block in mc.maps.items()}
    return Multicomplex(gens, maps)


# --------------------------------------------------------------------------
# Random instances


def random_instance(
    seed: int, max_total_degree: int, max_rank: int, max_entry: int = 3
) -> Multicomplex:
    """A random valid multicomplex.

    Built as a sum of elementary complexes Z --k--> Z (or lone Z) sitting in
    random filtration degrees, conjugated by a random unipotent
    filtration-preserving change of basis, then split into the blocks d_i.
    ``max_entry`` bounds the weights k and the change-of-basis entries.
    """
    if max_total_degree < 0 or max_rank < 1:
        raise ValueError("need max_total_degree >= 0 and max_rank >= 1")
    from .assembly import FilteredComplex, Generator, extract_multicomplex

    rng = random.Random(seed)
    # degree -> list of (filtration, name)
    cells: dict[int, list[list]] = {n: [] for n in range(max_total_degree + 1)}
    pairs = []  # (n, index of source in degree n, index of target in degree n-1, weight)
    used = 0
    count = 0
    target_rank = rng.randint(1, max_rank)
    while used < target_rank:
        n = rng.randint(0, max_total_degree)
        two_term = n >= 1 and used + 2 <= target_rank and rng.random() < 0.75
        s_top = rng.randint(0, n)
        cells[n].append([s_top, f"g{count}"])
        count += 1
        used += 1
        if two_term:
            s_low = rng.randint(0, min(s_top, n - 1))
            cells[n - 1].append([s_low, f"g{count}"])
            count += 1
            used += 1
            k = rng.choice([k for k in range(-max_entry, max_entry + 1) if k])
            pairs.append((n, len(cells[n]) - 1, len(cells[n - 1]) - 1, k))

    # Basis order: decreasing filtration, stable within a filtration level.
    order = {
        n: sorted(range(len(gs)), key=lambda a: -gs[a][0]) for n, gs in cells.items()
    }
    pos = {n: {a: k for k, a in enumerate(order[n])} for n in cells}
    dims = {n: len(gs) for n, gs in cells.items()}

    bd = {n: [[0] * dims[n] for _ in range(dims.get(n - 1, 0))] for n in cells}
    for n, a, b, k in pairs:
        bd[n][pos[n - 1][b]][pos[n][a]] = k

    # Unipotent filtration-preserving change of basis per degree: P_n with
    # new basis e'_j = e_j + sum c e_i over filt(i) <= filt(j), i != j.
    filt = {n: [cells[n][a][0] for a in order[n]] for n in cells}
    basis_change = {}
    for n in cells:
        d = dims[n]
        p_mat = IntMatrix.identity(d).tolist()
        p_inv = IntMatrix.identity(d).tolist()
        for _ in range(rng.randint(0, 2 * d)):
            if d < 2:
                break
            i, j = rng.sample(range(d), 2)
            if filt[n][i] > filt[n][j]:
                i, j = j, i
            c = rng.choice([c for c in range(-max_entry, max_entry + 1) if c])
            # column op C_j += c C_i on P, row op R_i -= c R_j on P^-1
            for row in p_mat:
                row[j] += c * row[i]
            p_inv[i] = [x - c * y for x, y in zip(p_inv[i], p_inv[j])]
        basis_change[n] = (IntMatrix(p_mat, d), IntMatrix(p_inv, d))

    degrees = {}
    boundary = {}
    for n in cells:
        degrees[n] = tuple(
            Generator(cells[n][a][1], cells[n][a][0], (cells[n][a][0], n - cells[n][a][0]))
            for a in order[n]
        )
        m = IntMatrix(bd[n], dims[n])
        if n >= 1:
            m = basis_change[n - 1][1] @ m @ basis_change[n][0]
        boundary[n] = m
    mc = extract_multicomplex(FilteredComplex(degrees, boundary))
    if not validate(mc).ok:
        raise AssertionError(f"random_instance({seed}) produced an invalid multicomplex")
    return mc
