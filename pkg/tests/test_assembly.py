import pytest
from hypothesis import given, strategies as st

from helpers import vec
from specseq.assembly import (
    FilteredComplex,
    FilteredComplexError,
    Generator,
    assemble,
    extract_multicomplex,
    filtration_lattice,
)
from specseq.fixtures import all_fixtures, example1, example4
from specseq.linalg import IntMatrix, Lattice
from specseq.multicomplex import Multicomplex, random_instance


def test_first_example_total_complex():
    fc = assemble(example1())
    assert [g.name for g in fc.basis(2)] == ["x_{2,0}", "x_{1,1}"]
    assert [g.name for g in fc.basis(1)] == ["x_{1,0}", "x_{0,1}"]
    assert [g.filtration for g in fc.basis(2)] == [2, 1]
    d = fc.d(2)
    assert d.apply(vec(fc, 2, {"x_{2,0}": 1})) == vec(fc, 1, {"x_{1,0}": 1})
    assert d.apply(vec(fc, 2, {"x_{1,1}": 1})) == vec(fc, 1, {"x_{1,0}": 1, "x_{0,1}": 1})
    assert d.apply(vec(fc, 2, {"x_{1,1}": 1, "x_{2,0}": -1})) == vec(fc, 1, {"x_{0,1}": 1})


def test_empty_multicomplex_assembles_to_zero():
    fc = assemble(Multicomplex({}, {}))
    assert fc.max_degree == -1
    assert fc.dim(0) == 0 and fc.dim(3) == 0


def test_fourth_example_total_complex():
    fc = assemble(example4())
    assert fc.dim(2) == 3
    assert {g.name for g in fc.basis(2)} == {"x_{2,0}", "x̃_{2,0}", "x_{1,1}"}
    assert fc.d(2).apply(vec(fc, 2, {"x̃_{2,0}": 1})) == vec(fc, 1, {"x̃_{0,1}": 1})


def test_filtration_lattice():
    fc = assemble(example1())
    assert filtration_lattice(fc, -1, 1).is_zero()
    assert filtration_lattice(fc, 0, 1) == Lattice.spanned_by([vec(fc, 1, {"x_{0,1}": 1})], 2)
    assert filtration_lattice(fc, 2, 2) == Lattice.full(2)
    assert filtration_lattice(fc, 5, 1) == Lattice.full(2)


def test_filtration_raising_entry_rejected():
    degrees = {
        1: (Generator("a", 0, (0, 1)),),
        0: (Generator("b", 0, (0, 0)), Generator("c", 1, (1, -1))),
    }
    # filtration 1 in degree 0 is already outside the quadrant
    with pytest.raises(FilteredComplexError):
        FilteredComplex(degrees, {1: IntMatrix([[0], [1]])})
    degrees = {
        2: (Generator("a", 1, (1, 1)),),
        1: (Generator("b", 1, (1, 0)), Generator("c", 0, (0, 1))),
    }
    FilteredComplex(degrees, {2: IntMatrix([[1], [1]])})
    degrees[2] = (Generator("a", 0, (0, 2)),)
    with pytest.raises(FilteredComplexError, match="boundary raises filtration"):
        FilteredComplex(degrees, {2: IntMatrix([[1], [0]])})


def test_boundary_must_square_to_zero():
    degrees = {
        2: (Generator("a", 0, (0, 2)),),
        1: (Generator("b", 0, (0, 1)),),
        0: (Generator("c", 0, (0, 0)),),
    }
    with pytest.raises(FilteredComplexError, match="square to zero"):
        FilteredComplex(degrees, {2: IntMatrix([[1]]), 1: IntMatrix([[1]])})


def test_assemble_rejects_invalid_relations():
    mc = Multicomplex.from_entries(
        {(0, 2): ["a"], (0, 1): ["b"], (0, 0): ["c"]},
        [(0, "a", "b", 1), (0, "b", "c", 1)],
    )
    with pytest.raises(FilteredComplexError, match="relations violated"):
        assemble(mc)


def test_fixtures_round_trip_through_total_complex():
    for name, mc in all_fixtures().items():
        assert extract_multicomplex(assemble(mc)) == mc, name


@given(st.integers(0, 10**9), st.integers(0, 4), st.integers(1, 12))
def test_round_trip_and_filtration_preserved(seed, degree, rank):
    mc = random_instance(seed, degree, rank)
    fc = assemble(mc)
    assert extract_multicomplex(fc) == mc
    for n in range(1, fc.max_degree + 1):
        d = fc.d(n)
        for s in range(-1, n + 1):
            src = filtration_lattice(fc, s, n)
            dst = filtration_lattice(fc, s, n - 1)
            assert all(d.apply(g) in dst for g in src.gens)
        if n >= 2:
            assert (fc.d(n - 1) @ d).is_zero()
