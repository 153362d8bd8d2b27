import pytest
from hypothesis import given, strategies as st

from helpers import up_to_sign, vec, x
from specseq.assembly import assemble, filtration_lattice
from specseq.fixtures import combined, example1, example2, example3, example3_general, example4
from specseq.homology import associated_graded
from specseq.linalg import Lattice
from specseq.multicomplex import random_instance
from specseq.spectral import (
    column_homology,
    compare_page,
    differential_squares_zero,
    e_infinity,
    global_stabilization,
    induced_map_on_page,
    page,
    page_homology,
    stabilization_bound,
    turn_page,
    verify_convergence,
    verify_e1_columns,
    z_infinity,
    z_lattice,
)


def structures(p):
    return {k: v.structure for k, v in p.nonzero().items()}


def alternating_staircase(fc, r):
    return vec(fc, r, {x(p, r - p): (-1) ** (p - 1) for p in range(1, r + 1)})


# --- lattices --------------------------------------------------------------


def test_z0_is_filtration():
    fc = assemble(example4())
    for s in range(3):
        for t in range(3):
            assert z_lattice(fc, 0, s, t) == filtration_lattice(fc, s, s + t)


def test_z2_first_example():
    fc = assemble(example1())
    z = z_lattice(fc, 2, 2, 0)
    assert z.rank == 1
    assert up_to_sign(z.gens[0], vec(fc, 2, {"x_{1,1}": 1, "x_{2,0}": -1}))


@pytest.mark.parametrize("r", range(2, 9))
def test_zr_second_example(r):
    fc = assemble(example2(r))
    z = z_lattice(fc, r, r, 0)
    assert z.rank == 1
    assert up_to_sign(z.gens[0], alternating_staircase(fc, r))


def test_z_infinity_examples():
    assert z_infinity(assemble(example1()), 2, 0).is_zero()
    fc = assemble(example3())
    z = z_infinity(fc, 2, 0)
    assert z.rank == 1 and up_to_sign(z.gens[0], vec(fc, 2, {"x_{1,1}": 1, "x_{2,0}": -1}))
    assert z_infinity(fc, 4, 3).is_zero()


# --- pages -----------------------------------------------------------------


def test_first_example_pages():
    fc = assemble(example1())
    e1, e2, e3 = page(fc, 1), page(fc, 2), page(fc, 3)
    assert structures(e1) == {(0, 1): (1, ()), (2, 0): (1, ())}
    assert structures(e2) == structures(e1)
    assert up_to_sign(e1.cell(2, 0).reps[0], vec(fc, 2, {"x_{2,0}": 1}))
    assert up_to_sign(e2.cell(2, 0).reps[0], vec(fc, 2, {"x_{1,1}": 1, "x_{2,0}": -1}))
    assert e2.differential(2, 0).matrix.tolist() in ([[1]], [[-1]])
    assert not e1.nonzero_differentials()
    assert e3.is_zero()


def test_fourth_example_second_page():
    fc = assemble(example4())
    e2 = page(fc, 2)
    assert structures(e2) == {(0, 1): (2, ()), (2, 0): (2, ())}
    d = e2.differential(2, 0).matrix
    assert d.shape == (2, 2) and abs(d.det()) == 1
    assert page(fc, 3).is_zero()


def test_zeroth_page_is_the_bigraded_module():
    mc = example4()
    e0 = page(assemble(mc), 0)
    assert {k: v for k, v in e0.structure().items() if v != (0, ())} == {
        c: (mc.rank(*c), ()) for c in mc.support
    }


def test_turning_first_example():
    fc = assemble(example1())
    e2 = turn_page(page(fc, 1))
    assert e2.structure() == page(fc, 2).structure()
    assert turn_page(e2).is_zero()


def test_zero_page_turns_to_zero_page():
    fc = assemble(example1())
    p = page(fc, 3)
    assert turn_page(p).is_zero()


def test_stabilization_bound():
    assert stabilization_bound(None, 2, 0) == 3
    assert stabilization_bound(None, 0, 0) == 2


@pytest.mark.parametrize("r", range(2, 7))
def test_second_example_dies_at_r_plus_one(r):
    fc = assemble(example2(r))
    assert stabilization_bound(fc, r, 0) == r + 1
    for k in range(1, r + 1):
        assert structures(page(fc, k)) == {(0, r - 1): (1, ()), (r, 0): (1, ())}
    assert page(fc, r).differential(r, 0).matrix.tolist() in ([[1]], [[-1]])
    assert page(fc, r + 1).is_zero()


def test_e_infinity_examples():
    assert e_infinity(assemble(example1())).is_zero()
    assert structures(e_infinity(assemble(example3()))) == {(0, 1): (1, ()), (2, 0): (1, ())}
    assert e_infinity(assemble(example4())).is_zero()


@pytest.mark.parametrize("mc", [example1(), example3(), example4(), combined()])
def test_convergence_fixtures(mc):
    report = verify_convergence(assemble(mc))
    assert report.ok


def test_column_homology_first_example():
    mc = example1()
    assert column_homology(mc, 1, 0).is_zero() and column_homology(mc, 1, 1).is_zero()
    c = column_homology(mc, 2, 0)
    # coordinates in X_{2,0}, whose only generator is x_{2,0}
    assert c.structure == (1, ())
    assert c.reps[0] in ((1,), (-1,))
    assert verify_e1_columns(mc).ok


# --- comparison with the structure maps ------------------------------------


def test_compare_first_example():
    rep = induced_map_on_page(example1(), 2, 2, 0)
    assert not rep.agrees
    assert rep.induced_image.is_zero()
    assert rep.dr_image.structure == (1, ())


def test_compare_fourth_example():
    mc = example4()
    fc = assemble(mc)
    rep = induced_map_on_page(mc, 2, 2, 0)
    assert not rep.agrees
    assert rep.cell.structure == (2, ())
    assert rep.induced_domain.free_rank == 1
    assert up_to_sign(rep.induced_domain.reps[0], vec(fc, 2, {"x̃_{2,0}": 1}))
    assert rep.induced_image.free_rank == 1
    tilde = vec(fc, 1, {"x̃_{0,1}": 1})
    plain = vec(fc, 1, {"x_{0,1}": 1})
    assert rep.target.project(tilde) in [
        tuple(c * k for c in rep.target.project(rep.induced_image.reps[0])) for k in (1, -1)
    ]
    assert plain not in rep.induced_image.numerator
    assert rep.dr_image.structure == (2, ())


@pytest.mark.parametrize("mc", [example3()] + [example3_general(r) for r in range(3, 7)])
def test_degenerate_examples_have_zero_dr(mc):
    fc = assemble(mc)
    for r in range(2, global_stabilization(fc) + 1):
        assert all(rep.dr_is_zero for rep in compare_page(mc, r, fc).values())


def test_compare_rejects_r_zero():
    with pytest.raises(ValueError):
        induced_map_on_page(example1(), 0, 0, 0)


def test_combined_disagrees_at_two_pages():
    mc = combined()
    bad = {r for r in range(1, 5) if not all(rep.agrees for rep in compare_page(mc, r).values())}
    assert bad == {2, 3}


# --- properties on random instances ----------------------------------------


@given(st.integers(0, 10**9), st.integers(1, 4), st.integers(1, 12))
def test_page_properties(seed, degree, rank):
    mc = random_instance(seed, degree, rank)
    fc = assemble(mc)
    top = global_stabilization(fc)
    for s, t in [(s, n - s) for n in range(fc.max_degree + 1) for s in range(n + 1)]:
        # Z^r decreases in r and stays above Z^infinity
        prev = z_lattice(fc, 0, s, t)
        for r in range(1, top + 2):
            here = z_lattice(fc, r, s, t)
            assert prev.contains_lattice(here)
            prev = here
        assert prev == z_infinity(fc, s, t)
    for r in range(top + 1):
        p = page(fc, r)
        assert differential_squares_zero(p)
        nxt = page(fc, r + 1)
        for (s, t), c in nxt.cells.items():
            assert page_homology(p, s, t).structure == c.structure
    # from the bound on, pages freeze and equal E-infinity
    assert page(fc, top).structure() == page(fc, top + 3).structure() == e_infinity(fc).structure()
    assert e_infinity(fc).structure() == {k: v.structure for k, v in associated_graded(fc).groups.items()}
    assert verify_e1_columns(mc).ok
    assert all(rep.agrees for rep in compare_page(mc, 1, fc).values())


def test_lattice_helpers_on_empty_degrees():
    fc = assemble(example1())
    assert z_lattice(fc, 2, 5, 5) == Lattice.zero(0)
