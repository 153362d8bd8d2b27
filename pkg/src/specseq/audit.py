"""Run every structural cross-check on one multicomplex."""

from __future__ import annotations

from .assembly import assemble
from .multicomplex import Multicomplex, validate
from .spectral import (
    SpectralSequenceError,
    compare_page,
    differential_squares_zero,
    global_stabilization,
    page,
    turn_page,
    verify_convergence,
    verify_e1_columns,
)


def audit(mc: Multicomplex) -> list[str]:
    """Return a list of failure messages; empty means every check passed.

    Checks the relations, E^1 against column homology, d^1 against d_1,
    (d^r)^2 = 0 and the turning isomorphism up to stabilization, and
    convergence to the associated graded of homology.
    """
    if not validate(mc).ok:
        return ["relations violated"]
    failures = []
    fc = assemble(mc)
    if not verify_e1_columns(mc).ok:
        failures.append("E^1 differs from column homology")
    try:
        p = page(fc, 0)
        for r in range(global_stabilization(fc) + 1):
            if not differential_squares_zero(p):
                failures.append(f"d^{p.r} does not square to zero")
            if r == 1:
                bad = [st for st, rep in compare_page(mc, 1, fc, p).items() if not rep.agrees]
                if bad:
                    failures.append(f"d^1 differs from the map induced by d_1 at {bad}")
            p = turn_page(p)
        if not verify_convergence(fc).ok:
            failures.append("E^inf differs from the associated graded of homology")
    except SpectralSequenceError as exc:
        failures.append(str(exc))
    return failures
