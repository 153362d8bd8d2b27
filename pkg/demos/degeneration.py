"""
Degenerating at the second page
===============================

Adding d_r(x_{r,0}) = (-1)^r x_{0,r-1} to the staircase makes the pages
collapse: every later differential vanishes and E^inf matches the
associated graded of homology.
"""

from specseq import assemble, e_infinity, page, verify_convergence
from specseq.fixtures import example3_general
from specseq.render import grid

for r in (2, 3, 4):
    fc = assemble(example3_general(r))
    size = fc.max_degree + 1
    print(f"r = {r}")
    print(grid(page(fc, 2).cells, size, size))
    later = [k for k in range(2, r + 3) if page(fc, k).nonzero_differentials()]
    print("pages with a nonzero differential:", later or "none")
    print("E^inf equals GH:", verify_convergence(fc).ok)
    print(grid(e_infinity(fc).cells, size, size))
    print()
