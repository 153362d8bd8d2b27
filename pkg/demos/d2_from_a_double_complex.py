"""
A double complex whose second page differential is not zero
===========================================================

Four generators on a staircase. The structure map d_2 is zero, yet d^2 on
the second page is an isomorphism, and the representative of E_{2,0}
changes between the first and second pages.
"""

from specseq import assemble, chain_homology, page
from specseq.fixtures import example1
from specseq.render import page_table
from specseq.spectral import induced_map_on_page

mc = example1()
fc = assemble(mc)

# the total complex is acyclic
print({n: g.structure for n, g in chain_homology(fc).groups.items()})

for r in (1, 2, 3):
    print()
    print(page_table(page(fc, r)))

# d_2 = 0 induces nothing, while d^2 hits the whole target
report = induced_map_on_page(mc, 2, 2, 0)
print()
print("induced image:", report.induced_image.structure)
print("image of d^2: ", report.dr_image.structure)
print("agrees:       ", report.agrees)
