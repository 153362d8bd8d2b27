"""
d^2 against the map induced by d_2
==================================

A multicomplex with nonzero d_2 whose page differential d^2 is onto. The
classes on which d_2 can be evaluated form only a rank one piece of the
rank two cell, and their images miss [x_{0,1}].
"""

from specseq import assemble, page
from specseq.fixtures import example4
from specseq.render import expression, names_in_degree, structure_str
from specseq.spectral import induced_map_on_page

mc = example4()
fc = assemble(mc)
e2 = page(fc, 2)
print("d^2 on E^2_{2,0}:", e2.differential(2, 0).matrix.tolist())

rep = induced_map_on_page(mc, 2, 2, 0)
src, tgt = names_in_degree(fc, 2), names_in_degree(fc, 1)
print("cell:          ", structure_str(rep.cell))
print("induced domain:", [expression(v, src) for v in rep.induced_domain.reps])
print("induced image: ", [expression(v, tgt) for v in rep.induced_image.reps])
print("image of d^2:  ", structure_str(rep.dr_image))
print("agrees:        ", rep.agrees)
