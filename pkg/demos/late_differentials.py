"""
Differentials that wait
=======================

In the second example family the two surviving classes sit r columns apart,
so nothing happens until page r, where d^r cancels them.
"""

import time

from specseq import assemble, page
from specseq.fixtures import example2
from specseq.render import structure_str

for r in (2, 5, 8, 12):
    start = time.time()
    fc = assemble(example2(r))
    alive = []
    for k in range(1, r + 2):
        p = page(fc, k)
        alive.append(len(p.nonzero()))
    d = page(fc, r).differential(r, 0)
    elapsed = time.time() - start
    print(f"r={r:2d}  nonzero cells per page {alive}  d^{r} = {d.matrix.tolist()}  "
          f"({structure_str(d.domain)} -> {structure_str(d.codomain)}, {elapsed:.2f}s)")
