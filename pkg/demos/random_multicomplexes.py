"""
Random multicomplexes
=====================

Generate seeded random instances, run the full audit and report what kind
of behaviour they show. The default seed makes the run reproducible.
"""

from specseq import assemble, page
from specseq.audit import audit
from specseq.multicomplex import DEFAULT_SEED, random_instance
from specseq.spectral import global_stabilization

torsion = higher = failed = 0
for k in range(50):
    mc = random_instance(DEFAULT_SEED + k, 4, 12)
    fc = assemble(mc)
    pages = [page(fc, r) for r in range(global_stabilization(fc) + 1)]
    torsion += any(c.torsion for p in pages for c in p.cells.values())
    higher += any(p.nonzero_differentials() for p in pages[2:])
    failed += bool(audit(mc))

print(f"seeds {DEFAULT_SEED}..{DEFAULT_SEED + 49}")
print(f"with torsion on some page: {torsion}")
print(f"with a nonzero d^r, r >= 2: {higher}")
print(f"audit failures: {failed}")
