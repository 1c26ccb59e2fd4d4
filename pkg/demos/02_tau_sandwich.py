"""Pinning tau between a good front and an unknotting certificate.

A Legendrian representative with large tb + |r| pushes tau up, because
tb + |r| <= 2 tau - 1. Changing u crossings to unknot the knot pushes it
down, because |tau| <= g* <= u. When the two meet, tau is known exactly.
"""

from leglab.corpus import default_corpus_dir, load_entry, verify_unknotting
from leglab.diagram import front_to_pd
from leglab.front import orient
from leglab.tau import sandwich, whitehead_double_tau

corpus = default_corpus_dir()

for name in ("k10_139", "m10_145", "trefoil_right", "figure_eight"):
    entry = load_entry(corpus / f"{name}.json")
    f = orient(entry.front)
    inv = f.invariants
    u = entry.metadata.unknotting_upper
    est = sandwich(inv.tb, inv.r, u)
    print(f"{name}: tb={inv.tb}, r={inv.r}, unknotting number <= {u}")
    print(f"  tau >= (tb + |r| + 1) / 2 = {est.lower},  tau <= u = {est.upper}")
    if est.determined:
        print(f"  so tau = {est.value}")
    else:
        print(f"  tau is only known to lie in [{est.lower}, {est.upper}]")

    cert = entry.unknotting_certificate
    if cert:
        pd = front_to_pd(f)
        status = verify_unknotting(pd, cert, cap=len(pd))
        print(f"  switching crossings {list(cert)} of the {len(pd)}-crossing diagram: {status}")
    print()

# the figure-eight front is far from maximal, so the sandwich says little.
# for iterated Whitehead doubles of a knot with a tb > 0 front, a tb = 1
# representative and u <= 1 settle it at once.
print("Whitehead double:", whitehead_double_tau(True).value, "=", sandwich(1, 0, 1).value)
