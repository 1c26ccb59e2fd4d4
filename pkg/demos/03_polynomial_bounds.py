"""Comparing the tau bound with the HOMFLY and Kauffman bounds on torus knots.

For positive torus knots the tau bound 2 tau - 1 = 2g - 1 is already sharp.
For their mirrors tau is negative and the bound -pq + p + q - 2 is weaker
than what the Kauffman polynomial gives on tb: -2q for the (-2, q) family.
For T(-3,4) the Kauffman bound stops at -11, one short of the true -12.
"""

from leglab.diagram import torus_pd
from leglab.skein import homfly, homfly_bound, kauffman, kauffman_bound
from leglab.tau import tau_torus

print(f"{'knot':<10}{'tau':>5}{'2tau-1':>8}{'HOMFLY':>8}{'Kauffman (tb)':>15}")
for p, q in [(2, 3), (2, 5), (2, 7), (3, 4), (-2, 3), (-2, 5), (-2, 7), (-3, 4)]:
    pd = torus_pd(p, q)
    t = tau_torus(p, q)
    hb = homfly_bound(homfly(pd))
    kb = kauffman_bound(kauffman(pd))
    print(f"T({p},{q})".ljust(10) + f"{t:>5}{2 * t - 1:>8}{hb:>8}{kb:>15}")

print()
print("HOMFLY of the right trefoil:", homfly(torus_pd(2, 3)))
print("Kauffman of the left trefoil:", kauffman(torus_pd(-2, 3)))
