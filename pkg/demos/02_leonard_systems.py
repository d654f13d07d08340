"""The four Leonard systems on W and the duality of their polynomials.

    python3 demos/02_leonard_systems.py
"""

from grassmann_daha import leonard as ls
from grassmann_daha.scalars import ONE, ZERO, render

N, D = 6, 3
for ps in ls.four_systems(N, D):
    ld = ls.derive(ps)
    pf = ls.polynomials(ps, ld)
    print(f"{ps.name}  (diameter {ps.d})")
    print("  theta  :", ", ".join(render(t) for t in ld.theta))
    print("  theta* :", ", ".join(render(t) for t in ld.theta_star))
    print("  m_0    :", render(ld.m[0]))
    print("  sum m  == 1:", sum(ld.m, ZERO) == ONE)
    print("  f_i(theta_j) agrees with the 3phi2 sum:", ls.duality_check(ps, ld, pf) == [])
    print("  h_1(zeta) =", pf.h[1] if ps.d >= 1 else "-")
    print()

P, Pt = ls.projections(N, D)
print("projection ranks (onto M x and onto M C):", ls.projection_ranks(N, D))
