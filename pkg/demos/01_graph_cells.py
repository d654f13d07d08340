"""Build J_2(6,3), split it by a Delsarte clique and compare with the formulas.

    python3 demos/01_graph_cells.py
"""

from grassmann_daha import geometry as geo
from grassmann_daha.leonard import module_matrices
from grassmann_daha.qcomb import grassmann_scalars
from grassmann_daha.scalars import render, specialize_q

q, N, D = 2, 6, 3
g = geo.GrassmannGraph(q, N, D)
x, H = geo.default_base_pair(g)
clique = geo.build_delsarte_clique(x, H)
print(f"J_{q}({N},{D}) has {g.num_vertices} vertices; the clique through x has {len(clique)} members")

part = geo.classify(g, x, clique, H)
sc = grassmann_scalars(N, D)
print("\ncell        counted  formula")
for j, n in enumerate(part.cell_sizes):
    i, sign = divmod(j, 2)
    w = (sc.cell_plus if sign else sc.cell_minus)[i]
    print(f"{geo.cell_label(j):6} {n:12d}  {render(w)}")

nums = geo.empirical_intersection_numbers(part)
print("\nequitable:", not nums.discrepancies)
print("b_i counted:", nums.b, " formula:", [str(specialize_q(b, q)) for b in sc.b])

A, _, _ = geo.quotient_matrices(part, nums)
SA, _, _ = module_matrices(N, D)
print("\nA on W (row k, column j: neighbours in cell j of a vertex in cell k)")
for k in range(2 * D):
    print("  ", [int(a) for a in A[k]], " symbolic row agrees:",
          all(A[k][j] == specialize_q(SA[k, j], q) for j in range(2 * D)))
