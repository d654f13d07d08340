"""Non-symmetric dual q-Hahn polynomials: cells as l(X) x, recurrences, orthogonality.

    python3 demos/04_nonsym_polynomials.py
"""

from grassmann_daha import nonsym as ns
from grassmann_daha.cherednik import cell_weights
from grassmann_daha.scalars import render, specialize_q

N, D = 6, 3
fam = ns.build_family(N, D)
for i in range(D):
    for s in ns.SIGNS:
        f = fam.get(i, s)
        print(f"l_{i}^{s}: window {f.window()}, leading coefficient {render(f[f.degree])}")

print("\ncells from the polynomials:",
      all(c.ok for c in ns.verify_module_realization(N, D, fam)))

tabs = ns.recurrence_tables(N, D, fam)
print("\nzeta * l_1^- =")
for (j, nu), c in sorted(tabs["X-"][(1, "-")].items()):
    print(f"   + ({render(c)}) l_{j}^{nu}")

form, _ = ns.build_form(N, D)
G = ns.gram_matrix(form, fam)
print("\nGram matrix at q = 2 (diagonal of cell sizes):")
for a in range(2 * D):
    print("  ", [str(specialize_q(G[a, b], 2)) for b in range(2 * D)])
print("cell sizes at q = 2:", [str(specialize_q(w, 2)) for w in cell_weights(N, D)])
print("\nquadrature on 200 random pairs:", ns.quadrature_check(N, D, pairs=200).ok)
