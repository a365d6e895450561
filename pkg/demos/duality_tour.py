"""A walk from a finite algebra to its dual space and back.

Takes the four-element diamond M4 under the logic of conjunction with a
top constant, lists its filters, builds the dual space, checks the space
axioms, and dualizes a pair of composable homomorphisms.

    python demos/duality_tour.py
"""

from dualis import bits
from dualis.fixtures import load
from dualis.logic import filter_system
from dualis.priestley import check_natural_isos, check_xi, dual_morphism, dual_space, star, verify_space

doc = load("corpus")
L, M4 = doc.logics["L_TOP_AND"], doc.algebras["M4"]
fs = filter_system(L, M4)
names = M4.names


def braces(mask, labels):
    return "{" + ", ".join(bits.format_mask(mask, labels)) + "}"


print(f"{M4.name}: {M4.size} elements under {L.name}")
print("filters:  ", ", ".join(braces(F, names) for F in fs.filters))
print("optimal:  ", ", ".join(braces(F, names) for F in fs.optimal))
print("two routes to the optimal filters agree:", fs.routes.agree)

X = dual_space(L, M4)
print(f"\ndual space: {X.size} points, designated {braces(X.xb, [X.point(x) for x in range(X.size)])}")
for a in range(M4.size):
    members = [X.point(x) for x in bits.iter_bits(X.sets[a])]
    print(f"  phi({names[a]}) = {{{', '.join(members)}}}")
print(verify_space(X).summary())
print(check_xi(X).summary())

# f: C2 -> M4 and g: M4 -> M4 compose; their duals compose the other way round
_, f, C2, _ = ("f",) + doc.hom("f")
_, g, _, _ = ("g",) + doc.hom("g")
Rf, Rg = dual_morphism(f, C2, M4, L), dual_morphism(g, M4, M4, L)
gf = tuple(g[f[a]] for a in range(C2.size))
print("\nstar of the duals equals the dual of g after f:",
      star(Rf, Rg).relation == dual_morphism(gf, C2, M4, L).relation)

homs = [(n,) + doc.hom(n) for n in ("id_C2", "id_M4", "f", "g")]
print(check_natural_isos(L, [C2, M4], homs).summary())
