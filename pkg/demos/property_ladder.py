"""Logical properties read off the dual space.

Runs each transfer check on an algebra where it should hold and then on a
control where it should not, printing the first counterexample found.

    python demos/property_ladder.py
"""

from dualis.fixtures import load
from dualis.priestley import dual_space
from dualis.properties import arrow, check_pc, check_pdi, check_pdi_single_dual, check_pie, check_uddt

doc, neg = load("corpus"), load("negative")
lg = doc.logics


def show(rep, check=None):
    print(" ", rep.summary())
    if check is not None:
        c = rep.get(check)
        print(f"    {check}: {'holds' if c.passed else 'fails, first at ' + str(c.failures[0])}")


print("conjunction")
show(check_pc(lg["L_TOP_AND"], None, doc.algebras["M4"]))
show(check_pc(neg.logics["L_FAKE_IMP"], None, neg.algebras["H2"]), "pc-transfer")

print("disjunction")
show(check_pdi(lg["L_POS"], None, doc.algebras["M4L"]))
show(check_pdi(neg.logics["L_FAKE_AND"], None, neg.algebras["M4"]), "pdi-transfer")
show(check_pdi_single_dual(dual_space(lg["L_HIL"], doc.algebras["H5"])), "union-closed")

print("deduction-detachment")
show(check_uddt(lg["L_HEY"], None, doc.algebras["C3H"]))
X = dual_space(lg["L_HEY"], doc.algebras["C3H"])
pts = lambda U: "{" + ", ".join(X.point(x) for x in range(X.size) if U >> x & 1) + "}"
print("    m -> 0 on the dual:", pts(arrow(X, X.sets[1], X.sets[0])))
print("    1 -> m on the dual:", pts(arrow(X, X.sets[2], X.sets[1])))
show(check_uddt(neg.logics["L_FAKE_AND"], None, neg.algebras["M4"]), "ddt-transfer")

print("inconsistent element")
show(check_pie(lg["L_BOT"], None, doc.algebras["C3B"]))
show(check_pie(lg["L_HIL"], None, doc.algebras["H2"]), "pie-transfer")
