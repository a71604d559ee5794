"""A tour of the free duplicial algebra on one generator.

Run with: python3 demos/duplicial_tour.py
"""

from operads.linalg import LinComb
from operads.models import get_model, tree_key
from operads.relations import check_relation
from operads.structure import pbw_expand, pbw_reassemble, primitive_part
from operads.trees import catalan

model = get_model("dup", 1)

print("basis sizes are Catalan numbers:")
for n in range(1, 7):
    assert len(model.basis(n)) == catalan(n)
    print("  degree %d: %d" % (n, len(model.basis(n))))

lt, rt = model.products["left"], model.products["right"]
x = LinComb.of(tree_key("(.,.)", "x"))

print("\nthe two products on x (x over / under x):")
print("  x right x =", rt(x, x))
print("  x left  x =", lt(x, x))

print("\nprimitive dimensions are shifted Catalan numbers:")
for n in range(1, 6):
    prim = primitive_part(model, n)
    assert len(prim) == catalan(n - 1)
    print("  degree %d: %d" % (n, len(prim)))

elt = lt(x, rt(x, x))
comps = pbw_expand(model, elt)
print("\nPBW expansion of x left (x right x):")
for c in comps:
    print("  arity %d component: %s" % (c.arity, c.tensor))
assert pbw_reassemble(model, comps) == elt
print("reassembly recovers the element exactly")

report = check_relation(model, "delta", "left", "nui", 5)
print("\nnonunital infinitesimal relation with the left product:",
      "holds" if report.holds else "fails",
      "(%d pairs checked)" % report.checked_pairs)
