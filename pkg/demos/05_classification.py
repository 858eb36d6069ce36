"""Reading a module's parameters off its action table.

A rank-one free action is pinned down by finitely many images of 1: the
degree-one entry gives lambda and alpha, exact division gives mu (loop) or
beta (block, q = -1).  The derivation then re-verifies every entry against
the closed form and every bracket constraint the box supports, so a table
that is NOT one of the families is reported with the identity it breaks.

Two modules are isomorphic exactly when their tables derive equal
parameter tuples.
"""

from cartanfree import (
    IndexBox,
    L,
    LOOP,
    OmegaLoop,
    build_action_table,
    derive_parameters,
    isomorphism_classify,
    parse_polynomial,
)

box = IndexBox((-2, 2), (-2, 2))

table = build_action_table(OmegaLoop(2, 3, 2), box)
print("round trip:", derive_parameters(table).summary())

# Perturbing one entry breaks an exact identity and is caught:
broken = build_action_table(OmegaLoop(2, 3, 2), box)
broken.entries[L(0, 1)] = parse_polynomial("3/2*t + 5")
print("\nperturbed :", derive_parameters(broken).summary())

# Isomorphism classification = equality of derived parameters.
a = build_action_table(OmegaLoop(2, 3, 1), box)
for other in (OmegaLoop(2, 3, 1), OmegaLoop(2, 4, 1), OmegaLoop(2, 3, 2)):
    b = build_action_table(other, box)
    print(f"\nvs {other.describe():24s}:", isomorphism_classify(a, b).summary())
