"""The rank-one free module families acting on polynomials.

Each family lives on C[t] with the Cartan generator L(0,..,0) acting as
multiplication by t; one basis symbol moves a vector by an exact shift,
a linear factor, and a parameter scaling.  Action tables record the images
of 1 and serialize to JSON.
"""

from cartanfree import (
    C,
    IndexBox,
    L,
    OmegaBlock,
    OmegaBlockHV,
    OmegaLoop,
    OmegaVir,
    P_ONE,
    T,
    build_action_table,
    module_axiom_check,
    parse_polynomial,
    scalar,
)

loop = OmegaLoop(2, 3, 1)
print("loop family", loop.describe())
print("  L(1,1) . 1   =", loop.act_basis(L(1, 1), P_ONE))
print("  L(0,0) . f   =", loop.act_basis(L(0, 0), parse_polynomial("t^2 - 1")))
print("  C(5)   . f   =", loop.act_basis(C(5), T))

hv = OmegaBlockHV(1, 0, 2)
print("\nblock q=-1 family", hv.describe())
print("  L(3,1) . t   =", hv.act_basis(L(3, 1), T))
print("  L(1,2) . t   =", hv.act_basis(L(1, 2), T), "(rows i >= 2 annihilate)")

blk = OmegaBlock(scalar("3/2"), 1, 1)
print("\nblock q=3/2 family", blk.describe())
print("  L(2,0) . 1   =", blk.act_basis(L(2, 0), P_ONE))
print("  L(1,3) . f   =", blk.act_basis(L(1, 3), T), "(rows i >= 1 annihilate)")

vir = OmegaVir(1, 1)
print("\nvirasoro family", vir.describe())
print("  (L(1) - L(-1)) . 1 =", vir.act_basis(L(1), P_ONE) - vir.act_basis(L(-1), P_ONE))

# The commutator identity [x,y].f = x.(y.f) - y.(x.f) holds exactly for
# every pair in a box and every test vector:
report = module_axiom_check(loop, IndexBox((-2, 2), (-2, 2)))
print("\n" + report.summary())

# Action tables: the images of 1 over a box, as JSON.
table = build_action_table(OmegaLoop(2, 3, 2), IndexBox((-1, 1), (0, 1)))
print("\naction table:")
print(table.to_json())
