"""Structure constants of the five algebra kinds, and the Jacobi sweep.

The bracket of two basis symbols expands exactly; jacobi_check then sweeps
antisymmetry over every unordered pair and the cyclic identity over every
unordered triple in a finite index box.
"""

from cartanfree import (
    Block,
    BlockHat,
    BlockTrunc,
    C,
    IndexBox,
    L,
    LOOP,
    VIRASORO,
    bracket_basis,
    jacobi_check,
    parse_element,
    scalar,
)

# Virasoro: [L_2, L_-2] picks up the central charge term (2^3 - 2)/12.
print("virasoro [L(2), L(-2)]   =", bracket_basis(VIRASORO, L(2), L(-2)))

# Loop algebra: the same central term rides on the Laurent index.
print("loop     [L(2,1), L(-2,0)] =", bracket_basis(LOOP, L(2, 1), L(-2, 0)))

# Block-type coefficient n(i+q) - m(j+q) can cancel:
print("block q=1 [L(1,0), L(2,1)] =", bracket_basis(Block(1), L(1, 0), L(2, 1)))

# Elements bracket bilinearly.
e1 = parse_element(LOOP, "L(1,1) + L(2,2)")
e2 = parse_element(LOOP, "L(0,1)")
print("loop     [L(1,1)+L(2,2), L(0,1)] =", e1.bracket(e2))

# In the derived algebra with -2q a positive integer, the symbol L(0,-2q)
# does not exist; the structure constants never produce it.
alg = Block(-1)
print("\nblock q=-1 excludes", alg.excluded)
print("[L(3,1), L(-3,1)] =", bracket_basis(alg, L(3, 1), L(-3, 1)), "(skips L(0,2))")

# Jacobi + antisymmetry sweeps, exact on every triple in the box.
for algebra, box in [
    (VIRASORO, IndexBox((-3, 3))),
    (LOOP, IndexBox((-2, 2), (-2, 2))),
    (BlockHat(scalar("3/2")), IndexBox((-2, 2), (0, 2))),
    (BlockTrunc(scalar(-1), 0, 1), IndexBox((-3, 3), (0, 1))),
]:
    print(jacobi_check(algebra, box).summary())
