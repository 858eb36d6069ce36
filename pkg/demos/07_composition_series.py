"""The submodule chain of the alpha = 0 loop module, verified exactly.

At alpha = 0 the t-multiples form a proper submodule; the quotient is the
one-dimensional trivial module, and stripping a factor of t identifies the
submodule with the alpha = 1 member of the same family.  All three facts
are exact window checks.
"""

from cartanfree import (
    L,
    OmegaLoop,
    P_ONE,
    T,
    composition_series_check,
    scalar,
    strip_t,
)

report = composition_series_check(2, 3)
print(report.summary())

# The intertwiner in action: strip(x . (t*g)) = x . g across the two modules.
spec0, spec1 = OmegaLoop(2, 3, 0), OmegaLoop(2, 3, 1)
x = L(1, 1)
lhs = strip_t(spec0.act_basis(x, T))
rhs = spec1.act_basis(x, P_ONE)
print(f"strip({x} . t) = {lhs} = {x} . 1 in the alpha=1 module: {lhs == rhs}")

# Gaussian-rational parameters work the same way.
print(composition_series_check(scalar("2i"), scalar("1/2")).summary())
