"""Probing simplicity by span closure inside a finite window.

A probe closes the span of a seed vector under all generators in a box,
keeping the part of the image span that stays inside a degree window.
Filling the window is affirmative evidence of simplicity; a proper closure
that matches the zero-constant-term slice (and survives an independent
invariance sweep) is a certified proper submodule.

The dividing line the probes exhibit: the loop family is simple exactly
when alpha != 0, and the Block families exactly when alpha != 0 or (at
q = -1) beta != 0.
"""

from cartanfree import (
    IndexBox,
    OmegaBlock,
    OmegaBlockHV,
    OmegaLoop,
    ProbeConfig,
    simplicity_probe,
    submodule_invariance_check,
    scalar,
)

cfg_loop = ProbeConfig(box=IndexBox((-2, 2), (-2, 2)), max_degree=4)
cfg_block = ProbeConfig(box=IndexBox((-2, 2), (0, 2)), max_degree=4)

for spec, cfg in [
    (OmegaLoop(2, 3, 1), cfg_loop),       # alpha != 0: fills
    (OmegaLoop(2, 3, 0), cfg_loop),       # alpha  = 0: t-multiples invariant
    (OmegaBlock(scalar("3/2"), 1, 1), cfg_block),
    (OmegaBlock(scalar("3/2"), 1, 0), cfg_block),
    (OmegaBlockHV(1, 0, 2), cfg_block),   # alpha = 0 rescued by beta != 0
    (OmegaBlockHV(1, 0, 0), cfg_block),   # everything zero: proper submodule
]:
    verdict = simplicity_probe(spec, cfg)
    print(f"{spec.describe():38s} -> {verdict.summary()}")

# The alpha = 0 invariant subspace is visible directly: every generator
# image of a t-multiple is again a t-multiple.
print()
print(submodule_invariance_check(OmegaLoop(2, 3, 0)).summary())
print(submodule_invariance_check(OmegaLoop(2, 3, 1)).summary())
