"""Centers of the Block-type algebras, and their embedded Virasoro copy.

The center of the full Block-type algebra is spanned by C, plus L(0,-q)
exactly when -q is a positive integer.  Rescaling the zero-row generators
by 1/q (and the central element by 1/q^2, the unique scaling matching the
cubic cocycle) reproduces the Virasoro relations on the nose.
"""

from cartanfree import (
    BlockHat,
    IndexBox,
    center_report,
    scalar,
    virasoro_embedding_check,
)

box = IndexBox((-4, 4), (0, 4))
for q_text in ("-1", "-3", "1/2", "2"):
    q = scalar(q_text)
    print(center_report(BlockHat(q), box).summary())
    print("   ", virasoro_embedding_check(q, IndexBox((-4, 4))).summary())
