"""Highest-weight modules: bases, raising matrices, singular vectors.

The last section demonstrates the toolkit's handling of a genuine tension
between two ways of predicting reducibility, so read it to the end before
trusting either source alone.
"""

from fractions import Fraction as F

from w22 import (
    HighestWeightParams,
    character_dims,
    criterion_roots,
    criterion_value,
    find_singular,
    is_verma_irreducible,
    joint_kernel,
    level_basis,
    raising_matrix,
)

print("== graded dimensions ==")
print("level sizes 0..8:", character_dims(8))
print("level 2 basis:", [" ".join(map(str, m)) or "1" for m in level_basis(2)])

params = HighestWeightParams(F(7), F(11), F(2), F(5))
print()
print("== raising matrices at", params, "==")
print("x(1) from level 1:", raising_matrix(1, 1, params, "X"))
print("I(1) from level 1:", raising_matrix(1, 1, params, "I"))
print("x(2) from level 2:", raising_matrix(2, 2, params, "X"))

# A singular vector is a nonzero joint kernel element of all raising
# maps from one level.  c0 = 0 forces one at level 1 (namely I(-1) v).
print()
print("== singular vectors when c0 = 0 ==")
p0 = HighestWeightParams(F(2), F(0), F(0), F(7))
for report in find_singular(p0, 2):
    print("level %d: coords %s" % (report.level, report.vector.coords))

# Two independent sources of evidence about reducibility:
#
#   1. criterion_roots: the closed-form root list of the polynomial
#      (m^2 - 1)/12 c1 + 2 c0 over levels m = 1..max.
#   2. joint_kernel: direct exact kernels of the raising maps, computed
#      from the bracket convention this package implements.
#
# For c0 = 0 they agree.  Away from that line they disagree: under the
# brackets implemented here the kernels appear where
# (m^2 - 1)/12 c1 - 2 c0 = 0 (note the sign), which is the same locus
# only up to the orientation of the I-ladder.  The verdict object keeps
# both answers and flags any window where they differ, rather than
# silently preferring one.
print()
print("== closed form vs kernel evidence ==")
for c0, c1 in ((F(0), F(7)), (F(1), F(8)), (F(1), F(-8)), (F(2), F(6))):
    p = HighestWeightParams(F(3), F(1), c0, c1)
    roots = criterion_roots(p, 4)
    kernel_levels = [r.level for r in find_singular(p, 4)]
    marker = "" if bool(roots) == bool(kernel_levels) else "   <-- disagree"
    print(
        "c0=%2s c1=%2s: criterion value at m=2 is %5s, roots %s, kernels %s%s"
        % (c0, c1, criterion_value(2, c0, c1), roots, kernel_levels, marker)
    )

print()
print("== verdicts carry the disagreement flag ==")
for c0, c1 in ((F(0), F(7)), (F(1), F(8))):
    p = HighestWeightParams(F(3), F(1), c0, c1)
    print(is_verma_irreducible(p, 3).to_json())

print()
print("level-2 kernel at c1 = 8 c0:", joint_kernel(HighestWeightParams(F(5), F(3), F(1), F(8)), 2))
