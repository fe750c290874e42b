"""Weight modules with one-dimensional weight spaces, on a finite window."""

from fractions import Fraction as F

from w22 import (
    ModuleSpec,
    act,
    action_table_rows,
    bracket_compatibility_check,
    simple_subquotient,
    simplicity_probe,
    x,
)

def label(spec):
    args = [str(spec.a)] + ([str(spec.b)] if spec.b is not None else [])
    return "%s(%s)" % (spec.family, ",".join(args))


# Three families, one table each: x(m) sends v_i to coefficient * v_{m+i},
# I(m), C and C1 act as zero.
print("== coefficient tables (window 2) ==")
for spec in (
    ModuleSpec("Aab", F(1, 2), F(1, 3)),
    ModuleSpec("Aa", F(1)),
    ModuleSpec("Ba", F(0)),
):
    rows = action_table_rows(spec, 2)
    cells = ["x(%d)v_%d=%sv_%d" % (m, i, c, m + i) for _k, m, i, c in rows if m == 1]
    print("%-12s %s" % (label(spec), "  ".join(cells)))

print()
print("== single actions ==")
print("Aab(1/2,0):  x(2) v_3  ->", act(ModuleSpec("Aab", F(1, 2), F(0)), x(2), {3: F(1)}))
print("Aa(1):       x(2) v_0  ->", act(ModuleSpec("Aa", F(1)), x(2), {0: F(1)}))
print("Ba(0):       x(1) v_-1 ->", act(ModuleSpec("Ba", F(0)), x(1), {-1: F(1)}))

print()
print("== module structure holds on the window ==")
for spec in (ModuleSpec("Aab", F(1, 2), F(1, 3)), ModuleSpec("Aa", F(1)), ModuleSpec("Ba", F(0))):
    violations = bracket_compatibility_check(spec, 4)
    print("%-12s violations: %d" % (label(spec), len(violations)))

# Reachability probe: which windowed lines can trap the action?  For
# generic (a, b) none can.  At (a, b) = (0, 1) the coefficient a + i + bm
# vanishes exactly when the target is v_0, so nothing ever reaches v_0 and
# its complement is invariant.  At (0, 0) the coefficient vanishes exactly
# on the source v_0, trapping the v_0 line itself.
print()
print("== simplicity probes (window 5) ==")
for a, b in ((F(1, 2), F(0)), (F(0), F(1)), (F(0), F(0))):
    report = simplicity_probe(ModuleSpec("Aab", a, b), 5)
    print(
        "Aab(%s,%s): %s %s"
        % (a, b, report.verdict, report.proper_invariant_sets or "")
    )

# Masking v_0 out of the (0, 1) family gives the simple windowed
# subquotient: the probe finds nothing left to trap.
print()
masked = simple_subquotient()
print("masked family: %s with v_%s removed" % (label(masked), set(masked.masked)))
print("probe:", simplicity_probe(masked, 5).verdict)
print("compatibility violations:", len(bracket_compatibility_check(masked, 3)))
