"""Tour of the bracket engine: generators, identities, Virasoro copies.

Run as a script; every computation below is exact rational arithmetic.
"""

from fractions import Fraction

from w22 import C, I, LieElement, basis_window, bracket, jacobi_check, vir_embed, x


def show(label, element):
    print("%-28s %s" % (label, element))


print("== basic brackets ==")
show("[x(2), x(-2)] =", bracket(x(2), x(-2)))
show("[x(3), x(-3)] =", bracket(x(3), x(-3)))
show("[x(2), I(-2)] =", bracket(x(2), I(-2)))
show("[I(2), I(-2)] =", bracket(I(2), I(-2)))
show("[x(5), C] =", bracket(x(5), C))

# Antisymmetry is not an axiom of the implementation, it is a consequence
# of the structure constants; spot-check it on a small window.
print()
print("== antisymmetry spot check (|index| <= 3) ==")
gens = basis_window(3)
bad = [
    (g, h)
    for g in gens
    for h in gens
    if bracket(g, h) + bracket(h, g) != LieElement({})
]
print("pairs checked: %d, failures: %d" % (len(gens) ** 2, len(bad)))

print()
print("== Jacobi identity sweep ==")
for window in (2, 3, 4):
    violations = jacobi_check(window)
    print("window %d: %d violating triples" % (window, len(violations)))

# Each e gives an embedded Virasoro algebra spanned by x(n) + n e I(n)
# and C.  The C1-terms cancel in every bracket of two copies, so the
# central charge of the copy is the original C.
print()
print("== embedded Virasoro copies ==")
for e in (Fraction(0), Fraction(1), Fraction(-1, 2)):
    ok = True
    for n in range(-4, 5):
        for m in range(-4, 5):
            got = bracket(vir_embed(e, n), vir_embed(e, m))
            want = (m - n) * vir_embed(e, n + m)
            if m == -n:
                want = want + LieElement({C: Fraction(n**3 - n, 12)})
            ok = ok and got == want
    print("e = %6s: closure on |n|,|m| <= 4: %s" % (e, ok))

show("vir_embed(-1/2, 3) =", vir_embed(Fraction(-1, 2), 3))
