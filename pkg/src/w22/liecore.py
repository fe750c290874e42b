"""The Lie algebra W(2,2) over the rationals.

Basis: x(n) and I(n) for n in Z, plus two central generators C and C1.
Defining brackets:

    [x(n), x(m)] = (m - n) x(n+m) + delta(n, -m) (n^3 - n)/12 C
    [x(n), I(m)] = (m - n) I(n+m) + delta(n, -m) (n^3 - n)/12 C1
    [I(n), I(m)] = 0
    [ . , C] = [ . , C1] = 0

The grading is deg x(n) = deg I(n) = n and deg C = deg C1 = 0.

Elements are finite rational linear combinations of basis generators,
kept in the canonical term order C < C1 < I(n) (ascending n) < x(n)
(ascending n) with zero coefficients dropped.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rationals import rat_str

X_KIND = "X"
I_KIND = "I"
C_KIND = "C"
C1_KIND = "C1"

_KIND_RANK = {C_KIND: 0, C1_KIND: 1, I_KIND: 2, X_KIND: 3}


@dataclass(frozen=True)
class BasisElement:
    kind: str
    index: int | None = None

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError("unknown generator kind: %r" % (self.kind,))
        if self.kind in (C_KIND, C1_KIND):
            if self.index is not None:
                raise ValueError("central generators carry no index")
        elif not isinstance(self.index, int):
            raise ValueError("x/I generators need an integer index")

    @property
    def degree(self):
        return 0 if self.index is None else self.index

    @property
    def is_central(self):
        return self.kind in (C_KIND, C1_KIND)

    def __repr__(self):
        if self.kind == X_KIND:
            return "x(%d)" % self.index
        if self.kind == I_KIND:
            return "I(%d)" % self.index
        return "C" if self.kind == C_KIND else "C1"


def x(n):
    return BasisElement(X_KIND, n)


def I(n):  # noqa: E743  (mathematical name)
    return BasisElement(I_KIND, n)


C = BasisElement(C_KIND)
C1 = BasisElement(C1_KIND)


def term_key(b):
    """Total order on basis generators: C < C1 < I(n) < x(n), index ascending."""
    return (_KIND_RANK[b.kind], b.index or 0)


class LieElement:
    """A finite linear combination of basis generators."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for b, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[b] = clean.get(b, Fraction(0)) + coeff
                if not clean[b]:
                    del clean[b]
        self.terms = clean

    @classmethod
    def from_basis(cls, b, coeff=1):
        return cls({b: Fraction(coeff)})

    def items(self):
        return [(b, self.terms[b]) for b in sorted(self.terms, key=term_key)]

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, b):
        return self.terms.get(b, Fraction(0))

    def __add__(self, other):
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out.get(b, Fraction(0)) + c
        return LieElement(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        s = Fraction(scalar)
        return LieElement({b: s * c for b, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        if self.is_zero:
            return "0"
        return " + ".join("%s*%r" % (rat_str(c), b) for b, c in self.items())

    def to_json(self):
        out = []
        for b, c in self.items():
            rec = {"kind": b.kind}
            if b.index is not None:
                rec["index"] = b.index
            rec["coeff"] = rat_str(c)
            out.append(rec)
        return {"terms": out}

    @classmethod
    def from_json(cls, data):
        terms = {}
        for rec in data["terms"]:
            b = BasisElement(rec["kind"], rec.get("index"))
            terms[b] = Fraction(rec["coeff"])
        return cls(terms)


ZERO = LieElement()


def _central_term(kind, n, central):
    """delta(n, -m) (n^3 - n)/12 on the central generator, for m = -n."""
    coeff = Fraction(n**3 - n, 12)
    return {central: coeff} if coeff else {}


def pair_bracket(g, h):
    """Bracket of two basis generators, as a LieElement."""
    if g.is_central or h.is_central:
        return ZERO
    if g.kind == I_KIND and h.kind == I_KIND:
        return ZERO
    if g.kind == I_KIND:  # [I(n), x(m)] = -[x(m), I(n)]
        return -1 * pair_bracket(h, g)
    n, m = g.index, h.index
    terms = {}
    if h.kind == X_KIND:
        if m != n:
            terms[x(n + m)] = Fraction(m - n)
        if m == -n:
            terms.update(_central_term(X_KIND, n, C))
    else:
        if m != n:
            terms[I(n + m)] = Fraction(m - n)
        if m == -n:
            terms.update(_central_term(I_KIND, n, C1))
    return LieElement(terms)


def _as_element(a):
    if isinstance(a, BasisElement):
        return LieElement.from_basis(a)
    return a


def bracket(a, b, pair=pair_bracket):
    """Bilinear extension of the defining brackets."""
    a, b = _as_element(a), _as_element(b)
    out = ZERO
    for g, cg in a.terms.items():
        for h, ch in b.terms.items():
            out = out + (cg * ch) * pair(g, h)
    return out


def basis_window(window):
    """All basis generators with |index| <= window, plus C and C1."""
    gens = [C, C1]
    gens += [I(n) for n in range(-window, window + 1)]
    gens += [x(n) for n in range(-window, window + 1)]
    return gens


def jacobi_check(window, pair=pair_bracket):
    """Evaluate the Jacobi identity on every generator triple in the window.

    Returns the list of violating triples; empty means the structure
    constants are consistent on the window.  Pairwise brackets are
    tabulated once so the triple sweep only merges small term dicts.
    """
    gens = basis_window(window)
    table = {}
    for g in gens:
        for h in gens:
            table[(g, h)] = pair(g, h)

    def accumulate(out, g, inner, sign=1):
        # out += sign * [g, inner] using the table where possible; inner
        # brackets can leave the window, so fall back to pair() for those.
        for h, ch in inner.terms.items():
            elem = table.get((g, h))
            if elem is None:
                elem = pair(g, h)
            for k, ck in elem.terms.items():
                acc = out.get(k, Fraction(0)) + sign * ch * ck
                if acc:
                    out[k] = acc
                else:
                    out.pop(k, None)

    violations = []
    for a in gens:
        for b in gens:
            for c in gens:
                total = {}
                accumulate(total, a, table[(b, c)])
                accumulate(total, b, table[(c, a)])
                accumulate(total, c, table[(a, b)])
                if total:
                    violations.append((a, b, c))
    return violations


def vir_embed(e, n):
    """The Virasoro copy Vir[e]: the element x(n) + n*e*I(n).

    For every rational e these elements close under the bracket:
    [vir_embed(e,n), vir_embed(e,m)] = (m-n) vir_embed(e,n+m)
                                       + delta(n,-m) (n^3-n)/12 C.
    """
    e = Fraction(e)
    return LieElement({x(n): Fraction(1), I(n): n * e})
