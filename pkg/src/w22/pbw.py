"""Normal ordering in the universal enveloping algebra, and the action of
ordered words on a highest-weight vector.

The fixed PBW order on factors is the canonical term order of the algebra:
central generators first, then all I(n) ascending in n, then all x(n)
ascending in n.  ``normal_order`` rewrites an arbitrary word into a
combination of ordered monomials by adjacent transpositions

    g h  ->  h g + [g, h]

applied to the leftmost out-of-order pair first.  Each swap strictly
reduces the inversion count or the word length, so the rewriting
terminates; the result is independent of the swap strategy (tested).

``act_on_highest`` evaluates a word or enveloping-algebra element on the
highest-weight vector v of the module with parameters (lambda, c, c0, c1):
x(0) v = lambda v, C v = c v, I(0) v = c0 v, C1 v = c1 v, and every
positive-index generator kills v.  Results live on PBW monomials in
strictly negative indices.
"""

from dataclasses import dataclass
from fractions import Fraction

from .liecore import (
    BasisElement,
    LieElement,
    bracket,
    term_key,
)
from .rationals import rat_str


def monomial_degree(mono):
    return sum(b.degree for b in mono)


def is_normal_ordered(word):
    keys = [term_key(b) for b in word]
    return all(keys[i] <= keys[i + 1] for i in range(len(keys) - 1))


def monomial_key(mono):
    return (monomial_degree(mono), tuple(term_key(b) for b in mono))


def monomial_to_json(mono):
    out = []
    for b in mono:
        rec = {"kind": b.kind}
        if b.index is not None:
            rec["index"] = b.index
        out.append(rec)
    return out


def monomial_from_json(data):
    return tuple(BasisElement(rec["kind"], rec.get("index")) for rec in data)


class UEAElement:
    """Linear combination of PBW monomials with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                mono = tuple(mono)
                clean[mono] = clean.get(mono, Fraction(0)) + coeff
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean

    def items(self):
        return [(m, self.terms[m]) for m in sorted(self.terms, key=monomial_key)]

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return UEAElement(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        s = Fraction(scalar)
        return UEAElement({m: s * c for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, UEAElement) and self.terms == other.terms

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for m, c in self.items():
            word = "*".join(repr(b) for b in m) if m else "1"
            parts.append("%s*%s" % (rat_str(c), word))
        return " + ".join(parts)

    def to_json(self):
        return {
            "terms": [
                {"monomial": monomial_to_json(m), "coeff": rat_str(c)}
                for m, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data):
        terms = {}
        for rec in data["terms"]:
            mono = monomial_from_json(rec["monomial"])
            terms[mono] = Fraction(rec["coeff"])
        return cls(terms)


def normal_order(word, pair=None):
    """Straighten a word of generators into ordered PBW monomials."""
    kwargs = {} if pair is None else {"pair": pair}
    result = {}
    stack = [(tuple(word), Fraction(1))]
    while stack:
        w, coeff = stack.pop()
        spot = None
        for i in range(len(w) - 1):
            if term_key(w[i]) > term_key(w[i + 1]):
                spot = i
                break
        if spot is None:
            result[w] = result.get(w, Fraction(0)) + coeff
            continue
        g, h = w[spot], w[spot + 1]
        stack.append((w[:spot] + (h, g) + w[spot + 2 :], coeff))
        for b, cb in bracket(g, h, **kwargs).terms.items():
            stack.append((w[:spot] + (b,) + w[spot + 2 :], coeff * cb))
    return UEAElement(result)


def multiply(u, v):
    """Product in the enveloping algebra, re-straightened to PBW form."""
    out = UEAElement()
    for m1, c1 in u.terms.items():
        for m2, c2 in v.terms.items():
            out = out + (c1 * c2) * normal_order(m1 + m2)
    return out


@dataclass(frozen=True)
class HighestWeightParams:
    lam: Fraction
    c: Fraction
    c0: Fraction
    c1: Fraction

    def __post_init__(self):
        for name in ("lam", "c", "c0", "c1"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def to_json(self):
        return {
            "lambda": rat_str(self.lam),
            "c": rat_str(self.c),
            "c0": rat_str(self.c0),
            "c1": rat_str(self.c1),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            Fraction(data["lambda"]),
            Fraction(data["c"]),
            Fraction(data["c0"]),
            Fraction(data["c1"]),
        )


class HighestWeightActor:
    """Applies generators to combinations of negative PBW monomials times v.

    States are dicts mapping ordered monomials in strictly negative
    indices to Fractions; the empty monomial is v itself.
    """

    def __init__(self, params):
        self.p = params
        self._cache = {}

    def _scalar(self, g):
        if g.kind == "C":
            return self.p.c
        if g.kind == "C1":
            return self.p.c1
        if g.kind == "X":
            return self.p.lam
        return self.p.c0

    def apply_generator(self, g, mono):
        key = (g, mono)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if g.is_central:
            out = {mono: self._scalar(g)}
        elif not mono:
            if g.index > 0:
                out = {}
            elif g.index == 0:
                out = {(): self._scalar(g)}
            else:
                out = {(g,): Fraction(1)}
        elif g.index is not None and g.index < 0 and term_key(g) <= term_key(mono[0]):
            out = {(g,) + mono: Fraction(1)}
        else:
            head, rest = mono[0], mono[1:]
            out = {}
            for m2, c2 in self.apply_generator(g, rest).items():
                for m3, c3 in self.apply_generator(head, m2).items():
                    out[m3] = out.get(m3, Fraction(0)) + c2 * c3
            for b, cb in bracket(g, head).terms.items():
                for m2, c2 in self.apply_generator(b, rest).items():
                    out[m2] = out.get(m2, Fraction(0)) + cb * c2
            out = {m: c for m, c in out.items() if c}
        self._cache[key] = out
        return out

    def apply_element(self, elem, state):
        """Apply a LieElement linearly to a state dict."""
        out = {}
        for g, cg in elem.terms.items():
            for mono, cm in state.items():
                for m2, c2 in self.apply_generator(g, mono).items():
                    out[m2] = out.get(m2, Fraction(0)) + cg * cm * c2
        return {m: c for m, c in out.items() if c}

    def apply_basis(self, g, state):
        out = {}
        for mono, cm in state.items():
            for m2, c2 in self.apply_generator(g, mono).items():
                out[m2] = out.get(m2, Fraction(0)) + cm * c2
        return {m: c for m, c in out.items() if c}

    def apply_word(self, factors, coeff=Fraction(1)):
        state = {(): Fraction(coeff)}
        for g in reversed(tuple(factors)):
            state = self.apply_basis(g, state)
            if not state:
                return {}
        return state


def act_on_highest(u, params):
    """Evaluate a word or UEAElement on the highest-weight vector.

    Returns a UEAElement supported on monomials in strictly negative
    indices (the coefficients of the resulting module vector).
    """
    if not isinstance(u, UEAElement):
        u = normal_order(u)
    actor = HighestWeightActor(params)
    out = {}
    for mono, coeff in u.terms.items():
        for m2, c2 in actor.apply_word(mono, coeff).items():
            out[m2] = out.get(m2, Fraction(0)) + c2
    return UEAElement(out)
