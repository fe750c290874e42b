"""Intermediate-series weight modules with trivial I-action.

Three families over the index lattice Z, each with one-dimensional weight
spaces spanned by v_i and with I(n), C, C1 acting as zero:

  Aab(a, b):  x(m) v_i = (a + i + b m) v_{m+i}
  Aa(a):      x(m) v_i = (i + m) v_{m+i}   (i != 0),
              x(m) v_0 = m (m + a) v_m
  Ba(a):      x(m) v_i = i v_{m+i}         (i != -m),
              x(m) v_{-m} = -m (m + a) v_0

A ModuleSpec may mask an index set; masked indices are excluded from the
module (sources give zero, flows into masked targets are dropped).  The
simple subquotient of Aab(0, 1) -- everything off the v_0 line -- is the
masked table returned by ``simple_subquotient``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .liecore import BasisElement, bracket, basis_window
from .rationals import rat_str

FAMILIES = ("Aab", "Aa", "Ba")


@dataclass(frozen=True)
class ModuleSpec:
    family: str
    a: Fraction
    b: Fraction | None = None
    masked: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r (want one of %s)" % (self.family, ", ".join(FAMILIES)))
        object.__setattr__(self, "a", Fraction(self.a))
        if self.family == "Aab":
            if self.b is None:
                raise ValueError("family Aab needs both a and b")
            object.__setattr__(self, "b", Fraction(self.b))
        elif self.b is not None:
            raise ValueError("family %s takes no b parameter" % self.family)
        object.__setattr__(self, "masked", frozenset(self.masked))


def simple_subquotient():
    """The simple subquotient of Aab(0, 1): indices != 0, same action."""
    return ModuleSpec("Aab", 0, 1, masked=frozenset([0]))


def coefficient(spec, m, i):
    """Scalar in x(m) v_i = coefficient * v_{m+i}."""
    if i in spec.masked or (m + i) in spec.masked:
        return Fraction(0)
    if spec.family == "Aab":
        return spec.a + i + spec.b * m
    if spec.family == "Aa":
        if i != 0:
            return Fraction(i + m)
        return Fraction(m) * (m + spec.a)
    # Ba
    if i != -m:
        return Fraction(i)
    return -Fraction(m) * (m + spec.a)


def act(spec, gen, vec):
    """Apply one generator to an indexed vector {index: coeff}.

    I(n), C and C1 act as zero on every family.
    """
    if isinstance(gen, int):
        raise TypeError("gen must be a BasisElement; index maps are the vectors")
    if gen.kind != "X":
        return {}
    out = {}
    for i, coeff in vec.items():
        if i in spec.masked:
            continue
        c = coefficient(spec, gen.index, i)
        if c and coeff:
            j = gen.index + i
            out[j] = out.get(j, Fraction(0)) + c * coeff
    return {j: c for j, c in out.items() if c}


def act_element(spec, elem, vec):
    """Linear extension of ``act`` to LieElements."""
    out = {}
    for g, cg in elem.terms.items():
        for j, c in act(spec, g, vec).items():
            out[j] = out.get(j, Fraction(0)) + cg * c
    return {j: c for j, c in out.items() if c}


def _vec_sub(u, v):
    out = dict(u)
    for j, c in v.items():
        out[j] = out.get(j, Fraction(0)) - c
    return {j: c for j, c in out.items() if c}


def bracket_compatibility_check(spec, window):
    """Check g(h v_i) - h(g v_i) = [g,h] v_i on the window, exactly.

    Runs over all generator pairs with |index| <= window (plus C, C1) and
    all seeds |i| <= window, discarding any check whose intermediate
    indices would leave [-3*window, 3*window].  Returns violation triples
    (g, h, i); empty means the table is a Lie module on the window.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    gens = basis_window(window)
    bound = 3 * window
    violations = []
    for g in gens:
        for h in gens:
            com = bracket(g, h)
            for i in range(-window, window + 1):
                mids = [i + (g.index or 0), i + (h.index or 0)]
                if any(abs(t) > bound for t in mids):
                    continue
                v = {i: Fraction(1)}
                lhs = _vec_sub(act(spec, g, act(spec, h, v)), act(spec, h, act(spec, g, v)))
                rhs = act_element(spec, com, v)
                if _vec_sub(lhs, rhs):
                    violations.append((g, h, i))
    return violations


@dataclass
class ProbeReport:
    spec: ModuleSpec
    window: int
    verdict: str
    proper_invariant_sets: list  # sorted index lists, distinct proper closures
    reachable: dict  # seed -> sorted reachable indices

    def to_json(self):
        return {
            "family": self.spec.family,
            "a": rat_str(self.spec.a),
            "b": None if self.spec.b is None else rat_str(self.spec.b),
            "window": self.window,
            "verdict": self.verdict,
            "candidate_submodules": [list(s) for s in self.proper_invariant_sets],
        }


def simplicity_probe(spec, window):
    """Reachability of every windowed seed under windowed generators.

    From v_i the generators x(m), |m| <= window, reach v_{i+m} whenever the
    action coefficient is nonzero and |i+m| <= window.  If every seed
    reaches the whole window the verdict is
    "no-proper-invariant-window-subspace"; otherwise the distinct proper
    closures are reported as candidate submodules.  Window truncation can
    only shrink closures, so a "candidate-submodule" verdict is a hint,
    not a proof of reducibility.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    indices = [i for i in range(-window, window + 1) if i not in spec.masked]
    index_set = set(indices)
    reach = {}
    for seed in indices:
        seen = {seed}
        frontier = [seed]
        while frontier:
            cur = frontier.pop()
            for m in range(-window, window + 1):
                j = cur + m
                if j in seen or j not in index_set:
                    continue
                if coefficient(spec, m, cur):
                    seen.add(j)
                    frontier.append(j)
        reach[seed] = sorted(seen)
    proper = []
    for seed in indices:
        if len(reach[seed]) < len(indices) and reach[seed] not in proper:
            proper.append(reach[seed])
    verdict = (
        "no-proper-invariant-window-subspace" if not proper else "candidate-submodule"
    )
    return ProbeReport(
        spec=spec,
        window=window,
        verdict=verdict,
        proper_invariant_sets=proper,
        reachable=reach,
    )


def action_table_rows(spec, window):
    """Action-table rows (generator kind, generator index, source, coeff).

    Covers x-generators with |m| <= window on sources |i| <= window; the
    I-rows are omitted since every I(n) acts as zero.  Rows with zero
    coefficient are kept so the table shape is predictable.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    rows = []
    for m in range(-window, window + 1):
        for i in range(-window, window + 1):
            if i in spec.masked:
                continue
            rows.append(("X", m, i, coefficient(spec, m, i)))
    return rows
