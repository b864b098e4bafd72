"""Primality and reality engine for q-factorization graphs (type A).

The central predicate decides, for a three-vertex alternating line, whether
the cut isolating one end is a simple tensor product.  It is implemented
twice: once through reducibility-set membership (the criterion's native
form) and once through an equivalent case-split system of inequalities in
the string parameters, kept solely for differential testing.

Verdicts are three-valued and every verdict carries a certificate listing
the rules that produced it.  The rule set is sound but deliberately
incomplete: graphs outside its reach come back "unknown".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dynkin import DynkinA, Interval
from .drinfeld import KRFactor, dual
from .graph import QFactGraph, classify, ALTERNATING_LINE3
from .redsets import minimal_window, r_set, string_parameter

PRIME = "prime"
NOT_PRIME = "not_prime"
REAL = "real"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class AltLineConfig:
    """An alternating three-vertex line, normalized for the cut test.

    The middle vertex carries both arrows; `middle_is_source` records the
    original orientation (the cut test itself is orientation-blind, since
    reversing all arrows negates every exponent and leaves the labels and
    the criterion's quantities unchanged).  `iso_label` is the exponent gap
    m on the arrow joining the middle to the end being isolated and
    `other_label` the gap m' on the remaining arrow.
    """

    diagram: DynkinA
    iso_color: int
    iso_weight: int
    iso_label: int
    middle_color: int
    middle_weight: int
    other_color: int
    other_weight: int
    other_label: int
    middle_is_source: bool = True

    def validate(self) -> None:
        dg = self.diagram
        for c in (self.iso_color, self.middle_color, self.other_color):
            dg.check_node(c)
        if not r_set(dg, self.iso_color, self.iso_weight,
                     self.middle_color, self.middle_weight).contains_signed(self.iso_label):
            raise ValueError(f"label {self.iso_label} is not an admissible arrow gap "
                             f"for the isolated end")
        if not r_set(dg, self.middle_color, self.middle_weight,
                     self.other_color, self.other_weight).contains_signed(self.other_label):
            raise ValueError(f"label {self.other_label} is not an admissible arrow gap "
                             f"for the other end")
        ends_gap = self.iso_label - self.other_label
        if r_set(dg, self.iso_color, self.iso_weight,
                 self.other_color, self.other_weight).member(ends_gap):
            raise ValueError("end vertices are adjacent; the line is not alternating")

    def params_json(self) -> dict:
        return {
            "isolated": {"color": self.iso_color, "weight": self.iso_weight,
                         "label": self.iso_label},
            "middle": {"color": self.middle_color, "weight": self.middle_weight},
            "other": {"color": self.other_color, "weight": self.other_weight,
                      "label": self.other_label},
            "middle_is_source": self.middle_is_source,
        }


@dataclass(frozen=True)
class CaseParams:
    """String parameters and minimal window attached to a configuration."""

    p: int
    p_prime: int
    p_plus: int
    p_minus: int
    window: Interval
    h_check: int


def case_parameters(cfg: AltLineConfig) -> CaseParams:
    """Solve for the string parameters of both arrows and the sign-split pair.

    The pair (p_plus, p_minus) rewrites the gap m - m' in both signs:
    m - m' = r + s' + d(i, j') - 2 p_plus and the negated identity for
    p_minus.  Both identities are checked exactly.
    """
    dg = cfg.diagram
    i, r, m = cfg.iso_color, cfg.iso_weight, cfg.iso_label
    j, s = cfg.middle_color, cfg.middle_weight
    jp, sp, mp = cfg.other_color, cfg.other_weight, cfg.other_label
    p = string_parameter(dg, i, r, j, s, m)
    pp = string_parameter(dg, j, s, jp, sp, mp)
    if p is None or pp is None:
        raise ValueError("arrow labels are outside the unrestricted reducibility sets")
    p_plus = sp - pp + p + dg.hull_distance(i, j, jp)
    p_minus = r - p + pp + dg.hull_distance(j, jp, i)
    base = r + sp + dg.distance(i, jp)
    if m - mp != base - 2 * p_plus or mp - m != base - 2 * p_minus:
        raise AssertionError("sign-split identities violated")
    window = minimal_window(dg, i, r, j, s, m)
    assert window is not None
    return CaseParams(p, pp, p_plus, p_minus, window, window.dual_coxeter())


def _cut_window(cfg: AltLineConfig) -> Interval:
    window = minimal_window(cfg.diagram, cfg.iso_color, cfg.iso_weight,
                            cfg.middle_color, cfg.middle_weight, cfg.iso_label)
    if window is None:
        raise ValueError("isolating label is outside the unrestricted reducibility set")
    return window


def cut_general_conditions(cfg: AltLineConfig) -> bool:
    """The three window-membership conditions of the cut-simplicity test."""
    dg = cfg.diagram
    window = _cut_window(cfg)
    jp, sp, mp = cfg.other_color, cfg.other_weight, cfg.other_label
    if jp not in window:
        return False
    if not r_set(dg, cfg.middle_color, cfg.middle_weight, jp, sp,
                 window).contains_signed(mp):
        return False
    gap = cfg.iso_label - mp - window.dual_coxeter()
    return r_set(dg, window.reflect(cfg.iso_color), cfg.iso_weight, jp, sp,
                 window).member(gap)


def cut_weight_drop_condition(cfg: AltLineConfig) -> bool:
    """The extra condition for isolated weight r > 1 (vacuous at r = 1)."""
    r = cfg.iso_weight
    if r == 1:
        return True
    window = _cut_window(cfg)
    return not r_set(cfg.diagram, cfg.iso_color, r - 1, cfg.other_color,
                     cfg.other_weight, window).contains_signed(
                         cfg.iso_label - cfg.other_label + 1)


def alt_line_cut_simple(cfg: AltLineConfig) -> bool:
    """Is the tensor product isolating the i-end of the alternating line simple?

    With J the minimal window making the isolating arrow's label admissible,
    the cut is simple exactly when all of the following hold: the other end's
    color lies in J; its label stays admissible over J; |m - m' - h| lies in
    the J-set of the reflected isolated color against the other end (h the
    dual Coxeter number of J); and, for isolated weight r > 1, m - m' + 1 is
    not in the J-set at weight r - 1.  A True value means the three-vertex
    graph is not prime.
    """
    cfg.validate()
    return cut_general_conditions(cfg) and cut_weight_drop_condition(cfg)


def alt_line_conditions_ineq(cfg: AltLineConfig) -> bool:
    """Same predicate as alt_line_cut_simple via the string-parameter system.

    Exists solely for differential testing.  The case split follows the sign
    of p: for p <= 0 the window widens the hull by -p on each side and the
    conditions become -p' <= -p - d(j', [i,j]), the shifted parameter
    r + p' - 1 landing in [p + d(j', [i,j]), min(r, s')), and r <= s'; for
    p > 0 they become j' in [i,j], p' >= 0, r - p + p' - 1 in [0, min(r, s')),
    and (r <= s' or p != p').
    """
    cfg.validate()
    dg = cfg.diagram
    i, r = cfg.iso_color, cfg.iso_weight
    j, s = cfg.middle_color, cfg.middle_weight
    jp, sp = cfg.other_color, cfg.other_weight
    p = string_parameter(dg, i, r, j, s, cfg.iso_label)
    pp = string_parameter(dg, j, s, jp, sp, cfg.other_label)
    if p is None or pp is None:
        raise ValueError("arrow labels are outside the unrestricted reducibility sets")
    hull = Interval.hull(i, j)
    offset = hull.distance_to(jp)
    if p <= 0:
        window = Interval(hull.lo + p, hull.hi - p)
        if jp not in window:
            return False
        if -pp > -p - offset:
            return False
        shifted = r + pp - 1
        if not (p + offset <= shifted < min(r, sp)):
            return False
        return r <= sp
    if jp not in hull:
        return False
    if pp < 0:
        return False
    shifted = r - p + pp - 1
    if not (0 <= shifted < min(r, sp)):
        return False
    return r <= sp or p != pp


def extra_condition_uniform(cfg: AltLineConfig) -> bool:
    """Third rewriting of the weight-drop condition: m + r <= m' + s' + d(i, j')."""
    dg = cfg.diagram
    return (cfg.iso_label + cfg.iso_weight
            <= cfg.other_label + cfg.other_weight
            + dg.distance(cfg.iso_color, cfg.other_color))


def dual_pair_simple(w1: KRFactor, w2: KRFactor, diagram: DynkinA) -> bool:
    """Is (dual of w1) tensor w2 simple over the whole diagram?"""
    d = dual(w1, diagram)
    gap = d.exponent - w2.exponent
    return not r_set(diagram, d.color, w1.weight, w2.color, w2.weight).member(gap)


def c3aline_config(diagram: DynkinA, i: int, r: int, j: int, s: int,
                   m: int) -> AltLineConfig:
    """Symmetric alternating line with both ends equal to (i, r) at gap m.

    This is the configuration of one factor tensored against itself times a
    linked (j, s) factor; the cut test on it is always simple.
    """
    if not r_set(diagram, i, r, j, s).contains_signed(m):
        raise ValueError(f"gap {m} not admissible for colors ({i}, {j}) weights ({r}, {s})")
    return AltLineConfig(diagram, i, r, m, j, s, i, r, m)


# -- verdicts ---------------------------------------------------------------

@dataclass(frozen=True)
class CertStep:
    rule: str
    cites: str
    params: dict

    def to_json(self) -> dict:
        return {"rule": self.rule, "cites": self.cites, "params": self.params}


@dataclass
class Verdict:
    primality: str = UNKNOWN
    reality: str = UNKNOWN
    certificate: list[CertStep] = field(default_factory=list)

    def to_json(self, trace: bool = False) -> dict:
        out = {"primality": self.primality, "reality": self.reality}
        if trace:
            out["certificate"] = [step.to_json() for step in self.certificate]
        return out


def _alt_configs(g: QFactGraph, middle: int, iso: int, other: int) -> AltLineConfig:
    """Cut configuration for the induced alternating triple of g."""
    m = g.arrow_between(middle, iso)
    mp = g.arrow_between(middle, other)
    source = True
    if m is None:
        m = g.arrow_between(iso, middle)
        mp = g.arrow_between(other, middle)
        source = False
    if m is None or mp is None:
        raise ValueError("vertices do not form an alternating line around the middle")
    vm, vi, vo = g.vertices[middle], g.vertices[iso], g.vertices[other]
    return AltLineConfig(g.diagram, vi.color, vi.weight, m,
                         vm.color, vm.weight,
                         vo.color, vo.weight, mp,
                         middle_is_source=source)


def _vertex_params(g: QFactGraph, ids) -> list[str]:
    return [g.vertices[v].label() for v in ids]


def is_prime(g: QFactGraph, _memo: dict | None = None) -> Verdict:
    """Three-valued primality verdict with a rule-by-rule certificate.

    Rules are tried in order; the first decisive one wins.  Trees recurse
    into proper connected subgraphs, so the verdict is never "prime" while
    any sub-tree is decided non-prime.
    """
    if not g.vertices:
        raise ValueError("cannot decide primality of an empty graph")
    memo = _memo if _memo is not None else {}
    key = g.canonical_key()
    if key in memo:
        return memo[key]
    verdict = _is_prime_uncached(g, memo)
    memo[key] = verdict
    return verdict


def _is_prime_uncached(g: QFactGraph, memo: dict) -> Verdict:
    steps: list[CertStep] = []
    comps = g.components()
    if len(comps) > 1:
        steps.append(CertStep(
            "disconnected", "a prime module has a connected q-factorization graph",
            {"components": [_vertex_params(g, c) for c in comps]}))
        return Verdict(NOT_PRIME, certificate=steps)
    if len(g) == 1:
        steps.append(CertStep(
            "singleton", "a single Kirillov-Reshetikhin factor admits no "
            "nontrivial dissociate splitting", {"vertex": g.vertices[0].label()}))
        return Verdict(PRIME, certificate=steps)
    if len(g) == 2:
        steps.append(CertStep(
            "two_vertex", "derived rule: any splitting separates the two linked "
            "factors, whose ordered tensor product is reducible by the arrow",
            {"epsilon": g.arrows[0].epsilon}))
        return Verdict(PRIME, certificate=steps)
    if g.is_totally_ordered():
        steps.append(CertStep(
            "totally_ordered", "totally ordered q-factorization graphs are prime "
            "in type A", {}))
        return Verdict(PRIME, certificate=steps)
    shape = classify(g)
    if shape.tag == ALTERNATING_LINE3:
        e1, mid, e2 = shape.line_order
        for iso, other in ((e1, e2), (e2, e1)):
            cfg = _alt_configs(g, mid, iso, other)
            if alt_line_cut_simple(cfg):
                steps.append(CertStep(
                    "alt_line_cut", "three-vertex alternating line: the cut "
                    "isolating one end is a simple tensor product",
                    {"isolated": g.vertices[iso].label(), "config": cfg.params_json()}))
                return Verdict(NOT_PRIME, certificate=steps)
        steps.append(CertStep(
            "alt_line_prime", "three-vertex alternating line: neither endpoint "
            "cut is a simple tensor product, and this criterion is exact",
            {"ends": _vertex_params(g, (e1, e2))}))
        return Verdict(PRIME, certificate=steps)
    if not g.is_tree():
        steps.append(CertStep(
            "inconclusive", "no implemented rule decides graphs with cycles", {}))
        return Verdict(UNKNOWN, certificate=steps)
    sub_not_prime = _tree_subgraph_not_prime(g, memo)
    if sub_not_prime is not None:
        steps.append(CertStep(
            "subgraph_not_prime", "every proper connected subgraph of a prime "
            "tree is prime; a non-prime subgraph refutes primality",
            {"subgraph": [v.label() for v in sub_not_prime.vertices]}))
        return Verdict(NOT_PRIME, certificate=steps)
    if _tree_dual_pairs_simple(g):
        steps.append(CertStep(
            "dual_pairs_simple", "a tree is prime when the dual-pair tensor "
            "product of every non-adjacent vertex pair is simple (both orders "
            "checked)", {}))
        return Verdict(PRIME, certificate=steps)
    witness = _tree_cut_witness(g)
    if witness is not None:
        edge, wit, iso = witness
        steps.append(CertStep(
            "cut_witness", "a tree edge cut splits the module once a neighbor "
            "witness makes the induced three-factor tensor product simple",
            {"cut": _vertex_params(g, edge), "witness": g.vertices[wit].label(),
             "isolated": g.vertices[iso].label()}))
        return Verdict(NOT_PRIME, certificate=steps)
    steps.append(CertStep("inconclusive", "no implemented rule applies", {}))
    return Verdict(UNKNOWN, certificate=steps)


def _tree_subgraph_not_prime(g: QFactGraph, memo: dict) -> QFactGraph | None:
    for size in range(2, len(g)):
        for sub in g.connected_subgraphs(size):
            if is_prime(sub, memo).primality == NOT_PRIME:
                return sub
    return None


def _tree_dual_pairs_simple(g: QFactGraph) -> bool:
    n = len(g.vertices)
    for u in range(n):
        for v in range(u + 1, n):
            if g.adjacent(u, v):
                continue
            wu, wv = g.vertices[u], g.vertices[v]
            if not (dual_pair_simple(wu, wv, g.diagram)
                    and dual_pair_simple(wv, wu, g.diagram)):
                return False
    return True


def _tree_cut_witness(g: QFactGraph):
    """Search every tree-edge cut for a neighbor witness making it simple.

    For the cut arrow (u, v): a witness is either another out-neighbor w of u
    (isolating v across the triple w <- u -> v) or another in-neighbor w of v
    (isolating u across u -> v <- w).  Triangle triples are skipped: they are
    totally ordered, hence prime, and their cuts are never simple.
    """
    for a in g.arrows:
        u, v = a.tail, a.head
        for w in g.out_neighbors(u):
            if w == v or g.adjacent(w, v):
                continue
            if alt_line_cut_simple(_alt_configs(g, u, v, w)):
                return ((u, v), w, v)
        for w in g.in_neighbors(v):
            if w == u or g.adjacent(w, u):
                continue
            if alt_line_cut_simple(_alt_configs(g, v, u, w)):
                return ((u, v), w, u)
    return None


def is_real(g: QFactGraph) -> Verdict:
    """Reality verdict: trees are real in type A; everything else is unknown."""
    if not g.vertices:
        raise ValueError("cannot decide reality of an empty graph")
    steps: list[CertStep] = []
    if g.is_tree():
        steps.append(CertStep(
            "tree_real", "a q-factorization graph afforded by a tree is real "
            "in type A", {}))
        return Verdict(reality=REAL, certificate=steps)
    steps.append(CertStep(
        "inconclusive", "no reality rule applies to graphs that are not trees", {}))
    return Verdict(reality=UNKNOWN, certificate=steps)


def decide(g: QFactGraph) -> Verdict:
    """Combined primality and reality verdict with a merged certificate."""
    p = is_prime(g)
    r = is_real(g)
    return Verdict(p.primality, r.reality, p.certificate + r.certificate)
