"""Exhaustive and randomized property sweeps.

These drive the package's cross-checks: the two forms of the cut-simplicity
test against each other, the always-simple symmetric configuration, the
closed two-element dominant set against the brute-force product, the
reducibility-set algebra against brute force, verdict invariance under the
two dualities, and merge-order independence of the q-string factorization.
The CLI `sweep` command and the acceptance tests both run through here.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .decision import (AltLineConfig, alt_line_conditions_ineq,
                       alt_line_cut_simple, c3aline_config, case_parameters,
                       cut_general_conditions, extra_condition_uniform,
                       is_prime, is_real)
from .drinfeld import DrinfeldPoly, KRFactor, expand_all, q_factorize
from .dynkin import DynkinA, Interval
from .graph import QFactGraph, build_graph, classify
from .qchar import LWeight, dominant_product_lweights, fundamental_qchar, socle_head
from .redsets import minimal_window, r_set, sl2_set, string_parameter


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    max_failures: int = 5

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        if len(self.failures) < self.max_failures:
            self.failures.append(message)

    def lines(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        out = [f"{status}: {self.name} ({self.checked} cases checked)"]
        out.extend(f"  counterexample: {f}" for f in self.failures)
        return out


def iter_linked_pairs(diagram: DynkinA, max_weight: int):
    """All (i, r, j, s, m) with m an admissible arrow gap between dissociate factors."""
    for i, j in itertools.product(diagram.nodes(), repeat=2):
        for r, s in itertools.product(range(1, max_weight + 1), repeat=2):
            gaps = r_set(diagram, i, r, j, s).sorted()
            for m in gaps:
                if i == j and sl2_set(r, s).contains_signed(m):
                    continue
                yield i, r, j, s, m


def iter_alt_line_configs(max_rank: int, max_weight: int):
    """All valid alternating-line configurations up to the given bounds."""
    for n in range(1, max_rank + 1):
        diagram = DynkinA(n)
        for i, r, j, s, m in iter_linked_pairs(diagram, max_weight):
            for jp in diagram.nodes():
                for sp in range(1, max_weight + 1):
                    for mp in r_set(diagram, j, s, jp, sp).sorted():
                        if j == jp and sl2_set(s, sp).contains_signed(mp):
                            continue
                        ends = r_set(diagram, i, r, jp, sp)
                        if ends.member(m - mp):
                            continue
                        if i == jp and sl2_set(r, sp).contains_signed(abs(m - mp)):
                            continue
                        yield AltLineConfig(diagram, i, r, m, j, s, jp, sp, mp)


def check_forms_agree(max_rank: int = 6, max_weight: int = 4) -> SweepResult:
    """Membership form == inequality form == uniform weight-drop rewriting."""
    result = SweepResult("forms-agree")
    for cfg in iter_alt_line_configs(max_rank, max_weight):
        result.checked += 1
        member_form = alt_line_cut_simple(cfg)
        ineq_form = alt_line_conditions_ineq(cfg)
        if member_form != ineq_form:
            result.fail(f"forms disagree ({member_form} vs {ineq_form}) "
                        f"on {cfg.params_json()} at rank {cfg.diagram.n}")
            continue
        general = cut_general_conditions(cfg)
        if member_form and not general:
            result.fail(f"cut simple without general conditions: {cfg.params_json()}")
        if general:
            if member_form != extra_condition_uniform(cfg):
                result.fail(f"uniform weight-drop rewriting disagrees "
                            f"on {cfg.params_json()} at rank {cfg.diagram.n}")
            _assert_sweep_bounds(cfg, result)
    return result


def _assert_sweep_bounds(cfg: AltLineConfig, result: SweepResult) -> None:
    """Bound assertions on the sign-split parameters under the general conditions."""
    params = case_parameters(cfg)
    r, sp = cfg.iso_weight, cfg.other_weight
    m, mp = cfg.iso_label, cfg.other_label
    floor = min(r, sp)
    if m >= mp and params.p_plus < floor:
        result.fail(f"p_plus bound fails on {cfg.params_json()}")
    if m <= mp and params.p_minus < floor:
        result.fail(f"p_minus bound fails on {cfg.params_json()}")
    if params.p <= 0 and m >= mp and params.p_plus > sp:
        result.fail(f"p_plus ceiling fails on {cfg.params_json()}")
    if params.p > 0:
        shifted = r - params.p + params.p_prime - 1
        if not 0 <= shifted < floor:
            result.fail(f"shifted-parameter window fails on {cfg.params_json()}")


def check_c3aline(max_rank: int = 6, max_weight: int = 4) -> SweepResult:
    """The symmetric both-ends-equal configuration always has a simple cut."""
    result = SweepResult("c3aline")
    for n in range(1, max_rank + 1):
        diagram = DynkinA(n)
        for i, r, j, s, m in iter_linked_pairs(diagram, max_weight):
            result.checked += 1
            cfg = c3aline_config(diagram, i, r, j, s, m)
            if not alt_line_cut_simple(cfg):
                result.fail(f"cut not simple for i={i} r={r} j={j} s={s} m={m} "
                            f"at rank {n}")
    return result


def check_dominant_pair(max_rank: int = 6) -> SweepResult:
    """Brute-force dominant set == closed two-element form, for fundamentals."""
    result = SweepResult("dominant-pair")
    for n in range(1, max_rank + 1):
        diagram = DynkinA(n)
        for i, j in itertools.product(diagram.nodes(), repeat=2):
            qchar_i = set(fundamental_qchar(diagram, i))
            for m in r_set(diagram, i, 1, j, 1).sorted():
                result.checked += 1
                dominant = dominant_product_lweights(diagram, i, j, m)
                sh = socle_head(diagram, i, j, m)
                expected = {sh.head_lweight(), sh.socle_lweight()}
                if dominant != frozenset(expected):
                    result.fail(f"dominant set mismatch n={n} i={i} j={j} m={m}")
                    continue
                if len(dominant) != 2:
                    result.fail(f"dominant set size {len(dominant)} n={n} i={i} "
                                f"j={j} m={m}")
                omega_jm_inv = LWeight.fundamental(j, m, -1)
                for weight in dominant:
                    if weight * omega_jm_inv not in qchar_i:
                        result.fail(f"dominant weight not of top-times-left form "
                                    f"n={n} i={i} j={j} m={m}")
    return result


def check_redsets_algebra(max_rank: int = 8, max_weight: int = 5) -> SweepResult:
    """Symmetry, parity, cardinality, extremes, monotonicity, minimal windows."""
    result = SweepResult("redsets-algebra")
    for n in range(1, max_rank + 1):
        diagram = DynkinA(n)
        for i, j, k in itertools.product(diagram.nodes(), repeat=3):
            result.checked += 1
            d_ij_k = diagram.hull_distance(i, j, k)
            d_kj_i = diagram.hull_distance(k, j, i)
            if d_ij_k + d_kj_i != diagram.distance(k, i):
                result.fail(f"hull-distance identity fails n={n} i={i} j={j} k={k}")
            if d_ij_k > min(diagram.distance(k, i), diagram.distance(k, j)):
                result.fail(f"hull-distance bound fails n={n} i={i} j={j} k={k}")
        windows = [Interval(a, b) for a in diagram.nodes() for b in diagram.nodes()
                   if a <= b]
        for i, j in itertools.product(diagram.nodes(), repeat=2):
            hull = Interval.hull(i, j)
            containing = [w for w in windows if w.contains_interval(hull)]
            for r, s in itertools.product(range(1, max_weight + 1), repeat=2):
                global_set = r_set(diagram, i, r, j, s)
                for window in containing:
                    result.checked += 1
                    rs = r_set(diagram, i, r, j, s, window)
                    if rs.elements != r_set(diagram, j, s, i, r, window).elements:
                        result.fail(f"symmetry fails {rs.params}")
                    if any((e - (r + s + diagram.distance(i, j))) % 2 for e in rs.elements):
                        result.fail(f"parity fails {rs.params}")
                    reach = window.boundary_distance(hull)
                    if len(rs) != min(r, s) + reach:
                        result.fail(f"cardinality fails {rs.params}")
                    top = r + s + diagram.distance(i, j) + 2 * reach
                    bottom = r + s + diagram.distance(i, j) - 2 * (min(r, s) - 1)
                    if rs.sorted() != tuple(range(bottom, top + 1, 2)):
                        result.fail(f"extremes/steps fail {rs.params}")
                    if not rs.elements <= global_set.elements:
                        result.fail(f"monotonicity into whole diagram fails {rs.params}")
                    for m in rs.elements:
                        p = string_parameter(diagram, i, r, j, s, m, window)
                        if p is None or r + s + diagram.distance(i, j) - 2 * p != m:
                            result.fail(f"string-parameter round trip fails "
                                        f"{rs.params} m={m}")
                for wa, wb in itertools.combinations(containing, 2):
                    small, big = (wa, wb) if wb.contains_interval(wa) else (wb, wa)
                    if big.contains_interval(small):
                        a_set = r_set(diagram, i, r, j, s, small).elements
                        b_set = r_set(diagram, i, r, j, s, big).elements
                        if not a_set <= b_set:
                            result.fail(f"monotonicity fails {i},{r},{j},{s} "
                                        f"{small} vs {big}")
                for m in global_set.sorted():
                    result.checked += 1
                    formula = minimal_window(diagram, i, r, j, s, m)
                    admissible = [w for w in containing
                                  if r_set(diagram, i, r, j, s, w).contains_signed(m)]
                    if formula is None or formula not in admissible:
                        result.fail(f"minimal window not admissible {i},{r},{j},{s} m={m}")
                        continue
                    if any(not w.contains_interval(formula) for w in admissible):
                        result.fail(f"minimal window not unique minimum "
                                    f"{i},{r},{j},{s} m={m}")
                    proper = [w for w in containing
                              if formula.contains_interval(w) and w != formula]
                    if any(r_set(diagram, i, r, j, s, w).contains_signed(m)
                           for w in proper):
                        result.fail(f"minimal window not minimal {i},{r},{j},{s} m={m}")
    return result


def random_tree_graph(rng: random.Random, max_rank: int = 5,
                      max_vertices: int = 5, max_weight: int = 3) -> QFactGraph:
    """A random q-factorization graph that is a tree, grown leaf by leaf."""
    n = rng.randint(1, max_rank)
    diagram = DynkinA(n)
    factors = [KRFactor(rng.randint(1, n), 0, rng.randint(1, max_weight))]
    graph = build_graph(factors, diagram)
    target = rng.randint(1, max_vertices)
    attempts = 0
    while len(factors) < target and attempts < 40:
        attempts += 1
        parent = rng.choice(factors)
        color = rng.randint(1, n)
        weight = rng.randint(1, max_weight)
        gaps = r_set(diagram, color, weight, parent.color, parent.weight).sorted()
        gap = rng.choice(gaps) * rng.choice((-1, 1))
        candidate = KRFactor(color, parent.exponent + gap, weight)
        trial = build_graph(factors + [candidate], diagram)
        if trial.was_refactorized or not trial.is_tree() or \
                len(trial) != len(factors) + 1:
            continue
        factors.append(candidate)
        graph = trial
    return graph


def check_duality(trials: int = 1000, seed: int = 2024, max_rank: int = 5,
                  max_vertices: int = 5, max_weight: int = 3) -> SweepResult:
    """Verdicts are invariant under arrow reversal and the diagram automorphism."""
    result = SweepResult("duality")
    rng = random.Random(seed)
    for _ in range(trials):
        g = random_tree_graph(rng, max_rank, max_vertices, max_weight)
        result.checked += 1
        primality = is_prime(g).primality
        reality = is_real(g).reality
        tag = classify(g).tag
        for label, h in (("arrow", g.arrow_dual()), ("color", g.color_dual())):
            if is_prime(h).primality != primality or is_real(h).reality != reality:
                result.fail(f"{label}-dual verdict differs for "
                            f"{[v.label() for v in g.vertices]} at rank {g.diagram.n}")
            if classify(h).tag != tag:
                result.fail(f"{label}-dual shape tag differs for "
                            f"{[v.label() for v in g.vertices]} at rank {g.diagram.n}")
    return result


def random_poly(rng: random.Random, max_rank: int = 5,
                max_roots: int = 10) -> tuple[DynkinA, DrinfeldPoly]:
    n = rng.randint(1, max_rank)
    count = rng.randint(1, max_roots)
    roots = [(rng.randint(1, n), rng.randint(-6, 6)) for _ in range(count)]
    return DynkinA(n), DrinfeldPoly.from_roots(roots)


def check_confluence(trials: int = 1000, seed: int = 7, max_rank: int = 5,
                     max_roots: int = 10) -> SweepResult:
    """q-string factorization is merge-order independent and idempotent."""
    result = SweepResult("confluence")
    rng = random.Random(seed)
    for _ in range(trials):
        _, poly = random_poly(rng, max_rank, max_roots)
        result.checked += 1
        reference = q_factorize(poly)
        if expand_all(reference) != poly:
            result.fail(f"root multiset not preserved for {poly.roots}")
            continue
        if q_factorize(expand_all(reference)) != reference:
            result.fail(f"not idempotent for {poly.roots}")
            continue
        for _ in range(3):
            shuffled = q_factorize(poly, rng=rng)
            if shuffled != reference:
                result.fail(f"merge order changes output for {poly.roots}")
                break
    return result


CHECKS = {
    "forms-agree": check_forms_agree,
    "c3aline": check_c3aline,
    "dominant-pair": check_dominant_pair,
    "redsets-algebra": check_redsets_algebra,
    "duality": check_duality,
    "confluence": check_confluence,
}
