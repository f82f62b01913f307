"""Built-in distributions with known independence behavior.

Two small distributions anchor the regression suite and the `examples`
CLI verb:

* :func:`one_sided_min_dist` - three binary variables for which, under
  the minimum operator, conditioning X1 on {X2, X3} equals conditioning
  on {X3} alone while the mirror-image equality for X2 fails.  It shows
  that the two halves of the independence test are genuinely separate.

* :func:`two_peak_dist` - two fully possible atoms and zeros elsewhere.
  Its pairwise no-interactivity triplets survive under product and min
  conjunctions, but grouping the pair breaks, so the no-interactivity
  relation fails the intersection axiom and stays semigraphoid only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conjunction import Generator, LukasiewiczLike, Min, ProductLike
from .core import EPS, Distribution, Triplet, build_space, make_distribution
from .graphoid import Counterexample, check_axiom, is_graphoid, is_semigraphoid
from .independence import (
    RelationKind,
    condition,
    enumerate_relation,
    in_independence,
    in_noninteractivity,
)


def one_sided_min_dist() -> Distribution:
    """Three binary variables; every x1 = 0 row sits at 0.6, the x1 = 1
    rows climb 0.7, 0.8, 0.9, 1 in mixed-radix order."""
    space = build_space([("X1", ("0", "1")), ("X2", ("0", "1")), ("X3", ("0", "1"))])
    levels = {
        ("1", "0", "0"): 0.7,
        ("1", "0", "1"): 0.8,
        ("1", "1", "0"): 0.9,
        ("1", "1", "1"): 1.0,
    }
    entries = [
        (a, levels.get((a["X1"], a["X2"], a["X3"]), 0.6))
        for a in space.assignments()
    ]
    return make_distribution(space, space.names, entries)


def two_peak_dist() -> Distribution:
    """Exactly two fully possible joint assignments, everything else impossible."""
    space = build_space([("X1", ("0", "2")), ("X2", ("-1", "1")), ("X3", ("-1", "1"))])
    entries = [
        ({"X1": "0", "X2": "1", "X3": "-1"}, 1.0),
        ({"X1": "2", "X2": "-1", "X3": "1"}, 1.0),
    ]
    return make_distribution(space, space.names, entries)


@dataclass(frozen=True)
class CaseResult:
    name: str
    passed: bool
    detail: str = ""


def _closed_form_conditional(dist, a, b, conj) -> np.ndarray:
    """Family-specific closed form of the conditional, straight from marginals."""
    union = dist.space.subset(set(dist.space.subset(a)) | set(dist.space.subset(b)))
    joint = dist.marginalize(union).table
    given = dist.marginalize(b).extend(union).table
    if isinstance(conj, Min):
        return np.where(joint < given, joint, 1.0)
    g = conj.generator
    if isinstance(conj, LukasiewiczLike):
        return g.invert(g.apply(joint) - g.apply(given) + 1.0)
    fj, fg = g.apply(joint), g.apply(given)
    quot = np.divide(fj, fg, out=np.ones_like(fj), where=fg > 0)
    return np.where(given > 0, g.invert(quot), 1.0)


def run_worked_examples(eps: float = EPS) -> list[CaseResult]:
    """Replay every built-in regression fact; one result per check."""
    results: list[CaseResult] = []

    def check(name: str, passed: bool, detail: str = "") -> None:
        results.append(CaseResult(name, bool(passed), detail))

    one_sided = one_sided_min_dist()
    mn = Min()

    m3 = one_sided.marginalize("X3")
    check(
        "one-sided: marginal on X3 is (0.9, 1)",
        m3.at({"X3": "0"}) == 0.9 and m3.at({"X3": "1"}) == 1.0,
        f"got ({m3.at({'X3': '0'})}, {m3.at({'X3': '1'})})",
    )

    lhs = condition(one_sided, "X1", ("X2", "X3"), mn)
    rhs = condition(one_sided, "X1", "X3", mn)
    check("one-sided: X1 conditional forgets X2 under min", lhs.equal_within(rhs, eps))

    lhs = condition(one_sided, "X2", ("X1", "X3"), mn)
    rhs = condition(one_sided, "X2", "X3", mn)
    check("one-sided: X2 conditional keeps X1 under min", not lhs.equal_within(rhs, eps))

    t = Triplet.of("X1", "X2", "X3")
    evidence = in_independence(one_sided, t, mn, eps)
    check(
        "one-sided: (X1 ; X2 | X3) rejected under min, with witnesses",
        not evidence.verdict and len(evidence.witnesses) > 0,
    )

    for conj in (mn, LukasiewiczLike(), ProductLike(), LukasiewiczLike(Generator(2.0)), ProductLike(Generator(2.0))):
        got = condition(one_sided, "X1", "X2", conj).table
        want = _closed_form_conditional(one_sided, "X1", "X2", conj)
        check(
            f"one-sided: residuum conditional matches the {conj.spec_string()} closed form",
            bool(np.max(np.abs(got - want)) <= eps),
        )

    two_peak = two_peak_dist()
    pr = ProductLike()
    pairwise = Triplet.of("X1", "X2", "X3")
    pairwise_swapped = Triplet.of("X1", "X3", "X2")
    grouped = Triplet.of("X1", ("X2", "X3"), ())

    check(
        "two-peak: (X1 ; X2 | X3) is no-interactive under product",
        in_noninteractivity(two_peak, pairwise, pr, eps).verdict,
    )
    check(
        "two-peak: (X1 ; X3 | X2) is no-interactive under product",
        in_noninteractivity(two_peak, pairwise_swapped, pr, eps).verdict,
    )
    check(
        "two-peak: grouping X2,X3 breaks no-interactivity under product",
        not in_noninteractivity(two_peak, grouped, pr, eps).verdict,
    )
    check(
        "two-peak: (X1 ; X2 | X3) is not independent under product",
        not in_independence(two_peak, pairwise, pr, eps).verdict,
    )

    expected = Counterexample("intersection", (pairwise, pairwise_swapped), grouped)
    for conj in (pr, Min()):
        rel = enumerate_relation(two_peak, conj, RelationKind.NON_INTERACTIVITY, eps)
        semi = is_semigraphoid(rel)
        full = is_graphoid(rel)
        gaps = check_axiom(rel, "intersection")
        check(
            f"two-peak: no-interactivity under {conj.spec_string()} is a semigraphoid "
            "but not a graphoid",
            semi.holds and not full.holds and expected in gaps.counterexamples,
        )

    return results
