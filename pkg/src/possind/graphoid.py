"""Axiom checking for independence relations and a randomized property harness.

The five axioms (symmetry, decomposition, weak union, contraction,
intersection) are checked purely set-theoretically: every premise pattern
is instantiated exhaustively over the relation's members and each
instance whose conclusion triplet is absent becomes a counterexample.  A
semigraphoid satisfies the first four, a graphoid all five.

The fuzzer draws random grid-valued distributions, induces independence
and no-interactivity relations under the configured conjunctions, and
checks the axiom level each relation is claimed to satisfy.  Violations
of a claimed property abort the run with a serialized reproducer;
intersection gaps of no-interactivity under min and product conjunctions
are expected and are collected as mined counterexamples instead.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from .conjunction import Conjunction, LukasiewiczLike, default_families
from .core import (  # noqa: F401  (IndependenceRelation and enumerate_triplets
    EPS,            # are part of this module's surface)
    Distribution,
    IndependenceRelation,
    Space,
    Triplet,
    build_space,
    enumerate_triplets,
    triplet_count,
)
from .errors import TooLarge
from .independence import RELATION_GUARD, RelationKind, enumerate_relation
from .serialize import reproducer_document

import numpy as np

SEMIGRAPHOID_AXIOMS = ("symmetry", "decomposition", "weak_union", "contraction")
GRAPHOID_AXIOMS = SEMIGRAPHOID_AXIOMS + ("intersection",)
AXIOMS = GRAPHOID_AXIOMS


@dataclass(frozen=True)
class Counterexample:
    """An axiom instance whose conclusion is missing from the relation."""

    axiom: str
    premises: tuple[Triplet, ...]
    conclusion: Triplet

    def __str__(self) -> str:
        prem = " and ".join(str(t) for t in self.premises)
        return f"{self.axiom}: {prem} hold but {self.conclusion} is missing"


@dataclass
class AxiomReport:
    """Per-axiom verdicts with the full counterexample list."""

    verdicts: dict
    counterexamples: tuple[Counterexample, ...]

    @property
    def holds(self) -> bool:
        return all(self.verdicts.values())

    def failing(self) -> tuple[str, ...]:
        return tuple(name for name, ok in self.verdicts.items() if not ok)


def _sorted_members(rel: IndependenceRelation) -> tuple[Triplet, ...]:
    return rel.sorted_members


def _splits(names: frozenset) -> Iterator[tuple[frozenset, frozenset]]:
    """(kept, moved) pairs with kept nonempty; moved may be empty."""
    ordered = sorted(names)
    for r in range(1, len(ordered) + 1):
        for combo in itertools.combinations(ordered, r):
            kept = frozenset(combo)
            yield kept, names - kept


def _symmetry(rel) -> list[Counterexample]:
    out = []
    for t in _sorted_members(rel):
        flipped = Triplet(t.b, t.a, t.c)
        if flipped not in rel.members:
            out.append(Counterexample("symmetry", (t,), flipped))
    return out


def _decomposition(rel) -> list[Counterexample]:
    out = []
    for t in _sorted_members(rel):
        for kept, _ in _splits(t.b):
            conclusion = Triplet(t.a, kept, t.c)
            if conclusion not in rel.members:
                out.append(Counterexample("decomposition", (t,), conclusion))
    return out


def _weak_union(rel) -> list[Counterexample]:
    out = []
    for t in _sorted_members(rel):
        for kept, moved in _splits(t.b):
            conclusion = Triplet(t.a, kept, t.c | moved)
            if conclusion not in rel.members:
                out.append(Counterexample("weak_union", (t,), conclusion))
    return out


def _contraction(rel) -> list[Counterexample]:
    out = []
    members = _sorted_members(rel)
    for t1 in members:  # (a, b, d)
        want = t1.b | t1.c
        for t2 in members:  # (a, c, b | d)
            if t2.a != t1.a or t2.c != want:
                continue
            conclusion = Triplet(t1.a, t1.b | t2.b, t1.c)
            if conclusion not in rel.members:
                out.append(Counterexample("contraction", (t1, t2), conclusion))
    return out


def _intersection(rel) -> list[Counterexample]:
    out = []
    members = _sorted_members(rel)
    for t1 in members:  # (a, b, c | d)
        for t2 in members:  # (a, c, b | d)
            if t2.a != t1.a or not t2.b <= t1.c:
                continue
            d = t1.c - t2.b
            if t2.c != t1.b | d:
                continue
            conclusion = Triplet(t1.a, t1.b | t2.b, d)
            if conclusion not in rel.members:
                out.append(Counterexample("intersection", (t1, t2), conclusion))
    return out


_AXIOM_CHECKS = {
    "symmetry": _symmetry,
    "decomposition": _decomposition,
    "weak_union": _weak_union,
    "contraction": _contraction,
    "intersection": _intersection,
}


def check_axiom(rel: IndependenceRelation, axiom: str) -> AxiomReport:
    """Check one axiom exhaustively over the relation's members."""
    try:
        fn = _AXIOM_CHECKS[axiom]
    except KeyError:
        raise ValueError(f"unknown axiom {axiom!r}, expected one of {AXIOMS}") from None
    cx = fn(rel)
    return AxiomReport({axiom: not cx}, tuple(cx))


def _check_axioms(rel, axioms) -> AxiomReport:
    verdicts = {}
    counterexamples: list[Counterexample] = []
    for axiom in axioms:
        cx = _AXIOM_CHECKS[axiom](rel)
        verdicts[axiom] = not cx
        counterexamples.extend(cx)
    return AxiomReport(verdicts, tuple(counterexamples))


def is_semigraphoid(rel: IndependenceRelation) -> AxiomReport:
    """Symmetry, decomposition, weak union and contraction."""
    return _check_axioms(rel, SEMIGRAPHOID_AXIOMS)


def is_graphoid(rel: IndependenceRelation) -> AxiomReport:
    """All five axioms, intersection included."""
    return _check_axioms(rel, GRAPHOID_AXIOMS)


def random_distribution(
    space: Space, grid: int = 10, strictly_positive: bool = False, seed: int = 0
) -> Distribution:
    """A grid-valued distribution over the whole space, one entry forced to 1.

    Values are drawn uniformly from {k/grid}; strictly positive draws skip
    k = 0.  Deterministic for a fixed seed.
    """
    if grid < 1:
        raise ValueError("grid must be >= 1")
    rng = np.random.default_rng(seed)
    lo = 1 if strictly_positive else 0
    vals = np.asarray(rng.integers(lo, grid + 1, size=space.shape(space.names)), dtype=float)
    vals /= grid
    vals.flat[rng.integers(0, vals.size)] = 1.0
    return Distribution(space, space.names, vals)


@dataclass
class FuzzConfig:
    """Configuration of a fuzzing run.  Trial i uses seed `seed + i`."""

    trials: int = 1000
    variables: int = 3
    frame_size: int = 2
    grid: int = 10
    seed: int = 0
    strictly_positive: bool = False
    conjunctions: tuple[Conjunction, ...] = field(default_factory=default_families)
    eps: float = EPS
    reproducer_dir: Optional[Path] = None
    inject: tuple[Distribution, ...] = ()


@dataclass
class FuzzFailure:
    """A violated property claim, with enough context to replay it."""

    trial: int
    seed: Optional[int]
    conjunction: str
    prop: str
    detail: str
    reproducer: dict
    path: Optional[str] = None


@dataclass(frozen=True)
class MinedCounterexample:
    """An expected intersection gap of a no-interactivity relation."""

    trial: int
    conjunction: str
    counterexample: Counterexample


@dataclass
class FuzzReport:
    trials_run: int
    relations_checked: int
    failures: list
    mined: list

    @property
    def ok(self) -> bool:
        return not self.failures


def _fuzz_space(config: FuzzConfig) -> Space:
    frame = [str(v) for v in range(config.frame_size)]
    return build_space([(f"X{i + 1}", frame) for i in range(config.variables)])


def _trial_stream(config: FuzzConfig, space: Space):
    trial = 0
    for dist in config.inject:
        yield trial, dist, None
        trial += 1
    for i in range(config.trials):
        yield trial, random_distribution(
            space, config.grid, config.strictly_positive, seed=config.seed + i
        ), config.seed + i
        trial += 1


def _write_reproducer(config, failure: FuzzFailure) -> None:
    if config.reproducer_dir is None:
        return
    directory = Path(config.reproducer_dir)
    directory.mkdir(parents=True, exist_ok=True)
    safe = failure.conjunction.replace(":", "-").replace("=", "-")
    path = directory / f"possind-reproducer-trial{failure.trial}-{safe}.json"
    path.write_text(json.dumps(failure.reproducer, indent=2, sort_keys=True) + "\n")
    failure.path = str(path)


def fuzz_properties(config: FuzzConfig) -> FuzzReport:
    """Check the claimed axiom level of induced relations on random trials.

    Per trial and conjunction: the independence relation must be a
    graphoid; under Lukasiewicz-like conjunctions the no-interactivity
    relation must coincide with it; under min and product conjunctions
    the no-interactivity relation must be a semigraphoid, and its
    intersection gaps are mined.  The first violation aborts the run,
    serializing the offending distribution as a reproducer.
    """
    if triplet_count(config.variables) > RELATION_GUARD:
        raise TooLarge(
            f"{triplet_count(config.variables)} candidate triplets exceed the "
            f"guard of {RELATION_GUARD}"
        )
    space = _fuzz_space(config)
    failures: list[FuzzFailure] = []
    mined: list[MinedCounterexample] = []
    trials_run = 0
    relations = 0

    def fail(trial, seed, dist, conj, prop, detail) -> FuzzFailure:
        doc = reproducer_document(dist, conj, seed, trial=trial, property=prop)
        failure = FuzzFailure(trial, seed, conj.spec_string(), prop, detail, doc)
        _write_reproducer(config, failure)
        failures.append(failure)
        return failure

    for trial, dist, seed in _trial_stream(config, space):
        trials_run += 1
        for conj in config.conjunctions:
            i_rel = enumerate_relation(dist, conj, RelationKind.INDEPENDENCE, config.eps)
            relations += 1
            report = is_graphoid(i_rel)
            if not report.holds:
                fail(
                    trial, seed, dist, conj,
                    "independence relation is a graphoid",
                    str(report.counterexamples[0]),
                )
                return FuzzReport(trials_run, relations, failures, mined)

            ni_rel = enumerate_relation(dist, conj, RelationKind.NON_INTERACTIVITY, config.eps)
            relations += 1
            if isinstance(conj, LukasiewiczLike):
                if ni_rel.members != i_rel.members:
                    gap = sorted(
                        ni_rel.members ^ i_rel.members, key=lambda t: t.sort_key
                    )[0]
                    fail(
                        trial, seed, dist, conj,
                        "independence and no-interactivity coincide under "
                        "lukasiewicz-like conjunctions",
                        f"relations differ at {gap}",
                    )
                    return FuzzReport(trials_run, relations, failures, mined)
            else:
                semi = is_semigraphoid(ni_rel)
                if not semi.holds:
                    fail(
                        trial, seed, dist, conj,
                        "no-interactivity relation is a semigraphoid",
                        str(semi.counterexamples[0]),
                    )
                    return FuzzReport(trials_run, relations, failures, mined)
                inter = check_axiom(ni_rel, "intersection")
                mined.extend(
                    MinedCounterexample(trial, conj.spec_string(), cx)
                    for cx in inter.counterexamples
                )

    return FuzzReport(trials_run, relations, failures, mined)
