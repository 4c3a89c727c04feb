"""Reproduction harness: each criterion recomputes a claim and compares it
against an independent route (brute force, enumeration, or a closed form)."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .caps import Caps, default_caps
from .code import (
    all_vectors, coset_table, cr_vector_oracle, is_completely_regular, vector_distances,
)
from .graph import build_coset_graph, classical_params, verify_distance_regular
from .lifted import (
    HammingSpec, closed_form_array, lift, min_weight_check, nesting_check,
    non_hamming_refutation, rm_symmetry_check, shortened_hamming, sumset_identity,
)
from .matq import MatQ, count_rank, rank

GRID = [(2, 2, 2), (2, 2, 3), (2, 3, 2), (2, 2, 4), (3, 2, 2)]


@dataclass(frozen=True)
class Criterion:
    key: str
    claim: str
    limit: float | None
    check: Callable[[Caps], tuple[bool, str]]


@dataclass(frozen=True)
class Outcome:
    key: str
    claim: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None

    @property
    def in_time(self) -> bool:
        return self.limit is None or self.seconds < self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.in_time


def _lifted(q, m, r, caps):
    return lift(HammingSpec(q, m), r, caps)


def worked_example(caps: Caps) -> tuple[bool, str]:
    lc = _lifted(2, 2, 4, caps)
    table = coset_table(lc.code)
    verdict = is_completely_regular(lc.code, table)
    oracle = cr_vector_oracle(lc.code)
    array = verdict.array
    ok = (lc.code.size == 16 and verdict.regular and array.b == (45, 28)
          and array.c == (1, 6) and table.mu[2] == 210
          and oracle.regular and oracle.array == array)
    return ok, f"|C|={lc.code.size} array={array} mu={list(table.mu)} oracle={oracle.regular}"


def closed_form(caps: Caps) -> tuple[bool, str]:
    bad = []
    for q, m, r in GRID:
        verdict = is_completely_regular(_lifted(q, m, r, caps).code)
        if not verdict.regular or verdict.array != closed_form_array(q, m, r):
            bad.append((q, m, r))
    return not bad, f"{len(GRID) - len(bad)}/{len(GRID)} instances match" + (f"; failing {bad}" if bad else "")


def covering_radius_check(caps: Caps) -> tuple[bool, str]:
    got = {(q, m, r): coset_table(_lifted(q, m, r, caps).code).rho for q, m, r in GRID}
    bad = {k: v for k, v in got.items() if v != min(k[2], k[1])}
    return not bad, f"rho per (q,m,r): {got}"


def rank_distance_check(caps: Caps) -> tuple[bool, str]:
    lc = _lifted(2, 3, 2, caps)
    truth = vector_distances(lc.code)
    vecs = all_vectors(lc.code.Q, lc.n)
    mismatches = sum(1 for v, d in zip(vecs, truth) if lc.rank_distance(v) != d)
    return mismatches == 0, f"{len(vecs)} vectors, {mismatches} mismatches"


def _enumerated_census(q: int, r: int, m: int) -> list[int]:
    F = HammingSpec(q, 1).field
    counts = [0] * (min(r, m) + 1)
    for entries in itertools.product(range(q), repeat=r * m):
        counts[rank(MatQ(F, np.array(entries, dtype=np.int64).reshape(r, m)))] += 1
    return counts


def rank_census_check(caps: Caps) -> tuple[bool, str]:
    bad = []
    for q in (2, 3):
        for r in range(1, 4):
            for m in range(1, 4):
                formula = [count_rank(q, r, m, k) for k in range(min(r, m) + 1)]
                if formula != _enumerated_census(q, r, m) or sum(formula) != q ** (r * m):
                    bad.append(("enumeration", q, r, m))
    for q, m, r in GRID:
        mu = coset_table(_lifted(q, m, r, caps).code).mu
        if list(mu) != [count_rank(q, r, m, k) for k in range(min(r, m) + 1)]:
            bad.append(("cosets", q, m, r))
    return not bad, "all census counts agree" if not bad else f"failing {bad}"


def balance_check(caps: Caps) -> tuple[bool, str]:
    bad = []
    for q, m, r in GRID:
        lc = _lifted(q, m, r, caps)
        array = is_completely_regular(lc.code).array
        degree = (q ** r - 1) * lc.n
        if array is None or not array.balance_holds() or not array.sum_rule_holds(degree):
            bad.append((q, m, r))
    return not bad, f"{len(GRID) - len(bad)}/{len(GRID)} instances balanced"


def decoder_check(caps: Caps) -> tuple[bool, str]:
    failures = 0
    total = 0
    for q, m, r in [(2, 3, 2), (2, 2, 4)]:
        lc = _lifted(q, m, r, caps)
        for v in all_vectors(lc.code.Q, lc.n):
            total += 1
            word, err = lc.decode(v)
            S = lc.syndrome_matrix(v)
            weight = sum(1 for x in err if x)
            dist = sum(1 for a, b in zip(v, word) if a != b)
            if (not lc.code.contains(word) or weight != S.rank or dist != S.rank
                    or lc.syndrome_matrix(err).S != S.S):
                failures += 1
    return failures == 0, f"{total} vectors decoded, {failures} failures"


def non_hamming_check(caps: Caps) -> tuple[bool, str]:
    ref = non_hamming_refutation(shortened_hamming(2, 3), 2, caps)
    w = ref.witness
    ok = (not ref.verdict.regular and w is not None and w.distributions[0] != w.distributions[1]
          and all(sum(1 for x in v if x) == 2 for v in w.vectors))
    return ok, (f"[6,3,{ref.base_params[2]}]_2 lifted to F_4: regular={ref.verdict.regular}; "
                f"cosets {w.vectors[0]} vs {w.vectors[1]} distributions "
                f"{list(w.distributions[0])} vs {list(w.distributions[1])}")


def sumset_minweight_check(caps: Caps) -> tuple[bool, str]:
    details = []
    ok = True
    for q, m, r in [(2, 2, 2), (2, 2, 4), (2, 3, 2)]:
        lc = _lifted(q, m, r, caps)
        equal, _, size = sumset_identity(lc)
        mw = min_weight_check(lc)
        ok &= equal and mw.ok
        details.append(f"({q},{m},{r}): sumset={equal} |C|={size} d={mw.min_weight}")
    return ok, "; ".join(details)


def nesting_check_criterion(caps: Caps) -> tuple[bool, str]:
    verdict = nesting_check(2, 2, 2, 2, caps)
    ok = verdict.ok and verdict.exact and verdict.checked == 4 and verdict.big_checked == 16
    return ok, (f"{verdict.checked} codewords embedded into a {verdict.big_checked}-word code, "
                f"subset={verdict.ok}, image = subfield part={verdict.exact}")


def coset_graph_check(caps: Caps) -> tuple[bool, str]:
    g = build_coset_graph(_lifted(2, 3, 2, caps).code)
    verdict = verify_distance_regular(g)
    expected = classical_params(2, 2, 3)
    ok = (g.V == 64 == expected.V and verdict.regular
          and verdict.params.same_array(expected) and verdict.params.diameter == 2)
    return ok, f"V={g.V} params={verdict.params}"


def symmetry_check(caps: Caps) -> tuple[bool, str]:
    v = rm_symmetry_check(2, 3, 2)
    ok = v.ok and v.lengths == (7, 3)
    return ok, (f"b={v.forward.b}/{v.backward.b} c={v.forward.c}/{v.backward.c} "
                f"n={v.lengths} a equal={v.same_a}")


CRITERIA = [
    Criterion("worked-example", "F_16 repetition code: array (45,28;1,6), 210 cosets at distance 2", 5.0, worked_example),
    Criterion("closed-form", "closed-form b, c, a, mu equal brute force on the grid", 60.0, closed_form),
    Criterion("covering-radius", "BFS covering radius equals min(r, m)", None, covering_radius_check),
    Criterion("rank-distance", "d(v, C) = rank(S_v) for all 4^7 vectors of (2,3,2)", 60.0, rank_distance_check),
    Criterion("rank-census", "rank counts agree with enumeration and with coset counts", None, rank_census_check),
    Criterion("balance", "mu_i b_i = mu_{i+1} c_{i+1} and a_i + b_i + c_i = (q^r-1) n", None, balance_check),
    Criterion("decoder", "decoder reaches distance rank(S_v) with matching syndrome", None, decoder_check),
    Criterion("non-hamming", "lifted shortened Hamming code is not completely regular", 30.0, non_hamming_check),
    Criterion("sumset-minweight", "C_r = C + aC + ... and minimum-weight words are scalar multiples", None, sumset_minweight_check),
    Criterion("nesting", "C_(2,2) over F_4 embeds into C_(2,4) over F_16", None, nesting_check_criterion),
    Criterion("coset-graph", "coset graph of (2,3,2) is distance-regular with classical parameters", 5.0, coset_graph_check),
    Criterion("rm-symmetry", "(2,3,2) and (2,2,3) share b and c but not the length", None, symmetry_check),
]

BY_KEY = {c.key: c for c in CRITERIA}


def run_criterion(criterion: Criterion, caps: Caps | None = None) -> Outcome:
    caps = caps or default_caps()
    start = time.perf_counter()
    try:
        passed, detail = criterion.check(caps)
    except Exception as exc:  # reported as a failed claim
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - start
    return Outcome(criterion.key, criterion.claim, bool(passed), detail, seconds, criterion.limit)


def run_suite(only: list[str] | None = None, caps: Caps | None = None) -> list[Outcome]:
    chosen = CRITERIA
    if only:
        unknown = [k for k in only if k not in BY_KEY]
        if unknown:
            raise ValueError(f"unknown criteria {unknown}; choose from {list(BY_KEY)}")
        chosen = [BY_KEY[k] for k in only]
    return [run_criterion(c, caps) for c in chosen]
