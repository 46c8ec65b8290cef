"""Exhaustive certification of the status bounds over all small trees and graphs.

A census groups every tree of order ``n`` by matching number and by
domination number and records the extreme minimum statuses together with the
canonical codes of the trees attaining them. Theorem checks compare those
records against the closed-form bounds and the predicted unique extremal tree.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import families as fam
from .enumeration import canonical_code, canonical_graph_form, enumerate_connected_graphs, enumerate_trees
from .errors import InvalidParams
from .graph import Graph, branch_profile, diameter, status_profile, to_edgelist
from .invariants import domination_number_tree, matching_number_tree

MATCHING = "matching"
DOMINATION = "domination"

_SYMBOL = {MATCHING: "m", DOMINATION: "gamma"}


class TheoremId(str, Enum):
    MATCH_LOWER = "MatchLower"
    MATCH_UPPER = "MatchUpper"
    DOM_LOWER = "DomLower"
    DOM_UPPER_SMALL = "DomUpperSmall"
    DOM_UPPER_LARGE = "DomUpperLarge"
    ORDER_BOUND = "OrderBound"
    DIAMETER_LEMMA = "DiameterLemma"
    MEDIAN_CENTROID = "MedianCentroid"


@dataclass(frozen=True)
class TreeFacts:
    code: object
    graph: Graph
    min_status: int
    matching: int
    domination: int
    diameter: int


@dataclass
class ClassRecord:
    n: int
    kind: str
    value: int
    population: int = 0
    min_s: int | None = None
    max_s: int | None = None
    argmin_codes: list = field(default_factory=list)
    argmax_codes: list = field(default_factory=list)
    graphs: dict = field(default_factory=dict, repr=False)

    @property
    def label(self) -> str:
        return f"{_SYMBOL[self.kind]}={self.value}"

    def add(self, facts: TreeFacts) -> None:
        s = facts.min_status
        self.population += 1
        self.graphs[facts.code] = facts.graph
        if self.min_s is None or s < self.min_s:
            self.min_s, self.argmin_codes = s, [facts.code]
        elif s == self.min_s:
            self.argmin_codes.append(facts.code)
        if self.max_s is None or s > self.max_s:
            self.max_s, self.argmax_codes = s, [facts.code]
        elif s == self.max_s:
            self.argmax_codes.append(facts.code)


@dataclass(frozen=True)
class Failure:
    n: int
    class_label: str
    expected: object
    observed: object
    witnesses: tuple[Graph, ...] = ()


@dataclass
class TheoremReport:
    theorem_id: TheoremId
    n_range: tuple[int, int]
    failures: list[Failure] = field(default_factory=list)
    not_applicable: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def verdict(self) -> str:
        return "FAIL" if self.failures else "PASS"

    @property
    def passed(self) -> bool:
        return not self.failures


def tree_facts(t: Graph) -> TreeFacts:
    return TreeFacts(
        canonical_code(t),
        t,
        status_profile(t).min_status,
        matching_number_tree(t).size,
        domination_number_tree(t).size,
        diameter(t),
    )


@lru_cache(maxsize=None)
def _facts_for_order(n: int, jobs: int = 1) -> tuple[TreeFacts, ...]:
    trees = list(enumerate_trees(n))
    if jobs > 1 and len(trees) > 200:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return tuple(pool.map(tree_facts, trees, chunksize=64))
    return tuple(tree_facts(t) for t in trees)


def census(n: int, jobs: int = 1) -> list[ClassRecord]:
    """One record per non-empty matching class and domination class of trees of order ``n``."""
    records: dict[tuple[str, int], ClassRecord] = {}
    for facts in _facts_for_order(n, jobs):
        for kind, value in ((MATCHING, facts.matching), (DOMINATION, facts.domination)):
            key = (kind, value)
            if key not in records:
                records[key] = ClassRecord(n, kind, value)
            records[key].add(facts)
    return [records[k] for k in sorted(records)]


def _class_map(n: int, kind: str, jobs: int) -> dict[int, ClassRecord]:
    return {r.value: r for r in census(n, jobs) if r.kind == kind}


def _check_extreme(
    report: TheoremReport,
    rec: ClassRecord,
    bound: int,
    extremal: Graph | None,
    side: str,
) -> None:
    """Compare one class extreme (``side`` is 'min' or 'max') with a bound and its unique extremal tree."""
    observed = rec.min_s if side == "min" else rec.max_s
    codes = rec.argmin_codes if side == "min" else rec.argmax_codes
    report.checked += 1
    if observed != bound:
        report.failures.append(
            Failure(rec.n, rec.label, bound, observed, tuple(rec.graphs[c] for c in codes))
        )
        return
    if extremal is None:
        return
    want = canonical_code(extremal)
    if sorted(codes) != [want]:
        report.failures.append(
            Failure(
                rec.n,
                rec.label,
                [str(want)],
                [str(c) for c in sorted(codes)],
                tuple(rec.graphs[c] for c in sorted(codes)),
            )
        )


BoundFn = Callable[[int, int], int]
ExtremalFn = Callable[[int, int], Graph]


def _verify_family(
    theorem: TheoremId,
    kind: str,
    side: str,
    n_lo: int,
    n_hi: int,
    bound: BoundFn,
    extremal: ExtremalFn,
    applies: Callable[[int, int], bool],
    jobs: int,
) -> TheoremReport:
    report = TheoremReport(theorem, (n_lo, n_hi))
    for n in range(n_lo, n_hi + 1):
        classes = _class_map(n, kind, jobs)
        for value in range(1, n // 2 + 1):
            label = f"n={n} {_SYMBOL[kind]}={value}"
            if not applies(n, value):
                report.not_applicable.append(f"{label}: outside hypothesis")
                continue
            rec = classes.get(value)
            if rec is None:
                report.not_applicable.append(f"{label}: empty class")
                continue
            _check_extreme(report, rec, bound(n, value), extremal(n, value), side)
    return report


def _ceil3(n: int) -> int:
    return -(-n // 3)


def verify_matching_theorems(
    n_lo: int,
    n_hi: int,
    *,
    lower: BoundFn = fam.bound_matching_lower,
    upper: BoundFn = fam.bound_matching_upper,
    jobs: int = 1,
) -> tuple[TheoremReport, TheoremReport]:
    """Lower bound ``n+m-2`` (unique ``A_{n,m}``) and upper bound ``m(n-m)`` (unique balanced dumbbell)."""
    _check_range(n_lo, n_hi, 2)
    low = _verify_family(
        TheoremId.MATCH_LOWER, MATCHING, "min", n_lo, n_hi, lower, fam.make_A,
        lambda n, m: True, jobs,
    )
    up = _verify_family(
        TheoremId.MATCH_UPPER, MATCHING, "max", n_lo, n_hi, upper, fam.extremal_matching_upper,
        lambda n, m: n >= 4, jobs,
    )
    return low, up


def verify_domination_theorems(
    n_lo: int,
    n_hi: int,
    *,
    lower: BoundFn = fam.bound_domination_lower,
    upper_small: BoundFn = fam.bound_domination_upper_small,
    upper_large: BoundFn = fam.bound_domination_upper_large,
    jobs: int = 1,
) -> tuple[TheoremReport, TheoremReport, TheoremReport]:
    """Domination lower bound and the two upper-bound regimes on either side of ``ceil(n/3)``.

    The band ``gamma == ceil(n/3)`` is listed as not applicable in the
    small-gamma report with its observed maximum, and only ``s <= n^2/4`` is
    enforced there.
    """
    _check_range(n_lo, n_hi, 2)
    low = _verify_family(
        TheoremId.DOM_LOWER, DOMINATION, "min", n_lo, n_hi, lower, fam.make_A,
        lambda n, g: True, jobs,
    )
    small = _verify_family(
        TheoremId.DOM_UPPER_SMALL, DOMINATION, "max", n_lo, n_hi, upper_small,
        fam.extremal_domination_small, lambda n, g: g < _ceil3(n), jobs,
    )
    large = _verify_family(
        TheoremId.DOM_UPPER_LARGE, DOMINATION, "max", n_lo, n_hi, upper_large,
        fam.extremal_domination_large, lambda n, g: g > _ceil3(n), jobs,
    )
    for n in range(max(n_lo, 3), n_hi + 1):
        rec = _class_map(n, DOMINATION, jobs).get(_ceil3(n))
        if rec is None:
            continue
        small.not_applicable.append(
            f"n={n} gamma={rec.value}: boundary band, observed max {rec.max_s} "
            f"by {len(rec.argmax_codes)} tree(s)"
        )
        small.checked += 1
        if rec.max_s > fam.bound_order(n):
            small.failures.append(
                Failure(n, rec.label, fam.bound_order(n), rec.max_s,
                        tuple(rec.graphs[c] for c in rec.argmax_codes))
            )
    return low, small, large


def verify_order_bound(n_lo: int, n_hi: int) -> TheoremReport:
    """Every connected graph has ``s(G) <= floor(n^2/4)``, with equality exactly for ``P_n`` and ``C_n``."""
    _check_range(n_lo, n_hi, 3)
    report = TheoremReport(TheoremId.ORDER_BOUND, (n_lo, n_hi))
    for n in range(n_lo, n_hi + 1):
        bound = fam.bound_order(n)
        want = sorted({canonical_graph_form(fam.make_path(n)), canonical_graph_form(fam.make_cycle(n))})
        attained = []
        for g in enumerate_connected_graphs(n):
            s = status_profile(g).min_status
            report.checked += 1
            if s > bound:
                report.failures.append(Failure(n, "all", bound, s, (g,)))
            elif s == bound:
                attained.append(g)
        got = sorted(canonical_graph_form(g) for g in attained)
        if got != want:
            report.failures.append(
                Failure(n, "equality-set", [str(k) for k in want], [str(k) for k in got], tuple(attained))
            )
    return report


def median_centroid_mismatch(t: Graph) -> str | None:
    """Describe how median, centroid and the ``w <= n/2`` criterion disagree, or None."""
    median = status_profile(t).median
    bp = branch_profile(t)
    if median != bp.centroid:
        return f"median {median} != centroid {bp.centroid}"
    by_weight = tuple(x for x in range(t.n) if 2 * bp.weights[x] <= t.n)
    if by_weight != median:
        return f"w<=n/2 gives {by_weight}, median is {median}"
    if len(median) == 2 and not t.has_edge(*median):
        return f"two-vertex median {median} is not an edge"
    if len(median) > 2:
        return f"median {median} has more than two vertices"
    return None


def verify_structural_lemmas(n_hi: int, n_lo: int = 1, jobs: int = 1) -> tuple[TheoremReport, TheoremReport]:
    """Diameter bound ``2n - 3*gamma + 1`` when ``gamma > floor(n/3)``; median = centroid everywhere."""
    _check_range(n_lo, n_hi, 1)
    diam = TheoremReport(TheoremId.DIAMETER_LEMMA, (n_lo, n_hi))
    med = TheoremReport(TheoremId.MEDIAN_CENTROID, (n_lo, n_hi))
    for n in range(n_lo, n_hi + 1):
        for facts in _facts_for_order(n, jobs):
            t = facts.graph
            med.checked += 1
            problem = median_centroid_mismatch(t)
            if problem:
                med.failures.append(Failure(n, str(facts.code), "median == centroid", problem, (t,)))
            g = facts.domination
            if g > n // 3:
                diam.checked += 1
                limit = 2 * n - 3 * g + 1
                if facts.diameter > limit:
                    diam.failures.append(Failure(n, f"gamma={g}", limit, facts.diameter, (t,)))
    return diam, med


def _check_range(n_lo: int, n_hi: int, floor: int) -> None:
    if not floor <= n_lo <= n_hi:
        raise InvalidParams(f"need {floor} <= n_lo <= n_hi, got n_lo={n_lo}, n_hi={n_hi}")


# -- orchestration -------------------------------------------------------------


@dataclass(frozen=True)
class VerifyConfig:
    theorems: tuple[TheoremId, ...] = tuple(TheoremId)
    n_lo: int = 4
    n_hi: int = 12
    jobs: int = 1
    graph_n_max: int = 7


def run_verification(config: VerifyConfig) -> list[TheoremReport]:
    """Run the selected theorem checks; reports come back in :class:`TheoremId` order."""
    wanted = set(config.theorems)
    lo, hi, jobs = config.n_lo, config.n_hi, config.jobs
    out: dict[TheoremId, TheoremReport] = {}
    if wanted & {TheoremId.MATCH_LOWER, TheoremId.MATCH_UPPER}:
        for r in verify_matching_theorems(max(lo, 2), hi, jobs=jobs):
            out[r.theorem_id] = r
    if wanted & {TheoremId.DOM_LOWER, TheoremId.DOM_UPPER_SMALL, TheoremId.DOM_UPPER_LARGE}:
        for r in verify_domination_theorems(max(lo, 2), hi, jobs=jobs):
            out[r.theorem_id] = r
    if TheoremId.ORDER_BOUND in wanted:
        g_lo, g_hi = max(lo, 3), min(hi, config.graph_n_max)
        if g_lo <= g_hi:
            out[TheoremId.ORDER_BOUND] = verify_order_bound(g_lo, g_hi)
        else:
            r = TheoremReport(TheoremId.ORDER_BOUND, (g_lo, g_hi))
            r.not_applicable.append("requested range misses 3..7")
            out[TheoremId.ORDER_BOUND] = r
    if wanted & {TheoremId.DIAMETER_LEMMA, TheoremId.MEDIAN_CENTROID}:
        for r in verify_structural_lemmas(hi, n_lo=max(lo, 1), jobs=jobs):
            out[r.theorem_id] = r
    return [out[t] for t in TheoremId if t in wanted]


# -- serialisation ---------------------------------------------------------------


def _jsonable(x):
    return x if isinstance(x, (int, str, list)) else str(x)


def report_to_dict(report: TheoremReport) -> dict:
    return {
        "theorem_id": report.theorem_id.value,
        "n_range": list(report.n_range),
        "verdict": report.verdict,
        "checked": report.checked,
        "failures": [
            {
                "n": f.n,
                "class": f.class_label,
                "expected": _jsonable(f.expected),
                "observed": _jsonable(f.observed),
                "witnesses": [to_edgelist(g) for g in f.witnesses],
            }
            for f in report.failures
        ],
        "not_applicable": list(report.not_applicable),
    }


def format_reports(reports: Sequence[TheoremReport], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem_id", "n_lo", "n_hi", "verdict", "checked", "n", "class", "expected", "observed"])
        for r in reports:
            head = [r.theorem_id.value, r.n_range[0], r.n_range[1], r.verdict, r.checked]
            if not r.failures:
                w.writerow(head + ["", "", "", ""])
            for f in r.failures:
                w.writerow(head + [f.n, f.class_label, _jsonable(f.expected), _jsonable(f.observed)])
        return buf.getvalue()
    if fmt != "text":
        raise InvalidParams(f"unknown report format {fmt!r}")
    lines = []
    for r in reports:
        lines.append(
            f"{r.theorem_id.value:<15} n={r.n_range[0]}..{r.n_range[1]}  {r.verdict}  "
            f"checked={r.checked} failures={len(r.failures)} n/a={len(r.not_applicable)}"
        )
        for f in r.failures:
            lines.append(f"  n={f.n} {f.class_label}: expected {f.expected}, observed {f.observed}")
    return "\n".join(lines) + "\n"


def all_passed(reports: Iterable[TheoremReport]) -> bool:
    return all(r.passed for r in reports)
