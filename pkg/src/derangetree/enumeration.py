"""Exhaustive generators and brute-force verification at desk scale.

Everything here enumerates: trees by choosing each vertex's parent among
the smaller labels, derangements by filtering one-line permutations for
fixed points, marked trees by scanning ranks.  ``verify_bijection`` runs
the full two-sided round-trip check for one size and refuses sizes past a
hard ceiling instead of degrading.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .bijection import CaseTag, classify_derangement, forward, forward_with_case, inverse
from .cycles import CycleDecomposition
from .errors import DomainError, VerificationLimitError
from .trees import IncreasingTree, MarkedTree

DEFAULT_SIZE_LIMIT = 8
HARD_SIZE_LIMIT = 9


def gen_increasing_trees(n: int) -> Iterator[IncreasingTree]:
    """All (n-1)! increasing trees on {0, ..., n-1}, in a fixed order.

    Vertex v's parent ranges over 0..v-1; the stream is the lexicographic
    product of those choices and is restartable.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    for choices in itertools.product(*(range(v) for v in range(1, n))):
        parent = {v: p for v, p in enumerate(choices, start=1)}
        yield IncreasingTree(parent, labels=range(n))


def gen_derangements(n: int) -> Iterator[CycleDecomposition]:
    """All derangements of {0, ..., n-1} in canonical cycle form.

    Brute force: every permutation in lexicographic one-line order,
    keeping the fixed-point-free ones.  Empty for n = 1.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    for word in itertools.permutations(range(n)):
        if all(word[i] != i for i in range(n)):
            yield CycleDecomposition.from_word(word)


def gen_marked_trees(n: int) -> Iterator[MarkedTree]:
    """Every (tree, rank-1 vertex) pair for size n, each exactly once."""
    if n < 1:
        raise DomainError("n must be at least 1")
    for tree in gen_increasing_trees(n):
        for v in tree.labels:
            if tree.rank(v) == 1:
                yield MarkedTree(tree, v)


def count_rank_k(n: int, k: int) -> int:
    """Total number of rank-k vertices over all increasing trees of size n."""
    if n < 1:
        raise DomainError("n must be at least 1")
    if k < 0:
        raise DomainError("k must be nonnegative")
    return sum(1 for t in gen_increasing_trees(n) for v in t.labels if t.rank(v) == k)


@dataclass(frozen=True)
class RankCountRow:
    """One table row: rank-k vertex total over all size-n trees."""

    n: int
    k: int
    count: int


def rank_count_table(max_n: int, k: int = 1) -> list[RankCountRow]:
    if max_n < 1:
        raise DomainError("max_n must be at least 1")
    return [RankCountRow(m, k, count_rank_k(m, k)) for m in range(1, max_n + 1)]


@dataclass
class VerificationReport:
    """Outcome of one exhaustive bijection check.

    ``round_trip_failures`` is empty exactly when the bijection verified
    for this n.  Stable field names (also used by ``to_dict``): n,
    derangement_count, marked_tree_count, round_trip_failures,
    case_histogram, elapsed_seconds, ok.
    """

    n: int
    derangement_count: int
    marked_tree_count: int
    round_trip_failures: list[str]
    case_histogram: dict[CaseTag, int]
    elapsed_seconds: float

    @property
    def ok(self) -> bool:
        return not self.round_trip_failures

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "derangement_count": self.derangement_count,
            "marked_tree_count": self.marked_tree_count,
            "round_trip_failures": list(self.round_trip_failures),
            "case_histogram": {tag.value: count for tag, count in
                               sorted(self.case_histogram.items(), key=lambda kv: kv[0].value)},
            "elapsed_seconds": self.elapsed_seconds,
            "ok": self.ok,
        }

    def to_text(self) -> str:
        status = "ok" if self.ok else "FAIL"
        lines = [
            f"n={self.n} derangements={self.derangement_count}"
            f" marked_trees={self.marked_tree_count}"
            f" failures={len(self.round_trip_failures)}"
            f" elapsed={self.elapsed_seconds:.3f}s {status}"
        ]
        cases = " ".join(f"{tag.value}={self.case_histogram[tag]}"
                         for tag in CaseTag if self.case_histogram.get(tag))
        if cases:
            lines.append(f"n={self.n} cases {cases}")
        lines.extend(f"n={self.n} failure {f}" for f in self.round_trip_failures)
        return "\n".join(lines)


def verify_bijection(n: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> VerificationReport:
    """Exhaustively check the bijection at size n.

    Maps every derangement forward, checks validity and distinctness of the
    images, checks that the image set is exactly the marked trees, and
    checks both round trips.  Any exception raised along the way is
    recorded as a failure rather than aborting the run.  Sizes above
    ``min(size_limit, HARD_SIZE_LIMIT)`` are refused outright.
    """
    if n < 2:
        raise DomainError("n must be at least 2")
    ceiling = min(size_limit, HARD_SIZE_LIMIT)
    if n > ceiling:
        raise VerificationLimitError(
            f"n={n} exceeds the verification ceiling {ceiling}; refusing to run")
    start = time.perf_counter()
    failures: list[str] = []
    histogram: Counter[CaseTag] = Counter()
    image: dict[str, CycleDecomposition] = {}
    derangement_count = 0
    for p in gen_derangements(n):
        derangement_count += 1
        try:
            mt, tag = forward_with_case(p)
            histogram[tag] += 1
            key = mt.serialize()
            other = image.get(key)
            if other is not None:
                failures.append(
                    f"{p.serialize()} and {other.serialize()} map to the same tree {key}")
            else:
                image[key] = p
            back = inverse(mt)
            if back != p:
                failures.append(f"inverse(forward({p.serialize()})) = {back.serialize()}")
        except Exception as exc:  # record, never abort mid-verification
            failures.append(f"{p.serialize()}: {type(exc).__name__}: {exc}")
    marked_count = 0
    for mt in gen_marked_trees(n):
        marked_count += 1
        key = mt.serialize()
        if key not in image:
            failures.append(f"{key} is not the image of any derangement")
            continue
        try:
            p = inverse(mt)
            if forward(p) != mt:
                failures.append(f"forward(inverse({key})) != {key}")
        except Exception as exc:
            failures.append(f"{key}: {type(exc).__name__}: {exc}")
    if derangement_count != marked_count:
        failures.append(
            f"count mismatch: {derangement_count} derangements vs {marked_count} marked trees")
    return VerificationReport(
        n=n,
        derangement_count=derangement_count,
        marked_tree_count=marked_count,
        round_trip_failures=failures,
        case_histogram=dict(histogram),
        elapsed_seconds=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class RankRecurrenceRow:
    """Rank-1 count for one size with residuals against two candidate
    recurrences; residuals are None where a smaller term is missing."""

    n: int
    count: int
    residual_derangement: int | None
    residual_variant: int | None


def recurrence_check(max_n: int) -> list[RankRecurrenceRow]:
    """Rank-1 vertex counts a(n) with residuals for two recurrences.

    ``residual_derangement`` is a(n) - (n-1)*(a(n-1) + a(n-2)), the
    derangement recurrence; ``residual_variant`` is
    a(n) - n*a(n-1) - n*a(n-2).  Both columns are reported so the data can
    be judged without trusting either formula.
    """
    if max_n < 3:
        raise DomainError("max_n must be at least 3")
    counts = {m: count_rank_k(m, 1) for m in range(1, max_n + 1)}
    rows = []
    for m in range(1, max_n + 1):
        if m >= 3:
            rd = counts[m] - (m - 1) * (counts[m - 1] + counts[m - 2])
            rv = counts[m] - m * counts[m - 1] - m * counts[m - 2]
        else:
            rd = rv = None
        rows.append(RankRecurrenceRow(m, counts[m], rd, rv))
    return rows


@dataclass(frozen=True)
class CaseCountReport:
    """Histogram of construction cases over all derangements of size n.

    ``top_attached_to_mark`` totals the cases where n - 1 hangs directly
    under the marked vertex (C1a, C1cII, C2a, C2b).
    """

    n: int
    histogram: dict[CaseTag, int]
    top_attached_to_mark: int


def case_counts(n: int) -> CaseCountReport:
    if n < 4:
        raise DomainError("case analysis needs n >= 4")
    histogram: Counter[CaseTag] = Counter()
    for p in gen_derangements(n):
        histogram[classify_derangement(p)] += 1
    attached = sum(histogram[t] for t in
                   (CaseTag.C1A, CaseTag.C1C_II, CaseTag.C2A, CaseTag.C2B))
    return CaseCountReport(n=n, histogram=dict(histogram), top_attached_to_mark=attached)
