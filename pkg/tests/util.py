"""Independent oracles used by the tests.

Everything here is deliberately written from scratch against the
definitions, not by calling the code under test, so that each check has
two genuinely different routes to the same answer.
"""

from derangetree import CaseTag, IncreasingTree, MarkedTree


def brute_rank(tree: IncreasingTree, v: int) -> int:
    """Shortest downward distance to a leaf, by exploring every path."""
    best = None

    def explore(x, depth):
        nonlocal best
        ch = tree.children(x)
        if not ch:
            best = depth if best is None else min(best, depth)
        for c in ch:
            explore(c, depth + 1)

    explore(v, 0)
    return best


def recursive_walk(tree: IncreasingTree, v: int) -> list[int]:
    """Reference greatest-child-first walk, written recursively."""
    out = [v]
    for c in sorted(tree.children(v), reverse=True):
        out.extend(recursive_walk(tree, c))
    return out


def descent_count(word) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def naive_leaves(tree: IncreasingTree) -> set[int]:
    """Leaves as the labels that never appear as a parent."""
    parents = {tree.parent_of(v) for v in tree.labels if v != tree.root}
    return set(tree.labels) - parents


def subfactorial(n: int) -> int:
    """Derangement count by the recurrence d(n) = (n-1)(d(n-1) + d(n-2))."""
    if n == 0:
        return 1
    if n == 1:
        return 0
    a, b = 1, 0  # d(0), d(1)
    for m in range(2, n + 1):
        a, b = b, (m - 1) * (a + b)
    return b


def factorial(n: int) -> int:
    out = 1
    for m in range(2, n + 1):
        out *= m
    return out


def independent_case_conditions(mt: MarkedTree) -> dict[CaseTag, bool]:
    """The six case predicates for a marked tree of size >= 4, each written
    out directly so the partition claim can be checked condition by
    condition."""
    t, m = mt.tree, mt.mark
    top = t.size - 1
    v = t.parent_of(top)
    kids = t.children(m)
    siblings = [c for c in kids if c != top]
    only_child = v == m and kids == (top,)
    return {
        CaseTag.C1B: v != m and v not in kids,
        CaseTag.C1C_I: v in kids,
        CaseTag.C2B: only_child and t.rank(t.parent_of(m)) == 1,
        CaseTag.C1C_II: only_child and t.rank(t.parent_of(m)) == 2,
        CaseTag.C1A: v == m and len(kids) > 1 and any(t.rank(c) == 0 for c in siblings),
        CaseTag.C2A: v == m and len(kids) > 1 and all(t.rank(c) != 0 for c in siblings),
    }
