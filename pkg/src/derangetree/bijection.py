"""The recursive correspondence between derangements and marked trees.

``forward`` maps a derangement of {0, ..., n-1} to an increasing tree of
size n with a marked vertex of rank 1; ``inverse`` recovers the unique
preimage.  Both directions recurse on n by peeling the largest label off
the input.  ``CaseTag`` names the construction case that fires, and the two
classifiers expose the case analysis for either side.

Construction sketch for a derangement p, writing top = n - 1:

* top in a cycle of length >= 3: delete top, map the smaller derangement,
  then hang top under v = p^(-1)(top).  The mark stays put unless v was the
  only leaf child of the mark (C1cII), in which case v becomes the mark.
* top in a 2-cycle with j: drop that cycle, map the remaining derangement
  (order-relabeled to size n-2), and restore the original labels.  With
  mark k < j it is enough to hang j under k and top under j (C2b).  With
  k > j, ``case2a_restructure`` first inserts j on the root-to-k path and
  pulls subtrees under j until the walk from j meets k before any other
  rank-1 vertex; then top is hung under j (C2a).  Either way j is the mark.
"""

from __future__ import annotations

import enum
from typing import Iterable

from .cycles import CycleDecomposition
from .errors import DomainError, InternalInvariantError
from .trees import IncreasingTree, MarkedTree


class CaseTag(enum.Enum):
    """Which construction case governs a derangement or a marked tree."""

    BASE2 = "Base2"
    BASE3 = "Base3"
    C1A = "C1a"
    C1B = "C1b"
    C1C_I = "C1cI"
    C1C_II = "C1cII"
    C2A = "C2a"
    C2B = "C2b"

    def __str__(self) -> str:
        return self.value


class Relabeling:
    """Order isomorphism between a sorted label set and {0, ..., m-1}.

    ``forward`` compresses a label to its index; ``backward`` undoes it.
    """

    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Iterable[int]):
        self._labels = tuple(sorted(labels))
        if len(set(self._labels)) != len(self._labels):
            raise DomainError("repeated label in relabeling domain")
        self._index = {x: i for i, x in enumerate(self._labels)}

    @property
    def labels(self) -> tuple[int, ...]:
        return self._labels

    def forward(self, x: int) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise DomainError(f"label {x} outside relabeling domain") from None

    def backward(self, i: int) -> int:
        if not 0 <= i < len(self._labels):
            raise DomainError(f"index {i} outside range 0..{len(self._labels) - 1}")
        return self._labels[i]

    def compress(self, p: CycleDecomposition) -> CycleDecomposition:
        return p.relabel(self.forward)

    def expand(self, p: CycleDecomposition) -> CycleDecomposition:
        return p.relabel(self.backward)

    def compress_tree(self, t: IncreasingTree) -> IncreasingTree:
        return t.relabel(self.forward)

    def expand_tree(self, t: IncreasingTree) -> IncreasingTree:
        return t.relabel(self.backward)

    def __repr__(self) -> str:
        return f"Relabeling({self._labels!r})"


_BASE2_TREE = MarkedTree(IncreasingTree({1: 0}), 0)
_CHAIN3_TREE = MarkedTree(IncreasingTree({1: 0, 2: 1}), 1)
_STAR3_TREE = MarkedTree(IncreasingTree({1: 0, 2: 0}), 0)
_CHAIN3_PERM = CycleDecomposition([(0, 1, 2)])
_STAR3_PERM = CycleDecomposition([(0, 2, 1)])


def _check_derangement(p: CycleDecomposition) -> None:
    if p.size < 2:
        raise DomainError(f"need at least two labels, got {p.size}")
    if p.ground_set != tuple(range(p.size)):
        raise DomainError(f"ground set must be 0..{p.size - 1}")
    if not p.is_derangement:
        raise DomainError(f"fixed point: {p.fixed_points()[0]}")


def forward_with_case(p: CycleDecomposition) -> tuple[MarkedTree, CaseTag]:
    """Map a derangement to its marked tree, along with the case that fired."""
    _check_derangement(p)
    n = p.size
    if n == 2:
        return _BASE2_TREE, CaseTag.BASE2
    if n == 3:
        return (_CHAIN3_TREE if p == _CHAIN3_PERM else _STAR3_TREE), CaseTag.BASE3
    top = n - 1
    j = p.two_cycle_partner(top)
    if j is None:
        v = p.preimage(top)
        sub = forward(p.remove(top))
        t, k = sub.tree, sub.mark
        grown = t.with_leaf(top, v)
        if v == k:
            return MarkedTree(grown, k), CaseTag.C1A
        if v in t.children(k):
            if grown.rank(k) == 1:
                return MarkedTree(grown, k), CaseTag.C1C_I
            return MarkedTree(grown, v), CaseTag.C1C_II
        return MarkedTree(grown, k), CaseTag.C1B
    reduced = p.remove_cycle_of(top)
    relab = Relabeling(reduced.ground_set)
    sub = forward(relab.compress(reduced))
    t = relab.expand_tree(sub.tree)
    k = relab.backward(sub.mark)
    if k < j:
        grown = t.with_leaf(j, k).with_leaf(top, j)
        return MarkedTree(grown, j), CaseTag.C2B
    restructured = case2a_restructure(t, j, k)
    return MarkedTree(restructured.with_leaf(top, j), j), CaseTag.C2A


def forward(p: CycleDecomposition) -> MarkedTree:
    """The marked tree corresponding to derangement ``p``."""
    return forward_with_case(p)[0]


def classify_derangement(p: CycleDecomposition) -> CaseTag:
    """The construction case governing ``forward(p)``.

    The C1 subcases depend on the recursively built tree, so this performs
    the recursion rather than inspecting ``p`` alone.
    """
    return forward_with_case(p)[1]


def case2a_restructure(t: IncreasingTree, j: int, k: int) -> IncreasingTree:
    """Insert ``j`` above the root-to-``k`` path and regroup under it.

    ``j`` takes the unique position on the path allowed by the increasing
    property (new root when it is below every path label).  Then, walking
    down toward ``k`` and re-evaluating ranks in the current tree at every
    step: a rank-1 vertex other than ``k`` surrenders the child subtree
    containing ``k`` to ``j``; a branching vertex of rank >= 2 keeps that
    subtree only when its root is the greatest child, and otherwise also
    surrenders it to ``j``.  The descent resumes at the moved (or kept)
    child and stops at ``k``.  Afterwards the walk from ``j`` meets ``k``
    before any other rank-1 vertex.
    """
    if k <= j:
        raise DomainError(f"mark {k} must exceed the inserted label {j}")
    if j in t:
        raise DomainError(f"label {j} already in tree")
    if t.rank(k) != 1:
        raise DomainError(f"vertex {k} has rank {t.rank(k)}, need rank 1")
    path = t.path_from_root(k)
    target = path[sum(1 for a in path if a < j)]
    t = t.insert_above(j, target)
    cur = target
    while cur != k:
        ch = t.children(cur)
        if len(ch) == 1 and t.rank(cur) >= 2:
            cur = ch[0]
            continue
        c = t.child_toward(cur, k)
        if t.rank(cur) == 1 or c != max(ch):
            t = t.reparented(c, j)
        cur = c
    return t


def classify_tree(mt: MarkedTree) -> CaseTag:
    """The construction case that produced marked tree ``mt``.

    Decided by where top = n - 1 hangs relative to the mark m: under
    neither m nor a child of m (C1b); under a child of m (C1cI); under m as
    an only child, split by the rank of m's parent (C2b at rank 1, C1cII at
    rank 2); under m with siblings, split by whether some sibling is a leaf
    (C1a) or none is (C2a).  Ranks are evaluated in ``mt`` itself.
    """
    n = mt.size
    t, m = mt.tree, mt.mark
    if not t.is_standard:
        raise DomainError("classification needs ground set 0..n-1")
    if n == 2:
        return CaseTag.BASE2
    if n == 3:
        return CaseTag.BASE3
    top = n - 1
    v = t.parent_of(top)
    kids = t.children(m)
    if v == m:
        if kids == (top,):
            return CaseTag.C2B if t.rank(t.parent_of(m)) == 1 else CaseTag.C1C_II
        if any(t.rank(c) == 0 for c in kids if c != top):
            return CaseTag.C1A
        return CaseTag.C2A
    if v in kids:
        return CaseTag.C1C_I
    return CaseTag.C1B


def _rejoin_anchor(tree: IncreasingTree, start: int, mover: int) -> int | None:
    """First walk vertex under ``start`` able to adopt the subtree at ``mover``:
    rank 1, or rank >= 2 with some child greater than ``mover``."""
    for x in tree.depth_search_walk(start):
        r = tree.rank(x)
        if r == 1 or (r >= 2 and any(c > mover for c in tree.children(x))):
            return x
    return None


def inverse(mt: MarkedTree) -> CycleDecomposition:
    """Recover the unique derangement with ``forward(p) == mt``.

    The C1 cases delete top = n - 1, recurse, and splice top back into the
    recovered cycles right after its parent.  C2b deletes top and the mark,
    re-marks the mark's parent, recurses at size n - 2 (order-relabeled)
    and appends the 2-cycle (mark, top).  C2a first undoes the regrouping:
    the walk from the mark locates the old mark k (first rank-1 vertex
    after it), each non-leaf child of the mark goes back under the first
    anchor found in its smaller sibling's walk, and the mark is spliced out
    in favor of its smallest child before recursing as in C2b.
    """
    n = mt.size
    t, m = mt.tree, mt.mark
    if not t.is_standard:
        raise DomainError("inverse needs ground set 0..n-1")
    if n == 2:
        return CycleDecomposition([(0, 1)])
    if n == 3:
        if mt == _CHAIN3_TREE:
            return _CHAIN3_PERM
        if mt == _STAR3_TREE:
            return _STAR3_PERM
        raise InternalInvariantError(f"unrecognized size-3 marked tree {mt.serialize()}")
    tag = classify_tree(mt)
    top = n - 1
    v = t.parent_of(top)
    if tag in (CaseTag.C1A, CaseTag.C1B, CaseTag.C1C_I):
        sub = MarkedTree(t.without_leaf(top), m)
        return inverse(sub).insert_after(v, top)
    if tag is CaseTag.C1C_II:
        sub = MarkedTree(t.without_leaf(top), t.parent_of(m))
        return inverse(sub).insert_after(m, top)
    if tag is CaseTag.C2B:
        base = t.without_leaf(top).without_leaf(m)
        relab = Relabeling(base.labels)
        sub = MarkedTree(relab.compress_tree(base), relab.forward(t.parent_of(m)))
        return relab.expand(inverse(sub)).with_cycle((m, top))
    # C2a: undo the regrouping, then proceed as in C2b
    stripped = t.without_leaf(top)
    walk = stripped.depth_search_walk(m)
    k_old = next((x for x in walk[1:] if stripped.rank(x) == 1), None)
    if k_old is None:
        raise InternalInvariantError(
            f"no rank-1 vertex after {m} in the walk of {stripped.serialize()}")
    movers = stripped.children(m)
    work = stripped
    for i in range(len(movers) - 1, 0, -1):
        mover = movers[i]
        anchor = _rejoin_anchor(work, movers[i - 1], mover)
        if anchor is None or anchor >= mover:
            raise InternalInvariantError(
                f"no valid reattachment point for {mover} below {movers[i - 1]}")
        work = work.reparented(mover, anchor)
    work = work.splice_out(m)
    relab = Relabeling(work.labels)
    sub = MarkedTree(relab.compress_tree(work), relab.forward(k_old))
    return relab.expand(inverse(sub)).with_cycle((m, top))
