"""Increasing trees and their walk correspondence with permutation words.

An increasing tree is a rooted nonplanar tree whose distinct integer labels
increase along every downward path, so the root always carries the smallest
label.  Trees normally live on the ground set {0, ..., n-1}; arbitrary
sorted ground sets are supported because several constructions delete
labels and keep working with the remainder.

Walking a tree depth first, always descending to the greatest unvisited
child, and dropping the leading root visit yields a permutation word over
{1, ..., n-1}.  ``IncreasingTree.from_word`` inverts the walk, which gives
the bijection between trees of size n and words of length n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Union

from .errors import DomainError, FormatError

PermWord = tuple[int, ...]


class IncreasingTree:
    """Immutable rooted tree whose labels increase away from the root.

    ``parent`` maps every non-root label to its parent label; the root is
    the smallest label and has no entry.  Children form an unordered set;
    they are reported in ascending order everywhere, which is a canonical
    presentation, never tree structure.

    >>> t = IncreasingTree({1: 0, 2: 0, 3: 1, 4: 0, 5: 4, 6: 2, 7: 4})
    >>> t.depth_search_walk()
    (0, 4, 7, 5, 2, 6, 1, 3)
    >>> t.to_word()
    (4, 7, 5, 2, 6, 1, 3)
    >>> sorted(t.leaves())
    [3, 5, 6, 7]
    """

    __slots__ = ("_labels", "_label_set", "_parent", "_children", "_ranks")

    def __init__(self, parent: Mapping[int, int], labels: Iterable[int] | None = None):
        parent = dict(parent)
        if labels is None:
            if not parent:
                raise DomainError("a tree with no edges needs an explicit ground set")
            label_list = sorted(set(parent) | set(parent.values()))
        else:
            label_list = sorted(labels)
            for i in range(1, len(label_list)):
                if label_list[i] == label_list[i - 1]:
                    raise DomainError(f"repeated label: {label_list[i]}")
        if not label_list:
            raise DomainError("ground set is empty")
        if label_list[0] < 0:
            raise DomainError(f"negative label: {label_list[0]}")
        label_set = frozenset(label_list)
        root = label_list[0]
        missing = label_set - {root} - set(parent)
        if missing:
            raise DomainError(f"vertex {min(missing)} has no parent entry")
        extra = set(parent) - (label_set - {root})
        if extra:
            raise DomainError(f"unexpected parent entry for {min(extra)}")
        children: dict[int, list[int]] = {v: [] for v in label_list}
        for v in label_list[1:]:
            p = parent[v]
            if p not in label_set:
                raise DomainError(f"parent {p} of vertex {v} is not a vertex")
            if p >= v:
                raise DomainError(f"parent {p} of vertex {v} must be smaller")
            children[p].append(v)
        self._labels = tuple(label_list)
        self._label_set = label_set
        self._parent = parent
        # built in ascending v order, so every child tuple is ascending
        self._children = {v: tuple(c) for v, c in children.items()}
        self._ranks: dict[int, int] | None = None

    @property
    def size(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[int, ...]:
        return self._labels

    @property
    def root(self) -> int:
        return self._labels[0]

    @property
    def is_standard(self) -> bool:
        """True when the ground set is exactly {0, ..., n-1}."""
        return self._labels == tuple(range(len(self._labels)))

    def __contains__(self, v: int) -> bool:
        return v in self._label_set

    def _require(self, v: int) -> None:
        if v not in self._label_set:
            raise DomainError(f"unknown vertex label: {v}")

    def parent_of(self, v: int) -> int | None:
        """Parent label of ``v``, or None for the root."""
        self._require(v)
        return self._parent.get(v)

    def children(self, v: int) -> tuple[int, ...]:
        """Children of ``v`` in ascending label order."""
        self._require(v)
        return self._children[v]

    def leaves(self) -> frozenset[int]:
        """All vertices without children."""
        return frozenset(v for v in self._labels if not self._children[v])

    def rank(self, v: int) -> int:
        """Edge count of a shortest downward path from ``v`` to a leaf.

        Leaves have rank 0; ``rank(v) == 1`` exactly when ``v`` has a leaf
        child.  The full table is computed once per tree and cached.
        """
        self._require(v)
        if self._ranks is None:
            ranks: dict[int, int] = {}
            # children carry larger labels, so descending order fills them first
            for x in reversed(self._labels):
                ch = self._children[x]
                ranks[x] = 1 + min(ranks[c] for c in ch) if ch else 0
            self._ranks = ranks
        return self._ranks[v]

    def depth_search_walk(self, start: int | None = None) -> tuple[int, ...]:
        """Vertices of the subtree under ``start`` (default: the root), in
        walk order: descend to the greatest unvisited child, recurse, then
        backtrack."""
        if start is None:
            start = self.root
        self._require(start)
        out: list[int] = []
        stack = [start]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(self._children[v])
        return tuple(out)

    def path_from_root(self, v: int) -> tuple[int, ...]:
        """The increasing path root, ..., v."""
        self._require(v)
        path = [v]
        while (p := self._parent.get(path[-1])) is not None:
            path.append(p)
        return tuple(reversed(path))

    def subtree_labels(self, v: int) -> frozenset[int]:
        return frozenset(self.depth_search_walk(v))

    def child_toward(self, ancestor: int, descendant: int) -> int:
        """The child of ``ancestor`` whose subtree contains ``descendant``."""
        self._require(ancestor)
        v = descendant
        self._require(v)
        while True:
            p = self._parent.get(v)
            if p is None:
                raise DomainError(f"{descendant} is not below {ancestor}")
            if p == ancestor:
                return v
            v = p

    def to_word(self) -> PermWord:
        """The walk with the root visit dropped: a permutation of 1..n-1.

        >>> IncreasingTree({1: 0, 2: 0}).to_word()
        (2, 1)
        """
        if not self.is_standard:
            raise DomainError("permutation words need ground set 0..n-1")
        return self.depth_search_walk()[1:]

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "IncreasingTree":
        """The unique tree whose walk produces ``word``.

        Each letter's parent is the nearest smaller letter to its left in
        the walk, with the implicit root 0 up front.

        >>> IncreasingTree.from_word((4, 7, 5, 2, 6, 1, 3)).serialize()
        'size=8;parents=0,0,1,0,4,2,4'
        """
        word = tuple(word)
        n = len(word) + 1
        if sorted(word) != list(range(1, n)):
            raise FormatError(f"word must be a permutation of 1..{n - 1}")
        parent: dict[int, int] = {}
        stack = [0]
        for x in word:
            while stack[-1] > x:
                stack.pop()
            parent[x] = stack[-1]
            stack.append(x)
        return cls(parent, labels=range(n))

    # -- structural edits (each returns a new tree) --

    def with_leaf(self, label: int, parent_label: int) -> "IncreasingTree":
        """Attach fresh vertex ``label`` as a child of ``parent_label``."""
        if label in self._label_set:
            raise DomainError(f"label {label} already in tree")
        self._require(parent_label)
        grown = dict(self._parent)
        grown[label] = parent_label
        return IncreasingTree(grown, self._labels + (label,))

    def without_leaf(self, v: int) -> "IncreasingTree":
        """Remove leaf vertex ``v``."""
        self._require(v)
        if self._children[v]:
            raise DomainError(f"vertex {v} is not a leaf")
        if v == self.root:
            raise DomainError("cannot delete the root")
        shrunk = dict(self._parent)
        del shrunk[v]
        return IncreasingTree(shrunk, (x for x in self._labels if x != v))

    def insert_above(self, label: int, below: int) -> "IncreasingTree":
        """Splice fresh vertex ``label`` in directly above ``below``.

        ``below``'s old parent (if any) becomes the parent of ``label``;
        when ``below`` is the root, ``label`` becomes the new root.
        """
        if label in self._label_set:
            raise DomainError(f"label {label} already in tree")
        self._require(below)
        spliced = dict(self._parent)
        old = spliced.pop(below, None)
        if old is not None:
            spliced[label] = old
        spliced[below] = label
        return IncreasingTree(spliced, self._labels + (label,))

    def reparented(self, v: int, new_parent: int) -> "IncreasingTree":
        """Move the whole subtree rooted at ``v`` under ``new_parent``."""
        self._require(v)
        self._require(new_parent)
        if v == self.root:
            raise DomainError("cannot move the root")
        moved = dict(self._parent)
        moved[v] = new_parent
        return IncreasingTree(moved, self._labels)

    def splice_out(self, v: int) -> "IncreasingTree":
        """Remove ``v``, promoting its single child into its place."""
        self._require(v)
        ch = self._children[v]
        if len(ch) != 1:
            raise DomainError(f"vertex {v} has {len(ch)} children, need exactly 1")
        child = ch[0]
        spliced = dict(self._parent)
        del spliced[child]
        p = spliced.pop(v, None)
        if p is not None:
            spliced[child] = p
        return IncreasingTree(spliced, (x for x in self._labels if x != v))

    def relabel(self, mapping: Union[Mapping[int, int], Callable[[int], int]]) -> "IncreasingTree":
        """Apply ``mapping`` to every label; the result must still be increasing."""
        fn = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
        try:
            new_labels = [fn(x) for x in self._labels]
            new_parent = {fn(v): fn(p) for v, p in self._parent.items()}
        except KeyError as exc:
            raise DomainError(f"label {exc.args[0]} missing from relabeling") from None
        return IncreasingTree(new_parent, new_labels)

    # -- text form --

    def serialize(self) -> str:
        """Canonical text: ``size=n;parents=p1,...`` on 0..n-1, otherwise
        ``labels=...;edges=child:parent,...`` with children ascending."""
        if self.is_standard:
            body = ",".join(str(self._parent[v]) for v in self._labels[1:])
            return f"size={self.size};parents={body}"
        labels = ",".join(str(x) for x in self._labels)
        edges = ",".join(f"{v}:{self._parent[v]}" for v in self._labels[1:])
        return f"labels={labels};edges={edges}"

    @classmethod
    def parse(cls, text: str) -> "IncreasingTree":
        tree, mark = _parse_tree_parts(text)
        if mark is not None:
            raise FormatError("unexpected mark field in plain tree text")
        return tree

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncreasingTree):
            return NotImplemented
        return self._labels == other._labels and self._parent == other._parent

    def __hash__(self) -> int:
        return hash((self._labels, tuple(sorted(self._parent.items()))))

    def __repr__(self) -> str:
        return f"IncreasingTree.parse({self.serialize()!r})"


@dataclass(frozen=True)
class MarkedTree:
    """An increasing tree with one distinguished vertex of rank exactly 1."""

    tree: IncreasingTree
    mark: int

    def __post_init__(self) -> None:
        r = self.tree.rank(self.mark)
        if r != 1:
            raise DomainError(f"marked vertex {self.mark} has rank {r}, need rank 1")

    @property
    def size(self) -> int:
        return self.tree.size

    def serialize(self) -> str:
        return f"{self.tree.serialize()};mark={self.mark}"

    @classmethod
    def parse(cls, text: str) -> "MarkedTree":
        tree, mark = _parse_tree_parts(text)
        if mark is None:
            raise FormatError("missing mark field")
        return cls(tree, mark)

    def __repr__(self) -> str:
        return f"MarkedTree.parse({self.serialize()!r})"


def parse_tree_text(text: str) -> IncreasingTree | MarkedTree:
    """Parse either a plain tree or a marked tree, whichever the text holds."""
    tree, mark = _parse_tree_parts(text)
    return tree if mark is None else MarkedTree(tree, mark)


def _int_field(value: str, what: str) -> int:
    if not (value.isascii() and value.isdigit()):
        raise FormatError(f"{what} must be a nonnegative integer, got {value!r}")
    return int(value)


def _parse_tree_parts(text: str) -> tuple[IncreasingTree, int | None]:
    fields: dict[str, str] = {}
    keys: list[str] = []
    for part in text.strip().split(";"):
        key, eq, value = part.partition("=")
        if not eq:
            raise FormatError(f"malformed field {part!r}")
        if key in fields:
            raise FormatError(f"duplicate field {key!r}")
        fields[key] = value
        keys.append(key)
    mark: int | None = None
    if "mark" in fields:
        if keys[-1] != "mark":
            raise FormatError("mark must be the final field")
        mark = _int_field(fields["mark"], "mark")
        keys.remove("mark")
    if keys == ["size", "parents"]:
        n = _int_field(fields["size"], "size")
        if n < 1:
            raise FormatError("size must be at least 1")
        body = fields["parents"]
        entries = body.split(",") if body else []
        if len(entries) != n - 1:
            raise FormatError(f"expected {n - 1} parent entries, got {len(entries)}")
        parent = {v: _int_field(e, f"parent of {v}") for v, e in enumerate(entries, start=1)}
        return IncreasingTree(parent, labels=range(n)), mark
    if keys == ["labels", "edges"]:
        body = fields["labels"]
        if not body:
            raise FormatError("labels field is empty")
        labels = [_int_field(x, "label") for x in body.split(",")]
        parent = {}
        if fields["edges"]:
            for item in fields["edges"].split(","):
                c, colon, p = item.partition(":")
                if not colon:
                    raise FormatError(f"malformed edge {item!r}")
                child = _int_field(c, "edge child")
                if child in parent:
                    raise FormatError(f"duplicate edge for vertex {child}")
                parent[child] = _int_field(p, "edge parent")
        return IncreasingTree(parent, labels), mark
    raise FormatError("expected size=...;parents=... or labels=...;edges=...")


def format_word(word: Iterable[int]) -> str:
    """Space-separated text for a permutation word; empty word gives ''."""
    return " ".join(str(x) for x in word)


def parse_word(text: str) -> PermWord:
    """Parse a permutation word.

    Accepts space-separated integers, or a compact run of digits when every
    letter is a single digit ("4752613" means 4 7 5 2 6 1 3).
    """
    text = text.strip()
    if not text:
        return ()
    tokens = text.split() if any(c.isspace() for c in text) else list(text)
    out = []
    for tok in tokens:
        if not (tok.isascii() and tok.isdigit()):
            raise FormatError(f"not a nonnegative integer: {tok!r}")
        out.append(int(tok))
    return tuple(out)
