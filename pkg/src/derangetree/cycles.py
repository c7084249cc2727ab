"""Permutations of a finite integer set stored as disjoint cycles.

Canonical form: every cycle is rotated so its smallest element comes first,
and cycles are sorted by their smallest element.  A derangement is a
permutation with no fixed point, i.e. no cycle of length 1.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import DomainError, FormatError


class CycleDecomposition:
    """Immutable permutation in disjoint-cycle form.

    >>> p = CycleDecomposition([(5, 0, 3), (4, 2, 1)])
    >>> p.serialize()
    '(0 3 5)(1 4 2)'
    >>> p.image(3), p.preimage(3)
    (5, 0)
    >>> p.is_derangement
    True
    """

    __slots__ = ("_cycles", "_ground", "_succ", "_pred", "_cycle_of")

    def __init__(self, cycles: Iterable[Sequence[int]]):
        seen: set[int] = set()
        canon: list[tuple[int, ...]] = []
        for cyc in cycles:
            cyc = tuple(int(x) for x in cyc)
            if not cyc:
                raise DomainError("empty cycle")
            for x in cyc:
                if x < 0:
                    raise DomainError(f"negative label: {x}")
                if x in seen:
                    raise DomainError(f"repeated label: {x}")
                seen.add(x)
            low = cyc.index(min(cyc))
            canon.append(cyc[low:] + cyc[:low])
        canon.sort(key=lambda c: c[0])
        self._cycles = tuple(canon)
        self._ground = tuple(sorted(seen))
        succ: dict[int, int] = {}
        cycle_of: dict[int, int] = {}
        for i, cyc in enumerate(canon):
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                succ[a] = b
                cycle_of[a] = i
        self._succ = succ
        self._pred = {b: a for a, b in succ.items()}
        self._cycle_of = cycle_of

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "CycleDecomposition":
        """Build from one-line notation, ``word[i]`` being the image of i."""
        word = tuple(word)
        if sorted(word) != list(range(len(word))):
            raise DomainError(f"word is not a permutation of 0..{len(word) - 1}")
        seen = [False] * len(word)
        cycles = []
        for i in range(len(word)):
            if seen[i]:
                continue
            cyc = []
            x = i
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = word[x]
            cycles.append(tuple(cyc))
        return cls(cycles)

    @property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        return self._cycles

    @property
    def ground_set(self) -> tuple[int, ...]:
        return self._ground

    @property
    def size(self) -> int:
        return len(self._ground)

    @property
    def is_derangement(self) -> bool:
        return all(len(c) >= 2 for c in self._cycles)

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self._cycles if len(c) == 1)

    def _require(self, x: int) -> None:
        if x not in self._succ:
            raise DomainError(f"unknown label: {x}")

    def image(self, x: int) -> int:
        self._require(x)
        return self._succ[x]

    def preimage(self, x: int) -> int:
        self._require(x)
        return self._pred[x]

    def two_cycle_partner(self, x: int) -> int | None:
        """The other element of x's cycle if that cycle has length 2, else None."""
        self._require(x)
        cyc = self._cycles[self._cycle_of[x]]
        if len(cyc) != 2:
            return None
        return cyc[0] if cyc[1] == x else cyc[1]

    def remove(self, x: int) -> "CycleDecomposition":
        """Excise ``x`` from its cycle; a cycle shrinking to nothing is dropped."""
        self._require(x)
        cycles = []
        for cyc in self._cycles:
            if x in cyc:
                rest = tuple(y for y in cyc if y != x)
                if rest:
                    cycles.append(rest)
            else:
                cycles.append(cyc)
        return CycleDecomposition(cycles)

    def remove_cycle_of(self, x: int) -> "CycleDecomposition":
        """Drop the whole cycle containing ``x``."""
        self._require(x)
        idx = self._cycle_of[x]
        return CycleDecomposition(c for i, c in enumerate(self._cycles) if i != idx)

    def insert_after(self, anchor: int, new: int) -> "CycleDecomposition":
        """Splice ``new`` into anchor's cycle as its successor.

        The old successor of ``anchor`` becomes the successor of ``new``;
        this is the inverse of ``remove(new)``.
        """
        self._require(anchor)
        if new in self._succ:
            raise DomainError(f"label {new} already present")
        cycles = []
        for cyc in self._cycles:
            if anchor in cyc:
                at = cyc.index(anchor)
                cyc = cyc[: at + 1] + (new,) + cyc[at + 1 :]
            cycles.append(cyc)
        return CycleDecomposition(cycles)

    def with_cycle(self, cycle: Sequence[int]) -> "CycleDecomposition":
        """Add a new cycle on labels disjoint from the current ground set."""
        return CycleDecomposition(self._cycles + (tuple(cycle),))

    def relabel(self, mapping: Union[Mapping[int, int], Callable[[int], int]]) -> "CycleDecomposition":
        """Apply ``mapping`` to every label, preserving cycle structure."""
        fn = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
        try:
            return CycleDecomposition(tuple(fn(x) for x in cyc) for cyc in self._cycles)
        except KeyError as exc:
            raise DomainError(f"label {exc.args[0]} missing from relabeling") from None

    def serialize(self) -> str:
        return "".join("(" + " ".join(str(x) for x in cyc) + ")" for cyc in self._cycles)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleDecomposition):
            return NotImplemented
        return self._cycles == other._cycles

    def __hash__(self) -> int:
        return hash(self._cycles)

    def __repr__(self) -> str:
        return f"CycleDecomposition.parse({self.serialize()!r})"

    @classmethod
    def parse(cls, text: str) -> "CycleDecomposition":
        return parse_cycles(text)


def parse_cycles(text: str, *, size: int | None = None,
                 require_derangement: bool = False) -> CycleDecomposition:
    """Parse disjoint cycle notation like ``(0 5 3)(1 4 2)``.

    A parenthesized group without spaces is read digit by digit, so the
    compact form ``(053)(142)`` works whenever every label is a single
    digit; multi-digit labels need spaces.  With ``size`` given, the ground
    set must be exactly {0, ..., size-1}.  Syntax problems raise
    ``FormatError`` with a 1-based column; semantic problems raise
    ``DomainError`` naming the offending label.
    """
    cycles: list[list[int]] = []
    i, n = 0, len(text)

    def syntax(pos: int, msg: str) -> None:
        raise FormatError(f"column {pos + 1}: {msg}")

    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            syntax(i, f"expected '(' but found {ch!r}")
        close = text.find(")", i + 1)
        if close == -1:
            syntax(i, "unclosed '('")
        body = text[i + 1 : close]
        if not body.strip():
            syntax(i + 1, "empty cycle")
        labels: list[int] = []
        if any(c.isspace() for c in body):
            j = i + 1
            while j < close:
                if text[j].isspace():
                    j += 1
                    continue
                start = j
                while j < close and not text[j].isspace():
                    j += 1
                tok = text[start:j]
                if not (tok.isascii() and tok.isdigit()):
                    syntax(start, f"expected an integer but found {tok!r}")
                labels.append(int(tok))
        else:
            for off, c in enumerate(body):
                if not (c.isascii() and c.isdigit()):
                    syntax(i + 1 + off, f"expected a digit but found {c!r}")
                labels.append(int(c))
        cycles.append(labels)
        i = close + 1
    if not cycles:
        raise FormatError("column 1: expected '(' but found end of input")
    seen: set[int] = set()
    for cyc in cycles:
        for x in cyc:
            if x in seen:
                raise DomainError(f"repeated label: {x}")
            seen.add(x)
    if size is not None:
        for x in sorted(seen):
            if x >= size:
                raise DomainError(f"label {x} out of range for size {size}")
        for x in range(size):
            if x not in seen:
                raise DomainError(f"missing label: {x}")
    if require_derangement:
        for cyc in cycles:
            if len(cyc) == 1:
                raise DomainError(f"fixed point: {cyc[0]}")
    return CycleDecomposition(cycles)
