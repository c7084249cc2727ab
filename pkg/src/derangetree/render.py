"""Graphviz DOT output for increasing trees.

The marked vertex, when given, is drawn as a red box, matching the
convention of drawing marks as red squares; everything else is a circle.
Feed the output to dot, e.g. ``dot -Tpng -O tree.gv``.
"""

from __future__ import annotations

from .errors import DomainError
from .trees import IncreasingTree


def to_dot(tree: IncreasingTree, mark: int | None = None) -> str:
    """DOT digraph with one node per vertex and one edge per parent link;
    children are emitted in ascending label order."""
    if mark is not None and mark not in tree:
        raise DomainError(f"unknown vertex label: {mark}")
    lines = ["digraph tree {"]
    for v in tree.labels:
        if v == mark:
            lines.append(f'  {v} [label="{v}", shape=box, color=red, fontcolor=red];')
        else:
            lines.append(f'  {v} [label="{v}", shape=circle];')
    for v in tree.labels:
        for c in tree.children(v):
            lines.append(f"  {v} -> {c};")
    lines.append("}")
    return "\n".join(lines) + "\n"
