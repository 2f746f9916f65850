"""Graphviz DOT rendering of an edge coloring."""

from __future__ import annotations

from .graph import ColoringLengthError, EdgeColoring, Graph

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
)


def to_dot(g: Graph, col: EdgeColoring, name: str = "coloring") -> str:
    """Undirected DOT graph, one styled edge per graph edge.

    Colors cycle through a fixed 12-entry palette; once ids run past the
    palette every edge also carries its color id as a label so groups stay
    distinguishable.
    """
    if len(col) != g.m:
        raise ColoringLengthError(f"coloring has {len(col)} entries, graph has {g.m} edges")
    wide = col.num_colors > len(PALETTE)
    lines = [f"graph {name} {{", "  node [shape=circle fontsize=10];"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for e, (u, v) in enumerate(g.edges):
        c = col[e]
        attrs = f'color="{PALETTE[c % len(PALETTE)]}"'
        if wide:
            attrs += f' label="{c}"'
        lines.append(f"  {u} -- {v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
