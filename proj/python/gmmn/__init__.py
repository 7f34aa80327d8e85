"""Python access to the gmmn solvers.

Pairs are given as ``[((sx, sy), (tx, ty)), ...]`` with integer coordinates.
"""

from ._core import (
    CapExceeded,
    GmmnError,
    ParseError,
    Solution,
    WrongClass,
    auto_choice,
    classify,
    from_jsonl,
    generate,
    render_svg,
    solve,
    solve_file,
    to_jsonl,
)

ALGORITHMS = ("auto", "star", "tree", "tree-fast", "pseudotree", "twdp", "oracle", "approx")

__all__ = [
    "ALGORITHMS",
    "CapExceeded",
    "GmmnError",
    "ParseError",
    "Solution",
    "WrongClass",
    "auto_choice",
    "classify",
    "from_jsonl",
    "generate",
    "render_svg",
    "solve",
    "solve_file",
    "to_jsonl",
]
