"""
Rainbowless - Coloring Formats
=================================
The canonical text format and DOT export.

Canonical format:

    n k
    c(0,1) c(0,2) ... c(0,n-1)
    c(1,2) ... c(1,n-1)
    ...
    c(n-2,n-1)

Lines starting with '#' are comments.  DOT export renders through the
Jinja2 template ``templates/coloring.dot.j2``.
"""

import os
from typing import Sequence

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from coloring.model import EdgeColoring
from core.errors import ColorOutOfRange, ColoringSyntaxError, PaletteExhausted

TEMPLATES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "templates")

PALETTE = [
    "red", "blue", "forestgreen", "orange", "purple", "brown",
    "deeppink", "cyan4", "gold3", "gray40", "navy", "olivedrab",
]


# =============================================================================
# Canonical text format
# =============================================================================

def serialize_coloring(c: EdgeColoring) -> str:
    lines = [f"{c.n} {c.k}"]
    for u in range(c.n - 1):
        lines.append(" ".join(str(c.color(u, v)) for v in range(u + 1, c.n)))
    return "\n".join(lines) + "\n"


def _int_at(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ColoringSyntaxError(f"expected an integer, got {token!r}", line, column) from None


def _tokens(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            out.append((number, raw))
    return out


def _split(raw: str) -> list[tuple[int, str]]:
    """Tokens with their 1-based columns."""
    out, col = [], 0
    for token in raw.split():
        col = raw.index(token, col)
        out.append((col + 1, token))
        col += len(token)
    return out


def parse_coloring(text: str) -> EdgeColoring:
    """
    Raises:
        ColoringSyntaxError: Malformed header, missing line or wrong token count.
        ColorOutOfRange:     A color is outside [0, k).
    """
    rows = _tokens(text)
    if not rows:
        raise ColoringSyntaxError("missing header 'n k'", 1)
    header_line, header = rows[0]
    fields = _split(header)
    if len(fields) != 2:
        raise ColoringSyntaxError("header must be 'n k'", header_line, 1)
    n = _int_at(fields[0][1], header_line, fields[0][0])
    k = _int_at(fields[1][1], header_line, fields[1][0])
    if n < 1 or k < 1:
        raise ColoringSyntaxError("n and k must be positive", header_line, 1)

    body = rows[1:]
    last_line = rows[-1][0]
    colors: list[int] = []
    for u in range(n - 1):
        if u >= len(body):
            raise ColoringSyntaxError(f"missing line for vertex {u}", last_line + 1)
        number, raw = body[u]
        fields = _split(raw)
        expected = n - 1 - u
        if len(fields) != expected:
            raise ColoringSyntaxError(
                f"vertex {u} needs {expected} colors, found {len(fields)}", number, 1,
            )
        for offset, (column, token) in enumerate(fields):
            color = _int_at(token, number, column)
            if not 0 <= color < k:
                raise ColorOutOfRange(color, k, (u, u + 1 + offset))
            colors.append(color)
    if len(body) > n - 1:
        raise ColoringSyntaxError("unexpected data after the last row", body[n - 1][0], 1)
    return EdgeColoring(n, k, colors)


# =============================================================================
# DOT export
# =============================================================================

def _environment() -> Environment:
    return Environment(
        loader=FileSystemLoader(TEMPLATES_DIR),
        undefined=StrictUndefined,
        keep_trailing_newline=True,
        trim_blocks=True,
        lstrip_blocks=True,
    )


def _fallback_color(color: int) -> str:
    """HSV color string Graphviz accepts, spread by the golden ratio."""
    hue = (color * 0.618033988749895) % 1.0
    return f"{hue:.3f} 0.750 0.850"


def export_dot(
    c: EdgeColoring,
    clusters: Sequence[Sequence[int]] | None = None,
    numeric_fallback: bool = True,
    palette: Sequence[str] = PALETTE,
    name: str = "coloring",
) -> str:
    """
    One undirected edge per pair with a ``color`` attribute and the color
    id as label, ordered by (u, v).  ``clusters`` groups vertices into
    subgraph clusters.

    Raises:
        PaletteExhausted: k exceeds the palette and the fallback is disabled.
    """
    if c.k > len(palette) and not numeric_fallback:
        raise PaletteExhausted(f"{c.k} colors but only {len(palette)} palette entries")

    def color_name(color: int) -> str:
        return palette[color] if color < len(palette) else _fallback_color(color)

    clustered = {v for block in clusters or [] for v in block}
    edges = [{"u": u, "v": v, "id": col, "color": color_name(col)} for u, v, col in c.pairs()]
    template = _environment().get_template("coloring.dot.j2")
    return template.render(
        name=name,
        n=c.n,
        k=c.k,
        clusters=[sorted(block) for block in clusters or []],
        loose=[v for v in range(c.n) if v not in clustered],
        edges=edges,
    )
