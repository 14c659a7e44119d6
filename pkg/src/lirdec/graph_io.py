"""Graph and decomposition serialization.

Formats:
  - graph6: 63-offset ASCII, upper-triangle bit order (column by column).
  - edge list: one "u v" pair per line, 0-based vertex ids.
  - JSON decomposition: {"n":..,"k":..,"edges":[{"u":..,"v":..,"counts":[..]}]}.
  - DOT: one parallel edge statement per color unit; palette red/blue/purple.
"""

from __future__ import annotations

import json
from typing import Iterator

from .decomposition import Decomposition
from .graphs import Multigraph, SimpleGraph, canon_edge

DOT_COLORS = ("red", "blue", "purple")


class Graph6Error(ValueError):
    """Raised on malformed graph6 input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _g6_read_n(data: str, line: int | None) -> tuple[int, int]:
    """Decode the leading vertex count; returns (n, chars consumed)."""
    if not data:
        raise Graph6Error("empty graph6 string", line)
    c0 = ord(data[0])
    if c0 == 126:  # '~' prefix: 18-bit form, n <= 258047
        if len(data) < 4 or data[1] == "~":
            raise Graph6Error("unsupported or truncated graph6 size field", line)
        vals = [ord(ch) - 63 for ch in data[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise Graph6Error("invalid graph6 size field", line)
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    n = c0 - 63
    if n < 0 or n > 62:
        raise Graph6Error(f"invalid graph6 size byte {data[0]!r}", line)
    return n, 1


def parse_graph6(text: str, line: int | None = None) -> SimpleGraph:
    """Decode one graph6 string into a SimpleGraph."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    n, offset = _g6_read_n(data, line)
    body = data[offset:]
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    if len(body) != need_chars:
        raise Graph6Error(
            f"graph6 body for n={n} needs {need_chars} chars, got {len(body)}", line
        )
    bits = 0
    for ch in body:
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise Graph6Error(f"invalid graph6 character {ch!r}", line)
        bits = (bits << 6) | v
    bits >>= 6 * need_chars - need_bits  # drop padding
    edges = []
    idx = need_bits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> idx) & 1:
                edges.append((i, j))
            idx -= 1
    return SimpleGraph(n, edges)


def to_graph6(g: SimpleGraph) -> str:
    """Encode a SimpleGraph as a graph6 string (n <= 62)."""
    if g.n > 62:
        raise ValueError("graph6 emission supports at most 62 vertices")
    bits = 0
    count = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
            count += 1
    pad = (-count) % 6
    bits <<= pad
    chars = []
    for shift in range(count + pad - 6, -6, -6):
        chars.append(chr(63 + ((bits >> shift) & 0x3F)))
    return chr(63 + g.n) + "".join(chars)


def read_graph6_lines(text: str) -> Iterator[SimpleGraph]:
    """Parse a graph6 file: one graph per non-empty line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            yield parse_graph6(raw, line=lineno)


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse "u v" lines (0-based); n is one past the largest vertex id."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex id")
        top = max(top, u, v)
        edges.append((u, v))
    if top < 0:
        raise ValueError("edge list is empty")
    return SimpleGraph(top + 1, edges)


def decomposition_to_json(d: Decomposition) -> str:
    """Serialize a decomposition; byte-stable across runs."""
    payload = {
        "n": d.host.n,
        "k": d.k,
        "edges": [
            {"u": u, "v": v, "counts": list(d.assign[(u, v)])}
            for u, v in d.host.edges
        ],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def decomposition_from_json(text: str) -> Decomposition:
    """Rebuild a decomposition (and its host multigraph) from JSON."""
    payload = json.loads(text)
    n = payload["n"]
    k = payload["k"]
    assign = {}
    mult = {}
    for rec in payload["edges"]:
        e = canon_edge(rec["u"], rec["v"])
        counts = tuple(rec["counts"])
        assign[e] = counts
        mult[e] = sum(counts)
    host = Multigraph(SimpleGraph(n, assign.keys()), mult)
    return Decomposition(host, k, assign)


def decomposition_to_dot(d: Decomposition, name: str = "decomposition") -> str:
    """Emit DOT with one parallel edge statement per color unit.

    A doubled edge shows as two red lines (RR), two blue (BB), or one of
    each (RB); a third color renders purple.
    """
    lines = [f"graph {name} {{"]
    for v in range(d.host.n):
        lines.append(f"  {v};")
    for u, v in d.host.edges:
        for c, cnt in enumerate(d.assign[(u, v)]):
            color = DOT_COLORS[c] if c < len(DOT_COLORS) else f"gray{30 + c * 10}"
            for _ in range(cnt):
                lines.append(f'  {u} -- {v} [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
