"""Instance file format.

Line-oriented, DIMACS-adjacent, 1-indexed:

    c <free-form comment>
    p epa <n> <m>
    v <id> <weight>          # weight as integer or p/q; missing lines mean 1
    e <u> <v>

Parsing and serialization round-trip exactly; errors carry line numbers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .graphs import Graph, Weights, unit_weights


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse_weight(tok: str, line: int) -> Fraction:
    try:
        if "/" in tok:
            num, den = tok.split("/", 1)
            val = Fraction(int(num), int(den))
        else:
            val = Fraction(int(tok))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad weight {tok!r}", line) from exc
    if val < 0:
        raise ParseError(f"negative weight {tok}", line)
    return val


def parse_instance(text: str) -> tuple[Graph, Weights]:
    n: Optional[int] = None
    m_declared = 0
    weights: dict[int, Fraction] = {}
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate problem line", line_no)
            if len(parts) != 4 or parts[1] != "epa":
                raise ParseError("problem line must be 'p epa <n> <m>'", line_no)
            try:
                n, m_declared = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise ParseError("bad problem line numbers", line_no) from exc
            if n < 0 or m_declared < 0:
                raise ParseError("negative counts", line_no)
        elif kind == "v":
            if n is None:
                raise ParseError("vertex line before problem line", line_no)
            if len(parts) != 3:
                raise ParseError("vertex line must be 'v <id> <weight>'", line_no)
            vid = _parse_index(parts[1], n, line_no)
            if vid in weights:
                raise ParseError(f"duplicate weight for vertex {parts[1]}", line_no)
            weights[vid] = _parse_weight(parts[2], line_no)
        elif kind == "e":
            if n is None:
                raise ParseError("edge line before problem line", line_no)
            if len(parts) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", line_no)
            u = _parse_index(parts[1], n, line_no)
            v = _parse_index(parts[2], n, line_no)
            if u == v:
                raise ParseError("self-loop rejected", line_no)
            e = (u, v) if u < v else (v, u)
            if e in seen_edges:
                raise ParseError(f"duplicate edge {parts[1]} {parts[2]}", line_no)
            seen_edges.add(e)
            edges.append(e)
        else:
            raise ParseError(f"unknown line kind {kind!r}", line_no)
    if n is None:
        raise ParseError("missing problem line", 1)
    if len(edges) != m_declared:
        raise ParseError(f"declared {m_declared} edges, found {len(edges)}", 1)
    g = Graph(n, edges)
    w = tuple(weights.get(v, Fraction(1)) for v in range(n))
    return g, w


def _parse_index(tok: str, n: int, line: int) -> int:
    try:
        vid = int(tok)
    except ValueError as exc:
        raise ParseError(f"bad vertex id {tok!r}", line) from exc
    if not 1 <= vid <= n:
        raise ParseError(f"vertex id {vid} out of range 1..{n}", line)
    return vid - 1


def serialize_instance(
    g: Graph, w: Optional[Weights] = None, comments: Iterable[str] = ()
) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p epa {g.n} {g.m}")
    if w is not None and tuple(w) != unit_weights(g.n):
        for v in range(g.n):
            if w[v] != 1:
                frac = w[v]
                tok = str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"
                lines.append(f"v {v + 1} {tok}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
