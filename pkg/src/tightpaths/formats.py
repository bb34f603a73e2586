"""Reading and writing hypergraphs.

Text format::

    # comment lines start with '#'
    n r cgh|abstract
    v1 v2 ... vr        (one edge per line, ascending)

The structured form is a plain dict ``{n, r, geometric, edges}`` suitable
for ``json.dumps``.
"""

from __future__ import annotations

from pathlib import Path

from .core import DomainError, Hypergraph


class FormatError(DomainError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def dumps(H: Hypergraph) -> str:
    lines = [f"{H.n} {H.r} {'cgh' if H.geometric else 'abstract'}"]
    lines.extend(" ".join(map(str, e)) for e in H.sorted_edges())
    return "\n".join(lines) + "\n"


def _tokens(line: str) -> list[tuple[int, str]]:
    out = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def _int(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", lineno, col) from None


def loads(text: str) -> Hypergraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(raw)
        if header is None:
            if len(toks) != 3:
                raise FormatError("header must be 'n r cgh|abstract'", lineno)
            n = _int(toks[0][1], lineno, toks[0][0])
            r = _int(toks[1][1], lineno, toks[1][0])
            if toks[2][1] not in ("cgh", "abstract"):
                raise FormatError(f"geometry must be cgh or abstract, got {toks[2][1]!r}", lineno, toks[2][0])
            if n < 1 or r < 1:
                raise FormatError("n and r must be positive", lineno)
            header = (n, r, toks[2][1] == "cgh")
            continue
        n, r, _ = header
        if len(toks) != r:
            raise FormatError(f"edge needs {r} vertices, got {len(toks)}", lineno)
        edge = []
        for col, tok in toks:
            v = _int(tok, lineno, col)
            if not (0 <= v < n):
                raise FormatError(f"vertex {v} out of range 0..{n - 1}", lineno, col)
            if edge and v <= edge[-1]:
                raise FormatError("edge vertices must be strictly ascending", lineno, col)
            edge.append(v)
        edges.append(tuple(edge))
    if header is None:
        raise FormatError("missing header", 1)
    n, r, geometric = header
    return Hypergraph.build(n, r, edges, geometric)


def read(path: str | Path) -> Hypergraph:
    return loads(Path(path).read_text())


def write(H: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(dumps(H))


def to_dict(H: Hypergraph) -> dict:
    return {"n": H.n, "r": H.r, "geometric": H.geometric, "edges": [list(e) for e in H.sorted_edges()]}


def from_dict(data: dict) -> Hypergraph:
    return Hypergraph.build(int(data["n"]), int(data["r"]), data["edges"], bool(data.get("geometric", True)))
