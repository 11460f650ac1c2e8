"""
Edge-list text format.

    <n>
    <u> <v>
    ...

First non-comment line is the vertex count; every further non-empty line holds
two whitespace-separated 0-based vertex indices. Lines starting with ``#`` are
comments. LF or CRLF are accepted on input, LF is emitted.
"""
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .exceptions import ParseError, StorageError
from .graph import Graph, SimpleGraph, build_graph, build_simple_graph

logger = logging.getLogger(__name__)


def _parse(text: str) -> Tuple[int, List[Tuple[int, int]]]:
    n: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError(f"expected the vertex count, got {line!r}", line_number)
            n = _parse_int(fields[0], line_number)
            if n < 1:
                raise ParseError(f"vertex count must be at least 1, got {n}", line_number)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected two vertex indices, got {line!r}", line_number)
        edges.append((_parse_int(fields[0], line_number), _parse_int(fields[1], line_number)))
    if n is None:
        raise ParseError("missing vertex count", None)
    return n, edges


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", line_number) from None


def read_edge_list(text: str) -> Graph:
    """Parse edge-list text into a connected Graph (all build_graph errors propagate)."""
    n, edges = _parse(text)
    return build_graph(n, edges)


def read_simple_edge_list(text: str) -> SimpleGraph:
    """Parse edge-list text without requiring connectivity."""
    n, edges = _parse(text)
    return build_simple_graph(n, edges)


def write_edge_list(g: SimpleGraph) -> str:
    """Serialise a graph in the canonical form (no comments, LF endings, edge order kept)."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list_file(path: Union[str, Path], connected: bool = True) -> SimpleGraph:
    """Read a graph file; ``connected=False`` admits disconnected graphs."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise StorageError(str(e), file_path=str(path)) from e
    g = read_edge_list(text) if connected else read_simple_edge_list(text)
    logger.info(f"Read graph from {path}: n={g.n}, m={g.m}")
    return g


def write_edge_list_file(g: SimpleGraph, path: Union[str, Path]) -> None:
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(write_edge_list(g))
    except OSError as e:
        raise StorageError(str(e), file_path=str(path)) from e
    logger.info(f"Wrote graph to {path}: n={g.n}, m={g.m}")
