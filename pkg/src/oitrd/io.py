"""Edge-list files, family arguments from the command line, and the JSON report document."""

from __future__ import annotations

from typing import Sequence

from .generators import FAMILY_KINDS, PRODUCT_KINDS, FamilySpec, LabeledGraph
from .graph import Graph, InputError, build_graph


class ParseError(InputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus m ``u v`` lines; '#' lines and blank lines are skipped."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise ParseError(lineno, f"expected integers, got {line!r}") from None
        if len(nums) != 2:
            raise ParseError(lineno, f"expected two integers, got {len(nums)}")
        if header is None:
            n, m = nums
            if n < 0 or m < 0:
                raise ParseError(lineno, "header values must be non-negative")
            header = (n, m)
            continue
        u, v = nums
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}")
        if len(edges) == header[1]:
            raise ParseError(lineno, f"more edge lines than the {header[1]} announced in the header")
        edges.append((u, v))
    if header is None:
        raise ParseError(1, "missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(len(text.splitlines()) + 1, f"header announces {header[1]} edges but {len(edges)} were given")
    return build_graph(header[0], edges)


def write_edge_list(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{G.n} {G.m}")
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


_ALIASES = {"bipartite": "complete_bipartite", "corona": "corona_empty"}
_ALIASES.update({k: f"{k}_kk" for k in PRODUCT_KINDS})


def family_from_args(kind: str, params: Sequence[str]) -> FamilySpec:
    """``fpq`` takes three comma lists (t r rp); ``corona_empty`` takes r, then a base family and its parameters."""
    kind = _ALIASES.get(kind, kind)
    if kind not in FAMILY_KINDS:
        raise InputError(f"unknown family {kind!r}; expected one of {', '.join(FAMILY_KINDS)}")

    def ints(items: Sequence[str]) -> tuple[int, ...]:
        try:
            return tuple(int(x) for x in items)
        except ValueError:
            raise InputError(f"{kind} parameters must be integers, got {list(items)}") from None

    if kind == "fpq":
        if len(params) != 3:
            raise InputError("fpq takes three comma-separated lists: t r rp (e.g. 3 4 8 or 3,3 4,4 8,8)")
        return FamilySpec(kind, tuple(ints(p.split(",")) for p in params))
    if kind == "corona_empty":
        if len(params) < 2:
            raise InputError("corona_empty takes r, then a base family and its parameters")
        (r,) = ints(params[:1])
        return FamilySpec(kind, (r,), family_from_args(params[1], params[2:]))
    return FamilySpec(kind, ints(params))


def graph_json(G: Graph, lg: LabeledGraph | None = None) -> dict:
    out: dict = {"order": G.n, "edges": [list(e) for e in G.edges]}
    if lg is not None and lg.family is not None:
        out["family"] = lg.family.to_json()
        out["names"] = list(lg.names)
    return out


def graph_from_json(data: dict) -> Graph:
    return build_graph(int(data["order"]), [tuple(e) for e in data["edges"]])
