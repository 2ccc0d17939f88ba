"""Deterministic constructors for every graph family used by the solvers and audits."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Mapping, Sequence

from .graph import Graph, InputError, build_graph

FAMILY_KINDS = (
    "complete",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "wheel",
    "circulant",
    "sierpinski",
    "cartesian_kk",
    "direct_kk",
    "strong_kk",
    "lexicographic_kk",
    "corona_empty",
    "fpq",
)

PRODUCT_KINDS = ("cartesian", "direct", "strong", "lexicographic")


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters.

    ``fpq`` carries three tuples ``(t, r, rp)``; ``corona_empty`` carries
    ``(r,)`` and the spec of the base graph in ``base``.
    """

    kind: str
    params: tuple = ()
    base: FamilySpec | None = None

    def __str__(self) -> str:
        if self.kind == "fpq":
            t, r, rp = self.params
            return f"fpq(t={list(t)},r={list(r)},rp={list(rp)})"
        if self.kind == "corona_empty":
            return f"corona({self.base},{self.params[0]})"
        return f"{self.kind}({','.join(str(p) for p in self.params)})"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "params": [list(p) if isinstance(p, tuple) else p for p in self.params]}
        if self.base is not None:
            out["base"] = self.base.to_json()
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> FamilySpec:
        params = tuple(tuple(p) if isinstance(p, list) else p for p in data.get("params", ()))
        base = cls.from_json(data["base"]) if data.get("base") else None
        return cls(data["kind"], params, base)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    names: tuple[str, ...]
    family: FamilySpec | None = None
    roles: Mapping[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.names) != self.graph.n:
            raise InputError("one name per vertex required")
        if len(set(self.names)) != len(self.names):
            raise InputError("vertex names must be unique")

    def index(self, name: str) -> int:
        return self.names.index(name)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InputError(msg)


def _ints(params: Sequence, count: int, kind: str) -> tuple[int, ...]:
    _need(len(params) == count, f"{kind} takes {count} integer parameter(s), got {len(params)}")
    for p in params:
        _need(isinstance(p, int) and not isinstance(p, bool), f"{kind} parameters must be integers, got {p!r}")
    return tuple(params)


def complete(n: int) -> LabeledGraph:
    _need(n >= 2, f"complete graph needs n >= 2, got {n}")
    G = build_graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    return LabeledGraph(G, tuple(str(v) for v in range(n)), FamilySpec("complete", (n,)))


def path(n: int) -> LabeledGraph:
    _need(n >= 2, f"path needs n >= 2, got {n}")
    G = build_graph(n, ((v, v + 1) for v in range(n - 1)))
    return LabeledGraph(G, tuple(str(v) for v in range(n)), FamilySpec("path", (n,)))


def cycle(n: int) -> LabeledGraph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    G = build_graph(n, ((v, (v + 1) % n) for v in range(n)))
    return LabeledGraph(G, tuple(str(v) for v in range(n)), FamilySpec("cycle", (n,)))


def star(s: int) -> LabeledGraph:
    """K_{1,s}; the center is vertex 0."""
    _need(s >= 1, f"star needs s >= 1 leaves, got {s}")
    G = build_graph(s + 1, ((0, v) for v in range(1, s + 1)))
    names = ("c",) + tuple(f"l{i}" for i in range(1, s + 1))
    return LabeledGraph(G, names, FamilySpec("star", (s,)), {"center": (0,), "leaves": tuple(range(1, s + 1))})


def complete_bipartite(r: int, s: int) -> LabeledGraph:
    """K_{r,s} with the r-side on vertices 0..r-1."""
    _need(r >= 1 and s >= 1, f"complete bipartite needs r, s >= 1, got ({r}, {s})")
    G = build_graph(r + s, ((a, r + b) for a in range(r) for b in range(s)))
    names = tuple(f"a{i}" for i in range(r)) + tuple(f"b{j}" for j in range(s))
    roles = {"r_side": tuple(range(r)), "s_side": tuple(range(r, r + s))}
    return LabeledGraph(G, names, FamilySpec("complete_bipartite", (r, s)), roles)


def wheel(n: int) -> LabeledGraph:
    """W_n: a rim cycle on 0..n-2 and the hub n-1."""
    _need(n >= 4, f"wheel needs n >= 4, got {n}")
    rim = n - 1
    edges = [(v, (v + 1) % rim) for v in range(rim)] + [(v, rim) for v in range(rim)]
    names = tuple(f"r{v}" for v in range(rim)) + ("h",)
    return LabeledGraph(build_graph(n, edges), names, FamilySpec("wheel", (n,)), {"hub": (rim,), "rim": tuple(range(rim))})


def corona_empty(base: LabeledGraph, r: int) -> LabeledGraph:
    """G ⊙ N_r: vertex v of the base keeps its id; its leaves follow after the base."""
    _need(r >= 1, f"corona needs r >= 1, got {r}")
    n0 = base.graph.n
    edges = list(base.graph.edges)
    names = list(base.names)
    for v in range(n0):
        for j in range(r):
            leaf = n0 + v * r + j
            edges.append((v, leaf))
            names.append(f"{base.names[v]}'{j}")
    spec = FamilySpec("corona_empty", (r,), base.family)
    return LabeledGraph(build_graph(n0 * (r + 1), edges), tuple(names), spec)


def gen_circulant(n: int, k: int) -> LabeledGraph:
    """C(n, k): i ~ i ± j (mod n) for j = 1..k."""
    _need(n >= 2, f"circulant needs n >= 2, got {n}")
    _need(1 <= k <= n // 2, f"circulant needs 1 <= k <= n/2, got k={k}, n={n}")
    edges = {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in range(1, k + 1)}
    return LabeledGraph(build_graph(n, edges), tuple(f"v{i}" for i in range(n)), FamilySpec("circulant", (n, k)))


def sierpinski_adjacent(a: Sequence[int], b: Sequence[int]) -> bool:
    """Adjacency of two words of S_p^n, read straight off the definition."""
    if len(a) != len(b):
        return False
    for r, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return all(a[t] == y and b[t] == x for t in range(r + 1, len(a)))
    return False


def gen_sierpinski(p: int, n: int) -> LabeledGraph:
    """S_p^n; vertex index is the base-p value of its word (first letter most significant)."""
    _need(p >= 3, f"Sierpinski graph needs p >= 3, got {p}")
    _need(n >= 1, f"Sierpinski graph needs n >= 1, got {n}")
    words = list(cartesian(range(p), repeat=n))
    edges = [(i, j) for i in range(len(words)) for j in range(i + 1, len(words)) if sierpinski_adjacent(words[i], words[j])]
    names = tuple("".join(str(d) for d in w) for w in words) if p <= 10 else tuple(".".join(map(str, w)) for w in words)
    return LabeledGraph(build_graph(len(words), edges), names, FamilySpec("sierpinski", (p, n)))


def gen_product(kind: str, r: int, s: int) -> LabeledGraph:
    """Product of K_r and K_s; vertex (i, j) has index i*s + j."""
    _need(kind in PRODUCT_KINDS, f"unknown product {kind!r}; expected one of {PRODUCT_KINDS}")
    _need(r >= 1 and s >= 1, f"product factors need r, s >= 1, got ({r}, {s})")
    _need(r * s > 1, "product of K_1 and K_1 is a single isolated vertex")
    _need(kind != "direct" or min(r, s) >= 2, "direct product with a K_1 factor is edgeless")

    def adjacent(i: int, j: int, i2: int, j2: int) -> bool:
        cart = (i == i2 and j != j2) or (i != i2 and j == j2)
        direct = i != i2 and j != j2
        if kind == "cartesian":
            return cart
        if kind == "direct":
            return direct
        if kind == "strong":
            return cart or direct
        return i != i2 or j != j2  # lexicographic: i ~ i2 in K_r, or i == i2 and j ~ j2

    cells = [(i, j) for i in range(r) for j in range(s)]
    edges = [
        (a, b)
        for a in range(len(cells))
        for b in range(a + 1, len(cells))
        if adjacent(*cells[a], *cells[b])
    ]
    names = tuple(f"({i},{j})" for i, j in cells)
    return LabeledGraph(build_graph(r * s, edges), names, FamilySpec(f"{kind}_kk", (r, s)))


def gen_fpq(t: Sequence[int], r: Sequence[int], rp: Sequence[int]) -> LabeledGraph:
    """A member of the F_{p,q} family.

    Layout: ``w`` is vertex 0; each star contributes its center then its
    leaves (the first leaf is ``z_i``); each bipartite block contributes its
    r-side (first two are ``x_i``, ``y_i``), its r'-side (first is ``w_i``),
    then the pendants of ``x_i`` and of ``y_i``.
    """
    t, r, rp = tuple(t), tuple(r), tuple(rp)
    _need(len(t) >= 1, "fpq needs at least one star")
    _need(len(r) == len(rp), f"r and rp must have equal length, got {len(r)} and {len(rp)}")
    for i, ti in enumerate(t, 1):
        _need(ti >= 3, f"fpq: t_{i} = {ti} violates t_i >= 3")
    for i, (ri, rpi) in enumerate(zip(r, rp), 1):
        _need(4 <= ri and 2 * ri <= rpi, f"fpq: block {i} violates 4 <= r_i <= r'_i/2 (r_i={ri}, r'_i={rpi})")

    names: list[str] = ["w"]
    edges: list[tuple[int, int]] = []
    roles: dict[str, list[int]] = {k: [] for k in ("w", "c", "z", "x", "y", "wi", "W", "r_side", "star_leaves", "rp_side", "pendants")}
    roles["w"].append(0)

    def add(name: str) -> int:
        names.append(name)
        return len(names) - 1

    for i, ti in enumerate(t, 1):
        c = add(f"c{i}")
        roles["c"].append(c)
        for j in range(ti):
            leaf = add(f"z{i}" if j == 0 else f"s{i}_{j}")
            edges.append((c, leaf))
            roles["star_leaves"].append(leaf)
            if j == 0:
                roles["z"].append(leaf)
                edges.append((0, leaf))
    for i, (ri, rpi) in enumerate(zip(r, rp), 1):
        left = []
        for j in range(ri):
            nm = f"x{i}" if j == 0 else f"y{i}" if j == 1 else f"a{i}_{j}"
            left.append(add(nm))
        right = [add(f"w{i}" if j == 0 else f"b{i}_{j}") for j in range(rpi)]
        edges.extend((a, b) for a in left for b in right)
        x, y = left[0], left[1]
        roles["x"].append(x)
        roles["y"].append(y)
        roles["W"].extend(left[2:])
        roles["r_side"].extend(left)
        roles["rp_side"].extend(right)
        roles["wi"].append(right[0])
        edges.append((0, right[0]))
        for owner, tag in ((x, "x"), (y, "y")):
            for j in range(ri):
                leaf = add(f"p{tag}{i}_{j}")
                edges.append((owner, leaf))
                roles["pendants"].append(leaf)

    spec = FamilySpec("fpq", (t, r, rp))
    frozen_roles = {k: tuple(v) for k, v in roles.items()}
    return LabeledGraph(build_graph(len(names), edges), tuple(names), spec, frozen_roles)


def generate(spec: FamilySpec) -> LabeledGraph:
    """Dispatch a FamilySpec to its constructor."""
    kind, params = spec.kind, spec.params
    if kind == "complete":
        return complete(*_ints(params, 1, kind))
    if kind == "path":
        return path(*_ints(params, 1, kind))
    if kind == "cycle":
        return cycle(*_ints(params, 1, kind))
    if kind == "star":
        return star(*_ints(params, 1, kind))
    if kind == "complete_bipartite":
        return complete_bipartite(*_ints(params, 2, kind))
    if kind == "wheel":
        return wheel(*_ints(params, 1, kind))
    if kind == "circulant":
        return gen_circulant(*_ints(params, 2, kind))
    if kind == "sierpinski":
        return gen_sierpinski(*_ints(params, 2, kind))
    if kind.endswith("_kk") and kind[:-3] in PRODUCT_KINDS:
        return gen_product(kind[:-3], *_ints(params, 2, kind))
    if kind == "corona_empty":
        _need(spec.base is not None, "corona_empty needs a base family")
        return corona_empty(generate(spec.base), *_ints(params, 1, kind))
    if kind == "fpq":
        _need(len(params) == 3, "fpq takes (t, r, rp)")
        return gen_fpq(*params)
    raise InputError(f"unknown family {kind!r}; expected one of {FAMILY_KINDS}")
