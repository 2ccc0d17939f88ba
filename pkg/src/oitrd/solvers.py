"""Exact solvers for the nine parameters.

Every domination-type parameter here is the minimum weight of a labeling
V -> {0, .., top} under three switchable rules:

* every 0 has a neighbor labelled at least ``threshold``;
* (``total``) no positive vertex is isolated among the positives;
* (``outer_independent``) the 0s form an independent set.

Sets are the ``top = threshold = 1`` case (label 1 = "in the set"), Roman
functions the ``top = threshold = 2`` case.  One depth-first branch and
bound handles all of them; the vertex cover / independence pair has its own
small maximum-independent-set search.  All searches are exact; the only
pruning is against admissible lower bounds.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import DomainError, Graph, InputError, set_predicate
from .labeling import RomanLabeling, Variant, make_labeling, validate

log = logging.getLogger(__name__)

PARAMETERS = ("alpha", "beta", "gamma", "gamma_t", "gamma_toi", "gamma_R", "gamma_tR", "gamma_oiR", "gamma_oitR")
SET_KINDS = ("max_independent", "min_cover", "min_dominating", "min_total_dominating", "min_oit_dominating")

# kind -> (predicate mode, total, outer_independent)
_SET_RULES = {
    "min_dominating": ("dominating", False, False),
    "min_total_dominating": ("total_dominating", True, False),
    "min_oit_dominating": ("oit_dominating", True, True),
}
_PARAM_TO_SET = {
    "alpha": "min_cover",
    "beta": "max_independent",
    "gamma": "min_dominating",
    "gamma_t": "min_total_dominating",
    "gamma_toi": "min_oit_dominating",
}
_PARAM_TO_VARIANT = {
    "gamma_R": Variant.RDF,
    "gamma_tR": Variant.TRDF,
    "gamma_oiR": Variant.OIRDF,
    "gamma_oitR": Variant.OITRDF,
}

_EPS = 1e-9
_CLOCK_STRIDE = 512


class SolverTimeout(Exception):
    """Raised internally when the wall-clock budget runs out mid-search."""


@dataclass(frozen=True)
class VertexSetCertificate:
    kind: str
    set: frozenset[int]
    value: int


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class _Deadline:
    def __init__(self, deadline: float | None):
        self.deadline = deadline
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and self.ticks % _CLOCK_STRIDE == 0 and time.monotonic() > self.deadline:
            raise SolverTimeout


def _search_order(G: Graph) -> list[int]:
    """Breadth-first from a maximum-degree vertex, higher degree first within a layer."""
    n = G.n
    if n == 0:
        return []
    seen = [False] * n
    order: list[int] = []
    for root in sorted(range(n), key=lambda v: (-G.degree(v), v)):
        if seen[root]:
            continue
        seen[root] = True
        frontier = [root]
        while frontier:
            order.extend(frontier)
            nxt = []
            for v in frontier:
                for u in sorted(G.neighbors(v), key=lambda u: (-G.degree(u), u)):
                    if not seen[u]:
                        seen[u] = True
                        nxt.append(u)
            frontier = nxt
    return order


class _LabelSearch:
    """Branch and bound over labelings of one connected graph."""

    def __init__(self, G: Graph, top: int, total: bool, outer_independent: bool, clock: _Deadline):
        self.G = G
        self.n = G.n
        self.top = top
        self.threshold = top
        self.total = total
        self.oi = outer_independent
        self.clock = clock
        self.nb = G.masks
        self.cl = tuple(m | (1 << v) for v, m in enumerate(G.masks))
        self.full = (1 << G.n) - 1
        self.order = _search_order(G)
        # labelling everything 1 is feasible whenever no vertex is isolated
        self.best = G.n + 1
        self.best_values: list[int] | None = None
        self.values = [0] * G.n

    # -- bounding -----------------------------------------------------------------

    def lower_bound(self, Z: int, O: int, T: int) -> float:
        """Admissible bound on the weight still to be placed on unassigned vertices.

        Returns math.inf when some constraint can no longer be met.
        """
        nb, cl = self.nb, self.cl
        P = O | T
        U = self.full & ~(Z | P)
        H = T if self.threshold == 2 else P
        set_total = self.total and self.top == 1

        forced = 0
        if self.oi:
            for z in _bits(Z):
                forced |= nb[z]
            forced &= U
        n_forced = _popcount(forced)

        # vertices still waiting for a defender / a dominator
        needy = 0
        if set_total:
            for v in range(self.n):
                if not nb[v] & P:
                    needy |= 1 << v
        else:
            for v in _bits(Z | (U & ~forced)):
                if not nb[v] & H:
                    needy |= 1 << v
        if not needy:
            bound1 = float(n_forced)
        else:
            reach = nb if set_total else cl
            ratio: dict[int, float] = {}
            for u in _bits(U):
                cover = _popcount(reach[u] & needy)
                if cover:
                    cost = self.threshold - (1 if forced >> u & 1 else 0)
                    ratio[u] = cost / cover
            bound1 = float(n_forced)
            self_ok = self.top == 2
            for v in _bits(needy):
                share = 1.0 if (self_ok and U >> v & 1) else math.inf
                for u in _bits(reach[v] & U):
                    r = ratio[u]
                    if r < share:
                        share = r
                if share == math.inf:
                    return math.inf
                bound1 += share

        if not self.oi:
            return bound1
        # positives must cover every edge among the free vertices: a matching is a lower bound
        free = U & ~forced
        matched = 0
        size = 0
        for v in _bits(free):
            if matched >> v & 1:
                continue
            partners = nb[v] & free & ~matched
            if partners:
                u = (partners & -partners).bit_length() - 1
                matched |= (1 << v) | (1 << u)
                size += 1
        return max(bound1, float(n_forced + size))

    # -- feasibility --------------------------------------------------------------

    def locally_feasible(self, v: int, Z: int, O: int, T: int) -> bool:
        nb = self.nb
        P = O | T
        U = self.full & ~(Z | P)
        H = T if self.threshold == 2 else P
        if self.oi and Z >> v & 1 and nb[v] & Z:
            return False
        for u in _bits(self.cl[v]):
            bit = 1 << u
            if Z & bit:
                if not nb[u] & (H | U):
                    return False
                if self.total and self.top == 1 and not nb[u] & (P | U):
                    return False
            elif P & bit and self.total:
                if not nb[u] & (P | U):
                    return False
        return True

    # -- search -------------------------------------------------------------------

    def run(self) -> tuple[int, list[int]]:
        self._dfs(0, 0, 0, 0, 0)
        assert self.best_values is not None, "all-ones labelling should always be reachable"
        return self.best, self.best_values

    def _value_order(self, v: int, Z: int, O: int, T: int) -> Sequence[int]:
        if self.top == 1:
            return (0, 1) if self.nb[v] & (O | T) else (1, 0)
        if self.nb[v] & T:
            return (0, 1, 2)
        return (2, 0, 1)

    def _dfs(self, i: int, Z: int, O: int, T: int, w: int) -> None:
        self.clock.tick()
        lb = self.lower_bound(Z, O, T)
        if lb == math.inf or w + math.ceil(lb - _EPS) >= self.best:
            return
        if i == self.n:
            self.best = w
            self.best_values = list(self.values)
            log.debug("improved to %d", w)
            return
        v = self.order[i]
        bit = 1 << v
        for x in self._value_order(v, Z, O, T):
            if x == 0:
                if self.oi and self.nb[v] & Z:
                    continue
                Z2, O2, T2 = Z | bit, O, T
            elif x == 1:
                Z2, O2, T2 = Z, O | bit, T
            else:
                Z2, O2, T2 = Z, O, T | bit
            if w + x >= self.best:
                continue
            if not self.locally_feasible(v, Z2, O2, T2):
                continue
            self.values[v] = x
            self._dfs(i + 1, Z2, O2, T2, w + x)
        self.values[v] = 0


class _MaxIndependent:
    """Maximum independent set by branching on a maximum-degree vertex."""

    def __init__(self, G: Graph, clock: _Deadline):
        self.nb = G.masks
        self.clock = clock
        self.best = 0
        self.best_set = 0

    def run(self, full: int) -> int:
        self._dfs(full, 0, 0)
        return self.best_set

    def _color_bound(self, cand: int) -> int:
        # greedy clique cover: an independent set meets each clique at most once
        nb = self.nb
        classes = 0
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            clique = low
            common = nb[v] & rest
            while common:
                lu = common & -common
                u = lu.bit_length() - 1
                clique |= lu
                common &= nb[u]
            rest &= ~clique
            classes += 1
        return classes

    def _dfs(self, cand: int, chosen: int, size: int) -> None:
        self.clock.tick()
        nb = self.nb
        # take every vertex of degree <= 1 in the candidate graph greedily (safe reduction)
        changed = True
        while changed:
            changed = False
            for v in _bits(cand):
                d = nb[v] & cand
                if d & (d - 1) == 0:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~((1 << v) | d)
                    changed = True
                    break
        if not cand:
            if size > self.best:
                self.best, self.best_set = size, chosen
            return
        if size + self._color_bound(cand) <= self.best:
            return
        v = max(_bits(cand), key=lambda u: (_popcount(nb[u] & cand), -u))
        bit = 1 << v
        self._dfs(cand & ~(bit | nb[v]), chosen | bit, size + 1)
        self._dfs(cand & ~bit, chosen, size)


# -- public entry points ----------------------------------------------------------------


def _deadline_from(budget: float | None) -> _Deadline:
    return _Deadline(None if budget is None else time.monotonic() + budget)


def _require_order(G: Graph) -> None:
    if G.n == 0:
        raise InputError("graph has no vertices")


def _require_no_isolated(G: Graph) -> None:
    iso = G.isolated_vertices()
    if iso:
        raise DomainError(f"vertex {iso[0]} is isolated; domination-type parameters need a graph without isolated vertices")


def _per_component_labels(
    G: Graph, top: int, total: bool, outer_independent: bool, clock: _Deadline
) -> tuple[int, list[int]]:
    values = [0] * G.n
    weight = 0
    for comp in G.components():
        H, back = G.induced(comp)
        w, vals = _LabelSearch(H, top, total, outer_independent, clock).run()
        weight += w
        for i, x in enumerate(vals):
            values[back[i]] = x
    return weight, values


def solve_set_parameter(G: Graph, kind: str, budget: float | None = None, *, _clock: _Deadline | None = None) -> VertexSetCertificate:
    """Exact optimum and one optimal witness for a vertex-set parameter.

    ``budget`` is a wall-clock limit in seconds; exceeding it raises SolverTimeout.
    """
    if kind not in SET_KINDS:
        raise InputError(f"unknown set parameter {kind!r}; expected one of {SET_KINDS}")
    _require_order(G)
    clock = _clock or _deadline_from(budget)
    if kind in ("max_independent", "min_cover"):
        indep = 0
        for comp in G.components():
            H, back = G.induced(comp)
            local = _MaxIndependent(H, clock).run((1 << H.n) - 1)
            for u in _bits(local):
                indep |= 1 << back[u]
        mis = frozenset(_bits(indep))
        if kind == "max_independent":
            cert = VertexSetCertificate(kind, mis, len(mis))
        else:
            cover = frozenset(G.vertices) - mis
            cert = VertexSetCertificate(kind, cover, len(cover))
        mode = "independent" if kind == "max_independent" else "vertex_cover"
        assert set_predicate(G, cert.set, mode), f"solver produced an invalid {kind} certificate"
        return cert
    _require_no_isolated(G)
    mode, total, oi = _SET_RULES[kind]
    weight, values = _per_component_labels(G, 1, total, oi, clock)
    chosen = frozenset(v for v, x in enumerate(values) if x)
    assert len(chosen) == weight
    assert set_predicate(G, chosen, mode), f"solver produced an invalid {kind} certificate"
    return VertexSetCertificate(kind, chosen, weight)


def solve_roman_parameter(
    G: Graph, variant: Variant | str, budget: float | None = None, *, _clock: _Deadline | None = None
) -> tuple[int, RomanLabeling]:
    """Minimum weight of a labeling valid for ``variant``, with one optimal labeling."""
    variant = Variant.parse(variant)
    _require_order(G)
    _require_no_isolated(G)
    clock = _clock or _deadline_from(budget)
    weight, values = _per_component_labels(G, 2, variant.total, variant.outer_independent, clock)
    f = make_labeling(G, values)
    assert f.weight == weight
    assert validate(G, f, variant), f"solver produced an invalid {variant.value}"
    return weight, f


@dataclass
class ParameterRecord:
    """Exact values for the requested parameters; missing entries were not computed."""

    values: dict[str, int] = field(default_factory=dict)
    sets: dict[str, frozenset[int]] = field(default_factory=dict)
    labelings: dict[str, RomanLabeling] = field(default_factory=dict)
    timeouts: set[str] = field(default_factory=set)
    seconds: dict[str, float] = field(default_factory=dict)

    def __getitem__(self, name: str) -> int:
        return self.values[name]

    def get(self, name: str) -> int | None:
        return self.values.get(name)

    def __contains__(self, name: str) -> bool:
        return name in self.values

    @property
    def alpha(self) -> int | None:
        return self.values.get("alpha")

    @property
    def beta(self) -> int | None:
        return self.values.get("beta")

    @property
    def gamma(self) -> int | None:
        return self.values.get("gamma")

    @property
    def gamma_t(self) -> int | None:
        return self.values.get("gamma_t")

    @property
    def gamma_toi(self) -> int | None:
        return self.values.get("gamma_toi")

    @property
    def gamma_R(self) -> int | None:
        return self.values.get("gamma_R")

    @property
    def gamma_tR(self) -> int | None:
        return self.values.get("gamma_tR")

    @property
    def gamma_oiR(self) -> int | None:
        return self.values.get("gamma_oiR")

    @property
    def gamma_oitR(self) -> int | None:
        return self.values.get("gamma_oitR")

    def invariant_violations(self, n: int) -> list[str]:
        """Relations every exact record must satisfy among its present entries."""
        v = self.values
        out = []

        def chk(names: Iterable[str], ok, text: str) -> None:
            if all(x in v for x in names) and not ok():
                out.append(text)

        chk(("alpha", "beta"), lambda: v["alpha"] + v["beta"] == n, "alpha + beta != n")
        chk(("gamma", "gamma_t"), lambda: v["gamma"] <= v["gamma_t"], "gamma > gamma_t")
        chk(("gamma_t", "gamma_toi"), lambda: v["gamma_t"] <= v["gamma_toi"], "gamma_t > gamma_toi")
        chk(("gamma_R", "gamma_oiR"), lambda: v["gamma_R"] <= v["gamma_oiR"], "gamma_R > gamma_oiR")
        chk(("gamma_oiR", "gamma_oitR"), lambda: v["gamma_oiR"] <= v["gamma_oitR"], "gamma_oiR > gamma_oitR")
        chk(("gamma_tR", "gamma_oitR"), lambda: v["gamma_tR"] <= v["gamma_oitR"], "gamma_tR > gamma_oitR")
        return out

    def to_json(self) -> dict:
        out = {}
        for name in PARAMETERS:
            if name in self.values:
                entry: dict = {"value": self.values[name]}
                if name in self.sets:
                    entry["certificate"] = sorted(self.sets[name])
                if name in self.labelings:
                    entry["certificate"] = self.labelings[name].digits()
                out[name] = entry
            elif name in self.timeouts:
                out[name] = {"value": None, "timeout": True}
        return out


def full_record(G: Graph, which: Iterable[str] | None = None, budget: float | None = None) -> ParameterRecord:
    """Solve the requested parameters; any that run past ``budget`` seconds are left out and marked."""
    names = list(PARAMETERS if which is None else which)
    for name in names:
        if name not in PARAMETERS:
            raise InputError(f"unknown parameter {name!r}; expected some of {PARAMETERS}")
    _require_order(G)
    rec = ParameterRecord()
    clock = _deadline_from(budget)
    # alpha and beta come from the same search
    if "alpha" in names or "beta" in names:
        names = [x for x in names if x not in ("alpha", "beta")]
        names.insert(0, "alpha")
        names.insert(1, "beta")
    solved_mis: VertexSetCertificate | None = None
    for name in names:
        start = time.monotonic()
        try:
            if name in ("alpha", "beta"):
                if solved_mis is None:
                    solved_mis = solve_set_parameter(G, "max_independent", _clock=clock)
                if name == "beta":
                    rec.values[name], rec.sets[name] = solved_mis.value, solved_mis.set
                else:
                    cover = frozenset(G.vertices) - solved_mis.set
                    rec.values[name], rec.sets[name] = len(cover), cover
            elif name in _PARAM_TO_SET:
                cert = solve_set_parameter(G, _PARAM_TO_SET[name], _clock=clock)
                rec.values[name], rec.sets[name] = cert.value, cert.set
            else:
                value, f = solve_roman_parameter(G, _PARAM_TO_VARIANT[name], _clock=clock)
                rec.values[name], rec.labelings[name] = value, f
        except SolverTimeout:
            rec.timeouts.add(name)
            if name == "alpha":
                rec.timeouts.add("beta")
        rec.seconds[name] = time.monotonic() - start
    return rec
