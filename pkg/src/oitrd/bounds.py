"""Closed-form predictions for the graph families and an audit of every inequality against exact values."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import ceil
from typing import Iterable, Sequence, Union

from .constructions import fpq_values, product_weight, sierpinski_weight
from .generators import FamilySpec, LabeledGraph, gen_product, generate
from .graph import DomainError, Graph, build_graph, degree_profile, find_claw
from .solvers import PARAMETERS, ParameterRecord, full_record, solve_roman_parameter, SolverTimeout

LE = "<="
EQ = "=="


def _base_kind(kind: str) -> str:
    return kind[:-3] if kind.endswith("_kk") else kind


def closed_form(spec: FamilySpec) -> dict[str, int]:
    """Parameter values predicted for a family member, restricted to the stated hypothesis range."""
    kind, p = _base_kind(spec.kind), spec.params
    if kind == "complete_bipartite":
        r, s = p
        if not 3 <= r <= s:
            raise DomainError(f"complete bipartite values need 3 <= r <= s, got K_{{{r},{s}}}")
        return {"gamma_R": 4, "gamma_tR": 4, "gamma_oiR": r + 1, "gamma_toi": r + 1, "gamma_oitR": r + 2}
    if kind == "wheel":
        (n,) = p
        if n < 4:
            raise DomainError(f"wheel values need n >= 4, got W_{n}")
        h = ceil((n - 1) / 2)
        return {"alpha": h + 1, "gamma_oiR": h + 2, "gamma_toi": h + 1, "gamma_oitR": h + 2}
    if kind == "fpq":
        t, r, rp = p
        return fpq_values(t, r)
    if kind == "sierpinski":
        q, n = p
        if q < 3 or n < 1:
            raise DomainError(f"Sierpinski value needs p >= 3 and n >= 1, got S_{q}^{n}")
        return {"gamma_oitR": sierpinski_weight(q, n)}
    if kind == "circulant":
        n, k = p
        if not 2 <= k <= n // 2:
            raise DomainError(f"circulant values need 2 <= k <= n/2, got C({n},{k})")
        m = n // (k + 1)
        return {"beta": m, "gamma_oitR": n - m // 2}
    if kind in ("cartesian", "direct"):
        r, s = p
        if not 2 <= r <= s:
            raise DomainError(f"{kind} product value needs 2 <= r <= s, got ({r}, {s})")
        return {"gamma_oitR": product_weight(kind, r, s)}
    if kind in ("strong", "lexicographic"):
        r, s = p
        if r < 1 or s < 1 or r * s < 2:
            raise DomainError(f"{kind} product value needs r, s >= 1 and rs >= 2, got ({r}, {s})")
        return {"gamma_oitR": r * s}
    raise DomainError(f"no closed form is stated for family {kind!r}")


FAMILY_BOUND_IDS = {
    "complete_bipartite": "R1",
    "wheel": "R2",
    "sierpinski": "T13",
    "circulant": "T15",
    "cartesian": "T16",
    "direct": "T17",
    "strong": "STRONG-LEX",
    "lexicographic": "STRONG-LEX",
}
_FPQ_IDS = dict(zip(
    ("gamma", "gamma_t", "gamma_R", "gamma_tR", "gamma_toi", "gamma_oiR", "gamma_oitR"),
    ("R3a", "R3b", "R3c", "R3d", "R3e", "R3f", "R3g"),
))


@dataclass(frozen=True)
class BoundInstance:
    id: str
    lhs: int | None
    rhs: int | None
    relation: str
    applicable: bool
    holds: bool
    context: dict = field(default_factory=dict, compare=False)

    @property
    def slack(self) -> int | None:
        if self.lhs is None or self.rhs is None:
            return None
        return self.rhs - self.lhs

    @property
    def tight(self) -> bool:
        return self.applicable and self.slack == 0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "applicable": self.applicable,
            "holds": self.holds,
            "slack": self.slack,
            "context": self.context,
        }


@dataclass
class BoundReport:
    label: str
    n: int
    record: ParameterRecord
    instances: list[BoundInstance]

    @property
    def violations(self) -> list[BoundInstance]:
        return [b for b in self.instances if not b.holds]

    def get(self, bound_id: str) -> BoundInstance:
        for b in self.instances:
            if b.id == bound_id:
                return b
        raise KeyError(bound_id)

    def to_json(self) -> dict:
        return {
            "graph": self.label,
            "order": self.n,
            "instances": [b.to_json() for b in self.instances],
            "violations": [b.id for b in self.violations],
        }


class _Evaluator:
    def __init__(self, G: Graph, record: ParameterRecord):
        self.G = G
        self.v = record.values
        prof = degree_profile(G)
        self.ctx_base = {
            "n": G.n,
            "delta": prof.delta,
            "Delta": prof.Delta,
            "supports": len(prof.supports),
            "no_isolated": G.n > 0 and prof.delta >= 1,
            "connected": G.is_connected(),
        }
        self.prof = prof
        self._claw_free: bool | None = None
        self.out: list[BoundInstance] = []

    @property
    def claw_free(self) -> bool:
        if self._claw_free is None:
            self._claw_free = find_claw(self.G) is None
        return self._claw_free

    def add(self, bound_id: str, needs: Sequence[str], lhs, rhs, relation: str = LE, hypothesis: bool = True, note: str = "") -> None:
        have = all(x in self.v for x in needs)
        applicable = bool(hypothesis) and have
        ctx = {k: self.v[k] for k in needs if k in self.v}
        ctx.update(self.ctx_base)
        if note:
            ctx["note"] = note
        if not have:
            self.out.append(BoundInstance(bound_id, None, None, relation, False, True, ctx))
            return
        a, b = lhs(self.v), rhs(self.v)
        ok = a <= b if relation == LE else a == b
        self.out.append(BoundInstance(bound_id, a, b, relation, applicable, ok or not applicable, ctx))


def bound_report(
    G: Graph,
    record: ParameterRecord,
    *,
    label: str = "",
    family: FamilySpec | None = None,
) -> BoundReport:
    """Evaluate every inequality whose inputs are present; hypotheses gate applicability."""
    E = _Evaluator(G, record)
    n = G.n
    base = E.ctx_base["no_isolated"]
    delta, Delta, supp = E.prof.delta, E.prof.Delta, len(E.prof.supports)
    cf3 = base and delta >= 3 and E.claw_free

    E.add("GALLAI", ("alpha", "beta"), lambda v: v["alpha"] + v["beta"], lambda v: n, EQ)
    if Delta >= 2:
        E.add("OBS2-i", ("alpha",), lambda v: 1, lambda v: ceil((n - v["alpha"]) / (Delta - 1)), hypothesis=base)
    E.add("OBS2-ii-a", ("gamma_t", "gamma_R"), lambda v: v["gamma_t"], lambda v: v["gamma_R"], hypothesis=base)
    E.add("OBS2-ii-b", ("gamma_R", "gamma"), lambda v: v["gamma_R"], lambda v: 2 * v["gamma"], hypothesis=base)
    E.add("OBS2-ii-c", ("gamma", "alpha"), lambda v: 2 * v["gamma"], lambda v: 2 * v["alpha"], hypothesis=base)

    E.add("T1-lower", ("alpha", "gamma_oitR"), lambda v: v["alpha"] + 1, lambda v: v["gamma_oitR"], hypothesis=base)
    E.add("T1-upper", ("alpha", "gamma_oitR"), lambda v: v["gamma_oitR"], lambda v: 3 * v["alpha"], hypothesis=base)

    if Delta >= 2:
        E.add(
            "T4-lower", ("alpha", "gamma_oitR"),
            lambda v: v["alpha"] + max(supp, ceil((n - v["alpha"]) / (Delta - 1))),
            lambda v: v["gamma_oitR"], hypothesis=base,
        )
    else:
        E.add("T4-lower", ("alpha", "gamma_oitR"), lambda v: 0, lambda v: 0, hypothesis=False, note="needs Delta >= 2")
    E.add("T4-upper", ("alpha", "gamma_t", "gamma_oitR"), lambda v: v["gamma_oitR"], lambda v: v["alpha"] + v["gamma_t"], hypothesis=base)
    E.add("T4-clawfree", ("alpha", "gamma", "gamma_oitR"), lambda v: v["gamma_oitR"], lambda v: v["alpha"] + v["gamma"], hypothesis=cf3)

    E.add("T5", ("alpha", "gamma_R", "gamma_oitR"), lambda v: v["gamma_oitR"], lambda v: v["alpha"] + v["gamma_R"], hypothesis=base)
    E.add("T5-weak", ("alpha", "gamma_R", "gamma"), lambda v: v["alpha"] + v["gamma_R"], lambda v: v["alpha"] + 2 * v["gamma"], hypothesis=base)
    v = E.v
    roman_trigger = all(x in v for x in ("gamma_oitR", "alpha", "gamma")) and v["gamma_oitR"] == v["alpha"] + 2 * v["gamma"]
    E.add("PROP-roman", ("gamma_R", "gamma", "gamma_oitR", "alpha"), lambda v: v["gamma_R"], lambda v: 2 * v["gamma"], EQ, hypothesis=roman_trigger)

    n3 = base and n >= 3
    E.add("T8i-lower", ("gamma_toi", "gamma_oitR"), lambda v: v["gamma_toi"] + 1, lambda v: v["gamma_oitR"], hypothesis=n3)
    E.add("T8i-upper", ("gamma_toi", "gamma_oitR"), lambda v: v["gamma_oitR"], lambda v: 2 * v["gamma_toi"], hypothesis=n3)
    E.add("T8ii", ("gamma_oiR", "gamma_oitR"), lambda v: v["gamma_oiR"], lambda v: v["gamma_oitR"], hypothesis=n3)
    g_oi = record.labelings.get("gamma_oiR")
    if g_oi is not None:
        extra = len(g_oi.positive)
        E.add("T8ii-upper", ("gamma_oiR", "gamma_oitR"), lambda v: v["gamma_oitR"], lambda v: v["gamma_oiR"] + extra, hypothesis=n3)

    E.add(
        "T9", ("gamma_toi", "gamma_oiR", "gamma", "gamma_oitR"),
        lambda v: v["gamma_oitR"], lambda v: min(v["gamma_toi"], v["gamma_oiR"]) + v["gamma"], hypothesis=base,
    )
    E.add("T10", ("gamma_oiR", "gamma_oitR"), lambda v: v["gamma_oitR"], lambda v: v["gamma_oiR"], EQ, hypothesis=cf3)
    strict = all(x in v for x in ("gamma_oitR", "gamma_oiR")) and v["gamma_oitR"] > v["gamma_oiR"]
    E.add(
        "CHAIN1-lower", ("gamma_toi", "gamma_oiR", "gamma_oitR"),
        lambda v: max(v["gamma_toi"], v["gamma_oiR"]) + 1, lambda v: v["gamma_oitR"], hypothesis=base and strict,
    )
    E.add(
        "CHAIN1-upper", ("gamma_toi", "gamma_oiR", "gamma", "gamma_oitR"),
        lambda v: v["gamma_oitR"], lambda v: min(v["gamma_toi"], v["gamma_oiR"]) + v["gamma"], hypothesis=base and strict,
    )
    conn = base and E.ctx_base["connected"]
    E.add("T11", ("gamma_toi", "alpha"), lambda v: v["gamma_toi"], lambda v: 2 * v["alpha"] - delta + 1, hypothesis=conn)
    E.add("T12", ("gamma_oitR", "alpha", "gamma"), lambda v: v["gamma_oitR"], lambda v: 2 * v["alpha"] + v["gamma"] - delta + 1, hypothesis=conn)

    if family is not None:
        _family_instances(E, family)
    return BoundReport(label or (str(family) if family else f"graph(n={n})"), n, record, E.out)


def _family_instances(E: _Evaluator, family: FamilySpec) -> None:
    try:
        predicted = closed_form(family)
    except DomainError as exc:
        E.add(FAMILY_BOUND_IDS.get(_base_kind(family.kind), "FAMILY"), (), lambda v: 0, lambda v: 0, EQ, hypothesis=False, note=str(exc))
        return
    for name, value in predicted.items():
        kind = _base_kind(family.kind)
        if kind == "fpq":
            bid = _FPQ_IDS[name]
        elif kind == "circulant" and name == "beta":
            bid = "L14"
        else:
            bid = FAMILY_BOUND_IDS[kind]
            if kind in ("complete_bipartite", "wheel"):
                bid = f"{bid}-{name}"
        E.add(bid, (name,), lambda v, name=name: v[name], lambda v, value=value: value, EQ, note=str(family))


def is_star(G: Graph) -> bool:
    if G.n < 2 or not G.is_connected():
        return False
    return G.m == G.n - 1 and any(G.degree(v) == G.n - 1 for v in G.vertices)


def open_question_probe(G: Graph, report: BoundReport) -> dict | None:
    """A non-star graph attaining the upper bound 2α + γ − δ + 1, or None."""
    try:
        t12 = report.get("T12")
    except KeyError:
        return None
    if t12.applicable and t12.slack == 0 and not is_star(G):
        return {"id": "PROBE-openquestion", "graph": report.label, "edges": [list(e) for e in G.edges]}
    return None


def _probe_entry(kind: str, r: int, s: int, budget: float | None) -> dict:
    G = gen_product(kind, r, s).graph
    formula = product_weight(kind, r, s)
    try:
        exact, f = solve_roman_parameter(G, "oitR", budget)
    except SolverTimeout:
        return {"r": r, "s": s, "exact": None, "formula": formula, "match": None, "timeout": True}
    return {"r": r, "s": s, "exact": exact, "formula": formula, "match": exact == formula, "certificate": f.digits()}


def edge_case_probes(budget: float | None = None) -> dict[str, dict]:
    """Exact values at the two parameter points where the product formulas are in doubt."""
    direct = [_probe_entry("direct", 2, s, budget) for s in (2, 3, 4)]
    cart = [_probe_entry("cartesian", 2, 2, budget)]
    return {
        "PROBE-direct-r2": {"entries": direct, "mismatches": [e["s"] for e in direct if e["match"] is False]},
        "PROBE-cartesian-22": {"entries": cart, "mismatches": [e["s"] for e in cart if e["match"] is False]},
    }


@dataclass(frozen=True)
class RandomSpec:
    count: int
    max_n: int
    edge_prob: float | None = None
    seed: int = 1
    min_n: int = 2
    connected: bool = True

    def graphs(self) -> list[tuple[str, Graph]]:
        """Seeded G(n, p) samples; disconnected draws are rejected when ``connected`` is set."""
        rng = random.Random(self.seed)
        out = []
        while len(out) < self.count:
            n = rng.randint(self.min_n, self.max_n)
            p = self.edge_prob if self.edge_prob is not None else rng.uniform(0.2, 0.8)
            edges = [(u, w) for u in range(n) for w in range(u + 1, n) if rng.random() < p]
            G = build_graph(n, edges)
            if self.connected and not G.is_connected():
                continue
            if G.isolated_vertices():
                continue
            out.append((f"random(seed={self.seed},#{len(out)},n={n})", G))
        return out


CorpusItem = Union[FamilySpec, RandomSpec, tuple]


@dataclass
class AuditSummary:
    reports: list[BoundReport]
    skipped: list[str]
    probes: dict[str, dict]
    open_question: list[dict]

    @property
    def instances_checked(self) -> int:
        return sum(1 for r in self.reports for b in r.instances if b.applicable)

    @property
    def tight(self) -> int:
        return sum(1 for r in self.reports for b in r.instances if b.tight)

    @property
    def violations(self) -> list[tuple[str, BoundInstance]]:
        return [(r.label, b) for r in self.reports for b in r.violations]

    def to_json(self) -> dict:
        return {
            "graphs": len(self.reports),
            "skipped": self.skipped,
            "instances_checked": self.instances_checked,
            "tight": self.tight,
            "violations": [{"graph": g, **b.to_json()} for g, b in self.violations],
            "probes": self.probes,
            "open_question": self.open_question,
        }


def _expand(corpus: Iterable[CorpusItem]) -> list[tuple[str, Graph, FamilySpec | None]]:
    items = []
    for entry in corpus:
        if isinstance(entry, FamilySpec):
            lg = generate(entry)
            items.append((str(entry), lg.graph, entry))
        elif isinstance(entry, LabeledGraph):
            items.append((str(entry.family) if entry.family else "graph", entry.graph, entry.family))
        elif isinstance(entry, RandomSpec):
            items.extend((label, G, None) for label, G in entry.graphs())
        else:
            label, G = entry
            items.append((label, G, None))
    return items


def audit_corpus(
    corpus: Iterable[CorpusItem],
    budget_per_graph: float | None = None,
    which: Sequence[str] | None = None,
    probes: bool = True,
) -> AuditSummary:
    """Solve every corpus graph, evaluate all bounds and collect violations, tight instances and probes."""
    reports, skipped, oq = [], [], []
    for label, G, family in _expand(corpus):
        record = full_record(G, which or PARAMETERS, budget_per_graph)
        if record.timeouts:
            skipped.append(label)
            continue
        rep = bound_report(G, record, label=label, family=family)
        reports.append(rep)
        hit = open_question_probe(G, rep)
        if hit:
            oq.append(hit)
    return AuditSummary(reports, skipped, edge_case_probes(budget_per_graph) if probes else {}, oq)
