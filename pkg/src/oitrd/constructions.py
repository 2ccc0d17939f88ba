"""Certificate builders: explicit labelings for the closed families and set combinations.

Every builder validates what it produces before returning it; a labeling
that fails its checker raises ConstructionError instead of being handed out.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Iterable

from .generators import (
    LabeledGraph,
    complete,
    complete_bipartite,
    gen_circulant,
    gen_fpq,
    gen_product,
    gen_sierpinski,
    wheel,
)
from .graph import DomainError, Graph, InputError, PredicateResult, degree_profile, find_claw, set_predicate
from .labeling import RomanLabeling, ValidationResult, Variant, labeling_from_sets, validate


class ConstructionError(RuntimeError):
    """A builder produced something its own checker rejects."""

    def __init__(self, message: str, outcome: object | None = None):
        super().__init__(message)
        self.outcome = outcome


@dataclass(frozen=True)
class ConstructionOutcome:
    graph: LabeledGraph | None
    labeling: RomanLabeling
    claimed_weight: int
    checked: ValidationResult

    @property
    def weight(self) -> int:
        return self.labeling.weight

    def to_json(self) -> dict:
        return {
            "labeling": self.labeling.digits(),
            "weight": self.weight,
            "claimed_weight": self.claimed_weight,
            "checked": self.checked.to_json(),
        }


@dataclass(frozen=True)
class SetOutcome:
    graph: LabeledGraph
    vertices: frozenset[int]
    claimed_size: int
    mode: str
    checked: PredicateResult

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        w = self.checked.witness
        return {
            "set": sorted(self.vertices),
            "size": self.size,
            "claimed_size": self.claimed_size,
            "mode": self.mode,
            "checked": {"valid": self.checked.ok, "witness": list(w) if isinstance(w, tuple) else w},
        }


def _finish(
    lg: LabeledGraph | None,
    G: Graph,
    f: RomanLabeling,
    claimed: int,
    variant: Variant = Variant.OITRDF,
    exact: bool = True,
) -> ConstructionOutcome:
    checked = validate(G, f, variant)
    outcome = ConstructionOutcome(lg, f, claimed, checked)
    if not checked.valid:
        rule, witness = checked.violation
        raise ConstructionError(f"{variant.value} check failed: {rule} at {witness}", outcome)
    if f.weight > claimed or (exact and f.weight != claimed):
        raise ConstructionError(f"weight {f.weight} does not match the claimed {claimed}", outcome)
    return outcome


# -- closed families ---------------------------------------------------------------------


def oitrdf_closed_family(kind: str, *params: int) -> ConstructionOutcome:
    """OITRDFs of optimal weight for K_n, K_{r,s} (3 <= r <= s) and W_n."""
    if kind == "complete":
        (n,) = params
        if n < 2:
            raise InputError(f"complete graph needs n >= 2, got {n}")
        lg = complete(n)
        return _finish(lg, lg.graph, RomanLabeling((1,) * n), n)
    if kind == "complete_bipartite":
        r, s = params
        if not 3 <= r <= s:
            raise InputError(f"complete bipartite builder needs 3 <= r <= s, got ({r}, {s})")
        lg = complete_bipartite(r, s)
        f = labeling_from_sets(r + s, twos=[0], ones=list(range(1, r)) + [r])
        return _finish(lg, lg.graph, f, r + 2)
    if kind == "wheel":
        (n,) = params
        if n < 4:
            raise InputError(f"wheel needs n >= 4, got {n}")
        lg = wheel(n)
        rim = n - 1
        zeros = set(range(0, 2 * (rim // 2), 2))
        f = labeling_from_sets(n, twos=[rim], ones=[v for v in range(rim) if v not in zeros])
        return _finish(lg, lg.graph, f, ceil((n - 1) / 2) + 2)
    raise InputError(f"no closed-family builder for {kind!r}")


def oitrdf_circulant(n: int, k: int) -> ConstructionOutcome:
    """C(n, k), 2 <= k <= n/2: zeros every k+1 steps, one 2 shared by each consecutive pair of zeros."""
    if not 2 <= k <= n // 2:
        raise InputError(f"circulant builder needs 2 <= k <= n/2, got k={k}, n={n}")
    lg = gen_circulant(n, k)
    m = n // (k + 1)
    step = k + 1
    zeros = [i * step for i in range(m)]
    twos = [2 * j * step + 1 for j in range(m // 2)]
    if m % 2:
        twos.append((m - 1) * step + 1)
    ones = [v for v in range(n) if v not in zeros and v not in twos]
    f = labeling_from_sets(n, twos=twos, ones=ones)
    return _finish(lg, lg.graph, f, n - m // 2)


# -- Sierpinski graphs --------------------------------------------------------------------


def sierpinski_weight(p: int, n: int) -> int:
    half = p ** (n - 1)
    return p * ceil(half / 2) + (p - 1) * (half // 2)


def _hamiltonian_words(p: int, m: int, first: int, last: int) -> list[tuple[int, ...]]:
    """Hamiltonian path of S_p^m from the extreme vertex first^m to last^m (first != last)."""
    if m == 1:
        middle = [c for c in range(p) if c not in (first, last)]
        return [(c,) for c in [first, *middle, last]]
    copies = [first] + [c for c in range(p) if c not in (first, last)] + [last]
    out: list[tuple[int, ...]] = []
    for idx, c in enumerate(copies):
        enter = first if idx == 0 else copies[idx - 1]
        leave = last if idx == len(copies) - 1 else copies[idx + 1]
        out.extend((c,) + w for w in _hamiltonian_words(p, m - 1, enter, leave))
    return out


def _word_index(word: tuple[int, ...], p: int) -> int:
    idx = 0
    for d in word:
        idx = idx * p + d
    return idx


def sierpinski_labeling(p: int, n: int, G: Graph) -> RomanLabeling:
    """One 0 per K_p copy; copies are paired along a Hamiltonian path of the copy graph.

    Within a pair (Q, Q') joined by the edge x ~ x', x gets 2, x' gets 0 and
    a second vertex of Q gets 0, so one 2 defends two zeros. An unpaired copy
    (odd number of copies) holds its own 0 and 2. Remaining zero positions
    are chosen by backtracking so that no two zeros end up adjacent.
    """
    copy_of = [v // p for v in range(G.n)]
    members = [list(range(c * p, c * p + p)) for c in range(p ** (n - 1))]
    outside = [None] * G.n
    for v in range(G.n):
        for u in G.neighbors(v):
            if copy_of[u] != copy_of[v]:
                outside[v] = u

    if n == 1:
        order = [()]
    else:
        order = _hamiltonian_words(p, n - 1, 0, 1)
    path = [_word_index(w, p) for w in order]

    twos: set[int] = set()
    zero_of: dict[int, int] = {}
    need_zero: list[tuple[int, int | None]] = []  # (copy, vertex that must stay positive)
    for i in range(0, len(path) - 1, 2):
        q, q2 = path[i], path[i + 1]
        link = [(x, outside[x]) for x in members[q] if outside[x] is not None and copy_of[outside[x]] == q2]
        if len(link) != 1:
            raise ConstructionError(f"copies {q} and {q2} are not joined by exactly one edge")
        x, x2 = link[0]
        twos.add(x)
        zero_of[q2] = x2
        need_zero.append((q, x))
    if len(path) % 2:
        need_zero.append((path[-1], None))

    def blocked(v: int) -> bool:
        u = outside[v]
        return u is not None and zero_of.get(copy_of[u]) == u

    def place(i: int) -> bool:
        if i == len(need_zero):
            return True
        q, keep = need_zero[i]
        for y in members[q]:
            if y == keep or blocked(y):
                continue
            zero_of[q] = y
            if place(i + 1):
                return True
            del zero_of[q]
        return False

    if not place(0):
        raise ConstructionError(f"no independent placement of zeros found for S_{p}^{n}")
    for q, keep in need_zero:
        if keep is None:
            twos.add(next(v for v in members[q] if v != zero_of[q]))
    zeros = set(zero_of.values())
    ones = [v for v in range(G.n) if v not in zeros and v not in twos]
    return labeling_from_sets(G.n, twos=twos, ones=ones)


def oitrdf_sierpinski(p: int, n: int) -> ConstructionOutcome:
    if p < 3 or n < 2:
        raise InputError(f"Sierpinski builder needs p >= 3 and n >= 2, got p={p}, n={n}")
    lg = gen_sierpinski(p, n)
    f = sierpinski_labeling(p, n, lg.graph)
    return _finish(lg, lg.graph, f, sierpinski_weight(p, n))


# -- products of complete graphs -------------------------------------------------------


def product_weight(kind: str, r: int, s: int) -> int:
    if kind == "cartesian":
        return r * s - r // 2
    if kind == "direct":
        return s * (r - 1) + 2
    if kind in ("strong", "lexicographic"):
        return r * s
    raise InputError(f"unknown product {kind!r}")


def oitrdf_product_kk(kind: str, r: int, s: int) -> ConstructionOutcome:
    """Explicit OITRDFs for K_r (*) K_s; (u_i, v_j) below is 1-based as in the usual notation."""

    def cell(i: int, j: int) -> int:
        return (i - 1) * s + (j - 1)

    if kind == "cartesian":
        if not 2 <= r <= s or (r, s) == (2, 2):
            raise DomainError(
                f"cartesian builder needs 2 <= r <= s and (r, s) != (2, 2), got ({r}, {s}); "
                "K_2 x K_2 is C_4, whose optimum exceeds rs - floor(r/2)"
            )
        zeros = [cell(i, i) for i in range(1, r + 1)]
        twos = [cell(2 * i, 2 * i - 1) for i in range(1, r // 2 + 1)]
        if r % 2:
            twos.append(cell(r, r - 1))
    elif kind == "direct":
        if not 3 <= r <= s:
            raise DomainError(
                f"direct builder needs 3 <= r <= s, got ({r}, {s}); with r = 2 the rows are independent "
                "and the positive vertices cannot dominate each other"
            )
        zeros = [cell(1, j) for j in range(1, s + 1)]
        twos = [cell(2, 1), cell(2, 2)]
    elif kind in ("strong", "lexicographic"):
        if r < 1 or s < 1 or r * s < 2:
            raise InputError(f"{kind} builder needs r, s >= 1 and rs >= 2, got ({r}, {s})")
        zeros, twos = [], []
    else:
        raise InputError(f"unknown product {kind!r}")
    lg = gen_product(kind, r, s)
    ones = [v for v in range(r * s) if v not in zeros and v not in twos]
    f = labeling_from_sets(r * s, twos=twos, ones=ones)
    return _finish(lg, lg.graph, f, product_weight(kind, r, s))


# -- the F_{p,q} family ------------------------------------------------------------------


def fpq_values(t: Iterable[int], r: Iterable[int]) -> dict[str, int]:
    """The seven parameter values stated for F_{p,q}."""
    t, r = list(t), list(r)
    p, q, sr = len(t), len(r), sum(r)
    return {
        "gamma": p + 3 * q,
        "gamma_t": 2 * p + 3 * q,
        "gamma_R": 2 * p + 6 * q,
        "gamma_tR": 3 * p + 6 * q,
        "gamma_toi": 2 * p + q + sr,
        "gamma_oiR": 2 * p + 2 * q + 1 + sr,
        "gamma_oitR": 3 * p + 3 * q + sr,
    }


@dataclass(frozen=True)
class FpqCertificates:
    graph: LabeledGraph
    f3: ConstructionOutcome
    f4: ConstructionOutcome
    toi_set: SetOutcome
    f6: ConstructionOutcome
    f7: ConstructionOutcome

    def items(self) -> list[tuple[str, ConstructionOutcome | SetOutcome]]:
        return [("f3", self.f3), ("f4", self.f4), ("toi_set", self.toi_set), ("f6", self.f6), ("f7", self.f7)]

    @property
    def all_valid(self) -> bool:
        return all(o.checked.valid if isinstance(o, ConstructionOutcome) else o.checked.ok for _, o in self.items())


def _fpq_labelings(lg: LabeledGraph) -> dict[str, RomanLabeling]:
    R = lg.roles
    n = lg.graph.n
    c, z, wi, W = R["c"], R["z"], R["wi"], R["W"]
    xy = R["x"] + R["y"]
    return {
        "f3": labeling_from_sets(n, twos=c + wi + xy, ones=()),
        "f4": labeling_from_sets(n, twos=c + wi + xy, ones=z),
        "f6": labeling_from_sets(n, twos=c + xy, ones=R["w"] + W),
        "f7": labeling_from_sets(n, twos=c + xy, ones=z + wi + W),
    }


def fpq_certificates(t: Iterable[int], r: Iterable[int], rp: Iterable[int]) -> FpqCertificates:
    """Build and check f_3 (RDF), f_4 (TRDF), the OIT dominating set, f_6 (OIRDF) and f_7 (OITRDF).

    Every item is built literally from its role-vertex definition. If any
    item fails its checker the whole bundle is attached to the raised
    ConstructionError so callers can inspect which one.
    """
    t, r, rp = tuple(t), tuple(r), tuple(rp)
    lg = gen_fpq(t, r, rp)
    G = lg.graph
    claimed = fpq_values(t, r)
    labs = _fpq_labelings(lg)

    def outcome(key: str, variant: Variant, param: str) -> ConstructionOutcome:
        return ConstructionOutcome(lg, labs[key], claimed[param], validate(G, labs[key], variant))

    R = lg.roles
    toi = frozenset(R["c"] + R["z"] + R["wi"] + R["r_side"])
    bundle = FpqCertificates(
        graph=lg,
        f3=outcome("f3", Variant.RDF, "gamma_R"),
        f4=outcome("f4", Variant.TRDF, "gamma_tR"),
        toi_set=SetOutcome(lg, toi, claimed["gamma_toi"], "oit_dominating", set_predicate(G, toi, "oit_dominating")),
        f6=outcome("f6", Variant.OIRDF, "gamma_oiR"),
        f7=outcome("f7", Variant.OITRDF, "gamma_oitR"),
    )
    problems = []
    for name, o in bundle.items():
        if isinstance(o, SetOutcome):
            if not o.checked.ok:
                problems.append(f"{name}: {o.mode} fails at {o.checked.witness}")
            elif o.size != o.claimed_size:
                problems.append(f"{name}: size {o.size} != claimed {o.claimed_size}")
        elif not o.checked.valid:
            rule, witness = o.checked.violation
            problems.append(f"{name}: {o.checked.variant.value} fails ({rule} at {lg.names[witness] if isinstance(witness, int) else witness})")
        elif o.weight != o.claimed_weight:
            problems.append(f"{name}: weight {o.weight} != claimed {o.claimed_weight}")
    if problems:
        raise ConstructionError("; ".join(problems), bundle)
    return bundle


def fpq_oitrdf_repaired(t: Iterable[int], r: Iterable[int], rp: Iterable[int]) -> ConstructionOutcome:
    """f_7 with the hub w raised to 1, which gives w a defended alternative.

    The plain f_7 leaves w at 0 with neighbors z_i, w_i all labelled 1, so w
    has no 2-neighbor; raising w to 1 costs one and makes the labeling valid.
    """
    t, r, rp = tuple(t), tuple(r), tuple(rp)
    lg = gen_fpq(t, r, rp)
    values = list(_fpq_labelings(lg)["f7"].values)
    values[lg.roles["w"][0]] = 1
    return _finish(lg, lg.graph, RomanLabeling(tuple(values)), fpq_values(t, r)["gamma_oitR"] + 1)


# -- set combinations ---------------------------------------------------------------------


def _require(G: Graph, A: Iterable[int], mode: str, name: str) -> frozenset[int]:
    A = frozenset(A)
    res = set_predicate(G, A, mode)
    if not res:
        raise InputError(f"{name} is not a {mode.replace('_', ' ')} set (violation at {res.witness})")
    return A


def _combine(G: Graph, A: frozenset[int], B: frozenset[int]) -> RomanLabeling:
    """V_2 = A ∩ B, V_1 = A △ B, V_0 = the rest; weight |A| + |B|."""
    f = labeling_from_sets(G.n, twos=A & B, ones=A | B)
    checked = validate(G, f, Variant.OITRDF)
    if not checked:
        raise ConstructionError(f"combined labeling is not an OITRDF: {checked.violation}")
    assert f.weight == len(A) + len(B)
    return f


def combine_cover_total(G: Graph, S: Iterable[int], D: Iterable[int]) -> RomanLabeling:
    """Vertex cover S and total dominating set D give an OITRDF of weight |S| + |D|."""
    S = _require(G, S, "vertex_cover", "S")
    D = _require(G, D, "total_dominating", "D")
    return _combine(G, S, D)


def combine_cover_dominating_clawfree(G: Graph, S: Iterable[int], D: Iterable[int]) -> RomanLabeling:
    """Claw-free graphs of minimum degree >= 3: a cover and a dominating set suffice."""
    claw = find_claw(G)
    if claw is not None:
        raise DomainError(f"graph contains an induced claw centered at {claw[0]} with leaves {claw[1:]}")
    delta = degree_profile(G).delta
    if delta < 3:
        raise DomainError(f"minimum degree is {delta}; at least 3 is required")
    S = _require(G, S, "vertex_cover", "S")
    D = _require(G, D, "dominating", "D")
    return _combine(G, S, D)


def combine_oitd_dominating(G: Graph, D: Iterable[int], S: Iterable[int]) -> RomanLabeling:
    """OIT dominating set D and dominating set S give an OITRDF of weight |D| + |S|."""
    D = _require(G, D, "oit_dominating", "D")
    S = _require(G, S, "dominating", "S")
    return _combine(G, D, S)


def lift_oirdf(G: Graph, g: RomanLabeling, S: Iterable[int]) -> RomanLabeling:
    """Turn an OIRDF g into an OITRDF using a dominating set S; weight at most w(g) + |S|."""
    checked = validate(G, g, Variant.OIRDF)
    if not checked:
        raise InputError(f"g is not an OIRDF: {checked.violation}")
    S = _require(G, S, "dominating", "S")
    W0 = g.V0
    values = list(g.values)
    for x in sorted(S):
        if g.values[x]:
            candidates = G.neighbors(x) & W0
            if candidates:
                values[min(candidates)] = 1
        else:
            values[x] = 1
    f = RomanLabeling(tuple(values))
    res = validate(G, f, Variant.OITRDF)
    if not res:
        raise ConstructionError(f"lifted labeling is not an OITRDF: {res.violation}")
    assert f.weight <= g.weight + len(S)
    return f
