"""Roman labelings f: V -> {0, 1, 2} and validity checks for the four variants."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .graph import Graph, InputError


class Variant(str, Enum):
    RDF = "RDF"
    TRDF = "TRDF"
    OIRDF = "OIRDF"
    OITRDF = "OITRDF"

    @property
    def total(self) -> bool:
        return self in (Variant.TRDF, Variant.OITRDF)

    @property
    def outer_independent(self) -> bool:
        return self in (Variant.OIRDF, Variant.OITRDF)

    @property
    def parameter(self) -> str:
        return {"RDF": "gamma_R", "TRDF": "gamma_tR", "OIRDF": "gamma_oiR", "OITRDF": "gamma_oitR"}[self.value]

    @classmethod
    def parse(cls, text: str | Variant) -> Variant:
        """Accept 'oitrdf', 'OITRDF', 'oitR', 'gamma_oitR' and friends."""
        if isinstance(text, Variant):
            return text
        key = text.strip()
        if key.startswith("gamma_"):
            key = key[len("gamma_"):]
        key = key.upper()
        if not key.endswith("DF"):
            key += "DF"
        try:
            return cls(key)
        except ValueError:
            raise InputError(f"unknown Roman variant {text!r}") from None


RULE_ZERO_UNDEFENDED = "zero-without-two-neighbor"
RULE_ZERO_NOT_INDEPENDENT = "zero-set-not-independent"
RULE_POSITIVE_ISOLATED = "positive-isolated"


@dataclass(frozen=True)
class RomanLabeling:
    values: tuple[int, ...]

    def level(self, i: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.values) if x == i)

    @property
    def V0(self) -> frozenset[int]:
        return self.level(0)

    @property
    def V1(self) -> frozenset[int]:
        return self.level(1)

    @property
    def V2(self) -> frozenset[int]:
        return self.level(2)

    @property
    def positive(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.values) if x)

    @property
    def weight(self) -> int:
        return sum(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def digits(self) -> str:
        return "".join(str(x) for x in self.values)


def make_labeling(G: Graph, values: Sequence[int] | str) -> RomanLabeling:
    if isinstance(values, str):
        if not values.isdigit():
            raise InputError(f"labeling string must contain only digits, got {values!r}")
        values = [int(c) for c in values]
    values = tuple(values)
    if len(values) != G.n:
        raise InputError(f"labeling has {len(values)} entries but the graph has {G.n} vertices")
    for v, x in enumerate(values):
        if x not in (0, 1, 2):
            raise InputError(f"label {x!r} at vertex {v} is not in {{0, 1, 2}}")
    return RomanLabeling(values)


def labeling_from_sets(n: int, twos: Iterable[int], ones: Iterable[int]) -> RomanLabeling:
    """Everything not listed gets 0; a vertex listed as both is a 2."""
    values = [0] * n
    for v in ones:
        values[v] = 1
    for v in twos:
        values[v] = 2
    return RomanLabeling(tuple(values))


@dataclass(frozen=True)
class ValidationResult:
    valid: bool
    variant: Variant
    violation: tuple[str, int | tuple[int, int]] | None = None

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict:
        out: dict = {"valid": self.valid, "variant": self.variant.value}
        if self.violation is not None:
            rule, witness = self.violation
            out["violation"] = {"rule": rule, "witness": list(witness) if isinstance(witness, tuple) else witness}
        return out


def validate(G: Graph, f: RomanLabeling, variant: Variant | str) -> ValidationResult:
    """Check f against the variant's rules, reporting the first broken rule at its lowest witness."""
    variant = Variant.parse(variant)
    if len(f) != G.n:
        raise InputError(f"labeling has {len(f)} entries but the graph has {G.n} vertices")
    vals = f.values
    for v in G.vertices:
        if vals[v] == 0 and not any(vals[u] == 2 for u in G.neighbors(v)):
            return ValidationResult(False, variant, (RULE_ZERO_UNDEFENDED, v))
    if variant.outer_independent:
        for u, v in G.edges:
            if vals[u] == 0 and vals[v] == 0:
                return ValidationResult(False, variant, (RULE_ZERO_NOT_INDEPENDENT, (u, v)))
    if variant.total:
        for v in G.vertices:
            if vals[v] and not any(vals[u] for u in G.neighbors(v)):
                return ValidationResult(False, variant, (RULE_POSITIVE_ISOLATED, v))
    return ValidationResult(True, variant)
