"""Enumeration and search over parameter ideals.

Canonical forms x^b(1 + sum u_i x^i) are enumerated over a finite
coefficient set; the resulting Goto numbers are exact for the chosen
field and coefficient set and say nothing about other coefficients.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import product

from .bounds import bound_global, stable_goto
from .colon import goto_monomial, goto_number
from .errors import SearchSpaceTooLarge
from .fields import RATIONALS
from .ring import CanonicalIdeal, canonicalize


def monomial_table(S, e_max: int) -> dict:
    """Goto numbers of every monomial ideal x^e with e in G, 1 <= e <= e_max."""
    if e_max < S.multiplicity:
        raise ValueError(f"need e_max >= {S.multiplicity}, got {e_max}")
    return {e: goto_monomial(S, e) for e in S.members(1, e_max)}


@dataclass
class SearchConfig:
    """Enumeration space for a canonical-form search.

    coefficients must contain 0 (absent positions); positions, when given,
    restricts which tail indices i may carry a nonzero coefficient.
    Enumeration order is lexicographic in (b, coefficient vector) and is
    independent of the parallelism width.
    """

    semigroup: object
    field: object = RATIONALS
    coefficients: tuple = (0, 1)
    b_values: tuple | None = None
    positions: tuple | None = None
    width: int = 1
    cap: int = 10_000_000

    def __post_init__(self):
        fld = self.field
        coerced = [fld.of(c) for c in self.coefficients]
        seen = dict.fromkeys(coerced)
        if fld.zero not in seen:
            raise ValueError("coefficient set must contain 0")
        self.coefficients = tuple(sorted(seen, key=fld.sort_key))
        S = self.semigroup
        if self.b_values is None:
            hi = S.frobenius + S.multiplicity + 1
            self.b_values = tuple(S.members(1, hi))
        else:
            self.b_values = tuple(sorted(set(self.b_values)))
            for b in self.b_values:
                if b < 1 or not S.contains(b):
                    raise ValueError(f"b = {b} is not a valid valuation")
        if self.positions is not None:
            self.positions = tuple(sorted(set(self.positions)))
        if self.width < 1:
            raise ValueError(f"width must be >= 1, got {self.width}")

    def admissible_positions(self, b: int) -> tuple:
        S = self.semigroup
        f = S.frobenius
        pos = [i for i in range(1, f + 1) if S.contains(b + i)]
        if self.positions is not None:
            allowed = set(self.positions)
            pos = [i for i in pos if i in allowed]
        return tuple(pos)


@dataclass(frozen=True)
class SearchRecord:
    b: int
    coeffs: tuple      # ((position, scalar), ...) for the nonzero tail
    goto: int

    def ideal(self, semigroup, field=RATIONALS) -> CanonicalIdeal:
        return CanonicalIdeal(semigroup, self.b, dict(self.coeffs), field)

    def element_text(self, semigroup, field=RATIONALS) -> str:
        return str(self.ideal(semigroup, field).generator())


@dataclass
class SearchResult:
    """Outcome of one search run, exact for the stated field and
    coefficient set only."""

    generators: tuple
    field_label: str
    coefficients: tuple
    records: list
    count: int
    min_goto: int | None
    max_goto: int | None
    value_counts: dict = dc_field(default_factory=dict)
    witnesses: dict = dc_field(default_factory=dict)   # g -> first record

    def to_json(self, semigroup=None, field=RATIONALS):
        payload = {
            "schema": 1,
            "generators": list(self.generators),
            "field": self.field_label,
            "coefficients": [str(c) for c in self.coefficients],
            "count": self.count,
            "min_goto": self.min_goto,
            "max_goto": self.max_goto,
            "value_counts": {str(g): n for g, n in sorted(self.value_counts.items())},
        }
        if semigroup is not None:
            payload["witnesses"] = {
                str(g): rec.element_text(semigroup, field)
                for g, rec in sorted(self.witnesses.items())
            }
        return payload

    def to_tsv(self) -> str:
        lines = ["b\tcoeffs\tgoto"]
        for rec in self.records:
            tail = ";".join(f"{i}:{v}" for i, v in rec.coeffs) or "-"
            lines.append(f"{rec.b}\t{tail}\t{rec.goto}")
        return "\n".join(lines) + "\n"


def _search_one_b(config, b):
    S = config.semigroup
    fld = config.field
    zero = fld.zero
    positions = config.admissible_positions(b)
    records = []
    for vector in product(config.coefficients, repeat=len(positions)):
        tail = {
            i: c for i, c in zip(positions, vector) if c != zero
        }
        Q = CanonicalIdeal(S, b, tail, fld)
        records.append(SearchRecord(b, tuple(sorted(tail.items())), goto_number(Q)))
    return records


def search(config: SearchConfig) -> SearchResult:
    """Enumerate the configured canonical forms and collect Goto numbers."""
    S = config.semigroup
    total = 0
    for b in config.b_values:
        total += len(config.coefficients) ** len(config.admissible_positions(b))
        if total > config.cap:
            raise SearchSpaceTooLarge(
                f"enumeration would exceed {config.cap} ideals"
            )
    if config.width > 1:
        with ThreadPoolExecutor(max_workers=config.width) as pool:
            chunks = list(pool.map(lambda b: _search_one_b(config, b), config.b_values))
    else:
        chunks = [_search_one_b(config, b) for b in config.b_values]
    records = [rec for chunk in chunks for rec in chunk]
    value_counts = {}
    witnesses = {}
    for rec in records:
        value_counts[rec.goto] = value_counts.get(rec.goto, 0) + 1
        witnesses.setdefault(rec.goto, rec)
    gotos = sorted(value_counts)
    return SearchResult(
        generators=S.generators,
        field_label=config.field.label,
        coefficients=config.coefficients,
        records=records,
        count=len(records),
        min_goto=gotos[0] if gotos else None,
        max_goto=gotos[-1] if gotos else None,
        value_counts=value_counts,
        witnesses=witnesses,
    )


@dataclass(frozen=True)
class ProductCheck:
    factors: tuple       # (str(q1), str(q2))
    g1: int
    g2: int
    g_product: int
    ok: bool
    strict: bool


@dataclass
class ProductInequalityReport:
    checks: list

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def strict_witnesses(self):
        return [c for c in self.checks if c.strict]


def verify_product_inequality(S, pairs) -> ProductInequalityReport:
    """Check g(Q1 Q2) <= min(g(Q1), g(Q2)) on the given ideal pairs.

    The product generator is truncated at b1 + b2 + f + 1 before
    canonicalization; coefficients beyond never change the product ideal.
    """
    checks = []
    f = max(S.frobenius, 0)
    for Q1, Q2 in pairs:
        g1, g2 = goto_number(Q1), goto_number(Q2)
        T = Q1.b + Q2.b + f + 1
        product = (Q1.generator() * Q2.generator()).truncate(T)
        g12 = goto_number(canonicalize(product))
        bound = min(g1, g2)
        checks.append(
            ProductCheck(
                factors=(str(Q1), str(Q2)),
                g1=g1,
                g2=g2,
                g_product=g12,
                ok=g12 <= bound,
                strict=g12 < bound,
            )
        )
    return ProductInequalityReport(checks)


@dataclass(frozen=True)
class LowerBoundCheck:
    b: int
    goto: int
    monomial_goto: int
    ok: bool
    strict: bool


@dataclass
class MonomialLowerBoundReport:
    checks: list

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def strict_witnesses(self):
        return [c for c in self.checks if c.strict]


def verify_monomial_lower_bound(S, result: SearchResult) -> MonomialLowerBoundReport:
    """Check g(Q) >= g(x^b) for every record of a search run."""
    checks = []
    cache = {}
    for rec in result.records:
        gm = cache.get(rec.b)
        if gm is None:
            gm = goto_monomial(S, rec.b)
            cache[rec.b] = gm
        checks.append(
            LowerBoundCheck(
                b=rec.b,
                goto=rec.goto,
                monomial_goto=gm,
                ok=rec.goto >= gm,
                strict=rec.goto > gm,
            )
        )
    return MonomialLowerBoundReport(checks)


def check_search_envelope(S, result: SearchResult):
    """Every observed Goto number must lie between the stable value and the
    global bound.  Returns (stable, bound); raises AssertionError on
    violation."""
    lo, hi = stable_goto(S), bound_global(S)
    for rec in result.records:
        assert lo <= rec.goto <= hi, (
            f"record (b={rec.b}, g={rec.goto}) escapes [{lo}, {hi}]"
        )
    return lo, hi
