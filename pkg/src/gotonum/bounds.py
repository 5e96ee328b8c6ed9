"""Closed-form bounds and formulas for Goto numbers of monomial ideals,
plus a report comparing each bound with engine-computed truth."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .colon import goto_monomial
from .errors import CrossCheckMismatch, NotTwoGenerated
from .semigroup import NumericalSemigroup


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def bound_global(S: NumericalSemigroup) -> int:
    """Upper bound floor(f/a_1) + 1 valid for every parameter ideal."""
    return S.frobenius // S.multiplicity + 1


def bound_monomial_generator(S: NumericalSemigroup, j: int) -> int:
    """Upper bound floor((a_j - b_j + f)/a_1) for g(x^(a_j)), j >= 2,
    where b_j is the largest semigroup element below a_j."""
    if not 2 <= j <= S.embedding_dim:
        raise ValueError(
            f"generator index {j} outside [2, {S.embedding_dim}]"
        )
    aj = S.generators[j - 1]
    bj = S.largest_below(aj)
    return (aj - bj + S.frobenius) // S.multiplicity


def bound_first_generator(S: NumericalSemigroup) -> int:
    """Upper bound ceil((f + a_1 + 1)/a_2) - 1 for g(x^(a_1))."""
    if S.embedding_dim < 2:
        raise NotTwoGenerated("bound needs at least two generators")
    a1, a2 = S.generators[0], S.generators[1]
    return _ceil_div(S.frobenius + a1 + 1, a2) - 1


def closed_form_two_generated(S: NumericalSemigroup):
    """Exact pair (g(x^(a_1)), g(x^(a_2))) = (a_1 - 1, a_2 - 1 - floor((a_2-1)/a_1))
    for a two-generated semigroup; the first component never exceeds the second."""
    if S.embedding_dim != 2:
        raise NotTwoGenerated(
            f"semigroup {S.generators} is not two-generated"
        )
    a1, a2 = S.generators
    return (a1 - 1, a2 - 1 - (a2 - 1) // a1)


def stable_goto(S: NumericalSemigroup) -> int:
    """The common Goto number g(x^e) for all e >= f + a_1 + 1.

    Computed as g(x^(f+a_1+1)) and cross-checked against both
    combinatorial characterizations, and against a_1 - 1 when the
    semigroup is two-generated.
    """
    if S.is_regular:
        return 0
    value = goto_monomial(S, S.frobenius + S.multiplicity + 1)
    via_t = S.stable_goto_via_t()
    via_t_prime = S.stable_goto_via_t_prime()
    if not (value == via_t == via_t_prime):
        raise CrossCheckMismatch(
            f"stable Goto number of {S.generators}: monomial route {value}, "
            f"power route {via_t}, order route {via_t_prime}"
        )
    if S.embedding_dim == 2 and value != S.multiplicity - 1:
        raise CrossCheckMismatch(
            f"two-generated stable value {value} != a_1 - 1 = "
            f"{S.multiplicity - 1}"
        )
    return value


def rho(S: NumericalSemigroup) -> int:
    """Largest Goto number among monomial parameter ideals: the maximum of
    g(x^(a_j)) over the generators."""
    if S.is_regular:
        return 0
    return max(goto_monomial(S, a) for a in S.generators)


def bound_display_max(S: NumericalSemigroup) -> int:
    """Combined bound max(first-generator bound, per-generator bounds).

    Dominates rho and never exceeds 1 + f/a_1 (checked exactly)."""
    value = max(
        bound_first_generator(S),
        max(bound_monomial_generator(S, j) for j in range(2, S.embedding_dim + 1)),
    )
    assert value >= rho(S), "combined bound undercuts the monomial supremum"
    assert Fraction(value) <= 1 + Fraction(S.frobenius, S.multiplicity), (
        "combined bound exceeds 1 + f/a_1"
    )
    return value


@dataclass
class BoundReport:
    """Every bound and formula for one semigroup, next to engine truth."""

    generators: tuple
    frobenius: int
    global_bound: int
    generator_bounds: dict          # a_j -> bound, j >= 2
    first_generator_bound: int
    two_generated_pair: tuple | None
    display_max: int
    stable: int
    rho: int
    conductor_order: int
    monomial_gotos: dict = field(default_factory=dict)   # a_j -> g(x^(a_j))
    slacks: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "schema": 1,
            "generators": list(self.generators),
            "frobenius": self.frobenius,
            "global_bound": self.global_bound,
            "generator_bounds": {str(k): v for k, v in self.generator_bounds.items()},
            "first_generator_bound": self.first_generator_bound,
            "two_generated_pair": (
                list(self.two_generated_pair) if self.two_generated_pair else None
            ),
            "display_max": self.display_max,
            "stable_goto": self.stable,
            "rho": self.rho,
            "conductor_order": self.conductor_order,
            "monomial_gotos": {str(k): v for k, v in self.monomial_gotos.items()},
            "slacks": dict(self.slacks),
        }


def build_report(S: NumericalSemigroup) -> BoundReport:
    """Evaluate every bound for S and record the slack against engine truth.

    All slacks are non-negative; a negative slack would mean a bound
    failed and is raised as an internal error.
    """
    monomial_gotos = {a: goto_monomial(S, a) for a in S.generators}
    generator_bounds = {
        S.generators[j - 1]: bound_monomial_generator(S, j)
        for j in range(2, S.embedding_dim + 1)
    }
    pair = closed_form_two_generated(S) if S.embedding_dim == 2 else None
    if pair is not None and pair != (
        monomial_gotos[S.generators[0]],
        monomial_gotos[S.generators[1]],
    ):
        raise CrossCheckMismatch(
            f"two-generated closed form {pair} disagrees with engine "
            f"{tuple(monomial_gotos.values())} on {S.generators}"
        )
    report = BoundReport(
        generators=S.generators,
        frobenius=S.frobenius,
        global_bound=bound_global(S),
        generator_bounds=generator_bounds,
        first_generator_bound=bound_first_generator(S),
        two_generated_pair=pair,
        display_max=bound_display_max(S),
        stable=stable_goto(S),
        rho=rho(S),
        conductor_order=S.conductor_order(),
        monomial_gotos=monomial_gotos,
    )
    slacks = {
        "global_vs_rho": report.global_bound - report.rho,
        "first_generator": report.first_generator_bound
        - monomial_gotos[S.generators[0]],
        "display_vs_rho": report.display_max - report.rho,
        "stable_vs_conductor_order": report.stable - report.conductor_order,
    }
    for a, bound in generator_bounds.items():
        slacks[f"generator_{a}"] = bound - monomial_gotos[a]
    for name, slack in slacks.items():
        if slack < 0:
            raise CrossCheckMismatch(
                f"bound {name} violated on {S.generators}: slack {slack}"
            )
    report.slacks = slacks
    return report
