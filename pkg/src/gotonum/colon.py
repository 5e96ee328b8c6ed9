"""Colon computations and Goto numbers via exact sparse linear algebra.

A parameter ideal Q with canonical generator q = x^b(1 + tail) is handled
modulo x^T with T = b + f + 1: elements of R with valuation above b + f
lie in x^b times the conductor, which qR absorbs, so nothing below T is
ever affected.  The colon Q : m^g is the kernel of a linear system over
the coordinates {x^e : e in G, e < T}; one row per (multiplier s, checked
exponent j) pair forces the coefficient of x^j in r * x^s * u^(-1) to
vanish whenever j - b is negative or a gap.  The Goto number is the last
g whose colon stays inside the integral closure, i.e. has no kernel
vector of valuation below b.
"""

from __future__ import annotations

from .errors import (
    BoundViolation,
    ClosedIdeal,
    NotAReduction,
    NotGorenstein,
    NotInConductor,
    NotInSemigroup,
    TruncationTooSmall,
)
from .ring import CanonicalIdeal, RingElement

# -- exact sparse row echelon --------------------------------------------


def _forward_eliminate(rows, field):
    """Sparse forward elimination.  Returns {pivot column -> row} with each
    stored row normalized to pivot coefficient 1."""
    zero = field.zero
    pivots = {}
    for incoming in rows:
        row = dict(incoming)
        while row:
            j = min(row)
            prow = pivots.get(j)
            if prow is None:
                lead = row[j]
                if lead != field.one:
                    inv = field.inv(lead)
                    row = {c: field.mul(inv, v) for c, v in row.items()}
                pivots[j] = row
                break
            factor = row.pop(j)
            for c, v in prow.items():
                if c == j:
                    continue
                nv = field.sub(row.get(c, zero), field.mul(factor, v))
                if nv == zero:
                    row.pop(c, None)
                else:
                    row[c] = nv
    return pivots


def _back_substitute(pivots, field):
    """Reduce each pivot row against the others (full RREF), in place."""
    zero = field.zero
    for j in sorted(pivots, reverse=True):
        prow = pivots[j]
        for j2 in pivots:
            if j2 >= j:
                continue
            row = pivots[j2]
            factor = row.get(j)
            if factor is None:
                continue
            for c, v in prow.items():
                nv = field.sub(row.get(c, zero), field.mul(factor, v))
                if nv == zero:
                    row.pop(c, None)
                else:
                    row[c] = nv
    return pivots


def _rref(rows, field):
    return _back_substitute(_forward_eliminate(rows, field), field)


def _kernel_basis(rows, cols, field):
    """Reduced basis of the kernel of the system, pivots ascending."""
    pivots = _rref(rows, field)
    vectors = []
    one = field.one
    for free in cols:
        if free in pivots:
            continue
        v = {free: one}
        for p, prow in pivots.items():
            coef = prow.get(free)
            if coef is not None:
                v[p] = field.neg(coef)
        vectors.append(v)
    reduced = _rref(vectors, field)
    return [reduced[j] for j in sorted(reduced)]


class TruncatedSubspace:
    """A subspace of R / x^T R in reduced echelon coordinates.

    Basis vectors are sparse maps exponent -> scalar with pivot exponents
    strictly ascending; the smallest pivot is the minimal valuation
    attained by the subspace.
    """

    __slots__ = ("semigroup", "field", "truncation", "basis")

    def __init__(self, semigroup, field, truncation, basis):
        self.semigroup = semigroup
        self.field = field
        self.truncation = truncation
        self.basis = basis

    @classmethod
    def span(cls, semigroup, field, truncation, vectors):
        reduced = _rref(vectors, field)
        return cls(semigroup, field, truncation, [reduced[j] for j in sorted(reduced)])

    def min_valuation(self):
        """Smallest pivot exponent; None for the zero subspace."""
        if not self.basis:
            return None
        return min(self.basis[0])

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def reduce_vector(self, vec):
        """Residual of vec after elimination against the basis."""
        zero = self.field.zero
        out = dict(vec)
        for row in self.basis:
            p = min(row)
            factor = out.get(p)
            if factor is None:
                continue
            for c, v in row.items():
                nv = self.field.sub(out.get(c, zero), self.field.mul(factor, v))
                if nv == zero:
                    out.pop(c, None)
                else:
                    out[c] = nv
        return out

    def contains_vector(self, vec) -> bool:
        return not self.reduce_vector(vec)

    def contains_subspace(self, other) -> bool:
        return all(self.contains_vector(v) for v in other.basis)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSubspace)
            and self.semigroup == other.semigroup
            and self.field == other.field
            and self.truncation == other.truncation
            and self.basis == other.basis
        )

    def __repr__(self):
        return (
            f"<subspace dim {self.dimension} of R/x^{self.truncation} "
            f"over {self.semigroup.generators}>"
        )


# -- the membership linear system ------------------------------------------


def _default_truncation(Q: CanonicalIdeal) -> int:
    return Q.truncation


def _column_exponents(S, T):
    return [e for e in range(T) if S.contains(e)]


def _context(Q):
    """Per-ideal memo: semigroup members below the working truncation and
    the exponent positions that carry membership conditions."""
    ctx = Q._engine_cache.get("ctx")
    if ctx is None:
        S = Q.semigroup
        b = Q.b
        hi = b + max(S.frobenius, 0)
        cols = _column_exponents(S, hi + 1)
        member = set(cols)
        checked = {j for j in range(hi + 1) if j < b or (j - b) not in member}
        ctx = (hi, member, checked, cols)
        Q._engine_cache["ctx"] = ctx
    return ctx


def _pinned_exponents(Q, multipliers):
    """For a monomial generator, the coordinates forced to vanish."""
    _, member, checked, _ = _context(Q)
    pinned = set()
    for s in multipliers:
        pinned |= member & {j - s for j in checked}
    return pinned


def _membership_rows(Q, multipliers, T):
    """Rows forcing r * x^s in Q for every s in multipliers.

    Only exponents j <= b + f carry conditions; a condition at j reads off
    the coefficient of x^j in r * x^s * u^(-1), which is a combination of
    the unknowns r_c with c = j - s - k over the support k of u^(-1).
    """
    hi, member, checked, _ = _context(Q)
    if not Q.unit_coeffs:
        # monomial generator: each condition pins a single coordinate
        one = Q.field.one
        return [{c: one} for c in sorted(_pinned_exponents(Q, multipliers))]
    S = Q.semigroup
    uinv = Q.unit_inverse(hi + 1)
    checked_asc = sorted(checked)
    rows = []
    for s in multipliers:
        for j in checked_asc:
            if j < s:
                continue
            row = {}
            for k, uv in uinv.items():
                c = j - s - k
                if c >= 0 and (c in member or (c < T and S.contains(c))):
                    row[c] = uv
            if row:
                rows.append(row)
    return rows


def colon_power(Q: CanonicalIdeal, g: int, truncation=None) -> TruncatedSubspace:
    """The subspace {r mod x^T : r * m^g <= Q} at T = b + f + 1 by default."""
    if g < 0:
        raise ValueError(f"need g >= 0, got {g}")
    S = Q.semigroup
    T = truncation if truncation is not None else _default_truncation(Q)
    if T < _default_truncation(Q):
        raise TruncationTooSmall(
            f"colon needs truncation >= {_default_truncation(Q)}, got {T}"
        )
    hi = Q.b + max(S.frobenius, 0)
    multipliers = S._sums_upto(g, hi)
    cols = _column_exponents(S, T)
    rows = _membership_rows(Q, multipliers, T)
    return TruncatedSubspace(S, Q.field, T, _kernel_basis(rows, cols, Q.field))


def colon_by_monomials(Q: CanonicalIdeal, exponents, truncation=None) -> TruncatedSubspace:
    """The subspace {r mod x^T : r * x^e in Q for every e in the set}."""
    S = Q.semigroup
    for e in exponents:
        if not S.contains(e):
            raise NotInSemigroup(
                f"multiplier exponent {e} is not in the semigroup {S.generators}"
            )
    T = truncation if truncation is not None else _default_truncation(Q)
    if T < _default_truncation(Q):
        raise TruncationTooSmall(
            f"colon needs truncation >= {_default_truncation(Q)}, got {T}"
        )
    hi = Q.b + max(S.frobenius, 0)
    multipliers = sorted(e for e in set(exponents) if e <= hi)
    cols = _column_exponents(S, T)
    rows = _membership_rows(Q, multipliers, T)
    return TruncatedSubspace(S, Q.field, T, _kernel_basis(rows, cols, Q.field))


def _colon_min_valuation(Q, g):
    """Minimal valuation in Q : m^g.

    For a monomial generator every system row pins a single coordinate,
    so the kernel is the span of the unconstrained coordinates and its
    minimal valuation is the smallest free exponent.  For a general
    generator the kernel can reach below every free coordinate (vectors
    may combine constrained ones), so the full reduced basis is needed.
    """
    if not Q.unit_coeffs:
        S = Q.semigroup
        hi, _, checked, cols = _context(Q)
        multipliers = S._sums_upto(g, hi)
        for c in cols:
            pinned = False
            for s in multipliers:
                j = c + s
                if j > hi:
                    break
                if j in checked:
                    pinned = True
                    break
            if not pinned:
                return c
        return None
    return colon_power(Q, g).min_valuation()


def goto_number(Q: CanonicalIdeal) -> int:
    """Largest g such that Q : m^g stays inside the integral closure of Q.

    Ascending scan with early exit at the first colon that reaches below
    valuation b; the scan cannot legitimately pass floor(f/a_1) + 1, so
    reaching floor(f/a_1) + 2 raises an internal error.
    """
    S = Q.semigroup
    if S.is_regular:
        return 0
    cap = S.frobenius // S.multiplicity + 1
    for g in range(1, cap + 2):
        mv = _colon_min_valuation(Q, g)
        if mv is not None and mv < Q.b:
            return g - 1
    raise BoundViolation(
        f"colon of ({Q}) still integral at g = {cap + 1}, beyond the proven bound"
    )


def goto_monomial(S, b: int) -> int:
    """Goto number of the monomial ideal x^b R, by pure combinatorics.

    x^c survives in x^b R : m^g exactly when c + s - b stays in G for
    every sum s of g generators with s <= b + f - c.  For fixed c the set
    of g where some sum escapes is the initial segment [0, w(b - c)] with
    w the escape order, so the Goto number is min over c in G, c < b, of
    the escape order of b - c.
    """
    if b < 1:
        raise ValueError(f"need b >= 1, got {b}")
    if not S.contains(b):
        raise NotInSemigroup(f"{b} is not in the semigroup {S.generators}")
    if S.is_regular:
        return 0
    value = min(S.escape_order(b - c) for c in S.members(0, b - 1))
    cap = S.frobenius // S.multiplicity + 1
    if value > cap:
        raise BoundViolation(
            f"g(x^{b}) = {value} escapes the proven bound {cap}"
        )
    return value


# -- duality and nilpotency ---------------------------------------------


def ideal_image(Q: CanonicalIdeal, truncation=None) -> TruncatedSubspace:
    """The image of Q in R / x^T R, spanned by the shifts q * x^e."""
    S = Q.semigroup
    T = truncation if truncation is not None else _default_truncation(Q)
    fld = Q.field
    vectors = []
    for e in S.members(0, T - 1 - Q.b):
        vec = {Q.b + e: fld.one}
        for i, v in Q.unit_coeffs.items():
            if Q.b + e + i < T:
                vec[Q.b + e + i] = v
        vectors.append(vec)
    return TruncatedSubspace.span(S, fld, T, vectors)


def is_integrally_closed(Q: CanonicalIdeal) -> bool:
    """Compare the image of Q with the span of {x^e : e in G, e >= b}."""
    S = Q.semigroup
    T = _default_truncation(Q)
    one = Q.field.one
    closure = TruncatedSubspace.span(
        S, Q.field, T, [{e: one} for e in S.members(Q.b, T - 1)]
    )
    return ideal_image(Q) == closure


def contained_in_power_sum(V: TruncatedSubspace, i: int, Q: CanonicalIdeal) -> bool:
    """Decide V <= m^i + Q inside R / x^T R.

    Needs T >= max(b, i*a_1) + f + 1: elements of valuation at least
    i*a_1 + f + 1 factor as x^(i*a_1) times a conductor element, hence lie
    in m^i, so the truncated comparison decides the real containment.
    """
    if i < 0:
        raise ValueError(f"need i >= 0, got {i}")
    S = V.semigroup
    T = V.truncation
    f = max(S.frobenius, 0)
    needed = max(Q.b, i * S.multiplicity) + f + 1
    if T < needed:
        raise TruncationTooSmall(
            f"containment at i = {i} needs truncation >= {needed}, got {T}"
        )
    if i == 0 or not V.basis:
        return True
    fld = Q.field
    one = fld.one
    vectors = [
        {e: one}
        for e in S.members(1, T - 1)
        if S.madic_order(e) >= i
    ]
    for e in S.members(0, T - 1 - Q.b):
        vec = {Q.b + e: one}
        for pos, v in Q.unit_coeffs.items():
            if Q.b + e + pos < T:
                vec[Q.b + e + pos] = v
        vectors.append(vec)
    W = TruncatedSubspace.span(S, fld, T, vectors)
    return W.contains_subspace(V)


def _closure_generator_exponents(Q):
    """Monomial generators of the integral closure of Q as an ideal:
    exponents e in G with b <= e <= b + f + 1 (higher monomials are
    x^(a_1)-multiples of lower ones; checked below on a window)."""
    S = Q.semigroup
    gens = S.members(Q.b, Q.b + max(S.frobenius, 0) + 1)
    assert all(
        any(S.contains(e - c) for c in gens)
        for e in S.members(Q.b, Q.b + 2 * max(S.frobenius, 1))
    ), "closure generator window too small"
    return gens


def dual_goto(Q: CanonicalIdeal) -> int:
    """Goto number through Gorenstein duality.

    With J = Q : (integral closure of Q), the Goto number equals
    max{i : J <= m^i + Q} whenever the semigroup is symmetric and Q is
    strictly smaller than its closure.
    """
    S = Q.semigroup
    if not S.is_symmetric():
        raise NotGorenstein(
            f"duality requires a symmetric semigroup, {S.generators} is not"
        )
    if is_integrally_closed(Q):
        raise ClosedIdeal("duality requires Q strictly inside its closure")
    a1 = S.multiplicity
    f = max(S.frobenius, 0)
    closure_exps = _closure_generator_exponents(Q)
    cap = S.frobenius // a1 + 2
    best = 0
    for i in range(1, cap + 1):
        T_i = max(Q.b, i * a1) + f + 1
        J = colon_by_monomials(Q, closure_exps, truncation=T_i)
        if contained_in_power_sum(J, i, Q):
            best = i
        else:
            return best
    raise BoundViolation(
        f"duality value for ({Q}) escaped the bound {cap}"
    )


def conductor_dual_goto(Q: CanonicalIdeal) -> int:
    """The value max{i : C <= m^i + Q} for Q inside the conductor C.

    Agrees with the Goto number when the semigroup is symmetric; computed
    as stated regardless, so callers can compare the two.
    """
    S = Q.semigroup
    f = S.frobenius
    if Q.b <= f:
        raise NotInConductor(
            f"generator valuation {Q.b} must exceed the Frobenius number {f}"
        )
    one = Q.field.one
    hard_cap = (Q.b + max(f, 0)) // S.multiplicity + 3
    best = 0
    for i in range(1, hard_cap + 1):
        T_i = max(Q.b, i * S.multiplicity) + max(f, 0) + 1
        V = TruncatedSubspace.span(
            S, Q.field, T_i, [{e: one} for e in S.conductor_generators]
        )
        if contained_in_power_sum(V, i, Q):
            best = i
        else:
            return best
    raise BoundViolation(
        f"conductor containment for ({Q}) never failed up to i = {hard_cap}"
    )


def index_of_nilpotency(Q: CanonicalIdeal) -> int:
    """Least i with m^(i+1) <= Q, for Q a reduction of m (valuation a_1).

    Containment is checked on the monomial generators of m^(i+1) with
    exponent at most b + f; larger products fall into x^b times the
    conductor automatically.
    """
    S = Q.semigroup
    if Q.b != S.multiplicity:
        raise NotAReduction(
            f"generator valuation {Q.b} differs from the multiplicity "
            f"{S.multiplicity}"
        )
    hi = Q.b + max(S.frobenius, 0)
    cap = hi // S.multiplicity + 2
    for i in range(cap + 1):
        gens = S._sums_upto(i + 1, hi)
        if all(
            Q.contains(RingElement.monomial(S, s, Q.field)) for s in gens
        ):
            return i
    raise BoundViolation(f"m^(i+1) never entered ({Q}) up to i = {cap}")
