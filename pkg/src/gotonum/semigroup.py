"""Numerical semigroup combinatorics.

A numerical semigroup G is the set of non-negative integer combinations of
generators a_1 < ... < a_d with gcd 1; its complement in the positive
integers is finite.  This module computes membership, the Frobenius number
(largest integer outside G), gaps, the conductor window, m-adic orders of
monomials in the associated semigroup ring, and the two combinatorial
characterizations of the stable Goto number.
"""

from __future__ import annotations

import threading
from math import gcd

from .errors import (
    BoundViolation,
    CoprimalityError,
    EmptyError,
    GcdError,
    NotInSemigroup,
)


def _reachable(gens, cap):
    """Boolean table over [0, cap]: reachable[e] iff e is a sum of generators."""
    table = [False] * (cap + 1)
    table[0] = True
    for e in range(1, cap + 1):
        for a in gens:
            if a <= e and table[e - a]:
                table[e] = True
                break
    return table


def _representable(n, gens):
    if n == 0:
        return True
    if not gens:
        return False
    return _reachable(gens, n)[n]


def _minimalize(gens):
    """Drop every generator that the remaining ones already represent."""
    gens = sorted(set(gens))
    changed = True
    while changed:
        changed = False
        for a in list(gens):
            rest = [g for g in gens if g != a]
            if rest and _representable(a, rest):
                gens.remove(a)
                changed = True
    return gens


def frobenius_two_generated(a1: int, a2: int) -> int:
    """Closed form a1*a2 - a1 - a2 for the Frobenius number of <a1, a2>."""
    if not (1 < a1 < a2):
        raise ValueError(f"need 1 < a1 < a2, got a1={a1}, a2={a2}")
    if gcd(a1, a2) != 1:
        raise CoprimalityError(f"gcd({a1}, {a2}) = {gcd(a1, a2)} != 1")
    return a1 * a2 - a1 - a2


class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    Instances are immutable after construction; the private tables
    (membership, m-adic orders, generator-sum levels) are memoized lazily
    and only ever grow, so shared use across threads is safe.
    """

    def __init__(self, raw_generators):
        raw = list(raw_generators)
        if not raw:
            raise EmptyError("generator list is empty")
        for a in raw:
            if not isinstance(a, int) or a <= 0:
                raise ValueError(f"generator {a!r} is not a positive integer")
        g = 0
        for a in raw:
            g = gcd(g, a)
        if g != 1:
            raise GcdError(f"gcd of generators {sorted(set(raw))} is {g}, not 1")
        self.generators = tuple(_minimalize(raw))
        self.frobenius = self._compute_frobenius()
        cap = self.frobenius + 2 * self.generators[-1]
        self._table = _reachable(self.generators, max(cap, 1))
        self.gaps = tuple(
            e for e in range(1, self.frobenius + 1) if not self._table[e]
        )
        # R-module generators of the conductor x^(f+1)V
        self.conductor_generators = tuple(
            range(self.frobenius + 1, self.frobenius + self.generators[0] + 1)
        )
        self._orders = [0]          # m-adic order table, grows on demand
        self._sums = [(0,)]         # generator-sum levels S_t, sorted tuples
        self._sums_cap = 0
        self._escape = {}           # delta -> escape_order(delta)
        self._lock = threading.Lock()   # guards growth of the tables above

    # -- construction helpers ------------------------------------------

    def _compute_frobenius(self):
        gens = self.generators
        a1, ad = gens[0], gens[-1]
        if a1 == 1:
            return -1
        bound = a1 * ad
        while True:
            table = _reachable(gens, bound)
            run, last_gap = 0, None
            for e in range(bound + 1):
                if table[e]:
                    run += 1
                    if run >= a1:
                        # a1 consecutive members force all larger integers in
                        return last_gap
                else:
                    run, last_gap = 0, e
            bound *= 2

    # -- basic queries ---------------------------------------------------

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dim(self) -> int:
        return len(self.generators)

    @property
    def is_regular(self) -> bool:
        """True when G is all of N_0, i.e. the semigroup ring is a DVR."""
        return self.generators[0] == 1

    def __eq__(self, other):
        return (
            isinstance(other, NumericalSemigroup)
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"NumericalSemigroup{self.generators}"

    def contains(self, e: int) -> bool:
        if e < 0:
            return False
        if e > self.frobenius:
            return True
        return self._table[e]

    def members(self, lo: int, hi: int):
        """Ascending list of semigroup elements in [lo, hi]."""
        return [e for e in range(max(lo, 0), hi + 1) if self.contains(e)]

    def largest_below(self, a: int) -> int:
        """Largest semigroup element strictly smaller than a (0 if none)."""
        if a < 1:
            raise ValueError(f"need a >= 1, got {a}")
        for e in range(a - 1, 0, -1):
            if self.contains(e):
                return e
        return 0

    # -- generator sums ----------------------------------------------------

    def _sum_levels(self, t: int, cap: int):
        with self._lock:
            if cap > self._sums_cap:
                self._sums = [(0,)] if cap >= 0 else [()]
                self._sums_cap = cap
            levels = self._sums
            limit = self._sums_cap
            while len(levels) <= t:
                nxt = set()
                for s in levels[-1]:
                    for a in self.generators:
                        v = s + a
                        if v <= limit:
                            nxt.add(v)
                levels.append(tuple(sorted(nxt)))
            return levels

    def generator_sums(self, t: int, cap: int) -> set:
        """Sums of exactly t generators (with repetition), capped at ``cap``."""
        if t < 0:
            raise ValueError(f"need t >= 0, got {t}")
        if cap < 0:
            raise ValueError(f"need cap >= 0, got {cap}")
        levels = self._sum_levels(t, max(cap, self._sums_cap))
        return {s for s in levels[t] if s <= cap}

    def _sums_upto(self, t: int, cap: int):
        """Sorted tuple version of generator_sums, for deterministic loops."""
        levels = self._sum_levels(t, max(cap, self._sums_cap))
        row = levels[t]
        if not row or row[-1] <= cap:
            return row
        return tuple(s for s in row if s <= cap)

    # -- m-adic orders ------------------------------------------------------

    def _order_table(self, cap: int):
        table = self._orders
        if len(table) > cap:
            return table
        gens = self.generators
        with self._lock:
            for e in range(len(table), cap + 1):
                if not self.contains(e):
                    table.append(None)
                    continue
                best = 0
                for a in gens:
                    if a <= e:
                        rest = table[e - a]
                        if rest is not None and rest >= best:
                            best = rest
                table.append(best + 1)
        return table

    def madic_order(self, e: int) -> int:
        """Largest t with x^e in m^t.  Order of x^0 is 0 by convention."""
        if e == 0:
            return 0
        if e < 0 or not self.contains(e):
            raise NotInSemigroup(f"{e} is not in the semigroup {self.generators}")
        return self._order_table(e)[e]

    def power_contained_in_shift(self, t: int, alpha: int) -> bool:
        """Decide m^t <= x^alpha R as R-modules, for 1 <= alpha <= a_1.

        Holds iff s - alpha is in G for every sum s of t generators;
        sums with s - alpha > f pass automatically.
        """
        if t < 1:
            raise ValueError(f"need t >= 1, got {t}")
        if not (1 <= alpha <= self.multiplicity):
            raise ValueError(f"need 1 <= alpha <= {self.multiplicity}, got {alpha}")
        for s in self._sums_upto(t, self.frobenius + alpha):
            if not self.contains(s - alpha):
                return False
        return True

    def escape_order(self, delta: int) -> int:
        """Largest m-adic order among x^e with e in G, e <= f + delta, and
        e - delta outside G.

        e = 0 always qualifies (delta >= 1), so the value is >= 0.  The
        descending scan stops once e // a_1 cannot beat the best found,
        since the order of x^e is at most e // a_1.
        """
        if delta < 1:
            raise ValueError(f"need delta >= 1, got {delta}")
        cached = self._escape.get(delta)
        if cached is not None:
            return cached
        hi = self.frobenius + delta
        a1 = self.multiplicity
        orders = self._order_table(max(hi, 0))
        best = 0
        for e in range(hi, 0, -1):
            if e // a1 <= best:
                break
            if orders[e] is not None and not self.contains(e - delta):
                if orders[e] > best:
                    best = orders[e]
        self._escape[delta] = best
        return best

    # -- stable Goto number characterizations -------------------------------

    def stable_goto_via_t(self) -> int:
        """Largest t with m^t escaping x^alpha R for every alpha in [1, a_1]."""
        if self.is_regular:
            return 0
        a1 = self.multiplicity
        cap = self.frobenius // a1 + 2
        best = 0
        for t in range(1, cap + 1):
            if all(
                not self.power_contained_in_shift(t, alpha)
                for alpha in range(1, a1 + 1)
            ):
                best = t
            else:
                return best
        raise BoundViolation("stable value escaped its proven bound")

    def stable_goto_via_t_prime(self) -> int:
        """Minimum over alpha in [1, a_1] of the largest m-adic order among
        exponents whose shift by alpha leaves the semigroup."""
        if self.is_regular:
            return 0
        return min(
            self.escape_order(alpha) for alpha in range(1, self.multiplicity + 1)
        )

    # -- symmetry and conductor ---------------------------------------------

    def is_symmetric(self) -> bool:
        """True iff for every n in [0, f] exactly one of n, f - n is in G."""
        f = self.frobenius
        return all(self.contains(n) != self.contains(f - n) for n in range(f + 1))

    def conductor_order(self) -> int:
        """m-adic order of the conductor ideal x^(f+1)V.

        Equals the minimum order over the monomials x^e, e in
        [f+1, f+2*a_d]; orders beyond the window are at least
        ceil(e / a_d), which the assertion checks cannot undercut the
        minimum found.
        """
        if self.is_regular:
            return 0
        f, ad = self.frobenius, self.generators[-1]
        cap = f + 2 * ad
        value = min(self.madic_order(e) for e in range(f + 1, cap + 1))
        assert (cap + 1 + ad - 1) // ad >= value, "conductor window too small"
        return value
