"""Goto numbers of pure-power monomial parameter ideals in a regular
local ring of dimension d (polynomial model).

Colon by the maximal ideal works on minimal monomial generators:
decrement one variable at a time and intersect by pairwise componentwise
maxima.  For m-primary ideals the iterated colon I : m^g is instead
tracked on the staircase complement (the monomials outside the ideal,
which fit in a finite box), one dilation step per power; the two routes
agree and the generator route stays the reference.  Integrality over a
pure-power ideal (x_1^{n_1}, ..., x_d^{n_d}) is the single facet
condition sum p_i / n_i >= 1 of its Newton polyhedron.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .errors import BoundViolation


def _minimal_generators(gens):
    """Drop every exponent vector that another one divides."""
    gens = sorted(set(map(tuple, gens)), key=lambda g: (sum(g), g))
    kept = []
    for g in gens:
        if not any(all(h <= c for h, c in zip(k, g)) for k in kept):
            kept.append(g)
    return tuple(sorted(kept))


class MonomialIdeal:
    """A monomial ideal in d variables, stored by minimal generators."""

    __slots__ = ("dimension", "generators")

    def __init__(self, dimension, generators):
        if dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {dimension}")
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != dimension:
                raise ValueError(f"generator {g} has wrong length")
            if any(not isinstance(e, int) or e < 0 for e in g):
                raise ValueError(f"generator {g} has invalid exponents")
            gens.append(g)
        if not gens:
            raise ValueError("monomial ideal needs at least one generator")
        self.dimension = dimension
        self.generators = _minimal_generators(gens)

    @classmethod
    def pure_powers(cls, exponents):
        exponents = tuple(exponents)
        d = len(exponents)
        gens = [
            tuple(n if k == i else 0 for k in range(d))
            for i, n in enumerate(exponents)
        ]
        return cls(d, gens)

    def contains_exponent(self, point) -> bool:
        point = tuple(point)
        return any(
            all(gi <= pi for gi, pi in zip(g, point)) for g in self.generators
        )

    def colon_variable(self, i: int) -> "MonomialIdeal":
        """I : x_i, by decrementing the i-th exponent of each generator."""
        gens = [
            tuple(max(e - 1, 0) if k == i else e for k, e in enumerate(g))
            for g in self.generators
        ]
        return MonomialIdeal(self.dimension, gens)

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection, generated by pairwise componentwise maxima."""
        gens = {
            tuple(max(a, b) for a, b in zip(g, h))
            for g in self.generators
            for h in other.generators
        }
        return MonomialIdeal(self.dimension, gens)

    def colon_maximal(self) -> "MonomialIdeal":
        """I : (x_1, ..., x_d), the intersection of the I : x_i."""
        parts = [self.colon_variable(i) for i in range(self.dimension)]
        out = reduce(lambda a, b: a.intersection(b), parts)
        # colon never pushes an exponent above the original per-coordinate max
        for k in range(self.dimension):
            assert max(g[k] for g in out.generators) <= max(
                g[k] for g in self.generators
            )
        return out

    def _primary_box(self):
        """Componentwise pure-power exponents (B_1, ..., B_d) when the
        ideal contains a power of every variable, else None."""
        box = []
        for i in range(self.dimension):
            pure = [g[i] for g in self.generators if sum(g) == g[i]]
            if not pure:
                return None
            box.append(min(pure))
        return tuple(box)

    def _staircase(self, box):
        """The monomials outside the ideal, all inside prod [0, B_i)."""
        std = set()
        gens = self.generators
        def fill(prefix, i):
            if i == self.dimension:
                point = tuple(prefix)
                if not any(all(gi <= pi for gi, pi in zip(g, point)) for g in gens):
                    std.add(point)
                return
            for v in range(box[i]):
                prefix.append(v)
                fill(prefix, i + 1)
                prefix.pop()
        fill([], 0)
        return std

    @staticmethod
    def _from_staircase(dimension, box, std):
        """Minimal generators of the ideal whose outside set is std.

        A point is in the ideal when it leaves the box or misses std; a
        minimal generator is an ideal point all of whose downward
        neighbours are outside.  Minimal generators never exceed B_i in
        coordinate i, so the search box is prod [0, B_i].
        """
        from itertools import product as _product

        def in_ideal(q):
            if any(qi >= bi for qi, bi in zip(q, box)):
                return True
            return q not in std

        gens = []
        for point in _product(*(range(b + 1) for b in box)):
            if not in_ideal(point):
                continue
            minimal = True
            for k in range(dimension):
                if point[k] > 0:
                    below = point[:k] + (point[k] - 1,) + point[k + 1:]
                    if in_ideal(below):
                        minimal = False
                        break
            if minimal:
                gens.append(point)
        return MonomialIdeal(dimension, gens)

    def colon_power_maximal(self, g: int) -> "MonomialIdeal":
        """I : m^g, iterating the colon g times.

        For m-primary ideals the iteration runs on the staircase: a
        monomial stays outside I : m^(k+1) exactly when one variable step
        up stays outside I : m^k.
        """
        if g < 0:
            raise ValueError(f"need g >= 0, got {g}")
        if g == 0:
            return self
        box = self._primary_box()
        if box is None:
            out = self
            for _ in range(g):
                out = out.colon_maximal()
            return out
        std = self._staircase(box)
        d = self.dimension
        for _ in range(g):
            nxt = set()
            for point in std:
                for i in range(d):
                    up = point[:i] + (point[i] + 1,) + point[i + 1:]
                    if up in std:
                        nxt.add(point)
                        break
            std = nxt
        return self._from_staircase(d, box, std)

    def order(self) -> int:
        """Largest power of m containing the ideal: the minimum total
        degree of a minimal generator."""
        return min(sum(g) for g in self.generators)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.dimension == other.dimension
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.dimension, self.generators))

    def __repr__(self):
        return f"MonomialIdeal({self.dimension}, {list(self.generators)})"


def pure_power_integral(exponents, point) -> bool:
    """Is x^point integral over (x_1^{n_1}, ..., x_d^{n_d})?

    Exactly when sum p_i / n_i >= 1, the one facet of the Newton
    polyhedron of a pure-power ideal."""
    exponents = tuple(exponents)
    point = tuple(point)
    if len(point) != len(exponents):
        raise ValueError("point and exponent vector lengths differ")
    if any(n < 1 for n in exponents):
        raise ValueError("pure-power exponents must be >= 1")
    total = sum(Fraction(p, n) for p, n in zip(point, exponents))
    return total >= 1


def pure_power_goto(exponents) -> int:
    """Goto number of the pure-power parameter ideal.

    Largest g for which every minimal generator of Q : m^g is integral
    over Q."""
    exponents = tuple(exponents)
    if len(exponents) < 2:
        raise ValueError("need dimension >= 2")
    if any(n < 1 for n in exponents):
        raise ValueError("pure-power exponents must be >= 1")
    Q = MonomialIdeal.pure_powers(exponents)
    cap = sum(exponents) + 2
    d = Q.dimension
    box = Q._primary_box()
    std = Q._staircase(box)
    for g in range(cap + 1):
        current = MonomialIdeal._from_staircase(d, box, std)
        if any(not pure_power_integral(exponents, p) for p in current.generators):
            return g - 1
        nxt = set()
        for point in std:
            for i in range(d):
                up = point[:i] + (point[i] + 1,) + point[i + 1:]
                if up in std:
                    nxt.add(point)
                    break
        std = nxt
    raise BoundViolation(
        f"colon chain of {exponents} never left the integral closure"
    )


def goto_ratios(exponents):
    """The three ratios g/ord(Q), g/ord(Q:m), g/ord(Q:m^g) for one ideal."""
    return pure_power_report(exponents)["ratios"]


def pure_power_report(exponents) -> dict:
    """Goto number, the three ideal orders, and the ratios, all exact."""
    exponents = tuple(exponents)
    g = pure_power_goto(exponents)
    Q = MonomialIdeal.pure_powers(exponents)
    ord_q = Q.order()
    ord_colon = Q.colon_maximal().order()
    ord_colon_g = Q.colon_power_maximal(g).order()
    if g == 0:
        ratios = (Fraction(0), Fraction(0), Fraction(0))
    else:
        ratios = (
            Fraction(g, ord_q),
            Fraction(g, ord_colon),
            Fraction(g, ord_colon_g),
        )
    return {
        "exponents": exponents,
        "goto_number": g,
        "orders": (ord_q, ord_colon, ord_colon_g),
        "ratios": ratios,
    }
