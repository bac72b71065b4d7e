"""
Closure invariants of braid words: component count, Kauffman bracket, Jones polynomial.

The bracket is evaluated by pushing a vector of Temperley-Lieb diagrams through the
word.  A diagram on ``n`` strands is a crossingless perfect matching of ``2n``
boundary points, stored as a partner tuple: points ``0..n-1`` sit on the top
edge, points ``n..2n-1`` on the bottom edge (bottom point ``j`` is ``n+j``).
Letters act on the bottom edge:

    σ_i    -> A·1 + A⁻¹·e_i
    σ_i⁻¹  -> A⁻¹·1 + A·e_i

where ``e_i`` caps bottom positions ``i-1, i`` and closed loops cost
``δ = -A² - A⁻²``.  The trace closure joins top ``j`` to bottom ``j``.  The result
is normalised so the one-strand unknot has bracket 1.

With this convention σ₁³ closes to the right-handed trefoil, ``V = t + t³ - t⁴``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .braid import BraidWord, exponent_sum, permutation
from .errors import ParameterError, StrandLimitError, UnsupportedClosureError
from .laurent import LaurentPoly

DEFAULT_STRAND_LIMIT = 10
STRAND_LIMIT_ENV = "LISSATORIC_STRAND_LIMIT"

Matching = tuple[int, ...]


def strand_limit() -> int:
    raw = os.environ.get(STRAND_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_STRAND_LIMIT


@dataclass(frozen=True)
class PlanarMatching:
    """A crossingless perfect matching of ``2n`` boundary points of a disk."""

    partner: Matching

    def __post_init__(self) -> None:
        p = self.partner
        if len(p) % 2 or any(p[p[j]] != j or p[j] == j for j in range(len(p))):
            raise ParameterError(f"not a perfect matching: {p}")
        if not _is_noncrossing(self.boundary_pairs()):
            raise ParameterError(f"matching {p} has crossing arcs")

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    @classmethod
    def identity(cls, n: int) -> PlanarMatching:
        return cls(_identity(n))

    def boundary_order(self) -> list[int]:
        """Points read around the disk: top left to right, then bottom right to left."""
        n = self.n
        return list(range(n)) + [n + j for j in reversed(range(n))]

    def boundary_pairs(self) -> list[tuple[int, int]]:
        pos = {pt: k for k, pt in enumerate(self.boundary_order())}
        return sorted(
            (pos[a], pos[b]) for a, b in ((a, self.partner[a]) for a in range(len(self.partner))) if pos[a] < pos[b]
        )

    def parens(self) -> str:
        """Balanced-parenthesis encoding along the boundary."""
        pos = {pt: k for k, pt in enumerate(self.boundary_order())}
        chars = [""] * len(self.partner)
        for a, b in enumerate(self.partner):
            chars[pos[a]] = "(" if pos[a] < pos[b] else ")"
        return "".join(chars)

    @classmethod
    def from_parens(cls, s: str) -> PlanarMatching:
        n = len(s) // 2
        order = list(range(n)) + [n + j for j in reversed(range(n))]
        partner = [0] * len(s)
        stack = []
        for k, ch in enumerate(s):
            if ch == "(":
                stack.append(k)
            elif ch == ")":
                if not stack:
                    raise ParameterError(f"unbalanced parenthesis string {s!r}")
                a, b = order[stack.pop()], order[k]
                partner[a], partner[b] = b, a
            else:
                raise ParameterError(f"bad character {ch!r} in {s!r}")
        if stack:
            raise ParameterError(f"unbalanced parenthesis string {s!r}")
        return cls(tuple(partner))


def _is_noncrossing(pairs: list[tuple[int, int]]) -> bool:
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        if a < c < b < d or c < a < d < b:
            return False
    return True


def all_matchings(n: int) -> Iterator[PlanarMatching]:
    """All crossingless matchings on ``2n`` points; there are Catalan(n) of them."""

    def balanced(open_: int, close: int) -> Iterator[str]:
        if open_ == 0 and close == 0:
            yield ""
            return
        if open_:
            for rest in balanced(open_ - 1, close + 1):
                yield "(" + rest
        if close:
            for rest in balanced(open_, close - 1):
                yield ")" + rest

    for s in balanced(n, 0):
        yield PlanarMatching.from_parens(s)


def _identity(n: int) -> Matching:
    return tuple(list(range(n, 2 * n)) + list(range(n)))


@lru_cache(maxsize=None)
def _delta() -> LaurentPoly:
    return LaurentPoly({2: -1, -2: -1}, var="A")


class TLVector:
    """Finite linear combination of matchings on a fixed number of strands."""

    def __init__(self, n: int, terms: dict[Matching, LaurentPoly] | None = None):
        self.n = n
        self.terms: dict[Matching, LaurentPoly] = terms if terms is not None else {_identity(n): LaurentPoly.constant(1, "A")}

    def __len__(self) -> int:
        return len(self.terms)

    def apply_letter(self, i: int, e: int) -> TLVector:
        n = self.n
        a, b = n + i - 1, n + i
        keep = LaurentPoly.monomial(e, var="A")
        cap = LaurentPoly.monomial(-e, var="A")
        delta = _delta()
        out: dict[Matching, LaurentPoly] = {}

        def add(m: Matching, c: LaurentPoly) -> None:
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s

        for m, c in self.terms.items():
            add(m, c * keep)
            x, y = m[a], m[b]
            if x == b:
                add(m, c * cap * delta)
            else:
                p = list(m)
                p[x], p[y] = y, x
                p[a], p[b] = b, a
                add(tuple(p), c * cap)
        return TLVector(n, out)

    def trace(self) -> LaurentPoly:
        """Markov trace closure, normalised so one closed loop counts as 1."""
        delta = _delta()
        total = LaurentPoly({}, "A")
        for m, c in self.terms.items():
            total = total + c * delta ** (_closure_loops(m, self.n) - 1)
        return total


def _closure_loops(m: Matching, n: int) -> int:
    seen = [False] * (2 * n)
    loops = 0
    for start in range(n):
        if seen[start]:
            continue
        loops += 1
        j = start
        while not seen[j]:
            # top j -> its partner via the diagram, then close back to the top
            seen[j] = True
            k = m[j]
            seen[k] = True
            j = k - n if k >= n else k + n
    return loops


def closure_component_count(w: BraidWord) -> int:
    return len(permutation(w).cycles())


def writhe(w: BraidWord) -> int:
    return exponent_sum(w)


def _check_strands(w: BraidWord) -> None:
    limit = strand_limit()
    if w.strands > limit:
        raise StrandLimitError(
            f"{w.strands} strands exceeds the bracket limit {limit}; set {STRAND_LIMIT_ENV} to raise it"
        )


def kauffman_bracket(w: BraidWord) -> LaurentPoly:
    """Kauffman bracket of the closure of ``w`` in the variable ``A``."""
    _check_strands(w)
    vec = TLVector(w.strands)
    for i, e in w.letters:
        vec = vec.apply_letter(i, e)
    return vec.trace()


def bracket_state_sum(w: BraidWord) -> LaurentPoly:
    """Brute-force bracket over all ``2^c`` smoothings; independent check on small words."""
    c = len(w.letters)
    delta = _delta()
    loop_counts: dict[tuple[int, int], int] = {}
    for state in itertools.product((0, 1), repeat=c):
        # state bit 1: take the cap-cup smoothing at that crossing
        loops = _state_loops(w, state)
        exp = 0
        for (_, e), bit in zip(w.letters, state):
            exp += -e if bit else e
        key = (exp, loops)
        loop_counts[key] = loop_counts.get(key, 0) + 1
    result = LaurentPoly({}, "A")
    for (exp, loops), count in loop_counts.items():
        result = result + LaurentPoly.monomial(exp, count, "A") * delta ** (loops - 1)
    return result


def _state_loops(w: BraidWord, state: tuple[int, ...]) -> int:
    n = w.strands
    levels = len(w.letters) + 1
    parent = list(range(n * levels))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    def node(pos: int, level: int) -> int:
        return level * n + pos

    for level, ((i, _), bit) in enumerate(zip(w.letters, state)):
        for pos in range(n):
            if pos not in (i - 1, i):
                union(node(pos, level), node(pos, level + 1))
        if bit:
            union(node(i - 1, level), node(i, level))
            union(node(i - 1, level + 1), node(i, level + 1))
        else:
            union(node(i - 1, level), node(i - 1, level + 1))
            union(node(i, level), node(i, level + 1))
    for pos in range(n):
        union(node(pos, 0), node(pos, levels - 1))
    return len({find(x) for x in range(n * levels)})


def jones_from_bracket(bracket: LaurentPoly, writhe_: int) -> LaurentPoly:
    """``V(t) = (-A^3)^(-writhe) <K>`` rewritten with ``t = A^-4``."""
    sign = -1 if writhe_ % 2 else 1
    normalised = bracket.shift(-3 * writhe_) * sign
    try:
        return normalised.divide_exponents(-4, var="t")
    except ValueError as exc:
        raise ArithmeticError(f"bracket exponents incompatible with a knot closure: {exc}") from None


def jones_polynomial(w: BraidWord) -> LaurentPoly:
    if closure_component_count(w) != 1:
        raise UnsupportedClosureError(
            f"closure of {w} has {closure_component_count(w)} components; only knots are supported"
        )
    return jones_from_bracket(kauffman_bracket(w), exponent_sum(w))


def is_palindromic(v: LaurentPoly) -> bool:
    return v == v.invert_variable()


def rudolph_genus(strands: int, quasipositive_factor_count: int) -> Fraction:
    """Four-genus of a quasipositive knot closure from ``1 - 2 g4 = n - k``."""
    g = Fraction(1 - strands + quasipositive_factor_count, 2)
    if g.denominator != 1 or g < 0:
        raise ParameterError(
            f"n={strands}, k={quasipositive_factor_count} cannot come from a quasipositive knot closure"
        )
    return g
