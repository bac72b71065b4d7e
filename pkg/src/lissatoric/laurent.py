"""Sparse Laurent polynomials with integer coefficients in one variable."""

from __future__ import annotations

import re
from typing import Iterator, Mapping

_TERM = re.compile(r"^(?:(\d+)\*?)?(?:([A-Za-z])(?:\^(-?\d+))?)?$")


class LaurentPoly:
    """Immutable map ``exponent -> coefficient`` with no zero coefficients stored.

    >>> t = LaurentPoly.monomial(1, var="t")
    >>> str((t - 1) * (t + 1))
    '-1 + t^2'
    """

    __slots__ = ("_coeffs", "var", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "t"):
        self._coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        self.var = var
        self._hash: int | None = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "t") -> LaurentPoly:
        return cls({exponent: coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "t") -> LaurentPoly:
        return cls({0: c}, var)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._coeffs.items()))

    def __getitem__(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_degree(self) -> int:
        return min(self._coeffs)

    def max_degree(self) -> int:
        return max(self._coeffs)

    def _coerce(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()}, self.var)

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._coeffs) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._coeffs.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPoly({e * k: c ** -k}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``var**k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()}, self.var)

    def invert_variable(self) -> LaurentPoly:
        """Substitute ``var -> 1/var``."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()}, self.var)

    def substitute_power(self, k: int, var: str | None = None) -> LaurentPoly:
        """Substitute ``var -> new_var**k``."""
        return LaurentPoly({e * k: c for e, c in self._coeffs.items()}, var or self.var)

    def divide_exponents(self, k: int, var: str | None = None) -> LaurentPoly:
        """Inverse of :meth:`substitute_power`; every exponent must be a multiple of ``k``."""
        bad = [e for e in self._coeffs if e % k]
        if bad:
            raise ValueError(f"exponents {bad} are not divisible by {k}")
        return LaurentPoly({e // k: c for e, c in self._coeffs.items()}, var or self.var)

    def evaluate(self, x: complex) -> complex:
        return sum(c * x**e for e, c in self._coeffs.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, var={self.var!r})"

    def __str__(self) -> str:
        """Terms in ascending exponent order, e.g. ``t^-2 - t^-1 + 1 - t + t^2``."""
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, var: str = "t") -> LaurentPoly:
        """Inverse of ``str``.  Accepts any term order and repeated exponents."""
        s = text.strip()
        if s == "0":
            return cls({}, var)
        tokens = s.replace("+ ", "+").replace("- ", "-").split()
        out: dict[int, int] = {}
        for tok in tokens:
            sign = 1
            if tok[0] in "+-":
                sign = -1 if tok[0] == "-" else 1
                tok = tok[1:]
            m = _TERM.match(tok)
            if not tok or m is None:
                raise ValueError(f"bad polynomial term {tok!r} in {text!r}")
            coeff_s, name, exp_s = m.groups()
            if name is None:
                if coeff_s is None:
                    raise ValueError(f"bad polynomial term {tok!r}")
                e = 0
            else:
                if name != var:
                    raise ValueError(f"unexpected variable {name!r}, expected {var!r}")
                e = int(exp_s) if exp_s is not None else 1
            c = int(coeff_s) if coeff_s is not None else 1
            out[e] = out.get(e, 0) + sign * c
        return cls(out, var)
