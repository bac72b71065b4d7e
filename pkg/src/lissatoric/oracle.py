"""
Braid words read off the curve itself, independently of the closed-form signs.

Strand ``k`` (``k = 0 .. N-1``) of the braid is the graph over ``[η, 1+η]`` of

    ψ_k(t) = ( sin(2πq(t+k)/N), cos(2πp(t+k+φ)/N) ) = (y, z)

and the braid is read from the projection to the ``(t, y)`` plane.  Positions are
ranked by decreasing ``y``; a crossing between ranks ``i-1`` and ``i`` is ``σ_i^±``
and its sign is

    sign( (z_k - z_l) · (y_l' - y_k') )

Two constructions are provided:

* :func:`enumerate_braid` works in exact rational arithmetic.  Every crossing
  value has the form ``t = -s/2 + N(2m+1)/(4q)`` with ``s = k+l``; the crossing
  points above it are indexed by ``d = k-l``, their generator index comes from the
  division ``q·d = 2N·n + w`` and their sign from floor parities.
* :func:`detect_braid_float` samples the strands, finds the sign changes of
  ``y_k - y_l`` and refines each root numerically.  It uses none of the integer
  formulas.

Expanding the sign with sum-to-product identities gives

    Σ = -(-1)^m · σ(pm/q + p/(2q) + 2pφ/N) · σ(qd/N) · σ(pd/N),   σ(r) = (-1)^floor(r)

with a leading minus sign; the float detector confirms it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from .braid import BraidWord, mirror
from .errors import CriticalPhaseError, ParameterError, StrandMismatchError
from .symbolic import bezout_coefficients, check_triple, normalize_params

# golden-ratio offset keeps sample points off rational crossing values
_GRID_OFFSET = (5**0.5 - 1) / 2
ROOT_TOL = 1e-12
SAME_T_TOL = 1e-9
TANGENCY_TOL = 1e-9


@dataclass(frozen=True, order=True)
class CrossingEvent:
    """One crossing point.

    ``(m, s, d)`` are the actual data of the crossing strands ``k = (s+d)/2`` and
    ``l = (s-d)/2``; ``t = -s/2 + N(2m+1)/(4q)``.
    """

    t: Fraction
    gen_index: int
    sign: int
    m: int
    s: int
    d: int

    @property
    def strands(self) -> tuple[int, int]:
        return ((self.s + self.d) // 2, (self.s - self.d) // 2)

    def dump(self) -> str:
        return (
            f"t={self.t.numerator}/{self.t.denominator} m={self.m} s={self.s} d={self.d} "
            f"i={self.gen_index} sign={self.sign:+d}"
        )


@dataclass(frozen=True)
class PhaseSpec:
    phi: Fraction
    eta: Fraction


class Verdict(enum.Enum):
    EQUAL = "Equal"
    MIRROR_EQUAL = "MirrorEqual"
    JONES_EQUAL = "JonesEqual"
    JONES_MIRROR_EQUAL = "JonesMirrorEqual"
    DISTINCT = "Distinct"

    def __str__(self) -> str:
        return self.value

    @property
    def letter_exact(self) -> bool:
        return self in (Verdict.EQUAL, Verdict.MIRROR_EQUAL)


def _sigma(r: Fraction) -> int:
    return -1 if floor(r) % 2 else 1


def _step(q: int) -> Fraction:
    return Fraction(1, 2 * q)


def crossing_residue(N: int, q: int) -> Fraction:
    """All crossing values are congruent to this modulo ``1/(2q)``."""
    return Fraction(N, 4 * q) % _step(q)


def crossing_values(N: int, q: int, spec: PhaseSpec) -> list[Fraction]:
    """The ``2q`` members of the crossing-value class in ``(η, 1+η]``.

    For ``N = 2`` every other value carries no crossing; see :func:`resolve_ms`.
    """
    if q < 1 or gcd(N, q) != 1:
        raise ParameterError(f"need q >= 1 and gcd(N, q) = 1, got N={N}, q={q}")
    h = _step(q)
    r0 = crossing_residue(N, q)
    if (spec.eta - r0) % h == 0:
        raise ParameterError(f"eta={spec.eta} coincides with a crossing value")
    first = r0 + (floor((spec.eta - r0) / h) + 1) * h
    return [first + j * h for j in range(2 * q)]


def resolve_ms(t: Fraction, N: int, q: int) -> list[tuple[int, int]]:
    """All ``(m, s)`` with ``1 <= s <= 2N-3`` and ``t = -s/2 + N(2m+1)/(4q)``, by increasing ``s``.

    Returns one or two pairs; an empty list only for ``N = 2``, where half of the
    class carries no crossing.
    """
    if (t - crossing_residue(N, q)) % _step(q) != 0:
        raise ParameterError(f"t={t} is not a crossing value for N={N}, q={q}")
    pairs = []
    for s in range(1, 2 * N - 2):
        two_m_plus_one = (t + Fraction(s, 2)) * 4 * q / N
        if two_m_plus_one.denominator == 1 and two_m_plus_one.numerator % 2 == 1:
            pairs.append(((two_m_plus_one.numerator - 1) // 2, s))
    if len(pairs) > 2 or (not pairs and N != 2):
        raise AssertionError(f"unexpected (m, s) pairs {pairs} at t={t}")
    return pairs


def generator_index(N: int, q: int, m: int, d: int) -> int:
    n, w = divmod(q * d, 2 * N)
    if w >= N:
        w -= 2 * N
    return abs(w) if m % 2 == 0 else N - abs(w)


def crossing_sign(N: int, q: int, p: int, phi: Fraction, m: int, d: int) -> int:
    arg = Fraction(p * m, q) + Fraction(p, 2 * q) + 2 * p * phi / N
    if arg.denominator == 1:
        raise CriticalPhaseError(f"phase {phi} is critical for (N={N}, q={q}, p={p}) at m={m}")
    return -(-1) ** (m % 2) * _sigma(arg) * _sigma(Fraction(q * d, N)) * _sigma(Fraction(p * d, N))


def crossings_at_value(t: Fraction, N: int, q: int, p: int, spec: PhaseSpec) -> list[CrossingEvent]:
    """Crossing points above one crossing value, sorted by generator index."""
    pairs = resolve_ms(t, N, q)
    if not pairs:
        return []
    m, s = pairs[0]
    events = []
    for d in range(1, N):
        if (d - s) % 2:
            continue
        i = generator_index(N, q, m, d)
        sign = crossing_sign(N, q, p, spec.phi, m, d)
        if d <= s:
            events.append(CrossingEvent(t, i, sign, m, s, d))
        else:
            # second (m, s) pair: the strands have k + l = s + N and k - l = N - d
            events.append(CrossingEvent(t, i, sign, m + q, s + N, N - d))
    events.sort(key=lambda ev: ev.gen_index)
    return events


def enumerate_events(N: int, q: int, p: int, spec: PhaseSpec | None = None) -> list[CrossingEvent]:
    check_triple(N, q, p)
    spec = spec or default_phase(N, q, p)
    events = []
    for t in crossing_values(N, q, spec):
        events.extend(crossings_at_value(t, N, q, p, spec))
    return events


def events_by_value(events: Sequence[CrossingEvent]) -> list[list[CrossingEvent]]:
    groups: list[list[CrossingEvent]] = []
    for ev in events:
        if groups and groups[-1][0].t == ev.t:
            groups[-1].append(ev)
        else:
            groups.append([ev])
    return groups


def enumerate_braid(N: int, q: int, p: int, spec: PhaseSpec | None = None) -> BraidWord:
    """Exact braid word of the curve with parameters ``(N, q, p)`` as given (no swap)."""
    events = enumerate_events(N, q, p, spec)
    return BraidWord(N, tuple((ev.gen_index, ev.sign) for ev in events))


def dump_events(events: Sequence[CrossingEvent]) -> str:
    return "\n".join(ev.dump() for ev in sorted(events, key=lambda ev: (ev.t, ev.gen_index)))


def _first_block_is_even(N: int, q: int, eta: Fraction) -> bool:
    t1 = crossing_values(N, q, PhaseSpec(Fraction(0), eta))[0]
    pairs = resolve_ms(t1, N, q)
    if not pairs:
        return True  # N = 2: the empty first value plays the part of α
    m, s = pairs[0]
    # generator parity above t is that of s, shifted by N when m is odd
    return (s + (N if m % 2 else 0)) % 2 == 0


def _coprime_default(N: int, q: int, p: int) -> PhaseSpec:
    """Default phase for ``q`` odd and ``gcd(q, p) = 1``."""
    h = _step(q)
    eta = (crossing_residue(N, q) + h / 2) % h
    if not _first_block_is_even(N, q, eta):
        eta += h
    values = crossing_values(N, q, PhaseSpec(Fraction(0), eta))
    for k, t in enumerate(values, start=1):
        pairs = resolve_ms(t, N, q)
        if pairs:
            m = pairs[0][0]
            break
    A = bezout_coefficients(N, q).A
    # critical phase making p·m(k)/q - 2Apk/q + p/(2q) + 2p·φ0/N vanish
    phi0 = Fraction(N, 2 * q) * (2 * A * k - m - Fraction(1, 2))
    return PhaseSpec(phi0 + Fraction(N, 8 * p * q), eta)


def _generic_default(N: int, q: int, p: int) -> PhaseSpec:
    """Default phase for ``gcd(q, p) = 1`` and ``q`` even (no Bézout pair exists)."""
    h = _step(q)
    eta = (crossing_residue(N, q) + h / 2) % h
    # critical phases are -N/(4q) + multiples of N/(2pq)
    return PhaseSpec(-Fraction(N, 4 * q) + Fraction(N, 8 * p * q), eta)


def default_phase(N: int, q: int, p: int) -> PhaseSpec:
    """A non-critical phase and an interval offset for the triple as given.

    For coprime ``q`` odd the phase sits a quarter of the critical spacing
    ``N/(2pq)`` above the critical phase attached to the first crossing value,
    and ``η`` is chosen so that the first crossing value carries even generators.
    For ``d = gcd(q, p) > 1`` both are the base values divided by ``d``, so the
    braid is exactly the ``d``-th power of the base braid.
    """
    check_triple(N, q, p)
    d = gcd(q, p)
    qb, pb = q // d, p // d
    base = _coprime_default(N, qb, pb) if qb % 2 else _generic_default(N, qb, pb)
    return PhaseSpec(base.phi / d, base.eta / d)


def critical_spacing(N: int, q: int, p: int) -> Fraction:
    return Fraction(N * gcd(q, p), 2 * p * q)


def is_critical(N: int, q: int, p: int, phi: Fraction) -> bool:
    # critical iff p·m/q + p/(2q) + 2pφ/N is an integer for some m
    offset = (phi + Fraction(N, 4 * q)) / critical_spacing(N, q, p)
    return offset.denominator == 1


def phase_sweep(N: int, q: int, p: int, count: int) -> list[PhaseSpec]:
    """``count`` phases, one per gap between consecutive critical phases."""
    base = default_phase(N, q, p)
    gap = critical_spacing(N, q, p)
    return [PhaseSpec(base.phi + j * gap, base.eta) for j in range(count)]


def oriented_enumerate_braid(N: int, q: int, p: int, spec: PhaseSpec | None = None) -> BraidWord:
    """Exact enumeration in the orientation the closed-form construction uses."""
    _, qo, po = normalize_params(N, q, p).oriented
    return enumerate_braid(N, qo, po, spec)


def _strand_values(N: int, q: int, p: int, phi: float, t: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    k = np.arange(N)[:, None]
    a = 2 * np.pi * q * (t + k) / N
    y = np.sin(a)
    dy = 2 * np.pi * q / N * np.cos(a)
    z = np.cos(2 * np.pi * p * (t + k + phi) / N)
    return y, dy, z


def detect_braid_float(
    N: int,
    q: int,
    p: int,
    phi: float | None = None,
    samples: int | None = None,
    eta: float | None = None,
) -> BraidWord:
    """Braid word found by root-finding on the sampled strands (floating point)."""
    check_triple(N, q, p)
    if phi is None or eta is None:
        spec = default_phase(N, q, p)
        phi = float(spec.phi) if phi is None else phi
        eta = float(spec.eta) if eta is None else eta
    samples = samples or 16 * q * N
    grid = np.concatenate(([eta], eta + (np.arange(samples) + _GRID_OFFSET) / samples, [eta + 1.0]))
    y, _, _ = _strand_values(N, q, p, phi, grid)

    def ydiff(t: float, k: int, l: int) -> float:
        yy, _, _ = _strand_values(N, q, p, phi, np.array([t]))
        return float(yy[k, 0] - yy[l, 0])

    roots = []
    for k in range(N):
        for l in range(k + 1, N):
            diff = y[k] - y[l]
            idx = np.nonzero(diff[:-1] * diff[1:] < 0)[0]
            for j in idx:
                tc = brentq(ydiff, grid[j], grid[j + 1], args=(k, l), xtol=ROOT_TOL, rtol=4 * np.finfo(float).eps)
                _, dy, z = _strand_values(N, q, p, phi, np.array([tc]))
                dz = z[k, 0] - z[l, 0]
                if abs(dz) < TANGENCY_TOL:
                    raise CriticalPhaseError(f"strands {k} and {l} nearly meet at t={tc:.12f}; phase {phi} is near-critical")
                sign = 1 if dz * (dy[l, 0] - dy[k, 0]) > 0 else -1
                roots.append((tc, k, l, sign))
    roots.sort()

    order = sorted(range(N), key=lambda k: -y[k, 0])
    letters = []
    j = 0
    while j < len(roots):
        group = [roots[j]]
        j += 1
        while j < len(roots) and roots[j][0] - group[0][0] < SAME_T_TOL:
            group.append(roots[j])
            j += 1
        found = []
        for _, k, l, sign in group:
            a, b = order.index(k), order.index(l)
            if abs(a - b) != 1:
                raise ArithmeticError(f"strands {k}, {l} are not adjacent at their crossing; increase samples")
            found.append((min(a, b) + 1, sign))
        for i, _ in found:
            order[i - 1], order[i] = order[i], order[i - 1]
        letters.extend(sorted(found))
    return BraidWord(N, tuple(letters))


def compare_up_to_mirror(a: BraidWord, b: BraidWord) -> Verdict:
    if a.strands != b.strands:
        raise StrandMismatchError(f"{a.strands} vs {b.strands} strands")
    if a == b:
        return Verdict.EQUAL
    if a == mirror(b):
        return Verdict.MIRROR_EQUAL
    from .invariants import jones_polynomial

    va, vb = jones_polynomial(a), jones_polynomial(b)
    if va == vb:
        return Verdict.JONES_EQUAL
    if va == vb.invert_variable():
        return Verdict.JONES_MIRROR_EQUAL
    return Verdict.DISTINCT
