from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

import pytest

from lissatoric.braid import BraidWord, mirror
from lissatoric.errors import CriticalPhaseError, ParameterError
from lissatoric.invariants import jones_polynomial
from lissatoric.oracle import (
    PhaseSpec,
    Verdict,
    compare_up_to_mirror,
    critical_spacing,
    crossing_residue,
    crossing_sign,
    crossing_values,
    default_phase,
    detect_braid_float,
    dump_events,
    enumerate_braid,
    enumerate_events,
    events_by_value,
    generator_index,
    is_critical,
    oriented_enumerate_braid,
    phase_sweep,
    resolve_ms,
)
from lissatoric.symbolic import base_braid, lissajous_braid, trivial_family_braid

COPRIME = [
    (N, q, p)
    for N in range(2, 7)
    for q in range(1, 12)
    for p in range(1, 12)
    if gcd(N, q) == 1 and gcd(N, p) == 1
]


@pytest.mark.parametrize("N, q", [(2, 1), (3, 5), (4, 7), (5, 6), (6, 11)])
def test_crossing_values_count_and_spacing(N, q):
    spec = default_phase(N, q, 1)
    values = crossing_values(N, q, spec)
    assert len(values) == 2 * q
    assert all(b - a == Fraction(1, 2 * q) for a, b in zip(values, values[1:]))
    assert spec.eta < values[0] and values[-1] <= spec.eta + 1


def test_crossing_values_small_cases():
    values = crossing_values(3, 1, default_phase(3, 1, 2))
    assert len(values) == 2 and values[1] - values[0] == Fraction(1, 2)
    values = crossing_values(3, 5, default_phase(3, 5, 7))
    assert all((t - Fraction(3, 20)) % Fraction(1, 10) == 0 for t in values)
    assert crossing_residue(3, 5) == Fraction(1, 20)


def test_eta_on_a_crossing_value_rejected():
    with pytest.raises(ParameterError):
        crossing_values(3, 5, PhaseSpec(Fraction(0), Fraction(3, 20)))


@pytest.mark.parametrize("N, q", [(3, 5), (5, 3), (5, 7), (6, 5), (7, 4)])
def test_resolve_ms_structure(N, q):
    for t in crossing_values(N, q, default_phase(N, q, 1)):
        pairs = resolve_ms(t, N, q)
        for m, s in pairs:
            assert t == Fraction(-s, 2) + Fraction(N * (2 * m + 1), 4 * q)
        if len(pairs) == 1:
            assert pairs[0][1] in (N - 2, N - 1, N)
        else:
            (m1, s1), (m2, s2) = pairs
            assert (m2, s2) == (m1 + q, s1 + N)
        if N == 3:
            assert len(pairs) == 1


def test_two_pairs_for_n5():
    q = 3
    found = [resolve_ms(t, 5, q) for t in crossing_values(5, q, default_phase(5, q, 1))]
    two = [pairs for pairs in found if pairs[0][1] == 1]
    assert two and all(len(p) == 2 and p[1] == (p[0][0] + q, 6) for p in two)


def test_resolve_ms_rejects_non_crossing_value():
    with pytest.raises(ParameterError):
        resolve_ms(Fraction(0), 3, 5)


@pytest.mark.parametrize("N, q, m, d, i", [(3, 5, 0, 1, 1), (3, 5, 1, 1, 2), (5, 3, 2, 2, 4), (5, 3, 3, 2, 1)])
def test_generator_index(N, q, m, d, i):
    assert generator_index(N, q, m, d) == i


@pytest.mark.parametrize("triple", COPRIME[::7])
def test_event_structure(triple):
    N, q, p = triple
    events = enumerate_events(*triple)
    assert len(events) == q * (N - 1)
    for group in events_by_value(events):
        assert len({ev.gen_index % 2 for ev in group}) == 1
    for ev in events:
        k, l = ev.strands
        assert 0 <= l < k < N


def test_frozen_event_dump():
    # computed by this oracle and checked against the reference K(3,4,5) word
    assert dump_events(enumerate_events(3, 5, 4)).splitlines()[:3] == [
        "t=3/20 m=5 s=3 d=1 i=2 sign=-1",
        "t=1/4 m=2 s=1 d=1 i=1 sign=+1",
        "t=7/20 m=4 s=2 d=2 i=2 sign=+1",
    ]


def test_enumeration_reproduces_reference_word():
    verdict = compare_up_to_mirror(base_braid(3, 5, 4), enumerate_braid(3, 5, 4))
    assert verdict is Verdict.MIRROR_EQUAL


def test_raw_periodic_enumeration():
    # the raw curve has q(N-1) crossings; the exchanged orientation has p(N-1)
    raw = enumerate_braid(3, 4, 10)
    oriented = oriented_enumerate_braid(3, 4, 10)
    assert (len(raw), len(oriented)) == (8, 20)
    assert jones_polynomial(raw) == jones_polynomial(lissajous_braid(3, 4, 10))
    assert compare_up_to_mirror(oriented, lissajous_braid(3, 4, 10)).letter_exact


@pytest.mark.parametrize("triple", COPRIME[::5])
def test_exponent_sum_matches_symbolic_up_to_sign(triple):
    a = sum(e for _, e in lissajous_braid(*triple).letters)
    b = sum(e for _, e in oriented_enumerate_braid(*triple).letters)
    assert abs(a) == abs(b)


def test_float_agrees_with_exact():
    assert detect_braid_float(3, 5, 4) == enumerate_braid(3, 5, 4)


def test_float_crossing_counts_on_random_triples():
    rng = random.Random(7)
    for N, q, p in rng.sample(COPRIME, 20):
        assert len(detect_braid_float(N, q, p)) == q * (N - 1)


def test_n2_uses_only_sigma1():
    for q in (1, 3, 5, 7):
        for p in (1, 3, 5, 9):
            assert {i for i, _ in enumerate_braid(2, q, p).letters} <= {1}


@pytest.mark.parametrize("triple", [(3, 5, 7), (4, 5, 13), (5, 3, 11), (2, 5, 3)])
def test_float_signs_match_exact_off_default_phase(triple):
    for spec in phase_sweep(*triple, 4):
        assert detect_braid_float(*triple, phi=float(spec.phi), eta=float(spec.eta)) == enumerate_braid(*triple, spec)


@pytest.mark.parametrize("triple", COPRIME[::4])
def test_default_phase_is_not_critical(triple):
    spec = default_phase(*triple)
    assert not is_critical(*triple, spec.phi)
    N, q, _ = triple
    values = crossing_values(N, q, spec)
    gap = min(min(abs(t - spec.eta), abs(t - spec.eta - 1)) for t in values)
    assert gap == Fraction(1, 4 * q)


def test_critical_phase_raises():
    N, q, p = 3, 5, 7
    phi = -Fraction(N, 4 * q)
    assert is_critical(N, q, p, phi)
    with pytest.raises(CriticalPhaseError):
        crossing_sign(N, q, p, phi, 0, 1)
    with pytest.raises(CriticalPhaseError):
        enumerate_braid(N, q, p, PhaseSpec(phi, default_phase(N, q, p).eta))
    with pytest.raises(CriticalPhaseError):
        detect_braid_float(N, q, p, phi=float(phi))


def test_critical_spacing():
    assert critical_spacing(3, 5, 7) == Fraction(3, 70)
    assert critical_spacing(3, 4, 10) == Fraction(3 * 2, 80)


@pytest.mark.parametrize("triple", [(3, 5, 7), (5, 3, 11), (4, 7, 9)])
def test_phase_perturbation_changes_at_most_mirror(triple):
    spec = default_phase(*triple)
    moved = PhaseSpec(spec.phi + critical_spacing(*triple), spec.eta)
    verdict = compare_up_to_mirror(enumerate_braid(*triple), enumerate_braid(*triple, moved))
    assert verdict is not Verdict.DISTINCT


def test_compare_up_to_mirror():
    w = lissajous_braid(3, 5, 7)
    assert compare_up_to_mirror(w, w) is Verdict.EQUAL
    assert compare_up_to_mirror(w, mirror(w)) is Verdict.MIRROR_EQUAL
    assert compare_up_to_mirror(lissajous_braid(3, 5, 8), trivial_family_braid(3, 5)) in (
        Verdict.EQUAL,
        Verdict.MIRROR_EQUAL,
        Verdict.JONES_EQUAL,
    )
    trefoil = BraidWord.parse("s1 s1 s1 s2")
    other = BraidWord.parse("s1 s2")
    assert compare_up_to_mirror(trefoil, other) is Verdict.DISTINCT
