"""
Closed-form braid words for Lissajous-toric knots K(N, q, p).

For ``q`` odd and ``gcd(N, q) = gcd(N, p) = gcd(q, p) = 1`` fix integers ``A, B``
with ``2NA + Bq = 1``.  Generator exponents and block exponents are

    ε(i) = (-1)^floor(p·B·i / N)          i = 1 .. N-1
    λ(k) = (-1)^floor(2·A·p·k / q)        k = 1 .. 2q-1, k != q

``α`` is the product of the even-index generators ``σ_i^ε(i)``, ``β`` that of the
odd-index ones, and the braid is

    Q·α·Q⁻¹·β,    Q = α^λ(1) β^λ(2) ... β^λ(q-1)

Floors are taken toward -∞ throughout; ``floor(-4/3) = -2`` matters for the signs.
Inside a block the letters commute, and ``α^{-1}`` is written with ascending
indices like ``α`` itself.

General triples reduce to this case: with ``d = gcd(q, p)`` the braid of
``(N, q, p)`` is the ``d``-th power of the braid of ``(N, q/d, p/d)``, and when
``q/d`` is even the two last entries are exchanged (the knots are isotopic).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from .braid import BraidWord, inverse, power, product
from .errors import ParameterError


@dataclass(frozen=True)
class BraidParams:
    """A validated triple together with its normalisation.

    ``q_tilde`` is always odd; when ``swapped`` is set it is ``p/d`` of the raw
    input and the construction describes the isotopic knot K(N, p, q).
    """

    N: int
    q: int
    p: int
    d: int
    q_tilde: int
    p_tilde: int
    swapped: bool

    @property
    def base(self) -> tuple[int, int, int]:
        return (self.N, self.q_tilde, self.p_tilde)

    @property
    def oriented(self) -> tuple[int, int, int]:
        """The raw triple with the last two entries in the order the construction uses."""
        return (self.N, self.p, self.q) if self.swapped else (self.N, self.q, self.p)

    def as_dict(self) -> dict[str, object]:
        return {
            "N": self.N,
            "q": self.q,
            "p": self.p,
            "d": self.d,
            "q_tilde": self.q_tilde,
            "p_tilde": self.p_tilde,
            "swapped": self.swapped,
        }


@dataclass(frozen=True)
class BezoutPair:
    A: int
    B: int


@dataclass(frozen=True)
class Block:
    kind: str  # "alpha" or "beta"
    exponent: int
    word: BraidWord


@dataclass(frozen=True)
class Classification:
    ribbon: bool
    periodic_d: int
    genus_bound: Fraction
    quasipositive_case: bool
    exact_genus: Fraction | None
    amphicheiral: bool
    trivial_family: str | None

    def flags(self) -> list[str]:
        out = []
        if self.ribbon:
            out.append("ribbon")
        if self.periodic_d > 1:
            out.append(f"periodic:{self.periodic_d}")
        if self.quasipositive_case:
            out.append("quasipositive")
        if self.amphicheiral:
            out.append("amphicheiral")
        if self.trivial_family:
            out.append(f"trivial:{self.trivial_family}")
        return out

    def as_dict(self) -> dict[str, object]:
        return {
            "ribbon": self.ribbon,
            "periodic_d": self.periodic_d,
            "genus_bound": str(self.genus_bound),
            "quasipositive_case": self.quasipositive_case,
            "exact_genus": None if self.exact_genus is None else str(self.exact_genus),
            "amphicheiral": self.amphicheiral,
            "trivial_family": self.trivial_family,
        }


def _parity_sign(x: Fraction) -> int:
    return -1 if floor(x) % 2 else 1


def check_triple(N: int, q: int, p: int) -> None:
    if N < 2:
        raise ParameterError(f"N must be at least 2, got {N}")
    if q < 1 or p < 1:
        raise ParameterError(f"q and p must be positive, got q={q}, p={p}")
    if gcd(N, q) != 1:
        raise ParameterError(f"gcd(N, q) = gcd({N}, {q}) = {gcd(N, q)} != 1")
    if gcd(N, p) != 1:
        raise ParameterError(f"gcd(N, p) = gcd({N}, {p}) = {gcd(N, p)} != 1")


def normalize_params(N: int, q: int, p: int) -> BraidParams:
    check_triple(N, q, p)
    d = gcd(q, p)
    qt, pt = q // d, p // d
    swapped = qt % 2 == 0
    if swapped:
        qt, pt = pt, qt
    return BraidParams(N, q, p, d, qt, pt, swapped)


def base_params(N: int, q: int, p: int) -> BraidParams:
    """Validate a triple that already satisfies the main construction's hypotheses."""
    params = normalize_params(N, q, p)
    if params.d != 1 or params.swapped:
        raise ParameterError(f"({N}, {q}, {p}) needs gcd(q, p) = 1 and q odd")
    return params


def bezout_coefficients(N: int, q: int) -> BezoutPair:
    """Solve ``2NA + Bq = 1`` with ``|B|`` minimal, ties going to positive ``B``."""
    if gcd(2 * N, q) != 1:
        raise ParameterError(f"gcd(2N, q) = gcd({2 * N}, {q}) != 1")
    m = 2 * N
    B = pow(q, -1, m)
    if B > N:
        B -= m
    A, rem = divmod(1 - B * q, m)
    assert rem == 0
    return BezoutPair(A, B)


def epsilon_sign(params: BraidParams, bezout: BezoutPair, i: int) -> int:
    N = params.N
    if not 1 <= i <= N - 1:
        raise ParameterError(f"generator index {i} outside [1, {N - 1}]")
    return _parity_sign(Fraction(params.p_tilde * bezout.B * i, N))


def lambda_sign(params: BraidParams, bezout: BezoutPair, k: int) -> int:
    q = params.q_tilde
    if not 1 <= k <= 2 * q or k % q == 0:
        raise ParameterError(f"block index {k} must lie in [1, {2 * q}] and avoid multiples of {q}")
    return _parity_sign(Fraction(2 * bezout.A * params.p_tilde * k, q))


def _block_word(N: int, letters: list[tuple[int, int]], exponent: int) -> BraidWord:
    return BraidWord(N, tuple((i, e * exponent) for i, e in letters))


def alpha_beta_blocks(params: BraidParams, bezout: BezoutPair) -> tuple[BraidWord, BraidWord]:
    N = params.N
    eps = {i: epsilon_sign(params, bezout, i) for i in range(1, N)}
    alpha = BraidWord(N, tuple((i, eps[i]) for i in range(2, N, 2)))
    beta = BraidWord(N, tuple((i, eps[i]) for i in range(1, N, 2)))
    return alpha, beta


def closed_form_blocks(params: BraidParams) -> list[Block]:
    """The ``2q`` blocks of the base braid, one per crossing value."""
    if params.d != 1:
        raise ParameterError(f"base construction needs gcd(q, p) = 1, got d = {params.d}")
    N, q = params.N, params.q_tilde
    bez = bezout_coefficients(N, q)
    alpha, beta = alpha_beta_blocks(params, bez)
    blocks = []
    for k in range(1, 2 * q + 1):
        kind, base = ("alpha", alpha) if k % 2 else ("beta", beta)
        exponent = 1 if k % q == 0 else lambda_sign(params, bez, k)
        blocks.append(Block(kind, exponent, _block_word(N, list(base.letters), exponent)))
    return blocks


def closed_form_braid(params: BraidParams) -> BraidWord:
    return product([b.word for b in closed_form_blocks(params)], params.N)


def commutator_form(params: BraidParams) -> tuple[BraidWord, BraidWord, BraidWord]:
    """``(Q, α, β)`` such that the base braid is ``Q α Q⁻¹ β``.

    The identity holds in the braid group; ``inverse(Q)`` lists each block's
    commuting letters in descending order, so it is not letter-for-letter.
    """
    blocks = closed_form_blocks(params)
    q = params.q_tilde
    Q = product([b.word for b in blocks[: q - 1]], params.N)
    alpha = blocks[q - 1].word
    beta = blocks[-1].word
    return Q, alpha, beta


def base_braid(N: int, q: int, p: int) -> BraidWord:
    """Base braid for a triple with ``q`` odd and ``gcd(q, p) = 1``."""
    return closed_form_braid(base_params(N, q, p))


def lissajous_braid(N: int, q: int, p: int) -> BraidWord:
    params = normalize_params(N, q, p)
    base = normalize_params(N, params.q_tilde, params.p_tilde)
    return power(closed_form_braid(base), params.d)


def lissajous_blocks(N: int, q: int, p: int) -> list[Block]:
    params = normalize_params(N, q, p)
    return closed_form_blocks(normalize_params(N, params.q_tilde, params.p_tilde)) * params.d


def trivial_family_braid(N: int, q: int) -> BraidWord:
    """``A (BA)^m (B⁻¹A⁻¹)^m B⁻¹`` with ``m = (q-1)/2``.

    ``A`` (resp. ``B``) is the product of the positive even (resp. odd) generators.
    This closes to the same knot as K(N, q, q+N).
    """
    if q % 2 == 0:
        raise ParameterError(f"q must be odd, got {q}")
    check_triple(N, q, q + N)
    A = BraidWord(N, tuple((i, 1) for i in range(2, N, 2)))
    B = BraidWord(N, tuple((i, 1) for i in range(1, N, 2)))
    m = (q - 1) // 2
    return A * power(B * A, m) * power(inverse(B) * inverse(A), m) * inverse(B)


def _trivial_tag(N: int, q: int, p: int) -> str | None:
    literal = {1: "p=1", q + N: "q+N", 2 * N * q + 1: "2Nq+1", 2 * N * q - 1: "2Nq-1"}
    if p in literal:
        return literal[p]
    # K(N,q,k) ~ K(N,q,2qN+k) and K(N,q,2qN-k) is its mirror
    r = p % (2 * N * q)
    r = min(r, 2 * N * q - r)
    if r == 1:
        return "p=1"
    if r == q + N:
        return "q+N"
    return None


def classify(N: int, q: int, p: int) -> Classification:
    params = normalize_params(N, q, p)
    d, qt, pt = params.d, params.q_tilde, params.p_tilde
    bound = Fraction((N - 1) * (d - 1), 2)
    qp = (pt + qt) % (2 * N) == 0 or (pt - qt) % (2 * N) == 0
    tag = _trivial_tag(N, q, p) or _trivial_tag(N, p, q)
    return Classification(
        ribbon=d == 1,
        periodic_d=d,
        genus_bound=bound,
        quasipositive_case=qp,
        exact_genus=bound if qp else None,
        amphicheiral=(qt + pt) % 2 == 1,
        trivial_family=tag,
    )
