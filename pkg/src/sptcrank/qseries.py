"""Builders for the named q-series of the verification pipeline.

Covers the infinite-product prefixes (q^a; q^b)_oo, the alternating
theta-quotient sums X^(m), Y^(m), Z^(m), the generating functions of
M_C1(m, .) and M_C5(m, .), and the finite T-series decomposition used to
settle the n <= 20m window.

Every outer summation includes a term exactly when its minimal exponent is
at most the truncation order; all later exponents of that term are larger,
so the truncation is exact with no heuristic slack.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import (
    TruncatedSeries,
    divide_by_one_minus_qk,
    geometric_term,
    sum_series,
)

_SERIES_TAGS = frozenset(
    {
        "X",
        "Y",
        "Z",
        "InnerC1",
        "MC1",
        "MC5",
        "T",
        "T1",
        "T3",
        "T5",
        "T7",
        "T9",
        "Tprime",
        "R1",
        "R2",
    }
)


@dataclass(frozen=True)
class SeriesId:
    """Closed name set for the series families, plus the shift parameter m >= 0."""

    tag: str
    shift: int = 0

    def __post_init__(self) -> None:
        if self.tag not in _SERIES_TAGS:
            raise ValueError(f"unknown series tag {self.tag!r}")
        if self.shift < 0:
            raise ValueError("shift must be non-negative (callers pass |m|)")


def euler_product(offset: int, step: int, order: int) -> TruncatedSeries:
    """Truncated prefix of prod_{j>=0} (1 - q^(offset + j*step)).

    Factors whose exponent exceeds the order are omitted; they cannot
    affect any retained coefficient.
    """
    if offset < 1:
        raise ValueError("offset must be >= 1 (offset 0 makes the product vanish)")
    if step < 1:
        raise ValueError("step must be >= 1")
    out = [0] * (order + 1)
    out[0] = 1
    e = offset
    while e <= order:
        # multiply in place by (1 - q^e)
        for i in range(order, e - 1, -1):
            out[i] -= out[i - e]
        e += step
    return TruncatedSeries(order, tuple(out))


def _alternating_sum(order: int, exponent, modulus) -> TruncatedSeries:
    """sum_{n>=1} (-1)^n q^exponent(n) / (1 - q^modulus(n)), truncated.

    Terms enter while exponent(n) <= order.
    """
    acc = [0] * (order + 1)
    n = 1
    while True:
        a = exponent(n)
        if a > order:
            break
        b = modulus(n)
        sign = -1 if n % 2 else 1
        e = a
        while e <= order:
            acc[e] += sign
            e += b
        n += 1
    return TruncatedSeries(order, tuple(acc))


def y_series(m: int, order: int) -> TruncatedSeries:
    """Generating series of Y^(m): the difference of two alternating
    Lambert-type sums, with exponents n(n+1)+2mn over 1-q^(2n) and
    n(n+1)/2+mn over 1-q^n."""
    if m < 0:
        raise ValueError("m must be non-negative")
    first = _alternating_sum(order, lambda n: n * (n + 1) + 2 * m * n, lambda n: 2 * n)
    second = _alternating_sum(
        order, lambda n: n * (n + 1) // 2 + m * n, lambda n: n
    )
    return first - second


def z_series(m: int, order: int) -> TruncatedSeries:
    """Generating series of Z^(m) = -sum_{n>=1} (-1)^n q^(n(n+1)/2+mn)/(1-q^n)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return -_alternating_sum(order, lambda n: n * (n + 1) // 2 + m * n, lambda n: n)


def x_inner_series(m: int, order: int) -> TruncatedSeries:
    """The parenthesized difference inside the X^(m) definition (before 1/(1-q^2))."""
    if m < 0:
        raise ValueError("m must be non-negative")
    first = _alternating_sum(
        order, lambda n: n * (3 * n + 1) + 2 * m * n, lambda n: 2 * n
    )
    second = _alternating_sum(
        order, lambda n: n * (n + 1) // 2 + m * n, lambda n: n
    )
    return first - second


def x_series(m: int, order: int) -> TruncatedSeries:
    """Generating series of X^(m): 1/(1-q^2) times the inner difference."""
    return divide_by_one_minus_qk(x_inner_series(m, order), 2)


def _even_pochhammer_inverse_times(s: TruncatedSeries) -> TruncatedSeries:
    """Multiply by 1/(q^2; q^2)_oo by successive geometric divisions.

    Dividing by each factor (1 - q^(2j)) with 2j <= order is bit-identical
    to one Cauchy multiplication by invert_unit(euler_product(2, 2, order)).
    """
    out = s
    j = 2
    while j <= s.order:
        out = divide_by_one_minus_qk(out, j)
        j += 2
    return out


def mc1_series(m: int, order: int) -> TruncatedSeries:
    """Generating function of M_C1(m, .); symmetric in m, so |m| is used."""
    return _even_pochhammer_inverse_times(x_inner_series(abs(m), order))


def mc5_series(m: int, order: int) -> TruncatedSeries:
    """Generating function of M_C5(m, .); symmetric in m, so |m| is used."""
    return _even_pochhammer_inverse_times(y_series(abs(m), order))


# -- finite T-series decomposition for the n <= 20m window -------------------
#
# T(q) truncates both alternating sums of X^(m) to their first 9 and 19
# terms; for n <= 20m the discarded tails cannot reach q^n.  The components
# below regroup those 28 geometric terms by modulus; exponents are
# transcribed verbatim, and the regrouping identity T = T1+T3+T5+T7+T9+T'
# is asserted mechanically in the test suite and the verifier.


def _over_one_minus_q2(terms, order: int) -> TruncatedSeries:
    return divide_by_one_minus_qk(sum_series(terms, order), 2)


def t_series(m: int, order: int) -> TruncatedSeries:
    """The 9-term/19-term truncation of X^(m)'s defining double sum."""
    if m < 0:
        raise ValueError("m must be non-negative")
    acc = [0] * (order + 1)

    def fold(a: int, b: int, sign: int) -> None:
        e = a
        while e <= order:
            acc[e] += sign
            e += b

    for n in range(1, 10):
        fold(n * (3 * n + 1) + 2 * m * n, 2 * n, -1 if n % 2 else 1)
    for n in range(1, 20):
        fold(n * (n + 1) // 2 + m * n, n, 1 if n % 2 else -1)
    return divide_by_one_minus_qk(TruncatedSeries(order, tuple(acc)), 2)


def t1(m: int, order: int) -> TruncatedSeries:
    g = geometric_term
    terms = [
        g(1 + m, 1, order),
        -g(3 + 2 * m, 2, order),
        -g(4 + 2 * m, 2, order),
        -g(10 + 4 * m, 4, order),
        g(14 + 4 * m, 4, order),
        g(52 + 8 * m, 8, order),
        g(200 + 16 * m, 16, order),
        -g(136 + 16 * m, 16, order),
        -g(36 + 8 * m, 8, order),
    ]
    return _over_one_minus_q2(terms, order)


def t3(m: int, order: int) -> TruncatedSeries:
    g = geometric_term
    terms = [
        g(6 + 3 * m, 3, order),
        -g(21 + 6 * m, 6, order),
        -g(30 + 6 * m, 6, order),
        -g(78 + 12 * m, 12, order),
        g(114 + 12 * m, 12, order),
    ]
    return _over_one_minus_q2(terms, order)


def t5(m: int, order: int) -> TruncatedSeries:
    g = geometric_term
    terms = [
        g(15 + 5 * m, 5, order),
        -g(55 + 10 * m, 10, order),
        -g(80 + 10 * m, 10, order),
    ]
    return _over_one_minus_q2(terms, order)


def t7(m: int, order: int) -> TruncatedSeries:
    g = geometric_term
    terms = [
        g(28 + 7 * m, 7, order),
        -g(154 + 14 * m, 14, order),
        -g(105 + 14 * m, 14, order),
    ]
    return _over_one_minus_q2(terms, order)


def t9(m: int, order: int) -> TruncatedSeries:
    g = geometric_term
    terms = [
        g(45 + 9 * m, 9, order),
        -g(171 + 18 * m, 18, order),
        -g(252 + 18 * m, 18, order),
    ]
    return _over_one_minus_q2(terms, order)


def tprime(m: int, order: int) -> TruncatedSeries:
    terms = [
        geometric_term(n * (n + 1) // 2 + n * m, n, order)
        for n in (11, 13, 15, 17, 19)
    ]
    return _over_one_minus_q2(terms, order)


def r1(m: int, order: int) -> TruncatedSeries:
    return t7(m, order) + t9(m, order) + tprime(m, order)


def r2(m: int, order: int) -> TruncatedSeries:
    """R1 plus the leftover monomial groups from the T(q) rearrangement;
    nonnegative coefficient-wise for every m >= 0."""
    extra = [0] * (order + 1)

    def put(e: int) -> None:
        if 0 <= e <= order:
            extra[e] += 1

    put(70 + 10 * m)
    for k in range(1 + m, 1 + 2 * m + 1):
        put(k)
    skip3 = {2 + 2 * m, 4 + 2 * m, 6 + 2 * m}
    for k in range(2 + m, 6 + 2 * m + 1):
        if k not in skip3:
            put(3 * k)
    skip5 = {2 + 2 * m, 4 + 2 * m, 6 + 2 * m, 8 + 2 * m}
    for k in range(3 + m, 10 + 2 * m + 1):
        if k not in skip5:
            put(5 * k)
    extra_series = divide_by_one_minus_qk(TruncatedSeries(order, tuple(extra)), 2)
    return r1(m, order) + extra_series


_BUILDERS = {
    "X": x_series,
    "Y": y_series,
    "Z": z_series,
    "InnerC1": x_inner_series,
    "MC1": mc1_series,
    "MC5": mc5_series,
    "T": t_series,
    "T1": t1,
    "T3": t3,
    "T5": t5,
    "T7": t7,
    "T9": t9,
    "Tprime": tprime,
    "R1": r1,
    "R2": r2,
}


def build_series(sid: SeriesId, order: int) -> TruncatedSeries:
    """Dispatch a SeriesId to its builder."""
    return _BUILDERS[sid.tag](sid.shift, order)
