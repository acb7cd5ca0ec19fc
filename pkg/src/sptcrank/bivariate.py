"""Two-variable spt-crank generating functions S_X(z, q).

Each of the eight families (A1, A3, A5, A7, C1, C5, E2, E4) is expanded
from its single-sum product form

    sum_n  sign_n * q^(e(n)) * Num_n(q) / ((z q^n; q)_oo (z^-1 q^n; q)_oo),

where Num_n is a pure q-product.  The two denominator factors are expanded
with Euler's identity 1/(x; q)_oo = sum_i x^i / (q; q)_i, so the z^i
(resp. z^-j) component carries q^(i*n)/(q;q)_i; the q-exponent grows at
least linearly in each z-degree, making the truncation exact.

The result is stored q-major: for each n <= order, a Laurent polynomial
in z.  Fixed-m slices are the cross-oracle for the univariate M_C1/M_C5
generating functions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .series import TruncatedSeries
from .qseries import euler_product


class FamilyId(enum.Enum):
    A1 = "A1"
    A3 = "A3"
    A5 = "A5"
    A7 = "A7"
    C1 = "C1"
    C5 = "C5"
    E2 = "E2"
    E4 = "E4"


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated-in-q series whose q^n coefficient is a Laurent polynomial in z.

    qcoeffs[n] is a pair (min_degree, coeffs) with no leading or trailing
    zero padding; the zero polynomial is (0, ()).  Every nonzero z-degree d
    at q^n satisfies |d| <= n.
    """

    order: int
    qcoeffs: tuple

    def __post_init__(self) -> None:
        if len(self.qcoeffs) != self.order + 1:
            raise ValueError("qcoeffs must have order+1 entries")
        for n, (mindeg, cs) in enumerate(self.qcoeffs):
            if cs and (cs[0] == 0 or cs[-1] == 0):
                raise ValueError(f"zero padding in z-polynomial at q^{n}")
            if cs and max(abs(mindeg), abs(mindeg + len(cs) - 1)) > n:
                raise ValueError(f"z-degree exceeds {n} at q^{n}")

    def z_coefficient(self, n: int, d: int) -> int:
        mindeg, cs = self.qcoeffs[n]
        i = d - mindeg
        if 0 <= i < len(cs):
            return cs[i]
        return 0


def extract_m(s: LaurentSeries, m: int) -> TruncatedSeries:
    """The univariate q-series of z^m coefficients (zero beyond stored degrees)."""
    return TruncatedSeries(
        s.order, tuple(s.z_coefficient(n, m) for n in range(s.order + 1))
    )


# -- internal list arithmetic (coefficients of q^0..q^order) -----------------


def _mul_lists(a: list, b: list, order: int) -> list:
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if ai and i <= order:
            top = order - i
            for j, bj in enumerate(b[: top + 1]):
                if bj:
                    out[i + j] += ai * bj
    return out


def _divide_by_one_minus_qk(a: list, k: int) -> list:
    out = list(a)
    for i in range(k, len(out)):
        out[i] += out[i - k]
    return out


def _ep_list(offset: int, step: int, order: int) -> list:
    return list(euler_product(offset, step, order).coeffs)


def _family_terms(family: FamilyId, order: int):
    """Yield (n, sign, prefactor_exponent, numerator_list) for each outer term
    whose minimal exponent fits under the truncation order."""
    n = 1
    while True:
        if family in (FamilyId.A1, FamilyId.C1, FamilyId.E2):
            pref = n
        elif family in (FamilyId.A3, FamilyId.E4):
            pref = 2 * n
        elif family is FamilyId.A5:
            pref = n * n + n
        elif family is FamilyId.A7:
            pref = n * n
        else:  # C5
            pref = n * (n + 1) // 2
        if pref > order:
            break
        sign = (-1) ** n if family is FamilyId.E2 else 1
        if family in (FamilyId.A1, FamilyId.A3, FamilyId.A5, FamilyId.A7):
            num = _ep_list(2 * n + 1, 1, order)
        elif family in (FamilyId.C1, FamilyId.C5):
            num = _mul_lists(
                _ep_list(2 * n + 1, 2, order), _ep_list(n + 1, 1, order), order
            )
        else:  # E2, E4
            num = _ep_list(2 * n + 2, 2, order)
        shifted = [0] * pref + num[: order + 1 - pref]
        yield n, sign, pref, shifted
        n += 1


def spt_crank_bivariate(family: FamilyId, order: int) -> LaurentSeries:
    """Truncated bivariate expansion of the family's product form."""
    if order < 1:
        raise ValueError("order must be >= 1")
    N = order

    # inv_poch[i] = 1/(q;q)_i as a coefficient list
    inv_poch = [[1] + [0] * N]
    for i in range(1, N + 1):
        inv_poch.append(_divide_by_one_minus_qk(inv_poch[i - 1], i))

    pair_cache: dict = {}

    def pair_product(i: int, j: int) -> list:
        key = (i, j) if i <= j else (j, i)
        got = pair_cache.get(key)
        if got is None:
            got = _mul_lists(inv_poch[key[0]], inv_poch[key[1]], N)
            pair_cache[key] = got
        return got

    acc: dict = {}  # z-degree -> coefficient list over q

    for n, sign, pref, num in _family_terms(family, N):
        budget = N - pref
        # group denominator pairs (i, j) by z-degree d = i - j
        by_degree: dict = {}
        i = 0
        while i * n <= budget:
            j = 0
            while (i + j) * n <= budget:
                by_degree.setdefault(i - j, []).append((i, j))
                j += 1
            i += 1
        for d, pairs in by_degree.items():
            w = [0] * (budget + 1)
            for i, j in pairs:
                shift = (i + j) * n
                src = pair_product(i, j)
                for e in range(budget + 1 - shift):
                    c = src[e]
                    if c:
                        w[e + shift] += c
            conv = _mul_lists(w, num, N)
            tgt = acc.get(d)
            if tgt is None:
                acc[d] = [sign * c for c in conv] if sign != 1 else conv
            else:
                if sign == 1:
                    for e in range(N + 1):
                        tgt[e] += conv[e]
                else:
                    for e in range(N + 1):
                        tgt[e] += sign * conv[e]

    # transpose to q-major Laurent polynomials
    qcoeffs = []
    degrees = sorted(acc)
    for qn in range(N + 1):
        present = [(d, acc[d][qn]) for d in degrees if acc[d][qn]]
        if not present:
            qcoeffs.append((0, ()))
            continue
        lo = present[0][0]
        hi = present[-1][0]
        row = [0] * (hi - lo + 1)
        for d, c in present:
            row[d - lo] = c
        qcoeffs.append((lo, tuple(row)))
    return LaurentSeries(N, tuple(qcoeffs))
