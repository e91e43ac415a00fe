"""Topological zeta functions of matroids and their Mobius inversions.

Every quantity is computed by more than one independent algorithm (flag sums,
proper-flat recurrences, Mobius sums, closed forms for uniform matroids) so
the routes can be checked against each other exactly.

Internally the big sums are accumulated as integer-coefficient polynomials
over factored linear denominators, grouped by denominator profile, with a
single canonicalization at the end; public results are always canonical
RationalFunction values.  Memo tables live inside one computation and are
never shared across matroids.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    InexactDivisionError,
    Polynomial,
    RationalFunction,
    TaylorPrefix,
    _iadd,
    _imul,
    _imul_linear,
    _itrim,
)
from .combinat import generalized_binomial, multichoose
from .lattice import (
    DEFAULT_FLAG_CAP,
    FlagCapExceeded,
    LatticeOfFlats,
    LoopsError,
    _minor_chi_ints,
    lattice_of,
)
from .matroid import Matroid


@dataclass(frozen=True)
class ZetaResult:
    zeta: RationalFunction
    algorithm: str


@dataclass(frozen=True)
class UpsilonResult:
    upsilon: RationalFunction
    algorithm: str


ZETA_ALGORITHMS = ("flags", "recurrence", "auto")
UPSILON_ALGORITHMS = ("mobius", "recurrence", "flags", "auto")


# ---------------------------------------------------------------------------
# Factored accumulation: value = num(s) / (scale * prod (a s + b)^mult)

_Fct = tuple  # (num: tuple[int, ...], scale: int, factors: tuple[tuple[int, int], ...])

_F_ZERO: _Fct = ((), 1, ())
_F_ONE: _Fct = ((1,), 1, ())


def _norm_factor(a: int, b: int) -> tuple[int, tuple[int, int]]:
    """Split a*s + b (a >= 1) into integer content and a primitive pair."""
    g = math.gcd(a, b)
    return g, (a // g, b // g)


class _Acc:
    """Sum of terms num/(scale * prod factors), grouped by factor profile."""

    __slots__ = ("groups",)

    def __init__(self) -> None:
        self.groups: dict[tuple, tuple[list[int], int]] = {}

    def add(self, num: Sequence[int], scale: int, key: tuple) -> None:
        cur = self.groups.get(key)
        if cur is None:
            self.groups[key] = (_itrim(list(num)), scale)
            return
        cnum, cscale = cur
        if cscale == scale:
            self.groups[key] = (_iadd(cnum, num), scale)
        else:
            g = math.gcd(cscale, scale)
            mc, mn = scale // g, cscale // g
            merged = _iadd([c * mc for c in cnum], [c * mn for c in num])
            self.groups[key] = (merged, cscale * mc)

    def total(self) -> _Fct:
        live = {k: v for k, v in self.groups.items() if v[0]}
        if not live:
            return _F_ZERO
        profile: dict[tuple[int, int], int] = {}
        scale_lcm = 1
        for key, (_, scale) in live.items():
            for pair, mult in Counter(key).items():
                if profile.get(pair, 0) < mult:
                    profile[pair] = mult
            scale_lcm = math.lcm(scale_lcm, scale)
        num_total: list[int] = []
        for key in sorted(live):
            gnum, gscale = live[key]
            cof = [scale_lcm // gscale]
            have = Counter(key)
            for pair in sorted(profile):
                a, b = pair
                for _ in range(profile[pair] - have.get(pair, 0)):
                    cof = _imul_linear(cof, a, b)
            num_total = _iadd(num_total, _imul(gnum, cof))
        factors = tuple(
            sorted(pair for pair, mult in profile.items() for _ in range(mult))
        )
        return _reduce(num_total, scale_lcm, factors)


def _reduce(num: Sequence[int], scale: int, factors: tuple) -> _Fct:
    """Strip integer content and linear denominator factors dividing num."""
    num = _itrim(list(num))
    if not num:
        return _F_ZERO
    g = math.gcd(scale, *num)
    if g > 1:
        num = [c // g for c in num]
        scale //= g
    kept: list[tuple[int, int]] = []
    for pair, mult in sorted(Counter(factors).items()):
        a, b = pair
        while mult > 0 and len(num) > 1:
            quo, extra, rem = _div_linear(num, a, b)
            if rem:
                break
            num = quo
            scale *= extra
            mult -= 1
        kept.extend([pair] * mult)
    g = math.gcd(scale, *num)
    if g > 1:
        num = [c // g for c in num]
        scale //= g
    return (tuple(num), scale, tuple(kept))


def _div_linear(num: Sequence[int], a: int, b: int) -> tuple[list[int], int, Fraction]:
    """Divide num by (a s + b): (integer quotient, its clearing factor, remainder)."""
    quo: list[Fraction] = [Fraction(0)] * (len(num) - 1)
    carry = Fraction(0)
    for i in range(len(num) - 1, 0, -1):
        q = (num[i] + carry) / a
        quo[i - 1] = q
        carry = -b * q
    rem = num[0] + carry
    if rem:
        return [], 1, rem
    lcm = math.lcm(*(q.denominator for q in quo)) if quo else 1
    return [int(q * lcm) for q in quo], lcm, Fraction(0)


def _factored_to_rf(f: _Fct) -> RationalFunction:
    num, scale, factors = f
    den: list[int] = [scale]
    for a, b in factors:
        den = _imul_linear(den, a, b)
    return RationalFunction(Polynomial(num), Polynomial(den))


# ---------------------------------------------------------------------------
# Zeta: flag sum


def _chi_div_eval(coeffs: Sequence[int], k: int) -> int:
    """Divide by (q-1)^k with zero-remainder assertions, then evaluate at 1."""
    cur = list(coeffs)
    for _ in range(k):
        d = len(cur) - 1
        if d < 0:
            raise InexactDivisionError("flag product has lower degree than (q-1)^len")
        out = [0] * d
        acc = 0
        for i in range(d, 0, -1):
            acc += cur[i]
            out[i - 1] = acc
        rem = cur[0] + (out[0] if d else 0)
        if rem != 0:
            raise InexactDivisionError(
                "flag product is not divisible by (q-1)^len; "
                "the flag convention is violated"
            )
        cur = out
    return sum(cur)


def zeta_by_flags(m: Matroid, *, max_flags: int | None = None) -> RationalFunction:
    """Zeta by direct summation over all flags in the lattice of flats.

    Each flag contributes the characteristic polynomial of its step-minor
    product divided exactly by (q-1)^length and evaluated at 1, times the
    product of 1/(|F| s + rk F) over its nonempty members.
    """
    if m.is_trivial:
        return RationalFunction.one()
    if not m.is_loopless():
        return RationalFunction.zero()
    lat = lattice_of(m)
    cap = DEFAULT_FLAG_CAP if max_flags is None else max_flags
    if lat.flag_count > cap:
        raise FlagCapExceeded(f"{lat.flag_count} flags exceed the cap of {cap}")
    top = lat.top
    sizes = {f: f.bit_count() for f in lat.flats}
    ranks = {f: lat.rank_of(f) for f in lat.flats}
    chi_memo: dict[tuple[int, int], list[int]] = {}

    def chi_step(f: int, g: int) -> list[int]:
        got = chi_memo.get((f, g))
        if got is None:
            got = _minor_chi_ints(m, f, g)
            chi_memo[(f, g)] = got
        return got

    acc = _Acc()
    factors: list[tuple[int, int]] = []

    def walk(f: int, chi: list[int], scale: int, steps: int) -> None:
        for g in lat.strict_supersets(f):
            chi2 = _imul(chi, chi_step(f, g))
            c, pair = _norm_factor(sizes[g], ranks[g])
            factors.append(pair)
            if g == top:
                val = _chi_div_eval(chi2, steps + 1)
                if val:
                    acc.add((val,), scale * c, tuple(sorted(factors)))
            else:
                walk(g, chi2, scale * c, steps + 1)
            factors.pop()

    walk(0, [1], 1, 0)
    return _factored_to_rf(acc.total())


# ---------------------------------------------------------------------------
# Zeta: proper-flat recurrence


def _chibar1_maker(m: Matroid):
    """chi-bar at 1 of the minor restriction(g)/f, memoized per computation.

    Equals sum over S inside g-f of (-1)^|S| (rk g - rk(S | f)), the derivative
    of the minor's characteristic polynomial at 1.
    """
    ranks = m._ranks
    memo: dict[tuple[int, int], int] = {}

    def chibar1(f: int, g: int) -> int:
        got = memo.get((f, g))
        if got is not None:
            return got
        rg = ranks[g]
        total = 0
        sub = g & ~f
        s = sub
        while True:
            v = rg - ranks[s | f]
            total += -v if s.bit_count() & 1 else v
            if s == 0:
                break
            s = (s - 1) & sub
        memo[(f, g)] = total
        return total

    return chibar1


def _zeta_table(m: Matroid, lat: LatticeOfFlats) -> dict[int, _Fct]:
    """Zeta of every restriction-to-a-flat, keyed by flat mask, ascending rank."""
    chibar1 = _chibar1_maker(m)
    tbl: dict[int, _Fct] = {0: _F_ONE}
    for f in lat.flats:
        if f == 0:
            continue
        acc = _Acc()
        for g in lat.flats:
            if g != f and g & ~f == 0:
                w = chibar1(g, f)
                if w == 0:
                    continue
                num, scale, fct = tbl[g]
                acc.add([c * w for c in num], scale, fct)
        total = acc.total()
        c, pair = _norm_factor(f.bit_count(), lat.rank_of(f))
        tbl[f] = _reduce(
            total[0], total[1] * c, tuple(sorted(total[2] + (pair,)))
        )
    return tbl


def zeta_by_recurrence(m: Matroid) -> RationalFunction:
    """Zeta by the proper-flat recurrence, memoized per flat, ascending rank."""
    if m.is_trivial:
        return RationalFunction.one()
    if not m.is_loopless():
        return RationalFunction.zero()
    lat = lattice_of(m)
    return _factored_to_rf(_zeta_table(m, lat)[lat.top])


# ---------------------------------------------------------------------------
# Mobius inversion


def _require_upsilon_input(m: Matroid) -> None:
    if not m.is_trivial and not m.is_loopless():
        raise LoopsError("the Mobius inversion is undefined for matroids with loops")


def upsilon_by_mobius(m: Matroid) -> RationalFunction:
    """Mobius inversion straight from its definition: sum over all flats of
    mu(F, E) times zeta of the restriction to F."""
    _require_upsilon_input(m)
    if m.is_trivial:
        return RationalFunction.one()
    lat = lattice_of(m)
    ztbl = _zeta_table(m, lat)
    acc = _Acc()
    for f in lat.flats:
        mu = lat.mobius_to_top(f)
        if mu == 0:
            continue
        num, scale, fct = ztbl[f]
        acc.add([c * mu for c in num], scale, fct)
    return _factored_to_rf(acc.total())


def upsilon_by_recurrence(m: Matroid) -> RationalFunction:
    """Mobius inversion by its own proper-flat recurrence (no zeta, no mu)."""
    _require_upsilon_input(m)
    if m.is_trivial:
        return RationalFunction.one()
    lat = lattice_of(m)
    tbl: dict[int, _Fct] = {0: _F_ONE}
    for f in lat.flats:
        if f == 0:
            continue
        sz = f.bit_count()
        acc = _Acc()
        for g in lat.flats:
            if g != f and g & ~f == 0:
                num, scale, fct = tbl[g]
                stepped = _imul_linear([-c for c in num], sz, lat.rank_of(g))
                acc.add(stepped, scale, fct)
        total = acc.total()
        c, pair = _norm_factor(sz, lat.rank_of(f))
        tbl[f] = _reduce(
            total[0], total[1] * c, tuple(sorted(total[2] + (pair,)))
        )
    return _factored_to_rf(tbl[lat.top])


def upsilon_by_flags(m: Matroid, *, max_flags: int | None = None) -> RationalFunction:
    """Mobius inversion as a flag sum of step products
    -(|F_i| s + rk F_{i-1}) / (|F_i| s + rk F_i)."""
    _require_upsilon_input(m)
    if m.is_trivial:
        return RationalFunction.one()
    lat = lattice_of(m)
    cap = DEFAULT_FLAG_CAP if max_flags is None else max_flags
    if lat.flag_count > cap:
        raise FlagCapExceeded(f"{lat.flag_count} flags exceed the cap of {cap}")
    top = lat.top
    sizes = {f: f.bit_count() for f in lat.flats}
    ranks = {f: lat.rank_of(f) for f in lat.flats}
    acc = _Acc()
    factors: list[tuple[int, int]] = []

    def walk(f: int, num: list[int], scale: int) -> None:
        for g in lat.strict_supersets(f):
            stepped = _imul_linear([-c for c in num], sizes[g], ranks[f])
            c, pair = _norm_factor(sizes[g], ranks[g])
            factors.append(pair)
            if g == top:
                acc.add(stepped, scale * c, tuple(sorted(factors)))
            else:
                walk(g, stepped, scale * c)
            factors.pop()

    walk(0, [1], 1)
    return _factored_to_rf(acc.total())


# ---------------------------------------------------------------------------
# Closed forms for uniform matroids


def zeta_uniform_closed(r: int, n: int) -> RationalFunction:
    """Closed form over a common denominator (n s + r)(s+1)^(r-1)."""
    _check_uniform_args(r, n)
    s_plus_1 = Polynomial.linear(1, 1)
    num = Polynomial.zero()
    for k in range(r):
        coef = math.comb(n, k) * generalized_binomial(r - n, r - 1 - k)
        if coef:
            num = num + coef * s_plus_1 ** (r - 1 - k)
    den = Polynomial.linear(n, r) * s_plus_1 ** (r - 1)
    return RationalFunction(num, den)


def upsilon_uniform_closed(r: int, n: int) -> RationalFunction:
    """Closed form: (-1)^r r C(n, r) s^r / ((n s + r)(s+1)^(r-1))."""
    _check_uniform_args(r, n)
    sign = -1 if r & 1 else 1
    num = Polynomial([0] * r + [sign * r * math.comb(n, r)])
    den = Polynomial.linear(n, r) * Polynomial.linear(1, 1) ** (r - 1)
    return RationalFunction(num, den)


def uniform_taylor_coefficients(r: int, n: int, kmax: int) -> TaylorPrefix:
    """Expansion coefficients of the uniform zeta: signed multichoose up to
    order r, then the induced linear recurrence."""
    _check_uniform_args(r, n)
    if kmax < 0:
        raise ValueError("negative expansion order")
    out: list[Fraction] = []
    for k in range(kmax + 1):
        if k <= r:
            a = Fraction((-1) ** k * multichoose(n, k))
        else:
            total = Fraction(0)
            for i in range(1, r + 1):
                total += (
                    n * math.comb(r - 1, i - 1) + r * math.comb(r - 1, i)
                ) * out[k - i]
            a = -total / r
        out.append(a)
    return TaylorPrefix(tuple(out))


def _check_uniform_args(r: int, n: int) -> None:
    if not 1 <= r <= n:
        raise ValueError(f"uniform closed forms need 1 <= r <= n, got r={r}, n={n}")


# ---------------------------------------------------------------------------
# Transfer formulas


def zeta_of_truncation_via_transfer(m: Matroid) -> RationalFunction:
    """Zeta of the truncation from the original zeta and Mobius inversion:
    add Y / (|E| s + rk - 1)."""
    if not m.is_loopless():
        raise LoopsError("truncation transfer needs a loopless matroid")
    if m.rank < 2:
        raise ValueError("truncation transfer needs rank >= 2")
    z = zeta_by_recurrence(m)
    y = upsilon_by_recurrence(m)
    return z + y / RationalFunction(Polynomial.linear(m.size, m.rank - 1))


def zeta_of_free_extension_via_transfer(m: Matroid) -> RationalFunction:
    """Zeta of the free extension: (Z - s Y / ((|E|+1) s + rk)) / (s + 1)."""
    if not m.is_loopless():
        raise LoopsError("free-extension transfer needs a loopless matroid")
    if m.rank < 1:
        raise ValueError("free-extension transfer needs rank >= 1")
    z = zeta_by_recurrence(m)
    y = upsilon_by_recurrence(m)
    s = RationalFunction(Polynomial.variable())
    lin = RationalFunction(Polynomial.linear(m.size + 1, m.rank))
    return (z - s / lin * y) / RationalFunction(Polynomial.linear(1, 1))


# ---------------------------------------------------------------------------
# Dispatch


def compute_zeta(
    m: Matroid, algorithm: str = "auto", *, max_flags: int | None = None
) -> ZetaResult:
    if algorithm not in ZETA_ALGORITHMS:
        raise ValueError(f"unknown zeta algorithm {algorithm!r}")
    if algorithm == "flags":
        return ZetaResult(zeta_by_flags(m, max_flags=max_flags), "flag-sum")
    return ZetaResult(zeta_by_recurrence(m), "recurrence")


def compute_upsilon(
    m: Matroid, algorithm: str = "auto", *, max_flags: int | None = None
) -> UpsilonResult:
    if algorithm not in UPSILON_ALGORITHMS:
        raise ValueError(f"unknown upsilon algorithm {algorithm!r}")
    if algorithm == "mobius":
        return UpsilonResult(upsilon_by_mobius(m), "mobius-def")
    if algorithm == "flags":
        return UpsilonResult(upsilon_by_flags(m, max_flags=max_flags), "flag-product")
    return UpsilonResult(upsilon_by_recurrence(m), "recurrence")
