"""The lattice of flats as an explicit graded poset.

Flats are generated bottom-up by closing single-element extensions of the
previous rank stratum, so the work scales with the lattice rather than the
powerset.  Mobius values are memoized per interval.  Flag enumeration is lazy
and guarded by a hard cap, since chain counts grow like ordered set
partitions.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterator

from .algebra import InexactDivisionError, Polynomial, poly_divide_exact
from .matroid import Flag, Matroid, submasks

DEFAULT_FLAG_CAP = 10_000_000


class LoopsError(ValueError):
    """The lattice of flats is only built for loopless matroids.

    Callers holding a matroid with loops should short-circuit: its zeta
    value is 0 by definition.
    """


class FlagCapExceeded(RuntimeError):
    """Flag enumeration would exceed the configured cap."""


class LatticeOfFlats:
    """All flats of a loopless matroid, graded by rank."""

    def __init__(self, matroid: Matroid, by_rank: tuple[tuple[int, ...], ...]) -> None:
        self.matroid = matroid
        self.by_rank = by_rank
        self.flats: tuple[int, ...] = tuple(f for stratum in by_rank for f in stratum)
        self.top = matroid.full_mask
        self._flat_set = frozenset(self.flats)
        self._mobius_memo: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.flats)

    def is_flat(self, f: int) -> bool:
        return f in self._flat_set

    def rank_of(self, f: int) -> int:
        return self.matroid.rank_of(f)

    def flats_by_rank(self, r: int) -> tuple[int, ...]:
        return self.by_rank[r]

    def proper_flats(self) -> Iterator[int]:
        """All flats except the top."""
        for f in self.flats:
            if f != self.top:
                yield f

    def reduced_flats(self) -> Iterator[int]:
        """All flats except the bottom and the top."""
        for f in self.flats:
            if f != 0 and f != self.top:
                yield f

    @cached_property
    def _supersets(self) -> dict[int, tuple[int, ...]]:
        """For each flat, the flats strictly containing it, in (rank, mask) order."""
        out: dict[int, tuple[int, ...]] = {}
        for f in self.flats:
            out[f] = tuple(g for g in self.flats if g != f and f & ~g == 0)
        return out

    def strict_supersets(self, f: int) -> tuple[int, ...]:
        return self._supersets[f]

    # -- Mobius function ---------------------------------------------------

    def mobius(self, f: int, g: int) -> int:
        """Mobius value of the interval [f, g] in the lattice."""
        if f not in self._flat_set or g not in self._flat_set:
            raise ValueError("Mobius arguments must be flats")
        if f & ~g:
            raise ValueError("Mobius arguments must be nested")
        return self._mobius(f, g)

    def _mobius(self, f: int, g: int) -> int:
        if f == g:
            return 1
        key = (f, g)
        cached = self._mobius_memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for h in self.flats:
            if h != g and f & ~h == 0 and h & ~g == 0:
                total += self._mobius(f, h)
        self._mobius_memo[key] = -total
        return -total

    def mobius_to_top(self, f: int) -> int:
        return self.mobius(f, self.top)

    # -- flags --------------------------------------------------------------

    @cached_property
    def flag_count(self) -> int:
        """Number of chains from the empty flat to the top, by descending DP."""
        count = {self.top: 1}
        for f in reversed(self.flats):
            if f == self.top:
                continue
            count[f] = sum(count[g] for g in self.strict_supersets(f))
        return count[0]

    def flags(self, max_flags: int | None = None) -> Iterator[Flag]:
        """All flags (maximal-endpoint chains), depth-first in (rank, mask) order."""
        cap = DEFAULT_FLAG_CAP if max_flags is None else max_flags
        if self.flag_count > cap:
            raise FlagCapExceeded(
                f"{self.flag_count} flags exceed the cap of {cap}; "
                "raise the cap to enumerate anyway"
            )
        chain = [0]

        def descend() -> Iterator[Flag]:
            here = chain[-1]
            if here == self.top:
                yield Flag(tuple(chain))
                return
            for g in self.strict_supersets(here):
                chain.append(g)
                yield from descend()
                chain.pop()

        yield from descend()


def lattice_of(m: Matroid) -> LatticeOfFlats:
    """Enumerate all flats of a loopless matroid, graded by rank."""
    if not m.is_loopless():
        raise LoopsError(
            "matroid has loops; its lattice of flats is not built "
            "(zeta is 0 for matroids with loops)"
        )
    strata: list[tuple[int, ...]] = [(0,)]
    current = [0]
    for _ in range(m.rank):
        nxt = set()
        for f in current:
            rest = m.full_mask & ~f
            while rest:
                low = rest & -rest
                nxt.add(m.closure_of(f | low))
                rest ^= low
        current = sorted(nxt)
        strata.append(tuple(current))
    return LatticeOfFlats(m, tuple(strata))


# ---------------------------------------------------------------------------
# Characteristic polynomials


def _minor_chi_ints(m: Matroid, low: int, high: int) -> list[int]:
    """Integer coefficients of the characteristic polynomial of
    restriction(high) contracted at low (both flats, low <= high)."""
    ranks = m._ranks
    r_high = ranks[high]
    coeffs = [0] * (r_high - ranks[low] + 1)
    for s in submasks(high & ~low):
        coeffs[r_high - ranks[s | low]] += -1 if s.bit_count() & 1 else 1
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def characteristic_polynomial(m: Matroid, *, check: bool = False) -> Polynomial:
    """Characteristic polynomial by the signed subset expansion.

    Matroids with loops give the zero polynomial.  With ``check=True`` the
    result is also computed from Mobius values over the lattice of flats and
    the two must agree.
    """
    if not m.is_loopless():
        return Polynomial.zero()
    chi = Polynomial(_minor_chi_ints(m, 0, m.full_mask))
    if check:
        alt = characteristic_polynomial_via_flats(lattice_of(m))
        if chi != alt:
            raise AssertionError(
                f"characteristic polynomial routes disagree: {chi} vs {alt}"
            )
    return chi


def characteristic_polynomial_via_flats(lat: LatticeOfFlats) -> Polynomial:
    """Mobius form: sum over flats of mu(0, F) q^(rk(M) - rk(F))."""
    r = lat.matroid.rank
    coeffs = [0] * (r + 1)
    for f in lat.flats:
        coeffs[r - lat.rank_of(f)] += lat.mobius(0, f)
    return Polynomial(coeffs)


def reduced_characteristic_polynomial(m: Matroid) -> Polynomial:
    """Characteristic polynomial divided exactly by (q - 1).

    Defined for loopless nontrivial matroids, where q = 1 is always a root;
    anything else surfaces as an InexactDivisionError.
    """
    return poly_divide_exact(characteristic_polynomial(m), Polynomial.linear(1, -1))


def minor_reduced_chi(m: Matroid, low: int, high: int) -> Polynomial:
    """Reduced characteristic polynomial of restriction(high) / low."""
    chi = Polynomial(_minor_chi_ints(m, low, high))
    return poly_divide_exact(chi, Polynomial.linear(1, -1))


def verify_two_flats_identity(m: Matroid) -> bool:
    """For every nested flat pair F1 <= F2, check that the q-analogue of the
    rank gap equals the sum of reduced characteristic polynomials of the
    minors restriction(F2) / F over flats F1 <= F < F2."""
    from .combinat import q_analogue

    lat = lattice_of(m)
    memo: dict[tuple[int, int], Polynomial] = {}
    for f2 in lat.flats:
        inner = [f for f in lat.flats if f & ~f2 == 0]
        for f1 in inner:
            if f1 & ~f2:
                continue
            lhs = q_analogue(lat.rank_of(f2) - lat.rank_of(f1))
            rhs = Polynomial.zero()
            for f in inner:
                if f1 & ~f == 0 and f != f2:
                    term = memo.get((f, f2))
                    if term is None:
                        term = minor_reduced_chi(m, f, f2)
                        memo[(f, f2)] = term
                    rhs = rhs + term
            if lhs != rhs:
                return False
    return True
