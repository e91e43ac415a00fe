"""Catalog generation and identity/conjecture verification with reports.

Theorem checks (proved statements) and conjecture checks are kept in separate
suites: a theorem failure means an implementation bug, while a conjecture
failure is a counterexample and must be preserved verbatim in its witness.
Entries are independent; the runner can execute them in parallel and merges
results in catalog order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import Polynomial, RationalFunction, TaylorPrefix, taylor_prefix
from .combinat import q_analogue, rising_factorial, stirling_second
from .lattice import lattice_of, minor_reduced_chi
from .matroid import Matroid, graphic, iter_bits, uniform
from .zeta import upsilon_by_recurrence, zeta_by_recurrence

HOLDS = "holds"
FAILS = "fails"
SKIPPED = "skipped"

GIRTH_CHECK = "girth-theorem"
K_DERIVATIVE_CHECK = "k-derivative-lemma"
COUNTING_CHECK = "counting-identities"
TRUNCATION_CONJECTURE = "conjecture-truncation"
UPSILON_CONJECTURE = "conjecture-upsilon"

THEOREM_CHECK_NAMES = (GIRTH_CHECK, K_DERIVATIVE_CHECK, COUNTING_CHECK)
CONJECTURE_CHECK_NAMES = (TRUNCATION_CONJECTURE, UPSILON_CONJECTURE)


@dataclass(frozen=True)
class CatalogEntry:
    """A named matroid with its construction trace."""

    name: str
    matroid: Matroid
    provenance: str


@dataclass(frozen=True)
class CheckReport:
    check: str
    entry: str
    status: str
    reason: str = ""
    witness: dict | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        out = {"check": self.check, "entry": self.entry, "status": self.status}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness
        return out


# ---------------------------------------------------------------------------
# Catalog

_NAMED_GRAPHS: tuple[tuple[str, int, tuple[tuple[int, int], ...]], ...] = (
    ("P2", 3, ((0, 1), (1, 2))),
    ("P3", 4, ((0, 1), (1, 2), (2, 3))),
    ("C3", 3, ((0, 1), (1, 2), (0, 2))),
    ("C4", 4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    ("C5", 5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))),
    ("C6", 6, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5))),
    ("K4", 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    ("K23", 5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))),
    ("C4+chord", 4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2))),
    ("2xC3", 4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))),
)


def build_catalog(max_ground: int = 7) -> list[CatalogEntry]:
    """Deterministic catalog: uniforms, named graphic matroids, pairwise direct
    sums, and one truncation plus one free extension of each rank->=2 entry,
    all within the ground-size bound and de-duplicated by bases sets."""
    if max_ground > 16:
        raise ValueError("catalog bound exceeds the ground-size maximum")
    entries: list[CatalogEntry] = []
    seen: set[Matroid] = set()

    def push(name: str, m: Matroid, provenance: str) -> None:
        if not m.is_loopless():
            raise AssertionError(f"catalog entry {name} has loops")
        if m not in seen:
            seen.add(m)
            entries.append(CatalogEntry(name, m, provenance))

    for n in range(1, max_ground + 1):
        for r in range(1, n + 1):
            push(f"U({r},{n})", uniform(r, n), f"uniform({r},{n})")
    for gname, v, edges in _NAMED_GRAPHS:
        if len(edges) <= max_ground:
            push(gname, graphic(list(edges), v), f"graphic({gname})")

    base = list(entries)
    for i, left in enumerate(base):
        for right in base[i:]:
            if left.matroid.size + right.matroid.size <= max_ground:
                push(
                    f"{left.name}+{right.name}",
                    left.matroid.direct_sum(right.matroid),
                    f"direct_sum({left.provenance}, {right.provenance})",
                )

    constructed = list(entries)
    for entry in constructed:
        if entry.matroid.rank >= 2:
            push(
                f"tr({entry.name})",
                entry.matroid.truncation(),
                f"truncation({entry.provenance})",
            )
            if entry.matroid.size + 1 <= max_ground:
                push(
                    f"ext({entry.name})",
                    entry.matroid.free_extension(),
                    f"free_extension({entry.provenance})",
                )
    return entries


# ---------------------------------------------------------------------------
# Shared computations (cached per matroid; results are pure values)


@lru_cache(maxsize=None)
def _zeta(m: Matroid) -> RationalFunction:
    return zeta_by_recurrence(m)


@lru_cache(maxsize=None)
def _upsilon(m: Matroid) -> RationalFunction:
    return upsilon_by_recurrence(m)


def zeta_taylor_prefix(m: Matroid, k: int) -> TaylorPrefix:
    """Expansion of the zeta value around 0; the seam the checkers go through."""
    return taylor_prefix(_zeta(m), k)


def upsilon_taylor_prefix(m: Matroid, k: int) -> TaylorPrefix:
    return taylor_prefix(_upsilon(m), k)


def _witness_base(entry: CatalogEntry) -> dict:
    return {
        "entry": entry.name,
        "provenance": entry.provenance,
        "size": entry.matroid.size,
        "bases": [sorted(iter_bits(b)) for b in sorted(entry.matroid.bases)],
    }


# ---------------------------------------------------------------------------
# Theorem checks


def check_girth_theorem(entry: CatalogEntry) -> CheckReport:
    """Derivatives of zeta at 0 below the girth equal signed rising factorials."""
    m = entry.matroid
    if not m.is_loopless():
        return CheckReport(GIRTH_CHECK, entry.name, SKIPPED, "matroid has loops")
    g = m.girth()
    prefix = zeta_taylor_prefix(m, g - 1)
    for k in range(g):
        lhs = math.factorial(k) * prefix[k]
        rhs = Fraction((-1) ** k * rising_factorial(m.size, k))
        if lhs != rhs:
            witness = _witness_base(entry)
            witness.update({"k": k, "girth": g, "lhs": str(lhs), "rhs": str(rhs)})
            return CheckReport(
                GIRTH_CHECK, entry.name, FAILS, f"derivative {k} mismatch", witness
            )
    return CheckReport(GIRTH_CHECK, entry.name, HOLDS)


def check_k_derivative_lemma(entry: CatalogEntry, kmax: int = 3) -> CheckReport:
    """The derivative recurrence as an identity of rational functions."""
    m = entry.matroid
    if m.is_trivial or not m.is_loopless():
        return CheckReport(
            K_DERIVATIVE_CHECK, entry.name, SKIPPED, "needs a loopless nontrivial matroid"
        )
    lat = lattice_of(m)
    z = _zeta(m)
    derivs = [z]
    for _ in range(kmax):
        derivs.append(derivs[-1].derivative())
    reduced = list(lat.reduced_flats())
    flat_weight = {f: minor_reduced_chi(m, f, lat.top)(1) for f in reduced}
    flat_derivs: dict[int, list[RationalFunction]] = {}
    for f in reduced:
        zf = _zeta(m.restriction(f))
        chain = [zf]
        for _ in range(kmax):
            chain.append(chain[-1].derivative())
        flat_derivs[f] = chain
    lin = RationalFunction(Polynomial.linear(m.size, m.rank))
    for k in range(1, kmax + 1):
        rhs = RationalFunction.zero()
        for f in reduced:
            w = flat_weight[f]
            if w:
                rhs = rhs + w * flat_derivs[f][k]
        rhs = (rhs + (-k * m.size) * derivs[k - 1]) / lin
        if derivs[k] != rhs:
            witness = _witness_base(entry)
            witness.update(
                {"k": k, "lhs": derivs[k].to_json(), "rhs": rhs.to_json()}
            )
            return CheckReport(
                K_DERIVATIVE_CHECK, entry.name, FAILS, f"order {k} mismatch", witness
            )
    return CheckReport(K_DERIVATIVE_CHECK, entry.name, HOLDS)


def check_counting_identities(entry: CatalogEntry, kmax: int = 4) -> CheckReport:
    """The four counting identities: rank-size partition of binomials, the
    surjection expansion of |E|^k, and the two flat sums over the reduced
    lattice (counted sets, then |F|^k moments)."""
    m = entry.matroid
    if not m.is_loopless():
        return CheckReport(COUNTING_CHECK, entry.name, SKIPPED, "matroid has loops")
    n, r = m.size, m.rank

    def fail(identity: str, params: dict, lhs, rhs) -> CheckReport:
        def side(x):
            return x.to_strings() if isinstance(x, Polynomial) else str(x)

        witness = _witness_base(entry)
        witness.update(
            {"identity": identity, "params": params, "lhs": side(lhs), "rhs": side(rhs)}
        )
        return CheckReport(
            COUNTING_CHECK, entry.name, FAILS, f"{identity} {params}", witness
        )

    counts: dict[tuple[int, int], int] = {}
    ranks = m._ranks
    for mask in range(1, 1 << n):
        key = (ranks[mask], mask.bit_count())
        counts[key] = counts.get(key, 0) + 1

    for s in range(1, n + 1):
        lhs = math.comb(n, s)
        rhs = sum(counts.get((i, s), 0) for i in range(1, s + 1))
        if lhs != rhs:
            return fail("rank-size-partition", {"s": s}, lhs, rhs)

    for k in range(1, kmax + 1):
        lhs = n**k
        rhs = sum(
            math.factorial(j)
            * stirling_second(k, j)
            * sum(counts.get((i, j), 0) for i in range(1, j + 1))
            for j in range(1, k + 1)
        )
        if lhs != rhs:
            return fail("ground-power-surjections", {"k": k}, lhs, rhs)

    if m.is_trivial:
        return CheckReport(COUNTING_CHECK, entry.name, HOLDS)

    lat = lattice_of(m)
    reduced = list(lat.reduced_flats())
    chibar = {f: minor_reduced_chi(m, f, lat.top) for f in reduced}
    flat_counts: dict[int, dict[tuple[int, int], int]] = {}
    for f in reduced:
        sub: dict[tuple[int, int], int] = {}
        s = f
        while True:
            if s:
                key = (ranks[s], s.bit_count())
                sub[key] = sub.get(key, 0) + 1
            if s == 0:
                break
            s = (s - 1) & f
        flat_counts[f] = sub

    for i in range(1, r + 1):
        for j in range(1, n + 1):
            lhs_poly = sum(
                (chibar[f] * flat_counts[f].get((i, j), 0) for f in reduced),
                start=q_analogue(0),
            )
            rhs_poly = q_analogue(r - i) * counts.get((i, j), 0)
            if lhs_poly != rhs_poly:
                return fail(
                    "flat-sum-of-counts", {"i": i, "j": j}, lhs_poly, rhs_poly
                )

    for k in range(1, kmax + 1):
        lhs_poly = sum(
            (chibar[f] * f.bit_count() ** k for f in reduced), start=q_analogue(0)
        )
        rhs_poly = q_analogue(0)
        for j in range(1, k + 1):
            coeff = math.factorial(j) * stirling_second(k, j)
            for i in range(1, j + 1):
                c = counts.get((i, j), 0)
                if c:
                    rhs_poly = rhs_poly + coeff * c * q_analogue(r - i)
        if lhs_poly != rhs_poly:
            return fail("flat-sum-of-powers", {"k": k}, lhs_poly, rhs_poly)

    return CheckReport(COUNTING_CHECK, entry.name, HOLDS)


# ---------------------------------------------------------------------------
# Conjecture checks


def check_conjecture_truncation(entry: CatalogEntry) -> CheckReport:
    """Expansion coefficients of zeta below the rank survive truncation."""
    m = entry.matroid
    if m.rank < 2:
        return CheckReport(
            TRUNCATION_CONJECTURE,
            entry.name,
            SKIPPED,
            "rank < 2: truncation would create loops",
        )
    order = m.rank - 1
    own = zeta_taylor_prefix(m, order)
    truncated = zeta_taylor_prefix(m.truncation(), order)
    for k in range(order + 1):
        if own[k] != truncated[k]:
            witness = _witness_base(entry)
            witness.update(
                {
                    "first_divergence": k,
                    "lhs": str(own[k]),
                    "rhs": str(truncated[k]),
                    "prefix": own.to_strings(),
                    "truncation_prefix": truncated.to_strings(),
                }
            )
            return CheckReport(
                TRUNCATION_CONJECTURE,
                entry.name,
                FAILS,
                f"coefficients diverge at order {k}",
                witness,
            )
    return CheckReport(TRUNCATION_CONJECTURE, entry.name, HOLDS)


def check_conjecture_upsilon(entry: CatalogEntry) -> CheckReport:
    """The Mobius inversion vanishes to order rank-1 and its first nonzero
    coefficient is the signed basis count."""
    m = entry.matroid
    if not m.is_loopless():
        return CheckReport(UPSILON_CONJECTURE, entry.name, SKIPPED, "matroid has loops")
    r = m.rank
    prefix = upsilon_taylor_prefix(m, r)
    expected_top = Fraction((-1) ** r * len(m.bases))
    for k in range(r):
        if prefix[k] != 0:
            witness = _witness_base(entry)
            witness.update(
                {
                    "coefficient_index": k,
                    "lhs": str(prefix[k]),
                    "rhs": "0",
                    "prefix": prefix.to_strings(),
                }
            )
            return CheckReport(
                UPSILON_CONJECTURE,
                entry.name,
                FAILS,
                f"coefficient {k} is nonzero",
                witness,
            )
    if prefix[r] != expected_top:
        witness = _witness_base(entry)
        witness.update(
            {
                "coefficient_index": r,
                "lhs": str(prefix[r]),
                "rhs": str(expected_top),
                "prefix": prefix.to_strings(),
            }
        )
        return CheckReport(
            UPSILON_CONJECTURE,
            entry.name,
            FAILS,
            "leading coefficient is not the signed basis count",
            witness,
        )
    return CheckReport(UPSILON_CONJECTURE, entry.name, HOLDS)


# ---------------------------------------------------------------------------
# Runner


def _entry_reports(
    entry: CatalogEntry, suites: tuple[str, ...], kmax: int, kderivative_kmax: int
) -> list[CheckReport]:
    out: list[CheckReport] = []

    def run(name: str, fn, *args) -> None:
        try:
            out.append(fn(*args))
        except Exception as exc:  # noqa: BLE001 - entry failures never abort the run
            witness = _witness_base(entry)
            witness.update({"error": f"{type(exc).__name__}: {exc}"})
            out.append(
                CheckReport(name, entry.name, FAILS, "check raised an exception", witness)
            )

    if "theorems" in suites:
        run(GIRTH_CHECK, check_girth_theorem, entry)
        run(K_DERIVATIVE_CHECK, check_k_derivative_lemma, entry, kderivative_kmax)
        run(COUNTING_CHECK, check_counting_identities, entry, kmax)
    if "conjectures" in suites:
        run(TRUNCATION_CONJECTURE, check_conjecture_truncation, entry)
        run(UPSILON_CONJECTURE, check_conjecture_upsilon, entry)
    return out


def _entry_reports_star(args) -> list[CheckReport]:
    return _entry_reports(*args)


def run_all_checks(
    catalog: list[CatalogEntry],
    *,
    suites: tuple[str, ...] = ("theorems", "conjectures"),
    kmax: int = 4,
    kderivative_kmax: int = 3,
    jobs: int = 1,
) -> list[CheckReport]:
    """Run every applicable check over every entry, in deterministic order."""
    tasks = [(entry, tuple(suites), kmax, kderivative_kmax) for entry in catalog]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_entry_reports_star, tasks))
    else:
        chunks = [_entry_reports(*task) for task in tasks]
    return [report for chunk in chunks for report in chunk]


def summarize(reports: list[CheckReport]) -> dict[str, int]:
    out = {HOLDS: 0, FAILS: 0, SKIPPED: 0}
    for report in reports:
        out[report.status] += 1
    return out


def witness_reverifies(report: CheckReport) -> bool:
    """Re-evaluate both recorded sides of a failing report: they must still differ."""
    if report.status != FAILS or not report.witness:
        return False
    w = report.witness
    if "lhs" not in w or "rhs" not in w:
        return False
    return _parse_side(w["lhs"]) != _parse_side(w["rhs"])


def _parse_side(x):
    if isinstance(x, dict):
        return RationalFunction.from_json(x)
    if isinstance(x, list):
        return tuple(Fraction(s) for s in x)
    return Fraction(x)
