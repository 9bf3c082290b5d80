"""Congruence claims on coefficients of f2 f_ell / f1^2 along arithmetic
progressions: instantiation from a family catalog, verification against
the series engine and the counting oracles, and a brute-force search
for vanishing progressions.

A claim is data (family, parameters, progression, modulus, right-hand
side tag); `verify` expands the base series once per (quotient, modulus)
pair and slices progressions out of it, so families sharing a base are
cheap after the first expansion.
"""

from __future__ import annotations

import math
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import counting
from .ntheory import is_prime
from .qfunctions import eta_quotient, euler_product, psi
from .report import VerificationReport, compare_coefficients
from .series import EtaQuotient, Series

DEFAULT_TERMS = 500
DEFAULT_MAX_ORDER = 200_000
PRIME_LIMIT = 31   # progression indices grow like p^(2 alpha + 2)
ALPHA_LIMIT = 2


class ClaimError(ValueError):
    """Base for claim construction/verification argument errors."""


class EligibilityError(ClaimError):
    """A family hypothesis (prime bound or Legendre condition) fails."""


class IntegralityError(ClaimError):
    """A theorem offset formula does not produce an integer."""


class OrderShortfallError(ClaimError):
    """The requested check needs a longer series than the guard allows."""


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


@dataclass(frozen=True)
class Progression:
    """Indices {step*n + offset : n >= 0}.  Offsets keep their natural
    theorem form and may exceed the step."""

    step: int
    offset: int

    def __post_init__(self):
        if self.step < 1:
            raise ValueError(f"step must be >= 1, got {self.step}")
        if self.offset < 0:
            raise ValueError(f"offset must be >= 0, got {self.offset}")

    def index(self, n: int) -> int:
        return self.step * n + self.offset

    def __str__(self) -> str:
        return f"{self.step}n+{self.offset}"


@dataclass(frozen=True)
class CongruenceClaim:
    family: str
    params: tuple[tuple[str, int], ...]
    ell: int
    progression: Progression
    modulus: Optional[int]        # None: exact equality
    rhs: str                      # tag into _RHS_BUILDERS or a special mode
    halve: bool = False           # claim is about value/2 (doubled comparison)

    @property
    def param_dict(self) -> dict:
        return dict(self.params)

    @property
    def source_series(self) -> EtaQuotient:
        return EtaQuotient.rstar(self.ell)

    def describe(self) -> str:
        ps = ",".join(f"{k}={v}" for k, v in self.params)
        head = f"{self.family}[{ps}]" if ps else self.family
        val = f"a({self.progression})"
        if self.halve:
            val = f"(1/2) {val}"
        rel = "=" if self.modulus is None else f"== {self.rhs} (mod {self.modulus})"
        if self.modulus is None:
            rel = f"= {self.rhs}"
        return f"{head}: {val} {rel}  [ell={self.ell}]"


# -- right-hand sides ------------------------------------------------------------
# Builders give the exact series; modular comparison happens at compare
# time, so one builder serves every modulus.

_RHS_BUILDERS = {
    "ZERO": lambda order: Series.zero(order),
    "TWO_F1_PSI_Q2": lambda order: 2 * (euler_product(1, order) * psi(order, 2)),
    "TWO_PSI_PSI4": lambda order: 2 * (psi(order) * psi(order, 4)),
    "TWO_F1_PSI": lambda order: 2 * (euler_product(1, order) * psi(order)),
    "PSI_SQ": lambda order: psi(order) ** 2,
    "PSI_SQ_Q3": lambda order: psi(order, 3) ** 2,
    "TWO_F8_SQ": lambda order: 2 * euler_product(8, order) ** 2,
    "TWO_F4_SQ": lambda order: 2 * euler_product(4, order) ** 2,
    "TWO_F1_SQ": lambda order: 2 * euler_product(1, order) ** 2,
    "R8_ODD_EXACT": lambda order: 2 * eta_quotient([(2, 2), (8, 2), (1, -4)], order),
}

_SPECIAL_RHS = frozenset({"SELF", "P_CONVOLUTION", "OVERPARTITION_CONV", "D2"})


# -- shared base-series cache ------------------------------------------------------

_CACHE: dict[tuple, Series] = {}
_CACHE_LOCK = threading.Lock()

_CHUNK = 4096


def expand_quotient(eq: EtaQuotient, order: int,
                    modulus: Optional[int] = None) -> Series:
    """Cached expansion; the cache keeps the longest series built so far
    per (quotient, modulus) and serves prefixes of it for free.

    Modular builds round the order up to a 4096 multiple: residues are
    cheap to store, and claims in one family often need near-identical
    orders, so rounding turns the near-misses into cache hits.  Exact
    builds stay at the requested order (coefficients grow fast).
    """
    key = (eq.factors, modulus)
    with _CACHE_LOCK:
        cached = _CACHE.get(key)
    if cached is not None and cached.order >= order:
        return cached
    build_order = order
    if modulus is not None:
        build_order = -(-order // _CHUNK) * _CHUNK
    built = eta_quotient(eq, build_order, modulus)
    with _CACHE_LOCK:
        prev = _CACHE.get(key)
        if prev is None or prev.order < built.order:
            _CACHE[key] = built
        else:
            built = prev
    return built


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


# -- family catalog ----------------------------------------------------------------

_PRIME_FAMILIES = {
    # base:   fixed factor of the progression step
    # mult/div:  offset = (mult * p^(2a) - 1) / div
    "r4-prime": dict(ell=4, modulus=4, min_p=13, witness=-6, base=4,
                     mult=7, div=6, series_rhs="TWO_F1_PSI_Q2"),
    "r6-prime": dict(ell=6, modulus=3, min_p=3, witness=-1, base=2,
                     mult=5, div=4, series_rhs="TWO_PSI_PSI4"),
    "r8-prime": dict(ell=8, modulus=8, min_p=5, witness=-3, base=8,
                     mult=4, div=3, series_rhs="TWO_F1_PSI"),
}


def eligible_primes(family: str, bound: int) -> list[int]:
    """Primes <= bound meeting the family's lower bound and Legendre
    hypothesis.  Accepts the base family name or a -series/-vanish tag."""
    base = family.replace("-series", "").replace("-vanish", "")
    try:
        cfg = _PRIME_FAMILIES[base]
    except KeyError:
        raise ValueError(
            f"unknown prime family {family!r}; known: "
            + ", ".join(sorted(_PRIME_FAMILIES))) from None
    out = []
    for p in range(cfg["min_p"], bound + 1):
        if is_prime(p) and p > 2 and legendre(cfg["witness"], p) == -1:
            out.append(p)
    return out


def _check_eligible(family: str, cfg: dict, p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise EligibilityError(f"{family}: p = {p!r} is not prime")
    if p < cfg["min_p"]:
        raise EligibilityError(
            f"{family}: hypothesis requires p >= {cfg['min_p']}, got {p}")
    if p > PRIME_LIMIT:
        raise EligibilityError(
            f"{family}: p = {p} exceeds the supported bound {PRIME_LIMIT} "
            "(indices grow like p^(2a+2))")
    w = cfg["witness"]
    sym = legendre(w, p)
    if sym != -1:
        raise EligibilityError(
            f"{family}: hypothesis requires ({w}/p) = -1, "
            f"but ({w}/{p}) = {sym}")


def _check_alpha(family: str, alpha) -> None:
    if not isinstance(alpha, int) or alpha < 0:
        raise ClaimError(f"{family}: alpha must be an integer >= 0, got {alpha!r}")
    if alpha > ALPHA_LIMIT:
        raise ClaimError(
            f"{family}: alpha = {alpha} exceeds the supported bound {ALPHA_LIMIT}")


def _offset(family: str, mult: int, div: int, p: int, exponent: int) -> int:
    num = mult * p ** exponent - 1
    if num % div:
        raise IntegralityError(
            f"{family}: offset ({mult}*p^{exponent}-1)/{div} is not an "
            f"integer for p = {p}")
    return num // div


def _nine_offset(family: str, mult: int, alpha: int) -> int:
    num = mult * 9 ** alpha - 1
    if num % 4:
        raise IntegralityError(
            f"{family}: offset ({mult}*9^{alpha}-1)/4 is not an integer")
    return num // 4


def _take(params: dict, family: str, required: tuple[str, ...],
          optional: tuple[str, ...] = ()) -> dict:
    missing = [k for k in required if k not in params]
    unknown = [k for k in params if k not in required + optional]
    if missing or unknown:
        raise ClaimError(
            f"{family}: takes parameters {list(required + optional)}; "
            f"missing {missing}, unknown {unknown}")
    return params


def instantiate(family: str, **params) -> list[CongruenceClaim]:
    """Turn a claim family plus parameters into concrete claims.

    Families (descriptive tags; full statements in each claim's
    describe()):

    - r4-fixed: a(4n+xi) == 0 mod 4, xi in {2, 3}
    - r4-prime-series / r4-prime-vanish: prime family on ell=4 (p, alpha)
    - r5k-fixed: ell=5k; a(5n+2), a(5n+3) == 0 mod 4, a(5n+1) == 0 mod 2
    - r6-iterated: a(9^a n + (9^a-1)/4) == a(n) mod 3
    - r6-iterated-alt: offset variant (9^a-1)/2, kept to document its failure
    - r6-vanish-a / r6-vanish-b: a(9^{a+1} n + (21*9^a-1)/4 | (33*9^a-1)/4) == 0 mod 3
    - r6-prime-series / r6-prime-vanish: prime family on ell=6 (p, alpha)
    - r8-fixed-mod4: five mod-4 vanishing progressions on ell=8
    - r8-fixed-mod8: four mod-8 vanishing progressions on ell=8
    - r8-prime-series / r8-prime-vanish: prime family on ell=8 (p, alpha)
    - r8-halved: (1/2) a(16n+1) vs the p(n) triangular convolution,
      at modulus 2 and modulus 4 (both recorded)
    - conv-overpartition: exact convolution against pbar(n) (param ell)
    - r2-distinct: a(n) = D2(n) exactly on ell=2
    """
    try:
        builder = _FAMILY_BUILDERS[family]
    except KeyError:
        raise ClaimError(
            f"unknown family {family!r}; known: "
            + ", ".join(sorted(_FAMILY_BUILDERS))) from None
    return builder(family, dict(params))


def _build_prime_series(family: str, params: dict) -> list[CongruenceClaim]:
    cfg = _PRIME_FAMILIES[family.replace("-series", "")]
    _take(params, family, ("p",), ("alpha",))
    p = params["p"]
    alpha = params.get("alpha", 0)
    _check_eligible(family, cfg, p)
    _check_alpha(family, alpha)
    step = cfg["base"] * p ** (2 * alpha)
    off = _offset(family, cfg["mult"], cfg["div"], p, 2 * alpha)
    return [CongruenceClaim(family, (("p", p), ("alpha", alpha)), cfg["ell"],
                            Progression(step, off), cfg["modulus"],
                            cfg["series_rhs"])]


def _build_prime_vanish(family: str, params: dict) -> list[CongruenceClaim]:
    cfg = _PRIME_FAMILIES[family.replace("-vanish", "")]
    _take(params, family, ("p",), ("alpha",))
    p = params["p"]
    alpha = params.get("alpha", 0)
    _check_eligible(family, cfg, p)
    _check_alpha(family, alpha)
    step = cfg["base"] * p ** (2 * alpha + 2)
    base_off = _offset(family, cfg["mult"], cfg["div"], p, 2 * alpha + 2)
    claims = []
    for r in range(1, p):
        off = cfg["base"] * p ** (2 * alpha + 1) * r + base_off
        claims.append(CongruenceClaim(
            family, (("p", p), ("alpha", alpha), ("r", r)), cfg["ell"],
            Progression(step, off), cfg["modulus"], "ZERO"))
    return claims


def _build_r4_fixed(family: str, params: dict) -> list[CongruenceClaim]:
    _take(params, family, ())
    return [CongruenceClaim(family, (("xi", xi),), 4, Progression(4, xi), 4, "ZERO")
            for xi in (2, 3)]


def _build_r5k_fixed(family: str, params: dict) -> list[CongruenceClaim]:
    _take(params, family, ("k",))
    k = params["k"]
    if not isinstance(k, int) or k < 1:
        raise ClaimError(f"{family}: k must be a positive integer, got {k!r}")
    if 5 * k > 40:
        raise ClaimError(f"{family}: 5k = {5 * k} exceeds the supported bound 40")
    ell = 5 * k
    return [
        CongruenceClaim(family, (("k", k), ("xi", 2)), ell, Progression(5, 2), 4, "ZERO"),
        CongruenceClaim(family, (("k", k), ("xi", 3)), ell, Progression(5, 3), 4, "ZERO"),
        CongruenceClaim(family, (("k", k), ("xi", 1)), ell, Progression(5, 1), 2, "ZERO"),
    ]


def _build_r6_iterated(family: str, params: dict) -> list[CongruenceClaim]:
    _take(params, family, ("alpha",))
    alpha = params["alpha"]
    _check_alpha(family, alpha)
    div = 2 if family.endswith("-alt") else 4
    num = 9 ** alpha - 1
    if num % div:
        raise IntegralityError(
            f"{family}: offset (9^{alpha}-1)/{div} is not an integer")
    return [CongruenceClaim(family, (("alpha", alpha),), 6,
                            Progression(9 ** alpha, num // div), 3, "SELF")]


def _build_r6_vanish(family: str, params: dict) -> list[CongruenceClaim]:
    _take(params, family, ("alpha",))
    alpha = params["alpha"]
    _check_alpha(family, alpha)
    mult = 21 if family.endswith("-a") else 33
    off = _nine_offset(family, mult, alpha)
    return [CongruenceClaim(family, (("alpha", alpha),), 6,
                            Progression(9 ** (alpha + 1), off), 3, "ZERO")]


def _build_r8_fixed_mod4(family: str, params: dict) -> list[CongruenceClaim]:
    _take(params, family, ())
    progs = [(4, 2), (4, 3), (16, 5), (16, 9), (16, 13)]
    return [CongruenceClaim(family, (), 8, Progression(a, b), 4, "ZERO")
            for a, b in progs]


def _build_r8_fixed_mod8(family: str, params: dict) -> list[CongruenceClaim]:
    _take(params, family, ())
    progs = [(4, 3), (8, 3), (8, 5), (8, 7)]
    return [CongruenceClaim(family, (), 8, Progression(a, b), 8, "ZERO")
            for a, b in progs]


def _build_r8_halved(family: str, params: dict) -> list[CongruenceClaim]:
    _take(params, family, ())
    return [CongruenceClaim(family, (), 8, Progression(16, 1), m,
                            "P_CONVOLUTION", halve=True)
            for m in (2, 4)]


def _build_conv_overpartition(family: str, params: dict) -> list[CongruenceClaim]:
    _take(params, family, ("ell",))
    ell = params["ell"]
    if not isinstance(ell, int) or ell < 1:
        raise ClaimError(f"{family}: ell must be a positive integer, got {ell!r}")
    if ell > 40:
        raise ClaimError(f"{family}: ell = {ell} exceeds the supported bound 40")
    return [CongruenceClaim(family, (("ell", ell),), ell, Progression(1, 0),
                            None, "OVERPARTITION_CONV")]


def _build_r2_distinct(family: str, params: dict) -> list[CongruenceClaim]:
    _take(params, family, ())
    return [CongruenceClaim(family, (), 2, Progression(1, 0), None, "D2")]


_FAMILY_BUILDERS = {
    "r4-fixed": _build_r4_fixed,
    "r4-prime-series": _build_prime_series,
    "r4-prime-vanish": _build_prime_vanish,
    "r5k-fixed": _build_r5k_fixed,
    "r6-iterated": _build_r6_iterated,
    "r6-iterated-alt": _build_r6_iterated,
    "r6-vanish-a": _build_r6_vanish,
    "r6-vanish-b": _build_r6_vanish,
    "r6-prime-series": _build_prime_series,
    "r6-prime-vanish": _build_prime_vanish,
    "r8-fixed-mod4": _build_r8_fixed_mod4,
    "r8-fixed-mod8": _build_r8_fixed_mod8,
    "r8-prime-series": _build_prime_series,
    "r8-prime-vanish": _build_prime_vanish,
    "r8-halved": _build_r8_halved,
    "conv-overpartition": _build_conv_overpartition,
    "r2-distinct": _build_r2_distinct,
}

FAMILIES = tuple(sorted(_FAMILY_BUILDERS))

# prime-family parameter defaults used by the CLI when none are given
FAMILY_DEFAULT_PARAMS = {
    "r4-prime-series": {"p": 13}, "r4-prime-vanish": {"p": 13},
    "r6-prime-series": {"p": 3}, "r6-prime-vanish": {"p": 3},
    "r8-prime-series": {"p": 5}, "r8-prime-vanish": {"p": 5},
    "r5k-fixed": {"k": 1},
    "r6-iterated": {"alpha": 1}, "r6-iterated-alt": {"alpha": 1},
    "r6-vanish-a": {"alpha": 0}, "r6-vanish-b": {"alpha": 0},
    "conv-overpartition": {"ell": 2},
}


# -- verification -------------------------------------------------------------------


def _report(claim: CongruenceClaim, status: str, checked: int, bad: list,
            total_bad: int, detail: dict, t0: float) -> VerificationReport:
    if total_bad > len(bad):
        detail = dict(detail)
        detail["counterexample_total"] = total_bad
    return VerificationReport(
        name=claim.family, params=claim.param_dict, status=status,
        terms_checked=checked, counterexamples=bad,
        progression=(claim.progression.step, claim.progression.offset),
        modulus=claim.modulus, detail=detail,
        seconds=time.perf_counter() - t0)


def verify(claim: CongruenceClaim, terms: int = DEFAULT_TERMS,
           max_order: int = DEFAULT_MAX_ORDER) -> VerificationReport:
    """Check the first ``terms`` progression coefficients of a claim.

    The base series is expanded to exactly the needed order (refusing
    past ``max_order``); counterexample indices are in the progression
    variable n, so index i means coefficient step*i + offset.
    """
    if terms < 1:
        raise ClaimError(f"terms must be >= 1, got {terms}")
    t0 = time.perf_counter()
    prog = claim.progression
    detail: dict = {}

    if claim.rhs == "D2":
        lhs = counting.count(counting.NONOVERLINED_L_REGULAR(2), terms - 1).values
        rhs = counting.count(counting.DISTINCT_TWO_COPIES, terms - 1).values
        bad, checked, nbad = compare_coefficients(lhs, rhs, terms, None)
        detail["sources"] = "oracle vs oracle"
        return _report(claim, "pass" if not nbad else "fail",
                       checked, bad, nbad, detail, t0)

    if claim.rhs == "OVERPARTITION_CONV":
        base = expand_quotient(claim.source_series, terms, None)
        ptab = counting.count(counting.PLAIN_P, (terms - 1) // claim.ell).values
        pbar = counting.count(counting.OVERPARTITION, terms - 1).values
        lhs = []
        for n in range(terms):
            total = base[n]
            nu = 1
            while claim.ell * nu <= n:
                total += base[n - claim.ell * nu] * ptab[nu]
                nu += 1
            lhs.append(total)
        bad, checked, nbad = compare_coefficients(lhs, pbar, terms, None)
        detail["sources"] = "series+oracle convolution vs oracle"
        return _report(claim, "pass" if not nbad else "fail",
                       checked, bad, nbad, detail, t0)

    need = prog.step * (terms - 1) + prog.offset + 1
    if need > max_order:
        raise OrderShortfallError(
            f"{claim.describe()}: needs base series order {need}, above the "
            f"max-order guard {max_order}; lower terms or raise the guard")

    build_mod = claim.modulus
    if claim.halve:
        build_mod = 2 * claim.modulus
    base = expand_quotient(claim.source_series, need, build_mod)
    vals = base.coeffs[prog.offset::prog.step][:terms]

    if claim.rhs == "SELF":
        expected = base.coeffs[:terms]
        cmp_mod = claim.modulus
    elif claim.rhs == "P_CONVOLUTION":
        # (1/2) a(step n + offset) == sum_{nu>=0} p(n - nu(nu+1)/2) mod m,
        # compared in doubled form mod 2m so odd values fail honestly
        ptab = counting.count(counting.PLAIN_P, terms - 1).values
        expected = []
        for n in range(terms):
            total = 0
            nu = 0
            while nu * (nu + 1) // 2 <= n:
                total += ptab[n - nu * (nu + 1) // 2]
                nu += 1
            expected.append(2 * total)
        cmp_mod = 2 * claim.modulus
        detail["comparison"] = f"doubled congruence mod {cmp_mod}"
    else:
        try:
            builder = _RHS_BUILDERS[claim.rhs]
        except KeyError:
            raise ClaimError(f"unknown rhs tag {claim.rhs!r}") from None
        expected = builder(terms).coeffs
        cmp_mod = claim.modulus

    bad, checked, nbad = compare_coefficients(vals, expected, terms, cmp_mod)
    return _report(claim, "pass" if not nbad else "fail",
                   checked, bad, nbad, detail, t0)


def _thread_count(threads: Optional[int]) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("QCONG_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def verify_many(claims: list[CongruenceClaim], terms: int = DEFAULT_TERMS,
                max_order: int = DEFAULT_MAX_ORDER,
                threads: Optional[int] = None) -> list[VerificationReport]:
    """Verify a batch; output is sorted canonically (family, params,
    progression) no matter the execution order."""
    ordered = sorted(
        claims, key=lambda c: (c.family, c.params, c.progression.step,
                               c.progression.offset, c.modulus or 0))
    n = _thread_count(threads)
    if n == 1 or len(ordered) <= 1:
        return [verify(c, terms, max_order) for c in ordered]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(lambda c: verify(c, terms, max_order), ordered))


# -- proof-internal congruences ------------------------------------------------------

_INTERMEDIATES = {
    # id: (ell, step, offset, modulus (None = exact), rhs tag)
    "r4-4n1-mod4": (4, 4, 1, 4, "TWO_F1_PSI_Q2"),
    "r6-2n1-mod3": (6, 2, 1, 3, "TWO_PSI_PSI4"),
    "r6-3n2-mod3": (6, 3, 2, 3, "PSI_SQ_Q3"),
    "r6-all-mod3": (6, 1, 0, 3, "PSI_SQ"),
    "r8-2n1-exact": (8, 2, 1, None, "R8_ODD_EXACT"),
    "r8-2n1-mod8": (8, 2, 1, 8, "TWO_F8_SQ"),
    "r8-4n1-mod4": (8, 4, 1, 4, "TWO_F4_SQ"),
    "r8-16n1-mod4": (8, 16, 1, 4, "TWO_F1_SQ"),
}

INTERMEDIATE_IDS = tuple(sorted(_INTERMEDIATES))


def intermediate_claim(ident: str) -> CongruenceClaim:
    try:
        ell, step, off, modulus, rhs = _INTERMEDIATES[ident]
    except KeyError:
        raise ClaimError(
            f"unknown intermediate id {ident!r}; known: "
            + ", ".join(INTERMEDIATE_IDS)) from None
    return CongruenceClaim(ident, (), ell, Progression(step, off), modulus, rhs)


def verify_intermediate(ident: str, terms: int = 300,
                        max_order: int = DEFAULT_MAX_ORDER) -> VerificationReport:
    """Check one of the proof-internal progression congruences; these
    catch transcription slips before the headline claims run."""
    return verify(intermediate_claim(ident), terms, max_order)


# -- search --------------------------------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    """A progression step*n + offset on which every checked coefficient
    of f2 f_ell / f1^2 vanishes mod modulus (maximal such <= bound)."""

    ell: int
    step: int
    offset: int
    modulus: int
    evidence: int                  # number of supporting coefficients
    rediscovers: tuple[str, ...]   # matching known-claim labels

    def describe(self) -> str:
        tag = f"a({self.step}n+{self.offset}) == 0 mod {self.modulus}"
        known = f"  [{'; '.join(self.rediscovers)}]" if self.rediscovers else ""
        return f"ell={self.ell}: {tag} ({self.evidence} terms){known}"


MIN_EVIDENCE = 50


def _known_progressions(ell: int) -> list[tuple[str, int, int, int]]:
    families = {4: ("r4-fixed",), 8: ("r8-fixed-mod4", "r8-fixed-mod8")}
    out = []
    for fam in families.get(ell, ()):
        for claim in instantiate(fam):
            out.append((f"{fam}({claim.progression} mod {claim.modulus})",
                        claim.progression.step, claim.progression.offset,
                        claim.modulus))
    return out


def search(ell: int, max_step: int, max_modulus: int,
           terms: int = DEFAULT_TERMS) -> list[Candidate]:
    """Scan all progressions with step <= max_step for total vanishing
    mod some m in 2..max_modulus, over the first ``terms`` coefficients.

    Only progressions with at least MIN_EVIDENCE supporting values are
    reported; each hit carries the maximal modulus and any matching
    known claims.
    """
    if ell < 1 or max_step < 1 or max_modulus < 2:
        raise ValueError("need ell >= 1, max_step >= 1, max_modulus >= 2")
    base = expand_quotient(EtaQuotient.rstar(ell), terms, None)
    known = _known_progressions(ell)
    out = []
    for step in range(1, max_step + 1):
        for offset in range(step):
            vals = base.coeffs[offset::step]
            if len(vals) < MIN_EVIDENCE:
                continue
            g = 0
            for v in vals:
                g = math.gcd(g, v)
                if g == 1:
                    break
            if g == 1 or g == 0:
                continue
            best = 0
            for m in range(max_modulus, 1, -1):
                if g % m == 0:
                    best = m
                    break
            if not best:
                continue
            labels = tuple(sorted(
                label for label, ka, kb, km in known
                if ka == step and kb == offset and best % km == 0))
            out.append(Candidate(ell, step, offset, best, len(vals), labels))
    out.sort(key=lambda c: (-c.evidence, c.step, c.offset, -c.modulus))
    return out
