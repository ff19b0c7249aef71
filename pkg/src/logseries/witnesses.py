"""Compositeness witnesses derived from truncated-superposition integrality.

For an integer series f with triangle F_delta, the quantity

    n*g(n) - f(1)^n  =  n * sum_{k=1}^{n-1} F_delta(n, k) / k

is divisible by n whenever n is prime.  A nonzero residue mod n is
therefore a proof of compositeness; residue 0 proves nothing (composite
passers are pseudoprimes for the chosen series).  Three specializations
have closed forms and run in modular arithmetic without any series:

    ones (f(i) = 1):        residue of 2^n - 2            (fermat2)
    x + x^2:                residue of L_n - 1            (lucas)
    shifted Catalan:        residue of C(2n-1, n-1) - 1   (central-binomial)

Ground-truth primality is deterministic: trial division below 10^6 and
fixed-base Miller-Rabin above (the 12-prime base set is deterministic
for n < 3.3e24), so witness verdicts are always checked against an
independent fact.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .series import IntSeries
from .superposition import IntegralityError, theorem_sum

PASSES = "passes"
COMPOSITE_WITNESSED = "composite-witnessed"

FERMAT2 = "fermat2"
LUCAS = "lucas"
CENTRAL_BINOMIAL = "central-binomial"
NAMED_TESTS = (FERMAT2, LUCAS, CENTRAL_BINOMIAL)

CENTRAL_BINOMIAL_DEFAULT_BOUND = 10**5

_TRIAL_DIVISION_BOUND = 10**6
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality: trial division, then fixed-base Miller-Rabin."""
    if n < 2:
        return False
    if n < _TRIAL_DIVISION_BOUND:
        if n % 2 == 0:
            return n == 2
        for d in range(3, math.isqrt(n) + 1, 2):
            if n % d == 0:
                return False
        return True
    return _miller_rabin(n)


def _miller_rabin(n: int) -> bool:
    if n % 2 == 0:
        return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _fib_pair(n: int, mod: int | None):
    """(Fib(n), Fib(n+1)) by fast doubling, optionally reduced mod `mod`."""
    if n == 0:
        return (0, 1)
    a, b = _fib_pair(n >> 1, mod)
    c = a * (2 * b - a)
    d = a * a + b * b
    if mod is not None:
        c %= mod
        d %= mod
    if n & 1:
        return (d, c + d if mod is None else (c + d) % mod)
    return (c, d)


def lucas_number(n: int, mod: int | None = None) -> int:
    """L(n) = Fib(n+1) + Fib(n-1) = 2*Fib(n+1) - Fib(n), n >= 1.

    With `mod` the full L(n) is never materialized; without it the exact
    integer is returned.
    """
    if n < 1:
        raise ValueError("Lucas numbers are indexed from 1 here")
    fn, fn1 = _fib_pair(n, mod)
    value = 2 * fn1 - fn
    return value if mod is None else value % mod


@dataclass(frozen=True, eq=True)
class WitnessReport:
    """Outcome of one compositeness test at one n, with exact evidence.

    residue is the tested quantity reduced mod n; verdict is `passes`
    iff residue == 0.  is_prime_actual comes from the deterministic
    primality check, independent of the witness.
    """

    n: int
    test: str
    residue: int
    verdict: str
    is_prime_actual: bool
    note: str = ""

    def __post_init__(self) -> None:
        if not (0 <= self.residue < self.n):
            raise ValueError(f"residue {self.residue} outside [0, {self.n})")
        expected = PASSES if self.residue == 0 else COMPOSITE_WITNESSED
        if self.verdict != expected:
            raise ValueError(f"verdict {self.verdict!r} inconsistent with residue {self.residue}")

    @property
    def passes(self) -> bool:
        return self.residue == 0

    @property
    def is_pseudoprime(self) -> bool:
        """Composite but undetected by this test."""
        return self.passes and not self.is_prime_actual


def _report(n: int, test: str, residue: int, note: str = "") -> WitnessReport:
    return WitnessReport(
        n=n,
        test=test,
        residue=residue,
        verdict=PASSES if residue == 0 else COMPOSITE_WITNESSED,
        is_prime_actual=is_prime(n),
        note=note,
    )


def witness_fermat2(n: int) -> WitnessReport:
    """Residue of 2^n - 2 mod n, by modular exponentiation."""
    if n < 2:
        raise ValueError("witness requires n >= 2")
    return _report(n, FERMAT2, (pow(2, n, n) - 2) % n)


def witness_lucas(n: int) -> WitnessReport:
    """Residue of L_n - 1 mod n, via fast doubling mod n."""
    if n < 2:
        raise ValueError("witness requires n >= 2")
    return _report(n, LUCAS, (lucas_number(n, mod=n) - 1) % n)


def witness_central_binomial(
    n: int, *, bound: int = CENTRAL_BINOMIAL_DEFAULT_BOUND
) -> WitnessReport:
    """Residue of C(2n-1, n-1) - 1 mod n, binomial materialized exactly.

    Deliberately avoids modular shortcuts for the binomial: prime-modulus
    tricks would bias exactly the composite n under study.  Bounded
    because the exact binomial has ~0.6*n digits.
    """
    if n < 2:
        raise ValueError("witness requires n >= 2")
    if n > bound:
        raise ValueError(
            f"n={n} exceeds the exact-binomial bound {bound}; a modular path for "
            "composite moduli is out of scope"
        )
    return _report(n, CENTRAL_BINOMIAL, (math.comb(2 * n - 1, n - 1) - 1) % n)


def witness_generic(f: IntSeries, n: int, *, series_id: str = "series") -> WitnessReport:
    """Residue of n*g(n) - f(1)^n mod n for an arbitrary integer series f.

    Zero exactly when the truncated sum sum_{k<n} F_delta(n,k)/k is an
    integer, since n*g(n) differs from n times that sum by f(1)^n.
    """
    if n < 2:
        raise ValueError("witness requires n >= 2")
    if f.order < n:
        raise ValueError(f"series order {f.order} is below n={n}")
    ng = theorem_sum(f, n)
    if ng.denominator != 1:
        raise IntegralityError(f"n*g(n) came out fractional at n={n}: {ng}")
    f1 = f.coeff(1)
    residue = (int(ng) - pow(f1, n, n)) % n
    note = "degenerate: f(1) = 0, so the k = n term vanishes" if f1 == 0 else ""
    return _report(n, f"generic({series_id})", residue, note)


@dataclass(frozen=True, eq=True)
class ScanResult:
    """Exhaustive witness scan over [lo, hi] with ground-truth verdicts."""

    lo: int
    hi: int
    test: str
    pseudoprimes: tuple[int, ...]
    primes_checked: int
    composites_checked: int

    @property
    def values_checked(self) -> int:
        return self.primes_checked + self.composites_checked


def _witness_for(test: str, series: IntSeries | None):
    if test == FERMAT2:
        return witness_fermat2
    if test == LUCAS:
        return witness_lucas
    if test == CENTRAL_BINOMIAL:
        return witness_central_binomial
    if test == "generic":
        if series is None:
            raise ValueError("generic scan requires an IntSeries")
        return lambda n: witness_generic(series, n)
    raise ValueError(f"unknown witness test {test!r}")


def _scan_chunk(witness, lo: int, hi: int) -> tuple[list[int], int, int]:
    pseudo: list[int] = []
    primes = 0
    composites = 0
    for n in range(lo, hi + 1):
        report = witness(n)
        if report.is_prime_actual:
            primes += 1
        else:
            composites += 1
            if report.passes:
                pseudo.append(n)
    return pseudo, primes, composites


def scan_pseudoprimes(
    test: str,
    lo: int,
    hi: int,
    *,
    threads: int = 1,
    series: IntSeries | None = None,
) -> ScanResult:
    """Every composite n in [lo, hi] that the named witness fails to flag.

    The range is split into disjoint contiguous chunks that may run
    concurrently; the merge re-sorts, so results are identical for any
    thread count.
    """
    if not (2 <= lo <= hi):
        raise ValueError(f"need 2 <= lo <= hi, got lo={lo}, hi={hi}")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    witness = _witness_for(test, series)

    nchunks = min(threads, hi - lo + 1)
    size = (hi - lo + 1 + nchunks - 1) // nchunks
    bounds = [(lo + i * size, min(lo + (i + 1) * size - 1, hi)) for i in range(nchunks)]
    bounds = [(a, b) for a, b in bounds if a <= b]

    if len(bounds) == 1:
        chunks = [_scan_chunk(witness, lo, hi)]
    else:
        with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
            chunks = list(pool.map(lambda ab: _scan_chunk(witness, *ab), bounds))

    pseudo = sorted(n for chunk in chunks for n in chunk[0])
    primes = sum(chunk[1] for chunk in chunks)
    composites = sum(chunk[2] for chunk in chunks)
    return ScanResult(
        lo=lo,
        hi=hi,
        test=test,
        pseudoprimes=tuple(pseudo),
        primes_checked=primes,
        composites_checked=composites,
    )
