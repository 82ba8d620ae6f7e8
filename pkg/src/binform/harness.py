"""Verification campaigns over the determinant families.

Each suite walks a parameter grid, compares a computed determinant against
its predicted value (closed form, divisibility, or vanishing), and emits one
record per check.  Grids and any random draws are materialized up front from
the campaign seed, so a run is deterministic no matter how many worker
threads evaluate it; records always come back in grid order.
"""

from __future__ import annotations

import csv
import itertools
import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from time import perf_counter
from typing import Callable, IO, Sequence

from .arith import factorize, is_prime, is_squarefree, jacobi, primes_up_to, totient
from .detkit import IntMatrix, det_exact, det_exact_crt, det_mod_p
from .families import (FormFamily, bracket_cd, paren_cd, power_det_mod_p,
                       rational_matrix_det_mod_p, shifted_power_det_mod_p,
                       shifted_power_matrix)
from .formulas import (Dp11Case, poly_grid_det_identity, predict_dp11,
                       rational_det_closed_form, shift_closed_form,
                       trinomial_power_coeffs, x_independence_applicable)

SUITES = ("thm-divisibility", "lemma-nonsquarefree", "thm-shift",
          "cor-x-independence", "thm-rational", "cor-dp11", "prior-facts",
          "power-sums", "engines")

CSV_COLUMNS = ("suite", "param_n", "param_p", "param_c", "param_d", "param_e",
               "param_seed", "computed", "predicted", "verdict", "elapsed_ms")


class Verdict(Enum):
    PASS = "Pass"
    FAIL = "Fail"
    SKIP = "Skip"


@dataclass
class VerificationRecord:
    """One row of a campaign report."""

    suite: str
    computed: str
    predicted: str
    verdict: Verdict
    elapsed_ms: int = 0
    n: int | None = None
    p: int | None = None
    c: int | None = None
    d: int | None = None
    e: int | None = None
    seed: int | None = None

    def csv_row(self) -> list[str]:
        opt = lambda v: "" if v is None else str(v)
        return [self.suite, opt(self.n), opt(self.p), opt(self.c), opt(self.d),
                opt(self.e), opt(self.seed), self.computed, self.predicted,
                self.verdict.value, str(self.elapsed_ms)]

    def json_obj(self) -> dict:
        return {"suite": self.suite, "param_n": self.n, "param_p": self.p,
                "param_c": self.c, "param_d": self.d, "param_e": self.e,
                "param_seed": self.seed, "computed": self.computed,
                "predicted": self.predicted, "verdict": self.verdict.value,
                "elapsed_ms": self.elapsed_ms}


@dataclass
class CampaignConfig:
    """Grid bounds and run controls for one suite; unset bounds fall back to
    the suite's documented defaults."""

    suite: str
    n_min: int | None = None
    n_max: int | None = None
    p_min: int | None = None
    p_max: int | None = None
    c_min: int | None = None
    c_max: int | None = None
    d_min: int | None = None
    d_max: int | None = None
    trials: int | None = None
    seed: int = 0
    threads: int = 1
    out: str | None = None
    fmt: str = "csv"

    def validate(self) -> None:
        if self.trials is not None and self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown report format {self.fmt!r}")
        for lo_name, hi_name in (("n_min", "n_max"), ("p_min", "p_max"),
                                 ("c_min", "c_max"), ("d_min", "d_max")):
            lo, hi = getattr(self, lo_name), getattr(self, hi_name)
            if lo is not None and hi is not None and lo > hi:
                raise ValueError(f"empty range: {lo_name}={lo} > {hi_name}={hi}")


@dataclass
class ScanSummary:
    part: str
    p_max: int
    checked: int
    divisible: int
    counterexamples: list[int] = field(default_factory=list)


class ReportWriter:
    """Single serialization point for a report; rows are flushed as they are
    written so long campaigns stay inspectable mid-run."""

    def __init__(self, stream: IO[str], fmt: str = "csv", comment: str | None = None):
        if fmt not in ("csv", "json"):
            raise ValueError(f"unknown report format {fmt!r}")
        self.stream = stream
        self.fmt = fmt
        self._first = True
        if fmt == "csv":
            if comment:
                stream.write(f"# {comment}\n")
            self._csv = csv.writer(stream, lineterminator="\n")
            self._csv.writerow(CSV_COLUMNS)
        else:
            stream.write("[")
        stream.flush()

    def write(self, record: VerificationRecord) -> None:
        if self.fmt == "csv":
            self._csv.writerow(record.csv_row())
        else:
            prefix = "\n" if self._first else ",\n"
            self.stream.write(prefix + json.dumps(record.json_obj()))
            self._first = False
        self.stream.flush()

    def close(self) -> None:
        if self.fmt == "json":
            self.stream.write("\n]\n")
            self.stream.flush()


def write_report(records: Sequence[VerificationRecord], stream: IO[str],
                 fmt: str = "csv", comment: str | None = None) -> None:
    writer = ReportWriter(stream, fmt, comment)
    for rec in records:
        writer.write(rec)
    writer.close()


def exit_code_for(records: Sequence[VerificationRecord]) -> int:
    """0 when nothing failed, 1 otherwise (usage errors are raised, not coded)."""
    return 1 if any(r.verdict is Verdict.FAIL for r in records) else 0


def _ms(t0: float) -> int:
    return max(0, round((perf_counter() - t0) * 1000))


def _verdict(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


def _odd_values(lo: int, hi: int) -> range:
    start = lo if lo % 2 else lo + 1
    return range(start, hi + 1, 2)


def _primes_between(lo: int, hi: int) -> list[int]:
    return [p for p in primes_up_to(hi) if p >= lo]


def _run_tasks(tasks: list[Callable[[], VerificationRecord]], threads: int,
               writer: ReportWriter | None = None) -> list[VerificationRecord]:
    records: list[VerificationRecord] = []
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(lambda task: task(), tasks)
            for rec in results:
                records.append(rec)
                if writer:
                    writer.write(rec)
    else:
        for task in tasks:
            rec = task()
            records.append(rec)
            if writer:
                writer.write(rec)
    return records


def run_suite(config: CampaignConfig,
              writer: ReportWriter | None = None) -> list[VerificationRecord]:
    """Run the named suite over its (possibly overridden) grid.

    Unknown suites and empty grids are usage errors.  Identical config and
    seed give identical records apart from the elapsed_ms fields.
    """
    builder = _SUITE_BUILDERS.get(config.suite)
    if builder is None:
        raise ValueError(f"unknown suite {config.suite!r}; choose from {', '.join(SUITES)}")
    config.validate()
    tasks = builder(config)
    if not tasks:
        raise ValueError(f"empty verification grid for suite {config.suite!r}")
    return _run_tasks(tasks, config.threads, writer)


# --- suite: totient-square divisibility of the bracket determinant ---

def _divisibility_grid(config: CampaignConfig):
    n_lo = config.n_min if config.n_min is not None else 3
    n_hi = config.n_max if config.n_max is not None else 105
    c_lo = config.c_min if config.c_min is not None else 0
    c_hi = config.c_max if config.c_max is not None else 4
    for n in _odd_values(max(3, n_lo), n_hi):
        f = factorize(n)
        if not is_squarefree(f):
            continue
        d_lo = config.d_min if config.d_min is not None else 1
        d_hi = min(config.d_max, n) if config.d_max is not None else n
        for c in range(c_lo, c_hi + 1):
            for d in range(d_lo, d_hi + 1):
                if jacobi(d, n) == -1:
                    yield n, c, d, totient(f) ** 2


def _thm_divisibility_tasks(config: CampaignConfig):
    def make(n, c, d, modulus):
        def task():
            t0 = perf_counter()
            value = bracket_cd(c, d, n)
            ok = value % modulus == 0
            return VerificationRecord("thm-divisibility", str(value),
                                      f"divisibility:{modulus}", _verdict(ok),
                                      _ms(t0), n=n, c=c, d=d)
        return task

    return [make(*point) for point in _divisibility_grid(config)]


# --- suite: vanishing of the bracket determinant for non-squarefree n ---

def _lemma_tasks(config: CampaignConfig):
    n_hi = config.n_max if config.n_max is not None else 99
    n_lo = config.n_min if config.n_min is not None else 9
    c_lo = config.c_min if config.c_min is not None else -9
    c_hi = config.c_max if config.c_max is not None else 9
    d_lo = config.d_min if config.d_min is not None else -9
    d_hi = config.d_max if config.d_max is not None else 9
    trials = config.trials if config.trials is not None else 20
    rng = random.Random(config.seed)

    def make(n, c, d):
        def task():
            t0 = perf_counter()
            value = bracket_cd(c, d, n)
            return VerificationRecord("lemma-nonsquarefree", str(value), "zero",
                                      _verdict(value == 0), _ms(t0), n=n, c=c, d=d,
                                      seed=config.seed)
        return task

    tasks = []
    for n in _odd_values(max(3, n_lo), n_hi):
        if is_squarefree(factorize(n)):
            continue
        for _ in range(trials):
            tasks.append(make(n, rng.randint(c_lo, c_hi), rng.randint(d_lo, d_hi)))
    return tasks


# --- suite: closed form for shifted-power determinants ---

def _thm_shift_tasks(config: CampaignConfig):
    p_lo = config.p_min if config.p_min is not None else 5
    p_hi = config.p_max if config.p_max is not None else 17
    trials = config.trials if config.trials is not None else 100
    rng = random.Random(config.seed)

    def make(p, n, coeffs, x):
        def task():
            t0 = perf_counter()
            direct = shifted_power_det_mod_p(coeffs, x, p)
            predicted = shift_closed_form(coeffs, x, p)
            return VerificationRecord("thm-shift", str(direct), str(predicted),
                                      _verdict(direct == predicted), _ms(t0),
                                      n=n, p=p, seed=config.seed)
        return task

    tasks = []
    for p in _primes_between(max(5, p_lo), p_hi):
        cases = sorted({p - 2, p - 1, 3 * (p - 1) // 2, 2 * p - 3})
        for n in cases:
            for _ in range(trials):
                coeffs = [rng.randrange(p) for _ in range(n + 1)]
                tasks.append(make(p, n, coeffs, rng.randrange(p)))
    return tasks


# --- suite: x-independence of det[x + form^n] on the middle exponent range ---

def _x_independence_tasks(config: CampaignConfig):
    p_lo = config.p_min if config.p_min is not None else 5
    p_hi = config.p_max if config.p_max is not None else 13
    c_lo = config.c_min if config.c_min is not None else -9
    c_hi = config.c_max if config.c_max is not None else 9
    d_lo = config.d_min if config.d_min is not None else -9
    d_hi = config.d_max if config.d_max is not None else 9
    trials = config.trials if config.trials is not None else 10
    rng = random.Random(config.seed)

    def make(p, n, c, d):
        def task():
            t0 = perf_counter()
            values = []
            for x in (0, 1, 2):
                fam = FormFamily.shifted(x, c=c, d=d, exponent=n)
                values.append(det_mod_p(shifted_power_matrix(fam, p), p).value)
            ok = values[0] == values[1] == values[2]
            computed = f"x0={values[0]};x1={values[1]};x2={values[2]} (mod {p})"
            return VerificationRecord("cor-x-independence", computed, "x-independent",
                                      _verdict(ok), _ms(t0), p=p, c=c, d=d, e=n,
                                      seed=config.seed)
        return task

    tasks = []
    for p in _primes_between(max(5, p_lo), p_hi):
        for n in range((p + 1) // 2, p - 1):
            assert x_independence_applicable(n, p)
            for _ in range(trials):
                tasks.append(make(p, n, rng.randint(c_lo, c_hi), rng.randint(d_lo, d_hi)))
    return tasks


# --- suite: parity-product closed form for ratio-polynomial determinants ---

def _thm_rational_tasks(config: CampaignConfig):
    p_lo = config.p_min if config.p_min is not None else 5
    p_hi = config.p_max if config.p_max is not None else 23
    trials = config.trials if config.trials is not None else 100
    rng = random.Random(config.seed)

    def make(p, coeffs):
        def task():
            t0 = perf_counter()
            direct = rational_matrix_det_mod_p(coeffs, p)
            predicted = rational_det_closed_form(coeffs, p)
            return VerificationRecord("thm-rational", str(direct), str(predicted),
                                      _verdict(direct == predicted), _ms(t0),
                                      p=p, seed=config.seed)
        return task

    tasks = []
    for p in _primes_between(max(5, p_lo), p_hi):
        for t in range(trials):
            coeffs = [rng.randrange(p) for _ in range(p - 1)]
            if t % 4 == 1:
                # plant zeros so the vanishing hat-products are exercised
                for _ in range(1 + t % 2):
                    coeffs[rng.randrange(p - 1)] = 0
            tasks.append(make(p, coeffs))
    return tasks


# --- suite: case-split prediction for the inner power determinant at (1,1) ---

def _cor_dp11_tasks(config: CampaignConfig):
    p_lo = config.p_min if config.p_min is not None else 5
    p_hi = config.p_max if config.p_max is not None else 200

    def make(p):
        def task():
            t0 = perf_counter()
            direct = power_det_mod_p(FormFamily.power_inner(1, 1, p - 2), p)
            prediction = predict_dp11(p)
            symbol = jacobi(direct.value, p)
            if prediction.case is Dp11Case.TWO_MOD_3:
                ok = direct == prediction.residue and symbol == prediction.symbol
                computed = f"{direct};symbol={symbol}"
                predicted = f"{prediction.residue};symbol={prediction.symbol}"
            elif prediction.case is Dp11Case.SEVEN_MOD_9:
                ok = direct.value == 0
                computed = str(direct)
                predicted = str(prediction.residue)
            else:
                ok = symbol == prediction.symbol
                computed = f"{direct};symbol={symbol}"
                predicted = (f"symbol={prediction.symbol}"
                             f" (sigma1={prediction.sigma1}, sigma2={prediction.sigma2})")
            return VerificationRecord("cor-dp11", computed, predicted, _verdict(ok),
                                      _ms(t0), p=p, c=1, d=1, e=p - 2)
        return task

    return [make(p) for p in _primes_between(max(5, p_lo), p_hi)]


# --- suite: previously published facts about these determinants ---

def _prior_facts_tasks(config: CampaignConfig):
    tasks = []

    def make_paren(n, c, d):
        def task():
            t0 = perf_counter()
            value = paren_cd(c, d, n)
            return VerificationRecord("prior-facts:paren-zero", str(value), "zero",
                                      _verdict(value == 0), _ms(t0), n=n, c=c, d=d)
        return task

    for n, c, d, _ in _divisibility_grid(config):
        tasks.append(make_paren(n, c, d))

    def make_bracket(p, c, d):
        def task():
            t0 = perf_counter()
            value = bracket_cd(c, d, p)
            ok = value % (p - 1) == 0
            return VerificationRecord("prior-facts:bracket-divisor", str(value),
                                      f"divisibility:{p - 1}", _verdict(ok), _ms(t0),
                                      n=p, c=c, d=d)
        return task

    c_lo = config.c_min if config.c_min is not None else 0
    c_hi = config.c_max if config.c_max is not None else 4
    bracket_p_hi = config.p_max if config.p_max is not None else 47
    for p in _primes_between(3, bracket_p_hi):
        for c in range(c_lo, c_hi + 1):
            for d in range(1, p + 1):
                if jacobi(d, p) == 1:
                    tasks.append(make_bracket(p, c, d))

    def make_power(label, kind_builder, p, c, d, e):
        def task():
            t0 = perf_counter()
            value = power_det_mod_p(kind_builder(c, d, e), p)
            return VerificationRecord(label, str(value), f"0 mod {p}",
                                      _verdict(value.value == 0), _ms(t0),
                                      p=p, c=c, d=d, e=e)
        return task

    power_p_hi = min(config.p_max if config.p_max is not None else 31, 31)
    zero_d_lo = config.d_min if config.d_min is not None else 1
    zero_d_hi = config.d_max if config.d_max is not None else 5
    for p in _primes_between(5, power_p_hi):
        for e in range((p + 1) // 2, p - 1):
            for c in range(c_lo, c_hi + 1):
                for d in range(zero_d_lo, zero_d_hi + 1):
                    tasks.append(make_power("prior-facts:power-zero-full",
                                            FormFamily.power_zero_full, p, c, d, e))

    for p in _primes_between(3, power_p_hi):
        for c in range(c_lo, c_hi + 1):
            for d in range(1, p + 1):
                if jacobi(d, p) == -1:
                    for e in range(1, p):
                        tasks.append(make_power("prior-facts:power-full",
                                                FormFamily.power_full, p, c, d, e))
    return tasks


# --- suite: power-sum congruences used by the closed-form proofs ---

def _power_sum_tasks(config: CampaignConfig):
    p_lo = config.p_min if config.p_min is not None else 3
    p_hi = config.p_max if config.p_max is not None else 97

    def make_full(p, k):
        def task():
            t0 = perf_counter()
            total = sum(pow(i, k, p) for i in range(p)) % p
            expected = (p - 1) if (k > 0 and k % (p - 1) == 0) else 0
            return VerificationRecord("power-sums:full-range", f"{total} mod {p}",
                                      f"{expected} mod {p}", _verdict(total == expected),
                                      _ms(t0), p=p, e=k)
        return task

    def make_inner(p, k):
        def task():
            t0 = perf_counter()
            total = sum(pow(i, k, p) for i in range(2, p - 1)) % p
            if k % (p - 1) == 0:
                expected = -3 % p
            elif k % 2 == 0:
                expected = -2 % p
            else:
                expected = 0
            return VerificationRecord("power-sums:inner-range", f"{total} mod {p}",
                                      f"{expected} mod {p}", _verdict(total == expected),
                                      _ms(t0), p=p, e=k)
        return task

    tasks = []
    for p in _primes_between(max(3, p_lo), p_hi):
        for k in range(0, 3 * (p - 1) + 1):
            tasks.append(make_full(p, k))
            tasks.append(make_inner(p, k))
    return tasks


# --- suite: determinant engine properties ---

def _det_cofactor(rows: list[list[int]]) -> int:
    # permutation expansion; practical through dimension 6
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    inner = len(b)
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(len(b[0]))]
            for i in range(len(a))]


def _engines_tasks(config: CampaignConfig):
    trials = config.trials if config.trials is not None else 200
    rng = random.Random(config.seed)
    seed = config.seed
    tasks = []

    def make_agreement(dim, rows):
        def task():
            t0 = perf_counter()
            m = IntMatrix(rows)
            exact = det_exact(m)
            ok = exact == det_exact_crt(m)
            if dim <= 6:
                ok = ok and exact == _det_cofactor(rows)
            for p in (5, 7, 11, 13):
                ok = ok and det_mod_p(m, p).value == exact % p
            return VerificationRecord("engines:agreement", str(exact), "engines-agree",
                                      _verdict(ok), _ms(t0), n=dim, seed=seed)
        return task

    for dim in range(1, 9):
        for _ in range(trials):
            rows = [[rng.randint(-9, 9) for _ in range(dim)] for _ in range(dim)]
            tasks.append(make_agreement(dim, rows))

    def make_multiplicativity(a, b):
        def task():
            t0 = perf_counter()
            lhs = det_exact(IntMatrix(_matmul(a, b)))
            rhs = det_exact(IntMatrix(a)) * det_exact(IntMatrix(b))
            return VerificationRecord("engines:multiplicativity", str(lhs), str(rhs),
                                      _verdict(lhs == rhs), _ms(t0), n=5, seed=seed)
        return task

    for _ in range(20):
        a = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
        b = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
        tasks.append(make_multiplicativity(a, b))

    def make_transpose(dim, rows):
        def task():
            t0 = perf_counter()
            m = IntMatrix(rows)
            lhs = det_exact(m)
            rhs = det_exact(m.transpose())
            return VerificationRecord("engines:transpose", str(lhs), str(rhs),
                                      _verdict(lhs == rhs), _ms(t0), n=dim, seed=seed)
        return task

    for _ in range(20):
        dim = rng.randint(1, 6)
        tasks.append(make_transpose(dim, [[rng.randint(-9, 9) for _ in range(dim)]
                                          for _ in range(dim)]))

    def make_wa(l, m, a, b, lams, p=13):
        def task():
            t0 = perf_counter()
            ab = _matmul(a, b)
            ba = _matmul(b, a)
            matches = 0
            for lam in lams:
                m1 = [[(lam * (i == j) - ab[i][j]) % p for j in range(l)] for i in range(l)]
                m2 = [[(lam * (i == j) - ba[i][j]) % p for j in range(m)] for i in range(m)]
                lhs = pow(lam, m, p) * det_mod_p(IntMatrix(m1), p).value % p
                rhs = pow(lam, l, p) * det_mod_p(IntMatrix(m2), p).value % p
                matches += lhs == rhs
            return VerificationRecord("engines:wa-identity", f"{matches}/{len(lams)}",
                                      f"{len(lams)}/{len(lams)}",
                                      _verdict(matches == len(lams)), _ms(t0),
                                      n=l, p=p, e=m, seed=seed)
        return task

    for l in range(1, 7):
        for m in range(1, 7):
            for _ in range(3):
                a = [[rng.randrange(13) for _ in range(m)] for _ in range(l)]
                b = [[rng.randrange(13) for _ in range(l)] for _ in range(m)]
                lams = [rng.randrange(13) for _ in range(20)]
                tasks.append(make_wa(l, m, a, b, lams))

    def make_poly_grid(n, rows):
        def task():
            t0 = perf_counter()
            lhs, rhs = poly_grid_det_identity(IntMatrix(rows))
            return VerificationRecord("engines:poly-grid", str(lhs), str(rhs),
                                      _verdict(lhs == rhs), _ms(t0), n=n, seed=seed)
        return task

    for n in range(1, 7):
        for _ in range(100):
            tasks.append(make_poly_grid(n, [[rng.randint(-9, 9) for _ in range(n)]
                                            for _ in range(n)]))

    def make_trinomial(p):
        def task():
            t0 = perf_counter()
            coeffs = [r.value for r in trinomial_power_coeffs(p)]
            matches = 0
            for t in range(1, p):
                acc = 0
                for a in reversed(coeffs):
                    acc = (acc * t + a) % p
                matches += acc == pow(t * t + t + 1, p - 2, p)
            return VerificationRecord("engines:trinomial", f"{matches}/{p - 1}",
                                      f"{p - 1}/{p - 1}", _verdict(matches == p - 1),
                                      _ms(t0), p=p)
        return task

    for p in _primes_between(5, 101):
        tasks.append(make_trinomial(p))

    return tasks


_SUITE_BUILDERS = {
    "thm-divisibility": _thm_divisibility_tasks,
    "lemma-nonsquarefree": _lemma_tasks,
    "thm-shift": _thm_shift_tasks,
    "cor-x-independence": _x_independence_tasks,
    "thm-rational": _thm_rational_tasks,
    "cor-dp11": _cor_dp11_tasks,
    "prior-facts": _prior_facts_tasks,
    "power-sums": _power_sum_tasks,
    "engines": _engines_tasks,
}


# --- conjecture scanner (observational; nothing here asserts the claim) ---

_CONJECTURE_PARTS = {
    "i": (2, 2, lambda p: p % 8 == 7),
    "ii": (3, 3, lambda p: p > 5 and p % 3 == 2),
    "iii": (3, 1, lambda p: p > 3 and p % 20 in (3, 7)),
}

DEFAULT_SCAN_P_MAX = 500


def scan_conjecture(part: str, p_max: int = DEFAULT_SCAN_P_MAX,
                    out: str | Path | None = None, *, threads: int = 1,
                    fmt: str = "csv") -> ScanSummary:
    """Scan one conjectured divisibility family up to p_max.

    Part i checks p | inner power determinant at (2,2) for p = 7 (mod 8);
    part ii at (3,3) for p > 5, p = 2 (mod 3); part iii at (3,1) for
    p = 3,7 (mod 20).  Counterexamples are reported, never suppressed, and
    nothing is asserted: the outcome is observational.
    """
    if part not in _CONJECTURE_PARTS:
        raise ValueError(f"unknown conjecture part {part!r}; choose i, ii or iii")
    if p_max < 7:
        raise ValueError(f"p_max must be at least 7, got {p_max}")
    c, d, member = _CONJECTURE_PARTS[part]
    suite = f"conjecture-{part}"

    def make(p):
        def task():
            t0 = perf_counter()
            value = power_det_mod_p(FormFamily.power_inner(c, d, p - 2), p)
            return VerificationRecord(suite, str(value), f"0 mod {p} (conjectured)",
                                      _verdict(value.value == 0), _ms(t0),
                                      p=p, c=c, d=d, e=p - 2)
        return task

    tasks = [make(p) for p in _primes_between(5, p_max) if member(p)]
    comment = (f"conjecture scan part={part} form=(i^2+{c}ij+{d}j^2)^(p-2) "
               f"p_max={p_max} (default {DEFAULT_SCAN_P_MAX})")

    writer = None
    handle = None
    try:
        if out is not None:
            handle = open(out, "w", newline="")
            writer = ReportWriter(handle, fmt, comment)
        records = _run_tasks(tasks, threads, writer)
    finally:
        if writer is not None:
            writer.close()
        if handle is not None:
            handle.close()

    counterexamples = [r.p for r in records if r.verdict is Verdict.FAIL]
    return ScanSummary(part=part, p_max=p_max, checked=len(records),
                       divisible=len(records) - len(counterexamples),
                       counterexamples=counterexamples)
