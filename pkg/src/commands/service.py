"""Reproduction runs: tables of a_k, the invariant suite, plot data and
witness reports, built on the section services.
"""

import json
import logging
import math
from collections.abc import Callable, Iterable
from functools import partial
from typing import Optional

from ..classes.service import fast_c1, min_class_index
from ..constructions.enums import ConstructionName, RepresentationEngine
from ..constructions.schemas import C1ClosedForm, ClassClosedForm, MersenneWitness, WitnessReport
from ..constructions.service import (
    c1_closed_form,
    class_closed_form,
    euler_construction,
    lemma2_report,
    mersenne_value,
    prime_power_formula,
    thm33_multiple,
)
from ..dependencies import worker_map
from ..exceptions import InvalidArgumentError, VerificationError
from ..minsolve.service import minimal_niven
from ..modarith.service import ceil_log2, q_adic_valuation
from ..natdigits.service import digit_sum, parse_natural, render_natural
from .cache import ResultCache, make_entry
from .schemas import (
    CacheEntry,
    ClassRow,
    ComputeRow,
    Figure1Row,
    VerificationCheck,
    VerificationReport,
    WitnessOutput,
)


LN2 = math.log(2)


def solve_entry(q: int, state_cap: Optional[int], k: int) -> CacheEntry:
    """Worker entry point: a_k for one k."""
    return make_entry(minimal_niven(q, k, state_cap=state_cap))


def ln_natural(n: int) -> float:
    """Natural log of a positive integer of any size, to double precision."""
    shift = max(n.bit_length() - 64, 0)
    return math.log(n >> shift) + shift * LN2


class ReproductionService:
    """Runs the commands of one base against an optional result cache."""

    def __init__(
        self,
        q: int,
        cache: Optional[ResultCache] = None,
        state_cap: Optional[int] = None,
        threads: Optional[int] = None,
    ):
        self.q = q
        self.cache = cache
        self.state_cap = state_cap
        self.threads = threads
        self.cache_hits = 0

    def entries(self, ks: Iterable[int], recheck: bool = False) -> list[CacheEntry]:
        """a_k for every k, from the cache where possible, in ascending k.

        Solved values are appended to the cache by this process only; with
        `recheck`, cached values are recomputed and compared.

        Raises:
            CacheCorruptionError: A recomputed value disagrees with the cache.
            StateLimitExceededError: A solver call exceeds the state cap.
        """
        ks = sorted(set(ks))
        found: dict[int, CacheEntry] = {}
        if self.cache is not None and not recheck:
            for k in ks:
                cached = self.cache.get(k)
                if cached is not None:
                    found[k] = cached
        self.cache_hits = len(found)

        missing = [k for k in ks if k not in found]
        solved = worker_map(partial(solve_entry, self.q, self.state_cap), missing, threads=self.threads)
        for entry in solved:
            if self.cache is not None:
                self.cache.record(entry)
            found[entry.k] = entry
        logging.info(
            json.dumps(
                {"message": "entries", "q": self.q, "count": len(ks), "solved": len(missing), "cached": self.cache_hits}
            )
        )
        return [found[k] for k in ks]

    def compute(self, ks: Iterable[int], recheck: bool = False) -> list[ComputeRow]:
        return [
            ComputeRow(k=e.k, a_k=parse_natural(e.a_k), c_k=parse_natural(e.c_k), digit_len=e.length)
            for e in self.entries(ks, recheck=recheck)
        ]

    def figure1(self, k_max: int) -> list[Figure1Row]:
        """ln c_k against k ln 2 and the lower bound ln(2^k - 1) - ln k."""
        if self.q != 2:
            raise InvalidArgumentError("figure1 data is defined for base 2 only")
        return [
            Figure1Row(
                k=row.k,
                ln_c_k=ln_natural(row.c_k),
                k_ln_2=row.k * LN2,
                ln_lower_bound=ln_natural((1 << row.k) - 1) - math.log(row.k),
            )
            for row in self.compute(range(1, k_max + 1))
        ]

    def class_row(self, k: int) -> ClassRow:
        """Minimal class index of k next to the bit length of a_k it predicts."""
        record = min_class_index(k)
        (row,) = self.compute([k])
        return ClassRow(
            k=k,
            m_min=record.m_min,
            target=record.witness.target,
            exponents=" ".join(map(str, record.witness.exponents)),
            bit_length_a_k=row.a_k.bit_length(),
        )

    def verify(self, k_max: int) -> VerificationReport:
        """Recomputes a_1 .. a_k_max and runs every applicable check.

        Cached values take part in the `cache_coherence` check; a mismatch
        aborts the run with `CacheCorruptionError`.
        """
        ks = range(1, k_max + 1)
        cached = 0
        if self.cache is not None:
            cached = sum(1 for k in ks if self.cache.get(k) is not None)
        values = {row.k: row.a_k for row in self.compute(ks, recheck=True)}

        checks = [
            self._check("solver_conditions", ks, lambda k: values[k] % k == 0 and digit_sum(values[k], self.q) == k),
            self._check("congruence_mod_q_minus_1", ks, lambda k: (values[k] - k) % (self.q - 1) == 0),
            self._check(
                "prime_power_formula",
                [self.q**m for m in range(k_max.bit_length()) if self.q**m <= k_max],
                lambda k: prime_power_formula(self.q, q_adic_valuation(k, self.q)).value == values[k],
            ),
            self._check("euler_not_smaller", ks, lambda k: euler_construction(self.q, k).value >= values[k]),
        ]
        if self.q == 2:
            odd = range(3, k_max + 1, 2)
            checks += [
                self._check("size_bounds", ks, lambda k: _within_size_bounds(k, values[k])),
                self._check(
                    "power_of_two_equality",
                    [1 << m for m in range(1, k_max.bit_length())],
                    lambda k: values[k] == (1 << (k + ceil_log2(k))) - k,
                ),
                self._check("c1_closed_form", [k for k in odd if fast_c1(k)], lambda k: c1_closed_form(k).value == values[k]),
                self._check(
                    "class_bridge",
                    odd,
                    lambda k: min_class_index(k).m_min == values[k].bit_length() - k,
                ),
                self._check("class_closed_form", odd, lambda k: class_closed_form(k).value == values[k]),
                self._check(
                    "mersenne",
                    [(1 << i) - 1 for i in range(2, k_max.bit_length() + 1) if (1 << i) - 1 <= k_max],
                    lambda k: _mersenne_agrees(k.bit_length(), values[k]),
                ),
            ]
        checks.append(
            VerificationCheck(
                name="cache_coherence",
                passed=True,
                checked=cached,
                detail="recomputed values match the cache" if cached else "nothing cached",
            )
        )

        failed = [check.name for check in checks if not check.passed]
        message = "There are some issues" if failed else "OK"
        report = VerificationReport(message=message, base=self.q, k_max=k_max, checks=checks)
        if failed:
            logging.warning(json.dumps({"message": message, "base": self.q, "k_max": k_max, "failed": failed}, indent=4))
        return report

    def _check(self, name: str, items: Iterable[int], predicate: Callable[[int], bool]) -> VerificationCheck:
        checked = 0
        failures = []
        for item in items:
            checked += 1
            try:
                ok = predicate(item)
            except VerificationError as e:
                logging.warning(json.dumps({"message": "check raised", "check": name, "k": item, "error": str(e)}))
                ok = False
            if not ok:
                failures.append(item)
        return VerificationCheck(
            name=name,
            passed=not failures,
            checked=checked,
            failures=failures,
            detail="" if not failures else f"failed for {len(failures)} of {checked}",
        )


def _within_size_bounds(k: int, value: int) -> bool:
    mu = q_adic_valuation(k, 2)
    return (1 << k) - 1 <= value <= (1 << (k + ceil_log2(k))) - (1 << mu)


def _mersenne_agrees(i: int, value: int) -> bool:
    witness = mersenne_value(i)
    if witness.is_tight:
        return witness.value == value
    return witness.value >= value


def build_witness(
    name: ConstructionName,
    q: int = 2,
    k: Optional[int] = None,
    m: Optional[int] = None,
    i: Optional[int] = None,
    x: Optional[int] = None,
    ell: int = 1,
    engine: RepresentationEngine = RepresentationEngine.CONSTRUCTIVE,
) -> WitnessReport:
    """Dispatches a witness request to its construction."""
    builders: dict[ConstructionName, Callable[[], WitnessReport]] = {
        ConstructionName.EULER: lambda: euler_construction(q, k),  # type: ignore[arg-type]
        ConstructionName.THM33: lambda: thm33_multiple(k, ell),  # type: ignore[arg-type]
        ConstructionName.C1: lambda: c1_closed_form(k),  # type: ignore[arg-type]
        ConstructionName.CM: lambda: class_closed_form(k),  # type: ignore[arg-type]
        ConstructionName.MERSENNE: lambda: mersenne_value(i),  # type: ignore[arg-type]
        ConstructionName.PRIME_POWER: lambda: prime_power_formula(q, m),  # type: ignore[arg-type]
        ConstructionName.LEMMA2: lambda: lemma2_report(k, x, engine),  # type: ignore[arg-type]
    }
    return builders[name]()


def witness_output(report: WitnessReport, hexadecimal: bool = False) -> WitnessOutput:
    extra: dict = {}
    if isinstance(report, C1ClosedForm):
        extra = {"order": report.order, "j0": report.j0, "s": report.s, "j1": report.j1}
    elif isinstance(report, ClassClosedForm):
        extra = {"class_index": report.class_index, "exponents": list(report.witness.exponents)}
    elif isinstance(report, MersenneWitness):
        extra = {"i": report.i, "k": report.k, "k_minus": report.k_minus, "is_tight": report.is_tight}
    return WitnessOutput(
        construction=report.construction.value,
        parameters=report.parameters,
        base=report.base,
        modulus=report.modulus,
        digit_sum_target=report.digit_sum_target,
        value=render_natural(report.value, hexadecimal),
        binary=format(report.value, "b") if report.base == 2 else None,
        quotient=None if report.quotient is None else render_natural(report.quotient, hexadecimal),
        bound=None if report.bound is None else render_natural(report.bound, hexadecimal),
        verified_divisibility=report.verified_divisibility,
        verified_digit_sum=report.verified_digit_sum,
        verified_bound=report.verified_bound,
        extra=extra,
        notes=report.notes,
    )


def render_witness(output: WitnessOutput) -> str:
    """Plain `key: value` lines."""
    lines = [f"construction: {output.construction}"]
    lines += [f"{key}: {value}" for key, value in output.parameters.items()]
    lines.append(f"value: {output.value}")
    if output.binary is not None:
        lines.append(f"binary: {output.binary}")
    if output.quotient is not None:
        lines.append(f"quotient: {output.quotient}")
    if output.bound is not None:
        lines.append(f"bound: {output.bound}")
    for key, value in output.extra.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, list):
            value = " ".join(map(str, value))
        lines.append(f"{key}: {value}")
    if output.verified_divisibility is not None:
        lines.append(f"divisible: {str(output.verified_divisibility).lower()}")
    lines.append(f"digit_sum: {str(output.verified_digit_sum).lower()}")
    if output.verified_bound is not None:
        lines.append(f"within_bound: {str(output.verified_bound).lower()}")
    if output.notes:
        lines.append(f"notes: {output.notes}")
    return "\n".join(lines) + "\n"
