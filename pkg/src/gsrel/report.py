"""Law-check reports and deterministic seeding shared by every module.

A law check walks a case stream and stops at the first violation.  The
resulting LawReport records how the stream was produced (exhaustive or
sampled), how many cases ran, and, for a failure, a witness that can be
re-evaluated independently of the checker that found it.
"""
from __future__ import annotations

import random
import zlib
from dataclasses import dataclass
from typing import Callable, Iterable

EXHAUSTIVE_PASS = "exhaustive_pass"
SAMPLED_PASS = "sampled_pass"
COUNTEREXAMPLE = "counterexample"

# Primitive-evaluation budget per law; crossing it downgrades exhaustive
# enumeration to a seeded sample.
DEFAULT_BUDGET = 10**6


@dataclass
class LawReport:
    law: str
    status: str
    checks_performed: int
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.status != COUNTEREXAMPLE

    @property
    def exhaustive(self) -> bool:
        return self.status == EXHAUSTIVE_PASS

    def brief(self) -> str:
        tail = "" if self.witness is None else f" witness={self.witness}"
        return f"{self.law}: {self.status} ({self.checks_performed} checks){tail}"


def check_cases(
    law: str,
    cases: Iterable,
    holds: Callable[[object], bool],
    describe: Callable[[object], object] | None = None,
    exhaustive: bool = True,
) -> LawReport:
    """Evaluate `holds` over `cases`, stopping at the first violation."""
    n = 0
    for case in cases:
        n += 1
        if not holds(case):
            witness = describe(case) if describe is not None else _default_witness(case)
            return LawReport(law, COUNTEREXAMPLE, n, witness)
    return LawReport(law, EXHAUSTIVE_PASS if exhaustive else SAMPLED_PASS, n)


def _default_witness(case) -> list:
    items = case if isinstance(case, tuple) else (case,)
    return [repr(x) for x in items]


def derive_rng(seed: int, *tags) -> random.Random:
    """Stable per-site RNG: same seed and tags give the same stream anywhere."""
    key = ":".join(str(t) for t in tags)
    return random.Random((seed * 0x9E3779B1 + zlib.crc32(key.encode("utf-8"))) & 0xFFFFFFFF)
