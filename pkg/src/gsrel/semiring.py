"""Exact semirings: builtin catalog, table-loaded instances, law checks.

A semiring here is (M, add, mul, zero, one) with a commutative additive
monoid, a multiplicative monoid, two-sided distributivity, and zero
annihilating.  All arithmetic is exact: ints for bool/nat/gf(p), Fraction
for the rational carriers, table indices for finite custom instances.
Floats never enter law checking.

Infinite carriers are checked on deterministic seeded samples:
  nat       -> {0..5} plus 8 seeded values <= 100
  rationals -> 12 seeded values with numerator and denominator <= 10
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Mapping

from .report import (
    COUNTEREXAMPLE,
    DEFAULT_BUDGET,
    LawReport,
    check_cases,
    derive_rng,
)


class SemiringError(ValueError):
    pass


class UnknownSemiringError(SemiringError):
    pass


class TableFormatError(SemiringError):
    pass


@dataclass(frozen=True)
class Semiring:
    """Carrier plus exact operations.  Instances are immutable and shareable."""

    name: str
    zero: object
    one: object
    add: Callable[[object, object], object]
    mul: Callable[[object, object], object]
    # Closed-form partial multiplicative inverse; None means "search elements
    # if finite, otherwise no inverse is known" (builtins all supply one).
    inverse: Callable[[object], object] | None = None
    elements: tuple | None = None
    sample_pool: Callable[[object], list] | None = None
    label: Callable[[object], str] = field(default=str)
    parse: Callable[[str], object] = field(default=None)

    @property
    def finite(self) -> bool:
        return self.elements is not None

    def sum(self, values) -> object:
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def sample_elements(self, rng) -> list:
        if self.elements is not None:
            return list(self.elements)
        return self.sample_pool(rng)

    def __repr__(self) -> str:
        return f"Semiring({self.name!r})"


def mul_inverse(sr: Semiring, a):
    """Two-sided multiplicative inverse of a, or None if there is none."""
    if sr.inverse is not None:
        m = sr.inverse(a)
        if m is None:
            return None
        if sr.mul(a, m) == sr.one and sr.mul(m, a) == sr.one:
            return m
        raise SemiringError(f"{sr.name}: inverse({sr.label(a)}) failed verification")
    if sr.elements is not None:
        for m in sr.elements:
            if sr.mul(a, m) == sr.one and sr.mul(m, a) == sr.one:
                return m
        return None
    return None


# ---------------------------------------------------------------------------
# builtin catalog


def _make_bool() -> Semiring:
    return Semiring(
        name="bool",
        zero=0,
        one=1,
        add=lambda a, b: a | b,
        mul=lambda a, b: a & b,
        inverse=lambda a: 1 if a == 1 else None,
        elements=(0, 1),
        label=str,
        parse=_parse_bool,
    )


def _parse_bool(s: str) -> int:
    v = int(s)
    if v not in (0, 1):
        raise SemiringError(f"bool label out of range: {s!r}")
    return v


def _nat_pool(rng) -> list:
    return list(range(6)) + [rng.randint(0, 100) for _ in range(8)]


def _make_nat() -> Semiring:
    return Semiring(
        name="nat",
        zero=0,
        one=1,
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        inverse=lambda a: 1 if a == 1 else None,
        sample_pool=_nat_pool,
        label=str,
        parse=_parse_nat,
    )


def _parse_nat(s: str) -> int:
    v = int(s)
    if v < 0:
        raise SemiringError(f"nat label is negative: {s!r}")
    return v


def _rational_pool(rng) -> list:
    return [Fraction(rng.randint(0, 10), rng.randint(1, 10)) for _ in range(12)]


def _parse_nonneg_rational(s: str) -> Fraction:
    v = Fraction(s)
    if v < 0:
        raise SemiringError(f"nonneg-rational label is negative: {s!r}")
    return v


def _make_nonneg_rational() -> Semiring:
    return Semiring(
        name="nonneg-rational",
        zero=Fraction(0),
        one=Fraction(1),
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        inverse=lambda a: None if a == 0 else Fraction(1) / a,
        sample_pool=_rational_pool,
        label=str,
        parse=_parse_nonneg_rational,
    )


def _unit_interval_pool(rng) -> list:
    out = []
    for _ in range(12):
        den = rng.randint(1, 10)
        out.append(Fraction(rng.randint(0, den), den))
    return out


def _parse_unit_rational(s: str) -> Fraction:
    v = Fraction(s)
    if not 0 <= v <= 1:
        raise SemiringError(f"label outside [0,1]: {s!r}")
    return v


def _make_fuzzy_max_min() -> Semiring:
    # min(a, m) = 1 forces a = m = 1, so 1 is the only invertible element.
    return Semiring(
        name="fuzzy-max-min",
        zero=Fraction(0),
        one=Fraction(1),
        add=max,
        mul=min,
        inverse=lambda a: Fraction(1) if a == 1 else None,
        sample_pool=_unit_interval_pool,
        label=str,
        parse=_parse_unit_rational,
    )


def _make_fuzzy_max_times() -> Semiring:
    # a * m = 1 with both in [0,1] forces a = m = 1.
    return Semiring(
        name="fuzzy-max-times",
        zero=Fraction(0),
        one=Fraction(1),
        add=max,
        mul=lambda a, b: a * b,
        inverse=lambda a: Fraction(1) if a == 1 else None,
        sample_pool=_unit_interval_pool,
        label=str,
        parse=_parse_unit_rational,
    )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _make_gf(p: int) -> Semiring:
    if not _is_prime(p):
        raise UnknownSemiringError(f"gf({p}): modulus must be prime")

    def parse(s: str) -> int:
        v = int(s)
        if not 0 <= v < p:
            raise SemiringError(f"gf({p}) label out of range: {s!r}")
        return v

    return Semiring(
        name=f"gf({p})",
        zero=0,
        one=1 % p,
        add=lambda a, b: (a + b) % p,
        mul=lambda a, b: (a * b) % p,
        inverse=lambda a: pow(a, p - 2, p) if a % p else None,
        elements=tuple(range(p)),
        label=str,
        parse=parse,
    )


def load_table_semiring(doc: Mapping) -> Semiring:
    """Build a finite semiring from a table document.

    Schema: {"elements": [labels], "plus": n x n label table,
    "times": n x n label table, "zero": label, "one": label}.
    Structural validation only (shapes, label uniqueness, closure); axioms
    are the job of check_semiring_laws.
    """
    for key in ("elements", "plus", "times", "zero", "one"):
        if key not in doc:
            raise TableFormatError(f"table document missing field {key!r}")
    labels = list(doc["elements"])
    if not labels:
        raise TableFormatError("table document has no elements")
    if any(not isinstance(l, str) for l in labels):
        raise TableFormatError("element labels must be strings")
    if len(set(labels)) != len(labels):
        raise TableFormatError("element labels are not distinct")
    n = len(labels)
    index = {l: i for i, l in enumerate(labels)}

    def read_table(key: str):
        rows = doc[key]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise TableFormatError(f"{key!r} table is not {n}x{n}")
        out = []
        for r in rows:
            line = []
            for entry in r:
                if entry not in index:
                    raise TableFormatError(
                        f"{key!r} table entry {entry!r} is not an element; operation not closed"
                    )
                line.append(index[entry])
            out.append(tuple(line))
        return tuple(out)

    plus = read_table("plus")
    times = read_table("times")
    for key, lab in (("zero", doc["zero"]), ("one", doc["one"])):
        if lab not in index:
            raise TableFormatError(f"{key!r} label {lab!r} is not an element")

    def parse(s: str) -> int:
        if s not in index:
            raise SemiringError(f"unknown table element label {s!r}")
        return index[s]

    return Semiring(
        name=str(doc.get("name", "table")),
        zero=index[doc["zero"]],
        one=index[doc["one"]],
        add=lambda a, b: plus[a][b],
        mul=lambda a, b: times[a][b],
        inverse=None,
        elements=tuple(range(n)),
        label=lambda i: labels[i],
        parse=parse,
    )


_BUILTINS: dict[str, Callable[[], Semiring]] = {
    "bool": _make_bool,
    "nat": _make_nat,
    "nonneg-rational": _make_nonneg_rational,
    "fuzzy-max-min": _make_fuzzy_max_min,
    "fuzzy-max-times": _make_fuzzy_max_times,
}

_ALIASES = {
    "q+": "nonneg-rational",
    "nonneg_rational": "nonneg-rational",
    "boolean": "bool",
}

_GF_RE = re.compile(r"^gf\((\d+)\)$")

# Default catalog used by the taxonomy suite.
CATALOG = ("bool", "nat", "nonneg-rational", "fuzzy-max-min", "fuzzy-max-times", "gf(2)")


def load_semiring(spec) -> Semiring:
    """Resolve a builtin name, a gf(p) spec, or a table document."""
    if isinstance(spec, Semiring):
        return spec
    if isinstance(spec, str):
        name = _ALIASES.get(spec.strip(), spec.strip())
        gf = _GF_RE.match(name)
        if gf:
            return _make_gf(int(gf.group(1)))
        if name in _BUILTINS:
            return _BUILTINS[name]()
        raise UnknownSemiringError(f"unknown semiring {spec!r}")
    if isinstance(spec, Mapping):
        return load_table_semiring(spec)
    raise SemiringError(f"cannot load a semiring from {type(spec).__name__}")


# ---------------------------------------------------------------------------
# law checking and classification


def _carrier(sr: Semiring, seed: int) -> tuple[list, bool]:
    """Sample set plus whether it is the whole carrier."""
    if sr.finite:
        return list(sr.elements), True
    pool = sr.sample_elements(derive_rng(seed, "carrier", sr.name))
    extra = [v for v in (sr.zero, sr.one) if v not in pool]
    return pool + extra, False


def check_semiring_laws(sr: Semiring, budget: int = DEFAULT_BUDGET, seed: int = 0) -> list[LawReport]:
    """Check the semiring axioms; one LawReport per axiom."""
    xs, full = _carrier(sr, seed)
    exhaustive = full and len(xs) ** 3 <= budget
    if full and not exhaustive:
        rng = derive_rng(seed, "laws", sr.name)
        xs = [rng.choice(xs) for _ in range(max(2, round(budget ** (1 / 3))))]
    lab = sr.label

    def over(k: int):
        return product(xs, repeat=k)

    def rep(law, arity, holds):
        return check_cases(
            law,
            over(arity),
            holds,
            describe=lambda t: [lab(v) for v in t],
            exhaustive=exhaustive,
        )

    add, mul, zero, one = sr.add, sr.mul, sr.zero, sr.one
    return [
        rep("semiring/add-assoc", 3, lambda t: add(add(t[0], t[1]), t[2]) == add(t[0], add(t[1], t[2]))),
        rep("semiring/add-comm", 2, lambda t: add(t[0], t[1]) == add(t[1], t[0])),
        rep("semiring/add-unit", 1, lambda t: add(zero, t[0]) == t[0] == add(t[0], zero)),
        rep("semiring/mul-assoc", 3, lambda t: mul(mul(t[0], t[1]), t[2]) == mul(t[0], mul(t[1], t[2]))),
        rep("semiring/mul-unit", 1, lambda t: mul(one, t[0]) == t[0] == mul(t[0], one)),
        rep("semiring/distrib-left", 3, lambda t: mul(t[0], add(t[1], t[2])) == add(mul(t[0], t[1]), mul(t[0], t[2]))),
        rep("semiring/distrib-right", 3, lambda t: mul(add(t[0], t[1]), t[2]) == add(mul(t[0], t[2]), mul(t[1], t[2]))),
        rep("semiring/annihilation", 1, lambda t: mul(zero, t[0]) == zero == mul(t[0], zero)),
    ]


@dataclass
class SemiringProfile:
    mult_idempotent: bool
    absorptive: bool
    distributive_lattice: bool
    semifield: bool
    reports: dict[str, LawReport]

    def flags(self) -> dict[str, bool]:
        return {
            "mult_idempotent": self.mult_idempotent,
            "absorptive": self.absorptive,
            "distributive_lattice": self.distributive_lattice,
            "semifield": self.semifield,
        }


def classify_semiring(sr: Semiring, budget: int = DEFAULT_BUDGET, seed: int = 0) -> SemiringProfile:
    """Decide the classification flags on the carrier or its seeded sample.

    A counterexample settles a flag negatively for good; a pass on an
    infinite carrier is recorded as sampled, never as exhaustive.
    """
    xs, full = _carrier(sr, seed)
    exhaustive = full and len(xs) ** 2 <= budget
    add, mul, lab = sr.add, sr.mul, sr.label

    def rep(law, arity, holds):
        return check_cases(
            law,
            product(xs, repeat=arity),
            holds,
            describe=lambda t: [lab(v) for v in t],
            exhaustive=exhaustive,
        )

    reports = {
        "mult_idempotent": rep("classify/mult-idempotent", 1, lambda t: mul(t[0], t[0]) == t[0]),
        "absorptive": rep("classify/absorptive", 2, lambda t: mul(t[0], add(t[0], t[1])) == t[0]),
        "distributive_lattice": rep(
            "classify/distributive-lattice",
            2,
            lambda t: mul(t[0], t[0]) == t[0]
            and add(t[0], t[0]) == t[0]
            and mul(t[0], add(t[0], t[1])) == t[0]
            and add(t[0], mul(t[0], t[1])) == t[0],
        ),
        "semifield": rep(
            "classify/semifield",
            1,
            lambda t: t[0] == sr.zero or mul_inverse(sr, t[0]) is not None,
        ),
    }
    return SemiringProfile(
        mult_idempotent=reports["mult_idempotent"].passed,
        absorptive=reports["absorptive"].passed,
        distributive_lattice=reports["distributive_lattice"].passed,
        semifield=reports["semifield"].passed,
        reports=reports,
    )
