"""Finite-support weight maps and their monad structure.

A WeightMap assigns semiring values to finitely many keys.  Keys are flat
tuples of component indices when the map lives over a word of finite sets
(the unit word is empty, its single element is the empty tuple), and nested
WeightMap instances when the map lives over a space of maps.  Canonical
form stores no zero values and sorts entries, so equality and hashing are
structural.

The monad operations:
  wm_eta(x)            = {x: 1}
  wm_pushforward(f, h) = y -> sum of h(x) over f(x) = y
  wm_mu(H)             = x -> sum over inner maps h of H(h) * h(x)
  wm_psi(h, k)         = (x, y) -> h(x) * k(y), keys concatenated
  wm_total(h)          = sum of all values

Sub-family membership (wm_classify):
  Mr: at most one support key and every value v has v*v = v
  Ma: total = 1
  Mm: t*t = t for t = total
  Md: h(x)*t = h(x) for every support key
  Mi: nonempty support and every value has a multiplicative inverse
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .report import derive_rng
from .semiring import Semiring, mul_inverse

VARIANTS = ("M", "Mr", "Ma", "Mm", "Md", "Mi")


class WeightMapError(ValueError):
    pass


@dataclass(frozen=True)
class FinSet:
    """Finite set with indexed elements 0..size-1 and optional print labels."""

    name: str
    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 0:
            raise WeightMapError(f"{self.name}: negative size")
        if self.labels is not None:
            if len(self.labels) != self.size:
                raise WeightMapError(f"{self.name}: {len(self.labels)} labels for size {self.size}")
            if len(set(self.labels)) != self.size:
                raise WeightMapError(f"{self.name}: labels are not distinct")

    def label_of(self, i: int) -> str:
        if not 0 <= i < self.size:
            raise WeightMapError(f"{self.name}: index {i} out of range")
        return self.labels[i] if self.labels is not None else str(i)

    def index_of(self, label: str) -> int:
        if self.labels is not None:
            try:
                return self.labels.index(label)
            except ValueError:
                raise WeightMapError(f"{self.name}: unknown label {label!r}") from None
        i = int(label)
        if not 0 <= i < self.size:
            raise WeightMapError(f"{self.name}: label {label!r} out of range")
        return i


# A word is a plain tuple of FinSets; the empty word is the monoidal unit,
# whose product has exactly one element, the empty tuple.
Word = tuple


def word_elements(word: Word):
    return product(*(range(s.size) for s in word))


def word_size(word: Word) -> int:
    n = 1
    for s in word:
        n *= s.size
    return n


def word_contains(word: Word, key) -> bool:
    if not isinstance(key, tuple) or len(key) != len(word):
        return False
    return all(isinstance(i, int) and 0 <= i < s.size for i, s in zip(key, word))


def word_labels(word: Word, key: tuple) -> list[str]:
    return [s.label_of(i) for s, i in zip(word, key)]


def _sort_token(key):
    """Total order token across the key kinds that share a space."""
    if isinstance(key, WeightMap):
        return (2, tuple((_sort_token(k), repr(v)) for k, v in key.entries))
    if isinstance(key, tuple):
        return (1, tuple(_sort_token(k) for k in key))
    if isinstance(key, int):
        return (0, key)
    return (0, repr(key))


class WeightMap:
    """Immutable canonical finite-support map; see the module docstring."""

    __slots__ = ("entries", "_index", "_hash")

    def __init__(self, sr: Semiring, items):
        pairs = items.items() if hasattr(items, "items") else items
        kept = {}
        for k, v in pairs:
            if k in kept:
                raise WeightMapError(f"duplicate key {k!r}")
            if v != sr.zero:
                kept[k] = v
        entries = tuple(sorted(kept.items(), key=lambda kv: _sort_token(kv[0])))
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_index", dict(entries))
        object.__setattr__(self, "_hash", hash(entries))

    def __setattr__(self, *_):
        raise AttributeError("WeightMap is immutable")

    def value(self, sr: Semiring, key):
        return self._index.get(key, sr.zero)

    @property
    def support(self) -> tuple:
        return tuple(k for k, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightMap) and self.entries == other.entries

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{k!r}: {v!r}" for k, v in self.entries)
        return "WeightMap({%s})" % inner


def wm_make(sr: Semiring, items) -> WeightMap:
    return WeightMap(sr, items)


def wm_empty(sr: Semiring) -> WeightMap:
    return WeightMap(sr, {})


def wm_eta(sr: Semiring, key) -> WeightMap:
    """Unit: the one-point map {key: 1}."""
    return WeightMap(sr, {key: sr.one})


def wm_psi0(sr: Semiring) -> WeightMap:
    """Unit-word pairing constant: {(): 1}."""
    return wm_eta(sr, ())


def wm_total(sr: Semiring, h: WeightMap):
    return sr.sum(v for _, v in h.entries)


def wm_pushforward(sr: Semiring, f, h: WeightMap, cod: Word | None = None) -> WeightMap:
    """Image of h along the function f, summing over fibers."""
    acc: dict = {}
    for k, v in h.entries:
        y = f(k)
        if cod is not None and not word_contains(cod, y):
            raise WeightMapError(f"pushforward target {y!r} outside the declared word")
        acc[y] = sr.add(acc[y], v) if y in acc else v
    return WeightMap(sr, acc)


def _as_tuple(key) -> tuple:
    return key if isinstance(key, tuple) else (key,)


def wm_psi(sr: Semiring, h: WeightMap, k: WeightMap) -> WeightMap:
    """Pairing: value at joined key is the product of the component values."""
    acc = {}
    for x, v in h.entries:
        for y, w in k.entries:
            acc[_as_tuple(x) + _as_tuple(y)] = sr.mul(v, w)
    return WeightMap(sr, acc)


def wm_mu(sr: Semiring, H: WeightMap) -> WeightMap:
    """Flattening: keys of H must themselves be WeightMaps."""
    acc: dict = {}
    for g, w in H.entries:
        if not isinstance(g, WeightMap):
            raise WeightMapError("wm_mu: outer keys must be WeightMaps")
        for x, v in g.entries:
            term = sr.mul(w, v)
            acc[x] = sr.add(acc[x], term) if x in acc else term
    return WeightMap(sr, acc)


def wm_antipode(sr: Semiring, h: WeightMap) -> WeightMap:
    """Inverse scalar map over the unit word: {(): v} -> {(): v^-1}."""
    if h.support != ((),):
        raise WeightMapError("antipode expects a single entry at the unit-word element")
    v = h.entries[0][1]
    inv = mul_inverse(sr, v)
    if inv is None:
        raise WeightMapError(f"value {sr.label(v)} has no multiplicative inverse in {sr.name}")
    return WeightMap(sr, {(): inv})


# ---------------------------------------------------------------------------
# sub-family membership


@dataclass(frozen=True)
class MapFlags:
    in_Mr: bool
    in_Ma: bool
    in_Mm: bool
    in_Md: bool
    in_Mi: bool

    def member(self, variant: str) -> bool:
        if variant == "M":
            return True
        return getattr(self, f"in_{variant}")


def wm_classify(sr: Semiring, h: WeightMap) -> MapFlags:
    t = wm_total(sr, h)
    values = [v for _, v in h.entries]
    return MapFlags(
        in_Mr=len(values) <= 1 and all(sr.mul(v, v) == v for v in values),
        in_Ma=t == sr.one,
        in_Mm=sr.mul(t, t) == t,
        in_Md=all(sr.mul(v, t) == v for v in values),
        in_Mi=bool(values) and all(mul_inverse(sr, v) is not None for v in values),
    )


def in_variant(sr: Semiring, h: WeightMap, variant: str) -> bool:
    if variant not in VARIANTS:
        raise WeightMapError(f"unknown variant {variant!r}")
    return wm_classify(sr, h).member(variant)


# ---------------------------------------------------------------------------
# enumeration and sampling


def enumerate_maps(sr: Semiring, word: Word, variant: str = "M") -> list[WeightMap]:
    """Every weight map over the word, filtered to the variant.

    Requires a finite carrier; deterministic order (value tuples in carrier
    order over elements in lexicographic order).
    """
    if not sr.finite:
        raise WeightMapError(f"{sr.name}: carrier is not enumerable; use sample_maps")
    keys = list(word_elements(word))
    out = []
    for values in product(sr.elements, repeat=len(keys)):
        h = WeightMap(sr, dict(zip(keys, values)))
        if in_variant(sr, h, variant):
            out.append(h)
    return _dedup(out)


def sample_maps(
    sr: Semiring,
    word: Word,
    variant: str,
    seed: int,
    n: int,
    tag: str = "maps",
) -> list[WeightMap]:
    """Deterministic seeded sample of variant members over the word.

    Seeds the stream with small targeted shapes (empty map, unit-valued and
    doubled-unit point maps, rescaled and max-normalized random maps) so
    that the common membership patterns appear even when random draws
    would miss them; membership is always re-checked, never assumed.
    """
    # Small finite map spaces are enumerated outright; anything bigger falls
    # through to the seeded stream below, which works for finite carriers too.
    if sr.finite and len(sr.elements) ** max(1, word_size(word)) <= 4096:
        pool = enumerate_maps(sr, word, variant)
        return pool[:n]
    rng = derive_rng(seed, "sample-maps", sr.name, variant, tag, _word_tag(word), n)
    keys = list(word_elements(word))
    values = [v for v in sr.sample_elements(rng) if v != sr.zero]
    two = sr.add(sr.one, sr.one)
    candidates: list[WeightMap] = [wm_empty(sr)]
    if keys:
        candidates.append(wm_eta(sr, keys[0]))
        candidates.append(WeightMap(sr, {keys[0]: two}))
        for k in keys[1:]:
            candidates.append(wm_eta(sr, k))
        candidates.append(WeightMap(sr, {k: sr.one for k in keys}))
        for v in values[:4]:
            candidates.append(WeightMap(sr, {keys[0]: v}))
    for _ in range(6 * n):
        if not keys:
            break
        support = [k for k in keys if rng.random() < 0.6] or [rng.choice(keys)]
        picked = {k: rng.choice(values) for k in support} if values else {}
        if not picked:
            break
        candidates.append(WeightMap(sr, picked))
        # Rescale by the inverse of the total when one exists, to land on
        # normalized members; otherwise force the first value to one.
        h = WeightMap(sr, picked)
        t = wm_total(sr, h)
        inv = mul_inverse(sr, t) if t != sr.zero else None
        if inv is not None:
            candidates.append(WeightMap(sr, {k: sr.mul(v, inv) for k, v in picked.items()}))
        first = support[0]
        forced = dict(picked)
        forced[first] = sr.one
        candidates.append(WeightMap(sr, forced))
    out = [h for h in _dedup(candidates) if in_variant(sr, h, variant)]
    return out[:n]


def variant_maps(
    sr: Semiring, word: Word, variant: str, seed: int, n: int, tag: str = "maps"
) -> tuple[list[WeightMap], bool]:
    """Variant members over the word plus an exhaustiveness marker."""
    if sr.finite and len(sr.elements) ** max(1, word_size(word)) <= 4096:
        return enumerate_maps(sr, word, variant), True
    return sample_maps(sr, word, variant, seed, n, tag), False


def _dedup(maps: list[WeightMap]) -> list[WeightMap]:
    seen = set()
    out = []
    for h in maps:
        if h not in seen:
            seen.add(h)
            out.append(h)
    return out


def _word_tag(word: Word) -> str:
    return ",".join(f"{s.name}:{s.size}" for s in word)


# ---------------------------------------------------------------------------
# rendering for witnesses and reports


def render_map(sr: Semiring, h: WeightMap, word: Word | None = None) -> dict:
    """JSON-able description of a weight map; nested maps recurse."""
    entries = []
    for k, v in h.entries:
        if isinstance(k, WeightMap):
            key_doc = render_map(sr, k)
        elif word is not None and word_contains(word, k):
            key_doc = word_labels(word, k)
        else:
            key_doc = [render_key_part(p, sr) for p in _as_tuple(k)] if isinstance(k, tuple) else repr(k)
        entries.append({"key": key_doc, "value": sr.label(v)})
    return {"map": entries}


def render_key_part(part, sr: Semiring):
    if isinstance(part, WeightMap):
        return render_map(sr, part)
    return part if isinstance(part, int) else repr(part)
