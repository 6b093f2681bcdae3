"""Weighted relations: the category of finite-set words and matrix arrows.

An arrow X -> Y stores one WeightMap over the codomain product per domain
element with nonzero support; composition is the semiring matrix product

    (f ; g)(x, z) = sum over y of f(x, y) * g(y, z)

and the tensor is the Kronecker product on concatenated words.  The unit
object is the empty word, whose product has the single element ().  Words
are strict: tensoring is tuple concatenation, so unitors and associators
are identities on index tuples and never appear at runtime.

Structural arrows: wrel_copy duplicates an index tuple, wrel_del maps it
to (), wrel_swap exchanges two blocks.  wrel_dom is computed by its
defining composite copy ; (id x (f ; del)); the closed form (the row total
on the diagonal) is exposed separately as an independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass

from .report import derive_rng
from .semiring import Semiring
from .weightmap import (
    FinSet,
    WeightMap,
    Word,
    WeightMapError,
    in_variant,
    enumerate_maps,
    render_map,
    sample_maps,
    wm_empty,
    wm_eta,
    wm_make,
    wm_psi,
    wm_pushforward,
    wm_total,
    word_contains,
    word_elements,
    word_labels,
    word_size,
)


class BoundaryError(ValueError):
    pass


class WRelFormatError(ValueError):
    pass


class WRel:
    """Immutable arrow between words; rows are canonical and zero-free."""

    __slots__ = ("dom", "cod", "rows", "_index")

    def __init__(self, dom: Word, cod: Word, rows):
        pairs = rows.items() if hasattr(rows, "items") else rows
        kept = {}
        for x, h in pairs:
            if not word_contains(dom, x):
                raise BoundaryError(f"row key {x!r} is not an element of the domain word")
            if not isinstance(h, WeightMap):
                raise BoundaryError(f"row {x!r} is not a WeightMap")
            for y in h.support:
                if not word_contains(cod, y):
                    raise BoundaryError(f"entry key {y!r} is not an element of the codomain word")
            if len(h):
                kept[x] = h
        ordered = tuple(sorted(kept.items()))
        object.__setattr__(self, "dom", tuple(dom))
        object.__setattr__(self, "cod", tuple(cod))
        object.__setattr__(self, "rows", ordered)
        object.__setattr__(self, "_index", dict(ordered))

    def __setattr__(self, *_):
        raise AttributeError("WRel is immutable")

    def row(self, sr: Semiring, x) -> WeightMap:
        return self._index.get(x, wm_empty(sr))

    def value(self, sr: Semiring, x, y):
        return self.row(sr, x).value(sr, y)

    def boundary(self) -> tuple[Word, Word]:
        return self.dom, self.cod

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WRel)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, self.rows))

    def __repr__(self) -> str:
        d = "*".join(s.name for s in self.dom) or "I"
        c = "*".join(s.name for s in self.cod) or "I"
        return f"WRel({d} -> {c}, {len(self.rows)} rows)"


def wrel_make(sr: Semiring, dom: Word, cod: Word, entries) -> WRel:
    """Build an arrow from {row_key: {col_key: value}} style entries."""
    rows = {}
    for x, cols in (entries.items() if hasattr(entries, "items") else entries):
        rows[x] = cols if isinstance(cols, WeightMap) else wm_make(sr, cols)
    return WRel(dom, cod, rows)


def wrel_eq(f: WRel, g: WRel) -> bool:
    if f.boundary() != g.boundary():
        raise BoundaryError(
            f"cannot compare arrows with different boundaries: "
            f"{_word_str(f.dom)} -> {_word_str(f.cod)} vs {_word_str(g.dom)} -> {_word_str(g.cod)}"
        )
    return f.rows == g.rows


def _word_str(word: Word) -> str:
    return "[" + ",".join(s.name for s in word) + "]"


# ---------------------------------------------------------------------------
# category and monoidal structure


def wrel_id(sr: Semiring, word: Word) -> WRel:
    return WRel(word, word, {x: wm_eta(sr, x) for x in word_elements(word)})


def wrel_compose(sr: Semiring, f: WRel, g: WRel) -> WRel:
    if f.cod != g.dom:
        raise BoundaryError(
            f"compose mismatch: {_word_str(f.cod)} vs {_word_str(g.dom)}"
        )
    rows = {}
    for x, frow in f.rows:
        acc: dict = {}
        for y, v in frow.entries:
            for z, w in g.row(sr, y).entries:
                term = sr.mul(v, w)
                acc[z] = sr.add(acc[z], term) if z in acc else term
        rows[x] = wm_make(sr, acc)
    return WRel(f.dom, g.cod, rows)


def wrel_tensor(sr: Semiring, f: WRel, g: WRel) -> WRel:
    rows = {}
    for xf, hf in f.rows:
        for xg, hg in g.rows:
            rows[xf + xg] = wm_psi(sr, hf, hg)
    return WRel(f.dom + g.dom, f.cod + g.cod, rows)


def wrel_copy(sr: Semiring, word: Word) -> WRel:
    return WRel(word, word + word, {x: wm_eta(sr, x + x) for x in word_elements(word)})


def wrel_del(sr: Semiring, word: Word) -> WRel:
    return WRel(word, (), {x: wm_eta(sr, ()) for x in word_elements(word)})


def wrel_swap(sr: Semiring, left: Word, right: Word) -> WRel:
    cut = len(left)
    rows = {}
    for x in word_elements(left + right):
        rows[x] = wm_eta(sr, x[cut:] + x[:cut])
    return WRel(left + right, right + left, rows)


# ---------------------------------------------------------------------------
# domain and mass


def wrel_mass(sr: Semiring, f: WRel) -> WRel:
    """Discharge the codomain: f ; del."""
    return wrel_compose(sr, f, wrel_del(sr, f.cod))


def wrel_dom(sr: Semiring, f: WRel) -> WRel:
    """Defining composite copy ; (id x mass(f)); the right unitor is a no-op
    because tensoring with the empty word does not change index tuples."""
    x = f.dom
    spread = wrel_tensor(sr, wrel_id(sr, x), wrel_mass(sr, f))
    return wrel_compose(sr, wrel_copy(sr, x), spread)


def wrel_dom_closed(sr: Semiring, f: WRel) -> WRel:
    """Independent oracle: diagonal of row totals."""
    rows = {}
    for x, h in f.rows:
        rows[x] = wm_make(sr, {x: wm_total(sr, h)})
    return WRel(f.dom, f.dom, rows)


def wrel_dom_via_kleisli_path(sr: Semiring, f: WRel) -> WRel:
    """dom(f) ; f computed through the monad structure instead of matrices.

    Per row h: pair the row with its own discharge image and push the unit
    factor away:  h  ->  (h, pushforward_del(h))  ->  psi  ->  forget ().
    Evaluating the pipeline with wm_psi and pushforwards keeps it
    independent of wrel_compose internals.
    """
    rows = {}
    for x, h in f.rows:
        massed = wm_pushforward(sr, lambda _k: (), h)
        paired = wm_psi(sr, h, massed)
        # paired keys are y + (); dropping the empty tail is the unitor.
        rows[x] = wm_pushforward(sr, lambda k: k[: len(f.cod)], paired, cod=f.cod)
    return WRel(f.dom, f.cod, rows)


# ---------------------------------------------------------------------------
# scalar maps and the canonical semigroup


def hom_scalar_unit(sr: Semiring, word: Word) -> WRel:
    return wrel_del(sr, word)


def hom_scalar_mul(sr: Semiring, f: WRel, g: WRel) -> WRel:
    """Pointwise product of scalar maps Y -> I via copy ; (f x g)."""
    if f.cod != () or g.cod != ():
        raise BoundaryError("scalar multiplication needs arrows into the empty word")
    if f.dom != g.dom:
        raise BoundaryError("scalar multiplication needs a shared domain")
    return wrel_compose(sr, wrel_copy(sr, f.dom), wrel_tensor(sr, f, g))


def canonical_semigroup_mul(sr: Semiring, word: Word) -> WRel:
    """First-projection multiplication (id x del); a one-sided inverse to copy."""
    return wrel_tensor(sr, wrel_id(sr, word), wrel_del(sr, word))


# ---------------------------------------------------------------------------
# per-arrow classification


@dataclass(frozen=True)
class ArrowFlags:
    total: bool
    copyable: bool
    domain_eq: bool
    mass_eq: bool


def wrel_classify(sr: Semiring, f: WRel) -> ArrowFlags:
    """Evaluate the four per-arrow equations through their composites."""
    dom_f = wrel_dom(sr, f)
    mass_f = wrel_mass(sr, f)
    copy_cod = wrel_copy(sr, f.cod)
    copy_dom = wrel_copy(sr, f.dom)
    return ArrowFlags(
        total=wrel_eq(mass_f, wrel_del(sr, f.dom)),
        copyable=wrel_eq(
            wrel_compose(sr, f, copy_cod),
            wrel_compose(sr, copy_dom, wrel_tensor(sr, f, f)),
        ),
        domain_eq=wrel_eq(wrel_compose(sr, dom_f, f), f),
        mass_eq=wrel_eq(wrel_compose(sr, dom_f, mass_f), mass_f),
    )


# ---------------------------------------------------------------------------
# arrow enumeration and sampling


def enumerate_arrows(sr: Semiring, dom: Word, cod: Word, variant: str = "M") -> list[WRel]:
    """All arrows whose rows are variant members; finite carriers only."""
    keys = list(word_elements(dom))
    choices = enumerate_maps(sr, cod, variant)
    out = []
    for assignment in _assignments(choices, len(keys)):
        out.append(WRel(dom, cod, dict(zip(keys, assignment))))
    return out


def _assignments(choices, n):
    if n == 0:
        yield ()
        return
    for rest in _assignments(choices, n - 1):
        for c in choices:
            yield rest + (c,)


def sample_arrows(
    sr: Semiring, dom: Word, cod: Word, variant: str, seed: int, n: int, tag: str = "arrows"
) -> list[WRel]:
    """Deterministic seeded arrow sample; rows drawn from variant map samples.

    The stream starts with systematic products of the smallest row shapes, so
    witnesses land on small readable arrows before random draws begin.
    """
    if sr.finite and len(sr.elements) ** max(1, word_size(dom) * word_size(cod)) <= 4096:
        return enumerate_arrows(sr, dom, cod, variant)[:n]
    keys = list(word_elements(dom))
    row_pool = sample_maps(sr, cod, variant, seed, max(6, n // 4), tag=f"{tag}-rows")
    if not row_pool:
        return []
    out = []
    seen = set()
    for assignment in _assignments(row_pool[:3], len(keys)):
        arrow = WRel(dom, cod, dict(zip(keys, assignment)))
        if arrow not in seen:
            seen.add(arrow)
            out.append(arrow)
        if len(out) >= n:
            return out
    if not keys:
        return out
    rng = derive_rng(seed, "sample-arrows", sr.name, variant, tag, len(keys), n)
    while len(out) < n:
        arrow = WRel(dom, cod, {k: rng.choice(row_pool) for k in keys})
        if arrow not in seen:
            seen.add(arrow)
            out.append(arrow)
        elif len(row_pool) ** max(1, len(keys)) <= len(out):
            break
    return out


def variant_arrows(
    sr: Semiring, dom: Word, cod: Word, variant: str, seed: int, n: int, tag: str = "arrows"
) -> tuple[list[WRel], bool]:
    """Variant arrows plus an exhaustiveness marker, mirroring variant_maps."""
    if sr.finite and len(sr.elements) ** max(1, word_size(dom) * word_size(cod)) <= 4096:
        return enumerate_arrows(sr, dom, cod, variant), True
    return sample_arrows(sr, dom, cod, variant, seed, n, tag), False


def arrow_in_variant(sr: Semiring, f: WRel, variant: str) -> bool:
    """True when every row (including implicit empty rows) is a variant member."""
    stored = dict(f.rows)
    for x in word_elements(f.dom):
        h = stored.get(x, wm_empty(sr))
        if not in_variant(sr, h, variant):
            return False
    return True


# ---------------------------------------------------------------------------
# serialization


def finset_to_doc(s: FinSet) -> dict:
    doc = {"name": s.name, "size": s.size}
    if s.labels is not None:
        doc["labels"] = list(s.labels)
    return doc


def finset_from_doc(doc) -> FinSet:
    if not isinstance(doc, dict) or "name" not in doc or "size" not in doc:
        raise WRelFormatError(f"bad finite-set document: {doc!r}")
    labels = doc.get("labels")
    try:
        return FinSet(str(doc["name"]), int(doc["size"]), tuple(labels) if labels is not None else None)
    except WeightMapError as e:
        raise WRelFormatError(str(e)) from None


def wrel_to_doc(sr: Semiring, f: WRel) -> dict:
    entries = []
    for x, h in f.rows:
        for y, v in h.entries:
            entries.append([word_labels(f.dom, x), word_labels(f.cod, y), sr.label(v)])
    return {
        "dom": [finset_to_doc(s) for s in f.dom],
        "cod": [finset_to_doc(s) for s in f.cod],
        "entries": entries,
    }


def wrel_from_doc(sr: Semiring, doc) -> WRel:
    if not isinstance(doc, dict):
        raise WRelFormatError("arrow document must be an object")
    for key in ("dom", "cod", "entries"):
        if key not in doc:
            raise WRelFormatError(f"arrow document missing field {key!r}")
    dom = tuple(finset_from_doc(d) for d in doc["dom"])
    cod = tuple(finset_from_doc(d) for d in doc["cod"])
    rows: dict = {}
    for item in doc["entries"]:
        if len(item) != 3:
            raise WRelFormatError(f"bad entry {item!r}")
        row_labels, col_labels, value_label = item
        if len(row_labels) != len(dom) or len(col_labels) != len(cod):
            raise WRelFormatError(f"entry shape does not match the boundary words: {item!r}")
        try:
            x = tuple(s.index_of(l) for s, l in zip(dom, row_labels))
            y = tuple(s.index_of(l) for s, l in zip(cod, col_labels))
            v = sr.parse(value_label)
        except (WeightMapError, ValueError) as e:
            raise WRelFormatError(str(e)) from None
        cols = rows.setdefault(x, {})
        if y in cols:
            raise WRelFormatError(f"duplicate entry at {row_labels} {col_labels}")
        cols[y] = v
    return wrel_make(sr, dom, cod, rows)


def wrel_witness(sr: Semiring, f: WRel) -> dict:
    """Witness form used in law reports: the full serialized arrow."""
    return {"arrow": wrel_to_doc(sr, f)}


def row_witness(sr: Semiring, f: WRel, x) -> dict:
    return {
        "arrow": wrel_to_doc(sr, f),
        "row": word_labels(f.dom, x),
        "row_map": render_map(sr, f.row(sr, x), f.cod),
    }
