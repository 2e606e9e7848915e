"""Pure braid structure: band words, combing, and the shift maps.

A pure braid on n strands factors uniquely as a product of free-group
components, one for each index j = 2..n, where the j-th component lives in
the free subgroup generated by the bands A[1,j] .. A[j-1,j] (the strands
below j stay put while strand j walks around them).  Combing computes that
factorization in either product order:

    ascending   p = b2 b3 .. bn
    descending  p = bn .. b3 b2

The extraction works strand by strand.  Deleting the top strand of a pure
word is a group homomorphism onto the pure braids on one strand fewer, and
re-embedding its image splits the projection, so the top factor is
p * embed(delete(p))^-1.  That factor moves only the top strand; its image
of x_n under the free-group action is c x_n c^-1, and erasing x_n letters
from the conjugator c spells the factor in the band basis, one letter per
surviving conjugator letter.  The uniqueness of reduced words in a free
group makes every component canonical, so combing is idempotent on the
nose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .limits import DEFAULT_MAX_BANDS, ResourceLimitError
from .words import (
    BraidWord,
    TypeVector,
    artin_action,
    band_word,
    braids_equal,
    cycle_braid,
    free_reduce,
    strand_permutation,
)

__all__ = [
    "Band",
    "BandWord",
    "PureFactorization",
    "delete_strand",
    "as_band_word",
    "comb",
    "left_factor",
    "is_strand_free",
    "shift_down",
    "conjugate_by_cycle",
    "drop_top",
    "cascade",
    "is_cascade_element",
    "parse_bands",
    "band_text",
]


@dataclass(frozen=True)
class Band:
    """One signed band letter A[i,j]^sign with 1 <= i < j."""

    i: int
    j: int
    sign: int

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j:
            raise ValueError(f"band needs 1 <= i < j, got ({self.i},{self.j})")
        if self.sign not in (1, -1):
            raise ValueError("band sign must be +-1")

    def inverse(self) -> "Band":
        return Band(self.i, self.j, -self.sign)


@dataclass(frozen=True)
class BandWord:
    """A word in band generators, representing a pure braid on `strands`."""

    strands: int
    letters: tuple[Band, ...] = ()

    def __post_init__(self) -> None:
        for b in self.letters:
            if b.j > self.strands:
                raise ValueError(f"band {b} does not fit on {self.strands} strands")
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BandWord") -> "BandWord":
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BandWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BandWord":
        return BandWord(self.strands, tuple(b.inverse() for b in reversed(self.letters)))

    def reduced(self) -> "BandWord":
        """Cancel adjacent mutually inverse band letters."""
        out: list[Band] = []
        for b in self.letters:
            if out and out[-1].i == b.i and out[-1].j == b.j and out[-1].sign == -b.sign:
                out.pop()
            else:
                out.append(b)
        return BandWord(self.strands, tuple(out))

    def expand(self) -> BraidWord:
        """Spell the word in the standard generators (not reduced)."""
        letters: list[int] = []
        for b in self.letters:
            w = band_word(b.i, b.j, self.strands)
            letters.extend(w.letters if b.sign > 0 else w.inverse().letters)
        return BraidWord(self.strands, tuple(letters))

    def second_indices(self) -> set[int]:
        return {b.j for b in self.letters}

    def __str__(self) -> str:
        return band_text(self)


@dataclass(frozen=True)
class PureFactorization:
    """Combed form of a pure braid: one free component per index 2..n."""

    strands: int
    order: str  # "ascending" or "descending"
    components: tuple[BandWord, ...]  # index j at position j-2

    def component(self, j: int) -> BandWord:
        if not 2 <= j <= self.strands:
            raise ValueError(f"component index {j} out of range")
        return self.components[j - 2]

    def recompose(self) -> BraidWord:
        """Multiply the components back in the factorization's order."""
        indices = range(2, self.strands + 1)
        if self.order == "descending":
            indices = reversed(indices)
        letters: list[int] = []
        for j in indices:
            letters.extend(self.component(j).expand().letters)
        return BraidWord(self.strands, tuple(letters))


def delete_strand(w: BraidWord, t: int) -> BraidWord:
    """Forget the strand that starts (and, being pure, ends) at position t.

    Crossings involving the tracked strand are dropped; the rest keep their
    index below the gap and slide down by one above it.
    """
    if not 1 <= t <= w.strands:
        raise ValueError(f"no strand {t} on {w.strands} strands")
    p = t
    out: list[int] = []
    for letter in w.letters:
        i = abs(letter)
        if p == i:
            p = i + 1
        elif p == i + 1:
            p = i
        else:
            sign = 1 if letter > 0 else -1
            out.append(sign * (i - 1 if i > p else i))
    return BraidWord(w.strands - 1, tuple(out))


def _embed(w: BraidWord, strands: int) -> BraidWord:
    """The same letters viewed on a larger strand count (trivial strands on top)."""
    return BraidWord(strands, w.letters)


def _top_factor_bands(u: BraidWord, *, cap: int = DEFAULT_MAX_BANDS) -> tuple[Band, ...]:
    """Band spelling of a pure word that moves only the top strand.

    The image of x_n is c x_n c^-1; deleting x_n^+-1 letters from c and
    reducing gives the unique reduced band word, letter x_i^e turning into
    A[i,n]^e.
    """
    n = u.strands
    img = artin_action(u).images[n - 1]
    if len(img) % 2 == 0:
        raise ValueError("word does not fix the top strand")
    m = len(img) // 2
    if img[m] != n:
        raise ValueError("word is not a pure top-strand factor")
    conj = img[:m]
    reduced: list[int] = []
    for l in conj:
        if abs(l) == n:
            continue
        if reduced and reduced[-1] == -l:
            reduced.pop()
        else:
            reduced.append(l)
    if len(reduced) > cap:
        raise ResourceLimitError(f"band word grew past {cap} letters")
    return tuple(Band(abs(l), n, 1 if l > 0 else -1) for l in reduced)


def comb(p: BraidWord, order: str = "ascending") -> PureFactorization:
    """Factor a pure word into its free components, top strand outward.

    Ascending puts the component of index j to the right of all lower ones,
    descending to the left.  Components are canonical reduced band words;
    recomposition is braid-equal to the input and recombing it returns the
    identical factorization.
    """
    if order not in ("ascending", "descending"):
        raise ValueError(f"unknown comb order {order!r}")
    if not strand_permutation(p).is_identity:
        raise ValueError("comb needs a pure braid")
    n = p.strands
    comps: dict[int, tuple[Band, ...]] = {}
    cur = free_reduce(p)
    for j in range(n, 1, -1):
        rest = delete_strand(cur, j)
        emb = _embed(rest, j)
        if order == "descending":
            u = free_reduce(cur * emb.inverse())
        else:
            u = free_reduce(emb.inverse() * cur)
        comps[j] = tuple(Band(b.i, b.j, b.sign) for b in _top_factor_bands(u))
        cur = rest
    return PureFactorization(
        n, order, tuple(BandWord(n, comps[j]) for j in range(2, n + 1))
    )


def as_band_word(p: BraidWord) -> BandWord:
    """Some band word equal to the given pure braid (descending comb, flattened)."""
    f = comb(p, "descending")
    letters: list[Band] = []
    for j in range(p.strands, 1, -1):
        letters.extend(f.component(j).letters)
    return BandWord(p.strands, tuple(letters))


def left_factor(p: BraidWord, s: int) -> BandWord:
    """The unique left factor of p in the free group on A[.,s].

    Peeling it off leaves a braid in which strand s is free.  Computed by
    truncating to the lowest s strands (deleting the strands above one by
    one, which kills every band with a higher second index and fixes the
    rest) and extracting the top factor there.
    """
    if not 2 <= s <= p.strands:
        raise ValueError(f"factor index {s} out of range on {p.strands} strands")
    if not strand_permutation(p).is_identity:
        raise ValueError("left_factor needs a pure braid")
    cur = free_reduce(p)
    for j in range(p.strands, s, -1):
        cur = delete_strand(cur, j)
    rest = delete_strand(cur, s)
    u = free_reduce(cur * _embed(rest, s).inverse())
    bands = _top_factor_bands(u)
    return BandWord(p.strands, bands)


def is_strand_free(p: BraidWord, s: int) -> bool:
    """True iff p can be written without bands A[.,s] (strand s just watches)."""
    return len(left_factor(p, s)) == 0


# --- shift endomorphisms ------------------------------------------------------


def shift_down(b: BandWord) -> BandWord:
    """Letterwise A[1,j] -> 1 and A[i,j] -> A[i-1,j-1]; an endomorphism.

    Applied to a top-strand word repeatedly it walks the component down the
    indices and kills it after strands-1 steps.
    """
    out: list[Band] = []
    for band in b.letters:
        if band.i == 1:
            continue
        nxt = Band(band.i - 1, band.j - 1, band.sign)
        if out and out[-1].i == nxt.i and out[-1].j == nxt.j and out[-1].sign == -nxt.sign:
            out.pop()
        else:
            out.append(nxt)
    return BandWord(b.strands, tuple(out))


def conjugate_by_cycle(w: BraidWord, tv: TypeVector) -> BraidWord:
    """Conjugate by the positive cycle braid of the type: g w g^-1."""
    if w.strands != tv.n:
        raise ValueError("strand counts differ")
    g = cycle_braid(tv)
    return free_reduce(g * w * g.inverse())


def drop_top(b: BandWord) -> BandWord:
    """Letterwise: erase bands whose second index is the strand count, keep the rest.

    Equals shift_down after conjugation by the full cycle braid, so it is an
    endomorphism of the pure braids and its kernel is exactly the top-strand
    free group.
    """
    n = b.strands
    out: list[Band] = []
    for band in b.letters:
        if band.j == n:
            continue
        if out and out[-1].i == band.i and out[-1].j == band.j and out[-1].sign == -band.sign:
            out.pop()
        else:
            out.append(band)
    return BandWord(n, tuple(out))


def cascade(b: BandWord) -> BandWord:
    """Product b * shift_down(b) * shift_down^2(b) * .. (strands-2 shifts).

    For b in the top-strand free group this lands in the subgroup of
    conjugators that preserve wovenness; see is_cascade_element.
    """
    n = b.strands
    if any(band.j != n for band in b.letters):
        raise ValueError("cascade input must use only top-strand bands A[.,n]")
    letters: list[Band] = []
    cur = b
    for _ in range(n - 1):
        letters.extend(cur.letters)
        cur = shift_down(cur)
    return BandWord(n, tuple(letters)).reduced()


def is_cascade_element(p: BraidWord | BandWord) -> bool:
    """Membership test for the woven-conjugation subgroup.

    An element belongs exactly when its shift_down image and its drop_top
    image agree as braids.  Both maps are induced by forgetting a strand
    (the bottom one, reindexed, and the top one), so the test compares the
    two strand deletions directly.
    """
    w = p.expand() if isinstance(p, BandWord) else p
    if not strand_permutation(w).is_identity:
        raise ValueError("cascade membership is defined for pure braids")
    return braids_equal(delete_strand(w, 1), delete_strand(w, w.strands))


# --- external text format -----------------------------------------------------


def parse_bands(text: str, strands: int | None = None) -> BandWord:
    """Read a band word from tokens "A[i,j]" and "A[i,j]^-1"."""
    letters: list[Band] = []
    for tok in text.split():
        sign = 1
        body = tok
        if body.endswith("^-1"):
            sign = -1
            body = body[:-3]
        if not (body.startswith("A[") and body.endswith("]")):
            raise ValueError(f"bad band token {tok!r}")
        try:
            i_s, j_s = body[2:-1].split(",")
            i, j = int(i_s), int(j_s)
        except ValueError as exc:
            raise ValueError(f"bad band token {tok!r}") from exc
        letters.append(Band(i, j, sign))
    if strands is None:
        strands = max((b.j for b in letters), default=2)
    return BandWord(strands, tuple(letters))


def band_text(b: BandWord) -> str:
    toks = []
    for band in b.letters:
        suffix = "" if band.sign > 0 else "^-1"
        toks.append(f"A[{band.i},{band.j}]{suffix}")
    return " ".join(toks)
