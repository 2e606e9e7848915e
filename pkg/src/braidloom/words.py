"""Braid words, permutations, and exact equality of braids.

A braid on n strands is a word in the generators s1 .. s(n-1); the letter
k > 0 stands for sk (the strand in position k crosses over the strand in
position k+1) and -k for its inverse.  Words are tuples of nonzero
integers, so composition is concatenation and inversion is reversal with
all signs flipped.

Equality of the underlying group elements is decided through the classical
faithful action on the free group F_n = <x1, .., xn>:

    sk:  xk -> xk x(k+1) xk^-1,   x(k+1) -> xk,

extended multiplicatively along the word.  Two words are equal as braids
exactly when they induce the same endomorphism, which is checked on freely
reduced images.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .limits import ResourceLimitError, max_word_letters

__all__ = [
    "BraidWord",
    "Permutation",
    "FreeEndo",
    "TypeVector",
    "free_reduce",
    "band_word",
    "cycle_braid",
    "strand_permutation",
    "rotate",
    "mirror",
    "artin_action",
    "braids_equal",
    "parse_word",
    "word_text",
]


@dataclass(frozen=True)
class BraidWord:
    """A word in braid generators, not reduced unless asked."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("strand count must be at least 1")
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise ValueError(
                    f"letter {letter} invalid on {self.strands} strands"
                )
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, exponent: int) -> "BraidWord":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return BraidWord(self.strands, self.letters * exponent)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-l for l in reversed(self.letters)))

    def writhe(self) -> int:
        return sum(1 if l > 0 else -1 for l in self.letters)

    def __str__(self) -> str:
        return word_text(self)


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent si^+1 si^-1 pairs until none remain.

    The result represents the same braid; idempotent by construction.
    """
    out: list[int] = []
    for letter in w.letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return BraidWord(w.strands, tuple(out))


def mirror(w: BraidWord) -> BraidWord:
    """Flip every crossing; the closure becomes the mirror image."""
    return BraidWord(w.strands, tuple(-l for l in w.letters))


def rotate(w: BraidWord) -> BraidWord:
    """Half-turn of the diagram in its plane.

    Reverses the reading order and swaps generator index i with n-i,
    keeping signs.  An involution and an antihomomorphism: rotate(ab) =
    rotate(b) rotate(a).
    """
    n = w.strands
    letters = tuple(
        (1 if l > 0 else -1) * (n - abs(l)) for l in reversed(w.letters)
    )
    return BraidWord(n, letters)


def band_word(i: int, j: int, n: int) -> BraidWord:
    """Band generator A[i,j]: strand j loops once around strand i.

    Expands to s(j-1) .. s(i+1) si^2 s(i+1)^-1 .. s(j-1)^-1, a positive
    double crossing conjugated into place; length 2(j-i).
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"band indices need 1 <= i < j <= n, got ({i},{j}) on n={n}")
    down = list(range(j - 1, i, -1))
    letters = down + [i, i] + [-k for k in reversed(down)]
    return BraidWord(n, tuple(letters))


@dataclass(frozen=True)
class TypeVector:
    """Composition (n1, .., nk) of the strand count of a woven braid."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError("type parts must be positive integers")
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def block_ends(self) -> tuple[int, ...]:
        """Partial sums n1, n1+n2, .., n; the indices carrying components."""
        ends = []
        total = 0
        for p in self.parts:
            total += p
            ends.append(total)
        return tuple(ends)

    def interior(self) -> tuple[int, ...]:
        """Indices 1..n that are not block ends."""
        ends = set(self.block_ends())
        return tuple(s for s in range(1, self.n + 1) if s not in ends)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def cycle_braid(tv: TypeVector) -> BraidWord:
    """Positive permutation braid s1 s2 .. s(n-1) with block-end indices omitted.

    Its permutation is the product of the descending cycles
    (n1 .. 1)(n1+n2 .. n1+1) .. ; the last block end is n and never occurs
    as a generator index.
    """
    ends = set(tv.block_ends())
    letters = tuple(i for i in range(1, tv.n) if i not in ends)
    return BraidWord(tv.n, letters)


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n}; images[k-1] is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")
        object.__setattr__(self, "images", tuple(self.images))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: (self.then(other))(x) = other(self(x))."""
        if self.n != other.n:
            raise ValueError("sizes differ")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles (fixed points included), each starting at its minimum,
        sorted by (length descending, minimum ascending)."""
        seen = [False] * (self.n + 1)
        out: list[tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self(start)
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self(x)
            out.append(tuple(cyc))
        out.sort(key=lambda c: (-len(c), c[0]))
        return out


def strand_permutation(w: BraidWord) -> Permutation:
    """Where each strand ends up: start position -> end position."""
    n = w.strands
    arr = list(range(n + 1))  # arr[x] = strand currently at position x
    pos = list(range(n + 1))  # pos[s] = current position of strand s
    for letter in w.letters:
        i = abs(letter)
        a, b = arr[i], arr[i + 1]
        arr[i], arr[i + 1] = b, a
        pos[a], pos[b] = i + 1, i
    return Permutation(tuple(pos[1:]))


# --- the faithful free-group action -----------------------------------------

# Substitution tables: for each generator letter, what each free-group
# letter becomes.  Free letters are signed ints, generator index 1..n.


def _apply_gen(word: tuple[int, ...], i: int, positive: bool) -> tuple[int, ...]:
    """Substitute the action of si^+-1 into a free word, reducing as we go."""
    a, b = i, i + 1
    out: list[int] = []

    def push(letter: int) -> None:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)

    if positive:
        # xa -> xa xb xa^-1, xb -> xa
        for l in word:
            if l == a:
                push(a); push(b); push(-a)
            elif l == -a:
                push(a); push(-b); push(-a)
            elif l == b:
                push(a)
            elif l == -b:
                push(-a)
            else:
                push(l)
    else:
        # xa -> xb, xb -> xb^-1 xa xb
        for l in word:
            if l == a:
                push(b)
            elif l == -a:
                push(-b)
            elif l == b:
                push(-b); push(a); push(b)
            elif l == -b:
                push(-b); push(-a); push(b)
            else:
                push(l)
    return tuple(out)


@dataclass(frozen=True)
class FreeEndo:
    """Endomorphism of the free group F_n, images freely reduced."""

    strands: int
    images: tuple[tuple[int, ...], ...]

    @classmethod
    def identity(cls, n: int) -> "FreeEndo":
        return cls(n, tuple((t,) for t in range(1, n + 1)))

    def size(self) -> int:
        return sum(len(img) for img in self.images)

    def apply(self, word: Iterable[int]) -> tuple[int, ...]:
        """Image of an arbitrary free word under this endomorphism."""
        out: list[int] = []
        for l in word:
            img = self.images[abs(l) - 1]
            seq = img if l > 0 else tuple(-t for t in reversed(img))
            for t in seq:
                if out and out[-1] == -t:
                    out.pop()
                else:
                    out.append(t)
        return tuple(out)


def artin_action(w: BraidWord, *, cap: int | None = None) -> FreeEndo:
    """Endomorphism of F_n induced by the word, letter by letter.

    Functorial over concatenation: the action of ab is the action of a
    followed by the action of b.  Total image size is capped (default from
    BRAIDLOOM_MAX_WORD) and overruns raise ResourceLimitError.
    """
    if cap is None:
        cap = max_word_letters()
    n = w.strands
    images = [(t,) for t in range(1, n + 1)]
    for letter in w.letters:
        i = abs(letter)
        positive = letter > 0
        images = [_apply_gen(img, i, positive) for img in images]
        total = sum(len(img) for img in images)
        if total > cap:
            raise ResourceLimitError(
                f"free-group image grew past {cap} letters; "
                "raise BRAIDLOOM_MAX_WORD to push further"
            )
    return FreeEndo(n, tuple(images))


def braids_equal(a: BraidWord, b: BraidWord, *, cap: int | None = None) -> bool:
    """Exact group-element equality via the faithful action."""
    if a.strands != b.strands:
        raise ValueError("cannot compare words on different strand counts")
    return artin_action(a, cap=cap) == artin_action(b, cap=cap)


# --- external text format ----------------------------------------------------


def parse_word(text: str, strands: int | None = None) -> BraidWord:
    """Read a word from whitespace-separated signed indices, e.g. "1 -2 -2 1".

    With no explicit strand count the smallest possible one is used,
    max |index| + 1 (minimum 2 for the empty word on unspecified strands).
    """
    try:
        letters = tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ValueError(f"bad braid word text {text!r}") from exc
    if any(l == 0 for l in letters):
        raise ValueError("generator index 0 does not exist")
    if strands is None:
        strands = max((abs(l) for l in letters), default=1) + 1
    return BraidWord(strands, letters)


def word_text(w: BraidWord) -> str:
    return " ".join(str(l) for l in w.letters)
