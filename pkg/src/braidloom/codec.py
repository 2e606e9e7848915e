"""Tight words of full-cycle woven braids and their two-layer code.

A full-cycle woven braid reduces to a unique word in which every crossing
involves the one moving strand.  That strand enters at position 1, wanders,
and exits at the top, so consecutive crossing indices differ by at most one
and the whole word is determined by its first signed letter plus one step
value per adjacent letter pair:

    0  index changed, sign kept
    1  index changed, sign flipped
    2  index repeated (a U-turn; sign necessarily kept in a reduced word)

Stripping leading and trailing zeros and reading the remaining steps as a
signed mixed base-2/3 numeral compresses each web to a single integer.
Stripped steps re-inflate uniquely: leading zeros lift the run until no
index dips below 1, trailing zeros march the moving strand to the top.
Code 0 is reserved: it collects the step sequences that strip to nothing
or to a lone 1, whose closures are all unknots.
"""

from __future__ import annotations

from dataclasses import dataclass

from .weaving import WovenBraid, woven_from_word
from .words import BraidWord, braids_equal, free_reduce, mirror, rotate

__all__ = [
    "StepCode",
    "tight_word",
    "step_code",
    "word_from_steps",
    "code_int",
    "steps_from_int",
    "word_from_code",
    "encode_word",
    "steps_mirrored",
    "steps_rotated",
    "is_alternating",
    "symmetry_class",
]


def _walk(lead_sign: int, steps: tuple[int, ...]) -> tuple[int, ...]:
    """Letters decoded from a step sequence; error if an index leaves [1,)."""
    d, i, e = 1, 1, lead_sign
    letters = [e * i]
    for c in steps:
        if c == 2:
            d = -d
        else:
            i += d
            if c == 1:
                e = -e
        if i < 1:
            raise ValueError("step sequence pushes the crossing index below 1")
        letters.append(e * i)
    return tuple(letters)


@dataclass(frozen=True)
class StepCode:
    """First-letter sign plus the step value between each adjacent pair.

    Instances are validated on construction: the decoded word must be a
    complete main-strand walk, i.e. the moving strand must finish on top.
    """

    lead_sign: int
    steps: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.lead_sign not in (1, -1):
            raise ValueError("lead sign must be +-1")
        if any(c not in (0, 1, 2) for c in self.steps):
            raise ValueError("steps must be 0, 1 or 2")
        object.__setattr__(self, "steps", tuple(self.steps))
        letters = _walk(self.lead_sign, self.steps)
        d = 1
        for c in self.steps:
            if c == 2:
                d = -d
        top = max(abs(l) for l in letters) + 1
        final = abs(letters[-1]) + 1 if d == 1 else abs(letters[-1])
        if final != top:
            raise ValueError("moving strand does not finish on top")

    def __len__(self) -> int:
        return len(self.steps) + 1  # word length

    def __str__(self) -> str:
        sign = "+" if self.lead_sign > 0 else "-"
        return sign + "".join(str(c) for c in self.steps)


def tight_word(w: WovenBraid | BraidWord) -> BraidWord:
    """The unique reduced word of a full-cycle woven braid."""
    if isinstance(w, BraidWord):
        w = woven_from_word(w)
    if len(w.tv.parts) != 1:
        raise ValueError("tight words are defined for full-cycle woven braids")
    return free_reduce(w.word())


def step_code(w: BraidWord | WovenBraid) -> StepCode:
    """Encode a tight word; the input is tightened (and thereby validated) first."""
    t = tight_word(w)
    letters = t.letters
    steps: list[int] = []
    for a, b in zip(letters, letters[1:]):
        ia, ib = abs(a), abs(b)
        if ia == ib:
            if (a > 0) != (b > 0):
                raise ValueError("cancelling pair in word")
            steps.append(2)
        elif abs(ia - ib) == 1:
            steps.append(0 if (a > 0) == (b > 0) else 1)
        else:
            raise ValueError("consecutive crossings do not share the moving strand")
    code = StepCode(1 if letters[0] > 0 else -1, tuple(steps))
    if _walk(code.lead_sign, code.steps) != letters:
        raise ValueError("word is not a main-strand walk")
    return code


def word_from_steps(t: StepCode) -> BraidWord:
    """Decode a step code to its tight word."""
    letters = _walk(t.lead_sign, t.steps)
    n = max(abs(l) for l in letters) + 1
    return BraidWord(n, letters)


def code_int(t: StepCode) -> int:
    """Integer form: strip zeros, then first step as a bit, the rest base 3.

    Step sequences that strip to nothing or to a lone 1 all map to the
    reserved value 0 (their closures are unknots).
    """
    steps = list(t.steps)
    while steps and steps[0] == 0:
        steps.pop(0)
    while steps and steps[-1] == 0:
        steps.pop()
    if not steps:
        return 0
    value = steps[0] - 1
    scale = 2
    for c in steps[1:]:
        value += scale * c
        scale *= 3
    return t.lead_sign * value


def steps_from_int(j: int) -> StepCode:
    """Invert code_int, re-inflating with the fewest strands.

    Leading zeros are prepended until no index dips below 1; trailing zeros
    are appended until the moving strand reaches the top.  Codes whose run
    ends in a downward U-turn admit no such completion and are rejected.
    """
    if j == 0:
        raise ValueError("code 0 is reserved for the unknot family")
    mag = abs(j)
    run = [1 + (mag & 1)]
    mag >>= 1
    while mag:
        run.append(mag % 3)
        mag //= 3
    # leading zeros: lift the run until the index walk stays >= 1
    d, i, low = 1, 1, 1
    for c in run:
        if c == 2:
            d = -d
        else:
            i += d
            low = min(low, i)
    lead = max(0, 1 - low)
    steps = [0] * lead + run
    # trailing zeros: march the moving strand from its final position to the top
    d, i, hi = 1, 1, 1
    for c in steps:
        if c == 2:
            d = -d
        else:
            i += d
        hi = max(hi, i)
    if d != 1:
        raise ValueError(f"code {j} has no valid inflation")
    steps.extend([0] * (hi - i))
    return StepCode(1 if j > 0 else -1, tuple(steps))


def word_from_code(j: int) -> BraidWord:
    return word_from_steps(steps_from_int(j))


def encode_word(w: BraidWord | WovenBraid) -> int:
    return code_int(step_code(w))


def steps_mirrored(t: StepCode) -> StepCode:
    """Step code of the mirror word (every crossing sign flipped)."""
    return StepCode(-t.lead_sign, t.steps)


def steps_rotated(t: StepCode) -> StepCode:
    """Step code of the half-turn image (word reversed, indices flipped)."""
    flips = sum(t.steps)
    sign = t.lead_sign if flips % 2 == 0 else -t.lead_sign
    return StepCode(sign, tuple(reversed(t.steps)))


def is_alternating(w: BraidWord) -> bool:
    """Whether crossing signs alternate with index parity.

    True when some global sign makes every crossing at index i carry sign
    (-1)^i times it, which makes the closure diagram alternating.
    """
    if not w.letters:
        return True
    for eps in (1, -1):
        if all(
            (1 if l > 0 else -1) == (eps if abs(l) % 2 == 0 else -eps)
            for l in w.letters
        ):
            return True
    return False


def symmetry_class(w: BraidWord | WovenBraid) -> str:
    """Classify against the half-turn image: "symmetric" when it returns the
    braid itself, "antisymmetric" when it returns the mirror, else "none"."""
    word = w.word() if isinstance(w, WovenBraid) else w
    r = rotate(word)
    if braids_equal(r, word):
        return "symmetric"
    if braids_equal(r, mirror(word)):
        return "antisymmetric"
    return "none"
