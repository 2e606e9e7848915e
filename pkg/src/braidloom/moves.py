"""Markov-style moves specialized to full-cycle woven braids.

Three moves act on woven braids of type (n): conjugation by a member of
the cascade subgroup (which is exactly the set of pure braids whose
conjugates stay woven), stabilization by a crossing with a fresh strand
(yielding type (n+1)), and its inverse.  Each preserves the closure's knot
type; the conjugation move additionally preserves the strand count.

The stabilization algebra rests on sigma_n A[i,n] sigma_n^-1 = A[i,n+1]:
pushing the new crossing through the pure part bumps every band's second
index, so the stabilized braid is woven on the nose, not just conjugate to
a woven one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combing import Band, BandWord, is_cascade_element
from .weaving import WovenBraid, woven_from_word
from .words import BraidWord, TypeVector, free_reduce

__all__ = [
    "MoveRecord",
    "conjugation_move",
    "stabilization_move",
    "destabilization_move",
    "lift_bands",
]


@dataclass(frozen=True)
class MoveRecord:
    """One executed move: what was done, to what, with what result."""

    kind: str  # "conjugation" | "stabilization" | "destabilization"
    parameter: BandWord | int | None
    before: WovenBraid
    after: WovenBraid


def _require_full_cycle(w: WovenBraid) -> int:
    if len(w.tv.parts) != 1:
        raise ValueError("move requires a full-cycle woven braid (single block)")
    return w.strands


def conjugation_move(
    w: WovenBraid, kappa: BandWord | BraidWord, *, checked: bool = True
) -> WovenBraid:
    """Replace w by kappa^-1 w kappa; wovenness is preserved iff kappa is a
    cascade element, so membership is validated up front.

    With checked=False the membership test is skipped and the output is
    validated instead, which accepts exactly the same conjugators but
    reports failure later and slower.
    """
    n = _require_full_cycle(w)
    kw = kappa.expand() if isinstance(kappa, BandWord) else kappa
    if kw.strands != n:
        raise ValueError("conjugator strand count mismatch")
    if checked and not is_cascade_element(kw):
        raise ValueError("conjugator is not a cascade element; result would not be woven")
    word = free_reduce(kw.inverse() * w.word() * kw)
    return woven_from_word(word, w.tv)


def stabilization_move(w: WovenBraid, sign: int = 1) -> WovenBraid:
    """Append a crossing with a fresh top strand: type (n) -> type (n+1).

    The closure gains a kink and keeps its knot type (Markov move).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    n = _require_full_cycle(w)
    base = w.word()
    word = BraidWord(n + 1, base.letters + (sign * n,))
    return woven_from_word(free_reduce(word), TypeVector((n + 1,)))


def destabilization_move(w: WovenBraid | BraidWord) -> WovenBraid:
    """Undo a stabilization: the reduced word must end in a last-index
    crossing and the rest must be woven one strand lower."""
    word = free_reduce(w.word() if isinstance(w, WovenBraid) else w)
    n = word.strands
    if n < 2 or not word.letters or abs(word.letters[-1]) != n - 1:
        raise ValueError("word does not end in a crossing with the top strand")
    prefix = word.letters[:-1]
    if any(abs(l) == n - 1 for l in prefix):
        raise ValueError("top strand is used before the final crossing")
    lowered = BraidWord(n - 1, prefix)
    try:
        return woven_from_word(lowered, TypeVector((n - 1,)))
    except ValueError as exc:
        raise ValueError("prefix is not woven one strand lower") from exc


def lift_bands(b: BandWord) -> BandWord:
    """Bump the second index of every top band: A[i,n] -> A[i,n+1].

    Equals conjugation by sigma_n on a strand count one higher.
    """
    n = b.strands
    if any(band.j != n for band in b.letters):
        raise ValueError("lift requires all bands to have second index = strand count")
    return BandWord(n + 1, tuple(Band(band.i, n + 1, band.sign) for band in b.letters))
