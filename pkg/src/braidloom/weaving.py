"""Woven braids and the conjugation algorithm that produces them.

A braid is woven for a composition (t_1,..,t_k) of its strand count when it
is the canonical block cycle braid followed by a pure braid whose combed
components vanish at every index interior to a block.  Equivalently: all
strands are constant except one per block, which travels from the bottom of
its block to the top.

Every braid is conjugate to a woven one.  The construction aligns the
strand permutation with the block cycles, then walks the interior indices
from the bottom up, each step conjugating away the left factor that keeps
the current strand busy.  Conjugation by the cycle braid pushes a factor's
index up by one, so earlier indices stay clean and the loop terminates with
all interior components trivial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combing import BandWord, comb, is_strand_free, left_factor
from .words import (
    BraidWord,
    Permutation,
    TypeVector,
    braids_equal,
    cycle_braid,
    free_reduce,
    strand_permutation,
)

__all__ = [
    "WovenBraid",
    "WeaveState",
    "align_cycles",
    "permutation_braid",
    "unwoven_indices",
    "weave",
    "is_woven",
    "woven_from_word",
]


@dataclass(frozen=True)
class WovenBraid:
    """Block cycle braid times one band-word component per block end."""

    tv: TypeVector
    components: tuple[BandWord, ...]

    def __post_init__(self) -> None:
        ends = self.tv.block_ends()
        if len(self.components) != len(ends):
            raise ValueError("one component per block end required")
        for end, comp in zip(ends, self.components):
            if comp.strands != self.tv.n:
                raise ValueError("component strand count must match the type")
            if any(b.j != end for b in comp.letters):
                raise ValueError(f"component at {end} may only use bands A[.,{end}]")

    @property
    def strands(self) -> int:
        return self.tv.n

    def component(self, end: int) -> BandWord:
        ends = self.tv.block_ends()
        if end not in ends:
            raise ValueError(f"{end} is not a block end of type {self.tv}")
        return self.components[ends.index(end)]

    def pure_part(self) -> BraidWord:
        letters: list[int] = []
        for comp in self.components:
            letters.extend(comp.expand().letters)
        return BraidWord(self.tv.n, tuple(letters))

    def word(self) -> BraidWord:
        """The defining spelling: cycle braid, then components ascending."""
        return cycle_braid(self.tv) * self.pure_part()


@dataclass(frozen=True)
class WeaveState:
    """Snapshot of the weaving loop after processing index s."""

    s: int
    alpha: BraidWord
    pure: BraidWord  # alpha^-1 * beta_tilde * (cycle conj of alpha)
    pending: tuple[int, ...]  # interior indices not yet free


def align_cycles(p: Permutation) -> tuple[TypeVector, Permutation]:
    """Type vector of p's cycle structure and a permutation aligning it.

    Cycles are taken longest first (ties by smallest element), each written
    from its smallest element, and mapped onto consecutive blocks from the
    top of the block downward.  The result tau satisfies
    tau(p(x)) = rho(tau(x)) with rho the canonical block cycle permutation.
    """
    cycles = p.cycles()
    parts = tuple(len(c) for c in cycles)
    images = [0] * p.n
    hi = 0
    for c in cycles:
        hi += len(c)
        for off, x in enumerate(c):
            images[x - 1] = hi - off
    return TypeVector(parts), Permutation(tuple(images))


def permutation_braid(tau: Permutation) -> BraidWord:
    """The positive braid lifting tau with each strand pair crossing at most once.

    Bubble-sorting the target arrangement back to the identity records the
    crossings; replaying them in reverse builds the lift, one letter per
    inversion of tau.
    """
    n = tau.n
    inv = tau.inverse()
    arr = [inv(k) for k in range(1, n + 1)]
    swaps: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append(i + 1)
                changed = True
    return BraidWord(n, tuple(reversed(swaps)))


def unwoven_indices(p: BraidWord, tv: TypeVector) -> tuple[int, ...]:
    """Interior indices whose component in the pure braid p is nontrivial."""
    return tuple(
        s for s in tv.interior() if s >= 2 and not is_strand_free(p, s)
    )


def weave(
    b: BraidWord, trace: list[WeaveState] | None = None
) -> tuple[WovenBraid, BraidWord]:
    """Conjugate b into woven form; returns (woven, conjugator).

    The woven word equals conjugator^-1 * b * conjugator as a braid.  Pass a
    list as trace to record the loop states.
    """
    n = b.strands
    tv, tau = align_cycles(strand_permutation(b))
    pi_tau = permutation_braid(tau)
    pi = cycle_braid(tv)

    def cconj(x: BraidWord) -> BraidWord:
        return free_reduce(pi * x * pi.inverse())

    beta_tilde = free_reduce(pi.inverse() * pi_tau.inverse() * b * pi_tau)
    alpha = BraidWord(n, ())
    pure = beta_tilde
    for s in tv.interior():
        if s < 2:
            continue
        a = left_factor(pure, s)
        alpha = free_reduce(alpha * a.expand())
        pure = free_reduce(alpha.inverse() * beta_tilde * cconj(alpha))
        if trace is not None:
            trace.append(WeaveState(s, alpha, pure, unwoven_indices(pure, tv)))

    f = comb(pure, "ascending")
    ends = tv.block_ends()
    for j in range(2, n + 1):
        if j not in ends and len(f.component(j)):
            raise RuntimeError(f"weave left a nontrivial interior component at {j}")
    woven = WovenBraid(
        tv, tuple(f.component(e) if e >= 2 else BandWord(n, ()) for e in ends)
    )
    conjugator = free_reduce(pi_tau * cconj(alpha))
    return woven, conjugator


def _derive_type(rho: Permutation) -> TypeVector | None:
    """Read a block type off a permutation if it has the canonical cycle shape."""
    parts: list[int] = []
    lo = 1
    while lo <= rho.n:
        hi = rho(lo)
        if hi < lo:
            return None
        if any(rho(t) != t - 1 for t in range(lo + 1, hi + 1)):
            return None
        parts.append(hi - lo + 1)
        lo = hi + 1
    return TypeVector(tuple(parts))


def is_woven(w: BraidWord, tv: TypeVector | None = None) -> bool:
    """Whether w is exactly the cycle braid of tv times block-end components.

    With tv omitted, the only type compatible with w's permutation is tried.
    """
    rho = strand_permutation(w)
    if tv is None:
        tv = _derive_type(rho)
        if tv is None:
            return False
    elif tv.n != w.strands:
        return False
    if rho != strand_permutation(cycle_braid(tv)):
        return False
    pure = free_reduce(cycle_braid(tv).inverse() * w)
    return not unwoven_indices(pure, tv)


def woven_from_word(w: BraidWord, tv: TypeVector | None = None) -> WovenBraid:
    """Parse a woven word into its canonical components; error if not woven."""
    rho = strand_permutation(w)
    if tv is None:
        tv = _derive_type(rho)
        if tv is None:
            raise ValueError("permutation does not match any block cycle shape")
    if not is_woven(w, tv):
        raise ValueError(f"word is not woven of type {tv}")
    pure = free_reduce(cycle_braid(tv).inverse() * w)
    f = comb(pure, "ascending")
    return WovenBraid(
        tv,
        tuple(
            f.component(e) if e >= 2 else BandWord(tv.n, ())
            for e in tv.block_ends()
        ),
    )
