"""Knot-polynomial oracles for braid closures.

Two independent computations are provided: the Jones polynomial through the
Kauffman bracket state sum, and HOMFLY through the regular representation of
the Hecke algebra with the Markov trace.  They share no code, so agreement
under the variable specialization is a strong correctness check.

Conventions (pinned by the golden values in the tests):
  * HOMFLY satisfies v^-1 P(L+) - v P(L-) = z P(L0) with P(unknot) = 1,
    where L+ carries a positive generator.
  * The bracket expands a positive generator as A (identity smoothing)
    + A^-1 (cup-cap), and the Jones value is writhe-normalized.
  * Specializing v -> A^-4, z -> A^-2 - A^2 in HOMFLY of a knot yields the
    bracket-normalized Jones value exactly.
"""

from __future__ import annotations

from math import comb

from .limits import (
    DEFAULT_BRACKET_LETTERS,
    DEFAULT_HECKE_LETTERS,
    DEFAULT_HECKE_STRANDS,
    ResourceLimitError,
)
from .polynomials import OneVarLaurent, TwoVarLaurent
from .words import BraidWord, free_reduce, strand_permutation

__all__ = [
    "closure_components",
    "writhe",
    "jones_via_bracket",
    "homfly",
    "jones_from_homfly",
    "homfly_mirrored",
    "mfw_bound",
]


def closure_components(w: BraidWord) -> int:
    """Number of link components of the braid closure."""
    return len(strand_permutation(w).cycles())


def writhe(w: BraidWord) -> int:
    return w.writhe()


class _RollbackUnion:
    """Union by size without path compression, so merges can be undone."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n
        self.comps = n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            x = p[x]
        return x

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return None
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.comps -= 1
        return ry

    def undo(self, token: int) -> None:
        rx = self.parent[token]
        self.parent[token] = token
        self.size[rx] -= self.size[token]
        self.comps += 1


def _bracket_counts(w: BraidWord) -> dict[tuple[int, int], int]:
    """Histogram of (A-count minus B-count, loop count) over all smoothings."""
    n, letters = w.strands, w.letters
    l = len(letters)
    levels = l + 1

    def node(p: int, g: int) -> int:
        return (p - 1) * levels + g

    uf = _RollbackUnion(n * levels)
    for t, letter in enumerate(letters):
        i = abs(letter)
        for p in range(1, n + 1):
            if p != i and p != i + 1:
                uf.union(node(p, t), node(p, t + 1))
    for p in range(1, n + 1):
        uf.union(node(p, l), node(p, 0))

    counts: dict[tuple[int, int], int] = {}

    def go(t: int, ab: int) -> None:
        if t == l:
            key = (ab, uf.comps)
            counts[key] = counts.get(key, 0) + 1
            return
        letter = letters[t]
        i = abs(letter)
        pairs = (
            ((node(i, t), node(i, t + 1)), (node(i + 1, t), node(i + 1, t + 1))),
            ((node(i, t), node(i + 1, t)), (node(i, t + 1), node(i + 1, t + 1))),
        )
        for choice, joins in enumerate(pairs):
            d = 1 if (letter > 0) == (choice == 0) else -1
            tokens = [uf.union(a, b) for a, b in joins]
            go(t + 1, ab + d)
            for token in reversed(tokens):
                if token is not None:
                    uf.undo(token)

    go(0, 0)
    return counts


def jones_via_bracket(w: BraidWord, max_letters: int | None = None) -> OneVarLaurent:
    """Writhe-normalized Kauffman bracket of the closure, in the variable A."""
    w = free_reduce(w)
    cap = DEFAULT_BRACKET_LETTERS if max_letters is None else max_letters
    if len(w.letters) > cap:
        raise ResourceLimitError(
            f"bracket state sum capped at {cap} crossings, got {len(w.letters)}"
        )
    counts = _bracket_counts(w)
    delta = OneVarLaurent.from_dict({2: -1, -2: -1})
    max_loops = max(c for _, c in counts)
    dpow = [OneVarLaurent.one()]
    for _ in range(max_loops - 1):
        dpow.append(dpow[-1] * delta)
    total = OneVarLaurent()
    for (ab, loops), cnt in counts.items():
        total = total + OneVarLaurent.monomial(ab, cnt) * dpow[loops - 1]
    wr = w.writhe()
    return total * OneVarLaurent.monomial(-3 * wr, (-1) ** wr)


# Hecke algebra elements are dicts mapping a permutation (tuple of images of
# 1..k) to a Laurent coefficient in the three symbols v, z and the trace
# weight, stored as {(v_exp, z_exp, weight_exp): int}.

_P3 = dict


def _acc(out, key, poly: _P3, dv: int, dz: int, dh: int, mult: int) -> None:
    tgt = out.setdefault(key, {})
    for (a, b, h), co in poly.items():
        k = (a + dv, b + dz, h + dh)
        v = tgt.get(k, 0) + co * mult
        if v:
            tgt[k] = v
        elif k in tgt:
            del tgt[k]
    if not tgt:
        del out[key]


def _mul_gen(elem, i: int, inverse: bool):
    """Right-multiply by the i-th generator (or its inverse) of the algebra."""
    out: dict[tuple, _P3] = {}
    for p, poly in elem.items():
        grows = p.index(i) < p.index(i + 1)
        q = tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)
        if not inverse:
            if grows:
                _acc(out, q, poly, 0, 0, 0, 1)
            else:
                _acc(out, q, poly, 2, 0, 0, 1)
                _acc(out, p, poly, 1, 1, 0, 1)
        else:
            if not grows:
                _acc(out, q, poly, 0, 0, 0, 1)
            else:
                _acc(out, q, poly, -2, 0, 0, 1)
                _acc(out, p, poly, -1, 1, 0, -1)
    return out


def _markov_trace(elem, n: int) -> _P3:
    """Collapse strand by strand; each removal of a moved point costs one
    weight factor."""
    for k in range(n, 1, -1):
        nxt: dict[tuple, _P3] = {}
        for p, poly in elem.items():
            m = p[k - 1]
            if m == k:
                _acc(nxt, p[: k - 1], poly, 0, 0, 0, 1)
                continue
            sig = tuple(v - 1 if v > m else v for v in p[: k - 1])
            small = {}
            _acc(small, sig, poly, 0, 0, 1, 1)
            for idx in range(k - 2, m - 1, -1):
                small = _mul_gen(small, idx, False)
            for q, qpoly in small.items():
                _acc(nxt, q, qpoly, 0, 0, 0, 1)
        elem = nxt
    return elem.get((1,), {})


def homfly(
    w: BraidWord,
    max_strands: int | None = None,
    max_letters: int | None = None,
) -> TwoVarLaurent:
    """HOMFLY polynomial of the closure in the skein form v^-1 P+ - v P- = z P0."""
    w = free_reduce(w)
    scap = DEFAULT_HECKE_STRANDS if max_strands is None else max_strands
    lcap = DEFAULT_HECKE_LETTERS if max_letters is None else max_letters
    if w.strands > scap:
        raise ResourceLimitError(f"trace computation capped at {scap} strands")
    if len(w.letters) > lcap:
        raise ResourceLimitError(f"trace computation capped at {lcap} letters")
    n = w.strands
    elem = {tuple(range(1, n + 1)): {(0, 0, 0): 1}}
    for letter in w.letters:
        elem = _mul_gen(elem, abs(letter), letter < 0)
    traced = _markov_trace(elem, n)
    # normalize by weight^-(n-1); leftover inverse weights expand as
    # (v^-1 - v) / z per factor
    out: dict[tuple[int, int], int] = {}
    for (a, b, h), co in traced.items():
        low = (n - 1) - h
        if low < 0:
            raise AssertionError("trace produced excess weight factors")
        for t in range(low + 1):
            key = (a + 2 * t - low, b - low)
            val = out.get(key, 0) + co * comb(low, t) * (-1) ** t
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return TwoVarLaurent.from_dict(out)


def jones_from_homfly(p: TwoVarLaurent) -> OneVarLaurent:
    """Specialize to the bracket variable; defined for knot values only."""
    out: dict[int, int] = {}
    for (a, b), co in p.terms:
        if b < 0:
            raise ValueError("specialization requires a knot (one component)")
        for t in range(b + 1):
            exp = -4 * a + 4 * t - 2 * b
            val = out.get(exp, 0) + co * comb(b, t) * (-1) ** t
            if val:
                out[exp] = val
            elif exp in out:
                del out[exp]
    return OneVarLaurent.from_dict(out)


def homfly_mirrored(p: TwoVarLaurent) -> TwoVarLaurent:
    """HOMFLY of the mirror image: v -> v^-1, z -> -z."""
    return TwoVarLaurent.from_dict(
        {(-a, b): co * (-1) ** b for (a, b), co in p.terms}
    )


def mfw_bound(p: TwoVarLaurent) -> int:
    """Braid-index lower bound: half the v-degree spread plus one."""
    exps = p.first_exponents()
    if not exps:
        raise ValueError("zero polynomial has no degree spread")
    return (exps[-1] - exps[0]) // 2 + 1
