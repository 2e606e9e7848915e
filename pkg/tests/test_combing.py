import random

import pytest

from braidloom.combing import (
    Band,
    BandWord,
    as_band_word,
    band_text,
    cascade,
    comb,
    conjugate_by_cycle,
    delete_strand,
    drop_top,
    is_cascade_element,
    is_strand_free,
    left_factor,
    parse_bands,
    shift_down,
)
from braidloom.words import (
    BraidWord,
    TypeVector,
    braids_equal,
    free_reduce,
    strand_permutation,
)


def rand_pure(rng, n, conjugations):
    """Random pure braid built as a product of conjugated band generators."""
    letters = []
    for _ in range(conjugations):
        i = rng.randrange(1, n)
        j = rng.randrange(i + 1, n + 1)
        core = BandWord(n, (Band(i, j, rng.choice((1, -1))),)).expand()
        glen = rng.randrange(0, 4)
        g = []
        for _ in range(glen):
            k = rng.randrange(1, n)
            g.append(k if rng.random() < 0.5 else -k)
        gw = BraidWord(n, tuple(g))
        letters.extend((gw * core * gw.inverse()).letters)
    return free_reduce(BraidWord(n, tuple(letters)))


def test_band_validation():
    with pytest.raises(ValueError):
        Band(2, 2, 1)
    with pytest.raises(ValueError):
        Band(1, 2, 0)
    with pytest.raises(ValueError):
        BandWord(2, (Band(1, 3, 1),))


def test_band_word_ops():
    b = BandWord(3, (Band(1, 3, 1), Band(2, 3, -1)))
    assert len(b) == 2
    assert b.inverse().letters == (Band(2, 3, 1), Band(1, 3, -1))
    assert (b * b.inverse()).reduced().letters == ()
    assert b.expand().letters == (2, 1, 1, -2, -2, -2)


def test_band_text_round_trip():
    b = parse_bands("A[1,3] A[2,3]^-1")
    assert b.letters == (Band(1, 3, 1), Band(2, 3, -1))
    assert band_text(b) == "A[1,3] A[2,3]^-1"
    assert parse_bands("", strands=4).strands == 4
    with pytest.raises(ValueError):
        parse_bands("A[1;3]")


def test_delete_strand_basics():
    # deleting the top strand of A[1,3] leaves nothing
    w = BandWord(3, (Band(1, 3, 1),)).expand()
    assert delete_strand(w, 3).letters == ()
    # deleting strand 1 from A[1,3] also leaves nothing (after reduction)
    assert free_reduce(delete_strand(w, 1)).letters == ()
    # deleting an uninvolved low strand reindexes: A[2,3] -> A[1,2]
    v = BandWord(3, (Band(2, 3, 1),)).expand()
    assert free_reduce(delete_strand(v, 1)).letters == (1, 1)


def test_delete_strand_is_homomorphism():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randrange(3, 6)
        p = rand_pure(rng, n, 2)
        q = rand_pure(rng, n, 2)
        t = rng.randrange(1, n + 1)
        lhs = delete_strand(free_reduce(p * q), t)
        rhs = delete_strand(p, t) * delete_strand(q, t)
        assert braids_equal(lhs, rhs)


def test_comb_rejects_non_pure():
    with pytest.raises(ValueError):
        comb(BraidWord(3, (1,)))


def test_comb_single_band_is_its_own_component():
    for n in range(2, 6):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                p = BandWord(n, (Band(i, j, 1),)).expand()
                for order in ("ascending", "descending"):
                    f = comb(p, order)
                    for k in range(2, n + 1):
                        want = (Band(i, j, 1),) if k == j else ()
                        assert f.component(k).letters == want


def test_comb_recomposes():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randrange(2, 6)
        p = rand_pure(rng, n, rng.randrange(1, 4))
        for order in ("ascending", "descending"):
            f = comb(p, order)
            assert braids_equal(f.recompose(), p)


def test_comb_is_canonical():
    # words equal as braids comb to identical component tuples; pad one copy
    # with a braid relator, which is trivial but does not freely reduce
    relator = (1, 2, 1, -2, -1, -2)
    rng = random.Random(23)
    for _ in range(15):
        n = rng.randrange(3, 6)
        p = rand_pure(rng, n, 2)
        q = BraidWord(n, relator + p.letters)
        assert braids_equal(p, q)
        assert comb(p, "ascending") == comb(q, "ascending")
        # recombing the recomposition is the identity on factorizations
        f = comb(p, "descending")
        assert comb(f.recompose(), "descending") == f


def test_as_band_word_round_trip():
    rng = random.Random(29)
    for _ in range(20):
        n = rng.randrange(2, 6)
        p = rand_pure(rng, n, rng.randrange(1, 4))
        assert braids_equal(as_band_word(p).expand(), p)


def test_left_factor_splits():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.randrange(3, 6)
        p = rand_pure(rng, n, rng.randrange(1, 4))
        s = rng.randrange(2, n + 1)
        a = left_factor(p, s)
        assert all(b.j == s for b in a.letters)
        rest = free_reduce(a.expand().inverse() * p)
        assert is_strand_free(rest, s)


def test_is_strand_free():
    p = BandWord(4, (Band(1, 3, 1),)).expand()
    assert is_strand_free(p, 4)
    assert is_strand_free(p, 2)
    assert not is_strand_free(p, 3)


def test_shift_down_and_drop_top_letterwise():
    b = parse_bands("A[1,4] A[2,4]^-1 A[2,3]", strands=4)
    assert band_text(shift_down(b)) == "A[1,3]^-1 A[1,2]"
    assert band_text(drop_top(b)) == "A[2,3]"


def test_shift_maps_are_braid_homomorphisms():
    # letterwise maps agree with the strand-deletion maps on the braid level
    rng = random.Random(37)
    for _ in range(15):
        n = rng.randrange(3, 6)
        p = rand_pure(rng, n, 2)
        bw = as_band_word(p)
        assert braids_equal(
            delete_strand(p, 1), BandWord(n - 1, _reindex(shift_down(bw))).expand()
        )
        assert braids_equal(
            delete_strand(p, n), BandWord(n - 1, _reindex(drop_top(bw))).expand()
        )


def _reindex(b):
    # view a band word that avoids index n on one strand fewer
    return tuple(Band(x.i, x.j, x.sign) for x in b.letters)


def test_conjugate_by_cycle():
    tv = TypeVector((3,))
    w = BraidWord(3, (2, 2))
    got = conjugate_by_cycle(w, tv)
    # pi = sigma_1 sigma_2, so pi A[2,3] pi^-1 is a pure braid again
    assert strand_permutation(got).is_identity
    assert braids_equal(got, BraidWord(3, (1, 2)) * w * BraidWord(3, (1, 2)).inverse())


def _linking_numbers(w):
    # signed crossings between each strand pair, halved
    counts = {}
    pos = list(range(w.strands + 1))  # pos[p] = strand at position p
    for letter in w.letters:
        i = abs(letter)
        a, b = pos[i], pos[i + 1]
        key = (min(a, b), max(a, b))
        counts[key] = counts.get(key, 0) + (1 if letter > 0 else -1)
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    return {k: v // 2 for k, v in counts.items() if v}


def test_cycle_conjugate_of_top_band_lands_low():
    # conjugating A[i,n] by the full cycle gives a conjugate of A[1,i+1]:
    # its abelianization is a single +1 linking of the pair {1, i+1}
    for n in range(3, 6):
        tv = TypeVector((n,))
        for i in range(1, n):
            w = BandWord(n, (Band(i, n, 1),)).expand()
            got = conjugate_by_cycle(w, tv)
            assert strand_permutation(got).is_identity
            assert _linking_numbers(got) == {(1, i + 1): 1}


def test_cascade_membership():
    rng = random.Random(41)
    for n in range(3, 6):
        # cascades of random top-strand words are members
        for _ in range(8):
            letters = []
            for _ in range(rng.randrange(1, 4)):
                i = rng.randrange(1, n)
                letters.append(Band(i, n, rng.choice((1, -1))))
            b = BandWord(n, tuple(letters))
            k = cascade(b)
            assert is_cascade_element(k)
            assert is_cascade_element(k.expand())
    # A[1,n] is its own cascade (its shifted tail is trivial), so it belongs
    assert is_cascade_element(BandWord(3, (Band(1, 3, 1),)))
    # generic low bands do not
    assert not is_cascade_element(BandWord(3, (Band(2, 3, 1),)))
    assert not is_cascade_element(BandWord(3, (Band(1, 2, 1),)))
    # the identity is a member
    assert is_cascade_element(BraidWord(4, ()))


def test_cascade_requires_top_bands():
    with pytest.raises(ValueError):
        cascade(BandWord(3, (Band(1, 2, 1),)))


def test_cascade_shape():
    b = BandWord(3, (Band(2, 3, 1),))
    k = cascade(b)
    assert k.letters == (Band(2, 3, 1), Band(1, 2, 1))
