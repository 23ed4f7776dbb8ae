import pytest

from monoidkit import (CapExceeded, CutProfile, InputError, build_expansion,
                       check_eta_aperiodic, check_refinement, cut,
                       generator_map, identity_profile, is_aperiodic,
                       letter_profile, profile_product, word_image,
                       word_profile)
from monoidkit.catalog import z2, z3
from helpers import all_words


def test_letter_profile_examples(cat):
    M, g = cat["z2"]
    assert letter_profile(M, g, "a", 1).tuples == ((1,),)
    assert letter_profile(M, g, "a", 2).tuples == ((0, 1), (1, 0))
    # a letter mapped to the identity collapses all slot placements
    g_id = generator_map(M, {"c": 0})
    assert letter_profile(M, g_id, "c", 3).tuples == ((0, 0, 0),)
    with pytest.raises(InputError):
        letter_profile(M, g, "z", 2)


def test_profile_product_identity_laws(cat):
    for _, (M, g) in cat.items():
        for n in (1, 2, 3):
            one = identity_profile(M, n)
            for w in all_words("ab", 3):
                p = cut(M, g, w, n)
                assert profile_product(M, n, p, one) == p
                assert profile_product(M, n, one, p) == p


def test_profile_product_z2_hand_example(cat):
    M, g = cat["z2"]
    p1 = letter_profile(M, g, "a", 2)
    assert profile_product(M, 2, p1, p1).tuples == ((0, 0), (1, 1))


def test_profile_product_arity_mismatch(cat):
    M, g = cat["z2"]
    with pytest.raises(InputError):
        profile_product(M, 2, letter_profile(M, g, "a", 2), letter_profile(M, g, "a", 3))


def test_profile_product_matches_concatenation(cat):
    # cut(u) * cut(v) == cut(uv) for all u, v of length <= 5
    for _, (M, g) in cat.items():
        for n in (1, 2, 3):
            single = {w: cut(M, g, w, n) for w in all_words("ab", 5)}
            joined: dict[str, CutProfile] = {}
            for u in all_words("ab", 5):
                for v in all_words("ab", 5):
                    uv = u + v
                    if uv not in joined:
                        joined[uv] = cut(M, g, uv, n)
                    assert profile_product(M, n, single[u], single[v]) == joined[uv]


def test_expansion_of_trivial_monoid(cat):
    M, g = cat["trivial"]
    for n in (1, 2, 3):
        assert build_expansion(M, g, n).order == 1


def test_arity_one_expansion_is_isomorphic(cat):
    for _, (M, g) in cat.items():
        E = build_expansion(M, g, 1)
        assert E.order == M.order
        assert sorted(E.eta) == list(range(M.order))
        for i in range(E.order):
            for j in range(E.order):
                assert E.eta[E.table[i][j]] == M.mul(E.eta[i], E.eta[j])


def test_z2_single_generator_expansion():
    M = z2()
    g = generator_map(M, {"a": 1})
    E = build_expansion(M, g, 2)
    assert E.order == 3
    assert E.profiles == (
        CutProfile(2, ((0, 0),)),
        CutProfile(2, ((0, 1), (1, 0))),
        CutProfile(2, ((0, 0), (1, 1))),
    )
    assert E.representatives == ("", "a", "aa")
    assert [len(E.fiber(e)) for e in range(M.order)] == [2, 1]
    # {P1, P2} is a two-cycle with P2 as its local identity
    assert E.table[1][1] == 2
    assert E.table[1][2] == 1 and E.table[2][1] == 1
    assert E.table[2][2] == 2


def test_eta_surjects_onto_generated_submonoid(cat):
    for _, (M, g) in cat.items():
        for n in (1, 2, 3):
            E = build_expansion(M, g, n)
            assert tuple(sorted(set(E.eta))) == g.generated
            for i in range(E.order):
                for j in range(E.order):
                    assert E.eta[E.table[i][j]] == M.mul(E.eta[i], E.eta[j])


def test_representative_round_trip(cat):
    for _, (M, g) in cat.items():
        for n in (1, 2, 3):
            E = build_expansion(M, g, n)
            for i in range(E.order):
                rep = E.representatives[i]
                assert cut(M, g, rep, n) == E.profiles[i]
                assert word_image(M, g, rep) == E.eta[i]


def test_profile_equality_is_a_congruence(cat):
    for _, (M, g) in cat.items():
        for n in (1, 2, 3):
            classes: dict[CutProfile, list[str]] = {}
            for w in all_words("ab", 4):
                classes.setdefault(cut(M, g, w, n), []).append(w)
            for profile, members in classes.items():
                rep = members[0]
                img = word_image(M, g, rep)
                for w in members[1:]:
                    assert word_image(M, g, w) == img
                    for c in "ab":
                        assert cut(M, g, rep + c, n) == cut(M, g, w + c, n)
                        assert cut(M, g, c + rep, n) == cut(M, g, c + w, n)


def test_eta_aperiodic_examples(cat):
    M = z2()
    g = generator_map(M, {"a": 1})
    E1 = build_expansion(M, g, 1)
    assert check_eta_aperiodic(E1) == (True, None)
    E2 = build_expansion(M, g, 2)
    assert E2.fiber(0) == (0, 2)
    assert check_eta_aperiodic(E2) == (True, None)
    for _, (Mc, gc) in cat.items():
        for n in (1, 2, 3):
            assert check_eta_aperiodic(build_expansion(Mc, gc, n)) == (True, None)


def test_aperiodic_base_gives_aperiodic_expansion(cat):
    for name in ("trivial", "n3", "flipflop"):
        M, g = cat[name]
        for n in (1, 2, 3):
            E = build_expansion(M, g, n)
            ok, _ = is_aperiodic(E.as_monoid())
            assert ok


def test_non_generating_map_expands_the_submonoid():
    M = z3()
    g = generator_map(M, {"a": 0})
    assert g.generated == (0,)
    E = build_expansion(M, g, 2)
    assert E.order == 1
    assert set(E.eta) == {0}


def test_expansion_cap():
    M = z3()
    g = generator_map(M, {"a": 1, "b": 2})
    with pytest.raises(CapExceeded) as ei:
        build_expansion(M, g, 3, cap=10)
    assert ei.value.count == 10


def test_refinement_examples(cat):
    M = z2()
    g = generator_map(M, {"a": 1})
    assert check_refinement(build_expansion(M, g, 2), build_expansion(M, g, 1))
    for _, (Mc, gc) in cat.items():
        for n in (1, 2):
            hi = build_expansion(Mc, gc, n + 1)
            lo = build_expansion(Mc, gc, n)
            assert check_refinement(hi, lo)


def test_refinement_input_errors(cat):
    Ma, ga = cat["z2"]
    Mb, gb = cat["z3"]
    with pytest.raises(InputError):
        check_refinement(build_expansion(Ma, ga, 2), build_expansion(Mb, gb, 1))
    with pytest.raises(InputError):
        check_refinement(build_expansion(Ma, ga, 3), build_expansion(Ma, ga, 1))


def test_parallel_build_is_identical(cat):
    for name in ("n3", "flipflop"):
        M, g = cat[name]
        assert build_expansion(M, g, 2, jobs=4) == build_expansion(M, g, 2)


def test_word_profile_equals_cut(cat):
    for _, (M, g) in cat.items():
        for w in all_words("ab", 4):
            for n in (1, 2, 3):
                assert word_profile(M, g, w, n) == cut(M, g, w, n)


def test_profile_product_on_seeded_long_words(cat):
    # spot checks past the exhaustive bound; MONO_SEED pins the sample
    import os
    import random
    rng = random.Random(int(os.environ.get("MONO_SEED", "0")))
    for _, (M, g) in cat.items():
        for _ in range(25):
            u = "".join(rng.choice("ab") for _ in range(rng.randint(6, 12)))
            v = "".join(rng.choice("ab") for _ in range(rng.randint(6, 12)))
            n = rng.randint(1, 3)
            lhs = profile_product(M, n, cut(M, g, u, n), cut(M, g, v, n))
            assert lhs == cut(M, g, u + v, n)
