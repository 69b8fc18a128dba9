"""Closed forms: frozen examples and cross-formula consistency."""

import random

import pytest

from cherry_ramsey.formulas import (
    cockayne_lorimer,
    debiasio_pm,
    faudree_schelp_paths,
    gr_cherries,
    irving,
    lb_cherries,
    r_cherries_dominant,
    r_cycle_vs_stars,
    r_k_2p3,
    r_k_t_cherries_rest_p3,
    scobee,
)


def test_lb_cherries_examples():
    assert lb_cherries(3, (2, 1, 1)) == 6
    assert lb_cherries(6, (3, 1, 1, 1, 1, 1)) == 9
    assert lb_cherries(5, (1, 1, 1, 1, 1)) == 7
    assert lb_cherries(1, (1,)) == 3
    assert lb_cherries(1, (3,)) == 9
    assert lb_cherries(2, (2, 2)) == 7


def test_gr_cherries_examples():
    assert gr_cherries(3, (2, 1, 1)) == 6
    assert gr_cherries(3, (1, 1, 1)) == 3
    assert gr_cherries(2, (2, 2)) == 7
    assert gr_cherries(4, (3, 2, 2, 1)) == 11


def test_bounds_reject_bad_input():
    for fn in (lb_cherries, gr_cherries):
        with pytest.raises(ValueError):
            fn(0, ())
        with pytest.raises(ValueError):
            fn(2, (1,))
        with pytest.raises(ValueError):
            fn(2, (1, 0))


def test_lb_dominates_gr():
    rng = random.Random(41)
    for _ in range(300):
        k = rng.randint(1, 7)
        counts = tuple(rng.randint(1, 6) for _ in range(k))
        assert lb_cherries(k, counts) >= gr_cherries(k, counts)


def test_dominant_formula():
    r = r_cherries_dominant(2, (4, 2))
    assert r.applicable and r.value == 13
    r = r_cherries_dominant(1, (5,))
    assert r.applicable and r.value == 15
    r = r_cherries_dominant(2, (2, 2))
    assert not r.applicable and r.value is None
    with pytest.raises(ValueError):
        r_cherries_dominant(2, (4,))


def test_dominant_matches_gr_and_lb_when_applicable():
    rng = random.Random(42)
    hits = 0
    for _ in range(500):
        k = rng.randint(1, 6)
        counts = tuple(rng.randint(1, 8) for _ in range(k))
        r = r_cherries_dominant(k, counts)
        if r.applicable:
            hits += 1
            assert r.value == gr_cherries(k, counts) == lb_cherries(k, counts)
    assert hits > 20


def test_cycle_vs_stars_formula():
    r = r_cycle_vs_stars(2, 2, 6, (1,))
    assert r.applicable and r.value == 6
    assert not r_cycle_vs_stars(2, 1, 6, (1,)).applicable
    assert not r_cycle_vs_stars(2, 2, 3, (2,)).applicable  # threshold 2*6-4 = 8 > 3
    r = r_cycle_vs_stars(3, 2, 20, (2, 2))
    assert r.applicable and r.value == 20 + 4 - 3 + 1
    with pytest.raises(ValueError):
        r_cycle_vs_stars(2, 2, 2, (1,))
    with pytest.raises(ValueError):
        r_cycle_vs_stars(3, 2, 6, (1,))


def test_two_cherry_multicolor_formula():
    assert r_k_2p3(9).value == 20
    assert r_k_2p3(11).value == 24
    assert r_k_2p3(14).value == 29
    assert r_k_2p3(16).value == 33
    for k in (1, 2, 3, 7, 8, 12, 13):
        r = r_k_2p3(k)
        assert not r.applicable if k % 2 == 0 or k < 9 else r.applicable
    with pytest.raises(ValueError):
        r_k_2p3(0)


def test_t_cherries_formula_values():
    expect2 = {2: 6, 3: 6, 4: 6, 5: 8, 6: 8, 7: 10, 8: 10, 9: 12}
    for k, v in expect2.items():
        assert r_k_t_cherries_rest_p3(2, k).value == v
    expect3 = {2: 9, 3: 9, 4: 9, 5: 9, 6: 11, 7: 11, 8: 11, 9: 13, 10: 13}
    for k, v in expect3.items():
        assert r_k_t_cherries_rest_p3(3, k).value == v
    assert not r_k_t_cherries_rest_p3(2, 1).applicable
    assert not r_k_t_cherries_rest_p3(3, 1).applicable
    with pytest.raises(ValueError):
        r_k_t_cherries_rest_p3(4, 3)


def test_t_cherries_consistent_with_lower_bound():
    for k in range(2, 20):
        r = r_k_t_cherries_rest_p3(2, k)
        assert r.value == lb_cherries(k, (2,) + (1,) * (k - 1))
    for k in range(2, 20):
        r = r_k_t_cherries_rest_p3(3, k)
        lb = lb_cherries(k, (3,) + (1,) * (k - 1))
        if k == 6:
            assert r.value == lb + 2  # the sporadic ten-vertex witness beats the base bound
        else:
            assert r.value == lb


def test_irving():
    assert irving(1).value == 3
    assert irving(2).value == 3
    assert irving(3).value == 5
    assert irving(5).value == 7
    assert [irving(k).value for k in range(1, 9)] == [3, 3, 5, 5, 7, 7, 9, 9]
    with pytest.raises(ValueError):
        irving(0)


def test_faudree_schelp_paths():
    r = faudree_schelp_paths(3, 2, 2)
    assert r.applicable and r.value == 7
    assert faudree_schelp_paths(3, 3, 1).value == 9
    assert faudree_schelp_paths(5, 2, 1).value == 11
    assert not faudree_schelp_paths(3, 1, 2).applicable
    with pytest.raises(ValueError):
        faudree_schelp_paths(1, 2, 2)


def test_scobee():
    assert scobee(2, 1, 1).value == 6
    assert scobee(2, 2, 2).value == 8
    assert scobee(3, 1, 1).value == 9
    assert scobee(3, 3, 3).value == 13
    assert not scobee(1, 1, 1).applicable
    assert not scobee(1, 2, 1).applicable
    with pytest.raises(ValueError):
        scobee(2, 0, 1)


def test_scobee_agrees_with_faudree_schelp_when_third_is_trivial():
    # a single-cherry third target never changes the two-target value
    for m1 in range(2, 6):
        for m2 in range(1, m1 + 1):
            assert scobee(m1, m2, 1).value == faudree_schelp_paths(3, m1, m2).value


def test_cockayne_lorimer():
    assert cockayne_lorimer((1, 1, 1)).value == 2
    assert cockayne_lorimer((3, 1)).value == 6
    assert cockayne_lorimer((2, 2)).value == 5
    with pytest.raises(ValueError):
        cockayne_lorimer(())


def test_debiasio_pm():
    r = debiasio_pm((6, 3))
    assert r.applicable and r.value == 6
    assert debiasio_pm((4, 2, 2)).value == 4 + 1 + 1 - 3 + 1
    assert not debiasio_pm((3, 4)).applicable
    assert not debiasio_pm((4, 1)).applicable
    assert not debiasio_pm((2, 2, 2)).applicable  # n1 < 2k - 2
    assert not debiasio_pm((5,)).applicable
    with pytest.raises(ValueError):
        debiasio_pm(())


def test_formula_result_shape():
    for r in (r_k_2p3(9), r_k_2p3(2), scobee(2, 1, 1), scobee(1, 1, 1)):
        assert (r.value is not None) == r.applicable
        assert isinstance(r.hypothesis_note, str) and r.hypothesis_note
