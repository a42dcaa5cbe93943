from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from spantrees import golden
from spantrees.cfinite import (
    RationalGF,
    Recurrence,
    _candidate,
    expand_gf,
    fit_gf,
    gf_equal,
    guess_recurrence,
    palindrome_check,
    recurrence_to_gf,
    required_terms,
    verify_gf,
)
from spantrees.errors import FitFailure, InsufficientData, InvalidGF, InvalidParameter
from spantrees.graphs import FamilySpec
from spantrees.matrix_tree import spanning_tree_seq, total_leaves_seq

H2 = [8, 21, 55, 144, 377, 987, 2584, 6765, 17711, 46368, 121393, 317811]


def test_constant_sequence():
    rec = guess_recurrence([1] * 12, 1)
    assert rec.order == 1 and rec.coeffs == (1,) and rec.offset == 0
    gf = recurrence_to_gf(rec, [1])
    assert gf == RationalGF((1,), (1, -1))


def test_path_power_two():
    rec = guess_recurrence(H2, 2)
    assert rec.order == 2
    assert rec.coeffs == (Fraction(-1), Fraction(3))
    assert rec.guard_verified == len(H2) - 4
    gf = recurrence_to_gf(rec, H2[:2])
    assert gf == RationalGF((8, -3), (1, -3, 1))
    assert gf_equal(gf, golden.load("path_power_r2_trees").gf)


def test_cayley_is_not_cfinite():
    cayley = [n ** (n - 2) for n in range(2, 12)]
    with pytest.raises(FitFailure):
        guess_recurrence(cayley, 2)


def test_insufficient_data():
    with pytest.raises(InsufficientData, match="needs"):
        guess_recurrence(H2[:8], 2)
    assert required_terms(2) == 9
    assert required_terms(20) == 50


def test_leaf_gf_denominator_degree():
    fam = FamilySpec.create("path-power", r=2)
    seq = total_leaves_seq(fam, 20)
    # Expanding the transcribed generating function gives 18, 54, ... as well.
    assert seq.terms[:2] == (18, 54)
    gf, rec = fit_gf(seq, 6)
    assert gf.den_degree == 4
    assert gf_equal(gf, golden.load("path_power_r2_leaves").gf)


def test_offset_recurrence():
    # 5, then the all-ones tail: 1/(1-t) + 4
    terms = [5] + [1] * 15
    rec = guess_recurrence(terms, 3)
    assert rec.order == 1 and rec.offset == 1
    gf = recurrence_to_gf(rec, terms[:2])
    assert verify_gf(gf, terms)
    assert gf_equal(gf, RationalGF((5, -4), (1, -1)))


def test_zero_leading_coefficient_is_peeled():
    # a[n+2] = a[n+1] has c0 = 0 at order 2, so it is really order 1 after one term
    rec = _candidate([3, 1, 1, 1, 1], 2)
    assert rec is not None and rec.order == 1 and rec.offset == 1


def test_recurrence_validation():
    with pytest.raises(InvalidParameter):
        Recurrence(2, (Fraction(0), Fraction(1)))
    with pytest.raises(InvalidParameter):
        recurrence_to_gf(Recurrence(1, (Fraction(1),)), [1, 2])


def test_expand_examples():
    assert expand_gf(RationalGF((1,), (1, -1)), 4).terms == (1, 1, 1, 1)
    assert expand_gf(golden.load("cycle_power_r2_trees").gf, 1).terms == (125,)
    with pytest.raises(InvalidGF):
        expand_gf(RationalGF((1,), (0, 1)), 3)
    with pytest.raises(InvalidGF):
        expand_gf(RationalGF((1,), (2, 1)), 3)


def test_gf_equal_examples():
    assert gf_equal(RationalGF((8, -3), (1, -3, 1)), golden.load("path_power_r2_trees").gf)
    assert gf_equal(RationalGF((2, -2), (1, -2, 1)), RationalGF((2,), (1, -1)))
    assert not gf_equal(RationalGF((2,), (1, -1)), RationalGF((1,), (1, -1)))


def test_verify_against_fresh_sequences():
    seq = spanning_tree_seq(FamilySpec.create("cycle-power", r=2), 30)
    assert verify_gf(golden.load("cycle_power_r2_trees").gf, seq)
    seq = spanning_tree_seq(FamilySpec.create("path-power", r=3), 30)
    assert verify_gf(golden.load("path_power_r3_trees").gf, seq)
    assert not verify_gf(golden.load("path_power_r2_trees").gf, seq)


def test_normalization():
    gf = RationalGF.normalized([Fraction(1, 2)], [2, Fraction(-2, 3)])
    assert gf.den[0] == 1 or gf.den[0] > 0
    assert gf_equal(gf, RationalGF((3,), (12, -4)))
    assert Fraction(gf.num[0], gf.den[0]) == Fraction(1, 4)


def test_json_round_trip():
    gf = golden.load("cycle_power_r3_leaves").gf
    assert RationalGF.from_json(gf.to_json()) == gf


def test_palindrome_check():
    assert palindrome_check([1, -3, 1])
    assert palindrome_check([1, 1])
    assert not palindrome_check([3, 2, 1])


def test_eventually_zero_sequence():
    terms = [4, -1] + [0] * 12
    gf, rec = fit_gf(terms, 3)
    assert rec.offset == 2
    assert gf_equal(gf, RationalGF((4, -1), (1,)))


def test_negative_terms_allowed():
    terms = [(-2) ** n - 3 for n in range(20)]
    gf, rec = fit_gf(terms, 4)
    assert rec.order == 2
    assert expand_gf(gf, 20).terms == tuple(terms)


# -- properties --------------------------------------------------------------

dens = st.lists(st.integers(-3, 3), min_size=1, max_size=4).map(lambda t: (1, *t)).filter(lambda d: d[-1] != 0)
nums = st.lists(st.integers(-5, 5), min_size=1, max_size=4).filter(any)


@settings(max_examples=30, deadline=None)
@given(nums, dens)
def test_fit_round_trip(num, den):
    gf = RationalGF(tuple(num), den)
    bound = len(num) + len(den)
    n = required_terms(bound)
    seq = expand_gf(gf, n)
    fitted, rec = fit_gf(seq, bound)
    assert expand_gf(fitted, n).terms == seq.terms
    assert gf_equal(fitted, gf)
    assert rec.holds_on(seq.terms)
    assert fitted.den[0] == 1
    # minimality: nothing shorter reproduces the data
    if rec.order > 1:
        with pytest.raises(FitFailure):
            guess_recurrence(seq.terms[rec.offset:], rec.order - 1)


@settings(max_examples=30, deadline=None)
@given(nums, dens, st.integers(0, 40))
def test_extend_matches_expansion(num, den, extra):
    gf = RationalGF(tuple(num), den)
    bound = len(num) + len(den)
    seq = expand_gf(gf, required_terms(bound) + extra)
    _, rec = fit_gf(seq, bound)
    head = list(seq.terms[: rec.order + rec.offset])
    assume(rec.offset == 0)
    assert tuple(rec.extend(head, len(seq))) == seq.terms
