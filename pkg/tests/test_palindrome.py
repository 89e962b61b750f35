"""palindrome: quotient-level checks, omega sequence, reflection search."""

import pytest

from anthyphairesis.engine import Expansion, expand_sqrt, increment_factors
from anthyphairesis.palindrome import (
    OmegaState,
    ReflectionNotFound,
    find_reflection,
    omega_sequence,
    period_stats,
    verify_palindrome,
)
from anthyphairesis.surd import is_perfect_square, isqrt


def test_verify_palindrome_paper_periods():
    r = verify_palindrome(expand_sqrt(19), 4)
    assert r.holds and r.last_quotient_is_double
    assert r.matched_pairs == ((1, 5), (2, 4))

    r = verify_palindrome(expand_sqrt(46), 6)
    assert r.holds
    assert r.case == "I"  # odd interior, center quotient 6

    r = verify_palindrome(expand_sqrt(13), 3)
    assert r.holds
    assert r.case == "II"  # even interior


def test_verify_palindrome_negative_case():
    fake = Expansion(preperiod=(1,), period=(2, 3), terminated=False)
    r = verify_palindrome(fake, 1)
    assert not r.holds  # 3 != 2*1
    assert r.case is None and r.center_index is None


def test_verify_palindrome_rejects_empty_period():
    with pytest.raises(ValueError):
        verify_palindrome(Expansion(preperiod=(2,), period=(), terminated=True), 2)


def test_verify_palindrome_fails_when_last_not_doubled():
    # take a real period and break only the final quotient
    e = expand_sqrt(19)
    broken = Expansion(preperiod=e.preperiod, period=e.period[:-1] + (7,), terminated=False)
    assert not verify_palindrome(broken, 4).holds


def test_omega_sequence_54():
    e = expand_sqrt(54)
    omegas = omega_sequence(e, 54)
    assert [(w.mu, w.lambda_next) for w in omegas] == [
        (7, 5), (3, 9), (6, 2), (6, 9), (3, 5), (7, 1),
    ]
    # derived: omega_3 and phi_4 denote the same line (alpha - 6*beta)/2
    phis = increment_factors(e, 54)
    assert (omegas[2].mu, omegas[2].lambda_next) == (phis[3].state.mu, phis[3].state.lam)


def test_omega_sequence_trivial():
    e = expand_sqrt(2)
    omegas = omega_sequence(e, 2)
    assert (omegas[0].mu, omegas[0].lambda_next) == (1, 1)  # omega_1 = phi_1


def test_find_reflection_cases():
    e = expand_sqrt(54)
    case, k = find_reflection(increment_factors(e, 54), omega_sequence(e, 54))
    assert (case, k) == ("I", 4)

    e = expand_sqrt(13)
    # lambda plateau lam_3 = lam_4 = 3 forces phi_3 = omega_3
    assert [st.lam for st in e.states[2:4]] == [3, 3]
    case, k = find_reflection(increment_factors(e, 13), omega_sequence(e, 13))
    assert (case, k) == ("II", 3)

    e = expand_sqrt(2)
    case, k = find_reflection(increment_factors(e, 2), omega_sequence(e, 2))
    assert (case, k) == ("II", 1)


def test_find_reflection_diagnostic_on_garbage():
    e = expand_sqrt(19)
    phis = increment_factors(e, 19)
    # omegas from a different radicand cannot close the reflection
    other = expand_sqrt(31)
    bad_omegas = tuple(
        OmegaState(mu=st.mu, lambda_next=st.lam) for st in other.states[: len(phis) - 1]
    )
    with pytest.raises(ReflectionNotFound):
        find_reflection(phis[:2], bad_omegas[:1])


def test_reflection_pairing_and_quotient_equalities():
    # phi read backwards meets omega: Case I phi_{k+t} = omega_{k-1-t},
    # Case II phi_{k+t} = omega_{k-t}; plus the I-pair equalities and the
    # doubled final quotient
    for n in range(2, 1001):
        if is_perfect_square(n):
            continue
        e = expand_sqrt(n)
        phis = increment_factors(e, n)
        omegas = omega_sequence(e, n)
        case, k = find_reflection(phis, omegas)
        l = len(e.period)
        period = e.period
        m = e.preperiod[0]
        if case == "I":
            assert l == 2 * k - 2
            for t in range(k - 1):
                p = phis[k + t - 1].state
                w = omegas[k - 2 - t]
                assert (p.mu, p.lam) == (w.mu, w.lambda_next)
            for j in range(k - 2):
                assert period[k + j - 1] == period[k - 3 - j]
        else:
            assert l == 2 * k - 1
            for t in range(k):
                p = phis[k + t - 1].state
                w = omegas[k - 1 - t]
                assert (p.mu, p.lam) == (w.mu, w.lambda_next)
            for j in range(k - 1):
                assert period[k + j - 1] == period[k - 2 - j]
        assert period[-1] == 2 * m


def test_palindrome_theorem_desk_scale():
    for n in range(2, 2001):
        if is_perfect_square(n):
            continue
        assert verify_palindrome(expand_sqrt(n), isqrt(n)).holds


def test_period_stats():
    s = period_stats(expand_sqrt(54))
    assert (s.period_length, s.distinct_logoi, s.platonic_number) == (6, 6, 7)
    s = period_stats(expand_sqrt(2))
    assert (s.period_length, s.distinct_logoi, s.platonic_number) == (1, 1, 2)
    assert period_stats(expand_sqrt(19)).period_length == 6


def test_period_stats_surd_path():
    from anthyphairesis.engine import expand_surd
    from anthyphairesis.surd import QuadraticSurd

    e = expand_surd(QuadraticSurd(7, 54, 5))
    s = period_stats(e)
    assert (s.period_length, s.distinct_logoi, s.platonic_number) == (6, 6, 7)
