import dataclasses
import random

import pytest

from colorpart.dissect import (
    IDENTITIES,
    DissectionId,
    Factor,
    Term,
    component_vanishes,
    extract,
    reassemble,
    verify_dissection,
)
from colorpart.etatheta import ThetaKind, theta_direct
from colorpart.series import EtaQuotient, Series, SeriesError, expand_eta_quotient, one


def test_extract_reindexes():
    s = Series(range(10))
    assert extract(s, 3, 1).coeffs == (1, 4, 7)
    assert extract(s, 3, 1).trunc == (9 - 1) // 3


def test_psi_has_no_3n_plus_2_terms():
    assert extract(theta_direct(ThetaKind.PSI, 300), 3, 2).is_zero()


def test_extract_of_one():
    for m in (1, 2, 5):
        assert extract(one(20), m, 0).coeffs[0] == 1
        assert extract(one(20), m, 0).coeffs[1:] == (0,) * (len(extract(one(20), m, 0)) - 1)
        for j in range(1, m):
            assert extract(one(20), m, j).is_zero()


def test_f3_4_over_f6_2_has_no_3n_plus_2():
    s = expand_eta_quotient({3: 4, 6: -2}, 600)
    assert extract(s, 3, 2).is_zero()


def test_extract_errors():
    with pytest.raises(SeriesError):
        extract(one(10), 3, 3)
    with pytest.raises(SeriesError):
        extract(one(1), 5, 4)


def test_component_vanishes_examples():
    a36 = expand_eta_quotient(EtaQuotient.colored(3, 6), 600, 3)
    assert component_vanishes(a36, 3, 1) == (True, None)
    a24 = expand_eta_quotient(EtaQuotient.colored(2, 4), 1200, 3)
    assert component_vanishes(a24, 27, 9) == (True, None)


def test_component_vanishes_witness():
    # p(4) = 5 is not 0 mod 3
    parts = expand_eta_quotient({1: -1}, 100)
    assert component_vanishes(parts, 5, 4, modulus=3) == (False, 0)
    assert component_vanishes(parts, 5, 4, modulus=5) == (True, None)


def test_component_vanishes_rereads_mod_ring():
    s = Series([0, 3, 6, 9], 9)
    assert component_vanishes(s, 1, 0, modulus=3) == (True, None)
    with pytest.raises(SeriesError):
        component_vanishes(Series([1, 2], 7), 1, 0, modulus=3)


@pytest.mark.parametrize("ident", list(DissectionId), ids=lambda d: d.value)
def test_identities_to_400(ident):
    assert verify_dissection(ident, 400) == (True, None)


def test_identity_lookup_by_name():
    assert verify_dissection("e4.5", 100) == (True, None)


def test_trunc_precondition():
    with pytest.raises(SeriesError):
        verify_dissection(DissectionId.E2_5, 8)


def test_printed_e4_4_fails():
    # the last term as printed, f18 instead of f18^9
    ident = IDENTITIES[DissectionId.E4_4]
    rhs = list(ident.rhs)
    rhs[-1] = Term(4, 4, (Factor(EtaQuotient({18: 1, 3: -2, 6: -6, 9: -3})),))
    assert verify_dissection(dataclasses.replace(ident, rhs=tuple(rhs)), 400) == (False, 22)


def test_broken_identity_reports_first_mismatch():
    ident = IDENTITIES[DissectionId.E2_5]
    rhs = (ident.rhs[0], dataclasses.replace(ident.rhs[1], scalar=-1))
    ok, where = verify_dissection(dataclasses.replace(ident, rhs=rhs), 100)
    assert not ok and where == 1


def test_reassembly():
    rng = random.Random(3)
    for m in range(1, 7):
        a = Series([rng.randint(-50, 50) for _ in range(rng.randint(m, 90))])
        parts = [extract(a, m, j) for j in range(m)]
        assert reassemble(parts, a.trunc) == a


def test_extract_linear():
    rng = random.Random(4)
    a = Series([rng.randint(-9, 9) for _ in range(50)])
    b = Series([rng.randint(-9, 9) for _ in range(50)])
    for m, j in [(2, 1), (3, 0), (5, 3)]:
        assert extract(a + b, m, j) == extract(a, m, j) + extract(b, m, j)
        assert extract(a.scale(7), m, j) == extract(a, m, j).scale(7)


@pytest.mark.parametrize("eq", [{3: 4, 6: -2}, {6: 1, 3: -2}, {9: 2, 18: -1, 27: 3}])
def test_function_of_q_m_has_single_component(eq):
    q = EtaQuotient(eq)
    assert q.is_function_of(3)
    s = expand_eta_quotient(q, 300)
    for j in (1, 2):
        assert extract(s, 3, j).is_zero()
