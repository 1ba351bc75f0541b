from hypothesis import given, settings, strategies as st
import pytest

from weylext import certifiers as cert
from weylext.engine import hom_base_gl2
from weylext.params import FieldParams
from weylext.partitions import Partition, is_row_regular, mullineux, partitions_of


def test_canonicalize_examples():
    data = cert.canonicalize_fm_pair((7, 3), (4, 3, 3))
    assert (data.s, data.ls, data.ms, data.r) == (3, (4, 3), (1, 2), 1)
    data = cert.canonicalize_fm_pair((2, 1), (1, 1, 1))
    assert (data.s, data.ls, data.ms) == (1, (1, 1), (1, 2))
    assert cert.canonicalize_fm_pair((3, 3), (3, 2, 1)) is None


def test_pseudo_standard_examples():
    rows = sorted(T.rows() for T in cert.enumerate_pseudo_standard((2, 1), (1, 1, 1)))
    assert rows == [[[1, 2], [3]], [[1, 3], [2]]]
    assert list(cert.enumerate_pseudo_standard((2, 1), (3,))) == []
    for lam in [(3,), (2, 2), (4, 2, 1)]:
        tabs = list(cert.enumerate_pseudo_standard(lam, lam))
        assert [T.rows() for T in tabs] == [[[j + 1] * n for j, n in enumerate(lam)]]


def test_nice_and_f_examples():
    data = cert.canonicalize_fm_pair((2, 1), (1, 1, 1))
    tabs = {str(T): T for T in cert.enumerate_pseudo_standard((2, 1), (1, 1, 1))}
    assert all(cert.is_nice(T, data) for T in tabs.values())
    by_rows = {tuple(map(tuple, T.rows())): T for T in tabs.values()}
    for g in (0, 5, 11):
        assert cert.f_coeff(by_rows[((1, 2), (3,))], [g], data) == 1
        assert cert.f_coeff(by_rows[((1, 3), (2,))], [g], data) == g


def test_nice_rejects_overfull_rows():
    lam, mu = Partition((5, 3, 2)), Partition((3, 3, 2, 2))
    data = cert.canonicalize_fm_pair(lam, mu)
    verdicts = {str(T): cert.is_nice(T, data) for T in cert.enumerate_pseudo_standard(lam, mu)}
    assert verdicts["11122|233|44"] is False
    assert True in verdicts.values()


def test_g_examples():
    data = cert.canonicalize_fm_pair((2, 1), (1, 1, 1))
    (b0, t0, tabs0), _ = cert.fm_side_conditions((2, 1), (1, 1, 1), data)
    assert (b0, t0) == (0, 1)
    S = tabs0[0]
    for g in (1, 7, 10):
        shift = data.ls[0] - data.ls[1] + data.ms[1] - 1 + data.s - g
        assert cert.g_coeff(S, 0, 1, [g], data) == cert.f_coeff(S, [g], data) * shift
    zero = data.ls[0] - data.ls[1] + data.ms[1] - 1 + data.s
    assert cert.g_coeff(S, 0, 1, [zero], data) == 0


def test_gamma_candidates_examples():
    big = cert.canonicalize_fm_pair((7, 3), (4, 3, 3))
    assert all(g[0] % 3 == 2 for g in cert.gamma_candidates(big, 3, 4))
    small = cert.canonicalize_fm_pair((2, 1), (1, 1, 1))
    assert list(cert.gamma_candidates(small, 3, 2)) == [(2,), (5,)]
    assert list(cert.gamma_candidates(small, 5, 2)) == []
    with pytest.raises(ValueError):
        list(cert.gamma_candidates(small, 2))


def test_fm_examples():
    found = cert.fayers_martin_certificate((7, 3), (4, 3, 3), 3)
    assert found is not None and found.gamma[0] % 3 == 2
    assert found.to_json()["shape_data"] == {"s": 3, "l": [4, 3], "m": [1, 2]}
    assert cert.fayers_martin_certificate((2, 1), (1, 1, 1), 3) is not None
    assert cert.fayers_martin_certificate((4,), (2, 2), 5) is None
    with pytest.raises(ValueError):
        cert.fayers_martin_certificate((3, 3), (3, 2, 1), 3)


def test_fm_certificate_validates_itself():
    good = cert.fayers_martin_certificate((2, 1), (1, 1, 1), 3)
    with pytest.raises(ValueError):
        cert.FMCertificate(good.e, (good.gamma[0] + 1,), good.witness, good.data, good.p)


def test_cp_examples():
    c = cert.carter_payne_certificate((2, 1), (3,), 3)
    assert (c.i, c.j, c.a, c.m, c.d) == (2, 1, 1, -1, 1)
    assert cert.carter_payne_certificate((2, 2), (4,), 5) is None
    assert cert.carter_payne_certificate((7, 3), (4, 3, 3), 3) is None
    assert cert.carter_payne_certificate((4, 3, 3), (7, 3), 3) is None


def test_cp_quantum_modulus():
    # l = 2, p = 3: moduli 2, 6, 18, ...
    assert cert.carter_payne_certificate((1, 1), (2,), 3, l=2) is not None
    assert cert.carter_payne_certificate((1, 1), (2,), 3) is None
    assert cert.carter_payne_certificate((5, 3), (8,), 3, l=2) is not None
    assert cert.carter_payne_certificate((5, 3), (8,), 3) is None
    assert hom_base_gl2((8, 0), (5, 3), FieldParams(3, 2)) == 1
    assert hom_base_gl2((8, 0), (5, 3), FieldParams(3, 3)) == 0


def test_wen_examples():
    lam = (35, 28, 21, 14, 7, 0)
    assert cert.wen_dims(lam, 2, 1, 7) == (0, 2)
    assert cert.wen_dims(lam, 3, 3, 7) == (1, 1)
    assert cert.wen_dims(lam, 1, 0, 7) == (0, 1)
    with pytest.raises(ValueError):
        cert.wen_dims((2, 1), 1, 0, 3)


def test_kleshchev_sheth_examples():
    for lam in [(4, 1), (3, 2), (5,)]:
        assert not cert.kleshchev_sheth_condition(lam, lam, 5)
    for mu in partitions_of(6):
        if is_row_regular(mu, 4) and mu != (6,):
            assert not cert.kleshchev_sheth_condition((6,), mu, 4)
    with pytest.raises(ValueError):
        cert.kleshchev_sheth_condition((2, 1), (2, 1), 3)


def test_kulkarni_bound():
    assert cert.kulkarni_bound((5, 2)) == 1
    assert cert.kulkarni_bound((7,)) == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 24), st.integers(0, 12), st.integers(0, 12), st.sampled_from([3, 5]))
def test_cp_sound_against_hom_classification(r, b1, b2, p):
    b1, b2 = min(b1, r // 2), min(b2, r // 2)
    lam, mu = (r - b1, b1), (r - b2, b2)
    found = cert.carter_payne_certificate(Partition(mu), Partition(lam), p) is not None
    if lam != mu:
        assert found == bool(hom_base_gl2(lam, mu, FieldParams(p, p)))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(1, 10))
def test_g_forms_agree_on_two_row_shapes(a, s):
    lam = Partition((a + s, a))
    if s > a:
        return
    mu = Partition((a, a, s))
    data = cert.canonicalize_fm_pair(lam, mu)
    for g in range(6):
        for b, t, tabs in cert.fm_side_conditions(lam, mu, data):
            for S in tabs:
                closed = cert.g_coeff_closed(S, b, t, [g], data)
                if closed is not None:
                    assert closed == cert.g_coeff_split(S, b, t, [g], data)
