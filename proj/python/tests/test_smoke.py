import pytest

import ggcomp


def test_mark():
    m = ggcomp.mark([18, 15, 14, 14, 12, 11, 10, 8, 8, 6, 4, 3, 2, 1])
    assert m["marks"] == [1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 1, 2, 1]
    assert ggcomp.mark([])["parts"] == []


def test_bad_part():
    with pytest.raises(ValueError):
        ggcomp.mark([0, 1])


def test_class_sizes_match_product():
    coeffs = ggcomp.product_coeffs(3, 2, 1, 20)
    for n in range(21):
        assert len(ggcomp.enumerate_class(3, 2, 1, n)) == coeffs[n]
        assert ggcomp.count_D(3, 2, 1, n) == coeffs[n]


def test_round_trip():
    for n in range(12):
        for parts in ggcomp.enumerate_class(3, 2, 1, n):
            lam, tau, eta = ggcomp.psi(parts, 3, 2, 1)
            assert ggcomp.phi(lam, tau, eta, 3, 2, 1) == parts
    assert ggcomp.phi([2], [], [3], 2, 2, 1) == [4, 1]


def test_identities():
    assert ggcomp.verify_gg(1, 60)[0]
    assert ggcomp.verify_companion(3, 2, 0, 40)[0]
    with pytest.raises(ValueError):
        ggcomp.verify_companion(2, 2, 0, 20)
