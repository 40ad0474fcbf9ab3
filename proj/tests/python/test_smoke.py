import pytest

import rootnum


def test_known_values():
    assert rootnum.root_number(3, 2) == -1
    assert rootnum.root_number(5, 2) == 1
    assert rootnum.root_number(3, 3) == -1


def test_record_matches_root_number():
    rec = rootnum.compute(7, -45)
    assert rec["status"] == "ok"
    assert rec["global"] == rootnum.root_number(7, -45)
    signs = 1
    for f in rec["factors"]:
        signs *= f["sign"]
    assert signs == rec["global"]
    assert rec["factors"][0]["place"] == "inf"


def test_unsupported_curve():
    # 7^4 = 1 mod 25, so 7 is a fifth power in Q_5
    assert rootnum.is_pth_power(7, 5)
    rec = rootnum.compute(5, 7)
    assert rec["supported"] is False
    assert rec["status"] == "UnsupportedTameCase"
    with pytest.raises(rootnum.RootnumError) as info:
        rootnum.root_number(5, 7)
    assert info.value.kind == "UnsupportedTameCase"


def test_bad_input_raises():
    with pytest.raises(rootnum.RootnumError):
        rootnum.root_number(4, 1)
    with pytest.raises(ValueError):
        rootnum.legendre(3, 9)


def test_big_integers_round_trip():
    a = 5 * 2**131  # = 7 mod 9, not a cube in Q_3
    shift, coeffs = rootnum.find_model(3, a)
    assert len(coeffs) == 4 and coeffs[3] == 1
    assert rootnum.root_number(3, a) in (-1, 1)


def test_local_symbols_agree_with_bruteforce():
    for ell in (2, 3, 5):
        for a in (-6, -1, 2, 3, 10):
            for b in (-3, -1, 5, 6):
                assert rootnum.hilbert(a, b, ell) == rootnum.oracle.hilbert_bruteforce(a, b, ell)
    for a in range(1, 60):
        assert rootnum.is_pth_power(a, 3) == rootnum.oracle.pth_power_bruteforce(a, 3)


def test_discriminant():
    # x^3 + 3x^2 + 3
    assert rootnum.discriminant([3, 0, 3, 1]) == -567


def test_field_identities():
    for p, f in ((3, 1), (3, 2), (5, 1), (7, 1)):
        assert rootnum.oracle.count_points(p, f) == rootnum.oracle.gauss_trace_prediction(p, f)
        assert rootnum.oracle.gauss_sum_square_check(p, f)
    assert rootnum.oracle.parity_identity_check(11)
