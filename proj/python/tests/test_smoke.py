import os
import pathlib

import pytest

import hilbstab

DATA = pathlib.Path(os.environ.get("HILBSTAB_TEST_DATA", pathlib.Path(__file__).parents[2] / "tests" / "data"))


def test_intervals_on_projective_plane():
    p2 = hilbstab.surface("projective_plane")
    assert hilbstab.interval(p2, 3, 1) == (1, 7)
    assert hilbstab.interval(p2, 5, 1) == (6, 18)
    assert hilbstab.coverage_threshold(p2, 1, e_min=3, horizon=10_000) == 1


def test_big_integers_round_trip():
    p2 = hilbstab.surface("projective_plane")
    e = 10**30
    lo, hi = hilbstab.interval(p2, e, 1)
    assert lo == (e * e - 3 * e) // 2 + 1
    assert hi - lo == 3 * e - 3


def test_del_pezzo_one():
    d1 = hilbstab.surface("del_pezzo", [1])
    assert hilbstab.gap(d1, 3, 1) == (5, 6)
    assert hilbstab.blowup_interval(d1, 8, 1, 2) == (27, 28)
    cp = hilbstab.classes(d1, horizon=200, d_prime=2)
    assert cp["n0"] == 22 and cp["period"] == 1 and cp["certified"]


def test_conic_bundle():
    assert hilbstab.conic_interval(9, 1, 1, 1, e=2, b=2, d=1) == (12, 15)
    assert hilbstab.conic_b_bound(9, 1, 1, 1, e=2, d=1) == 2


def test_goettsche_and_zeta():
    assert hilbstab.goettsche(3) == "s3 + x^2*L + x*L^2"
    assert hilbstab.goettsche_mod_L(7) == "s7"
    cp = hilbstab.brauer_severi_classes(3, 60)
    z = hilbstab.zeta(cp["labels"])
    assert z["form"] == "1 + (c1*t + c1*t^2 + c3*t^3)/(1 - t^3)"
    assert z["verified"]


def test_errors_map_to_python_exceptions():
    with pytest.raises(hilbstab.InvalidInput, match="parity"):
        hilbstab.interval(hilbstab.polarized(K_sq=0, h2=0, c1_sq=1, c1_dot_K=0), 1, 1)
    with pytest.raises(hilbstab.Inapplicable):
        hilbstab.classes(hilbstab.surface("del_pezzo", [1]), d_prime=1)
    with pytest.raises(hilbstab.HorizonError):
        hilbstab.zeta([0, 1, 2, 3])


def test_cli_entry_and_spec_files():
    code, out, _ = hilbstab.run_cli(["zeta", str(DATA / "bs3.json")])
    assert code == 0
    assert "1 + (c1*t + c1*t^2 + c3*t^3)/(1 - t^3)" in out
    code, _, err = hilbstab.run_cli(["intervals", str(DATA / "k3.json")])
    assert code == 2 and "blocked" in err
    cp = hilbstab.spec_classes(str(DATA / "conic.json"), horizon=300)
    assert cp["certified"] and cp["period"] == 1
