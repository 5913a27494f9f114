"""Smoke test for the hookw_py extension module.

Build the extension (``maturin develop`` or ``cargo build -p hookw-py
--features extension-module`` and copy ``libhookw_py.so`` to
``hookw_py.so`` on the import path), then run this script.
"""

from fractions import Fraction

import hookw_py as hw


def main() -> None:
    assert hw.central_charge("2B", 1, 1, 1) == Fraction(-25, 2)
    assert hw.central_charge("2B", 1, 1, "1") == Fraction(-25, 2)
    assert "psi" in hw.central_charge("2B", 1, 1)

    c, lam = hw.curve("1C", 1, 2, Fraction(3, 10))
    assert c == hw.central_charge("1C", 1, 2, Fraction(3, 10))
    assert isinstance(lam, Fraction)

    info = hw.describe("2C", 1, 2)
    assert info["kind"] == "hook-type"

    general, closed = hw.sing_weight("sp", "affine", 2, 5, 3)
    assert general == closed

    assert hw.verify_trialities(1, 2)
    outcomes = hw.verify_coincidences("2B", "sp", 0, 1, 1)
    assert all(label != "fail" for _, label in outcomes)

    points = hw.rational_points("2B", 0, 1, r=(1, 3))
    eighth = [w for w in points if w["psi"] == Fraction(1, 8)]
    assert eighth and eighth[0]["partner"]["algebra"] == "sp(2)"

    psis = [p["psi1"] for p in hw.intersect(("2B", 0, 1), ("2B", 1, 1))]
    assert all(isinstance(x, Fraction) for x in psis)

    try:
        hw.central_charge("3X", 1, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown family accepted")

    print("hookw_py smoke test passed")


if __name__ == "__main__":
    main()
