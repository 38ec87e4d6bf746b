"""Smoke test for the quotlab extension module.

Build first:  maturin develop -m crates/py/Cargo.toml
"""

from fractions import Fraction

import quotlab


def main():
    cat = quotlab.Catalog.builtin()
    assert "p2" in cat.surface_names()

    p2 = cat.surface("p2")
    trivial = cat.bundle("p2", "O")
    h = cat.bundle("p2", "O(1)")
    tangent = cat.bundle("p2", "T(-1)")

    # Rank one: the Quot scheme is the Hilbert scheme of points.
    assert quotlab.segre_quot2(p2, trivial, h) == quotlab.segre_hilb2(p2, h)
    # Closed form against the projective-bundle pipeline.
    assert quotlab.segre_quot2(p2, tangent, h) == quotlab.segre_quot2_pipeline(p2, tangent, h)

    direct = quotlab.lambda_proj_direct(p2, tangent, h)
    closed = [quotlab.lambda_closed_form(p2, tangent, h, k) for k in range(len(direct))]
    assert direct == closed, (direct, closed)

    zero = cat.surface("zero")
    assert quotlab.segre_hilb2(zero, cat.bundle("zero", "any")) == 0

    assert quotlab.quot_euler_series(24, 1, 3) == [1, 24, 324, 3200]
    assert quotlab.quot_euler_series("1/2", 2, 1) == [1, 1]

    custom = quotlab.Surface("plane", ["H"], [[1]], [-3], 3, 3)
    assert custom.pair([2], ["1/2"]) == Fraction(1)
    line = quotlab.Bundle(1, [2])
    assert quotlab.segre_quot1(custom, quotlab.Bundle(1, [0]), line) == 4

    d = quotlab.AdhmDatum([[0, 0], [0, 0]], [[0, 0], [0, 0]], [[1, 0], [0, 1]])
    assert d.is_commuting() and d.is_stable() and d.stabilizer_dim() == 0
    assert d.tangent_dim() == d.l ** 2 + d.l * d.r

    for seed in range(20):
        rd = quotlab.AdhmDatum.random(2, 2, seed)
        if rd.is_stable():
            assert rd.stabilizer_dim() == 0
            assert 6 <= rd.tangent_dim() <= 8

    assert quotlab.sl2_jacobian_rank([1, 2, 3], [2, 4, 6]) == 2
    assert [quotlab.sl2_hilbert_coefficient(n) for n in range(4)] == ["1", "6", "18", "40"]

    try:
        quotlab.Bundle(1, [1], 5)
    except ValueError:
        pass
    else:
        raise AssertionError("rank-one bundle with c2 != 0 accepted")

    failed = [row for row in cat.crosscheck() if not row[2]]
    assert not failed, failed

    print("quotlab smoke test: ok")


if __name__ == "__main__":
    main()
