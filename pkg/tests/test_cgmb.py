import pytest

from magicsq.cgmb import (
    KIND_COR_QUADRATIC,
    KIND_TATE,
    KIND_UPPER,
    Decomposition,
    MotiveTerm,
    check_decomposition,
    express_residual,
    karpenko_blocks,
    tate_skeleton,
    witness_sum,
)
from magicsq.poincare import FlagVariety, poincare_poly
from magicsq.polyring import IntPoly, parse_poly
from magicsq.rootsys import (
    CartanType,
    build_root_system,
    identity_aut,
    opposition_involution,
)

ONE_PLUS_T3 = IntPoly([1, 0, 0, 1])
TWO = IntPoly([2])
BINARY_15 = IntPoly([1] + [0] * 14 + [1])


def _e6():
    return build_root_system(CartanType("E", 6))


def test_tate_skeleton_x2():
    rs = _e6()
    shifts = tate_skeleton(rs, {3, 4, 5}, {1, 3, 4, 5, 6}, opposition_involution(rs))
    assert shifts == [0, 6, 15, 21]


def test_tate_skeleton_x16():
    rs = _e6()
    shifts = tate_skeleton(rs, {3, 4, 5}, {2, 3, 4, 5}, opposition_involution(rs))
    assert shifts == [0, 9, 15, 24]


def test_tate_skeleton_contains_point_and_fundamental_class():
    rs = _e6()
    star = opposition_involution(rs)
    for levi, dim in (({1, 3, 4, 5, 6}, 21), ({2, 3, 4, 5}, 24)):
        shifts = tate_skeleton(rs, {3, 4, 5}, levi, star)
        assert shifts[0] == 0 and shifts[-1] == dim


def test_tate_skeleton_trivial_kernel():
    # empty kernel, identity star: every cell is a Tate cell
    rs = build_root_system(CartanType("A", 2))
    shifts = tate_skeleton(rs, (), {1}, identity_aut(rs))
    assert shifts == [0, 1, 2]


def test_motive_term_contributions():
    assert MotiveTerm(KIND_TATE, 4).contribution() == IntPoly.monomial(4)
    assert MotiveTerm(KIND_COR_QUADRATIC, 2).contribution() == IntPoly.monomial(2, 2)
    up = MotiveTerm(KIND_UPPER, 1, ONE_PLUS_T3)
    assert up.contribution() == IntPoly([0, 1, 0, 0, 1])


def test_motive_term_validation():
    with pytest.raises(ValueError):
        MotiveTerm("mystery", 0)
    with pytest.raises(ValueError):
        MotiveTerm(KIND_TATE, -1)
    with pytest.raises(ValueError):
        MotiveTerm(KIND_UPPER, 0)  # missing block
    with pytest.raises(ValueError):
        MotiveTerm(KIND_TATE, 0, ONE_PLUS_T3)  # spurious block


def test_check_decomposition_trivial():
    ok, residual = check_decomposition(
        Decomposition(IntPoly([1, 1]), (MotiveTerm(KIND_TATE, 0), MotiveTerm(KIND_TATE, 1)))
    )
    assert ok and residual.is_zero
    ok, residual = check_decomposition(
        Decomposition(ONE_PLUS_T3, (MotiveTerm(KIND_TATE, 0),))
    )
    assert not ok
    assert residual == IntPoly.monomial(3)


def test_check_decomposition_henke_identity():
    total = poincare_poly(FlagVariety(CartanType("E", 7), frozenset({1})))
    block = parse_poly("1+t+t^4+t^6+t^8+t^12+t^16+t^18+t^20+t^23+t^24") * parse_poly(
        "1+t^9"
    )
    r2 = ONE_PLUS_T3 * IntPoly([1, 0, 0, 0, 0, 1]) * IntPoly([1] + [0] * 8 + [1])
    terms = [MotiveTerm(KIND_UPPER, 0, block)]
    terms += [MotiveTerm(KIND_UPPER, i, r2) for i in range(2, 15)]
    ok, residual = check_decomposition(Decomposition(total, tuple(terms)))
    assert ok, residual


def test_express_residual_constructed_witness():
    residual = IntPoly([0, 1, 2, 0, 1])  # t + 2t^2 + t^4
    witness = express_residual(residual, [ONE_PLUS_T3, TWO])
    assert witness == [(0, 1), (1, 2)]
    assert witness_sum(witness, [ONE_PLUS_T3, TWO]) == residual


def test_express_residual_no_witness():
    assert express_residual(IntPoly([0, 1]), [ONE_PLUS_T3]) is None
    assert express_residual(IntPoly([1, 0, 0, 2]), [ONE_PLUS_T3]) is None


def test_express_residual_zero_residual():
    assert express_residual(IntPoly(), [ONE_PLUS_T3]) == []


def test_express_residual_preconditions():
    with pytest.raises(ValueError):
        express_residual(IntPoly([-1, 1]), [ONE_PLUS_T3])
    with pytest.raises(ValueError):
        express_residual(IntPoly([1]), [])
    with pytest.raises(ValueError):
        express_residual(IntPoly([1]), [IntPoly()])
    with pytest.raises(ValueError):
        express_residual(IntPoly([1]), [IntPoly([1, -1])])


def test_express_residual_shift_normalized_block():
    # block t^2 * (1 + t) placed at effective shift e - valuation
    block = IntPoly([0, 0, 1, 1])
    residual = IntPoly([0, 0, 0, 1, 1])
    witness = express_residual(residual, [block])
    assert witness == [(0, 1)]
    assert witness_sum(witness, [block]) == residual
    # residual starting below the block valuation is inexpressible
    assert express_residual(IntPoly([0, 1, 1]), [block]) is None


def test_step5_residuals_have_positive_shift_witnesses():
    blocks = [ONE_PLUS_T3, TWO]
    for nodes, tate_shifts in (({2}, (0, 6)), ({1, 6}, (0, 9))):
        total = poincare_poly(FlagVariety(CartanType("E", 6), frozenset(nodes)))
        residual = total
        for s in tate_shifts:
            residual = residual - BINARY_15.shift(s)
        assert all(c >= 0 for c in residual.coeffs)
        witness = express_residual(residual, blocks)
        assert witness is not None
        assert witness_sum(witness, blocks) == residual
        assert min(s for _, s in witness) >= 1


def test_express_residual_deterministic():
    blocks = [ONE_PLUS_T3, TWO]
    total = poincare_poly(FlagVariety(CartanType("E", 6), frozenset({2})))
    residual = total - BINARY_15 - BINARY_15.shift(6)
    assert express_residual(residual, blocks) == express_residual(residual, blocks)


def test_karpenko_blocks_catalog():
    blocks = karpenko_blocks()
    assert [b.name for b in blocks] == ["upper-x16", "upper-borel", "cor-quadratic"]
    assert {b.poly for b in blocks} == {BINARY_15, ONE_PLUS_T3, TWO}
    assert all(b.poly(1) == 2 for b in blocks)
    kinds = {b.name: b.kind for b in blocks}
    assert kinds["cor-quadratic"] == KIND_COR_QUADRATIC
    assert kinds["upper-borel"] == KIND_UPPER


def test_skeleton_size_matches_cell_filter():
    from magicsq.weyl import double_cosets

    rs = _e6()
    star = opposition_involution(rs)
    cells = double_cosets(rs, {3, 4, 5}, {1, 3, 4, 5, 6}, star)
    filtered = [c for c in cells if c.orbit_size == 1 and c.star_invariant]
    shifts = tate_skeleton(rs, {3, 4, 5}, {1, 3, 4, 5, 6}, star)
    assert len(shifts) == len(filtered)
