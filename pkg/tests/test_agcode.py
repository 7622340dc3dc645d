import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from agcodes import linalg
from agcodes.agcode import (
    GuardExceeded,
    LinearCode,
    WeightEnumerator,
    build_code,
    dual,
    dual_distance,
    dual_distance_by_columns,
    evaluation_matrix,
    export_generator,
    hermitian_dual,
    hermitian_gram,
    import_generator,
    is_hermitian_self_orthogonal,
    macwilliams_dual_enumerator,
    min_distance,
    predicted_dimension,
    scan_self_orthogonality,
    scan_to_csv,
    weight_enumerator,
)
from agcodes.semigroup import ell


def scalar_gram(code):
    """Hermitian Gram matrix with FieldElement arithmetic, one sum per entry."""
    F = code.field
    rows = [[F.element(v) for v in r] for r in code.generator]
    out = []
    for u in rows:
        out.append([sum((a * b ** F.q for a, b in zip(u, v)), F.zero).value for v in rows])
    return np.array(out, dtype=np.int64).reshape(code.k, code.k)


def all_weights(code):
    return np.concatenate([(w != 0).sum(axis=1) for _, w in code.iter_codewords()])


def test_build_examples(curve3, curve5):
    c = build_code(curve3, 4)
    assert (c.n, c.k) == (15, 4)
    c0 = build_code(curve3, 0)
    assert (c0.n, c0.k) == (15, 1)
    assert set(c0.generator[0]) == {1}
    c18 = build_code(curve5, 18)
    assert (c18.n, c18.k) == (65, 15)
    assert build_code(curve3, -1).k == 0


@pytest.mark.parametrize("which", ["curve3", "curve5"])
def test_rank_matches_semigroup_below_n(which, request):
    curve = request.getfixturevalue(which)
    for m in range(curve.n_affine):
        E = evaluation_matrix(curve, m)
        assert linalg.rank(curve.field, E) == ell(curve, m) == E.shape[0]


def test_generator_is_reduced_and_full_rank(curve3):
    code = build_code(curve3, 6)
    R, piv = linalg.rref(curve3.field, code.generator)
    assert len(piv) == code.k
    assert (R == code.generator).all()


def test_support_validation(curve3):
    pts = curve3.points_array()
    sub = build_code(curve3, 2, support=pts[:6])
    assert sub.n == 6
    with pytest.raises(ValueError):
        build_code(curve3, 2, support=np.vstack([pts[:3], pts[:1]]))
    with pytest.raises(ValueError):
        build_code(curve3, 2, support=[[0, 1]])


def test_predicted_dimension_examples(curve3, curve5):
    p = predicted_dimension(curve3, -1)
    assert (p.value, p.paper_case, p.agrees_with_paper) == (0, 1, True)
    p = predicted_dimension(curve3, 4)
    assert (p.value, p.paper_case, p.agrees_with_paper) == (4, 3, True)
    p = predicted_dimension(curve5, 6)
    assert (p.value, p.paper_case, p.agrees_with_paper, p.case_value) == (4, 3, False, 3)


@pytest.mark.parametrize("which", ["curve3", "curve5"])
def test_predicted_matches_built_dimension(which, request):
    curve = request.getfixturevalue(which)
    for m in range(-1, curve.n_affine + 2 * curve.genus + 1):
        assert predicted_dimension(curve, m).value == build_code(curve, m).k


def test_duals(curve3):
    F = curve3.field
    code = build_code(curve3, 4)
    d = dual(code)
    assert (d.n, d.k) == (15, 11)
    assert not F.matmul(code.generator, d.generator.T).any()
    assert linalg.same_row_space(F, dual(d).generator, code.generator)
    h = hermitian_dual(code)
    assert h.k == 11
    assert not F.matmul(h.generator, F.conj(code.generator).T).any()
    assert linalg.same_row_space(F, hermitian_dual(h).generator, code.generator)
    assert dual(build_code(curve3, 0)).k == 14


def test_hermitian_and_euclidean_duals_share_weights(curve3):
    code = build_code(curve3, 2, support=curve3.points_array()[:7])
    assert weight_enumerator(dual(code)) == weight_enumerator(hermitian_dual(code))


@pytest.mark.parametrize("m", range(0, 8))
def test_gram_matches_scalar_oracle(curve3, m):
    code = build_code(curve3, m)
    assert (hermitian_gram(code) == scalar_gram(code)).all()
    assert is_hermitian_self_orthogonal(code) == (not scalar_gram(code).any())


def test_self_orthogonality_examples(curve3):
    assert is_hermitian_self_orthogonal(build_code(curve3, 0))
    assert is_hermitian_self_orthogonal(build_code(curve3, -1))
    assert not is_hermitian_self_orthogonal(build_code(curve3, 14))


def test_hermitian_curve_threshold():
    # independent sanity check: on the Hermitian curve the codes are
    # self-orthogonal exactly up to m = q^2 - 2
    from agcodes.curve import Curve
    from agcodes.galois import field_new

    c = Curve(field_new(3), 4)
    verdicts = [is_hermitian_self_orthogonal(build_code(c, m)) for m in range(12)]
    assert verdicts == [True] * 8 + [False] * 4


def test_weight_enumerator_examples(curve3):
    we = weight_enumerator(build_code(curve3, 0))
    assert we.counts == [1] + [0] * 14 + [8]
    zero = weight_enumerator(build_code(curve3, -1))
    assert zero.counts == [1] + [0] * 15
    for m in (2, 3, 4):
        code = build_code(curve3, m)
        we = weight_enumerator(code)
        assert sum(we.counts) == 9**code.k
        assert we.counts == np.bincount(all_weights(code), minlength=16).tolist()


def test_min_distance_modes(curve3):
    assert min_distance(build_code(curve3, 0), "exhaustive") == (15, True)
    assert min_distance(build_code(curve3, 4), "bound") == (11, False)
    d, exact = min_distance(build_code(curve3, 4), "exhaustive")
    assert exact and d >= 11
    assert min_distance(build_code(curve3, 4), "enumerator") == (d, True)
    with pytest.raises(ValueError):
        min_distance(build_code(curve3, 1), "psychic")


def test_guard(curve5):
    with pytest.raises(GuardExceeded):
        min_distance(build_code(curve5, 18), "exhaustive")
    with pytest.raises(GuardExceeded):
        weight_enumerator(build_code(curve5, 18))


def test_macwilliams_against_direct_dual(curve3):
    F = curve3.field
    for m, npts in [(2, 6), (3, 7), (1, 5)]:
        code = build_code(curve3, m, support=curve3.points_array()[:npts])
        d = dual(code)
        B = macwilliams_dual_enumerator(weight_enumerator(code), code.n, code.k, F.size)
        assert B == weight_enumerator(d)
        back = macwilliams_dual_enumerator(B, code.n, d.k, F.size)
        assert back == weight_enumerator(code)


def test_macwilliams_edge_cases():
    n, Q = 4, 9
    full = WeightEnumerator([1] + [0] * 4)
    # enumerator of F^4 itself
    from math import comb

    space = WeightEnumerator([comb(n, w) * (Q - 1) ** w for w in range(n + 1)])
    assert macwilliams_dual_enumerator(space, n, n, Q) == full
    with pytest.raises(ArithmeticError):
        macwilliams_dual_enumerator(WeightEnumerator([1, 1, 0, 0, 0]), n, 1, Q)


@pytest.mark.parametrize("m", [0, 2, 3, 4])
def test_dual_distance_routes_agree(curve3, m):
    code = build_code(curve3, m)
    assert dual_distance(code) == dual_distance_by_columns(code)


def test_constant_code_dual_distance(curve3):
    assert dual_distance(build_code(curve3, 0)) == 2


def test_scan(curve3):
    rows = scan_self_orthogonality(curve3, 16)
    assert len(rows) == 17
    assert [r.paper_predicts for r in rows] == [m <= 7 for m in range(17)]
    assert not rows[14].self_orthogonal and rows[14].k == 14
    text = scan_to_csv(rows)
    assert text.splitlines()[0] == "m,k,designed_d,self_orthogonal,paper_predicts"
    with pytest.raises(ValueError):
        scan_self_orthogonality(curve3, 18)


def test_matrix_file_round_trip(curve3):
    code = build_code(curve3, 4)
    text = export_generator(code)
    assert text.splitlines()[0] == "9 15 4"
    back = import_generator(text, curve3.field)
    assert (back.generator == code.generator).all()
    with pytest.raises(ValueError):
        import_generator("9 3 2\n1 0 0\n2 0 0\n", curve3.field)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 6), st.integers(4, 15))
def test_singleton_and_designed_bound(m, npts):
    from agcodes.curve import Curve
    from agcodes.galois import field_new

    curve = Curve(field_new(3), 2)
    code = build_code(curve, m, support=curve.points_array()[:npts])
    if code.k == 0:
        return
    d, _ = min_distance(code, "exhaustive")
    assert code.k + d <= code.n + 1
    if m < npts:
        assert d >= code.n - m


def test_self_orthogonal_implies_half_rate(curve5):
    for m in range(0, 20):
        code = build_code(curve5, m)
        if is_hermitian_self_orthogonal(code):
            assert 2 * code.k <= code.n


def test_linear_code_needs_length():
    with pytest.raises(ValueError):
        LinearCode(None, [])
