import pytest

from tablezeta import BasisKind, TableAlgebra, degree_map, regular_representation, rescale, validate
from tablezeta.errors import NonIntegralRescale
from tablezeta.families import conference, drt, fusion
from tablezeta.polys import AlgebraicNumber


def test_drt_u1_is_valid():
    assert validate(drt(1)).ok


def test_c2_group_algebra_is_valid():
    assert validate(fusion("c2")).ok


def test_pseudo_inverse_violation_reported():
    # self-paired b with lambda[1][1][0] = 0: b*b never reaches the identity
    lam = [[[1, 0], [0, 1]], [[0, 1], [0, 1]]]
    t = TableAlgebra(2, lam, (0, 1))
    report = validate(t)
    assert not report.ok
    assert any(axiom == "pseudo-inverse" for axiom, _ in report.violations)


def test_validate_is_pure():
    t = drt(2)
    lam_before = t.lam
    validate(t)
    validate(t)
    assert t.lam == lam_before


def test_degree_map_drt():
    deltas = degree_map(drt(1))
    assert deltas == [1, 3, 3]


def test_degree_map_fib_golden_ratio():
    deltas = degree_map(fusion("fib"))
    phi = deltas[1]
    assert phi.minpoly == (-1, -1, 1)  # x^2 - x - 1
    assert not phi.is_rational
    assert AlgebraicNumber.from_rational(1) < phi < AlgebraicNumber.from_rational(2)


def test_degree_map_rank_one():
    t = TableAlgebra(1, [[[1]]], (0,))
    assert degree_map(t) == [1]


def test_regular_representation_c2_swap():
    assert regular_representation(fusion("c2"), 1) == ((0, 1), (1, 0))


def test_regular_representation_drt_columns():
    # columns: b*1 = b, b*b = b + 2b*, b*b" = 3 + b + b"
    m = regular_representation(drt(1), 1)
    assert m == ((0, 0, 3), (1, 1, 1), (0, 2, 1))


def test_regular_representation_identity_index():
    for t in (drt(1), conference(1), fusion("reps3")):
        m = regular_representation(t, 0)
        assert m == tuple(tuple(1 if i == j else 0 for j in range(t.rank)) for i in range(t.rank))


def test_regular_representation_out_of_range():
    with pytest.raises(IndexError):
        regular_representation(drt(1), 5)


def test_regular_representation_is_homomorphism():
    from tablezeta.exact import mat_mul

    for t in (drt(1), conference(1), fusion("ising"), fusion("psu5l2")):
        reps = [regular_representation(t, i) for i in range(t.rank)]
        for i in range(t.rank):
            for j in range(t.rank):
                lhs = mat_mul(reps[i], reps[j])
                rhs = tuple(
                    tuple(
                        sum(t.lam[i][j][k] * reps[k][r][c] for k in range(t.rank))
                        for c in range(t.rank)
                    )
                    for r in range(t.rank)
                )
                assert lhs == rhs


def test_degree_map_is_character():
    # sum_k lam[i][j][k] delta_k = delta_i delta_j, checked in the field
    from tablezeta.decomposition import degree_character_values

    for t in (drt(2), conference(1), fusion("fib"), fusion("e6"), fusion("psu5l2")):
        _, delta = degree_character_values(t)
        for i in range(t.rank):
            for j in range(t.rank):
                lhs = sum((delta[k] * t.lam[i][j][k] for k in range(t.rank)), start=delta[0] * 0)
                assert lhs == delta[i] * delta[j]


def test_perron_root_matches_pairing_for_standard_bases():
    for t in (drt(1), drt(3), conference(1), conference(3)):
        deltas = degree_map(t)
        for i in range(t.rank):
            assert deltas[i] == t.lam[i][t.involution[i]][0]


def test_rescale_ising_to_standard():
    s = rescale(fusion("ising"), "standard")
    assert s.basis_kind is BasisKind.STANDARD
    assert s.lam[2][2] == (2, 2, 0)  # d_s^2 = 2 + 2b
    assert s.lam[1][2] == (0, 0, 1)
    assert validate(s).ok


def test_rescale_reps3_to_standard():
    s = rescale(fusion("reps3"), "standard")
    assert s.lam[2][2] == (4, 4, 2)  # (2d)^2 = 4 + 4b + 2(2d)


def test_rescale_e6_fails():
    with pytest.raises(NonIntegralRescale):
        rescale(fusion("e6"), "standard")


def test_rescale_roundtrip():
    for name in ("ising", "reps3", "c2", "c3"):
        t = fusion(name)
        there = rescale(t, "standard")
        back = rescale(there, "transitional")
        assert back.lam == t.lam


def test_rescale_standard_family_is_fixed_point():
    t = drt(1)
    assert rescale(t, "standard").lam == t.lam
