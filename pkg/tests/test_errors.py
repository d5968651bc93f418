import pytest

from tablezeta.algebra import TableAlgebra, degree_map
from tablezeta.decomposition import character_table, find_generator, maximal_order
from tablezeta.errors import BasisKindMismatch, MaximalityUncertified, NonCommutative, NotMonogenic
from tablezeta.ideals import quotient_ring_table


def klein_four_table():
    # Z[C2 x C2]: every non-identity element has a quadratic minimal
    # polynomial, so no single basis element generates the rank-4 algebra
    order = {0: {0: 0, 1: 1, 2: 2, 3: 3}, 1: {1: 0, 2: 3, 3: 2}, 2: {2: 0, 3: 1}, 3: {3: 0}}
    lam = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for i in range(4):
        for j in range(4):
            k = order[min(i, j)].get(max(i, j))
            lam[i][j][k] = 1
    return TableAlgebra(4, lam, (0, 1, 2, 3))


def test_not_monogenic():
    with pytest.raises(NotMonogenic):
        find_generator(klein_four_table())


def test_non_commutative_rejected():
    lam = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [1, 0, 0], [0, 1, 0]],
        [[0, 0, 1], [0, 0, 1], [1, 0, 0]],
    ]
    t = TableAlgebra(3, lam, (0, 1, 2))
    with pytest.raises(NonCommutative):
        degree_map(t)


def test_uncertified_cubic_refused():
    # Z[x]/(x^3 - 2) is a perfectly good order, but its cubic carries no
    # maximality certificate, so the decomposition refuses to assemble
    lam = quotient_ring_table((-2, 0, 0, 1))
    t = TableAlgebra(3, lam, (0, 2, 1))
    with pytest.raises(MaximalityUncertified):
        maximal_order(t)


def test_character_formula_needs_basis_kind():
    from tablezeta.families import fusion

    raw = TableAlgebra(3, fusion("ising").lam, (0, 1, 2))  # basis_kind defaults to RAW
    with pytest.raises(BasisKindMismatch):
        character_table(raw)
