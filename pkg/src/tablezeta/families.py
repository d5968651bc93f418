"""Built-in table algebras and fusion rings.

Rank-3 association scheme families:

  * drt(u): asymmetric, order n = 4u+3 (doubly regular tournaments), with
    b b* = (2u+1) 1 + u b + u b*  and  b^2 = u b + (u+1) b*.
  * conference(u): symmetric, order n = 4u+1 (conference graphs, n not a
    perfect square), with b1^2 = 2u 1 + (u-1) b1 + u b2 and
    b1 b2 = u b1 + u b2.  The b2^2 row is not part of the defining data;
    it is completed here by solving the associativity equations and then
    re-validated.

Fusion rings (transitional basis): fib, c2, ising, reps3, psu5l2, e6, c3.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import BasisKind, TableAlgebra, validate
from .errors import InputError
from .exact import fmat_solve

FUSION_NAMES = ("fib", "c2", "ising", "reps3", "psu5l2", "e6", "c3")


def drt(u: int) -> TableAlgebra:
    if u < 0:
        raise InputError("drt family needs u >= 0")
    lam = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for k in range(3):
        lam[0][k][k] = 1
        lam[k][0][k] = 1
    lam[0][0] = [1, 0, 0]
    lam[1][1] = [0, u, u + 1]
    lam[2][2] = [0, u + 1, u]
    lam[1][2] = [2 * u + 1, u, u]
    lam[2][1] = [2 * u + 1, u, u]
    t = TableAlgebra(3, lam, (0, 2, 1), BasisKind.STANDARD, names=("1", "b", "b*"))
    _must_validate(t, f"drt(u={u})")
    return t


def conference(u: int) -> TableAlgebra:
    n = 4 * u + 1
    if u < 1:
        raise InputError("conference family needs u >= 1")
    r = _isqrt(n)
    if r * r == n:
        raise InputError(f"conference order n = {n} is a perfect square; the character table is rational")
    lam = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for k in range(3):
        lam[0][k][k] = 1
        lam[k][0][k] = 1
    lam[0][0] = [1, 0, 0]
    lam[1][1] = [2 * u, u - 1, u]
    lam[1][2] = [0, u, u]
    lam[2][1] = [0, u, u]
    lam[2][2] = _complete_conference_square(lam)
    t = TableAlgebra(3, lam, (0, 1, 2), BasisKind.STANDARD, names=("1", "b1", "b2"))
    _must_validate(t, f"conference(u={u})")
    return t


def _complete_conference_square(lam):
    """Solve for b2^2 = a 1 + b b1 + c b2 from associativity of
    (b1 b1) b2 = b1 (b1 b2), which is linear in the unknown row."""
    known = {(i, j): lam[i][j] for i in range(3) for j in range(3) if (i, j) != (2, 2)}

    def mult(i, j, coeffs):
        # b_i b_j with (2,2) replaced by unknowns: returns (const vector, coeff of unknown row)
        if (i, j) != (2, 2):
            return list(known[(i, j)]), 0
        return [0, 0, 0], 1

    # (b1 b2) b2 = b1 (b2 b2): expand both sides in terms of the unknown row x
    # lhs = sum_m lam[1][2][m] * (b_m b_2)
    lhs_const = [0, 0, 0]
    lhs_x = 0
    for m in range(3):
        c = lam[1][2][m]
        if not c:
            continue
        vec, xc = mult(m, 2, None)
        lhs_const = [a + c * b for a, b in zip(lhs_const, vec)]
        lhs_x += c * xc
    # rhs = sum_m x_m * (b_1 b_m)  where x = b2^2 coefficients
    # rhs_k = sum_m x_m lam[1][m][k]
    amat = tuple(tuple(Fraction(lam[1][m][k]) for k in range(3)) for m in range(3))
    # equation: lhs_const + lhs_x * x = x . amat   (componentwise)
    # i.e. x . (amat - lhs_x * I) = lhs_const
    mmat = tuple(
        tuple(amat[m][k] - (lhs_x if m == k else 0) for k in range(3)) for m in range(3)
    )
    x = fmat_solve(mmat, tuple(Fraction(v) for v in lhs_const))
    out = []
    for v in x:
        if Fraction(v).denominator != 1 or v < 0:
            raise InputError(f"conference completion produced non-integral b2^2 row {x}")
        out.append(int(v))
    return out


def _isqrt(n):
    from math import isqrt

    return isqrt(n)


def _must_validate(t, label):
    rep = validate(t)
    if not rep.ok:
        raise InputError(f"{label} failed validation:\n{rep}")


def _fusion_tensor(rank, relations, involution, names):
    lam = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for k in range(rank):
        lam[0][k][k] = 1
        lam[k][0][k] = 1
    for (i, j), row in relations.items():
        lam[i][j] = list(row)
        lam[j][i] = list(row)
    return TableAlgebra(rank, lam, involution, BasisKind.TRANSITIONAL, names=names)


def fusion(name: str) -> TableAlgebra:
    name = name.lower()
    if name == "fib":
        t = _fusion_tensor(2, {(1, 1): (1, 1)}, (0, 1), ("1", "b"))
    elif name == "c2":
        t = _fusion_tensor(2, {(1, 1): (1, 0)}, (0, 1), ("1", "g"))
    elif name == "ising":
        t = _fusion_tensor(
            3, {(1, 1): (1, 0, 0), (1, 2): (0, 0, 1), (2, 2): (1, 1, 0)}, (0, 1, 2), ("1", "b", "d")
        )
    elif name == "reps3":
        t = _fusion_tensor(
            3, {(1, 1): (1, 0, 0), (1, 2): (0, 0, 1), (2, 2): (1, 1, 1)}, (0, 1, 2), ("1", "b", "d")
        )
    elif name == "psu5l2":
        t = _fusion_tensor(
            3, {(1, 1): (1, 0, 1), (1, 2): (0, 1, 1), (2, 2): (1, 1, 1)}, (0, 1, 2), ("1", "b", "d")
        )
    elif name == "e6":
        t = _fusion_tensor(
            3, {(1, 1): (1, 0, 0), (1, 2): (0, 0, 1), (2, 2): (1, 1, 2)}, (0, 1, 2), ("1", "b", "d")
        )
    elif name == "c3":
        t = _fusion_tensor(
            3, {(1, 1): (0, 0, 1), (1, 2): (1, 0, 0), (2, 2): (0, 1, 0)}, (0, 2, 1), ("1", "g", "g2")
        )
    else:
        raise InputError(f"unknown fusion ring {name!r}; known: {', '.join(FUSION_NAMES)}")
    _must_validate(t, f"fusion({name})")
    return t


@dataclass(frozen=True)
class FamilySpec:
    kind: str  # "drt" | "conference" | "fusion"
    u: int = None
    name: str = None

    def resolve(self) -> TableAlgebra:
        if self.kind == "drt":
            return drt(self.u)
        if self.kind == "conference":
            return conference(self.u)
        if self.kind == "fusion":
            return fusion(self.name)
        raise InputError(f"unknown family kind {self.kind!r}")

    def order(self) -> int:
        if self.kind == "drt":
            return 4 * self.u + 3
        if self.kind == "conference":
            return 4 * self.u + 1
        raise InputError("order n is defined for the drt and conference families")
