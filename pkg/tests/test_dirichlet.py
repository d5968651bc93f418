import pytest

from tablezeta import (
    LocalRationalFunction,
    assemble_global,
    dedekind_euler_factor,
    expand,
    infer_local_polynomial,
    theorem_local_factor,
)
from tablezeta.decomposition import NumberRing
from tablezeta.dirichlet import factor_degrees_mod_p, maximal_local_factor, zeta_p
from tablezeta.errors import MissingBadPrime, NotCertifiedMaximal, NotStabilized
from tablezeta.families import fusion
from tablezeta.ideals import count_ideals, count_ideals_at_prime
from tablezeta.pipeline import analyze

GOLDEN_RING = NumberRing(defining_poly=(-1, -1, 1), is_maximal_certified=True, discriminant=5)


def test_dedekind_factor_ramified():
    f = dedekind_euler_factor(GOLDEN_RING, 5)
    assert f.num == (1,) and f.den == (1, -1)


def test_dedekind_factor_split():
    f = dedekind_euler_factor(GOLDEN_RING, 11)
    assert f.den == (1, -2, 1)
    assert expand(f, 1) == [1, 2]


def test_dedekind_factor_inert():
    f = dedekind_euler_factor(GOLDEN_RING, 2)
    assert f.den == (1, 0, -1)
    assert expand(f, 2) == [1, 0, 1]


def test_dedekind_factor_requires_certificate():
    bad = NumberRing(defining_poly=(-2, 0, 0, 1), is_maximal_certified=False, discriminant=-108)
    with pytest.raises(NotCertifiedMaximal):
        dedekind_euler_factor(bad, 5)


def test_dedekind_matches_oracle_counts():
    from tablezeta.ideals import quotient_ring_table

    lam = quotient_ring_table(GOLDEN_RING.defining_poly)
    for p in (2, 3, 5, 11):
        counts = count_ideals_at_prime(lam, p, 2)
        assert counts == expand(dedekind_euler_factor(GOLDEN_RING, p), 2)


def test_totally_ramified_cubic_at_7():
    # x^3 - 2x^2 - x + 1 mod 7 = (x - 3)^3
    assert factor_degrees_mod_p((1, -1, -2, 1), 7) == [(1, 3)]


def test_expand_geometric_square():
    f = LocalRationalFunction(7, (1,), (1, -2, 1))
    assert expand(f, 4) == [1, 2, 3, 4, 5]


def test_expand_v1_at_7():
    assert expand(theorem_local_factor("v1", 7), 3) == [1, 1, 8, 15]


def test_expand_v3_at_3():
    assert expand(theorem_local_factor("v3", 3), 4) == [1, 1, 4, 13, 22]


def test_theorem_factor_coefficients():
    f = theorem_local_factor("v3", 3)
    assert f.num[8] == 81
    assert f.num[0] == 1
    assert theorem_local_factor("v1", 5).num == (1, -1, 5)


def test_assemble_fib_is_dedekind_zeta():
    t = fusion("fib")
    data = analyze(t)
    series = assemble_global(data.order.rings, data.order.bad_primes, {}, 40)
    oracle = count_ideals(t.lam, 40)
    assert series.coefficients == oracle.counts


def test_assemble_reps3_formula():
    # (2^{1-2s} - 2^{-s} + 1)(3^{1-2s} - 3^{-s} + 1) zeta^3
    t = fusion("reps3")
    data = analyze(t)
    exceptional = {}
    for p in (2, 3):
        base = maximal_local_factor(data.order.rings, p)
        exceptional[p] = LocalRationalFunction(p, (1, -1, p), (1,)) * base
    series = assemble_global(data.order.rings, data.order.bad_primes, exceptional, 36)
    oracle = count_ideals(t.lam, 36)
    assert series.coefficients == oracle.counts


def test_assemble_rank_one_all_ones():
    ring = NumberRing(defining_poly=(0, 1), is_maximal_certified=True, discriminant=1)
    series = assemble_global([ring], [], {}, 30)
    assert series.coefficients == (1,) * 30


def test_assemble_missing_bad_prime():
    t = fusion("c2")
    data = analyze(t)
    with pytest.raises(MissingBadPrime):
        assemble_global(data.order.rings, data.order.bad_primes, {}, 10)


def test_infer_drt1_at_7():
    # frozen oracle values a_{7^k} = 1 + (k-1)*7, confirmed by the
    # enumeration oracle through k = 3 (full depth 5 is the same family rule)
    counts = [1, 1, 8, 15, 22, 29]
    base = LocalRationalFunction(7, (1,), (1, -2, 1))
    assert infer_local_polynomial(counts, base) == (1, -1, 7)


def test_infer_good_prime_trivial():
    base = dedekind_euler_factor(GOLDEN_RING, 11)
    counts = expand(base, 5)
    assert infer_local_polynomial(counts, base) == (1,)


def test_infer_ising_from_real_oracle():
    t = fusion("ising")
    data = analyze(t)
    counts = count_ideals_at_prime(t.lam, 2, 5)
    base = maximal_local_factor(data.order.rings, 2)
    assert infer_local_polynomial(counts, base) == (1, -1, 2)


def test_infer_not_stabilized():
    base = LocalRationalFunction(7, (1,), (1, -2, 1))
    with pytest.raises(NotStabilized):
        infer_local_polynomial([1, 1, 8, 15], base)


def test_local_function_printing():
    f = theorem_local_factor("v1", 7)
    assert str(f) == "(1 - t + 7*t^2) / (1 - 2*t + t^2) @ p=7"
    s = theorem_local_factor("v1", None)
    assert str(s) == "(1 - t + p*t^2) / (1 - 2*t + t^2) @ p=symbolic"


def test_local_function_reduction():
    f = LocalRationalFunction(3, (1, -1), (1, -2, 1))  # (1-t)/(1-t)^2
    r = f.reduced()
    assert r.num == (1,) and r.den == (1, -1)
    assert f.equals(zeta_p(3))


def test_expand_convolution_property():
    a = dedekind_euler_factor(GOLDEN_RING, 11)
    b = theorem_local_factor("v1", 11)
    ab = a * b
    ea, eb, eab = expand(a, 6), expand(b, 6), expand(ab, 6)
    for k in range(7):
        assert eab[k] == sum(ea[i] * eb[k - i] for i in range(k + 1))
