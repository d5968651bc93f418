"""Brute-force ideal counting in an integral multiplication table.

This is the package's independent ground truth for every zeta
coefficient: enumerate all index-n sublattices of Z^dim in Hermite normal
form and keep the ones closed under multiplication by every basis
element.  Nothing here knows about Euler products or genus theory.

Conventions: lattices are row-generated, HNF is upper triangular with
positive diagonal and column-reduced entries (0 <= h[i][j] < h[j][j] for
i < j), so the index-n sublattices of Z^dim are enumerated by divisor
tuples d_1 ... d_dim = n and independent off-diagonal residues.  The
stream order is fixed: divisor tuples lexicographically, off-diagonal
residues row-major; golden outputs rely on it.

For prime-power indices the count collapses per diagonal: with the outer
off-diagonal entries fixed, the closure conditions become chained linear
congruences in the remaining entry, which we intersect as arithmetic
progressions instead of looping.  Cross-checked against the plain stream
in the test suite.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class LatticeHNF:
    dim: int
    matrix: tuple  # rows

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if len(m) != self.dim or any(len(r) != self.dim for r in m):
            raise InputError("matrix shape does not match dim")
        for i in range(self.dim):
            if m[i][i] <= 0:
                raise InputError("HNF diagonal must be positive")
            for j in range(self.dim):
                if j < i and m[i][j] != 0:
                    raise InputError("HNF must be upper triangular")
                if j > i and not 0 <= m[i][j] < m[j][j]:
                    raise InputError("HNF entries must be reduced modulo the column diagonal")

    @property
    def index(self):
        out = 1
        for i in range(self.dim):
            out *= self.matrix[i][i]
        return out


@dataclass(frozen=True)
class IdealCountSeries:
    bound: int
    counts: tuple  # a_1 .. a_N

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(x) for x in self.counts))
        if len(self.counts) != self.bound:
            raise InputError("counts length must equal the bound")
        if self.bound >= 1 and self.counts[0] != 1:
            raise InputError("a_1 must be 1")

    def a(self, n):
        return self.counts[n - 1]


def divisor_tuples(n, k):
    "All (d_1, ..., d_k) with product n, in lexicographic order."
    if k == 1:
        yield (n,)
        return
    from .exact import divisors

    for d in divisors(n):
        for rest in divisor_tuples(n // d, k - 1):
            yield (d,) + rest


def enumerate_sublattices(dim, n):
    "Every index-n sublattice of Z^dim exactly once, canonical HNF, fixed order."
    if n < 1:
        raise InputError("index must be >= 1")
    for diag in divisor_tuples(n, dim):
        yield from _sublattices_for_diagonal(dim, diag)


def _sublattices_for_diagonal(dim, diag):
    # off-diagonal positions in row-major order
    positions = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    ranges = [diag[j] for _, j in positions]

    def rec(idx, entries):
        if idx == len(positions):
            rows = [[0] * dim for _ in range(dim)]
            for i in range(dim):
                rows[i][i] = diag[i]
            for (i, j), v in zip(positions, entries):
                rows[i][j] = v
            yield LatticeHNF(dim, tuple(tuple(r) for r in rows))
            return
        for v in range(ranges[idx]):
            yield from rec(idx + 1, entries + (v,))

    yield from rec(0, ())


def _action_matrices(table):
    """Row-action matrices: for x a row vector, x . A_i is b_i * x.
    A_i[l][k] = table[i][l][k].  The identity (index 0) is skipped."""
    dim = len(table)
    out = []
    for i in range(1, dim):
        out.append(tuple(tuple(table[i][l][k] for k in range(dim)) for l in range(dim)))
    return out


def _in_lattice(rows, v):
    dim = len(rows)
    v = list(v)
    for i in range(dim):
        d = rows[i][i]
        if v[i] % d:
            return False
        q = v[i] // d
        if q:
            for c in range(i, dim):
                v[c] -= q * rows[i][c]
    return True


def is_ideal(table, lattice: LatticeHNF) -> bool:
    "True iff the lattice is closed under multiplication by every basis element."
    dim = len(table)
    if lattice.dim != dim:
        raise InputError(f"lattice dimension {lattice.dim} != table rank {dim}")
    rows = lattice.matrix
    for act in _action_matrices(table):
        for g in rows:
            prod = [0] * dim
            for l in range(dim):
                gl = g[l]
                if gl:
                    arow = act[l]
                    for k in range(dim):
                        prod[k] += gl * arow[k]
            if not _in_lattice(rows, prod):
                return False
    return True


def count_ideals(table, bound, threads=1) -> IdealCountSeries:
    """a_n = number of index-n ideal sublattices for n = 1..bound, by direct
    enumeration (one multiplier at a time, aborting on first failure)."""
    if bound < 1:
        raise InputError("bound must be >= 1")
    dim = len(table)
    if threads and threads > 1:
        jobs = [(table, dim, n) for n in range(1, bound + 1)]
        with ProcessPoolExecutor(max_workers=threads) as ex:
            counts = list(ex.map(_count_for_index, jobs))
    else:
        counts = [_count_for_index((table, dim, n)) for n in range(1, bound + 1)]
    return IdealCountSeries(bound, tuple(counts))


def _count_for_index(job):
    table, dim, n = job
    acts = _action_matrices(table)
    total = 0
    for lat in enumerate_sublattices(dim, n):
        rows = lat.matrix
        ok = True
        for act in acts:
            for g in rows:
                prod = [0] * dim
                for l in range(dim):
                    gl = g[l]
                    if gl:
                        arow = act[l]
                        for k in range(dim):
                            prod[k] += gl * arow[k]
                if not _in_lattice(rows, prod):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            total += 1
    return total


def count_ideals_at_prime(table, p, kmax, threads=1):
    """[a_1, a_p, ..., a_{p^kmax}]: the prime-power restriction, computed
    directly (only p-power determinants are visited)."""
    dim = len(table)
    if dim == 3:
        fn = _count_prime_power_dim3
    elif dim == 2:
        fn = _count_prime_power_dim2
    elif dim == 1:
        return [1] * (kmax + 1)
    else:
        fn = None
    out = []
    for k in range(kmax + 1):
        n = p**k
        if fn is not None:
            jobs = list(divisor_tuples(n, dim))
            if threads and threads > 1 and len(jobs) > 1 and n > 10**4:
                with ProcessPoolExecutor(max_workers=threads) as ex:
                    parts = list(ex.map(_prime_power_job, [(table, diag, fn.__name__) for diag in jobs]))
                out.append(sum(parts))
            else:
                out.append(sum(fn(table, diag) for diag in jobs))
        else:
            out.append(_count_for_index((table, dim, n)))
    return out


def _prime_power_job(job):
    table, diag, fname = job
    fn = {"_count_prime_power_dim3": _count_prime_power_dim3, "_count_prime_power_dim2": _count_prime_power_dim2}[fname]
    return fn(table, diag)


class _Progression:
    "Solution set {offset + step * Z} intersected with [0, modulus)."

    __slots__ = ("offset", "step", "empty")

    def __init__(self):
        self.offset = 0
        self.step = 1
        self.empty = False

    def refine(self, a, b, m):
        "Impose a * x + b == 0 (mod m) on x = offset + step * t."
        if self.empty or m == 1:
            return
        from math import gcd

        aa = (a * self.step) % m
        bb = (a * self.offset + b) % m
        g = gcd(aa, m)
        if bb % g:
            self.empty = True
            return
        mm = m // g
        if mm == 1:
            return
        t0 = (-(bb // g) * pow(aa // g, -1, mm)) % mm
        self.offset += self.step * t0
        self.step *= mm

    def count_below(self, bound):
        if self.empty or self.offset >= bound:
            return 0
        return (bound - 1 - self.offset) // self.step + 1


def _count_prime_power_dim3(table, diag):
    """Ideal count for one diagonal (d1,d2,d3): loop the entries (0,1)=a and
    (1,2)=c, narrow the entry (0,2)=b by the conditions that are affine in b
    (rows 2 and 3 closure, row 1 leading division), then scan the surviving
    progression and test full row-1 closure per survivor.  The closure of
    row 1 involves b quadratically through the back-substitutions, which is
    why the last step is a scan rather than another refine."""
    d1, d2, d3 = diag
    acts = _action_matrices(table)
    total = 0
    for a in range(d2):
        for c in range(d3):
            prog = _Progression()
            ok = True
            for act in acts:
                # row 3 product: w = d3 * act[2]
                w0, w1, w2 = d3 * act[2][0], d3 * act[2][1], d3 * act[2][2]
                if w0 % d1:
                    ok = False
                    break
                q1 = w0 // d1
                t = w1 - q1 * a
                if t % d2:
                    ok = False
                    break
                q2 = t // d2
                prog.refine(-q1, w2 - q2 * c, d3)
                if prog.empty:
                    ok = False
                    break
                # row 2 product: w = d2 * act[1] + c * act[2]
                w0 = d2 * act[1][0] + c * act[2][0]
                w1 = d2 * act[1][1] + c * act[2][1]
                w2 = d2 * act[1][2] + c * act[2][2]
                if w0 % d1:
                    ok = False
                    break
                q1 = w0 // d1
                t = w1 - q1 * a
                if t % d2:
                    ok = False
                    break
                q2 = t // d2
                prog.refine(-q1, w2 - q2 * c, d3)
                if prog.empty:
                    ok = False
                    break
                # row 1 leading division: w0 = d1*act[0][0] + a*act[1][0] + b*act[2][0]
                prog.refine(act[2][0], d1 * act[0][0] + a * act[1][0], d1)
                if prog.empty:
                    ok = False
                    break
            if not ok:
                continue
            b = prog.offset
            while b < d3:
                if _row1_closed(acts, diag, a, b, c):
                    total += 1
                b += prog.step
    return total


def _row1_closed(acts, diag, a, b, c):
    d1, d2, d3 = diag
    for act in acts:
        w0 = d1 * act[0][0] + a * act[1][0] + b * act[2][0]
        if w0 % d1:
            return False
        q1 = w0 // d1
        w1 = d1 * act[0][1] + a * act[1][1] + b * act[2][1]
        t = w1 - q1 * a
        if t % d2:
            return False
        q2 = t // d2
        w2 = d1 * act[0][2] + a * act[1][2] + b * act[2][2]
        if (w2 - q1 * b - q2 * c) % d3:
            return False
    return True


def _count_prime_power_dim2(table, diag):
    d1, d2 = diag
    acts = _action_matrices(table)
    total = 0
    for a in range(d2):  # entry (0,1)
        ok = True
        for act in acts:
            # row 2: w = d2 * act[1]
            w0, w1 = d2 * act[1][0], d2 * act[1][1]
            if w0 % d1:
                ok = False
                break
            q1 = w0 // d1
            if (w1 - q1 * a) % d2:
                ok = False
                break
            # row 1: w = d1*act[0] + a*act[1]
            w0 = d1 * act[0][0] + a * act[1][0]
            w1 = d1 * act[0][1] + a * act[1][1]
            if w0 % d1:
                ok = False
                break
            q1 = w0 // d1
            if (w1 - q1 * a) % d2:
                ok = False
                break
        if ok:
            total += 1
    return total


def quotient_ring_table(defining_poly):
    """Multiplication tensor of Z[x]/(f) on the power basis, identity at
    index 0; feeds the oracle for Dedekind cross-checks."""
    from .polys import pdeg, pdivmod, pnorm

    f = pnorm(tuple(defining_poly))
    d = pdeg(f)
    lam = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            prod = [0] * (i + j + 1)
            prod[i + j] = 1
            _, r = pdivmod(tuple(prod), f)
            for k, v in enumerate(r):
                fr = v
                if getattr(fr, "denominator", 1) != 1:
                    raise InputError("non-monic defining polynomial")
                lam[i][j][k] = int(fr)
    return tuple(tuple(tuple(row) for row in plane) for plane in lam)
