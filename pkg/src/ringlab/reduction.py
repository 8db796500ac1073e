"""Certified diagonal reduction over Bezout rings.

The pipeline brings a matrix to diagonal form with a divisibility chain
while accumulating the transforms and their inverses factor by factor, so
the produced ``ReductionCertificate`` can be re-verified by nothing but
ring arithmetic:

1. Pivot sweeps clear the pivot row and column. Entries divisible by the
   pivot are removed with shear operations (which never disturb already
   cleared entries); the rest go through a Hermite 2x2 step, which strictly
   enlarges the pivot's ideal, so the sweep terminates.
2. Divisibility enforcement folds any minor entry not divisible by the
   pivot into the pivot row and re-sweeps, again strictly enlarging the
   pivot's ideal.
3. On finite rings the trailing 2x2 block goes through a dedicated kernel:
   triangularize, pull out the common factor of the three entries as the
   first chain entry, find a shift r making (b + a*r) comaximal with c,
   and finish with the closed-form transforms that send the comaximal
   triangular block to diag(1, -a*c).

Strategies: ``euclidean_Z`` (integer matrices, minimal-absolute-value
pivoting), ``finite_search`` (any finite ring, kernel enabled), and
``zloc_structural`` (localized integers, where pivot ideals are governed
by the valuations at the localized primes). Rings outside these kinds are
not reducible here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cache import EngineCache
from .engine import PropertyResult, build_cache
from .errors import (
    NoResidue,
    NotBezout,
    NotComaximal,
    ReductionFailed,
    UnsupportedSpec,
)
from .rings import Element, Ring

_SWEEP_LIMIT = 1000


class RingMatrix:
    """Immutable matrix of ring elements, row-major."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, entries):
        entries = tuple(tuple(row) for row in entries)
        if not entries or not entries[0]:
            raise ValueError("matrix needs at least one row and column")
        for row in entries:
            if len(row) != len(entries[0]):
                raise ValueError("ragged matrix")
            for e in row:
                ring._member(e)
        self.ring = ring
        self.rows = len(entries)
        self.cols = len(entries[0])
        self.entries = entries

    @classmethod
    def from_raw(cls, ring: Ring, rows) -> "RingMatrix":
        return cls(ring, [[ring.make(v) for v in row] for row in rows])

    @classmethod
    def from_strings(cls, ring: Ring, rows) -> "RingMatrix":
        return cls(ring, [[ring.parse_element(s) for s in row] for row in rows])

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "RingMatrix":
        z, o = ring.zero, ring.one
        return cls(ring, [[o if i == j else z for j in range(n)]
                          for i in range(n)])

    def mat_mul(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ring = self.ring
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ring.zero
                for k in range(self.cols):
                    acc = ring.add(acc, ring.mul(self.entries[i][k],
                                                 other.entries[k][j]))
                row.append(acc)
            out.append(row)
        return RingMatrix(ring, out)

    def __eq__(self, other):
        return (isinstance(other, RingMatrix) and self.ring is other.ring
                and self.entries == other.entries)

    def __hash__(self):
        return hash((id(self.ring), self.entries))

    def diagonal(self) -> list[Element]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        z = self.ring.zero
        return all(self.entries[i][j] == z
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def to_strings(self) -> list[list[str]]:
        fmt = self.ring.format_element
        return [[fmt(e) for e in row] for row in self.entries]

    def __repr__(self):
        return f"<{self.rows}x{self.cols} matrix over {self.ring.spec_string()}>"


@dataclass(frozen=True)
class ReductionCertificate:
    """P*A*Q = D with stored inverses; verified by verify_certificate."""

    P: RingMatrix
    Pinv: RingMatrix
    D: RingMatrix
    Q: RingMatrix
    Qinv: RingMatrix

    def to_json(self, verified: bool) -> dict:
        return {
            "P": self.P.to_strings(),
            "Pinv": self.Pinv.to_strings(),
            "D": self.D.to_strings(),
            "Q": self.Q.to_strings(),
            "Qinv": self.Qinv.to_strings(),
            "verified": verified,
        }

    @classmethod
    def from_json(cls, ring: Ring, data: dict) -> "ReductionCertificate":
        return cls(
            P=RingMatrix.from_strings(ring, data["P"]),
            Pinv=RingMatrix.from_strings(ring, data["Pinv"]),
            D=RingMatrix.from_strings(ring, data["D"]),
            Q=RingMatrix.from_strings(ring, data["Q"]),
            Qinv=RingMatrix.from_strings(ring, data["Qinv"]),
        )


# ---------------------------------------------------------------------------
# scalar adapters
# ---------------------------------------------------------------------------


class _FiniteOps:
    """Scalar algebra on EngineCache indices (fast path for finite rings)."""

    kernel = True

    def __init__(self, cache: EngineCache):
        self.c = cache
        self.zero = cache.zero
        self.one = cache.one

    def from_elem(self, e: Element) -> int:
        return self.c.index_of(e)

    def to_elem(self, x: int) -> Element:
        return self.c.element(x)

    def add(self, x, y):
        return self.c.add[x * self.c.n + y]

    def sub(self, x, y):
        return self.c.sub(x, y)

    def mul(self, x, y):
        return self.c.mul[x * self.c.n + y]

    def neg(self, x):
        return self.c.neg[x]

    def is_zero(self, x):
        return x == self.zero

    def divides(self, x, y):
        return self.c.divides(x, y)

    def hermite(self, x, y):
        d, gx, gy, a1, b1, u, v = self.c.bezout(x, y)
        return d, gx, gy, a1, b1

    def unit_canon(self, x):
        return self.c.associate_canon[x]

    def pivot_key(self, x):
        return x  # enumeration order


class _ValueOps:
    """Scalar algebra on raw payloads (integers, localized integers)."""

    kernel = False

    def __init__(self, ring: Ring):
        self.r = ring
        self.zero = ring._zero_raw()
        self.one = ring._one_raw()

    def from_elem(self, e: Element):
        return self.r._member(e)

    def to_elem(self, x) -> Element:
        return Element(self.r, x)

    def add(self, x, y):
        return self.r._add(x, y)

    def sub(self, x, y):
        return self.r._sub(x, y)

    def mul(self, x, y):
        return self.r._mul(x, y)

    def neg(self, x):
        return self.r._neg(x)

    def is_zero(self, x):
        return x == self.zero

    def divides(self, x, y):
        return self.r._divides_raw(x, y)

    def hermite(self, x, y):
        d, gx, gy, a1, b1, u, v = self.r._bezout_raw(x, y)
        return d, gx, gy, a1, b1

    def unit_canon(self, x):
        return self.r._unit_canon_raw(x)

    def pivot_key(self, x):
        if self.r.kind == "Z":
            return abs(x)
        if self.r.kind == "zloc":
            return self.r.prime_part(x)
        return 0


def _ops_for(ring: Ring, strategy: str | None):
    finite = ring.cardinality is not None
    if strategy is None:
        strategy = ("finite_search" if finite
                    else {"Z": "euclidean_Z", "zloc": "zloc_structural"}.get(ring.kind))
        if strategy is None:
            raise UnsupportedSpec(
                f"no reduction strategy for ring kind {ring.kind!r}")
    if strategy == "finite_search":
        if not finite:
            raise UnsupportedSpec("finite_search needs a finite ring")
        return _FiniteOps(build_cache(ring)), strategy
    if strategy == "euclidean_Z":
        if ring.kind != "Z":
            raise UnsupportedSpec("euclidean_Z reduces integer matrices only")
        return _ValueOps(ring), strategy
    if strategy == "zloc_structural":
        if ring.kind != "zloc":
            raise UnsupportedSpec("zloc_structural reduces zloc matrices only")
        return _ValueOps(ring), strategy
    raise UnsupportedSpec(f"unknown strategy {strategy!r}")


# ---------------------------------------------------------------------------
# the reducer
# ---------------------------------------------------------------------------


class _Reducer:
    def __init__(self, ops, grid, rows, cols):
        self.ops = ops
        self.A = grid
        self.rows = rows
        self.cols = cols
        z, o = ops.zero, ops.one
        self.P = [[o if i == j else z for j in range(rows)] for i in range(rows)]
        self.Pinv = [[o if i == j else z for j in range(rows)] for i in range(rows)]
        self.Q = [[o if i == j else z for j in range(cols)] for i in range(cols)]
        self.Qinv = [[o if i == j else z for j in range(cols)] for i in range(cols)]

    # -- elementary column operations (A <- A*E, Q <- Q*E, Qinv <- Einv*Qinv) --

    def col_combine(self, k, j, x, y, b1, a1):
        """Columns (k, j) <- (x*ck + y*cj, -b1*ck + a1*cj); det = 1."""
        ops = self.ops
        nb1 = ops.neg(b1)
        for M in (self.A, self.Q):
            for row in M:
                ck, cj = row[k], row[j]
                row[k] = ops.add(ops.mul(x, ck), ops.mul(y, cj))
                row[j] = ops.add(ops.mul(nb1, ck), ops.mul(a1, cj))
        ny = ops.neg(y)
        R = self.Qinv
        rk, rj = R[k], R[j]
        R[k] = [ops.add(ops.mul(a1, p), ops.mul(b1, q)) for p, q in zip(rk, rj)]
        R[j] = [ops.add(ops.mul(ny, p), ops.mul(x, q)) for p, q in zip(rk, rj)]

    def col_add(self, j, k, t):
        """Column j += t * column k."""
        ops = self.ops
        nt = ops.neg(t)
        for M in (self.A, self.Q):
            for row in M:
                row[j] = ops.add(row[j], ops.mul(t, row[k]))
        R = self.Qinv
        R[k] = [ops.add(p, ops.mul(nt, q)) for p, q in zip(R[k], R[j])]

    def col_swap(self, k, j):
        for M in (self.A, self.Q):
            for row in M:
                row[k], row[j] = row[j], row[k]
        R = self.Qinv
        R[k], R[j] = R[j], R[k]

    def col_scale_unit(self, j, u, uinv):
        ops = self.ops
        for M in (self.A, self.Q):
            for row in M:
                row[j] = ops.mul(row[j], u)
        R = self.Qinv
        R[j] = [ops.mul(uinv, q) for q in R[j]]

    # -- elementary row operations (A <- E*A, P <- E*P, Pinv <- Pinv*Einv) --

    def row_combine(self, k, i, x, y, b1, a1):
        """Rows (k, i) <- (x*rk + y*ri, -b1*rk + a1*ri); det = 1."""
        ops = self.ops
        nb1 = ops.neg(b1)
        for M in (self.A, self.P):
            rk, ri = M[k], M[i]
            M[k] = [ops.add(ops.mul(x, p), ops.mul(y, q)) for p, q in zip(rk, ri)]
            M[i] = [ops.add(ops.mul(nb1, p), ops.mul(a1, q)) for p, q in zip(rk, ri)]
        ny = ops.neg(y)
        R = self.Pinv
        for row in R:
            ck, ci = row[k], row[i]
            row[k] = ops.add(ops.mul(ck, a1), ops.mul(ci, b1))
            row[i] = ops.add(ops.mul(ck, ny), ops.mul(ci, x))

    def row_add(self, i, k, t):
        """Row i += t * row k."""
        ops = self.ops
        nt = ops.neg(t)
        for M in (self.A, self.P):
            M[i] = [ops.add(p, ops.mul(t, q)) for p, q in zip(M[i], M[k])]
        R = self.Pinv
        for row in R:
            row[k] = ops.add(row[k], ops.mul(nt, row[i]))

    def row_swap(self, k, i):
        for M in (self.A, self.P):
            M[k], M[i] = M[i], M[k]
        for row in self.Pinv:
            row[k], row[i] = row[i], row[k]

    def row_scale_unit(self, i, u, uinv):
        ops = self.ops
        for M in (self.A, self.P):
            M[i] = [ops.mul(u, p) for p in M[i]]
        for row in self.Pinv:
            row[i] = ops.mul(row[i], uinv)

    # -- pipeline ------------------------------------------------------------

    def select_pivot(self, k) -> bool:
        ops = self.ops
        best = None
        for i in range(k, self.rows):
            for j in range(k, self.cols):
                v = self.A[i][j]
                if ops.is_zero(v):
                    continue
                key = ops.pivot_key(v)
                if best is None or key < best[0]:
                    best = (key, i, j)
        if best is None:
            return False
        _, i, j = best
        if i != k:
            self.row_swap(k, i)
        if j != k:
            self.col_swap(k, j)
        return True

    def sweep(self, k):
        """Clear row k and column k outside the pivot."""
        ops = self.ops
        A = self.A
        for _ in range(_SWEEP_LIMIT):
            for j in range(k + 1, self.cols):
                e = A[k][j]
                if ops.is_zero(e):
                    continue
                t = ops.divides(A[k][k], e)
                if t is not None:
                    self.col_add(j, k, ops.neg(t))
                else:
                    d, x, y, a1, b1 = ops.hermite(A[k][k], e)
                    self.col_combine(k, j, x, y, b1, a1)
            dirty = False
            for i in range(k + 1, self.rows):
                e = A[i][k]
                if ops.is_zero(e):
                    continue
                t = ops.divides(A[k][k], e)
                if t is not None:
                    self.row_add(i, k, ops.neg(t))
                else:
                    d, x, y, a1, b1 = ops.hermite(A[k][k], e)
                    self.row_combine(k, i, x, y, b1, a1)
                    dirty = True  # the Hermite row step mixes row i into row k
            if not dirty:
                return
        raise ReductionFailed(f"sweep did not stabilize at pivot {k}")

    def enforce_divisibility(self, k):
        """Make the pivot divide every entry of the trailing minor."""
        ops = self.ops
        for _ in range(_SWEEP_LIMIT):
            p = self.A[k][k]
            bad = None
            for i in range(k + 1, self.rows):
                for j in range(k + 1, self.cols):
                    if ops.divides(p, self.A[i][j]) is None:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                return
            self.row_add(k, bad, ops.one)
            self.sweep(k)
        raise ReductionFailed(f"divisibility enforcement stalled at pivot {k}")

    def kernel_2x2(self, k):
        """Finite-ring kernel for the trailing 2x2 block.

        Triangularize, factor out the gcd generator g of the three entries
        with comaximal cofactors, then apply the comaximal-shift transforms
        to reach diag(g, -g*a''*c'').
        """
        ops = self.ops
        cache: EngineCache = ops.c
        A = self.A
        j = k + 1
        if not ops.is_zero(A[k][j]):
            t = ops.divides(A[k][k], A[k][j])
            if t is not None:
                self.col_add(j, k, ops.neg(t))
            else:
                d, x, y, a1, b1 = ops.hermite(A[k][k], A[k][j])
                self.col_combine(k, j, x, y, b1, a1)
        ap, bp, cp = A[k][k], A[j][k], A[j][j]
        if ops.is_zero(ap) and ops.is_zero(bp) and ops.is_zero(cp):
            return
        cls = cache.ideal_class
        sum_id = cache.sum_ideal_id(cache.sum_ideal_id(cls[ap], cls[bp]), cls[cp])
        gens = cache.generators_of(sum_id)
        if not gens:
            raise ReductionFailed(
                "entry ideal of the 2x2 block is not principal",
                witness=self._block_matrix(k))
        g = gens[0]
        trip = _comax_cofactors(cache, g, ap, bp, cp)
        if trip is None:
            raise ReductionFailed(
                "no comaximal cofactor triple for the 2x2 block",
                witness=self._block_matrix(k))
        ta, tb, tc = trip
        # Swap-conjugate to [[c', b'], [0, a']] = g * [[tc, tb], [0, ta]].
        self.row_swap(k, j)
        self.col_swap(k, j)
        r = None
        for cand in range(cache.n):
            if cache.comax[cache.add[tb * cache.n + cache.mul[tc * cache.n + cand]]][ta]:
                r = cand
                break
        if r is None:
            raise ReductionFailed(
                "no residue shift makes the block comaximal",
                witness=self._block_matrix(k))
        w = cache.add[tb * cache.n + cache.mul[tc * cache.n + r]]
        wit = cache.comax_witness(w, ta)
        x, y = wit
        # A * [[1, r], [0, 1]]
        self.col_add(j, k, r)
        # [[x, y], [-c, w]] * A  with (a, b, c) = (tc, tb, ta)
        self.row_combine(k, j, x, y, ta, w)
        # A * [[1, 0], [-a*x, 1]]
        self.col_add(k, j, ops.neg(ops.mul(tc, x)))
        # A * antidiagonal swap
        self.col_swap(k, j)

    def _block_matrix(self, k) -> "RingMatrix":
        ops = self.ops
        return RingMatrix(ops.c.ring if hasattr(ops, "c") else ops.r, [
            [ops.to_elem(self.A[i][j]) for j in range(k, self.cols)]
            for i in range(k, self.rows)
        ])

    def normalize_units(self):
        ops = self.ops
        for i in range(min(self.rows, self.cols)):
            c, u, uinv = ops.unit_canon(self.A[i][i])
            if u != ops.one:
                self.row_scale_unit(i, u, uinv)

    def run(self, use_kernel: bool):
        k = 0
        while k < min(self.rows, self.cols):
            if use_kernel and self.rows - k == 2 and self.cols - k == 2:
                self.kernel_2x2(k)
                break
            if not self.select_pivot(k):
                break
            self.sweep(k)
            self.enforce_divisibility(k)
            k += 1
        self.normalize_units()


def _comax_cofactors(cache: EngineCache, g: int, va: int, vb: int, vc: int):
    """First cofactor triple (by ideal class) comaximal as a triple."""
    n, mul = cache.n, cache.mul
    row = g * n

    def class_reps(target):
        reps, seen = [], set()
        for t in range(n):
            if mul[row + t] == target:
                cls = cache.ideal_class[t]
                if cls not in seen:
                    seen.add(cls)
                    reps.append(t)
        return reps

    for ta in class_reps(va):
        for tb in class_reps(vb):
            for tc in class_reps(vc):
                if cache.triple_comax(ta, tb, tc):
                    return ta, tb, tc
    return None


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def hermite_step(ring: Ring, a: Element, b: Element
                 ) -> tuple[Element, RingMatrix]:
    """One Hermite column step: (a b) * Q = (d 0) with Q invertible.

    Q is assembled from the Bezout witness as columns (x, y) and (-b1, a1);
    its determinant is x*a1 + y*b1, the comaximality combination, which the
    witness construction pins to 1. The degenerate pair (0, 0) returns the
    identity transform.
    """
    if a == ring.zero and b == ring.zero:
        return ring.zero, RingMatrix.identity(ring, 2)
    data = ring.bezout_gcd(a, b)
    q = RingMatrix(ring, [[data.x, ring.neg(data.b1)],
                          [data.y, data.a1]])
    return data.d, q


def comax_triangular_reduce(ring: Ring, a: Element, b: Element, c: Element,
                            r: Element) -> ReductionCertificate:
    """Reduce [[a, b], [0, c]] to diag(1, -a*c) given (b + a*r) comaximal c.

    The left transform is [[x, y], [-c, b+a*r]] for the comaximality
    witness (b+a*r)*x + c*y = 1; the right transform is the product
    [[1, r], [0, 1]] * [[1, 0], [-a*x, 1]] * [[0, 1], [1, 0]]. Raises
    NotComaximal when no witness exists.
    """
    w = ring.add(b, ring.mul(a, r))
    data = ring.bezout_gcd(w, c)
    dinv = ring.is_unit(data.d)
    if dinv is None:
        raise NotComaximal(
            f"({ring.format_element(w)}, {ring.format_element(c)}) generate "
            f"a proper ideal")
    x = ring.mul(data.x, dinv)
    y = ring.mul(data.y, dinv)
    one, zero = ring.one, ring.zero
    P = RingMatrix(ring, [[x, y], [ring.neg(c), w]])
    Pinv = RingMatrix(ring, [[w, ring.neg(y)], [c, x]])
    shear_r = RingMatrix(ring, [[one, r], [zero, one]])
    shear_r_inv = RingMatrix(ring, [[one, ring.neg(r)], [zero, one]])
    ax = ring.mul(a, x)
    shear_ax = RingMatrix(ring, [[one, zero], [ring.neg(ax), one]])
    shear_ax_inv = RingMatrix(ring, [[one, zero], [ax, one]])
    swap = RingMatrix(ring, [[zero, one], [one, zero]])
    Q = shear_r.mat_mul(shear_ax).mat_mul(swap)
    Qinv = swap.mat_mul(shear_ax_inv).mat_mul(shear_r_inv)
    A = RingMatrix(ring, [[a, b], [zero, c]])
    D = P.mat_mul(A).mat_mul(Q)
    return ReductionCertificate(P=P, Pinv=Pinv, D=D, Q=Q, Qinv=Qinv)


def solve_reduction_residue(ring: Ring, a: Element, b: Element, c: Element,
                            strategy: str = "search") -> Element:
    """Find r with (b + a*r) comaximal to c on a finite ring.

    ``search`` scans r directly in enumeration order. ``quotient`` builds
    R/cR and scans for the first r whose image makes b + a*r invertible
    there, then returns that r; both strategies must agree on solvability.
    Raises NoResidue when the scan is exhausted.
    """
    cache = build_cache(ring)
    ia, ib, ic = (cache.index_of(v) for v in (a, b, c))
    n = cache.n
    if strategy == "search":
        for r in range(n):
            w = cache.add[ib * n + cache.mul[ia * n + r]]
            if cache.comax[w][ic]:
                return cache.element(r)
        raise NoResidue("no residue shift exists for this triple")
    if strategy == "quotient":
        from .concrete import quotient_ring

        q, proj = quotient_ring(ring, [c])
        qcache = build_cache(q)
        for r in range(n):
            w = cache.add[ib * n + cache.mul[ia * n + r]]
            img = proj[cache.element(w)]
            if qcache.is_unit_idx(qcache.index_of(img)) is not None:
                return cache.element(r)
        raise NoResidue("no residue shift exists for this triple (quotient route)")
    raise ValueError(f"unknown strategy {strategy!r}")


def diagonal_reduce(ring: Ring, A: RingMatrix,
                    strategy: str | None = None) -> ReductionCertificate:
    """Produce a verified-by-construction diagonal reduction certificate.

    Raises ReductionFailed (carrying the irreducible block as witness) when
    the ring cannot reduce the instance, which is a legitimate negative
    result for non-Bezout table rings.
    """
    if A.ring is not ring:
        raise ValueError("matrix does not belong to the ring")
    ops, strategy = _ops_for(ring, strategy)
    grid = [[ops.from_elem(e) for e in row] for row in A.entries]
    red = _Reducer(ops, grid, A.rows, A.cols)
    try:
        red.run(use_kernel=ops.kernel)
    except NotBezout as exc:
        raise ReductionFailed(str(exc), witness=A) from exc
    to = ops.to_elem
    return ReductionCertificate(
        P=RingMatrix(ring, [[to(v) for v in row] for row in red.P]),
        Pinv=RingMatrix(ring, [[to(v) for v in row] for row in red.Pinv]),
        D=RingMatrix(ring, [[to(v) for v in row] for row in red.A]),
        Q=RingMatrix(ring, [[to(v) for v in row] for row in red.Q]),
        Qinv=RingMatrix(ring, [[to(v) for v in row] for row in red.Qinv]),
    )


def verify_certificate(ring: Ring, A: RingMatrix,
                       cert: ReductionCertificate) -> PropertyResult:
    """Re-check every certificate invariant by direct arithmetic.

    Verifies P*A*Q = D entrywise, diagonality of D, the divisibility chain
    d_i | d_{i+1} (with d | 0 for every d), and P*Pinv = Q*Qinv = I. The
    verdict names the first violated invariant and its position.
    """
    def fail(invariant, position=None):
        payload = {"invariant": invariant}
        if position is not None:
            payload["position"] = position
        return PropertyResult("certificate", False, counterexample=payload)

    if (cert.P.rows != A.rows or cert.P.cols != A.rows
            or cert.Q.rows != A.cols or cert.Q.cols != A.cols
            or cert.D.rows != A.rows or cert.D.cols != A.cols):
        return fail("shape")
    prod = cert.P.mat_mul(A).mat_mul(cert.Q)
    for i in range(A.rows):
        for j in range(A.cols):
            if prod.entries[i][j] != cert.D.entries[i][j]:
                return fail("product", [i, j])
    z = ring.zero
    for i in range(A.rows):
        for j in range(A.cols):
            if i != j and cert.D.entries[i][j] != z:
                return fail("diagonal", [i, j])
    diag = cert.D.diagonal()
    for i in range(len(diag) - 1):
        if ring.divides(diag[i], diag[i + 1]) is None:
            return fail("divisibility_chain", i)
    ident_r = RingMatrix.identity(ring, A.rows)
    if cert.P.mat_mul(cert.Pinv) != ident_r:
        return fail("P_invertible")
    ident_c = RingMatrix.identity(ring, A.cols)
    if cert.Q.mat_mul(cert.Qinv) != ident_c:
        return fail("Q_invertible")
    return PropertyResult("certificate", True,
                          witness={"diagonal": [ring.format_element(d)
                                                for d in diag]})


def matrix_to_json(A: RingMatrix) -> dict:
    return {"ring": A.ring.spec_string(), "rows": A.to_strings()}


def matrix_from_json(ring: Ring, data: dict) -> RingMatrix:
    return RingMatrix.from_strings(ring, data["rows"])
