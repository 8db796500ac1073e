"""Index-level structure cache for finite rings.

``EngineCache`` enumerates a finite ring once, assigns every element an
index, and precomputes flat addition/multiplication tables. Everything the
predicate engine and the reduction pipeline need on finite rings (units,
Jacobson radical, idempotents, principal ideals with multiplier witnesses,
comaximality, Bezout gcd search) is then pure integer-index arithmetic.

Heavy artifacts are built lazily and memoized on the cache. Ideal-valued
computations are keyed by ideal identity, not by element, because distinct
elements frequently generate the same principal ideal.
"""

from __future__ import annotations

from functools import cached_property

from .errors import NotBezout, TooLarge
from .rings import Element, Ring

DEFAULT_SIZE_BOUND = 4096


class EngineCache:
    """Exhaustive index tables for one finite ring handle."""

    def __init__(self, ring: Ring, bound: int = DEFAULT_SIZE_BOUND):
        if ring.cardinality is None:
            raise TooLarge(f"{ring.spec_string()} is infinite")
        if ring.cardinality > bound:
            raise TooLarge(
                f"{ring.spec_string()} has {ring.cardinality} elements, "
                f"bound is {bound}"
            )
        self.ring = ring
        self.vals = list(ring._values())
        n = len(self.vals)
        assert n == ring.cardinality, (
            f"{ring.spec_string()}: enumeration yielded {n} elements, "
            f"cardinality says {ring.cardinality}")
        self.n = n
        self.idx = {v: i for i, v in enumerate(self.vals)}
        # Flat row-major tables: op[i*n + j].
        add = [0] * (n * n)
        mul = [0] * (n * n)
        _add, _mul, idx = ring._add, ring._mul, self.idx
        for i, x in enumerate(self.vals):
            row = i * n
            for j, y in enumerate(self.vals):
                add[row + j] = idx[_add(x, y)]
                mul[row + j] = idx[_mul(x, y)]
        self.add = add
        self.mul = mul
        self.neg = [idx[ring._neg(v)] for v in self.vals]
        self.zero = idx[ring._zero_raw()]
        self.one = idx[ring._one_raw()]
        self._bezout_memo: dict[tuple[int, int], tuple] = {}
        self._sum_memo: dict[tuple[int, int], int] = {}
        self._ext: dict = {}  # scratch memo space for the predicate engine

    # --- element/index conversion -------------------------------------------

    def element(self, i: int) -> Element:
        return Element(self.ring, self.vals[i])

    def index_of(self, a: Element) -> int:
        if a.ring is not self.ring:
            from .errors import MixedRings

            raise MixedRings(f"{a!r} does not belong to {self.ring.spec_string()}")
        return self.idx[a.value]

    def sub(self, i: int, j: int) -> int:
        return self.add[i * self.n + self.neg[j]]

    # --- basic structure ------------------------------------------------------

    @cached_property
    def units(self) -> dict[int, int]:
        """Unit index -> inverse index."""
        n, mul, one = self.n, self.mul, self.one
        out = {}
        for i in range(n):
            row = i * n
            for j in range(n):
                if mul[row + j] == one:
                    out[i] = j
                    break
        return out

    @cached_property
    def unit_set(self) -> frozenset[int]:
        return frozenset(self.units)

    @cached_property
    def jac(self) -> frozenset[int]:
        """Jacobson radical: x such that 1 - x*r is a unit for every r."""
        n, mul, one = self.n, self.mul, self.one
        units = self.unit_set
        out = []
        for x in range(n):
            row = x * n
            if all(self.sub(one, mul[row + r]) in units for r in range(n)):
                out.append(x)
        return frozenset(out)

    @cached_property
    def idempotents(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if self.mul[i * self.n + i] == i)

    @cached_property
    def quasi_idempotents(self) -> frozenset[int]:
        """Elements e with e - e^2 in the radical."""
        jac = self.jac
        return frozenset(
            i for i in range(self.n) if self.sub(i, self.mul[i * self.n + i]) in jac
        )

    # --- principal ideals -------------------------------------------------------

    @cached_property
    def pid(self) -> list[frozenset[int]]:
        """Principal ideal of each element, as an index set."""
        n, mul = self.n, self.mul
        return [frozenset(mul[i * n + t] for t in range(n)) for i in range(n)]

    @cached_property
    def pid_witness(self) -> list[dict[int, int]]:
        """Per element a: map value v -> first t with a*t = v."""
        n, mul = self.n, self.mul
        out = []
        for i in range(n):
            row = i * n
            d: dict[int, int] = {}
            for t in range(n):
                v = mul[row + t]
                if v not in d:
                    d[v] = t
            out.append(d)
        return out

    @cached_property
    def _ideal_registry(self) -> dict[frozenset[int], int]:
        """Canonical id for every principal ideal (in first-generator order)."""
        reg: dict[frozenset[int], int] = {}
        for i in range(self.n):
            s = self.pid[i]
            if s not in reg:
                reg[s] = len(reg)
        return reg

    @cached_property
    def _ideal_sets(self) -> list[frozenset[int]]:
        sets: list[frozenset[int]] = [frozenset()] * len(self._ideal_registry)
        for s, ident in self._ideal_registry.items():
            sets[ident] = s
        return sets

    @cached_property
    def ideal_class(self) -> list[int]:
        """Element index -> id of its principal ideal."""
        reg = self._ideal_registry
        return [reg[self.pid[i]] for i in range(self.n)]

    def ideal_id_of_set(self, s: frozenset[int]) -> int:
        """Intern an arbitrary ideal set (registering it if new)."""
        reg = self._ideal_registry
        if s not in reg:
            reg[s] = len(reg)
            self._ideal_sets.append(s)
        return reg[s]

    def ideal_set(self, ident: int) -> frozenset[int]:
        return self._ideal_sets[ident]

    def sum_ideal_id(self, id1: int, id2: int) -> int:
        """Id of the ideal I1 + I2 (memoized on ideal ids)."""
        if id1 > id2:
            id1, id2 = id2, id1
        key = (id1, id2)
        got = self._sum_memo.get(key)
        if got is not None:
            return got
        s1, s2 = self.ideal_set(id1), self.ideal_set(id2)
        n, add = self.n, self.add
        total = frozenset(add[x * n + y] for x in s1 for y in s2)
        ident = self.ideal_id_of_set(total)
        self._sum_memo[key] = ident
        return ident

    @cached_property
    def _principal_gens(self) -> dict[int, tuple[int, ...]]:
        """Ideal id -> generators of that ideal, ascending (principal ones only)."""
        out: dict[int, list[int]] = {}
        for i in range(self.n):
            out.setdefault(self.ideal_class[i], []).append(i)
        return {k: tuple(v) for k, v in out.items()}

    def generators_of(self, ident: int) -> tuple[int, ...]:
        """Elements generating the ideal with this id (empty if not principal)."""
        gens = self._principal_gens.get(ident)
        if gens is None:
            return ()
        return gens

    # --- comaximality ----------------------------------------------------------

    @cached_property
    def comax(self) -> list[list[bool]]:
        """comax[i][j] is True iff iR + jR = R (computed per ideal class)."""
        k = len(set(self.ideal_class))
        cls = self.ideal_class
        full_id = self.ideal_class[self.one]
        table = [[False] * k for _ in range(k)]
        for c1 in range(k):
            for c2 in range(c1, k):
                hit = self.sum_ideal_id(c1, c2) == full_id
                table[c1][c2] = table[c2][c1] = hit
        return [[table[cls[i]][cls[j]] for j in range(self.n)] for i in range(self.n)]

    def comax_witness(self, i: int, j: int) -> tuple[int, int] | None:
        """First (x, y) in scan order with i*x + j*y = 1, or None."""
        if not self.comax[i][j]:
            return None
        n, mul, one = self.n, self.mul, self.one
        wit_j = self.pid_witness[j]
        row = i * n
        for x in range(n):
            rem = self.sub(one, mul[row + x])
            y = wit_j.get(rem)
            if y is not None:
                return x, y
        return None

    def triple_comax(self, i: int, j: int, k: int) -> bool:
        """True iff iR + jR + kR = R."""
        cls = self.ideal_class
        sid = self.sum_ideal_id(self.sum_ideal_id(cls[i], cls[j]), cls[k])
        return sid == cls[self.one]

    def triple_comax_witness(self, i: int, j: int, k: int) -> tuple[int, int, int] | None:
        """First (x, y, z) with i*x + j*y + k*z = 1, or None."""
        if not self.triple_comax(i, j, k):
            return None
        n, mul, one = self.n, self.mul, self.one
        wit_k = self.pid_witness[k]
        for x in range(n):
            r1 = self.sub(one, mul[i * n + x])
            for y in range(n):
                rem = self.sub(r1, mul[j * n + y])
                z = wit_k.get(rem)
                if z is not None:
                    return x, y, z
        return None

    # --- divisibility ------------------------------------------------------------

    @cached_property
    def nonunit_divisors(self) -> list[tuple[int, ...]]:
        """Per element s: every non-unit t with s in tR, ascending."""
        pid, units = self.pid, self.unit_set
        out = []
        for s in range(self.n):
            out.append(
                tuple(t for t in range(self.n) if t not in units and s in pid[t])
            )
        return out

    def divides(self, i: int, j: int) -> int | None:
        """First t with i*t = j, or None."""
        return self.pid_witness[i].get(j)

    # --- unit normalization ---------------------------------------------------

    @cached_property
    def associate_canon(self) -> list[tuple[int, int, int]]:
        """Per element a: (c, u, u_inv) with c = u*a minimal among associates."""
        n, mul = self.n, self.mul
        units = self.units
        out = []
        for a in range(n):
            best, best_u = a, self.one
            for u in units:
                c = mul[u * n + a]
                if c < best:
                    best, best_u = c, u
            out.append((best, best_u, units[best_u]))
        return out

    # --- Bezout gcd -----------------------------------------------------------

    def bezout(self, ia: int, ib: int) -> tuple[int, int, int, int, int, int, int]:
        """Search a full Bezout witness (d, x, y, a1, b1, u, v) by indices.

        d is the first element (in enumeration order) generating the ideal
        iaR + ibR; the cofactor pair (a1, b1) is the first one admitting a
        comaximality witness. The gcd coefficients reuse the comaximality
        pair, so a*x + b*y = (a1*x + b1*y)*d = d holds by construction.
        """
        key = (ia, ib)
        got = self._bezout_memo.get(key)
        if got is not None:
            return got
        if ia == self.zero and ib == self.zero:
            # Zero-ideal convention: cofactors (1, 0) keep a1R + b1R = R.
            res = (self.zero, self.zero, self.zero, self.one, self.zero,
                   self.one, self.zero)
            self._bezout_memo[key] = res
            return res
        cls = self.ideal_class
        sum_id = self.sum_ideal_id(cls[ia], cls[ib])
        gens = self.generators_of(sum_id)
        if not gens:
            raise NotBezout(
                f"{self.ring.spec_string()}: ideal generated by "
                f"{self.element(ia)} and {self.element(ib)} is not principal"
            )
        n, mul = self.n, self.mul
        for d in gens:
            row = d * n
            cof_a = [t for t in range(n) if mul[row + t] == ia]
            cof_b = [t for t in range(n) if mul[row + t] == ib]
            for a1 in cof_a:
                comax_row = self.comax[a1]
                for b1 in cof_b:
                    if not comax_row[b1]:
                        continue
                    wit = self.comax_witness(a1, b1)
                    if wit is None:
                        continue
                    u, v = wit
                    res = (d, u, v, a1, b1, u, v)
                    self._bezout_memo[key] = res
                    return res
        raise NotBezout(
            f"{self.ring.spec_string()}: no comaximal cofactor pair for "
            f"{self.element(ia)}, {self.element(ib)}"
        )

    def is_unit_idx(self, i: int) -> int | None:
        return self.units.get(i)
