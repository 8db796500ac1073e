"""Concrete ring kinds and the ring-spec grammar.

Supported kinds (spec syntax in parentheses):

* the integers (``Z``)
* modular integers (``Zn:<n>``, n >= 2)
* finite direct products (``prod(<spec>,<spec>[,...])``)
* polynomial quotients Z[x]/(n, f) (``polyq:<n>:<f>``, monic f; ``n=0`` is
  allowed only with ``f = x^2-1`` and gives the infinite ring Z[a], a^2 = 1)
* the integers localized away from a finite prime set
  (``zloc:{p1,p2,...}``: fractions m/n with no p dividing n)
* dual integers a + b*x with integer a, rational b and x^2 = 0 (``dualint``)
* table rings loaded from JSON files (``table:<path>``)
* quotients of finite rings by one element (``quot(<finite-spec>,<element>)``)

Table-ring files are JSON objects ``{size, add, mul, zero, one}`` with
row-major integer index tables; the ring axioms are verified exhaustively
at load time. Quotient rings are materialized as table rings whose elements
are coset representatives of least enumeration index.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from itertools import product as iter_product
from pathlib import Path
from typing import Callable

from .cache import DEFAULT_SIZE_BOUND, EngineCache
from .errors import (
    AxiomViolation,
    ParseError,
    TooLarge,
    UnsupportedSpec,
)
from .rings import Element, Ring, check_ring_axioms, int_xgcd

TABLE_VERIFY_LIMIT = 128


# ---------------------------------------------------------------------------
# integer polynomial strings
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^([+-]?)(\d+)?(x(?:\^(\d+))?)?$")


def parse_int_poly(text: str) -> tuple[int, ...]:
    """Parse a univariate integer polynomial like ``x^2-1`` or ``3+2x``.

    Returns ascending coefficients, trailing zeros stripped (``(0,)`` for
    the zero polynomial).
    """
    s = text.replace(" ", "").replace("**", "^").replace("*", "")
    if not s:
        raise ParseError("empty polynomial")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ParseError(f"malformed polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ParseError(f"bad term {term!r} in polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3):
            power = int(m.group(4)) if m.group(4) is not None else 1
        else:
            power = 0
        coeffs[power] = coeffs.get(power, 0) + sign * coef
    deg = max(coeffs)
    out = [coeffs.get(i, 0) for i in range(deg + 1)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def format_int_poly(coeffs, descending: bool = False) -> str:
    """Format ascending coefficients as a compact polynomial string."""
    terms = [(p, c) for p, c in enumerate(coeffs) if c != 0]
    if not terms:
        return "0"
    if descending:
        terms.reverse()
    parts = []
    for i, (p, c) in enumerate(terms):
        sign = "-" if c < 0 else ("+" if i > 0 else "")
        mag = abs(c)
        if p == 0:
            body = str(mag)
        else:
            xpart = "x" if p == 1 else f"x^{p}"
            body = xpart if mag == 1 else f"{mag}{xpart}"
        parts.append(sign + body)
    return "".join(parts)


def _split_top_level(s: str, sep: str) -> list[str]:
    """Split on ``sep`` outside any (), {}, [] nesting."""
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {s!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {s!r}")
    parts.append("".join(cur))
    return parts


# ---------------------------------------------------------------------------
# infinite structured kinds
# ---------------------------------------------------------------------------


class IntegerRing(Ring):
    """The ring of integers with extended-Euclid Bezout witnesses."""

    kind = "Z"
    cardinality = None

    def _canon(self, value):
        if not isinstance(value, int):
            raise ParseError(f"integer expected, got {value!r}")
        return value

    def _add(self, x, y):
        return x + y

    def _mul(self, x, y):
        return x * y

    def _neg(self, x):
        return -x

    def _zero_raw(self):
        return 0

    def _one_raw(self):
        return 1

    def _format(self, value):
        return str(value)

    def _parse(self, text):
        try:
            return int(text.strip())
        except ValueError as exc:
            raise ParseError(f"bad integer {text!r}") from exc

    def _is_unit_raw(self, x):
        return x if x in (1, -1) else None

    def _divides_raw(self, x, y):
        if x == 0:
            return 0 if y == 0 else None
        q, r = divmod(y, x)
        return q if r == 0 else None

    def _bezout_raw(self, x, y):
        if x == 0 and y == 0:
            # Zero-ideal convention: keep the comaximality slot total.
            return (0, 0, 0, 1, 0, 1, 0)
        g, s, t = int_xgcd(x, y)
        a1, b1 = x // g, y // g
        # Over a domain a1*s + b1*t = 1 follows from x*s + y*t = g.
        return (g, s, t, a1, b1, s, t)

    def _unit_canon_raw(self, x):
        if x < 0:
            return (-x, -1, -1)
        return (x, 1, 1)

    def spec_string(self):
        return "Z"


class IntQuadRing(Ring):
    """Z[x]/(x^2 - 1): pairs a + b*x with x^2 = 1.

    Decidable through the evaluation embedding x -> (1, -1) into Z x Z,
    whose image is the set of pairs with equal parity. Supports arithmetic,
    units, and divisibility only; the ring is not assumed Bezout.
    """

    kind = "polyq"
    cardinality = None

    def _canon(self, value):
        a, b = value
        if not (isinstance(a, int) and isinstance(b, int)):
            raise ParseError(f"integer pair expected, got {value!r}")
        return (a, b)

    def _add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def _mul(self, x, y):
        a, b = x
        c, d = y
        return (a * c + b * d, a * d + b * c)

    def _neg(self, x):
        return (-x[0], -x[1])

    def _zero_raw(self):
        return (0, 0)

    def _one_raw(self):
        return (1, 0)

    def _format(self, value):
        return format_int_poly(value)

    def _parse(self, text):
        coeffs = parse_int_poly(text)
        if len(coeffs) > 2:
            raise ParseError(f"element {text!r} has degree > 1")
        a = coeffs[0]
        b = coeffs[1] if len(coeffs) > 1 else 0
        return (a, b)

    @staticmethod
    def embed(value) -> tuple[int, int]:
        """Evaluation at x = +1 and x = -1."""
        a, b = value
        return (a + b, a - b)

    @staticmethod
    def unembed(u: int, v: int) -> tuple[int, int]:
        if (u - v) % 2:
            raise ValueError(f"({u}, {v}) is not in the embedded image")
        return ((u + v) // 2, (u - v) // 2)

    def _is_unit_raw(self, x):
        u, v = self.embed(x)
        if u in (1, -1) and v in (1, -1):
            return x  # all four units square to 1
        return None

    def _divides_raw(self, x, y):
        xu, xv = self.embed(x)
        yu, yv = self.embed(y)
        tu = tv = None
        if xu == 0:
            if yu != 0:
                return None
        else:
            q, r = divmod(yu, xu)
            if r:
                return None
            tu = q
        if xv == 0:
            if yv != 0:
                return None
        else:
            q, r = divmod(yv, xv)
            if r:
                return None
            tv = q
        if tu is None and tv is None:
            return (0, 0)
        if tu is None:
            tu = tv
        if tv is None:
            tv = tu
        if (tu - tv) % 2:
            return None
        return self.unembed(tu, tv)

    def spec_string(self):
        return "polyq:0:x^2-1"


class LocalizedIntegerRing(Ring):
    """Integers localized at a finite prime set P: fractions m/n, no p | n.

    Element structure is governed by the p-adic valuations of the numerator
    at the primes of P; everything else is a unit. Divisibility and Bezout
    data follow by comparing valuations.
    """

    kind = "zloc"
    cardinality = None

    def __init__(self, primes):
        ps = sorted(set(int(p) for p in primes))
        if not ps:
            raise UnsupportedSpec("zloc needs at least one prime")
        for p in ps:
            if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
                raise UnsupportedSpec(f"{p} is not prime")
        if len(ps) != len(list(primes)):
            raise UnsupportedSpec("zloc primes must be distinct")
        self.primes = tuple(ps)

    def _canon(self, value):
        f = Fraction(value)
        for p in self.primes:
            if f.denominator % p == 0:
                raise ParseError(
                    f"{f} is not in {self.spec_string()}: denominator "
                    f"divisible by {p}"
                )
        return f

    def _add(self, x, y):
        return x + y

    def _mul(self, x, y):
        return x * y

    def _neg(self, x):
        return -x

    def _zero_raw(self):
        return Fraction(0)

    def _one_raw(self):
        return Fraction(1)

    def _format(self, value):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def _parse(self, text):
        try:
            return self._canon(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad fraction {text!r}") from exc

    def valuation(self, value: Fraction, p: int) -> int | None:
        """p-adic valuation of the numerator; None means infinite (value 0)."""
        m = value.numerator
        if m == 0:
            return None
        v = 0
        while m % p == 0:
            m //= p
            v += 1
        return v

    def prime_part(self, value: Fraction) -> int:
        """Product of p^v_p over the localized primes (1 for units, 0 for 0)."""
        if value == 0:
            return 0
        out = 1
        for p in self.primes:
            out *= p ** self.valuation(value, p)
        return out

    def _is_unit_raw(self, x):
        if x == 0:
            return None
        if any(x.numerator % p == 0 for p in self.primes):
            return None
        return 1 / x

    def _divides_raw(self, x, y):
        if x == 0:
            return Fraction(0) if y == 0 else None
        if y == 0:
            return Fraction(0)
        t = y / x
        if any(t.denominator % p == 0 for p in self.primes):
            return None
        return t

    def _bezout_raw(self, x, y):
        zero, one = Fraction(0), Fraction(1)
        if x == 0 and y == 0:
            return (zero, zero, zero, one, zero, one, zero)
        if x == 0 or y == 0:
            nz = x if x != 0 else y
            d = Fraction(self.prime_part(nz))
            a1, b1 = x / d, y / d  # one is 0, the other a unit
            if x == 0:
                u, v = zero, 1 / b1
            else:
                u, v = 1 / a1, zero
            return (d, u, v, a1, b1, u, v)
        d = Fraction(1)
        for p in self.primes:
            d *= p ** min(self.valuation(x, p), self.valuation(y, p))
        a1, b1 = x / d, y / d
        g, k, l = int_xgcd(self.prime_part(a1), self.prime_part(b1))
        # The prime parts are coprime by construction, so g = 1.
        u = k * Fraction(self.prime_part(a1)) / a1
        v = l * Fraction(self.prime_part(b1)) / b1
        return (d, u, v, a1, b1, u, v)

    def _unit_canon_raw(self, x):
        if x == 0:
            return (Fraction(0), Fraction(1), Fraction(1))
        c = Fraction(self.prime_part(x))
        return (c, c / x, x / c)

    def spec_string(self):
        return "zloc:{" + ",".join(str(p) for p in self.primes) + "}"


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    """Positive generator of the additive group aZ + bZ inside Q."""
    from math import gcd

    if a == 0 and b == 0:
        return Fraction(0)
    num = gcd(abs(a.numerator) * b.denominator, abs(b.numerator) * a.denominator)
    return Fraction(num, a.denominator * b.denominator)


class DualIntRing(Ring):
    """Dual integers a + b*x with a in Z, b in Q, and x^2 = 0."""

    kind = "dualint"
    cardinality = None

    def _canon(self, value):
        a, b = value
        if not isinstance(a, int):
            raise ParseError(f"integer part of {value!r} must be an integer")
        return (a, Fraction(b))

    def _add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def _mul(self, x, y):
        a, b = x
        c, d = y
        return (a * c, a * d + b * c)

    def _neg(self, x):
        return (-x[0], -x[1])

    def _zero_raw(self):
        return (0, Fraction(0))

    def _one_raw(self):
        return (1, Fraction(0))

    def _format(self, value):
        a, b = value
        if b == 0:
            return str(a)
        sign = "-" if b < 0 else "+"
        mag = abs(b)
        if mag == 1:
            xpart = "x"
        elif mag.denominator == 1:
            xpart = f"{mag.numerator}x"
        else:
            xpart = f"{mag.numerator}/{mag.denominator} x"
        return f"{a}{sign}{xpart}"

    _XTERM_RE = re.compile(r"(?P<coef>[+-]?(?:\d+(?:/\d+)?)?)\s*\*?\s*x\s*$")

    def _parse(self, text):
        s = text.strip()
        if not s:
            raise ParseError("empty dual integer")
        if "x" not in s:
            try:
                return (int(s), Fraction(0))
            except ValueError as exc:
                raise ParseError(f"bad dual integer {text!r}") from exc
        m = self._XTERM_RE.search(s)
        if not m:
            raise ParseError(f"bad dual integer {text!r}")
        coef = m.group("coef")
        if coef in ("", "+"):
            b = Fraction(1)
        elif coef == "-":
            b = Fraction(-1)
        else:
            b = Fraction(coef)
        prefix = s[: m.start()].strip()
        try:
            a = int(prefix) if prefix else 0
        except ValueError as exc:
            raise ParseError(f"bad dual integer {text!r}") from exc
        return (a, b)

    def _is_unit_raw(self, x):
        a, b = x
        if a in (1, -1):
            return (a, -b)
        return None

    def _divides_raw(self, x, y):
        a, b = x
        c, d = y
        if a == 0:
            if c != 0:
                return None
            if b == 0:
                return (0, Fraction(0)) if d == 0 else None
            t = d / b
            if t.denominator != 1:
                return None
            return (int(t), Fraction(0))
        q, r = divmod(c, a)
        if r:
            return None
        return (q, (d - b * q) / a)

    def _bezout_raw(self, x, y):
        zero = (0, Fraction(0))
        one = (1, Fraction(0))
        a1i, b1f = x
        a2i, b2f = y
        if x == zero and y == zero:
            return (zero, zero, zero, one, zero, one, zero)
        if a1i != 0 or a2i != 0:
            p, k, l = int_xgcd(a1i, a2i)
            d = (p, Fraction(0))
            # Clear the x-coefficient of x*X + y*Y through the nonzero slot.
            if a1i != 0:
                e1 = -(b1f * k + b2f * l) / a1i
                X, Y = (k, e1), (l, Fraction(0))
            else:
                e2 = -(b1f * k + b2f * l) / a2i
                X, Y = (k, Fraction(0)), (l, e2)
            c1 = (a1i // p, b1f / p)
            c2 = (a2i // p, b2f / p)
            g, U0, V0 = int_xgcd(c1[0], c2[0])
            if c1[0] != 0:
                eu = -(c1[1] * U0 + c2[1] * V0) / c1[0]
                u, v = (U0, eu), (V0, Fraction(0))
            else:
                ev = -(c1[1] * U0 + c2[1] * V0) / c2[0]
                u, v = (U0, Fraction(0)), (V0, ev)
            return (d, X, Y, c1, c2, u, v)
        q = _frac_gcd(b1f, b2f)
        m1 = int(b1f / q)
        m2 = int(b2f / q)
        g, U0, V0 = int_xgcd(m1, m2)
        d = (0, q)
        X, Y = (U0, Fraction(0)), (V0, Fraction(0))
        return (d, X, Y, (m1, Fraction(0)), (m2, Fraction(0)), X, Y)

    def spec_string(self):
        return "dualint"


# ---------------------------------------------------------------------------
# finite kinds
# ---------------------------------------------------------------------------


class FiniteRingMixin:
    """Cache-backed implementations of the witness operations by search."""

    def cache(self, bound: int = DEFAULT_SIZE_BOUND) -> EngineCache:
        c = getattr(self, "_cache_obj", None)
        if c is None:
            c = EngineCache(self, bound)
            self._cache_obj = c
        elif self.cardinality is not None and self.cardinality > bound:
            raise TooLarge(
                f"{self.spec_string()} exceeds requested bound {bound}"
            )
        return c

    def _is_unit_raw(self, x):
        c = self.cache()
        inv = c.is_unit_idx(c.idx[x])
        return None if inv is None else c.vals[inv]

    def _divides_raw(self, x, y):
        c = self.cache()
        t = c.divides(c.idx[x], c.idx[y])
        return None if t is None else c.vals[t]

    def _bezout_raw(self, x, y):
        c = self.cache()
        parts = c.bezout(c.idx[x], c.idx[y])
        return tuple(c.vals[i] for i in parts)


class ModularRing(FiniteRingMixin, Ring):
    """Z/nZ with canonical representatives 0..n-1."""

    kind = "Zn"

    def __init__(self, n: int):
        n = int(n)
        if n < 2:
            raise UnsupportedSpec(f"Zn needs modulus >= 2, got {n}")
        self.n = n
        self.cardinality = n

    def _canon(self, value):
        return int(value) % self.n

    def _add(self, x, y):
        return (x + y) % self.n

    def _mul(self, x, y):
        return (x * y) % self.n

    def _neg(self, x):
        return (-x) % self.n

    def _zero_raw(self):
        return 0

    def _one_raw(self):
        return 1 % self.n

    def _values(self):
        return iter(range(self.n))

    def _format(self, value):
        return str(value)

    def _parse(self, text):
        try:
            return int(text.strip()) % self.n
        except ValueError as exc:
            raise ParseError(f"bad residue {text!r}") from exc

    def spec_string(self):
        return f"Zn:{self.n}"


class ProductRing(FiniteRingMixin, Ring):
    """Finite direct product with componentwise operations."""

    kind = "prod"

    def __init__(self, factors):
        factors = tuple(factors)
        if len(factors) < 2:
            raise UnsupportedSpec("prod needs at least two factors")
        for f in factors:
            if f.cardinality is None:
                raise UnsupportedSpec(
                    f"prod factors must be finite, got {f.spec_string()}"
                )
        self.factors = factors
        card = 1
        for f in factors:
            card *= f.cardinality
        self.cardinality = card

    def _canon(self, value):
        value = tuple(value)
        if len(value) != len(self.factors):
            raise ParseError(
                f"product element needs {len(self.factors)} components"
            )
        return tuple(f._canon(v) for f, v in zip(self.factors, value))

    def _add(self, x, y):
        return tuple(f._add(a, b) for f, a, b in zip(self.factors, x, y))

    def _mul(self, x, y):
        return tuple(f._mul(a, b) for f, a, b in zip(self.factors, x, y))

    def _neg(self, x):
        return tuple(f._neg(a) for f, a in zip(self.factors, x))

    def _zero_raw(self):
        return tuple(f._zero_raw() for f in self.factors)

    def _one_raw(self):
        return tuple(f._one_raw() for f in self.factors)

    def _values(self):
        return iter_product(*[list(f._values()) for f in self.factors])

    def _format(self, value):
        return "(" + "|".join(f._format(v) for f, v in zip(self.factors, value)) + ")"

    def _parse(self, text):
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ParseError(f"product element {text!r} must look like (a|b)")
        parts = _split_top_level(s[1:-1], "|")
        if len(parts) != len(self.factors):
            raise ParseError(
                f"product element {text!r} needs {len(self.factors)} components"
            )
        return tuple(f._parse(p) for f, p in zip(self.factors, parts))

    def spec_string(self):
        return "prod(" + ",".join(f.spec_string() for f in self.factors) + ")"


class PolyQuotientRing(FiniteRingMixin, Ring):
    """Z[x]/(n, f) for n >= 2 and monic f: tuples of residue coefficients."""

    kind = "polyq"

    def __init__(self, n: int, f_coeffs):
        n = int(n)
        if n < 2:
            raise UnsupportedSpec(f"polyq needs modulus >= 2, got {n}")
        f = tuple(int(c) for c in f_coeffs)
        if len(f) < 2:
            raise UnsupportedSpec("polyq modulus polynomial must have degree >= 1")
        if f[-1] != 1:
            raise UnsupportedSpec("polyq modulus polynomial must be monic")
        self.n = n
        self.f = f
        self.deg = len(f) - 1
        self.cardinality = n ** self.deg

    def _reduce(self, coeffs) -> tuple[int, ...]:
        c = [x % self.n for x in coeffs]
        if len(c) < self.deg:
            c.extend([0] * (self.deg - len(c)))
        for k in range(len(c) - 1, self.deg - 1, -1):
            lead = c[k]
            if lead:
                off = k - self.deg
                for i, fc in enumerate(self.f):
                    c[off + i] = (c[off + i] - lead * fc) % self.n
        return tuple(c[: self.deg])

    def _canon(self, value):
        return self._reduce(list(value))

    def _add(self, x, y):
        return tuple((a + b) % self.n for a, b in zip(x, y))

    def _mul(self, x, y):
        out = [0] * (2 * self.deg - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    out[i + j] += a * b
        return self._reduce(out)

    def _neg(self, x):
        return tuple((-a) % self.n for a in x)

    def _zero_raw(self):
        return (0,) * self.deg

    def _one_raw(self):
        return tuple([1 % self.n] + [0] * (self.deg - 1))

    def _values(self):
        n, deg = self.n, self.deg
        for i in range(n**deg):
            digits = []
            t = i
            for _ in range(deg):
                digits.append(t % n)
                t //= n
            yield tuple(digits)

    def _format(self, value):
        return format_int_poly(value)

    def _parse(self, text):
        return self._reduce(list(parse_int_poly(text)))

    def spec_string(self):
        return f"polyq:{self.n}:{format_int_poly(self.f, descending=True)}"


class TableRing(FiniteRingMixin, Ring):
    """Finite ring given by explicit operation tables over element indices."""

    kind = "table"

    def __init__(self, size, add_table, mul_table, zero, one,
                 spec_str: str | None = None, verify: bool = True):
        size = int(size)
        if size < 1:
            raise AxiomViolation("table ring must have at least one element")
        add_table = [list(map(int, row)) for row in add_table]
        mul_table = [list(map(int, row)) for row in mul_table]
        for name, tab in (("add", add_table), ("mul", mul_table)):
            if len(tab) != size or any(len(row) != size for row in tab):
                raise AxiomViolation(f"{name} table is not {size}x{size}")
            if any(v < 0 or v >= size for row in tab for v in row):
                raise AxiomViolation(f"{name} table has out-of-range entries")
        if not (0 <= zero < size and 0 <= one < size):
            raise AxiomViolation("zero/one indices out of range")
        self.size = size
        self.add_table = add_table
        self.mul_table = mul_table
        self.zero_idx = int(zero)
        self.one_idx = int(one)
        self.cardinality = size
        self._spec_str = spec_str
        # Additive inverses must exist for this to be a ring at all.
        negs = []
        for i in range(size):
            row = add_table[i]
            try:
                negs.append(row.index(self.zero_idx))
            except ValueError:
                raise AxiomViolation(f"element {i} has no additive inverse")
        self._negs = negs
        if verify:
            if size > TABLE_VERIFY_LIMIT:
                raise TooLarge(
                    f"table ring of size {size} exceeds the exhaustive "
                    f"verification limit {TABLE_VERIFY_LIMIT}"
                )
            check_ring_axioms(self, list(self.elements()),
                              exhaustive_limit=TABLE_VERIFY_LIMIT)

    def _canon(self, value):
        v = int(value)
        if not 0 <= v < self.size:
            raise ParseError(f"index {value!r} out of range for {self.spec_string()}")
        return v

    def _add(self, x, y):
        return self.add_table[x][y]

    def _mul(self, x, y):
        return self.mul_table[x][y]

    def _neg(self, x):
        return self._negs[x]

    def _zero_raw(self):
        return self.zero_idx

    def _one_raw(self):
        return self.one_idx

    def _values(self):
        return iter(range(self.size))

    def _format(self, value):
        return str(value)

    def _parse(self, text):
        try:
            return self._canon(int(text.strip()))
        except ValueError as exc:
            raise ParseError(f"bad table index {text!r}") from exc

    def spec_string(self):
        return self._spec_str or f"table:<anonymous-{self.size}>"


def load_table_ring(path: str) -> TableRing:
    """Load a table ring from a JSON file, verifying the ring axioms."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read table ring file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON in table ring file {path!r}: {exc}") from exc
    try:
        return TableRing(
            data["size"], data["add"], data["mul"], data["zero"], data["one"],
            spec_str=f"table:{path}",
        )
    except KeyError as exc:
        raise ParseError(f"table ring file {path!r} is missing key {exc}") from exc


def export_table_data(ring: Ring) -> dict:
    """Materialize any finite ring as table-ring JSON data."""
    c = ring.cache() if hasattr(ring, "cache") else EngineCache(ring)
    n = c.n
    return {
        "size": n,
        "add": [[c.add[i * n + j] for j in range(n)] for i in range(n)],
        "mul": [[c.mul[i * n + j] for j in range(n)] for i in range(n)],
        "zero": c.zero,
        "one": c.one,
    }


def builtin_table_path(name: str = "nonbezout8") -> str:
    """Path of a table ring shipped with the package."""
    return str(Path(__file__).parent / "data" / f"{name}.json")


# ---------------------------------------------------------------------------
# quotients
# ---------------------------------------------------------------------------


def quotient_ring(ring: Ring, gens: list[Element]
                  ) -> tuple[TableRing, dict[Element, Element]]:
    """Quotient of a finite ring by the ideal generated by ``gens``.

    Returns the quotient as a table ring (cosets named by their least
    representative's index) together with the projection map, which is
    verified to be a ring homomorphism exhaustively.
    """
    if ring.cardinality is None:
        raise UnsupportedSpec("quotients are supported for finite rings only")
    c: EngineCache = ring.cache()
    n = c.n
    ideal = frozenset([c.zero])
    for g in gens:
        gi = c.index_of(g)
        # Sum of two additive subgroups is already a subgroup.
        ideal = frozenset(c.add[x * n + y] for x in ideal for y in c.pid[gi])
    rep_of = [min(c.add[i * n + j] for j in ideal) for i in range(n)]
    reps = sorted(set(rep_of))
    qindex = {r: k for k, r in enumerate(reps)}
    m = len(reps)
    assert n % m == 0, "coset count must divide the ring order"
    qadd = [[qindex[rep_of[c.add[a * n + b]]] for b in reps] for a in reps]
    qmul = [[qindex[rep_of[c.mul[a * n + b]]] for b in reps] for a in reps]
    if len(gens) == 1:
        label = f"quot({ring.spec_string()},{ring.format_element(gens[0])})"
    else:
        inner = ";".join(ring.format_element(g) for g in gens)
        label = f"quot({ring.spec_string()},[{inner}])"
    q = TableRing(m, qadd, qmul, qindex[rep_of[c.zero]], qindex[rep_of[c.one]],
                  spec_str=label, verify=False)
    # The projection must be a homomorphism; check every pair.
    for a in range(n):
        pa = qindex[rep_of[a]]
        row = a * n
        for b in range(n):
            if qindex[rep_of[c.add[row + b]]] != qadd[pa][qindex[rep_of[b]]]:
                raise AxiomViolation("projection fails additivity")
            if qindex[rep_of[c.mul[row + b]]] != qmul[pa][qindex[rep_of[b]]]:
                raise AxiomViolation("projection fails multiplicativity")
    projection = {
        c.element(i): Element(q, qindex[rep_of[i]]) for i in range(n)
    }
    return q, projection


def localized_residue_map(ring: LocalizedIntegerRing
                          ) -> tuple[ProductRing, Callable[[Element], Element]]:
    """Reduction of a localized ring onto the product of its residue fields.

    Sends m/den to (m * den^-1 mod p) componentwise; the map is a surjective
    homomorphism whose kernel is the set of elements whose numerator is
    divisible by every localized prime.
    """
    if not isinstance(ring, LocalizedIntegerRing):
        raise UnsupportedSpec("residue map is defined for zloc rings")
    target = ProductRing([ModularRing(p) for p in ring.primes])

    def mapping(a: Element) -> Element:
        f = ring._member(a)
        comps = tuple(
            (f.numerator * pow(f.denominator, -1, p)) % p for p in ring.primes
        )
        return target.make(comps)

    return target, mapping


# ---------------------------------------------------------------------------
# ring-spec parsing
# ---------------------------------------------------------------------------


def make_ring(spec: str) -> Ring:
    """Build a ring handle from a spec string. See the module docstring."""
    s = spec.strip()
    if not s:
        raise ParseError("empty ring spec")
    if s == "Z":
        return IntegerRing()
    if s == "dualint":
        return DualIntRing()
    if s.startswith("Zn:"):
        try:
            n = int(s[3:])
        except ValueError as exc:
            raise ParseError(f"bad modulus in {spec!r}") from exc
        return ModularRing(n)
    if s.startswith("polyq:"):
        parts = s.split(":", 2)
        if len(parts) != 3:
            raise ParseError(f"polyq spec needs modulus and polynomial: {spec!r}")
        try:
            n = int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad modulus in {spec!r}") from exc
        f = parse_int_poly(parts[2])
        if n == 0:
            if f != (-1, 0, 1):
                raise UnsupportedSpec(
                    "polyq with modulus 0 is supported only for f = x^2-1"
                )
            return IntQuadRing()
        return PolyQuotientRing(n, f)
    if s.startswith("zloc:"):
        body = s[5:].strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ParseError(f"zloc spec needs a prime set: {spec!r}")
        try:
            primes = [int(p) for p in body[1:-1].split(",") if p.strip()]
        except ValueError as exc:
            raise ParseError(f"bad prime in {spec!r}") from exc
        return LocalizedIntegerRing(primes)
    if s.startswith("table:"):
        return load_table_ring(s[6:])
    if s.startswith("prod(") and s.endswith(")"):
        parts = _split_top_level(s[5:-1], ",")
        return ProductRing([make_ring(p) for p in parts])
    if s.startswith("quot(") and s.endswith(")"):
        parts = _split_top_level(s[5:-1], ",")
        if len(parts) != 2:
            raise ParseError(f"quot spec needs a ring and one element: {spec!r}")
        base = make_ring(parts[0])
        if base.cardinality is None:
            raise UnsupportedSpec("quot requires a finite base ring")
        gen = base.parse_element(parts[1])
        q, _ = quotient_ring(base, [gen])
        q._spec_str = s
        return q
    raise ParseError(f"unrecognized ring spec {spec!r}")
