"""Exact arithmetic in GF(2^k) (k <= 20) and GF(3^k) (k <= 18).

Elements are stored as integer codes: the little-endian base-p expansion of a
code gives the coefficient vector in the residue basis {1, x, ..., x^(k-1)}.
Code order therefore coincides with lexicographic order on coefficient
vectors, which is the iteration order used by every exhaustive loop here.

Alongside scalar arithmetic the module exposes the two solution-counting
primitives the curve counts are built from: additive (Artin-Schreier) counts
via subfield traces, and multiplicative (Kummer) counts via power residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

SUPPORTED_DEGREES = {2: 20, 3: 18}

# Fields up to this order get exp/log tables (and the numpy kernels that
# need them); larger fields fall back to scalar polynomial arithmetic.
TABLE_LIMIT = 1 << 21


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), little-endian coefficient tuples


def _poly_trim(a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(a)
    n = len(a)
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _poly_add(a, b, p):
    n = max(len(a), len(b))
    return _poly_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    return _poly_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and _poly_trim(a):
        a = list(_poly_trim(a))
        if len(a) - 1 < df:
            break
        shift = len(a) - 1 - df
        factor = (a[-1] * inv_lead) % p
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - factor * fi) % p
    return _poly_trim(a)


def _poly_mulmod(a, b, f, p):
    return _poly_mod(_poly_mul(a, b, p), f, p)


def _poly_powmod(a, e, f, p):
    result = (1,)
    base = _poly_mod(a, f, p)
    while e > 0:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = tuple((c * inv_lead) % p for c in a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Monic-degree-k irreducibility: x^(p^k) = x mod f, and for every proper
    divisor d of k, gcd(x^(p^d) - x, f) = 1."""
    f = _poly_trim(modulus)
    k = len(f) - 1
    if k < 1 or f[-1] != 1:
        return False
    if k == 1:
        return True
    x = (0, 1)
    t = x
    for d in range(1, k + 1):
        t = _poly_powmod(t, p, f, p)   # t = x^(p^d) mod f
        if d < k and k % d == 0:
            g = _poly_gcd(_poly_sub(t, x, p), f, p)
            if len(g) - 1 != 0:
                return False
    return _poly_sub(t, x, p) == ()


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------


def _code_to_digits(code: int, k: int, p: int) -> tuple[int, ...]:
    if p == 2:
        return tuple((code >> i) & 1 for i in range(k))
    out = []
    for _ in range(k):
        out.append(code % p)
        code //= p
    return tuple(out)


def _digits_to_code(digits: Sequence[int], p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + (d % p)
    return code


@dataclass(frozen=True)
class FieldElement:
    """An element of a FieldSpec, stored by integer code."""

    field: "FieldSpec"
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return _code_to_digits(self.code, self.field.k, self.field.p)

    def _check(self, other: "FieldElement") -> None:
        if self.field is not other.field:
            raise FieldError("elements belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.div(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.code, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.code))

    def frobenius(self, j: int = 1):
        return FieldElement(self.field, self.field.frobenius(self.code, j))

    def trace(self, sub_degree: int):
        return subfield_trace(self, sub_degree)

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"GF({self.field.p}^{self.field.k}):{self.code}"


class FieldSpec:
    """A concrete GF(p^k) with a fixed monic irreducible modulus.

    Immutable after construction; the lazily built exp/log tables are
    read-only caches, so instances are safe to share across threads.
    """

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        if p not in SUPPORTED_DEGREES:
            raise FieldError(f"unsupported characteristic {p}")
        if not 1 <= k <= SUPPORTED_DEGREES[p]:
            raise FieldError(f"unsupported degree {k} for p={p}")
        mod = _poly_trim(modulus)
        if len(mod) - 1 != k or mod[-1] != 1:
            raise FieldError("modulus must be monic of degree k")
        if not is_irreducible(mod, p):
            raise FieldError(f"modulus {mod} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.modulus = mod
        self.order = p**k
        self._mod_int = _digits_to_code(mod, p) if p == 2 else None
        self._tables: tuple[np.ndarray, np.ndarray] | None = None
        self._generator_code: int | None = None

    # -- scalar arithmetic on codes ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da, db = _code_to_digits(a, self.k, 3), _code_to_digits(b, self.k, 3)
        return _digits_to_code([x + y for x, y in zip(da, db)], 3)

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da, db = _code_to_digits(a, self.k, 3), _code_to_digits(b, self.k, 3)
        return _digits_to_code([x - y for x, y in zip(da, db)], 3)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return _digits_to_code([-d for d in _code_to_digits(a, self.k, 3)], 3)

    def mul(self, a: int, b: int) -> int:
        if self.p == 2:
            return self._mul2(a, b)
        pa = _poly_trim(_code_to_digits(a, self.k, 3))
        pb = _poly_trim(_code_to_digits(b, self.k, 3))
        prod = _poly_mod(_poly_mul(pa, pb, 3), self.modulus, 3)
        return _digits_to_code(list(prod) + [0] * (self.k - len(prod)), 3)

    def _mul2(self, a: int, b: int) -> int:
        k, mod = self.k, self._mod_int
        top = 1 << k
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return r

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        if a == 0:
            return 0 if n else 1
        n %= self.order - 1
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, j: int = 1) -> int:
        return self.pow(a, self.p**j)

    # -- element constructors ------------------------------------------

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.k:
            raise FieldError("coefficient vector too long")
        return FieldElement(self, _digits_to_code(list(coeffs) + [0] * (self.k - len(coeffs)), self.p))

    def from_code(self, code: int) -> FieldElement:
        if not 0 <= code < self.order:
            raise FieldError("code out of range")
        return FieldElement(self, code)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The residue class of x."""
        if self.k == 1:
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.p)

    def elements(self) -> Iterator[FieldElement]:
        for code in range(self.order):
            yield FieldElement(self, code)

    # -- multiplicative structure ----------------------------------------

    def generator_code(self) -> int:
        """Code of a fixed generator of the multiplicative group."""
        if self._generator_code is None:
            factors = list(_factorize(self.order - 1))
            for cand in range(1, self.order):
                if all(self.pow(cand, (self.order - 1) // f) != 1 for f in factors):
                    self._generator_code = cand
                    break
            else:  # pragma: no cover
                raise FieldError("no generator found (impossible)")
        return self._generator_code

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(exp, log): exp[i] = g^i for 0 <= i < order-1, log[exp[i]] = i.

        log[0] is set to -1 and must never be used as an exponent.
        """
        if self.order > TABLE_LIMIT:
            raise FieldError(f"field of order {self.order} too large for tables")
        if self._tables is None:
            n = self.order - 1
            exp = np.zeros(n, dtype=np.int64)
            g = self.generator_code()
            if self.p == 2 and g == 2:
                # multiplication by x is a shift-xor; fast sequential build
                mod, top = self._mod_int, 1 << self.k
                cur = 1
                for i in range(n):
                    exp[i] = cur
                    cur <<= 1
                    if cur & top:
                        cur ^= mod
            else:
                cur = 1
                for i in range(n):
                    exp[i] = cur
                    cur = self.mul(cur, g)
            log = np.full(self.order, -1, dtype=np.int64)
            log[exp] = np.arange(n, dtype=np.int64)
            self._tables = (exp, log)
        return self._tables

    def subfield_codes(self, d: int) -> list[int]:
        """All codes fixed by the d-th Frobenius power, i.e. GF(p^d)."""
        if self.k % d != 0:
            raise FieldError("not a subfield degree")
        if self.order <= TABLE_LIMIT:
            exp, _ = self.tables()
            sub = self.p**d - 1
            step = (self.order - 1) // sub
            codes = [0] + [int(exp[i * step]) for i in range(sub)]
            return sorted(codes)
        return [c for c in range(self.order) if self.frobenius(c, d) == c]

    def __repr__(self):
        return f"FieldSpec(GF({self.p}^{self.k}), modulus={self.modulus})"


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Fixed modulus for GF(p^k): the monic irreducible of degree k with the
    smallest coefficient code among those whose root x generates the
    multiplicative group.  Deterministic, so all counts are reproducible."""
    if p not in SUPPORTED_DEGREES or not 1 <= k <= SUPPORTED_DEGREES[p]:
        raise FieldError(f"unsupported field GF({p}^{k})")
    factors = list(_factorize(p**k - 1))
    for code in range(p**k):
        tail = _code_to_digits(code, k, p)
        mod = _poly_trim(tuple(tail) + (1,))
        if len(mod) - 1 != k or not is_irreducible(mod, p):
            continue
        field = FieldSpec.__new__(FieldSpec)
        field.p, field.k, field.modulus, field.order = p, k, mod, p**k
        field._mod_int = _digits_to_code(mod, p) if p == 2 else None
        field._tables = None
        field._generator_code = None
        x = field.gen.code
        if x != 0 and all(field.pow(x, (p**k - 1) // f) != 1 for f in factors):
            return mod
    raise FieldError(f"no primitive modulus for GF({p}^{k})")  # pragma: no cover


@lru_cache(maxsize=None)
def _cached_default_field(p: int, k: int) -> FieldSpec:
    return FieldSpec(p, k, default_modulus(p, k))


def make_field(p: int, k: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Field context for GF(p^k); p in {2, 3}, k within supported range.

    With no modulus the fixed default for (p, k) is used, so repeated calls
    share one cached FieldSpec and its tables.
    """
    if modulus is None:
        return _cached_default_field(p, k)
    return FieldSpec(p, k, tuple(modulus))


def field_arith(e1: FieldElement, e2: FieldElement | None, op: str, n: int | None = None) -> FieldElement:
    """Operation dispatcher: op in {add, sub, mul, div, pow, inv, neg}."""
    if op == "add":
        return e1 + e2
    if op == "sub":
        return e1 - e2
    if op == "mul":
        return e1 * e2
    if op == "div":
        return e1 / e2
    if op == "pow":
        if n is None:
            raise FieldError("pow needs an exponent")
        return e1**n
    if op == "inv":
        return e1.inverse()
    if op == "neg":
        return -e1
    raise FieldError(f"unknown op {op!r}")


def subfield_trace(e: FieldElement, sub_degree: int) -> FieldElement:
    """Trace of e down to GF(p^sub_degree): sum of e^(p^(sub_degree*j))."""
    field = e.field
    if field.k % sub_degree != 0:
        raise FieldError(f"{sub_degree} does not divide {field.k}")
    acc = e.code
    cur = e.code
    for _ in range(field.k // sub_degree - 1):
        cur = field.frobenius(cur, sub_degree)
        acc = field.add(acc, cur)
    return FieldElement(field, acc)


def artin_schreier_count(c: FieldElement, q: int) -> int:
    """Number of y in the ambient field with y^q - y = c (equivalently
    y^q + y = c in characteristic 2), for q = p^d a subfield size.

    The map y -> y^q - y is q-to-1 onto the trace-zero hyperplane, so the
    count is q when Tr(c) vanishes and 0 otherwise.
    """
    field = c.field
    p = field.p
    d = 0
    qq = q
    while qq % p == 0:
        qq //= p
        d += 1
    if qq != 1 or d == 0 or field.k % d != 0:
        raise FieldError(f"{q} is not a subfield size of GF({p}^{field.k})")
    return q if subfield_trace(c, d).code == 0 else 0


def mth_root_count(s: FieldElement, m: int) -> int:
    """Number of t with t^m = s, for m dividing the multiplicative order."""
    field = s.field
    if m <= 0 or (field.order - 1) % m != 0:
        raise FieldError(f"{m} does not divide {field.order - 1}")
    if s.code == 0:
        return 1
    return m if field.pow(s.code, (field.order - 1) // m) == 1 else 0
