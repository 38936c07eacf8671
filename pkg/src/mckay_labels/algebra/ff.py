"""
Exact arithmetic in small finite fields F_{p^m}.

Elements are coefficient vectors in the polynomial basis 1, x, ..., x^{m-1}
modulo a monic irreducible polynomial over F_p. Everything is deterministic:
the modulus is the smallest monic irreducible polynomial and the generator is
the smallest element of full multiplicative order, both with respect to the
integer index ``sum(c_i * p**i)`` of the coefficient vector.
"""
import logging
import math
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from ..core.config import settings
from ..core.errors import FieldError

logger = logging.getLogger("mckay_labels.ff")

Poly = Tuple[int, ...]  # coefficients over F_p, lowest degree first

# Sources up to this size get a full image table in `embed`/`restrict`.
EMBED_TABLE_LIMIT = 2 ** 16


# --- Polynomials over F_p ---------------------------------------------------

def _trim(a: Sequence[int]) -> List[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[List[int], List[int]]:
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        quot[shift] = coef
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        a = _trim(a)
    return _trim(quot), a


def _poly_powmod(a: Sequence[int], k: int, mod: Sequence[int], p: int) -> List[int]:
    result = [1]
    base = _poly_divmod(a, mod, p)[1]
    while k:
        if k & 1:
            result = _poly_divmod(_poly_mul(result, base, p), mod, p)[1]
        base = _poly_divmod(_poly_mul(base, base, p), mod, p)[1]
        k >>= 1
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a:
        inv_lead = pow(a[-1], -1, p)
        a = [(c * inv_lead) % p for c in a]
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Ben-Or test: f of degree m is irreducible iff gcd(f, x^{p^j} - x) = 1 for all j <= m/2."""
    f = _trim(modulus)
    m = len(f) - 1
    if m < 1:
        return False
    x = [0, 1]
    xp = x
    for _ in range(1, m // 2 + 1):
        xp = _poly_powmod(xp, p, f, p)
        if len(_poly_gcd(f, _poly_sub(xp, x, p), p)) > 1:
            return False
    return True


def _digits(k: int, p: int, m: int) -> Tuple[int, ...]:
    out = []
    for _ in range(m):
        k, r = divmod(k, p)
        out.append(r)
    return tuple(out)


def prime_power(q: int) -> Tuple[int, int]:
    """Split q = p^f; raise FieldError when q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, f), = factors.items()
    return int(p), int(f)


# --- Fields and elements ----------------------------------------------------

class FieldCtx:
    """The field F_{p^m}. Immutable once built; obtain instances through `mk_field`."""

    def __init__(self, p: int, m: int, modulus: Poly):
        self.p = p
        self.m = m
        self.modulus = modulus
        self.size = p ** m
        self.order = self.size - 1
        # x^{m+k} mod f for k = 0..m-2, used to fold products back into degree < m
        self._fold = [tuple(_pad(_poly_divmod([0] * (m + k) + [1], modulus, p)[1], m)) for k in range(max(m - 1, 0))]
        self._order_primes = sorted(int(l) for l in sympy.factorint(self.order)) if self.order > 1 else []
        self.zero = FieldElem(self, (0,) * m)
        self.one = FieldElem(self, (1,) + (0,) * (m - 1))
        self.generator = self._find_generator()
        self._baby_steps: Optional[Dict[Tuple[int, ...], int]] = None

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={self.modulus})"

    def __reduce__(self):
        return (mk_field, (self.p, self.m))

    def from_int(self, k: int) -> "FieldElem":
        """Element with integer index k, i.e. coefficients = base-p digits of k."""
        if not 0 <= k < self.size:
            raise FieldError(f"index {k} outside F_{self.p}^{self.m}")
        return FieldElem(self, _digits(k, self.p, self.m))

    def element(self, coeffs: Sequence[int]) -> "FieldElem":
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.m:
            coeffs = _pad(_poly_divmod(coeffs, self.modulus, self.p)[1], self.m)
        return FieldElem(self, tuple(_pad(coeffs, self.m)))

    def prime(self, a: int) -> "FieldElem":
        """Image of the integer a in the prime field."""
        return self.element([a % self.p])

    def elements(self) -> Iterator["FieldElem"]:
        for k in range(self.size):
            yield self.from_int(k)

    def _mul(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        p, m = self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:m]
        for k, c in enumerate(prod[m:]):
            c %= p
            if c:
                fold = self._fold[k]
                for i in range(m):
                    out[i] += c * fold[i]
        return tuple(c % p for c in out)

    def _is_generator(self, x: "FieldElem") -> bool:
        if x.is_zero():
            return False
        return all(x ** (self.order // l) != self.one for l in self._order_primes)

    def _find_generator(self) -> "FieldElem":
        for k in range(1, self.size):
            x = self.from_int(k)
            if self._is_generator(x):
                logger.debug("F_%d^%d generator index %d", self.p, self.m, k)
                return x
        raise FieldError(f"no generator found for {self!r}")  # unreachable for a field

    def baby_steps(self) -> Dict[Tuple[int, ...], int]:
        if self._baby_steps is None:
            step = math.isqrt(self.order) + 1
            table = {}
            y = self.one
            for j in range(step):
                table.setdefault(y.coeffs, j)
                y = y * self.generator
            self._baby_steps = table
        return self._baby_steps


def _pad(coeffs: Sequence[int], m: int) -> List[int]:
    coeffs = list(coeffs)
    return coeffs + [0] * (m - len(coeffs))


class FieldElem:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    # index in [0, p^m) used for ordering and serialization
    @property
    def index(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.ctx.p + c
        return k

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "FieldElem") -> None:
        if other.ctx is not self.ctx:
            raise FieldError(f"mixing elements of {self.ctx!r} and {other.ctx!r}")

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElem":
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.ctx, self.ctx._mul(self.coeffs, other.coeffs))

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.inverse()

    def __pow__(self, k: int) -> "FieldElem":
        if self.is_zero():
            if k < 0:
                raise ZeroDivisionError("zero has no inverse")
            return self.ctx.one if k == 0 else self
        k %= self.ctx.order
        result = self.ctx.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.ctx.order - 1)

    def order(self) -> int:
        """Multiplicative order."""
        if self.is_zero():
            raise FieldError("zero has no multiplicative order")
        n = self.ctx.order
        for l in self.ctx._order_primes:
            while n % l == 0 and self ** (n // l) == self.ctx.one:
                n //= l
        return n

    def is_square(self) -> bool:
        if self.is_zero() or self.ctx.p == 2:
            return True
        return self ** (self.ctx.order // 2) == self.ctx.one

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __lt__(self, other: "FieldElem") -> bool:
        self._check(other)
        return self.index < other.index

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.m, self.coeffs))

    def __repr__(self) -> str:
        return f"FieldElem(F_{self.ctx.p}^{self.ctx.m}, {list(self.coeffs)})"


# --- Operations ------------------------------------------------------------

@lru_cache(maxsize=None)
def mk_field(p: int, m: int) -> FieldCtx:
    """Build F_{p^m}; repeated calls return the same context object."""
    if not sympy.isprime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p ** m > settings.field_size_bound:
        raise FieldError(f"F_{p}^{m} has {p ** m} elements, above the bound {settings.field_size_bound}")
    for k in range(p ** m):
        candidate = _digits(k, p, m) + (1,)
        if is_irreducible(candidate, p):
            logger.debug("F_%d^%d modulus %s", p, m, candidate)
            return FieldCtx(p, m, candidate)
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")  # unreachable


def frobenius_pow(x: FieldElem, e: int) -> FieldElem:
    """x^{p^e}."""
    if e < 0:
        raise FieldError("Frobenius exponent must be non-negative")
    ctx = x.ctx
    return x ** (ctx.p ** (e % ctx.m))


def count_frobenius_fixed(ctx: FieldCtx, e: int) -> int:
    return ctx.p ** math.gcd(e, ctx.m)


def dlog(x: FieldElem) -> int:
    """Discrete logarithm to the base ctx.generator by baby-step/giant-step."""
    if x.is_zero():
        raise FieldError("discrete logarithm of zero")
    ctx = x.ctx
    table = ctx.baby_steps()
    step = math.isqrt(ctx.order) + 1
    giant = ctx.generator ** (-step)
    gamma = x
    for i in range(step + 1):
        j = table.get(gamma.coeffs)
        if j is not None:
            return (i * step + j) % ctx.order
        gamma = gamma * giant
    raise FieldError(f"discrete logarithm of {x!r} not found")  # unreachable


class _Embedding:
    """A fixed ring embedding source -> target, with an optional image table."""

    def __init__(self, source: FieldCtx, target: FieldCtx):
        self.source = source
        self.target = target
        self.ratio = target.order // source.order
        self.twist = self._find_twist()
        self.image_of_generator = target.generator ** (self.ratio * self.twist)
        self._table: Optional[List[FieldElem]] = None
        self._inverse: Optional[Dict[Tuple[int, ...], FieldElem]] = None
        if source.size <= EMBED_TABLE_LIMIT:
            self._build_table()

    def _find_twist(self) -> int:
        # g_s = gamma_s^{1/u_s} goes to gamma_t^{ratio/u_s} = g_t^{ratio * u_t / u_s}
        if self.source.order == 1:
            return 1
        u_s = _compatible_exponent(self.source.p, self.source.m)
        u_t = _compatible_exponent(self.target.p, self.target.m)
        return (u_t * pow(u_s, -1, self.source.order)) % self.source.order

    def _build_table(self) -> None:
        table: List[Optional[FieldElem]] = [None] * self.source.size
        table[0] = self.target.zero
        x, y = self.source.one, self.target.one
        for _ in range(self.source.order):
            table[x.index] = y
            x = x * self.source.generator
            y = y * self.image_of_generator
        self._table = table  # type: ignore[assignment]
        self._inverse = {img.coeffs: self.source.from_int(k) for k, img in enumerate(table)}

    def image(self, x: FieldElem) -> FieldElem:
        if self._table is not None:
            return self._table[x.index]
        if x.is_zero():
            return self.target.zero
        return self.image_of_generator ** dlog(x)

    def preimage(self, y: FieldElem) -> FieldElem:
        if self._inverse is not None:
            try:
                return self._inverse[y.coeffs]
            except KeyError:
                raise FieldError(f"{y!r} is not in the image of {self.source!r}") from None
        if y.is_zero():
            return self.source.zero
        k = dlog(y)
        if k % self.ratio:
            raise FieldError(f"{y!r} is not in the image of {self.source!r}")
        a = (k // self.ratio) * pow(self.twist, -1, self.source.order)
        return self.source.generator ** a


@lru_cache(maxsize=None)
def _compatible_exponent(p: int, m: int) -> int:
    """
    Smallest u prime to p^m - 1 such that gamma_m = g^u is norm-compatible:
    gamma_m^{(p^m-1)/(p^a-1)} shares its minimal polynomial with gamma_a for
    every proper divisor a of m.
    """
    ctx = mk_field(p, m)
    conditions = []
    for a in range(1, m):
        if m % a == 0:
            sub = mk_field(p, a)
            gamma_a = sub.generator ** _compatible_exponent(p, a)
            conditions.append((ctx.order // sub.order, minimal_polynomial(gamma_a)))
    for u in range(1, ctx.order + 1):
        if math.gcd(u, ctx.order) != 1:
            continue
        gamma = ctx.generator ** u
        if all(evaluate_poly(poly, gamma ** r).is_zero() for r, poly in conditions):
            logger.debug("F_%d^%d compatible exponent %d", p, m, u)
            return u
    raise FieldError(f"no compatible generator for F_{p}^{m}")  # unreachable


@lru_cache(maxsize=None)
def _embedding(source: FieldCtx, target: FieldCtx) -> _Embedding:
    if source.p != target.p or target.m % source.m:
        raise FieldError(f"cannot embed F_{source.p}^{source.m} into F_{target.p}^{target.m}")
    return _Embedding(source, target)


def embed(x: FieldElem, target: FieldCtx) -> FieldElem:
    """
    Ring embedding F_{p^m} -> F_{p^m'} for m | m'.

    The source generator goes to (g_t^r)^j, r = (p^m' - 1)/(p^m - 1), with j
    read off the compatible generators of both fields, so embeddings compose
    along every chain m | m' | m''.
    """
    return _embedding(x.ctx, target).image(x)


def restrict(y: FieldElem, source: FieldCtx) -> FieldElem:
    """Inverse of `embed(-, y.ctx)`: the element of `source` mapping to y."""
    return _embedding(source, y.ctx).preimage(y)


def minimal_polynomial(x: FieldElem) -> Poly:
    """Minimal polynomial of x over F_p, coefficients lowest degree first."""
    ctx = x.ctx
    conjugates = [x]
    y = x ** ctx.p
    while y != x:
        conjugates.append(y)
        y = y ** ctx.p
    poly = [ctx.one]
    for c in conjugates:
        # multiply poly by (X - c)
        shifted = [ctx.zero] + poly
        scaled = [a * c for a in poly] + [ctx.zero]
        poly = [a - b for a, b in zip(shifted, scaled)]
    out = []
    for coef in poly:
        assert all(c == 0 for c in coef.coeffs[1:]), "minimal polynomial left the prime field"
        out.append(coef.coeffs[0])
    return tuple(out)


def evaluate_poly(poly: Sequence[int], x: FieldElem) -> FieldElem:
    """Evaluate an F_p-polynomial (lowest degree first) at x by Horner's rule."""
    ctx = x.ctx
    acc = ctx.zero
    for c in reversed(poly):
        acc = acc * x + ctx.prime(c)
    return acc


def subfield_elements(ctx: FieldCtx, j: int) -> List[FieldElem]:
    """The subfield of degree j inside ctx: zero, then powers of g^{(p^m-1)/(p^j-1)}."""
    if j < 1 or ctx.m % j:
        raise FieldError(f"F_{ctx.p}^{ctx.m} has no subfield of degree {j}")
    sub_order = ctx.p ** j - 1
    h = ctx.generator ** (ctx.order // sub_order)
    out = [ctx.zero]
    y = ctx.one
    for _ in range(sub_order):
        out.append(y)
        y = y * h
    return out


def cyclic_subgroup(ctx: FieldCtx, order: int) -> List[FieldElem]:
    """The unique subgroup of ctx^x of the given order, as powers of its canonical generator."""
    if order < 1 or ctx.order % order:
        raise FieldError(f"{order} does not divide |F_{ctx.p}^{ctx.m}^x| = {ctx.order}")
    h = ctx.generator ** (ctx.order // order)
    out = []
    y = ctx.one
    for _ in range(order):
        out.append(y)
        y = y * h
    return out
