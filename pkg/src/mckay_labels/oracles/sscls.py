"""
Semisimple conjugacy classes of GL_{n+1}(q) and their Steinberg labels.

A class is a multiset of q-Frobenius orbits of nonzero eigenvalues. All
eigenvalues live in one universe field K = F_{q^L}, L = lcm(1, ..., n+1), so
every orbit of degree j <= n+1 is a subset of K; an orbit is stored by its
smallest element (by index) and its degree. Characteristic polynomials and
Steinberg labels have coefficients in F_q and are restricted there from K.
"""
import itertools
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Dict, List, Sequence, Tuple

from ..algebra.ff import FieldCtx, FieldElem, cyclic_subgroup, mk_field, prime_power, restrict, subfield_elements
from ..core.config import settings
from ..core.errors import UnsupportedConfiguration
from ..lie.labelcalc import GaloisParam

logger = logging.getLogger("mckay_labels.sscls")

Orbit = Tuple[FieldElem, int]


@dataclass(frozen=True)
class SsClass:
    """eigen_data is sorted by (degree, rep index); charpoly is monic, lowest degree first, over F_q."""
    q: int
    eigen_data: Tuple[Orbit, ...]
    charpoly: Tuple[FieldElem, ...]

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(c.index for c in self.charpoly)

    @property
    def dimension(self) -> int:
        return sum(j for _, j in self.eigen_data)

    def eigenvalues(self) -> List[FieldElem]:
        out = []
        for rep, j in self.eigen_data:
            out.extend(_orbit_elements(rep, self.q, j))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SsClass):
            return NotImplemented
        return self.q == other.q and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.q, self.key))


@dataclass(frozen=True)
class GlobalLabel:
    b0: FieldElem
    b: Tuple[FieldElem, ...]


def universe(dim: int, q: int) -> FieldCtx:
    p, f = prime_power(q)
    L = reduce(lambda a, b: a * b // math.gcd(a, b), range(1, dim + 1), 1)
    return mk_field(p, f * L)


def _orbit_elements(x: FieldElem, q: int, j: int) -> List[FieldElem]:
    out = [x]
    for _ in range(j - 1):
        out.append(out[-1] ** q)
    return out


def _orbit(x: FieldElem, q: int) -> Orbit:
    elems = [x]
    y = x ** q
    while y != x:
        elems.append(y)
        y = y ** q
    return min(elems), len(elems)


# --- polynomials over a field, lists of FieldElem lowest degree first ---

def _pmul(a: Sequence[FieldElem], b: Sequence[FieldElem]) -> List[FieldElem]:
    ctx = a[0].ctx
    out = [ctx.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _pdivmod(a: Sequence[FieldElem], b: Sequence[FieldElem]) -> Tuple[List[FieldElem], List[FieldElem]]:
    """Division by a monic b."""
    a = list(a)
    ctx = b[0].ctx
    quot = [ctx.zero] * max(len(a) - len(b) + 1, 1)
    for shift in range(len(a) - len(b), -1, -1):
        coef = a[shift + len(b) - 1]
        quot[shift] = coef
        for i, y in enumerate(b):
            a[shift + i] = a[shift + i] - coef * y
    return quot, a[: len(b) - 1]


def _orbit_poly(rep: FieldElem, q: int, j: int) -> List[FieldElem]:
    """prod (X - y) over the orbit, computed in the universe."""
    K = rep.ctx
    poly = [K.one]
    for y in _orbit_elements(rep, q, j):
        poly = _pmul(poly, [-y, K.one])
    return poly


def _to_base(poly: Sequence[FieldElem], q: int) -> Tuple[FieldElem, ...]:
    Fq = mk_field(*prime_power(q))
    return tuple(restrict(c, Fq) for c in poly)


@lru_cache(maxsize=None)
def _irreducibles(dim: int, q: int) -> Tuple[Tuple[Orbit, Tuple[FieldElem, ...]], ...]:
    """Nonzero q-Frobenius orbits of degree <= dim with their minimal polynomials over F_q."""
    _, f = prime_power(q)
    K = universe(dim, q)
    out = []
    seen = set()
    for j in range(1, dim + 1):
        for x in subfield_elements(K, f * j):
            if x.is_zero() or x in seen:
                continue
            rep, deg = _orbit(x, q)
            seen.update(_orbit_elements(rep, q, deg))
            if deg == j:
                out.append(((rep, deg), _to_base(_orbit_poly(rep, q, deg), q)))
    out.sort(key=lambda item: (item[0][1], item[0][0].index))
    logger.debug("GL_%d(%d): %d eigenvalue orbits in %r", dim, q, len(out), K)
    return tuple(out)


def _make_class(q: int, orbits: Sequence[Orbit], minpolys: Dict[Orbit, Tuple[FieldElem, ...]]) -> SsClass:
    eigen = tuple(sorted(orbits, key=lambda o: (o[1], o[0].index)))
    Fq = mk_field(*prime_power(q))
    poly = [Fq.one]
    for o in eigen:
        poly = _pmul(poly, minpolys[o])
    return SsClass(q, eigen, tuple(poly))


def _check_scale(dim: int, q: int) -> None:
    if dim < 1:
        raise ValueError(f"matrix size must be >= 1, got {dim}")
    if q ** (dim - 1) > settings.class_scale_bound:
        raise UnsupportedConfiguration(f"GL_{dim}({q}) has q^n = {q ** (dim - 1)} classes per determinant, above the bound")


def enumerate_ss_classes(dim: int, q: int) -> List[SsClass]:
    """All semisimple classes of GL_dim(q), sorted by characteristic polynomial."""
    _check_scale(dim, q)
    return list(_classes(dim, q))


@lru_cache(maxsize=None)
def _classes(dim: int, q: int) -> Tuple[SsClass, ...]:
    irreducibles = _irreducibles(dim, q)
    minpolys = {o: poly for o, poly in irreducibles}
    by_degree: Dict[int, List[Orbit]] = defaultdict(list)
    for o, _ in irreducibles:
        by_degree[o[1]].append(o)

    classes = []

    def extend(remaining: int, max_deg: int, chosen: List[Orbit]) -> None:
        if remaining == 0:
            classes.append(_make_class(q, chosen, minpolys))
            return
        for j in range(min(remaining, max_deg), 0, -1):
            for k in range(1, remaining // j + 1):
                for combo in itertools.combinations_with_replacement(by_degree[j], k):
                    extend(remaining - j * k, j - 1, chosen + list(combo))

    extend(dim, dim, [])
    classes.sort(key=lambda c: c.key)
    expected = (q - 1) * q ** (dim - 1)
    assert len(classes) == expected, f"GL_{dim}({q}): {len(classes)} classes, expected {expected}"
    return tuple(classes)


def charpoly_of_class(cls: SsClass) -> Tuple[FieldElem, ...]:
    return cls.charpoly


def class_from_charpoly(poly: Sequence[FieldElem]) -> SsClass:
    """Factor a monic polynomial with nonzero constant term into orbit minimal polynomials."""
    Fq = poly[0].ctx
    q = Fq.size
    dim = len(poly) - 1
    if poly[-1] != Fq.one or poly[0].is_zero():
        raise ValueError("characteristic polynomial must be monic with nonzero constant term")
    irreducibles = _irreducibles(dim, q)
    minpolys = {o: m for o, m in irreducibles}
    orbits: List[Orbit] = []
    rest = list(poly)
    for o, m in irreducibles:
        while len(rest) >= len(m):
            quot, rem = _pdivmod(rest, m)
            if any(not c.is_zero() for c in rem):
                break
            orbits.append(o)
            rest = quot
        if len(rest) == 1:
            break
    assert len(rest) == 1 and rest[0] == Fq.one, "polynomial did not factor into eigenvalue orbits"
    return _make_class(q, orbits, minpolys)


def _elementary_symmetric(values: Sequence[FieldElem]) -> List[FieldElem]:
    """[e_0, e_1, ..., e_len] as the coefficients of prod (1 + v T)."""
    ctx = values[0].ctx
    poly = [ctx.one]
    for v in values:
        poly = _pmul(poly, [ctx.one, v])
    return poly


def steinberg_label(cls: SsClass) -> GlobalLabel:
    """b_i = e_i(eigenvalues), the trace on the i-th exterior power; b0 = determinant."""
    dim = cls.dimension
    e = _to_base(_elementary_symmetric(cls.eigenvalues()), cls.q)
    b0, b = e[dim], tuple(e[1:dim])
    for i in range(1, dim + 1):
        coef = cls.charpoly[dim - i]
        assert e[i] == (coef if i % 2 == 0 else -coef), "Steinberg label disagrees with the characteristic polynomial"
    return GlobalLabel(b0, b)


def class_power(cls: SsClass, k: int) -> SsClass:
    """The class of s^k."""
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    minpolys = dict(_irreducibles(cls.dimension, cls.q))
    orbits: List[Orbit] = []
    for rep, j in cls.eigen_data:
        image = _orbit(rep ** k, cls.q)
        orbits.extend([image] * (j // image[1]))
    return _make_class(cls.q, orbits, minpolys)


def count_sigma_fixed_classes(dim: int, q: int, g: GaloisParam) -> int:
    k = g.p ** g.e
    count = sum(1 for cls in enumerate_ss_classes(dim, q) if class_power(cls, k) == cls)
    logger.info("GL_%d(%d) e=%d: %d sigma-fixed classes", dim, q, g.e, count)
    return count


def partition_by_determinant(dim: int, q: int, g: GaloisParam) -> Dict[FieldElem, Tuple[int, int]]:
    """Map det -> (classes with that determinant, sigma-fixed ones among them)."""
    k = g.p ** g.e
    out: Dict[FieldElem, List[int]] = defaultdict(lambda: [0, 0])
    for cls in enumerate_ss_classes(dim, q):
        entry = out[steinberg_label(cls).b0]
        entry[0] += 1
        if class_power(cls, k) == cls:
            entry[1] += 1
    return {b0: (v[0], v[1]) for b0, v in sorted(out.items())}


def enumerate_ss_classes_gu3(q: int) -> int:
    """
    Count semisimple classes of GU_3(q): multisets of orbits of x -> x^{-q}
    with total size 3, eigenvalues taken in F_{q^6}.
    """
    if q > settings.gu3_max_q:
        raise UnsupportedConfiguration(f"GU_3({q}) above the bound q <= {settings.gu3_max_q}")
    p, f = prime_power(q)
    K = mk_field(p, 6 * f)
    candidates = set()
    for order in (q + 1, q * q - 1, q ** 3 + 1):
        candidates.update(cyclic_subgroup(K, order))
    orbits: Dict[int, List[FieldElem]] = defaultdict(list)
    seen = set()
    for x in sorted(candidates):
        if x in seen:
            continue
        elems = [x]
        y = (x ** q).inverse()
        while y != x:
            elems.append(y)
            y = (y ** q).inverse()
        seen.update(elems)
        if len(elems) <= 3:
            orbits[len(elems)].append(x)
    sized = [(x, j) for j in (1, 2, 3) for x in orbits[j]]
    count = 0
    for length in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(sized, length):
            if sum(j for _, j in combo) == 3:
                count += 1
    logger.info("GU_3(%d): %d semisimple classes", q, count)
    return count
