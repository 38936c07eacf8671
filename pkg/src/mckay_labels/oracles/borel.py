"""
Clifford-theory model of the p'-characters of B^F and B~^F (untwisted types).

A linear character of U^F/[U^F, U^F] is a coordinate vector (c_1, ..., c_n) in
F_q^n. Its support S is the set of nonzero coordinates, and on S we work in
discrete-log coordinates modulo N = q - 1. The torus T^F = (Z/N)^n acts on S by
translation through the rows S of the Cartan matrix; T~^F acts through the
adjoint torus, coordinatewise, with kernel Z(G~^F) = (Z/N)^d.

A p'-character of the Borel subgroup is a pair (orbit, lambda) with lambda a
character of the orbit's stabilizer. An (e, p)-Galois automorphism sigma maps
(O, lambda) to (kappa * O, lambda^{p^e}); on log coordinates kappa * O is the
translate O + c * 1_S with c = dlog(kappa).
"""
import enum
import itertools
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from ..algebra.ff import FieldCtx, dlog, mk_field, prime_power
from ..algebra.zmodlin import (
    AbelianGroupShape,
    IntMatrix,
    cokernel_order,
    cokernel_representatives,
    image_contains,
    int_matrix,
    kernel_basis,
    kernel_shape,
    torsion_count,
)
from ..core.config import settings
from ..core.errors import ExcludedConfiguration, UnsupportedConfiguration
from ..lie.labelcalc import GaloisParam
from ..lie.rootdata import RootDatum, borel_level_allowed, build_twist, is_excluded

logger = logging.getLogger("mckay_labels.borel")


class TorusLevel(str, enum.Enum):
    B = "B"
    BTILDE = "Btilde"


@dataclass(frozen=True)
class UabModel:
    rd: RootDatum
    q: int

    @property
    def n(self) -> int:
        return self.rd.n

    @property
    def modulus(self) -> int:
        return self.q - 1

    @property
    def field(self) -> FieldCtx:
        return mk_field(*prime_power(self.q))

    @property
    def psi1(self) -> Tuple[int, ...]:
        """The character with every coordinate equal to 1."""
        return (1,) * self.n

    @property
    def character_count(self) -> int:
        return self.q ** self.n

    def supports(self) -> List[Tuple[int, ...]]:
        """All subsets of {0..n-1}, by size then lexicographically."""
        return [S for k in range(self.n + 1) for S in itertools.combinations(range(self.n), k)]


@dataclass(frozen=True)
class OrbitClass:
    support: Tuple[int, ...]
    orbit_rep: Tuple[int, ...]
    level: TorusLevel
    stabilizer: AbelianGroupShape
    orbit_size: int

    @property
    def count_lambda(self) -> int:
        return self.stabilizer.order


def torus_action_matrix(rd: RootDatum) -> IntMatrix:
    """Exponents of the T-action on coordinates: row i is alpha_i in the basis of coroots."""
    return rd.cartan_matrix


def _support_matrix(rd: RootDatum, S: Tuple[int, ...], level: TorusLevel) -> IntMatrix:
    if level is TorusLevel.B:
        M = torus_action_matrix(rd)
        return int_matrix([list(M[i]) for i in S], rd.n)
    # T~ = T_ad x Z(G~) in log coordinates; T_ad acts on coordinate i through coordinate i
    cols = rd.n + rd.d
    return int_matrix([[1 if j == i else 0 for j in range(cols)] for i in S], cols)


def _torus_rank(rd: RootDatum, level: TorusLevel) -> int:
    return rd.n if level is TorusLevel.B else rd.n + rd.d


def _check(rd: RootDatum, q: int, level: TorusLevel) -> None:
    excluded, reason = is_excluded(build_twist(rd, 1), q)
    if excluded:
        raise ExcludedConfiguration(reason)
    p, _ = prime_power(q)
    if level is TorusLevel.B and not borel_level_allowed(rd, q):
        raise UnsupportedConfiguration(f"B-level counts for {rd.name} at the bad prime {p} with a nontrivial centre are not available")


def enum_orbits(rd: RootDatum, q: int, level: TorusLevel) -> List[OrbitClass]:
    level = TorusLevel(level)
    _check(rd, q, level)
    N = q - 1
    torus_order = N ** _torus_rank(rd, level)
    orbits = []
    for S in UabModel(rd, q).supports():
        M = _support_matrix(rd, S, level)
        stab = kernel_shape(M, N)
        size = torus_order // stab.order
        for rep in cokernel_representatives(M, N):
            orbits.append(OrbitClass(S, rep, level, stab, size))
        logger.debug("%s q=%d %s S=%s: %d orbits, stabilizer %s", rd.name, q, level.value, S, cokernel_order(M, N), stab)
    return orbits


def count_pprime(rd: RootDatum, q: int, level: TorusLevel) -> int:
    return sum(o.count_lambda for o in enum_orbits(rd, q, level))


def _kappa_log(q: int, kappa: int) -> int:
    ctx = mk_field(*prime_power(q))
    return dlog(ctx.prime(kappa))


def kappa_parity(q: int, kappa: int) -> int:
    """Parity of c with mu^c = kappa in F_q^x."""
    return _kappa_log(q, kappa) % 2


def count_sigma_fixed(rd: RootDatum, q: int, level: TorusLevel, g: GaloisParam) -> int:
    level = TorusLevel(level)
    _check(rd, q, level)
    N = q - 1
    c = _kappa_log(q, g.kappa)
    t = g.p ** g.e - 1
    total = 0
    for S in UabModel(rd, q).supports():
        M = _support_matrix(rd, S, level)
        if not image_contains(M, [c] * len(S), N):
            continue
        total += cokernel_order(M, N) * torsion_count(kernel_shape(M, N), t)
    logger.info("%s q=%d %s e=%d kappa=%d: %d sigma-fixed", rd.name, q, level.value, g.e, g.kappa, total)
    return total


def _image_set(M: IntMatrix, N: int) -> set:
    rows, cols = M.shape
    out = set()
    for t in itertools.product(range(N), repeat=cols):
        out.add(tuple(int(v) % N for v in M.dot(np.array(t, dtype=object))) if rows else ())
    return out


def count_sigma_fixed_prop56(rd: RootDatum, q: int, level: TorusLevel, g: GaloisParam) -> int:
    """
    Second count of sigma-fixed B-level characters, by explicit enumeration.

    The torus element acting as the scalar kappa on every coordinate is used as
    the witness: the orbit of theta is sigma-stable exactly when translating a
    representative by c * 1_S stays inside the orbit. Orbits, stabilizers and
    fixed lambdas are all enumerated directly.
    """
    level = TorusLevel(level)
    if level is not TorusLevel.B:
        raise UnsupportedConfiguration("the enumerative method is implemented at B-level only")
    _check(rd, q, level)
    N = q - 1
    if N ** rd.n > settings.class_scale_bound:
        raise UnsupportedConfiguration(f"torus of order {N ** rd.n} above the enumeration bound")
    c = _kappa_log(q, g.kappa)
    t = g.p ** g.e - 1
    M_full = torus_action_matrix(rd)
    total = 0
    for S in UabModel(rd, q).supports():
        M = int_matrix([list(M_full[i]) for i in S], rd.n)
        image = _image_set(M, N)
        stab = [x for x in itertools.product(range(N), repeat=rd.n)
                if all(sum(int(M[r, j]) * x[j] for j in range(rd.n)) % N == 0 for r in range(len(S)))]
        fixed_lambda = sum(1 for x in stab if all((t * v) % N == 0 for v in x))
        seen = set()
        for point in itertools.product(range(N), repeat=len(S)):
            if point in seen:
                continue
            orbit = {tuple((a + b) % N for a, b in zip(point, y)) for y in image}
            seen |= orbit
            shifted = tuple((a + c) % N for a in point)
            if shifted in orbit:
                total += fixed_lambda
    return total


def central_partition(rd: RootDatum, q: int, level: TorusLevel, g: GaloisParam) -> Dict[Tuple[int, ...], Tuple[int, int]]:
    """
    Split the p'-characters by their central character.

    Keys are the values of lambda on the generators of the centre, each in Z/g_i;
    values are (total, sigma-fixed) counts.
    """
    level = TorusLevel(level)
    _check(rd, q, level)
    N = q - 1
    c = _kappa_log(q, g.kappa)
    t = g.p ** g.e - 1
    if level is TorusLevel.BTILDE:
        return _central_partition_btilde(rd, q, t)

    centre = kernel_basis(torus_action_matrix(rd), N)
    if not centre:
        # Z(G^F) = 1: one central character carries everything
        return {(): (count_pprime(rd, q, level), count_sigma_fixed(rd, q, level, g))}
    if N ** rd.n > settings.class_scale_bound:
        raise UnsupportedConfiguration(f"torus of order {N ** rd.n} above the enumeration bound")
    out: Dict[Tuple[int, ...], List[int]] = defaultdict(lambda: [0, 0])
    for S in UabModel(rd, q).supports():
        M = _support_matrix(rd, S, level)
        orbits = cokernel_order(M, N)
        orbit_fixed = image_contains(M, [c] * len(S), N)
        stab_gens = kernel_basis(M, N)
        characters = {}
        # characters of Stab are restrictions of a in (Z/N)^n, keyed by their values on generators
        for a in itertools.product(range(N), repeat=rd.n):
            key = tuple(sum(x * y for x, y in zip(a, v)) % N for v, _ in stab_gens)
            if key not in characters:
                characters[key] = tuple(
                    (sum(x * y for x, y in zip(a, z)) % N) // (N // order) for z, order in centre
                )
        assert len(characters) == math.prod(o for _, o in stab_gens)
        for key, central in characters.items():
            entry = out[central]
            entry[0] += orbits
            if orbit_fixed and all((t * v) % N == 0 for v in key):
                entry[1] += orbits
    return {k: (v[0], v[1]) for k, v in sorted(out.items())}


def _central_partition_btilde(rd: RootDatum, q: int, t: int) -> Dict[Tuple[int, ...], Tuple[int, int]]:
    # Stab = (Z/N)^{n-|S|} x Z(G~^F); lambda splits as a free part times a central part
    N = q - 1
    g = math.gcd(N, t)
    per_key_total = sum(N ** (rd.n - len(S)) for S in UabModel(rd, q).supports())
    per_key_fixed = sum(g ** (rd.n - len(S)) for S in UabModel(rd, q).supports())
    out = {}
    for key in itertools.product(range(N), repeat=rd.d):
        fixed = per_key_fixed if all((t * v) % N == 0 for v in key) else 0
        out[key] = (per_key_total, fixed)
    return out


def closed_form_Cn(n: int, p: int, f: int, e: int, c_parity: int) -> int:
    """sigma-fixed B-level count for Sp_{2n}(p^f) in odd characteristic."""
    if p == 2:
        raise UnsupportedConfiguration("2 is a bad prime for type C")
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    s = math.gcd(e, f)
    if c_parity % 2 == 0:
        return p ** (s * n) + 3 * p ** (s * (n - 1))
    return p ** (s * n) - p ** (s * (n - 1))
