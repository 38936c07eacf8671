"""
Indecomposable root data and the diagram automorphisms induced by Frobenius maps.

Conventions
-----------
* Simple roots are numbered as in Bourbaki, 0-based here (Bourbaki's alpha_1 is
  index 0).
* ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so that alpha_i(alpha_j^vee(s)) =
  s^{cartan[i][j]}. Row i says how the torus scales the root subgroup of
  alpha_i; for C_2 this is [[2, -1], [-2, 2]].
* Roots are integer vectors in the simple-root basis.
"""
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

import sympy

from ..algebra.ff import prime_power
from ..algebra.zmodlin import IntMatrix, int_det, int_matrix, smith_normal_form
from ..core.errors import RootDatumError

logger = logging.getLogger("mckay_labels.rootdata")

# minimum ranks; C_1 is allowed and equals A_1
MIN_RANK = {"A": 1, "B": 2, "C": 1, "D": 4}
EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def parse_type(type_label: str, rank: Optional[int] = None) -> Tuple[str, int]:
    """Accept "C" + rank, "C2", "E6", ... and return the (letter, rank) pair."""
    label = type_label.strip().upper().replace("_", "")
    if len(label) > 1 and label[1:].isdigit():
        letter, n = label[0], int(label[1:])
        if rank is not None and rank != n:
            raise RootDatumError(f"type {type_label} conflicts with rank {rank}")
        return letter, n
    if rank is None:
        raise RootDatumError(f"type {type_label} needs a rank")
    return label, rank


def _kac_matrix(letter: str, n: int) -> List[List[int]]:
    """a_ij = <alpha_i^vee, alpha_j> in Bourbaki numbering (0-based)."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if letter == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif letter == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)  # alpha_n short
    elif letter == "C":
        for i in range(n - 2):
            link(i, i + 1)
        if n >= 2:
            link(n - 2, n - 1, -2, -1)  # alpha_n long
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -1, -2)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        link(2, 3)
    elif letter == "G":
        link(0, 1, -3, -1)  # alpha_1 short
    return a


def _validate(letter: str, n: int) -> None:
    if letter in MIN_RANK:
        if n < MIN_RANK[letter]:
            raise RootDatumError(f"{letter}_{n} is not a valid root system (rank >= {MIN_RANK[letter]})")
    elif letter in EXCEPTIONAL_RANKS:
        if n not in EXCEPTIONAL_RANKS[letter]:
            raise RootDatumError(f"{letter}_{n} is not a valid root system")
    else:
        raise RootDatumError(f"unknown type {letter}")


def _positive_roots(cartan: List[List[int]]) -> List[Tuple[int, ...]]:
    """Close the simple roots under root strings, height by height."""
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # <beta, alpha_i^vee> = sum_j beta_j <alpha_j, alpha_i^vee>
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                down = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in roots:
                        down += 1
                    else:
                        break
                if down - pairing > 0:
                    up = tuple(b + (1 if k == i else 0) for k, b in enumerate(beta))
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), tuple(-x for x in r)))


@dataclass(frozen=True)
class RootDatum:
    type_label: str
    n: int
    cartan: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Tuple[int, ...], ...]
    highest_root: Tuple[int, ...]
    elementary_divisors: Tuple[int, ...]
    bad_primes: FrozenSet[int]

    @property
    def name(self) -> str:
        return f"{self.type_label}_{self.n}"

    @property
    def cartan_matrix(self) -> IntMatrix:
        return int_matrix(self.cartan)

    @property
    def fund_group_order(self) -> int:
        return math.prod(self.elementary_divisors)

    @property
    def l(self) -> int:
        """Exponent of the fundamental group."""
        return max(self.elementary_divisors, default=1)

    @property
    def d(self) -> int:
        """Maximal minimal number of generators of Z(G) over all characteristics."""
        return len(self.elementary_divisors)

    def d_p(self, p: int) -> int:
        """Minimal number of generators of Z(G) in characteristic p."""
        return sum(1 for e in self.elementary_divisors if _p_prime_part(e, p) > 1)

    @property
    def simply_laced(self) -> bool:
        return self.type_label in ("A", "D", "E")


def _p_prime_part(x: int, p: int) -> int:
    while x % p == 0:
        x //= p
    return x


@lru_cache(maxsize=None)
def build_root_datum(type_label: str, n: Optional[int] = None) -> RootDatum:
    letter, n = parse_type(type_label, n)
    _validate(letter, n)
    kac = _kac_matrix(letter, n)
    cartan = tuple(tuple(kac[j][i] for j in range(n)) for i in range(n))
    roots = _positive_roots([list(r) for r in cartan])
    highest = max(roots, key=sum)
    _, D, _ = smith_normal_form(int_matrix(cartan))
    divisors = tuple(int(D[i, i]) for i in range(n) if int(D[i, i]) > 1)
    bad = frozenset(int(l) for c in highest for l in sympy.primefactors(c))
    rd = RootDatum(letter, n, cartan, tuple(roots), highest, divisors, bad)
    assert abs(int_det(rd.cartan_matrix)) == rd.fund_group_order
    logger.debug("%s: %d positive roots, highest %s, center %s", rd.name, len(roots), highest, divisors)
    return rd


def is_good_prime(rd: RootDatum, p: int) -> bool:
    return p not in rd.bad_primes


def center_order(rd: RootDatum, q: int) -> int:
    """|Z(G^F)| for the simply connected untwisted group over F_q."""
    return math.prod(math.gcd(e, q - 1) for e in rd.elementary_divisors)


def borel_level_allowed(rd: RootDatum, q: int) -> bool:
    """Whether B-level statements are available over F_q: good characteristic, or Z(G^F) = 1."""
    p, _ = prime_power(q)
    return is_good_prime(rd, p) or center_order(rd, q) == 1


# --- Twists -----------------------------------------------------------------

def _tau(rd: RootDatum, w: int) -> Tuple[int, ...]:
    n = rd.n
    ident = tuple(range(n))
    if w == 1:
        return ident
    key = (rd.type_label, w)
    if key == ("A", 2) and n >= 2:
        return tuple(n - 1 - i for i in range(n))
    if key == ("D", 2):
        perm = list(ident)
        perm[n - 2], perm[n - 1] = n - 1, n - 2
        return tuple(perm)
    if key == ("D", 3) and n == 4:
        return (2, 1, 3, 0)  # alpha_1 -> alpha_3 -> alpha_4 -> alpha_1
    if key == ("E", 2) and n == 6:
        return (5, 1, 4, 3, 2, 0)
    raise RootDatumError(f"no diagram automorphism of order {w} for {rd.name}")


def supported_twists(type_label: str, n: Optional[int] = None) -> List[int]:
    rd = build_root_datum(type_label, n)
    out = []
    for w in (1, 2, 3):
        try:
            _tau(rd, w)
        except RootDatumError:
            continue
        out.append(w)
    return out


@dataclass(frozen=True)
class TwistData:
    rd: RootDatum
    w: int
    tau: Tuple[int, ...]
    orbits: Tuple[Tuple[int, ...], ...]
    dbar: int
    # each entry (a, b) stands for the order q^a + b of one generator of Z(G~^F)
    center_terms: Tuple[Tuple[int, int], ...] = field(default=())

    @property
    def r(self) -> int:
        return len(self.orbits)

    @property
    def reps(self) -> Tuple[int, ...]:
        return tuple(o[0] for o in self.orbits)

    @property
    def orbit_sizes(self) -> Tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    @property
    def d(self) -> int:
        return self.rd.d

    def d_p(self, p: int) -> int:
        return self.rd.d_p(p)

    @property
    def name(self) -> str:
        prefix = f"^{self.w}" if self.w > 1 else ""
        return f"{prefix}{self.rd.name}"

    def center_orders(self, q: int) -> Tuple[int, ...]:
        """Orders z_j of the generators of Z(G~^F)."""
        return tuple(q ** a + b for a, b in self.center_terms)

    def excluded(self, q: int) -> Tuple[bool, str]:
        return is_excluded(self, q)


def _center_terms(rd: RootDatum, w: int, dbar: int) -> Tuple[Tuple[int, int], ...]:
    if w == 1:
        return ((1, -1),) * rd.d
    if dbar == 0:
        return ()
    if rd.type_label == "D" and rd.n % 2 == 0:
        return ((2, -1),)
    return ((1, 1),)


@lru_cache(maxsize=None)
def build_twist(rd: RootDatum, w: int = 1) -> TwistData:
    if w not in (1, 2, 3):
        raise RootDatumError(f"automorphism order must be 1, 2 or 3, got {w}")
    tau = _tau(rd, w)
    n = rd.n
    for i in range(n):
        for j in range(n):
            assert rd.cartan[tau[i]][tau[j]] == rd.cartan[i][j], f"tau does not preserve the Cartan matrix of {rd.name}"
    seen, orbits = set(), []
    for i in range(n):
        if i in seen:
            continue
        orbit, j = [], i
        while j not in orbit:
            orbit.append(j)
            j = tau[j]
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit)))
    assert all(w % len(o) == 0 for o in orbits)
    if rd.type_label == "D" and n % 2 == 0 and w == 2:
        dbar = 1
    elif rd.type_label == "D" and n % 2 == 0 and w == 3:
        dbar = 0
    else:
        dbar = rd.d
    twist = TwistData(rd, w, tau, tuple(orbits), dbar, _center_terms(rd, w, dbar))
    logger.debug("%s: orbits %s, dbar %d", twist.name, twist.orbits, dbar)
    return twist


# Rows of the exclusion table: (types, q, w).
EXCLUSION_TABLE = (
    (("D",), 2, 2),
    (("B", "C", "D", "G", "F"), 2, 1),
    (("G",), 3, 1),
)


def is_excluded(twist: TwistData, q: int) -> Tuple[bool, str]:
    """Return (True, reason) when (G, F) is a row of the exclusion table, else (False, "")."""
    rd = twist.rd
    letter = rd.type_label
    # C_1 = A_1 never appears in the table
    if letter == "C" and rd.n == 1:
        return False, ""
    for types, tq, tw in EXCLUSION_TABLE:
        if letter in types and q == tq and twist.w == tw:
            return True, f"{rd.name}, q={q}, w={twist.w} excluded"
    return False, ""
