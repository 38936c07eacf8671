"""
Label calculus: the set of labels (c_0, (c_1, ..., c_r)), the action of an
(e, p)-Galois automorphism on it, and fixed-point counts.

All components of a label live in one field K = F_{q^w}: c_0 runs over the
cyclic subgroups of orders z_j, c_i over the subfield F_{q^{|A_i|}}.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from ..algebra.ff import FieldCtx, FieldElem, cyclic_subgroup, dlog, frobenius_pow, mk_field, prime_power, subfield_elements
from ..core.config import settings
from ..core.errors import ExcludedConfiguration, McKayLabelsError, UnsupportedConfiguration
from .rootdata import TwistData, is_excluded

logger = logging.getLogger("mckay_labels.labelcalc")


@dataclass(frozen=True)
class GaloisParam:
    """
    An (e, p)-Galois automorphism sigma, presented by the exponent e of its
    action on p'-roots of unity and the unit kappa in F_p^x it induces on p-th
    roots of unity.
    """
    p: int
    e: int
    kappa: int = 1

    def __post_init__(self):
        if self.e < 0:
            raise ValueError(f"e must be >= 0, got {self.e}")
        if self.kappa % self.p == 0:
            raise ValueError(f"kappa must be a unit mod {self.p}, got {self.kappa}")
        object.__setattr__(self, "kappa", self.kappa % self.p)

    def s(self, m: int) -> int:
        return math.gcd(self.e, m)

    def k_mod(self, modulus: int) -> int:
        """Residue of k (= p^e) modulo a p'-modulus."""
        if modulus % self.p == 0:
            raise ValueError(f"{modulus} is not prime to {self.p}")
        return pow(self.p, self.e, modulus)

    @classmethod
    def from_k(cls, k: int, p: int, f: int, w: int = 1) -> "GaloisParam":
        """Recover (e, kappa) from an integer k acting on the roots of unity of order p(q^w - 1)."""
        m = p ** (f * w) - 1
        if k % p == 0 or math.gcd(k, m) != 1:
            raise ValueError(f"k = {k} is not prime to {p * m}")
        residue = k % m
        for e in range(f * w):
            if pow(p, e, m) == residue:
                return cls(p, e, k % p)
        raise ValueError(f"k = {k} is not congruent to a power of {p} mod {m}")


@dataclass(frozen=True)
class Label:
    c0: Tuple[FieldElem, ...]
    ci: Tuple[FieldElem, ...]


def _require_not_excluded(twist: TwistData, q: int) -> None:
    excluded, reason = is_excluded(twist, q)
    if excluded:
        raise ExcludedConfiguration(reason)


def label_field(twist: TwistData, q: int) -> FieldCtx:
    p, f = prime_power(q)
    return mk_field(p, f * twist.w)


def label_set_size(twist: TwistData, q: int) -> int:
    _require_not_excluded(twist, q)
    return math.prod(twist.center_orders(q)) * math.prod(q ** a for a in twist.orbit_sizes)


def galois_act_label(lab: Label, g: GaloisParam) -> Label:
    return Label(
        tuple(frobenius_pow(x, g.e) for x in lab.c0),
        tuple(frobenius_pow(x, g.e) for x in lab.ci),
    )


def count_fixed_labels(twist: TwistData, q: int, g: GaloisParam) -> int:
    _require_not_excluded(twist, q)
    p, f = prime_power(q)
    t = p ** g.e - 1
    central = math.prod(math.gcd(z, t) for z in twist.center_orders(q))
    coords = math.prod(p ** math.gcd(g.e, f * a) for a in twist.orbit_sizes)
    return central * coords


def _components(twist: TwistData, q: int) -> Tuple[List[List[FieldElem]], List[List[FieldElem]]]:
    p, f = prime_power(q)
    K = label_field(twist, q)
    c0 = [cyclic_subgroup(K, z) for z in twist.center_orders(q)]
    ci = [subfield_elements(K, f * a) for a in twist.orbit_sizes]
    return c0, ci


def enumerate_labels(twist: TwistData, q: int) -> Iterator[Label]:
    """Every label, in a fixed order (c_0 outermost)."""
    _require_not_excluded(twist, q)
    c0_choices, ci_choices = _components(twist, q)
    for c0 in itertools.product(*c0_choices):
        for ci in itertools.product(*ci_choices):
            yield Label(tuple(c0), tuple(ci))


def labels_enumerable(twist: TwistData, q: int) -> bool:
    """Whether `count_fixed_labels_enumerated` runs within the configured bounds."""
    return q ** twist.w <= settings.label_enumeration_bound and label_set_size(twist, q) <= settings.class_scale_bound


def count_fixed_labels_enumerated(twist: TwistData, q: int, g: GaloisParam) -> int:
    """Brute-force fixed-label count: every label is enumerated and moved by sigma."""
    _require_not_excluded(twist, q)
    if q ** twist.w > settings.label_enumeration_bound:
        raise McKayLabelsError(f"q^w = {q ** twist.w} above the enumeration bound {settings.label_enumeration_bound}")
    size = label_set_size(twist, q)
    if size > settings.class_scale_bound:
        raise UnsupportedConfiguration(f"{size} labels above the enumeration bound {settings.class_scale_bound}")
    total = sum(1 for lab in enumerate_labels(twist, q) if galois_act_label(lab, g) == lab)
    logger.debug("%s q=%d e=%d: %d fixed labels by enumeration", twist.name, q, g.e, total)
    return total


def check_label(lab: Label, twist: TwistData, q: int) -> None:
    """Assert the membership conditions of a label."""
    for x, z in zip(lab.c0, twist.center_orders(q)):
        assert not x.is_zero() and z % x.order() == 0, f"c_0 component {x!r} not of order dividing {z}"
    for x, a in zip(lab.ci, twist.orbit_sizes):
        assert x ** (q ** a) == x, f"c_i component {x!r} outside F_{q}^{a}"


def central_character_of_label(lab: Label) -> Tuple[FieldElem, ...]:
    return lab.c0


def fixed_labels_by_central(twist: TwistData, q: int, g: GaloisParam) -> Dict[Tuple[FieldElem, ...], Tuple[int, int]]:
    """Map c_0 -> (labels with that c_0, sigma-fixed labels with that c_0)."""
    _require_not_excluded(twist, q)
    p, f = prime_power(q)
    c0_choices, _ = _components(twist, q)
    per_class = math.prod(q ** a for a in twist.orbit_sizes)
    fixed_coords = math.prod(p ** math.gcd(g.e, f * a) for a in twist.orbit_sizes)
    out = {}
    for c0 in itertools.product(*c0_choices):
        c0_fixed = all(frobenius_pow(x, g.e) == x for x in c0)
        out[tuple(c0)] = (per_class, fixed_coords if c0_fixed else 0)
    return out


def format_component(x: FieldElem) -> str:
    return "0" if x.is_zero() else f"g^{dlog(x)}"


def format_label(lab: Label) -> str:
    """Serialize as "(c_0 parts; c_i parts)", each component "0" or "g^k" in K."""
    c0 = ",".join(format_component(x) for x in lab.c0)
    ci = ",".join(format_component(x) for x in lab.ci)
    return f"({c0}; {ci})"
