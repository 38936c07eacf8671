"""
Invariant suites behind `mckay-labels verify`.

Every check compares two independently computed quantities (a closed form
against an enumeration, two counting methods, local against global) and is
recorded as a CheckResult. Excluded or unsupported configurations are
recorded as SKIP.
"""
import itertools
import logging
import math
from typing import Callable, Dict, Iterable, List, Tuple

import numpy as np
import sympy

from ..algebra import ff, zmodlin
from ..core.config import settings
from ..core.errors import ExcludedConfiguration, UnsupportedConfiguration
from ..core.models import CheckResult, CheckStatus
from ..lie import labelcalc, rootdata
from ..lie.labelcalc import GaloisParam
from ..oracles import borel, sscls

logger = logging.getLogger("mckay_labels.verify")

Check = Tuple[str, Callable[[], Tuple[bool, str]]]


def _run(suite: str, checks: Iterable[Check]) -> List[CheckResult]:
    results = []
    for name, check in checks:
        try:
            ok, detail = check()
            status = CheckStatus.PASS if ok else CheckStatus.FAIL
        except (ExcludedConfiguration, UnsupportedConfiguration) as exc:
            status, detail = CheckStatus.SKIP, exc.reason
        except AssertionError as exc:
            status, detail = CheckStatus.FAIL, f"assertion failed: {exc}"
        if status is CheckStatus.FAIL:
            logger.error("%s/%s failed: %s", suite, name, detail)
        else:
            logger.debug("%s/%s %s", suite, name, status.value)
        results.append(CheckResult(suite=suite, name=name, status=status, detail=detail))
    return results


def _eq(a, b) -> Tuple[bool, str]:
    return a == b, f"{a} vs {b}"


def _prime_powers(limit: int) -> List[Tuple[int, int]]:
    out = []
    for p in sympy.primerange(2, limit + 1):
        m = 1
        while p ** m <= limit:
            out.append((int(p), m))
            m += 1
    return out


# --- fields ------------------------------------------------------------------

FULL_TRIPLE_SIZE = 49


def _field_axioms(p: int, m: int) -> Tuple[bool, str]:
    ctx = ff.mk_field(p, m)
    elems = list(ctx.elements())
    # every triple on small fields, an evenly spread third argument above that
    stride = -(-ctx.size // FULL_TRIPLE_SIZE)
    pivots = elems[::stride]
    for x in elems:
        if x + ctx.zero != x or x * ctx.one != x or x - x != ctx.zero:
            return False, f"identity laws fail at {x!r}"
        if not x.is_zero() and x * x.inverse() != ctx.one:
            return False, f"inverse fails at {x!r}"
        for y in elems:
            if x * y != y * x or x + y != y + x:
                return False, f"commutativity fails at {x!r}, {y!r}"
            for z in pivots:
                if x * (y + z) != x * y + x * z or (x * y) * z != x * (y * z):
                    return False, f"distributivity/associativity fails at {x!r}, {y!r}, {z!r}"
    return True, f"{len(elems)} elements"


def _frobenius_count(p: int, m: int) -> Tuple[bool, str]:
    ctx = ff.mk_field(p, m)
    # x -> x^p as a permutation of indices; x^{p^e} is its e-th iterate
    step = [ff.frobenius_pow(x, 1).index for x in ctx.elements()]
    current = list(range(ctx.size))
    for e in range(m + 1):
        brute = sum(1 for k, image in enumerate(current) if image == k)
        if brute != ff.count_frobenius_fixed(ctx, e):
            return False, f"e={e}: {brute} fixed, formula {ff.count_frobenius_fixed(ctx, e)}"
        current = [step[k] for k in current]
    return True, ""


def _dlog_isomorphism(p: int, m: int) -> Tuple[bool, str]:
    ctx = ff.mk_field(p, m)
    nonzero = [x for x in ctx.elements() if not x.is_zero()]
    logs = [ff.dlog(x) for x in nonzero]
    if sorted(logs) != list(range(ctx.order)):
        return False, "dlog is not a bijection"
    for x in nonzero[:12]:
        for y in nonzero:
            if ff.dlog(x * y) != (ff.dlog(x) + ff.dlog(y)) % ctx.order:
                return False, f"dlog not additive at {x!r}, {y!r}"
    return True, ""


def _embedding_is_ring_map(p: int, m: int, m2: int) -> Tuple[bool, str]:
    src, dst = ff.mk_field(p, m), ff.mk_field(p, m2)
    elems = list(src.elements())
    for x in elems:
        for y in elems:
            if ff.embed(x + y, dst) != ff.embed(x, dst) + ff.embed(y, dst):
                return False, "embedding not additive"
            if ff.embed(x * y, dst) != ff.embed(x, dst) * ff.embed(y, dst):
                return False, "embedding not multiplicative"
    image = {ff.embed(x, dst) for x in elems}
    return _eq(image, set(ff.subfield_elements(dst, m)))


def _embedding_chain(p: int, a: int, b: int, c: int) -> Tuple[bool, str]:
    small, middle, big = ff.mk_field(p, a), ff.mk_field(p, b), ff.mk_field(p, c)
    for x in small.elements():
        if ff.embed(ff.embed(x, middle), big) != ff.embed(x, big):
            return False, f"embeddings disagree at {x!r}"
    return True, ""


def fields_checks() -> List[Check]:
    checks: List[Check] = []
    for p, m in _prime_powers(81):
        checks.append((f"axioms F_{p}^{m}", lambda p=p, m=m: _field_axioms(p, m)))
    for p, m in _prime_powers(2401):
        checks.append((f"frobenius-fixed F_{p}^{m}", lambda p=p, m=m: _frobenius_count(p, m)))
    for p, m in ((2, 4), (3, 2), (5, 2), (7, 1), (3, 4)):
        checks.append((f"dlog F_{p}^{m}", lambda p=p, m=m: _dlog_isomorphism(p, m)))
    for p, m, m2 in ((2, 2, 4), (3, 1, 2), (3, 2, 4), (2, 2, 6), (2, 3, 6), (5, 1, 2)):
        checks.append((f"embed F_{p}^{m} -> F_{p}^{m2}", lambda p=p, m=m, m2=m2: _embedding_is_ring_map(p, m, m2)))
    for p, a, b, c in ((2, 1, 2, 4), (2, 2, 4, 8), (3, 1, 2, 4), (3, 2, 4, 8), (2, 3, 6, 12)):
        checks.append((f"embed chain F_{p}^{a} -> F_{p}^{b} -> F_{p}^{c}", lambda p=p, a=a, b=b, c=c: _embedding_chain(p, a, b, c)))
    return checks


# --- linalg ------------------------------------------------------------------

LINALG_MATRICES = (
    [[2]], [[0]], [[1, 0], [0, 1]], [[2, -1], [-2, 2]], [[2, -1], [-1, 2]], [[2, -1], [-3, 2]],
    [[2, 4], [6, 8]], [[3, 1, 2]], [[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    [[4, 6, 0], [2, 0, 6]], [[0, 0, 0], [0, 0, 0]],
)


def _linalg_brute(rows: List[List[int]], N: int) -> Tuple[bool, str]:
    M = zmodlin.int_matrix(rows)
    cols = M.shape[1]
    points = list(itertools.product(range(N), repeat=cols))
    images = {tuple(int(v) % N for v in M.dot(np.array(x, dtype=object))): x for x in points}
    kernel = [x for x in points if all(int(v) % N == 0 for v in M.dot(np.array(x, dtype=object)))]
    if zmodlin.kernel_shape(M, N).order != len(kernel):
        return False, f"kernel order {zmodlin.kernel_shape(M, N).order} vs {len(kernel)}"
    if zmodlin.cokernel_order(M, N) * len(images) != N ** M.shape[0]:
        return False, "cokernel order mismatch"
    for b in itertools.product(range(N), repeat=M.shape[0]):
        x = zmodlin.solve_mod(M, list(b), N)
        if (x is None) != (b not in images):
            return False, f"solvability mismatch at b={b}"
        if x is not None and tuple(int(v) % N for v in M.dot(np.array(x, dtype=object))) != b:
            return False, f"wrong solution at b={b}"
    U, D, V = zmodlin.smith_normal_form(M)
    if abs(zmodlin.int_det(U)) != 1 or abs(zmodlin.int_det(V)) != 1:
        return False, "SNF transforms not unimodular"
    return True, ""


def _torsion_brute(divisors: Tuple[int, ...], t: int) -> Tuple[bool, str]:
    shape = zmodlin.AbelianGroupShape(divisors)
    brute = sum(1 for x in itertools.product(*[range(d) for d in divisors]) if all((t * a) % d == 0 for a, d in zip(x, divisors)))
    return _eq(zmodlin.torsion_count(shape, t), brute)


def linalg_checks() -> List[Check]:
    checks: List[Check] = []
    for i, rows in enumerate(LINALG_MATRICES):
        for N in range(1, 9):
            checks.append((f"matrix {i} mod {N}", lambda rows=rows, N=N: _linalg_brute(rows, N)))
    for divisors in ((2,), (4,), (2, 4), (2, 2, 2), (3, 6), (8, 8), (2, 4, 8)):
        for t in (0, 1, 2, 3, 4, 8):
            checks.append((f"torsion {divisors} t={t}", lambda d=divisors, t=t: _torsion_brute(d, t)))
    return checks


# --- rootdata ----------------------------------------------------------------

def _classical_positive_roots(letter: str, n: int) -> int:
    return {
        "A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n), "F": 24, "G": 6,
    }[letter]


def _fundamental_group(letter: str, n: int) -> int:
    return {"A": n + 1, "B": 2, "C": 2, "D": 4, "E": {6: 3, 7: 2, 8: 1}.get(n), "F": 1, "G": 1}[letter]


ALL_TYPES = (
    [("A", n) for n in range(1, 6)] + [("B", n) for n in range(2, 6)] + [("C", n) for n in range(1, 6)]
    + [("D", n) for n in range(4, 7)] + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


def _rootdata_check(letter: str, n: int) -> Tuple[bool, str]:
    rd = rootdata.build_root_datum(letter, n)
    C = rd.cartan
    if any(C[i][i] != 2 for i in range(n)) or any(C[i][j] > 0 for i in range(n) for j in range(n) if i != j):
        return False, "not a Cartan matrix"
    if (tuple(zip(*C)) == C) != rd.simply_laced:
        return False, "transpose invariance does not match the simply-laced flag"
    if len(rd.positive_roots) != _classical_positive_roots(letter, n):
        return False, f"{len(rd.positive_roots)} positive roots"
    if abs(zmodlin.int_det(rd.cartan_matrix)) != _fundamental_group(letter, n):
        return False, f"det {zmodlin.int_det(rd.cartan_matrix)}"
    for w in rootdata.supported_twists(letter, n):
        twist = rootdata.build_twist(rd, w)
        if sum(twist.orbit_sizes) != n or any(w % s for s in twist.orbit_sizes):
            return False, f"bad orbit data for w={w}"
        tau = twist.tau
        power = list(range(n))
        for _ in range(w):
            power = [tau[i] for i in power]
        if power != list(range(n)):
            return False, f"tau^{w} is not the identity"
    return True, f"{len(rd.positive_roots)} positive roots, bad primes {sorted(rd.bad_primes)}"


EXCLUSION_ROWS = (
    ("D", 4, 2, 2), ("D", 5, 2, 2), ("B", 2, 1, 2), ("B", 3, 1, 2), ("C", 3, 1, 2), ("D", 4, 1, 2),
    ("G", 2, 1, 2), ("F", 4, 1, 2), ("G", 2, 1, 3),
)


def rootdata_checks() -> List[Check]:
    checks: List[Check] = [(f"{l}_{n}", lambda l=l, n=n: _rootdata_check(l, n)) for l, n in ALL_TYPES]
    expected_bad = {("A", 3): set(), ("C", 2): {2}, ("G", 2): {2, 3}, ("E", 8): {2, 3, 5}, ("F", 4): {2, 3}, ("D", 5): {2}}
    for (l, n), bad in expected_bad.items():
        checks.append((f"bad primes {l}_{n}", lambda l=l, n=n, bad=bad: _eq(set(rootdata.build_root_datum(l, n).bad_primes), bad)))
    for l, n, w, q in EXCLUSION_ROWS:
        checks.append((f"excluded {l}_{n} w={w} q={q}",
                       lambda l=l, n=n, w=w, q=q: (rootdata.is_excluded(rootdata.build_twist(rootdata.build_root_datum(l, n), w), q)[0], "")))
    return checks


# --- labels ------------------------------------------------------------------

LABEL_FIELDS = ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2))
TWISTS = [(l, n, 1) for l, n in ALL_TYPES if n <= 4] + [("A", 2, 2), ("A", 3, 2), ("D", 4, 2), ("D", 4, 3), ("E", 6, 2)]


def _labels_formula_vs_enumeration(l: str, n: int, w: int, p: int, f: int) -> Tuple[bool, str]:
    twist = rootdata.build_twist(rootdata.build_root_datum(l, n), w)
    q = p ** f
    if q ** w > settings.label_enumeration_bound:
        raise UnsupportedConfiguration(f"q^w = {q ** w} above the enumeration bound")
    for e in range(2 * f * w + 1):
        g = GaloisParam(p, e)
        a, b = labelcalc.count_fixed_labels(twist, q, g), labelcalc.count_fixed_labels_enumerated(twist, q, g)
        if a != b:
            return False, f"e={e}: formula {a}, enumeration {b}"
    if w == 1:
        rd = twist.rd
        return _eq(labelcalc.label_set_size(twist, q), (q - 1) ** rd.d * q ** n)
    return True, ""


def _labels_action(l: str, n: int, w: int, p: int, f: int) -> Tuple[bool, str]:
    twist = rootdata.build_twist(rootdata.build_root_datum(l, n), w)
    q = p ** f
    labels = list(labelcalc.enumerate_labels(twist, q))
    if len(labels) != labelcalc.label_set_size(twist, q):
        return False, "enumeration size differs from label_set_size"
    for lab in labels[:50]:
        labelcalc.check_label(lab, twist, q)
    for e1, e2 in ((1, 1), (1, 2), (0, 3)):
        g1, g2, g12 = GaloisParam(p, e1), GaloisParam(p, e2), GaloisParam(p, e1 + e2)
        for lab in labels:
            if labelcalc.galois_act_label(labelcalc.galois_act_label(lab, g1), g2) != labelcalc.galois_act_label(lab, g12):
                return False, f"composition fails for e={e1}+{e2}"
    images = {labelcalc.galois_act_label(lab, GaloisParam(p, 1)) for lab in labels}
    return _eq(len(images), len(labels))


def labels_checks() -> List[Check]:
    checks: List[Check] = []
    for l, n, w in TWISTS:
        for p, f in LABEL_FIELDS:
            if (p ** f) ** w > settings.label_enumeration_bound:
                continue
            checks.append((f"fixed labels {l}_{n} w={w} q={p ** f}",
                           lambda l=l, n=n, w=w, p=p, f=f: _labels_formula_vs_enumeration(l, n, w, p, f)))
    for l, n, w, p, f in (("A", 1, 1, 3, 2), ("C", 2, 1, 3, 1), ("A", 2, 2, 2, 1), ("B", 2, 1, 3, 1)):
        checks.append((f"action {l}_{n} w={w} q={p ** f}", lambda l=l, n=n, w=w, p=p, f=f: _labels_action(l, n, w, p, f)))
    for k, p, f in ((3, 3, 1), (7, 2, 2), (11, 3, 1), (25, 3, 2), (19, 3, 2), (5, 3, 2)):
        checks.append((f"from_k k={k} q={p ** f}", lambda k=k, p=p, f=f: _from_k_check(k, p, f)))
    return checks


def _from_k_check(k: int, p: int, f: int) -> Tuple[bool, str]:
    m = p ** f - 1
    try:
        g = GaloisParam.from_k(k, p, f)
    except ValueError as exc:
        galois = math.gcd(k, p * m) == 1 and k % m in {pow(p, e, m) for e in range(f)}
        return not galois, str(exc)
    return pow(p, g.e, m) == k % m and g.kappa == k % p, f"e={g.e} kappa={g.kappa}"


# --- borel -------------------------------------------------------------------

CN_FIELDS = ((3, 1), (5, 1), (3, 2))


def _kappa_reps(p: int, f: int) -> Dict[int, int]:
    """parity -> smallest kappa in F_p^x with that parity of log in F_q^x."""
    out: Dict[int, int] = {}
    for kappa in range(1, p):
        out.setdefault(borel.kappa_parity(p ** f, kappa), kappa)
    return out


def _example_cn(n: int, p: int, f: int) -> Tuple[bool, str]:
    rd = rootdata.build_root_datum("C", n)
    q = p ** f
    total = borel.count_pprime(rd, q, borel.TorusLevel.B)
    if total != q ** n + 3 * q ** (n - 1):
        return False, f"total {total}"
    for e in range(2 * f + 1):
        for parity, kappa in _kappa_reps(p, f).items():
            got = borel.count_sigma_fixed(rd, q, borel.TorusLevel.B, GaloisParam(p, e, kappa))
            want = borel.closed_form_Cn(n, p, f, e, parity)
            if got != want:
                return False, f"e={e} kappa={kappa}: {got} vs closed form {want}"
    return True, ""


LOCAL_FIELDS = ((3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2))


def _local_equals_labels(l: str, n: int, p: int, f: int) -> Tuple[bool, str]:
    rd = rootdata.build_root_datum(l, n)
    twist = rootdata.build_twist(rd, 1)
    q = p ** f
    total = borel.count_pprime(rd, q, borel.TorusLevel.BTILDE)
    if total != labelcalc.label_set_size(twist, q) or total != (q - 1) ** rd.d * q ** n:
        return False, f"B~-level count {total}"
    orbits = borel.enum_orbits(rd, q, borel.TorusLevel.BTILDE)
    if len(orbits) != 2 ** n:
        return False, f"{len(orbits)} B~-orbits"
    for e in range(2 * f + 1):
        want = labelcalc.count_fixed_labels(twist, q, GaloisParam(p, e))
        for kappa in range(1, p):
            got = borel.count_sigma_fixed(rd, q, borel.TorusLevel.BTILDE, GaloisParam(p, e, kappa))
            if got != want:
                return False, f"e={e} kappa={kappa}: {got} vs labels {want}"
    return True, ""


def _two_methods(l: str, n: int, p: int, f: int) -> Tuple[bool, str]:
    rd = rootdata.build_root_datum(l, n)
    q = p ** f
    for e in range(2 * f + 1):
        for kappa in _kappa_reps(p, f).values():
            g = GaloisParam(p, e, kappa)
            a = borel.count_sigma_fixed(rd, q, borel.TorusLevel.B, g)
            b = borel.count_sigma_fixed_prop56(rd, q, borel.TorusLevel.B, g)
            if a != b:
                return False, f"e={e} kappa={kappa}: {a} vs {b}"
    return True, ""


def _orbit_stabilizer(l: str, n: int, p: int, f: int) -> Tuple[bool, str]:
    rd = rootdata.build_root_datum(l, n)
    q = p ** f
    for level in borel.TorusLevel:
        orbits = borel.enum_orbits(rd, q, level)
        rank = n if level is borel.TorusLevel.B else n + rd.d
        for o in orbits:
            if o.orbit_size * o.stabilizer.order != (q - 1) ** rank:
                return False, f"orbit-stabilizer fails on {o}"
        for S in {o.support for o in orbits}:
            if sum(o.orbit_size for o in orbits if o.support == S) != (q - 1) ** len(S):
                return False, f"support {S} not covered"
    return True, ""


def _central(l: str, n: int, p: int, f: int) -> Tuple[bool, str]:
    rd = rootdata.build_root_datum(l, n)
    q = p ** f
    for e in range(2 * f + 1):
        for kappa in _kappa_reps(p, f).values():
            g = GaloisParam(p, e, kappa)
            for level in borel.TorusLevel:
                part = borel.central_partition(rd, q, level, g)
                totals = sum(t for t, _ in part.values())
                fixed = sum(x for _, x in part.values())
                if totals != borel.count_pprime(rd, q, level) or fixed != borel.count_sigma_fixed(rd, q, level, g):
                    return False, f"{level.value} e={e} kappa={kappa}: column sums {totals}, {fixed}"
    return True, ""


def _periodicity(l: str, n: int, p: int, f: int) -> Tuple[bool, str]:
    rd = rootdata.build_root_datum(l, n)
    q = p ** f
    for e in range(f + 1):
        for kappa in range(1, p):
            for level in borel.TorusLevel:
                a = borel.count_sigma_fixed(rd, q, level, GaloisParam(p, e, kappa))
                b = borel.count_sigma_fixed(rd, q, level, GaloisParam(p, e + f, kappa))
                if a != b:
                    return False, f"{level.value} e={e}: {a} vs {b}"
    return True, ""


def _inverse_symmetry(l: str, n: int, p: int, f: int) -> Tuple[bool, str]:
    rd = rootdata.build_root_datum(l, n)
    q = p ** f
    for e in range(f):
        for kappa in range(1, p):
            g, g_inv = GaloisParam(p, e, kappa), GaloisParam(p, (-e) % f, pow(kappa, -1, p))
            for level in borel.TorusLevel:
                a = borel.count_sigma_fixed(rd, q, level, g)
                b = borel.count_sigma_fixed(rd, q, level, g_inv)
                if a != b:
                    return False, f"{level.value} e={e} kappa={kappa}: {a} vs inverse {b}"
    return True, ""

def borel_checks() -> List[Check]:
    checks: List[Check] = []
    for n in (1, 2, 3):
        for p, f in CN_FIELDS:
            checks.append((f"closed form C_{n} q={p ** f}", lambda n=n, p=p, f=f: _example_cn(n, p, f)))
    for l, n in ALL_TYPES:
        if n > 4:
            continue
        for p, f in LOCAL_FIELDS:
            checks.append((f"local=labels {l}_{n} q={p ** f}", lambda l=l, n=n, p=p, f=f: _local_equals_labels(l, n, p, f)))
    for l, n in (("A", 1), ("A", 2), ("C", 2)):
        for p, f in ((3, 1), (5, 1), (3, 2)):
            checks.append((f"two methods {l}_{n} q={p ** f}", lambda l=l, n=n, p=p, f=f: _two_methods(l, n, p, f)))
            checks.append((f"orbit-stabilizer {l}_{n} q={p ** f}", lambda l=l, n=n, p=p, f=f: _orbit_stabilizer(l, n, p, f)))
            checks.append((f"central split {l}_{n} q={p ** f}", lambda l=l, n=n, p=p, f=f: _central(l, n, p, f)))
            checks.append((f"periodicity {l}_{n} q={p ** f}", lambda l=l, n=n, p=p, f=f: _periodicity(l, n, p, f)))
            checks.append((f"inverse symmetry {l}_{n} q={p ** f}", lambda l=l, n=n, p=p, f=f: _inverse_symmetry(l, n, p, f)))
    e6 = rootdata.build_root_datum("E", 6)
    checks.append(("trivial centre E_6 q=2", lambda: _eq(
        borel.count_pprime(e6, 2, borel.TorusLevel.B), labelcalc.label_set_size(rootdata.build_twist(e6, 1), 2),
    )))
    checks.append(("central split A_1 q=5", lambda: _eq(
        sorted(borel.central_partition(rootdata.build_root_datum("A", 1), 5, borel.TorusLevel.B, GaloisParam(5, 0)).values()),
        [(4, 4), (4, 4)],
    )))
    return checks


# --- global ------------------------------------------------------------------

GLOBAL_FIELDS = ((3, 1), (2, 2), (5, 1), (7, 1), (3, 2))


def _triple_equality(n: int, p: int, f: int) -> Tuple[bool, str]:
    q = p ** f
    rd = rootdata.build_root_datum("A", n)
    twist = rootdata.build_twist(rd, 1)
    for e in range(2 * f + 1):
        g = GaloisParam(p, e)
        a = sscls.count_sigma_fixed_classes(n + 1, q, g)
        b = labelcalc.count_fixed_labels(twist, q, g)
        c = borel.count_sigma_fixed(rd, q, borel.TorusLevel.BTILDE, g)
        if not a == b == c:
            return False, f"e={e}: classes {a}, labels {b}, B~ {c}"
        det = sscls.partition_by_determinant(n + 1, q, g)
        central = labelcalc.fixed_labels_by_central(twist, q, g)
        if {(k,): v for k, v in det.items()} != central:
            return False, f"e={e}: determinant and central-character splits differ"
    return True, ""


def _steinberg(dim: int, q: int) -> Tuple[bool, str]:
    p, _ = ff.prime_power(q)
    classes = sscls.enumerate_ss_classes(dim, q)
    labels = [sscls.steinberg_label(c) for c in classes]
    if len(set(labels)) != len(classes):
        return False, "labels do not separate classes"
    for cls, lab in zip(classes, labels):
        powered = sscls.steinberg_label(sscls.class_power(cls, p))
        if powered.b0 != lab.b0 ** p or powered.b != tuple(x ** p for x in lab.b):
            return False, f"p-th power rule fails on {cls.key}"
        if sscls.class_from_charpoly(sscls.charpoly_of_class(cls)) != cls:
            return False, f"charpoly round trip fails on {cls.key}"
    return True, f"{len(classes)} classes"


def _gu3(q: int) -> Tuple[bool, str]:
    twist = rootdata.build_twist(rootdata.build_root_datum("A", 2), 2)
    return _eq(sscls.enumerate_ss_classes_gu3(q), labelcalc.label_set_size(twist, q))


def global_checks() -> List[Check]:
    checks: List[Check] = []
    for n in (1, 2):
        for p, f in GLOBAL_FIELDS:
            checks.append((f"triple equality A_{n} q={p ** f}", lambda n=n, p=p, f=f: _triple_equality(n, p, f)))
    for dim in (2, 3):
        for q in (2, 3, 4, 5):
            checks.append((f"Steinberg map GL_{dim}({q})", lambda dim=dim, q=q: _steinberg(dim, q)))
    for q in (2, 3, 5):
        checks.append((f"GU_3({q}) classes", lambda q=q: _gu3(q)))
    return checks


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "fields": fields_checks,
    "linalg": linalg_checks,
    "rootdata": rootdata_checks,
    "labels": labels_checks,
    "borel": borel_checks,
    "global": global_checks,
}


def run_suite(name: str) -> List[CheckResult]:
    if name == "all":
        return [r for suite in SUITES for r in run_suite(suite)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return _run(name, SUITES[name]())


def summarize(name: str, results: List[CheckResult]) -> Dict:
    counts = {status.value: sum(1 for r in results if r.status is status) for status in CheckStatus}
    return {
        "schema": 1,
        "suite": name,
        "passed": counts["PASS"],
        "failed": counts["FAIL"],
        "skipped": counts["SKIP"],
        "checks": [r.model_dump(mode="json") for r in results],
    }
