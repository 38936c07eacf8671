"""
Evaluate RunConfigs into CountRecords.

Each grid point is independent; `run_grid` fans them out over a process pool
when more than one job is requested and always returns records sorted by
their key, so the output does not depend on the job count.
"""
import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra.ff import FieldElem, dlog, mk_field
from ..core.config import settings
from ..core.errors import ExcludedConfiguration, McKayLabelsError, UnsupportedConfiguration
from ..core.models import CSV_FIELDS, CountRecord, Level, Report, RunConfig
from ..lie import labelcalc
from ..lie.labelcalc import GaloisParam
from ..lie.rootdata import build_root_datum, build_twist, is_excluded
from ..oracles import borel, sscls

logger = logging.getLogger("mckay_labels.sweep")


def kappa_choices(cfg: RunConfig) -> List[Tuple[str, int]]:
    """(kappa_class, kappa) pairs to evaluate; the class of kappa is the parity of its log in F_q^x."""
    if cfg.level in (Level.LABELS, Level.CLASSES):
        return [("any", 1)]
    ctx = mk_field(cfg.p, cfg.f)

    def klass(kappa: int) -> str:
        return "square" if dlog(ctx.prime(kappa)) % 2 == 0 or cfg.p == 2 else "nonsquare"

    if cfg.kappa.isdigit():
        kappa = int(cfg.kappa) % cfg.p
        return [(klass(kappa), kappa)]
    wanted = ("square", "nonsquare") if cfg.kappa == "all" else (cfg.kappa,)
    out = []
    for name in wanted:
        # smallest representative; the nonsquare class is empty when f is even
        rep = next((k for k in range(1, cfg.p) if klass(k) == name), None)
        if rep is not None:
            out.append((name, rep))
    return out


def validate(cfg: RunConfig):
    """Resolve the twist and reject excluded or unsupported requests before any counting."""
    rd = build_root_datum(cfg.type_label, cfg.rank)
    twist = build_twist(rd, cfg.w)
    excluded, reason = is_excluded(twist, cfg.q)
    if excluded:
        raise ExcludedConfiguration(reason)
    if cfg.level in (Level.B, Level.BTILDE) and cfg.w > 1:
        raise UnsupportedConfiguration(f"{cfg.level.value}-level counts are modelled for untwisted types only")
    if cfg.level is Level.CLASSES and (rd.type_label != "A" or cfg.w != 1):
        raise UnsupportedConfiguration("class counts are modelled for untwisted type A only")
    return rd, twist


def _stringify(partition: Dict) -> Dict[str, Tuple[int, int]]:
    out = {}
    for key, value in partition.items():
        if isinstance(key, tuple):
            key = ",".join(labelcalc.format_component(k) if isinstance(k, FieldElem) else str(k) for k in key)
        else:
            key = labelcalc.format_component(key)
        out[key or "1"] = value
    return out


def evaluate(cfg: RunConfig) -> List[CountRecord]:
    rd, twist = validate(cfg)
    q = cfg.q
    records = []
    for e in cfg.e_values:
        for kappa_class, kappa in kappa_choices(cfg):
            g = GaloisParam(cfg.p, e, kappa)
            fields = dict(
                type_label=rd.type_label, rank=rd.n, w=cfg.w, p=cfg.p, f=cfg.f, q=q,
                e=e, kappa_class=kappa_class, kappa=kappa, level=cfg.level,
            )
            central = None
            if cfg.level in (Level.B, Level.BTILDE):
                level = borel.TorusLevel(cfg.level.value)
                total = borel.count_pprime(rd, q, level)
                fixed = borel.count_sigma_fixed(rd, q, level, g)
                if level is borel.TorusLevel.B:
                    try:
                        method_b = borel.count_sigma_fixed_prop56(rd, q, level, g)
                    except UnsupportedConfiguration as exc:
                        logger.info("second method skipped: %s", exc.reason)
                        method_b = None
                    label_count = None
                else:
                    method_b = labelcalc.count_fixed_labels(twist, q, g)
                    label_count = labelcalc.label_set_size(twist, q)
                closed_form = None
                if rd.type_label == "C" and level is borel.TorusLevel.B and cfg.p != 2:
                    closed_form = borel.closed_form_Cn(rd.n, cfg.p, cfg.f, e, borel.kappa_parity(q, kappa))
                if cfg.per_central_character:
                    central = _stringify(borel.central_partition(rd, q, level, g))
                records.append(CountRecord(
                    **fields, total=total, fixed=fixed, method_a=fixed, method_b=method_b,
                    label_count=label_count, closed_form=closed_form, central=central,
                ))
            elif cfg.level is Level.LABELS:
                total = labelcalc.label_set_size(twist, q)
                fixed = labelcalc.count_fixed_labels(twist, q, g)
                method_b = None
                if labelcalc.labels_enumerable(twist, q):
                    method_b = labelcalc.count_fixed_labels_enumerated(twist, q, g)
                if cfg.per_central_character:
                    central = _stringify(labelcalc.fixed_labels_by_central(twist, q, g))
                records.append(CountRecord(
                    **fields, total=total, fixed=fixed, method_a=fixed, method_b=method_b,
                    label_count=total, central=central,
                ))
            else:
                classes = sscls.enumerate_ss_classes(rd.n + 1, q)
                fixed = sscls.count_sigma_fixed_classes(rd.n + 1, q, g)
                if cfg.per_central_character:
                    central = _stringify(sscls.partition_by_determinant(rd.n + 1, q, g))
                records.append(CountRecord(
                    **fields, total=len(classes), fixed=fixed, method_a=fixed,
                    method_b=labelcalc.count_fixed_labels(twist, q, g),
                    label_count=labelcalc.label_set_size(twist, q), class_count=len(classes), central=central,
                ))
    return records


def _evaluate_or_skip(cfg: RunConfig) -> List[CountRecord]:
    try:
        return evaluate(cfg)
    except (ExcludedConfiguration, UnsupportedConfiguration) as exc:
        logger.warning("skipping %s_%d q=%d w=%d %s: %s", cfg.type_label, cfg.rank, cfg.q, cfg.w, cfg.level.value, exc.reason)
        return []


def run_grid(configs: Sequence[RunConfig], jobs: Optional[int] = None) -> List[CountRecord]:
    """Evaluate every config; excluded and unsupported points are logged and skipped."""
    jobs = jobs or settings.max_jobs
    if jobs > 1 and len(configs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_evaluate_or_skip, configs))
    else:
        chunks = [_evaluate_or_skip(cfg) for cfg in configs]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=CountRecord.sort_key)
    return records


def build_grid(
    type_label: str,
    ranks: Iterable[int],
    prime_powers: Iterable[Tuple[int, int]],
    levels: Iterable[Level],
    w: int = 1,
    kappa: str = "all",
    e_max: Optional[int] = None,
) -> List[RunConfig]:
    configs = []
    for n in ranks:
        for p, f in prime_powers:
            for level in levels:
                try:
                    configs.append(RunConfig(
                        type_label=type_label, rank=n, p=p, f=f, w=w, kappa=kappa, level=level, e_max=e_max,
                    ))
                except ValueError as exc:
                    raise McKayLabelsError(str(exc)) from exc
    return configs


def _csv_row(record: CountRecord) -> List[str]:
    data = record.model_dump()
    data["type"] = data.pop("type_label")
    data["level"] = record.level.value
    return ["" if data[k] is None else str(data[k]) for k in CSV_FIELDS]


def to_csv(records: Sequence[CountRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for record in records:
        writer.writerow(_csv_row(record))
    return buf.getvalue()


def to_json(records: Sequence[CountRecord], config: Dict) -> str:
    report = Report(schema=1, config=config, records=list(records))
    return json.dumps(report.model_dump(mode="json", by_alias=True), indent=2, sort_keys=False) + "\n"


def to_table(records: Sequence[CountRecord]) -> str:
    lines = [f"{'Group':<10} {'q':>5} {'e':>3} {'kappa':<12} {'Level':<8} {'Total':>10} {'Fixed':>10} {'Method B':>10}"]
    lines.append("-" * 74)
    for r in records:
        group = f"{'^' + str(r.w) if r.w > 1 else ''}{r.type_label}_{r.rank}"
        kappa = f"{r.kappa_class}({r.kappa})"
        method_b = "" if r.method_b is None else str(r.method_b)
        lines.append(f"{group:<10} {r.q:>5} {r.e:>3} {kappa:<12} {r.level.value:<8} {r.total:>10} {r.fixed:>10} {method_b:>10}")
        for key, (total, fixed) in (r.central or {}).items():
            lines.append(f"{'':<10} {'':>5} {'':>3} {'  z=' + key:<21} {total:>10} {fixed:>10}")
    return "\n".join(lines) + "\n"
