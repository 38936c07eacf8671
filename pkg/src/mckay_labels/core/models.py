from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import sympy
from pydantic import BaseModel, Field, field_validator, model_validator

from ..lie.rootdata import parse_type

SCHEMA_VERSION = 1


class Level(str, Enum):
    B = "B"
    BTILDE = "Btilde"
    LABELS = "labels"
    CLASSES = "classes"


class OutputFormat(str, Enum):
    TABLE = "table"
    CSV = "csv"
    JSON = "json"


KAPPA_CLASSES = ("all", "square", "nonsquare")


class RunConfig(BaseModel):
    """One (type, rank, q, w) configuration and the e/kappa range to evaluate on it."""
    type_label: str
    rank: Optional[int] = None  # implied by labels such as "E6"
    p: int
    f: int = 1
    w: int = 1
    e_min: int = 0
    e_max: Optional[int] = None  # defaults to 2f
    kappa: str = "all"  # all | square | nonsquare | an explicit unit mod p
    level: Level = Level.B
    per_central_character: bool = False
    format: OutputFormat = OutputFormat.TABLE

    @field_validator("type_label")
    @classmethod
    def _known_type(cls, v: str) -> str:
        v = v.strip().upper()
        if not v or v[0] not in "ABCDEFG":
            raise ValueError(f"unknown type {v}")
        return v

    @field_validator("p")
    @classmethod
    def _prime(cls, v: int) -> int:
        if not sympy.isprime(v):
            raise ValueError(f"{v} is not prime")
        return v

    @field_validator("f")
    @classmethod
    def _degree(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"f must be >= 1, got {v}")
        return v

    @field_validator("kappa")
    @classmethod
    def _kappa(cls, v: str) -> str:
        v = str(v).strip().lower()
        if v not in KAPPA_CLASSES and not v.isdigit():
            raise ValueError(f"kappa must be one of {KAPPA_CLASSES} or a positive integer, got {v}")
        return v

    @model_validator(mode="after")
    def _normalize(self) -> "RunConfig":
        letter, n = parse_type(self.type_label, self.rank)
        self.type_label, self.rank = letter, n
        if self.e_max is None:
            self.e_max = 2 * self.f
        if self.e_min < 0 or self.e_max < self.e_min:
            raise ValueError(f"bad e range [{self.e_min}, {self.e_max}]")
        if self.kappa.isdigit() and int(self.kappa) % self.p == 0:
            raise ValueError(f"kappa {self.kappa} is not a unit mod {self.p}")
        return self

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def e_values(self) -> List[int]:
        return list(range(self.e_min, self.e_max + 1))


class CountRecord(BaseModel):
    type_label: str
    rank: int
    w: int
    p: int
    f: int
    q: int
    e: int
    kappa_class: str
    kappa: int
    level: Level
    total: int
    fixed: int
    method_a: Optional[int] = None
    method_b: Optional[int] = None
    label_count: Optional[int] = None
    class_count: Optional[int] = None
    closed_form: Optional[int] = None
    central: Optional[Dict[str, Tuple[int, int]]] = None

    def sort_key(self) -> Tuple[Any, ...]:
        return (self.type_label, self.rank, self.w, self.q, self.e, self.kappa_class, self.kappa, self.level.value)


CSV_FIELDS = (
    "type", "rank", "w", "p", "f", "q", "e", "kappa_class", "kappa", "level",
    "total", "fixed", "method_a", "method_b", "label_count", "class_count", "closed_form",
)


class Report(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    config: Dict[str, Any] = Field(default_factory=dict)
    records: List[CountRecord] = Field(default_factory=list)

    model_config = {"populate_by_name": True}


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


class CheckResult(BaseModel):
    suite: str
    name: str
    status: CheckStatus
    detail: str = ""
