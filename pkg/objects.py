from enum import Enum
from functools import lru_cache
from typing import List


N_POINTS = 10
DEFAULT_PRIME = 2147483647
CROSS_CHECK_PRIME = 2147483659
# products of two residues must stay below 2**63
MAX_WORD_PRIME = 3037000499


class VerdictKind(Enum):
    Empty = 0
    Dim = 1
    Unknown = 2


class ObjectKind(Enum):
    Line = "line"
    Sky = "sky"
    Curve = "curve"


class CaseList(Enum):
    Krah = "krah"
    SpecialLocus = "special-locus"
    Concordance = "concordance"
    All = "all"

    @staticmethod
    def from_str(s: str) -> 'CaseList':
        for case_list in CaseList:
            if case_list.value == s:
                return case_list
        raise ValueError(f"Invalid case list: {s}. Must be one of {[c.value for c in CaseList]}")


class BundleName(Enum):
    Krah = "krah"
    Skyscraper = "skyscraper"
    Curve = "curve"
    SpecialLocus = "special-locus"
    Hull = "hull"
    Generality = "generality"

    @staticmethod
    def from_str(s: str) -> 'BundleName':
        for name in BundleName:
            if name.value == s:
                return name
        raise ValueError(f"Invalid bundle: {s}. Must be one of {[b.value for b in BundleName]}")


class OutputFormat(Enum):
    JSON = "json"
    Table = "table"
    TSV = "tsv"

    @lru_cache(maxsize=None)
    def encode(self, method="extension") -> str:
        if method == "extension":
            return {OutputFormat.JSON: "json", OutputFormat.Table: "txt", OutputFormat.TSV: "tsv"}[self]
        else:
            raise ValueError(
                "Invalid method. Must be 'extension'.")

    @staticmethod
    def names() -> List[str]:
        return [f.value for f in OutputFormat]
