"""Term-growth log shared by elimination, the EEA comparator and the benchmark."""

import csv
import io
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from ..poly.mpoly import MultiPoly

CSV_HEADER = ("step", "method", "var", "terms", "maxdeg", "micros", "transcript")


@dataclass(frozen=True)
class GrowthRow:
    """One measured polynomial: its term count and per-variable max degree.

    ``transcript`` is the squaring-phase size of the gcd(Res, t^p - t)
    derivation on bivariate resultant rows, 0 elsewhere.
    """

    step: int
    method: str
    var: int
    terms: int
    maxdeg: Tuple[int, ...]
    micros: int = 0
    trial: int = 0
    transcript: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "step": self.step,
            "method": self.method,
            "var": self.var,
            "terms": self.terms,
            "maxdeg": list(self.maxdeg),
            "micros": self.micros,
            "transcript": self.transcript,
        }


@dataclass
class TermGrowthLog:
    """Rows of term counts, one per elimination step per method."""

    rows: List[GrowthRow] = field(default_factory=list)

    def record(
        self,
        step: int,
        method: str,
        var: int,
        poly: MultiPoly,
        micros: int = 0,
        trial: int = 0,
        transcript: int = 0,
    ) -> GrowthRow:
        row = GrowthRow(
            step=step,
            method=method,
            var=var,
            terms=len(poly),
            maxdeg=poly.max_degrees(),
            micros=micros,
            trial=trial,
            transcript=transcript,
        )
        self.rows.append(row)
        return row

    def extend(self, other: "TermGrowthLog") -> None:
        self.rows.extend(other.rows)

    def for_method(self, method: str) -> List[GrowthRow]:
        return [r for r in self.rows if r.method == method]

    def to_csv(self) -> str:
        """CSV text with header ``step,method,var,terms,maxdeg,micros,transcript``."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow(
                [
                    r.step,
                    r.method,
                    r.var,
                    r.terms,
                    ";".join(str(d) for d in r.maxdeg),
                    r.micros,
                    r.transcript,
                ]
            )
        return buffer.getvalue()

    def summary(self) -> Dict[str, Any]:
        """Largest term count seen per method."""
        peaks: Dict[str, int] = {}
        for r in self.rows:
            peaks[r.method] = max(peaks.get(r.method, 0), r.terms)
        return {"rows": len(self.rows), "max_terms": peaks}
