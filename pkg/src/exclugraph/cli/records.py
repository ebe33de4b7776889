from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional
import json

from pydantic import BaseModel, Field

from exclugraph import __version__


@dataclass
class Outcome():
    """What a subcommand computed, before it is wrapped into a RunReport."""
    graph6: Optional[str]
    results: Dict[str, Any]
    flags: Dict[str, bool] = field(default_factory=dict)
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    csv_row: Optional[Dict[str, Any]] = None

    def payload(self) -> str:
        return json.dumps({"results": self.results, "flags": self.flags, "diagnostics": self.diagnostics, "csv_row": self.csv_row})

    @classmethod
    def from_payload(cls, graph6: Optional[str], payload: str) -> "Outcome":
        data = json.loads(payload)
        return cls(graph6=graph6, **data)


class RunReport(BaseModel):
    command: List[str] = Field(description="argument list echoed back")
    graph6: Optional[str] = Field(None, description="input graph in graph6")
    weights: Optional[List[float]] = Field(None, description="weight vector or distribution given on input")
    results: Dict[str, Any] = Field(description="numeric results of the command")
    flags: Dict[str, bool] = Field(default_factory=dict, description="structural flags of the input graph")
    diagnostics: Dict[str, Any] = Field(default_factory=dict, description="solver diagnostics")
    timestamp: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    version: str = __version__

    @classmethod
    def build(cls, argv: List[str], outcome: Outcome, weights: Optional[List[float]] = None) -> "RunReport":
        return cls(
            command=list(argv),
            graph6=outcome.graph6,
            weights=weights,
            results=outcome.results,
            flags=outcome.flags,
            diagnostics=outcome.diagnostics,
        )
