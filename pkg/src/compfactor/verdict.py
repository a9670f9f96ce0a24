from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of checking one factor criterion on one graph.

    ``holds`` is ``None`` exactly when the criterion's hypotheses are not met
    (``applicable`` is False); ``reason`` then says which one.  A sufficient
    condition that fails says nothing about whether a factor exists.
    """

    theorem: str
    applicable: bool
    holds: bool | None
    witness: dict[str, Any] = field(default_factory=dict)
    reason: str = ""

    @classmethod
    def not_applicable(cls, theorem: str, reason: str, **witness: Any) -> "ConditionVerdict":
        return cls(theorem, False, None, dict(witness), reason)

    @property
    def implies_factor(self) -> bool:
        return self.applicable and bool(self.holds)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ConditionVerdict":
        return cls(d["theorem"], d["applicable"], d["holds"], dict(d["witness"]), d["reason"])
