"""Structured outcome of a single congruence check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

__all__ = ["DivisibilityReport", "OK", "PRECONDITION_FAILED"]

OK = "ok"
PRECONDITION_FAILED = "precondition-failed"


@dataclass(frozen=True)
class DivisibilityReport:
    """One evaluated (or refused) claim.

    For an evaluated claim ``computed_residue`` lies in [0, modulus) and
    ``holds`` is the comparison of the two residues under ``relation``
    ("==" for a congruence, "!=" for a predicted non-divisibility), combined
    with any auxiliary checks recorded in ``details``. Exact identities use
    ``modulus=None`` and compare the two sides unreduced. A refused claim has
    ``status == "precondition-failed"``, no residues and ``holds`` False.
    """

    claim_id: str
    params: dict[str, int]
    modulus: int | None
    computed_residue: int | None
    predicted_residue: int | None
    holds: bool
    status: str = OK
    relation: str = "=="
    details: dict[str, Any] = field(default_factory=dict)
    note: str = ""

    @classmethod
    def evaluate(
        cls,
        claim_id: str,
        params: dict[str, int],
        modulus: int | None,
        computed: int,
        predicted: int,
        *,
        relation: str = "==",
        details: dict[str, Any] | None = None,
        extra_ok: bool = True,
        note: str = "",
    ) -> "DivisibilityReport":
        if modulus is not None:
            computed %= modulus
            predicted %= modulus
        if relation == "==":
            match = computed == predicted
        elif relation == "!=":
            match = computed != predicted
        else:
            raise ValueError(f"unknown relation {relation!r}")
        return cls(
            claim_id=claim_id,
            params=dict(params),
            modulus=modulus,
            computed_residue=computed,
            predicted_residue=predicted,
            holds=match and extra_ok,
            relation=relation,
            details=dict(details or {}),
            note=note,
        )

    @classmethod
    def refused(cls, claim_id: str, params: dict[str, int], reason: str) -> "DivisibilityReport":
        return cls(
            claim_id=claim_id,
            params=dict(params),
            modulus=None,
            computed_residue=None,
            predicted_residue=None,
            holds=False,
            status=PRECONDITION_FAILED,
            note=reason,
        )

    @property
    def precondition_failed(self) -> bool:
        return self.status == PRECONDITION_FAILED

    def to_json(self) -> dict[str, Any]:
        """JSON-ready dict; integers become decimal strings."""

        def dec(v: int | None) -> str | None:
            return None if v is None else str(v)

        out: dict[str, Any] = {
            "claim": self.claim_id,
            "params": {k: str(v) for k, v in self.params.items()},
            "modulus": dec(self.modulus),
            "residue": dec(self.computed_residue),
            "predicted": dec(self.predicted_residue),
            "relation": self.relation,
            "holds": self.holds,
            "status": self.status,
        }
        if self.details:
            out["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        if self.note:
            out["note"] = self.note
        return out


def _jsonable(v: Any) -> Any:
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)
