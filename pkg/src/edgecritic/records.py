"""Line-oriented verification records.

One JSON object per line, fixed key order, no timestamps: reruns over the same
plan must produce byte-identical logs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator


class RecordError(ValueError):
    pass


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of checking one claim on one instance.

    `conclusion` is None when the check did not run to an answer; the verdict
    then depends on the hypotheses: all-true means the check itself gave up
    (undecided), any-false means the claim was vacuous here (skipped).
    """

    lemma: str
    instance_id: str
    hypotheses: dict[str, bool] = field(default_factory=dict)
    conclusion: bool | None = None
    witness: dict[str, Any] | None = None

    @property
    def verdict(self) -> str:
        if self.conclusion is False:
            return "fail"
        if self.conclusion is True:
            return "pass"
        if self.hypotheses and not all(self.hypotheses.values()):
            return "skipped"
        return "undecided"

    def to_json_line(self) -> str:
        payload: dict[str, Any] = {
            "lemma": self.lemma,
            "instance_id": self.instance_id,
            "hypotheses": self.hypotheses,
            "conclusion": self.conclusion,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            payload["witness"] = self.witness
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def record_from_json_line(line: str) -> VerificationRecord:
    try:
        payload = json.loads(line)
    except json.JSONDecodeError as exc:
        raise RecordError(f"malformed record line: {exc}") from exc
    if not isinstance(payload, dict):
        raise RecordError("record line is not an object")
    try:
        rec = VerificationRecord(
            lemma=payload["lemma"],
            instance_id=payload["instance_id"],
            hypotheses=dict(payload["hypotheses"]),
            conclusion=payload["conclusion"],
            witness=payload.get("witness"),
        )
    except KeyError as exc:
        raise RecordError(f"record line missing key {exc}") from exc
    stated = payload.get("verdict")
    if stated is not None and stated != rec.verdict:
        raise RecordError(f"stored verdict {stated!r} disagrees with fields")
    return rec


def write_records(path: str, records: Iterable[VerificationRecord]) -> int:
    n = 0
    with open(path, "w", encoding="ascii") as fh:
        for rec in records:
            fh.write(rec.to_json_line() + "\n")
            n += 1
    return n


def read_records(path: str) -> Iterator[VerificationRecord]:
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield record_from_json_line(line)
            except RecordError as exc:
                raise RecordError(f"{path}:{lineno}: {exc}") from exc


def tally_verdicts(records: Iterable[VerificationRecord]) -> dict[str, int]:
    counts = {"pass": 0, "fail": 0, "skipped": 0, "undecided": 0}
    for rec in records:
        counts[rec.verdict] += 1
    return counts
