"""Verification records: verdict table, exact line format, file round trips."""

import pytest

from edgecritic.records import (
    RecordError,
    VerificationRecord,
    read_records,
    record_from_json_line,
    tally_verdicts,
    write_records,
)


def test_verdict_table():
    hyp = {"a": True, "b": True}
    assert VerificationRecord("L", "x", hyp, conclusion=True).verdict == "pass"
    assert VerificationRecord("L", "x", hyp, conclusion=False).verdict == "fail"
    assert VerificationRecord("L", "x", {"a": False}, conclusion=None).verdict == "skipped"
    assert VerificationRecord("L", "x", hyp, conclusion=None).verdict == "undecided"
    assert VerificationRecord("L", "x", {}, conclusion=None).verdict == "undecided"
    # a false hypothesis never hides an actual answer
    assert VerificationRecord("L", "x", {"a": False}, conclusion=False).verdict == "fail"
    assert VerificationRecord("L", "x", {"a": False}, conclusion=True).verdict == "pass"


def test_json_line_exact():
    rec = VerificationRecord("parity", "C~ v=0", {"overfull": True}, True)
    assert rec.to_json_line() == (
        '{"conclusion":true,"hypotheses":{"overfull":true},'
        '"instance_id":"C~ v=0","lemma":"parity","verdict":"pass"}'
    )


def test_json_line_includes_witness_only_when_set():
    plain = VerificationRecord("L", "x", {}, None)
    assert '"witness"' not in plain.to_json_line()
    armed = VerificationRecord("L", "x", {}, False, witness={"edge": [0, 1]})
    assert '"witness":{"edge":[0,1]}' in armed.to_json_line()


def test_roundtrip():
    rec = VerificationRecord("L", "id 7", {"h": False}, None, witness=None)
    back = record_from_json_line(rec.to_json_line())
    assert back == rec
    assert back.verdict == "skipped"


def test_parse_rejects_garbage():
    with pytest.raises(RecordError, match="malformed"):
        record_from_json_line("{not json")
    with pytest.raises(RecordError, match="not an object"):
        record_from_json_line("[1,2]")
    with pytest.raises(RecordError, match="missing key 'lemma'"):
        record_from_json_line('{"instance_id":"x","hypotheses":{},"conclusion":null}')


def test_parse_rejects_stale_verdict():
    line = ('{"conclusion":true,"hypotheses":{},"instance_id":"x",'
            '"lemma":"L","verdict":"fail"}')
    with pytest.raises(RecordError, match="disagrees"):
        record_from_json_line(line)


def test_write_read_roundtrip(tmp_path):
    records = [
        VerificationRecord("L1", "a", {"h": True}, True),
        VerificationRecord("L1", "b", {"h": False}, None),
        VerificationRecord("L2", "c", {}, False, witness={"why": "clash"}),
    ]
    path = str(tmp_path / "log.jsonl")
    assert write_records(path, records) == 3
    assert list(read_records(path)) == records


def test_read_reports_path_and_line(tmp_path):
    path = str(tmp_path / "log.jsonl")
    good = VerificationRecord("L", "x", {}, True).to_json_line()
    with open(path, "w") as fh:
        fh.write(good + "\n\n{broken\n")
    with pytest.raises(RecordError, match=r"log\.jsonl:3: malformed"):
        list(read_records(path))


def test_read_skips_blank_lines(tmp_path):
    path = str(tmp_path / "log.jsonl")
    rec = VerificationRecord("L", "x", {}, True)
    with open(path, "w") as fh:
        fh.write("\n" + rec.to_json_line() + "\n\n")
    assert list(read_records(path)) == [rec]


def test_tally():
    records = [
        VerificationRecord("L", "1", {}, True),
        VerificationRecord("L", "2", {}, True),
        VerificationRecord("L", "3", {}, False),
        VerificationRecord("L", "4", {"h": False}, None),
        VerificationRecord("L", "5", {}, None),
    ]
    assert tally_verdicts(records) == {"pass": 2, "fail": 1, "skipped": 1, "undecided": 1}
