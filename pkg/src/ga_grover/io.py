"""Trajectory export: CSV (``k,px,py,pz,success_prob``) and JSON records.

Floats are written in shortest round-trip form, so files parse back to
identical values.  Statevector runs carry no polarization; their ``px``,
``py``, ``pz`` fields are empty in CSV and ``null`` in JSON.
"""

import csv
import io
import json
from typing import NamedTuple

FIELDS = ("k", "px", "py", "pz", "success_prob")


class Record(NamedTuple):
    k: int
    px: float | None
    py: float | None
    pz: float | None
    success_prob: float


def trajectory_records(trajectory):
    return [Record(p.k, *p.polarization, p.success_probability) for p in trajectory]


def probability_records(probs):
    return [Record(k, None, None, None, float(p)) for k, p in enumerate(probs)]


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def to_csv(records):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for rec in records:
        writer.writerow([_fmt(v) for v in rec])
    return buf.getvalue()


def from_csv(text):
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != FIELDS:
        raise ValueError(f"expected CSV header {','.join(FIELDS)}")
    out = []
    for row in reader:
        vals = [float(row[f]) if row[f] != "" else None for f in FIELDS[1:]]
        out.append(Record(int(row["k"]), *vals))
    return out


def to_json(records):
    return json.dumps([dict(zip(FIELDS, rec)) for rec in records], indent=1) + "\n"


def from_json(text):
    return [
        Record(int(item["k"]), item["px"], item["py"], item["pz"], item["success_prob"])
        for item in json.loads(text)
    ]


def dumps(records, fmt):
    if fmt == "csv":
        return to_csv(records)
    if fmt == "json":
        return to_json(records)
    raise ValueError(f"unknown format {fmt!r}")


def loads(text, fmt):
    if fmt == "csv":
        return from_csv(text)
    if fmt == "json":
        return from_json(text)
    raise ValueError(f"unknown format {fmt!r}")
