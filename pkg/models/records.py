"""
Structured records and tables

Triples serialize to flat records with a fixed key set; JSON text is always
rendered with sorted keys so that equal records give equal bytes.
"""
import csv
import io
import json
import logging
from typing import Any, Dict, Iterable, List, Mapping, Sequence, TextIO

from models.errors import ParameterError
from models.inertial import EndoClassDescriptor, Side, SimpleInertialTriple

logger = logging.getLogger(__name__)

TRIPLE_KEYS = ("n", "p", "q", "delta", "e", "f", "r", "lift", "orbit_canonical", "side", "char")


def triple_to_record(t: SimpleInertialTriple) -> Dict[str, Any]:
    record = dict(t.endo.to_dict())
    record.update({
        "n": t.n,
        "lift": t.lift.gamma,
        "orbit_canonical": t.orbit.canonical,
        "side": t.side.value,
        "char": t.char,
    })
    return record


def triple_from_record(record: Mapping[str, Any]) -> SimpleInertialTriple:
    missing = [key for key in TRIPLE_KEYS if key not in record]
    if missing:
        raise ParameterError(f"triple record is missing {', '.join(missing)}")
    extra = sorted(set(record) - set(TRIPLE_KEYS))
    if extra:
        raise ParameterError(f"triple record has unknown keys {', '.join(extra)}")

    integer_keys = [key for key in TRIPLE_KEYS if key != "side"]
    for key in integer_keys:
        # bool is an int subclass; a record with true/false here is malformed
        if not isinstance(record[key], int) or isinstance(record[key], bool):
            raise ParameterError(f"triple record field {key}={record[key]!r} is not an integer")
    try:
        side = Side(record["side"])
    except ValueError:
        raise ParameterError(f"unknown side {record['side']!r}; expected GL or Galois")

    endo = EndoClassDescriptor(record["p"], record["q"], record["delta"], record["e"], record["f"], record["r"])
    if not 0 <= record["lift"] < endo.f:
        raise ParameterError(f"lift {record['lift']} is not a residue mod f={endo.f}")
    t = SimpleInertialTriple.build(record["n"], endo, record["lift"], record["orbit_canonical"], side, record["char"])
    if t.orbit.canonical != record["orbit_canonical"]:
        raise ParameterError(
            f"orbit_canonical={record['orbit_canonical']} is not the minimal member of its orbit {t.orbit}"
        )
    return t


def dumps(record: Any) -> str:
    return json.dumps(record, sort_keys=True)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParameterError(f"malformed JSON record: {e}")


def triple_to_json(t: SimpleInertialTriple) -> str:
    return dumps(triple_to_record(t))


def triple_from_json(text: str) -> SimpleInertialTriple:
    record = loads(text)
    if not isinstance(record, dict):
        raise ParameterError("a triple record must be a JSON object")
    return triple_from_record(record)


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "{" + ",".join(_cell(v) for v in value) + "}"
    if isinstance(value, dict):
        return dumps(value)
    if value is None:
        return ""
    return str(value)


def write_tsv(rows: Iterable[Mapping[str, Any]], columns: Sequence[str], stream: TextIO,
              header: bool = True) -> int:
    """Optional header plus one line per row; returns the number of data rows"""
    writer = csv.writer(stream, delimiter="\t", lineterminator="\n")
    if header:
        writer.writerow(columns)
    count = 0
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
        count += 1
    return count


def tsv_text(rows: Iterable[Mapping[str, Any]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    write_tsv(rows, columns, buffer)
    return buffer.getvalue()


def write_json_lines(records: Iterable[Any], stream: TextIO) -> int:
    count = 0
    for record in records:
        stream.write(dumps(record) + "\n")
        count += 1
    return count


def columns_of(rows: List[Mapping[str, Any]]) -> List[str]:
    """Keys in order of first appearance"""
    seen: Dict[str, None] = {}
    for row in rows:
        for key in row:
            seen.setdefault(key, None)
    return list(seen)
