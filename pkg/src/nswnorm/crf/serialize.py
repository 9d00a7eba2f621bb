"""Model file reader/writer.

Text-based key/value format behind an 8-byte magic header; layout
documented in docs/model_format.md.  Floats are written with repr() so the
round-trip is bit-exact; all-zero emission rows are pruned on save (they
are behaviorally identical to unknown features).
"""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np

from ..errors import ValidationError
from .model import CrfModel

MAGIC = b"NSWCRF01"
FORMAT_VERSION = 1
TIE_BREAK = "lowest-index"


def _check_text(kind: str, value: str) -> str:
    if "\t" in value or "\n" in value or "\r" in value:
        raise ValidationError(f"{kind} may not contain tabs or newlines: {value!r}")
    return value


def save_model(model: CrfModel, path: str | os.PathLike) -> None:
    """Write the model; weights equal to zero are omitted."""
    for lab in model.labels:
        _check_text("label", lab)
        if "," in lab:
            raise ValidationError(f"label may not contain commas: {lab!r}")
    keep = [
        (fid, feat)
        for feat, fid in model.feature_index.items()
        if np.any(model.emit[fid] != 0.0)
    ]
    keep.sort()
    lines: list[str] = []
    lines.append(f"format\t{FORMAT_VERSION}")
    lines.append(f"template_version\t{model.template_version}")
    lines.append(f"optimizer\t{_check_text('optimizer', model.optimizer)}")
    lines.append(f"tie_break\t{TIE_BREAK}")
    lines.append("labels\t" + ",".join(model.labels))
    lines.append(f"features\t{len(keep)}")
    for new_id, (fid, feat) in enumerate(keep):
        lines.append(f"f\t{new_id}\t{_check_text('feature', feat)}")
    # float(w): repr of a Python float is the shortest exact form; numpy
    # scalar repr is wrapped in the dtype name and would not parse back
    for j, w in enumerate(model.begin):
        if w != 0.0:
            lines.append(f"b\t{j}\t{float(w)!r}")
    for j, w in enumerate(model.end):
        if w != 0.0:
            lines.append(f"e\t{j}\t{float(w)!r}")
    for i, row in enumerate(model.trans):
        for j, w in enumerate(row):
            if w != 0.0:
                lines.append(f"t\t{i}\t{j}\t{float(w)!r}")
    for new_id, (fid, _) in enumerate(keep):
        row = model.emit[fid]
        for j, w in enumerate(row):
            if w != 0.0:
                lines.append(f"w\t{new_id}\t{j}\t{float(w)!r}")
    data = MAGIC + b"\n" + "\n".join(lines).encode("utf-8") + b"\n"
    Path(path).write_bytes(data)


def load_model(path: str | os.PathLike) -> CrfModel:
    """Read a model file; raises ValidationError on any malformation."""
    data = Path(path).read_bytes()
    if not data.startswith(MAGIC + b"\n"):
        raise ValidationError(f"{path}: not a model file (bad magic)")
    text = data[len(MAGIC) + 1 :].decode("utf-8")

    header: dict[str, str] = {}
    lines = text.splitlines()
    pos = len(lines)
    for i, line in enumerate(lines):
        key, _, value = line.partition("\t")
        if key in ("f", "b", "e", "t", "w"):
            pos = i
            break
        header[key] = value

    def need(key: str) -> str:
        if key not in header:
            raise ValidationError(f"{path}: missing header field {key!r}")
        return header[key]

    if need("format") != str(FORMAT_VERSION):
        raise ValidationError(
            f"{path}: unsupported model format version {header['format']!r}"
        )
    template_version = int(need("template_version"))
    optimizer = need("optimizer")
    labels = tuple(need("labels").split(","))
    num_features = int(need("features"))

    L = len(labels)
    features: list[str] = []
    begin = np.zeros(L)
    end = np.zeros(L)
    trans = np.zeros((L, L))
    emit = np.zeros((num_features, L))
    def index(field: str) -> int:
        i = int(field)
        if i < 0:
            # numpy would wrap a negative index instead of failing
            raise ValueError(f"negative index {i}")
        return i

    for lineno, line in enumerate(lines[pos:], start=pos + 2):
        if not line:
            continue
        parts = line.split("\t")
        try:
            kind = parts[0]
            if kind == "f":
                fid = int(parts[1])
                if fid != len(features):
                    raise ValidationError(
                        f"{path}:{lineno}: feature ids must be consecutive"
                    )
                features.append(parts[2])
            elif kind == "b":
                begin[index(parts[1])] = float(parts[2])
            elif kind == "e":
                end[index(parts[1])] = float(parts[2])
            elif kind == "t":
                trans[index(parts[1]), index(parts[2])] = float(parts[3])
            elif kind == "w":
                emit[index(parts[1]), index(parts[2])] = float(parts[3])
            else:
                raise ValidationError(f"{path}:{lineno}: unknown record {kind!r}")
        except (IndexError, ValueError) as exc:
            raise ValidationError(f"{path}:{lineno}: bad record: {exc}") from None
    if len(features) != num_features:
        raise ValidationError(
            f"{path}: header promises {num_features} features, found {len(features)}"
        )
    return CrfModel(
        labels=labels,
        feature_index={f: i for i, f in enumerate(features)},
        emit=emit,
        trans=trans,
        begin=begin,
        end=end,
        template_version=template_version,
        optimizer=optimizer,
    )
