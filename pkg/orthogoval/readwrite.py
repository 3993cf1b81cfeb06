"""Versioned text and JSON formats for planes, CPHFs, covering arrays and
binary matrices.

Every written file carries ``format-version``; readers skip lines starting
with ``#``. Field elements are codes of the field of order ``q`` with its
default modulus unless a plane file records another one.
"""

import json
import os
import re
import tempfile
from pathlib import Path

import numpy as np

from orthogoval.covering import CoveringArray, CphfArray
from orthogoval.exception import FormatError
from orthogoval.finite_field import FieldSpec, ff_from_order
from orthogoval.geometry import PlaneIncidence
from orthogoval.search import BinaryMatrix

__all__ = [
    "FORMAT_VERSION",
    "write_atomic",
    "planes_to_json",
    "planes_from_json",
    "write_planes",
    "read_planes",
    "format_cphf",
    "parse_cphf",
    "write_cphf",
    "read_cphf",
    "format_ca",
    "parse_ca",
    "write_ca",
    "read_ca",
    "format_matrices",
    "parse_matrices",
    "write_matrices",
    "read_matrices",
]

FORMAT_VERSION = 1
_VERSION_LINE = f"# orthogoval format-version {FORMAT_VERSION}"


def write_atomic(path, text):
    """Write `text` to a temporary file next to `path`, then rename it."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FormatError(f"no such file: {path}") from None
    except OSError as err:
        raise FormatError(f"cannot read {path}: {err.strerror}") from None


def _content_lines(text):
    return [line.strip() for line in text.splitlines() if not line.startswith("#")]


def _check_version(text):
    match = re.search(r"format-version\s+(\d+)", text)
    if match and int(match.group(1)) > FORMAT_VERSION:
        raise FormatError(f"format-version {match.group(1)} is newer than supported")


def planes_to_json(planes):
    records = []
    for p in planes:
        coords = p.coordinates
        records.append(
            {
                "kind": p.kind,
                "points": None if coords is None else coords.tolist(),
                "q": p.q,
                "provenance": p.provenance,
                "field": None if p.field is None else p.field.to_dict(),
                "lines": [list(line) for line in p.lines],
                "isomorphism": None if p.isomorphism is None else list(p.isomorphism),
                "completion": None if p.completion is None else list(p.completion),
                "infinite_points": (
                    None if p.infinite_points is None else list(p.infinite_points)
                ),
            }
        )
    doc = {"format_version": FORMAT_VERSION, "planes": records}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _check_points(plane, points):
    """Recorded coordinates must be those of the plane's isomorphism."""
    coords = plane.coordinates
    if points is None and coords is None:
        return
    if points is None or coords is None:
        raise FormatError(
            f"plane {plane.provenance!r}: points and field must be given together"
        )
    points = np.asarray(points)
    if points.shape != coords.shape or not np.array_equal(points, coords):
        raise FormatError(
            f"plane {plane.provenance!r}: points disagree with its isomorphism"
        )


def planes_from_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(f"plane file is not JSON: {err}") from None
    if doc.get("format_version", 0) > FORMAT_VERSION:
        raise FormatError("plane file format is newer than supported")
    planes = []
    for r in doc.get("planes", []):
        if "points" not in r:
            raise FormatError("plane record has no points")
        field = None if r.get("field") is None else FieldSpec.from_dict(r["field"])
        plane = PlaneIncidence(
            r["kind"],
            r["q"],
            tuple(map(tuple, r["lines"])),
            field,
            r.get("provenance", ""),
            r.get("isomorphism"),
            r.get("completion"),
            r.get("infinite_points"),
        )
        _check_points(plane, r["points"])
        planes.append(plane)
    if not planes:
        raise FormatError("plane file holds no planes")
    return planes


def write_planes(planes, path):
    write_atomic(path, planes_to_json(planes))


def read_planes(path):
    """Planes of a plane file, or of every ``*.json`` file of a directory in
    name order."""
    path = Path(path)
    if path.is_dir():
        files = sorted(path.glob("*.json"))
        if not files:
            raise FormatError(f"no plane files in {path}")
        return [plane for f in files for plane in planes_from_json(_read(f))]
    return planes_from_json(_read(path))


def format_cphf(cphf):
    index = "?" if cphf.index is None else cphf.index
    header = (
        f"CPHF n={cphf.n} t=3 k={cphf.k} q={cphf.q} sherwood={int(cphf.sherwood)} "
        f"extended={int(cphf.extended)} lambda={index}"
    )
    body = [
        " ".join(",".join(str(c) for c in entry) for entry in row)
        for row in cphf.entries.tolist()
    ]
    return "\n".join([_VERSION_LINE, header, *body]) + "\n"


def parse_cphf(text):
    _check_version(text)
    lines = [line for line in _content_lines(text) if line]
    if not lines or not lines[0].startswith("CPHF"):
        raise FormatError("missing CPHF header")
    fields = dict(item.split("=", 1) for item in lines[0].split()[1:])
    try:
        n, k, q = int(fields["n"]), int(fields["k"]), int(fields["q"])
        rows = [
            [[int(c) for c in entry.split(",")] for entry in line.split()]
            for line in lines[1:]
        ]
        entries = np.array(rows, dtype=np.int64)
    except (KeyError, ValueError) as err:
        raise FormatError(f"malformed CPHF: {err}") from None
    if entries.shape != (n, k, 3):
        raise FormatError(f"CPHF body has shape {entries.shape}, header {(n, k, 3)}")
    index = None if fields.get("lambda", "?") == "?" else int(fields["lambda"])
    return CphfArray(
        entries,
        ff_from_order(q),
        sherwood=fields.get("sherwood") == "1",
        extended=fields.get("extended") == "1",
        index=index,
    )


def write_cphf(cphf, path):
    write_atomic(path, format_cphf(cphf))


def read_cphf(path):
    return parse_cphf(_read(path))


def format_ca(ca):
    header = f"CA({ca.N};3,{ca.k},{ca.v}) lambda={ca.index}"
    body = [" ".join(map(str, row)) for row in ca.rows.tolist()]
    return "\n".join([_VERSION_LINE, header, *body]) + "\n"


def parse_ca(text):
    _check_version(text)
    lines = [line for line in _content_lines(text) if line]
    header = lines[0] if lines else ""
    match = re.fullmatch(r"CA\((\d+);3,(\d+),(\d+)\)\s+lambda=(\d+)", header)
    if match is None:
        raise FormatError("missing CA header")
    N, k, v, index = (int(g) for g in match.groups())
    try:
        rows = np.array([[int(s) for s in line.split()] for line in lines[1:]])
    except ValueError as err:
        raise FormatError(f"malformed CA row: {err}") from None
    if rows.shape != (N, k):
        raise FormatError(f"CA body has shape {rows.shape}, header {(N, k)}")
    return CoveringArray(rows, v, index)


def write_ca(ca, path):
    write_atomic(path, format_ca(ca))


def read_ca(path):
    return parse_ca(_read(path))


def format_matrices(matrices):
    blocks = [m.format() for m in matrices]
    return _VERSION_LINE + "\n" + "\n\n".join(blocks) + "\n"


def parse_matrices(text):
    """Blocks of rows separated by blank lines; spaces inside a row are ignored."""
    _check_version(text)
    matrices, rows = [], []
    for line in _content_lines(text) + [""]:
        if line:
            bits = line.replace(" ", "")
            if set(bits) - {"0", "1"}:
                raise FormatError(f"not a row of bits: {line!r}")
            rows.append(bits)
        elif rows:
            matrices.append(BinaryMatrix.from_bits(rows))
            rows = []
    return matrices


def write_matrices(matrices, path):
    write_atomic(path, format_matrices(matrices))


def read_matrices(path):
    return parse_matrices(_read(path))
