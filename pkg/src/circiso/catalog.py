"""Catalog records, JSON serialization, and reproduction of the orbit tables.

A catalog record is one orbit member: modulus, half-form jumps, the orbit it
belongs to, the witness that relates it to the orbit base, and a provenance
string recording the generating parameters.  The table file regenerated by
:func:`render_annexure` is compared against the transcription checked in at
``data/annexure_golden.txt``; the diff normalizes whitespace only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .circulant import ConnectionSet, make_graph
from .families import PrimeCubeParams, family_orbit

GOLDEN_RESOURCE = "annexure_golden.txt"


@dataclass(frozen=True)
class Witness:
    kind: str
    a: int | None = None
    r: int | None = None
    t: int | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.a is not None:
            out["a"] = self.a
        if self.r is not None:
            out["r"] = self.r
        if self.t is not None:
            out["t"] = self.t
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "Witness":
        return cls(kind=data["kind"], a=data.get("a"), r=data.get("r"), t=data.get("t"))


@dataclass(frozen=True)
class CatalogRecord:
    n: int
    jumps: tuple[int, ...]
    orbit: int
    witness: Witness
    provenance: str

    def __post_init__(self) -> None:
        # jumps must round-trip losslessly and stay canonical
        ConnectionSet(self.n, self.jumps)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "jumps": list(self.jumps),
            "orbit": self.orbit,
            "witness": self.witness.to_json_dict(),
            "provenance": self.provenance,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CatalogRecord":
        return cls(
            n=int(data["n"]),
            jumps=tuple(int(v) for v in data["jumps"]),
            orbit=int(data["orbit"]),
            witness=Witness.from_json_dict(data["witness"]),
            provenance=str(data["provenance"]),
        )


def records_to_json(records: Iterable[CatalogRecord]) -> str:
    return json.dumps([rec.to_json_dict() for rec in records], indent=2) + "\n"


def records_from_json(text: str) -> list[CatalogRecord]:
    return [CatalogRecord.from_json_dict(item) for item in json.loads(text)]


def orbit_records(params: PrimeCubeParams, orbit_id: int = 0) -> list[CatalogRecord]:
    """One record per orbit member; the base carries an identity witness."""
    sets = family_orbit(params)
    provenance = f"family(p={params.p}, n={params.n}, x={params.x}, y={params.y})"
    if params.extras is not None:
        provenance = provenance[:-1] + f", extras={list(params.extras)})"
    records = []
    for j, s in enumerate(sets):
        witness = (
            Witness(kind="identical")
            if j == 0
            else Witness(kind="type2", r=params.p, t=j * params.n)
        )
        records.append(
            CatalogRecord(n=s.n, jumps=s.jumps, orbit=orbit_id, witness=witness, provenance=provenance)
        )
    return records


def annexure_cases() -> list[PrimeCubeParams]:
    """The reference table grid: p in {3,5,7}, n in {1,2}, y = 0.

    For n = 1 only x up to (p-1)/2 appears: the mirror identity makes
    x and p - x generate identical sets, so the larger x are duplicates.
    """
    cases = []
    for p in (3, 5, 7):
        for n in (1, 2):
            xs = range(1, (p - 1) // 2 + 1) if n == 1 else range(1, p)
            for x in xs:
                cases.append(PrimeCubeParams(p=p, n=n, x=x, y=0))
    return cases


def render_annexure() -> str:
    """Every orbit table in publication order, full symmetric listings."""
    blocks = []
    for params in annexure_cases():
        order = params.modulus
        header = (
            f"== order {order} r={params.p} | family p={params.p} "
            f"n={params.n} x={params.x} y={params.y} =="
        )
        rows = [
            f"C_{order}(" + ",".join(str(v) for v in s.expanded()) + ")"
            for s in family_orbit(params)
        ]
        blocks.append("\n".join([header, *rows]))
    return "\n\n".join(blocks) + "\n"


def load_golden() -> str:
    return (resources.files("circiso") / "data" / GOLDEN_RESOURCE).read_text()


def _normalized_lines(text: str) -> list[str]:
    return [" ".join(line.split()) for line in text.splitlines() if line.strip()]


def diff_against_golden(generated: str, golden: str) -> list[str]:
    """Whitespace-normalized line comparison; one entry per mismatching line."""
    gen_lines = _normalized_lines(generated)
    gold_lines = _normalized_lines(golden)
    mismatches = []
    for idx in range(max(len(gen_lines), len(gold_lines))):
        gen = gen_lines[idx] if idx < len(gen_lines) else "<missing>"
        gold = gold_lines[idx] if idx < len(gold_lines) else "<missing>"
        if gen != gold:
            mismatches.append(f"line {idx + 1}: generated {gen!r} != golden {gold!r}")
    return mismatches


def annexure_records() -> list[CatalogRecord]:
    records = []
    for orbit_id, params in enumerate(annexure_cases()):
        records.extend(orbit_records(params, orbit_id=orbit_id))
    return records


def parse_jump_list(n: int, text: str) -> ConnectionSet:
    """Comma-separated jumps; full symmetric listings normalize to half form."""
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse jump list {text!r}") from exc
    if not values:
        raise ValueError("empty jump list")
    return ConnectionSet.from_values(n, values)


def graph_from_args(n: int, text: str):
    return make_graph(n, parse_jump_list(n, text))
