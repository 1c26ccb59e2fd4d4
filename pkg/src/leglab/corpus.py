"""Knot corpus: Legendrian representatives with metadata and pinned results.

A corpus entry is a JSON object::

    {"front": {...}, "metadata": {...}, "expected": {...},
     "unknotting_certificate": [...]}

Certificate indices refer to the crossings of ``front_to_pd`` applied to the
canonically oriented front, which are numbered in front order.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .diagram import KnotMetadata, PDCode, determinant, front_to_pd, signature, simplify, switch_crossings
from .front import FrontDiagram, FrontError, _with_orientation
from .skein import DEFAULT_CROSSING_CAP, CrossingCapError, homfly, kauffman
from .tau import BoundViolation, TauError, TauEstimate, bound_table, sandwich, tau_from_metadata

__all__ = [
    "CorpusEntry",
    "CorpusError",
    "EntryResult",
    "CorpusReport",
    "verify_unknotting",
    "load_entry",
    "load_corpus",
    "default_corpus_dir",
    "check_entry",
    "corpus_check",
]


class CorpusError(ValueError):
    code = "corpus-error"


@dataclass(frozen=True)
class CorpusEntry:
    front: FrontDiagram
    metadata: KnotMetadata
    expected: dict = field(default_factory=dict, compare=False)
    unknotting_certificate: tuple[int, ...] | None = None
    source: str = field(default="", compare=False)

    @property
    def name(self) -> str:
        return self.metadata.name

    @classmethod
    def from_dict(cls, data: dict, source: str = "") -> CorpusEntry:
        for key in ("front", "metadata"):
            if key not in data:
                raise CorpusError(f"{source or 'entry'}: missing {key!r}")
        cert = data.get("unknotting_certificate")
        return cls(
            FrontDiagram.from_dict(data["front"]),
            KnotMetadata.from_dict(data["metadata"]),
            dict(data.get("expected") or {}),
            tuple(cert) if cert is not None else None,
            source,
        )

    def to_dict(self) -> dict:
        out = {"front": self.front.to_dict(), "metadata": self.metadata.to_dict(), "expected": self.expected}
        if self.unknotting_certificate is not None:
            out["unknotting_certificate"] = list(self.unknotting_certificate)
        return out


def verify_unknotting(pd: PDCode, switches, cap: int | None = None) -> str:
    """Check that changing ``switches`` turns ``pd`` into an unknot.

    Returns ``"fail"`` when the determinant or HOMFLY polynomial of the
    switched diagram is not that of the unknot, ``"pass"`` when greedy
    Reidemeister I/II moves remove every crossing, and ``"inconclusive"``
    otherwise (trivial polynomials do not prove a knot is trivial).
    """
    q = switch_crossings(pd, list(switches))
    if determinant(q) != 1:
        return "fail"
    if homfly(q, cap=cap) != 1:
        return "fail"
    return "pass" if not simplify(q).crossings else "inconclusive"


def load_entry(path: str | Path) -> CorpusEntry:
    path = Path(path)
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{path.name}: invalid JSON ({exc})") from exc
    return CorpusEntry.from_dict(data, source=path.name)


def load_corpus(directory: str | Path) -> list[CorpusEntry]:
    directory = Path(directory)
    if not directory.is_dir():
        raise CorpusError(f"{directory} is not a directory")
    entries = [load_entry(p) for p in sorted(directory.glob("*.json"))]
    return sorted(entries, key=lambda e: e.name)


def default_corpus_dir() -> Path:
    env = os.environ.get("LEGLAB_CORPUS")
    if env:
        return Path(env)
    return Path(str(resources.files("leglab") / "corpus"))


@dataclass
class EntryResult:
    name: str
    values: dict
    mismatches: list[tuple[str, object, object]]
    errors: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.errors

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "values": self.values,
            "mismatches": [{"field": f, "expected": e, "actual": a} for f, e, a in self.mismatches],
            "errors": self.errors,
        }


def _tau_estimate(tb: int, r: int, meta: KnotMetadata) -> TauEstimate | None:
    est = tau_from_metadata(meta)
    if meta.unknotting_upper is not None:
        sw = sandwich(tb, r, meta.unknotting_upper)
        est = sw if est is None else est.intersect(sw)
    return est


def check_entry(entry: CorpusEntry, cap: int = DEFAULT_CROSSING_CAP, reverse: bool = False) -> EntryResult:
    values: dict = {}
    errors: list[str] = []
    try:
        f = _with_orientation(entry.front, reverse)
    except FrontError as exc:
        return EntryResult(entry.name, values, [], [f"front: {exc}"])
    inv = f.invariants
    values.update(writhe=inv.writhe, tb=inv.tb, r=inv.r)
    pd = front_to_pd(f)
    values["crossings"] = len(pd)
    values["signature"] = signature(pd)
    values["determinant"] = determinant(pd)
    polys = None
    if len(pd) <= cap:
        P, F = homfly(pd, cap=cap), kauffman(pd, cap=cap)
        polys = (P, F)
        values["homfly"] = P.to_string()
        values["kauffman"] = F.to_string()
    else:
        values["polynomials"] = f"skipped: {len(pd)} crossings exceeds the cap of {cap}"

    tau = None
    try:
        tau = _tau_estimate(inv.tb, inv.r, entry.metadata)
    except TauError as exc:
        errors.append(f"tau: {exc}")
    if tau is not None:
        values["tau"] = tau.to_dict()
    try:
        report = bound_table(inv, entry.metadata, tau, polys, name=entry.name)
        values["bounds"] = {b.name: b.value for b in report.bounds if b.applicable}
        values["parity_ok"] = report.parity_ok
        if not report.parity_ok:
            errors.append("parity: tb + r is even")
        if report.notes:
            values["notes"] = list(report.notes)
    except BoundViolation as exc:
        errors.append(f"bounds: {exc}")

    if values["signature"] != entry.metadata.signature:
        errors.append(f"signature: metadata says {entry.metadata.signature}, diagram gives {values['signature']}")

    if entry.unknotting_certificate is not None:
        cert = list(entry.unknotting_certificate)
        if entry.metadata.unknotting_upper is not None and len(cert) > entry.metadata.unknotting_upper:
            errors.append("certificate: longer than the stated unknotting bound")
        try:
            status = verify_unknotting(pd, cert, cap=max(cap, len(pd)))
        except (ValueError, CrossingCapError) as exc:
            status = f"error: {exc}"
        values["certificate"] = status
        if status not in ("pass", "inconclusive"):
            errors.append(f"certificate: {status}")

    mismatches = []
    for key in sorted(entry.expected):
        want = entry.expected[key]
        if key == "r" and reverse and isinstance(want, int):
            # pinned values use the canonical orientation
            want = -want
        if key == "tau":
            got = values.get("tau")
            if isinstance(want, int):
                got = got["lower"] if got and got["determined"] else got
            elif got is not None:
                got = {k: got[k] for k in want}
        elif key == "bounds":
            have = values.get("bounds", {})
            got = {k: have.get(k) for k in want}
        else:
            got = values.get(key)
        if got != want:
            mismatches.append((key, want, got))
    return EntryResult(entry.name, values, mismatches, errors)


@dataclass
class CorpusReport:
    results: list[EntryResult]

    @property
    def ok(self) -> bool:
        return bool(self.results) and all(r.ok for r in self.results)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "entries": [r.to_dict() for r in self.results]}

    def to_table(self) -> str:
        head = f"{'name':<16}{'tb':>5}{'r':>4}{'tau':>9}{'best':>6}  status"
        lines = [head, "-" * len(head)]
        for res in self.results:
            v = res.values
            t = v.get("tau")
            tau = "-" if t is None else (str(t["lower"]) if t["determined"] else f"[{t['lower']},{t['upper']}]")
            rb = [b for k, b in v.get("bounds", {}).items() if k != "kauffman"]
            best = str(min(rb)) if rb else "-"
            status = "ok" if res.ok else "FAIL"
            lines.append(f"{res.name:<16}{v.get('tb', '-'):>5}{v.get('r', '-'):>4}{tau:>9}{best:>6}  {status}")
            for fld, want, got in res.mismatches:
                lines.append(f"  mismatch {fld}: expected {want!r}, got {got!r}")
            for err in res.errors:
                lines.append(f"  error {err}")
        passed = sum(r.ok for r in self.results)
        lines.append(f"{passed}/{len(self.results)} entries pass")
        return "\n".join(lines)


def corpus_check(directory: str | Path | None = None, cap: int = DEFAULT_CROSSING_CAP, reverse: bool = False) -> CorpusReport:
    """Check every entry of a corpus directory, in name order."""
    directory = Path(directory) if directory is not None else default_corpus_dir()
    entries = load_corpus(directory)
    if not entries:
        raise CorpusError(f"no entries in {directory}")
    return CorpusReport([check_entry(e, cap, reverse) for e in entries])

