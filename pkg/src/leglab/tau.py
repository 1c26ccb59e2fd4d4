"""Rules for the concordance invariant tau and upper bounds on tb + |r|.

Every bound here is of the form ``tb + |r| <= B`` (or ``tb <= B`` for the
Kauffman polynomial) for all Legendrian representatives of a knot:

========== ==================
bennequin  ``2g - 1``
tau        ``2 tau - 1``
signature  ``-sigma - 1`` (alternating or perfect knots)
four-ball  ``2 g* - 1``
homfly     ``-maxdeg_a P - 1``
kauffman   ``-maxdeg_a F - 1`` (bounds tb only)
========== ==================

A representative then pins tau from below, ``tau >= (tb + |r| + 1) / 2``,
while ``|tau| <= g* <= u`` pins it from above.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .diagram import KnotMetadata
from .front import ClassicalInvariants
from .laurent import LaurentPoly2
from .skein import homfly_bound, kauffman_bound

__all__ = [
    "TauEstimate",
    "BoundEntry",
    "BoundReport",
    "TauError",
    "InvalidRepresentativeError",
    "RuleNotApplicable",
    "BoundViolation",
    "tau_torus",
    "tau_alternating",
    "tau_mirror",
    "tau_connected_sum",
    "tau_from_metadata",
    "sandwich",
    "whitehead_double_tau",
    "bound_table",
]

PROVENANCE_TAGS = (
    "torus-formula",
    "alternating-signature",
    "mirror",
    "connected-sum",
    "sandwich",
    "whitehead",
    "metadata",
)


class TauError(ValueError):
    code = "tau-error"


class InvalidRepresentativeError(TauError):
    """tb + r is even, so the numbers cannot come from a Legendrian knot."""

    code = "invalid-representative"


class RuleNotApplicable(TauError):
    code = "rule-not-applicable"


class BoundViolation(TauError):
    """A realized tb/r pair beats a bound that is supposed to hold."""

    code = "bound-violation"


@dataclass(frozen=True)
class TauEstimate:
    lower: int
    upper: int
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "provenance", tuple(self.provenance))
        if self.lower > self.upper:
            raise TauError(f"empty tau interval [{self.lower}, {self.upper}]")
        for tag in self.provenance:
            if tag not in PROVENANCE_TAGS:
                raise ValueError(f"unknown provenance tag {tag!r}")

    @classmethod
    def exact(cls, value: int, *tags: str) -> TauEstimate:
        return cls(value, value, tags)

    @property
    def determined(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.determined:
            raise TauError(f"tau is only known to lie in [{self.lower}, {self.upper}]")
        return self.lower

    def intersect(self, other: TauEstimate) -> TauEstimate:
        tags = self.provenance + tuple(t for t in other.provenance if t not in self.provenance)
        return TauEstimate(max(self.lower, other.lower), min(self.upper, other.upper), tags)

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "determined": self.determined,
            "provenance": list(self.provenance),
        }


def tau_torus(p: int, q: int) -> int:
    """tau of the (p, q) torus knot; ``p < 0`` means the mirror image."""
    if abs(p) < 2 or q < 2 or gcd(abs(p), q) != 1:
        raise ValueError(f"({p}, {q}) is not a nontrivial torus knot")
    t = (abs(p) - 1) * (q - 1) // 2
    return -t if p < 0 else t


def tau_alternating(sigma: int) -> int:
    if sigma % 2:
        raise ValueError("a knot signature is even")
    return -sigma // 2


def tau_mirror(t: int) -> int:
    return -t


def tau_connected_sum(t1: int, t2: int) -> int:
    return t1 + t2


def tau_from_metadata(meta: KnotMetadata) -> TauEstimate | None:
    """Exact tau when the metadata names a torus knot or a perfect knot."""
    if meta.torus_params is not None:
        return TauEstimate.exact(tau_torus(*meta.torus_params), "torus-formula", "metadata")
    if meta.alternating or meta.perfect:
        return TauEstimate.exact(tau_alternating(meta.signature), "alternating-signature", "metadata")
    return None


def _check_parity(tb: int, r: int) -> None:
    if (tb + r) % 2 == 0:
        raise InvalidRepresentativeError(f"tb + r = {tb + r} is even")


def sandwich(tb: int, r: int, unknotting_upper: int) -> TauEstimate:
    """Squeeze tau between a Legendrian representative and an unknotting bound.

    Both orientations of the representative are tried, which amounts to
    using ``|r|``.
    """
    _check_parity(tb, r)
    if unknotting_upper < 0:
        raise ValueError("unknotting bound must be non-negative")
    lower = max((tb + s * r + 1) // 2 for s in (1, -1))
    lower = max(lower, -unknotting_upper)
    if lower > unknotting_upper:
        raise BoundViolation(
            f"representative forces tau >= {lower} but the unknotting bound gives tau <= {unknotting_upper}"
        )
    return TauEstimate(lower, unknotting_upper, ("sandwich",))


def whitehead_double_tau(has_positive_tb_rep: bool) -> TauEstimate:
    """tau of an iterated positive untwisted Whitehead double.

    Only applies when the companion has a representative with tb > 0; then
    the answer is 1 for every iterate.
    """
    if not has_positive_tb_rep:
        raise RuleNotApplicable("companion has no representative with positive tb")
    return TauEstimate.exact(1, "whitehead")


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: int | None
    applicable: bool
    satisfied: bool | None
    slack: int | None
    quantity: str = "tb+|r|"
    note: str = ""

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "value": self.value,
            "applicable": self.applicable,
            "satisfied": self.satisfied,
            "slack": self.slack,
            "quantity": self.quantity,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class BoundReport:
    name: str
    tb: int
    r: int
    parity_ok: bool
    bounds: tuple[BoundEntry, ...]
    tau: TauEstimate | None = None
    notes: tuple[str, ...] = field(default=())

    def bound(self, name: str) -> BoundEntry:
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)

    def best(self) -> BoundEntry | None:
        """The strongest applicable bound on tb + |r|."""
        live = [b for b in self.bounds if b.applicable and b.quantity == "tb+|r|"]
        return min(live, key=lambda b: b.value) if live else None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "tb": self.tb,
            "r": self.r,
            "parity_ok": self.parity_ok,
            "bounds": [b.to_dict() for b in self.bounds],
            "tau": self.tau.to_dict() if self.tau is not None else None,
            "notes": list(self.notes),
        }


def _entry(name, value, realized, quantity="tb+|r|", note=""):
    if value is None:
        return BoundEntry(name, None, False, None, None, quantity, note)
    return BoundEntry(name, value, True, realized <= value, value - realized, quantity, note)


def bound_table(
    inv: ClassicalInvariants,
    meta: KnotMetadata,
    tau: TauEstimate | None = None,
    polys: tuple[LaurentPoly2 | None, LaurentPoly2 | None] | None = None,
    name: str | None = None,
) -> BoundReport:
    """Evaluate every bound against a realized representative.

    ``polys`` is ``(homfly, kauffman)``; either may be None. A violated
    applicable bound raises :class:`BoundViolation`.
    """
    tb, r = inv.tb, inv.r
    s = tb + abs(r)
    if tau is None:
        tau = tau_from_metadata(meta)

    genus_note = "" if meta.torus_params else "Seifert-diagram genus bound, not necessarily sharp"
    entries = [_entry("bennequin", 2 * meta.seifert_genus_upper - 1, s, note=genus_note)]
    entries.append(_entry("tau", 2 * tau.value - 1 if tau is not None and tau.determined else None, s))
    sig_applies = bool(meta.alternating or meta.perfect)
    entries.append(_entry("signature", -meta.signature - 1 if sig_applies else None, s))
    g4 = meta.fourball_genus
    entries.append(_entry("four-ball", 2 * g4 - 1 if g4 is not None else None, s))
    P, F = polys if polys is not None else (None, None)
    entries.append(_entry("homfly", homfly_bound(P) if P is not None else None, s))
    entries.append(_entry("kauffman", kauffman_bound(F) if F is not None else None, tb, quantity="tb"))

    bad = [e for e in entries if e.applicable and not e.satisfied]
    label = name if name is not None else meta.name
    if bad:
        e = bad[0]
        raise BoundViolation(
            f"{label}: realized {e.quantity} = {tb if e.quantity == 'tb' else s} exceeds {e.name} bound {e.value}"
        )
    notes = []
    if sig_applies and meta.signature > 0:
        notes.append("tb(K) can never be positive")
    parity_ok = (tb + r) % 2 == 1
    return BoundReport(label, tb, r, parity_ok, tuple(entries), tau, tuple(notes))
