"""Planar diagram codes and classical smooth-knot quantities.

A PD crossing ``(i, j, k, l)`` lists the four incident arcs counterclockwise,
starting from the incoming under-arc ``i``; the under strand runs ``i -> k``.
Arcs are labelled by consecutive integers along the knot.

Signature uses the Gordon-Litherland formula on a checkerboard colouring,
``sigma = mu - sign(G)``, where ``G`` is the Goeritz form of the unshaded
regions and ``mu`` the correction from type II crossings. With the colour and
crossing conventions below this gives the right-handed trefoil signature -2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .front import OrientedFront

__all__ = [
    "PDCode",
    "PDError",
    "front_to_pd",
    "mirror",
    "switch_crossings",
    "simplify",
    "seifert_circles",
    "seifert_genus_upper",
    "goeritz_matrix",
    "signature",
    "determinant",
    "symmetric_signature",
    "braid_to_pd",
    "torus_pd",
    "KnotMetadata",
]


class PDError(ValueError):
    code = "invalid-pd"


_X = re.compile(r"X\s*\[?\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]]")


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in c) for c in self.crossings))
        for c in self.crossings:
            if len(c) != 4:
                raise PDError(f"crossing {c} does not have four arcs")
        counts: dict[int, int] = {}
        for c in self.crossings:
            for a in c:
                counts[a] = counts.get(a, 0) + 1
        bad = sorted(a for a, n in counts.items() if n != 2)
        if bad:
            raise PDError(f"arcs {bad} do not appear exactly twice")
        if counts:
            lo, hi = min(counts), max(counts)
            if hi - lo + 1 != len(counts):
                raise PDError("arc labels are not consecutive")

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> list[int]:
        return sorted({a for c in self.crossings for a in c})

    def _succ(self):
        arcs = self.arcs
        lo, hi = arcs[0], arcs[-1]
        return lambda x: lo if x == hi else x + 1

    def signs(self) -> tuple[int, ...]:
        """Crossing signs, read off from the arc labelling."""
        if not self.crossings:
            return ()
        succ = self._succ()
        out = []
        for i, j, k, l in self.crossings:
            fwd, back = succ(l) == j, succ(j) == l
            if fwd and back:
                # only possible with two arcs: the over strand enters on arc k
                out.append(1 if l == k else -1)
            elif fwd:
                out.append(1)
            elif back:
                out.append(-1)
            else:
                raise PDError(f"over strand of X{(i, j, k, l)} is not labelled consecutively")
        return tuple(out)

    @property
    def writhe(self) -> int:
        return sum(self.signs())

    def to_text(self) -> str:
        inner = ", ".join("X(%d,%d,%d,%d)" % c for c in self.crossings)
        return f"PD[{inner}]"

    @classmethod
    def parse(cls, text: str) -> PDCode:
        text = text.strip()
        if not (text.startswith("PD[") and text.endswith("]")):
            raise PDError(f"not a PD code: {text!r}")
        body = text[3:-1]
        crossings = [tuple(int(g) for g in m.groups()) for m in _X.finditer(body)]
        if len(crossings) != body.count("X"):
            raise PDError(f"could not parse every crossing in {text!r}")
        return cls(tuple(crossings))

    def __str__(self) -> str:
        return self.to_text()


def _relabel(crossings: Sequence[Sequence[int]], signs: Sequence[int]) -> PDCode:
    """Renumber arcs 1..2n along the traversal; ``crossings`` use arbitrary arc ids."""
    n = len(crossings)
    if n == 0:
        return PDCode(())
    nxt: dict[int, int] = {}
    for (i, j, k, l), s in zip(crossings, signs):
        nxt[i] = k
        if s > 0:
            nxt[l] = j
        else:
            nxt[j] = l
    start = crossings[0][0]
    order = [start]
    a = nxt[start]
    while a != start:
        order.append(a)
        a = nxt[a]
    if len(order) != 2 * n:
        raise PDError("diagram has more than one component")
    label = {a: t + 1 for t, a in enumerate(order)}
    return PDCode(tuple(tuple(label[a] for a in c) for c in crossings))


def front_to_pd(f: OrientedFront) -> PDCode:
    """Round the cusps of a front; crossings keep the front's over/under data."""
    tr = f.trace
    path = f.path()
    events = f.diagram.events

    def through(t):
        seg, d = path[t]
        return tr.end[seg] if d > 0 else tr.start[seg]

    m = len(path)
    firsts = [t for t in range(m) if events[through(t)].kind == "X"]
    if not firsts:
        return PDCode(())
    t0 = (firsts[0] + 1) % m
    arc: dict[int, int] = {}
    label = 1
    for step in range(m):
        t = (t0 + step) % m
        seg, _ = path[t]
        arc[seg] = label
        if events[through(t)].kind == "X":
            label += 1
    crossings = []
    for k, ev in enumerate(events):
        if ev.kind != "X":
            continue
        up_in, lo_in = tr.ins[k]
        up_out, lo_out = tr.outs[k]
        nw, sw, ne, se = arc[up_in], arc[lo_in], arc[up_out], arc[lo_out]
        # the ascending strand sw -> ne is the under strand
        if f.directions[lo_in] > 0:
            crossings.append((sw, se, ne, nw))
        else:
            crossings.append((ne, nw, sw, se))
    return PDCode(tuple(crossings))


def mirror(pd: PDCode) -> PDCode:
    out = []
    for (i, j, k, l), s in zip(pd.crossings, pd.signs()):
        # the former over strand becomes the under strand
        out.append((l, i, j, k) if s > 0 else (j, k, l, i))
    return PDCode(tuple(out))


def switch_crossings(pd: PDCode, indices: Sequence[int]) -> PDCode:
    """Change the listed crossings (0-based) from over to under."""
    picked = set()
    for c in indices:
        if not 0 <= c < len(pd.crossings):
            raise PDError(f"crossing index {c} out of range for {len(pd.crossings)} crossings")
        picked.add(c)
    out = []
    for c, ((i, j, k, l), s) in enumerate(zip(pd.crossings, pd.signs())):
        if c in picked:
            out.append((l, i, j, k) if s > 0 else (j, k, l, i))
        else:
            out.append((i, j, k, l))
    return PDCode(tuple(out))


def _remove(pd: PDCode, drop: set[int]) -> PDCode:
    """Delete crossings, letting both strands pass straight through."""
    parent: dict[int, int] = {}

    def find(a):
        while parent.get(a, a) != a:
            a = parent[a]
        return a

    for c in drop:
        i, j, k, l = pd.crossings[c]
        for a, b in ((i, k), (j, l)):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
    signs = pd.signs()
    keep = [c for c in range(len(pd.crossings)) if c not in drop]
    crossings = [tuple(find(a) for a in pd.crossings[c]) for c in keep]
    return _relabel(crossings, [signs[c] for c in keep])


def _reduction_move(pd: PDCode) -> set[int] | None:
    for c, arcs in enumerate(pd.crossings):
        for p in range(4):
            if arcs[p] == arcs[(p + 1) % 4]:
                return {c}
    face_of = _faces(pd)
    corners: dict[int, list[tuple[int, int]]] = {}
    for corner, f in face_of.items():
        corners.setdefault(f, []).append(corner)
    for f in sorted(corners):
        cs = corners[f]
        if len(cs) != 2 or cs[0][0] == cs[1][0]:
            continue
        (c, p), (d, q) = cs
        # an R2 bigon has the same strand over at both of its crossings
        a1 = pd.crossings[c][p]
        ends_d = [s for s in range(4) if pd.crossings[d][s] == a1]
        if not ends_d:
            continue
        if (p % 2) == (ends_d[0] % 2):
            return {c, d}
    return None


def simplify(pd: PDCode, max_steps: int | None = None) -> PDCode:
    """Greedy Reidemeister I/II reduction; stops when no move applies."""
    steps = 0
    while pd.crossings:
        move = _reduction_move(pd)
        if move is None:
            break
        pd = _remove(pd, move)
        steps += 1
        if max_steps is not None and steps >= max_steps:
            break
    return pd


def seifert_circles(pd: PDCode) -> int:
    if not pd.crossings:
        return 1
    nxt: dict[int, int] = {}
    for (i, j, k, l), s in zip(pd.crossings, pd.signs()):
        if s > 0:
            nxt[i], nxt[l] = j, k
        else:
            nxt[i], nxt[j] = l, k
    seen: set[int] = set()
    circles = 0
    for a in nxt:
        if a in seen:
            continue
        circles += 1
        while a not in seen:
            seen.add(a)
            a = nxt[a]
    return circles


def _check_connected(pd: PDCode) -> None:
    if not pd.crossings:
        return
    where: dict[int, list[int]] = {}
    for c, arcs in enumerate(pd.crossings):
        for a in arcs:
            where.setdefault(a, []).append(c)
    seen = {0}
    todo = [0]
    while todo:
        c = todo.pop()
        for a in pd.crossings[c]:
            for d in where[a]:
                if d not in seen:
                    seen.add(d)
                    todo.append(d)
    if len(seen) != len(pd.crossings):
        raise PDError("diagram is disconnected")


def seifert_genus_upper(pd: PDCode) -> int:
    """Genus of the surface from Seifert's algorithm, an upper bound for g."""
    _check_connected(pd)
    g2 = len(pd.crossings) - seifert_circles(pd) + 1
    if g2 % 2:
        raise PDError("odd Euler characteristic: not a knot diagram")
    return g2 // 2


def _faces(pd: PDCode) -> dict[tuple[int, int], int]:
    """Map each corner ``(crossing, k)`` (between slots k and k+1) to a face id."""
    ends: dict[int, list[tuple[int, int]]] = {}
    for c, arcs in enumerate(pd.crossings):
        for p, a in enumerate(arcs):
            ends.setdefault(a, []).append((c, p))

    def other(c, p):
        a = pd.crossings[c][p]
        e0, e1 = ends[a]
        # a kink arc joins two slots of the same crossing
        return e1 if e0 == (c, p) else e0

    face_of: dict[tuple[int, int], int] = {}
    fid = 0
    for c in range(len(pd.crossings)):
        for p in range(4):
            if (c, p) in face_of:
                continue
            cur = (c, p)
            while cur not in face_of:
                face_of[cur] = fid
                c2, p2 = other(*cur)
                cur = (c2, (p2 - 1) % 4)
            fid += 1
    return face_of


def _colouring(pd: PDCode, face_of) -> dict[int, int]:
    """Two-colour the faces; corners k and k+1 at a crossing differ."""
    adj: dict[int, set[int]] = {}
    for c in range(len(pd.crossings)):
        for p in range(4):
            f, g = face_of[(c, p)], face_of[(c, (p + 1) % 4)]
            adj.setdefault(f, set()).add(g)
            adj.setdefault(g, set()).add(f)
    colour = {face_of[(0, 0)]: 0}
    todo = [face_of[(0, 0)]]
    while todo:
        f = todo.pop()
        for g in adj[f]:
            if g not in colour:
                colour[g] = 1 - colour[f]
                todo.append(g)
            elif colour[g] == colour[f]:
                raise PDError("diagram is not checkerboard colourable")
    return colour


def _goeritz_data(pd: PDCode):
    face_of = _faces(pd)
    colour = _colouring(pd, face_of)
    white = sorted(f for f, col in colour.items() if col == 0)
    index = {f: n for n, f in enumerate(white)}
    size = len(white)
    G = [[0] * size for _ in range(size)]
    mu = 0
    for c, s in enumerate(pd.signs()):
        # eta = +1 when the over strand (slots 1, 3), turned counterclockwise,
        # sweeps across the white corners 1 and 3
        if colour[face_of[(c, 1)]] == 0:
            eta, wa, wb = 1, face_of[(c, 1)], face_of[(c, 3)]
        else:
            eta, wa, wb = -1, face_of[(c, 0)], face_of[(c, 2)]
        if wa != wb:
            ia, ib = index[wa], index[wb]
            G[ia][ib] -= eta
            G[ib][ia] -= eta
            G[ia][ia] += eta
            G[ib][ib] += eta
        # the oriented smoothing merges corners 1, 3 at a positive crossing
        # and corners 0, 2 at a negative one; type II when those are shaded
        merged = 1 if s > 0 else 0
        if colour[face_of[(c, merged)]] == 1:
            mu += eta
    reduced = [row[1:] for row in G[1:]]
    return reduced, mu


def goeritz_matrix(pd: PDCode) -> list[list[int]]:
    """Reduced Goeritz matrix of the white regions (first region dropped)."""
    if not pd.crossings:
        return []
    _check_connected(pd)
    return _goeritz_data(pd)[0]


def _pivot_reduce(M: list[list[Fraction]]):
    """Yield the diagonal entries of a congruence diagonalisation of symmetric ``M``."""
    M = [row[:] for row in M]
    while M:
        n = len(M)
        p = next((i for i in range(n) if M[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in range(n) for j in range(n) if M[i][j] != 0), None)
            if pair is None:
                for _ in range(n):
                    yield Fraction(0)
                return
            i, j = pair
            # add row/col j to row/col i; new diagonal is 2 M[i][j] != 0
            for r in range(n):
                M[i][r] += M[j][r]
            for r in range(n):
                M[r][i] += M[r][j]
            p = i
        d = M[p][p]
        yield d
        rest = [r for r in range(n) if r != p]
        M = [[M[r][s] - M[r][p] * M[p][s] / d for s in rest] for r in rest]


def symmetric_signature(M: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer matrix, computed exactly."""
    F = [[Fraction(v) for v in row] for row in M]
    for i, row in enumerate(F):
        if len(row) != len(F) or any(row[j] != F[j][i] for j in range(len(F))):
            raise ValueError("matrix is not square and symmetric")
    return sum((d > 0) - (d < 0) for d in _pivot_reduce(F))


def _det(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    A = [[Fraction(v) for v in row] for row in M]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det *= A[col][col]
        for r in range(col + 1, n):
            f = A[r][col] / A[col][col]
            if f:
                for s in range(col, n):
                    A[r][s] -= f * A[col][s]
    assert det.denominator == 1
    return int(det)


def signature(pd: PDCode) -> int:
    if not pd.crossings:
        return 0
    _check_connected(pd)
    G, mu = _goeritz_data(pd)
    return mu - symmetric_signature(G)


def determinant(pd: PDCode) -> int:
    if not pd.crossings:
        return 1
    _check_connected(pd)
    return abs(_det(_goeritz_data(pd)[0]))


def braid_to_pd(word: Sequence[int], strands: int | None = None) -> PDCode:
    """PD code of the closure of a braid word (``k`` is sigma_k, ``-k`` its inverse)."""
    if not word:
        raise PDError("empty braid word")
    n = strands if strands is not None else max(abs(g) for g in word) + 1
    fresh = iter(range(10**9))
    bottom = [next(fresh) for _ in range(n)]
    cur = bottom[:]
    crossings, signs = [], []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < n - 1:
            raise PDError(f"generator {g} out of range for {n} strands")
        sw, se = cur[i], cur[i + 1]
        nw, ne = next(fresh), next(fresh)
        # strands run upward; sigma_k puts the strand from the left over
        if g > 0:
            crossings.append((se, ne, nw, sw))
            signs.append(1)
        else:
            crossings.append((sw, se, ne, nw))
            signs.append(-1)
        cur[i], cur[i + 1] = nw, ne
    perm = list(range(n))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    k, length = perm[0], 1
    while k != 0:
        k, length = perm[k], length + 1
    if length != n:
        raise PDError("braid closure has more than one component")
    ident = dict(zip(cur, bottom))
    crossings = [tuple(ident.get(a, a) for a in c) for c in crossings]
    return _relabel(crossings, signs)


def torus_pd(p: int, q: int) -> PDCode:
    """Torus knot diagram as a braid closure; ``p < 0`` gives the mirror."""
    from math import gcd

    ap = abs(p)
    if ap < 2 or q < 2 or gcd(ap, q) != 1:
        raise PDError(f"({p}, {q}) is not a nontrivial torus knot")
    sgn = 1 if p > 0 else -1
    word = [sgn * k for k in range(1, ap)] * q
    return braid_to_pd(word, ap)


@dataclass(frozen=True)
class KnotMetadata:
    """Facts about the underlying smooth knot supplied with a representative."""

    name: str
    signature: int
    seifert_genus_upper: int
    fourball_genus: int | None = None
    unknotting_upper: int | None = None
    alternating: bool | None = None
    torus_params: tuple[int, int] | None = None
    perfect: bool | None = None

    def __post_init__(self):
        if self.signature % 2:
            raise ValueError("knot signature must be even")
        if self.torus_params is not None:
            object.__setattr__(self, "torus_params", tuple(self.torus_params))

    @classmethod
    def from_dict(cls, data: dict) -> KnotMetadata:
        return cls(
            name=data["name"],
            signature=int(data["signature"]),
            seifert_genus_upper=int(data["seifert_genus_upper"]),
            fourball_genus=data.get("fourball_genus"),
            unknotting_upper=data.get("unknotting_upper"),
            alternating=data.get("alternating"),
            torus_params=tuple(data["torus_params"]) if data.get("torus_params") else None,
            perfect=data.get("perfect"),
        )

    def to_dict(self) -> dict:
        out = {"name": self.name, "signature": self.signature, "seifert_genus_upper": self.seifert_genus_upper}
        for key in ("fourball_genus", "unknotting_upper", "alternating", "perfect"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        if self.torus_params is not None:
            out["torus_params"] = list(self.torus_params)
        return out
