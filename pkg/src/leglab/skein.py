"""HOMFLY and Kauffman polynomials by descending-diagram skein recursion.

Conventions::

    HOMFLY     a P(L+) - a^-1 P(L-) = z P(L0),            P(unknot) = 1
    Dubrovnik  D(L+) - D(L-) = z (D(L0) - D(Linf)),       D(curl+) = a D
    Kauffman   L(L+) + L(L-) = z (L(L0) + L(Linf)),       L(curl+) = a L

Recursion walks the components from fixed base points and switches the first
crossing met from below, so every branch ends at a descending diagram, which
is an unlink. Connected subdiagrams are memoised by a canonical traversal
code that does not depend on arc labels.

The Kauffman polynomial is reported as ``F(a, z) = a^(-w) L``; the
left-handed trefoil then has top a-degree 5. The bounds read
``tb <= -maxdeg_a F - 1`` and ``tb + |r| <= -maxdeg_a P - 1``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .diagram import PDCode
from .laurent import A, ONE, Z, LaurentPoly2

__all__ = [
    "DEFAULT_CROSSING_CAP",
    "SkeinError",
    "CrossingCapError",
    "SkeinStats",
    "homfly",
    "dubrovnik",
    "kauffman",
    "kauffman_from_l",
    "homfly_bound",
    "kauffman_bound",
    "canonical_key",
    "clear_memo",
]

DEFAULT_CROSSING_CAP = 14


class SkeinError(ValueError):
    code = "skein-error"


class CrossingCapError(SkeinError):
    """Raised when a diagram exceeds the configured crossing cap."""

    code = "crossing-cap"


Z_INV = LaurentPoly2.monomial(1, z=-1)
A_INV = LaurentPoly2.monomial(1, a=-1)


@dataclass(frozen=True)
class _Link:
    """Link diagram: crossings ``(e0, e1, e2, e3)`` counterclockwise with slot 0
    the incoming under edge; ``signs[c] = +1`` when the over strand runs 3 -> 1.
    ``loops`` counts crossingless components."""

    x: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]
    loops: int = 0

    def __len__(self) -> int:
        return len(self.x)

    def heads(self) -> dict[int, tuple[int, int]]:
        out = {}
        for c, (e, s) in enumerate(zip(self.x, self.signs)):
            out[e[0]] = (c, 0)
            out[e[3] if s > 0 else e[1]] = (c, 3 if s > 0 else 1)
        return out

    def components(self) -> list[list[int]]:
        """Edges of each component in traversal order, ordered by their least edge."""
        heads = self.heads()
        seen: set[int] = set()
        comps = []
        for start in sorted(heads):
            if start in seen:
                continue
            comp = []
            e = start
            while e not in seen:
                seen.add(e)
                comp.append(e)
                c, p = heads[e]
                e = self.x[c][(p + 2) % 4]
            comps.append(comp)
        return comps


def _from_pd(pd: PDCode) -> _Link:
    if not pd.crossings:
        return _Link((), (), 1)
    return _Link(pd.crossings, pd.signs(), 0)


def _relabel_edges(x, old: int, new: int):
    return [tuple(new if e == old else e for e in c) for c in x]


def _drop(link: _Link, c: int, pairs: list[tuple[int, int]]) -> tuple[list, list, int]:
    """Remove crossing ``c`` joining the edges at each slot pair; returns (x, signs, new loops)."""
    ends = list(link.x[c])
    x = [cr for k, cr in enumerate(link.x) if k != c]
    signs = [s for k, s in enumerate(link.signs) if k != c]
    loops = 0
    for p, q in pairs:
        ep, eq = ends[p], ends[q]
        if ep == eq:
            loops += 1
            continue
        x = _relabel_edges(x, eq, ep)
        ends = [ep if e == eq else e for e in ends]
    return x, signs, loops


def _reorient(x, loops: int) -> _Link:
    """Choose an orientation for an unoriented diagram and normalise crossings."""
    occ: dict[int, list[tuple[int, int]]] = {}
    for c, cr in enumerate(x):
        for p, e in enumerate(cr):
            occ.setdefault(e, []).append((c, p))
    entry: dict[int, set[int]] = {c: set() for c in range(len(x))}
    done: set[tuple[int, int]] = set()
    for e in sorted(occ):
        c, p = occ[e][0]
        if (c, p) in done:
            continue
        # leave crossing c through slot p, travel along edge e
        cur = (c, p)
        while cur not in done:
            done.add(cur)
            e = x[cur[0]][cur[1]]
            a, b = occ[e]
            nc, np_ = b if a == cur else a
            entry[nc].add(np_)
            done.add((nc, np_))
            cur = (nc, (np_ + 2) % 4)
    nx, ns = [], []
    for c, cr in enumerate(x):
        ins = entry[c]
        cr = tuple(cr)
        if 2 in ins and 0 not in ins:
            cr = (cr[2], cr[3], cr[0], cr[1])
            ins = {(p + 2) % 4 for p in ins}
        nx.append(cr)
        ns.append(1 if 3 in ins else -1)
    return _Link(tuple(nx), tuple(ns), loops)


def _switch(link: _Link, c: int) -> _Link:
    e0, e1, e2, e3 = link.x[c]
    if link.signs[c] > 0:
        new, s = (e3, e0, e1, e2), -1
    else:
        new, s = (e1, e2, e3, e0), 1
    x = list(link.x)
    x[c] = new
    signs = list(link.signs)
    signs[c] = s
    return _Link(tuple(x), tuple(signs), link.loops)


def _smooth_oriented(link: _Link, c: int) -> _Link:
    # incoming under joins outgoing over; incoming over joins outgoing under
    pairs = [(0, 1), (3, 2)] if link.signs[c] > 0 else [(0, 3), (1, 2)]
    x, signs, loops = _drop(link, c, pairs)
    return _Link(tuple(x), tuple(signs), link.loops + loops)


def _smooth_unoriented(link: _Link, c: int) -> _Link:
    pairs = [(0, 3), (1, 2)] if link.signs[c] > 0 else [(0, 1), (3, 2)]
    x, _, loops = _drop(link, c, pairs)
    return _reorient(x, link.loops + loops)


def _remove_kinks(link: _Link) -> tuple[_Link, int]:
    """Undo Reidemeister I curls; returns the reduced link and the removed writhe."""
    writhe = 0
    while True:
        for c, cr in enumerate(link.x):
            p = next((p for p in range(4) if cr[p] == cr[(p + 1) % 4]), None)
            if p is None:
                continue
            # join the two free slots, incoming to outgoing
            q1, q2 = (p + 2) % 4, (p + 3) % 4
            heads = link.heads()
            a, b = cr[q1], cr[q2]
            pair = (q1, q2) if heads.get(a) == (c, q1) else (q2, q1)
            writhe += link.signs[c]
            x, signs, loops = _drop(link, c, [pair])
            link = _Link(tuple(x), tuple(signs), link.loops + loops)
            break
        else:
            return link, writhe


def _split(link: _Link) -> list[_Link]:
    """Connected pieces of a diagram (free loops are not included)."""
    n = len(link.x)
    if n == 0:
        return []
    where: dict[int, list[int]] = {}
    for c, cr in enumerate(link.x):
        for e in cr:
            where.setdefault(e, []).append(c)
    piece = [-1] * n
    count = 0
    for c0 in range(n):
        if piece[c0] >= 0:
            continue
        piece[c0] = count
        todo = [c0]
        while todo:
            c = todo.pop()
            for e in link.x[c]:
                for d in where[e]:
                    if piece[d] < 0:
                        piece[d] = count
                        todo.append(d)
        count += 1
    if count == 1:
        return [_Link(link.x, link.signs, 0)]
    out = []
    for k in range(count):
        idx = [c for c in range(n) if piece[c] == k]
        out.append(_Link(tuple(link.x[c] for c in idx), tuple(link.signs[c] for c in idx), 0))
    return out


def _encode_oriented(link: _Link, start: int, heads) -> tuple:
    label: dict[int, int] = {}
    order: list[int] = []
    tokens: list[tuple[int, int]] = []
    used: set[int] = set()
    e = start
    while True:
        while e not in used:
            used.add(e)
            c, p = heads[e]
            if c not in label:
                label[c] = len(order)
                order.append(c)
            tokens.append((label[c], p))
            e = link.x[c][(p + 2) % 4]
        nxt = next((link.x[c][p] for c in order for p in range(4) if link.x[c][p] not in used), None)
        if nxt is None:
            break
        tokens.append((-1, -1))
        e = nxt
    return tuple(tokens) + tuple(link.signs[c] for c in order)


def _encode_unoriented(link: _Link, c0: int, p0: int, occ) -> tuple:
    label: dict[int, int] = {}
    ref: dict[int, int] = {}
    order: list[int] = []
    tokens: list[tuple[int, int]] = []
    used: set[int] = set()
    cur = (c0, p0)
    while True:
        while link.x[cur[0]][cur[1]] not in used:
            e = link.x[cur[0]][cur[1]]
            used.add(e)
            a, b = occ[e]
            c, p = b if a == cur else a
            if c not in label:
                label[c] = len(order)
                order.append(c)
                ref[c] = p - p % 2
            tokens.append((label[c], (p - ref[c]) % 4))
            cur = (c, (p + 2) % 4)
        nxt = next(
            ((c, (ref[c] + r) % 4) for c in order for r in range(4) if link.x[c][(ref[c] + r) % 4] not in used),
            None,
        )
        if nxt is None:
            break
        tokens.append((-1, -1))
        cur = nxt
    return tuple(tokens)


def _key(link: _Link, oriented: bool) -> tuple:
    if oriented:
        heads = link.heads()
        return min(_encode_oriented(link, e, heads) for e in heads)
    occ: dict[int, list[tuple[int, int]]] = {}
    for c, cr in enumerate(link.x):
        for p, e in enumerate(cr):
            occ.setdefault(e, []).append((c, p))
    return min(_encode_unoriented(link, c, p, occ) for c in range(len(link.x)) for p in range(4))


def canonical_key(pd: PDCode, oriented: bool = True) -> str:
    """Label-independent code of a connected diagram, as used by the memo table."""
    link = _from_pd(pd)
    if not link.x:
        return "O"
    return ";".join(f"{a}.{b}" for a, b in (t if isinstance(t, tuple) else (t, "") for t in _key(link, oriented)))


def _first_bad(link: _Link) -> int | None:
    """First crossing met from below when walking components from their base points."""
    heads = link.heads()
    seen: set[int] = set()
    for comp in link.components():
        for e in comp:
            c, p = heads[e]
            if c in seen:
                continue
            seen.add(c)
            if p == 0:
                return c
    return None


def _self_writhe(link: _Link) -> int:
    comp_of: dict[int, int] = {}
    for k, comp in enumerate(link.components()):
        for e in comp:
            comp_of[e] = k
    return sum(s for cr, s in zip(link.x, link.signs) if comp_of[cr[0]] == comp_of[cr[1]])


@dataclass
class SkeinStats:
    nodes: int = 0
    memo_hits: int = 0
    max_depth: int = 0


@dataclass
class _Engine:
    name: str
    oriented: bool
    delta: LaurentPoly2
    framed: bool
    memo: dict = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def rule(self, eps: int):
        """Coefficients (switched, oriented smoothing, unoriented smoothing)."""
        raise NotImplementedError

    def kink(self, writhe: int) -> LaurentPoly2:
        return A ** writhe if self.framed else ONE

    def base(self, link: _Link) -> LaurentPoly2:
        comps = len(link.components())
        val = self.delta ** (comps - 1)
        if self.framed:
            val = val * A ** _self_writhe(link)
        return val

    def value(self, link: _Link, use_memo: bool, stats: SkeinStats, depth: int = 0) -> LaurentPoly2:
        stats.nodes += 1
        stats.max_depth = max(stats.max_depth, depth)
        link, w = _remove_kinks(link)
        pieces = _split(link)
        parts = len(pieces) + link.loops
        if parts == 0:
            raise SkeinError("empty diagram")
        result = self.kink(w) * self.delta ** (parts - 1)
        for piece in pieces:
            result = result * self.connected(piece, use_memo, stats, depth)
        return result

    def connected(self, link: _Link, use_memo: bool, stats: SkeinStats, depth: int) -> LaurentPoly2:
        key = _key(link, self.oriented) if use_memo else None
        if use_memo:
            hit = self.memo.get(key)
            if hit is not None:
                stats.memo_hits += 1
                return hit
        c = _first_bad(link)
        if c is None:
            val = self.base(link)
        else:
            eps = link.signs[c]
            k_sw, k_0, k_inf = self.rule(eps)
            val = k_sw * self.value(_switch(link, c), use_memo, stats, depth + 1)
            val = val + k_0 * self.value(_smooth_oriented(link, c), use_memo, stats, depth + 1)
            if k_inf:
                val = val + k_inf * self.value(_smooth_unoriented(link, c), use_memo, stats, depth + 1)
        if use_memo:
            with self.lock:
                self.memo[key] = val
        return val


class _Homfly(_Engine):
    def rule(self, eps):
        return A ** (-2 * eps), eps * A ** (-eps) * Z, None


class _Dubrovnik(_Engine):
    def rule(self, eps):
        return ONE, eps * Z, -eps * Z


class _KauffmanL(_Engine):
    def rule(self, eps):
        return LaurentPoly2.constant(-1), Z, Z


_HOMFLY = _Homfly("homfly", True, (A - A_INV) * Z_INV, framed=False)
_DUBROVNIK = _Dubrovnik("dubrovnik", False, (A - A_INV) * Z_INV + ONE, framed=True)
_KAUFFMAN_L = _KauffmanL("kauffman-l", False, (A + A_INV) * Z_INV - ONE, framed=True)


def clear_memo() -> None:
    for eng in (_HOMFLY, _DUBROVNIK, _KAUFFMAN_L):
        with eng.lock:
            eng.memo.clear()


def _prepare(pd: PDCode, cap: int | None) -> _Link:
    if not isinstance(pd, PDCode):
        raise SkeinError("expected a PDCode")
    limit = DEFAULT_CROSSING_CAP if cap is None else cap
    if len(pd) > limit:
        raise CrossingCapError(f"{len(pd)} crossings exceeds the cap of {limit}")
    return _from_pd(pd)


def homfly(pd: PDCode, cap: int | None = None, memo: bool = True, stats: SkeinStats | None = None) -> LaurentPoly2:
    """HOMFLY polynomial, normalised by ``a P(L+) - a^-1 P(L-) = z P(L0)``."""
    link = _prepare(pd, cap)
    return _HOMFLY.value(link, memo, stats if stats is not None else SkeinStats())


def _unframe(value: LaurentPoly2, writhe: int) -> LaurentPoly2:
    return value.shift(da=-writhe)


def dubrovnik(pd: PDCode, cap: int | None = None, memo: bool = True, stats: SkeinStats | None = None) -> LaurentPoly2:
    """Writhe-normalised Dubrovnik polynomial ``a^(-w) D``."""
    link = _prepare(pd, cap)
    raw = _DUBROVNIK.value(link, memo, stats if stats is not None else SkeinStats())
    return _unframe(raw, pd.writhe)


def _dubrovnik_to_kauffman(d: LaurentPoly2) -> LaurentPoly2:
    """Knot case of ``F(a, z) = D(ia, -iz)``; the powers of i cancel."""
    out = {}
    for (p, q), c in d.terms.items():
        k = p - q
        if k % 2:
            raise SkeinError("Dubrovnik polynomial has a term of odd a-z parity")
        out[(p, q)] = c * (-1) ** ((k // 2) % 2)
    return LaurentPoly2(out)


def kauffman(pd: PDCode, cap: int | None = None, memo: bool = True, stats: SkeinStats | None = None) -> LaurentPoly2:
    """Kauffman polynomial, computed through the Dubrovnik skein relation."""
    return _dubrovnik_to_kauffman(dubrovnik(pd, cap, memo, stats))


def kauffman_from_l(pd: PDCode, cap: int | None = None, memo: bool = True) -> LaurentPoly2:
    """Kauffman polynomial straight from the ``L`` skein relation (no Dubrovnik step)."""
    link = _prepare(pd, cap)
    raw = _KAUFFMAN_L.value(link, memo, SkeinStats())
    return _unframe(raw, pd.writhe)


def homfly_bound(p: LaurentPoly2) -> int:
    """Upper bound on ``tb + |r|`` from a knot's HOMFLY polynomial."""
    if not p:
        raise SkeinError("zero polynomial")
    return -p.max_a_degree() - 1


def kauffman_bound(f: LaurentPoly2) -> int:
    """Upper bound on ``tb`` from a knot's Kauffman polynomial."""
    if not f:
        raise SkeinError("zero polynomial")
    return -f.max_a_degree() - 1
