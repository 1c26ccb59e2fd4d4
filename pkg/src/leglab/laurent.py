"""Exact two-variable Laurent polynomials in ``a`` and ``z``.

A polynomial is a sparse mapping ``(i, j) -> c`` standing for
``sum c * a**i * z**j`` with integer ``c``. Python integers do not overflow,
so all arithmetic is exact.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = ["LaurentPoly2", "A", "Z", "ONE", "ZERO"]

_TERM = re.compile(r"^\s*(-?\d+)\s+a\^(-?\d+)\s+z\^(-?\d+)\s*$")


class LaurentPoly2:
    """Immutable sparse Laurent polynomial in ``a`` and ``z``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            key = (int(i), int(j))
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def monomial(cls, coeff: int = 1, a: int = 0, z: int = 0) -> LaurentPoly2:
        return cls({(a, z): coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly2:
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items(), reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> LaurentPoly2:
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly2:
        return LaurentPoly2({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly2:
        if n < 0:
            # only monomials are invertible
            if len(self._terms) != 1:
                raise ValueError("negative power of a non-monomial")
            ((i, j), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power needs a unit coefficient")
            m = -n
            return LaurentPoly2({(-i * m, -j * m): c ** m})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, da: int = 0, dz: int = 0) -> LaurentPoly2:
        """Multiply by the monomial ``a**da * z**dz``."""
        return LaurentPoly2({(i + da, j + dz): c for (i, j), c in self._terms.items()})

    def invert_a(self) -> LaurentPoly2:
        """Substitute ``a -> 1/a``."""
        return LaurentPoly2({(-i, j): c for (i, j), c in self._terms.items()})

    def substitute_signs(self, sa: int = 1, sz: int = 1) -> LaurentPoly2:
        """Substitute ``a -> sa*a`` and ``z -> sz*z`` for signs ``sa, sz``."""
        return LaurentPoly2(
            {(i, j): c * sa ** (i % 2) * sz ** (j % 2) for (i, j), c in self._terms.items()}
        )

    def max_a_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(i for i, _ in self._terms)

    def min_a_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return min(i for i, _ in self._terms)

    def max_z_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(j for _, j in self._terms)

    def min_z_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return min(j for _, j in self._terms)

    def evaluate(self, a, z):
        return sum(c * a ** i * z ** j for (i, j), c in self._terms.items())

    def to_string(self) -> str:
        """Render as ``"c a^i z^j + ..."`` in decreasing ``(i, j)`` order."""
        if not self._terms:
            return "0"
        return " + ".join(f"{c} a^{i} z^{j}" for (i, j), c in self)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly2:
        text = text.strip()
        if text == "0":
            return ZERO
        terms = []
        for chunk in text.split(" + "):
            m = _TERM.match(chunk)
            if m is None:
                raise ValueError(f"cannot parse term {chunk!r}")
            c, i, j = (int(g) for g in m.groups())
            terms.append(((i, j), c))
        return cls(terms)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_string()!r})"


ZERO = LaurentPoly2()
ONE = LaurentPoly2.constant(1)
A = LaurentPoly2.monomial(1, a=1)
Z = LaurentPoly2.monomial(1, z=1)
