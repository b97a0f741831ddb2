"""Exact sparse polynomial arithmetic over the rationals in l, x and y.

The variable universe is fixed to the three names ``l``, ``x`` and ``y``.
Coefficients are arbitrary-precision rationals (``fractions.Fraction``), so
every operation is exact and equality of polynomials is decidable by
comparing canonical forms term by term.

Values are immutable after construction: every operation returns a new
polynomial with no zero coefficients stored, which makes them safe to share
between threads and to use as cache keys.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction

#: Fixed variable universe; any other name is rejected.
VARIABLES = ("l", "x", "y")

_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}

#: Exponents of (l, x, y) in one term.
Monomial = tuple[int, int, int]

PolyLike = Union["MultiPoly", Fraction, int]

_ZERO = Fraction(0)

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational literal: an integer or ``p/q``, no decimals."""
    t = text.strip()
    if not _RATIONAL_RE.fullmatch(t):
        raise ValueError(f"not an exact rational literal: {text!r}")
    if "/" in t:
        num, den = t.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in rational literal: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(t))


def _term_sort_key(mono: Monomial) -> tuple[int, int, int]:
    # Canonical term order: descending powers of x, then y, then l.
    return (-mono[1], -mono[2], -mono[0])


def as_poly(value: PolyLike) -> "MultiPoly":
    """Coerce an int or Fraction to a constant polynomial."""
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MultiPoly.const(value)
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


_TOKEN_RE = re.compile(r"\d+(?:/\d+)?|[lxy]|[-+*^]|\S")


def _tokenize(text: str) -> list[str]:
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        tok = match.group()
        if tok not in "+-*^" and not tok[0].isdigit() and tok not in VARIABLES:
            raise ValueError(f"unexpected character {tok!r} in polynomial text")
        tokens.append(tok)
    return tokens


class MultiPoly:
    """A polynomial in l, x, y with exact rational coefficients.

    The representation is a sparse map from exponent triples to nonzero
    coefficients.  Arithmetic goes through the usual operators; ``==`` is
    exact polynomial equality (scalars are accepted and coerced).
    """

    __slots__ = ("_terms",)

    _terms: dict[Monomial, Fraction]

    def __init__(
        self,
        terms: Mapping[Monomial, PolyLike] | Iterable[tuple[Monomial, PolyLike]] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(mono)  # type: ignore[assignment]
            if len(mono) != 3 or any(not isinstance(e, int) or e < 0 for e in mono):
                raise ValueError(
                    f"bad monomial {mono!r}: need three nonnegative integer exponents"
                )
            total = acc.get(mono, _ZERO) + Fraction(coeff)
            if total:
                acc[mono] = total
            else:
                acc.pop(mono, None)
        self._terms = acc

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "MultiPoly":
        # Internal fast path: terms must already be canonical.
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._raw({})

    @classmethod
    def const(cls, value: Fraction | int) -> "MultiPoly":
        c = Fraction(value)
        return cls._raw({(0, 0, 0): c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; universe is {VARIABLES}")
        mono = [0, 0, 0]
        mono[_VAR_INDEX[name]] = 1
        return cls._raw({(mono[0], mono[1], mono[2]): Fraction(1)})

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict[Monomial, Fraction]:
        """Copy of the canonical term map."""
        return dict(self._terms)

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def degree(self, var: str) -> int:
        """Highest power of ``var``; -1 for the zero polynomial."""
        vi = _VAR_INDEX[var]
        return max((mono[vi] for mono in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(mono) for mono in self._terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: PolyLike) -> "MultiPoly":
        other = as_poly(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = out.get(mono, _ZERO) + coeff
            if total:
                out[mono] = total
            else:
                out.pop(mono, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other: PolyLike) -> "MultiPoly":
        other = as_poly(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = out.get(mono, _ZERO) - coeff
            if total:
                out[mono] = total
            else:
                out.pop(mono, None)
        return MultiPoly._raw(out)

    def __rsub__(self, other: PolyLike) -> "MultiPoly":
        return as_poly(other) - self

    def __mul__(self, other: PolyLike) -> "MultiPoly":
        other = as_poly(other)
        if not self._terms or not other._terms:
            return MultiPoly.zero()
        out: dict[Monomial, Fraction] = {}
        for (l1, x1, y1), ca in self._terms.items():
            for (l2, x2, y2), cb in other._terms.items():
                mono = (l1 + l2, x1 + x2, y1 + y2)
                prev = out.get(mono)
                out[mono] = ca * cb if prev is None else prev + ca * cb
        return MultiPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.const(1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- homomorphisms and calculus -----------------------------------------

    def substitute(self, images: Mapping[str, PolyLike]) -> "MultiPoly":
        """Simultaneously replace variables by polynomials.

        Unnamed variables map to themselves; the result is the image of this
        polynomial under the induced ring homomorphism.
        """
        for name in images:
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}; universe is {VARIABLES}")
        base = [MultiPoly.variable(name) for name in VARIABLES]
        for name, value in images.items():
            base[_VAR_INDEX[name]] = as_poly(value)
        pow_cache: dict[tuple[int, int], MultiPoly] = {}

        def power(vi: int, e: int) -> MultiPoly:
            key = (vi, e)
            cached = pow_cache.get(key)
            if cached is None:
                cached = base[vi] if e == 1 else power(vi, e - 1) * base[vi]
                pow_cache[key] = cached
            return cached

        total = MultiPoly.zero()
        for mono, coeff in self._terms.items():
            term = MultiPoly.const(coeff)
            for vi, e in enumerate(mono):
                if e:
                    term = term * power(vi, e)
            total = total + term
        return total

    def diff(self, var: str) -> "MultiPoly":
        """Formal partial derivative with respect to ``var``."""
        vi = _VAR_INDEX[var]
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            e = mono[vi]
            if e:
                lowered = list(mono)
                lowered[vi] = e - 1
                out[(lowered[0], lowered[1], lowered[2])] = coeff * e
        return MultiPoly._raw(out)

    def integrate01(self, var: str) -> "MultiPoly":
        """Exact definite integral over ``var`` in [0, 1]; ``var`` is eliminated."""
        vi = _VAR_INDEX[var]
        pairs: list[tuple[Monomial, Fraction]] = []
        for mono, coeff in self._terms.items():
            collapsed = list(mono)
            e = collapsed[vi]
            collapsed[vi] = 0
            pairs.append(((collapsed[0], collapsed[1], collapsed[2]), coeff / (e + 1)))
        return MultiPoly(pairs)

    def evaluate(self, point: Sequence[Fraction | int]) -> Fraction:
        """Exact value at (l, x, y) = point."""
        if len(point) != 3:
            raise ValueError("evaluation point must give values for (l, x, y)")
        values = tuple(Fraction(v) for v in point)
        total = _ZERO
        for mono, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, mono):
                if e:
                    term *= v**e
            total += term
        return total

    # -- canonical text form -------------------------------------------------

    def sign_normalized(self) -> "MultiPoly":
        """Self or its negation, whichever prints with a positive leading term."""
        if not self._terms:
            return self
        lead = min(self._terms, key=_term_sort_key)
        return -self if self._terms[lead] < 0 else self

    def to_text(self) -> str:
        """Canonical text form; parses back to an equal polynomial."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for mono in sorted(self._terms, key=_term_sort_key):
            coeff = self._terms[mono]
            factors = []
            for name, e in zip(VARIABLES, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            magnitude = abs(coeff)
            if not body:
                piece = str(magnitude)
            elif magnitude == 1:
                piece = body
            else:
                piece = f"{magnitude}*{body}"
            if not chunks:
                chunks.append(piece if coeff > 0 else f"-{piece}")
            else:
                chunks.append(f"+ {piece}" if coeff > 0 else f"- {piece}")
        return " ".join(chunks)

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        """Parse the canonical text form (and any sum of rational*variable products)."""
        tokens = _tokenize(text)
        if not tokens:
            raise ValueError("empty polynomial text")
        pairs: list[tuple[Monomial, Fraction]] = []
        i = 0
        end = len(tokens)
        while i < end:
            sign = 1
            while i < end and tokens[i] in "+-":
                if tokens[i] == "-":
                    sign = -sign
                i += 1
            if i >= end:
                raise ValueError("dangling sign in polynomial text")
            coeff = Fraction(sign)
            exps = [0, 0, 0]
            while True:
                tok = tokens[i]
                if tok[0].isdigit():
                    if "/" in tok:
                        num, den = tok.split("/")
                        if int(den) == 0:
                            raise ValueError("zero denominator in coefficient")
                        coeff *= Fraction(int(num), int(den))
                    else:
                        coeff *= int(tok)
                    i += 1
                elif tok in _VAR_INDEX:
                    vi = _VAR_INDEX[tok]
                    i += 1
                    e = 1
                    if i < end and tokens[i] == "^":
                        i += 1
                        if i >= end or not tokens[i].isdigit():
                            raise ValueError("exponent must be a nonnegative integer")
                        e = int(tokens[i])
                        i += 1
                    exps[vi] += e
                else:
                    raise ValueError(f"unexpected token {tok!r} in polynomial text")
                if i < end and tokens[i] == "*":
                    i += 1
                    if i >= end:
                        raise ValueError("dangling '*' in polynomial text")
                    continue
                break
            pairs.append(((exps[0], exps[1], exps[2]), coeff))
        return cls(pairs)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly.parse({self.to_text()!r})"


#: The three ring generators.
L = MultiPoly.variable("l")
X = MultiPoly.variable("x")
Y = MultiPoly.variable("y")
