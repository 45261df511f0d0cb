"""Reduced elements of free modules over integer (Laurent) polynomial rings.

An element is a sorted tuple of terms ``c * x1^e1...xk^ek * e_b`` with no two
terms sharing a monomial and no zero coefficients.  Ring elements (module
rank one, no basis vector) use the same class with ``basis=None`` monomials;
``Ambient.ring()`` gives the coefficient-ring ambient of a module ambient.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import AmbientMismatch, EmptyElementError, ParseError
from .order import monomial_key, int_key


@dataclass(frozen=True)
class Ambient:
    """Variable names, torsion orders (0 = infinite), rank and basis names.

    ``laurent=True`` allows negative exponents and keeps torsion exponents
    reduced into [0, order); the polynomial ambients used by the Groebner
    engine set ``laurent=False`` and never wrap.
    """

    variables: tuple[str, ...]
    torsion: tuple[int, ...]
    rank: int
    basis_names: Optional[tuple[str, ...]] = None
    laurent: bool = True

    def __post_init__(self):
        if len(self.torsion) != len(self.variables):
            raise ValueError("torsion orders must align with variables")
        if any(d < 0 or d == 1 for d in self.torsion):
            raise ValueError("torsion orders must be 0 (infinite) or >= 2")
        if self.basis_names is not None and len(self.basis_names) != self.rank:
            raise ValueError("basis names must align with rank")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def ring(self) -> "Ambient":
        """The coefficient-ring ambient (rank one, no basis vectors)."""
        return Ambient(self.variables, self.torsion, 1, None, self.laurent)

    def is_ring(self) -> bool:
        return self.basis_names is None

    def wrap(self, exponents) -> tuple[int, ...]:
        """Reduce torsion exponents into [0, order) when in Laurent mode."""
        if not self.laurent or not any(self.torsion):
            return tuple(exponents)
        return tuple(e % d if d else e for e, d in zip(exponents, self.torsion))

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None


@dataclass(frozen=True)
class Monomial:
    """Exponent vector plus an optional basis index (1-based, None for ring)."""

    exponents: tuple[int, ...]
    basis: Optional[int] = None

    @property
    def degree(self) -> int:
        return sum(abs(e) for e in self.exponents)

    def key(self):
        return monomial_key(self.exponents, self.basis)

    def divides(self, other: "Monomial") -> bool:
        """Non-negative exponent divisibility, same basis vector."""
        if self.basis != other.basis:
            return False
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def quotient_exponents(self, other: "Monomial") -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.exponents, other.exponents))


@dataclass(frozen=True)
class Term:
    coefficient: int
    monomial: Monomial


def _canonical_terms(ambient: Ambient, raw: dict) -> tuple[Term, ...]:
    merged: dict[tuple, int] = {}
    for (exps, basis), coeff in raw.items():
        if coeff == 0:
            continue
        key = (ambient.wrap(exps), basis)
        merged[key] = merged.get(key, 0) + coeff
    terms = [Term(c, Monomial(e, b)) for (e, b), c in merged.items() if c != 0]
    terms.sort(key=lambda t: t.monomial.key(), reverse=True)
    return tuple(terms)


@dataclass(frozen=True)
class ModuleElement:
    """A reduced element: strictly descending terms, nonzero coefficients."""

    ambient: Ambient
    terms: tuple[Term, ...]

    @staticmethod
    def zero(ambient: Ambient) -> "ModuleElement":
        return ModuleElement(ambient, ())

    @staticmethod
    def from_dict(ambient: Ambient, raw: dict) -> "ModuleElement":
        return ModuleElement(ambient, _canonical_terms(ambient, raw))

    @staticmethod
    def from_term(ambient: Ambient, coeff: int, exps, basis=None) -> "ModuleElement":
        return ModuleElement.from_dict(ambient, {(tuple(exps), basis): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict:
        return {(t.monomial.exponents, t.monomial.basis): t.coefficient
                for t in self.terms}

    def _check_ambient(self, other: "ModuleElement"):
        if self.ambient != other.ambient:
            raise AmbientMismatch("elements of different ambients")

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._check_ambient(other)
        out = self.as_dict()
        for t in other.terms:
            key = (t.monomial.exponents, t.monomial.basis)
            out[key] = out.get(key, 0) + t.coefficient
        return ModuleElement.from_dict(self.ambient, out)

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(
            self.ambient,
            tuple(Term(-t.coefficient, t.monomial) for t in self.terms))

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def scale_translate(self, c: int, u: Monomial) -> "ModuleElement":
        """Return ``c * u * self`` reduced; u is a ring monomial."""
        if u.basis is not None:
            raise AmbientMismatch("translation monomial must be a ring monomial")
        if len(u.exponents) != self.ambient.nvars:
            raise AmbientMismatch("translation monomial over wrong variable set")
        if c == 0:
            return ModuleElement.zero(self.ambient)
        raw = {}
        for t in self.terms:
            exps = tuple(a + b for a, b in zip(t.monomial.exponents, u.exponents))
            raw[(exps, t.monomial.basis)] = c * t.coefficient
        return ModuleElement.from_dict(self.ambient, raw)

    def mul_ring(self, lam: "ModuleElement") -> "ModuleElement":
        """Multiply by a ring element (terms with no basis vector)."""
        raw: dict[tuple, int] = {}
        for lt in lam.terms:
            if lt.monomial.basis is not None:
                raise AmbientMismatch("ring multiplier must have no basis part")
            for t in self.terms:
                exps = tuple(a + b for a, b in
                             zip(t.monomial.exponents, lt.monomial.exponents))
                key = (exps, t.monomial.basis)
                raw[key] = raw.get(key, 0) + lt.coefficient * t.coefficient
        return ModuleElement.from_dict(self.ambient, raw)

    def component(self, basis: int) -> "ModuleElement":
        """The basis-``basis`` coordinate as a ring element."""
        ring = self.ambient.ring()
        raw = {(t.monomial.exponents, None): t.coefficient
               for t in self.terms if t.monomial.basis == basis}
        return ModuleElement.from_dict(ring, raw)

    @property
    def length(self) -> int:
        return sum(abs(t.coefficient) for t in self.terms)

    @property
    def degree(self) -> int:
        if not self.terms:
            return 0
        return self.terms[0].monomial.degree

    @property
    def support_size(self) -> int:
        return len(self.terms)

    def leading_term(self) -> Term:
        if not self.terms:
            raise EmptyElementError("zero element has no leading term")
        return self.terms[0]

    def render(self) -> str:
        return render_element(self)

    def __str__(self) -> str:
        return self.render()


# Spec-facing operation names.

def add(g: ModuleElement, h: ModuleElement) -> ModuleElement:
    return g + h


def scale_translate(c: int, u: Monomial, g: ModuleElement) -> ModuleElement:
    return g.scale_translate(c, u)


def leading_data(g: ModuleElement):
    """Return (LT, LM, LC) of a nonzero element."""
    t = g.leading_term()
    return t, t.monomial, t.coefficient


def measures(g: ModuleElement) -> tuple[int, int, int]:
    """(length, degree, support size); the zero element measures (0, 0, 0)."""
    return (g.length, g.degree, g.support_size)


def monomial_word_degree(ambient: Ambient, exponents) -> int:
    """Group-word length of the ordered word realizing an exponent vector.

    Free variables contribute |e|; torsion variables the shorter way around
    the cycle.
    """
    total = 0
    for e, d in zip(exponents, ambient.torsion):
        if d:
            r = e % d
            total += min(r, d - r)
        else:
            total += abs(e)
    return total


# ---------------------------------------------------------------------------
# Canonical text format, e.g. "(t^2 - 2*t)*a1 + 3*a2".

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+|\^|\*|\+|\-|\(|\))")


def render_element(g: ModuleElement) -> str:
    """Canonical text; variables and basis names come from the ambient."""
    if g.is_zero():
        return "0"
    amb = g.ambient

    def ring_text(terms) -> str:
        parts = []
        for i, t in enumerate(terms):
            c = t.coefficient
            monos = []
            for j, e in enumerate(t.monomial.exponents):
                if e:
                    monos.append(amb.variables[j] + (f"^{e}" if e != 1 else ""))
            body = "*".join(monos)
            mag = abs(c)
            if body and mag == 1:
                piece = body
            elif body:
                piece = f"{mag}*{body}"
            else:
                piece = str(mag)
            if i == 0:
                parts.append(piece if c > 0 else f"-{piece}")
            else:
                parts.append((" + " if c > 0 else " - ") + piece)
        return "".join(parts)

    if amb.is_ring():
        return ring_text(g.terms)

    chunks = []
    for b in range(1, amb.rank + 1):
        terms = [t for t in g.terms if t.monomial.basis == b]
        if not terms:
            continue
        terms.sort(key=lambda t: t.monomial.key(), reverse=True)
        name = amb.basis_names[b - 1]
        if len(terms) == 1:
            t = terms[0]
            ring_part = ring_text([t])
            if ring_part == "1":
                text = name
            elif ring_part == "-1":
                text = f"-{name}"
            else:
                text = f"{ring_part}*{name}"
        else:
            text = f"({ring_text(terms)})*{name}"
        chunks.append(text)
    out = chunks[0]
    for c in chunks[1:]:
        out += f" - {c[1:]}" if c.startswith("-") else f" + {c}"
    return out


class _ElementParser:
    def __init__(self, text: str, ambient: Ambient):
        self.ambient = ambient
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ParseError(f"unexpected character {text[pos]!r}", pos)
                break
            self.tokens.append((m.group(1), m.start(1)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def next(self):
        if self.i >= len(self.tokens):
            raise ParseError("unexpected end of input")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> ModuleElement:
        g = self.element()
        if self.peek() is not None:
            tok, pos = self.tokens[self.i]
            raise ParseError(f"unexpected token {tok!r}", pos)
        return g

    def element(self) -> ModuleElement:
        sign = 1
        if self.peek() == "-":
            self.next()
            sign = -1
        elif self.peek() == "+":
            self.next()
        g = self.addend()
        if sign < 0:
            g = -g
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            h = self.addend()
            g = g + h if op == "+" else g - h
        return g

    def addend(self) -> ModuleElement:
        g = self.factor()
        while self.peek() == "*":
            self.next()
            g = self._mul(g, self.factor())
        return g

    def factor(self) -> ModuleElement:
        tok, pos = self.next()
        amb = self.ambient
        if tok == "(":
            g = self.element()
            closing, cpos = self.next()
            if closing != ")":
                raise ParseError("expected ')'", cpos)
            return g
        if tok.isdigit():
            return ModuleElement.from_term(amb, int(tok), (0,) * amb.nvars)
        if tok == "-":
            inner = self.factor()
            return -inner
        if not tok[0].isalpha() and tok[0] != "_":
            raise ParseError(f"unexpected token {tok!r}", pos)
        exp = 1
        if self.peek() == "^":
            self.next()
            exp = self._integer()
        if not amb.is_ring() and tok in amb.basis_names:
            if exp != 1:
                raise ParseError(f"basis vector {tok!r} cannot carry an exponent", pos)
            basis = amb.basis_names.index(tok) + 1
            return ModuleElement.from_term(amb, 1, (0,) * amb.nvars, basis)
        if tok in amb.variables:
            j = amb.var_index(tok)
            exps = tuple(exp if i == j else 0 for i in range(amb.nvars))
            return ModuleElement.from_term(amb, 1, exps)
        raise ParseError(f"unknown name {tok!r}", pos)

    def _integer(self) -> int:
        tok, pos = self.next()
        sign = 1
        if tok == "-":
            sign = -1
            tok, pos = self.next()
        if not tok.isdigit():
            raise ParseError("expected an integer exponent", pos)
        return sign * int(tok)

    def _mul(self, g: ModuleElement, h: ModuleElement) -> ModuleElement:
        g_mod = any(t.monomial.basis is not None for t in g.terms)
        h_mod = any(t.monomial.basis is not None for t in h.terms)
        if g_mod and h_mod:
            raise ParseError("cannot multiply two module elements")
        if g_mod:
            g, h = h, g
        # g is now pure ring content; lift it to the coefficient ring.
        lam = ModuleElement.from_dict(
            self.ambient.ring(),
            {(e, None): c for (e, _b), c in g.as_dict().items()})
        return h.mul_ring(lam)


def parse_element(text: str, ambient: Ambient) -> ModuleElement:
    """Parse canonical element text, ring or module depending on the ambient."""
    g = _ElementParser(text, ambient).parse()
    if not ambient.is_ring() and any(t.monomial.basis is None for t in g.terms):
        raise ParseError("module element text must attach every term to a basis name")
    return g
