"""Presentations of metabelian groups given as a module extension of T.

A presentation lists module generators, infinite-order t-generators,
torsion t-generators with their orders, relator words with zero exponent
sum in every t-generator, a commutator table assigning a module generator
to each pair of t-generators, and an optional tameness datum (finite sets
of centralizer / co-centralizer ring elements).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional

from .elements import Ambient, ModuleElement, parse_element
from .errors import ParseError

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_WORD_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+|\^|\*|\[|\]|\(|\)|,|\-)")


def _condense(letters):
    out = []
    for name, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == name:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((name, merged))
        else:
            out.append((name, exp))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    """Freely condensed word: adjacent letters carry distinct generator names."""

    letters: tuple[tuple[str, int], ...]

    @staticmethod
    def from_letters(letters) -> "GroupWord":
        return GroupWord(_condense(letters))

    @property
    def length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((n, -e) for n, e in reversed(self.letters)))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord.from_letters(self.letters + other.letters)

    def conjugate_by(self, v: "GroupWord") -> "GroupWord":
        """x^v = v^-1 x v."""
        return v.inverse() * self * v

    def is_empty(self) -> bool:
        return not self.letters

    def render(self) -> str:
        if not self.letters:
            return "1"
        return "*".join(n if e == 1 else f"{n}^{e}" for n, e in self.letters)

    def __str__(self) -> str:
        return self.render()


EMPTY_WORD = GroupWord(())


def commutator(x: GroupWord, y: GroupWord) -> GroupWord:
    return x.inverse() * y.inverse() * x * y


@dataclass(frozen=True)
class TamenessDatum:
    centralizer: tuple[ModuleElement, ...]
    co_centralizer: tuple[ModuleElement, ...]

    def all_elements(self):
        return self.centralizer + self.co_centralizer


@dataclass(frozen=True)
class Presentation:
    module_gens: tuple[str, ...]
    free_gens: tuple[str, ...]
    torsion_gens: tuple[tuple[str, int], ...]
    relators: tuple[GroupWord, ...]
    commutator_table: tuple[tuple[tuple[str, str], str], ...] = ()
    tameness: Optional[TamenessDatum] = None

    # -- derived structure ---------------------------------------------------

    @property
    def t_names(self) -> tuple[str, ...]:
        return self.free_gens + tuple(n for n, _ in self.torsion_gens)

    @property
    def torsion_orders(self) -> tuple[int, ...]:
        return (0,) * len(self.free_gens) + tuple(d for _, d in self.torsion_gens)

    @property
    def free_rank(self) -> int:
        return len(self.free_gens)

    def module_ambient(self) -> Ambient:
        return Ambient(self.t_names, self.torsion_orders,
                       len(self.module_gens), self.module_gens, laurent=True)

    def ring_ambient(self) -> Ambient:
        return self.module_ambient().ring()

    def module_index(self, name: str) -> int:
        """1-based basis index of a module generator."""
        return self.module_gens.index(name) + 1

    def t_index(self, name: str) -> int:
        try:
            return self.t_names.index(name)
        except ValueError:
            raise KeyError(f"unknown t-generator {name!r}") from None

    def commutator_gen(self, i: int, j: int) -> str:
        """Module generator realizing the commutator of t-generators i < j."""
        ni, nj = self.t_names[i], self.t_names[j]
        for (a, b), gen in self.commutator_table:
            if (a, b) == (ni, nj):
                return gen
        raise KeyError(f"commutator table misses the pair ({ni}, {nj})")

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        doc = {
            "module_generators": list(self.module_gens),
            "free_generators": list(self.free_gens),
            "torsion_generators": [{"name": n, "order": d}
                                   for n, d in self.torsion_gens],
            "commutator_table": [{"pair": [a, b], "equals": g}
                                 for (a, b), g in self.commutator_table],
            "relators": [w.render() for w in self.relators],
        }
        if self.tameness is not None:
            doc["lambda"] = {
                "centralizer": [e.render() for e in self.tameness.centralizer],
                "co_centralizer": [e.render()
                                   for e in self.tameness.co_centralizer],
            }
        return doc

    def render(self) -> str:
        return json.dumps(self.to_json(), indent=2)


# ---------------------------------------------------------------------------
# Word DSL.


class _WordParser:
    """word := factor ('*' factor)*; factor := atom ('^' exponent)?;
    exponent := integer | name | '(' word ')'; atom := name |
    '[' word ',' word ']' | '(' word ')'.  Nested conjugation needs
    explicit parentheses."""

    def __init__(self, text: str, names):
        self.names = names
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _WORD_TOKEN.match(text, pos)
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
            raise ParseError("unexpected end of word")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> GroupWord:
        w = self.word()
        if self.peek() is not None:
            tok, pos = self.tokens[self.i]
            raise ParseError(f"unexpected token {tok!r}", pos)
        return w

    def word(self) -> GroupWord:
        w = self.factor()
        while self.peek() == "*":
            self.next()
            w = w * self.factor()
        return w

    def factor(self) -> GroupWord:
        w = self.atom()
        if self.peek() == "^":
            self.next()
            tok = self.peek()
            if tok == "(":
                self.next()
                v = self.word()
                closing, cpos = self.next()
                if closing != ")":
                    raise ParseError("expected ')'", cpos)
                w = w.conjugate_by(v)
            elif tok == "-" or (tok is not None and tok.isdigit()):
                e = self._integer()
                w = GroupWord.from_letters(tuple((n, x * e) for n, x in w.letters)
                                           if len(w.letters) == 1 else
                                           self._power(w, e))
            elif tok is not None and _NAME.fullmatch(tok):
                nm, pos = self.next()
                self._check_name(nm, pos)
                w = w.conjugate_by(GroupWord(((nm, 1),)))
            else:
                raise ParseError("expected an exponent after '^'")
            if self.peek() == "^":
                raise ParseError(
                    "nested conjugation needs parentheses, e.g. a^(t*s)")
        return w

    @staticmethod
    def _power(w: GroupWord, e: int):
        if e == 0:
            return ()
        base = w.letters if e > 0 else w.inverse().letters
        return base * abs(e)

    def atom(self) -> GroupWord:
        tok, pos = self.next()
        if tok == "(":
            w = self.word()
            closing, cpos = self.next()
            if closing != ")":
                raise ParseError("expected ')'", cpos)
            return w
        if tok == "[":
            x = self.word()
            comma, cpos = self.next()
            if comma != ",":
                raise ParseError("expected ',' in commutator", cpos)
            y = self.word()
            closing, cpos = self.next()
            if closing != "]":
                raise ParseError("expected ']'", cpos)
            return commutator(x, y)
        if tok == "1":
            return EMPTY_WORD
        if _NAME.fullmatch(tok):
            self._check_name(tok, pos)
            return GroupWord(((tok, 1),))
        raise ParseError(f"unexpected token {tok!r}", pos)

    def _integer(self) -> int:
        tok, pos = self.next()
        sign = 1
        if tok == "-":
            sign = -1
            tok, pos = self.next()
        if not tok.isdigit():
            raise ParseError("expected an integer", pos)
        return sign * int(tok)

    def _check_name(self, name: str, pos: int):
        if self.names is not None and name not in self.names:
            raise ParseError(f"unknown generator {name!r}", pos)


def parse_word(text: str, p: Optional[Presentation] = None) -> GroupWord:
    names = None
    if p is not None:
        names = set(p.module_gens) | set(p.t_names)
    return _WordParser(text, names).parse()


def exponent_sums(w: GroupWord, p: Presentation) -> tuple[int, ...]:
    """Image of the word in T as an exponent vector (torsion reduced)."""
    sums = [0] * len(p.t_names)
    index = {n: i for i, n in enumerate(p.t_names)}
    for name, exp in w.letters:
        if name in index:
            sums[index[name]] += exp
    for i, d in enumerate(p.torsion_orders):
        if d:
            sums[i] %= d
    return tuple(sums)


def relator_module(p: Presentation) -> list[ModuleElement]:
    """Module vectors of all relators; they generate the relation submodule."""
    from .collection import ordered_form

    return [ordered_form(r, p)[0].vector for r in p.relators]


# ---------------------------------------------------------------------------
# Presentation files.


def parse_presentation(text: str) -> Presentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("presentation file must be a JSON object")

    module_gens = tuple(doc.get("module_generators", []))
    free_gens = tuple(doc.get("free_generators", []))
    torsion_gens = tuple((t["name"], int(t["order"]))
                         for t in doc.get("torsion_generators", []))
    names = list(module_gens) + list(free_gens) + [n for n, _ in torsion_gens]
    for n in names:
        if not _NAME.fullmatch(n):
            raise ParseError(f"invalid generator name {n!r}")
        if n.endswith("__inv"):
            raise ParseError(f"generator name {n!r} collides with inverse variables")
    if len(set(names)) != len(names):
        raise ParseError("generator names must be distinct")
    for n, d in torsion_gens:
        if d < 2:
            raise ParseError(f"torsion generator {n!r} needs order >= 2")

    table = []
    for row in doc.get("commutator_table", []):
        pair = tuple(row["pair"])
        gen = row["equals"]
        if gen not in module_gens:
            raise ParseError(f"commutator table target {gen!r} is not a module generator")
        table.append((pair, gen))

    p = Presentation(
        module_gens=module_gens,
        free_gens=free_gens,
        torsion_gens=torsion_gens,
        relators=(),
        commutator_table=tuple(table),
        tameness=None)

    t_names = p.t_names
    if len(t_names) >= 2:
        have = {pair for pair, _ in p.commutator_table}
        for i in range(len(t_names)):
            for j in range(i + 1, len(t_names)):
                if (t_names[i], t_names[j]) not in have:
                    raise ParseError(
                        f"commutator table misses the pair ({t_names[i]}, {t_names[j]})")
    for pair, _ in p.commutator_table:
        if pair[0] not in t_names or pair[1] not in t_names:
            raise ParseError(f"commutator table pair {pair} uses unknown generators")
        if p.t_index(pair[0]) >= p.t_index(pair[1]):
            raise ParseError(f"commutator table pair {pair} must be ordered (i < j)")

    relators = []
    for rtext in doc.get("relators", []):
        w = parse_word(rtext, p)
        sums = exponent_sums(w, p)
        if any(sums):
            raise ParseError(
                f"relator {rtext!r} has nonzero t-exponent sum {sums}")
        relators.append(w)

    tameness = None
    if "lambda" in doc and doc["lambda"]:
        ring = p.ring_ambient()
        lam = doc["lambda"]

        def _parse_all(entries):
            out = []
            for etext in entries:
                e = parse_element(etext, ring)
                if e.is_zero():
                    raise ParseError("tameness datum elements must be nonzero")
                out.append(e)
            return tuple(out)

        tameness = TamenessDatum(
            centralizer=_parse_all(lam.get("centralizer", [])),
            co_centralizer=_parse_all(lam.get("co_centralizer", [])))

    return Presentation(
        module_gens=module_gens,
        free_gens=free_gens,
        torsion_gens=torsion_gens,
        relators=tuple(relators),
        commutator_table=tuple(table),
        tameness=tameness)
