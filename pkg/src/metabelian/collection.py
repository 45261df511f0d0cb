"""Collection of words in the module kernel into ordered form, with costs.

The pipeline splits a word into module-letter conjugates and a pure-T tail,
rewrites the tail into commutator conjugates (which the commutator table
turns into module letters), normalizes every conjugator into an ordered
monomial, and finally sorts all conjugates into the canonical vector,
charging the ledger per relation class:

* r1: commutator introductions/eliminations (one per tail replacement, two
  per emitted pair during conjugator normalization),
* r2: one per adjacent transposition of conjugates,
* module relations: relator applications, including torsion power wraps,
* free steps: free-group manipulations (cost zero in every total).

The relative totals re-price each transposition at ``4*d - 3`` where ``d``
is the word length of the conjugator quotient, the commutation price in the
metabelian variety.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .elements import ModuleElement, monomial_word_degree
from .errors import ExponentSumError
from .presentation import (EMPTY_WORD, GroupWord, Presentation, commutator,
                           exponent_sums)


@dataclass
class CostLedger:
    r1_commutators: int = 0
    r2_commutations: int = 0
    module_relations: int = 0
    free_steps: int = 0
    rel_r2_merge: int = 0      # relative re-pricing of the final sort
    rel_r2_normalize: int = 0  # relative re-pricing of emission cancellations

    @property
    def absolute_total(self) -> int:
        return self.r1_commutators + self.r2_commutations + self.module_relations

    @property
    def relative_total(self) -> int:
        return (self.r1_commutators + self.module_relations
                + self.rel_r2_merge + self.rel_r2_normalize)

    def add(self, other: "CostLedger"):
        self.r1_commutators += other.r1_commutators
        self.r2_commutations += other.r2_commutations
        self.module_relations += other.module_relations
        self.free_steps += other.free_steps
        self.rel_r2_merge += other.rel_r2_merge
        self.rel_r2_normalize += other.rel_r2_normalize

    def to_json(self) -> dict:
        return {
            "r1_commutators": self.r1_commutators,
            "r2_commutations": self.r2_commutations,
            "module_relations": self.module_relations,
            "free_steps": self.free_steps,
            "absolute_total": self.absolute_total,
            "relative_total": self.relative_total,
        }


@dataclass(frozen=True)
class OrderedForm:
    """Canonical module vector of a kernel word, with the source length."""

    vector: ModuleElement
    source_length: int

    def render_word(self, p: Presentation) -> GroupWord:
        return render_ordered_word(self.vector, p)


# Sign cases for one adjacent swap t_j^delta * t_s^eps -> t_s^eps * t_j^delta * c^g,
# c = [t_s, t_j]; values are (sign of c, local conjugator letters in s/j slots).
_SWAP_CASES = {
    (1, 1): (-1, ()),
    (1, -1): (1, (("j", -1),)),
    (-1, 1): (1, (("s", -1),)),
    (-1, -1): (-1, (("j", -1), ("s", -1))),
}


def _swap_emission(p: Presentation, s: int, j: int, eps: int, delta: int,
                   right_letters) -> tuple[int, int, int, GroupWord]:
    """Emission for pushing t_s^eps left past t_j^delta; returns
    (sign, s, j, conjugator word) with the right context appended."""
    sign, template = _SWAP_CASES[(eps, delta)]
    names = {"s": p.t_names[s], "j": p.t_names[j]}
    letters = tuple((names[slot], e) for slot, e in template) + tuple(right_letters)
    return sign, s, j, GroupWord.from_letters(letters)


def _word_units(w: GroupWord):
    """Explode a condensed word into unit letters (name, +-1)."""
    units = []
    for name, exp in w.letters:
        step = 1 if exp > 0 else -1
        units.extend((name, step) for _ in range(abs(exp)))
    return units


def split_conjugates(w: GroupWord, p: Presentation):
    """Free rewrite w = prod_i b_i^{v_i} * tail with v_i the inverse prefix.

    Items keep the letter multiplicity: ``(coeff, basis_index, v)`` stands
    for ``coeff`` copies of the same conjugate.  Costs nothing.
    """
    module = set(p.module_gens)
    prefix: list[tuple[str, int]] = []
    items = []
    for name, exp in w.letters:
        if name in module:
            v = GroupWord.from_letters(tuple((n, -e) for n, e in reversed(prefix)))
            items.append((exp, p.module_index(name), v))
        else:
            prefix.append((name, exp))
    tail = GroupWord.from_letters(prefix)
    return items, tail


def _cancel_units(units):
    out = []
    for u in units:
        if out and out[-1][0] == u[0] and out[-1][1] == -u[1]:
            out.pop()
        else:
            out.append(u)
    return out


def collect_tail(tail: GroupWord, p: Presentation):
    """Gather t-letters index by index, recording commutator emissions.

    The working word is kept freely reduced between gathering steps.
    Returns ``(emissions, blocks)`` where emissions are
    ``(sign, s, j, conjugator)`` in the order they appear in the rewritten
    word and blocks are the gathered front powers ``(var_index, net_exp)``.
    Freely, ``tail = prod(blocks) * prod(emissions as [t_s,t_j]^(sign*conj))``.
    """
    sums = exponent_sums(tail, p)
    if any(sums):
        raise ExponentSumError(f"tail {tail} has nonzero exponent sums {sums}")
    letters = _word_units(tail)
    index = {n: i for i, n in enumerate(p.t_names)}
    emissions = []
    blocks = []
    while True:
        letters = _cancel_units(letters)
        if not letters:
            break
        i = min(index[n] for n, _ in letters)
        name = p.t_names[i]
        front = 0
        while front < len(letters) and letters[front][0] == name:
            front += 1
        pos = next((q for q in range(front, len(letters))
                    if letters[q][0] == name), None)
        if pos is None:
            # everything gathered; cut the front power off and continue
            blocks.append((i, sum(e for _, e in letters[:front])))
            letters = letters[front:]
            continue
        eps = letters[pos][1]
        q = pos
        while q > front:
            other = letters[q - 1]
            j = index[other[0]]
            emissions.append(_swap_emission(
                p, i, j, eps, other[1], letters[q + 1:]))
            letters[q - 1], letters[q] = letters[q], letters[q - 1]
            q -= 1
    emissions.reverse()
    return emissions, blocks


def commutator_collect(tail: GroupWord, p: Presentation, ledger=None):
    """Rewrite a zero-sum tail into module-letter conjugates via the table.

    Charges one r1 per commutator replacement and one module relation per
    torsion power eliminated; free-generator front blocks cancel freely.
    """
    ledger = ledger if ledger is not None else CostLedger()
    emissions, blocks = collect_tail(tail, p)
    items = []
    for sign, s, j, conj in emissions:
        gen = p.commutator_gen(s, j)
        items.append((sign, p.module_index(gen), conj))
        ledger.r1_commutators += 1
    for var, net in blocks:
        if net == 0:
            continue
        d = p.torsion_orders[var]
        if d == 0 or net % d != 0:
            raise ExponentSumError(
                f"tail leaves a nonzero block {p.t_names[var]}^{net}")
        ledger.module_relations += abs(net) // d
    return items, ledger


def push_letter(prefix, letter: tuple[str, int], p: Presentation, ledger=None):
    """Insert one t-letter into an ordered monomial word.

    ``prefix`` is the exponent vector of the ordered word; returns the new
    vector and the emitted commutator conjugates (sign, s, j, conjugator) in
    the order they appear in the rewritten word.  When a ledger is given,
    each emission charges two r1 applications (the conjugate pair turns into
    module letters on both sides).
    """
    name, eps = letter
    if eps not in (1, -1):
        raise ValueError("push one letter at a time")
    s = p.t_index(name)
    exps = list(prefix)
    emissions = []
    crossed: list[tuple[str, int]] = []
    for j in range(len(exps) - 1, s, -1):
        b = exps[j]
        if b == 0:
            continue
        step = 1 if b > 0 else -1
        for _ in range(abs(b)):
            emissions.append(_swap_emission(p, s, j, eps, step, crossed))
            crossed.insert(0, (p.t_names[j], step))
    exps[s] += eps
    emissions.reverse()
    if ledger is not None:
        ledger.r1_commutators += 2 * len(emissions)
    return tuple(exps), emissions


def _normalize_word(v: GroupWord, p: Presentation, ledger: CostLedger):
    """Ordered exponent vector of a conjugator word, with all charges.

    Emission pairs cancel around the conjugated letter: two r1 to turn the
    pair into module letters plus one commutation each, priced relatively by
    the emission's own conjugator length.  Torsion exponents wrap into
    [0, order) at one module relation per wrap.
    """
    amb = p.module_ambient()
    exps = tuple([0] * len(p.t_names))
    for unit in _word_units(v):
        exps, emissions = push_letter(exps, unit, p, ledger)
        for sign, s, j, conj in emissions:
            conj_exps = amb.wrap(_word_exponents(conj, p))
            price = max(1, 4 * monomial_word_degree(amb, conj_exps) - 3)
            ledger.r2_commutations += 1
            ledger.rel_r2_normalize += price
    wrapped = []
    for e, d in zip(exps, p.torsion_orders):
        if d and not 0 <= e < d:
            ledger.module_relations += abs(e // d)
            e %= d
        wrapped.append(e)
    return tuple(wrapped)


def _word_exponents(v: GroupWord, p: Presentation) -> tuple[int, ...]:
    sums = [0] * len(p.t_names)
    for name, exp in v.letters:
        sums[p.t_index(name)] += exp
    return tuple(sums)


def conjugate_normalize(sign: int, gen: str, v: GroupWord, p: Presentation):
    """Normalize b^v to a signed module monomial; returns (element, ledger)."""
    delta = CostLedger()
    exps = _normalize_word(v, p, delta)
    amb = p.module_ambient()
    elem = ModuleElement.from_term(amb, sign, exps, p.module_index(gen))
    return elem, delta


def _merge_price(amb, a_exps, b_exps) -> int:
    diff = tuple(x - y for x, y in zip(a_exps, b_exps))
    return max(1, 4 * monomial_word_degree(amb, amb.wrap(diff)) - 3)


def ordered_form(w: GroupWord, p: Presentation):
    """Full pipeline: split, collect the tail, normalize, sort; returns
    (OrderedForm, CostLedger)."""
    sums = exponent_sums(w, p)
    if any(sums):
        raise ExponentSumError(f"word has nonzero t-exponent sums {sums}")
    ledger = CostLedger()
    amb = p.module_ambient()

    split_items, tail = split_conjugates(w, p)
    ledger.free_steps += len(split_items) + 1
    tail_items, _ = commutator_collect(tail, p, ledger)

    sequence = []
    for coeff, basis, v in split_items:
        exps = _normalize_word(v, p, ledger)
        sequence.append((coeff, basis, exps))
    for sign, basis, v in tail_items:
        exps = _normalize_word(v, p, ledger)
        sequence.append((sign, basis, exps))

    raw: dict = {}
    for coeff, basis, exps in sequence:
        key = (exps, basis)
        raw[key] = raw.get(key, 0) + coeff
    vector = ModuleElement.from_dict(amb, raw)

    _charge_merge(sequence, amb, ledger)
    return OrderedForm(vector, w.length), ledger


def _charge_merge(sequence, amb, ledger: CostLedger):
    """Transposition charges for gathering conjugates into ordered form.

    Opposite conjugates of the same monomial are cancelled greedily first
    (cheapest pair each round, paying one transposition per unit crossed),
    then the remainder is sorted, paying one transposition per strictly
    inverted pair of unit conjugates.
    """
    from .order import monomial_key

    items = [[coeff, basis, exps] for coeff, basis, exps in sequence if coeff]

    def crossing_cost(i, j):
        units = 0
        rel = 0
        key = (items[i][1], items[i][2])
        for q in range(i + 1, j):
            if (items[q][1], items[q][2]) == key:
                continue
            units += abs(items[q][0])
            rel += abs(items[q][0]) * _merge_price(amb, items[j][2], items[q][2])
        return units, rel

    while True:
        best = None
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                if (items[i][1], items[i][2]) != (items[j][1], items[j][2]):
                    continue
                if (items[i][0] > 0) == (items[j][0] > 0):
                    continue
                units, rel = crossing_cost(i, j)
                mag = min(abs(items[i][0]), abs(items[j][0]))
                cand = (units * mag, rel * mag, i, j)
                if best is None or cand < best:
                    best = cand
        if best is None:
            break
        units, rel, i, j = best
        ledger.r2_commutations += units
        ledger.rel_r2_merge += rel
        mag = min(abs(items[i][0]), abs(items[j][0]))
        items[i][0] -= mag if items[i][0] > 0 else -mag
        items[j][0] -= mag if items[j][0] > 0 else -mag
        items = [it for it in items if it[0]]

    keys = [(basis, monomial_key(tuple(exps))) for _, basis, exps in items]
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            (ba, ka), (bb, kb) = keys[a], keys[b]
            if ba > bb or (ba == bb and ka < kb):
                units = abs(items[a][0]) * abs(items[b][0])
                ledger.r2_commutations += units
                ledger.rel_r2_merge += units * _merge_price(
                    amb, items[a][2], items[b][2])


def render_ordered_word(vector: ModuleElement, p: Presentation) -> GroupWord:
    """The group word a_1^{lam_1}...a_m^{lam_m} realizing a module vector."""
    letters = []
    amb = vector.ambient
    for b in range(1, amb.rank + 1):
        terms = [t for t in vector.terms if t.monomial.basis == b]
        terms.sort(key=lambda t: t.monomial.key(), reverse=True)
        name = amb.basis_names[b - 1]
        for t in terms:
            conj = []
            for i, e in enumerate(t.monomial.exponents):
                if e:
                    conj.append((amb.variables[i], e))
            letters.extend((n, -e) for n, e in reversed(conj))
            letters.append((name, t.coefficient))
            letters.extend(conj)
    return GroupWord.from_letters(letters)


def cost_bounds(n: int, p: int, K: int, Q: int, P: int, m: int, k: int) -> dict:
    """Closed-form cost bounds as exact integers.

    ``p`` doubles as the scalar magnitude |c| in the power-cost form.
    """
    if min(n, p, K, Q, P, m, k) < 0:
        raise ValueError("cost bounds need non-negative arguments")
    return {
        "abelian": n ** 2,
        "conjugate": K ** n,
        "organizer": (2 * K) ** n,
        "module_add": m ** 2 * P ** 2 * K ** (2 * Q),
        "module_scale": max(0, p - 1) * m ** 2 * P ** 2 * K ** (2 * Q),
        "module_translate": (m * P) * (2 * K) ** (k * (Q + n)),
        "pipeline_chain": n ** 2 + (n ** 2 + n) * (2 * K) ** n
                          + (n ** 2 + n) ** 2 * K ** (2 * n),
    }
