"""Deciding the word problem and assembling area certificates.

A word is trivial iff its exponent sums vanish and its ordered form lies in
the submodule generated by the relator vectors; membership is decided by
Groebner normal forms after embedding the Laurent ambient, and certified by
an exact division.  A brute-force enumerator over bounded combinations
serves as the independent oracle.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .collection import CostLedger, OrderedForm, ordered_form, render_ordered_word
from .elements import ModuleElement, Monomial, monomial_word_degree
from .groebner import (DivisionCertificate, GroebnerBasis, buchberger_strong,
                       divide_with_certificate, laurent_embed)
from .presentation import GroupWord, Presentation, exponent_sums, relator_module


@dataclass(frozen=True)
class ModuleContext:
    """Cached relator-submodule data for one presentation."""

    presentation: Presentation
    relator_vectors: tuple[ModuleElement, ...]
    basis: GroebnerBasis
    embed: callable


_CONTEXTS: dict[Presentation, ModuleContext] = {}


def module_context(p: Presentation) -> ModuleContext:
    ctx = _CONTEXTS.get(p)
    if ctx is None:
        vectors = tuple(relator_module(p))
        _, embedded, embed = laurent_embed(list(vectors), p.module_ambient())
        basis = buchberger_strong(embedded)
        ctx = ModuleContext(p, vectors, basis, embed)
        _CONTEXTS[p] = ctx
    return ctx


def constant_k(p: Presentation, k1: int = 2) -> Optional[int]:
    """K = max(K1, K2^(2k)) with K2 = max over the tameness datum of
    (coefficient l1-norm) + 2; None without a tameness datum."""
    if p.tameness is None:
        return None
    lams = p.tameness.all_elements()
    if not lams:
        return None
    k2 = max(lam.length for lam in lams) + 2
    k = max(1, p.free_rank)
    return max(k1, k2 ** (2 * k))


@dataclass(frozen=True)
class AreaCertificate:
    word_length: int
    identity: bool
    ordered: Optional[OrderedForm]
    ledger: CostLedger
    membership: Optional[DivisionCertificate]
    assembly_bound: Optional[int]
    relative_bound: Optional[int]

    @property
    def witnessed_cost(self) -> int:
        size = self.membership.size if self.membership else 0
        return self.ledger.absolute_total + size

    @property
    def witnessed_relative(self) -> int:
        size = self.membership.size if self.membership else 0
        return self.ledger.relative_total + size

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "word_length": self.word_length,
            "ordered_form": self.ordered.vector.render() if self.ordered else None,
            "ledger": self.ledger.to_json(),
            "membership": self.membership.to_json() if self.membership else None,
            "witnessed_cost": self.witnessed_cost,
            "assembly_bound": str(self.assembly_bound)
            if self.assembly_bound is not None else None,
            "relative_bound": str(self.relative_bound)
            if self.relative_bound is not None else None,
        }


def _assembly_bound(n: int, K: Optional[int], basis: GroebnerBasis,
                    m: int, k: int) -> Optional[int]:
    if K is None:
        return None
    n = max(n, 1)
    P = max([f.length for f in basis.generators], default=1)
    Q = max([f.degree for f in basis.generators], default=1) or 1
    C = max(K, 4 * max(m, 1) ** 2 * P ** 2 * Q * K)
    exponent = n ** (2 * k) if k > 0 else 1
    return (C ** exponent + (n + n ** 2) ** 2 * C ** (2 * n)
            + (n + n ** 2) * (2 * C) ** n + n ** 2)


def _relative_bound(n: int, size: int) -> int:
    n = max(n, 1)
    return (n ** 2 + (4 * n - 3) * (n + n ** 2)
            + (4 * n - 3) ** 2 * (n + n ** 2) ** 2 + size + size ** 3)


def is_identity(w: GroupWord, p: Presentation,
                K: Optional[int] = None) -> tuple[bool, AreaCertificate]:
    """Decide w = 1, returning the decision with its certificate."""
    n = w.length
    if any(exponent_sums(w, p)):
        cert = AreaCertificate(n, False, None, CostLedger(), None, None, None)
        return False, cert
    form, ledger = ordered_form(w, p)
    ctx = module_context(p)
    membership = divide_with_certificate(ctx.embed(form.vector), ctx.basis)
    identity = membership.residue.is_zero()
    K = K if K is not None else constant_k(p)
    bound = _assembly_bound(n, K, ctx.basis, len(p.module_gens), p.free_rank)
    rel = _relative_bound(n, membership.size)
    cert = AreaCertificate(n, identity, form, ledger, membership, bound, rel)
    return identity, cert


def area_certificate(w: GroupWord, p: Presentation,
                     K: Optional[int] = None) -> AreaCertificate:
    ok, cert = is_identity(w, p, K)
    if not ok:
        raise ValueError("area certificates exist only for identity words")
    return cert


@dataclass(frozen=True)
class RelativeAreaReport:
    word_length: int
    witnessed_relative: int
    commutation_cost: int
    normalization_cost: int
    membership_size: int
    relative_bound: int

    def to_json(self) -> dict:
        return {
            "word_length": self.word_length,
            "witnessed_relative": self.witnessed_relative,
            "commutation_cost": self.commutation_cost,
            "normalization_cost": self.normalization_cost,
            "membership_size": self.membership_size,
            "relative_bound": str(self.relative_bound),
        }


def relative_area_certificate(w: GroupWord, p: Presentation) -> RelativeAreaReport:
    """Same pipeline with transpositions re-priced at the metabelian rates."""
    ok, cert = is_identity(w, p)
    if not ok:
        raise ValueError("relative area certificates exist only for identity words")
    ledger = cert.ledger
    return RelativeAreaReport(
        word_length=cert.word_length,
        witnessed_relative=cert.witnessed_relative,
        commutation_cost=ledger.rel_r2_merge,
        normalization_cost=(ledger.rel_r2_normalize + ledger.r1_commutators
                            + ledger.module_relations),
        membership_size=cert.membership.size,
        relative_bound=cert.relative_bound)


# ---------------------------------------------------------------------------
# Independent oracle.


def _monomial_pool(ambient, max_degree: int):
    """All exponent vectors of degree <= max_degree (torsion within order)."""
    ranges = []
    for d in ambient.torsion:
        if d:
            ranges.append(range(0, min(d - 1, max_degree) + 1))
        else:
            ranges.append(range(-max_degree, max_degree + 1))
    pool = []

    def rec(i, acc, deg):
        if i == len(ranges):
            pool.append(tuple(acc))
            return
        for e in ranges[i]:
            nd = deg + abs(e)
            if nd <= max_degree:
                rec(i + 1, acc + [e], nd)

    rec(0, [], 0)
    pool.sort()
    return pool


def brute_force_min_certificate(g: ModuleElement, gens, budget):
    """Exhaustive minimal certificate search; None means budget exhausted.

    Enumerates combinations sum_i alpha_i * gens_i with alpha monomials of
    degree <= budget[0], coefficients bounded by budget[1], in increasing
    total size, and returns the first total size reproducing g exactly.
    """
    max_degree, max_coeff, max_size = budget
    gens = [f for f in gens if not f.is_zero()]
    target = {k: v for k, v in g.as_dict().items()}
    if not gens:
        return 0 if not target else None
    ambient = gens[0].ambient
    pool = _monomial_pool(ambient, max_degree)
    products = []
    for f in gens:
        for exps in pool:
            prod = f.scale_translate(1, Monomial(exps, None))
            if not prod.is_zero():
                products.append(prod.as_dict())

    partial: dict = {}

    def bump(delta: dict, c: int):
        for key, val in delta.items():
            now = partial.get(key, 0) + c * val
            if now:
                partial[key] = now
            else:
                partial.pop(key, None)

    def matches() -> bool:
        return partial == target

    def search(start: int, remaining: int) -> bool:
        if remaining == 0:
            return matches()
        for idx in range(start, len(products)):
            for mag in range(1, min(max_coeff, remaining) + 1):
                for sign in (1, -1):
                    bump(products[idx], sign * mag)
                    if search(idx + 1, remaining - mag):
                        return True
                    bump(products[idx], -sign * mag)
        return False

    for size in range(0, max_size + 1):
        if search(0, size):
            return size
    return None


# ---------------------------------------------------------------------------
# Module Dehn function estimation and growth profiles.


def module_norm(f: ModuleElement) -> int:
    """Group-word length of the ordered word realizing a module vector."""
    total = 0
    for t in f.terms:
        wd = monomial_word_degree(f.ambient, t.monomial.exponents)
        total += abs(t.coefficient) * (2 * wd + 1)
    return total


def module_dehn_upper(p: Presentation, n: int, sampler: str = "exhaustive",
                      samples: int = 200, seed: int = 0):
    """Certificate-size table over submodule elements of norm <= n.

    Returns a sorted list of rows ``(norm, max_certificate_size)``.
    """
    ctx = module_context(p)
    gens = [f for f in ctx.relator_vectors if not f.is_zero()]
    found: dict[ModuleElement, int] = {}

    def consider(f: ModuleElement):
        if f.is_zero() or module_norm(f) > n:
            return
        if f not in found:
            cert = divide_with_certificate(ctx.embed(f), ctx.basis)
            found[f] = cert.size

    if not gens:
        return []
    ambient = gens[0].ambient
    if sampler == "exhaustive":
        pool = _monomial_pool(ambient, max_degree=max(0, (n - 1) // 2))
        products = [f.scale_translate(1, Monomial(e, None))
                    for f in gens for e in pool]

        def rec(start, remaining, acc):
            consider(acc)
            if remaining == 0:
                return
            for idx in range(start, len(products)):
                for mag in range(1, remaining + 1):
                    for sign in (1, -1):
                        scaled = products[idx].scale_translate(
                            sign * mag, Monomial((0,) * ambient.nvars, None))
                        rec(idx + 1, remaining - mag, acc + scaled)

        rec(0, min(n, 4), ModuleElement.zero(ambient))
    elif sampler == "random":
        rng = random.Random(seed)
        pool = _monomial_pool(ambient, max_degree=max(1, n // 2))
        for _ in range(samples):
            acc = ModuleElement.zero(ambient)
            for _ in range(rng.randrange(1, 4)):
                f = gens[rng.randrange(len(gens))]
                exps = pool[rng.randrange(len(pool))]
                c = rng.choice([-2, -1, 1, 2])
                acc = acc + f.scale_translate(c, Monomial(exps, None))
            consider(acc)
    else:
        raise ValueError(f"unknown sampler {sampler!r}")

    by_norm: dict[int, int] = {}
    for f, size in found.items():
        norm = module_norm(f)
        by_norm[norm] = max(by_norm.get(norm, 0), size)
    return sorted(by_norm.items())


def _balance(word_letters, p: Presentation) -> GroupWord:
    w = GroupWord.from_letters(word_letters)
    sums = exponent_sums(w, p)
    fix = []
    for i, s in enumerate(sums):
        d = p.torsion_orders[i]
        if d:
            if s:
                fix.append((p.t_names[i], d - s))
        elif s:
            fix.append((p.t_names[i], -s))
    return w * GroupWord.from_letters(fix)


def random_identity_word(p: Presentation, n: int, rng: random.Random) -> GroupWord:
    """A random trivial word.

    A random balanced word is used directly when it already represents the
    identity (so certificate sizes stay visible); otherwise it is multiplied
    by the inverse of its collected form.
    """
    names = list(p.module_gens) + list(p.t_names)
    letters = []
    for _ in range(max(1, n // 2)):
        letters.append((rng.choice(names), rng.choice([-1, 1])))
    v = _balance(letters, p)
    if is_identity(v, p)[0]:
        return v
    form, _ = ordered_form(v, p)
    return v * render_ordered_word(form.vector, p).inverse()


def dehn_profile(p: Presentation, n_max: int, samples: int = 10, seed: int = 0,
                 witnesses=None):
    """Growth table rows (n, max witnessed cost, max certificate size, bound).

    Random trivial words of bounded length are sampled per row; hard-coded
    preset witness families may be passed as ``witnesses(n) -> [GroupWord]``.
    """
    if n_max < 2:
        raise ValueError("profile needs n_max >= 2")
    rng = random.Random(seed)
    K = constant_k(p)
    ctx = module_context(p)
    rows = []
    for n in range(2, n_max + 1):
        max_cost = 0
        max_size = 0
        words = [random_identity_word(p, n, rng) for _ in range(samples)]
        if witnesses is not None:
            words.extend(witnesses(n))
        for w in words:
            ok, cert = is_identity(w, p)
            if not ok:
                raise AssertionError(f"profile word {w} is not an identity")
            max_cost = max(max_cost, cert.witnessed_cost)
            max_size = max(max_size, cert.membership.size)
        bound = _assembly_bound(n, K, ctx.basis, len(p.module_gens), p.free_rank)
        rows.append((n, max_cost, max_size, bound if bound is not None else ""))
    return rows


def fit_power(ns, ys) -> float:
    """Least-squares exponent of y ~ n^rho on positive data."""
    pts = [(math.log(n), math.log(max(y, 1))) for n, y in zip(ns, ys) if n > 1]
    return _slope(pts)


def fit_exp(ns, ys) -> float:
    """Least-squares slope of ln(y) against n."""
    pts = [(float(n), math.log(max(y, 1))) for n, y in zip(ns, ys)]
    return _slope(pts)


def _slope(pts) -> float:
    if len(pts) < 2:
        return 0.0
    mean_x = sum(x for x, _ in pts) / len(pts)
    mean_y = sum(y for _, y in pts) / len(pts)
    num = sum((x - mean_x) * (y - mean_y) for x, y in pts)
    den = sum((x - mean_x) ** 2 for x, y in pts)
    return num / den if den else 0.0
