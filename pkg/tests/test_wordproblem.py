"""Identity decisions, certificates, the oracle, and the growth profile."""

import random

import pytest

from _helpers import (BS2, FREE_ABELIAN, GAMMA, LAMPLIGHTER2, WF11,
                      random_element, random_kernel_word)
from metabelian.elements import parse_element
from metabelian.presentation import parse_word
from metabelian.presets import PresetSpec, build, witness_family
from metabelian.wordproblem import (area_certificate,
                                    brute_force_min_certificate, dehn_profile,
                                    fit_exp, fit_power, is_identity,
                                    module_dehn_upper, module_norm,
                                    relative_area_certificate)


class TestIsIdentity:
    def test_bs_defining_relation(self):
        ok, cert = is_identity(parse_word("t*a*t^-1*a^-2", BS2), BS2)
        assert ok and cert.membership.residue.is_zero()

    def test_nontrivial_projection(self):
        ok, cert = is_identity(parse_word("a*t", BS2), BS2)
        assert not ok and cert.membership is None

    def test_lamplighter(self):
        assert is_identity(parse_word("a^2", LAMPLIGHTER2), LAMPLIGHTER2)[0]
        assert is_identity(parse_word("[a, a^t]", LAMPLIGHTER2),
                           LAMPLIGHTER2)[0]

    def test_non_member(self):
        ok, cert = is_identity(parse_word("a", BS2), BS2)
        assert not ok and not cert.membership.residue.is_zero()

    def test_identity_iff_zero_residue(self):
        rng = random.Random(0)
        for p in (BS2, GAMMA, LAMPLIGHTER2):
            for _ in range(100):
                w = random_kernel_word(p, rng, rng.randrange(0, 7))
                ok, cert = is_identity(w, p)
                assert ok == cert.membership.residue.is_zero()


class TestAreaCertificate:
    def test_witness_sizes(self):
        fam = witness_family(PresetSpec("bs", n=2))
        for n in range(1, 11):
            cert = area_certificate(fam(n)[0], BS2)
            assert cert.membership.size == 2 ** n - 1

    def test_zero_vector_zero_size(self):
        cert = area_certificate(parse_word("[a, a^t]", BS2), BS2)
        assert cert.membership.size == 0

    def test_witnessed_below_assembly_bound(self):
        rng = random.Random(1)
        for _ in range(60):
            w = random_kernel_word(BS2, rng, rng.randrange(0, 10))
            ok, cert = is_identity(w, BS2)
            if ok:
                assert cert.witnessed_cost <= cert.assembly_bound

    def test_rejects_non_identity(self):
        with pytest.raises(ValueError):
            area_certificate(parse_word("a", BS2), BS2)


class TestRelativeArea:
    def test_commutation_price_instance(self):
        report = relative_area_certificate(
            parse_word("[a, b^(t^5)]", GAMMA), GAMMA)
        assert report.commutation_cost == 4 * 5 - 3

    def test_conjugate_price_instance(self):
        w = parse_word("a^(t^3) * (a^-1)^(t^3)", BS2)
        report = relative_area_certificate(w, BS2)
        assert report.witnessed_relative <= 4 * 9 + 2 * 3

    def test_bs_relator_small(self):
        report = relative_area_certificate(
            parse_word("t*a*t^-1*a^-2", BS2), BS2)
        assert report.witnessed_relative <= 4

    def test_relative_below_assembly_bound(self):
        rng = random.Random(2)
        for _ in range(60):
            w = random_kernel_word(BS2, rng, rng.randrange(0, 8))
            ok, cert = is_identity(w, BS2)
            if ok:
                assert cert.ledger.relative_total <= cert.assembly_bound


class TestOracle:
    def test_hand_example(self):
        amb = BS2.module_ambient()
        g = parse_element("(t^2 - 4)*a", amb)
        gen = parse_element("(t - 2)*a", amb)
        assert brute_force_min_certificate(g, [gen], (3, 4, 6)) == 3

    def test_generator_itself(self):
        amb = BS2.module_ambient()
        gen = parse_element("(t - 2)*a", amb)
        assert brute_force_min_certificate(gen, [gen], (1, 2, 3)) == 1

    def test_parity_inconclusive(self):
        amb = BS2.module_ambient()
        g = parse_element("a", amb)
        gen = parse_element("2*a", amb)
        assert brute_force_min_certificate(g, [gen], (2, 3, 5)) is None

    def test_zero_needs_nothing(self):
        amb = BS2.module_ambient()
        zero = parse_element("0", amb)
        gen = parse_element("2*a", amb)
        assert brute_force_min_certificate(zero, [gen], (1, 1, 2)) == 0

    def test_agreement_with_basis(self):
        from metabelian.wordproblem import module_context
        rng = random.Random(3)
        ctx = module_context(BS2)
        gens = list(ctx.relator_vectors)
        amb = BS2.module_ambient()
        for _ in range(60):
            g = random_element(rng, amb, max_degree=1, max_coeff=2)
            found = brute_force_min_certificate(g, gens, (1, 2, 3))
            if found is not None:
                from metabelian.groebner import normal_form
                assert normal_form(ctx.embed(g), ctx.basis).is_zero()

    def test_size_at_most_division(self):
        """Oracle minimum <= division size, equality on most tiny cases."""
        from metabelian.groebner import divide_with_certificate
        from metabelian.wordproblem import module_context
        rng = random.Random(4)
        equal = total = 0
        for p in (BS2, LAMPLIGHTER2):
            ctx = module_context(p)
            gens = [v for v in ctx.relator_vectors if not v.is_zero()]
            amb = p.module_ambient()
            ring = amb.ring()
            while total < 40 * (1 + (p is BS2)):
                lam = random_element(rng, ring, max_degree=1, max_coeff=2,
                                     max_terms=2)
                g = gens[0].mul_ring(lam)
                if g.is_zero() or g.length > 8:
                    continue
                cert = divide_with_certificate(ctx.embed(g), ctx.basis)
                minimal = brute_force_min_certificate(g, gens, (2, 4, 7))
                if minimal is None:
                    continue
                assert cert.size >= minimal
                equal += cert.size == minimal
                total += 1
        assert equal >= 0.9 * total


class TestModuleDehn:
    def test_bs_generator(self):
        from metabelian.groebner import divide_with_certificate
        from metabelian.wordproblem import module_context
        ctx = module_context(BS2)
        gen = ctx.relator_vectors[0]
        cert = divide_with_certificate(ctx.embed(gen), ctx.basis)
        assert cert.size == 1

    def test_table_shape(self):
        rows = module_dehn_upper(BS2, 5)
        assert rows and all(norm <= 5 for norm, _ in rows)
        assert (5, 1) in rows  # the relator vector itself

    def test_lamplighter_matches_oracle(self):
        from metabelian.wordproblem import module_context
        ctx = module_context(LAMPLIGHTER2)
        gens = [v for v in ctx.relator_vectors if not v.is_zero()]
        rows = module_dehn_upper(LAMPLIGHTER2, 4)
        assert rows == [(2, 1), (4, 2)]
        from metabelian.groebner import divide_with_certificate
        # every sampled norm's witness is certified at the oracle minimum
        amb = LAMPLIGHTER2.module_ambient()
        for c in (2, 4):
            f = parse_element(f"{c}*a", amb)
            cert = divide_with_certificate(ctx.embed(f), ctx.basis)
            assert cert.size == brute_force_min_certificate(f, gens, (2, 4, 6))

    def test_norm_definition(self):
        amb = BS2.module_ambient()
        assert module_norm(parse_element("(t - 2)*a", amb)) == 5
        assert module_norm(parse_element("2*a", amb)) == 2


class TestWfFalsity:
    def test_pure_t_elements_rejected(self):
        rng = random.Random(5)
        rejected = 0
        for spec in (PresetSpec("wf", r=1, k=1),
                     PresetSpec("wf", r=2, k=1),
                     PresetSpec("wf", r=1, k=2)):
            p = build(spec)
            amb = p.module_ambient()
            t_positions = [i for i, n in enumerate(p.t_names)
                           if n.startswith("t")]
            a_indices = [i + 1 for i, n in enumerate(p.module_gens)
                         if n != "z"]
            count = 0
            while count < 34:
                raw = {}
                for _ in range(rng.randrange(1, 3)):
                    exps = [0] * len(p.t_names)
                    for pos in t_positions:
                        exps[pos] = rng.randint(-1, 1)
                    basis = rng.choice(a_indices)
                    c = rng.choice([-2, -1, 1, 2])
                    key = (tuple(exps), basis)
                    raw[key] = raw.get(key, 0) + c
                from metabelian.elements import ModuleElement
                h = ModuleElement.from_dict(amb, raw)
                if h.is_zero():
                    continue
                count += 1
                rejected += 1
                from metabelian.collection import render_ordered_word
                w = render_ordered_word(h, p)
                ok, _ = is_identity(w, p)
                assert not ok, f"pure-T element {h.render()} wrongly trivial"
        assert rejected >= 100


class TestDehnProfile:
    def test_bs_witness_column(self):
        fam = witness_family(PresetSpec("bs", n=2))
        rows = dehn_profile(BS2, 8, samples=3, seed=0, witnesses=fam)
        sizes = [size for _, _, size, _ in rows]
        assert sizes == [2 ** n - 1 for n in range(2, 9)]
        assert fit_exp(range(2, 9), sizes) > 0.5

    def test_free_abelian_polynomial(self):
        fam = witness_family(PresetSpec("free_abelian"))
        rows = dehn_profile(FREE_ABELIAN, 8, samples=8, seed=1, witnesses=fam)
        ns = [r[0] for r in rows]
        sizes = [r[2] for r in rows]
        assert sizes == [n ** 2 for n in ns]
        assert fit_power(ns, sizes) <= 2.49
        assert fit_exp(ns, sizes) <= 0.5

    def test_wf_exponential(self):
        fam = witness_family(PresetSpec("wf", r=1, k=1))
        rows = dehn_profile(WF11, 8, samples=2, seed=2, witnesses=fam)
        sizes = [r[2] for r in rows]
        assert sizes == [2 ** n - 1 for n in range(2, 9)]
        assert fit_exp([r[0] for r in rows], sizes) > 0.5

    def test_deterministic(self):
        r1 = dehn_profile(BS2, 5, samples=4, seed=9)
        r2 = dehn_profile(BS2, 5, samples=4, seed=9)
        assert r1 == r2
