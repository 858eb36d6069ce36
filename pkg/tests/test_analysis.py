import random

import pytest

from cartanfree import (
    BlockHat,
    C,
    IndexBox,
    L,
    LOOP,
    OmegaBlock,
    OmegaBlockHV,
    OmegaLoop,
    OmegaVir,
    P_ONE,
    ProbeConfig,
    T,
    TensorOmega,
    build_action_table,
    center_report,
    composition_series_check,
    isomorphism_classify,
    module_axiom_check,
    monomial,
    parse_polynomial,
    scalar,
    simplicity_probe,
    submodule_invariance_check,
    tensor_irreducibility_probe,
)
from cartanfree.analysis import _WindowPair, _closure
from cartanfree.linalg import SpanBasis

from conftest import oracle_rank

BOX2_LOOP = IndexBox((-2, 2), (-2, 2))
BOX2_BLOCK = IndexBox((-2, 2), (0, 2))
TEST_POLYS = (P_ONE, T, monomial(2), parse_polynomial("t^3 - t"))


class TestModuleAxioms:
    def test_loop_family(self):
        report = module_axiom_check(OmegaLoop(2, 3, 1), BOX2_LOOP, TEST_POLYS)
        assert report.ok and report.pairs_checked > 0

    def test_block_hv_family(self):
        report = module_axiom_check(
            OmegaBlockHV(1, scalar("1/2"), 2), BOX2_BLOCK, TEST_POLYS
        )
        assert report.ok

    def test_block_family_rational_q(self):
        report = module_axiom_check(
            OmegaBlock(scalar("-3/2"), scalar("2i"), 1), BOX2_BLOCK, TEST_POLYS
        )
        assert report.ok

    def test_virasoro_family(self):
        report = module_axiom_check(OmegaVir(scalar("1/2"), 2), IndexBox((-2, 2)), TEST_POLYS)
        assert report.ok

    def test_tensor_family(self):
        report = module_axiom_check(
            TensorOmega([(2, 1, 1), (3, 1, 0)]),
            IndexBox((-1, 1), (-1, 1)),
            (parse_polynomial("t1*t2"), parse_polynomial("t1^2 + t2")),
        )
        assert report.ok

    def test_violation_detected_for_wrong_action(self):
        # deliberately broken "module": one generator gets a constant offset
        class Broken(OmegaLoop):
            def act_basis(self, sym, f):
                image = OmegaLoop.act_basis(self, sym, f)
                if sym == L(1, 1):
                    image = image + P_ONE
                return image

        report = module_axiom_check(Broken(2, 3, 1), IndexBox((-1, 1), (-1, 1)), (T,))
        assert not report.ok


class TestSimplicityProbe:
    def test_loop_nonzero_alpha_fills(self):
        cfg = ProbeConfig(seeds=(P_ONE, T, parse_polynomial("t^2+1")))
        verdict = simplicity_probe(OmegaLoop(2, 3, 1), cfg)
        assert verdict.verdict == "FillsWindow" and verdict.dim == 5

    def test_loop_alpha_zero_proper_window(self):
        verdict = simplicity_probe(OmegaLoop(2, 3, 0), ProbeConfig(seeds=(T,)))
        assert verdict.verdict == "ProperInvariantWindow"
        assert verdict.dim == 4
        assert verdict.witness == "1"  # constants are missing
        assert verdict.certificate == "invariant-certified"

    def test_block_hv_beta_rescues_simplicity(self):
        cfg = ProbeConfig(box=BOX2_BLOCK)
        verdict = simplicity_probe(OmegaBlockHV(1, 0, 2), cfg)
        assert verdict.verdict == "FillsWindow"

    def test_block_hv_all_zero_parameters(self):
        cfg = ProbeConfig(box=BOX2_BLOCK, seeds=(T,))
        verdict = simplicity_probe(OmegaBlockHV(1, 0, 0), cfg)
        assert verdict.verdict == "ProperInvariantWindow"
        assert verdict.certificate == "invariant-certified"

    def test_closure_dim_cross_checked_against_oracle(self):
        # recompute one closure's rank through the independent elimination
        spec = OmegaLoop(2, 3, 0)
        wp = _WindowPair(1, 4)
        gens = spec.algebra.symbols_in_box(BOX2_LOOP)
        basis = _closure(T, gens, spec.act_basis, wp, None)
        assert oracle_rank([list(r) for r in basis.rows]) == basis.rank == 4

    def test_generator_order_does_not_change_verdict(self):
        spec = OmegaLoop(scalar("1/2"), scalar(2), 1)
        wp = _WindowPair(1, 4)
        gens = spec.algebra.symbols_in_box(BOX2_LOOP)
        shuffled = list(gens)
        random.Random(3).shuffle(shuffled)
        a = _closure(parse_polynomial("t^2+1"), gens, spec.act_basis, wp, None)
        b = _closure(parse_polynomial("t^2+1"), shuffled, spec.act_basis, wp, None)
        assert a.rank == b.rank
        assert a.rows == b.rows  # reduced echelon form is canonical

    def test_report_shape(self):
        verdict = simplicity_probe(OmegaLoop(2, 3, 0), ProbeConfig(seeds=(T,)))
        d = verdict.as_dict()
        assert d["check"] == "simplicity"
        assert d["verdict"] == "ProperInvariantWindow"
        assert d["window"]["D"] == 4
        assert d["spec"]["family"] == "omega-loop"


class TestSubmoduleInvariance:
    def test_alpha_zero_invariant(self):
        report = submodule_invariance_check(OmegaLoop(2, 3, 0), BOX2_LOOP)
        assert report.invariant

    def test_alpha_nonzero_escapes(self):
        report = submodule_invariance_check(OmegaLoop(2, 3, 1), BOX2_LOOP)
        assert not report.invariant
        assert report.witness is not None

    def test_block_alpha_zero_invariant(self):
        report = submodule_invariance_check(OmegaBlock(2, 1, 0), BOX2_BLOCK)
        assert report.invariant

    def test_witness_is_concrete(self):
        # L(1,0) . t = 2 (t-1)^2 has constant term 2
        report = submodule_invariance_check(OmegaLoop(2, 3, 1), BOX2_LOOP, (T,))
        assert not report.invariant


class TestCompositionSeries:
    def test_all_three_facts(self):
        report = composition_series_check(2, 3)
        assert report.invariance_ok
        assert report.trivial_quotient_ok
        assert report.intertwiner_ok

    def test_gaussian_parameters(self):
        report = composition_series_check(scalar("2i"), scalar("1/2"))
        assert report.ok

    def test_intertwiner_example(self):
        # strip(L(1,1) . t) at alpha 0 equals L(1,1) . 1 at alpha 1
        spec0, spec1 = OmegaLoop(2, 3, 0), OmegaLoop(2, 3, 1)
        from cartanfree import strip_t

        lhs = strip_t(spec0.act_basis(L(1, 1), T))
        assert lhs == parse_polynomial("3*t - 3") == spec1.act_basis(L(1, 1), P_ONE)


class TestIsomorphismClassify:
    def test_equal_tables(self):
        a = build_action_table(OmegaLoop(2, 3, 1), BOX2_LOOP)
        b = build_action_table(OmegaLoop(2, 3, 1), BOX2_LOOP)
        res = isomorphism_classify(a, b)
        assert res.isomorphic
        assert res.params == {"lambda": scalar(2), "mu": scalar(3), "alpha": scalar(1)}

    def test_mu_is_an_invariant(self):
        a = build_action_table(OmegaLoop(2, 3, 1), BOX2_LOOP)
        b = build_action_table(OmegaLoop(2, 4, 1), BOX2_LOOP)
        res = isomorphism_classify(a, b)
        assert not res.isomorphic and res.differing == "mu"

    def test_alpha_differs(self):
        a = build_action_table(OmegaLoop(2, 3, 1), BOX2_LOOP)
        b = build_action_table(OmegaLoop(2, 3, 2), BOX2_LOOP)
        res = isomorphism_classify(a, b)
        assert not res.isomorphic and res.differing == "alpha"

    def test_lambda_differs(self):
        a = build_action_table(OmegaVir(2, 1), IndexBox((-2, 2)))
        b = build_action_table(OmegaVir(3, 1), IndexBox((-2, 2)))
        res = isomorphism_classify(a, b)
        assert not res.isomorphic and res.differing == "lambda"


class TestTensorProbe:
    def test_two_distinct_factors_fill(self):
        cfg = ProbeConfig(max_degree=3, seeds=(P_ONE,))
        verdict = tensor_irreducibility_probe([(2, 1, 1), (3, 1, 1)], cfg)
        assert verdict.verdict == "FillsWindow" and verdict.dim == 16

    def test_single_factor_agrees_with_simplicity_probe(self):
        cfg = ProbeConfig(seeds=(P_ONE, T))
        direct = simplicity_probe(OmegaLoop(2, 3, 1), cfg)
        tensed = tensor_irreducibility_probe([(2, 3, 1)], cfg)
        assert direct.verdict == tensed.verdict
        assert direct.dim == tensed.dim

    def test_alpha_zero_factor_gives_invariant_slice(self):
        cfg = ProbeConfig(max_degree=3, seeds=(parse_polynomial("t1"),))
        verdict = tensor_irreducibility_probe([(2, 1, 0), (3, 1, 1)], cfg)
        assert verdict.verdict == "ProperInvariantWindow"
        assert verdict.dim == 12  # exponents with t1-part >= 1: 3 * 4
        assert verdict.certificate == "invariant-certified"

    def test_too_many_factors_rejected(self):
        with pytest.raises(ValueError):
            tensor_irreducibility_probe([(2, 1, 1)] * 4, ProbeConfig())


class TestCenterReport:
    def test_negative_integer_q_has_extra_central_element(self):
        report = center_report(BlockHat(-3), IndexBox((-4, 4), (0, 4)))
        names = {name for name, central, _ in report.declared}
        assert names == {"C", "L(0,3)"}
        assert report.ok

    def test_generic_q_has_only_c(self):
        report = center_report(BlockHat(scalar("1/2")), IndexBox((-4, 4), (0, 4)))
        assert [name for name, _, _ in report.declared] == ["C"]
        assert report.ok
        assert report.extra_commuting == []

    def test_loop_center_is_all_c(self):
        report = center_report(LOOP, IndexBox((-2, 2), (-2, 2)))
        names = {name for name, central, _ in report.declared}
        assert names == {f"C({j})" for j in range(-2, 3)}
        assert report.ok and report.extra_commuting == []


class TestProbeGuards:
    def test_round_budget_guard(self):
        from cartanfree.errors import MaxRoundsExceededError

        cfg = ProbeConfig(seeds=(P_ONE,), max_rounds=1)
        with pytest.raises(MaxRoundsExceededError):
            simplicity_probe(OmegaLoop(2, 3, 1), cfg)

    def test_zero_seed_rejected(self):
        with pytest.raises(ValueError):
            simplicity_probe(OmegaLoop(2, 3, 1), ProbeConfig(seeds=("0",)))
        with pytest.raises(ValueError):
            ProbeConfig(seeds=())

    def test_seed_beyond_window_rejected(self):
        from cartanfree.errors import DegreeOverflowError

        with pytest.raises(DegreeOverflowError):
            simplicity_probe(OmegaLoop(2, 3, 1), ProbeConfig(max_degree=2, seeds=("t^3",)))
