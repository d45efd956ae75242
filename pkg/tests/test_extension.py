from fractions import Fraction

import pytest

from framednets.catalog import repetition
from framednets.codes import BinaryCode, BitWord, direct_sum, dual, make_code, reed_muller
from framednets.errors import InputError
from framednets.extension import (
    StructureCodes,
    build_delta,
    certify_main_theorem,
    check_chain,
    check_ly_conditions,
    check_structure_codes,
    holomorphic_mu,
)
from framednets.induction import full_report

RM1 = reed_muller(1, 4)
RM2 = reed_muller(2, 4)
REP16 = repetition(16)
CASE2 = direct_sum(repetition(8), repetition(8))


def rm24_minus_one_generator() -> BinaryCode:
    return BinaryCode(16, RM2.basis[1:])


class TestLY:
    def test_rep16(self):
        d = check_ly_conditions(REP16)
        assert d.ok and d.n == 1

    def test_rm14(self):
        assert check_ly_conditions(RM1).ok

    def test_short_length(self):
        d = check_ly_conditions(repetition(8))
        assert not d.length_ok and d.triply_even and d.contains_all_one


class TestStructure:
    def test_rm_pair(self):
        d = check_structure_codes(StructureCodes(RM2, RM1))
        assert d.ok and d.c_equals_d_dual

    def test_case1(self):
        assert check_structure_codes(StructureCodes.from_d(REP16)).c_equals_d_dual

    def test_c_equals_d(self):
        d = check_structure_codes(StructureCodes(REP16, REP16))
        assert d.c_in_d_dual and not d.c_equals_d_dual

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            StructureCodes(RM2, repetition(8))


class TestMu:
    def test_values(self):
        assert holomorphic_mu(StructureCodes(RM2, RM1)) == 1
        assert holomorphic_mu(StructureCodes(rm24_minus_one_generator(), RM1)) == 4
        C2 = make_code(2, ["11"])
        assert holomorphic_mu(StructureCodes(C2, C2)) == Fraction(1)


class TestDelta:
    def test_case1(self):
        delta = build_delta(StructureCodes.from_d(REP16))
        assert len(delta) == 2
        (b0, id_cls), (b1, cls) = delta.entries
        assert b0.bits == 0 and id_cls.rep.half == 0 and id_cls.rep.tau == 0
        assert b1 == BitWord.ones(16) and str(cls.rep) == "s" * 16
        assert all(c.is_spin_one for _, c in delta.entries)

    def test_case2(self):
        delta = build_delta(StructureCodes.from_d(CASE2))
        assert [b for b, _ in delta.entries] == CASE2.codewords()
        assert all(c.is_spin_one and c.rep.tau == b.bits for b, c in delta.entries)

    def test_rm14(self):
        S = StructureCodes(RM2, RM1)
        report = full_report(RM2)
        delta = build_delta(S, report)
        assert len(delta) == 32
        assert len({c.rep.tau for _, c in delta.entries}) == 32
        for beta, cls in delta.entries:
            assert cls.beta == beta and cls.is_spin_one
            assert report.report_for(beta).irreducible_dim_d == 1
        # generated table covers D at the tau-word level
        assert sorted(g.beta for g in delta.generated) == RM1.codewords()
        for g in delta.generated:
            assert g.alpha_class.beta == g.beta

    def test_needs_equality(self):
        with pytest.raises(InputError):
            build_delta(StructureCodes(REP16, REP16))


class TestChainWitness:
    def test_all_rm14_words(self):
        one = BitWord.ones(16)
        for beta in RM1.codewords():
            if beta.bits in (0, one.bits):
                continue
            w = check_chain(RM1, beta)
            assert w.valid, w.problems
            assert w.ranks == (5, 4, 3, 2, 1)


class TestCertificate:
    def test_rm_pair_passes(self):
        cert = certify_main_theorem(StructureCodes(RM2, RM1))
        assert cert.passed and cert.failed_stage is None
        assert cert.summary == "holomorphic, structure codes (C,D)"
        assert len(cert.chains) == 30

    def test_case1_passes(self):
        assert certify_main_theorem(StructureCodes.from_d(REP16)).passed

    def test_case2_passes(self):
        assert certify_main_theorem(StructureCodes.from_d(CASE2)).passed

    def test_rm24_as_d_fails(self):
        cert = certify_main_theorem(StructureCodes(RM2, RM2))
        assert cert.failed_stage == "triply-even check"

    def test_idempotent(self):
        S = StructureCodes(RM2, RM1)
        a, b = certify_main_theorem(S), certify_main_theorem(S)
        assert a.stages == b.stages and a.delta == b.delta
