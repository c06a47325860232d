import pytest

from rankcrit.criteria import (
    CrossCheckError,
    admissible,
    scan,
    sp_congruence_rhs,
    verdict_Ap,
    verdict_Ep,
)
from ._util import primes_leq
from .golden import EP_SCAN_TABLE


class TestAdmissible:
    def test_ep_17(self):
        ok, index = admissible(17, "Ep")
        assert ok and index == 6

    def test_ep_rejects_7(self):
        assert not admissible(7, "Ep").ok

    def test_ep_rejects_composite_in_class(self):
        assert not admissible(33, "Ep").ok  # 33 = 1 mod 16 but composite

    def test_ap_19(self):
        ok, index = admissible(19, "Ap")
        assert ok and index == 6

    def test_ap_index_multiple_of_3(self):
        for p in primes_leq(500):
            got = admissible(p, "Ap")
            if got.ok:
                assert got.index % 3 == 0

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            admissible(17, "Zp")


class TestVerdictEp:
    def test_17_not_divisible(self):
        v = verdict_Ep(17)
        assert v.divisible is False
        assert v.residue == 16
        assert v.index == 6
        assert v.weight_k == 13  # (3*17+1)/4
        assert v.predicted_rank_bsd == 0

    def test_73_divisible(self):
        v = verdict_Ep(73)
        assert v.divisible is True
        assert v.predicted_rank_bsd == 2

    def test_449_not_divisible(self):
        assert verdict_Ep(449).divisible is False

    def test_rejects_inadmissible(self):
        with pytest.raises(ValueError):
            verdict_Ep(7)

    def test_pure_function(self):
        assert verdict_Ep(97) == verdict_Ep(97)


class TestVerdictAp:
    def test_19_both_true(self):
        va, vx = verdict_Ap(19)
        assert va.divisible and vx.divisible
        assert (va.path, vx.path) == ("a", "x")
        assert va.weight_k == 13  # (2*19+1)/3

    def test_37_both_true(self):
        # 37 = 4^3 + (-3)^3 has a rational point, so rank 2 in this class
        va, vx = verdict_Ap(37)
        assert va.divisible and vx.divisible

    def test_rejects_7(self):
        with pytest.raises(ValueError):
            verdict_Ap(7)

    def test_paths_agree_to_500(self):
        for p in primes_leq(500):
            if admissible(p, "Ap").ok:
                va, vx = verdict_Ap(p)  # raises CrossCheckError on disagreement
                assert va.divisible == vx.divisible


class TestScan:
    def test_table_reproduction(self):
        rows = scan("Ep", 2, 460)
        assert [(v.p, v.divisible) for v in rows] == sorted(EP_SCAN_TABLE.items())

    def test_empty_below_17(self):
        assert scan("Ep", 2, 16) == []

    def test_ap_range(self):
        rows = scan("Ap", 2, 40)
        assert sorted({v.p for v in rows}) == [19, 37]
        assert len(rows) == 4  # both paths per prime

    def test_parallel_matches_serial(self):
        serial = scan("Ep", 2, 120, jobs=1)
        parallel = scan("Ep", 2, 120, jobs=4)
        assert serial == parallel

    def test_rejects_bad_range(self):
        with pytest.raises(ValueError):
            scan("Ep", 1, 10)


class TestCongruenceRhs:
    def test_value_is_residue(self):
        for p in (17, 41, 97):
            r = sp_congruence_rhs(p)
            assert 0 <= r < p

    def test_rejects_inadmissible(self):
        with pytest.raises(ValueError):
            sp_congruence_rhs(19)
