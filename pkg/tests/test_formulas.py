"""Closed-form predictors against their published simplifications, parity
coherence between routes, and the exactness of the gap expressions."""

import pytest

from ccgspec.errors import (
    InvalidParams,
    KOutOfRange,
    MissingCase,
    NonIntegralParameter,
    UnknownTheorem,
)
from ccgspec.formulas import (
    CentralQuotientParams,
    canonical_theorem_id,
    gap_expression,
    predict,
    predict_D2n,
    predict_Gpmn,
    predict_SD8n,
    predict_T4n,
    predict_U6n,
    predict_Unm,
    predict_V8n,
    predict_pgroup_center_pn2,
    predict_pgroup_p4,
    predict_quotient_D2n,
    predict_quotient_p3,
    predict_quotient_pp,
)
from ccgspec.graphs import CompleteUnionShape
from ccgspec.spectral import (
    complete_graph_energy,
    complete_union_energy,
    complete_union_spectrum,
)


def shape(parts):
    return CompleteUnionShape.from_parts(parts)


def spec_pairs(pred):
    return list(pred.spectrum.pairs)


# ---------------------------------------------------------------------------
# spot values


def test_d2n_spots():
    p = predict_D2n(7)
    assert spec_pairs(p) == [(-1, 2), (0, 1), (2, 1)] and p.energy == 4
    p = predict_D2n(8)
    assert spec_pairs(p) == [(-1, 2), (0, 2), (2, 1)] and p.energy == 4
    p = predict_D2n(3)
    assert spec_pairs(p) == [(0, 2)] and p.energy == 0


def test_t4n_spots():
    assert predict_T4n(4).energy == 4
    assert spec_pairs(predict_T4n(4)) == [(-1, 2), (0, 2), (2, 1)]
    assert spec_pairs(predict_T4n(2)) == [(0, 3)]
    p = predict_T4n(5)
    assert spec_pairs(p) == [(-2, 3), (0, 2), (6, 1)] and p.energy == 12


def test_sd8n_spots():
    p = predict_SD8n(2)
    assert spec_pairs(p) == [(-1, 2), (0, 2), (2, 1)] and p.energy == 4
    p = predict_SD8n(3)
    assert spec_pairs(p) == [(-2, 6), (6, 2)] and p.energy == 24
    p = predict_SD8n(5)
    assert spec_pairs(p) == [(-6, 7), (-2, 3), (6, 1), (42, 1)] and p.energy == 96


def test_unm_spots():
    p = predict_Unm(3, 4)
    assert p.shape == shape([(3, 3)])
    assert spec_pairs(p) == [(-1, 6), (2, 3)] and p.energy == 12
    p = predict_Unm(2, 3)
    assert p.shape == shape([(2, 2)]) and spec_pairs(p) == [(0, 4)] and p.energy == 0
    p = predict_Unm(4, 3)
    assert spec_pairs(p) == [(-2, 6), (6, 2)] and p.energy == 24


def test_u6n_spots():
    assert spec_pairs(predict_U6n(2)) == [(0, 4)]
    p = predict_U6n(3)
    assert spec_pairs(p) == [(-1, 4), (2, 2)] and p.energy == 8
    p = predict_U6n(5)
    assert spec_pairs(p) == [(-3, 8), (12, 2)] and p.energy == 48


def test_v8n_spots():
    assert spec_pairs(predict_V8n(2)) == [(0, 6)]
    p = predict_V8n(3)
    assert spec_pairs(p) == [(-3, 4), (0, 2), (12, 1)] and p.energy == 24
    # even case evaluates the catalogued formula at face value
    p = predict_V8n(4)
    assert p.shape == shape([(1, 6), (2, 2)])
    assert spec_pairs(p) == [(-4, 5), (0, 4), (20, 1)] and p.energy == 40


def test_gpmn_spots():
    assert spec_pairs(predict_Gpmn(2, 1, 1)) == [(0, 3)]
    p = predict_Gpmn(2, 2, 2)
    assert spec_pairs(p) == [(-2, 6), (0, 4), (6, 2)] and p.energy == 24
    assert spec_pairs(predict_Gpmn(3, 1, 1)) == [(0, 8)]
    assert predict_Gpmn(3, 1, 1).energy == 0


def test_quotient_pp_spots():
    p = predict_quotient_pp(2, 2)
    assert p.shape == shape([(3, 1)]) and p.energy == 0
    p = predict_quotient_pp(2, 6)
    assert p.shape == shape([(3, 3)])
    assert spec_pairs(p) == [(-1, 6), (2, 3)] and p.energy == 12
    p = predict_quotient_pp(3, 3)
    assert p.shape == shape([(4, 2)]) and spec_pairs(p) == [(0, 8)] and p.energy == 0
    with pytest.raises(NonIntegralParameter):
        predict_quotient_pp(3, 4)


def test_pgroup_center_pn2_spots():
    assert predict_pgroup_center_pn2(2, 3).energy == 0
    p = predict_pgroup_center_pn2(2, 4)
    assert p.shape == shape([(3, 2)]) and p.energy == 0
    p = predict_pgroup_center_pn2(2, 5)
    assert p.shape == shape([(3, 4)]) and p.energy == 36
    with pytest.raises(InvalidParams):
        predict_pgroup_center_pn2(2, 2)


def test_quotient_p3_cases():
    p = predict_quotient_p3(CentralQuotientParams(2, 2, "B3"))
    assert p.shape == shape([(1, 3), (2, 1)])
    assert spec_pairs(p) == [(-1, 2), (0, 2), (2, 1)] and p.energy == 4
    p = predict_quotient_p3(CentralQuotientParams(2, 4, "A2"))
    assert p.shape == shape([(7, 1)]) and spec_pairs(p) == [(0, 7)]
    p = predict_quotient_p3(CentralQuotientParams(2, 4, "B2", k=1))
    assert p.shape == shape([(3, 1), (2, 2)]) and p.energy == 0
    # A1 with p=2, z=4: m = 6, n1 = 1
    p = predict_quotient_p3(CentralQuotientParams(2, 4, "A1"))
    assert p.shape == shape([(1, 6), (4, 1)]) and p.energy == 40
    p = predict_quotient_p3(CentralQuotientParams(3, 9, "B5"))
    assert p.shape == shape([(1, 2), (4, 6)])  # n1 = 2, n2 = 6


def test_quotient_p3_errors():
    with pytest.raises(MissingCase):
        predict_quotient_p3(CentralQuotientParams(2, 2, None))
    with pytest.raises(MissingCase):
        predict_quotient_p3(CentralQuotientParams(2, 2, "C9"))
    with pytest.raises(KOutOfRange):
        predict_quotient_p3(CentralQuotientParams(2, 4, "B1"))
    with pytest.raises(KOutOfRange):
        predict_quotient_p3(CentralQuotientParams(2, 4, "B1", k=5))
    with pytest.raises(NonIntegralParameter):
        predict_quotient_p3(CentralQuotientParams(2, 2, "A1"))  # n1 = 1/2
    # B3 at p=2, z=2 is fine even though n1 would be fractional
    predict_quotient_p3(CentralQuotientParams(2, 2, "B3"))


def test_pgroup_p4_spots():
    p = predict_pgroup_p4(2, 2)
    assert p.shape == shape([(3, 2)]) and p.energy == 0
    p = predict_pgroup_p4(2, 1)
    assert p.shape == shape([(1, 3), (2, 1)]) and p.energy == 4
    p = predict_pgroup_p4(3, 1)
    assert p.shape == shape([(1, 8), (3, 2)]) and p.energy == 84
    with pytest.raises(InvalidParams):
        predict_pgroup_p4(2, 3)


def test_quotient_d2n_spots():
    p = predict_quotient_D2n(3, 1)
    assert p.shape == shape([(2, 1)]) and p.energy == 0
    p = predict_quotient_D2n(4, 2)
    assert p.shape == shape([(1, 3), (2, 1)]) and p.energy == 4
    p = predict_quotient_D2n(3, 2)
    assert p.shape == shape([(2, 2)]) and p.energy == 0
    with pytest.raises(NonIntegralParameter):
        predict_quotient_D2n(4, 1)
    with pytest.raises(InvalidParams):
        predict_quotient_D2n(2, 2)


# ---------------------------------------------------------------------------
# published simplifications, swept


def test_d2n_published_energy():
    for n in range(3, 60):
        want = (n - 3) * (n - 5) // 2 if n % 2 else (n - 4) * (n - 6) // 2
        assert predict_D2n(n).energy == want, n


def test_t4n_published_energy():
    for n in range(2, 60):
        assert predict_T4n(n).energy == 2 * (n - 2) * (n - 3)


def test_sd8n_published_spectrum_and_energy():
    for n in range(2, 40):
        p = predict_SD8n(n)
        if n % 2 == 0:
            assert p.energy == 2 * (2 * n - 2) * (2 * n - 3)
            want = [(-(2 * n - 3), 2 * n - 2), ((2 * n - 2) * (2 * n - 3), 1), (0, 2)]
        else:
            assert p.energy == 2 * (2 * n - 3) * (2 * n - 4) + 12
            want = [
                (-(2 * n - 4), 2 * n - 3),
                ((2 * n - 3) * (2 * n - 4), 1),
                (-2, 3),
                (6, 1),
            ]
        merged = {}
        for v, m in want:
            merged[v] = merged.get(v, 0) + m
        merged = {v: m for v, m in merged.items() if m > 0}
        assert dict(p.spectrum.pairs) == merged, n


def test_unm_published_energy():
    for n in range(2, 12):
        for m in range(3, 12):
            p = predict_Unm(n, m)
            if m % 2 == 0:
                want = 4 * (n * n - 3 * n + 2) + (m * n - 2 * n - 2) * (m * n - 2 * n - 4) // 2
            else:
                want = 2 * (n * n - 3 * n + 2) + (m * n - n - 2) * (m * n - n - 4) // 2
            assert p.energy == want, (n, m)


def test_u6n_published_energy_and_equivalence():
    for n in range(2, 30):
        p = predict_U6n(n)
        q = predict_Unm(n, 3)
        assert p.energy == 4 * (n - 1) * (n - 2)
        assert (p.shape, p.spectrum, p.energy) == (q.shape, q.spectrum, q.energy)


def test_v8n_published_energy():
    for n in range(2, 40):
        want = 2 * (2 * n - 3) * (2 * n - 4) if n % 2 == 0 else 2 * (2 * n - 2) * (2 * n - 3)
        assert predict_V8n(n).energy == want


def test_gpmn_published_energy():
    for p, m, n in [(2, 1, 1), (2, 2, 1), (2, 2, 2), (2, 3, 2), (3, 2, 1), (3, 2, 2), (5, 2, 1)]:
        a = p ** (m + n - 1) - p ** (m + n - 2)
        b = p**m - p ** (m - 1)
        want = 4 * (a - 1) * (a - 2) + 2 * (p**n - p ** (n - 1)) * (b - 1) * (b - 2)
        assert predict_Gpmn(p, m, n).energy == want


def test_quotient_pp_published_energy():
    for p in (2, 3, 5):
        for z in range(p, 40, p):
            n = (p - 1) * z // p
            assert predict_quotient_pp(p, z).energy == 2 * (p + 1) * (n - 1) * (n - 2)


def test_quotient_d2n_published_energy():
    for n in range(3, 14):
        for z in range(1, 9):
            if n % 2 == 0 and z % 2:
                continue
            e = predict_quotient_D2n(n, z).energy
            if n % 2 == 0:
                want = (
                    n * n * z * z // 2 - n * z * z - 3 * n * z + 3 * z * z // 2 - 3 * z + 12
                )
                assert 2 * e == n * n * z * z - 2 * n * z * z - 6 * n * z + 3 * z * z - 6 * z + 24
            else:
                assert 2 * e == n * n * z * z - 2 * n * z * z - 6 * n * z + 5 * z * z - 6 * z + 16


# ---------------------------------------------------------------------------
# coherence between the family forms and the quotient forms


def test_dicyclic_coheres_with_dihedral_quotient():
    for n in range(3, 40):
        assert predict_T4n(n).shape == predict_quotient_D2n(n, 2).shape
        assert predict_T4n(n).energy == predict_quotient_D2n(n, 2).energy


def test_odd_dihedral_coheres_with_quotient():
    for n in range(3, 40, 2):
        assert predict_D2n(n).shape == predict_quotient_D2n(n, 1).shape


def test_u6n_coheres_with_quotient():
    for n in range(2, 20):
        assert predict_U6n(n).shape == predict_quotient_D2n(3, n).shape


def test_gpmn_n1_coheres_with_quotient_pp():
    # for n = 1 the family form and the central-quotient form coincide
    for p, m in [(2, 1), (2, 2), (2, 4), (3, 1), (3, 3), (5, 2)]:
        z = p ** (m + 1 - 1)  # |Z| = p^(m+n-1) with n = 1
        assert predict_Gpmn(p, m, 1).shape == predict_quotient_pp(p, z).shape


# ---------------------------------------------------------------------------
# internal consistency and gap forms


@pytest.mark.parametrize(
    "pred",
    [
        predict_D2n(11),
        predict_SD8n(6),
        predict_Unm(4, 7),
        predict_V8n(9),
        predict_Gpmn(2, 3, 2),
        predict_quotient_pp(5, 10),
        predict_quotient_p3(CentralQuotientParams(3, 9, "B1", k=2)),
        predict_quotient_D2n(9, 4),
    ],
)
def test_prediction_internal_consistency(pred):
    assert pred.spectrum == complete_union_spectrum(pred.shape)
    assert pred.energy == complete_union_energy(pred.shape)
    assert pred.spectrum.size == pred.shape.total_vertices
    assert all(isinstance(v, int) for v, _ in pred.spectrum.pairs)


def gap_of(pred):
    return complete_graph_energy(pred.vertex_count) - pred.energy


def test_gap_semidihedral():
    assert gap_expression("semidihedral", {"n": 2}) == 20
    for n in range(2, 40):
        assert gap_expression("semidihedral", {"n": n}) == gap_of(predict_SD8n(n))


def test_gap_unm():
    assert gap_expression("unm", {"n": 2, "m": 3}) == 12
    for n in range(2, 11):
        for m in range(3, 11):
            assert gap_expression("unm", {"n": n, "m": m}) == gap_of(predict_Unm(n, m))


def test_gap_v8n():
    assert gap_expression("v8n", {"n": 3}) == 36
    for n in range(2, 40):
        assert gap_expression("v8n", {"n": n}) == gap_of(predict_V8n(n))


def test_gap_quotient_d2n():
    assert gap_expression("quotient-d2n", {"n": 3, "z": 1}) == 0
    for n in range(3, 14):
        for z in range(1, 9):
            if n % 2 == 0 and z % 2:
                continue
            assert gap_expression("quotient-d2n", {"n": n, "z": z}) == gap_of(
                predict_quotient_D2n(n, z)
            )


def test_gap_quotient_pp():
    for p in (2, 3, 5, 7):
        for z in range(p, 50, p):
            assert gap_expression("quotient-pp", {"p": p, "z": z}) == gap_of(
                predict_quotient_pp(p, z)
            )


def test_gap_pgroup_p4():
    for p in (2, 3, 5, 7, 11):
        for exp in (1, 2):
            assert gap_expression("pgroup-p4", {"p": p, "zexp": exp}) == gap_of(
                predict_pgroup_p4(p, exp)
            )


def test_gap_gpmn():
    for p, m, n in [(2, 1, 1), (2, 2, 1), (2, 2, 2), (2, 4, 3), (3, 2, 1), (3, 3, 2), (5, 2, 2)]:
        assert gap_expression("gpmn", {"p": p, "m": m, "n": n}) == gap_of(
            predict_Gpmn(p, m, n)
        )


def test_gap_pn3_cases():
    for p in (2, 3):
        for n in range(4, 8):
            z = p ** (n - 3)
            for case in ("A1", "A2", "B1", "B2", "B3", "B4", "B5"):
                ks = range(1, p + 1) if case in ("B1", "B2") else [None]
                for k in ks:
                    try:
                        pred = predict_quotient_p3(CentralQuotientParams(p, z, case, k))
                    except NonIntegralParameter:
                        continue
                    got = gap_expression(
                        "pgroup-center-pn3", {"p": p, "n": n, "case": case, "k": k}
                    )
                    assert got == gap_of(pred), (p, n, case, k)


def test_gap_nonnegative_in_ranges():
    gaps = []
    for n in range(2, 30):
        gaps.append(gap_expression("semidihedral", {"n": n}))
        gaps.append(gap_expression("v8n", {"n": n}))
    for n in range(2, 10):
        for m in range(3, 10):
            gaps.append(gap_expression("unm", {"n": n, "m": m}))
    zero_points = []
    for n in range(3, 14):
        for z in range(1, 8):
            if n % 2 == 0 and z % 2:
                continue
            g = gap_expression("quotient-d2n", {"n": n, "z": z})
            gaps.append(g)
            if g == 0:
                zero_points.append((n, z))
    assert min(gaps) == 0
    assert zero_points == [(3, 1)]  # only the order-6 dihedral case


def test_gap_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        gap_expression("nope", {})


def test_predict_dispatch_and_aliases():
    assert canonical_theorem_id("3.5") == "semidihedral"
    assert predict("3.6", {"p": 2, "m": 2, "n": 2}).energy == 24
    assert predict("3.1", {"n": 7}).energy == 4
    assert predict("3.7", {"p": 2, "z": 6}).energy == 12
    assert predict("3.11", {"p": 2, "z": 2}).energy == 4
    assert predict("3.9", {"p": 2, "z": 2, "case": "B3"}).energy == 4
    assert predict("3.10", {"p": 2, "n": 4, "case": "B3"}).energy == 4
    with pytest.raises(UnknownTheorem):
        predict("3.99", {})
    with pytest.raises(InvalidParams):
        predict("3.1", {})
