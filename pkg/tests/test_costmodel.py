import pytest
from hypothesis import given
from hypothesis import strategies as st

from mindoc.costmodel import (
    KWH_PER_JOULE,
    ConversionFactors,
    CostInputs,
    derive_tradeoffs,
    doc_rate,
    doc_terms,
    fuel_conversion,
)
from mindoc.errors import DegenerateCostModelError, DomainError
from mindoc.optimizer import Powertrain


def test_tradeoffs_efanx():
    tr = derive_tradeoffs(CostInputs(0.5, 0.06, 0.115))
    assert tr.c_mu == pytest.approx(0.0875, rel=1e-14)
    assert tr.c_delta == pytest.approx(-0.0275, rel=1e-14)
    assert tr.c_e_tradeoff == pytest.approx(-0.314285714285714, rel=1e-12)
    assert tr.c_i_tradeoff == pytest.approx(11.4285714285714, rel=1e-12)


def test_tradeoffs_e430():
    tr = derive_tradeoffs(CostInputs(0.0005, 0.06, 0.0))
    assert tr.c_mu == pytest.approx(0.03)
    assert tr.c_e_tradeoff == 1.0
    assert tr.c_i_tradeoff == pytest.approx(1 / 30, rel=1e-13)


def test_equal_prices_give_zero_ce():
    assert derive_tradeoffs(CostInputs(0.1, 0.08, 0.08)).c_e_tradeoff == 0.0


def test_degenerate_cost_model():
    with pytest.raises(DegenerateCostModelError):
        CostInputs(0.1, 0.0, 0.0)
    with pytest.raises(DomainError):
        CostInputs(-0.1, 0.1, 0.0)


@given(st.floats(0, 10), st.floats(0, 1), st.floats(0, 1))
def test_tradeoff_reconstruction(ct, ci, cf):
    if ci + cf < 1e-6:
        return
    tr = derive_tradeoffs(CostInputs(ct, ci, cf))
    assert -1 <= tr.c_e_tradeoff <= 1
    assert tr.c_mu * (1 + tr.c_e_tradeoff) == pytest.approx(ci, rel=1e-12, abs=1e-15)
    assert tr.c_mu * (1 - tr.c_e_tradeoff) == pytest.approx(cf, rel=1e-12, abs=1e-15)
    assert tr.c_i_tradeoff * tr.c_mu / 2 == pytest.approx(ct, rel=1e-12, abs=1e-15)


def test_fuel_conversion():
    assert fuel_conversion(11.94, 9.8) == pytest.approx(1.22, abs=2e-3)
    assert fuel_conversion(9.8, 9.8) == 1.0
    # 43 MJ/kg at 1 kWh = 3.6 MJ
    assert round(fuel_conversion(43.0 / 3.6, 9.8), 2) == 1.22


def test_doc_rate_terms_vanish_at_extremes():
    costs = CostInputs(0.5, 0.06, 0.115)
    conv = ConversionFactors.from_costs(costs)
    electric = Powertrain(1.0, 0.9, 3000.0, 2.55e-5)
    jet = Powertrain(0.0, 0.9, 3000.0, 2.55e-5)
    assert doc_terms(1e5, 200.0, 2e4, electric, costs, conv)[2] == 0.0
    assert doc_terms(1e5, 200.0, 2e4, jet, costs, conv)[1] == 0.0


def test_doc_rate_additive_and_nonnegative():
    costs = CostInputs(0.5, 0.06, 0.115)
    conv = ConversionFactors.from_costs(costs)
    pt = Powertrain(0.25, 0.9, 3000.0, 2.55e-5)
    terms = doc_terms(4.3e5, 250.0, 3e4, pt, costs, conv)
    assert all(x >= 0 for x in terms)
    assert doc_rate(4.3e5, 250.0, 3e4, pt, costs, conv) == pytest.approx(sum(terms), rel=1e-15)
    # electricity term written out with the voltage kept in: C_i kappa_i U i
    i = 0.25 * 3e4 * 250.0 / (0.9 * 3000.0)
    assert terms[1] == pytest.approx(0.06 * KWH_PER_JOULE * 3000.0 * i, rel=1e-14)


def test_doc_rate_e430_hourly(e430):
    # at 130 km/h the hourly cost is close to 2.79 USD/h
    from mindoc.aero import drag

    v = 130.0 / 3.6
    d = drag(e430.airframe, 1.2, 4600.0, v)
    hourly = doc_rate(4600.0, v, d, e430.powertrain, e430.costs) * 3600
    assert hourly == pytest.approx(2.79, rel=0.03)
