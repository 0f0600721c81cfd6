import pytest

from mindoc import Airframe, Atmosphere, CostInputs, CruiseParams, Powertrain

G = 9.8


@pytest.fixture
def efanx():
    """E-Fan X hybrid-electric scenario parameters."""
    return CruiseParams(
        Airframe(77.3, 0.028, 0.026, 25645 * G, 44225 * G),
        Powertrain(0.25, 0.9, 3000.0, 2.55e-5, "mass"),
        Atmosphere(0.4135, 10000.0),
        CostInputs(0.5, 0.06, 0.115, 11.94, G),
    )


@pytest.fixture
def e430():
    """Yuneec E430 all-electric scenario parameters."""
    return CruiseParams(
        Airframe(11.37, 0.035, 0.009, 302 * G, 472 * G),
        Powertrain(1.0, 0.7, 133.2, 0.0),
        Atmosphere(1.2, 300.0),
        CostInputs(0.0005, 0.06, 0.0, 11.94, G),
    )


@pytest.fixture
def toy_airframe():
    return Airframe(2.0, 0.02, 0.04, 50.0, 200.0)
