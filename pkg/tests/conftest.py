import pytest

from maxcurve import action as act
from maxcurve.curves import params_from_s


@pytest.fixture(scope="session")
def q8_params():
    return params_from_s("suzuki-cover", 1)


@pytest.fixture(scope="session")
def place_set(q8_params):
    return act.build_places(q8_params)


@pytest.fixture(scope="session")
def generators(place_set):
    return act.default_generators(place_set)


@pytest.fixture(scope="session")
def simple_group_gens(generators):
    """Generators of the lifted simple group (no torus factor)."""
    return [generators["torus7"], generators["wild_b"], generators["wild_c"], generators["phi"]]
