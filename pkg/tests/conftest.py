import numpy as np
import pytest

from berger.ambient import SpaceKind
from berger.metric import LORENTZIAN, RIEMANNIAN, BergerParams, ModelSpec

CASES = [(sp, sig) for sp in SpaceKind for sig in (RIEMANNIAN, LORENTZIAN)]


def case_id(case):
    return f"{case[0].value}-{case[1].name}"


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(params=CASES, ids=case_id)
def tabulated_case(request):
    space, sig = request.param
    return ModelSpec(space, BergerParams(), sig)
