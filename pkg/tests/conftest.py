import json

import numpy as np
import pytest

from toralzeta.acceptance import cubic_fixture_text
from toralzeta.number_field import load_field, quadratic_field


@pytest.fixture(scope="session")
def field_qi():
    return quadratic_field(-4)


@pytest.fixture(scope="session")
def field_m23():
    return quadratic_field(-23)


@pytest.fixture(scope="session")
def field_sqrt5():
    return quadratic_field(5)


@pytest.fixture(scope="session")
def cubic_document():
    return json.loads(cubic_fixture_text())


@pytest.fixture(scope="session")
def field_cubic(cubic_document):
    return load_field(cubic_document)


@pytest.fixture()
def rng():
    return np.random.default_rng(np.random.PCG64(2024))
