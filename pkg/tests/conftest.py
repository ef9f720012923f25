import pytest

import helpers


@pytest.fixture
def gamma1():
    return helpers.gamma1()
