import pytest

import pyhopf as hp


@pytest.fixture(autouse=True)
def default_config():
    hp.config.reset()
    yield
    hp.config.reset()
