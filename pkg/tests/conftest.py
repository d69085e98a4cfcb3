import pytest

from mock_eisenstein.numtheory.bernoulli import configure_bernoulli_cache


@pytest.fixture(autouse=True)
def no_persistent_bernoulli_cache():
    """Keep tests away from the user's cache directory."""
    configure_bernoulli_cache(None)
    yield
    configure_bernoulli_cache(None)
