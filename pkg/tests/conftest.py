import pytest

from flowshop import Instance, validate_instance

from support import REF7X4


@pytest.fixture
def ref7x4() -> Instance:
    return validate_instance(REF7X4)
