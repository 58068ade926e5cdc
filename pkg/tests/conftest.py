import pytest
from hypothesis import HealthCheck, settings

from plethax import LabelledAbacus, Partition

settings.register_profile(
    "package",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("package")


@pytest.fixture
def abacus_533221():
    """Six beads on slots 1,3,4,6,7,10: shape (5,3,3,2,2,1), sign +1."""
    return LabelledAbacus((0, 4, 0, 2, 5, 0, 1, 6, 0, 0, 3))


@pytest.fixture
def abacus_sign_example():
    """Six beads with sigma = (1 2 3)(5 6), sign -1."""
    return LabelledAbacus((5, 0, 6, 4, 1, 0, 0, 3, 0, 2))


@pytest.fixture
def chain_endpoints():
    """Inner and outer shapes joined by three strips of size 5."""
    return Partition((5, 3, 3, 2, 2, 1)), Partition((8, 6, 6, 5, 5, 1))
