import pytest

from sutarski import (
    LatticeSpec,
    TarskiFunction,
    gen_attractor,
    gen_unique_not_super,
)


@pytest.fixture
def spec22():
    return LatticeSpec(2, 2)


@pytest.fixture
def spec32():
    return LatticeSpec(3, 2)


@pytest.fixture
def spec31():
    return LatticeSpec(3, 1)


@pytest.fixture
def identity22(spec22):
    return TarskiFunction.from_callable(spec22, lambda x: x)


@pytest.fixture
def att3(spec32):
    """Attractor to (2, 2) on the 3x3 grid; slice-unique by construction."""
    return gen_attractor(spec32, (2, 2))


@pytest.fixture
def uns():
    """Unique full-lattice fixed point, but two fixed points on one slice."""
    return gen_unique_not_super(LatticeSpec(2, 2))


@pytest.fixture
def nm1(spec31):
    """Non-monotone 1D table: 1 -> 3, 2 -> 1, 3 -> 1."""
    return TarskiFunction.from_table(spec31, [(3,), (1,), (1,)])


def counting(fn):
    """Wrap a callable, recording every argument it is called with."""
    calls = []

    def wrapped(x):
        calls.append(x)
        return fn(x)

    wrapped.calls = calls
    return wrapped
