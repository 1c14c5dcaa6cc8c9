from fractions import Fraction

import pytest

from effectstates import io

ALGEBRA_FIXTURES = [n for n in io.fixture_names()
                    if "sums" in io.fixture_path(n).read_text()]
GROUP_FIXTURES = [n for n in io.fixture_names() if n not in ALGEBRA_FIXTURES]


def F(text):
    return Fraction(text)


def chain(n):
    """Łukasiewicz chain with n+1 elements 0..n, i + j defined when i + j <= n."""
    from effectstates import EffectAlgebra
    sums = [(i, j, i + j) for i in range(1, n) for j in range(i, n) if i + j <= n]
    return EffectAlgebra(n + 1, 0, n, sums)


@pytest.fixture(scope="session")
def fixtures():
    return {n: io.load_fixture(n) for n in io.fixture_names()}


@pytest.fixture
def mo2():
    return io.load_fixture("mo2")
