import pytest

from lynfac.alphabet import OrderedAlphabet

AB = OrderedAlphabet("ab")
ABC = OrderedAlphabet("abc")
ABCD = OrderedAlphabet("abcd")


@pytest.fixture
def ab():
    return AB


@pytest.fixture
def abcd():
    return ABCD
