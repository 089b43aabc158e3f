import random

import pytest

from dvsig.groupparams import TOY23, generate_params
from dvsig.keys import KeyPair, keygen


@pytest.fixture(scope="session")
def toy():
    return TOY23


@pytest.fixture(scope="session")
def toy_signer():
    # x = 3 -> y = 4**3 mod 23 = 18
    return KeyPair(x=3, y=18, role="signer")


@pytest.fixture(scope="session")
def toy_verifier():
    # x = 5 -> y = 4**5 mod 23 = 12
    return KeyPair(x=5, y=12, role="verifier")


@pytest.fixture(scope="session")
def midsize():
    # big enough for payload framing, small enough to be instant
    return generate_params(16, 64, random.Random(0xC0FFEE))


@pytest.fixture(scope="session")
def big():
    return generate_params(256, 2048, random.Random(0x5EED2026))


@pytest.fixture(scope="session")
def big_signer(big):
    return keygen(big, random.Random(101), role="signer")


@pytest.fixture(scope="session")
def big_verifier(big):
    return keygen(big, random.Random(202), role="verifier")
