import math
import random

import pytest

from liecolour import AbelianGroup, CommutationFactor, field


def random_commutation_factor(group, f, rng):
    """Uniformly sample a valid bimultiplicative commutation factor.

    Off-diagonal generator values are arbitrary roots of unity compatible
    with both cyclic orders (mirrored so eps(a,b) eps(b,a) = 1); diagonal
    values are +-1, with -1 only allowed on even-order factors.
    """
    m = f.m
    k = group.rank
    exps = [[0] * k for _ in range(k)]
    for i in range(k):
        ni = group.orders[i]
        if ni % 2 == 0:
            exps[i][i] = rng.choice([0, m // 2])
        for j in range(i + 1, k):
            step = m // math.gcd(group.orders[i], group.orders[j])
            e = step * rng.randrange(m // step)
            exps[i][j] = e
            exps[j][i] = (-e) % m
    return CommutationFactor(group, f, exps)


FACTOR_BATTERY_ORDERS = [[2], [4], [2, 2], [3, 3], [2, 4]]


def battery_groups():
    return [AbelianGroup(o) for o in FACTOR_BATTERY_ORDERS]


def field_for(group):
    return field(math.lcm(group.exponent, 4))


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240817)
