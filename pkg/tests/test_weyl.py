import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specdual.algebra import UniPoly
from specdual.sampling import random_uni, random_weyl_op
from specdual.weyl import WeylOp, commutator, weyl_mul, z_action

D, s = WeylOp.D(), WeylOp.s()
z = UniPoly.gen("z")
one_z = UniPoly.constant(1, "z")


def test_defining_relation():
    assert weyl_mul(D, s) == s * D + 1


def test_square_of_sum():
    assert (D + s) * (D + s) == D ** 2 + 2 * s * D + s ** 2 + 1
    assert ((D + s) ** 2).to_text() == "D^2 + 2*s*D + s^2 + 1"


def test_unit():
    b = D ** 3 * s - 4
    assert weyl_mul(WeylOp.constant(1), b) == b
    assert b * 1 == b


def test_order_additive():
    assert (D ** 2 + s).order + (D ** 3 - 2).order == ((D ** 2 + s) * (D ** 3 - 2)).order


def test_commutator_string_equation():
    assert commutator(D ** 2 - s, D + 1) == WeylOp.constant(1)


@pytest.mark.parametrize("p,q", [(1, 2), (2, 3), (4, 1)])
def test_commutator_of_powers(p, q):
    assert not commutator(D ** p, D ** q)


def test_commutator_not_constant():
    c = commutator(D ** 2 + s + 1, D ** 3 - 2)
    assert c and c != WeylOp.constant(c.coeffs[0].coeff(0))
    # direct expansion: [s, D^3] = -3 D^2
    assert c == -3 * D ** 2


def test_constant_leading_coefficient_flag():
    assert (D ** 2 + s + 1).has_constant_leading_coefficient()
    assert not (s * D + 1).has_constant_leading_coefficient()


def test_z_action_examples():
    assert z_action(D ** 2 - s, one_z) == z ** 2
    assert z_action(D ** 2 + s + 1, one_z) == z ** 2 + 1
    v = 3 * z ** 4 - z + 7
    assert z_action(WeylOp.constant(1), v) == v


def test_z_action_rejects_other_variable():
    from specdual.errors import ValidationError
    with pytest.raises(ValidationError):
        z_action(D, UniPoly.gen("u"))


def _op(rng, max_order=3):
    return random_weyl_op(rng, rng.randint(0, max_order), coeff_degree=2,
                          constant_leading=rng.random() < 0.5)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_representation_property(seed):
    rng = random.Random(seed)
    a, b = _op(rng), _op(rng)
    v = random_uni(rng, rng.randint(0, 5), "z")
    assert z_action(weyl_mul(a, b), v) == z_action(a, z_action(b, v))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_weyl_relation_acts_as_identity(seed):
    v = random_uni(random.Random(seed), 6, "z")
    assert z_action(commutator(D, s), v) == v


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_associativity(seed):
    rng = random.Random(seed)
    a, b, c = _op(rng), _op(rng), _op(rng)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_leading_coefficient_multiplicative(seed):
    rng = random.Random(seed)
    a = random_weyl_op(rng, rng.randint(1, 3))
    b = random_weyl_op(rng, rng.randint(1, 3))
    ab = a * b
    assert ab.order == a.order + b.order
    assert ab.leading_coefficient == a.leading_coefficient * b.leading_coefficient
