import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biquat.algebra import (
    E1,
    E2,
    E3,
    E4,
    Quaternion,
    from_ijk,
    ijk_mul,
    mul_many,
    norm_many,
    one,
    to_ijk,
    zero,
)

BASIS = (E1, E2, E3, E4)

# the sparse structure table: nonzero products (i, j) -> k meaning e_i e_j = e_k
TABLE = {
    (1, 1): 1,
    (1, 3): 3,
    (2, 2): 2,
    (2, 4): 4,
    (3, 2): 3,
    (3, 4): 1,
    (4, 1): 4,
    (4, 3): 2,
}


def hamilton(u, v):
    """Independent {1,I,J,K} product oracle written out term by term."""
    u0, u1, u2, u3 = u
    v0, v1, v2, v3 = v
    return np.array(
        [
            u0 * v0 - u1 * v1 - u2 * v2 - u3 * v3,
            u0 * v1 + u1 * v0 + u2 * v3 - u3 * v2,
            u0 * v2 + u2 * v0 + u3 * v1 - u1 * v3,
            u0 * v3 + u3 * v0 + u1 * v2 - u2 * v1,
        ],
        dtype=complex,
    )


def matrix_rep(q: Quaternion) -> np.ndarray:
    """Second independent oracle: e1,e2,e3,e4 as the 2x2 matrix units."""
    c = q.coeffs
    return np.array([[c[0], c[2]], [c[3], c[1]]], dtype=complex)


def random_quaternions(rng, m):
    return rng.uniform(-1.0, 1.0, (m, 4)) + 1j * rng.uniform(-1.0, 1.0, (m, 4))


def test_structure_table_exact():
    for i in range(1, 5):
        for j in range(1, 5):
            prod = BASIS[i - 1] * BASIS[j - 1]
            expected = np.zeros(4, dtype=complex)
            if (i, j) in TABLE:
                expected[TABLE[(i, j)] - 1] = 1.0
            assert np.array_equal(prod.coeffs, expected), f"e{i}*e{j}"


def test_paper_table_spot_values():
    assert E3 * E4 == E1
    assert E3 * E3 == zero()
    assert one() * E3 == E3


def test_noncommutativity_witness_exact():
    assert E3 * E4 == E1
    assert E4 * E3 == E2
    assert E1 != E2


def test_unit_decomposition():
    assert np.array_equal(one().coeffs, np.array([1, 1, 0, 0], dtype=complex))
    assert one() * E4 == E4
    assert E4 * one() == E4
    rng = np.random.default_rng(7)
    for row in random_quaternions(rng, 20):
        q = Quaternion.from_array(row)
        assert (one() * q - q).norm_e() == 0.0
        assert (q * one() - q).norm_e() == 0.0


def test_matrix_representation_oracle():
    rng = np.random.default_rng(11)
    a = random_quaternions(rng, 200)
    b = random_quaternions(rng, 200)
    for ra, rb in zip(a, b):
        p, q = Quaternion.from_array(ra), Quaternion.from_array(rb)
        got = matrix_rep(p * q)
        want = matrix_rep(p) @ matrix_rep(q)
        assert np.max(np.abs(got - want)) <= 1e-13 * (1 + p.norm_e() * q.norm_e())


def test_to_ijk_examples():
    np.testing.assert_allclose(to_ijk(E1), [0.5, 0.5j, 0, 0], atol=1e-15)
    np.testing.assert_allclose(to_ijk(E3), [0, 0, 0.5, 0.5j], atol=1e-15)
    np.testing.assert_allclose(to_ijk(one()), [1, 0, 0, 0], atol=1e-15)


def test_table_closure_under_ijk_embedding():
    # every basis product must close under the independent Hamilton oracle
    for i in range(1, 5):
        for j in range(1, 5):
            via_ijk = hamilton(to_ijk(BASIS[i - 1]), to_ijk(BASIS[j - 1]))
            direct = to_ijk(BASIS[i - 1] * BASIS[j - 1])
            np.testing.assert_allclose(via_ijk, direct, atol=1e-15)


def test_basis_change_isomorphism_random():
    rng = np.random.default_rng(23)
    for ra, rb in zip(random_quaternions(rng, 300), random_quaternions(rng, 300)):
        p, q = Quaternion.from_array(ra), Quaternion.from_array(rb)
        lhs = to_ijk(p * q)
        rhs = hamilton(to_ijk(p), to_ijk(q))
        assert np.max(np.abs(lhs - rhs)) <= 1e-13
        assert np.max(np.abs(ijk_mul(to_ijk(p), to_ijk(q)) - rhs)) <= 1e-14


def test_round_trip_identity():
    rng = np.random.default_rng(31)
    for row in random_quaternions(rng, 300):
        q = Quaternion.from_array(row)
        back = from_ijk(to_ijk(q))
        assert (back - q).norm_e() <= 1e-14


def test_associativity_random_triples():
    rng = np.random.default_rng(5)
    a = random_quaternions(rng, 1000)
    b = random_quaternions(rng, 1000)
    c = random_quaternions(rng, 1000)
    lhs = mul_many(mul_many(a, b), c)
    rhs = mul_many(a, mul_many(b, c))
    bound = 1e-12 * (1 + norm_many(a) * norm_many(b) * norm_many(c))
    assert np.all(norm_many(lhs - rhs) <= bound)


def test_bilinearity_and_distributivity():
    rng = np.random.default_rng(13)
    a = random_quaternions(rng, 200)
    b = random_quaternions(rng, 200)
    c = random_quaternions(rng, 200)
    s = rng.uniform(-2, 2, 200) + 1j * rng.uniform(-2, 2, 200)
    lhs = mul_many(a, b + c)
    rhs = mul_many(a, b) + mul_many(a, c)
    scale = 1 + norm_many(a) * (norm_many(b) + norm_many(c))
    assert np.all(norm_many(lhs - rhs) <= 1e-13 * scale)
    lhs2 = mul_many(a * s[:, None], b)
    rhs2 = s[:, None] * mul_many(a, b)
    assert np.all(norm_many(lhs2 - rhs2) <= 1e-13 * np.abs(s) * norm_many(a) * norm_many(b) + 1e-15)


def test_norm_examples():
    assert zero().norm_e() == 0.0
    assert one().norm_e() == pytest.approx(np.sqrt(2.0), abs=1e-15)
    assert (1j * E3).norm_e() == pytest.approx(1.0, abs=1e-15)


def test_component_magnitude_below_norm():
    rng = np.random.default_rng(17)
    for row in random_quaternions(rng, 100):
        q = Quaternion.from_array(row)
        n = q.norm_e()
        for k in range(4):
            assert abs(q.coeffs[k]) <= n + 1e-15


def test_reals_layout():
    q = Quaternion(1 + 2j, 3 + 4j, 5 + 6j, 7 + 8j)
    assert q.reals() == (1, 2, 3, 4, 5, 6, 7, 8)


def test_scalar_multiplication_commutes():
    q = Quaternion(1 + 1j, 2, 0.5j, -1)
    assert (2j * q - q * 2j).norm_e() == 0.0


def test_from_array_validates_shape():
    with pytest.raises(ValueError):
        Quaternion.from_array(np.zeros(3))
    with pytest.raises(ValueError):
        from_ijk(np.zeros(5))


coeff = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
quat = st.builds(
    Quaternion,
    st.builds(complex, coeff, coeff),
    st.builds(complex, coeff, coeff),
    st.builds(complex, coeff, coeff),
    st.builds(complex, coeff, coeff),
)


@settings(max_examples=150, deadline=None)
@given(quat, quat, quat)
def test_associativity_property(p, q, r):
    lhs = (p * q) * r
    rhs = p * (q * r)
    assert (lhs - rhs).norm_e() <= 1e-12 * (1 + p.norm_e() * q.norm_e() * r.norm_e())


@settings(max_examples=150, deadline=None)
@given(quat, quat)
def test_basis_change_multiplicative_property(p, q):
    lhs = to_ijk(p * q)
    rhs = hamilton(to_ijk(p), to_ijk(q))
    assert np.max(np.abs(lhs - rhs)) <= 1e-13
