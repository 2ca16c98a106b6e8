import pytest

from idealcover import field_inv, field_mul, make_field
from idealcover.gf import _is_irreducible, canonical_modulus


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_gf4_canonical_modulus():
    # derive independently: of the four monic quadratics over F_2, only
    # x^2 + x + 1 has no root
    def has_root(c0, c1):
        return any((x * x + c1 * x + c0) % 2 == 0 for x in range(2))
    irreducible = [(c0, c1) for c0 in range(2) for c1 in range(2)
                   if not has_root(c0, c1)]
    assert irreducible == [(1, 1)]
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_prime_field_modulus_is_x():
    assert make_field(5, 1).modulus == (0, 1)


def test_nonprime_p_rejected():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(2, 0)


def test_field_is_deterministic():
    a = make_field(3, 2)
    b = make_field(3, 2)
    assert a.modulus == b.modulus
    assert a._mul_table == b._mul_table


def test_element_count_is_q():
    for p, k in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (2, 3)]:
        f = make_field(p, k)
        elems = f.elements()
        assert len(elems) == p ** k
        assert len(set(elems)) == p ** k


# ---------------------------------------------------------------------------
# multiplication and inverses
# ---------------------------------------------------------------------------

def test_gf4_generator_square():
    f = make_field(2, 2)
    a = (0, 1)  # the class of x
    assert field_mul(f, a, a) == (1, 1)  # x^2 = x + 1 mod x^2+x+1


def test_mul_identity_and_zero():
    for p, k in [(2, 2), (3, 1), (5, 1), (2, 3)]:
        f = make_field(p, k)
        for a in f.elements():
            assert field_mul(f, f.one, a) == a
            assert field_mul(f, f.zero, a) == f.zero


def test_gf4_inverse_of_generator():
    f = make_field(2, 2)
    assert field_inv(f, (0, 1)) == (1, 1)  # x * (x+1) = x^2+x = 1
    assert field_inv(f, f.one) == f.one


def test_inverse_of_zero_raises():
    f = make_field(3, 1)
    with pytest.raises(ZeroDivisionError):
        field_inv(f, f.zero)


def test_inverses_exhaustive():
    for p, k in [(2, 2), (3, 2), (5, 1), (2, 4)]:
        f = make_field(p, k)
        for a in f.elements():
            if a == f.zero:
                continue
            assert field_mul(f, a, field_inv(f, a)) == f.one


# ---------------------------------------------------------------------------
# field axioms, exhaustive on small q
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (3, 1), (2, 3), (3, 2), (5, 1)])
def test_field_axioms(p, k):
    f = make_field(p, k)
    elems = f.elements()
    for a in elems:
        for b in elems:
            assert field_mul(f, a, b) == field_mul(f, b, a)
            for c in elems:
                assert (field_mul(f, field_mul(f, a, b), c)
                        == field_mul(f, a, field_mul(f, b, c)))
                assert (field_mul(f, a, f.add(b, c))
                        == f.add(field_mul(f, a, b), field_mul(f, a, c)))


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
                                 (3, 2), (3, 3), (5, 2), (7, 2)])
def test_multiplicative_group_order(p, k):
    # a^(q-1) = 1 for every nonzero a, checkable exhaustively up to q = 64
    f = make_field(p, k)
    q = p ** k
    for a in f.elements():
        if a == f.zero:
            continue
        assert f.pow(a, q - 1) == f.one


def test_modulus_is_irreducible_for_degrees_up_to_4():
    for p in (2, 3, 5):
        for k in (1, 2, 3, 4):
            mod = canonical_modulus(p, k)
            assert len(mod) == k + 1
            assert mod[-1] == 1
            assert _is_irreducible(p, mod)
