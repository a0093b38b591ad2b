import pytest

from schubcalc.errors import ValidationError
from schubcalc.finite import FqFlag, FqMatrix, FqSubspace, PrimeFieldElement, is_prime, rref


def test_is_prime():
    assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]


class TestPrimeField:
    def test_arithmetic(self):
        a, b = PrimeFieldElement(3, 5), PrimeFieldElement(4, 5)
        assert (a + b).value == 2
        assert (a - b).value == 4
        assert (a * b).value == 2
        assert (a / b * b) == a
        assert (-a).value == 2
        assert (1 - a).value == 3

    def test_inverse_table(self):
        for q in (2, 3, 5, 7):
            for v in range(1, q):
                assert (PrimeFieldElement(v, q) * PrimeFieldElement(v, q).inverse()).value == 1

    def test_errors(self):
        with pytest.raises(ZeroDivisionError):
            PrimeFieldElement(0, 3).inverse()
        with pytest.raises(ValidationError):
            PrimeFieldElement(1, 4)
        with pytest.raises(ValidationError):
            PrimeFieldElement(1, 3) + PrimeFieldElement(1, 5)


def test_rref_basic():
    assert rref([(1, 1, 0), (1, 0, 1)], 2) == ((1, 0, 1), (0, 1, 1))
    assert rref([(2, 4), (1, 2)], 3) == ((1, 2),)
    assert rref([], 5) == ()


class TestSubspace:
    def test_canonical_equality(self):
        a = FqSubspace(3, 3, [(1, 2, 0), (0, 1, 1)])
        b = FqSubspace(3, 3, [(1, 0, 1), (1, 1, 2)])
        assert a == b and a.dim == 2

    def test_sum_and_intersection(self):
        x = FqSubspace.coordinate(2, 4, [1, 2])
        y = FqSubspace.coordinate(2, 4, [2, 3])
        assert (x + y).dim == 3
        assert x.intersection_dim(y) == 1
        assert x.contains(FqSubspace.coordinate(2, 4, [2]))
        assert not x.contains(y)

    def test_wrong_length(self):
        with pytest.raises(ValidationError):
            FqSubspace(2, 3, [(1, 0)])

    def test_incompatible(self):
        with pytest.raises(ValidationError):
            FqSubspace(2, 3) + FqSubspace(3, 3)


class TestMatrix:
    def test_identity_and_zero(self):
        eye = FqMatrix(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert eye.rank() == 3 and eye.column_space() == FqSubspace.coordinate(3, 3, [1, 2, 3])
        zero = FqMatrix(2, [(0, 0), (0, 0)])
        assert zero.rank() == 0 and zero.column_space().dim == 0

    def test_repeated_columns(self):
        a = FqMatrix(5, [(1, 1, 2), (3, 3, 0)])
        b = FqMatrix(5, [(1, 2), (3, 0)])
        assert a.column_space() == b.column_space()

    def test_ragged(self):
        with pytest.raises(ValidationError):
            FqMatrix(2, [(1, 0), (1,)])


class TestFlag:
    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_standard_and_opposite_are_transverse(self, n):
        f, g = FqFlag.standard(3, n), FqFlag.opposite(3, n)
        for i in range(n + 1):
            assert f[i].intersection_dim(g[n - i]) == 0

    def test_from_basis(self):
        flag = FqFlag.from_basis(2, [(1, 1, 0), (0, 1, 0), (0, 0, 1)])
        assert flag[1] == FqSubspace(2, 3, [(1, 1, 0)])

    def test_rejects_wrong_dimension(self):
        e = lambda *i: FqSubspace.coordinate(2, 2, i)
        with pytest.raises(ValidationError):
            FqFlag((e(), e(1), e(1)))

    def test_rejects_non_nested(self):
        e = lambda *i: FqSubspace.coordinate(2, 3, i)
        with pytest.raises(ValidationError):
            FqFlag((e(), e(1), e(2, 3), e(1, 2, 3)))
