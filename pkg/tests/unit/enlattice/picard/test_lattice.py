"""Tests for divisor classes and the Picard lattice."""

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from enlattice.exceptions import ClassParseError, DomainError
from enlattice.picard import (
    DivisorClass,
    gram_matrix,
    kperp_basis,
    make_lattice,
    rational_dot,
    sum_classes,
)


def classes(n: int):
    return st.lists(st.integers(-6, 6), min_size=n + 1, max_size=n + 1).map(lambda c: DivisorClass(tuple(c)))


class TestDivisorClass:
    """Test arithmetic and intersection of classes."""

    def test_intersection_form(self):
        """Test the form is diag(1, -1, ..., -1)."""
        X = make_lattice(3)
        assert X.H.dot(X.H) == 1
        assert X.L(2).dot(X.L(2)) == -1
        assert X.H.dot(X.L(1)) == 0
        assert X.L(1).dot(X.L(2)) == 0

    def test_canonical_class(self):
        """Test K = -3H + sum L_i has K.K = 9 - n."""
        for n in range(0, 11):
            X = make_lattice(n)
            assert X.K.dot(X.K) == 9 - n
            assert X.K.coeffs == (-3,) + (-1,) * n

    def test_exceptional_is_a_line(self):
        """Test L_i.L_i = L_i.K = -1."""
        X = make_lattice(6)
        for i in range(1, 7):
            assert X.L(i).dot(X.L(i)) == -1
            assert X.L(i).dot(X.K) == -1

    def test_exceptional_index_checked(self):
        """Test an exceptional index outside 1..n is rejected."""
        with pytest.raises(DomainError, match="outside"):
            DivisorClass.exceptional(3, 4)

    def test_rank_mismatch_rejected(self):
        """Test classes on different lattices cannot be intersected."""
        with pytest.raises(DomainError, match="Rank mismatch"):
            make_lattice(3).H.dot(make_lattice(4).H)

    def test_label(self):
        """Test labels read like 2H-L1-L2."""
        X = make_lattice(3)
        assert (X.H * 2 - X.L(1) - X.L(2)).label() == "2H-L1-L2"
        assert (X.L(1) - X.L(2)).label() == "L1-L2"
        assert DivisorClass.zero(3).label() == "0"
        assert X.K.label() == "-3H+L1+L2+L3"

    def test_truncate_and_pullback(self):
        """Test truncation undoes pullback."""
        X = make_lattice(5)
        D = X.H * 2 - X.L(1) - X.L(4)
        assert D.pullback().rank == 6
        assert D.pullback().truncate() == D

    def test_truncate_on_x0_rejected(self):
        """Test X_0 classes cannot be truncated."""
        with pytest.raises(DomainError):
            DivisorClass.hyperplane(0).truncate()

    def test_ordering_is_lexicographic(self):
        """Test classes sort by (a, b_1, ..., b_n)."""
        X = make_lattice(2)
        assert sorted([X.H, X.L(1), X.L(2)]) == [X.L(1), X.L(2), X.H]


class TestJsonClasses:
    """Test parsing classes from JSON arrays."""

    def test_parse_string(self):
        """Test a JSON string parses to the class."""
        assert DivisorClass.from_json("[1, -1, 0]") == DivisorClass.of(1, -1, 0)

    def test_round_trip(self):
        """Test to_json output parses back."""
        D = make_lattice(7).K * 2
        assert DivisorClass.from_json(D.to_json()) == D

    def test_invalid_json_names_field(self):
        """Test malformed JSON reports the field it came from."""
        with pytest.raises(ClassParseError, match="--r") as exc_info:
            DivisorClass.from_json("[1, -1", field="--r")
        assert exc_info.value.field == "--r"

    def test_non_integer_rejected(self):
        """Test floats and booleans are not coefficients."""
        with pytest.raises(ClassParseError, match="integer"):
            DivisorClass.from_json("[1, 0.5]")
        with pytest.raises(ClassParseError, match="integer"):
            DivisorClass.from_json([True, 0])

    def test_empty_rejected(self):
        """Test an empty array is not a class."""
        with pytest.raises(ClassParseError, match="non-empty"):
            DivisorClass.from_json("[]")

    def test_rank_limit(self):
        """Test classes above the supported rank are rejected."""
        with pytest.raises(ClassParseError, match="exceeds"):
            DivisorClass.from_json([0] * 12)


class TestPicardLattice:
    """Test lattice-level helpers."""

    def test_rank_bounds(self):
        """Test n outside 0..10 is rejected."""
        with pytest.raises(DomainError):
            make_lattice(11)
        with pytest.raises(DomainError):
            make_lattice(-1)

    def test_configured_rank_limit(self):
        """Test a lowered max_rank caps n below the hard limit."""
        assert make_lattice(6, max_rank=6).n == 6
        with pytest.raises(DomainError, match="max_rank=6"):
            make_lattice(7, max_rank=6)

    def test_make_checks_coefficient_count(self):
        """Test make() requires n + 1 coefficients."""
        with pytest.raises(DomainError, match="coefficients"):
            make_lattice(3).make(1, 0, 0)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_kperp_basis(self, n):
        """Test the K-perp basis is orthogonal to K with discriminant 9 - n up to sign."""
        X = make_lattice(n)
        basis = kperp_basis(X)
        assert len(basis) == n
        assert all(v.dot(X.K) == 0 for v in basis)
        det = sympy.Matrix(gram_matrix(basis)).det()
        assert det == (-1) ** n * (9 - n)

    def test_projection_lands_in_kperp(self):
        """Test the rational projection of H is orthogonal to K."""
        X = make_lattice(6)
        projected = X.project_to_kperp(X.H)
        assert rational_dot(projected, X.K.coeffs) == 0

    def test_projection_undefined_on_x9(self):
        """Test K is isotropic on X_9."""
        X = make_lattice(9)
        with pytest.raises(DomainError, match="isotropic"):
            X.project_to_kperp(X.H)

    def test_sum_classes(self):
        """Test sum of the six exceptional classes plus K is -3H."""
        X = make_lattice(6)
        total = sum_classes([X.L(i) for i in range(1, 7)], 6)
        assert total - X.K == X.H * 3


class TestFormProperties:
    """Property tests for the intersection form."""

    @given(classes(6), classes(6), classes(6))
    def test_bilinear(self, a, b, c):
        """Test (a + b).c = a.c + b.c."""
        assert (a + b).dot(c) == a.dot(c) + b.dot(c)

    @given(classes(6), classes(6))
    def test_symmetric(self, a, b):
        """Test a.b = b.a."""
        assert a.dot(b) == b.dot(a)

    @given(classes(7), st.integers(-5, 5))
    def test_scaling(self, a, k):
        """Test (k a).a = k (a.a)."""
        assert (a * k).dot(a) == k * a.dot(a)

    @given(classes(5))
    def test_adjunction_parity(self, D):
        """Test D.D + D.K is always even."""
        X = make_lattice(5)
        assert (D.dot(D) + D.dot(X.K)) % 2 == 0
