"""Tests for E_n elements, brackets and the identity scanners."""

from fractions import Fraction

import pytest

from enlattice.constants import ALGEBRA_DIMENSIONS
from enlattice.exceptions import DomainError
from enlattice.liealg import (
    Element,
    antisymmetry_check,
    build_algebra,
    jacobi_check,
    killing_form,
    subalgebra,
)
from enlattice.picard import make_lattice
from enlattice.report import Scope


class TestBracket:
    """Test the structure constants."""

    @pytest.mark.parametrize("n", range(1, 9))
    def test_dimension(self, n):
        """Test dim E_n = n + #roots."""
        assert build_algebra(make_lattice(n)).dimension == ALGEBRA_DIMENSIONS[n]

    def test_opposite_roots_bracket_to_cartan(self):
        """Test [x_A, x_-A] = A."""
        X = make_lattice(5)
        E5 = build_algebra(X)
        A = X.L(1) - X.L(2)
        result = E5.bracket(E5.root_vector(A), E5.root_vector(-A))
        assert result.roots == ()
        assert result.cartan == tuple(Fraction(c) for c in A.coeffs)

    def test_cartan_acts_by_pairing(self):
        """Test [h, x_D] = (h.D) x_D."""
        X = make_lattice(5)
        E5 = build_algebra(X)
        D = X.H - X.L(1) - X.L(2) - X.L(3)
        h = E5.cartan_element(X.L(1) - X.L(4))
        result = E5.bracket(h, E5.root_vector(D))
        assert result.coefficient(D) == Fraction((X.L(1) - X.L(4)).dot(D))

    def test_meeting_roots_add(self):
        """Test [x_A, x_B] = +-x_{A+B} when A.B = 1."""
        X = make_lattice(4)
        E4 = build_algebra(X)
        A, B = X.L(1) - X.L(2), X.L(2) - X.L(3)
        result = E4.bracket(E4.root_vector(A), E4.root_vector(B))
        assert abs(result.coefficient(A + B)) == 1

    def test_orthogonal_roots_commute(self):
        """Test [x_A, x_B] = 0 when A.B = 0."""
        X = make_lattice(4)
        E4 = build_algebra(X)
        result = E4.bracket(E4.root_vector(X.L(1) - X.L(2)), E4.root_vector(X.L(3) - X.L(4)))
        assert result.is_zero()

    def test_antisymmetry(self):
        """Test [x, y] = -[y, x] on the E4 basis."""
        assert antisymmetry_check(build_algebra(make_lattice(4))).verified

    def test_non_root_rejected(self):
        """Test x_D needs D to be a root."""
        X = make_lattice(4)
        with pytest.raises(DomainError, match="not a root"):
            build_algebra(X).root_vector(X.L(1))

    def test_cartan_must_be_kperp(self):
        """Test Cartan elements are orthogonal to K."""
        X = make_lattice(4)
        with pytest.raises(DomainError, match="orthogonal to K"):
            build_algebra(X).cartan_element(X.H)

    def test_rank_mismatch(self):
        """Test elements of another rank are refused."""
        E4 = build_algebra(make_lattice(4))
        with pytest.raises(DomainError):
            E4.bracket(Element.zero(5), Element.zero(4))

    def test_killing_form_pairs_opposites(self):
        """Test kappa(x_D, x_-D) = 1 and kappa(h, h') = h.h'."""
        X = make_lattice(6)
        E6 = build_algebra(X)
        D = X.L(1) - X.L(2)
        assert killing_form(E6, E6.root_vector(D), E6.root_vector(-D)) == 1
        h = E6.cartan_element(D)
        assert killing_form(E6, h, h) == -2

    def test_killing_form_invariant(self):
        """Test kappa([x, y], z) = kappa(x, [y, z]) on a few root vectors."""
        X = make_lattice(5)
        E5 = build_algebra(X)
        x = E5.root_vector(X.L(1) - X.L(2))
        y = E5.root_vector(X.L(2) - X.L(3))
        z = E5.root_vector(X.L(3) - X.L(1))
        assert killing_form(E5, E5.bracket(x, y), z) == killing_form(E5, x, E5.bracket(y, z))

    def test_subalgebra(self):
        """Test a subalgebra keeps the Cartan and the chosen roots."""
        X = make_lattice(5)
        E5 = build_algebra(X)
        chosen = [r for r in E5.roots if r.dot(X.L(5)) == 0]
        sub = subalgebra(E5, chosen, "E4")
        assert sub.dimension == 5 + 20
        assert sub.system.type == "A4"

    def test_subalgebra_rejects_non_roots(self):
        """Test subalgebra roots must be roots of the parent."""
        X = make_lattice(5)
        with pytest.raises(DomainError):
            subalgebra(build_algebra(X), [X.L(1)], "bad")

    def test_x0_has_no_algebra(self):
        """Test the algebra needs n >= 1."""
        with pytest.raises(DomainError):
            build_algebra(make_lattice(0))


class TestJacobi:
    """Test the Jacobi scanner."""

    @pytest.mark.parametrize("n", range(1, 6))
    def test_exhaustive_small(self, n):
        """Test Jacobi holds on every basis triple for n <= 5."""
        record = jacobi_check(build_algebra(make_lattice(n)))
        assert record.verified
        assert record.scope == Scope.EXHAUSTIVE

    @pytest.mark.slow
    def test_exhaustive_e6(self):
        """Test Jacobi holds on every basis triple of E6."""
        assert jacobi_check(build_algebra(make_lattice(6))).verified

    @pytest.mark.parametrize("n", [7, 8])
    def test_sampled(self, n):
        """Test sampled Jacobi on E7 and E8."""
        record = jacobi_check(build_algebra(make_lattice(n)), samples=300, seed=3)
        assert record.verified
        assert record.scope == Scope.SAMPLED
        assert record.evaluations == 300

    def test_record_id(self):
        """Test the record is named after the algebra."""
        assert jacobi_check(build_algebra(make_lattice(3))).id == "jacobi.E3"
