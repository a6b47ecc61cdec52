"""Tests for the sign cocycle on K-perp."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from enlattice.census import enumerate_roots
from enlattice.exceptions import DomainError
from enlattice.liealg import build_cocycle
from enlattice.picard import make_lattice

X6 = make_lattice(6)
X8 = make_lattice(8)
ROOTS6 = enumerate_roots(X6)
ROOTS8 = enumerate_roots(X8)


class TestCocycleIdentities:
    """Property tests for the defining identities."""

    @given(st.sampled_from(ROOTS6), st.sampled_from(ROOTS6))
    def test_commutator_sign(self, a, b):
        """Test eps(a, b) eps(b, a) = (-1)^(a.b)."""
        eps = build_cocycle(X6)
        assert eps(a, b) * eps(b, a) == (-1) ** (a.dot(b) % 2)

    @given(st.sampled_from(ROOTS8))
    def test_root_self_sign(self, a):
        """Test eps(a, a) = eps(a, -a) = -1 for a root."""
        eps = build_cocycle(X8)
        assert eps(a, a) == -1
        assert eps(a, -a) == -1

    @given(st.sampled_from(ROOTS8))
    def test_opposite_product(self, a):
        """Test eps(a, -a) eps(-a, a) = +1."""
        eps = build_cocycle(X8)
        assert eps(a, -a) * eps(-a, a) == 1

    @given(st.sampled_from(ROOTS6), st.sampled_from(ROOTS6), st.sampled_from(ROOTS6))
    def test_bimultiplicative(self, a, b, c):
        """Test eps(a + b, c) = eps(a, c) eps(b, c)."""
        eps = build_cocycle(X6)
        assert eps(a + b, c) == eps(a, c) * eps(b, c)
        assert eps(c, a + b) == eps(c, a) * eps(c, b)


class TestCocycleConstruction:
    """Test construction and domain checks."""

    @pytest.mark.parametrize("n", range(1, 9))
    def test_no_violations_on_basis(self, n):
        """Test the basis satisfies both identities for every n."""
        eps = build_cocycle(make_lattice(n))
        assert eps.violations(list(eps.basis)) == []

    def test_no_violations_on_e6_roots(self):
        """Test the identities on every pair of E6 roots."""
        assert build_cocycle(X6).violations(ROOTS6) == []

    def test_sign_table_matches_sign(self):
        """Test the vectorised table agrees with single lookups."""
        eps = build_cocycle(X6)
        table = eps.sign_table(ROOTS6[:10], ROOTS6[-10:])
        for i, a in enumerate(ROOTS6[:10]):
            for j, b in enumerate(ROOTS6[-10:]):
                assert table[i, j] == eps(a, b)

    def test_requires_kperp(self):
        """Test classes not orthogonal to K have no coordinates."""
        with pytest.raises(DomainError, match="orthogonal to K"):
            build_cocycle(X6).coordinates(X6.H)

    def test_rank_limit(self):
        """Test the cocycle stops at n = 8."""
        with pytest.raises(DomainError):
            build_cocycle(make_lattice(9))
