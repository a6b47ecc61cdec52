"""Tests for the X_8 parity split, small-n coincidences and degenerations."""

import pytest

from enlattice.branching import (
    DegenerationCase,
    all_degenerations,
    decompose_parity,
    degeneration_counts,
    e7_centralizer,
    small_n_checks,
    w8_checks,
)
from enlattice.branching.degenerations import (
    component_sizes,
    degeneration_subsystem,
    double_plane_classes,
    orbit_sizes,
    plane_quadric_classes,
    three_plane_lines,
)
from enlattice.census import enumerate_lines, enumerate_rulings
from enlattice.exceptions import DomainError
from enlattice.picard import make_lattice
from enlattice.report import Scope


class TestParity:
    """Test E_8 = LD_8 + S+ and L_8 = LD_8(-K) + S+."""

    def test_default_degree_class(self, x8):
        """Test the split for H holds throughout."""
        result = decompose_parity(x8)
        assert result.verified, [r.id for r in result.records() if not r.verified]

    def test_sizes(self, x8):
        """Test 248 = 120 + 128 on both sides."""
        result = decompose_parity(x8)
        assert result.decomposition("branch.parity.E8").sizes == [120, 128]
        assert result.decomposition("branch.parity.L8").sizes == [120, 128]

    def test_other_degree_class(self, x8):
        """Test the Cremona image 2H - L1 - L2 - L3 of H."""
        H = x8.H * 2 - x8.L(1) - x8.L(2) - x8.L(3)
        assert H.dot(H) == 1 and H.dot(x8.K) == -3
        assert decompose_parity(x8, H).verified

    def test_w8_sign_convention(self, x8):
        """Test only the negated convention for W_8 reproduces LD_8."""
        records = {r.id: r for r in w8_checks(x8, x8.H)}
        assert records["branch.parity.lambda2-w"].verified
        assert records["branch.parity.lambda2-w-sign"].verified

    def test_bad_degree_class(self, x8):
        """Test a class of the wrong degree is refused."""
        with pytest.raises(DomainError, match="degree class"):
            decompose_parity(x8, x8.H * 2)


class TestE7Centralizer:
    """Test the centralizer of L1 - L2 on X_8."""

    @pytest.mark.slow
    def test_centralizer(self, x8):
        """Test E_8 = E_7 + A_1 + 56 + 56."""
        result = e7_centralizer(x8, x8.L(1), x8.L(2))
        assert result.verified
        assert result.decomposition("branch.a1-pair.E8").sizes == [133, 3, 56, 56]

    def test_meeting_lines_refused(self, x8):
        """Test the two lines must be disjoint."""
        with pytest.raises(DomainError, match="meet"):
            e7_centralizer(x8, x8.L(1), x8.H - x8.L(1) - x8.L(2))


class TestSmallN:
    """Test the low-rank identities."""

    def test_all_hold(self):
        """Test every small-n identity."""
        records = small_n_checks()
        assert records
        assert all(r.verified for r in records), [r.id for r in records if not r.verified]

    def test_n_max_drops_dualities(self):
        """Test dualities above n_max are left out."""
        ids = {r.id for r in small_n_checks(n_max=6)}
        assert "small-n.X6.dual" in ids
        assert "small-n.X7.dual" not in ids
        assert "small-n.X8.dual" not in ids


class TestDegenerations:
    """Test label sets of degenerate surfaces against the smooth census."""

    @pytest.mark.parametrize("case", list(DegenerationCase))
    def test_case(self, case):
        """Test each case matches the smooth counts and orbit split."""
        records = degeneration_counts(case)
        assert all(r.verified for r in records), [r.id for r in records if not r.verified]
        assert all(r.scope == Scope.COMBINATORIAL for r in records)

    def test_case_by_name(self):
        """Test cases can be given by their value."""
        ids = [r.id for r in degeneration_counts("X6-three-planes")]
        assert ids == [
            "degeneration.X6-three-planes.subalgebra",
            "degeneration.X6-three-planes.lines",
            "degeneration.X6-three-planes.lines-split",
            "degeneration.X6-three-planes.cubic-support",
        ]

    def test_unknown_case(self):
        """Test an unknown case name."""
        with pytest.raises(ValueError):
            degeneration_counts("X9-nothing")

    def test_all(self):
        """Test all cases together."""
        assert len(all_degenerations()) == 19

    @pytest.mark.parametrize(
        "case,expected",
        [
            (DegenerationCase.X5_TWO_QUADRICS, "A3xA1xA1"),
            (DegenerationCase.X6_THREE_PLANES, "A2xA2xA2"),
            (DegenerationCase.X6_PLANE_QUADRIC, "A5xA1"),
            (DegenerationCase.X7_DOUBLE_PLANE, "A7"),
        ],
    )
    def test_subsystem_type(self, case, expected):
        """Test the attached subalgebra has the expected type."""
        assert degeneration_subsystem(case).type == expected

    @pytest.mark.parametrize(
        "case,n,sizes",
        [
            (DegenerationCase.X5_TWO_QUADRICS, 5, [8, 8]),
            (DegenerationCase.X6_THREE_PLANES, 6, [9, 9, 9]),
            (DegenerationCase.X6_PLANE_QUADRIC, 6, [15, 12]),
            (DegenerationCase.X7_DOUBLE_PLANE, 7, [28, 28]),
        ],
    )
    def test_census_lines_split(self, case, n, sizes):
        """Test the subalgebra orbits on the enumerated lines."""
        lines = enumerate_lines(make_lattice(n))
        assert orbit_sizes(lines, degeneration_subsystem(case)) == sizes

    def test_census_rulings_split(self):
        """Test 10 = 6 + 4 on the enumerated rulings of X_5."""
        rulings = enumerate_rulings(make_lattice(5))
        assert orbit_sizes(rulings, degeneration_subsystem(DegenerationCase.X5_TWO_QUADRICS)) == [6, 4]

    def test_x7_planes(self, x7):
        """Test the first plane holds L_i and the degree-2 lines, the second their -K images."""
        classes = double_plane_classes(x7)
        first = {D for (plane, _, _), D in classes.items() if plane == 0}
        second = {D for (plane, _, _), D in classes.items() if plane == 1}
        assert {D.degree for D in first} == {0, 2}
        assert second == {-x7.K - D for D in first}
        assert first | second == set(enumerate_lines(x7))

    def test_plane_quadric_pairs_are_degree_one(self, x6):
        """Test point pairs name the 15 lines H - L_p - L_q."""
        classes = plane_quadric_classes(x6)
        pairs = {D for label, D in classes.items() if label[0] == "pair"}
        assert pairs == {D for D in enumerate_lines(x6) if D.degree == 1}

    def test_wrong_split_fails(self):
        """Test a split that does not follow the orbits is reported."""
        system = degeneration_subsystem(DegenerationCase.X6_THREE_PLANES)
        labels = three_plane_lines()
        assert component_sizes(labels, lambda l: l[1]) == [9, 9, 9]
        assert component_sizes(labels, lambda l: l[0] == 0) == [18, 9]
        assert orbit_sizes(enumerate_lines(make_lattice(6)), system) != [18, 9]
