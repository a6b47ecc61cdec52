"""A ruling together with a section: D_{n-1} down to A_{n-2} x u(1).

The section is either a line S or a root T meeting the ruling R once. In
each singular fiber exactly one component meets the section; these n-1
components Lambda span the vector module of A_{n-2}, and the half-spin sets
become sums of exterior powers of Lambda.
"""

import logging
from itertools import combinations
from typing import Literal

from enlattice.census import is_line, is_root
from enlattice.exceptions import DomainError
from enlattice.picard import DivisorClass, PicardLattice, sum_classes
from enlattice.rootsys import build_root_system

from .fixed_ruling import ruling_sets
from .spec import BranchingResult, Decomposition, SubalgebraSpec, block, check_record, set_record

logger = logging.getLogger(__name__)

Which = Literal["plus", "minus"]


def _wedge_sums(classes: tuple[DivisorClass, ...], k: int, n: int) -> list[DivisorClass]:
    return [sum_classes(chosen, n) for chosen in combinations(classes, k)]


def decompose_section(
    lattice: PicardLattice,
    R: DivisorClass,
    section: DivisorClass,
    which: Which | None = None,
) -> BranchingResult:
    """Verify the exterior-power description of W, S+ and S- for a ruling with a section.

    which restricts the spinor decompositions to S+ or S-; both by default.
    """
    n = lattice.n
    if n < 3:
        raise DomainError("A ruling with a section needs n >= 3")
    if which not in (None, "plus", "minus"):
        raise DomainError(f"which must be 'plus' or 'minus', got {which!r}")
    if is_line(section, lattice):
        spec = SubalgebraSpec.ruling_line_section(lattice, R, section)
        variant = "line"
    elif is_root(section, lattice):
        spec = SubalgebraSpec.ruling_ruling_section(lattice, R, section)
        variant = "root"
    else:
        raise DomainError(f"{section.label()} is neither a line nor a root")

    K = lattice.K
    zero = DivisorClass.zero(n)
    sets = ruling_sets(lattice, R)
    lam = tuple(C for C in sets.vector if C.dot(section) == 1)
    result = BranchingResult(spec)
    tag = f"branch.section-{variant}.X{n}"

    result.checks.append(
        check_record(
            f"{tag}.lambda",
            f"{n - 1} fiber components meet the section, one per fiber",
            len(lam) == n - 1
            and all(sum(1 for C in pair if C in lam) == 1 for pair in sets.fibers),
            n - 1,
            f"got {len(lam)}",
        )
    )

    # det Lambda and the twist recovering R - C from the (n-2)-fold wedges
    if variant == "line":
        det = -K - section * 2 + R * (n - 4)
        twist = K + section * 2 + R * (5 - n)
    else:
        det = -K - section * 2 + R * (n - 5)
        twist = K + section * 2 + R * (6 - n)
    total = sum_classes(lam, n)
    result.checks.append(
        check_record(
            f"{tag}.det",
            "sum of Lambda equals " + det.label(),
            total == det,
            1,
            f"got {total.label()}",
        )
    )
    result.checks.append(
        set_record(
            f"{tag}.vector",
            "W = Lambda + Lambda^{n-2} twisted",
            sets.vector,
            list(lam) + [total - C + twist for C in lam],
        )
    )

    if which in (None, "plus"):
        plus = Decomposition(f"{tag}.S+", "S+ as exterior powers of Lambda", block("S+", sets.spin_plus))
        if variant == "line":
            for l in range(0, (n - 1) // 2 + 1):
                plus.add(f"Lambda^{2 * l}(S-{l}R)", block("wedge", _wedge_sums(lam, 2 * l, n)), section - R * l)
        else:
            for l in range(1, n // 2 + 1):
                plus.add(
                    f"Lambda^{2 * l - 1}(T-{l - 1}R)",
                    block("wedge", _wedge_sums(lam, 2 * l - 1, n)),
                    section - R * (l - 1),
                )
        result.decompositions.append(plus)

    if which in (None, "minus"):
        minus = Decomposition(f"{tag}.S-", "S- as exterior powers of Lambda", block("S-", sets.spin_minus))
        if variant == "line":
            for l in range(1, n // 2 + 1):
                minus.add(
                    f"Lambda^{2 * l - 1}(S-{l}R)",
                    block("wedge", _wedge_sums(lam, 2 * l - 1, n)),
                    section - R * l,
                )
        else:
            for l in range(0, (n - 1) // 2 + 1):
                minus.add(f"Lambda^{2 * l}(T-{l}R)", block("wedge", _wedge_sums(lam, 2 * l, n)), section - R * l)
        result.decompositions.append(minus)

    la_roots = [D for D in sets.ld_roots if D.dot(section) == 0]
    pairs = _wedge_sums(lam, 2, n)
    ld = Decomposition(
        f"{tag}.LD",
        f"LD_{n - 1} under LA_{n - 2} x u(1)",
        block(f"LD_{n - 1}", sets.ld_roots, n - 1, zero),
    )
    ld.add(f"LA_{n - 2}", block(f"LA_{n - 2}", la_roots, n - 2, zero))
    ld.add("det", block("det", [], 1, zero))
    ld.add("Lambda^2(-R)", block("Lambda^2", pairs), -R)
    ld.add("Lambda^2*(R)", block("Lambda^2*", [-P for P in pairs]), R)
    result.decompositions.append(ld)

    la_type = build_root_system(lattice).subsystem(la_roots).type
    result.checks.append(
        check_record(
            f"{tag}.la-type",
            f"roots orthogonal to R and the section form A{n - 2}",
            la_type == f"A{n - 2}",
            len(la_roots),
            f"got {la_type}",
        )
    )
    logger.info(f"Section {section.label()} of {R.label()} on X_{n}: {'ok' if result.verified else 'FAILED'}")
    return result
