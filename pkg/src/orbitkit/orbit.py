"""Coadjoint-orbit analysis: singular roots, stabilizers, polarizations, KKS data.

All results live at the base point in root coordinates; orbit-wide statements
are covered by equivariance and spot-checked by the numeric oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, TheoremViolationError
from .rootsys import (
    RootOrder,
    RootSystem,
    Weight,
    default_chamber_seed,
    is_dominant,
    pairing,
    positive_roots,
)

# Convention constant for the KKS blocks: with unit-Frobenius-norm root
# vectors and the real pair A ~ X - X^dagger, B ~ i(X + X^dagger), the value
# of lambda([A, B]) is exactly 2 * (lambda, alpha) in the fixed realization.
# Calibrated once against the su(2) matrix model (scripts/calibrate_kappa.py)
# and frozen; never refit per test.
KKS_KAPPA = Fraction(2)


@dataclass(frozen=True)
class StabilizerReport:
    lam: Weight
    singular: tuple[Weight, ...]
    regular: bool
    dim_g_lambda: int
    dim_g: int
    t1_equations: tuple[Weight, ...]
    closure_certified: bool


@dataclass(frozen=True)
class AdmissibilityCertificate:
    """Explicitly checked T1-admissibility of a chamber for the singular set."""

    condition_i: bool  # positives of the sub-system = intersection with positives
    condition_ii: bool  # adding a singular root never re-enters the sub-system
    dominant: bool  # the chamber closure contains lambda

    def holds(self) -> bool:
        return self.condition_i and self.condition_ii and self.dominant


@dataclass(frozen=True)
class Polarization:
    order: RootOrder
    b_roots: tuple[Weight, ...]
    admissibility: AdmissibilityCertificate


@dataclass(frozen=True)
class KKSMatrix:
    basis_labels: tuple[Weight, ...]  # one label per (A_alpha, B_alpha) pair
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return 2 * len(self.basis_labels)

    def block_value(self, alpha: Weight) -> Fraction:
        i = self.basis_labels.index(alpha)
        return self.entries[2 * i][2 * i + 1]


def singular_roots(lam: Weight, rs: RootSystem) -> tuple[Weight, ...]:
    """Roots orthogonal to lam; always closed under negation."""
    return tuple(a for a in rs.roots if pairing(lam, a, rs) == 0)


def _check_closed(subset: tuple[Weight, ...], rs: RootSystem, what: str) -> None:
    coords = {a.coords for a in subset}
    for a in subset:
        for b in subset:
            s = tuple(x + y for x, y in zip(a.coords, b.coords))
            if s in rs.root_set and s not in coords:
                raise TheoremViolationError(
                    f"{what} not closed under addition at {a.to_strings()} + {b.to_strings()}"
                )


def stabilizer_report(lam: Weight, rs: RootSystem) -> StabilizerReport:
    """Populate the stabilizer data of lam and certify the closedness of its
    singular set (a theorem; failure indicates an arithmetic bug)."""
    sing = singular_roots(lam, rs)
    _check_closed(sing, rs, "singular root set")
    seed = default_chamber_seed(rs)
    t1 = tuple(a for a in sing if pairing(seed, a, rs) > 0)
    return StabilizerReport(
        lam=lam,
        singular=sing,
        regular=not sing,
        dim_g_lambda=rs.rank + len(sing),
        dim_g=rs.dim_g,
        t1_equations=t1,
        closure_certified=True,
    )


def orbit_dimension(lam: Weight, rs: RootSystem) -> int:
    """dim O_lambda = dim g - dim g_lambda = #roots - #singular roots."""
    return len(rs.roots) - len(singular_roots(lam, rs))


def admissible_chamber_seed(lam: Weight, rs: RootSystem) -> Weight:
    """Deterministic regular seed whose chamber closure contains lam.

    The default regular direction rho is scaled down until it cannot flip the
    sign of any nonzero pairing of lam, then added to lam; ties on the walls
    through lam are broken by rho itself.
    """
    rho = default_chamber_seed(rs)
    bound = None
    for a in rs.roots:
        la = pairing(lam, a, rs)
        if la == 0:
            continue
        ra = pairing(rho, a, rs)
        if ra == 0:
            continue
        candidate = abs(la) / abs(ra)
        if bound is None or candidate < bound:
            bound = candidate
    t = Fraction(1) if bound is None else bound / 2
    return Weight(tuple(x + t * r for x, r in zip(lam.coords, rho.coords)))


def check_admissibility(
    lam: Weight, order: RootOrder
) -> AdmissibilityCertificate:
    """Exhaustively check T1-admissibility of order for the singular set of lam."""
    rs = order.rs
    sing = set(a.coords for a in singular_roots(lam, rs))
    pos = order.positive_set
    pos_sing = {c for c in pos if c in sing}

    # (i) the intersection must be a positive system of the sub-root-system:
    # exactly one of each +/- pair, and additively closed inside it.
    cond_i = all((c in pos_sing) != (tuple(-x for x in c) in pos_sing) for c in sing)
    if cond_i:
        for a in pos_sing:
            for b in pos_sing:
                s = tuple(x + y for x, y in zip(a, b))
                if s in sing and s not in pos_sing:
                    cond_i = False

    # (ii) alpha in pos \ pos_sing, beta singular, alpha+beta a root
    #      => alpha+beta back in pos \ pos_sing
    cond_ii = True
    for a in pos - pos_sing:
        for b in sing:
            s = tuple(x + y for x, y in zip(a, b))
            if s in rs.root_set and not (s in pos and s not in pos_sing):
                cond_ii = False
    dom = is_dominant(lam, order)
    return AdmissibilityCertificate(cond_i, cond_ii, dom)


def admissible_positive_system(
    lam: Weight, rs: RootSystem
) -> tuple[RootOrder, AdmissibilityCertificate]:
    """Positive system making lam dominant, with its explicit admissibility
    certificate; certificate failure is a theorem violation."""
    order = positive_roots(rs, admissible_chamber_seed(lam, rs))
    cert = check_admissibility(lam, order)
    if not cert.holds():
        raise TheoremViolationError(
            f"admissibility certificate failed for lambda={lam.to_strings()}: {cert}"
        )
    return order, cert


def polarization(lam: Weight, order: RootOrder) -> Polarization:
    """Root labels spanning the invariant complex-structure subalgebra beyond
    the complexified stabilizer: the non-singular positive roots."""
    rs = order.rs
    cert = check_admissibility(lam, order)
    if not cert.holds():
        raise InputError(
            "order is not admissible for lambda; use admissible_positive_system"
        )
    sing = singular_roots(lam, rs)
    sing_set = {a.coords for a in sing}
    b_roots = tuple(a for a in order.positive if a.coords not in sing_set)

    b_set = {a.coords for a in b_roots}
    if any(tuple(-x for x in c) in b_set for c in b_set):
        raise TheoremViolationError("polarization labels contain an opposite pair")
    if 2 * len(b_roots) != len(rs.roots) - len(sing):
        raise TheoremViolationError("polarization is not half-dimensional")
    _check_closed(tuple(b_roots) + tuple(sing), rs, "polarization label set")
    return Polarization(order=order, b_roots=b_roots, admissibility=cert)


def kks_matrix(lam: Weight, order: RootOrder) -> KKSMatrix:
    """Exact KKS form at the base point on the real pairs (A_alpha, B_alpha),
    one antisymmetric 2x2 block per non-singular positive root."""
    rs = order.rs
    pol = polarization(lam, order)
    labels = pol.b_roots
    k = len(labels)
    entries = [[Fraction(0)] * (2 * k) for _ in range(2 * k)]
    for i, alpha in enumerate(labels):
        c = KKS_KAPPA * pairing(lam, alpha, rs)
        if c == 0:
            raise TheoremViolationError(
                f"degenerate KKS block for non-singular root {alpha.to_strings()}"
            )
        entries[2 * i][2 * i + 1] = c
        entries[2 * i + 1][2 * i] = -c
    return KKSMatrix(labels, tuple(tuple(row) for row in entries))


def lagrangian_check(
    pol: Polarization, omega: KKSMatrix, lam: Weight
) -> tuple[bool, tuple[Weight, Weight] | None]:
    """Check that the polarization span is Lagrangian for omega.

    Exact and structural: the form pairs A_alpha with B_alpha only, so the
    span of the label directions is isotropic iff no opposite pair of labels
    occurs; half-dimensionality comes from the block count.  Returns
    (ok, witness_pair) with a witness on failure.
    """
    labels = {a.coords for a in pol.b_roots}
    for a in pol.b_roots:
        neg = tuple(-x for x in a.coords)
        if neg in labels:
            return False, (a, Weight(neg))
    if 2 * len(pol.b_roots) != omega.dim:
        return False, None
    # lambda kills every bracket label landing outside the Cartan directions,
    # and labels sum to zero only for opposite pairs, excluded above
    return True, None
