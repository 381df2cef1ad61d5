"""Free / nearly free classification by three cross-checking criteria.

A reduced singular curve with minimal relation degree r is classified
three independent ways: by comparing its global Tjurina number against
the maximal value for its r, by the sum of its coincidence and stability
thresholds, and by the quotient dimensions delta.  The three verdicts are
theorems of one another, so any disagreement aborts loudly.  Free
verdicts are then verified structurally through the exterior pairing of
syzygies (a Saito-style determinant check) and nearly free verdicts by
exhibiting the three generating syzygies and matching the graded
dimensions of the module they span.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistencyError, NotReducedError
from .fields import Field, FieldPlan, QQ
from .linalg import ExactMatrix, _rref_generic, kernel_basis, solve_exact
from .poly import Gradient, HomogPoly, dim_S, dim_choose2, monomial_basis, partials
from .invariants import delta_dim, thresholds, tjurina
from .syzygy import (
    Reducedness,
    Syzygy,
    ar_dim,
    jacobian_matrix,
    mdr,
    reducedness_check,
    syzygy_basis,
)

FREE = "Free"
NEARLY_FREE = "NearlyFree"
NEITHER = "Neither"
SMOOTH = "Smooth"
PENCIL_OF_LINES = "PencilOfLines"


@dataclass(frozen=True)
class Classification:
    """Verdict plus the evidence that produced it.

    `criteria` maps each test name to whether it returned the final
    verdict (always all True when present, since disagreement aborts);
    `verified` records the structural check for Free / NearlyFree verdicts
    and is None when no structural check applies.
    """

    verdict: str
    exponents: tuple[int, int] | None
    criteria: dict[str, bool] | None
    symmetry_flag: bool
    verified: bool | None


def tau_test(d: int, r: int, tau: int) -> str:
    """Classification by the Tjurina number alone."""
    if r < 1:
        raise ValueError("requires r >= 1")
    tau_max = (d - 1) * (d - r - 1) + r * r
    if 2 * r < d and tau == tau_max:
        return FREE
    if 2 * r <= d and tau == tau_max - 1:
        return NEARLY_FREE
    return NEITHER


def ctst_test(ct: int | None, st: int, d: int) -> str:
    """Classification by ct + st against T = 3(d-2).

    The values T+1 and anything below T are impossible for a reduced
    singular curve, so they abort.
    """
    if ct is None:
        raise ValueError("ct is infinite; smooth curves are handled upstream")
    T = 3 * (d - 2)
    total = ct + st
    if total == T:
        return FREE
    if total == T + 2:
        return NEARLY_FREE
    if total >= T + 3:
        return NEITHER
    raise InternalInconsistencyError(
        f"ct + st = {total} with T = {T}: the values T+1 and below T cannot occur"
    )


def delta_test(f: HomogPoly, r: int, field: Field | FieldPlan = QQ) -> str:
    """Classification by the quotient dimensions delta at d-r-1 and d-r."""
    if r < 1:
        raise ValueError("requires r = mdr(f) >= 1")
    d = f.degree
    at_gap = delta_dim(f, d - r - 1, r, field)
    if at_gap >= 1:
        if at_gap != 1:
            raise InternalInconsistencyError(
                f"delta_{d - r - 1} = {at_gap}; a free curve must have exactly 1"
            )
        if 2 * r >= d:
            raise InternalInconsistencyError(
                f"free verdict with 2r = {2 * r} >= d = {d} is impossible"
            )
        return FREE
    if delta_dim(f, d - r, r, field) >= 2:
        if 2 * r > d:
            raise InternalInconsistencyError(
                f"nearly free verdict with 2r = {2 * r} > d = {d} is impossible"
            )
        return NEARLY_FREE
    return NEITHER


def _triple(rho) -> tuple[HomogPoly, HomogPoly, HomogPoly]:
    if isinstance(rho, Syzygy):
        return rho.components()
    if isinstance(rho, Gradient):
        return (rho.fx, rho.fy, rho.fz)
    a, b, c = rho
    return (a, b, c)


def cross_product(rho, rho2) -> tuple[HomogPoly, HomogPoly, HomogPoly]:
    """Componentwise exterior product of two polynomial triples."""
    a, b, c = _triple(rho)
    a2, b2, c2 = _triple(rho2)
    return (b * c2 - b2 * c, c * a2 - c2 * a, a * b2 - a2 * b)


def pairing(rho, rho2, f: HomogPoly) -> HomogPoly:
    """The unique h with rho x rho2 = h * (f_x, f_y, f_z).

    h exists for any two genuine relations of a reduced curve; an
    inconsistent solve therefore signals corrupted inputs and aborts.
    The result lives in degree deg(rho) + deg(rho2) - (d-1).
    """
    first = _triple(rho)[0]
    field = first.field
    f_local = f.map_field(field)
    grad = partials(f_local)
    cross = cross_product(rho, rho2)
    d = f.degree
    q = cross[0].degree - (d - 1)
    if q < 0:
        if all(comp.is_zero() for comp in cross):
            return HomogPoly.zero(field, 0)
        raise InternalInconsistencyError(
            "exterior product nonzero in a degree below the gradient degree"
        )
    src = monomial_basis(q)
    tgt = monomial_basis(q + d - 1)
    rows: list[list] = []
    rhs: list = []
    for g_comp, c_comp in zip(grad, cross):
        cvec = c_comp.coeff_vector()
        for t_i, t_mono in enumerate(tgt):
            row = []
            for s_mono in src:
                diff = (
                    t_mono[0] - s_mono[0],
                    t_mono[1] - s_mono[1],
                    t_mono[2] - s_mono[2],
                )
                if min(diff) < 0:
                    row.append(field.zero)
                else:
                    row.append(g_comp.terms.get(diff, field.zero))
            rows.append(row)
            rhs.append(cvec[t_i])
    solution = solve_exact(ExactMatrix.from_rows(field, rows), rhs)
    if solution is None:
        raise InternalInconsistencyError(
            "exterior product of two relations is not a multiple of the "
            "gradient; inputs cannot both lie in the relation module"
        )
    h = HomogPoly.from_vector(field, q, solution)
    for g_comp, c_comp in zip(grad, cross):
        if h * g_comp != c_comp:
            raise InternalInconsistencyError("pairing verification failed")
    return h


def saito_verify(f: HomogPoly, rho1, rho2) -> bool:
    """Determinant test for a candidate free pair.

    Requires deg(rho1) + deg(rho2) = d - 1, which forces the pairing into
    degree 0; the pair generates freely exactly when that constant is
    nonzero.
    """
    r1, r2 = _triple(rho1), _triple(rho2)
    if r1[0].degree + r2[0].degree != f.degree - 1:
        raise ValueError("syzygy degrees must add up to d - 1")
    return not pairing(rho1, rho2, f).is_zero()


def v_map(rho, rho1, f: HomogPoly) -> HomogPoly:
    """Pair against a fixed minimal-degree relation; kills its multiples."""
    return pairing(rho, rho1, f)


def _reduce_against(vec: list, echelon: list[tuple], pivots: list[int], field: Field) -> list:
    out = list(vec)
    for row, pc in zip(echelon, pivots):
        c = out[pc]
        if not field.is_zero(c):
            out = [field.sub(a, field.mul(c, b)) for a, b in zip(out, row)]
    return out


def _echelon_complement(f: HomogPoly, rho1: Syzygy, degree: int, field: Field) -> list[tuple]:
    """Canonical basis of a complement of S_(degree-r) * rho1 in AR(f)_degree."""
    r = rho1.degree
    span_rows = []
    for mu in monomial_basis(degree - r):
        comps = [p.mul_monomial(mu) for p in rho1.components()]
        span_rows.append([v for comp in comps for v in comp.coeff_vector()])
    if span_rows:
        ech, pivots = _rref_generic(span_rows, field)
    else:
        ech, pivots = [], []
    residues = []
    for vec in kernel_basis(jacobian_matrix(f, degree, field)):
        red = _reduce_against(list(vec), ech, pivots, field)
        if any(not field.is_zero(v) for v in red):
            residues.append(red)
    if not residues:
        return []
    canon, _ = _rref_generic(residues, field)
    return [tuple(row) for row in canon]


def _syzygy_from_vector(f: HomogPoly, degree: int, vec, field: Field) -> Syzygy:
    n = dim_S(degree)
    syz = Syzygy(
        HomogPoly.from_vector(field, degree, vec[:n]),
        HomogPoly.from_vector(field, degree, vec[n : 2 * n]),
        HomogPoly.from_vector(field, degree, vec[2 * n :]),
    )
    if not syz.holds_for(f):
        raise InternalInconsistencyError("complement vector is not a relation")
    return syz


def nearly_free_resolution_dim(d: int, r: int, k: int) -> int:
    """Graded dimension of the module generated by syzygies of degrees
    (r, d-r, d-r) subject to a single relation in degree d-r+1."""
    return (
        2 * dim_choose2(k - d + r + 2)
        + dim_choose2(k - r + 2)
        - dim_choose2(k - d + r + 1)
    )


def nearly_free_generators(f: HomogPoly, r: int, field: Field = QQ) -> tuple[Syzygy, Syzygy, Syzygy]:
    """The three generating syzygies of a nearly free curve.

    rho1 is the canonical minimal-degree relation; rho2, rho3 span the
    canonical echelon complement of S_(d-2r) * rho1 inside AR(f)_(d-r).
    Generation is certified by matching ar(f)_k against the resolution
    dimension count for every k <= d + 2.
    """
    d = f.degree
    basis = syzygy_basis(f, r, field)
    if not basis:
        raise ValueError(f"no relation in degree {r}; is r really mdr(f)?")
    rho1 = basis[0]
    complement = _echelon_complement(f, rho1, d - r, field)
    if len(complement) != 2:
        raise InternalInconsistencyError(
            f"complement of the minimal relation in degree {d - r} has "
            f"dimension {len(complement)}, expected 2"
        )
    rho2 = _syzygy_from_vector(f, d - r, complement[0], field)
    rho3 = _syzygy_from_vector(f, d - r, complement[1], field)
    for k in range(0, d + 3):
        expected = nearly_free_resolution_dim(d, r, k)
        actual = ar_dim(f, k, field)
        if actual != expected:
            raise InternalInconsistencyError(
                f"ar_{k} = {actual} but the generated module has dimension "
                f"{expected}; the three syzygies do not generate"
            )
    return rho1, rho2, rho3


def _free_structure_ok(f: HomogPoly, r: int, field: Field) -> bool:
    d = f.degree
    basis = syzygy_basis(f, r, field)
    if not basis:
        return False
    rho1 = basis[0]
    complement = _echelon_complement(f, rho1, d - 1 - r, field)
    if len(complement) != 1:
        return False
    rho2 = _syzygy_from_vector(f, d - 1 - r, complement[0], field)
    return saito_verify(f, rho1, rho2)


def _nearly_free_structure_ok(f: HomogPoly, r: int, field: Field) -> bool:
    try:
        nearly_free_generators(f, r, field)
    except InternalInconsistencyError:
        return False
    return True


def free_pair(f: HomogPoly, r: int, field: Field = QQ) -> tuple[Syzygy, Syzygy]:
    """The canonical generating pair (degrees r and d-1-r) of a free curve."""
    d = f.degree
    rho1 = syzygy_basis(f, r, field)[0]
    complement = _echelon_complement(f, rho1, d - 1 - r, field)
    if len(complement) != 1:
        raise InternalInconsistencyError(
            f"expected a 1-dimensional complement in degree {d - 1 - r}, "
            f"got {len(complement)}"
        )
    return rho1, _syzygy_from_vector(f, d - 1 - r, complement[0], field)


def classify(f: HomogPoly, field: Field | FieldPlan = QQ) -> Classification:
    """Run the full decision pipeline on a reduced curve.

    Smooth curves (tau = 0) and unions of concurrent lines short-circuit;
    otherwise all three criteria run and must agree, the exponents are
    attached, and the verdict-specific structural verification is run.
    Raises NotReducedError for non-reduced input.
    """
    red = reducedness_check(f, field)
    if red is Reducedness.NON_REDUCED:
        raise NotReducedError("cannot classify a non-reduced curve")
    if red is Reducedness.PENCIL_OF_LINES:
        return Classification(PENCIL_OF_LINES, None, None, False, None)
    d = f.degree
    r = mdr(f, field)
    tau = tjurina(f, field)
    if tau == 0:
        return Classification(SMOOTH, None, None, r == 1, None)
    ct, st = thresholds(f, tau, field)
    verdicts = {
        "tau_test": tau_test(d, r, tau),
        "ctst_test": ctst_test(ct, st, d),
        "delta_test": delta_test(f, r, field),
    }
    if len(set(verdicts.values())) != 1:
        raise InternalInconsistencyError(
            "criteria disagree, which falsifies the implementation: "
            + ", ".join(f"{k} = {v}" for k, v in verdicts.items())
            + f" (d = {d}, r = {r}, tau = {tau}, ct = {ct}, st = {st})"
        )
    verdict = verdicts["tau_test"]
    exponents: tuple[int, int] | None = None
    verified: bool | None = None
    if verdict == FREE:
        exponents = (r, d - 1 - r)
        expected_tau = (d - 1) ** 2 - exponents[0] * exponents[1]
        if tau != expected_tau:
            raise InternalInconsistencyError(
                f"free exponent identity violated: tau = {tau} != {expected_tau}"
            )
        if isinstance(field, FieldPlan):
            verified = field.agree(lambda F: _free_structure_ok(f, r, F))
        else:
            verified = _free_structure_ok(f, r, field)
    elif verdict == NEARLY_FREE:
        exponents = (r, d - r)
        expected_tau = (d - 1) ** 2 - exponents[0] * (exponents[1] - 1) - 1
        if tau != expected_tau:
            raise InternalInconsistencyError(
                f"nearly free exponent identity violated: tau = {tau} != {expected_tau}"
            )
        if isinstance(field, FieldPlan):
            verified = field.agree(lambda F: _nearly_free_structure_ok(f, r, F))
        else:
            verified = _nearly_free_structure_ok(f, r, field)
    criteria = {name: v == verdict for name, v in verdicts.items()}
    return Classification(verdict, exponents, criteria, r == 1, verified)
