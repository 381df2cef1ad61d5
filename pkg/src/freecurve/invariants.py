"""Derived numerical invariants of a reduced plane curve.

Everything in this module is a function of the graded Jacobian ranks: the
global Tjurina number (the stable value of the Milnor algebra dimensions),
the coincidence and stability thresholds measured against the smooth
Hilbert function, the saturation defects n(f)_k obtained either from an
Euler-characteristic identity or from a brute-force ideal saturation, the
quotient dimensions delta(f)_k, and the du Plessis-Wall bounds with their
defect.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistencyError, NotReducedError
from .fields import Field, FieldPlan, QQ
from .linalg import ExactMatrix, kernel_basis
from .poly import HomogPoly, choose2, dim_S, monomial_basis, monomial_index
from .syzygy import ar_dim, jacobian_matrix, mdr, milnor_dim, rank_jacobian


def smooth_reference(d: int, k: int) -> int:
    """Milnor-algebra dimension of a smooth degree-d curve at degree k.

    Coefficient of t^k in ((1 - t^(d-1)) / (1 - t))^3; zero outside
    [0, 3(d-2)] and symmetric about the midpoint.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    e = d - 1
    return dim_S(k) - 3 * dim_S(k - e) + 3 * dim_S(k - 2 * e) - dim_S(k - 3 * e)


def _stable_milnor(f: HomogPoly, field: Field | FieldPlan) -> tuple[int, int]:
    """(stable value of m(f)_k, degree from which it was confirmed).

    The stable value is read at 3d-5 and confirmed on the next two
    degrees; a failed window is retried shifted by d, three times, after
    which the input cannot have been reduced.
    """
    d = f.degree
    for attempt in range(4):
        k0 = 3 * d - 5 + attempt * d
        vals = [milnor_dim(f, k, field) for k in range(k0, k0 + 3)]
        if vals[0] == vals[1] == vals[2]:
            return vals[0], k0
    raise NotReducedError(
        "Milnor algebra dimensions do not stabilise; the curve is not reduced"
    )


def tjurina(f: HomogPoly, field: Field | FieldPlan = QQ) -> int:
    """Global Tjurina number: the stable Milnor algebra dimension."""
    return _stable_milnor(f, field)[0]


def thresholds(f: HomogPoly, tau: int, field: Field | FieldPlan = QQ) -> tuple[int | None, int]:
    """(ct, st): agreement threshold against the smooth reference, and the
    degree from which m(f) stays equal to tau.

    ct is None (infinite) exactly when f is smooth, i.e. when m(f) agrees
    with the smooth reference through degree T+1 = 3d-5.
    """
    d = f.degree
    T = 3 * (d - 2)
    ct: int | None = None
    for k in range(0, T + 2):
        if milnor_dim(f, k, field) != smooth_reference(d, k):
            ct = k - 1
            break
    _, stable_from = _stable_milnor(f, field)
    q = stable_from
    while q > 0 and milnor_dim(f, q - 1, field) == tau:
        q -= 1
    return ct, q


def n_dim(f: HomogPoly, j: int, tau: int, field: Field | FieldPlan = QQ) -> int:
    """Saturation defect dimension n(f)_j via the Euler characteristic.

    n(f)_j = ar(f)_{j-d+1} + ar(f)_{2d-5-j}
             - [3*choose2(j-d+3) - choose2(j+2) + tau],

    where the bracket is a signed polynomial (negative values of the
    choose2 arguments are meaningful) while the ar terms are honest
    dimensions, zero in negative degrees.  Zero outside [0, 3(d-2)].
    """
    d = f.degree
    T = 3 * (d - 2)
    if j < 0 or j > T:
        return 0
    chi = 3 * choose2(j - d + 3) - choose2(j + 2) + tau
    value = ar_dim(f, j - d + 1, field) + ar_dim(f, 2 * d - 5 - j, field) - chi
    if value < 0:
        raise InternalInconsistencyError(
            f"negative saturation defect n_{j} = {value} for degree-{d} curve"
        )
    return value


def _saturation_subspace(f: HomogPoly, j: int, e: int, field: Field) -> tuple:
    """Canonical basis of {g in S_j : x^e g, y^e g, z^e g all lie in J_f}."""
    d = f.degree
    target = j + e
    src = target - d + 1
    if src < 0:
        jac = ExactMatrix.zeros(field, dim_S(target), 0)
    else:
        jac = jacobian_matrix(f, src, field)
    # Functionals cutting out J at the target degree.
    left_null = kernel_basis(jac.transpose())
    n_j = dim_S(j)
    if not left_null:
        identity = ExactMatrix.zeros(field, 0, n_j)
        return tuple(kernel_basis(identity))
    tgt_index = monomial_index(target)
    rows = []
    for axis in range(3):
        power = tuple(e if t == axis else 0 for t in range(3))
        shifted = [
            tgt_index[(m[0] + power[0], m[1] + power[1], m[2] + power[2])]
            for m in monomial_basis(j)
        ]
        for functional in left_null:
            rows.append([functional[c] for c in shifted])
    constraints = ExactMatrix.from_rows(field, rows)
    return tuple(kernel_basis(constraints))


def n_dim_saturation_oracle(f: HomogPoly, j: int, field: Field = QQ) -> int:
    """Brute-force n(f)_j: saturate the Jacobian ideal degree by degree.

    Starting from e = max(1, T+1-j), the subspace of degree-j polynomials
    pushed into J_f by all three e-th variable powers is recomputed with
    increasing e until two consecutive rounds agree; the defect is its
    dimension minus dim (J_f)_j.
    """
    if j < 0:
        raise ValueError("degree must be non-negative")
    d = f.degree
    T = 3 * (d - 2)
    dim_j_f = rank_jacobian(f, j - d + 1, field)
    e = max(1, T + 1 - j)
    previous = None
    while True:
        basis = _saturation_subspace(f, j, e, field)
        if previous is not None and basis == previous:
            return len(basis) - dim_j_f
        previous = basis
        e += 1


def delta_dim(f: HomogPoly, k: int, r: int, field: Field | FieldPlan = QQ) -> int:
    """dim of AR(f)_k modulo the free line generated by a minimal syzygy.

    The submodule spanned by one degree-r syzygy is free, so its graded
    dimension is dim S_{k-r} and no quotient needs to be built.
    """
    if k < 0:
        return 0
    value = ar_dim(f, k, field) - dim_S(k - r)
    if value < 0:
        raise InternalInconsistencyError(
            f"delta_{k} = {value} < 0: multiplication by the minimal syzygy "
            "failed to be injective, which is impossible"
        )
    return value


def dpw_bounds(d: int, r: int) -> tuple[int, int]:
    """du Plessis-Wall interval for the global Tjurina number given r.

    For even d and r = d/2 the upper end is lowered by one.
    """
    if d < 3 or not 1 <= r <= d - 1:
        raise ValueError("need d >= 3 and 1 <= r <= d-1")
    tau_min = (d - 1) * (d - r - 1)
    tau_max = tau_min + r * r
    if d % 2 == 0 and r == d // 2:
        tau_max -= 1
    return tau_min, tau_max


def defect(d: int, r: int, tau: int) -> int:
    """e(f) = (d-1)(d-r-1) + r^2 - tau, the distance below the maximal value.

    Uses the uncapped formula value, so a nearly free curve has defect 1
    even when d = 2r.
    """
    return (d - 1) * (d - r - 1) + r * r - tau


@dataclass(frozen=True)
class GradedTable:
    """A run of graded dimensions starting at a given degree."""

    tag: str
    start: int
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        idx = k - self.start
        if 0 <= idx < len(self.values):
            return self.values[idx]
        raise IndexError(f"degree {k} outside table {self.tag}")

    def to_dict(self) -> dict:
        return {"start": self.start, "values": list(self.values)}


@dataclass
class InvariantBundle:
    """Every numerical invariant of one curve, before classification."""

    d: int
    r: int
    tau: int
    ct: int | None
    st: int
    T: int
    e_defect: int
    ar: GradedTable
    m: GradedTable
    n: GradedTable
    delta: GradedTable


def compute_bundle(f: HomogPoly, field: Field | FieldPlan = QQ, table_max: int | None = None) -> InvariantBundle:
    """Compute the full invariant bundle of a reduced curve.

    `table_max` bounds the reported ar/m/delta tables (default 2d); the
    n table always spans [0, T] internally so that its shape constraints
    can be checked.
    """
    d = f.degree
    T = 3 * (d - 2)
    r = mdr(f, field)
    tau = tjurina(f, field)
    ct, st = thresholds(f, tau, field)
    kmax = 2 * d if table_max is None else table_max
    ar = GradedTable("ar", 0, tuple(ar_dim(f, k, field) for k in range(kmax + 1)))
    m = GradedTable("m", 0, tuple(milnor_dim(f, k, field) for k in range(kmax + 1)))
    n = GradedTable("n", 0, tuple(n_dim(f, j, tau, field) for j in range(max(T, 0) + 1)))
    delta = GradedTable("delta", 0, tuple(delta_dim(f, k, r, field) for k in range(kmax + 1)))
    e = defect(d, r, tau) if r >= 1 else 0
    return InvariantBundle(d=d, r=r, tau=tau, ct=ct, st=st, T=T, e_defect=e, ar=ar, m=m, n=n, delta=delta)


def validate_bundle(b: InvariantBundle) -> None:
    """Re-assert every proved constraint; raise on any violation."""
    d, r, tau = b.d, b.r, b.tau
    if d >= 3 and 1 <= r <= d - 1:
        lo, hi = dpw_bounds(d, r)
        if 2 * r < d and not lo <= tau <= hi:
            raise InternalInconsistencyError(
                f"tau = {tau} outside [{lo}, {hi}] for d = {d}, r = {r}"
            )
        if d % 2 == 0 and r == d // 2 and not lo <= tau <= hi:
            raise InternalInconsistencyError(
                f"tau = {tau} outside capped interval [{lo}, {hi}] for r = d/2"
            )
    if r >= 1:
        floor = r + d - 2
        if b.ct is not None and b.ct < floor:
            raise InternalInconsistencyError(f"ct = {b.ct} below {floor}")
        if r < d - 1:
            if b.ct is None or b.ct != floor:
                raise InternalInconsistencyError(
                    f"ct = {b.ct} but equality ct = r+d-2 = {floor} is forced for r < d-1"
                )
        if b.ct is not None and b.ct + b.st < b.T:
            raise InternalInconsistencyError(
                f"ct + st = {b.ct + b.st} < T = {b.T}"
            )
    mid = b.T // 2
    vals = b.n.values
    for i in range(len(vals) - 1):
        ascending = i < mid
        if ascending and vals[i] > vals[i + 1]:
            raise InternalInconsistencyError(
                f"n table not ascending below the midpoint: n_{i} > n_{i + 1}"
            )
        if not ascending and vals[i] < vals[i + 1]:
            raise InternalInconsistencyError(
                f"n table not descending above the midpoint: n_{i} < n_{i + 1}"
            )
