"""Graded pieces of the Jacobian relation module of a plane curve.

For a degree-d curve f, the degree-k piece of the Jacobian map sends a
triple (a, b, c) of degree-k polynomials to a*f_x + b*f_y + c*f_z.  Its
kernel AR(f)_k collects the degree-k relations (syzygies) among the
partials; the cokernel dimensions m(f)_k are the graded dimensions of the
quotient of the polynomial ring by the Jacobian ideal.  Everything here
reduces to exact ranks and kernels of those multiplication matrices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalInconsistencyError
from .fields import Field, FieldPlan, QQ
from .linalg import ExactMatrix, kernel_basis, rank
from .poly import Gradient, HomogPoly, dim_S, monomial_basis, monomial_index, partials


@dataclass(frozen=True)
class Syzygy:
    """A relation a*f_x + b*f_y + c*f_z = 0 with a, b, c of one degree."""

    a: HomogPoly
    b: HomogPoly
    c: HomogPoly

    @property
    def degree(self) -> int:
        return self.a.degree

    def components(self) -> tuple[HomogPoly, HomogPoly, HomogPoly]:
        return (self.a, self.b, self.c)

    def holds_for(self, f: HomogPoly) -> bool:
        field = self.a.field
        fx, fy, fz = partials(f.map_field(field))
        total = self.a * fx + self.b * fy + self.c * fz
        return total.is_zero()


@lru_cache(maxsize=None)
def _gradient_over(f: HomogPoly, field: Field) -> Gradient:
    return partials(f.map_field(field))


def jacobian_matrix(f: HomogPoly, k: int, field: Field = QQ) -> ExactMatrix:
    """Matrix of (a,b,c) |-> a*f_x + b*f_y + c*f_z from degree k to k+d-1.

    Columns come in three blocks (a, b, c), each in canonical monomial
    order; rows are the degree-(k+d-1) monomials in canonical order.
    """
    if k < 0:
        raise ValueError("source degree must be non-negative")
    d = f.degree
    if d < 1:
        raise ValueError("curve degree must be at least 1")
    grad = _gradient_over(f, field)
    src = monomial_basis(k)
    tgt_index = monomial_index(k + d - 1)
    n_src = len(src)
    M = ExactMatrix.zeros(field, len(tgt_index), 3 * n_src)
    for block, part in enumerate(grad):
        base = block * n_src
        for s, nu in enumerate(src):
            col = base + s
            for mu, coeff in part.terms.items():
                row = tgt_index[(nu[0] + mu[0], nu[1] + mu[1], nu[2] + mu[2])]
                M.set(row, col, coeff)
    return M


@lru_cache(maxsize=None)
def _rank_jacobian_cached(f: HomogPoly, k: int, field: Field) -> int:
    return rank(jacobian_matrix(f, k, field))


def rank_jacobian(f: HomogPoly, k: int, field: Field | FieldPlan = QQ) -> int:
    """Rank of the degree-k Jacobian multiplication matrix (0 for k < 0)."""
    if k < 0:
        return 0
    if isinstance(field, FieldPlan):
        field.touched.add((f, k))
        return field.agree(lambda F: _rank_jacobian_cached(f, k, F))
    return _rank_jacobian_cached(f, k, field)


def ar_dim(f: HomogPoly, k: int, field: Field | FieldPlan = QQ) -> int:
    """dim AR(f)_k, the number of independent degree-k relations."""
    if k < 0:
        return 0
    return 3 * dim_S(k) - rank_jacobian(f, k, field)


def syzygy_basis(f: HomogPoly, k: int, field: Field = QQ) -> list[Syzygy]:
    """Canonical echelon basis of AR(f)_k; every triple is re-verified."""
    vectors = kernel_basis(jacobian_matrix(f, k, field))
    n = dim_S(k)
    out = []
    for vec in vectors:
        syz = Syzygy(
            HomogPoly.from_vector(field, k, vec[:n]),
            HomogPoly.from_vector(field, k, vec[n : 2 * n]),
            HomogPoly.from_vector(field, k, vec[2 * n :]),
        )
        if not syz.holds_for(f):
            raise InternalInconsistencyError(
                f"kernel vector at degree {k} fails the defining relation"
            )
        out.append(syz)
    return out


def milnor_dim(f: HomogPoly, k: int, field: Field | FieldPlan = QQ) -> int:
    """Graded dimension of S/J_f at degree k."""
    if k < 0:
        return 0
    return dim_S(k) - rank_jacobian(f, k - f.degree + 1, field)


def mdr(f: HomogPoly, field: Field | FieldPlan = QQ) -> int:
    """Minimal degree of a relation among the partials of f.

    The search is capped at d-1, where the Koszul relations live; running
    past the cap means the arithmetic itself is broken.
    """
    d = f.degree
    for k in range(d):
        if ar_dim(f, k, field) > 0:
            return k
    raise InternalInconsistencyError(
        f"no relation found through degree {d - 1}; the Koszul relations "
        "guarantee one, so this is an arithmetic bug"
    )


class Reducedness(str, enum.Enum):
    REDUCED = "Reduced"
    NON_REDUCED = "NonReduced"
    PENCIL_OF_LINES = "PencilOfLines"


def reducedness_check(f: HomogPoly, field: Field | FieldPlan = QQ) -> Reducedness:
    """Classify f as reduced, non-reduced, or a pencil of lines.

    A reduced curve has a finite singular scheme, so m(f)_k is eventually
    constant, while a repeated component forces linear growth.  Constancy
    is probed on the window [3d-5, 3d-2]; a non-constant window is retried
    up to three times, shifted by d each time.  Reduced curves with a
    degree-0 relation are unions of concurrent lines.
    """
    d = f.degree
    for attempt in range(4):
        lo = 3 * d - 5 + attempt * d
        values = [milnor_dim(f, k, field) for k in range(lo, lo + 4)]
        if len(set(values)) == 1:
            if ar_dim(f, 0, field) > 0:
                return Reducedness.PENCIL_OF_LINES
            return Reducedness.REDUCED
    return Reducedness.NON_REDUCED
