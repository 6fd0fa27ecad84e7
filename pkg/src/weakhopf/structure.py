"""Finite-dimensional algebras and coalgebras given by structure constants.

Conventions, fixed once and used verbatim everywhere in the package:

    mult[i][j][k]   = coefficient of b_k in b_i * b_j
    comult[i][j][k] = coefficient of b_j (x) b_k in Delta(b_i)

Tensor-square coordinates are row-major: the pair (j, k) sits at j*n + k.
"""

from __future__ import annotations

from .errors import MalformedInput, PreconditionError, Verdict, Violation
from .exactla import (
    FieldSpec,
    Matrix,
    Subspace,
    kernel_space,
    vec_zero,
)


def _canonical_tensor(field: FieldSpec, tensor, n: int, what: str):
    if len(tensor) != n:
        raise MalformedInput(f"{what} tensor must have {n} slices")
    out = []
    for sl in tensor:
        if len(sl) != n:
            raise MalformedInput(f"{what} tensor slice must have {n} rows")
        rows = []
        for row in sl:
            if len(row) != n:
                raise MalformedInput(f"{what} tensor row must have {n} entries")
            rows.append(tuple(field.of(x) if isinstance(x, int) else x for x in row))
            for x in rows[-1]:
                if not field.is_element(x):
                    raise MalformedInput(f"{what} entry {x!r} not in {field}")
        out.append(tuple(rows))
    return tuple(out)


def _canonical_vector(field: FieldSpec, vec, n: int, what: str):
    if len(vec) != n:
        raise MalformedInput(f"{what} vector must have length {n}")
    out = tuple(field.of(x) if isinstance(x, int) else x for x in vec)
    for x in out:
        if not field.is_element(x):
            raise MalformedInput(f"{what} entry {x!r} not in {field}")
    return out


class FiniteAlgebra:
    """A unital algebra on a labelled basis, given by its structure tensor."""

    __slots__ = ("field", "labels", "mult", "unit")

    def __init__(self, field: FieldSpec, labels, mult, unit):
        labels = tuple(labels)
        n = len(labels)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "mult", _canonical_tensor(field, mult, n, "mult"))
        object.__setattr__(self, "unit", _canonical_vector(field, unit, n, "unit"))

    def __setattr__(self, name, val):
        raise AttributeError("FiniteAlgebra is immutable")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.labels == other.labels
            and self.mult == other.mult
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.field, self.labels, self.mult, self.unit))


class FiniteCoalgebra:
    """A counital coalgebra on a labelled basis, given by its costructure tensor."""

    __slots__ = ("field", "labels", "comult", "counit")

    def __init__(self, field: FieldSpec, labels, comult, counit):
        labels = tuple(labels)
        n = len(labels)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "comult", _canonical_tensor(field, comult, n, "comult"))
        object.__setattr__(self, "counit", _canonical_vector(field, counit, n, "counit"))

    def __setattr__(self, name, val):
        raise AttributeError("FiniteCoalgebra is immutable")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, FiniteCoalgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.labels == other.labels
            and self.comult == other.comult
            and self.counit == other.counit
        )

    def __hash__(self):
        return hash((self.field, self.labels, self.comult, self.counit))


def multiply(a: FiniteAlgebra, x, y) -> tuple:
    """Bilinear extension of the multiplication tensor."""
    n = a.dim
    if len(x) != n or len(y) != n:
        raise MalformedInput("vector length does not match algebra dimension")
    out = list(vec_zero(a.field, n))
    for i, xi in enumerate(x):
        if not xi:
            continue
        mi = a.mult[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, m in enumerate(mi[j]):
                if m:
                    out[k] = out[k] + c * m
    return tuple(out)


def comultiply(c: FiniteCoalgebra, x) -> tuple:
    """Delta(x) in row-major tensor-square coordinates."""
    n = c.dim
    if len(x) != n:
        raise MalformedInput("vector length does not match coalgebra dimension")
    out = list(vec_zero(c.field, n * n))
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, row in enumerate(c.comult[i]):
            base = j * n
            for k, d in enumerate(row):
                if d:
                    out[base + k] = out[base + k] + xi * d
    return tuple(out)


def counit_of(c: FiniteCoalgebra, x):
    acc = c.field.zero
    for e, xi in zip(c.counit, x):
        if e and xi:
            acc = acc + e * xi
    return acc


def basis_product(a: FiniteAlgebra, i: int, j: int) -> tuple:
    return a.mult[i][j]


def check_algebra(a: FiniteAlgebra) -> Verdict:
    """Associativity and unit law, exhaustively on basis tuples."""
    n = a.dim
    violations = []
    mu = a.mult
    nz = [
        [tuple((k, c) for k, c in enumerate(mu[i][j]) if c) for j in range(n)]
        for i in range(n)
    ]
    zero_vec = list(vec_zero(a.field, n))
    for i in range(n):
        for j in range(n):
            ij = nz[i][j]
            for k in range(n):
                lhs = list(zero_vec)
                for m, c in ij:
                    for l, d in nz[m][k]:
                        lhs[l] = lhs[l] + c * d
                rhs = list(zero_vec)
                for m, c in nz[j][k]:
                    for l, d in nz[i][m]:
                        rhs[l] = rhs[l] + c * d
                if lhs != rhs:
                    violations.append(
                        Violation("associativity", (i, j, k), tuple(lhs), tuple(rhs))
                    )
    for i in range(n):
        e_i = tuple(
            a.field.one if j == i else a.field.zero for j in range(n)
        )
        left = multiply(a, a.unit, e_i)
        if left != e_i:
            violations.append(Violation("unit-left", (i,), left, e_i))
        right = multiply(a, e_i, a.unit)
        if right != e_i:
            violations.append(Violation("unit-right", (i,), right, e_i))
    return Verdict(tuple(violations))


def check_coalgebra(c: FiniteCoalgebra) -> Verdict:
    """Coassociativity and counit law, exhaustively on basis elements."""
    n = c.dim
    violations = []
    delta = c.comult
    eps = c.counit
    nz = [
        tuple(
            (j, k, delta[i][j][k])
            for j in range(n)
            for k in range(n)
            if delta[i][j][k]
        )
        for i in range(n)
    ]
    for i in range(n):
        lhs = {}
        rhs = {}
        for j, k, d in nz[i]:
            for a, b, e in nz[j]:
                key = (a, b, k)
                lhs[key] = lhs.get(key, c.field.zero) + d * e
            for a, b, e2 in nz[k]:
                key = (j, a, b)
                rhs[key] = rhs.get(key, c.field.zero) + d * e2
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs != rhs:
            violations.append(Violation("coassociativity", (i,), sorted(lhs.items()), sorted(rhs.items())))
    for i in range(n):
        left = list(vec_zero(c.field, n))
        right = list(vec_zero(c.field, n))
        for j in range(n):
            for k in range(n):
                d = delta[i][j][k]
                if not d:
                    continue
                if eps[j]:
                    left[k] = left[k] + eps[j] * d
                if eps[k]:
                    right[j] = right[j] + eps[k] * d
        e_i = tuple(c.field.one if j == i else c.field.zero for j in range(n))
        if tuple(left) != e_i:
            violations.append(Violation("counit-left", (i,), tuple(left), e_i))
        if tuple(right) != e_i:
            violations.append(Violation("counit-right", (i,), tuple(right), e_i))
    return Verdict(tuple(violations))


def dual(x):
    """Dual coalgebra of an algebra, or dual algebra of a coalgebra.

    Structure tensors transpose against the dual basis; applying `dual`
    twice gives back identical tensors.
    """
    if isinstance(x, FiniteAlgebra):
        n = x.dim
        comult = [
            [[x.mult[j][k][i] for k in range(n)] for j in range(n)] for i in range(n)
        ]
        return FiniteCoalgebra(x.field, x.labels, comult, x.unit)
    if isinstance(x, FiniteCoalgebra):
        n = x.dim
        mult = [
            [[x.comult[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)
        ]
        return FiniteAlgebra(x.field, x.labels, mult, x.counit)
    raise MalformedInput(f"dual expects an algebra or coalgebra, got {type(x)}")


def opposite(a: FiniteAlgebra) -> FiniteAlgebra:
    n = a.dim
    mult = [[a.mult[j][i] for j in range(n)] for i in range(n)]
    return FiniteAlgebra(a.field, a.labels, mult, a.unit)


def coopposite(c: FiniteCoalgebra) -> FiniteCoalgebra:
    n = c.dim
    comult = [
        [[c.comult[i][k][j] for k in range(n)] for j in range(n)] for i in range(n)
    ]
    return FiniteCoalgebra(c.field, c.labels, comult, c.counit)


def center(a: FiniteAlgebra) -> Subspace:
    """Echelon basis of {z : z b_i = b_i z for all i}, via one kernel."""
    verdict = check_algebra(a)
    if not verdict.ok:
        raise PreconditionError(f"center of an invalid algebra: {verdict.describe()}")
    n = a.dim
    z = a.field.zero
    rows = []
    for i in range(n):
        for k in range(n):
            row = []
            for l in range(n):
                row.append(a.mult[l][i][k] - a.mult[i][l][k])
            rows.append(row)
    if not rows:
        return Subspace(a.field, 0)
    return kernel_space(Matrix(a.field, rows, cols=n))
