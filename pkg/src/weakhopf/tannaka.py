"""Weak-bialgebra maps, induced functors, and reconstruction from functor data.

Functor data is a finite table: for each chosen comodule over the source, the
coaction the candidate functor assigns on the *same* underlying space, plus
the unit morphism on the source subalgebras.  Reconstruction computes the
candidate map phi = (eps (x) id) . rho^F on the regular comodule and then
verifies every conclusion of the reconstruction theorems on the supplied
data, layer by layer, in a fixed order:

    comodule-validity -> coalgebra-map -> functor-equality ->
    comodule-map-property -> algebra-map -> unit-morphism ->
    source-bijectivity -> comonoidal-structure

Reports name the first failing layer and still evaluate the later layers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AxiomViolation,
    InternalInconsistency,
    MalformedInput,
    Verdict,
    Violation,
)
from .exactla import Matrix, inverse, vec_zero
from .comod import Comodule, TensorComodule, coaction_verdict, tensor_over_source
from .weakbia import WeakBialgebra

RECONSTRUCTION_LAYERS = (
    "comodule-validity",
    "coalgebra-map",
    "functor-equality",
    "comodule-map-property",
    "algebra-map",
    "unit-morphism",
    "source-bijectivity",
    "comonoidal-structure",
)


class WeakBialgebraMap:
    """A verified map of weak bialgebras (algebra map and coalgebra map)."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: WeakBialgebra, target: WeakBialgebra, matrix: Matrix):
        verdict = map_verdict(matrix, source, target)
        if not verdict.ok:
            raise AxiomViolation(verdict, "weak bialgebra map")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, val):
        raise AttributeError("WeakBialgebraMap is immutable")

    def compose(self, other: "WeakBialgebraMap") -> "WeakBialgebraMap":
        """self after other."""
        if other.target is not self.source:
            raise MalformedInput("composition mismatch")
        return WeakBialgebraMap(other.source, self.target, self.matrix.mul(other.matrix))

    def source_restriction(self) -> Matrix:
        """phi restricted to H_s, as a matrix in the canonical echelon bases."""
        return _phi_s_matrix(self.matrix, self.source, self.target)

    def __repr__(self):
        return f"WeakBialgebraMap({self.source!r} -> {self.target!r})"


def map_verdict(phi: Matrix, source: WeakBialgebra, target: WeakBialgebra) -> Verdict:
    """Check every weak-bialgebra-map law for the matrix phi, with witnesses."""
    if source.field != target.field:
        raise MalformedInput("map across different fields")
    if phi.rows != target.dim or phi.cols != source.dim:
        raise MalformedInput(
            f"map must be {target.dim}x{source.dim}, got {phi.rows}x{phi.cols}"
        )
    violations = []
    violations.extend(_algebra_map_violations(phi, source, target))
    violations.extend(_coalgebra_map_violations(phi, source, target))
    for r, y in enumerate(source.hs.basis):
        if not target.hs.contains(phi.apply(y)):
            violations.append(Violation("phi(H_s) in K_s", (r,), phi.apply(y), None))
    for r, z in enumerate(source.ht.basis):
        if not target.ht.contains(phi.apply(z)):
            violations.append(Violation("phi(H_t) in K_t", (r,), phi.apply(z), None))
    return Verdict(tuple(violations))


def _algebra_map_violations(phi, source, target):
    n = source.dim
    out = []
    basis_img = [phi.col(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = phi.apply(source.mult[i][j])
            rhs = target.multiply(basis_img[i], basis_img[j])
            if lhs != rhs:
                out.append(Violation("not multiplicative", (i, j), lhs, rhs))
    lhs = phi.apply(source.unit)
    if lhs != target.unit:
        out.append(Violation("unit mismatch", (), lhs, target.unit))
    return out


def _coalgebra_map_violations(phi, source, target):
    n = source.dim
    nk = target.dim
    field = source.field
    out = []
    for i in range(n):
        lhs = target.comultiply(phi.col(i))
        rhs = list(vec_zero(field, nk * nk))
        for j in range(n):
            row = source.comult[i][j]
            pj = phi.col(j)
            for k in range(n):
                d = row[k]
                if not d:
                    continue
                pk = phi.col(k)
                for a, x in enumerate(pj):
                    if not x:
                        continue
                    base = a * nk
                    dx = d * x
                    for b, y in enumerate(pk):
                        if y:
                            rhs[base + b] = rhs[base + b] + dx * y
        if lhs != tuple(rhs):
            out.append(Violation("not comultiplicative", (i,), lhs, tuple(rhs)))
        eps_lhs = target.counit_of(phi.col(i))
        if eps_lhs != source.counit[i]:
            out.append(Violation("counit mismatch", (i,), eps_lhs, source.counit[i]))
    return out


def check_map(phi: Matrix, source: WeakBialgebra, target: WeakBialgebra):
    """Verify phi; return (WeakBialgebraMap or None, Verdict)."""
    verdict = map_verdict(phi, source, target)
    if not verdict.ok:
        return None, verdict
    return WeakBialgebraMap(source, target, phi), verdict


def induced_coaction(phi: Matrix, m: Comodule, target: WeakBialgebra) -> Matrix:
    """(id_M (x) phi) . rho_M as a coaction matrix into M (x) K."""
    nk = target.dim
    field = target.field
    z = field.zero
    rows = [[z] * m.dim for _ in range(m.dim * nk)]
    cols = [phi.col(j) for j in range(phi.cols)]
    for i in range(m.dim):
        for (a, j), c in m.coact_nonzeros(i):
            for k, p in enumerate(cols[j]):
                if p:
                    rows[a * nk + k][i] = rows[a * nk + k][i] + c * p
    return Matrix._raw(field, rows, m.dim)


def induced_functor(phi: WeakBialgebraMap, m: Comodule) -> Comodule:
    """The comodule M^phi(m) = (M, (id (x) phi) . rho_M) over the target."""
    if m.over is not phi.source:
        raise MalformedInput("comodule is not over the map's source")
    return Comodule(phi.target, m.dim, induced_coaction(phi.matrix, m, phi.target))


def induced_map(phi: WeakBialgebraMap, f):
    """Transport a comodule map along the induced functor (same matrix)."""
    from .comod import ComoduleMap

    return ComoduleMap(
        induced_functor(phi, f.source), induced_functor(phi, f.target), f.matrix
    )


def _phi_s_matrix(phi: Matrix, source: WeakBialgebra, target: WeakBialgebra) -> Matrix:
    """phi restricted to H_s -> K_s in the canonical echelon bases, or raise."""
    cols = []
    for y in source.hs.basis:
        img = phi.apply(y)
        coords = target.hs.coords_of(img)
        if coords is None:
            raise PhiSEscape(img)
        cols.append(coords)
    return Matrix.from_cols(source.field, cols, rows=target.hs.dim)


class PhiSEscape(Exception):
    """Internal signal: phi(H_s) is not inside K_s."""

    def __init__(self, img):
        self.img = img
        super().__init__("phi(H_s) escaped K_s")


@dataclass(frozen=True)
class IotaResult:
    """The comonoidal comparison map iota for one pair of comodules."""

    matrix: Matrix
    source: Comodule
    target: TensorComodule
    comodule_map_verdict: Verdict
    surjective: bool
    bijective: bool
    phi_s_bijective: bool


def comonoidal_structure(phi: WeakBialgebraMap, a: Comodule, b: Comodule) -> IotaResult:
    """iota_{a,b}: M^phi(a (x)_{H_s} b) -> M^phi(a) (x)_{K_s} M^phi(b).

    The map is induced by the identity of the plain tensor product; it is
    always surjective, and bijective whenever phi restricted to the source
    subalgebras is bijective.
    """
    from .comod import comodule_map_verdict
    from .exactla import rank

    if a.over is not phi.source or b.over is not phi.source:
        raise MalformedInput("comodules are not over the map's source")
    t_h = tensor_over_source(a, b)
    a_k = induced_functor(phi, a)
    b_k = induced_functor(phi, b)
    t_k = tensor_over_source(a_k, b_k)
    src = induced_functor(phi, t_h)
    mat = t_k.projection.mul(t_h.section)
    verdict = comodule_map_verdict(src, t_k, mat)
    r = rank(mat)
    surjective = r == t_k.dim
    bijective = surjective and r == src.dim
    try:
        phi_s = _phi_s_matrix(phi.matrix, phi.source, phi.target)
        phi_s_bij = inverse(phi_s) is not None
    except PhiSEscape:
        phi_s_bij = False
    if not surjective:
        raise InternalInconsistency("iota failed to be surjective")
    if phi_s_bij and not bijective:
        raise InternalInconsistency("phi_s bijective but iota is not")
    return IotaResult(mat, src, t_k, verdict, surjective, bijective, phi_s_bij)


class FunctorData:
    """The finite table presenting a candidate fibered functor.

    `assignments` pairs comodules over the source with the coactions the
    functor claims on the identical underlying spaces; `unit_map` is the
    matrix of the unit morphism H_s -> K_s in the canonical echelon bases.
    Validity of the claimed coactions is checked by the reconstruction entry
    points, so that malformed tables are reported as layer verdicts.
    """

    __slots__ = ("source", "target", "assignments", "unit_map")

    def __init__(self, source: WeakBialgebra, target: WeakBialgebra, assignments, unit_map=None):
        assignments = tuple(assignments)
        for m, rho in assignments:
            if m.over is not source:
                raise MalformedInput("assignment comodule is not over the source")
            if rho.rows != m.dim * target.dim or rho.cols != m.dim:
                raise MalformedInput("claimed coaction has the wrong shape")
        if unit_map is not None and (
            unit_map.rows != target.hs.dim or unit_map.cols != source.hs.dim
        ):
            raise MalformedInput("unit morphism matrix has the wrong shape")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "assignments", assignments)
        object.__setattr__(self, "unit_map", unit_map)

    def __setattr__(self, name, val):
        raise AttributeError("FunctorData is immutable")

    def regular_assignment(self):
        n = self.source.dim
        reg = self.source.comult_matrix()
        for m, rho in self.assignments:
            if m.dim == n and m.coaction == reg:
                return m, rho
        raise MalformedInput("functor data lacks the regular comodule assignment")


def functor_from_map(phi: WeakBialgebraMap, comodules) -> FunctorData:
    """The functor table of M^phi on the given comodules (regular included by caller)."""
    assignments = [
        (m, induced_coaction(phi.matrix, m, phi.target)) for m in comodules
    ]
    return FunctorData(
        phi.source, phi.target, assignments, unit_map=phi.source_restriction()
    )


@dataclass(frozen=True)
class ReconstructionResult:
    """The candidate matrix, per-layer verdicts, and the verified map if all pass."""

    phi: Matrix
    layers: tuple[tuple[str, Verdict], ...]
    bialgebra_map: WeakBialgebraMap | None = None

    @property
    def ok(self) -> bool:
        return all(v.ok for _, v in self.layers)

    def first_failing_layer(self) -> str | None:
        for name, v in self.layers:
            if not v.ok:
                return name
        return None

    def layer(self, name: str) -> Verdict:
        for lname, v in self.layers:
            if lname == name:
                return v
        raise KeyError(name)


def _coalgebra_layers(fd: FunctorData):
    h, k = fd.source, fd.target
    field = h.field
    n, nk = h.dim, k.dim
    layers = []

    validity = []
    for idx, (m, rho) in enumerate(fd.assignments):
        v = coaction_verdict(k, m.dim, rho)
        if not v.ok:
            validity.append(
                Violation(f"assignment {idx} invalid over target", (idx,), v.describe(), None)
            )
    layers.append(("comodule-validity", Verdict(tuple(validity))))

    _, rho_reg = fd.regular_assignment()
    z = field.zero
    phi_rows = [[z] * n for _ in range(nk)]
    eps = h.counit
    for i in range(n):
        col = rho_reg.col(i)
        for idx, c in enumerate(col):
            if not c:
                continue
            a, kk = divmod(idx, nk)
            if eps[a]:
                phi_rows[kk][i] = phi_rows[kk][i] + eps[a] * c
    phi = Matrix(field, phi_rows, cols=n)

    layers.append(("coalgebra-map", Verdict(tuple(_coalgebra_map_violations(phi, h, k)))))

    feq = []
    for idx, (m, rho) in enumerate(fd.assignments):
        expected = induced_coaction(phi, m, k)
        if rho != expected:
            for i in range(m.dim):
                if rho.col(i) != expected.col(i):
                    feq.append(
                        Violation("rho^F != (id (x) phi) rho", (idx, i), rho.col(i), expected.col(i))
                    )
                    break
    layers.append(("functor-equality", Verdict(tuple(feq))))

    # Remark 3.2: phi is a K-comodule map from (H, rho^F) to (K, Delta_K)
    rem = []
    for i in range(n):
        lhs = k.comultiply(phi.col(i))
        rhs = list(vec_zero(field, nk * nk))
        col = rho_reg.col(i)
        for idx, c in enumerate(col):
            if not c:
                continue
            a, kk = divmod(idx, nk)
            for b, p in enumerate(phi.col(a)):
                if p:
                    rhs[b * nk + kk] = rhs[b * nk + kk] + c * p
        if lhs != tuple(rhs):
            rem.append(Violation("Delta_K . phi != (phi (x) id) rho^F", (i,), lhs, tuple(rhs)))
    layers.append(("comodule-map-property", Verdict(tuple(rem))))
    return phi, layers


def reconstruct_coalgebra_map(fd: FunctorData) -> ReconstructionResult:
    """Recover the coalgebra map from the regular assignment and verify it."""
    phi, layers = _coalgebra_layers(fd)
    return ReconstructionResult(phi, tuple(layers))


def reconstruct_weak_bialgebra_map(fd: FunctorData) -> ReconstructionResult:
    """Recover the weak bialgebra map and verify every layer of Theorem-level claims."""
    if fd.unit_map is None:
        raise MalformedInput("functor data lacks the unit morphism")
    h, k = fd.source, fd.target
    phi, layers = _coalgebra_layers(fd)

    layers.append(("algebra-map", Verdict(tuple(_algebra_map_violations(phi, h, k)))))

    unit_violations = []
    phi_s = None
    try:
        phi_s = _phi_s_matrix(phi, h, k)
        if fd.unit_map != phi_s:
            unit_violations.append(
                Violation("unit morphism != phi restricted to H_s", (), fd.unit_map, phi_s)
            )
    except PhiSEscape as exc:
        unit_violations.append(Violation("phi(H_s) escaped K_s", (), exc.img, None))
    layers.append(("unit-morphism", Verdict(tuple(unit_violations))))

    bij_violations = []
    if phi_s is None:
        bij_violations.append(Violation("phi_s not bijective", (), None, None))
    elif phi_s.rows != phi_s.cols or inverse(phi_s) is None:
        bij_violations.append(
            Violation("phi_s not bijective", (), (phi_s.rows, phi_s.cols), None)
        )
    layers.append(("source-bijectivity", Verdict(tuple(bij_violations))))

    como_violations = []
    clean = all(v.ok for _, v in layers)
    if clean:
        bmap = WeakBialgebraMap(h, k, phi)
        comods = [m for m, _ in fd.assignments]
        for i, m in enumerate(comods):
            for j, m2 in enumerate(comods):
                res = comonoidal_structure(bmap, m, m2)
                if not res.comodule_map_verdict.ok:
                    como_violations.append(
                        Violation("iota not a comodule map", (i, j), res.comodule_map_verdict.describe(), None)
                    )
                if not res.bijective:
                    como_violations.append(Violation("iota not bijective", (i, j), None, None))
    else:
        como_violations.append(
            Violation("skipped: earlier layer failed", (), None, None)
        )
    layers.append(("comonoidal-structure", Verdict(tuple(como_violations))))

    result = ReconstructionResult(phi, tuple(layers))
    if result.ok:
        result = ReconstructionResult(phi, tuple(layers), WeakBialgebraMap(h, k, phi))
    return result


@dataclass(frozen=True)
class IsoResult:
    is_isomorphism: bool
    inverse: WeakBialgebraMap | None = None


def check_isomorphism(phi: WeakBialgebraMap) -> IsoResult:
    """Invertibility of the matrix, with the inverse verified as a map."""
    inv = inverse(phi.matrix)
    if inv is None:
        return IsoResult(False)
    back, verdict = check_map(inv, phi.target, phi.source)
    if back is None:
        raise InternalInconsistency(
            f"inverse of a weak bialgebra isomorphism failed: {verdict.describe()}"
        )
    return IsoResult(True, back)
