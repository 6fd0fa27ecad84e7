"""Deterministic generators for test objects: groupoid algebras and friends.

Groupoid algebras are the standard nontrivial examples here: the basis is
the arrow set, the product is composition-or-zero with a.b defined exactly
when source(a) = target(b), every arrow is group-like, and the antipode
sends an arrow to its inverse.  Every generator re-verifies its output
through the full axiom suite before returning it (generators self-test).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import MalformedInput, PreconditionError
from .exactla import QQ, GF, FieldSpec, Matrix
from .structure import FiniteAlgebra, FiniteCoalgebra
from .weakbia import WeakBialgebra, build_weak_bialgebra
from .decomp import direct_sum
from .tannaka import check_map

PRESET_NAMES = ("k", "c2", "gpd2", "sum", "z3@gf2")


@dataclass(frozen=True)
class GroupoidPresentation:
    """Objects, arrows (label, source, target), composition and inverse tables."""

    objects: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]
    composition: dict
    inverses: dict

    def validate(self):
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise MalformedInput("duplicate arrow labels")
        info = {a[0]: (a[1], a[2]) for a in self.arrows}
        for obj in set(x for a in self.arrows for x in (a[1], a[2])):
            if obj not in self.objects:
                raise MalformedInput(f"arrow endpoint {obj!r} is not an object")
        for (a, b), c in self.composition.items():
            if a not in info or b not in info or c not in info:
                raise MalformedInput(f"composition entry with unknown arrow: {(a, b, c)}")
            if info[a][0] != info[b][1]:
                raise MalformedInput(f"{a}.{b} composed but source({a}) != target({b})")
            if info[c] != (info[b][0], info[a][1]):
                raise MalformedInput(f"composite {a}.{b} = {c} has wrong endpoints")
        for a in names:
            for b in names:
                if info[a][0] == info[b][1] and (a, b) not in self.composition:
                    raise MalformedInput(f"missing composite {a}.{b}")
        for a in names:
            for b in names:
                for c in names:
                    if (b, c) in self.composition and (a, b) in self.composition:
                        left = self.composition[(self.composition[(a, b)], c)]
                        right = self.composition[(a, self.composition[(b, c)])]
                        if left != right:
                            raise MalformedInput(f"composition not associative at {(a, b, c)}")
        identities = {}
        for obj in self.objects:
            cands = [
                a
                for a in names
                if info[a] == (obj, obj)
                and all(
                    self.composition.get((a, b)) == b
                    for b in names
                    if info[b][1] == obj
                )
                and all(
                    self.composition.get((b, a)) == b
                    for b in names
                    if info[b][0] == obj
                )
            ]
            if not cands:
                raise MalformedInput(f"object {obj!r} has no identity arrow")
            identities[obj] = cands[0]
        for a in names:
            inv = self.inverses.get(a)
            if inv is None:
                raise MalformedInput(f"arrow {a!r} has no inverse")
            src, tgt = info[a]
            if self.composition.get((a, inv)) != identities[tgt]:
                raise MalformedInput(f"{a}.{a}^-1 is not the identity at {tgt!r}")
            if self.composition.get((inv, a)) != identities[src]:
                raise MalformedInput(f"{a}^-1.{a} is not the identity at {src!r}")
        return identities


def groupoid_algebra(g: GroupoidPresentation, field: FieldSpec) -> WeakBialgebra:
    """The weak Hopf algebra of a finite groupoid, verified end to end."""
    identities = g.validate()
    names = [a[0] for a in g.arrows]
    index = {lab: i for i, lab in enumerate(names)}
    n = len(names)
    z, o = field.zero, field.one
    mult = [[[z] * n for _ in range(n)] for _ in range(n)]
    for (a, b), c in g.composition.items():
        mult[index[a]][index[b]][index[c]] = o
    unit = [z] * n
    for obj in g.objects:
        unit[index[identities[obj]]] = o
    comult = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        comult[i][i][i] = o
    counit = [o] * n
    alg = FiniteAlgebra(field, names, mult, unit)
    coa = FiniteCoalgebra(field, names, comult, counit)
    h = build_weak_bialgebra(alg, coa)
    srows = [[z] * n for _ in range(n)]
    for a, inv in g.inverses.items():
        srows[index[inv]][index[a]] = o
    return h.with_antipode(Matrix(field, srows, cols=n))


def indiscrete_groupoid(num_objects: int) -> GroupoidPresentation:
    """One arrow between every ordered pair of objects, identities first."""
    objects = tuple(str(i + 1) for i in range(num_objects))
    arrows = []
    name = {}
    for s in objects:
        arrows.append((f"e{s}", s, s))
        name[(s, s)] = f"e{s}"
    for s in objects:
        for t in objects:
            if s != t:
                lab = _arrow_label(s, t, num_objects)
                arrows.append((lab, s, t))
                name[(s, t)] = lab
    composition = {}
    inverses = {}
    for lab_a, sa, ta in arrows:
        inverses[lab_a] = name[(ta, sa)]
        for lab_b, sb, tb in arrows:
            if sa == tb:
                composition[(lab_a, lab_b)] = name[(sb, ta)]
    return GroupoidPresentation(objects, tuple(arrows), composition, inverses)


def _arrow_label(s: str, t: str, num_objects: int) -> str:
    if num_objects == 2:
        return "f" if (s, t) == ("1", "2") else "g"
    return f"a{s}{t}"


def cyclic_group_table(order: int):
    labels = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, order)]
    table = {}
    for i in range(order):
        for j in range(order):
            table[(labels[i], labels[j])] = labels[(i + j) % order]
    return labels, table


def group_algebra(labels, cayley_table, field: FieldSpec) -> WeakBialgebra:
    """Group algebra as a one-object groupoid algebra; the table is validated."""
    labels = list(labels)
    lab_set = set(labels)
    if len(lab_set) != len(labels):
        raise MalformedInput("duplicate group element labels")
    for (a, b), c in cayley_table.items():
        if a not in lab_set or b not in lab_set or c not in lab_set:
            raise MalformedInput(f"table entry with unknown element: {(a, b, c)}")
    for a in labels:
        for b in labels:
            if (a, b) not in cayley_table:
                raise MalformedInput(f"missing product {a}.{b}")
    identity = None
    for e in labels:
        if all(cayley_table[(e, a)] == a and cayley_table[(a, e)] == a for a in labels):
            identity = e
            break
    if identity is None:
        raise MalformedInput("table has no identity element")
    inverses = {}
    for a in labels:
        inv = [b for b in labels if cayley_table[(a, b)] == identity]
        if not inv or cayley_table[(inv[0], a)] != identity:
            raise MalformedInput(f"element {a!r} has no inverse")
        inverses[a] = inv[0]
    arrows = tuple((lab, "*", "*") for lab in labels)
    pres = GroupoidPresentation(("*",), arrows, dict(cayley_table), inverses)
    return groupoid_algebra(pres, field)


def preset(name: str, field: FieldSpec | None = None) -> WeakBialgebra:
    """Named fixtures addressable from the CLI."""
    if name == "k":
        labels, table = cyclic_group_table(1)
        return group_algebra(labels, table, field or QQ)
    if name == "c2":
        labels, table = cyclic_group_table(2)
        return group_algebra(labels, table, field or QQ)
    if name == "gpd2":
        return groupoid_algebra(indiscrete_groupoid(2), field or QQ)
    if name == "sum":
        return direct_sum(preset("c2", field), preset("gpd2", field))
    if name == "z3@gf2":
        labels, table = cyclic_group_table(3)
        return group_algebra(labels, table, field or GF(2))
    raise MalformedInput(f"unknown fixture {name!r}; presets: {', '.join(PRESET_NAMES)}")


def enumerate_automorphisms(h: WeakBialgebra, degree_bound: int = 8):
    """All weak-bialgebra automorphisms permuting the basis, in lexicographic order.

    Basis permutations cover the automorphisms coming from groupoid
    symmetry, which is what the reconstruction uniqueness tests need.
    """
    n = h.dim
    if n > degree_bound:
        raise PreconditionError(
            f"dimension {n} exceeds the enumeration bound {degree_bound}"
        )
    field = h.field
    z, o = field.zero, field.one
    out = []
    for sigma in permutations(range(n)):
        if any(h.unit[sigma[i]] != h.unit[i] for i in range(n)):
            continue
        if any(h.counit[sigma[i]] != h.counit[i] for i in range(n)):
            continue
        ok = True
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if h.mult[sigma[i]][sigma[j]][sigma[k]] != h.mult[i][j][k]:
                        ok = False
                        break
                    if h.comult[sigma[i]][sigma[j]][sigma[k]] != h.comult[i][j][k]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        rows = [[z] * n for _ in range(n)]
        for i in range(n):
            rows[sigma[i]][i] = o
        bmap, _ = check_map(Matrix(field, rows, cols=n), h, h)
        if bmap is not None:
            out.append(bmap)
    return out
