"""Sectionwise presheaves of coalgebras on a finite index category, their
etale subpresheaves, and the presheaf-level pointwise/group-like adjunction.

The index is a plain finite category (objects, a morphism list containing
the identities, and a composition table).  A presheaf assigns a coalgebra to
each object and a coalgebra morphism F(f): F(b) -> F(a) to each f: a -> b.
Everything here reduces to the structure module section by section; the
content is that the sectionwise data assembles to presheaf morphisms, which
the functoriality and naturality of the etale machinery guarantees.
"""

from .coalgebra import CoalgebraMorphism, diagonal_coalgebra, validate
from .errors import ReportedFailure, ShapeMismatch, ValidationError
from .linalg import Matrix
from .structure import (
    counit_of_gp_adjunction,
    etale_part,
    group_likes,
)


class FiniteCategory:
    """objects, morphisms as (name, src, dst), identities, composition table
    keyed (g, f) -> index of g o f."""

    def __init__(self, objects, morphisms, identity, compose_table):
        self.objects = list(objects)
        self.morphisms = [tuple(m) for m in morphisms]
        self.identity = list(identity)
        self.compose_table = dict(compose_table)
        self._validate()

    def _validate(self):
        for a, idx in enumerate(self.identity):
            name, src, dst = self.morphisms[idx]
            if src != a or dst != a:
                raise ValidationError(f"identity of object {a} has wrong endpoints")
        for f, (fn, fs, fd) in enumerate(self.morphisms):
            for g, (gn, gs, gd) in enumerate(self.morphisms):
                if gs != fd:
                    continue
                if (g, f) not in self.compose_table:
                    raise ValidationError(f"missing composite of {gn} o {fn}")
                cn, cs, cd = self.morphisms[self.compose_table[(g, f)]]
                if cs != fs or cd != gd:
                    raise ValidationError(f"composite {cn} has wrong endpoints")
        for f, (fn, fs, fd) in enumerate(self.morphisms):
            if self.compose_table[(self.identity[fd], f)] != f:
                raise ValidationError(f"left identity fails on {fn}")
            if self.compose_table[(f, self.identity[fs])] != f:
                raise ValidationError(f"right identity fails on {fn}")
        for f, (_, fs, fd) in enumerate(self.morphisms):
            for g, (_, gs, gd) in enumerate(self.morphisms):
                if gs != fd:
                    continue
                for h, (_, hs, hd) in enumerate(self.morphisms):
                    if hs != gd:
                        continue
                    lhs = self.compose_table[(h, self.compose_table[(g, f)])]
                    rhs = self.compose_table[(self.compose_table[(h, g)], f)]
                    if lhs != rhs:
                        raise ValidationError("composition not associative")

    @property
    def size(self):
        return len(self.objects)

    def src(self, f):
        return self.morphisms[f][1]

    def dst(self, f):
        return self.morphisms[f][2]

    def non_identity_morphisms(self):
        ids = set(self.identity)
        return [f for f in range(len(self.morphisms)) if f not in ids]


def arrow_category():
    """Two objects 0 -> 1 with a single non-identity morphism."""
    return FiniteCategory(
        ["0", "1"],
        [("id0", 0, 0), ("id1", 1, 1), ("u", 0, 1)],
        [0, 1],
        {(0, 0): 0, (1, 1): 1, (2, 0): 2, (1, 2): 2},
    )


class CoalgebraPresheaf:
    """Sections are coalgebras; restrictions are contravariant morphisms."""

    def __init__(self, index, sections, restrictions):
        self.index = index
        self.sections = list(sections)
        self.restrictions = list(restrictions)
        if len(self.sections) != index.size:
            raise ShapeMismatch("one section per object required")
        if len(self.restrictions) != len(index.morphisms):
            raise ShapeMismatch("one restriction per morphism required")

    def restriction(self, f):
        return self.restrictions[f]

    def validate(self):
        failures = []
        for U, C in enumerate(self.sections):
            bad = validate(C)
            if bad:
                failures.append(("section", U, bad))
        for f, phi in enumerate(self.restrictions):
            a, b = self.index.src(f), self.index.dst(f)
            if phi.source is not self.sections[b] and phi.source != self.sections[b]:
                failures.append(("restriction-source", f))
                continue
            if phi.target != self.sections[a]:
                failures.append(("restriction-target", f))
                continue
            bad = validate(phi)
            if bad:
                failures.append(("restriction-morphism", f, bad))
        for a, idx in enumerate(self.index.identity):
            if self.restrictions[idx].matrix != Matrix.identity(
                self.sections[a].field, self.sections[a].dim
            ):
                failures.append(("identity-restriction", a))
        for (g, f), c in self.index.compose_table.items():
            lhs = self.restrictions[f].matrix @ self.restrictions[g].matrix
            if not (lhs == self.restrictions[c].matrix):
                failures.append(("functoriality", (g, f)))
        return failures


class PresheafMorphism:
    """A family of coalgebra morphisms, one per object, natural in the index."""

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = list(components)

    def validate(self):
        failures = []
        for U, phi in enumerate(self.components):
            bad = validate(phi)
            if bad:
                failures.append(("component", U, bad))
        for f in range(len(self.source.index.morphisms)):
            a = self.source.index.src(f)
            lhs = self.components[a].matrix @ self.source.restrictions[f].matrix
            rhs = self.target.restrictions[f].matrix @ self.components[self.source.index.dst(f)].matrix
            if not (lhs == rhs):
                failures.append(("naturality", f))
        return failures


def etale_subpresheaf(F, seed=None):
    """Objectwise etale parts with the induced restrictions; returns
    (presheaf, inclusion, splitting) with both families natural."""
    kwargs = {} if seed is None else {"seed": seed}
    data = [etale_part(C, **kwargs) for C in F.sections]
    sections = [d.etale for d in data]
    restrictions = []
    for f in range(len(F.index.morphisms)):
        a, b = F.index.src(f), F.index.dst(f)
        mat = data[a].retraction.matrix @ F.restrictions[f].matrix @ data[b].inclusion.matrix
        restrictions.append(CoalgebraMorphism(sections[b], sections[a], mat))
    E = CoalgebraPresheaf(F.index, sections, restrictions)
    inclusion = PresheafMorphism(E, F, [d.inclusion for d in data])
    splitting = PresheafMorphism(F, E, [d.retraction for d in data])
    bad = inclusion.validate() + splitting.validate() + E.validate()
    if bad:
        raise ReportedFailure("etale subpresheaf naturality failed", bad)
    return E, inclusion, splitting


class SetPresheaf:
    """Finite sets with contravariant functions between them."""

    def __init__(self, index, sizes, maps):
        self.index = index
        self.sizes = list(sizes)
        self.maps = [list(m) for m in maps]  # maps[f]: X(dst) -> X(src)

    def validate(self):
        failures = []
        for f, m in enumerate(self.maps):
            a, b = self.index.src(f), self.index.dst(f)
            if len(m) != self.sizes[b] or any(not 0 <= x < self.sizes[a] for x in m):
                failures.append(("map-shape", f))
        for a, idx in enumerate(self.index.identity):
            if self.maps[idx] != list(range(self.sizes[a])):
                failures.append(("identity-map", a))
        for (g, f), c in self.index.compose_table.items():
            composed = [self.maps[f][x] for x in self.maps[g]]
            if composed != self.maps[c]:
                failures.append(("functoriality", (g, f)))
        return failures


def pointwise_coalgebra_presheaf(X, field):
    """k^delta applied sectionwise to a presheaf of finite sets."""
    sections = [diagonal_coalgebra(n, field) for n in X.sizes]
    restrictions = []
    for f, m in enumerate(X.maps):
        a, b = X.index.src(f), X.index.dst(f)
        M = Matrix.zeros(field, X.sizes[a], X.sizes[b])
        for x in range(X.sizes[b]):
            M.data[m[x]][x] = field.one
        restrictions.append(CoalgebraMorphism(sections[b], sections[a], M))
    return CoalgebraPresheaf(X.index, sections, restrictions)


def group_like_presheaf(F, seed=None):
    """Sectionwise group-likes with the induced restriction functions."""
    kwargs = {} if seed is None else {"seed": seed}
    gls = [group_likes(C, **kwargs) for C in F.sections]
    sizes = [len(g.elements) for g in gls]
    maps = []
    for f in range(len(F.index.morphisms)):
        a, b = F.index.src(f), F.index.dst(f)
        m = []
        for c in gls[b].elements:
            image = F.restrictions[f].matrix.apply(c)
            if image not in gls[a].elements:
                raise ReportedFailure("restriction does not preserve group-likes", [f])
            m.append(gls[a].elements.index(image))
        maps.append(m)
    return SetPresheaf(F.index, sizes, maps), gls


def presheaf_gp_adjunction(F=None, X=None, field=None, seed=None):
    """Sectionwise adjunction checks plus naturality across restrictions.

    For a set presheaf X: the unit is a sectionwise bijection commuting with
    the restrictions.  For a coalgebra presheaf F: the counit components are
    valid, land in the sectionwise etale parts, commute with restrictions,
    and, when every section is split, corestrict to a presheaf isomorphism
    onto the etale subpresheaf.
    """
    checks = []
    kwargs = {} if seed is None else {"seed": seed}
    if X is not None:
        KX = pointwise_coalgebra_presheaf(X, field)
        GX, gls_X = group_like_presheaf(KX)
        checks.append(("unit-sectionwise-bijective", GX.sizes == X.sizes))

        def basis_vec(size, x):
            return [field.one if i == x else field.zero for i in range(size)]

        natural = True
        for f in range(len(X.index.morphisms)):
            a, b = X.index.src(f), X.index.dst(f)
            for x in range(X.sizes[b]):
                idx_b = gls_X[b].elements.index(basis_vec(X.sizes[b], x))
                image = gls_X[a].elements[GX.maps[f][idx_b]]
                if image != basis_vec(X.sizes[a], X.maps[f][x]):
                    natural = False
        checks.append(("unit-natural", natural))
    if F is not None:
        counits = []
        data = []
        for C in F.sections:
            cu, gl, ed = counit_of_gp_adjunction(C, **kwargs)
            counits.append(cu)
            data.append((gl, ed))
        checks.append(
            ("counit-sectionwise-valid", all(not validate(cu) for cu in counits))
        )
        checks.append(
            (
                "counit-lands-in-etale",
                all(
                    ed.inclusion.image().contains_vector(c)
                    for (gl, ed) in data
                    for c in gl.elements
                ),
            )
        )
        GF_set, gls = group_like_presheaf(F, seed=seed)
        natural = True
        for f in range(len(F.index.morphisms)):
            a, b = F.index.src(f), F.index.dst(f)
            lhs = F.restrictions[f].matrix @ counits[b].matrix
            K = Matrix.zeros(F.sections[a].field, F.sections[a].dim, GF_set.sizes[b])
            for x in range(GF_set.sizes[b]):
                col = counits[a].matrix.col(GF_set.maps[f][x])
                for r in range(F.sections[a].dim):
                    K.data[r][x] = col[r]
            if not (lhs == K):
                natural = False
        checks.append(("counit-natural", natural))
        if all(ed.is_split() for (_, ed) in data):
            iso_ok = True
            for (gl, ed), cu in zip(data, counits):
                core = ed.retraction.matrix @ cu.matrix
                if core.rank() != ed.etale.dim or ed.etale.dim != cu.source.dim:
                    iso_ok = False
            checks.append(("split-iso-onto-etale-sections", iso_ok))
    return {"checks": checks, "ok": all(ok for _, ok in checks)}
