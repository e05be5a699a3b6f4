"""Closure procedures for sub-presheaves under Day convolution: purity,
invariance, generated subcoalgebras, and separation of parallel morphisms.

A sub-presheaf is one subspace per object closed under the restriction maps.
pure_closure enlarges a sub-presheaf until convolving its inclusion with a
fixed presheaf N becomes injective: each kernel witness is lifted to the
direct-sum level, expressed against the ambient relation generators, and the
tensor legs of the generators involved are adjoined before closing under
restrictions again.  invariant_closure similarly adjoins the legs of
coproduct values until they land in the image of the convolution square of
the sub-presheaf.  Both strictly grow a bounded subspace, so they terminate.

The generated subcoalgebra alternates purity against the current stage,
purity against the ambient presheaf, and invariance; the extra ambient pass
makes the convolution square of the result embed into that of the ambient
coalgebra, which is what lets the comultiplication restrict uniquely.
"""

from .day import DayCoalgebra, DayPresheaf, DayTensor, NatTransform, convolve_nat, representable
from .errors import ComputationError, MapsEqual, ShapeMismatch
from .linalg import Matrix, Subspace


class SubPresheaf:
    """One subspace of F(U) per object, meant to be restriction-closed."""

    def __init__(self, presheaf, spaces):
        self.presheaf = presheaf
        self.spaces = list(spaces)

    @classmethod
    def from_vectors(cls, presheaf, assignment):
        """assignment: {object index: list of vectors in F(U)}."""
        fld = presheaf.category.field
        spaces = []
        for U in range(presheaf.category.size):
            vecs = assignment.get(U, [])
            spaces.append(Subspace.from_vectors(fld, presheaf.dims[U], vecs))
        return cls(presheaf, spaces)

    @classmethod
    def zero(cls, presheaf):
        return cls.from_vectors(presheaf, {})

    @classmethod
    def full(cls, presheaf):
        fld = presheaf.category.field
        return cls(
            presheaf,
            [Subspace.full(fld, d) for d in presheaf.dims],
        )

    def dims(self):
        return [s.dim for s in self.spaces]

    def total_dim(self):
        return sum(s.dim for s in self.spaces)

    def is_closed(self):
        cat = self.presheaf.category
        for (a, b, i) in cat.all_basis_mors():
            M = self.presheaf.action(a, b, i)
            for v in self.spaces[b].vectors():
                if not self.spaces[a].contains_vector(M.apply(v)):
                    return False
        return True

    def close(self):
        """Smallest restriction-closed enlargement."""
        cat = self.presheaf.category
        fld = cat.field
        spaces = list(self.spaces)
        changed = True
        while changed:
            changed = False
            for (a, b, i) in cat.all_basis_mors():
                if a == b:
                    continue
                M = self.presheaf.action(a, b, i)
                extra = [
                    M.apply(v)
                    for v in spaces[b].vectors()
                    if not spaces[a].contains_vector(M.apply(v))
                ]
                if extra:
                    spaces[a] = Subspace.from_vectors(
                        fld, self.presheaf.dims[a], spaces[a].vectors() + extra
                    )
                    changed = True
        return SubPresheaf(self.presheaf, spaces)

    def with_added(self, assignment):
        fld = self.presheaf.category.field
        spaces = []
        for U, s in enumerate(self.spaces):
            extra = assignment.get(U, [])
            if extra:
                spaces.append(
                    Subspace.from_vectors(
                        fld, self.presheaf.dims[U], s.vectors() + list(extra)
                    )
                )
            else:
                spaces.append(s)
        return SubPresheaf(self.presheaf, spaces)

    def contains(self, other):
        return all(a.contains(b) for a, b in zip(self.spaces, other.spaces))

    def __eq__(self, other):
        if not isinstance(other, SubPresheaf):
            return NotImplemented
        return self.presheaf is other.presheaf and self.spaces == other.spaces

    def as_presheaf(self):
        """Realize as a DayPresheaf plus the inclusion transformation."""
        cat = self.presheaf.category
        fld = cat.field
        dims = self.dims()
        actions = {}
        for (a, b, i) in cat.all_basis_mors():
            M = self.presheaf.action(a, b, i)
            cols = []
            for v in self.spaces[b].vectors():
                coords = self.spaces[a].coordinates(M.apply(v))
                if coords is None:
                    raise ShapeMismatch("sub-presheaf not closed under restrictions")
                cols.append(coords)
            actions[(a, b, i)] = Matrix.from_cols(fld, cols, dims[a])
        sub = DayPresheaf(cat, dims, actions)
        incl = NatTransform(
            sub,
            self.presheaf,
            [
                Matrix.from_cols(fld, s.vectors(), self.presheaf.dims[U])
                for U, s in enumerate(self.spaces)
            ],
        )
        return sub, incl

    def __repr__(self):
        return f"SubPresheaf(dims {self.dims()} of {self.presheaf.dims})"


def _identity_nat(F):
    fld = F.category.field
    return NatTransform(F, F, [Matrix.identity(fld, d) for d in F.dims])


def purity_kernels(M, sub, N):
    """Kernels per object of (sub (x) N) -> (M (x) N); all trivial = pure."""
    subp, incl = sub.as_presheaf()
    conv_sub = DayTensor(subp, N)
    conv_amb = DayTensor(M, N)
    kappa = convolve_nat(conv_sub, conv_amb, incl, _identity_nat(N))
    return [kappa.at(U).kernel() for U in range(M.category.size)], conv_sub, conv_amb, incl


def pure_closure(M, M0, N):
    """Enlarge M0 inside M until tensoring the inclusion with N is injective."""
    current = M0.close()
    while True:
        kernels, conv_sub, conv_amb, incl = purity_kernels(M, current, N)
        if all(k.dim == 0 for k in kernels):
            return current
        additions = {}
        for U, ker in enumerate(kernels):
            for w in ker.vectors():
                d_sub = conv_sub.sections[U].apply(w)
                d_amb = _embed_d_level(conv_sub, conv_amb, incl, U, d_sub)
                z = conv_amb.relations[U].solve(d_amb)
                if z is None:
                    raise ComputationError("kernel witness not a relation image")
                _collect_left_legs(conv_amb, U, z, additions)
        grown = current.with_added(additions).close()
        if grown.dims() == current.dims():
            raise ComputationError("purity closure made no progress")
        current = grown


def _embed_d_level(conv_sub, conv_amb, incl, U, vec):
    """Carry a direct-sum-level vector of (sub (x) N) into that of (M (x) N)."""
    fld = conv_amb.category.field
    out = [fld.zero] * conv_amb.d_dims[U]
    index_amb = conv_amb.block_index[U]
    for (X, Y, off, hd, fd, gd) in conv_sub.blocks[U]:
        if (X, Y) not in index_amb:
            raise ComputationError("sub-tensor block missing from ambient tensor")
        _, _, off2, _, fd2, gd2 = conv_amb.blocks[U][index_amb[(X, Y)]]
        inc = incl.at(X)
        for pi in range(hd):
            for s in range(fd):
                for t in range(gd):
                    c = vec[off + (pi * fd + s) * gd + t]
                    if fld.is_zero(c):
                        continue
                    for s2 in range(fd2):
                        a = inc.data[s2][s]
                        if not fld.is_zero(a):
                            idx = off2 + (pi * fd2 + s2) * gd2 + t
                            out[idx] = fld.add(out[idx], fld.mul(c, a))
    return out


def _collect_left_legs(conv, U, z, additions):
    """Adjoin, per generator group, the left (F-side) legs of a relation
    combination: for fixed morphism data, the column space of the (s, t)
    coefficient matrix."""
    fld = conv.category.field
    groups = {}
    for idx, c in enumerate(z):
        if fld.is_zero(c):
            continue
        X, Y, Xp, Yp, ai, bi, pi, s, t = conv.relation_tags[U][idx]
        groups.setdefault((X, Y, Xp, Yp, ai, bi, pi), {})[(s, t)] = c
    for (X, Y, Xp, Yp, ai, bi, pi), coeffs in groups.items():
        fd = conv.F.dims[X]
        tvals = sorted({t for (_, t) in coeffs})
        for t in tvals:
            vec = [fld.zero] * fd
            nonzero = False
            for s in range(fd):
                c = coeffs.get((s, t))
                if c is not None and not fld.is_zero(c):
                    vec[s] = c
                    nonzero = True
            if nonzero:
                additions.setdefault(X, []).append(vec)


def _collect_both_legs(conv, U, vec, additions):
    """Adjoin both tensor legs of a direct-sum-level element of F (x) F."""
    fld = conv.category.field
    for (X, Y, off, hd, fd, gd) in conv.blocks[U]:
        for pi in range(hd):
            for s in range(fd):
                row = vec[off + (pi * fd + s) * gd : off + (pi * fd + s + 1) * gd]
                if any(not fld.is_zero(c) for c in row):
                    additions.setdefault(Y, []).append(list(row))
        for t in range(gd):
            for pi in range(hd):
                col = [vec[off + (pi * fd + s) * gd + t] for s in range(fd)]
                if any(not fld.is_zero(c) for c in col):
                    additions.setdefault(X, []).append(col)


def invariant_kernels(FC, sub):
    """Coproduct values of sub basis vectors lacking a preimage in
    (sub (x) sub); returns (failures, conv_sub, kappa)."""
    subp, incl = sub.as_presheaf()
    conv_sub = DayTensor(subp, subp)
    kappa = convolve_nat(conv_sub, FC.conv, incl, incl)
    failures = []
    for U in range(FC.category.size):
        target = FC.delta.at(U) @ incl.at(U)
        sol = kappa.at(U).solve_matrix(target)
        if sol is None:
            for j, v in enumerate(sub.spaces[U].vectors()):
                col = FC.delta.at(U).apply(incl.at(U).col(j))
                if kappa.at(U).solve(col) is None:
                    failures.append((U, col))
    return failures, conv_sub, kappa


def invariant_closure(FC, M0):
    """Enlarge M0 inside the coalgebra F until delta(M') lands in the image
    of M' (x) M' -> F (x) F."""
    current = M0.close()
    while True:
        failures, _, _ = invariant_kernels(FC, current)
        if not failures:
            return current
        additions = {}
        for U, value in failures:
            lift = FC.conv.sections[U].apply(value)
            _collect_both_legs(FC.conv, U, lift, additions)
        grown = current.with_added(additions).close()
        if grown.dims() == current.dims():
            raise ComputationError("invariance closure made no progress")
        current = grown


def generated_day_subcoalgebra(FC, M0):
    """Smallest manageable subcoalgebra of FC containing M0.

    Alternates purity (against the current stage, then against the ambient
    presheaf) with invariance until jointly stable, then restricts delta and
    epsilon.  Returns (subcoalgebra, inclusion, sub_presheaf).
    """
    F = FC.presheaf
    current = M0.close()
    while True:
        before = current.dims()
        stage, _ = current.as_presheaf()
        current = pure_closure(F, current, stage)
        current = pure_closure(F, current, F)
        current = invariant_closure(FC, current)
        if current.dims() == before:
            break
    subp, incl = current.as_presheaf()
    conv_sub = DayTensor(subp, subp)
    kappa = convolve_nat(conv_sub, FC.conv, incl, incl)
    delta_mats = []
    for U in range(F.category.size):
        if kappa.at(U).kernel().dim != 0:
            raise ComputationError("restricted convolution square is not injective")
        target = FC.delta.at(U) @ incl.at(U)
        sol = kappa.at(U).solve_matrix(target)
        if sol is None:
            raise ComputationError("coproduct does not restrict to the closure")
        delta_mats.append(sol)
    delta = NatTransform(subp, conv_sub.presheaf, delta_mats)
    h1 = representable(F.category, F.category.unit)
    eps = NatTransform(
        subp, h1, [FC.epsilon.at(U) @ incl.at(U) for U in range(F.category.size)]
    )
    return DayCoalgebra(subp, delta, eps, conv_sub), incl, current


def separate_by_generator(FC, eta, psi):
    """A subcoalgebra of FC's carrier on which two distinct morphisms out of
    it still differ: generated by one coordinate line where they disagree."""
    fld = FC.category.field
    witness = None
    for U in range(FC.category.size):
        if eta.at(U) == psi.at(U):
            continue
        for j in range(FC.presheaf.dims[U]):
            if eta.at(U).col(j) != psi.at(U).col(j):
                vec = [fld.one if i == j else fld.zero for i in range(FC.presheaf.dims[U])]
                witness = (U, vec)
                break
        if witness:
            break
    if witness is None:
        raise MapsEqual("the morphisms agree everywhere")
    M0 = SubPresheaf.from_vectors(FC.presheaf, {witness[0]: [witness[1]]})
    subcoalg, incl, subspaces = generated_day_subcoalgebra(FC, M0)
    differs = any(
        not (eta.at(U) @ incl.at(U) == psi.at(U) @ incl.at(U))
        for U in range(FC.category.size)
    )
    if not differs:
        raise ComputationError("separating subobject lost the disagreement")
    return subcoalg, incl, subspaces
