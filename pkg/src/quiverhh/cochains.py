"""Cochains on the resolution, the induced differential, and cohomology.

A degree-m cochain is a bimodule map from degree m of the resolution to
the algebra: a dict {generator label: algebra element in the label's
corner}.  The scalar coordinate basis indexes pairs (label, corner
basis path); the named bases below give the same spaces the classical
generator-by-generator presentation:

    degree 0:        alpha_s^t (s = 0,1,2; t = 0..n) and beta
    degree 3m, m>0:  phi_i^t and psi
    degree 3m+1:     mu_i^t, nu_0, nu_1
    degree 3m+2:     theta_i^t (t = 0..n-1) and eta

Cohomology-class bookkeeping is by canonical residuals: reduce a cocycle
against the echelonised coboundary space; two cocycles are cohomologous
exactly when their residuals agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import SparseEchelon
from .quiver import a_cycle, arrow, trivial
from .uniform import label_pair


@dataclass(frozen=True)
class CochainName:
    kind: str  # 'alpha','beta','phi','psi','mu','nu','theta','eta'
    i: int | None = None
    t: int | None = None

    def __str__(self):
        if self.kind in ("beta", "psi", "eta"):
            return self.kind
        if self.kind == "nu":
            return f"nu_{self.i}"
        return f"{self.kind}_{self.i}^{self.t}"


class Cochain:
    """Generator images plus the degree they live at."""

    __slots__ = ("degree", "images", "name")

    def __init__(self, degree, images, name=None):
        self.degree = degree
        self.images = images
        self.name = name

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and {k: v for k, v in self.images.items() if v}
            == {k: v for k, v in other.images.items() if v}
        )

    def is_zero(self):
        return all(not v for v in self.images.values())


class HochschildComplex:
    def __init__(self, resolution):
        self.res = resolution
        self.alg = resolution.algebra
        self.n = resolution.n
        self.field = resolution.field
        self._hom_basis = {}
        self._cob_echelon = {}
        self._cocycle_echelon = {}

    # -- coordinates ------------------------------------------------------

    def hom_basis(self, m):
        """Scalar basis of the cochain space: (label, corner path) pairs."""
        if m not in self._hom_basis:
            out = []
            for lab in self.res.labels(m):
                o, t = label_pair(lab)
                for p in self.alg.corners[(o, t)]:
                    out.append((lab, p))
            self._hom_basis[m] = (out, {k: i for i, k in enumerate(out)})
        return self._hom_basis[m]

    def hom_dim(self, m):
        return len(self.hom_basis(m)[0])

    def to_vec(self, cochain):
        basis, index = self.hom_basis(cochain.degree)
        vec = {}
        for lab, val in cochain.images.items():
            for p, c in val.items():
                vec[index[(lab, p)]] = c
        return vec

    def from_vec(self, m, vec):
        basis, _ = self.hom_basis(m)
        images = {lab: {} for lab in self.res.labels(m)}
        for i, c in vec.items():
            if not c:
                continue
            lab, p = basis[i]
            images[lab][p] = c
        return Cochain(m, images)

    def zero_cochain(self, m):
        return Cochain(m, {lab: {} for lab in self.res.labels(m)})

    def add(self, f, g):
        assert f.degree == g.degree
        images = {
            lab: self.alg.add(f.images.get(lab, {}), g.images.get(lab, {}))
            for lab in self.res.labels(f.degree)
        }
        return Cochain(f.degree, images)

    def scale(self, c, f):
        return Cochain(f.degree, {lab: self.alg.scale(c, v) for lab, v in f.images.items()})

    # -- evaluation and the induced differential ---------------------------

    def evaluate(self, cochain, elem):
        """Value of the cochain on a resolution element, in the algebra."""
        alg = self.alg
        out = {}
        for (lab, left, right), c in elem.items():
            val = cochain.images.get(lab)
            if not val:
                continue
            for p, d in val.items():
                q = alg.mul_path(left, p)
                if q is None:
                    continue
                q = alg.mul_path(q, right)
                if q is None:
                    continue
                cd = c * d
                acc = out.get(q)
                acc = cd if acc is None else acc + cd
                if acc:
                    out[q] = acc
                else:
                    out.pop(q, None)
        return out

    def coboundary(self, cochain):
        """The induced differential: precompose with the boundary map."""
        m = cochain.degree
        images = {}
        for lab in self.res.labels(m + 1):
            images[lab] = self.evaluate(
                cochain, self.res.apply_boundary(m + 1, self.res.generator(lab))
            )
        return Cochain(m + 1, images)

    def is_cocycle(self, cochain):
        return self.coboundary(cochain).is_zero()

    # -- cohomology ---------------------------------------------------------

    def _coboundary_space(self, m):
        """Echelon of the coboundaries landing in degree m."""
        if m not in self._cob_echelon:
            ech = SparseEchelon()
            if m >= 1:
                one = self.field.one()
                basis, _ = self.hom_basis(m - 1)
                for lab, p in basis:
                    f = self.zero_cochain(m - 1)
                    f.images[lab] = {p: one}
                    ech.add(self.to_vec(self.coboundary(f)))
            self._cob_echelon[m] = ech
        return self._cob_echelon[m]

    def class_residual(self, cochain):
        """Canonical representative vector of the cohomology class."""
        assert self.is_cocycle(cochain), "not a cocycle"
        ech = self._coboundary_space(cochain.degree)
        res = ech.reduce(self.to_vec(cochain))
        return tuple(sorted(res.items()))

    def classes_equal(self, f, g):
        return self.class_residual(f) == self.class_residual(g)

    def class_is_zero(self, cochain):
        return self.class_residual(cochain) == ()

    def cohomology(self, m):
        """(dimension, representative cocycles) of degree-m cohomology."""
        one = self.field.one()
        ech_cob = self._coboundary_space(m)
        combined = SparseEchelon()
        for piv, row in ech_cob.rows.items():
            combined.add(dict(row))
        reps = []
        basis, _ = self.hom_basis(m)
        # echelonise the cocycle space on top of the coboundaries
        kernel_vecs = self._cocycle_vectors(m)
        for vec in kernel_vecs:
            res = combined.reduce(vec)
            if res:
                combined.add(res)
                reps.append(self.from_vec(m, res))
        return len(reps), reps

    def _cocycle_vectors(self, m):
        if m not in self._cocycle_echelon:
            from .linalg import Matrix, kernel_basis

            basis, _ = self.hom_basis(m)
            tgt_basis, tgt_index = self.hom_basis(m + 1)
            zero = self.field.zero()
            one = self.field.one()
            entries = [zero] * (len(tgt_basis) * len(basis))
            for j, (lab, p) in enumerate(basis):
                f = self.zero_cochain(m)
                f.images[lab] = {p: one}
                df = self.to_vec(self.coboundary(f))
                for i, c in df.items():
                    entries[i * len(basis) + j] = c
            mat = Matrix(len(tgt_basis), len(basis), entries)
            vecs = [
                {i: c for i, c in enumerate(col) if c}
                for col in kernel_basis(mat, self.field)
            ]
            self._cocycle_echelon[m] = vecs
        return self._cocycle_echelon[m]

    def hh_dimension(self, m):
        return self.cohomology(m)[0]

    # -- named bases ---------------------------------------------------------

    def _cycle_power(self, i, t):
        return a_cycle(i, 3 * t)

    def named_basis(self, m):
        """The classical named cochain basis at degree m."""
        n = self.n
        one = self.field.one()
        out = []

        def mk(name, pairs):
            images = {lab: {} for lab in self.res.labels(m)}
            for lab, path in pairs:
                images[lab] = {path: one}
            out.append(Cochain(m, images, name))

        labs = {label_pair(lab): lab for lab in self.res.labels(m)}
        if m % 3 == 0:
            kind = "alpha" if m == 0 else "phi"
            for s in range(3):
                for t in range(n + 1):
                    lab = labs[(f"e{s}", f"e{s}")]
                    mk(CochainName(kind, s, t), [(lab, a_cycle(s, 3 * t))])
            mk(CochainName("beta" if m == 0 else "psi"), [(labs[("f1", "f1")], trivial("f1"))])
        elif m % 3 == 1:
            for i in range(3):
                for t in range(n + 1):
                    lab = labs[(f"e{i}", f"e{(i + 1) % 3}")]
                    mk(CochainName("mu", i, t), [(lab, a_cycle(i, 3 * t + 1))])
            mk(CochainName("nu", 0), [(labs[("e0", "f1")], arrow("b0"))])
            mk(CochainName("nu", 1), [(labs[("f1", "e2")], arrow("b1"))])
        else:
            for i in range(3):
                for t in range(n):
                    lab = labs[(f"e{i}", f"e{(i + 2) % 3}")]
                    mk(CochainName("theta", i, t), [(lab, a_cycle(i, 3 * t + 2))])
            mk(CochainName("eta"), [(labs[("e0", "e2")], a_cycle(0, 3 * n + 2))])
        return out

    def named(self, m, name):
        for c in self.named_basis(m):
            if c.name == name:
                return c
        raise KeyError(f"no named cochain {name} at degree {m}")

    # -- the distinguished classes for the first family member ---------------

    def x_cochain(self):
        """Sum of all degree-0 diagonal projections: the unit cocycle."""
        c = self.zero_cochain(0)
        for nm in self.named_basis(0):
            if nm.name.t in (0, None):
                c = self.add(c, nm)
        return c

    def y_cochain(self):
        h = self.named(1, CochainName("mu", 0, 0))
        return self.add(h, self.named(1, CochainName("nu", 0)))

    def z_cochain(self):
        c = self.named(6, CochainName("phi", 0, 0))
        c = self.add(c, self.named(6, CochainName("phi", 1, 0)))
        c = self.add(c, self.named(6, CochainName("phi", 2, 0)))
        minus = -self.field.one()
        return self.add(c, self.scale(minus, self.named(6, CochainName("psi"))))
