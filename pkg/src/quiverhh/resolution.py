"""The periodic projective bimodule resolution and its verifiers.

Degree m of the resolution is the free bimodule with one generator per
label of `generator_labels(m)`; an element is a combination of triples
(label g, left path ending at the origin of g, right path starting at
the terminus of g), both paths normal-form basis paths of the algebra.

The boundary map out of degree m is given on generators by one of six
printed shapes selected by m mod 6, with special variants at m = 0 (the
augmentation, which is multiplication) and m = 1 (whose target lacks the
two mixed-pair generators).  The long shapes contain telescoping sums
whose k-th term splits the long cycle word into (left, generator, right)
with the generator absorbing 2, 1 or 0 arrows depending on the residue
of the target degree.  All coefficients are +-1.
"""

from __future__ import annotations

from .linalg import Matrix
from .quiver import a_cycle, arrow, trivial
from .uniform import Label, generator_labels, label_pair


def _r2_label(m, l):
    """Degree-m (m % 3 == 2) label with pair (e_l, e_{l+2})."""
    return {0: Label(m, "R", None), 1: Label(m, "S", None), 2: Label(m, "U", 0)}[l % 3]


def _r1_label(m, l):
    """Degree-m (m % 3 == 1) label with pair (e_l, e_{l+1})."""
    return {0: Label(m, "R", 0), 1: Label(m, "S", None), 2: Label(m, "U", None)}[l % 3]


def _r0_label(m, l):
    """Degree-m (m % 3 == 0, m > 0) label with pair (e_l, e_l)."""
    return {0: Label(m, "R", None), 1: Label(m, "S", 0), 2: Label(m, "U", None)}[l % 3]


def boundary_shape(m, n):
    """Generator images of the boundary out of degree m >= 1.

    Returns {source label: [(left path, target label, right path, sign)]}.
    """
    assert m >= 1
    e0, e1, f1, e2 = (trivial(v) for v in ("e0", "e1", "f1", "e2"))
    a0, a1, a2, b0, b1 = (arrow(t) for t in ("a0", "a1", "a2", "b0", "b1"))
    long0 = a_cycle(0, 3 * n + 1)
    long1 = a_cycle(1, 3 * n + 1)
    long2 = a_cycle(2, 3 * n + 1)
    t = m - 1
    r = m % 6
    L = lambda fam, sub=None: Label(m, fam, sub)
    T = lambda fam, sub=None: Label(t, fam, sub)

    if m == 1:
        return {
            L("R", 0): [(e0, T("R"), a0, 1), (a0, T("S"), e1, -1)],
            L("R", 1): [(e0, T("R"), b0, 1), (b0, T("T"), f1, -1)],
            L("S"): [(e1, T("S"), a1, 1), (a1, T("U"), e2, -1)],
            L("T"): [(f1, T("T"), b1, 1), (b1, T("U"), e2, -1)],
            L("U"): [(e2, T("U"), a2, 1), (a2, T("R"), e0, -1)],
        }

    if r == 1:
        return {
            L("R", 0): [(e0, T("R"), a0, 1), (a0, T("S", 0), e1, -1), (b0, T("T", 0), e1, 1)],
            L("R", 1): [(e0, T("R"), b0, 1), (b0, T("T", 1), f1, 1), (long0, T("S", 1), f1, -1)],
            L("S"): [(e1, T("S", 0), a1, 1), (a1, T("U"), e2, -1), (e1, T("S", 1), b1, -1)],
            L("T"): [(f1, T("T", 1), b1, -1), (b1, T("U"), e2, -1), (f1, T("T", 0), long1, 1)],
            L("U"): [(e2, T("U"), a2, 1), (a2, T("R"), e0, -1)],
        }

    if r == 2:
        terms_R = [(e0, _r1_label(t, 0), long1, 1)]
        for k in range(0, 3 * n):
            terms_R.append((a_cycle(0, k + 1), _r1_label(t, k + 1), a_cycle(k + 2, 3 * n - k), 1))
        terms_R += [(long0, T("S"), e2, 1), (e0, T("R", 1), b1, -1), (b0, T("T"), e2, -1)]

        terms_S = [(e1, _r1_label(t, 1), long2, 1)]
        for k in range(1, 3 * n + 1):
            terms_S.append((a_cycle(1, k), _r1_label(t, k + 1), a_cycle(k + 2, 3 * n + 1 - k), 1))
        terms_S.append((long1, T("U"), e0, 1))

        terms_U0 = [(e2, _r1_label(t, 2), long0, 1)]
        for k in range(2, 3 * n + 2):
            terms_U0.append((a_cycle(2, k - 1), _r1_label(t, k + 1), a_cycle(k + 2, 3 * n + 2 - k), 1))
        terms_U0.append((long2, T("R", 0), e1, 1))

        return {
            L("R"): terms_R,
            L("S"): terms_S,
            L("T"): [(f1, T("T"), a2, 1), (b1, T("U"), e0, 1)],
            L("U", 0): terms_U0,
            L("U", 1): [(e2, T("U"), b0, 1), (a2, T("R", 1), f1, 1)],
        }

    if r == 3:
        return {
            L("R"): [(e0, T("R"), a2, 1), (a0, T("S"), e0, -1), (b0, T("T"), e0, 1)],
            L("S", 0): [(e1, T("S"), a0, 1), (a1, T("U", 0), e1, -1)],
            L("S", 1): [(e1, T("S"), b0, 1), (long1, T("U", 1), f1, -1)],
            L("T", 0): [(f1, T("T"), long0, 1), (b1, T("U", 0), e1, -1)],
            L("T", 1): [(f1, T("T"), b0, 1), (b1, T("U", 1), f1, -1)],
            L("U"): [(e2, T("U", 0), a1, 1), (a2, T("R"), e2, -1), (e2, T("U", 1), b1, -1)],
        }

    if r == 4:
        terms_R0 = [(e0, _r0_label(t, 0), long0, 1)]
        for k in range(0, 3 * n):
            terms_R0.append((a_cycle(0, k + 1), _r0_label(t, k + 1), a_cycle(k + 1, 3 * n - k), 1))
        terms_R0 += [(long0, T("S", 0), e1, 1), (b0, T("T", 0), e1, -1)]

        terms_S = [(e1, _r0_label(t, 1), long1, 1)]
        for k in range(1, 3 * n + 1):
            terms_S.append((a_cycle(1, k), _r0_label(t, k + 1), a_cycle(k + 1, 3 * n + 1 - k), 1))
        terms_S += [(long1, T("U"), e2, 1), (e1, T("S", 1), b1, -1)]

        terms_U = [(e2, _r0_label(t, 2), long2, 1)]
        for k in range(2, 3 * n + 2):
            terms_U.append((a_cycle(2, k - 1), _r0_label(t, k + 1), a_cycle(k + 1, 3 * n + 2 - k), 1))
        terms_U.append((long2, T("R"), e0, 1))

        return {
            L("R", 0): terms_R0,
            L("R", 1): [(e0, T("R"), b0, 1), (b0, T("T", 1), f1, -1), (a0, T("S", 1), f1, 1)],
            L("S"): terms_S,
            L("T"): [(f1, T("T", 1), b1, -1), (b1, T("U"), e2, 1), (f1, T("T", 0), a1, 1)],
            L("U"): terms_U,
        }

    if r == 5:
        return {
            L("R"): [(e0, T("R", 0), a1, 1), (a0, T("S"), e2, -1), (e0, T("R", 1), b1, -1), (b0, T("T"), e2, 1)],
            L("S"): [(e1, T("S"), a2, 1), (a1, T("U"), e0, -1)],
            L("T"): [(f1, T("T"), long2, 1), (b1, T("U"), e0, -1)],
            L("U", 0): [(e2, T("U"), a0, 1), (a2, T("R", 0), e1, -1)],
            L("U", 1): [(e2, T("U"), b0, 1), (long2, T("R", 1), f1, -1)],
        }

    # r == 0, m >= 6
    terms_R = [(e0, T("R"), long2, 1)]
    for k in range(0, 3 * n):
        terms_R.append((a_cycle(0, k + 1), _r2_label(t, k + 1), a_cycle(k, 3 * n - k), 1))
    terms_R += [(long0, T("S"), e0, 1), (b0, T("T"), e0, -1)]

    terms_S0 = [(e1, T("S"), long0, 1)]
    for k in range(1, 3 * n + 1):
        terms_S0.append((a_cycle(1, k), _r2_label(t, k + 1), a_cycle(k, 3 * n + 1 - k), 1))
    terms_S0.append((long1, T("U", 0), e1, 1))

    terms_U = [(e2, T("U", 0), long1, 1)]
    for k in range(2, 3 * n + 2):
        terms_U.append((a_cycle(2, k - 1), _r2_label(t, k + 1), a_cycle(k, 3 * n + 2 - k), 1))
    terms_U += [(long2, T("R"), e2, 1), (e2, T("U", 1), b1, -1)]

    return {
        L("R"): terms_R,
        L("S", 0): terms_S0,
        L("S", 1): [(e1, T("S"), b0, 1), (a1, T("U", 1), f1, 1)],
        L("T", 0): [(f1, T("T"), a0, 1), (b1, T("U", 0), e1, 1)],
        L("T", 1): [(f1, T("T"), b0, 1), (b1, T("U", 1), f1, 1)],
        L("U"): terms_U,
    }


class Resolution:
    """Resolution data bound to one FamilyAlgebra instance."""

    def __init__(self, algebra):
        self.algebra = algebra
        self.n = algebra.n
        self.field = algebra.field
        self._shapes = {}
        self._triples = {}
        self._triple_index = {}
        self._matrices = {}
        self._ranks = {}

    # -- structure -----------------------------------------------------

    def labels(self, m):
        return generator_labels(m)

    def generator(self, label):
        """The basis triple (label, origin, terminus) with coefficient 1."""
        o, t = label_pair(label)
        return {(label, trivial(o), trivial(t)): self.field.one()}

    def shape(self, m):
        if m not in self._shapes:
            sh = boundary_shape(m, self.n)
            for lab, terms in sh.items():
                o, t = label_pair(lab)
                for left, tgt, right, sign in terms:
                    to, tt = label_pair(tgt)
                    assert left.source == o and left.target == to, (lab, tgt)
                    assert right.source == tt and right.target == t, (lab, tgt)
            self._shapes[m] = sh
        return self._shapes[m]

    def triples(self, m):
        """Ordered scalar basis of degree m: (label, left, right) triples."""
        if m not in self._triples:
            alg = self.algebra
            out = []
            for lab in self.labels(m):
                o, t = label_pair(lab)
                for left in alg.paths_into[o]:
                    for right in alg.paths_from[t]:
                        out.append((lab, left, right))
            self._triples[m] = out
            self._triple_index[m] = {tr: i for i, tr in enumerate(out)}
        return self._triples[m]

    def dim(self, m):
        return len(self.triples(m))

    # -- maps ------------------------------------------------------------

    def apply_boundary(self, m, elem):
        """Boundary of a degree-m element (m >= 1), as a degree-(m-1) element."""
        alg = self.algebra
        shape = self.shape(m)
        out = {}
        for (lab, left, right), c in elem.items():
            for x, tgt, y, sign in shape[lab]:
                nl = alg.mul_path(left, x)
                if nl is None:
                    continue
                nr = alg.mul_path(y, right)
                if nr is None:
                    continue
                key = (tgt, nl, nr)
                add = c * sign
                acc = out.get(key)
                acc = add if acc is None else acc + add
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return out

    def augment(self, elem):
        """The degree-0 augmentation: multiply left and right paths."""
        alg = self.algebra
        out = {}
        for (lab, left, right), c in elem.items():
            p = alg.mul_path(left, right)
            if p is None:
                continue
            acc = out.get(p)
            acc = c if acc is None else acc + c
            if acc:
                out[p] = acc
            else:
                out.pop(p, None)
        return out

    def act(self, x, elem, y):
        """Bimodule action: multiply by path x on the left, path y on the right."""
        alg = self.algebra
        out = {}
        for (lab, left, right), c in elem.items():
            nl = alg.mul_path(x, left)
            if nl is None:
                continue
            nr = alg.mul_path(right, y)
            if nr is None:
                continue
            key = (lab, nl, nr)
            acc = out.get(key)
            acc = c if acc is None else acc + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return out

    @staticmethod
    def add(x, y):
        out = dict(x)
        for k, c in y.items():
            acc = out.get(k)
            acc = c if acc is None else acc + c
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
        return out

    @staticmethod
    def scale(c, x):
        if not c:
            return {}
        return {k: c * v for k, v in x.items()}

    def boundary_matrix(self, m):
        """Matrix of the boundary out of degree m; rows follow the target basis.

        At m = 0 the target is the algebra itself (the augmentation).
        """
        if m in self._matrices:
            return self._matrices[m]
        alg = self.algebra
        cols = self.triples(m)
        zero = self.field.zero()
        if m == 0:
            row_index = alg.basis_index
            nrows = len(alg.basis)
            images = (self.augment({tr: self.field.one()}) for tr in cols)
        else:
            self.triples(m - 1)
            row_index = self._triple_index[m - 1]
            nrows = len(row_index)
            images = (self.apply_boundary(m, {tr: self.field.one()}) for tr in cols)
        entries = [zero] * (nrows * len(cols))
        for j, img in enumerate(images):
            for key, c in img.items():
                entries[row_index[key] * len(cols) + j] = c
        mat = Matrix(nrows, len(cols), entries)
        self._matrices[m] = mat
        return mat

    def boundary_rank(self, m):
        if m not in self._ranks:
            from .linalg import rank

            self._ranks[m] = rank(self.boundary_matrix(m))
        return self._ranks[m]

    def matrix_of_map(self, source_degree, images, target_degree=None):
        """Matrix of the bimodule map with the given generator images.

        images maps each source label either to a resolution element (a
        triple dict at target_degree) or, when target_degree is None, to
        an algebra element.  Columns follow the source scalar basis,
        rows the target one.
        """
        cols = self.triples(source_degree)
        zero = self.field.zero()
        if target_degree is None:
            row_index = self.algebra.basis_index
        else:
            self.triples(target_degree)
            row_index = self._triple_index[target_degree]
        entries = [zero] * (len(row_index) * len(cols))
        for j, (lab, left, right) in enumerate(cols):
            img = images[lab]
            if target_degree is None:
                val = {}
                for p, c in img.items():
                    q = self.algebra.mul_path(left, p)
                    if q is None:
                        continue
                    q = self.algebra.mul_path(q, right)
                    if q is None:
                        continue
                    val[q] = val.get(q, zero) + c
                items = val.items()
            else:
                items = self.act(left, img, right).items()
            for key, c in items:
                if c:
                    entries[row_index[key] * len(cols) + j] = c
        return Matrix(len(row_index), len(cols), entries)

    # -- verifiers --------------------------------------------------------

    def verify_complex(self, max_degree):
        """Check boundary-squared = 0 on all generators, degrees 0..max_degree-1.

        Row m covers the composite from degree m+1 through degree m.
        """
        rows = []
        for m in range(0, max_degree):
            witness = None
            for lab in self.labels(m + 1):
                img = self.apply_boundary(m + 1, self.generator(lab))
                if m == 0:
                    comp = self.augment(img)
                else:
                    comp = self.apply_boundary(m, img)
                if comp:
                    witness = str(lab)
                    break
            rows.append(
                {
                    "degree": m,
                    "check": "boundary-squared",
                    "status": "pass" if witness is None else "fail",
                    **({"witness": witness} if witness else {}),
                }
            )
        return rows

    def verify_exactness(self, max_degree):
        """Check dim ker = following rank at degrees 0..max_degree-1."""
        rows = []
        for m in range(0, max_degree):
            kdim = self.dim(m) - self.boundary_rank(m)
            r_next = self.boundary_rank(m + 1)
            ok = kdim == r_next
            rows.append(
                {
                    "degree": m,
                    "check": "exactness",
                    "status": "pass" if ok else "fail",
                    "kernel_dim": kdim,
                    "next_rank": r_next,
                }
            )
        return rows

    def minimality_violations(self, m):
        """Generator-image terms with both decorations trivial (none expected)."""
        bad = []
        for lab, terms in self.shape(m).items():
            for left, tgt, right, sign in terms:
                if left.is_vertex() and right.is_vertex():
                    bad.append((lab, tgt))
        return bad
