"""The total complex of the resolution tensored with itself over the algebra.

A scalar basis element in total degree a+b is a quintuple

    (g1, g2, left, mid, right)

with g1 of degree a, g2 of degree b, `left` a basis path ending at the
origin of g1, `mid` a basis path from the terminus of g1 to the origin
of g2, and `right` a basis path starting at the terminus of g2.  The
middle slot is the canonical home for everything between the two
generators; a pure tensor of two generators is zero unless the inner
vertices match.  Tensor elements are dicts {quintuple: coefficient}.

The total differential applies the boundary on either factor, with the
sign (-1)^a on the second factor, and drops the augmentation (factors of
degree 0 contribute nothing from their own boundary).
"""

from __future__ import annotations

from .uniform import label_pair


class TensorComplex:
    def __init__(self, resolution):
        self.res = resolution
        self.algebra = resolution.algebra
        self.field = resolution.field

    # -- construction ---------------------------------------------------

    def tensor(self, elem_a, elem_b):
        """Normalised tensor of two resolution elements (any decorations).

        The right decoration of the first factor and the left decoration
        of the second multiply into the middle slot; terms whose middle
        product vanishes are dropped.
        """
        alg = self.algebra
        out = {}
        for (g1, l1, r1), c1 in elem_a.items():
            for (g2, l2, r2), c2 in elem_b.items():
                mid = alg.mul_path(r1, l2)
                if mid is None:
                    continue
                key = (g1, g2, l1, mid, r2)
                c = c1 * c2
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

    def act(self, x, elem, y):
        """Outer bimodule action by paths: x on the left slot, y on the right."""
        alg = self.algebra
        out = {}
        for (g1, g2, left, mid, right), c in elem.items():
            nl = alg.mul_path(x, left)
            if nl is None:
                continue
            nr = alg.mul_path(right, y)
            if nr is None:
                continue
            key = (g1, g2, nl, mid, nr)
            acc = out.get(key)
            acc = c if acc is None else acc + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return out

    # -- differential -----------------------------------------------------

    def differential(self, elem):
        alg = self.algebra
        res = self.res
        out = {}

        def put(key, c):
            acc = out.get(key)
            acc = c if acc is None else acc + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)

        minus_one = -self.field.one()
        for (g1, g2, left, mid, right), c in elem.items():
            a = g1.degree
            if a >= 1:
                for x, tgt, y, sign in res.shape(a)[g1]:
                    nl = alg.mul_path(left, x)
                    if nl is None:
                        continue
                    nm = alg.mul_path(y, mid)
                    if nm is None:
                        continue
                    put((tgt, g2, nl, nm, right), c * sign)
            if g2.degree >= 1:
                sgn = c if a % 2 == 0 else c * minus_one
                for x, tgt, y, sign in res.shape(g2.degree)[g2]:
                    nm = alg.mul_path(mid, x)
                    if nm is None:
                        continue
                    nr = alg.mul_path(y, right)
                    if nr is None:
                        continue
                    put((g1, tgt, left, nm, nr), sgn * sign)
        return out

    # -- bases ------------------------------------------------------------

    def triples(self, m):
        """Ordered scalar basis of total degree m."""
        alg = self.algebra
        out = []
        for a in range(m + 1):
            b = m - a
            for g1 in self.res.labels(a):
                o1, t1 = label_pair(g1)
                for g2 in self.res.labels(b):
                    o2, t2 = label_pair(g2)
                    mids = alg.corners[(t1, o2)]
                    if not mids:
                        continue
                    for left in alg.paths_into[o1]:
                        for mid in mids:
                            for right in alg.paths_from[t2]:
                                out.append((g1, g2, left, mid, right))
        return out

    def dim_formula(self, m):
        alg = self.algebra
        total = 0
        for a in range(m + 1):
            b = m - a
            for g1 in self.res.labels(a):
                o1, t1 = label_pair(g1)
                for g2 in self.res.labels(b):
                    o2, t2 = label_pair(g2)
                    total += (
                        len(alg.paths_into[o1])
                        * alg.corner_dim(t1, o2)
                        * len(alg.paths_from[t2])
                    )
        return total

    def augment(self, elem):
        """Apply the augmentation on both factors and multiply out."""
        alg = self.algebra
        out = {}
        for (g1, g2, left, mid, right), c in elem.items():
            p = alg.mul_path(left, mid)
            if p is None:
                continue
            p = alg.mul_path(p, right)
            if p is None:
                continue
            acc = out.get(p)
            acc = c if acc is None else acc + c
            if acc:
                out[p] = acc
            else:
                out.pop(p, None)
        return out
