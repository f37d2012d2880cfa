"""Chain-level products on cochains: the published multiplication table,
the product computed through the literal two-corner diagonal, and the
cup product computed through any verified diagonal family.

All computed products use one evaluation rule: on a generator u, sum
over the components of the diagonal's image of u whose bidegree matches
the factors' degrees, reading each quintuple left to right:

    left . f(first generator) . middle . g(second generator) . right

multiplied out in the algebra.  The literal diagonal has components only
in the two outer bidegrees, so products of two positive-degree cochains
vanish under it; that is deviation KD-2.  Its doubled degree-0 diagonal
makes products of two degree-0 cochains come out twice the published
table entry; that is deviation KD-1.
"""

from __future__ import annotations

from .cochains import Cochain, CochainName


class UnsupportedRightFactor(ValueError):
    """The published table only covers right factors of diagonal type."""


def star_table(f_name, g_name, n):
    """The published table entry for f * g, as (CochainName | None).

    None encodes the zero product.  Right factors outside the alpha /
    phi / beta / psi families raise UnsupportedRightFactor (the source
    defers those products to graded commutativity).
    """
    fk, gk = f_name.kind, g_name.kind
    if gk == "alpha" or gk == "phi":
        s, t2 = g_name.i, g_name.t
        if fk in ("alpha", "phi", "mu", "theta"):
            if f_name.i != s:
                return None
            t = f_name.t + t2
            bound = n - 1 if fk == "theta" else n
            return CochainName(fk, f_name.i, t) if t <= bound else None
        if fk == "nu" and f_name.i == 1:
            # published condition: right factor at the shared vertex, t' = 0
            return f_name if (s == 2 and t2 == 0) else None
        if fk == "eta":
            return f_name if s == 2 else None
        return None
    if gk == "beta":
        return f_name if fk in ("beta", "psi") or (fk == "nu" and f_name.i == 0) else None
    if gk == "psi":
        return f_name if fk == "psi" or (fk == "nu" and f_name.i == 0) else None
    raise UnsupportedRightFactor(f"no table column for right factor {g_name}")


class Products:
    def __init__(self, hochschild, diagonal):
        self.hc = hochschild
        self.dm = diagonal
        self.alg = hochschild.alg
        self.field = hochschild.field

    # -- evaluation through a diagonal --------------------------------------

    def _product_on(self, image_of, f, g):
        """(f, g) paired against a diagonal image table at degree deg f + deg g."""
        m = f.degree + g.degree
        alg = self.alg
        images = {}
        for lab in self.hc.res.labels(m):
            val = {}
            for (g1, g2, left, mid, right), c in image_of(lab).items():
                if g1.degree != f.degree or g2.degree != g.degree:
                    continue
                fv = f.images.get(g1)
                gv = g.images.get(g2)
                if not fv or not gv:
                    continue
                for p1, c1 in fv.items():
                    q = alg.mul_path(left, p1)
                    if q is None:
                        continue
                    q = alg.mul_path(q, mid)
                    if q is None:
                        continue
                    for p2, c2 in gv.items():
                        r = alg.mul_path(q, p2)
                        if r is None:
                            continue
                        r = alg.mul_path(r, right)
                        if r is None:
                            continue
                        coeff = c * c1 * c2
                        acc = val.get(r)
                        acc = coeff if acc is None else acc + coeff
                        if acc:
                            val[r] = acc
                        else:
                            val.pop(r, None)
            images[lab] = val
        return Cochain(m, images)

    def star(self, f, g):
        """Product through the literal two-corner diagonal."""
        return self._product_on(self.dm.delta_prime_image, f, g)

    def cup(self, f, g, family):
        """Product through a diagonal family verified at the needed degree."""
        m = f.degree + g.degree
        if not family.verified.get(m, False):
            rows = self.dm.verify_square(family, m)
            if any(r["status"] != "pass" for r in rows):
                raise ValueError(f"diagonal family not a chain map at degree {m}")
        return self._product_on(family.image, f, g)

    # -- named output --------------------------------------------------------

    def match_named(self, cochain):
        """Express a cochain in the named basis; None when it is not a
        single named element or a scalar multiple of one."""
        if cochain.is_zero():
            return None, None
        for named in self.hc.named_basis(cochain.degree):
            if cochain == named:
                return named.name, 1
            for (lab, p) in [
                (lab, p) for lab, v in named.images.items() for p in v
            ]:
                c = cochain.images.get(lab, {}).get(p)
                if c:
                    scaled = self.hc.scale(c, named)
                    if cochain == scaled:
                        return named.name, c
        return None, None

    def star_named(self, f_name, f_deg, g_name, g_deg):
        f = self.hc.named(f_deg, f_name)
        g = self.hc.named(g_deg, g_name)
        return self.star(f, g)

    def table_comparison(self, degrees=(0, 3, 1, 2)):
        """Computed two-corner products versus the published table.

        Right factors run over the degree-0 names; left factors over the
        named bases at the given degrees.  Each row records the computed
        value, the published value, and a match / deviation verdict.
        """
        rows = []
        n = self.hc.n
        right = self.hc.named_basis(0)
        for d in degrees:
            for f in self.hc.named_basis(d):
                for g in right:
                    want = star_table(f.name, g.name, n)
                    got = self.star(f, g)
                    got_name, got_coeff = self.match_named(got)
                    if want is None:
                        match = got.is_zero()
                        want_str = "0"
                    else:
                        match = got_name == want and got_coeff == 1
                        want_str = str(want)
                    if got.is_zero():
                        got_str = "0"
                    elif got_name is not None:
                        got_str = (
                            str(got_name)
                            if got_coeff == 1
                            else f"{got_coeff}*{got_name}"
                        )
                    else:
                        got_str = "<unnamed>"
                    rows.append(
                        {
                            "left": str(f.name),
                            "left_degree": d,
                            "right": str(g.name),
                            "table": want_str,
                            "computed": got_str,
                            "status": "match" if match else "deviation",
                        }
                    )
        return rows
