"""One object tying the whole computation together for a chosen
configuration: algebra member, resolution, tensor complex, diagonal
machinery, cochain complex, and products.  Used by the CLI and the
test-suite alike; everything below it is deterministic, so a pipeline
built twice from the same configuration produces identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import get_algebra, oracle_quotient_dim
from .cochains import HochschildComplex
from .diagonal import DiagonalMaps
from .linalg import QQ, PrimeField
from .products import Products
from .resolution import Resolution
from .tensorcx import TensorComplex
from .uniform import UniformPaths


@dataclass
class RunConfig:
    n: int = 0
    field: str = "rationals"  # or "gf:P" with P an odd prime
    max_degree: int = 9
    delta_mode: str = "solved"  # literal | formula | solved
    homotopy: str = "default"  # default | zero
    output: str = "text"  # text | json | markdown
    out_path: str | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.max_degree < 2:
            raise ValueError("max-degree must be >= 2")
        if self.delta_mode not in ("literal", "formula", "solved"):
            raise ValueError(f"unknown delta mode {self.delta_mode!r}")
        if self.homotopy not in ("default", "zero") and not self.homotopy.startswith(
            "file:"
        ):
            raise ValueError(f"unknown homotopy choice {self.homotopy!r}")
        if self.field != "rationals":
            if not self.field.startswith("gf:"):
                raise ValueError("field must be 'rationals' or 'gf:P'")
            PrimeField(int(self.field[3:]))  # validates p odd prime

    def field_object(self):
        if self.field == "rationals":
            return QQ
        return PrimeField(int(self.field[3:]))

    def as_dict(self):
        return {
            "n": self.n,
            "field": self.field,
            "max_degree": self.max_degree,
            "delta_mode": self.delta_mode,
            "homotopy": self.homotopy,
        }


class Pipeline:
    def __init__(self, config):
        self.config = config
        self.algebra = get_algebra(config.n, config.field_object())
        self.resolution = Resolution(self.algebra)
        self.tensor = TensorComplex(self.resolution)
        self.diagonal = DiagonalMaps(self.resolution, self.tensor)
        self.hochschild = HochschildComplex(self.resolution)
        self.products = Products(self.hochschild, self.diagonal)
        self.uniform = UniformPaths(config.n)
        self._families = {}

    def family(self, mode=None):
        mode = mode or self.config.delta_mode
        key = (mode, self.config.max_degree, self.config.homotopy)
        if key not in self._families:
            dm = self.diagonal
            d = self.config.max_degree
            if mode == "literal":
                fam = dm.literal_family(d)
            elif mode == "formula":
                fam = dm.formula_family(self.homotopy_family(), d)
            else:
                fam = dm.solved_family(d, "left")
            self._families[key] = fam
        return self._families[key]

    def homotopy_family(self):
        dm = self.diagonal
        d = self.config.max_degree
        choice = self.config.homotopy
        if choice == "default":
            return dm.default_homotopy(d)
        if choice == "zero":
            return dm.zero_homotopy(d)
        import json

        with open(choice[5:]) as fh:
            return homotopy_from_json(dm, json.load(fh))

    # -- check builders, all emitting {id, kind, degree?, status, ...} rows --

    def algebra_checks(self):
        n = self.config.n
        dim = self.algebra.dim()
        oracle = oracle_quotient_dim(n, 3 * n + 4, self.algebra.field)
        oracle_next = oracle_quotient_dim(n, 3 * n + 5, self.algebra.field)
        ok = dim == 9 * n + 10 == oracle == oracle_next
        return [
            {
                "id": "algebra-dimension",
                "kind": "oracle",
                "status": "pass" if ok else "fail",
                "rewriting_dim": dim,
                "oracle_dim": oracle,
                "oracle_dim_next_length": oracle_next,
            }
        ]

    def resolution_checks(self):
        d = self.config.max_degree
        rows = []
        for r in self.resolution.verify_complex(d):
            rows.append({"id": f"complex-{r['degree']}", "kind": "boundary-squared", **r})
        for r in self.resolution.verify_exactness(d):
            rows.append({"id": f"exactness-{r['degree']}", "kind": "exactness", **r})
        bad = []
        for m in range(1, d + 1):
            bad.extend(self.resolution.minimality_violations(m))
        rows.append(
            {
                "id": "minimality",
                "kind": "minimality",
                "status": "pass" if not bad else "fail",
                **({"witness": str(bad[0])} if bad else {}),
            }
        )
        return rows

    def diagonal_checks(self, mode=None):
        fam = self.family(mode)
        rows = []
        for r in self.diagonal.verify_squares(fam, self.config.max_degree):
            rows.append(
                {
                    "id": f"square-{r['degree']}-{r['generator']}",
                    "kind": r["check"],
                    **r,
                }
            )
        return rows

    def hochschild_tables(self):
        d = self.config.max_degree
        hc = self.hochschild
        dims = [
            {"degree": m, "hom_dim": hc.hom_dim(m), "hh_dim": hc.hh_dimension(m)}
            for m in range(0, d)
        ]
        star_rows = self.products.table_comparison()
        return {"dimensions": dims, "star_table": star_rows}

    def family_json(self, fam):
        """The serialised generator images of a diagonal family."""
        rows = []
        for m in sorted(fam.images):
            for lab in self.resolution.labels(m):
                terms = [
                    {
                        "bidegree": [g1.degree, g2.degree],
                        "g1": str(g1),
                        "g2": str(g2),
                        "left": str(left),
                        "middle": str(mid),
                        "right": str(right),
                        "coeff": str(c),
                    }
                    for (g1, g2, left, mid, right), c in sorted(
                        fam.images[m][lab].items(), key=lambda kv: repr(kv[0])
                    )
                ]
                rows.append({"degree": m, "generator": str(lab), "terms": terms})
        return rows

    def homotopy_json(self, h):
        """Serialise a homotopy family (generator images plus vertex table)."""
        rows = []
        for m in sorted(h.images):
            for lab in self.resolution.labels(m):
                rows.append(
                    {
                        "degree": m,
                        "generator": str(lab),
                        "terms": _terms_json(h.images[m][lab]),
                    }
                )
        star = [
            {"vertex": v, "terms": _terms_json(h.star.get(v, {}))}
            for v in ("e0", "e1", "f1", "e2")
        ]
        return {"images": rows, "star": star}


def _terms_json(elem):
    return [
        {
            "g1": str(g1),
            "g2": str(g2),
            "left": str(left),
            "middle": str(mid),
            "right": str(right),
            "coeff": str(c),
        }
        for (g1, g2, left, mid, right), c in sorted(
            elem.items(), key=lambda kv: repr(kv[0])
        )
    ]


def _terms_from_json(field, terms):
    from fractions import Fraction

    from .quiver import parse_path
    from .uniform import parse_label

    out = {}
    for t in terms:
        key = (
            parse_label(t["g1"]),
            parse_label(t["g2"]),
            parse_path(t["left"]),
            parse_path(t["middle"]),
            parse_path(t["right"]),
        )
        if field is QQ:
            c = Fraction(t["coeff"])
        else:
            c = field.from_int(int(t["coeff"].split()[0]))
        if c:
            out[key] = c
    return out


def homotopy_from_json(diagonal, data):
    """Build a homotopy family from its serialised form."""
    from .diagonal import HomotopyFamily
    from .uniform import parse_label

    field = diagonal.field
    images = {}
    for row in data["images"]:
        m = row["degree"]
        images.setdefault(m, {})[parse_label(row["generator"])] = _terms_from_json(
            field, row["terms"]
        )
    for m, by_label in images.items():
        for lab in diagonal.res.labels(m):
            by_label.setdefault(lab, {})
    star = {
        row["vertex"]: _terms_from_json(field, row["terms"])
        for row in data.get("star", [])
    }
    return HomotopyFamily(diagonal, images, star)
