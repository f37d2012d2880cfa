"""The algebra family: path algebra of the quiver modulo one ideal per n.

For each n >= 0 the ideal is generated by one binomial and four monomial
relations; the rewriting system orients the binomial so that the detour
word b0*b1 rewrites into the long a-cycle word:

    b0 b1          ->  (a0 a1 a2)^n a0 a1
    (a1 a2 a0)^n a1 a2  ->  0
    (a2 a0 a1)^n a2 a0  ->  0
    b1 a2          ->  0
    a2 b0          ->  0

Every rule either kills a word or strictly lowers the number of b-arrows,
so rewriting terminates, and each path normalises to a single path or to
zero (no coefficients ever appear).  The surviving normal forms are the
monomial basis; its correctness is certified against a length-truncated
row-reduction oracle in the tests rather than by a confluence proof.
"""

from __future__ import annotations

from functools import lru_cache

from .linalg import QQ, PrimeField
from .quiver import (
    VERTICES,
    Path,
    a_cycle,
    compose,
    path_sort_key,
    trivial,
)


def _find_subword(word, sub):
    ls = len(sub)
    if ls == 0 or ls > len(word):
        return -1
    for i in range(len(word) - ls + 1):
        if word[i : i + ls] == sub:
            return i
    return -1


class FamilyAlgebra:
    """Exact arithmetic in the member with index n over a chosen field.

    Elements are plain dicts {normal-form Path: coefficient} with no zero
    coefficients stored.  The instance carries the monomial basis, corner
    decomposition tables, and the rewriting rules.
    """

    def __init__(self, n, field=QQ):
        if n < 0:
            raise ValueError("family index must be >= 0")
        self.n = n
        self.field = field
        self.kill_words = (
            a_cycle(1, 3 * n + 2).arrows,
            a_cycle(2, 3 * n + 2).arrows,
            ("b1", "a2"),
            ("a2", "b0"),
        )
        self.detour = ("b0", "b1")
        self.detour_replacement = a_cycle(0, 3 * n + 2).arrows
        self.basis = self._enumerate_basis()
        self.basis_index = {p: i for i, p in enumerate(self.basis)}
        self.corners = {(u, v): [] for u in VERTICES for v in VERTICES}
        for p in self.basis:
            self.corners[(p.source, p.target)].append(p)
        self.paths_from = {v: [p for p in self.basis if p.source == v] for v in VERTICES}
        self.paths_into = {v: [p for p in self.basis if p.target == v] for v in VERTICES}

    # -- rewriting ---------------------------------------------------

    def reduce_word(self, source, word):
        """Normal form of a path given as (source, arrow word): Path or None."""
        word = tuple(word)
        while True:
            for kw in self.kill_words:
                if _find_subword(word, kw) >= 0:
                    return None
            i = _find_subword(word, self.detour)
            if i < 0:
                return Path(source, word)
            word = word[:i] + self.detour_replacement + word[i + 2 :]

    def normal_form_path(self, p):
        return self.reduce_word(p.source, p.arrows)

    def _enumerate_basis(self):
        # no irreducible path is longer than the detour replacement
        max_len = 3 * self.n + 2
        found = []

        def extend(p):
            found.append(p)
            if len(p.arrows) == max_len:
                return
            for tag, src in (("a0", "e0"), ("a1", "e1"), ("a2", "e2"), ("b0", "e0"), ("b1", "f1")):
                if p.target == src:
                    q = Path(p.source, p.arrows + (tag,))
                    if self.normal_form_path(q) == q:
                        extend(q)

        for v in VERTICES:
            extend(trivial(v))
        found.sort(key=path_sort_key)
        return found

    # -- element arithmetic ------------------------------------------

    def normal_form(self, combo):
        """Reduce a formal {Path: coeff} combination to the basis."""
        out = {}
        for p, c in combo.items():
            if not c:
                continue
            q = self.normal_form_path(p)
            if q is None:
                continue
            acc = out.get(q)
            acc = c if acc is None else acc + c
            if acc:
                out[q] = acc
            else:
                out.pop(q, None)
        return out

    def mul_path(self, p, q):
        """Product of two basis paths: a normal-form Path or None."""
        pq = compose(p, q)
        return None if pq is None else self.normal_form_path(pq)

    def mul(self, x, y):
        out = {}
        for p, c in x.items():
            for q, d in y.items():
                r = self.mul_path(p, q)
                if r is None:
                    continue
                cd = c * d
                acc = out.get(r)
                acc = cd if acc is None else acc + cd
                if acc:
                    out[r] = acc
                else:
                    out.pop(r, None)
        return out

    def add(self, x, y):
        out = dict(x)
        for p, c in y.items():
            acc = out.get(p)
            acc = c if acc is None else acc + c
            if acc:
                out[p] = acc
            else:
                out.pop(p, None)
        return out

    def scale(self, c, x):
        if not c:
            return {}
        return {p: c * v for p, v in x.items()}

    def unit(self):
        one = self.field.one()
        return {trivial(v): one for v in VERTICES}

    def vertex_elem(self, v):
        return {trivial(v): self.field.one()}

    def from_path(self, p, coeff=None):
        q = self.normal_form_path(p)
        if q is None:
            return {}
        return {q: self.field.one() if coeff is None else coeff}

    def dim(self):
        return len(self.basis)

    def corner_dim(self, u, v):
        return len(self.corners[(u, v)])

    # -- printing ----------------------------------------------------

    def format_element(self, x):
        if not x:
            return "0"
        parts = []
        for p in sorted(x, key=path_sort_key):
            c = x[p]
            txt = str(p)
            if c == 1:
                term = txt
            elif c == -1:
                term = f"−{txt}"
            else:
                cs = str(c).replace("-", "−")
                term = f"{cs}·{txt}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("−"):
                out += " − " + term[1:]
            else:
                out += " + " + term
        return out


@lru_cache(maxsize=None)
def _algebra_cached(n, field_key):
    if field_key == "QQ":
        return FamilyAlgebra(n, QQ)
    return FamilyAlgebra(n, PrimeField(int(field_key)))


def get_algebra(n, field=QQ):
    """Shared, immutable algebra instances (safe: nothing mutates them)."""
    key = "QQ" if field is QQ or getattr(field, "name", "") == "QQ" else str(field.p)
    return _algebra_cached(n, key)


class SparseEchelon:
    """Incremental echelon form of sparse vectors over a field.

    Vectors are dicts {index: coeff}.  `add` reduces the vector against
    the rows stored so far and, if a residual survives, stores it keyed
    by its leading index (smallest index, normalised to 1).
    """

    def __init__(self):
        self.rows = {}

    def reduce(self, vec):
        vec = dict(vec)
        while vec:
            lead = min(vec)
            row = self.rows.get(lead)
            if row is None:
                return vec
            f = vec[lead]
            for j, c in row.items():
                acc = vec.get(j)
                acc = -f * c if acc is None else acc - f * c
                if acc:
                    vec[j] = acc
                else:
                    vec.pop(j, None)
        return vec

    def add(self, vec):
        """Insert vec's residual; returns the new pivot index or None."""
        res = self.reduce(vec)
        if not res:
            return None
        lead = min(res)
        inv = 1 / res[lead]
        self.rows[lead] = {j: c * inv for j, c in res.items()}
        return lead

    @property
    def rank(self):
        return len(self.rows)


def ideal_relations(n):
    """The five generators of the ideal, as formal path combinations."""
    r_binom = {a_cycle(0, 3 * n + 2): 1, Path("e0", ("b0", "b1")): -1}
    return [
        r_binom,
        {a_cycle(1, 3 * n + 2): 1},
        {a_cycle(2, 3 * n + 2): 1},
        {Path("f1", ("b1", "a2")): 1},
        {Path("e2", ("a2", "b0")): 1},
    ]


def all_paths_up_to(length):
    """Every path in the quiver of length <= `length`, sorted."""
    out = []

    def extend(p):
        out.append(p)
        if len(p.arrows) == length:
            return
        for tag, src in (("a0", "e0"), ("a1", "e1"), ("a2", "e2"), ("b0", "e0"), ("b1", "f1")):
            if p.target == src:
                extend(Path(p.source, p.arrows + (tag,)))

    for v in VERTICES:
        extend(trivial(v))
    out.sort(key=path_sort_key)
    return out


def truncated_ideal_echelon(n, length, field=QQ):
    """Row reduce the span of u*r*v inside paths of length <= `length`.

    Independent of the rewriting system: works with raw paths in the free
    path algebra.  Returns (ambient paths, echelon of the ideal span).
    A product u*r*v is included only when all of its monomials fit the
    length bound.
    """
    paths = all_paths_up_to(length)
    index = {p: i for i, p in enumerate(paths)}
    ech = SparseEchelon()
    one = field.one()
    for rel in ideal_relations(n):
        monos = list(rel.items())
        max_mono = max(len(m.arrows) for m, _ in monos)
        src = monos[0][0].source
        tgt = monos[0][0].target
        for u in paths:
            if u.target != src:
                continue
            if len(u.arrows) + max_mono > length:
                continue
            for v in paths:
                if v.source != tgt:
                    continue
                if len(u.arrows) + max_mono + len(v.arrows) > length:
                    continue
                vec = {}
                for m, c in monos:
                    w = compose(compose(u, m), v)
                    vec[index[w]] = one * c
                ech.add(vec)
    return paths, ech


def oracle_quotient_dim(n, length, field=QQ):
    """dim of (paths of length <= `length`) / (truncated ideal span)."""
    paths, ech = truncated_ideal_echelon(n, length, field)
    return len(paths) - ech.rank
