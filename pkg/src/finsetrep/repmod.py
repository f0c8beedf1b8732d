"""Truncated matrix representations of the finite-set categories.

A :class:`CatModule` is a functor from one of Delta, N, F, FI to
finite-dimensional rational vector spaces, truncated at a level ``max_level``
and evaluated as exact matrices.  Two backends exist:

* a *rule* backend computes the (sparse) columns of the acting matrix of any
  morphism directly;
* an *elementary* backend stores explicit matrices for the elementary
  morphisms between consecutive levels -- cofaces, codegeneracies and
  adjacent transpositions -- and evaluates arbitrary morphisms through the
  canonical factorization of :func:`finsetrep.catcore.factorize`.

Well-definedness of an elementary backend is never assumed: it is certified
by :func:`check_functoriality`, which tests the functor laws on composable
pairs (exhaustively whenever that is cheap enough, otherwise on a seeded
random sample).

Module file format (versioned header ``catmod/1``): category tag, truncation
level, dimension line, then one labeled matrix block per elementary morphism
in a fixed order.  Round-trips are bit-exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import catcore
from .catcore import (
    DELTA, F, FI, N, CategoryTag, DeltaMor, NMor, ParseError, SetMap,
    category_tag, coface_map, codegen_map, compose_in, enumerate_hom,
    factorize, forget, hom_count, identity_delta, identity_map, identity_n,
    injection_chain, lift, permutation_chain, random_mor, surjection_chain,
    transposition_map,
)
from .exactla import ONE, ZERO, Matrix, format_matrix, parse_matrix, reduce

_ONE_COL = (0, ONE)


class FunctorialityError(ValueError):
    """A backend failed the functor laws or produced inconsistent data."""


class CatModule:
    """A truncated matrix-valued functor on one of the four categories.

    ``dims[n]`` is the dimension of the value at ``[n]`` for every level
    ``0..max_level``; Delta modules have no level 0 and carry ``dims[0] == 0``
    by convention.  Instances are immutable; all evaluation is pure.
    """

    __slots__ = ("category", "max_level", "dims", "name", "_rule", "_elementary")

    def __init__(self, category, max_level, dims, *, columns=None, elementary=None, name=""):
        if not isinstance(category, CategoryTag):
            raise ValueError("category must be a CategoryTag")
        if max_level < 1:
            raise ValueError("max_level must be at least 1")
        dims = tuple(int(d) for d in dims)
        if len(dims) != max_level + 1:
            raise ValueError("dims must list levels 0..max_level")
        if any(d < 0 for d in dims):
            raise ValueError("dimensions are nonnegative")
        if category is DELTA and dims[0] != 0:
            raise ValueError("Delta modules carry dims[0] == 0")
        if (columns is None) == (elementary is None):
            raise ValueError("exactly one backend (columns rule or elementary matrices) is required")
        self.category = category
        self.max_level = max_level
        self.dims = dims
        self.name = name
        self._rule = columns
        self._elementary = elementary

    @property
    def levels(self):
        return range(1 if self.category is DELTA else 0, self.max_level + 1)

    def __repr__(self):
        return "CatModule(%s, max_level=%d, dims=%r, name=%r)" % (
            self.category, self.max_level, self.dims, self.name)

    # -- morphism admission ------------------------------------------------

    def _coerce(self, f):
        cat = self.category
        if cat is N:
            if not isinstance(f, NMor):
                raise ValueError("%s expects N-morphisms, got %r" % (self, f))
        elif cat is DELTA:
            if not isinstance(f, DeltaMor):
                raise ValueError("%s expects Delta morphisms, got %r" % (self, f))
        else:
            if not isinstance(f, SetMap):
                raise ValueError("%s expects set maps, got %r" % (self, f))
            if cat is FI and not f.is_injective():
                raise ValueError("FI morphisms are injective: %r" % (f,))
        if f.dom > self.max_level or f.cod > self.max_level:
            raise ValueError("morphism endpoints [%d]->[%d] exceed truncation %d"
                             % (f.dom, f.cod, self.max_level))
        return f

    # -- evaluation ---------------------------------------------------------

    def columns(self, f):
        """Sparse columns of the acting matrix: for each basis vector of the
        source, a tuple of ``(row, coeff)`` pairs sorted by row."""
        f = self._coerce(f)
        if self._rule is not None:
            return _normalize_columns(self._rule(f), self.dims[f.cod])
        return _dense_to_columns(self._act_elementary(f))

    def act(self, f):
        """Dense acting matrix, of shape ``dims[cod] x dims[dom]``."""
        f = self._coerce(f)
        if self._elementary is not None:
            return self._act_elementary(f)
        cols = _normalize_columns(self._rule(f), self.dims[f.cod])
        grid = [[ZERO] * self.dims[f.dom] for _ in range(self.dims[f.cod])]
        for j, col in enumerate(cols):
            for r, c in col:
                grid[r][j] = c
        return Matrix(self.dims[f.cod], self.dims[f.dom], grid)

    def _elementary_matrix(self, key):
        try:
            return self._elementary[key]
        except KeyError:
            raise FunctorialityError("missing elementary matrix %r" % (key,)) from None

    def _chain_product(self, keys, source_level):
        out = Matrix.identity(self.dims[source_level])
        for kind, n, i in reversed(keys):
            out = self._elementary_matrix((kind, n, i)) * out
        return out

    def _act_elementary(self, f):
        cat = self.category
        if cat is DELTA:
            sm = f.map
            image = sorted(set(sm.values))
            surj = SetMap._raw(sm.dom, len(image),
                               tuple(image.index(v) + 1 for v in sm.values))
            inj = SetMap._raw(len(image), sm.cod, tuple(image))
            keys = tuple(("coface", n, i) for n, i in injection_chain(inj)) + \
                tuple(("codegen", n, i) for n, i in surjection_chain(surj))
            return self._chain_product(keys, sm.dom)
        if cat is N:
            nm = f
        elif cat is FI:
            nm = lift(f, "injection")
        else:
            nm = lift(f, "canonical")
        sigma, pi, iota = factorize(nm)
        keys = tuple(("coface", n, i) for n, i in injection_chain(iota.map)) + \
            tuple(("codegen", n, i) for n, i in surjection_chain(pi.map)) + \
            tuple(("transp", n, i) for n, i in permutation_chain(sigma.map.values))
        return self._chain_product(keys, f.dom)


def _normalize_columns(cols, nrows):
    out = []
    for col in cols:
        clean = tuple(sorted((r, c if type(c) is Fraction else Fraction(c))
                             for r, c in col if c))
        if any(not 0 <= r < nrows for r, _ in clean):
            raise ValueError("column entry out of range")
        out.append(clean)
    return tuple(out)


def _dense_to_columns(mat):
    cols = [[] for _ in range(mat.cols)]
    for r, row in enumerate(mat.data):
        for j, x in enumerate(row):
            if x:
                cols[j].append((r, x))
    return tuple(tuple(col) for col in cols)


def compose_columns(gcols, fcols):
    """Sparse columns of ``g`` applied after the columns of ``f``."""
    out = []
    for col in fcols:
        acc = {}
        for r, c in col:
            for r2, c2 in gcols[r]:
                acc[r2] = acc.get(r2, ZERO) + c * c2
        out.append(tuple(sorted((r, c) for r, c in acc.items() if c)))
    return tuple(out)


def identity_columns(dim):
    return tuple(((j, ONE),) for j in range(dim))


def _identity_mor(cat, n):
    if cat is N:
        return identity_n(n)
    if cat is DELTA:
        return identity_delta(n)
    return identity_map(n)


def permutation_action(V, values):
    """Columns of ``V`` acting on the bijection with one-line form ``values``."""
    n = len(values)
    sm = SetMap(n, n, values)
    if not sm.is_bijective():
        raise ValueError("not a bijection: %r" % (values,))
    if V.category is N:
        return V.columns(lift(sm, "injection"))
    if V.category is DELTA:
        raise ValueError("Delta has no nontrivial bijections to act with")
    return V.columns(sm)


# ---------------------------------------------------------------------------
# functor-law certification

@dataclass(frozen=True)
class FunctorialityReport:
    passed: bool
    pairs_checked: int
    exhaustive: bool
    counterexample: tuple | None   # ("identity", n) or (f, g)

    def __str__(self):
        if self.passed:
            return "functoriality ok (%d pairs, %s)" % (
                self.pairs_checked, "exhaustive" if self.exhaustive else "sampled")
        return "functoriality FAILED after %d pairs: %r" % (self.pairs_checked, self.counterexample)


def check_functoriality(V, trials=500, seed=0):
    """Certify the functor laws on ``V``.

    Checks ``act(id) = id`` at every level, then ``act(g o f) = act(g) act(f)``
    on composable pairs: exhaustively when the total number of pairs within
    the truncation is at most ``trials``, else on ``trials`` pairs drawn from
    a ``random.Random(seed)``.  Deterministic given ``seed``.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    cat = V.category
    levels = list(V.levels)
    for n in levels:
        if V.columns(_identity_mor(cat, n)) != identity_columns(V.dims[n]):
            return FunctorialityReport(False, 0, False, ("identity", n))

    def pair_count():
        total = 0
        for a in levels:
            for b in levels:
                hab = hom_count(cat, a, b)
                if not hab:
                    continue
                for c in levels:
                    total += hab * hom_count(cat, b, c)
                    if total > trials:
                        return total
        return total

    total = pair_count()
    checked = 0
    cache = {}

    def cols(m):
        got = cache.get(m)
        if got is None:
            got = cache[m] = V.columns(m)
        return got

    def check_pair(f, g):
        return cols(compose_in(cat, g, f)) == compose_columns(cols(g), cols(f))

    if total <= trials:
        for a in levels:
            for b in levels:
                homs_ab = enumerate_hom(cat, a, b)
                if not homs_ab:
                    continue
                for c in levels:
                    for g in enumerate_hom(cat, b, c):
                        gc = cols(g)
                        for f in homs_ab:
                            checked += 1
                            if cols(compose_in(cat, g, f)) != compose_columns(gc, cols(f)):
                                return FunctorialityReport(False, checked, True, (f, g))
        return FunctorialityReport(True, checked, True, None)

    rng = random.Random(seed)
    while checked < trials:
        a, b, c = (rng.choice(levels) for _ in range(3))
        if hom_count(cat, a, b) == 0 or hom_count(cat, b, c) == 0:
            continue
        f = random_mor(cat, a, b, rng)
        g = random_mor(cat, b, c, rng)
        checked += 1
        if not check_pair(f, g):
            return FunctorialityReport(False, checked, False, (f, g))
    return FunctorialityReport(True, checked, False, None)


# ---------------------------------------------------------------------------
# restriction along psi (Delta -> N) and phi (N -> F)

def restrict(V, along):
    """Restrict a module along one of the canonical functors.

    ``along="psi"`` turns an N-module into a Delta module by acting through
    increasing-fiber lifts of monotone maps; ``along="phi"`` turns an
    F-module into an N-module by forgetting fiber orders.
    """
    if along == "psi":
        if V.category is not N:
            raise ValueError("psi restriction applies to N-modules")
        dims = (0,) + V.dims[1:]
        return CatModule(
            DELTA, V.max_level, dims,
            columns=lambda d: V.columns(lift(d, "delta")),
            name="%s|Delta" % (V.name or "V"),
        )
    if along == "phi":
        if V.category is not F:
            raise ValueError("phi restriction applies to F-modules")
        return CatModule(
            N, V.max_level, V.dims,
            columns=lambda f: V.columns(forget(f)),
            name="%s|N" % (V.name or "V"),
        )
    raise ValueError("unknown restriction %r" % (along,))


# ---------------------------------------------------------------------------
# direct sums

def direct_sum(V, W):
    if V.category is not W.category or V.max_level != W.max_level:
        raise ValueError("direct summands must share category and truncation")
    dims = tuple(a + b for a, b in zip(V.dims, W.dims))

    def columns(f):
        shift = V.dims[f.cod]
        vcols = V.columns(f)
        wcols = tuple(tuple((r + shift, c) for r, c in col) for col in W.columns(f))
        return vcols + wcols

    return CatModule(V.category, V.max_level, dims, columns=columns,
                     name="%s+%s" % (V.name or "V", W.name or "W"))


# ---------------------------------------------------------------------------
# generation degree

@dataclass(frozen=True)
class GenerationCertificate:
    """Witness that all levels are spanned by images of vectors from levels
    at most ``degree``; ``degree is None`` when even the full truncation does
    not span (truncation too small to certify)."""
    degree: int | None
    spanned: bool
    witnesses: dict

    def __str__(self):
        if self.spanned:
            return "generated in degree %d" % self.degree
        return "not generated within truncation"


def _spans_from(V, g):
    witnesses = {}
    for n in V.levels:
        if V.dims[n] == 0:
            witnesses[n] = ()
            continue
        if n <= g:
            ident = catcore.format_mor(_identity_mor(V.category, n))
            witnesses[n] = tuple((ident, j) for j in range(V.dims[n]))
            continue
        rows = []          # collected column vectors, as rows for rank work
        provenance = []
        for j in range(1 if V.category is DELTA else 0, g + 1):
            if V.dims[j] == 0:
                continue
            for f in enumerate_hom(V.category, j, n):
                for idx, col in enumerate(V.columns(f)):
                    if col:
                        vec = [ZERO] * V.dims[n]
                        for r, c in col:
                            vec[r] = c
                        rows.append(vec)
                        provenance.append((catcore.format_mor(f), idx))
        if not rows:
            return None
        stacked = Matrix.from_rows(rows, V.dims[n])
        rref, rk, pivots = reduce(stacked.transpose())
        if rk < V.dims[n]:
            return None
        witnesses[n] = tuple(provenance[p - 1] for p in pivots)
    return witnesses


def generation_degree(V):
    """Smallest ``g`` such that every level is spanned by images of vectors
    living in levels at most ``g``; reports failure (never raises) when the
    truncation cannot certify any ``g``."""
    for g in V.levels:
        witnesses = _spans_from(V, g)
        if witnesses is not None:
            return GenerationCertificate(g, True, witnesses)
    return GenerationCertificate(None, False, {})


# ---------------------------------------------------------------------------
# elementary backends and the catmod/1 file format

def elementary_keys(category, max_level):
    """All elementary-morphism labels for the category, in file order."""
    lo = 1 if category is DELTA else 0
    keys = []
    for n in range(lo, max_level):
        for i in range(1, n + 2):
            keys.append(("coface", n, i))
    if category is not FI:
        for n in range(max(lo, 1), max_level):
            for i in range(1, n + 1):
                keys.append(("codegen", n, i))
    if category is not DELTA:
        for n in range(2, max_level + 1):
            for i in range(1, n):
                keys.append(("transp", n, i))
    return tuple(keys)


def elementary_morphism(category, key):
    kind, n, i = key
    if kind == "coface":
        sm = coface_map(n, i)
    elif kind == "codegen":
        sm = codegen_map(n, i)
    elif kind == "transp":
        sm = transposition_map(n, i)
    else:
        raise ValueError("unknown elementary kind %r" % (kind,))
    if category is DELTA:
        return DeltaMor(sm)
    if category is N:
        return lift(sm, "injection" if kind in ("coface", "transp") else "delta")
    return sm


def elementary_shape(dims, key):
    kind, n, i = key
    if kind == "coface":
        return dims[n + 1], dims[n]
    if kind == "codegen":
        return dims[n], dims[n + 1]
    return dims[n], dims[n]


def to_elementary(V):
    """Evaluate ``V`` on every elementary morphism; the resulting dict backs
    an equivalent elementary module and the catmod/1 file form."""
    return {
        key: V.act(elementary_morphism(V.category, key))
        for key in elementary_keys(V.category, V.max_level)
    }


def from_elementary(category, max_level, dims, matrices, name=""):
    """Build an elementary-backed module; shapes are validated here, the
    functor laws are certified separately by :func:`check_functoriality`."""
    expected = elementary_keys(category, max_level)
    if set(matrices) != set(expected):
        raise ValueError("elementary matrix set does not match the category/truncation")
    dims = tuple(dims)
    for key in expected:
        shape = elementary_shape(dims, key)
        if matrices[key].shape != shape:
            raise ValueError("matrix %r has shape %r, expected %r"
                             % (key, matrices[key].shape, shape))
    return CatModule(category, max_level, dims, elementary=dict(matrices), name=name)


def write_module(V):
    """Serialize to the catmod/1 text form (converts rule backends)."""
    mats = V._elementary if V._elementary is not None else to_elementary(V)
    lines = [
        "catmod/1",
        "category %s" % V.category,
        "max_level %d" % V.max_level,
        "dims %s" % " ".join(str(d) for d in V.dims),
    ]
    for key in elementary_keys(V.category, V.max_level):
        lines.append("%s %d %d" % key)
        text = format_matrix(mats[key])
        if mats[key].rows:
            lines.append(text)
    return "\n".join(lines) + "\n"


def read_module(text, name=""):
    lines = text.splitlines()
    pos = 0

    def take(what):
        nonlocal pos
        if pos >= len(lines):
            raise ParseError("unexpected end of module file (expected %s)" % what, pos)
        line = lines[pos]
        pos += 1
        return line

    if take("header") != "catmod/1":
        raise ParseError("not a catmod/1 file", 0)
    cat_line = take("category line").split()
    if len(cat_line) != 2 or cat_line[0] != "category":
        raise ParseError("bad category line", pos)
    category = category_tag(cat_line[1])
    lvl_line = take("max_level line").split()
    if len(lvl_line) != 2 or lvl_line[0] != "max_level":
        raise ParseError("bad max_level line", pos)
    max_level = int(lvl_line[1])
    dims_line = take("dims line").split()
    if not dims_line or dims_line[0] != "dims":
        raise ParseError("bad dims line", pos)
    dims = tuple(int(x) for x in dims_line[1:])
    if len(dims) != max_level + 1:
        raise ParseError("dims line must list levels 0..max_level", pos)
    matrices = {}
    for key in elementary_keys(category, max_level):
        header = take("matrix header").split()
        if len(header) != 3 or (header[0], int(header[1]), int(header[2])) != key:
            raise ParseError("expected matrix block %r, got %r" % (key, " ".join(header)), pos)
        rows, cols = elementary_shape(dims, key)
        block = [take("matrix row") for _ in range(rows)]
        try:
            matrices[key] = parse_matrix(block, rows, cols)
        except ValueError as e:
            raise ParseError("block %r: %s" % (key, e), pos) from None
    if pos != len(lines) and any(line.strip() for line in lines[pos:]):
        raise ParseError("trailing content after module blocks", pos)
    return from_elementary(category, max_level, dims, matrices, name=name)
