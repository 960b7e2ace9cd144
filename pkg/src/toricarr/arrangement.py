"""Toric arrangements, their layers, and fibration chains.

An arrangement lives in the torus (C^*)^d.  A hypersurface is a connected
component of {t^chi = e^(2 pi i r)}; it is stored by a primitive character
chi0 (first nonzero entry positive) and a rational value in [0,1) standing
for the root of unity e^(2 pi i value).

A layer is a connected component of an intersection of hypersurfaces.  It is
stored canonically by the saturated lattice of characters vanishing on it
(HNF basis rows) together with the rational phase of each basis row, so two
layers are equal exactly when their stored data agree.

The second half of the module covers the fibration machinery: restricting
and quotienting along an admissible one-parameter subgroup, (strict) fiber
ideals, and verification/search of full fibration chains.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import itertools

from .errors import CapExceededError, InfeasibleError
from .linalg import (hnf_basis, identity_matrix, integer_kernel, mat_mul,
                     rational_row_reduce, saturate, smith_normal_form,
                     solve_in_lattice, rank as int_rank, hermite_normal_form)

POSET_CAP = 10_000


def frac_mod1(x):
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class Hypersurface:
    chi0: tuple  # primitive integer character, first nonzero entry positive
    value: Fraction  # in [0, 1); the component {t^chi0 = e^(2 pi i value)}

    def dim(self):
        return len(self.chi0)

    def layer(self):
        return Layer(len(self.chi0), (self.chi0,), (self.value,))


def make_hypersurface(chi, value):
    """Normalize a primitive character and phase into a Hypersurface."""
    from math import gcd
    g = 0
    for x in chi:
        g = gcd(g, x)
    assert g == 1, f"character {chi} is not primitive"
    first = next(x for x in chi if x)
    if first < 0:
        chi = tuple(-x for x in chi)
        value = -Fraction(value)
    return Hypersurface(tuple(chi), frac_mod1(value))


def expand_character(chi, value=0):
    """Connected components of {t^chi = e^(2 pi i value)} for an arbitrary
    nonzero integer character: gcd(chi) many hypersurfaces, with the
    primitive character chi/gcd and phases (value + t)/gcd."""
    from math import gcd
    g = 0
    for x in chi:
        g = gcd(g, x)
    assert g > 0, "zero character has no hypersurface"
    chi0 = tuple(x // g for x in chi)
    value = Fraction(value)
    return [make_hypersurface(chi0, (value + t) / g) for t in range(g)]


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hypersurfaces: tuple

    @staticmethod
    def from_characters(dim, characters):
        """Build an arrangement by expanding each (possibly imprimitive)
        character into its connected components."""
        hyps = []
        for chi in characters:
            assert len(chi) == dim, "character length must match dimension"
            hyps.extend(expand_character(chi))
        return Arrangement.from_hypersurfaces(dim, hyps)

    @staticmethod
    def from_hypersurfaces(dim, hyps):
        seen = set()
        for h in hyps:
            assert h.dim() == dim, "hypersurface dimension mismatch"
            assert h not in seen, f"duplicate hypersurface {h}"
            seen.add(h)
        return Arrangement(dim, tuple(hyps))

    def character_matrix(self):
        return [list(h.chi0) for h in self.hypersurfaces]

    def rank(self):
        return int_rank(self.character_matrix())

    def is_essential(self):
        return self.rank() == self.dim


def essentialize(arrangement):
    """Rewrite the characters in a basis of the saturated span of the
    character lattice.  Returns the essential arrangement on a torus of
    dimension rank, and the number of split-off torus factors."""
    if arrangement.is_essential():
        return arrangement, 0
    basis, _ = saturate(arrangement.character_matrix())
    hyps = []
    for h in arrangement.hypersurfaces:
        coords = solve_in_lattice(basis, list(h.chi0))
        assert coords is not None  # chi lies in the saturation by definition
        hyps.append(make_hypersurface(tuple(coords), h.value))
    ess = Arrangement.from_hypersurfaces(len(basis), hyps)
    return ess, arrangement.dim - len(basis)


@dataclass(frozen=True)
class Layer:
    """Connected component of an intersection of hypersurfaces.

    lattice: HNF basis rows of the saturated character lattice vanishing on
    the layer; phases: the value of the defining character homomorphism on
    each basis row, as Fractions mod 1.
    """

    dim: int
    lattice: tuple  # of integer row tuples, HNF basis, saturated
    phases: tuple  # of Fraction in [0, 1), one per lattice row

    def codim(self):
        return len(self.lattice)

    def phase_of(self, chi):
        """Phase of a character on this layer, or None if chi does not
        vanish identically on it."""
        coords = solve_in_lattice([list(r) for r in self.lattice], list(chi))
        if coords is None:
            return None
        return frac_mod1(sum(c * p for c, p in zip(coords, self.phases)))


def torus_layer(dim):
    return Layer(dim, (), ())


def layer_leq(x, y):
    """Poset order: x <= y iff y is contained in x as a subvariety."""
    assert x.dim == y.dim
    if x.codim() > y.codim():
        return False
    for row, phase in zip(x.lattice, x.phases):
        if y.phase_of(row) != phase:
            return False
    return True


def layer_contained_in_hypersurface(x, h):
    return layer_leq(h.layer(), x)


def intersect_layer(x, h):
    """Connected components of the intersection of a layer with a
    hypersurface, each as a Layer of codimension codim(x) + 1.

    Returns [x] when the layer already lies inside the hypersurface and []
    when the intersection is empty.
    """
    phase = x.phase_of(h.chi0)
    if phase is not None:
        return [x] if phase == h.value else []
    rows = [list(r) for r in x.lattice] + [list(h.chi0)]
    vals = list(x.phases) + [h.value]
    basis, index = saturate(rows)
    # coordinates of the old basis rows in the saturated basis
    coeff = [solve_in_lattice(basis, row) for row in rows]
    assert all(c is not None for c in coeff)
    d, u, v = smith_normal_form(coeff)
    k = len(rows)
    ub = [frac_mod1(sum(Fraction(u[i][j]) * vals[j] for j in range(k)))
          for i in range(k)]
    diag = [d[i][i] for i in range(k)]
    assert all(diag), "coefficient matrix of independent rows must be regular"
    out = []
    for ts in itertools.product(*[range(di) for di in diag]):
        w = [(ub[i] + ts[i]) / diag[i] for i in range(k)]
        phases = tuple(frac_mod1(sum(Fraction(v[i][j]) * w[j] for j in range(k)))
                       for i in range(k))
        out.append(Layer(x.dim, tuple(tuple(r) for r in basis), phases))
    assert len(out) == index
    return out


@dataclass(frozen=True)
class LayerPoset:
    dim: int
    levels: tuple  # levels[c] = tuple of layers of codimension c

    def all_layers(self):
        return [x for level in self.levels for x in level]

    def covers(self):
        """Cover relations (x, y) with y covering x (y of one higher
        codimension, contained in x)."""
        out = []
        for c in range(len(self.levels) - 1):
            for x in self.levels[c]:
                for y in self.levels[c + 1]:
                    if layer_leq(x, y):
                        out.append((x, y))
        return out


def build_poset(arrangement, max_codim=None, cap=POSET_CAP):
    """Poset of layers by breadth-first intersection, graded by codimension."""
    if max_codim is None:
        max_codim = arrangement.dim
    levels = [(torus_layer(arrangement.dim),)]
    total = 1
    for c in range(max_codim):
        nxt = {}
        for x in levels[c]:
            for h in arrangement.hypersurfaces:
                for y in intersect_layer(x, h):
                    if y.codim() == c + 1:
                        nxt[y] = None
        if not nxt:
            break
        total += len(nxt)
        if total > cap:
            raise CapExceededError(
                f"poset of layers exceeds the {cap} element cap")
        levels.append(tuple(nxt.keys()))
    return LayerPoset(arrangement.dim, tuple(levels))


# ---------------------------------------------------------------------------
# Restriction and quotient along an admissible subgroup


def _dot(chi, y):
    return sum(a * b for a, b in zip(chi, y))


def unimodular_inverse(u):
    n = len(u)
    aug = [[Fraction(u[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    red, pivots = rational_row_reduce(aug)
    assert pivots == list(range(n)), "matrix is singular"
    inv = [[red[i][n + j] for j in range(n)] for i in range(n)]
    for row in inv:
        assert all(x.denominator == 1 for x in row), "matrix is not unimodular"
    return [[int(x) for x in row] for row in inv]


def cocharacter_transform(y):
    """A unimodular u with u y = e_d (the last standard basis vector)."""
    d = len(y)
    col = [[v] for v in y]
    h, u = hermite_normal_form(col)
    assert h[0][0] == 1, f"cocharacter {y} is not primitive"
    u[0], u[d - 1] = u[d - 1], u[0]
    return u


@dataclass(frozen=True)
class SolvedHypersurface:
    """A fiber hypersurface in solved normal form y^degree = e(mu) * x^m,
    where y is the fiber coordinate and x the base coordinates."""

    original: Hypersurface
    degree: int  # covering degree onto the base
    mu: Fraction  # phase, as a rational mod 1
    exponents: tuple  # base exponent vector m


@dataclass(frozen=True)
class Restriction:
    """Splitting of an arrangement along an admissible subgroup direction."""

    cocharacter: tuple
    u: tuple  # unimodular coordinate change, u * y = e_d
    a_y: tuple  # hypersurfaces invariant under the subgroup (original coords)
    a_mod_y: "Arrangement"  # their images in the quotient torus
    solved: tuple  # of SolvedHypersurface, for the removed hypersurfaces


def restrict_and_quotient(arrangement, y):
    d = arrangement.dim
    assert len(y) == d
    u = cocharacter_transform(y)
    uinv = unimodular_inverse(u)
    kept, removed, solved = [], [], []
    quotient_hyps = []
    for h in arrangement.hypersurfaces:
        chi = [_dot(h.chi0, [uinv[i][j] for i in range(d)]) for j in range(d)]
        if chi[d - 1] == 0:
            kept.append(h)
            quotient_hyps.append(make_hypersurface(tuple(chi[:d - 1]), h.value))
        else:
            removed.append(h)
            c = chi[d - 1]
            if c > 0:
                mu = h.value
                m = tuple(-x for x in chi[:d - 1])
            else:
                mu = -h.value
                m = tuple(chi[:d - 1])
            solved.append(SolvedHypersurface(h, abs(c), frac_mod1(mu), m))
    a_mod_y = Arrangement.from_hypersurfaces(d - 1, quotient_hyps)
    return Restriction(tuple(y), tuple(tuple(r) for r in u), tuple(kept),
                       a_mod_y, tuple(solved))


def covering_degree(h, y):
    """Degree of the projection of a non-invariant hypersurface onto the
    quotient torus: the pairing of its character with the direction."""
    return abs(_dot(h.chi0, y))


def is_M_ideal(arrangement, y):
    """Does the direction y cut out a fiber ideal?

    Every component of the intersection of two non-invariant hypersurfaces
    must lie inside some invariant one.  Returns (flag, witness); on failure
    the witness is (h1, h2, component).
    """
    kept = [h for h in arrangement.hypersurfaces if _dot(h.chi0, y) == 0]
    removed = [h for h in arrangement.hypersurfaces if _dot(h.chi0, y) != 0]
    for h1, h2 in itertools.combinations(removed, 2):
        for comp in intersect_layer(h1.layer(), h2):
            if not any(layer_contained_in_hypersurface(comp, h3) for h3 in kept):
                return False, (h1, h2, comp)
    return True, None


def is_TM_ideal(arrangement, y):
    """Strict fiber ideal test: a fiber ideal all of whose non-invariant
    hypersurfaces project with covering degree 1.  Returns (flag, witness);
    the witness is either an offending hypersurface (degree > 1) or an
    M-failure triple."""
    ok, witness = is_M_ideal(arrangement, y)
    if not ok:
        return False, witness
    for h in arrangement.hypersurfaces:
        deg = covering_degree(h, y)
        if deg > 1:
            return False, h
    return True, None


def compute_composition(arrangement, y):
    """Covering degrees of the non-invariant hypersurfaces, in arrangement
    order.  Only meaningful when y cuts out a fiber ideal."""
    ok, witness = is_M_ideal(arrangement, y)
    if not ok:
        raise InfeasibleError(f"direction {y} is not a fiber ideal: {witness}")
    return tuple(covering_degree(h, y) for h in arrangement.hypersurfaces
                 if _dot(h.chi0, y) != 0)


# ---------------------------------------------------------------------------
# Fibration chains


@dataclass(frozen=True)
class ChainStage:
    """Stage j of a fibration chain (j = stage index, 2 <= j <= d).

    solved holds the removed hypersurfaces in the coordinates current when
    the stage was split off; solved_final holds the same data pushed into
    the final normal-form coordinates, where the whole chain is
    simultaneously triangular.
    """

    index: int
    cocharacter: tuple
    u: tuple
    tm: bool
    solved: tuple
    solved_final: tuple = ()


@dataclass(frozen=True)
class ChainData:
    arrangement: "Arrangement"
    classification: str  # strictly-supersolvable | supersolvable | invalid
    stages: tuple  # ChainStage for j = 2..d, ascending
    base_values: tuple  # phases of the rank-one bottom arrangement
    failure: object = None

    def fiber_rank(self, j):
        """n_j: the number of points removed from the fiber line at stage j
        (the j-th factor degree of the Poincare polynomial)."""
        if j == 1:
            return len(self.base_values) + 1
        return len(self.stage(j).solved) + 1

    def fiber_ranks(self):
        d = self.arrangement.dim
        return tuple(self.fiber_rank(j) for j in range(1, d + 1))

    def stage(self, j):
        st = self.stages[j - 2]
        assert st.index == j
        return st

    def is_strict(self):
        return self.classification == "strictly-supersolvable"


def _push_to_final(stages_desc, dim):
    """Compose the per-stage coordinate changes and rewrite every stage's
    solved forms in the final normal-form coordinates."""
    # m_final for a stage over a (j-1)-dimensional base: apply the transform
    # of the stage that splits that base, then all lower ones, each extended
    # by the identity on the already-fixed fiber coordinates.
    by_index = {st.index: st for st in stages_desc}
    transforms = {1: [[1]]}  # base dim -> composed unimodular matrix
    for k in range(2, dim):
        lower = transforms[k - 1]
        u_k = [list(r) for r in by_index[k].u]
        ext = [[lower[i][j] if i < k - 1 and j < k - 1 else (1 if i == j else 0)
                for j in range(k)] for i in range(k)]
        transforms[k] = mat_mul(ext, u_k)
    result = []
    for st in sorted(stages_desc, key=lambda s: s.index):
        base_dim = st.index - 1
        minv = unimodular_inverse(transforms[base_dim])
        solved_final = tuple(
            SolvedHypersurface(s.original, s.degree, s.mu,
                               tuple(_dot(s.exponents, [minv[i][j] for i in range(base_dim)])
                                     for j in range(base_dim)))
            for s in st.solved)
        result.append(ChainStage(st.index, st.cocharacter, st.u, st.tm,
                                 st.solved, solved_final))
    return tuple(result)


def verify_chain(arrangement, stages):
    """Check a candidate chain of subgroup directions and classify.

    stages is a list of d-1 primitive cocharacters; the first applies to the
    full arrangement, each later one to the successive quotient torus (so
    the r-th entry has d-r+1 coordinates... the entries are given in the
    coordinates of the torus they split).
    """
    d = arrangement.dim
    if not arrangement.is_essential():
        raise InfeasibleError("arrangement is not essential; a fibration "
                              "chain needs full-rank characters")
    assert len(stages) == d - 1, "need one direction per stage"
    cur = arrangement
    collected = []
    classification = "strictly-supersolvable"
    for idx, y in enumerate(stages):
        j = d - idx  # stage index
        y = tuple(y)
        tm, _ = is_TM_ideal(cur, y)
        if not tm:
            ok, witness = is_M_ideal(cur, y)
            if not ok:
                return ChainData(arrangement, "invalid", (), (),
                                 failure=(j, y, witness))
            classification = "supersolvable"
        res = restrict_and_quotient(cur, y)
        if not res.a_mod_y.is_essential():
            return ChainData(arrangement, "invalid", (), (),
                             failure=(j, y, "quotient is not essential"))
        collected.append(ChainStage(j, y, res.u, tm, res.solved))
        cur = res.a_mod_y
    base_values = tuple(h.value for h in cur.hypersurfaces)
    assert all(h.chi0 == (1,) for h in cur.hypersurfaces)
    stages_final = _push_to_final(collected, d)
    return ChainData(arrangement, classification, stages_final, base_values)


def chain_candidates(arrangement):
    """Primitive directions spanned by kernels of (d-1)-subsets of the
    distinct characters, the classical source of fibration directions."""
    d = arrangement.dim
    chars = []
    for h in arrangement.hypersurfaces:
        if h.chi0 not in chars:
            chars.append(h.chi0)
    if d == 1:
        return []
    seen = {}
    for subset in itertools.combinations(chars, d - 1):
        ker = integer_kernel([list(c) for c in subset])
        if len(ker) != 1:
            continue
        v = tuple(ker[0])
        first = next(x for x in v if x)
        if first < 0:
            v = tuple(-x for x in v)
        seen[v] = None
    return sorted(seen.keys())


def find_chain(arrangement, strict_only=False):
    """Heuristic depth-first search for a fibration chain.

    Tries strict (degree-one) stages first so that a strictly supersolvable
    chain is found whenever the candidate directions contain one.  Returns a
    list of cocharacters suitable for verify_chain, or None.
    """
    d = arrangement.dim
    if not arrangement.is_essential():
        raise InfeasibleError("arrangement is not essential")

    def dfs(cur, allow_m):
        if cur.dim == 1:
            return []
        scored = []
        for y in chain_candidates(cur):
            tm, _ = is_TM_ideal(cur, y)
            if tm:
                scored.append((0, y))
            elif allow_m:
                ok, _ = is_M_ideal(cur, y)
                if ok:
                    scored.append((1, y))
        scored.sort()
        for _, y in scored:
            res = restrict_and_quotient(cur, y)
            if not res.a_mod_y.is_essential():
                continue
            rest = dfs(res.a_mod_y, allow_m)
            if rest is not None:
                return [y] + rest
        return None

    chain = dfs(arrangement, allow_m=False)
    if chain is None and not strict_only:
        chain = dfs(arrangement, allow_m=True)
    return chain
