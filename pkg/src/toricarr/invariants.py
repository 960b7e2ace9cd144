"""Invariants assembled from a fibration chain: fundamental group
presentation, LCS Lie ideal, degree-two cohomology ideal, Hilbert series,
LCS ranks, and topological complexity.

Throughout, the first homology of the complement is free abelian on one
generator per fiber generator of each stage, ordered stage-major:
stage k contributes the axis class followed by one class per solved
hypersurface.  N denotes the total number of generators.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .arrangement import essentialize, find_chain, verify_chain
from .errors import InfeasibleError
from .linalg import hnf_basis, integer_kernel
from .rootmaps import homological_root_hom
from .words import FreeWord, artin_full, pair_list


def generator_labels(fiber_ranks):
    """Global H_1 generator labels, stage-major: axis class first, then one
    per solved hypersurface.  Matches the row labels of the stage maps."""
    labels = []
    for k, n in enumerate(fiber_ranks, start=1):
        labels.append(("axis", k))
        labels.extend(("hyp", p, k) for p in range(1, n))
    return labels


def _offsets(fiber_ranks):
    offs, total = [], 0
    for n in fiber_ranks:
        offs.append(total)
        total += n
    return offs, total


def chain_hrms(chain):
    """Homological root homomorphisms for every stage 2..r."""
    d = chain.arrangement.dim
    return [homological_root_hom(chain, j) for j in range(2, d + 1)]


def _fiber_ranks(hrms, first_rank=None):
    if not hrms:
        assert first_rank is not None, "rank-one chain needs first_rank"
        return (first_rank,)
    # stage-2 rows are indexed by the stage-1 generators
    ranks = [len(hrms[0].row_labels)]
    ranks.extend(h.n for h in hrms)
    return tuple(ranks)


# ---------------------------------------------------------------------------
# Fundamental group presentation


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple  # label tuples, global stage-major order
    relations: tuple   # pairs (u^-1 v u, image of v under the monodromy)

    def generator_names(self):
        return [f"y({lab[1]},{lab[-1]})" if lab[0] == "hyp" else f"y(0,{lab[1]})"
                for lab in self.generators]


def pi1_presentation(chain, monodromy):
    """Presentation of the fundamental group from traced stage monodromies.

    monodromy maps each stage j >= 2 to its list of TraceResults, one per
    base generator in stage-major order.  Each base generator u and fiber
    generator v of a higher stage contribute the relation
    u^-1 v u = (Artin action of the traced braid)(v)."""
    ranks = chain.fiber_ranks()
    offs, total = _offsets(ranks)
    labels = generator_labels(ranks)

    def gen(stage, q):
        return FreeWord.generator(total, offs[stage - 1] + q)

    relations = []
    for j in range(2, len(ranks) + 1):
        results = monodromy[j]
        base = [(k, q) for k in range(1, j) for q in range(1, ranks[k - 1] + 1)]
        assert len(results) == len(base), "stage trace count mismatch"
        for (k, q), res in zip(base, results):
            u = gen(k, q)
            braid = res.word_roots
            for t in range(1, ranks[j - 1] + 1):
                v = gen(j, t)
                image = artin_full(braid, FreeWord.generator(ranks[j - 1], t))
                rhs = FreeWord.make(total, [(offs[j - 1] + g, e)
                                            for g, e in image.letters])
                lhs = v.conjugate_by(u)
                relations.append((lhs, rhs))
    return GroupPresentation(tuple(labels), tuple(relations))


# ---------------------------------------------------------------------------
# LCS Lie ideal and the degree-two cohomology ideal


@dataclass(frozen=True)
class DegreeTwoRelation:
    """The Lie relation [u, Y] = 0 with u = X + W, where X is a base
    generator, Y a fiber generator of the same stage, and W collects the
    infinitesimal-braid corrections; the Y-coefficient of u is zeroed."""

    stage: int
    base_label: tuple
    fiber_index: int  # q with Y = q-th fiber generator of the stage
    u: tuple          # length-N integer vector
    y: int            # global 0-based index of Y


def lcs_ideal(hrms, first_rank=None):
    """Degree-two relations of the LCS Lie algebra, stage-major."""
    ranks = _fiber_ranks(hrms, first_rank)
    offs, total = _offsets(ranks)
    labels = generator_labels(ranks)
    out = []
    for h in hrms:
        j, n = h.stage, h.n
        pairs = pair_list(n)
        # linking data of the generator loop itself, not of its meridian
        # class: axis loops wind around later hypersurfaces (base_classes)
        for label, row in zip(h.row_labels, h.effective_rows()):
            x_idx = labels.index(label)
            for q in range(1, n + 1):
                u = [0] * total
                u[x_idx] += 1
                for (a, b), c in zip(pairs, row.coords):
                    if c and q in (a, b):
                        u[offs[j - 1] + a - 1] += c
                        u[offs[j - 1] + b - 1] += c
                y = offs[j - 1] + q - 1
                u[y] = 0
                out.append(DegreeTwoRelation(j, label, q, tuple(u), y))
    return out


@dataclass(frozen=True)
class H2Image:
    """Image of second homology inside the exterior square of Z^N, one row
    per degree-two relation, in the lexicographic wedge-pair basis."""

    n_generators: int
    labels: tuple
    rows: tuple


def _wedge_with_generator(u, y, n):
    """Coordinates of u ^ e_{y+1} on the lexicographic pair basis (0-based y)."""
    row = [0] * comb(n, 2)
    pairs = pair_list(n)
    index = {p: i for i, p in enumerate(pairs)}
    for a, c in enumerate(u):
        if not c or a == y:
            continue
        if a < y:
            row[index[(a + 1, y + 1)]] += c
        else:
            row[index[(y + 1, a + 1)]] -= c
    return row


def h2_image(hrms, first_rank=None):
    ranks = _fiber_ranks(hrms, first_rank)
    _, total = _offsets(ranks)
    rels = lcs_ideal(hrms, first_rank)
    rows = tuple(tuple(_wedge_with_generator(r.u, r.y, total)) for r in rels)
    return H2Image(total, tuple(generator_labels(ranks)), rows)


@dataclass(frozen=True)
class CohomologyPresentation:
    generator_labels: tuple
    ideal_basis: tuple  # HNF basis rows over the lexicographic pair basis

    @property
    def n_generators(self):
        return len(self.generator_labels)


def cohomology_ideal(h2):
    """Degree-two part of the cohomology relation ideal: the submodule of
    the exterior square pairing to zero with every second-homology class."""
    n = h2.n_generators
    if h2.rows:
        kernel = integer_kernel([list(r) for r in h2.rows])
        assert len(kernel) == comb(n, 2) - len(h2.rows), \
            "second homology classes are not independent"
    else:
        kernel = hnf_basis([[1 if i == j else 0 for j in range(comb(n, 2))]
                            for i in range(comb(n, 2))])
    return CohomologyPresentation(h2.labels, tuple(tuple(v) for v in kernel))


# ---------------------------------------------------------------------------
# Exact ranks in the exterior algebra


def _insert_echelon(pivots, row):
    """Insert a sparse integer row (dict keyed by basis tuples) into an
    echelon structure; returns True if it enlarges the span."""
    while row:
        c = min(row)
        piv = pivots.get(c)
        if piv is None:
            g = 0
            for v in row.values():
                g = gcd(g, v)
            if row[c] < 0:
                g = -g
            pivots[c] = {k: v // g for k, v in row.items()}
            return True
        a, b = piv[c], row[c]
        g = gcd(a, b)
        fa, fb = a // g, b // g
        new = {}
        for k in set(row) | set(piv):
            v = fa * row.get(k, 0) - fb * piv.get(k, 0)
            if v:
                new[k] = v
        row = new
    return False


def _wedge_generator_tuple(i, key, coeff):
    """e_i ^ (coeff * e_key) as (new_key, signed coeff); None if i in key."""
    if i in key:
        return None
    pos = sum(1 for s in key if s < i)
    new_key = key[:pos] + (i,) + key[pos:]
    return new_key, coeff if pos % 2 == 0 else -coeff


def hilbert_series(coh, up_to):
    """Graded dimensions of the quotient of the exterior algebra by the
    ideal generated in degree two, computed by exact integer rank."""
    n = coh.n_generators
    assert up_to <= n, "degree exceeds number of generators"
    dims = [1]
    if up_to >= 1:
        dims.append(n)
    if up_to < 2:
        return dims
    pairs = pair_list(n)
    pivots = {}
    for vec in coh.ideal_basis:
        row = {pair: c for pair, c in zip(pairs, vec) if c}
        _insert_echelon(pivots, row)
    dims.append(comb(n, 2) - len(pivots))
    basis = list(pivots.values())
    for k in range(3, up_to + 1):
        nxt = {}
        for w in basis:
            for i in range(1, n + 1):
                row = {}
                for key, c in w.items():
                    r = _wedge_generator_tuple(i, key, c)
                    if r:
                        row[r[0]] = row.get(r[0], 0) + r[1]
                if row:
                    _insert_echelon(nxt, row)
        dims.append(comb(n, k) - len(nxt))
        pivots = nxt
        basis = list(pivots.values())
    return dims


def lcs_rank_crosscheck(h2, fiber_ranks):
    """Rank of the degree-two relation span must be C(N,2) - phi_2."""
    pivots = {}
    rank = 0
    for r in h2.rows:
        row = {i: c for i, c in enumerate(r) if c}
        if _insert_echelon(pivots, row):
            rank += 1
    n = sum(fiber_ranks)
    phi2 = lcs_ranks(fiber_ranks, 2)[1]
    return rank == comb(n, 2) - phi2


# ---------------------------------------------------------------------------
# LCS ranks, Betti numbers, topological complexity


def _mobius(n):
    result, d, m = 1, 2, n
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


def _witt(n, k):
    total = 0
    for d in range(1, k + 1):
        if k % d == 0:
            total += _mobius(d) * n ** (k // d)
    return total // k


def lcs_ranks(fiber_ranks, up_to):
    """Ranks of the lower central series quotients: per-stage Witt numbers
    summed, since the group is an almost-direct product of free groups."""
    return [sum(_witt(n, k) for n in fiber_ranks)
            for k in range(1, up_to + 1)]


def betti_numbers(fiber_ranks):
    """Coefficients of the product (1 + n_1 t)...(1 + n_r t): the Betti
    numbers of the complement of a strictly supersolvable arrangement."""
    coeffs = [1]
    for n in fiber_ranks:
        coeffs = [a + n * b for a, b in
                  zip(coeffs + [0], [0] + coeffs)]
    return coeffs


def topological_complexity(arrangement):
    """d + r + 1, valid once a strictly supersolvable chain is certified."""
    ess, extra = essentialize(arrangement)
    ys = find_chain(ess, strict_only=True)
    if ys is None:
        raise InfeasibleError("no strictly supersolvable chain found; "
                              "the complexity formula does not apply")
    chain = verify_chain(ess, ys)
    if not chain.is_strict():
        raise InfeasibleError("certified chain is not strict")
    return arrangement.dim + arrangement.rank() + 1
