"""Root maps of fibration stages and the induced homology homomorphism.

For a strict (degree-one) stage the removed hypersurfaces are graphs
y = e(mu_p) x^{m_p} over the base torus, so the stage is the pullback of a
point-configuration bundle along the root map

    b(x) = (0, e(mu_1) x^{m_1}, ..., e(mu_l) x^{m_l}).

For a non-strict stage the fiber points are only defined collectively, as
the roots of the simple Weierstrass polynomial
y * prod_p (y^{k_p} - e(mu_p) x^{m_p}).

hrm_matrix computes the induced map on first homology, from loops in the
base complement to H_1 of the pure braid group on the configuration,
via the closed formula in terms of winding numbers of root differences.
"""

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import (Hypersurface, expand_character, make_hypersurface,
                          frac_mod1)
from .errors import InfeasibleError
from .words import AbelianBraidVector, pair_index


@dataclass(frozen=True)
class RootMapData:
    """Roots of a strict stage: the implicit root 0 followed by the graphs
    e(mu_p) x^{m_p} in stage order.  n = l + 1 strands."""

    stage: int
    base_dim: int
    monomials: tuple  # of (mu: Fraction, exponents: tuple)

    @property
    def n(self):
        return len(self.monomials) + 1


@dataclass(frozen=True)
class CoefficientMapData:
    """Coefficient data of the simple Weierstrass polynomial of a stage:
    y * prod (y^degree - e(mu) x^exponents)."""

    stage: int
    base_dim: int
    factors: tuple  # of (degree: int, mu: Fraction, exponents: tuple)

    @property
    def n(self):
        return 1 + sum(deg for deg, _, _ in self.factors)


def stage_root_map(chain, j):
    """Root data of stage j of a verified chain: RootMapData when the stage
    is strict, CoefficientMapData otherwise."""
    assert chain.classification != "invalid"
    st = chain.stage(j)
    if st.tm:
        return RootMapData(j, j - 1, tuple((s.mu, s.exponents)
                                           for s in st.solved_final))
    return CoefficientMapData(j, j - 1, tuple((s.degree, s.mu, s.exponents)
                                              for s in st.solved_final))


def base_generators(chain, j):
    """Labels and hypersurfaces of the base of stage j.

    Returns a list of (label, hypersurface-or-None) where label is
    ("axis", k) for the k-th coordinate loop (hypersurface None) and
    ("hyp", p, k) for the p-th stage-k hypersurface, all in the final
    normal-form coordinates of the (j-1)-dimensional base."""
    base_dim = j - 1
    out = []
    for k in range(1, j):
        out.append((("axis", k), None))
        if k == 1:
            for p, val in enumerate(chain.base_values, start=1):
                chi = tuple(1 if i == 0 else 0 for i in range(base_dim))
                out.append((("hyp", p, 1), make_hypersurface(chi, val)))
        else:
            for p, s in enumerate(chain.stage(k).solved_final, start=1):
                chi = [0] * base_dim
                chi[k - 1] = s.degree
                for i, m in enumerate(s.exponents):
                    chi[i] = -m
                out.append((("hyp", p, k), make_hypersurface(tuple(chi), s.mu)))
    return out


def projection_component_test(mu_i, m_i, mu_j, m_j, hyp):
    """Is hyp a component of the locus where the roots e(mu_i) x^{m_i} and
    e(mu_j) x^{m_j} collide?  The locus is {x^{m_i - m_j} = e(mu_j - mu_i)}."""
    chi = tuple(a - b for a, b in zip(m_i, m_j))
    if not any(chi):
        return False  # parallel roots never collide (or are not distinct)
    return hyp in expand_character(chi, frac_mod1(Fraction(mu_j) - Fraction(mu_i)))


@dataclass(frozen=True)
class HrmMatrix:
    """Homological root homomorphism of a strict stage: one row per base
    H_1 generator, with coordinates in H_1 of the pure braid group P_n.

    base_classes records the H_1 class of each named base generator loop,
    as integer coordinates over row_labels.  Lasso generators are their own
    class.  An axis loop, however, is not a meridian in later coordinates:
    the bundle has no section at infinity, so with the fiber basepoint far
    below every root the k-th axis circle also winds max(0, -m_k) times
    around each later hypersurface y^d = e(mu) x^m.  The effective linking
    row of a generator is base_classes combined with rows."""

    stage: int
    n: int
    row_labels: tuple
    rows: tuple  # of AbelianBraidVector
    base_classes: tuple  # of tuples of ints, square over row_labels

    def effective_rows(self):
        """Linking rows of the generator loops themselves: base_classes
        applied to rows, one AbelianBraidVector per base generator."""
        out = []
        for cls in self.base_classes:
            coords = [0] * len(self.rows[0].coords)
            for c, row in zip(cls, self.rows):
                if c:
                    coords = [x + c * y for x, y in zip(coords, row.coords)]
            out.append(AbelianBraidVector(self.n, tuple(coords)))
        return tuple(out)


def homological_root_hom(chain, j):
    """Closed-form homology image of every base generator at stage j.

    Stage j must be strict: the formula is in terms of the root monomials.
    Strand p+1 carries the p-th root; strand 1 carries the constant root 0.
    """
    st = chain.stage(j)
    if not st.tm:
        raise InfeasibleError(
            f"stage {j} is not strict; the homological root homomorphism "
            "needs single-valued roots")
    data = stage_root_map(chain, j)
    mus = [mu for mu, _ in data.monomials]
    ms = [m for _, m in data.monomials]
    l = len(ms)
    n = l + 1
    labels = []
    rows = []
    for label, hyp in base_generators(chain, j):
        coords = [0] * (n * (n - 1) // 2)
        if label[0] == "axis":
            k = label[1] - 1
            for b in range(l):
                coords[pair_index(1, b + 2, n)] += ms[b][k]
                for a in range(b):
                    coords[pair_index(a + 2, b + 2, n)] += min(ms[a][k], ms[b][k])
        else:
            for a in range(l):
                for b in range(a + 1, l):
                    if projection_component_test(mus[a], ms[a], mus[b], ms[b], hyp):
                        coords[pair_index(a + 2, b + 2, n)] += 1
        labels.append(label)
        rows.append(AbelianBraidVector(n, tuple(coords)))
    classes = []
    for label in labels:
        cls = [0] * len(labels)
        cls[labels.index(label)] = 1
        if label[0] == "axis":
            k = label[1]
            for m in range(k + 1, j):
                for p, s in enumerate(chain.stage(m).solved_final, start=1):
                    w = max(0, -s.exponents[k - 1])
                    if w:
                        cls[labels.index(("hyp", p, m))] += w
        classes.append(tuple(cls))
    return HrmMatrix(j, n, tuple(labels), tuple(rows), tuple(classes))
