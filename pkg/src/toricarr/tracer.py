"""Numerical braid monodromy of fibration stages.

For each generator loop in the base of a stage we follow the fiber points
(the roots of the stage's defining polynomial) and read off a braid word
from the order swaps of their real parts.  Strands are numbered by position
at the basepoint; the sign of a crossing comes from the imaginary parts of
the two colliding roots.

Loop conventions: the rest value of each coordinate is a positive real far
above every root monomial in the earlier coordinates (nested scales, see
_scales), so a constant section at the rest value stays clear of every
braid traced at a lower stage and the Artin reading of the words is valid.
A generator loop moves one coordinate and is the same path at every stage:
the coordinate loop descends the positive real axis from the rest value and
runs once counterclockwise around 0 at a radius below the coordinate's own
punctures; the loop about a puncture follows the arc at the rest radius to
the puncture's argument, descends radially, and circles the puncture once
counterclockwise.  Obstacles sitting on a radial segment are passed on the
counterclockwise side and retraced, adding no winding.  The scale margins
pin down which later-stage crossing points the coordinate circle encloses
(exactly those with a negative exponent, matching HrmMatrix.base_classes);
different choices within the conventions change traced words by
conjugation only, so word-level comparisons go through the Artin action.

Degenerate projections (three roots sharing a real part at one instant,
common in arrangements with root-of-unity symmetry) are resolved by rotating
the whole configuration by a small fixed phase, which does not change the
braid as long as the basepoint order is preserved; the tracer walks a
deterministic ladder of such phases.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import NumericError
from .rootmaps import (CoefficientMapData, RootMapData, base_generators,
                       homological_root_hom, stage_root_map)
from .words import (AbelianBraidVector, BraidWord, PureBraidWord,
                    linking_numbers, permutation_braid, sigma_to_pure)

PHASE_LADDER = (0.0, 0.1, 0.23, 0.37, 0.52)
MIN_STEP = 1e-12


def cexp(x):
    """e^(2 pi i x) for real or Fraction x."""
    return cmath.exp(2j * math.pi * float(x))


@dataclass(frozen=True)
class LoopSpec:
    """A generator loop of the base of a stage: the coordinate `line` moves
    along `path` (a callable [0,1] -> C), all others stay at the basepoint."""

    stage: int
    label: tuple
    line: int  # 1-based moving coordinate
    basepoint: tuple  # of complex
    path: object


@dataclass(frozen=True)
class TraceResult:
    stage: int
    label: tuple
    n: int
    strand_roots: tuple  # strand_roots[pos-1] = root index at that position
    word: BraidWord  # strands numbered by basepoint position
    word_roots: BraidWord  # strands renumbered by root index
    permutation: tuple
    linking: AbelianBraidVector  # in root indices
    pure_word: object  # PureBraidWord in root indices, or None


def _piecewise(segments):
    """Join parametrized segments into one callable on [0,1], time allocated
    proportionally to a rough arclength weight."""
    weights = [max(w, 1e-9) for _, w in segments]
    total = sum(weights)
    breaks = []
    acc = 0.0
    for w in weights:
        acc += w / total
        breaks.append(acc)

    def path(t):
        t = min(max(t, 0.0), 1.0)
        lo = 0.0
        for (f, _), hi in zip(segments, breaks):
            if t <= hi or hi == breaks[-1]:
                span = hi - lo
                s = 0.0 if span == 0 else (t - lo) / span
                return f(min(max(s, 0.0), 1.0))
            lo = hi
        raise AssertionError

    return path


def _arc(radius, a0, a1):
    return (lambda s: radius * cmath.exp(1j * (a0 + (a1 - a0) * s)),
            abs(a1 - a0) * radius)


def _segment(z0, z1):
    return (lambda s: z0 + (z1 - z0) * s, abs(z1 - z0))


def _circle(center, radius, a0):
    return (lambda s: center + radius * cmath.exp(1j * (a0 + 2 * math.pi * s)),
            2 * math.pi * radius)


def _loop_path(start, ring, obstacles, target):
    """Path for a generator loop, per the module conventions.

    start is the coordinate's rest value (positive real), ring the radius of
    the coordinate circle, obstacles every puncture and crossing point of
    the line.  target is the puncture to lasso, or None for the coordinate
    loop around 0."""
    if target is None:
        phi, goal = 0.0, ring
        final = _circle(0.0, ring, 0.0)
    else:
        z = target
        others = [w for w in obstacles if abs(w - z) > 1e-12] + [0.0]
        gap = min(abs(z - w) for w in others)
        delta = min(gap / 2, abs(z) / 2, (start - abs(z)) / 2)
        phi = cmath.phase(z) % (2 * math.pi)
        goal = abs(z) + delta
        final = _circle(z, delta, phi)
    e = cmath.exp(1j * phi)
    segs = [_arc(start, 0.0, phi)] if phi else []
    # radial descent with counterclockwise detours around obstacles on the ray
    on_ray = sorted((abs(w) for w in obstacles
                     if goal < abs(w) < start
                     and abs(w * cmath.exp(-1j * phi) - abs(w)) < 1e-9),
                    reverse=True)
    pos = start
    for r in on_ray:
        d = min((pos - r) / 2, (r - goal) / 2, r / 2)
        segs.append(_segment(pos * e, (r + d) * e))
        segs.append((lambda s, r=r, d=d, e=e:
                     (r + d * cmath.exp(1j * math.pi * s)) * e, math.pi * d))
        pos = r - d
    segs.append(_segment(pos * e, goal * e))
    # return leg retraces the descent and the opening arc
    ret = [(lambda s, f=f: f(1 - s), w) for f, w in reversed(segs)]
    return _piecewise(segs + [final] + ret)


# ---------------------------------------------------------------------------
# Root evaluation along a path


def _monomial(mu, exponents, coords):
    val = cexp(mu)
    for x, m in zip(coords, exponents):
        val *= x ** m
    return val


class _RootFollower:
    """Evaluates all fiber roots along the loop, keeping the branches of
    degree > 1 factors continuous by nearest matching against a reference
    sample (passed explicitly, so queries may arrive in any time order)."""

    def __init__(self, data, spec):
        self.data = data
        self.spec = spec
        if isinstance(data, RootMapData):
            self.blocks = [(1, mu, m) for mu, m in data.monomials]
        else:
            self.blocks = list(data.factors)
        self.n = 1 + sum(b[0] for b in self.blocks)
        self.max_mod = 0.0

    def _coords(self, t):
        c = list(self.spec.basepoint)
        c[self.spec.line - 1] = self.spec.path(t)
        return c

    def _raw_blocks(self, t):
        coords = self._coords(t)
        out = []
        for deg, mu, m in self.blocks:
            val = _monomial(mu, m, coords)
            if deg == 1:
                out.append([val])
            else:
                r = abs(val) ** (1.0 / deg)
                a = cmath.phase(val)
                out.append([r * cmath.exp(1j * (a + 2 * math.pi * s) / deg)
                            for s in range(deg)])
        return out

    def roots(self, t, prev=None):
        """Roots in fixed index order (0 first, then the blocks).  Branches
        of multi-valued blocks are matched by least total movement against
        prev (a flat root list from a nearby sample); at the initial sample
        they are ordered by (Re, Im)."""
        raw = self._raw_blocks(t)
        matched = []
        offset = 1
        for blk in raw:
            if prev is None:
                matched.append(sorted(blk, key=lambda z: (z.real, z.imag)))
            elif len(blk) == 1:
                matched.append(blk)
            else:
                old = prev[offset:offset + len(blk)]
                best = min(permutations(blk),
                           key=lambda p: sum(abs(a - b) for a, b in zip(old, p)))
                matched.append(list(best))
            offset += len(blk)
        flat = [0j] + [z for blk in matched for z in blk]
        self.max_mod = max(self.max_mod, max(abs(z) for z in flat))
        return flat


# ---------------------------------------------------------------------------
# Crossing detection


def _order(roots, phase):
    rot = cmath.exp(1j * phase)
    keyed = sorted(range(1, len(roots) + 1),
                   key=lambda i: ((roots[i - 1] * rot).real, (roots[i - 1] * rot).imag))
    return keyed


def _min_gap(roots):
    g = min(abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1:])
    return g


def trace_loop(data, spec, phase=0.0, samples=256):
    """Trace the fiber roots around one loop and return the braid word.

    Raises NumericError when the projection stays degenerate below the
    minimal step size (callers then retry with the next projection phase).
    """
    follower = _RootFollower(data, spec)
    n = follower.n
    rot = phase

    r0 = follower.roots(0.0)
    order0 = _order(r0, rot)
    letters = []
    order = list(order0)

    def advance(t0, t1, r_t0):
        nonlocal order
        r_t1 = follower.roots(t1, prev=r_t0)
        gap = min(_min_gap(r_t0), _min_gap(r_t1))
        disp = max(abs(a - b) for a, b in zip(r_t0, r_t1))
        new_order = _order(r_t1, rot)
        if new_order == order and disp < gap / 2:
            return r_t1
        if t1 - t0 < MIN_STEP:
            # At minimal step, accept crossings where each maximal run of
            # changed positions is exactly reversed: strands meeting pairwise
            # transversally at one instant (a symmetry-forced multiple point
            # looks like this in every projection).  Each run contributes a
            # half twist; signs come from the strand heights at the instant.
            remaining = {i for i in range(n) if new_order[i] != order[i]}
            if not remaining:
                return r_t1
            runs = []
            while remaining:
                a = min(remaining)
                # a reversed block starting at a must end where its new
                # occupant came from (the middle of an odd block stays put)
                e = order.index(new_order[a])
                if e <= a or new_order[a:e + 1] != order[a:e + 1][::-1]:
                    raise NumericError("unresolvable multiple crossing; "
                                       "projection needs rotating")
                runs.append((a, e + 1))
                remaining -= set(range(a, e + 1))
            cur = list(order)
            for a, b in runs:
                changed = True
                while changed:
                    changed = False
                    for i in range(a, b - 1):
                        if new_order.index(cur[i]) > new_order.index(cur[i + 1]):
                            u = r_t0[cur[i] - 1] * cmath.exp(1j * rot)
                            v = r_t0[cur[i + 1] - 1] * cmath.exp(1j * rot)
                            if v.imag == u.imag:
                                raise NumericError(
                                    "degenerate crossing (equal imaginary "
                                    "parts); projection needs rotating")
                            letters.append((i + 1, 1 if v.imag > u.imag else -1))
                            cur[i], cur[i + 1] = cur[i + 1], cur[i]
                            changed = True
            order = new_order
            return r_t1
        tm = (t0 + t1) / 2
        r_mid = advance(t0, tm, r_t0)
        return advance(tm, t1, r_mid)

    r = r0
    for k in range(samples):
        t0 = k / samples
        t1 = (k + 1) / samples
        r = advance(t0, t1, r)

    word = BraidWord.make(n, letters)
    return word, order0, follower.max_mod


def _relabel_word(word, order0):
    """Conjugate by the positive permutation braid sending root index to its
    basepoint position, so strands are numbered by root index."""
    n = word.n
    perm = [0] * n
    for pos, root in enumerate(order0, start=1):
        perm[root - 1] = pos
    p = permutation_braid(tuple(perm))
    return p * word * p.inverse()


def trace_generator(chain, j, label, epsilon=Fraction(1, 8), phases=PHASE_LADDER):
    """Trace one base generator loop of stage j, with the projection-phase
    retry ladder."""
    data = stage_root_map(chain, j)
    spec = make_loop_spec(chain, j, label, epsilon)
    fiber_rest = _scales(chain, epsilon)[0][j - 1]
    last = None
    for phase in phases:
        try:
            word, order0, max_mod = trace_loop(data, spec, phase=phase)
        except NumericError as exc:
            last = exc
            continue
        if max_mod >= 0.75 * fiber_rest:
            raise NumericError(
                f"braid at stage {j} sweeps past the fiber rest value; the "
                "constant section is invalid (decrease epsilon)")
        if phase != 0.0:
            r0 = [0j] + [complex(z) for z in _basepoint_roots(data, spec)]
            if _order(r0, phase) != _order(r0, 0.0):
                last = NumericError("projection phase changed the basepoint order")
                continue
        return _finish(chain, j, label, word, order0)
    raise NumericError(f"tracing failed for {label} at stage {j}: {last}")


def _basepoint_roots(data, spec):
    follower = _RootFollower(data, spec)
    return follower.roots(0.0)[1:]


def _finish(chain, j, label, word, order0):
    n = word.n
    word_roots = _relabel_word(word, order0)
    link = linking_numbers(word_roots)
    perm = word_roots.permutation()
    pure = None
    if perm == tuple(range(1, n + 1)):
        pure = sigma_to_pure(word_roots.free_cancel())
    return TraceResult(j, label, n, tuple(order0), word, word_roots, perm,
                       link, pure)


# ---------------------------------------------------------------------------
# Basepoints and loop construction


def _stage_blocks(chain, k):
    """(degree, mu, exponents) of every stage-k hypersurface."""
    if k == 1:
        return [(1, v, ()) for v in chain.base_values]
    return [(s.degree, s.mu, s.exponents)
            for s in chain.stage(k).solved_final]


def _scales(chain, epsilon=Fraction(1, 8)):
    """Rest values b_k and coordinate-circle radii r_k of every line.

    b_k exceeds, by the margin 1/(2 epsilon), the modulus of every stage-k
    root monomial over the annuli r_i/2 <= |x_i| <= b_i swept by the earlier
    loops (each factor padded by 2).  The margins guarantee that on the k-th
    line every crossing point with a later hypersurface lands either inside
    r_k/2 (negative exponent) or beyond 2 b_k (positive exponent), and that
    no traced braid ever reaches the rest value of its fiber coordinate."""
    eps = float(epsilon)
    bs, rs = [], []
    for k in range(1, chain.arrangement.dim + 1):
        punct = _punctures(chain, k, bs)
        rs.append(min(abs(z) for z in punct) / 2)
        bound = 1.0
        for _, _, m in _stage_blocks(chain, k):
            t = 1.0
            for b, r, mi in zip(bs, rs, m):
                t *= (2 * max(b, 2 / r)) ** abs(mi)
            bound = max(bound, t)
        bs.append(bound / (2 * eps))
    return bs, rs


def base_basepoint(chain, j, epsilon=Fraction(1, 8)):
    """Basepoint of the (j-1)-dimensional base: every coordinate at its
    rest value, the same at every stage."""
    bs, _ = _scales(chain, epsilon)
    return tuple(bs[:j - 1])


def _punctures(chain, k, coords):
    """Nonzero punctures of the stage-k line over the partial basepoint."""
    if k == 1:
        return [cexp(v) for v in chain.base_values]
    return [_monomial(s.mu, s.exponents, coords)
            for s in chain.stage(k).solved_final]


def _line_crossings(chain, k, coords):
    """Points where the k-th coordinate line through the rest point meets a
    hypersurface solved at a later stage."""
    out = []
    for t in range(k + 1, chain.arrangement.dim + 1):
        for s in chain.stage(t).solved_final:
            mk = s.exponents[k - 1]
            if mk == 0:
                continue
            c = cexp(s.mu)
            for i, m in enumerate(s.exponents):
                if i != k - 1:
                    c *= coords[i] ** m
            w = coords[t - 1] ** s.degree / c  # x_k^mk = w on the hypersurface
            r = abs(w) ** (1.0 / mk)
            a = cmath.phase(w) / mk
            out.extend(r * cmath.exp(1j * (a + 2 * math.pi * s_ / mk))
                       for s_ in range(abs(mk)))
    return out


def make_loop_spec(chain, j, label, epsilon=Fraction(1, 8)):
    bs, rs = _scales(chain, epsilon)
    k = label[-1]
    start, ring = bs[k - 1], rs[k - 1]
    punct = _punctures(chain, k, bs[:k - 1])
    cross = _line_crossings(chain, k, bs)
    for z in punct:
        if not 1.2 * ring < abs(z) < start / 1.2:
            raise NumericError(f"stage-{k} puncture too close to the loop "
                               "scales; decrease epsilon")
    for z in cross:
        if not (abs(z) < 0.8 * ring or abs(z) > 1.2 * start):
            raise NumericError(f"later-stage crossing too close to the "
                               f"stage-{k} loop scales; decrease epsilon")
    target = None if label[0] == "axis" else punct[label[1] - 1]
    path = _loop_path(start, ring, punct + cross, target)
    return LoopSpec(j, tuple(label), k, tuple(bs[:j - 1]), path)


def stage_monodromy(chain, j, epsilon=Fraction(1, 8), check_homology=True):
    """Trace every base generator loop of stage j.

    For a strict stage the result is gated against the closed-form homology
    image: any mismatch raises NumericError.  Returns a list of TraceResults
    in base generator order."""
    st = chain.stage(j)
    results = []
    hrm = homological_root_hom(chain, j) if st.tm else None
    expected = hrm.effective_rows() if hrm is not None else None
    labels = [label for label, _ in base_generators(chain, j)]
    for idx, label in enumerate(labels):
        res = trace_generator(chain, j, label, epsilon)
        if hrm is not None and check_homology:
            if res.linking.coords != expected[idx].coords:
                raise NumericError(
                    f"traced linking numbers for {label} at stage {j} do not "
                    "match the homology formula")
        results.append(res)
    return results
