"""Free group words, braid words, and pure braid words.

Conventions used throughout the package:

* Free group generators y_1..y_n, letters stored as (index, +-1).
* Braid generators s_1..s_{n-1}; s_i crosses the strands at positions i and
  i+1, the strand at position i passing in front.  A braid word acts on the
  free group on the right, composite words acting letter by letter from the
  left.
* Pure braid generators a_{i,j} for 1 <= i < j <= n, where a_{i,j} is
  (s_{j-1} ... s_{i+1}) s_i^2 (s_{j-1} ... s_{i+1})^-1.

Serialization is whitespace-separated with caret exponents and round-trips
exactly: "y1 y2^-1", "s1 s2^-1", "a(1,2)^2 a(2,3)^-1".
"""

from dataclasses import dataclass
from fractions import Fraction
import re


def _reduce(letters):
    out = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def _expand_runs(letters):
    """Group consecutive identical letters into (symbol, exponent) runs."""
    runs = []
    for g, e in letters:
        if runs and runs[-1][0] == g and (runs[-1][1] > 0) == (e > 0):
            runs[-1][1] += e
        else:
            runs.append([g, e])
    return runs


def _parse_tokens(text):
    text = text.strip()
    if text in ("", "1"):
        return []
    return text.split()


@dataclass(frozen=True)
class FreeWord:
    """A reduced word in the free group on generators y_1..y_rank."""

    rank: int
    letters: tuple  # of (index, +-1)

    @staticmethod
    def make(rank, letters):
        for g, e in letters:
            assert 1 <= g <= rank and e in (1, -1), f"bad letter ({g},{e})"
        return FreeWord(rank, _reduce(letters))

    @staticmethod
    def generator(rank, i, exp=1):
        return FreeWord.make(rank, [(i, 1 if exp > 0 else -1)] * abs(exp))

    def __mul__(self, other):
        assert self.rank == other.rank
        return FreeWord(self.rank, _reduce(self.letters + other.letters))

    def inverse(self):
        return FreeWord(self.rank, tuple((g, -e) for g, e in reversed(self.letters)))

    def conjugate_by(self, w):
        """w^-1 * self * w"""
        return w.inverse() * self * w

    def is_identity(self):
        return not self.letters

    def abelianization(self):
        v = [0] * self.rank
        for g, e in self.letters:
            v[g - 1] += e
        return v

    def serialize(self):
        if not self.letters:
            return "1"
        parts = []
        for g, e in _expand_runs(self.letters):
            parts.append(f"y{g}" if e == 1 else f"y{g}^{e}")
        return " ".join(parts)

    @staticmethod
    def parse(rank, text):
        letters = []
        for tok in _parse_tokens(text):
            m = re.fullmatch(r"y(\d+)(?:\^(-?\d+))?", tok)
            assert m, f"bad free word token {tok!r}"
            g = int(m.group(1))
            e = int(m.group(2)) if m.group(2) else 1
            assert e != 0, f"zero exponent in {tok!r}"
            letters.extend([(g, 1 if e > 0 else -1)] * abs(e))
        return FreeWord.make(rank, letters)


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group B_n on the generators s_1..s_{n-1}."""

    n: int
    letters: tuple  # of (index, +-1)

    @staticmethod
    def make(n, letters):
        for i, e in letters:
            assert 1 <= i <= n - 1 and e in (1, -1), f"bad braid letter ({i},{e})"
        return BraidWord(n, tuple(letters))

    def __mul__(self, other):
        assert self.n == other.n
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.n, tuple((i, -e) for i, e in reversed(self.letters)))

    def free_cancel(self):
        return BraidWord(self.n, _reduce(self.letters))

    def permutation(self):
        """perm[k] = final position (1-based) of the strand starting at k+1."""
        occ = list(range(1, self.n + 1))  # position -> strand
        for i, _ in self.letters:
            occ[i - 1], occ[i] = occ[i], occ[i - 1]
        perm = [0] * self.n
        for pos, strand in enumerate(occ, start=1):
            perm[strand - 1] = pos
        return tuple(perm)

    def is_pure(self):
        return self.permutation() == tuple(range(1, self.n + 1))

    def serialize(self):
        if not self.letters:
            return "1"
        parts = []
        for i, e in _expand_runs(self.letters):
            parts.append(f"s{i}" if e == 1 else f"s{i}^{e}")
        return " ".join(parts)

    @staticmethod
    def parse(n, text):
        letters = []
        for tok in _parse_tokens(text):
            m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", tok)
            assert m, f"bad braid token {tok!r}"
            i = int(m.group(1))
            e = int(m.group(2)) if m.group(2) else 1
            assert e != 0, f"zero exponent in {tok!r}"
            letters.extend([(i, 1 if e > 0 else -1)] * abs(e))
        return BraidWord.make(n, letters)


@dataclass(frozen=True)
class PureBraidWord:
    """A word in the pure braid group P_n on the generators a_{i,j}."""

    n: int
    letters: tuple  # of ((i, j), +-1) with i < j

    @staticmethod
    def make(n, letters):
        for (i, j), e in letters:
            assert 1 <= i < j <= n and e in (1, -1), f"bad pure letter ({i},{j},{e})"
        return PureBraidWord(n, tuple(letters))

    def __mul__(self, other):
        assert self.n == other.n
        return PureBraidWord(self.n, self.letters + other.letters)

    def inverse(self):
        return PureBraidWord(self.n, tuple((p, -e) for p, e in reversed(self.letters)))

    def free_cancel(self):
        return PureBraidWord(self.n, _reduce(self.letters))

    def serialize(self):
        if not self.letters:
            return "1"
        parts = []
        for (i, j), e in _expand_runs(self.letters):
            parts.append(f"a({i},{j})" if e == 1 else f"a({i},{j})^{e}")
        return " ".join(parts)

    @staticmethod
    def parse(n, text):
        letters = []
        for tok in _parse_tokens(text):
            m = re.fullmatch(r"a\((\d+),(\d+)\)(?:\^(-?\d+))?", tok)
            assert m, f"bad pure braid token {tok!r}"
            i, j = int(m.group(1)), int(m.group(2))
            e = int(m.group(3)) if m.group(3) else 1
            assert e != 0, f"zero exponent in {tok!r}"
            letters.extend([((i, j), 1 if e > 0 else -1)] * abs(e))
        return PureBraidWord.make(n, letters)


def pair_list(n):
    """Unordered strand pairs of an n-strand braid in lexicographic order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def pair_index(i, j, n):
    assert 1 <= i < j <= n
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


@dataclass(frozen=True)
class AbelianBraidVector:
    """Element of H_1(P_n): integer coordinates on the pairs a_{i,j},
    in lexicographic pair order."""

    n: int
    coords: tuple

    @staticmethod
    def zero(n):
        return AbelianBraidVector(n, (0,) * (n * (n - 1) // 2))

    def coefficient(self, i, j):
        return self.coords[pair_index(i, j, self.n)]

    def __add__(self, other):
        assert self.n == other.n
        return AbelianBraidVector(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def relabel(self, strand_map):
        """Rename strands: strand s becomes strand_map[s] (1-based bijection)."""
        out = [0] * len(self.coords)
        for (i, j), c in zip(pair_list(self.n), self.coords):
            a, b = strand_map[i], strand_map[j]
            if a > b:
                a, b = b, a
            out[pair_index(a, b, self.n)] = c
        return AbelianBraidVector(self.n, tuple(out))


# ---------------------------------------------------------------------------
# Artin actions


def _apply_generator_images(word, images):
    """Substitute images[g] for each generator g in word (dict of FreeWord)."""
    out = []
    for g, e in word.letters:
        img = images.get(g)
        if img is None:
            out.append((g, e))
        else:
            out.extend(img.letters if e == 1 else img.inverse().letters)
    return FreeWord(word.rank, _reduce(out))


def _sigma_images(n, i, e):
    yi = FreeWord.generator(n, i)
    yi1 = FreeWord.generator(n, i + 1)
    if e == 1:
        return {i: yi * yi1 * yi.inverse(), i + 1: yi}
    return {i: yi1, i + 1: yi1.inverse() * yi * yi1}


def artin_full(braid, word):
    """Right action of a braid word on the free group F_n, letters applied
    left to right: s_i sends y_i to y_i y_{i+1} y_i^-1 and y_{i+1} to y_i."""
    assert braid.n == word.rank
    for i, e in braid.letters:
        word = _apply_generator_images(word, _sigma_images(braid.n, i, e))
    return word


def _pure_images(n, i, j, e):
    yi = FreeWord.generator(n, i)
    yj = FreeWord.generator(n, j)
    if e == 1:
        c_end = yi * yj                       # conjugator for y_i and y_j
        c_mid = yi * yj * yi.inverse() * yj.inverse()
    else:
        c_end = (yi * yj).inverse()
        c_mid = yj.inverse() * yi.inverse() * yj * yi
    images = {}
    for q in range(i, j + 1):
        c = c_end if q in (i, j) else c_mid
        yq = FreeWord.generator(n, q)
        images[q] = c * yq * c.inverse()
    return images


def artin_pure(pure, word):
    """Right action of a pure braid word on F_n.  a_{i,j} conjugates y_i and
    y_j by y_i y_j, the generators strictly between by [y_i, y_j], and fixes
    the rest."""
    assert pure.n == word.rank
    for (i, j), e in pure.letters:
        word = _apply_generator_images(word, _pure_images(pure.n, i, j, e))
    return word


def braids_act_equal(n, action_a, action_b):
    """Compare two braid/pure words by their Artin automorphisms.

    action_a and action_b are callables FreeWord -> FreeWord; equality is
    tested on every generator of F_n.
    """
    for q in range(1, n + 1):
        y = FreeWord.generator(n, q)
        if action_a(y) != action_b(y):
            return False
    return True


def pure_equal(a, b):
    """Equality of pure braid words in P_n, via the (faithful) Artin action."""
    assert a.n == b.n
    return braids_act_equal(a.n, lambda w: artin_pure(a, w), lambda w: artin_pure(b, w))


def braid_equal(a, b):
    """Equality of braid words in B_n, via the (faithful) Artin action."""
    assert a.n == b.n
    return braids_act_equal(a.n, lambda w: artin_full(a, w), lambda w: artin_full(b, w))


# ---------------------------------------------------------------------------
# Conversions between sigma words and pure generator words


def pure_to_sigma(pure):
    """Expand a pure braid word into braid generators via
    a_{i,j} = (s_{j-1} ... s_{i+1}) s_i^2 (s_{j-1} ... s_{i+1})^-1."""
    letters = []
    for (i, j), e in pure.letters:
        conj = list(range(j - 1, i, -1))
        letters.extend((k, 1) for k in conj)
        letters.extend([(i, e), (i, e)])
        letters.extend((k, -1) for k in reversed(conj))
    return BraidWord.make(pure.n, letters)


def permutation_braid(perm):
    """Canonical positive braid word lifting a permutation.

    perm[k] is the target position of the strand starting at position k+1.
    The word is reduced (its length is the inversion count), and since
    positive permutation braids are unique, any two reduced positive lifts
    agree in B_n.
    """
    n = len(perm)
    inv = [0] * n
    for s in range(1, n + 1):
        inv[perm[s - 1] - 1] = s
    occ = list(range(1, n + 1))
    letters = []
    for p in range(n):
        q = occ.index(inv[p], p)
        for r in range(q, p, -1):
            letters.append((r, 1))
            occ[r - 1], occ[r] = occ[r], occ[r - 1]
    return BraidWord.make(n, letters)


# sigma-conjugates of the pure generators: s_k a_{p,q} s_k^-1 expressed in
# the a_{i,j}.  The table below was derived by matching Artin automorphisms
# and is re-verified in the test suite for several strand counts.
def _conjugate_pure_letter_by_sigma(n, k, pq, e):
    """Pure word for s_k a_{p,q}^e s_k^-1, as a list of pure letters."""
    p, q = pq
    if e == -1:
        pos = _conjugate_pure_letter_by_sigma(n, k, pq, 1)
        return [(pair, -s) for pair, s in reversed(pos)]
    if k == p - 1:
        return [((p - 1, p), 1), ((p - 1, q), 1), ((p - 1, p), -1)]
    if k == p and p + 1 < q:
        return [((p + 1, q), 1)]
    if k == q - 1 and p < q - 1:
        return [((p, q), -1), ((p, q - 1), 1), ((p, q), 1)]
    if k == q:
        return [((p, q + 1), 1)]
    # k = p = q-1, or k disjoint from {p,q}, or p < k < q-1: a_{p,q} is fixed
    return [((p, q), 1)]


def _conjugate_pure_by_braid(n, braid_letters, pure_letters):
    """Pure word for w x w^-1, where w is a sigma word and x a pure word."""
    out = list(pure_letters)
    for k, e in reversed(braid_letters):
        new = []
        for pq, s in out:
            if e == 1:
                new.extend(_conjugate_pure_letter_by_sigma(n, k, pq, s))
            else:
                # s_k^-1 x s_k: conjugation by the inverse crossing.  Use the
                # identity s_k^-1 = s_k a_{k,k+1}^-1 (= a_{k,k+1}^-1 s_k).
                new.append(((k, k + 1), -1))
                new.extend(_conjugate_pure_letter_by_sigma(n, k, pq, s))
                new.append(((k, k + 1), 1))
        out = list(_reduce(new))
    return out


def sigma_to_pure(braid, certify=True):
    """Rewrite a braid word with trivial permutation in the a_{i,j}.

    Scans the word while tracking the coset of the prefix modulo P_n via its
    permutation.  A letter either moves to a longer coset representative
    (contributing nothing) or folds back, contributing a conjugate
    T s_i^{+-2} T^-1 of a generator by an explicit positive permutation
    braid T; those conjugates are expanded through the generator table.
    The result is certified against the input by Artin action equality.
    """
    assert braid.is_pure(), "sigma_to_pure needs a word with trivial permutation"
    n = braid.n

    def inversions(occ):
        return sum(1 for x in range(n) for y in range(x + 1, n) if occ[x] > occ[y])

    def occ_to_perm(occ):
        perm = [0] * n
        for pos, strand in enumerate(occ, start=1):
            perm[strand - 1] = pos
        return tuple(perm)

    occ = list(range(1, n + 1))
    out = []
    for i, e in braid.letters:
        increases = occ[i - 1] < occ[i]
        if e == 1 and increases:
            occ[i - 1], occ[i] = occ[i], occ[i - 1]
        elif e == -1 and not increases:
            occ[i - 1], occ[i] = occ[i], occ[i - 1]
        elif e == 1:
            occ[i - 1], occ[i] = occ[i], occ[i - 1]
            t = permutation_braid(occ_to_perm(occ))
            out.extend(_conjugate_pure_by_braid(n, t.letters, [((i, i + 1), 1)]))
        else:
            t = permutation_braid(occ_to_perm(occ))
            out.extend(_conjugate_pure_by_braid(n, t.letters, [((i, i + 1), -1)]))
            occ[i - 1], occ[i] = occ[i], occ[i - 1]
    result = PureBraidWord.make(n, _reduce(out))
    if certify:
        ok = braids_act_equal(n, lambda w: artin_pure(result, w),
                              lambda w: artin_full(braid, w))
        assert ok, "combing produced a word with the wrong Artin action"
    return result


# ---------------------------------------------------------------------------
# Abelianizations


def linking_numbers(braid):
    """Linking numbers of a braid word, indexed by unordered pairs of strand
    start positions in lexicographic order.

    Each pair coordinate is half the signed crossing count between the two
    strands, so a_{i,j} contributes exactly 1 to the (i, j) coordinate.  For
    pure words all coordinates are integers; in general they may be odd
    multiples of 1/2 and are returned as Fractions.
    """
    n = braid.n
    counts = [0] * (n * (n - 1) // 2)
    occ = list(range(1, n + 1))
    for i, e in braid.letters:
        a, b = occ[i - 1], occ[i]
        if a > b:
            a, b = b, a
        counts[pair_index(a, b, n)] += e
        occ[i - 1], occ[i] = occ[i], occ[i - 1]
    coords = tuple(c // 2 if c % 2 == 0 else Fraction(c, 2) for c in counts)
    return AbelianBraidVector(n, coords)


def abelianize_pure(pure):
    """Image of a pure braid word in H_1(P_n) = Z^{n(n-1)/2}."""
    n = pure.n
    coords = [0] * (n * (n - 1) // 2)
    for (i, j), e in pure.letters:
        coords[pair_index(i, j, n)] += e
    return AbelianBraidVector(n, tuple(coords))
