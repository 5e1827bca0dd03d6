"""Weyl group elements, minimal coset representatives and Bruhat covers.

Elements are canonically the integer matrix of their action on the weight
lattice in fundamental coordinates; reduced words are certificates only.
All words are 1-based simple-root indices.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .roots import RootSystem, identity_matrix, mat_mul, mat_vec


class WeylElement:
    """One Weyl group element.

    mf / mr: action on fundamental / simple-root coordinates.
    mfi / mri: the same for the inverse element.
    """

    __slots__ = ("mf", "mr", "mfi", "mri", "length", "word", "_sk")

    def __init__(self, mf, mr, mfi, mri, length, word, sk):
        self.mf = mf
        self.mr = mr
        self.mfi = mfi
        self.mri = mri
        self.length = length
        self.word = word
        self._sk = sk

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self._sk == other._sk and self.mf == other.mf

    def __hash__(self):
        return hash((self._sk, self.mf))

    def __repr__(self):
        return f"w[{','.join(map(str, self.word)) or 'e'}]"

    def word_str(self):
        return ",".join(map(str, self.word))


def _is_negative(vec):
    for x in vec:
        if x:
            return x < 0
    return False


class WeylGroup:
    """Element algebra for the Weyl group of one root system."""

    def __init__(self, R: RootSystem):
        self.system = R
        self._sk = (R.label, R.cartan)
        n = R.rank
        self.gens_f = [R.fund_reflection(i) for i in range(1, n + 1)]
        self.gens_r = [R.root_reflection(i) for i in range(1, n + 1)]
        eye = identity_matrix(n)
        self.identity = WeylElement(eye, eye, eye, eye, 0, (), self._sk)
        self._coset_tables = {}
        self._all = None
        self._bruhat_memo = {}

    # -- elementary operations ----------------------------------------------

    def _element(self, mf, mr, mfi, mri):
        length = self.length_of(mr)
        word = self.reduced_word_of(mr, mri)
        return WeylElement(mf, mr, mfi, mri, length, word, self._sk)

    def left_gen(self, i, w, length=None):
        """s_i * w.  If the new length is known, skip recanonicalisation."""
        mf = mat_mul(self.gens_f[i - 1], w.mf)
        mr = mat_mul(self.gens_r[i - 1], w.mr)
        mfi = mat_mul(w.mfi, self.gens_f[i - 1])
        mri = mat_mul(w.mri, self.gens_r[i - 1])
        if length is None:
            return self._element(mf, mr, mfi, mri)
        return WeylElement(mf, mr, mfi, mri, length, (i,) + w.word, self._sk)

    def right_gen(self, w, i):
        mf = mat_mul(w.mf, self.gens_f[i - 1])
        mr = mat_mul(w.mr, self.gens_r[i - 1])
        mfi = mat_mul(self.gens_f[i - 1], w.mfi)
        mri = mat_mul(self.gens_r[i - 1], w.mri)
        return self._element(mf, mr, mfi, mri)

    def mul(self, a, b):
        return self._element(
            mat_mul(a.mf, b.mf), mat_mul(a.mr, b.mr),
            mat_mul(b.mfi, a.mfi), mat_mul(b.mri, a.mri),
        )

    def inverse(self, w):
        return WeylElement(w.mfi, w.mri, w.mf, w.mr, w.length,
                           tuple(reversed(w.word)), self._sk)

    def from_word(self, word):
        """Product of simple reflections; the word need not be reduced."""
        w = self.identity
        for i in word:
            i = int(i)
            if not 1 <= i <= self.system.rank:
                raise ValueError(f"word letter {i} out of range 1..{self.system.rank}")
            w = self.right_gen(w, i)
        return w

    # -- length / words via the root action ----------------------------------

    def act_root(self, w, beta):
        return mat_vec(w.mr, beta)

    def act_weight(self, w, f):
        return mat_vec(w.mf, f)

    def inv_act_weight(self, w, f):
        return mat_vec(w.mfi, f)

    def length_of(self, mr):
        R = self.system
        return sum(1 for b in R.positive_roots if _is_negative(mat_vec(mr, b)))

    def send_simple_to_negative(self, mr, i):
        """True iff w(alpha_i) < 0 for the element with root matrix mr."""
        return _is_negative(tuple(row[i - 1] for row in mr))

    def reduced_word_of(self, mr, mri=None):
        """Lexicographically smallest reduced word (greedy left descents)."""
        n = self.system.rank
        if mri is None:
            from .roots import mat_inverse
            mri = tuple(tuple(int(x) for x in row) for row in mat_inverse(mr))
        cur, curi = mr, mri
        word = []
        eye = identity_matrix(n)
        while cur != eye:
            i = next(i for i in range(1, n + 1) if self.send_simple_to_negative(curi, i))
            word.append(i)
            cur = mat_mul(self.gens_r[i - 1], cur)
            curi = mat_mul(curi, self.gens_r[i - 1])
        return tuple(word)

    def inversion_set(self, w):
        """R+ cap w^{-1} R-  =  {beta > 0 : w(beta) < 0};  size ell(w)."""
        R = self.system
        return frozenset(b for b in R.positive_roots if _is_negative(mat_vec(w.mr, b)))

    def descends_right(self, w, i):
        """ell(w s_i) < ell(w), i.e. w(alpha_i) < 0."""
        return self.send_simple_to_negative(w.mr, i)

    def ascends_left(self, w, i):
        """ell(s_i w) > ell(w), i.e. w^{-1}(alpha_i) > 0."""
        return not self.send_simple_to_negative(w.mri, i)

    def longest(self, nodes=None):
        """Longest element of W, or of the parabolic W_P on the given nodes."""
        nodes = sorted(nodes) if nodes is not None else list(range(1, self.system.rank + 1))
        w = self.identity
        while True:
            i = next((i for i in nodes if not self.descends_right(w, i)), None)
            if i is None:
                return w
            w = self.right_gen(w, i)

    def all_elements(self):
        """Full enumeration of W (memoised); intended for small ranks."""
        if self._all is None:
            seen = {self.identity.mf: self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for i in range(1, self.system.rank + 1):
                        if self.ascends_left(w, i):
                            cand = self.left_gen(i, w, length=w.length + 1)
                            if cand.mf not in seen:
                                seen[cand.mf] = cand
                                nxt.append(cand)
                frontier = nxt
            self._all = tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))
        return self._all

    # -- reflections indexed by positive roots -------------------------------

    @property
    def reflections(self):
        """{positive root beta: the reflection s_beta as an element}."""
        if not hasattr(self, "_refl"):
            R = self.system
            n = R.rank
            refl = {}
            for beta in R.positive_roots:
                fund = R.fund_of_root(beta)
                cols = []
                for j in range(n):
                    ej = tuple(int(k == j) for k in range(n))
                    c = R.coroot_pairing(ej, beta)
                    col = tuple(ej[k] - c * fund[k] for k in range(n))
                    assert all(Fraction(x).denominator == 1 for x in col)
                    cols.append(tuple(int(x) for x in col))
                mf = tuple(tuple(cols[j][k] for j in range(n)) for k in range(n))
                mr = self._conjugate_to_root(mf)
                refl[beta] = WeylElement(mf, mr, mf, mr, self.length_of(mr),
                                         self.reduced_word_of(mr, mr), self._sk)
            self._refl = refl
        return self._refl

    def _conjugate_to_root(self, mf):
        R = self.system
        frac = mat_mul(R.inverse_cartan, mat_mul(mf, R.cartan))
        out = []
        for row in frac:
            r = []
            for x in row:
                assert x.denominator == 1 if isinstance(x, Fraction) else True
                r.append(int(x))
            out.append(tuple(r))
        return tuple(out)

    # -- bruhat order (used as a test oracle) --------------------------------

    def bruhat_le(self, v, w):
        if v.length > w.length:
            return False
        if v.length == 0:
            return True
        key = (v.mf, w.mf)
        memo = self._bruhat_memo
        if key not in memo:
            i = w.word[0]
            wp = self.left_gen(i, w)  # shorter
            if self.send_simple_to_negative(v.mri, i):  # ell(s_i v) < ell(v)
                memo[key] = self.bruhat_le(self.left_gen(i, v), wp)
            else:
                memo[key] = self.bruhat_le(v, wp)
        return memo[key]


class CosetTable:
    """Minimal-length representatives of W/W_P with their Bruhat covers.

    covers: triples (v, w, beta) with w = s_beta v, ell(w) = ell(v)+1,
    both in W^P and beta a positive root.
    """

    def __init__(self, wg: WeylGroup, P):
        self.wg = wg
        self.parabolic = P
        R = wg.system
        levi = sorted(P.levi_simple)

        def in_wp(w):
            return all(not wg.send_simple_to_negative(w.mr, j) for j in levi)

        seen = {wg.identity.mf: wg.identity}
        frontier = [wg.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, R.rank + 1):
                    if wg.ascends_left(w, i):
                        cand = wg.left_gen(i, w, length=w.length + 1)
                        if cand.mf not in seen and in_wp(cand):
                            seen[cand.mf] = cand
                            nxt.append(cand)
            frontier = nxt
        # rebuild with canonical (lex-smallest) reduced words for stable output
        canon = [wg._element(w.mf, w.mr, w.mfi, w.mri) for w in seen.values()]
        self.elements = tuple(sorted(canon, key=lambda w: (w.length, w.word)))
        self.index = {w: k for k, w in enumerate(self.elements)}
        self._by_mf = {w.mf: w for w in self.elements}
        self.by_length = {}
        for w in self.elements:
            self.by_length.setdefault(w.length, []).append(w)
        self.longest = self.elements[-1]
        assert self.longest.length == P.dim_gp

        covers = []
        for v in self.elements:
            for beta, s in wg.reflections.items():
                mf = mat_mul(s.mf, v.mf)
                w = self._by_mf.get(mf)
                if w is not None and w.length == v.length + 1:
                    covers.append((v, w, beta))
        self.covers = tuple(covers)

        w0 = wg.longest()
        w0p = wg.longest(levi)
        self.dual = {}
        for w in self.elements:
            u = wg.mul(wg.mul(w0, w), w0p)
            u = self._project_min(u, levi)
            ww = self._by_mf.get(u.mf)
            assert ww is not None and ww.length == P.dim_gp - w.length
            self.dual[w] = ww

    def _project_min(self, u, levi):
        wg = self.wg
        while True:
            j = next((j for j in levi if wg.send_simple_to_negative(u.mr, j)), None)
            if j is None:
                return u
            u = wg.right_gen(u, j)

    def member(self, w):
        return w.mf in self._by_mf

    def canonical(self, w):
        """The stored (canonical-word) copy of an element of W^P."""
        try:
            return self._by_mf[w.mf]
        except KeyError:
            raise ValueError(f"element {w!r} is not a minimal coset representative")

    def codim(self, w):
        return self.parabolic.dim_gp - w.length

    def element_from_word(self, word):
        w = self.wg.from_word(word)
        if not self.member(w):
            raise ValueError(
                f"word {','.join(map(str, word))} does not reduce to a W^P element")
        return self.canonical(w)

    def __len__(self):
        return len(self.elements)


@lru_cache(maxsize=None)
def group(R: RootSystem):
    return WeylGroup(R)


def minimal_coset_reps(R, P):
    """CosetTable for (R, P), memoised per Weyl group."""
    wg = group(R)
    key = frozenset(P.levi_simple)
    if key not in wg._coset_tables:
        wg._coset_tables[key] = CosetTable(wg, P)
    return wg._coset_tables[key]


def dual_rep(R, P, w):
    """Poincare-dual indexing: minimal representative of w0 w w0^P."""
    return minimal_coset_reps(R, P).dual[w]
