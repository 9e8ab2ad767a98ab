"""Normal forms in the dynamical matrix algebra and its det-localization.

Generators ``t_ij`` are numbered row-major, ``gen = (i-1)*n + (j-1)``.  An
element is a map ``(word, d) -> CoeffFn`` where ``word`` is a
non-decreasing tuple of generator numbers (the ordered monomial ``t^A``),
``d`` is the power of ``det^{-1}`` and the coefficient, a function of the
banks ``LAM`` and ``MU``, sits to the left of the monomial.

Unreduced words ("free words") are tuples of atoms: a generator number or
``DINV`` for ``det^{-1}``.  They are what relation instances, antipodes
and pairings are written in before normalizing.
"""

import itertools
import random
from collections import Counter

from .scalars import LAM, MU, Field, vadd, vneg

DINV = -1


class Algebra:
    """Session object: the scalar field, the reduction rules and caches."""

    def __init__(self, n):
        self.n = n
        self.field = Field(n)
        self.ngens = n * n
        self.rules = self._build_rules()
        self._insert_cache = {}
        self._rule_cache = {}
        self._mulword_cache = {}
        self._weight_cache = {}
        self._det = None
        self._det_powers = {}
        self.zero = Element(self, {})
        self.one = Element(self, {((), 0): self.field.one})

    def __repr__(self):
        return f"Algebra(n={self.n})"

    # -- generators ---------------------------------------------------

    def gen(self, i, j):
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"t[{i},{j}] out of range for n={self.n}")
        return (i - 1) * self.n + (j - 1)

    def gen_indices(self, g):
        return divmod(g, self.n)[0] + 1, g % self.n + 1

    def t(self, i, j):
        return Element(self, {((self.gen(i, j),), 0): self.field.one})

    def dinv(self, power=1):
        return Element(self, {((), power): self.field.one})

    def ml(self, f):
        """mu_l(f): f must only involve the LAM bank."""
        f = self.field.coerce(f)
        return Element(self, {((), 0): f}) if f else self.zero

    def mr(self, f):
        """mu_r(f): f written in the LAM bank, moved to the MU bank."""
        f = self.field.coerce(f).transform(moves={LAM: MU})
        return Element(self, {((), 0): f}) if f else self.zero

    def scalar(self, f):
        """A function of both banks placed on the left."""
        f = self.field.coerce(f)
        return Element(self, {((), 0): f}) if f else self.zero

    def det(self):
        """sum_sigma mu_l(S(sigma)) t_{sigma(1)1} ... t_{sigma(n)n}."""
        if self._det is None:
            F = self.field
            full = tuple(range(1, self.n + 1))
            terms = []
            for sigma in itertools.permutations(full):
                word = tuple(self.gen(sigma[k], k + 1) for k in range(self.n))
                terms.append((F.gen_sign(sigma, full), word))
            self._det = self.from_free(terms)
        return self._det

    def det_power(self, k):
        if k == 0:
            return self.one
        hit = self._det_powers.get(k)
        if hit is None:
            hit = self.det_power(k - 1) * self.det()
            self._det_powers[k] = hit
        return hit

    # -- weights ------------------------------------------------------

    def weights(self, word, d=0):
        """(left, right) weight of t^word det^{-d}."""
        key = (word, d)
        hit = self._weight_cache.get(key)
        if hit is not None:
            return hit
        n = self.n
        wl = [-d] * n
        wr = [-d] * n
        for g in word:
            if g == DINV:
                for k in range(n):
                    wl[k] -= 1
                    wr[k] -= 1
            else:
                i, j = divmod(g, n)
                wl[i] += 1
                wr[j] += 1
        hit = (tuple(wl), tuple(wr))
        self._weight_cache[key] = hit
        return hit

    # -- reduction rules ----------------------------------------------

    def _build_rules(self):
        """Rewrite rules for every out-of-order adjacent pair (y, x), y > x.

        Each rule is a list of (coefficient, a, b) meaning
        t_y t_x -> sum coefficient * t_a t_b with a <= b.
        """
        F = self.field
        n = self.n
        rules = {}
        for y in range(n * n):
            for x in range(y):
                r1, c1 = divmod(y, n)
                r2, c2 = divmod(x, n)
                r1, c1, r2, c2 = r1 + 1, c1 + 1, r2 + 1, c2 + 1
                if r1 == r2:
                    # t_il t_ik -> h(mu_k - mu_l) t_ik t_il
                    i, k, l = r1, c2, c1
                    rules[(y, x)] = [(F.h(k, l, MU), x, y)]
                elif c1 == c2:
                    # t_jk t_ik -> h(lam_j - lam_i)^{-1} t_ik t_jk
                    j, i = r1, r2
                    rules[(y, x)] = [(F.h(j, i).inverse(), x, y)]
                elif c1 > c2:
                    # t_jl t_ik
                    j, l, i, k = r1, c1, r2, c2
                    ginv = F.g(i, j).inverse()
                    il, jk = self.gen(i, l), self.gen(j, k)
                    rules[(y, x)] = [
                        (F.h(j, i).inverse() - F.h(l, k, MU) * ginv, il, jk),
                        (F.g(k, l, MU) * ginv, x, y),
                    ]
                else:
                    # t_jk t_il
                    j, k, i, l = r1, c1, r2, c2
                    ginv = F.g(i, j).inverse()
                    ik, jl = self.gen(i, k), self.gen(j, l)
                    rules[(y, x)] = [
                        (ginv, x, y),
                        (F.h(j, i).inverse() - F.h(k, l, MU) * ginv, ik, jl),
                    ]
        return rules

    def flip_rule_sign(self, key=None, term=0):
        """Negate one coefficient of one rewrite rule in place (a deliberate
        defect for exercising the checkers).  Returns the rule key."""
        if key is None:
            key = min(self.rules)
        c, a, b = self.rules[key][term]
        self.rules[key][term] = (-c, a, b)
        for cache in (self._insert_cache, self._rule_cache, self._mulword_cache):
            cache.clear()
        self._det = None
        self._det_powers = {}
        for name in [k for k in self.__dict__ if k.endswith("_cache") or k.endswith("_atoms")]:
            if isinstance(self.__dict__[name], dict):
                self.__dict__[name].clear()
        self.__dict__.pop("_pairings", None)
        return key

    def _shifted_rule(self, y, x, wl, wr):
        key = (y, x, wl, wr)
        hit = self._rule_cache.get(key)
        if hit is None:
            hit = [(c.transform(shifts={LAM: vneg(wl), MU: vneg(wr)}), a, b)
                   for c, a, b in self.rules[(y, x)]]
            self._rule_cache[key] = hit
        return hit

    def _insert(self, word, g):
        """Normal form of (ordered word) * t_g as {word: coefficient}."""
        key = (word, g)
        hit = self._insert_cache.get(key)
        if hit is not None:
            return hit
        if not word or word[-1] <= g:
            res = {word + (g,): self.field.one}
        else:
            y = word[-1]
            prefix = word[:-1]
            wl, wr = self.weights(prefix)
            res = {}
            for c, a, b in self._shifted_rule(y, g, wl, wr):
                for w1, c1 in self._insert(prefix, a).items():
                    cc = c * c1
                    for w2, c2 in self._insert(w1, b).items():
                        _acc(res, w2, cc * c2)
        self._insert_cache[key] = res
        return res

    def mul_words(self, w1, w2):
        """Normal form of the product of two ordered words."""
        if not w2:
            return {w1: self.field.one}
        key = (w1, w2)
        hit = self._mulword_cache.get(key)
        if hit is not None:
            return hit
        cur = {w1: self.field.one}
        for g in w2:
            nxt = {}
            for w, c in cur.items():
                for w_new, c_new in self._insert(w, g).items():
                    _acc(nxt, w_new, c * c_new)
            cur = nxt
        self._mulword_cache[key] = cur
        return cur

    # -- free words ---------------------------------------------------

    def from_free(self, terms):
        """Normal form of sum coefficient * word over unreduced atom words."""
        out = {}
        for coeff, word in terms:
            if not coeff:
                continue
            gens = tuple(a for a in word if a != DINV)
            d = len(word) - len(gens)
            # det^{-1} commutes with every t_ij, so it only contributes d
            for w, c in self.reduce_word(gens).items():
                _acc(out, (w, d), coeff * c)
        return Element(self, out)

    def reduce_word(self, word):
        """Normal form of an arbitrary generator word, via insertion."""
        cur = {(): self.field.one}
        for g in word:
            nxt = {}
            for w, c in cur.items():
                for w_new, c_new in self._insert(w, g).items():
                    _acc(nxt, w_new, c * c_new)
            cur = nxt
        return cur

    def rewrite(self, word, strategy="leftmost", first=None):
        """Normal form of a generator word by plain term rewriting.

        Independent of the insertion cache: repeatedly applies one rule at
        the leftmost (or rightmost) out-of-order adjacent pair.  ``first``
        forces the position of the first rewrite step.
        """
        F = self.field
        state = {tuple(word): F.one}
        done = {}
        forced = first
        while state:
            w, c = state.popitem()
            if forced is not None:
                pos = forced
                forced = None
                if not w[pos] > w[pos + 1]:
                    raise ValueError(f"no rule at position {pos} of {w}")
            else:
                pos = _find_pair(w, strategy)
            if pos is None:
                _acc(done, w, c)
                continue
            prefix, suffix = w[:pos], w[pos + 2:]
            wl, wr = self.weights(prefix)
            for rc, a, b in self.rules[(w[pos], w[pos + 1])]:
                rc = rc.transform(shifts={LAM: vneg(wl), MU: vneg(wr)})
                _acc(state, prefix + (a, b) + suffix, c * rc)
        return done

    # -- checks -------------------------------------------------------

    def overlaps(self):
        """All generator triples (c, b, a) with c > b > a."""
        return list(itertools.combinations(range(self.ngens - 1, -1, -1), 3))

    def check_confluence(self):
        """Resolve every overlap t_c t_b t_a both ways.

        Returns a list of (triple, residue) where residue is the
        difference of the two normal forms as an Element (zero on success).
        """
        out = []
        for trip in self.overlaps():
            left = self.rewrite(trip, first=0)
            right = self.rewrite(trip, first=1)
            diff = {}
            for w, c in left.items():
                _acc(diff, w, c)
            for w, c in right.items():
                _acc(diff, w, -c)
            out.append((trip, Element(self, {(w, 0): c for w, c in diff.items()})))
        return out

    def random_words(self, count, max_len, seed):
        rng = random.Random(seed)
        words = []
        for _ in range(count):
            length = rng.randint(1, max_len)
            words.append(tuple(rng.randrange(self.ngens) for _ in range(length)))
        return words

    def relation_instances(self):
        """All instances of the defining relations as (label, free sum)
        with the relation written as LHS - RHS."""
        F = self.field
        n = self.n
        t = self.gen
        out = []
        rng = range(1, n + 1)
        for a in rng:
            for b in rng:
                for d in rng:
                    if b < d:
                        out.append((f"row a={a} b={b} d={d}", [
                            (F.h(b, d, MU), (t(a, b), t(a, d))),
                            (-F.one, (t(a, d), t(a, b)))]))
        for a in rng:
            for c in rng:
                for b in rng:
                    if a < c:
                        out.append((f"col a={a} c={c} b={b}", [
                            (F.h(c, a), (t(c, b), t(a, b))),
                            (-F.one, (t(a, b), t(c, b)))]))
        for a, c in itertools.combinations(rng, 2):
            for b, d in itertools.combinations(rng, 2):
                out.append((f"mix1 a={a} c={c} b={b} d={d}", [
                    (F.one, (t(a, b), t(c, d))),
                    (-F.one, (t(c, d), t(a, b))),
                    (F.h(b, d, MU) - F.h(c, a), (t(c, b), t(a, d)))]))
                out.append((f"mix2 a={a} c={c} b={b} d={d}", [
                    (F.g(b, d, MU), (t(a, b), t(c, d))),
                    (-F.g(a, c), (t(c, d), t(a, b))),
                    (F.h(a, c) - F.h(d, b, MU), (t(a, d), t(c, b)))]))
        return out


def _find_pair(word, strategy):
    idx = range(len(word) - 1)
    if strategy == "rightmost":
        idx = reversed(idx)
    for k in idx:
        if word[k] > word[k + 1]:
            return k
    return None


def _acc(d, key, value):
    prev = d.get(key)
    if prev is None:
        if value:
            d[key] = value
    else:
        s = prev + value
        if s:
            d[key] = s
        else:
            del d[key]


class Element:
    """Normal-form element; immutable by convention."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, Element):
            return other
        try:
            return self.alg.scalar(other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return Element(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        alg = self.alg
        out = {}
        for (w1, d1), c1 in self.terms.items():
            wl, wr = alg.weights(w1, d1)
            shifts = {LAM: vneg(wl), MU: vneg(wr)}
            for (w2, d2), c2 in other.terms.items():
                cc = c1 * c2.transform(shifts=shifts)
                for w, c in alg.mul_words(w1, w2).items():
                    _acc(out, (w, d1 + d2), cc * c)
        return Element(alg, out)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, k):
        out = self.alg.one
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[k] for k, c in self.terms.items())

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def max_dinv(self):
        return max((d for (_, d) in self.terms), default=0)

    def homogeneous_parts(self):
        """Split into bihomogeneous pieces keyed by (left, right) weight."""
        parts = {}
        for (w, d), c in self.terms.items():
            key = self.alg.weights(w, d)
            parts.setdefault(key, {})[(w, d)] = c
        return {k: Element(self.alg, v) for k, v in parts.items()}

    def weight(self):
        """The common weight; raises if not homogeneous."""
        parts = self.homogeneous_parts()
        if len(parts) != 1:
            raise ValueError("element is not homogeneous")
        return next(iter(parts))

    def to_free(self):
        """Unreduced form: list of (coefficient, atom word)."""
        return [(c, w + (DINV,) * d) for (w, d), c in self.terms.items()]

    def clear_det(self, D=None):
        """x * det^D with every det^{-1} cancelled; an F_R(M(n)) element."""
        alg = self.alg
        if D is None:
            D = self.max_dinv()
        out = {}
        for (w, d), c in self.terms.items():
            if d > D:
                raise ValueError(f"clearing power {D} below det^-{d}")
            piece = Element(alg, {(w, 0): c}) * alg.det_power(D - d)
            for k, v in piece.terms.items():
                _acc(out, k, v)
        return Element(alg, out)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({self})"


def equal_mod_det(x, y, D=None):
    """True iff x det^D and y det^D agree in F_R(M(n)).

    ``D`` defaults to the largest det^{-1} power occurring.
    """
    diff = x - y
    if D is None:
        D = diff.max_dinv()
    return diff.clear_det(D).is_zero()


def _leading_word(x):
    return max(w for (w, _) in x.terms)


def divide_by_det(y):
    """z with z * det == y for a dinv-free y, or None if det does not divide y.

    Greedy division on the lexicographically largest normal word: the
    leading word of m * det is m merged with the leading word of det.
    The quotient is certified by the remainder reaching zero.
    """
    alg = y.alg
    if any(d for (_, d) in y.terms):
        raise ValueError("divide_by_det expects an element without dinv")
    det = alg.det()
    lead = Counter(_leading_word(det))
    quotient = {}
    rem = y
    for _ in range(10000):
        if rem.is_zero():
            return Element(alg, quotient)
        lw = _leading_word(rem)
        need = Counter(lw)
        need.subtract(lead)
        if any(v < 0 for v in need.values()):
            return None
        m = tuple(sorted(need.elements()))
        mono = Element(alg, {(m, 0): alg.field.one})
        prod = mono * det
        if _leading_word(prod) != lw:
            return None
        f = rem.terms[(lw, 0)] / prod.terms[(lw, 0)]
        _acc(quotient, (m, 0), f)
        rem = rem - alg.scalar(f) * prod
    return None


def simplify_mod_det(x, cap=None):
    """Rewrite x with as few det^{-1} factors as exact division allows.

    Returns (element, clear_power).  ``cap`` bounds the det-clearing power;
    exceeding it raises ValueError.
    """
    D = x.max_dinv()
    if D == 0:
        return x, 0
    if cap is not None and D > cap:
        raise ValueError(f"needs det-clearing power {D}, above the cap {cap}")
    y = x.clear_det(D)
    left = D
    while left and not y.is_zero():
        z = divide_by_det(y)
        if z is None:
            break
        y, left = z, left - 1
    if y.is_zero():
        return y, D
    return (y * x.alg.dinv(left) if left else y), D


def word_str(alg, word, d=0):
    parts = []
    for g in word:
        i, j = alg.gen_indices(g)
        parts.append(f"t[{i},{j}]")
    parts.extend(["dinv"] * d)
    return " ".join(parts)


def format_element(x, coeff_str=str):
    if x.is_zero():
        return "0"
    chunks = []
    for (w, d), c in sorted(x.terms.items(), key=lambda kv: (len(kv[0][0]), kv[0])):
        mono = word_str(x.alg, w, d)
        if not mono:
            chunks.append(coeff_str(c))
        elif c.is_one():
            chunks.append(mono)
        else:
            chunks.append(f"[{coeff_str(c)}] {mono}")
    return " + ".join(chunks)


def weight_of_free(alg, word):
    wl = (0,) * alg.n
    wr = (0,) * alg.n
    for a in word:
        l, r = alg.weights((a,))
        wl, wr = vadd(wl, l), vadd(wr, r)
    return wl, wr

