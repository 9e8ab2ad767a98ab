"""The cobraiding pairing <X, a> for X in the co-opposite algebra and a in A.

Values are difference operators.  The pairing is evaluated on free atom
words by recursion through the product rules, splitting the second
argument by its leftmost atom (or the first argument, on request), with
the generator table and the det^{-1} values as base cases.

Coefficients of normal-form monomials are pulled out by the moment-map
rules.  On the co-opposite side mu_l and mu_r trade places, so for
monomials X, a of A-weights (wl, wr) and value g T_gamma,

    <F X, G a> = F(lam + wl(X) + gamma, lam) G(lam, lam + wr(a) + gamma) g T_gamma

with gamma = -(wr(X) + wr(a)).
"""

import itertools

from .coalg import DiffOp
from .extcorep import ExtElement
from .hopf import antipode, antipode_inverse, dagger, star
from .minors import hat, xi
from .nfcore import DINV, Element
from .report import Checker, Outcome, equal_outcome
from .rmatrix import r_entry
from .scalars import LAM, MU, ones, subset_vector, unit_vector, vadd, vneg, vsub


def _weights(alg, word):
    return alg.weights(tuple(a for a in word if a != DINV), word.count(DINV))


def _is_diagonal_word(alg, word):
    return all(a == DINV or alg.gen_indices(a)[0] == alg.gen_indices(a)[1] for a in word)


def _counit_word(alg, word):
    """epsilon on an atom word; the co-opposite counit is the same map."""
    if not _is_diagonal_word(alg, word):
        return DiffOp.zero(alg.field)
    return DiffOp.shift_op(alg.field, vneg(_weights(alg, word)[0]))


def _atom_split(alg, a):
    """Delta of an atom as a list of (left atom, right atom)."""
    if a == DINV:
        return [(DINV, DINV)]
    i, j = alg.gen_indices(a)
    return [(alg.gen(i, m), alg.gen(m, j)) for m in range(1, alg.n + 1)]


def _word_splits(alg, word):
    """Delta of a free atom word: every split has coefficient 1."""
    for choice in itertools.product(*(_atom_split(alg, a) for a in word)):
        yield tuple(c[0] for c in choice), tuple(c[1] for c in choice)


def base_pair(alg, x, a):
    """Pairing of two single atoms."""
    F = alg.field
    n = alg.n
    if x == DINV and a == DINV:
        return DiffOp.shift_op(F, ones(n, 2))
    if x == DINV or a == DINV:
        i, j = alg.gen_indices(a if x == DINV else x)
        if i != j:
            return DiffOp.zero(F)
        return DiffOp.shift_op(F, vadd(ones(n), vneg(unit_vector(n, i))))
    i, j = alg.gen_indices(x)
    k, l = alg.gen_indices(a)
    c = r_entry(F, j, l, i, k)
    if not c:
        return DiffOp.zero(F)
    shift = vneg(vadd(unit_vector(n, i), unit_vector(n, k)))
    return DiffOp.shift_op(F, shift, F.tau_pow(-1) * c)


class Pairing:
    """Memoized evaluation of the pairing on one algebra.

    ``split`` selects the default recursion: ``"a"`` peels the leftmost
    atom of the second argument, ``"X"`` that of the first.
    """

    def __init__(self, alg, split="a"):
        if split not in ("a", "X"):
            raise ValueError("split must be 'a' or 'X'")
        self.alg = alg
        self.split = split
        self._cache = {}

    def words(self, X, a):
        """<X, a> for free atom words."""
        key = (X, a)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._words(X, a)
            self._cache[key] = hit
        return hit

    def _words(self, X, a):
        alg = self.alg
        F = alg.field
        if not a:
            return _counit_word(alg, X)
        if not X:
            return _counit_word(alg, a)
        wlX, wrX = _weights(alg, X)
        wla, wra = _weights(alg, a)
        if vadd(wrX, wra) != vadd(wlX, wla):
            return DiffOp.zero(F)
        if len(X) == 1 and len(a) == 1:
            return base_pair(alg, X[0], a[0])
        out = DiffOp.zero(F)
        if len(a) > 1 and (self.split == "a" or len(X) == 1):
            # <X, a1 a'> = sum <X'', a1> T_rho <X', a'>, rho = wl(X'')
            a1, rest = a[:1], a[1:]
            for X1, X2 in _word_splits(alg, X):
                left = self.words(X2, a1)
                if left.is_zero():
                    continue
                right = self.words(X1, rest)
                if right.is_zero():
                    continue
                rho = _weights(alg, X2)[0]
                out = out + left * DiffOp.shift_op(F, rho) * right
            return out
        # <x1 X', a> = sum <x1, a'> T_rho <X', a''>, rho = wr(a')
        x1, rest = X[:1], X[1:]
        for a1, a2 in _word_splits(alg, a):
            left = self.words(x1, a1)
            if left.is_zero():
                continue
            right = self.words(rest, a2)
            if right.is_zero():
                continue
            rho = _weights(alg, a1)[1]
            out = out + left * DiffOp.shift_op(F, rho) * right
        return out

    def free(self, X_terms, a_terms):
        """Bilinear extension to unreduced sums of (coefficient, word)."""
        alg = self.alg
        out = DiffOp.zero(alg.field)
        for FX, Xw in X_terms:
            wlX, wrX = _weights(alg, Xw)
            for Ga, aw in a_terms:
                val = self.words(Xw, aw)
                if val.is_zero():
                    continue
                _, wra = _weights(alg, aw)
                gamma, g = val.single()
                cX = FX.transform(moves={MU: LAM}, shifts={LAM: vadd(wlX, gamma)})
                ca = Ga.transform(moves={MU: LAM}, shifts={MU: vadd(wra, gamma)})
                out = out + DiffOp(alg.field, {gamma: cX * ca * g})
        return out

    def __call__(self, X, a):
        return self.free(_free(X), _free(a))


def _free(x):
    return x.to_free() if isinstance(x, Element) else list(x)


def _pairing(alg, split="a"):
    cache = alg.__dict__.setdefault("_pairings", {})
    if split not in cache:
        cache[split] = Pairing(alg, split)
    return cache[split]


def pair(X, a, split="a"):
    """<X, a> for Elements (or free term lists) X in A^cop and a in A."""
    alg = X.alg if isinstance(X, Element) else a.alg
    return _pairing(alg, split)(X, a)


def free_product(*xs):
    """Concatenate Elements as an unreduced free sum (no normal form)."""
    out = [(xs[0].alg.field.one, ())]
    for x in xs:
        nxt = []
        for c1, w1 in out:
            for c2, w2 in x.to_free():
                # move c2 left past w1: x f(lam, mu) = f(lam - wl, mu - wr) x
                wl, wr = _weights(x.alg, w1)
                nxt.append((c1 * c2.transform(shifts={LAM: vneg(wl), MU: vneg(wr)}),
                            w1 + w2))
        out = nxt
    return out


# -- the dynamical action on W ------------------------------------------

def _act_atom_on_gen(alg, x, k):
    """pi(x) w_k = sum_l (<x, t_lk> T_beta applied to 1) w_l."""
    F = alg.field
    terms = {}
    for l in range(1, alg.n + 1):
        val = base_pair(alg, x, alg.gen(l, k))
        if not val.is_zero():
            terms[(l,)] = val.apply_to_one()
    return ExtElement(F, "W", terms)


def _act_atom(alg, x, w):
    """pi(x) on a W element, by the module-algebra rule letter by letter."""
    F = alg.field
    out = ExtElement(F, "W", {})
    wr = _weights(alg, (x,))[1]
    for I, f in w.terms.items():
        # pi(x)(f w_I) = f(lam - wr(x)) pi(x) w_I
        out = out + _act_atom_basis(alg, x, I).scale(f.shift(LAM, vneg(wr)))
    return out


def _act_atom_basis(alg, x, I):
    cache = alg.__dict__.setdefault("_act_cache", {})
    key = (x, I)
    if key in cache:
        return cache[key]
    F = alg.field
    if not I:
        # pi(x) 1 = epsilon(x) 1
        res = ExtElement.basis(F, "W", ()) if _is_diagonal_word(alg, (x,)) else \
            ExtElement(F, "W", {})
    elif len(I) == 1:
        res = _act_atom_on_gen(alg, x, I[0])
    else:
        # Delta^cop(x) = sum x'' (x) x'; x'' acts on the first letter
        res = ExtElement(F, "W", {})
        head = ExtElement.gen(F, "W", I[0])
        tail = ExtElement.basis(F, "W", I[1:])
        for x1, x2 in _atom_split(alg, x):
            left = _act_atom(alg, x2, head)
            if left.is_zero():
                continue
            res = res + left * _act_atom(alg, x1, tail)
    cache[key] = res
    return res


def act_pi(X, w):
    """The dynamical action pi(X) w of the co-opposite algebra on W,
    built from the generator table, the module-algebra rule and
    pi(XY) = pi(X) pi(Y).  Independent of the pairing recursion."""
    alg = X.alg
    F = alg.field
    out = ExtElement(F, "W", {})
    for FX, word in X.to_free():
        wl, wr = _weights(alg, word)
        v = w
        for x in reversed(word):
            v = _act_atom(alg, x, v)
        for I, g in v.terms.items():
            # the coefficient of w_I came from <F X, x_K> with
            # gamma = -(wr(X) + weight of the source); the source weight is
            # omega(I) + wl - wr by the weight law
            src = vadd(subset_vector(alg.n, I), vsub(wl, wr))
            gamma = vneg(vadd(wr, src))
            c = FX.transform(moves={MU: LAM}, shifts={LAM: vadd(wl, gamma)})
            out = out + ExtElement(F, "W", {I: c * g})
    return out


def top_w(alg):
    return ExtElement.basis(alg.field, "W", tuple(range(1, alg.n + 1)))


def det_value_from_action(X):
    """<X, det> read off from pi(X)(w_1...w_n) = w_1...w_n (x) <X, det> T_beta."""
    alg = X.alg
    F = alg.field
    full = tuple(range(1, alg.n + 1))
    res = act_pi(X, top_w(alg))
    if any(I != full for I in res.terms):
        raise ValueError("action left the top degree")
    c = res.terms.get(full)
    if c is None:
        return DiffOp.zero(F)
    wr = X.weight()[1]
    return DiffOp(F, {vneg(vadd(wr, ones(alg.n))): c})


# -- closed forms -----------------------------------------------------

def table_value(alg, i, j, k, l):
    """The explicit generator table for <t_ij, t_kl>."""
    F = alg.field
    n = alg.n
    c = F.zero
    if (i, j, k, l) == (i, i, i, i):
        c = F.q * F.tau_pow(-1)
    elif i == j and k == l and i < k:
        c = F.tau_pow(-1)
    elif i == j and k == l and i > k:
        c = F.tau_pow(-1) * F.g(k, i)
    elif i != j and (k, l) == (j, i):
        c = F.tau_pow(-1) * F.h0(j, i)
    if not c:
        return DiffOp.zero(F)
    return DiffOp.shift_op(F, vneg(vadd(unit_vector(n, i), unit_vector(n, k))), c)


def minor_closed_form(alg, X_side, i, j):
    """Closed forms for pairings of t_ij with the minor xi^{i^}_{j^} and
    of t_ii with xi^{j^}_{j^}.  ``X_side`` puts the minor first."""
    F = alg.field
    n = alg.n
    lead = F.q_pow(-1) * F.tau
    full = vneg(ones(n))
    if i == j:
        c = lead
        for k in range(1, n + 1):
            if (k < i and not X_side):
                c = c * F.g(k, i)
            if (k > i and X_side):
                c = c * F.g(i, k)
        return DiffOp.shift_op(F, full, c)
    c = lead * F.h0(j, i) if not X_side else lead * F.h0(i, j)
    for k in range(1, n + 1):
        if k in (i, j):
            continue
        if not X_side:
            if k < j:
                c = c * -F.h(j, k)
            if k < i:
                c = c * -F.h(k, i)
        else:
            if k > j:
                c = c * -F.h(k, j)
            if k > i:
                c = c * -F.h(i, k)
    return DiffOp.shift_op(F, full, c)


def minor_diag_other(alg, i, j):
    """q^{1/n} T_{-omega(j^) - omega(i)} for <t_ii, xi^{j^}_{j^}>, i != j."""
    F = alg.field
    n = alg.n
    shift = vneg(vadd(subset_vector(n, hat(n, j)), unit_vector(n, i)))
    return DiffOp.shift_op(F, shift, F.tau)


def minor_expected(alg, gen_first, a, b, K, L):
    """Expected pairing of t_ab with xi^K_L (|K| = |L| = n-1), generator
    first or minor first."""
    n = alg.n
    F = alg.field
    (k,), (l,) = [tuple(set(range(1, n + 1)) - set(S)) for S in (K, L)]
    X_side = not gen_first
    if a == b and k == l:
        if k == a:
            return minor_closed_form(alg, X_side, a, a)
        return minor_diag_other(alg, a, k)
    if a != b and (k, l) == (a, b):
        return minor_closed_form(alg, X_side, a, b)
    return DiffOp.zero(F)


# -- verification ---------------------------------------------------------

REF_TABLE = "generator pairing table"
REF_DINV = "pairings with det^{-1}"
REF_DET = "pairings with the determinant"
REF_MINOR = "pairings of generators with n-1 minors"
REF_COBRAID = "cobraiding identity"
REF_HOPF = "pairing compatible with the antipodes"
REF_STAR = "pairing compatible with the star structures"


def verify_pairing_table(alg, checker=None):
    checker = checker or Checker()
    F = alg.field
    n = alg.n
    rng = range(1, n + 1)
    for i, j, k, l in itertools.product(rng, repeat=4):
        checker.check(f"pairing t[{i},{j}] t[{k},{l}]", REF_TABLE,
                      lambda i=i, j=j, k=k, l=l: equal_outcome(
                          pair(alg.t(i, j), alg.t(k, l)), table_value(alg, i, j, k, l)),
                      [i, j, k, l])
    D = alg.dinv()
    for i, j in itertools.product(rng, repeat=2):
        delta = DiffOp.shift_op(F, subset_vector(n, hat(n, i))) if i == j \
            else DiffOp.zero(F)
        checker.check(f"pairing t[{i},{j}] dinv", REF_DINV,
                      lambda i=i, j=j, e=delta: equal_outcome(pair(alg.t(i, j), D), e),
                      [i, j])
        checker.check(f"pairing dinv t[{i},{j}]", REF_DINV,
                      lambda i=i, j=j, e=delta: equal_outcome(pair(D, alg.t(i, j)), e),
                      [i, j])
        eps = DiffOp.shift_op(F, vneg(unit_vector(n, i))) if i == j else DiffOp.zero(F)
        checker.check(f"pairing t[{i},{j}] (det dinv) = counit", REF_DINV,
                      lambda i=i, j=j, e=eps: equal_outcome(
                          pair(alg.t(i, j), free_product(alg.det(), D)), e),
                      [i, j])
        checker.check(f"pairing (det dinv) t[{i},{j}] = counit", REF_DINV,
                      lambda i=i, j=j, e=eps: equal_outcome(
                          pair(free_product(alg.det(), D), alg.t(i, j)), e),
                      [i, j])
    checker.check("pairing dinv dinv", REF_DINV,
                  lambda: equal_outcome(pair(D, D), DiffOp.shift_op(F, ones(n, 2))))
    det = alg.det()
    for i, j in itertools.product(rng, repeat=2):
        e = DiffOp.shift_op(F, vneg(vadd(ones(n), unit_vector(n, i)))) if i == j \
            else DiffOp.zero(F)
        checker.check(f"pairing t[{i},{j}] det", REF_DET,
                      lambda i=i, j=j, e=e: equal_outcome(pair(alg.t(i, j), det), e),
                      [i, j])
        checker.check(f"pairing det t[{i},{j}]", REF_DET,
                      lambda i=i, j=j, e=e: equal_outcome(pair(det, alg.t(i, j)), e),
                      [i, j])
        checker.check(f"action oracle t[{i},{j}] det", REF_DET,
                      lambda i=i, j=j: equal_outcome(
                          det_value_from_action(alg.t(i, j)), pair(alg.t(i, j), det)),
                      [i, j])
    checker.check("pairing det det", REF_DET,
                  lambda: equal_outcome(pair(det, det), DiffOp.shift_op(F, ones(n, -2))))
    checker.check("action oracle det on w_1...w_n", REF_DET,
                  lambda: equal_outcome(act_pi(det, top_w(alg)), top_w(alg)))
    checker.check("action oracle det det", REF_DET,
                  lambda: equal_outcome(det_value_from_action(det), pair(det, det)))
    return checker


def verify_pairing_minors(alg, checker=None):
    checker = checker or Checker()
    n = alg.n
    rng = range(1, n + 1)
    for a, b, k, l in itertools.product(rng, repeat=4):
        K, L = hat(n, k), hat(n, l)
        x = xi(alg, K, L)
        t = alg.t(a, b)
        idx = {"gen": [a, b], "K": list(K), "L": list(L)}
        checker.check(f"pairing t[{a},{b}] xi{K}{L}", REF_MINOR,
                      lambda t=t, x=x, a=a, b=b, K=K, L=L: equal_outcome(
                          pair(t, x), minor_expected(alg, True, a, b, K, L)), idx)
        checker.check(f"pairing xi{K}{L} t[{a},{b}]", REF_MINOR,
                      lambda t=t, x=x, a=a, b=b, K=K, L=L: equal_outcome(
                          pair(x, t), minor_expected(alg, False, a, b, K, L)), idx)
    return checker


def _atom_element(alg, a):
    return alg.dinv() if a == DINV else Element(alg, {((a,), 0): alg.field.one})


def _atoms(alg):
    return [alg.gen(i, j) for i in range(1, alg.n + 1) for j in range(1, alg.n + 1)] + [DINV]


def _atom_name(alg, a):
    if a == DINV:
        return "dinv"
    return "t[{},{}]".format(*alg.gen_indices(a))


def cobraiding_sides(alg, x, y):
    """sum mu_l(<x1,y1>1) x2 y2 and sum mu_r(<x2,y2>1) y1 x1 for atoms."""
    lhs = alg.zero
    rhs = alg.zero
    P = _pairing(alg)
    for x1, x2 in _atom_split(alg, x):
        for y1, y2 in _atom_split(alg, y):
            v = P.words((x1,), (y1,))
            if not v.is_zero():
                lhs = lhs + alg.ml(v.apply_to_one()) * _atom_element(alg, x2) \
                    * _atom_element(alg, y2)
            v = P.words((x2,), (y2,))
            if not v.is_zero():
                rhs = rhs + alg.mr(v.apply_to_one()) * _atom_element(alg, y1) \
                    * _atom_element(alg, x1)
    return lhs, rhs


def _off_diagonal(alg, a):
    return a != DINV and alg.gen_indices(a)[0] != alg.gen_indices(a)[1]


def verify_cobraiding(alg, checker=None, max_off_diagonal=None):
    """The cobraiding identity on pairs of atoms; ``max_off_diagonal``
    bounds the number of off-diagonal generators in a pair."""
    checker = checker or Checker()
    for x, y in itertools.product(_atoms(alg), repeat=2):
        off = _off_diagonal(alg, x) + _off_diagonal(alg, y)
        if max_off_diagonal is not None and off > max_off_diagonal:
            continue
        name = f"cobraiding {_atom_name(alg, x)} {_atom_name(alg, y)}"

        def run(x=x, y=y):
            lhs, rhs = cobraiding_sides(alg, x, y)
            return equal_outcome(lhs, rhs)
        checker.check(name, REF_COBRAID, run, [_atom_name(alg, x), _atom_name(alg, y)])
    return checker


def hopf_pairing_sides(X, a):
    """<S^cop(X), a> and S^D(<X, S(a)>), with S^cop = S^{-1}."""
    return pair(antipode_inverse(X), a), pair(X, antipode(a)).antipode()


def star_pairing_sides(X, a):
    """<X^dagger, a> and T_{-gamma} (<X, S(a)^*>)^* T_{-delta} for a of
    weight (gamma, delta)."""
    F = X.alg.field
    gamma, delta = a.weight()
    rhs = pair(X, star(antipode(a))).star()
    rhs = DiffOp.shift_op(F, vneg(gamma)) * rhs * DiffOp.shift_op(F, vneg(delta))
    return pair(dagger(X), a), rhs


def _pairs_for(alg, cases):
    n = alg.n
    t = alg.t
    D = alg.dinv()
    rng = range(1, n + 1)
    if cases == "all":
        atoms = [(_atom_name(alg, a), _atom_element(alg, a)) for a in _atoms(alg)]
        return [(f"{nx} {na}", X, a) for (nx, X), (na, a) in itertools.product(atoms, repeat=2)]
    out = []
    for i in rng:
        out.append((f"t[{i},{i}] t[{i},{i}]", t(i, i), t(i, i)))
        out.append((f"t[{i},{i}] dinv", t(i, i), D))
        out.append((f"dinv t[{i},{i}]", D, t(i, i)))
    for i, j in itertools.permutations(rng, 2):
        for name, (X, a) in cases(i, j).items():
            out.append((name, X, a))
    return out


def _hopf_cases(alg):
    t = alg.t
    return lambda i, j: {f"t[{j},{j}] t[{i},{i}]": (t(j, j), t(i, i)),
                         f"t[{j},{i}] t[{i},{j}]": (t(j, i), t(i, j))}


def _star_cases(alg):
    t = alg.t
    return lambda i, j: {f"t[{i},{i}] t[{j},{j}]": (t(i, i), t(j, j)),
                         f"t[{i},{j}] t[{i},{j}]": (t(i, j), t(i, j))}


def verify_hopf_pairing(alg, checker=None, exhaustive=False):
    """The antipode compatibility on the nontrivial generator cases, or on
    every pair of atoms when ``exhaustive``."""
    checker = checker or Checker()
    cases = "all" if exhaustive else _hopf_cases(alg)
    for name, X, a in _pairs_for(alg, cases):
        checker.check(f"hopf pairing {name}", REF_HOPF,
                      lambda X=X, a=a: equal_outcome(*hopf_pairing_sides(X, a)), name)
    return checker


def verify_star_pairing(alg, checker=None, exhaustive=False):
    checker = checker or Checker()
    cases = "all" if exhaustive else _star_cases(alg)
    for name, X, a in _pairs_for(alg, cases):
        checker.check(f"star pairing {name}", REF_STAR,
                      lambda X=X, a=a: equal_outcome(*star_pairing_sides(X, a)), name)
    return checker


def weight_law_holds(alg, X, a, value):
    """The value of <X, a> lies in D_{alpha+delta, beta+gamma}: for A-weights
    this means every shift is -(wr(X) + wr(a))."""
    if value.is_zero():
        return True
    wlX, wrX = X.weight()
    wla, wra = a.weight()
    if vadd(wrX, wra) != vadd(wlX, wla):
        return False
    return set(value.terms) == {vneg(vadd(wrX, wra))}


def split_independence(alg, X_word, a_word):
    """Outcome comparing the two recursion orders on a pair of words."""
    va = _pairing(alg, "a").words(X_word, a_word)
    vX = _pairing(alg, "X").words(X_word, a_word)
    if va == vX:
        return Outcome(True)
    return Outcome(False, f"{va}  !=  {vX}")


__all__ = ["pair", "act_pi", "Pairing", "free_product", "verify_pairing_table",
           "verify_pairing_minors", "verify_cobraiding", "verify_hopf_pairing",
           "verify_star_pairing", "cobraiding_sides", "hopf_pairing_sides",
           "star_pairing_sides", "split_independence"]
