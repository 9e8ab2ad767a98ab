"""Dynamical exterior algebras W and V with their coactions.

``W`` has basis ``w_I = w_{i_1} ... w_{i_r}`` (increasing), ``V`` has basis
``v_I = v_{i_r} ... v_{i_1}`` (decreasing).  Coefficients are functions of
the ``LAM`` bank placed on the left; ``f(lam) x_i = x_i f(lam + e_i)``.

Elements of ``W (x) A`` and ``A (x) V`` are stored as ``{I: Element}``:
every function is moved into the algebra leg through the tensor relation.
"""

import itertools

from .coalg import DiffOp, TensorElement, comult, counit
from .minors import complement, eta, subsets, xi
from .nfcore import Element
from .report import Checker, Outcome, equal_outcome, is_zero_outcome, mod_det_outcome
from .scalars import LAM, MU, subset_vector, vneg


class ExtElement:
    """Element of W (kind 'W') or V (kind 'V') in the ordered basis."""

    __slots__ = ("field", "kind", "terms")

    def __init__(self, field, kind, terms):
        self.field = field
        self.kind = kind
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def basis(cls, field, kind, I, coeff=None):
        c = field.one if coeff is None else coeff
        return cls(field, kind, {tuple(I): c})

    @classmethod
    def gen(cls, field, kind, i):
        return cls.basis(field, kind, (i,))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return ExtElement(self.field, self.kind, out)

    def __neg__(self):
        return ExtElement(self.field, self.kind, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f):
        return ExtElement(self.field, self.kind, {k: f * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, ExtElement):
            return self.scale(self.field.coerce(other))
        F = self.field
        n = F.n
        out = {}
        for I, f in self.terms.items():
            shift = vneg(subset_vector(n, I))
            for J, g in other.terms.items():
                c, K = order_sequence(F, self.kind, _as_sequence(self.kind, I)
                                      + _as_sequence(self.kind, J))
                if not c:
                    continue
                val = f * g.shift(LAM, shift) * c
                out[K] = out[K] + val if K in out else val
        return ExtElement(F, self.kind, out)

    def __rmul__(self, other):
        return self.scale(self.field.coerce(other))

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return (self.kind == other.kind and self.terms.keys() == other.terms.keys()
                and all(c == other.terms[k] for k, c in self.terms.items()))

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def grades(self):
        return {len(I) for I in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        sym = self.kind.lower()
        return " + ".join(f"[{c}] {sym}{list(I)}" for I, c in sorted(self.terms.items()))


def _as_sequence(kind, I):
    """The generator sequence of a basis element."""
    return tuple(I) if kind == "W" else tuple(reversed(I))


def order_sequence(field, kind, seq):
    """Reduce a product of generators to (coefficient, I) with the closed
    formula: w_{i_s(1)}..w_{i_s(r)} = S(s, I) w_I and
    v_{i_s(r)}..v_{i_s(1)} = S~(s, I) v_I; repeated letters give 0."""
    if len(set(seq)) < len(seq):
        return field.zero, None
    K = tuple(sorted(seq))
    if kind == "W":
        sigma = tuple(K.index(i) + 1 for i in seq)
        return field.gen_sign(sigma, K), K
    sigma = tuple(K.index(i) + 1 for i in reversed(seq))
    return field.gen_sign_tilde(sigma, K), K


def order_by_swaps(field, kind, seq):
    """Reduce a product of generators by adjacent swaps only, using the
    defining relations (independent of the closed formula)."""
    n = field.n
    seq = list(seq)
    coeff = field.one
    changed = True
    while changed:
        changed = False
        for p in range(len(seq) - 1):
            a, b = seq[p], seq[p + 1]
            if a == b:
                return field.zero, None
            wrong = a > b if kind == "W" else a < b
            if wrong:
                # x_a x_b = -h(lam_a - lam_b) x_b x_a, moved left past the prefix
                f = -field.h(a, b)
                f = f.shift(LAM, vneg(subset_vector(n, seq[:p])))
                coeff = coeff * f
                seq[p], seq[p + 1] = b, a
                changed = True
    K = tuple(sorted(seq))
    return coeff, K


# -- coactions ----------------------------------------------------------

class Coacted:
    """Element of W (x) A ('R') or A (x) V ('L') as {I: Element}."""

    def __init__(self, alg, side, terms):
        self.alg = alg
        self.side = side
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def __mul__(self, other):
        alg = self.alg
        F = alg.field
        kind = "W" if self.side == "R" else "V"
        out = {}
        for I, x in self.terms.items():
            for J, y in other.terms.items():
                c, K = order_sequence(F, kind, _as_sequence(kind, I) + _as_sequence(kind, J))
                if not c:
                    continue
                if self.side == "R":
                    # w_I w_J (x) xy = w_K (x) mu_l(c) x y
                    val = alg.ml(c) * x * y
                else:
                    # xy (x) c(lam) v_K = x y mu_r(c) (x) v_K
                    val = x * y * alg.mr(c)
                out[K] = out[K] + val if K in out else val
        return Coacted(alg, self.side, out)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return Coacted(self.alg, self.side, out)

    def __neg__(self):
        return Coacted(self.alg, self.side, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not self.terms

    def component(self, I):
        return self.terms.get(tuple(I), self.alg.zero)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{self.side}[{list(I)}]: {x}" for I, x in sorted(self.terms.items()))


def _coact_gen(alg, side, i):
    n = alg.n
    if side == "R":
        return Coacted(alg, "R", {(j,): alg.t(j, i) for j in range(1, n + 1)})
    return Coacted(alg, "L", {(j,): alg.t(i, j) for j in range(1, n + 1)})


def _coact_basis(alg, side, I):
    cache = alg.__dict__.setdefault("_coact_cache", {})
    key = (side, tuple(I))
    if key not in cache:
        kind = "W" if side == "R" else "V"
        out = Coacted(alg, side, {(): alg.one})
        for i in _as_sequence(kind, I):
            out = out * _coact_gen(alg, side, i)
        cache[key] = out
    return cache[key]


def coaction_R(alg, x):
    """R: W -> W (x) A, R(w_i) = sum_j w_j (x) t_ji, R(f w) = mu_r(f) R(w)."""
    if x.kind != "W":
        raise ValueError("R acts on W")
    out = Coacted(alg, "R", {})
    for I, f in x.terms.items():
        base = _coact_basis(alg, "R", I)
        out = out + Coacted(alg, "R", {K: alg.mr(f) * y for K, y in base.terms.items()})
    return out


def coaction_L(alg, x):
    """L: V -> A (x) V, L(v_i) = sum_j t_ij (x) v_j, L(f v) = mu_l(f) L(v)."""
    if x.kind != "V":
        raise ValueError("L acts on V")
    out = Coacted(alg, "L", {})
    for I, f in x.terms.items():
        base = _coact_basis(alg, "L", I)
        out = out + Coacted(alg, "L", {K: alg.ml(f) * y for K, y in base.terms.items()})
    return out


def relation_proof_element(alg, i, j, k, l):
    """t_kj t_li - h(lam_l - lam_k) t_lj t_ki + h(mu_j - mu_i) t_ki t_lj
    - h(mu_j - mu_i) h(lam_l - lam_k) t_li t_kj, for i<j, k<l."""
    F = alg.field
    g = alg.gen
    hl = F.h(l, k)
    hm = F.h(j, i, MU)
    return alg.from_free([
        (F.one, (g(k, j), g(l, i))),
        (-hl, (g(l, j), g(k, i))),
        (hm, (g(k, i), g(l, j))),
        (-hm * hl, (g(l, i), g(k, j))),
    ])


def verify_comodule_axioms(alg, checker=None):
    checker = checker or Checker()
    F = alg.field
    n = alg.n
    ref_R = "right comodule algebra structure on W"
    ref_L = "left comodule algebra structure on V"
    for I in subsets(n):
        for J in subsets(n, len(I)):
            x = xi(alg, I, J)

            def cross_R(I=I, J=J, x=x):
                got = _coact_basis(alg, "R", J).component(I)
                return equal_outcome(got, x)

            def cross_L(I=I, J=J, x=x):
                got = _coact_basis(alg, "L", I).component(J)
                return equal_outcome(got, eta(alg, I, J))

            def coassoc(I=I, J=J, x=x):
                rhs = TensorElement(alg, 2, {})
                for K in subsets(n, len(I)):
                    rhs = rhs + TensorElement.tensor(xi(alg, I, K), xi(alg, K, J))
                return is_zero_outcome(comult(x) - rhs)

            def counital(I=I, J=J, x=x):
                expect = DiffOp.zero(F)
                if I == J:
                    expect = DiffOp.shift_op(F, vneg(subset_vector(n, I)))
                return equal_outcome(counit(x), expect)

            idx = {"I": list(I), "J": list(J)}
            checker.check(f"coaction R(w_J) component I={I} J={J}", ref_R, cross_R, idx)
            checker.check(f"coaction L(v_I) component I={I} J={J}", ref_L, cross_L, idx)
            checker.check(f"minor comultiplication I={I} J={J}",
                          "comultiplication of quantum minors", coassoc, idx)
            checker.check(f"minor counit I={I} J={J}", "counit of quantum minors",
                          counital, idx)
    for I in subsets(n):
        def grade(I=I):
            R = _coact_basis(alg, "R", I)
            L = _coact_basis(alg, "L", I)
            return all(len(K) == len(I) for K in R.terms) and \
                all(len(K) == len(I) for K in L.terms)
        checker.check(f"coaction grade I={I}", "coactions preserve the exterior grading",
                      grade, {"I": list(I)})
    for i in range(1, n + 1):
        for side in "RL":
            def square(i=i, side=side):
                g = _coact_gen(alg, side, i)
                return is_zero_outcome(g * g)
            checker.check(f"coaction {side} square i={i}", ref_R if side == "R" else ref_L,
                          square, [i])
    for i, j in itertools.combinations(range(1, n + 1), 2):
        def swap_R(i=i, j=j):
            a, b = _coact_gen(alg, "R", i), _coact_gen(alg, "R", j)
            h = Coacted(alg, "R", {(): alg.mr(F.h(j, i))})
            return is_zero_outcome(b * a + h * a * b)

        def swap_L(i=i, j=j):
            a, b = _coact_gen(alg, "L", i), _coact_gen(alg, "L", j)
            h = Coacted(alg, "L", {(): alg.ml(F.h(i, j))})
            return is_zero_outcome(a * b + h * b * a)
        checker.check(f"coaction R relation i={i} j={j}", ref_R, swap_R, [i, j])
        checker.check(f"coaction L relation i={i} j={j}", ref_L, swap_L, [i, j])
        for k, l in itertools.combinations(range(1, n + 1), 2):
            checker.check(f"coaction R homomorphism i={i} j={j} k={k} l={l}", ref_R,
                          lambda i=i, j=j, k=k, l=l: is_zero_outcome(
                              relation_proof_element(alg, i, j, k, l)),
                          [i, j, k, l])
    return checker


def _star():
    from .hopf import star
    return star


def unitarity_W_sides(alg, I, J):
    """sum_K mu_l(sign(K^c;K)) (xi^K_J)^* xi^K_I against
    delta_IJ mu_r(sign(J^c;J))."""
    star = _star()
    F = alg.field
    n = alg.n
    lhs = alg.zero
    for K in subsets(n, len(I)):
        lhs = lhs + alg.ml(F.subset_sign(complement(n, K), K)) * star(xi(alg, K, J)) * xi(alg, K, I)
    rhs = alg.zero
    if I == J:
        rhs = alg.scalar(F.subset_sign(complement(n, J), J, MU))
    return lhs, rhs


def unitarity_V_sides(alg, I, J):
    """sum_K eta^I_K mu_r(sign(K^c;K)^{-1}) (eta^J_K)^* against
    delta_IJ mu_l(<v_I, v_I>) with <v_I, v_I>(lam) = sign(I^c;I)^{-1}(lam - omega(I)),
    the inverse of the form that makes the W-coaction unitary."""
    star = _star()
    F = alg.field
    n = alg.n
    lhs = alg.zero
    for K in subsets(n, len(I)):
        form = F.subset_sign(complement(n, K), K, MU).inverse()
        lhs = lhs + eta(alg, I, K) * alg.scalar(form) * star(eta(alg, J, K))
    rhs = alg.zero
    if I == J:
        form = F.subset_sign(complement(n, I), I).inverse()
        rhs = alg.ml(form.shift(LAM, vneg(subset_vector(n, I))))
    return lhs, rhs


def verify_unitarity(alg, checker=None, max_size=None, sides=("W", "V")):
    checker = checker or Checker()
    n = alg.n
    max_size = n if max_size is None else max_size
    for r in range(max_size + 1):
        for I in subsets(n, r):
            for J in subsets(n, r):
                idx = {"I": list(I), "J": list(J)}
                if "W" in sides:
                    checker.check(f"unitarity W I={I} J={J}",
                                  "unitarity of the W-coaction",
                                  lambda I=I, J=J: mod_det_outcome(*unitarity_W_sides(alg, I, J)),
                                  idx)
                if "V" in sides:
                    checker.check(f"unitarity V I={I} J={J}",
                                  "unitarity of the V-coaction",
                                  lambda I=I, J=J: mod_det_outcome(*unitarity_V_sides(alg, I, J)),
                                  idx)
    return checker


__all__ = ["ExtElement", "Coacted", "coaction_R", "coaction_L", "order_sequence",
           "order_by_swaps", "verify_comodule_axioms", "verify_unitarity",
           "Element", "Outcome"]
