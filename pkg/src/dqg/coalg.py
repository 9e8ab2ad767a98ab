"""Comultiplication, counit, matrix tensor products and difference operators.

A ``TensorElement`` with ``k`` legs stores ``(m_1, ..., m_k) -> F`` where
each ``m_j`` is an ordered monomial ``(word, d)`` and ``F`` is a function
of ``k + 1`` banks: bank ``LAM`` is the left moment map of leg 1, the
seam banks sit between legs and the last bank is ``MU``, the right moment
map of leg ``k``.  Seam functions are always stored as left moment maps
of the leg to their right, so the tensor relation
``mu_r(f) a (x) b = a (x) mu_l(f) b`` is built into the representation.
"""

from .nfcore import DINV, Element, _acc
from .scalars import LAM, MU, SEAM1, SEAM2, vadd, vneg

BANK_LISTS = {1: (LAM, MU), 2: (LAM, SEAM1, MU), 3: (LAM, SEAM1, SEAM2, MU)}


class DiffOp:
    """Difference operator sum_beta f_beta T_beta with f_beta in bank LAM."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        self.field = field
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def shift_op(cls, field, beta, coeff=None):
        coeff = field.one if coeff is None else field.coerce(coeff)
        return cls(field, {tuple(beta): coeff})

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return DiffOp(self.field, out)

    def __neg__(self):
        return DiffOp(self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Composition (f T_a)(g T_b) = f T_a(g) T_{a+b}; scalars act on the left."""
        if not isinstance(other, DiffOp):
            f = self.field.coerce(other)
            return DiffOp(self.field, {k: c * f for k, c in self.terms.items()})
        out = {}
        for a, f in self.terms.items():
            for b, g in other.terms.items():
                _acc(out, vadd(a, b), f * g.shift(LAM, a))
        return DiffOp(self.field, out)

    def __rmul__(self, other):
        f = self.field.coerce(other)
        return DiffOp(self.field, {k: f * c for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return (self.terms.keys() == other.terms.keys()
                and all(c == other.terms[k] for k, c in self.terms.items()))

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def apply_to_one(self):
        """Sum of coefficients: shifts act trivially on constants."""
        out = self.field.zero
        for c in self.terms.values():
            out = out + c
        return out

    def antipode(self):
        """S^D(f T_a) = T_{-a} f = f(lam - a) T_{-a}."""
        return DiffOp(self.field, {vneg(a): f.shift(LAM, vneg(a))
                                   for a, f in self.terms.items()})

    def star(self):
        """(f T_a)^* = T_{-a} conj(f) for the real form."""
        return DiffOp(self.field, {vneg(a): f.conjugate().shift(LAM, vneg(a))
                                   for a, f in self.terms.items()})

    def single(self):
        """(beta, f) for a one-term operator, None for zero."""
        if not self.terms:
            return None
        if len(self.terms) != 1:
            raise ValueError("difference operator has several shifts")
        return next(iter(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a, f in sorted(self.terms.items()):
            parts.append(f"({f})@{a}")
        return " + ".join(parts)

    __repr__ = __str__


def _leg_coeff(c, j, k):
    """Move an Element coefficient (banks LAM, MU) to leg j of a k-tensor.

    The MU part becomes the left moment map of leg j+1: both sit to the
    left of their legs, so the tensor relation moves it without a shift.
    """
    banks = BANK_LISTS[k]
    lam_to, mu_to = banks[j - 1], banks[j]
    moves = {}
    if mu_to != MU:
        moves[MU] = mu_to
    if lam_to != LAM:
        moves[LAM] = lam_to
    return c.transform(moves=moves)


class TensorElement:
    """Element of the k-fold matrix tensor product; see module docstring."""

    __slots__ = ("alg", "k", "terms")

    def __init__(self, alg, k, terms):
        self.alg = alg
        self.k = k
        self.terms = terms

    @classmethod
    def tensor(cls, *xs):
        """x_1 (x) ... (x) x_k for Elements; seam weights must match."""
        alg = xs[0].alg
        k = len(xs)
        cur = {(): alg.field.one}
        for j, x in enumerate(xs, start=1):
            nxt = {}
            for legs, c in cur.items():
                if legs:
                    wr_prev = alg.weights(*legs[-1])[1]
                for mono, cx in x.terms.items():
                    if legs and alg.weights(*mono)[0] != wr_prev:
                        continue
                    cc = _leg_coeff(cx, j, k)
                    _acc(nxt, legs + (mono,), c * cc)
            cur = nxt
        return cls(alg, k, cur)

    def _check_seams(self):
        alg = self.alg
        for legs in self.terms:
            for a, b in zip(legs, legs[1:]):
                if alg.weights(*a)[1] != alg.weights(*b)[0]:
                    return False
        return True

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return TensorElement(self.alg, self.k, out)

    def __neg__(self):
        return TensorElement(self.alg, self.k, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f):
        return TensorElement(self.alg, self.k,
                             {key: f * c for key, c in self.terms.items()})

    def __mul__(self, other):
        alg = self.alg
        k = self.k
        banks = BANK_LISTS[k]
        out = {}
        for legs1, f in self.terms.items():
            ws = [alg.weights(*m) for m in legs1]
            # moving a coefficient left past leg j's monomial: the bank left of
            # leg j is shifted by minus its left weight, MU by minus the last
            # right weight
            shifts = {banks[j]: vneg(ws[j][0]) for j in range(k)}
            shifts[MU] = vneg(ws[-1][1])
            for legs2, g in other.terms.items():
                base = f * g.transform(shifts=shifts)
                if not base:
                    continue
                partial = {(): base}
                for j in range(k):
                    (w1, d1), (w2, d2) = legs1[j], legs2[j]
                    prod = alg.mul_words(w1, w2)
                    nxt = {}
                    for done, c in partial.items():
                        for w, cw in prod.items():
                            cc = _leg_coeff(cw, j + 1, k)
                            _acc(nxt, done + ((w, d1 + d2),), c * cc)
                    partial = nxt
                for key, c in partial.items():
                    _acc(out, key, c)
        return TensorElement(alg, k, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.k == other.k and self.terms.keys() == other.terms.keys()
                and all(c == other.terms[key] for key, c in self.terms.items()))

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __str__(self):
        from .nfcore import word_str
        if not self.terms:
            return "0"
        parts = []
        for legs, c in self.terms.items():
            body = " (x) ".join(word_str(self.alg, w, d) or "1" for w, d in legs)
            parts.append(f"[{c}] {body}")
        return " + ".join(parts)


# -- comultiplication ---------------------------------------------------

def _comult_atom(alg, a):
    """Delta of a single atom as a TensorElement(2)."""
    if a == DINV:
        return TensorElement(alg, 2, {(((), 1), ((), 1)): alg.field.one})
    i, j = alg.gen_indices(a)
    one = alg.field.one
    terms = {}
    for m in range(1, alg.n + 1):
        terms[(((alg.gen(i, m),), 0), ((alg.gen(m, j),), 0))] = one
    return TensorElement(alg, 2, terms)


def tensor_one(alg, k):
    return TensorElement(alg, k, {tuple(((), 0) for _ in range(k)): alg.field.one})


def comult_free(alg, terms):
    """Delta of an unreduced sum of atom words."""
    out = TensorElement(alg, 2, {})
    cache = alg.__dict__.setdefault("_comult_word_cache", {})
    for coeff, word in terms:
        hit = cache.get(word)
        if hit is None:
            hit = tensor_one(alg, 2)
            for a in word:
                hit = hit * _comult_atom(alg, a)
            cache[word] = hit
        # Delta(mu_l f) = f (x) 1 keeps LAM, Delta(mu_r f) = 1 (x) f keeps MU
        out = out + hit.scale(coeff)
    return out


def comult(x):
    """Delta(x) for an Element, as an algebra homomorphism."""
    return comult_free(x.alg, x.to_free())


def comult_leg(T, j):
    """Apply Delta to leg j of a 2-tensor, giving a 3-tensor."""
    if T.k != 2:
        raise ValueError("only 2-tensors are split")
    alg = T.alg
    out = {}
    for legs, F in T.terms.items():
        m = legs[j - 1]
        D = comult_free(alg, [(alg.field.one, m[0] + (DINV,) * m[1])])
        if j == 1:
            Fn = F.transform(moves={SEAM1: SEAM2})
        else:
            Fn = F
        for (a, b), G in D.terms.items():
            if j == 1:
                # banks of Delta(m): LAM, seam -> SEAM1, MU -> SEAM2
                Gn = G.transform(moves={MU: SEAM2})
                key = (a, b, legs[1])
            else:
                # leg 2 spans SEAM1..MU; Delta's LAM -> SEAM1, seam -> SEAM2
                Gn = G.transform(moves={SEAM1: SEAM2, LAM: SEAM1})
                key = (legs[0], a, b)
            _acc(out, key, Fn * Gn)
    return TensorElement(alg, 3, out)


def comult_k(x, k):
    """Iterated comultiplication into k legs (k = 1, 2, 3), left fold."""
    if k == 1:
        return TensorElement(x.alg, 1, {(m,): c for m, c in x.terms.items()})
    D = comult(x)
    if k == 2:
        return D
    if k == 3:
        return comult_leg(D, 1)
    raise ValueError("k must be 1, 2 or 3")


# -- counit -------------------------------------------------------------

def _is_diagonal(alg, word):
    return all(alg.gen_indices(g)[0] == alg.gen_indices(g)[1] for g in word)


def counit_free(alg, terms):
    """epsilon of an unreduced sum: t_ij -> delta_ij T_{-e_i}, det^{-1} -> T_1."""
    F = alg.field
    out = DiffOp.zero(F)
    for coeff, word in terms:
        gens = tuple(a for a in word if a != DINV)
        if not _is_diagonal(alg, gens):
            continue
        wl, _ = alg.weights(word)
        c = coeff.transform(moves={MU: LAM})
        out = out + DiffOp(F, {vneg(wl): c})
    return out


def counit(x):
    return counit_free(x.alg, x.to_free())


def counit_leg(T, j):
    """(eps (x) id) for j = 1 or (id (x) eps) for j = 2 on a 2-tensor,
    returning an Element under the identifications D (x) A = A = A (x) D."""
    alg = T.alg
    out = {}
    for (a, b), F in T.terms.items():
        if j == 1:
            if not _is_diagonal(alg, a[0]):
                continue
            _acc(out, b, F.transform(moves={SEAM1: LAM}))
        else:
            if not _is_diagonal(alg, b[0]):
                continue
            _acc(out, a, F.transform(moves={SEAM1: MU}))
    return Element(alg, out)


def apply_diffop_to_one(D):
    return D.apply_to_one()
