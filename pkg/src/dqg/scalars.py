"""Exact coefficient field for the dynamical engine.

Elements are rational functions over the Gaussian rationals in a
deformation variable ``tau`` (with ``q = tau**n``) and four banks of
``n`` variables each.  Bank ``LAM`` holds ``w_i`` with ``w_i**n`` standing
for ``q**(-2*lambda_i)``; bank ``MU`` holds ``z_i`` for the right moment
map; banks ``SEAM1`` and ``SEAM2`` are the seams of iterated tensor
products.

A value is stored as ``(num + i*inum) / den`` with ``num, inum`` in
``Q[tau, w, u, v, z]`` and ``den`` a product of monic irreducible factors,
kept as exponents over a per-field factor table.  No den factor divides
both ``num`` and ``inum``.  This representation is unique, so equality is
structural, and keeping denominators factored replaces every gcd by a few
exact trial divisions.
"""

from fractions import Fraction
from functools import reduce
from itertools import combinations

import flint
from flint.utils.flint_exceptions import DomainError

LAM, SEAM1, SEAM2, MU = 0, 1, 2, 3
NBANKS = 4
BANK_PREFIX = "wuvz"

BANK_ALIASES = {
    "lam": LAM, "lambda": LAM, "l": LAM, "λ": LAM,
    "kappa": SEAM1, "k": SEAM1, "κ": SEAM1,
    "nu": SEAM2, "ν": SEAM2,
    "mu": MU, "m": MU, "μ": MU,
}


def bank_index(bank):
    if isinstance(bank, int):
        if not 0 <= bank < NBANKS:
            raise ValueError(f"no such bank: {bank}")
        return bank
    try:
        return BANK_ALIASES[bank]
    except KeyError:
        raise ValueError(f"no such bank: {bank!r}") from None


def unit_vector(n, i):
    """e_i as a tuple (1-based i)."""
    v = [0] * n
    v[i - 1] = 1
    return tuple(v)


def subset_vector(n, indices):
    """omega(I) = sum of e_i over I."""
    v = [0] * n
    for i in indices:
        v[i - 1] += 1
    return tuple(v)


def ones(n, k=1):
    return (k,) * n


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(k, a):
    return tuple(k * x for x in a)


def _to_fmpq(c):
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    return flint.fmpq(c)


class Field:
    """The coefficient field for a session of size ``n``.

    All ``CoeffFn`` values built from one ``Field`` share its polynomial
    context; structure functions are cached.
    """

    def __init__(self, n):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        names = ("tau",) + tuple(
            f"{p}{i}" for p in BANK_PREFIX for i in range(1, n + 1))
        self.names = names
        self.nvars = len(names)
        self.ctx = flint.fmpq_mpoly_ctx.get(names, "deglex")
        self._gens = self.ctx.gens()
        self._pzero = self.ctx.from_dict({})
        self._pone = self.ctx.from_dict({(0,) * self.nvars: 1})
        self._factors = []
        self._factor_ids = {}
        self._den_polys = {(): self._pone}
        self._factor_images = {}
        self.zero = CoeffFn(self, self._pzero, None, ())
        self.one = CoeffFn(self, self._pone, None, ())
        self.i = CoeffFn(self, self._pzero, self._pone, ())
        self._cache = {}
        self._xform_plans = {}

    def __repr__(self):
        return f"Field(n={self.n})"

    # -- construction -------------------------------------------------

    def var_index(self, bank, i):
        return 1 + bank_index(bank) * self.n + (i - 1)

    def poly_var(self, bank, i):
        return self._gens[self.var_index(bank, i)]

    def const(self, c, imag=0):
        """Constant from an int / Fraction (optionally Gaussian)."""
        re = self._pone * _to_fmpq(c)
        im = self._pone * _to_fmpq(imag) if imag else None
        return self.make(re, self._pone, im)

    def coerce(self, x):
        if isinstance(x, CoeffFn):
            if x.field is not self:
                raise ValueError("coefficient from a different field")
            return x
        if isinstance(x, (int, Fraction, flint.fmpq)):
            return self.const(x)
        if isinstance(x, complex):
            return self.const(Fraction(x.real), Fraction(x.imag))
        raise TypeError(f"cannot coerce {type(x).__name__} to CoeffFn")

    def make(self, num, den, inum=None):
        """Canonicalize ``(num + i*inum)/den`` for polynomials num, inum, den."""
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if inum is not None and inum.is_zero():
            inum = None
        if num.is_zero() and inum is None:
            return self.zero
        c, facs = self._factor(den)
        num = num / c
        if inum is not None:
            inum = inum / c
        return self._reduced(num, inum, facs, None)

    # -- factored denominators ----------------------------------------

    def _factor_id(self, p):
        """Id of a monic irreducible polynomial in the factor table."""
        key = str(p)
        fid = self._factor_ids.get(key)
        if fid is None:
            fid = len(self._factors)
            self._factors.append(p)
            self._factor_ids[key] = fid
        return fid

    def _factor(self, poly):
        """poly = c * prod factor^e; returns (c, {fid: e})."""
        c, parts = poly.factor()
        c = _to_fmpq(c)
        facs = {}
        for p, e in parts:
            lc = p.leading_coefficient()
            if lc != 1:
                p = p / lc
                c = c * lc ** e
            fid = self._factor_id(p)
            facs[fid] = facs.get(fid, 0) + e
        return c, facs

    def _reduced(self, num, inum, facs, candidates):
        """Cancel den factors (all of them, or only ``candidates``) that
        divide both num and inum."""
        facs = dict(facs)
        for fid in (list(facs) if candidates is None else candidates):
            p = self._factors[fid]
            while facs.get(fid):
                try:
                    qn = num / p
                    qi = inum / p if inum is not None else None
                except DomainError:
                    break
                num, inum = qn, qi
                facs[fid] -= 1
        den = tuple(sorted((f, e) for f, e in facs.items() if e))
        return CoeffFn(self, num, inum, den)

    def den_poly(self, den):
        hit = self._den_polys.get(den)
        if hit is None:
            hit = self._pone
            for fid, e in den:
                hit = hit * self._factors[fid] ** e
            self._den_polys[den] = hit
        return hit

    def monomial(self, exps, coeff=1):
        """Laurent monomial from an exponent vector over (tau, banks...)."""
        num = [max(e, 0) for e in exps]
        c = _to_fmpq(coeff)
        den = []
        for k, e in enumerate(exps):
            if e < 0:
                x = [0] * self.nvars
                x[k] = 1
                den.append((self._factor_id(self.ctx.from_dict({tuple(x): 1})), -e))
        return CoeffFn(self, self.ctx.from_dict({tuple(num): c}), None, tuple(sorted(den)))

    @property
    def tau(self):
        return self.monomial(self._exp(tau=1))

    @property
    def q(self):
        return self.monomial(self._exp(tau=self.n))

    def q_pow(self, k):
        """q**k for an integer or Fraction k with k*n integral."""
        e = Fraction(k) * self.n
        if e.denominator != 1:
            raise ValueError(f"q^{k} not representable for n={self.n}")
        return self.monomial(self._exp(tau=int(e)))

    def tau_pow(self, k):
        return self.monomial(self._exp(tau=k))

    def _exp(self, tau=0, entries=()):
        e = [0] * self.nvars
        e[0] = tau
        for bank, i, k in entries:
            e[self.var_index(bank, i)] += k
        return e

    def var(self, bank, i):
        """The raw bank variable (w_i, u_i, v_i or z_i)."""
        return self.monomial(self._exp(entries=[(bank, i, 1)]))

    def X(self, bank, i):
        """X_i = q^{-2 x_i} for the bank's coordinate x."""
        return self.monomial(self._exp(entries=[(bank, i, self.n)]))

    # -- structure functions ------------------------------------------

    def _cached(self, key, build):
        hit = self._cache.get(key)
        if hit is None:
            hit = build()
            self._cache[key] = hit
        return hit

    def _check_pair(self, a, b):
        if not (1 <= a <= self.n and 1 <= b <= self.n):
            raise ValueError(f"index out of range for n={self.n}: {a}, {b}")
        if a == b:
            raise ValueError("structure function has a pole at a == b")

    def h(self, a, b, bank=LAM):
        """h(x_a - x_b) = q(X_a - q^-2 X_b)/(X_a - X_b)."""
        bank = bank_index(bank)
        self._check_pair(a, b)

        def build():
            q = self.q
            xa, xb = self.X(bank, a), self.X(bank, b)
            return (q * q * xa - xb) / (q * (xa - xb))
        return self._cached(("h", bank, a, b), build)

    def h0(self, a, b, bank=LAM):
        """h0(x_a - x_b) = (q^-1 - q)/(q^{-2(x_a - x_b)} - 1) = q - h."""
        bank = bank_index(bank)
        self._check_pair(a, b)

        def build():
            q = self.q
            xa, xb = self.X(bank, a), self.X(bank, b)
            return (1 / q - q) * xb / (xa - xb)
        return self._cached(("h0", bank, a, b), build)

    def g(self, a, b, bank=LAM):
        """g(x_a - x_b) = h(x_a - x_b) h(x_b - x_a)."""
        bank = bank_index(bank)
        self._check_pair(a, b)
        return self._cached(("g", bank, a, b),
                            lambda: self.h(a, b, bank) * self.h(b, a, bank))

    def s(self, i, bank=LAM):
        """s_i = q^{2(sum_k x_k / n - x_i)} = X_i / prod_k var_k."""
        bank = bank_index(bank)
        if not 1 <= i <= self.n:
            raise ValueError(f"index out of range for n={self.n}: {i}")
        entries = [(bank, i, self.n)] + [(bank, k, -1)
                                         for k in range(1, self.n + 1)]
        return self.monomial(self._exp(entries=entries))

    def gen_sign(self, sigma, indices, bank=LAM):
        """S(sigma, I): product over inversions k<l, sigma(k)>sigma(l) of
        -h(x_{i_sigma(k)} - x_{i_sigma(l)})."""
        bank = bank_index(bank)
        sigma, indices = tuple(sigma), tuple(indices)
        _check_perm(sigma, indices)

        def build():
            out = self.one
            for k, l in combinations(range(len(sigma)), 2):
                if sigma[k] > sigma[l]:
                    a, b = indices[sigma[k] - 1], indices[sigma[l] - 1]
                    out = out * -self.h(a, b, bank)
            return out
        return self._cached(("S", bank, sigma, indices), build)

    def gen_sign_tilde(self, sigma, indices, bank=LAM):
        """S~(sigma, I): the same inversion product with arguments reversed,
        -h(x_{i_sigma(l)} - x_{i_sigma(k)})."""
        bank = bank_index(bank)
        sigma, indices = tuple(sigma), tuple(indices)
        _check_perm(sigma, indices)

        def build():
            out = self.one
            for k, l in combinations(range(len(sigma)), 2):
                if sigma[k] > sigma[l]:
                    a, b = indices[sigma[k] - 1], indices[sigma[l] - 1]
                    out = out * -self.h(b, a, bank)
            return out
        return self._cached(("St", bank, sigma, indices), build)

    def subset_sign(self, first, second, bank=LAM):
        """sign(I1; I2) = prod over k in I1, m in I2, k > m of -h(x_k - x_m);
        zero if the subsets meet."""
        bank = bank_index(bank)
        first, second = tuple(first), tuple(second)
        if set(first) & set(second):
            return self.zero

        def build():
            out = self.one
            for k in first:
                for m in second:
                    if k > m:
                        out = out * -self.h(k, m, bank)
            return out
        return self._cached(("sign", bank, first, second), build)

    # -- substitutions ------------------------------------------------

    def _factor_image(self, fid, plan_key, target, tshift, active, merging):
        """Image of one den factor under a substitution:
        (tau exponent, constant, {fid: e})."""
        key = (fid, plan_key)
        hit = self._factor_images.get(key)
        if hit is None:
            d = _xform_dict(self._factors[fid], target, tshift, active)
            kt = min(e[0] for e in d)
            p = _from_dict(self, d, kt)
            if merging:
                c, facs = self._factor(p)
            elif p.is_one():
                c, facs = flint.fmpq(1), {}
            else:
                c = p.leading_coefficient()
                facs = {self._factor_id(p / c): 1}
            hit = (kt, c, facs)
            self._factor_images[key] = hit
        return hit

    def _plan(self, moves, shifts):
        key = (tuple(sorted(moves.items())),
               tuple(sorted((b, tuple(v)) for b, v in shifts.items())))
        plan = self._xform_plans.get(key)
        if plan is not None:
            return plan
        n = self.n
        target = list(range(self.nvars))
        tshift = [0] * self.nvars
        for src, dst in moves.items():
            for i in range(n):
                target[1 + src * n + i] = 1 + dst * n + i
        for src, vec in shifts.items():
            for i in range(n):
                # w_i -> tau^{-2 alpha_i} w_i
                tshift[1 + src * n + i] = -2 * vec[i]
        merging = len(set(target)) < len(target)
        active = [k for k in range(1, self.nvars)
                  if target[k] != k or tshift[k]]
        plan = (target, tshift, merging, active)
        self._xform_plans[key] = plan
        return plan


def _check_perm(sigma, indices):
    r = len(indices)
    if len(sigma) != r or sorted(sigma) != list(range(1, r + 1)):
        raise ValueError(f"not a permutation of {r} letters: {sigma}")
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise ValueError(f"index subset not strictly increasing: {indices}")


class CoeffFn:
    """Immutable exact rational function; see the module docstring."""

    __slots__ = ("field", "num", "inum", "den")

    def __init__(self, field, num, inum, den):
        self.field = field
        self.num = num
        self.inum = inum
        self.den = den

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return self.inum is None and self.num.is_zero()

    def is_one(self):
        return self.inum is None and not self.den and self.num.is_one()

    def is_real(self):
        return self.inum is None

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, CoeffFn):
            try:
                other = self.field.coerce(other)
            except TypeError:
                return NotImplemented
        if self.inum is None:
            if other.inum is not None:
                return False
        elif other.inum is None or self.inum != other.inum:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((str(self.num), str(self.inum), self.den))

    # -- arithmetic ---------------------------------------------------

    def _wrap(self, other):
        if isinstance(other, CoeffFn):
            return other
        try:
            return self.field.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        F = self.field
        d1, d2 = dict(self.den), dict(other.den)
        if d1 == d2:
            num = self.num + other.num
            inum = _iadd(self.inum, other.inum)
            candidates = list(d1)
            den = d1
        else:
            # common denominator; only factors at equal top power on both
            # sides can cancel afterwards
            den = {f: max(d1.get(f, 0), d2.get(f, 0)) for f in set(d1) | set(d2)}
            a = F.den_poly(_sub_den(den, d1))
            b = F.den_poly(_sub_den(den, d2))
            num = self.num * a + other.num * b
            inum = _iadd(_imul(self.inum, a), _imul(other.inum, b))
            candidates = [f for f in den if d1.get(f) == d2.get(f)]
        if inum is not None and inum.is_zero():
            inum = None
        if num.is_zero() and inum is None:
            return F.zero
        return F._reduced(num, inum, den, candidates)

    __radd__ = __add__

    def __neg__(self):
        inum = -self.inum if self.inum is not None else None
        return CoeffFn(self.field, -self.num, inum, self.den)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.field.zero
        if self.is_one():
            return other
        if other.is_one():
            return self
        F = self.field
        d1, d2 = self.den, other.den
        if self.inum is None and other.inum is None:
            # cross-cancel; irreducible factors are prime, so the product of
            # the reduced parts is already reduced
            x = F._reduced(self.num, None, d2, None)
            y = F._reduced(other.num, None, d1, None)
            den = dict(x.den)
            for f, e in y.den:
                den[f] = den.get(f, 0) + e
            return CoeffFn(F, x.num * y.num, None, tuple(sorted(den.items())))
        a, b = self.num, self.inum
        c, d = other.num, other.inum
        re = a * c - _pmul(b, d)
        im = _iadd(_imul(b, c), _imul(d, a))
        if im is not None and im.is_zero():
            im = None
        if re.is_zero() and im is None:
            return F.zero
        den = dict(d1)
        for f, e in d2:
            den[f] = den.get(f, 0) + e
        return F._reduced(re, im, den, None)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        F = self.field
        D = F.den_poly(self.den)
        if self.inum is None:
            c, facs = F._factor(self.num)
            return CoeffFn(F, D / c, None, tuple(sorted(facs.items())))
        # 1/(a + ib) over d = d (a - ib) / (a^2 + b^2)
        a, b = self.num, self.inum
        return F.make(D * a, a * a + b * b, -D * b)

    def __truediv__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        """Complex conjugation of the scalar coefficients (real form)."""
        if self.inum is None:
            return self
        return CoeffFn(self.field, self.num, -self.inum, self.den)

    # -- substitutions ------------------------------------------------

    def transform(self, moves=None, shifts=None):
        """Rename and/or shift banks.

        ``moves`` maps source bank -> target bank (several sources may land
        on one target); ``shifts`` maps source bank -> integer vector alpha,
        applying ``x -> x + alpha`` to that bank's coordinates before the
        move.
        """
        moves = {bank_index(k): bank_index(v)
                 for k, v in (moves or {}).items() if bank_index(k) != bank_index(v)}
        shifts = {bank_index(k): tuple(v) for k, v in (shifts or {}).items()
                  if any(v)}
        if not moves and not shifts:
            return self
        if self.is_zero():
            return self
        F = self.field
        target, tshift, merging, active = F._plan(moves, shifts)
        if not active:
            return self
        num_d = _xform_dict(self.num, target, tshift, active)
        inum_d = (_xform_dict(self.inum, target, tshift, active)
                  if self.inum is not None else None)
        # strip common tau powers so the result is polynomial
        tn = min(e[0] for e in num_d)
        if inum_d is not None:
            tn = min(tn, min(e[0] for e in inum_d))
        num = _from_dict(F, num_d, tn)
        inum = _from_dict(F, inum_d, tn) if inum_d is not None else None
        t = tn
        c = flint.fmpq(1)
        den = {}
        plan_key = (target_key(target), tuple(tshift))
        for fid, e in self.den:
            kt, cf, facs = F._factor_image(fid, plan_key, target, tshift, active, merging)
            t -= kt * e
            c = c * cf ** e
            for f, k in facs.items():
                den[f] = den.get(f, 0) + k * e
        if c != 1:
            num = num / c
            if inum is not None:
                inum = inum / c
        if t > 0:
            tp = F._gens[0] ** t
            num = num * tp
            if inum is not None:
                inum = inum * tp
        elif t < 0:
            fid = F._factor_id(F._gens[0])
            den[fid] = den.get(fid, 0) - t
        if merging:
            return F._reduced(num, inum, den, None)
        return CoeffFn(F, num, inum, tuple(sorted(den.items())))

    def shift(self, bank, alpha):
        """T_alpha on one bank: x -> x + alpha."""
        return self.transform(shifts={bank: alpha})

    def banks(self):
        """Set of banks with a variable occurring in this function."""
        n = self.field.n
        used = set()
        polys = [self.num] + [self.field._factors[f] for f, _ in self.den]
        if self.inum is not None:
            polys.append(self.inum)
        for p in polys:
            for k, d in enumerate(p.degrees()):
                if k and d:
                    used.add((k - 1) // n)
        return used

    # -- printing -----------------------------------------------------

    def __str__(self):
        num = str(self.num)
        if self.inum is not None:
            num = f"{num} + I*({self.inum})" if not self.num.is_zero() \
                else f"I*({self.inum})"
        if not self.den:
            return num
        return f"({num})/({self.field.den_poly(self.den)})"

    def __repr__(self):
        return f"CoeffFn({self})"


def _pmul(a, b):
    if a is None or b is None:
        return 0
    return a * b


def _imul(a, b):
    return None if a is None else a * b


def _iadd(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def _xform_dict(poly, target, tshift, active):
    out = {}
    for e, c in poly.terms():
        new = list(e)
        t = e[0]
        for k in active:
            ek = e[k]
            if ek:
                new[k] -= ek
        for k in active:
            ek = e[k]
            if ek:
                t += tshift[k] * ek
                new[target[k]] += ek
        new[0] = t
        key = tuple(new)
        prev = out.get(key)
        out[key] = c if prev is None else prev + c
    return {k: v for k, v in out.items() if v != 0} or {(0,) * len(target): 0}


def _sub_den(a, b):
    return tuple(sorted((f, e - b.get(f, 0)) for f, e in a.items() if e > b.get(f, 0)))


def target_key(target):
    return tuple(target)


def _from_dict(field, d, tmin):
    return field.ctx.from_dict({(e[0] - tmin,) + e[1:]: c for e, c in d.items()})


def product(items, start):
    return reduce(lambda a, b: a * b, items, start)
