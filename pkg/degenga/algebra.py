#!/usr/bin/env python

# Copyright (c) 2018, DIANA-HEP
# All rights reserved.
# 
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
# 
# * Redistributions of source code must retain the above copyright notice, this
#   list of conditions and the following disclaimer.
# 
# * Redistributions in binary form must reproduce the above copyright notice,
#   this list of conditions and the following disclaimer in the documentation
#   and/or other materials provided with the distribution.
# 
# * Neither the name of the copyright holder nor the names of its
#   contributors may be used to endorse or promote products derived from
#   this software without specific prior written permission.
# 
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

import fractions
import functools
import logging
import numbers

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

logger = logging.getLogger(__name__)

class AlgebraError(ValueError): pass

class _NotInvertible(object):
    def __repr__(self):
        return "NotInvertible"

    def __bool__(self):
        return False

    def __reduce__(self):
        return "NotInvertible"

NotInvertible = _NotInvertible()

def _popcount(mask):
    return bin(mask).count("1")

def grade_of(mask):
    """Number of generators in the blade encoded by ``mask``."""
    return _popcount(mask)

def blade_indices(mask):
    """Ascending 1-based generator indices of the blade encoded by ``mask``."""
    out = []
    index = 1
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return tuple(out)

def blade_mask(indices):
    """Bitmask of the blade with 1-based generator ``indices``."""
    mask = 0
    for a in indices:
        mask |= 1 << (a - 1)
    return mask

def _rational(value):
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars: {0}".format(repr(value)))
    if isinstance(value, numbers.Integral):
        return QQ(int(value))
    if isinstance(value, fractions.Fraction):
        return QQ(value.numerator, value.denominator)
    if QQ.of_type(value):
        return value
    raise TypeError("cannot use {0} as an exact rational scalar".format(repr(value)))

################################################################ signatures

class Signature(object):
    u"""
    Signature (p, q, r) of a degenerate geometric algebra G(p,q,r) together with its scalar mode.

    Generators e_1 ... e_p square to +1, e_{p+1} ... e_{p+q} to -1 and e_{p+q+1} ... e_n to 0. In complex mode the scalars are Gaussian rationals and the first p + q generators all square to +1.

    Parameters
    ----------
    p, q, r : non-negative int
        numbers of positive, negative and degenerate generators; ``1 <= p + q + r <= 12``

    Keyword Arguments
    -----------------
    complex : bool
        if ``True``, scalars are Gaussian rationals (``QQ_I``); otherwise rationals (``QQ``)
    """

    MAXDIM = 12

    def __init__(self, p, q, r, complex=False):
        for x in (p, q, r):
            if isinstance(x, bool) or not isinstance(x, numbers.Integral) or x < 0:
                raise AlgebraError("p, q, r must be non-negative integers, not {0}".format(repr(x)))
        self._p, self._q, self._r = int(p), int(q), int(r)
        self._complex = bool(complex)
        if not 1 <= self.n <= self.MAXDIM:
            raise AlgebraError("dimension p + q + r must be between 1 and {0}, not {1}".format(self.MAXDIM, self.n))

    @staticmethod
    def parse(text, complex=False):
        """Read a signature written as ``"p,q,r"``."""
        try:
            p, q, r = [int(x) for x in text.split(",")]
        except (ValueError, AttributeError):
            raise AlgebraError("signature must be written as p,q,r, not {0}".format(repr(text)))
        return Signature(p, q, r, complex=complex)

    @property
    def p(self):
        return self._p

    @property
    def q(self):
        return self._q

    @property
    def r(self):
        return self._r

    @property
    def n(self):
        return self._p + self._q + self._r

    @property
    def complex(self):
        return self._complex

    @property
    def field(self):
        """Scalar domain: ``QQ_I`` in complex mode, ``QQ`` otherwise."""
        return QQ_I if self._complex else QQ

    @property
    def dim(self):
        return 1 << self.n

    @property
    def pseudoscalar(self):
        """Mask of the top-grade blade e_{1...n}."""
        return self.dim - 1

    @property
    def degenerate(self):
        """Mask of the degenerate generators."""
        return ((1 << self._r) - 1) << (self._p + self._q)

    @property
    def negative(self):
        """Mask of the generators squaring to -1 (empty in complex mode)."""
        if self._complex:
            return 0
        return ((1 << self._q) - 1) << self._p

    def eta(self, a):
        """Square of the generator e_a (1-based) as an int: +1, -1 or 0."""
        if not 1 <= a <= self.n:
            raise AlgebraError("generator index must be between 1 and {0}, not {1}".format(self.n, a))
        bit = 1 << (a - 1)
        if bit & self.degenerate:
            return 0
        elif bit & self.negative:
            return -1
        else:
            return 1

    def blades(self):
        """All blade masks in canonical (ascending) order."""
        return range(self.dim)

    def scalar(self, value, imag=0):
        """Convert ``value`` (plus ``imag`` times i) into this signature's scalar field."""
        if self._complex:
            if QQ_I.of_type(value):
                if imag:
                    return value + QQ_I(0, _rational(imag))
                return value
            return QQ_I(_rational(value), _rational(imag))
        else:
            if QQ_I.of_type(value):
                if value.y:
                    raise AlgebraError("imaginary scalar {0} in real mode".format(value))
                value = value.x
            if imag:
                raise AlgebraError("imaginary scalars are only allowed in complex mode")
            return _rational(value)

    def zero(self):
        return Multivector(self)

    def one(self):
        return Multivector._trusted(self, {0: self.field.one})

    def blade(self, mask, coefficient=1):
        return Multivector(self, {mask: coefficient})

    def generator(self, a):
        """The generator e_a (1-based)."""
        self.eta(a)
        return self.blade(1 << (a - 1))

    def _key(self):
        return (self._p, self._q, self._r, self._complex)

    def __eq__(self, other):
        return isinstance(other, Signature) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((Signature,) + self._key())

    def __repr__(self):
        if self._complex:
            return "Signature({0}, {1}, {2}, complex=True)".format(self._p, self._q, self._r)
        return "Signature({0}, {1}, {2})".format(self._p, self._q, self._r)

    def __str__(self):
        return "G({0},{1},{2})".format(self._p, self._q, self._r)

def _reorder_sign(a, b):
    a >>= 1
    swaps = 0
    while a:
        swaps += _popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1

@functools.lru_cache(maxsize=1 << 18)
def blade_product(signature, a, b):
    """Returns ``(sign, mask)`` such that e_a e_b = sign e_mask; ``sign`` is 0, 1 or -1."""
    common = a & b
    if common & signature.degenerate:
        return 0, a ^ b
    sign = _reorder_sign(a, b)
    if _popcount(common & signature.negative) & 1:
        sign = -sign
    return sign, a ^ b

################################################################ multivectors

class Multivector(object):
    u"""
    Element of G(p,q,r): a sparse map from blade masks to exact scalars.

    Multivectors are immutable values. Zero coefficients are never stored, so equality is equality of term maps.

    Parameters
    ----------
    signature : :py:class:`Signature <degenga.algebra.Signature>`
        algebra this element belongs to

    terms : ``None`` or dict
        blade mask to scalar; scalars may be ints, ``fractions.Fraction`` or elements of ``signature.field``
    """

    def __init__(self, signature, terms=None):
        if not isinstance(signature, Signature):
            raise TypeError("signature must be a Signature, not {0}".format(repr(signature)))
        self._signature = signature
        self._terms = {}
        if terms is not None:
            for mask, value in terms.items():
                if isinstance(mask, bool) or not isinstance(mask, numbers.Integral) or not 0 <= mask < signature.dim:
                    raise AlgebraError("blade mask {0} is outside of {1}".format(repr(mask), signature))
                value = signature.scalar(value)
                if value:
                    self._terms[int(mask)] = value

    @classmethod
    def _trusted(cls, signature, terms):
        out = cls.__new__(cls)
        out._signature = signature
        out._terms = terms
        return out

    @property
    def signature(self):
        return self._signature

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """``(mask, coefficient)`` pairs in canonical blade order."""
        return sorted(self._terms.items())

    def blades(self):
        return sorted(self._terms)

    def coefficient(self, mask):
        return self._terms.get(mask, self._signature.field.zero)

    def scalar_part(self):
        return self.coefficient(0)

    def vector(self):
        """Dense coefficient list indexed by blade mask."""
        zero = self._signature.field.zero
        return [self._terms.get(m, zero) for m in self._signature.blades()]

    def grades(self):
        return set(_popcount(m) for m in self._terms)

    def is_even(self):
        return all(_popcount(m) % 2 == 0 for m in self._terms)

    def is_odd(self):
        return all(_popcount(m) % 2 == 1 for m in self._terms)

    def hat(self):
        return grade_involution(self)

    def grade(self, k):
        return grade_project(self, k)

    def even(self):
        return parity_split(self)[0]

    def odd(self):
        return parity_split(self)[1]

    def inverse(self):
        return inverse(self)

    def is_invertible(self):
        return inverse(self) is not NotInvertible

    def _scaled(self, c):
        if not c:
            return Multivector._trusted(self._signature, {})
        return Multivector._trusted(self._signature, dict((m, x * c) for m, x in self._terms.items()))

    def _coerce(self, other):
        if isinstance(other, Multivector):
            _check_same(self, other)
            return other
        try:
            c = self._signature.scalar(other)
        except TypeError:
            return NotImplemented
        return Multivector._trusted(self._signature, {0: c} if c else {})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            if m in terms:
                c = terms[m] + c
                if not c:
                    del terms[m]
                    continue
            terms[m] = c
        return Multivector._trusted(self._signature, terms)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._trusted(self._signature, dict((m, -c) for m, c in self._terms.items()))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        try:
            c = self._signature.scalar(other)
        except TypeError:
            return NotImplemented
        return self._scaled(c)

    def __rmul__(self, other):
        try:
            c = self._signature.scalar(other)
        except TypeError:
            return NotImplemented
        return self._scaled(c)

    def __truediv__(self, other):
        if isinstance(other, Multivector):
            _check_same(self, other)
            if any(m != 0 for m in other._terms):
                raise AlgebraError("division by the non-scalar multivector {0}; use inverse() instead".format(other))
            c = other.scalar_part()
        else:
            try:
                c = self._signature.scalar(other)
            except TypeError:
                return NotImplemented
        if not c:
            raise ZeroDivisionError("division of a multivector by zero")
        return self._scaled(self._signature.field.one / c)

    def __pow__(self, exponent):
        if isinstance(exponent, bool) or not isinstance(exponent, numbers.Integral) or exponent < 0:
            raise AlgebraError("multivector powers need a non-negative integer exponent, not {0}".format(repr(exponent)))
        result = self._signature.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            try:
                other = self._coerce(other)
            except AlgebraError:
                return False
            if other is NotImplemented:
                return NotImplemented
        return self._signature == other._signature and self._terms == other._terms

    def __ne__(self, other):
        out = self.__eq__(other)
        if out is NotImplemented:
            return out
        return not out

    def __hash__(self):
        return hash((self._signature, frozenset(self._terms.items())))

    def __bool__(self):
        return len(self._terms) > 0

    def __str__(self):
        import degenga.expr
        return degenga.expr.tostring(self)

    def __repr__(self):
        return "<Multivector {0} in {1}>".format(str(self), self._signature)

def _check_same(u, v):
    if not isinstance(u, Multivector) or not isinstance(v, Multivector):
        raise TypeError("expected two Multivectors, not {0} and {1}".format(type(u).__name__, type(v).__name__))
    if u.signature != v.signature:
        raise AlgebraError("signature mismatch: {0} and {1}".format(repr(u.signature), repr(v.signature)))

################################################################ operations

def geometric_product(u, v):
    """Bilinear extension of the blade product; repeated degenerate indices annihilate a term."""
    _check_same(u, v)
    signature = u.signature
    terms = {}
    for a, x in u._terms.items():
        for b, y in v._terms.items():
            sign, m = blade_product(signature, a, b)
            if sign == 0:
                continue
            c = x * y if sign > 0 else -(x * y)
            if m in terms:
                c = terms[m] + c
            terms[m] = c
    return Multivector._trusted(signature, dict((m, c) for m, c in terms.items() if c))

def grade_involution(u):
    """Scales each grade-k term by (-1)^k."""
    return Multivector._trusted(u.signature, dict((m, -c if _popcount(m) & 1 else c) for m, c in u._terms.items()))

def grade_project(u, k):
    if isinstance(k, bool) or not isinstance(k, numbers.Integral) or not 0 <= k <= u.signature.n:
        raise AlgebraError("grade must be between 0 and {0}, not {1}".format(u.signature.n, repr(k)))
    return Multivector._trusted(u.signature, dict((m, c) for m, c in u._terms.items() if _popcount(m) == k))

def parity_split(u):
    """Returns ``(even, odd)`` with ``u == even + odd``."""
    even, odd = {}, {}
    for m, c in u._terms.items():
        if _popcount(m) & 1:
            odd[m] = c
        else:
            even[m] = c
    return Multivector._trusted(u.signature, even), Multivector._trusted(u.signature, odd)

def commutator(u, v):
    """[u, v] = uv - vu."""
    _check_same(u, v)
    return u * v - v * u

def left_regular_matrix(u):
    """
    Matrix of left multiplication by ``u`` in the canonical blade basis.

    Column j holds the coefficients of ``u`` times blade j. Returns a ``sympy`` ``DomainMatrix`` over ``u.signature.field``.
    """
    signature = u.signature
    field = signature.field
    rows = [[field.zero] * signature.dim for i in signature.blades()]
    for j in signature.blades():
        for a, x in u._terms.items():
            sign, m = blade_product(signature, a, j)
            if sign > 0:
                rows[m][j] += x
            elif sign < 0:
                rows[m][j] -= x
    return DomainMatrix(rows, (signature.dim, signature.dim), field)

def in_scalar_plus_radical(u):
    """True if every term of ``u`` is the identity or contains a degenerate generator."""
    degenerate = u.signature.degenerate
    return all(m == 0 or m & degenerate for m in u._terms)

def _radical_inverse(u, a):
    # u = a(e + N) with N nilpotent, so u^-1 = sum (-N)^k a^-1
    scale = u.signature.field.one / a
    nil = u._scaled(scale) - 1
    term = total = u.signature.one()
    while True:
        term = -(term * nil)
        if not term:
            break
        total = total + term
    return total._scaled(scale)

def inverse(u):
    u"""
    Exact inverse of ``u`` or the falsy value :py:data:`NotInvertible <degenga.algebra.NotInvertible>`.

    Elements of G⁰ ⊕ rad are inverted by a terminating series (they are invertible iff their scalar part is nonzero); everything else by an exact LU solve of ``left_regular_matrix(u) x = e``.
    """
    signature = u.signature
    if not u:
        return NotInvertible

    if in_scalar_plus_radical(u):
        a = u.scalar_part()
        if not a:
            return NotInvertible
        return _radical_inverse(u, a)

    field = signature.field
    rhs = DomainMatrix([[field.one if i == 0 else field.zero] for i in signature.blades()], (signature.dim, 1), field)
    try:
        solution = left_regular_matrix(u).lu_solve(rhs)
    except (DMNonInvertibleMatrixError, ZeroDivisionError):
        return NotInvertible

    terms = {}
    for m, row in enumerate(solution.to_list()):
        if row[0]:
            terms[m] = row[0]
    return Multivector._trusted(signature, terms)
