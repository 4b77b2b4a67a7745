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

import functools
import logging

from sympy.polys.matrices import DomainMatrix

from degenga.algebra import AlgebraError, Multivector, NotInvertible, blade_product, grade_of, inverse

logger = logging.getLogger(__name__)

class SamplingError(RuntimeError): pass

def _lam(signature, m):
    return m & ~signature.degenerate == 0

def _rad(signature, m):
    return m & signature.degenerate != 0

def _even(m):
    return grade_of(m) % 2 == 0

def _top(signature, m):
    return m == signature.pseudoscalar

def _odd_n(signature):
    return signature.n % 2 == 1

_PREDICATES = {
    "Grade":            lambda s, m, k: grade_of(m) == k,
    "Parity":           lambda s, m, k: grade_of(m) % 2 == k,
    "Lambda":           lambda s, m, k: _lam(s, m),
    "LambdaEven":       lambda s, m, k: _lam(s, m) and _even(m),
    "LambdaOdd":        lambda s, m, k: _lam(s, m) and not _even(m),
    "Rad":              lambda s, m, k: _rad(s, m),
    "RadEven":          lambda s, m, k: _rad(s, m) and _even(m),
    "RadOdd":           lambda s, m, k: _rad(s, m) and not _even(m),
    "Center":           lambda s, m, k: (_lam(s, m) and _even(m)) or (_odd_n(s) and _top(s, m)),
    "S":                lambda s, m, k: m == 0 or (_odd_n(s) and _top(s, m)),
    "Grade0n":          lambda s, m, k: m == 0 or _top(s, m),
    "G0plusRad":        lambda s, m, k: m == 0 or _rad(s, m),
    "G0plusRadEven":    lambda s, m, k: m == 0 or (_rad(s, m) and _even(m)),
    "G0nPlusRadEven":   lambda s, m, k: m == 0 or _top(s, m) or (_rad(s, m) and _even(m)),
    "LambdaPlusGn":     lambda s, m, k: _lam(s, m) or _top(s, m),
    "LambdaEvenPlusGn": lambda s, m, k: (_lam(s, m) and _even(m)) or _top(s, m),
    "Full":             lambda s, m, k: True,
    }

class SubspaceSpec(object):
    u"""
    Named, blade-spanned linear subspace of G(p,q,r).

    Parameters
    ----------
    signature : :py:class:`Signature <degenga.algebra.Signature>`
        ambient algebra

    name : string
        one of ``Grade``, ``Parity`` (both need ``k``), ``Lambda``, ``LambdaEven``, ``LambdaOdd``, ``Rad``, ``RadEven``, ``RadOdd``, ``Center``, ``S``, ``Grade0n``, ``G0plusRad``, ``G0plusRadEven``, ``G0nPlusRadEven``, ``LambdaPlusGn``, ``LambdaEvenPlusGn``, ``Full``

    k : ``None`` or int
        grade (``0 <= k <= n``) for ``Grade``, parity (0 or 1) for ``Parity``

    Two specs are equal when they have the same signature and the same blade basis, so ``SubspaceSpec(G(2,1,0), "LambdaEven") == SubspaceSpec(G(2,1,0), "Grade", 0)``. Direct sums are formed with ``+``.
    """

    NAMES = tuple(sorted(_PREDICATES))

    def __init__(self, signature, name, k=None):
        if name not in _PREDICATES:
            raise AlgebraError("unknown subspace {0}; expected one of {1}".format(repr(name), ", ".join(self.NAMES)))
        if name == "Grade":
            if k is None or not 0 <= k <= signature.n:
                raise AlgebraError("Grade needs k between 0 and {0}, not {1}".format(signature.n, repr(k)))
        elif name == "Parity":
            if k not in (0, 1):
                raise AlgebraError("Parity needs k = 0 or 1, not {0}".format(repr(k)))
        elif k is not None:
            raise AlgebraError("subspace {0} takes no k".format(name))
        self._signature = signature
        self._parts = ((name, k),)
        self._basis = None

    @classmethod
    def _sum(cls, signature, parts):
        out = cls.__new__(cls)
        out._signature = signature
        out._parts = tuple(parts)
        out._basis = None
        return out

    @property
    def signature(self):
        return self._signature

    @property
    def name(self):
        return " + ".join(n if k is None else "{0}({1})".format(n, k) for n, k in self._parts)

    def admits(self, mask):
        """True if the blade ``mask`` lies in this subspace."""
        return any(_PREDICATES[n](self._signature, mask, k) for n, k in self._parts)

    @property
    def basis(self):
        if self._basis is None:
            self._basis = tuple(m for m in self._signature.blades() if self.admits(m))
        return self._basis

    @property
    def dimension(self):
        return len(self.basis)

    def __add__(self, other):
        if not isinstance(other, SubspaceSpec):
            return NotImplemented
        if other._signature != self._signature:
            raise AlgebraError("signature mismatch: {0} and {1}".format(repr(self._signature), repr(other._signature)))
        return SubspaceSpec._sum(self._signature, self._parts + other._parts)

    def __eq__(self, other):
        return isinstance(other, SubspaceSpec) and self._signature == other._signature and self.basis == other.basis

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._signature, self.basis))

    def __repr__(self):
        return "SubspaceSpec({0}, {1})".format(self._signature, repr(self.name))

def direct_sum(*specs):
    return functools.reduce(lambda x, y: x + y, specs)

def contains(spec, u):
    """True iff every stored term blade of ``u`` lies in ``spec``."""
    if spec.signature != u.signature:
        raise AlgebraError("signature mismatch: {0} and {1}".format(repr(spec.signature), repr(u.signature)))
    return all(spec.admits(m) for m in u.blades())

def basis_of(spec):
    return list(spec.basis)

def blade_kernel(rows, signature):
    """
    Blades spanning the nullspace of ``rows`` (lists of length ``signature.dim``).

    Raises :py:class:`AlgebraError <degenga.algebra.AlgebraError>` if the nullspace is not spanned by blades.
    """
    field = signature.field
    rows = [[field.convert(x) for x in row] for row in rows if any(row)]
    if len(rows) == 0:
        return list(signature.blades())

    kernel = DomainMatrix(rows, (len(rows), signature.dim), field).nullspace()
    if kernel.shape[0] == 0:
        return []

    reduced, pivots = kernel.rref()
    for row in reduced.to_list():
        if sum(1 for x in row if x) > 1:
            raise AlgebraError("nullspace in {0} is not spanned by blades".format(signature))
    return sorted(pivots)

def centralizer(constraint, generating_spec):
    u"""
    Blade basis of the commutant of ``generating_spec``.

    Parameters
    ----------
    constraint : ``"plain"`` or ``"twisted"``
        solve X V = V X (plain) or X̂ V = V X (twisted) for all basis blades V

    generating_spec : :py:class:`SubspaceSpec <degenga.subspace.SubspaceSpec>`
        ``Grade(1)`` or ``Parity(0)``
    """
    if constraint not in ("plain", "twisted"):
        raise AlgebraError("constraint must be 'plain' or 'twisted', not {0}".format(repr(constraint)))
    signature = generating_spec.signature
    if generating_spec._parts not in ((("Grade", 1),), (("Parity", 0),)):
        raise AlgebraError("commutants are only computed for Grade(1) and Parity(0), not {0}".format(generating_spec.name))

    field = signature.field
    rows = []
    for v in generating_spec.basis:
        block = [[field.zero] * signature.dim for i in signature.blades()]
        for a in signature.blades():
            left, m = blade_product(signature, a, v)
            right, _ = blade_product(signature, v, a)
            if constraint == "twisted" and grade_of(a) % 2 == 1:
                left = -left
            if left != right:
                block[m][a] = field(left - right)
        rows.extend(block)

    out = blade_kernel(rows, signature)
    logger.debug("%s commutant of %s in %s has %d blades", constraint, generating_spec.name, signature, len(out))
    return out

def kernel_spec(rep, signature):
    """Subspace whose invertible elements form the kernel of ``"ad"`` or ``"twisted_ad"``."""
    if rep == "ad":
        if signature.n % 2 == 1:
            return SubspaceSpec(signature, "LambdaEvenPlusGn")
        else:
            return SubspaceSpec(signature, "LambdaEven")
    elif rep == "twisted_ad":
        return SubspaceSpec(signature, "LambdaEven")
    else:
        raise AlgebraError("representation must be 'ad' or 'twisted_ad', not {0}".format(repr(rep)))

def odd_product_property_check(x, samples):
    u"""
    Check X̂ (U_1 ... U_m) = (U_1 ... U_m) X for odd-length products of pure-parity factors.

    Parameters
    ----------
    x : :py:class:`Multivector <degenga.algebra.Multivector>`
        element of Λ_r

    samples : iterable of sequences of Multivectors
        each an odd number of pure-parity factors U_i with X̂ U_i = U_i X
    """
    if not contains(SubspaceSpec(x.signature, "Lambda"), x):
        raise AlgebraError("{0} is not in the Grassmann subalgebra".format(x))
    xhat = x.hat()
    for factors in samples:
        factors = list(factors)
        if len(factors) % 2 != 1:
            raise AlgebraError("products must have an odd number of factors, not {0}".format(len(factors)))
        product = x.signature.one()
        for u in factors:
            if not (u.is_even() or u.is_odd()):
                raise AlgebraError("factor {0} does not have pure parity".format(u))
            if xhat * u != u * x:
                raise AlgebraError("factor {0} does not twist-commute with {1}".format(u, x))
            product = product * u
        if xhat * product != product * x:
            return False
    return True

################################################################ sampling

def random_element(spec, rng, bound=5):
    """Random element of ``spec`` with integer (Gaussian integer in complex mode) coefficients in [-bound, bound]."""
    signature = spec.signature
    basis = spec.basis
    real = rng.integers(-bound, bound + 1, size=len(basis))
    if signature.complex:
        imag = rng.integers(-bound, bound + 1, size=len(basis))
    else:
        imag = [0] * len(basis)
    return Multivector(signature, dict((m, signature.scalar(int(x), int(y))) for m, x, y in zip(basis, real, imag)))

def random_invertible(spec, rng, bound=5, retries=1000):
    """Rejection-sample an invertible element of ``spec``."""
    for attempt in range(retries):
        u = random_element(spec, rng, bound)
        if inverse(u) is not NotInvertible:
            if attempt > retries // 2:
                logger.warning("needed %d attempts to sample an invertible element of %s", attempt + 1, spec.name)
            return u
    raise SamplingError("no invertible element of {0} in {1} found after {2} attempts".format(spec.name, spec.signature, retries))
