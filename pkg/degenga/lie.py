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

import numpy

from degenga.algebra import AlgebraError, Multivector, NotInvertible, blade_product, commutator, grade_of, inverse
from degenga.groups import GroupId, member
from degenga.subspace import SubspaceSpec, blade_kernel, contains, random_element

logger = logging.getLogger(__name__)

class LieAlgebraSpec(object):
    u"""
    Blade-spanned Lie algebra of one of the P-family groups (or of all units).

    Parameters
    ----------
    group : :py:class:`GroupId <degenga.groups.GroupId>`
        the group whose Lie algebra this is

    spec : :py:class:`SubspaceSpec <degenga.subspace.SubspaceSpec>`
        the spanning subspace
    """

    def __init__(self, group, spec):
        self.group = group
        self.spec = spec

    @property
    def signature(self):
        return self.spec.signature

    @property
    def basis(self):
        return self.spec.basis

    @property
    def dimension(self):
        return self.spec.dimension

    def __eq__(self, other):
        return isinstance(other, LieAlgebraSpec) and self.signature == other.signature and self.basis == other.basis

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((LieAlgebraSpec, self.signature, self.basis))

    def __repr__(self):
        return "<LieAlgebraSpec of {0} in {1}: {2}, dimension {3}>".format(self.group, self.signature, self.spec.name, self.dimension)

def lie_algebra_of(group):
    """
    Lie algebra of a P-family group, or the whole algebra for ``FullUnits``.

    Gamma-family groups raise :py:class:`AlgebraError <degenga.algebra.AlgebraError>`: resolve them with :py:func:`identify <degenga.groups.identify>` first.
    """
    sig = group.signature
    if group.family == "Gamma":
        raise AlgebraError("{0} has no separately constructed Lie algebra; use lie_algebra_of(identify(group))".format(repr(group)))

    odd = sig.n % 2 == 1
    even = SubspaceSpec(sig, "Parity", 0)
    if group.name == "Ppm":
        spec = even
    elif group.name == "PpmLambda":
        spec = even + SubspaceSpec(sig, "LambdaOdd")
    elif group.name == "PpmRad":
        spec = even + SubspaceSpec(sig, "RadOdd")
    elif group.name == "P":
        spec = even + SubspaceSpec(sig, "Grade", sig.n) if odd else even
    elif group.name == "PLambda":
        spec = even + SubspaceSpec(sig, "LambdaOdd")
        if odd and sig.n != sig.r:
            spec = spec + SubspaceSpec(sig, "Grade", sig.n)
    else:
        spec = SubspaceSpec(sig, "Full")
    return LieAlgebraSpec(group, spec)

def expected_dimension(group):
    """Closed-form dimension of the Lie algebra of a P-family group (or ``FullUnits``), independent of any basis construction."""
    sig = group.signature
    n, r, pq = sig.n, sig.r, sig.p + sig.q
    odd = n % 2 == 1
    half = 2**(n - 1)
    if group.name == "Ppm":
        return half
    elif group.name == "PpmLambda":
        return half + 2**(r - 1) if r >= 1 else half
    elif group.name == "PpmRad":
        return 2**n - 2**(pq - 1) if pq >= 1 else 2**n
    elif group.name == "P":
        return half + 1 if odd else half
    elif group.name == "PLambda":
        if r == 0:
            return half + 1 if odd else half
        elif odd and n != r:
            return half + 2**(r - 1) + 1
        else:
            return half + 2**(r - 1)
    elif group.name == "FullUnits":
        return 2**n
    raise AlgebraError("{0} has no closed-form Lie algebra dimension".format(repr(group)))

def closure_violation(alg):
    """First pair of basis blades whose commutator leaves the algebra, as ``(a, b, commutator)``, or ``None``."""
    sig = alg.signature
    basis = alg.basis
    for i, a in enumerate(basis):
        for b in basis[i + 1:]:
            c = commutator(sig.blade(a), sig.blade(b))
            if not contains(alg.spec, c):
                return a, b, c
    return None

def check_commutator_closure(alg):
    """Exhaustive exact check that the commutator of every pair of basis blades stays in the algebra."""
    return closure_violation(alg) is None

def containment_violations(signature):
    """Pairs of P-family names whose Lie algebra bases fail the chains p± ⊆ p±Λ ⊆ p±rad and p± ⊆ p ⊆ pΛ."""
    chains = [("Ppm", "PpmLambda"), ("PpmLambda", "PpmRad"), ("Ppm", "P"), ("P", "PLambda")]
    out = []
    for sub, sup in chains:
        a = set(lie_algebra_of(GroupId(sub, signature)).basis)
        b = set(lie_algebra_of(GroupId(sup, signature)).basis)
        if not a <= b:
            out.append((sub, sup))
    return out

################################################################ tangent spaces

def _first_order(group, x):
    # derivative at e of the group condition along e + eps x, one multivector per constraint
    sig = group.signature
    if group.family == "P":
        return [x - x.hat()]
    elif group.family == "Gamma":
        left = x.hat() if group.rep == "twisted_ad" else x
        return [left * sig.blade(u) - sig.blade(u) * x for u in group.preserved().basis]
    return []

def _complement(group):
    if group.family == "Gamma":
        return group.preserved()
    return group.target()

def tangent_algebra(group):
    """
    Exact first-order tangent space at the identity of any supported group, as a sorted list of blades.

    P-families linearize ĥ(T⁻¹)T at T = e + εX; Gamma-families linearize the preserved-subspace condition on its basis. The nullspace of the components leaving the target (or preserved) subspace must be spanned by blades.
    """
    sig = group.signature
    allowed = _complement(group)
    columns = [_first_order(group, sig.blade(b)) for b in sig.blades()]
    if len(columns[0]) == 0:
        return list(sig.blades())

    rows = []
    for k in range(len(columns[0])):
        for m in sig.blades():
            if allowed.admits(m):
                continue
            rows.append([columns[b][k].coefficient(m) for b in sig.blades()])
    return blade_kernel(rows, sig)

def exact_exp(x, max_terms=None):
    """
    Exponential of a nilpotent multivector by its terminating series.

    Raises :py:class:`AlgebraError <degenga.algebra.AlgebraError>` if the series has not terminated after ``max_terms`` terms (default: dimension of the algebra plus one).
    """
    sig = x.signature
    if max_terms is None:
        max_terms = sig.dim + 1
    total = term = sig.one()
    for k in range(1, max_terms + 1):
        term = (term * x) / k
        if not term:
            return total
        total = total + term
    raise AlgebraError("{0} is not nilpotent; its exponential series does not terminate".format(x))

class _Dual(object):
    # a + eps b with eps**2 = 0
    def __init__(self, a, b):
        self.a = a
        self.b = b

    def __mul__(self, other):
        return _Dual(self.a * other.a, self.a * other.b + self.b * other.a)

    def hat(self):
        return _Dual(self.a.hat(), self.b.hat())

    def inverse(self):
        a_inv = inverse(self.a)
        if a_inv is NotInvertible:
            return NotInvertible
        return _Dual(a_inv, -(a_inv * self.b * a_inv))

def first_order_witness(x):
    u"""ĥ((e + εX)⁻¹)(e + εX) computed exactly modulo ε², as the pair (value, ε coefficient)."""
    t = _Dual(x.signature.one(), x)
    out = t.inverse().hat() * t
    return out.a, out.b

################################################################ floating-point stage

@functools.lru_cache(maxsize=64)
def _product_tables(signature):
    dim = signature.dim
    signs = numpy.empty((dim, dim), dtype=numpy.float64)
    masks = numpy.empty((dim, dim), dtype=numpy.intp)
    for a in signature.blades():
        for b in signature.blades():
            signs[a, b], masks[a, b] = blade_product(signature, a, b)
    hats = numpy.array([-1.0 if grade_of(m) % 2 else 1.0 for m in signature.blades()])
    return signs, masks, hats

def _to_float(c, complex):
    if complex:
        return int(c.x.numerator) / int(c.x.denominator) + 1j * int(c.y.numerator) / int(c.y.denominator)
    return int(c.numerator) / int(c.denominator)

def to_array(u):
    """Dense floating-point coefficients of ``u`` (complex dtype in complex mode)."""
    sig = u.signature
    out = numpy.zeros(sig.dim, dtype=numpy.complex128 if sig.complex else numpy.float64)
    for m, c in u.items():
        out[m] = _to_float(c, sig.complex)
    return out

def array_product(signature, u, v):
    """Geometric product of dense coefficient arrays."""
    signs, masks, hats = _product_tables(signature)
    out = numpy.zeros(signature.dim, dtype=numpy.result_type(u, v))
    numpy.add.at(out, masks.ravel(), (signs * numpy.outer(u, v)).ravel())
    return out

def array_exp(signature, u, terms=30):
    """Exponential of a dense coefficient array by scaling and squaring with a truncated series."""
    biggest = numpy.max(numpy.abs(u)) if len(u) > 0 else 0.0
    k = 0
    while biggest / 2**k >= 0.5:
        k += 1
    scaled = u / 2**k

    one = numpy.zeros(signature.dim, dtype=u.dtype)
    one[0] = 1
    total = one.copy()
    term = one
    for i in range(1, terms + 1):
        term = array_product(signature, term, scaled) / i
        total = total + term
    for i in range(k):
        total = array_product(signature, total, total)
    return total

def numeric_witness(signature, x):
    u"""ĥ(exp(-X)) exp(X) in floating point for a dense array ``x``."""
    signs, masks, hats = _product_tables(signature)
    return array_product(signature, hats * array_exp(signature, -x), array_exp(signature, x))

class TangencyReport(object):
    def __init__(self, alg, checked, failures):
        self.alg = alg
        self.checked = checked
        self.failures = failures

    @property
    def ok(self):
        return len(self.failures) == 0

    def __bool__(self):
        return self.ok

def check_tangency(alg, samples, tolerance, rng, bound=5):
    """
    Check that sampled elements of ``alg`` are tangent to its group.

    Three stages per sample: the exact first-order witness for e + εX, the exact exponential of a nilpotent sample (from the radical part of the algebra, when it has one), and the floating-point exponential of X (normalized to unit 1-norm) whose witness may leave the target subspace by at most ``tolerance``.

    Returns a :py:class:`TangencyReport` whose ``failures`` are ``(stage, X)`` pairs.
    """
    if not tolerance > 0:
        raise ValueError("tolerance must be positive, not {0}".format(tolerance))
    group = alg.group
    sig = alg.signature
    target = group.target()

    nilpotent = [m for m in alg.basis if m & sig.degenerate]
    outside = numpy.array([not target.admits(m) for m in sig.blades()])

    failures = []
    checked = 0
    for i in range(samples):
        x = random_element(alg.spec, rng, bound)
        checked += 1

        value, slope = first_order_witness(x)
        if value != sig.one() or not contains(target, slope):
            failures.append(("first order", x))

        if len(nilpotent) > 0:
            coefficients = rng.integers(-bound, bound + 1, size=len(nilpotent))
            y = Multivector(sig, dict((m, int(c)) for m, c in zip(nilpotent, coefficients)))
            if not member(group, exact_exp(y)).member:
                failures.append(("exact exponential", y))

        if x:
            dense = to_array(x)
            dense = dense / numpy.sum(numpy.abs(dense))
            w = numeric_witness(sig, dense)
            if numpy.max(numpy.abs(w[outside]), initial=0.0) >= tolerance:
                failures.append(("numeric exponential", x))

    logger.debug("tangency of %s in %s: %d samples, %d failures", group, sig, checked, len(failures))
    return TangencyReport(alg, checked, failures)
