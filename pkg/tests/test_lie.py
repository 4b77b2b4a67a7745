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

import unittest

import numpy

from degenga.algebra import AlgebraError, Signature
from degenga.groups import GroupId, gamma_family, identify, p_family
from degenga.subspace import SubspaceSpec, random_element
from degenga.verify import all_signatures
from degenga.lie import *

class TestLie(unittest.TestCase):
    def runTest(self):
        pass

    def test_dimensions(self):
        sig = Signature(0, 0, 3)
        self.assertEqual([lie_algebra_of(g).dimension for g in p_family(sig)], [4, 5, 8, 8, 8])
        for sig in all_signatures(3):
            for group in p_family(sig) + [GroupId("FullUnits", sig)]:
                self.assertEqual(lie_algebra_of(group).dimension, expected_dimension(group), "{0} in {1}".format(group, sig))
        self.assertEqual(lie_algebra_of(GroupId("FullUnits", sig)).dimension, 8)
        self.assertRaises(AlgebraError, lambda: lie_algebra_of(GroupId("GammaN", sig)))
        self.assertRaises(AlgebraError, lambda: expected_dimension(GroupId("Gamma0", sig)))

    def test_bases(self):
        sig = Signature(1, 0, 1)
        self.assertEqual(lie_algebra_of(GroupId("Ppm", sig)).basis, (0, 3))
        self.assertEqual(lie_algebra_of(GroupId("PpmRad", sig)).basis, (0, 2, 3))
        self.assertEqual(lie_algebra_of(GroupId("PpmLambda", sig)), lie_algebra_of(GroupId("PLambda", sig)))

        sig = Signature(2, 1, 0)
        self.assertEqual(lie_algebra_of(GroupId("P", sig)).basis, (0, 3, 5, 6, 7))

    def test_closure(self):
        for sig in all_signatures(3):
            for group in p_family(sig):
                self.assertTrue(check_commutator_closure(lie_algebra_of(group)), "{0} in {1}".format(group, sig))
            self.assertEqual(containment_violations(sig), [])

        sig = Signature(1, 1, 0)
        self.assertIsNotNone(closure_violation(LieAlgebraSpec(GroupId("Ppm", sig), SubspaceSpec(sig, "Grade", 1))))

    def test_tangent_algebras(self):
        for sig in [Signature(1, 0, 1), Signature(0, 0, 3), Signature(1, 1, 1)]:
            for group in p_family(sig) + gamma_family(sig):
                self.assertEqual(tangent_algebra(group), list(lie_algebra_of(identify(group)).basis), "{0} in {1}".format(group, sig))
        self.assertEqual(tangent_algebra(GroupId("FullUnits", Signature(1, 0, 0))), [0, 1])

    def test_exp(self):
        sig = Signature(0, 0, 2)
        self.assertEqual(exact_exp(sig.generator(1)), sig.one() + sig.generator(1))
        self.assertEqual(exact_exp(sig.blade(3, 4)), sig.one() + sig.blade(3, 4))
        self.assertEqual(exact_exp(sig.zero()), sig.one())
        x = sig.generator(1) + sig.generator(2)
        self.assertEqual(exact_exp(x), sig.one() + x)
        self.assertRaises(AlgebraError, lambda: exact_exp(Signature(1, 0, 0).generator(1)))

    def test_first_order(self):
        sig = Signature(1, 0, 0)
        value, slope = first_order_witness(sig.generator(1))
        self.assertEqual(value, sig.one())
        self.assertEqual(slope, sig.blade(1, 2))

        value, slope = first_order_witness(sig.one() * 3)
        self.assertEqual(slope, sig.zero())

    def test_numeric(self):
        sig = Signature(1, 1, 1)
        rng = numpy.random.default_rng(4)
        full = SubspaceSpec(sig, "Full")
        u, v = random_element(full, rng, 3), random_element(full, rng, 3)
        self.assertTrue(numpy.allclose(array_product(sig, to_array(u), to_array(v)), to_array(u * v)))

        sig = Signature(0, 0, 2)
        x = to_array(sig.generator(1) + sig.blade(3, 2))
        self.assertTrue(numpy.allclose(array_exp(sig, x), to_array(exact_exp(sig.generator(1) + sig.blade(3, 2)))))

        sig = Signature(1, 0, 0)
        self.assertTrue(numpy.allclose(array_exp(sig, to_array(sig.generator(1))), [numpy.cosh(1), numpy.sinh(1)]))

        sig = Signature(1, 0, 0, complex=True)
        self.assertEqual(to_array(sig.one() * sig.scalar(1, 2)).tolist(), [1 + 2j, 0j])

    def test_tangency(self):
        rng = numpy.random.default_rng(6)
        for sig in [Signature(1, 0, 1), Signature(0, 0, 2), Signature(2, 0, 0)]:
            for group in p_family(sig) + [GroupId("FullUnits", sig)]:
                report = check_tangency(lie_algebra_of(group), 3, 1e-9, rng, 3)
                self.assertTrue(report.ok, "{0} in {1}: {2}".format(group, sig, report.failures))
                self.assertEqual(report.checked, 3)
        self.assertRaises(ValueError, lambda: check_tangency(lie_algebra_of(GroupId("P", sig)), 3, 0.0, rng))
