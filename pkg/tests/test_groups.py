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

from degenga.algebra import AlgebraError, Signature, inverse
from degenga.subspace import SubspaceSpec
from degenga.verify import expected_classes
from degenga.groups import *

class TestGroups(unittest.TestCase):
    def runTest(self):
        pass

    def test_names(self):
        sig = Signature(0, 0, 3)
        self.assertEqual(GroupId.parse("P_pm_Lambda", sig), GroupId("PpmLambda", sig))
        self.assertEqual(GroupId.parse("PpmLambda", sig), GroupId("PpmLambda", sig))
        self.assertEqual(GroupId.parse("Gamma_even", sig), GroupId("GammaParity", sig, 0))
        self.assertEqual(GroupId.parse("Gamma_check_(1)", sig), GroupId("GammaCheckParity", sig, 1))
        self.assertEqual(GroupId.parse("GammaParity(1)", sig), GroupId("GammaParity", sig, 1))
        self.assertEqual(str(GroupId("GammaCheck0n", sig)), "Gamma_check_0n")
        self.assertEqual(str(GroupId("FullUnits", sig)), "G_units")
        self.assertEqual(GroupId("PpmRad", sig).family, "P")
        self.assertEqual(GroupId("GammaN", sig).family, "Gamma")
        self.assertEqual(GroupId("GammaCheckN", sig).rep, "twisted_ad")
        self.assertEqual(GroupId("Gamma0", sig).rep, "ad")
        self.assertEqual(len(p_family(sig)), 5)
        self.assertEqual(len(gamma_family(sig)), 10)

    def test_name_errors(self):
        sig = Signature(0, 0, 3)
        self.assertRaises(AlgebraError, lambda: GroupId("GammaParity", sig))
        self.assertRaises(AlgebraError, lambda: GroupId("Ppm", sig, 1))
        self.assertRaises(AlgebraError, lambda: GroupId("Spin", sig))
        self.assertRaises(AlgebraError, lambda: GroupId.parse("nope", sig))
        try:
            GroupId.parse("Gamma_2", sig)
        except AlgebraError as err:
            self.assertIn("counterexample", str(err))
        else:
            self.fail("no AlgebraError")
        self.assertRaises(AlgebraError, lambda: GroupId.parse("Gamma_check_1", sig))

    def test_identify(self):
        odd, even = Signature(1, 0, 2), Signature(1, 1, 2)
        names = lambda sig: dict((str(g), identify(g).name) for g in gamma_family(sig))
        self.assertEqual(names(odd), {"Gamma_(0)": "PLambda", "Gamma_(1)": "P",
                                      "Gamma_check_(0)": "Ppm", "Gamma_check_(1)": "PpmLambda",
                                      "Gamma_0": "FullUnits", "Gamma_n": "FullUnits", "Gamma_0n": "FullUnits",
                                      "Gamma_check_0": "Ppm", "Gamma_check_n": "PpmRad", "Gamma_check_0n": "P"})
        self.assertEqual(names(even)["Gamma_n"], "PpmRad")
        self.assertEqual(names(even)["Gamma_0n"], "PpmRad")
        self.assertEqual(names(even)["Gamma_check_n"], "FullUnits")
        self.assertEqual(identify(GroupId("P", odd)), GroupId("P", odd))

    def test_targets(self):
        sig = Signature(1, 0, 2)
        self.assertEqual(GroupId("Ppm", sig).target(), SubspaceSpec(sig, "Grade", 0))
        self.assertEqual(GroupId("PLambda", sig).target(), SubspaceSpec(sig, "LambdaPlusGn"))
        self.assertEqual(GroupId("Gamma0n", sig).preserved(), SubspaceSpec(sig, "Grade0n"))
        self.assertEqual(GroupId("GammaCheckParity", sig, 1).preserved(), SubspaceSpec(sig, "Parity", 1))
        self.assertRaises(AlgebraError, lambda: GroupId("Gamma0", sig).target())
        self.assertRaises(AlgebraError, lambda: GroupId("P", sig).preserved())

    def test_conjugation(self):
        sig = Signature(0, 0, 3)
        t = sig.one() + sig.generator(1)
        self.assertEqual(str(adjoint_conjugate("ad", t, sig.generator(2))), "e2 + 2*e12")
        self.assertEqual(str(adjoint_conjugate("twisted_ad", t, sig.blade(6))), "e23 - 2*e123")
        self.assertEqual(adjoint_conjugate("ad", t, sig.blade(3), inverse(t)), sig.blade(3))
        self.assertRaises(AlgebraError, lambda: adjoint_conjugate("ad", sig.generator(1), sig.one()))
        self.assertRaises(AlgebraError, lambda: adjoint_conjugate("other", t, sig.one()))

        self.assertTrue(fixes_all_blades("ad", sig.one() * 3 + sig.blade(3)))
        self.assertFalse(fixes_all_blades("ad", t))
        self.assertFalse(fixes_all_blades("ad", sig.generator(1)))
        self.assertEqual(twisted_witness(t), sig.one() + sig.blade(1, 2))
        self.assertIsNone(twisted_witness(sig.generator(1)))

    def test_p_family_member(self):
        sig = Signature(0, 0, 3)
        t = sig.one() + sig.generator(1)
        report = member(GroupId("PpmLambda", sig), t)
        self.assertTrue(report.member)
        self.assertEqual(str(report.witness), "e + 2*e1")
        self.assertFalse(member(GroupId("Ppm", sig), t))
        self.assertFalse(member(GroupId("P", sig), t))
        self.assertTrue(member(GroupId("PLambda", sig), t))
        self.assertTrue(member(GroupId("PpmRad", sig), t))

        report = member(GroupId("Ppm", sig), sig.generator(1))
        self.assertFalse(report.member)
        self.assertIsNone(report.witness)

        sig = Signature(1, 0, 0)
        self.assertTrue(member(GroupId("Ppm", sig), sig.generator(1)))
        self.assertTrue(member(GroupId("P", sig), sig.one() * 2 + sig.generator(1)))
        self.assertFalse(member(GroupId("Ppm", sig), sig.one() * 2 + sig.generator(1)))
        self.assertRaises(AlgebraError, lambda: p_family_member(GroupId("Gamma0", sig), sig.one()))
        self.assertRaises(AlgebraError, lambda: member(GroupId("P", sig), Signature(2, 0, 0).one()))

    def test_gamma_member(self):
        sig = Signature(0, 0, 3)
        t = sig.one() + sig.generator(1)
        self.assertTrue(member(GroupId("GammaParity", sig, 0), t))

        report = member(GroupId("GammaParity", sig, 1), t)
        self.assertFalse(report.member)
        self.assertEqual(report.blade, 2)
        self.assertEqual(str(report.witness), "e2 + 2*e12")
        self.assertEqual(report.todict()["blade"], "e2")
        self.assertEqual(report.todict()["group"], "Gamma_(1)")

        self.assertTrue(member(GroupId("GammaCheck0", sig), sig.one() * 5))
        self.assertFalse(member(GroupId("Gamma0", sig), sig.generator(1)))
        self.assertTrue(member(GroupId("FullUnits", sig), t))
        self.assertFalse(member(GroupId("FullUnits", sig), sig.generator(1)))
        self.assertRaises(AlgebraError, lambda: gamma_member(GroupId("P", sig), t))

    def test_counterexample(self):
        report = counterexample_check()
        self.assertTrue(report.reproduced)
        self.assertEqual([x.claim for x in report.facts], ["Gamma^1", "Gamma^2", "Gamma_check^1", "Gamma_check^2"])
        self.assertEqual([x.member for x in report.facts], [False, True, True, False])
        self.assertEqual(report.facts[0].blade, 2)
        self.assertEqual(str(report.facts[0].image), "e2 + 2*e12")
        self.assertEqual(report.facts[3].blade, 6)
        self.assertEqual(str(report.facts[3].image), "e23 - 2*e123")
        self.assertEqual(report.facts[3].todict(3)["blade"], "e23")
        self.assertRaises(AlgebraError, lambda: counterexample_check(Signature(0, 0, 1)))

    def test_characterizations(self):
        for sig in [Signature(0, 0, 3), Signature(1, 0, 1), Signature(1, 1, 1)]:
            for group in p_family(sig):
                report = verify_characterizations(group, 4, numpy.random.default_rng(11), 3)
                self.assertTrue(report.ok, "{0} in {1}: {2}".format(group, sig, report.discrepancies))
        self.assertEqual(len(characterizations(GroupId("P", Signature(1, 0, 1)))), 4)
        self.assertRaises(AlgebraError, lambda: characterizations(GroupId("Gamma0", Signature(1, 0, 1))))

    def test_sampling(self):
        rng = numpy.random.default_rng(5)
        for sig in [Signature(0, 0, 2), Signature(1, 0, 2)]:
            for group in p_family(sig) + [GroupId("FullUnits", sig)]:
                for i in range(4):
                    self.assertTrue(member(group, sample_group_element(group, rng, 3)))
                self.assertEqual(check_group_axioms(group, 3, rng, 3), [])
        self.assertTrue(has_sampler(GroupId("P", sig)))
        self.assertFalse(has_sampler(GroupId("GammaN", sig)))
        self.assertRaises(AlgebraError, lambda: sample_group_element(GroupId("GammaN", sig), rng))

        sig = Signature(0, 0, 3)
        for i in range(5):
            self.assertTrue(sample_group_element(GroupId("Ppm", sig), rng).is_even())

    def test_identities(self):
        sig = Signature(1, 0, 1)
        rng = numpy.random.default_rng(8)
        for group in gamma_family(sig):
            report = verify_group_identity(group, identify(group), 4, rng, 3)
            self.assertTrue(report.ok, "{0}: {1}".format(group, report.discrepancies))
            self.assertGreater(report.checked, 0)
        self.assertTrue(verify_group_inclusion(GroupId("Ppm", sig), GroupId("PpmRad", sig), 4, rng, 3))

        report = verify_group_identity(GroupId("Ppm", sig), GroupId("PpmRad", sig), 10, rng, 3)
        self.assertFalse(report.ok)
        self.assertFalse(verify_group_inclusion(GroupId("PpmRad", sig), GroupId("Ppm", sig), 10, rng, 3))

    def test_coincidences(self):
        for sig in [Signature(0, 0, 1), Signature(0, 0, 2), Signature(0, 0, 3), Signature(2, 0, 0), Signature(2, 1, 0)]:
            classes, inclusions = coincidence_classes(sig, 20, numpy.random.default_rng(2), 5)
            self.assertEqual(classes, expected_classes(sig))

        classes, inclusions = coincidence_classes(Signature(0, 0, 2), 20, numpy.random.default_rng(2), 5)
        self.assertEqual(inclusions, [(0, 1)])
