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

from degenga.algebra import Signature
from degenga.verify import *
from degenga.verify import _dimensions

class TestVerify(unittest.TestCase):
    def runTest(self):
        pass

    def test_signatures(self):
        self.assertEqual(len(all_signatures(2)), 9)
        self.assertEqual(len(all_signatures(4)), 34)
        self.assertEqual(all_signatures(1), [Signature(0, 0, 1), Signature(0, 1, 0), Signature(1, 0, 0)])
        self.assertTrue(all(x.complex for x in all_signatures(2, complex=True)))

    def test_config(self):
        config = VerificationConfig()
        self.assertEqual(config.suites, list(SUITES))
        self.assertEqual(len(config.signatures_for("lemmas")), 34)
        self.assertTrue(config.capped("tangency", Signature(2, 2, 1)))
        self.assertFalse(config.capped("tangency", Signature(2, 1, 1)))
        self.assertFalse(config.capped("Lie algebra dimensions", Signature(2, 2, 2)))
        self.assertFalse(VerificationConfig(max_n=5).capped("tangency", Signature(2, 2, 1)))

        widened = config.widened("subspace dimensions", "lemmas")
        self.assertEqual(len(widened), 130)
        self.assertEqual((widened[0].n, widened[-1].n), (5, 8))
        self.assertEqual(config.widened("tangency", "lie"), [])
        self.assertEqual(VerificationConfig(max_n=3).widened("subspace dimensions", "lemmas"), [])

        config = VerificationConfig(signatures=[Signature(1, 0, 1)], complex=True, suites=["lie", "lemmas"])
        self.assertEqual(config.suites, ["lemmas", "lie"])
        self.assertEqual(config.signatures_for("lie"), [Signature(1, 0, 1, complex=True)])

        a = config.rng("claim", Signature(1, 0, 1)).integers(0, 1000, size=5).tolist()
        b = config.rng("claim", Signature(1, 0, 1)).integers(0, 1000, size=5).tolist()
        c = config.rng("other claim", Signature(1, 0, 1)).integers(0, 1000, size=5).tolist()
        self.assertEqual(a, b)
        self.assertNotEqual(a, c)

    def test_config_errors(self):
        self.assertRaises(ValueError, lambda: VerificationConfig(samples=0))
        self.assertRaises(ValueError, lambda: VerificationConfig(max_n=13))
        self.assertRaises(ValueError, lambda: VerificationConfig(seed=-1))
        self.assertRaises(ValueError, lambda: VerificationConfig(coeff_bound=0))
        self.assertRaises(ValueError, lambda: VerificationConfig(format="xml"))
        self.assertRaises(ValueError, lambda: VerificationConfig(suites="proofs"))
        self.assertRaises(ValueError, lambda: VerificationConfig(tolerance=0))

    def test_record(self):
        record = Record("lemmas", "claim", "G(1,0,0)", True)
        self.assertEqual(record.tohuman(), "PASS  G(1,0,0)   lemmas    claim")
        self.assertEqual(record.todict(), {"suite": "lemmas", "claim": "claim", "signature": "G(1,0,0)", "status": "pass", "witness": None})

        record = Record("theorems", "claim", "G(0,0,3)", False, "e1", {"checked": 3}, 0.5)
        self.assertEqual(record.status, "fail")
        self.assertEqual(record.todict()["details"], {"checked": 3})
        self.assertEqual(record.todict()["seconds"], 0.5)
        self.assertTrue(record.tohuman().startswith("FAIL"))
        self.assertIn("witness: e1", record.tohuman())

    def test_lemmas(self):
        config = VerificationConfig(signatures=[Signature(1, 0, 0), Signature(0, 0, 2), Signature(1, 1, 1)], samples=3, suites="lemmas")
        records = run_suites(config)
        self.assertEqual(len(records), 36)
        self.assertEqual([x.claim for x in records if not x.passed], [])
        self.assertEqual([x.todict() for x in records], [x.todict() for x in run_suites(config)])

        claims = [x.claim for x in records[:12]]
        self.assertIn("generator relations", claims)
        self.assertIn("blade products respect the parity grading", claims)
        self.assertIn("left regular representation is multiplicative", claims)
        self.assertIn("canonical text parses back to the same element", claims)
        self.assertIn("e + xy is invertible for x in G, y in rad", claims)

    def test_wide_dimensions(self):
        passed, bad, found = _dimensions(Signature(2, 2, 4))(None)
        self.assertTrue(passed)
        self.assertEqual(found, {"Center": 8, "Lambda": 16, "Rad": 240, "LambdaEven": 8})
        self.assertTrue(_dimensions(Signature(3, 0, 5))(None)[0])

    def test_theorems(self):
        config = VerificationConfig(signatures=[Signature(0, 0, 3), Signature(1, 0, 1)], samples=3, suites="theorems")
        records = run_suites(config)
        self.assertEqual([(x.signature, x.claim) for x in records if not x.passed], [])
        claims = set(x.claim for x in records)
        self.assertIn("single-grade preservation counterexample for e + e1", claims)
        self.assertIn("Gamma_(0) = P_Lambda", claims)
        self.assertIn("coincidences of the five groups", claims)

    def test_lie(self):
        config = VerificationConfig(signatures=[Signature(0, 0, 2), Signature(1, 0, 2)], samples=2, suites="lie")
        records = run_suites(config)
        self.assertEqual([(x.signature, x.claim) for x in records if not x.passed], [])
        self.assertEqual(records[0].details, {"P_pm": 2, "P": 2, "P_pm_Lambda": 4, "P_Lambda": 4, "P_pm_rad": 4})

    def test_matrix(self):
        records = run_suites(VerificationConfig(signatures=[Signature(1, 0, 1)], samples=2, suites="matrix", timing=True))
        self.assertEqual([x.signature for x in records], ["G(1,0,1)", "g101_in_G210", "lambda1_in_G110", "lambda2_in_G220"])
        self.assertTrue(all(x.passed for x in records))
        self.assertTrue(all(x.seconds is not None for x in records))

        records = run_suites(VerificationConfig(signatures=[Signature(1, 0, 1)], samples=2, suites="matrix", complex=True))
        self.assertEqual(len(records), 1)

    def test_atlas(self):
        row = atlas_row(Signature(0, 0, 2), 10)
        self.assertEqual(row["signature"], "G(0,0,2)")
        self.assertEqual(row["coincidences"], [["P_pm", "P"], ["P_pm_Lambda", "P_Lambda", "P_pm_rad"]])
        self.assertEqual(row["inclusions"], [["P_pm", "P_pm_Lambda"]])
        self.assertEqual(row["lie_dimensions"], {"P_pm": 2, "P": 2, "P_pm_Lambda": 4, "P_Lambda": 4, "P_pm_rad": 4})
        self.assertEqual(row["gamma"]["Gamma_n"], "P_pm_rad")
        self.assertEqual(row["gamma"]["Gamma_check_n"], "G_units")
        self.assertTrue(row["matches_closed_form"])
        self.assertEqual(atlas_row(Signature(0, 0, 2), 10), row)

        self.assertNotIn("matches_closed_form", atlas_row(Signature(1, 0, 1), 5))

    def test_expected_classes(self):
        self.assertEqual(len(expected_classes(Signature(2, 2, 0))), 1)
        self.assertEqual(len(expected_classes(Signature(0, 0, 4))), 2)
        self.assertIsNone(expected_classes(Signature(1, 0, 1)))
