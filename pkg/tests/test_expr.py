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

from degenga.algebra import Multivector, Signature, blade_mask, grade_of
from degenga.subspace import SubspaceSpec, random_element
from degenga.verify import all_signatures
from degenga.expr import *

class TestExpr(unittest.TestCase):
    def runTest(self):
        pass

    def test_tostring(self):
        sig = Signature(0, 0, 3)
        self.assertEqual(str(sig.zero()), "0")
        self.assertEqual(str(sig.one()), "e")
        self.assertEqual(str(-sig.generator(2)), "-e2")
        self.assertEqual(tostring(sig.blade(1, 3) - sig.blade(6)), "3*e1 - e23")
        self.assertEqual(tostring(sig.blade(0, 1) / 2 + sig.blade(7, -5)), "1/2*e - 5*e123")

    def test_blade_name(self):
        self.assertEqual(blade_name(0, 3), "e")
        self.assertEqual(blade_name(5, 3), "e13")
        self.assertEqual(blade_name(1, 10), "e1")
        self.assertEqual(blade_name(blade_mask([1, 10]), 10), "e[1,10]")

    def test_parse(self):
        sig = Signature(0, 0, 3)
        self.assertEqual(str(parse("(e + e1)*e2*(e - e1)", sig)), "e2 + 2*e12")
        self.assertEqual(str(parse("e1 - e1", sig)), "0")
        self.assertEqual(str(parse("1/2*e1 - 3*e23", sig)), "1/2*e1 - 3*e23")
        self.assertEqual(str(parse("0.5*e1", sig)), "1/2*e1")
        self.assertEqual(str(parse("-(e1 + 2)", sig)), "-2*e - e1")
        self.assertEqual(str(parse("(e + e12)**3", sig)), "e + 3*e12")
        self.assertEqual(parse("e[1,2]", sig), parse("e12", sig))
        self.assertEqual(parse("  e3", sig), sig.generator(3))

        big = Signature(10, 0, 0)
        self.assertEqual(parse("e[1,10]", big), big.blade(blade_mask([1, 10])))
        self.assertEqual(str(parse("e[2,10] + e3", big)), "e3 + e[2,10]")

    def test_parse_complex(self):
        sig = Signature(1, 0, 0, complex=True)
        self.assertEqual(str(parse("(1 + 2*i)*e1", sig)), "(1 + 2*i)*e1")
        self.assertEqual(str(parse("-i*e1", sig)), "-i*e1")
        self.assertEqual(str(parse("2j*e1", sig)), "2*i*e1")
        self.assertEqual(parse("i*i", sig), -1)

    def test_canonical_text(self):
        sig = Signature(1, 1, 1)
        for text in ["e - 2/3*e1 + e12 - 7*e123", "-e[1,3] + 4*e2", "0"]:
            u = parse(text, sig)
            self.assertEqual(parse(str(u), sig), u)

    def test_errors(self):
        sig = Signature(0, 0, 3)
        self.assertRaises(ParseError, lambda: parse("e4", sig))
        self.assertRaises(ParseError, lambda: parse("e21", sig))
        self.assertRaises(ParseError, lambda: parse("e1 +", sig))
        self.assertRaises(ParseError, lambda: parse("e1 e2", sig))
        self.assertRaises(ParseError, lambda: parse("x", sig))
        self.assertRaises(ParseError, lambda: parse("e1/e2", sig))
        self.assertRaises(ParseError, lambda: parse("e1/0", sig))
        self.assertRaises(ParseError, lambda: parse("i*e1", sig))
        self.assertRaises(ParseError, lambda: parse("e1**-1", sig))
        self.assertRaises(ParseError, lambda: parse("e1 % 2", sig))
        self.assertRaises(ParseError, lambda: parse("'e1'", sig))
        self.assertRaises(ParseError, lambda: parse("e12", Signature(10, 0, 0)))

    def test_error_position(self):
        sig = Signature(0, 0, 3)
        try:
            parse("e1 + e4", sig)
        except ParseError as err:
            self.assertEqual(err.position, 6)
            self.assertEqual(str(err), "position 6: blade index 4 is out of range 1..3")
        else:
            self.fail("no ParseError")

        try:
            parse("  e4", sig)
        except ParseError as err:
            self.assertEqual(err.position, 3)
        else:
            self.fail("no ParseError")

    def test_dense_round_trip(self):
        sig = Signature(10, 0, 0)
        dense = Multivector(sig, dict((m, 1) for m in range(sig.dim)))
        self.assertEqual(parse(tostring(dense), sig), dense)

        alternating = Multivector(sig, dict((m, (-1)**grade_of(m) * (m % 7 + 1)) for m in range(sig.dim)))
        self.assertEqual(parse(tostring(alternating), sig), alternating)

        nilpotent = Signature(0, 0, 3)
        product = " * ".join(["(e + e1)"] * 500)
        self.assertEqual(parse(product, nilpotent), nilpotent.one() + 500 * nilpotent.generator(1))

    def test_nesting_limit(self):
        sig = Signature(0, 0, 3)
        self.assertRaises(ParseError, lambda: parse("(" * 5000 + "e1" + ")" * 5000, sig))
        self.assertRaises(ParseError, lambda: parse("-" * 100000 + "e1", sig))

    def test_sampled_round_trip(self):
        for sig in all_signatures(3) + all_signatures(2, complex=True):
            rng = numpy.random.default_rng([7, sig.p, sig.q, sig.r])
            for i in range(20):
                u = random_element(SubspaceSpec(sig, "Full"), rng)
                self.assertEqual(parse(tostring(u), sig), u)
