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

import logging
import numbers
import time
import zlib

import numpy

from degenga.algebra import NotInvertible, Signature, grade_of, inverse, left_regular_matrix
from degenga.expr import blade_name, parse, tostring
from degenga.groups import (GroupId, characterizations, check_group_axioms, coincidence_classes, counterexample_check, fixes_all_blades,
                            gamma_family, identify, member, p_family, structured_samples,
                            verify_characterizations, verify_group_identity, verify_group_inclusion)
from degenga.lie import check_tangency, closure_violation, containment_violations, expected_dimension, lie_algebra_of, tangent_algebra
from degenga.matrixrep import EXAMPLES, Embedding, embed, structural_check
from degenga.subspace import SubspaceSpec, centralizer, contains, kernel_spec, odd_product_property_check, random_element, random_invertible

logger = logging.getLogger(__name__)

SUITES = ("lemmas", "theorems", "lie", "matrix")

# signature bounds used when neither --max-n nor --sig is given
DEFAULT_MAX_N = {"lemmas": 4, "theorems": 4, "lie": 6, "matrix": 4}

# per-claim caps that apply only under the default bounds
DEFAULT_CAPS = {"commutator closure": 5, "tangent algebras": 4, "tangency": 4}

# per-claim bounds that reach past the suite default, also only under the default bounds
DEFAULT_WIDENED = {"subspace dimensions": 8}

class VerificationConfig(object):
    """
    Settings of a verification run; identical configurations produce identical reports.

    Keyword Arguments
    -----------------
    signatures : ``None`` or list of :py:class:`Signature <degenga.algebra.Signature>`
        explicit signatures; if ``None``, every signature with ``1 <= n <= max_n``

    max_n : ``None`` or positive int
        dimension bound; if ``None``, each suite uses its own default

    samples : positive int
        sampled elements per check

    seed : int
        seed of the per-check random streams

    coeff_bound : positive int
        sampled coefficients lie in ``[-coeff_bound, coeff_bound]``

    suites : string or list of strings
        ``"lemmas"``, ``"theorems"``, ``"lie"``, ``"matrix"`` or ``"all"``

    format : ``"human"`` or ``"jsonl"``

    complex : bool
        Gaussian rational scalars

    timing : bool
        include wall-clock seconds in the records

    tolerance : positive float
        bound on floating-point deviations in tangency checks
    """

    def __init__(self, signatures=None, max_n=None, samples=200, seed=42, coeff_bound=5, suites="all", format="human", complex=False, timing=False, tolerance=1e-9):
        if max_n is not None and (not isinstance(max_n, numbers.Integral) or not 1 <= max_n <= Signature.MAXDIM):
            raise ValueError("max_n must be between 1 and {0}, not {1}".format(Signature.MAXDIM, repr(max_n)))
        if not isinstance(samples, numbers.Integral) or samples < 1:
            raise ValueError("samples must be a positive integer, not {0}".format(repr(samples)))
        if not isinstance(seed, numbers.Integral) or seed < 0:
            raise ValueError("seed must be a non-negative integer, not {0}".format(repr(seed)))
        if not isinstance(coeff_bound, numbers.Integral) or coeff_bound < 1:
            raise ValueError("coeff_bound must be a positive integer, not {0}".format(repr(coeff_bound)))
        if format not in ("human", "jsonl"):
            raise ValueError("format must be 'human' or 'jsonl', not {0}".format(repr(format)))
        if not tolerance > 0:
            raise ValueError("tolerance must be positive, not {0}".format(repr(tolerance)))

        if isinstance(suites, str):
            suites = [suites]
        if "all" in suites:
            suites = list(SUITES)
        for x in suites:
            if x not in SUITES:
                raise ValueError("unknown suite {0}; expected one of {1} or 'all'".format(repr(x), ", ".join(SUITES)))

        if signatures is not None:
            signatures = [Signature(s.p, s.q, s.r, complex=complex) for s in signatures]

        self.signatures = signatures
        self.max_n = max_n
        self.samples = int(samples)
        self.seed = int(seed)
        self.coeff_bound = int(coeff_bound)
        self.suites = [x for x in SUITES if x in suites]
        self.format = format
        self.complex = bool(complex)
        self.timing = bool(timing)
        self.tolerance = float(tolerance)

    def signatures_for(self, suite):
        if self.signatures is not None:
            return list(self.signatures)
        return all_signatures(DEFAULT_MAX_N[suite] if self.max_n is None else self.max_n, self.complex)

    def capped(self, claim, signature):
        """True if ``claim`` is skipped for ``signature`` under the default bounds."""
        if self.signatures is not None or self.max_n is not None:
            return False
        return claim in DEFAULT_CAPS and signature.n > DEFAULT_CAPS[claim]

    def widened(self, claim, suite):
        """Signatures past the default range of ``suite`` on which ``claim`` also runs."""
        if self.signatures is not None or self.max_n is not None or claim not in DEFAULT_WIDENED:
            return []
        return [s for s in all_signatures(DEFAULT_WIDENED[claim], self.complex) if s.n > DEFAULT_MAX_N[suite]]

    def rng(self, claim, signature):
        """Independent random stream for one (claim, signature) task."""
        return numpy.random.default_rng([self.seed, zlib.crc32(claim.encode("utf-8")), signature.p, signature.q, signature.r])

def all_signatures(max_n, complex=False):
    """Every signature with ``1 <= p + q + r <= max_n``, ordered by n, then p, then q."""
    out = []
    for n in range(1, max_n + 1):
        for p in range(n + 1):
            for q in range(n - p + 1):
                out.append(Signature(p, q, n - p - q, complex=complex))
    return out

class Record(object):
    """Outcome of one claim on one signature."""

    def __init__(self, suite, claim, signature, passed, witness=None, details=None, seconds=None):
        self.suite = suite
        self.claim = claim
        self.signature = signature
        self.passed = passed
        self.witness = witness
        self.details = details
        self.seconds = seconds

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def todict(self):
        out = {"suite": self.suite, "claim": self.claim, "signature": self.signature, "status": self.status, "witness": self.witness}
        if self.details is not None:
            out["details"] = self.details
        if self.seconds is not None:
            out["seconds"] = round(self.seconds, 6)
        return out

    def tohuman(self):
        out = "{0}  {1:<10} {2:<9} {3}".format(self.status.upper(), self.signature, self.suite, self.claim)
        if self.witness is not None:
            out += "  witness: {0}".format(self.witness)
        if self.seconds is not None:
            out += "  ({0:.3f} s)".format(self.seconds)
        return out

    def __repr__(self):
        return "<Record {0} {1} {2}>".format(self.status, self.signature, self.claim)

class _Runner(object):
    def __init__(self, config, suite):
        self.config = config
        self.suite = suite
        self.records = []

    def run(self, claim, signature, check, label=None):
        if self.config.capped(claim, signature):
            return
        rng = self.config.rng(claim, signature)
        start = time.perf_counter()
        passed, witness, details = check(rng)
        seconds = time.perf_counter() - start if self.config.timing else None
        if witness is not None and not isinstance(witness, str):
            witness = str(witness)
        record = Record(self.suite, claim, label or str(signature), bool(passed), witness, details, seconds)
        logger.debug("%s %s %s", record.status, record.signature, claim)
        self.records.append(record)

def _first(pairs):
    for x in pairs:
        return x
    return None

################################################################ lemmas

def _invertible_by_rank(t):
    # decided on the full left-regular matrix, independently of inverse()
    return left_regular_matrix(t).rank() == t.signature.dim

def _dimensions(sig):
    def check(rng):
        n, r, pq = sig.n, sig.r, sig.p + sig.q
        expected = {"Center": (2**(r - 1) if r >= 1 else 1) + (1 if n % 2 == 1 else 0),
                    "Lambda": 2**r,
                    "Rad": 2**n - 2**pq,
                    "LambdaEven": 2**(r - 1) if r >= 1 else 1}
        found = dict((name, SubspaceSpec(sig, name).dimension) for name in expected)
        bad = _first(name for name in sorted(expected) if expected[name] != found[name])
        return bad is None, bad, found
    return check

def lemma_suite(config, runner, sig):
    bound = config.coeff_bound
    samples = config.samples
    full = SubspaceSpec(sig, "Full")
    rad = SubspaceSpec(sig, "Rad")

    def generators(rng):
        for a in range(1, sig.n + 1):
            for b in range(1, sig.n + 1):
                ea, eb = sig.generator(a), sig.generator(b)
                expected = 2 * sig.eta(a) * sig.one() if a == b else sig.zero()
                if ea * eb + eb * ea != expected:
                    return False, "e{0}, e{1}".format(a, b), None
        return True, None, None
    runner.run("generator relations", sig, generators)

    def parity_grading(rng):
        # exhaustive up to n = 6, sampled blade pairs beyond
        if sig.n <= 6:
            pairs = ((a, b) for a in sig.blades() for b in sig.blades())
        else:
            pairs = ((int(a), int(b)) for a, b in rng.integers(0, sig.dim, size=(samples, 2)))
        for a, b in pairs:
            product = sig.blade(a) * sig.blade(b)
            odd = (grade_of(a) + grade_of(b)) % 2 == 1
            if not (product.is_odd() if odd else product.is_even()):
                return False, "{0}, {1}".format(blade_name(a, sig.n), blade_name(b, sig.n)), None
        return True, None, None
    runner.run("blade products respect the parity grading", sig, parity_grading)

    def regular_homomorphism(rng):
        for i in range(samples):
            u, v = random_element(full, rng, bound), random_element(full, rng, bound)
            if (left_regular_matrix(u) * left_regular_matrix(v)).to_list() != left_regular_matrix(u * v).to_list():
                return False, "u = {0}, v = {1}".format(u, v), None
        return True, None, None
    runner.run("left regular representation is multiplicative", sig, regular_homomorphism)

    def round_trip(rng):
        # 1000 elements under the default sample count
        for i in range(5 * samples):
            u = random_element(full, rng, bound)
            if parse(tostring(u), sig) != u:
                return False, u, None
        return True, None, None
    runner.run("canonical text parses back to the same element", sig, round_trip)

    def product_invertible(rng):
        for i in range(samples):
            x, y = random_element(full, rng, bound), random_element(rad, rng, bound)
            t = sig.one() + x * y
            inv = inverse(t)
            if not _invertible_by_rank(t) or inv is NotInvertible or t * inv != sig.one() or inv * t != sig.one():
                return False, "x = {0}, y = {1}".format(x, y), None
        return True, None, None
    runner.run("e + xy is invertible for x in G, y in rad", sig, product_invertible)

    def scalar_plus_radical(rng):
        spec = SubspaceSpec(sig, "G0plusRad")
        for i in range(samples):
            t = random_element(spec, rng, bound)
            if i % 2 == 0:
                t = t - t.scalar_part()
            inv = inverse(t)
            invertible = _invertible_by_rank(t)
            if invertible != bool(t.scalar_part()) or invertible != (inv is not NotInvertible):
                return False, t, None
            if invertible and (t * inv != sig.one() or inv * t != sig.one()):
                return False, t, None
        return True, None, None
    runner.run("T in G0 + rad is invertible iff its scalar part is nonzero", sig, scalar_plus_radical)

    for rep in ("ad", "twisted_ad"):
        def kernel(rng, rep=rep):
            spec = kernel_spec(rep, sig)
            candidates = [random_invertible(full, rng, bound) for i in range(samples)]
            candidates.extend(structured_samples(sig, rng, samples, bound))
            candidates.extend(random_invertible(spec, rng, bound) for i in range(samples))
            for t in candidates:
                if fixes_all_blades(rep, t) != contains(spec, t):
                    return False, t, None
            return True, None, {"kernel": spec.name}
        runner.run("kernel of {0} is the invertible part of its formula".format(rep), sig, kernel)

    def commutants(rng):
        odd = sig.n % 2 == 1
        expected = [("twisted", SubspaceSpec(sig, "Grade", 1), SubspaceSpec(sig, "Lambda")),
                    ("plain", SubspaceSpec(sig, "Grade", 1), SubspaceSpec(sig, "Center")),
                    ("plain", SubspaceSpec(sig, "Parity", 0), SubspaceSpec(sig, "LambdaPlusGn")),
                    ("twisted", SubspaceSpec(sig, "Parity", 0), SubspaceSpec(sig, "LambdaEven" if odd else "LambdaEvenPlusGn"))]
        for constraint, generating, formula in expected:
            if centralizer(constraint, generating) != list(formula.basis):
                return False, "{0} commutant of {1}".format(constraint, generating.name), None
        return True, None, None
    runner.run("commutants of vectors and of even elements", sig, commutants)

    def odd_products(rng):
        lam = SubspaceSpec(sig, "Lambda")
        vectors = SubspaceSpec(sig, "Grade", 1)
        for i in range(samples):
            x = random_element(lam, rng, bound)
            length = 2 * int(rng.integers(0, 3)) + 1
            factors = [random_element(vectors, rng, bound) for j in range(length)]
            if not odd_product_property_check(x, [factors]):
                return False, x, None
        return True, None, None
    runner.run("Grassmann elements twist-commute with odd products", sig, odd_products)

    runner.run("subspace dimensions", sig, _dimensions(sig))

    def invariants(rng):
        for i in range(samples):
            u, v, w = [random_element(full, rng, bound) for j in range(3)]
            if (u * v) * w != u * (v * w):
                return False, "associativity: {0}, {1}, {2}".format(u, v, w), None
            if (u * v).hat() != u.hat() * v.hat() or u.hat().hat() != u:
                return False, "grade involution: {0}, {1}".format(u, v), None
            even, odd = u.even(), u.odd()
            if even + odd != u:
                return False, "parity split: {0}".format(u), None
            inv = inverse(u)
            if inv is not NotInvertible and (u * inv != sig.one() or inv * u != sig.one()):
                return False, "inverse: {0}".format(u), None
        return True, None, None
    runner.run("core algebra invariants", sig, invariants)

################################################################ theorems

def expected_classes(signature):
    """Coincidence classes of the five P-families known in closed form (Grassmann and non-degenerate algebras), or ``None``."""
    n = signature.n
    if signature.p + signature.q == 0:
        if n == 1:
            names = [["Ppm"], ["P", "PpmLambda", "PLambda", "PpmRad"]]
        elif n % 2 == 0:
            names = [["Ppm", "P"], ["PpmLambda", "PLambda", "PpmRad"]]
        else:
            names = [["Ppm"], ["P"], ["PpmLambda", "PLambda", "PpmRad"]]
    elif signature.r == 0:
        if n % 2 == 0:
            names = [list(GroupId.P_FAMILY)]
        else:
            names = [["Ppm", "PpmLambda", "PpmRad"], ["P", "PLambda"]]
    else:
        return None
    return [[GroupId(x, signature) for x in cls] for cls in names]

INCLUSIONS = [("Ppm", "P"), ("Ppm", "PpmLambda"), ("Ppm", "PpmRad"), ("P", "PLambda"), ("PpmLambda", "PLambda"), ("PpmLambda", "PpmRad")]

def _identity_check(lhs, rhs, config):
    def check(rng):
        report = verify_group_identity(lhs, rhs, config.samples, rng, config.coeff_bound)
        bad = _first(report.discrepancies)
        return report.ok, None if bad is None else bad.element, {"checked": report.checked, "discrepancies": len(report.discrepancies)}
    return check

def theorem_suite(config, runner, sig):
    bound = config.coeff_bound
    samples = config.samples

    for group in p_family(sig):
        def check(rng, group=group):
            report = verify_characterizations(group, samples, rng, bound)
            bad = _first(report.discrepancies)
            return report.ok, None if bad is None else "{0}: {1}".format(bad.phase, bad.element), {"characterizations": len(characterizations(group))}
        runner.run("equivalent definitions of {0}".format(group), sig, check)

    for group in gamma_family(sig):
        target = identify(group)
        runner.run("{0} = {1}".format(group, target), sig, _identity_check(group, target, config))

    runner.run("Gamma_0n = Gamma_n", sig, _identity_check(GroupId("Gamma0n", sig), GroupId("GammaN", sig), config))

    for sub, sup in INCLUSIONS:
        sub, sup = GroupId(sub, sig), GroupId(sup, sig)
        def check(rng, sub=sub, sup=sup):
            report = verify_group_inclusion(sub, sup, samples, rng, bound)
            bad = _first(report.discrepancies)
            return report.ok, None if bad is None else bad.element, {"checked": report.checked}
        runner.run("{0} is a subgroup of {1}".format(sub, sup), sig, check)

    for group in p_family(sig) + [GroupId("FullUnits", sig)]:
        def check(rng, group=group):
            failures = check_group_axioms(group, samples, rng, bound)
            return len(failures) == 0, _first(failures), None
        runner.run("group axioms of {0}".format(group), sig, check)

    if sig.p + sig.q == 0:
        def grassmann_kernel(rng):
            full = SubspaceSpec(sig, "Full")
            group = GroupId("P", sig)
            candidates = [random_invertible(full, rng, bound) for i in range(samples)]
            candidates.extend(structured_samples(sig, rng, samples, bound))
            for t in candidates:
                if member(group, t).member != fixes_all_blades("ad", t):
                    return False, t, None
            return True, None, None
        runner.run("P is the kernel of ad in a Grassmann algebra", sig, grassmann_kernel)

    expected = expected_classes(sig)
    if expected is not None:
        def collapse(rng):
            classes, inclusions = coincidence_classes(sig, samples, rng, bound)
            found = [[str(g) for g in cls] for cls in classes]
            return classes == expected, None if classes == expected else str(found), {"classes": found}
        runner.run("coincidences of the five groups", sig, collapse)

    if (sig.p, sig.q, sig.r) == (0, 0, 3) and not sig.complex:
        def counterexample(rng):
            report = counterexample_check(sig)
            bad = _first(x for x in report.facts if not x.reproduced)
            return report.reproduced, None if bad is None else bad.claim, {"facts": [x.todict(sig.n) for x in report.facts]}
        runner.run("single-grade preservation counterexample for e + e1", sig, counterexample)

################################################################ Lie algebras

def lie_suite(config, runner, sig):
    def dimensions(rng):
        found = {}
        for group in p_family(sig):
            found[str(group)] = lie_algebra_of(group).dimension
            if found[str(group)] != expected_dimension(group):
                return False, str(group), found
        return True, None, found
    runner.run("Lie algebra dimensions", sig, dimensions)

    def closure(rng):
        for group in p_family(sig):
            bad = closure_violation(lie_algebra_of(group))
            if bad is not None:
                return False, "{0}: [{1}, {2}] = {3}".format(group, sig.blade(bad[0]), sig.blade(bad[1]), bad[2]), None
        return True, None, None
    runner.run("commutator closure", sig, closure)

    def containment(rng):
        bad = containment_violations(sig)
        return len(bad) == 0, None if len(bad) == 0 else "{0} not in {1}".format(*bad[0]), None
    runner.run("Lie algebra containment chain", sig, containment)

    def tangents(rng):
        for group in p_family(sig) + gamma_family(sig):
            if tangent_algebra(group) != list(lie_algebra_of(identify(group)).basis):
                return False, str(group), None
        return True, None, None
    runner.run("tangent algebras", sig, tangents)

    def tangency(rng):
        for group in p_family(sig):
            report = check_tangency(lie_algebra_of(group), config.samples, config.tolerance, rng, config.coeff_bound)
            if not report.ok:
                stage, x = report.failures[0]
                return False, "{0}, {1}: {2}".format(group, stage, x), None
        return True, None, None
    runner.run("tangency", sig, tangency)

    if sig.r == 0 or sig.p + sig.q == 0:
        def collapse(rng):
            basis = dict((g.name, lie_algebra_of(g).basis) for g in p_family(sig))
            if sig.r == 0:
                ok = basis["Ppm"] == basis["PpmLambda"] == basis["PpmRad"] and basis["P"] == basis["PLambda"]
                if sig.n % 2 == 0:
                    ok = ok and basis["Ppm"] == basis["P"]
            else:
                everything = tuple(sig.blades())
                top = (sig.pseudoscalar,) if sig.n % 2 == 1 else ()
                ok = basis["PpmLambda"] == basis["PpmRad"] == basis["PLambda"] == everything
                ok = ok and basis["Ppm"] == SubspaceSpec(sig, "LambdaEven").basis
                ok = ok and basis["P"] == tuple(sorted(SubspaceSpec(sig, "LambdaEven").basis + top))
            return ok, None, None
        runner.run("Lie algebra coincidences", sig, collapse)

################################################################ matrix representations

def matrix_suite(config, runner, sig):
    def embedding(rng):
        emb = Embedding(sig)
        bad = emb.relation_failures()
        if len(bad) > 0:
            return False, "generators {0}".format(bad[0]), None
        if emb.rank() != sig.dim:
            return False, "rank {0}".format(emb.rank()), None
        full = SubspaceSpec(sig, "Full")
        for i in range(config.samples):
            u, v = random_element(full, rng, config.coeff_bound), random_element(full, rng, config.coeff_bound)
            if embed(emb, u * v) != embed(emb, u) * embed(emb, v):
                return False, "{0}, {1}".format(u, v), None
        return True, None, {"target": str(emb.target)}
    runner.run("embedding is an injective homomorphism", sig, embedding)

def matrix_examples(config, runner):
    if config.complex:
        return
    for example_id in sorted(EXAMPLES):
        def check(rng, example_id=example_id):
            report = structural_check(example_id, config.samples, rng, config.coeff_bound)
            bad = _first(name for name, passed, witness in report.checks if not passed)
            return report.ok, bad, {"checks": [name for name, passed, witness in report.checks], "records": report.records}
        runner.run("structure of " + example_id, EXAMPLES[example_id], check, label=example_id)

################################################################ running

def run_suites(config):
    """Runs the selected suites and returns their :py:class:`Record` list in deterministic order."""
    suites = {"lemmas": lemma_suite, "theorems": theorem_suite, "lie": lie_suite, "matrix": matrix_suite}
    out = []
    for suite in config.suites:
        runner = _Runner(config, suite)
        signatures = config.signatures_for(suite)
        for sig in signatures:
            suites[suite](config, runner, sig)
        if suite == "lemmas":
            for sig in config.widened("subspace dimensions", suite):
                runner.run("subspace dimensions", sig, _dimensions(sig))
        if suite == "matrix":
            matrix_examples(config, runner)
        failed = sum(1 for x in runner.records if not x.passed)
        logger.info("suite %s: %d signatures, %d records, %d failed", suite, len(signatures), len(runner.records), failed)
        out.extend(runner.records)
    return out

def atlas_row(signature, samples=200, seed=42, bound=5):
    """
    One atlas record: which of the five P-family groups coincide (by sampled bidirectional membership), the strict inclusions between the classes, the Lie algebra dimensions and the group each Gamma-family group equals.
    """
    rng = numpy.random.default_rng([seed, zlib.crc32(b"atlas"), signature.p, signature.q, signature.r])
    classes, inclusions = coincidence_classes(signature, samples, rng, bound)
    out = {"signature": str(signature),
           "coincidences": [[str(g) for g in cls] for cls in classes],
           "inclusions": [[str(classes[i][0]), str(classes[j][0])] for i, j in inclusions],
           "lie_dimensions": dict((str(g), lie_algebra_of(g).dimension) for g in p_family(signature)),
           "gamma": dict((str(g), str(identify(g))) for g in gamma_family(signature))}
    expected = expected_classes(signature)
    if expected is not None:
        out["matches_closed_form"] = classes == expected
    return out
