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
import math
import pkgutil

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from degenga.algebra import AlgebraError, NotInvertible, Signature, blade_indices, inverse
from degenga.groups import GroupId, sample_group_element
from degenga.subspace import SubspaceSpec, random_element, random_invertible

logger = logging.getLogger(__name__)

class Embedding(object):
    u"""
    Injective homomorphism of G(p,q,r) into the non-degenerate algebra G(p+r, q+r, 0).

    Positive generators keep their index, negative generators move up by ``r``, and the degenerate generator e_{p+q+c} goes to f + g where f = e_{p+c} squares to +1 and g = e_{p+r+q+c} squares to -1 (it is i times a +1 generator in complex mode). Distinct generators anticommute, so every degenerate image squares to zero.

    Parameters
    ----------
    source : :py:class:`Signature <degenga.algebra.Signature>`
        algebra to embed
    """

    def __init__(self, source):
        self.source = source
        self.target = Signature(source.p + source.r, source.q + source.r, 0, complex=source.complex)
        p, q, r = source.p, source.q, source.r
        target = self.target

        images = []
        for a in range(1, p + 1):
            images.append(target.generator(a))
        for a in range(p + 1, p + q + 1):
            images.append(target.generator(a + r))
        for c in range(1, r + 1):
            g = target.generator(p + r + q + c)
            if source.complex:
                g = g * target.scalar(0, 1)
            images.append(target.generator(p + c) + g)
        self.generator_images = images

    @functools.lru_cache(maxsize=None)
    def blade_image(self, mask):
        out = self.target.one()
        for a in blade_indices(mask):
            out = out * self.generator_images[a - 1]
        return out

    def relation_failures(self):
        """Pairs ``(a, b)`` of source generators whose images break u_a u_b + u_b u_a = 2 eta(a) delta_ab e."""
        out = []
        n = self.source.n
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                x, y = self.generator_images[a - 1], self.generator_images[b - 1]
                expected = 2 * self.source.eta(a) if a == b else 0
                if x * y + y * x != self.target.one() * expected:
                    out.append((a, b))
        return out

    def rank(self):
        """Rank of the coordinate matrix of all blade images; the embedding is injective iff it equals ``source.dim``."""
        rows = [self.blade_image(m).vector() for m in self.source.blades()]
        return DomainMatrix(rows, (self.source.dim, self.target.dim), self.target.field).rank()

    def __repr__(self):
        return "<Embedding {0} -> {1}>".format(self.source, self.target)

def embed(emb, u):
    """Image of ``u`` under ``emb``, extended multiplicatively over blades and linearly over terms."""
    if u.signature != emb.source:
        raise AlgebraError("signature mismatch: {0} and {1}".format(repr(u.signature), repr(emb.source)))
    out = emb.target.zero()
    for m, c in u.items():
        out = out + emb.blade_image(m) * c
    return out

################################################################ fixed matrix representations

EXAMPLES = {"lambda1_in_G110": Signature(0, 0, 1),
            "lambda2_in_G220": Signature(0, 0, 2),
            "g101_in_G210":    Signature(1, 0, 1)}

@functools.lru_cache(maxsize=None)
def _load_generator_matrices():
    text = pkgutil.get_data("degenga", "data/matrices.txt").decode("utf-8")
    out = {}
    for number, line in enumerate(text.split("\n")):
        line = line.split("#")[0].strip()
        if line == "":
            continue
        words = line.split()
        example, index = words[0], int(words[1])
        entries = [fractions.Fraction(x) for x in words[2:]]
        size = math.isqrt(len(entries))
        if size * size != len(entries):
            raise AlgebraError("matrices.txt line {0}: {1} entries do not form a square matrix".format(number + 1, len(entries)))
        rows = [[QQ(x.numerator, x.denominator) for x in entries[i*size : (i + 1)*size]] for i in range(size)]
        out.setdefault(example, {})[index] = DomainMatrix(rows, (size, size), QQ)
    return out

class MatrixRep(object):
    """
    Exact matrix representation of one of the worked examples: the embedding of its source algebra followed by fixed generator matrices of the target algebra.

    Parameters
    ----------
    example_id : string
        ``lambda1_in_G110``, ``lambda2_in_G220`` or ``g101_in_G210``
    """

    def __init__(self, example_id):
        if example_id not in EXAMPLES:
            raise AlgebraError("unknown matrix example {0}; expected one of {1}".format(repr(example_id), ", ".join(sorted(EXAMPLES))))
        self.example_id = example_id
        self.embedding = Embedding(EXAMPLES[example_id])
        matrices = _load_generator_matrices().get(example_id, {})
        n = self.embedding.target.n
        if sorted(matrices) != list(range(1, n + 1)):
            raise AlgebraError("matrices.txt must give generators 1 to {0} for {1}".format(n, example_id))
        self.generator_matrices = [matrices[a] for a in range(1, n + 1)]
        self.size = self.generator_matrices[0].shape[0]

    @property
    def source(self):
        return self.embedding.source

    @property
    def target(self):
        return self.embedding.target

    def identity(self):
        return DomainMatrix.eye(self.size, QQ)

    @functools.lru_cache(maxsize=None)
    def blade_matrix(self, mask):
        """Matrix of a target blade: the ordered product of its generator matrices."""
        out = self.identity()
        for a in blade_indices(mask):
            out = out * self.generator_matrices[a - 1]
        return out

    def relation_failures(self):
        """Pairs of target generators whose matrices break M_a M_b + M_b M_a = 2 eta(a) delta_ab I."""
        out = []
        n = self.target.n
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                x, y = self.generator_matrices[a - 1], self.generator_matrices[b - 1]
                expected = self.identity().scalarmul(QQ(2 * self.target.eta(a))) if a == b else DomainMatrix.zeros((self.size, self.size), QQ)
                if (x * y + y * x).to_list() != expected.to_list():
                    out.append((a, b))
        return out

    def __repr__(self):
        return "<MatrixRep {0}: {1} -> {2}x{2} matrices>".format(self.example_id, self.source, self.size)

def represent(rep, u):
    """Exact matrix image of ``u`` (an element of the example's source algebra)."""
    if not isinstance(rep, MatrixRep):
        rep = MatrixRep(rep)
    v = embed(rep.embedding, u)
    out = DomainMatrix.zeros((rep.size, rep.size), QQ)
    for m, c in v.items():
        out = out + rep.blade_matrix(m).scalarmul(c)
    return out

################################################################ structural checks

def _pattern(rows):
    return [[QQ(0) if x is None else x for x in row] for row in rows]

def _upper_triangular(matrix):
    return all(not x for i, row in enumerate(matrix.to_list()) for j, x in enumerate(row) if i > j)

def heisenberg_shape(matrix):
    """True if ``matrix`` is 4x4 unipotent with nonzero entries only in the first row and last column."""
    rows = matrix.to_list()
    if len(rows) != 4:
        return False
    for i in range(4):
        for j in range(4):
            x = rows[i][j]
            if i == j:
                if x != QQ(1):
                    return False
            elif x and not (i == 0 and j > 0 or j == 3 and i < 3):
                return False
    return True

class StructuralReport(object):
    def __init__(self, example_id):
        self.example_id = example_id
        self.checks = []
        self.records = {}

    def check(self, name, passed, witness=None):
        self.checks.append((name, bool(passed), witness))

    @property
    def ok(self):
        return all(passed for name, passed, witness in self.checks)

    def __bool__(self):
        return self.ok

def _pattern_check(report, name, rep, elements, expected):
    bad = None
    for u in elements:
        if represent(rep, u).to_list() != _pattern(expected(u)):
            bad = u
            break
    report.check(name, bad is None, bad)

def structural_check(example_id, samples, rng, bound=5):
    """
    Checks one worked example against the displayed matrix groups.

    Common checks: the Clifford relations of the generator matrices, the embedding relations and rank, the homomorphism property on sampled pairs, upper triangularity of sampled unit images, and invertibility transport (u invertible iff its matrix is nonsingular). Then the example's displayed patterns on sampled units.

    Returns a :py:class:`StructuralReport` with named checks and informational ``records`` (Heisenberg-shape containment is recorded, not asserted).
    """
    rep = MatrixRep(example_id)
    sig = rep.source
    full = SubspaceSpec(sig, "Full")
    report = StructuralReport(example_id)

    report.check("generator matrices satisfy the Clifford relations", len(rep.relation_failures()) == 0, rep.relation_failures() or None)
    report.check("embedded generators satisfy the source relations", len(rep.embedding.relation_failures()) == 0, rep.embedding.relation_failures() or None)
    report.check("embedding is injective", rep.embedding.rank() == sig.dim, rep.embedding.rank())

    bad = None
    for i in range(samples):
        u, v = random_element(full, rng, bound), random_element(full, rng, bound)
        if embed(rep.embedding, u * v) != embed(rep.embedding, u) * embed(rep.embedding, v) or represent(rep, u * v).to_list() != (represent(rep, u) * represent(rep, v)).to_list():
            bad = (u, v)
            break
    report.check("embedding and representation are multiplicative", bad is None, bad)

    bad = None
    for i in range(samples):
        u = random_element(full, rng, bound)
        if (inverse(u) is not NotInvertible) != bool(represent(rep, u).det()):
            bad = u
            break
    report.check("u is invertible iff its matrix is nonsingular", bad is None, bad)

    units = [random_invertible(full, rng, bound) for i in range(samples)]
    report.check("unit images are upper triangular", all(_upper_triangular(represent(rep, u)) for u in units))

    c = lambda u, *indices: u.coefficient(sum(1 << (a - 1) for a in indices))

    if example_id == "lambda1_in_G110":
        _pattern_check(report, "units map to [[x0, x1], [0, x0]]", rep, units,
                       lambda u: [[c(u), c(u, 1)], [None, c(u)]])
        unipotent = [sig.one() + sig.generator(1) * int(x) for x in rng.integers(-bound, bound + 1, size=samples)]
        _pattern_check(report, "e + x e1 maps to SUT(2)", rep, unipotent,
                       lambda u: [[QQ(1), c(u, 1)], [None, QQ(1)]])

    elif example_id == "lambda2_in_G220":
        _pattern_check(report, "units map to [[x0, x1, x2, x3], [0, x0, 0, -x2], [0, 0, x0, x1], [0, 0, 0, x0]]", rep, units,
                       lambda u: [[c(u), c(u, 2), c(u, 1), c(u, 1, 2)],
                                  [None, c(u), None, -c(u, 1)],
                                  [None, None, c(u), c(u, 2)],
                                  [None, None, None, c(u)]])
        even = [random_invertible(SubspaceSpec(sig, "Parity", 0), rng, bound) for i in range(samples)]
        _pattern_check(report, "even units map to x0 I + x3 E14", rep, even,
                       lambda u: [[c(u), None, None, c(u, 1, 2)],
                                  [None, c(u), None, None],
                                  [None, None, c(u), None],
                                  [None, None, None, c(u)]])
        unipotent = [sig.one() + random_element(SubspaceSpec(sig, "Rad"), rng, bound) for i in range(samples)]
        report.records["unipotent images have the Heis4 shape"] = all(heisenberg_shape(represent(rep, u)) for u in unipotent)
        report.records["unipotent parameters"] = 3
        report.records["Heis4 parameters"] = 5

    elif example_id == "g101_in_G210":
        group = GroupId("Ppm", sig)
        members = [sample_group_element(group, rng, bound) for i in range(samples)]
        even = [u for u in members if u.is_even()]
        odd = [u for u in members if not u.is_even()]
        _pattern_check(report, "even branch of P_pm maps to x0 I + x3 (E12 + E34)", rep, even,
                       lambda u: [[c(u), c(u, 1, 2), None, None],
                                  [None, c(u), None, None],
                                  [None, None, c(u), c(u, 1, 2)],
                                  [None, None, None, c(u)]])
        _pattern_check(report, "odd branch of P_pm maps to the -x1 block pattern", rep, odd,
                       lambda u: [[c(u, 1), c(u, 2), None, None],
                                  [None, -c(u, 1), None, None],
                                  [None, None, -c(u, 1), -c(u, 2)],
                                  [None, None, None, c(u, 1)]])
        report.records["even branch sampled"] = len(even)
        report.records["odd branch sampled"] = len(odd)
        unipotent = [sig.one() + sig.blade(3, int(x)) for x in rng.integers(-bound, bound + 1, size=samples)]
        report.records["unipotent images have the Heis4 shape"] = all(heisenberg_shape(represent(rep, u)) for u in unipotent)

    logger.debug("structural check %s: %d checks, ok = %s", example_id, len(report.checks), report.ok)
    return report
