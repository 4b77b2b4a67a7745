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
import re

from degenga.algebra import AlgebraError, NotInvertible, Signature, inverse
from degenga.expr import blade_name
from degenga.subspace import SubspaceSpec, contains, kernel_spec, random_invertible

logger = logging.getLogger(__name__)

class GroupId(object):
    u"""
    One of the supported Lie groups of G(p,q,r).

    Parameters
    ----------
    name : string
        ``Ppm``, ``P``, ``PpmLambda``, ``PLambda``, ``PpmRad`` (the P-families, defined through ĥ(T⁻¹)T), ``GammaParity``, ``GammaCheckParity`` (both need ``k`` = 0 or 1), ``Gamma0``, ``GammaN``, ``Gamma0n``, ``GammaCheck0``, ``GammaCheckN``, ``GammaCheck0n`` (groups preserving a subspace under ad or twisted ad), or ``FullUnits`` (all invertible elements)

    signature : :py:class:`Signature <degenga.algebra.Signature>`
        ambient algebra

    k : ``None`` or int
        parity for ``GammaParity`` and ``GammaCheckParity``
    """

    P_FAMILY = ("Ppm", "P", "PpmLambda", "PLambda", "PpmRad")
    GAMMA_FAMILY = ("GammaParity", "GammaCheckParity", "Gamma0", "GammaN", "Gamma0n", "GammaCheck0", "GammaCheckN", "GammaCheck0n")
    NAMES = P_FAMILY + GAMMA_FAMILY + ("FullUnits",)

    CLI_NAMES = {"P_pm":            ("Ppm", None),
                 "P":               ("P", None),
                 "P_pm_Lambda":     ("PpmLambda", None),
                 "P_Lambda":        ("PLambda", None),
                 "P_pm_rad":        ("PpmRad", None),
                 "Gamma_(0)":       ("GammaParity", 0),
                 "Gamma_(1)":       ("GammaParity", 1),
                 "Gamma_check_(0)": ("GammaCheckParity", 0),
                 "Gamma_check_(1)": ("GammaCheckParity", 1),
                 "Gamma_0":         ("Gamma0", None),
                 "Gamma_n":         ("GammaN", None),
                 "Gamma_0n":        ("Gamma0n", None),
                 "Gamma_check_0":   ("GammaCheck0", None),
                 "Gamma_check_n":   ("GammaCheckN", None),
                 "Gamma_check_0n":  ("GammaCheck0n", None),
                 "G_units":         ("FullUnits", None)}

    ALIASES = {"Gamma_even": "Gamma_(0)", "Gamma_odd": "Gamma_(1)", "Gamma_check_even": "Gamma_check_(0)", "Gamma_check_odd": "Gamma_check_(1)"}

    def __init__(self, name, signature, k=None):
        if name not in self.NAMES:
            raise AlgebraError("unknown group {0}; expected one of {1}".format(repr(name), ", ".join(self.NAMES)))
        if name in ("GammaParity", "GammaCheckParity"):
            if k not in (0, 1):
                raise AlgebraError("{0} needs k = 0 or 1, not {1}".format(name, repr(k)))
        elif k is not None:
            raise AlgebraError("group {0} takes no k".format(name))
        self.name = name
        self.signature = signature
        self.k = k

    @staticmethod
    def parse(text, signature):
        """Read a group name as used on the command line (``P_pm_Lambda``, ``Gamma_check_0n``, ...) or as a Python name (``PpmLambda``, ``GammaParity(1)``)."""
        text = GroupId.ALIASES.get(text, text)
        if text in GroupId.CLI_NAMES:
            name, k = GroupId.CLI_NAMES[text]
            return GroupId(name, signature, k)

        m = re.match(r"^(\w+)\((\d)\)$", text)
        if m is not None and m.group(1) in ("GammaParity", "GammaCheckParity"):
            return GroupId(m.group(1), signature, int(m.group(2)))
        if text in GroupId.NAMES:
            return GroupId(text, signature)

        m = re.match(r"^Gamma_(check_)?([0-9]+)$", text)
        if m is not None:
            raise AlgebraError("unsupported group {0}: groups preserving a single grade 1 <= k <= n-1 are only examined by the 'counterexample' command".format(text))
        raise AlgebraError("unknown group {0}; expected one of {1}".format(repr(text), ", ".join(sorted(GroupId.CLI_NAMES))))

    @property
    def family(self):
        if self.name in self.P_FAMILY:
            return "P"
        elif self.name in self.GAMMA_FAMILY:
            return "Gamma"
        else:
            return "units"

    @property
    def rep(self):
        """``"twisted_ad"`` for the checked Gamma groups, ``"ad"`` otherwise."""
        return "twisted_ad" if self.name.startswith("GammaCheck") else "ad"

    def target(self):
        u"""Subspace that ĥ(T⁻¹)T must land in (P-families) or ``Full`` (all units)."""
        sig = self.signature
        if self.name == "Ppm":
            return SubspaceSpec(sig, "Grade", 0)
        elif self.name == "P":
            return SubspaceSpec(sig, "S")
        elif self.name == "PpmLambda":
            return SubspaceSpec(sig, "Lambda")
        elif self.name == "PLambda":
            return SubspaceSpec(sig, "LambdaPlusGn")
        elif self.name == "PpmRad":
            return SubspaceSpec(sig, "G0plusRad")
        elif self.name == "FullUnits":
            return SubspaceSpec(sig, "Full")
        raise AlgebraError("{0} is not defined by a target subspace".format(self))

    def preserved(self):
        """Subspace preserved under conjugation (Gamma-families)."""
        sig = self.signature
        if self.name in ("GammaParity", "GammaCheckParity"):
            return SubspaceSpec(sig, "Parity", self.k)
        elif self.name in ("Gamma0", "GammaCheck0"):
            return SubspaceSpec(sig, "Grade", 0)
        elif self.name in ("GammaN", "GammaCheckN"):
            return SubspaceSpec(sig, "Grade", sig.n)
        elif self.name in ("Gamma0n", "GammaCheck0n"):
            return SubspaceSpec(sig, "Grade0n")
        raise AlgebraError("{0} is not defined by a preserved subspace".format(self))

    def __eq__(self, other):
        return isinstance(other, GroupId) and (self.name, self.signature, self.k) == (other.name, other.signature, other.k)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((GroupId, self.name, self.signature, self.k))

    def __str__(self):
        for cli, (name, k) in self.CLI_NAMES.items():
            if (name, k) == (self.name, self.k):
                return cli

    def __repr__(self):
        if self.k is None:
            return "GroupId({0}, {1})".format(repr(self.name), self.signature)
        return "GroupId({0}, {1}, k={2})".format(repr(self.name), self.signature, self.k)

def p_family(signature):
    return [GroupId(name, signature) for name in GroupId.P_FAMILY]

def gamma_family(signature):
    out = []
    for name in GroupId.GAMMA_FAMILY:
        if name in ("GammaParity", "GammaCheckParity"):
            out.extend([GroupId(name, signature, 0), GroupId(name, signature, 1)])
        else:
            out.append(GroupId(name, signature))
    return out

def identify(group):
    """The P-family group (or ``FullUnits``) equal to ``group``; P-families and ``FullUnits`` map to themselves."""
    sig = group.signature
    odd = sig.n % 2 == 1
    name = group.name
    if name in ("GammaParity", "GammaCheckParity"):
        name = {("GammaParity", 0): "PLambda",
                ("GammaParity", 1): "P",
                ("GammaCheckParity", 0): "Ppm",
                ("GammaCheckParity", 1): "PpmLambda"}[name, group.k]
    elif name == "Gamma0":
        name = "FullUnits"
    elif name in ("GammaN", "Gamma0n"):
        name = "FullUnits" if odd else "PpmRad"
    elif name == "GammaCheck0":
        name = "Ppm"
    elif name == "GammaCheckN":
        name = "PpmRad" if odd else "FullUnits"
    elif name == "GammaCheck0n":
        name = "P"
    return GroupId(name, sig)

################################################################ membership

class MembershipReport(object):
    u"""
    Outcome of a membership query.

    ``witness`` is ĥ(T⁻¹)T for the P-families and, for a Gamma-family non-member, the image of the first basis blade (``blade``) that left the preserved subspace.
    """

    def __init__(self, group, element, member, witness=None, blade=None):
        self.group = group
        self.element = element
        self.member = member
        self.witness = witness
        self.blade = blade

    def __bool__(self):
        return self.member

    def todict(self):
        out = {"group": str(self.group),
               "signature": str(self.group.signature),
               "element": str(self.element),
               "member": self.member,
               "witness": None if self.witness is None else str(self.witness),
               "blade": None if self.blade is None else blade_name(self.blade, self.group.signature.n)}
        return out

    def __repr__(self):
        return "<MembershipReport {0} {1} {2}>".format(self.element, "in" if self.member else "not in", self.group)

def adjoint_conjugate(rep, t, u, t_inv=None):
    u"""
    T U T⁻¹ (``rep="ad"``) or T̂ U T⁻¹ (``rep="twisted_ad"``).

    ``t_inv`` may be passed to avoid recomputing the inverse.
    """
    if rep not in ("ad", "twisted_ad"):
        raise AlgebraError("representation must be 'ad' or 'twisted_ad', not {0}".format(repr(rep)))
    if t_inv is None:
        t_inv = inverse(t)
    if t_inv is NotInvertible:
        raise AlgebraError("cannot conjugate by the non-invertible element {0}".format(t))
    left = t.hat() if rep == "twisted_ad" else t
    return left * u * t_inv

def fixes_all_blades(rep, t, t_inv=None):
    """True if ``t`` is invertible and conjugation by it (``rep``) fixes every basis blade."""
    if t_inv is None:
        t_inv = inverse(t)
    if t_inv is NotInvertible:
        return False
    sig = t.signature
    return all(adjoint_conjugate(rep, t, sig.blade(b), t_inv) == sig.blade(b) for b in sig.blades())

def twisted_witness(t, t_inv=None):
    u"""ĥ(T⁻¹)T, or ``None`` if ``t`` is not invertible."""
    if t_inv is None:
        t_inv = inverse(t)
    if t_inv is NotInvertible:
        return None
    return t_inv.hat() * t

def p_family_member(group, t):
    u"""
    Membership of ``t`` in a P-family through the ĥ(T⁻¹)T characterization.

    Parameters
    ----------
    group : :py:class:`GroupId <degenga.groups.GroupId>`
        ``Ppm``, ``P``, ``PpmLambda``, ``PLambda`` or ``PpmRad``

    t : :py:class:`Multivector <degenga.algebra.Multivector>`
        candidate element; non-invertible elements are reported as non-members
    """
    if group.family != "P":
        raise AlgebraError("{0} is not a P-family group".format(repr(group)))
    w = twisted_witness(t)
    if w is None:
        return MembershipReport(group, t, False)
    member = contains(group.target(), w) and inverse(w) is not NotInvertible
    return MembershipReport(group, t, member, witness=w)

def first_violation(rep, t, spec, t_inv=None):
    """First basis blade of ``spec`` whose conjugate leaves ``spec``, as ``(blade, image)``, or ``None``."""
    if t_inv is None:
        t_inv = inverse(t)
    sig = t.signature
    for b in spec.basis:
        image = adjoint_conjugate(rep, t, sig.blade(b), t_inv)
        if not contains(spec, image):
            return b, image
    return None

def gamma_member(group, t):
    """Membership of ``t`` in a Gamma-family: invertible and preserving the subspace blade by blade."""
    if group.family != "Gamma":
        raise AlgebraError("{0} is not a Gamma-family group".format(repr(group)))
    t_inv = inverse(t)
    if t_inv is NotInvertible:
        return MembershipReport(group, t, False)
    violation = first_violation(group.rep, t, group.preserved(), t_inv)
    if violation is None:
        return MembershipReport(group, t, True)
    blade, image = violation
    return MembershipReport(group, t, False, witness=image, blade=blade)

def member(group, t):
    """Dispatch to :py:func:`p_family_member`, :py:func:`gamma_member` or plain invertibility."""
    if group.signature != t.signature:
        raise AlgebraError("signature mismatch: {0} and {1}".format(repr(group.signature), repr(t.signature)))
    if group.family == "P":
        return p_family_member(group, t)
    elif group.family == "Gamma":
        return gamma_member(group, t)
    else:
        return MembershipReport(group, t, inverse(t) is not NotInvertible)

def characterizations(group):
    u"""
    Every equivalent description of a P-family as ``(label, spec)`` pairs: T is a member iff ĥ(T⁻¹)T is an invertible element of ``spec``.

    ``spec`` is ``None`` for the fixed-point description of ker(ad), where ĥ(T⁻¹)T must commute with everything.
    """
    sig = group.signature
    odd = sig.n % 2 == 1
    spec = lambda name, k=None: SubspaceSpec(sig, name, k)
    if group.name == "Ppm":
        return [("G0", spec("Grade", 0)),
                ("ker(twisted ad)", kernel_spec("twisted_ad", sig)),
                ("G0 + rad G(0)", spec("G0plusRadEven")),
                ("by parity of n", spec("G0plusRadEven") if odd else spec("G0nPlusRadEven"))]
    elif group.name == "P":
        return [("S", spec("S")),
                ("ker(ad)", None),
                ("G0n + rad G(0)", spec("G0nPlusRadEven")),
                ("by parity of n", spec("G0nPlusRadEven") if odd else spec("G0plusRadEven"))]
    elif group.name == "PpmLambda":
        return [("Lambda", spec("Lambda")),
                ("by parity of n", spec("Lambda") if odd else spec("LambdaPlusGn"))]
    elif group.name == "PLambda":
        return [("Lambda + Gn", spec("LambdaPlusGn")),
                ("by parity of n", spec("LambdaPlusGn") if odd else spec("Lambda"))]
    elif group.name == "PpmRad":
        return [("G0 + rad", spec("G0plusRad"))]
    raise AlgebraError("{0} is not a P-family group".format(repr(group)))

def satisfies(t, spec):
    u"""True if ĥ(T⁻¹)T exists and is an invertible element of ``spec`` (``None``: commutes with every blade)."""
    w = twisted_witness(t)
    if w is None:
        return False
    if spec is None:
        return fixes_all_blades("ad", w)
    return contains(spec, w) and inverse(w) is not NotInvertible

################################################################ counterexample

class Fact(object):
    def __init__(self, claim, rep, grade, expected, member, blade=None, image=None):
        self.claim = claim
        self.rep = rep
        self.grade = grade
        self.expected = expected
        self.member = member
        self.blade = blade
        self.image = image

    @property
    def reproduced(self):
        return self.expected == self.member

    def todict(self, n):
        return {"claim": self.claim,
                "expected_member": self.expected,
                "member": self.member,
                "blade": None if self.blade is None else blade_name(self.blade, n),
                "image": None if self.image is None else str(self.image)}

class CounterexampleReport(object):
    def __init__(self, signature, element, facts):
        self.signature = signature
        self.element = element
        self.facts = facts

    @property
    def reproduced(self):
        return all(x.reproduced for x in self.facts)

    def __bool__(self):
        return self.reproduced

def counterexample_check(signature=None):
    u"""
    Single-grade preservation by T = e + e1: T ∉ Γ¹, T ∈ Γ², T ∈ Γ̌¹ and T ∉ Γ̌² in G(0,0,3).

    Grade preservation is tested blade by blade over G¹ and G²; non-members carry the first violating blade and its image.
    """
    if signature is None:
        signature = Signature(0, 0, 3)
    if signature.n < 2:
        raise AlgebraError("the counterexample needs n >= 2, not {0}".format(signature.n))

    t = signature.one() + signature.generator(1)
    t_inv = inverse(t)
    if t_inv is NotInvertible:
        raise AlgebraError("e + e1 is not invertible in {0}".format(signature))

    facts = []
    for claim, rep, grade, expected in (("Gamma^1", "ad", 1, False),
                                        ("Gamma^2", "ad", 2, True),
                                        ("Gamma_check^1", "twisted_ad", 1, True),
                                        ("Gamma_check^2", "twisted_ad", 2, False)):
        violation = first_violation(rep, t, SubspaceSpec(signature, "Grade", grade), t_inv)
        if violation is None:
            facts.append(Fact(claim, rep, grade, expected, True))
        else:
            facts.append(Fact(claim, rep, grade, expected, False, violation[0], violation[1]))
    return CounterexampleReport(signature, t, facts)

################################################################ sampling

def has_sampler(group):
    return group.family != "Gamma"

def _sample_pure_parity(signature, rng, bound, retries):
    # odd invertible elements exist only if some generator is non-degenerate
    if signature.p + signature.q > 0:
        parity = int(rng.integers(0, 2))
    else:
        parity = 0
    return random_invertible(SubspaceSpec(signature, "Parity", parity), rng, bound, retries)

def sample_group_element(group, rng, bound=5, retries=1000):
    u"""
    Random member of ``group`` built from its factorized definition.

    P± = G⁽⁰⁾× ∪ G⁽¹⁾×, P = P± Z×, P±Λ = P± Λ×, PΛ = P± Z× Λ×, P±rad = P± (G⁰ ⊕ rad)×; ``FullUnits`` samples G×. Gamma-families have no factorized definition; sample ``identify(group)`` instead.
    """
    sig = group.signature
    if group.family == "Gamma":
        raise AlgebraError("{0} has no factorized definition; sample identify(group) instead".format(repr(group)))
    if group.name == "FullUnits":
        return random_invertible(SubspaceSpec(sig, "Full"), rng, bound, retries)

    factors = {"Ppm":       (),
               "P":         ("Center",),
               "PpmLambda": ("Lambda",),
               "PLambda":   ("Center", "Lambda"),
               "PpmRad":    ("G0plusRad",)}[group.name]

    out = _sample_pure_parity(sig, rng, bound, retries)
    for name in factors:
        out = out * random_invertible(SubspaceSpec(sig, name), rng, bound, retries)
    return out

def structured_samples(signature, rng, samples, bound=5):
    """Elements drawn in turn from every P-family sampler: members of some groups and not of others."""
    groups = p_family(signature)
    return [sample_group_element(groups[i % len(groups)], rng, bound) for i in range(samples)]

################################################################ identities

class Discrepancy(object):
    def __init__(self, phase, element, lhs, rhs):
        self.phase = phase
        self.element = element
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self):
        return "<Discrepancy {0}: {1} lhs={2} rhs={3}>".format(self.phase, self.element, self.lhs, self.rhs)

class IdentityReport(object):
    def __init__(self, relation, lhs, rhs, checked, discrepancies):
        self.relation = relation
        self.lhs = lhs
        self.rhs = rhs
        self.checked = checked
        self.discrepancies = discrepancies

    @property
    def ok(self):
        return len(self.discrepancies) == 0

    def __bool__(self):
        return self.ok

def _membership_pairs(lhs, rhs, candidates, phase, out, implies=False):
    for t in candidates:
        a = member(lhs, t).member
        b = member(rhs, t).member
        if (a and not b) if implies else (a != b):
            out.append(Discrepancy(phase, t, a, b))
    return len(candidates)

def verify_group_identity(lhs, rhs, samples, rng, bound=5):
    u"""
    Sampled check that two groups coincide.

    Compares memberships on ``samples`` random invertible elements and on ``samples`` structured elements from all P-family samplers, then checks that ``samples`` elements sampled from each side (where a factorized sampler exists) belong to the other side.
    """
    if lhs.signature != rhs.signature:
        raise AlgebraError("signature mismatch: {0} and {1}".format(repr(lhs.signature), repr(rhs.signature)))
    sig = lhs.signature
    full = SubspaceSpec(sig, "Full")
    discrepancies = []
    checked = 0
    checked += _membership_pairs(lhs, rhs, [random_invertible(full, rng, bound) for i in range(samples)], "random", discrepancies)
    checked += _membership_pairs(lhs, rhs, structured_samples(sig, rng, samples, bound), "structured", discrepancies)
    for source, other in ((lhs, rhs), (rhs, lhs)):
        if has_sampler(source):
            for i in range(samples):
                t = sample_group_element(source, rng, bound)
                checked += 1
                if not member(other, t).member:
                    discrepancies.append(Discrepancy("sampled from " + str(source), t, source is lhs, source is rhs))
    logger.debug("%s = %s in %s: %d checked, %d discrepancies", lhs, rhs, sig, checked, len(discrepancies))
    return IdentityReport("=", lhs, rhs, checked, discrepancies)

def verify_group_inclusion(sub, sup, samples, rng, bound=5):
    """Sampled check that ``sub`` is a subgroup of ``sup``."""
    if sub.signature != sup.signature:
        raise AlgebraError("signature mismatch: {0} and {1}".format(repr(sub.signature), repr(sup.signature)))
    sig = sub.signature
    full = SubspaceSpec(sig, "Full")
    discrepancies = []
    checked = 0
    checked += _membership_pairs(sub, sup, [random_invertible(full, rng, bound) for i in range(samples)], "random", discrepancies, implies=True)
    checked += _membership_pairs(sub, sup, structured_samples(sig, rng, samples, bound), "structured", discrepancies, implies=True)
    if has_sampler(sub):
        for i in range(samples):
            t = sample_group_element(sub, rng, bound)
            checked += 1
            if not member(sup, t).member:
                discrepancies.append(Discrepancy("sampled from " + str(sub), t, True, False))
    return IdentityReport("<=", sub, sup, checked, discrepancies)

def verify_characterizations(group, samples, rng, bound=5):
    """Check that every entry of :py:func:`characterizations` decides membership the same way as :py:func:`p_family_member`."""
    sig = group.signature
    full = SubspaceSpec(sig, "Full")
    candidates = [random_invertible(full, rng, bound) for i in range(samples)]
    candidates.extend(structured_samples(sig, rng, samples, bound))
    candidates.extend(sample_group_element(group, rng, bound) for i in range(samples))
    discrepancies = []
    for t in candidates:
        expected = p_family_member(group, t).member
        for label, spec in characterizations(group):
            if satisfies(t, spec) != expected:
                discrepancies.append(Discrepancy(label, t, expected, not expected))
    return IdentityReport("characterizations", group, group, len(candidates), discrepancies)

def check_group_axioms(group, samples, rng, bound=5):
    """Identity, products of sampled pairs and inverses of samples all pass the membership predicate."""
    sig = group.signature
    failures = []
    if not member(group, sig.one()).member:
        failures.append(sig.one())
    for i in range(samples):
        a = sample_group_element(group, rng, bound)
        b = sample_group_element(group, rng, bound)
        for t in (a * b, inverse(a)):
            if not member(group, t).member:
                failures.append(t)
    return failures

def coincidence_classes(signature, samples, rng, bound=5):
    """
    Partition of the five P-families into classes of equal groups, decided by sampled bidirectional membership.

    Returns ``(classes, inclusions)``: lists of :py:class:`GroupId` lists in canonical order, and the ``(i, j)`` index pairs of classes with class i sampled inside class j.
    """
    groups = p_family(signature)
    drawn = dict((g, [sample_group_element(g, rng, bound) for i in range(samples)]) for g in groups)
    inside = {}
    for a in groups:
        for b in groups:
            inside[a, b] = a == b or all(member(b, t).member for t in drawn[a])

    classes = []
    for g in groups:
        for cls in classes:
            if inside[g, cls[0]] and inside[cls[0], g]:
                cls.append(g)
                break
        else:
            classes.append([g])

    inclusions = []
    for i, x in enumerate(classes):
        for j, y in enumerate(classes):
            if i != j and inside[x[0], y[0]]:
                inclusions.append((i, j))
    return classes, inclusions
