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

import ast
import fractions
import re

from degenga.algebra import AlgebraError, Multivector, blade_indices, blade_mask

class ParseError(AlgebraError):
    def __init__(self, message, position):
        super(ParseError, self).__init__("position {0}: {1}".format(position, message))
        self.message = message
        self.position = position

def blade_name(mask, n):
    """
    Name of a blade in ``n`` dimensions: ``e`` for the identity, digit concatenation (``e13``) when ``n <= 9``, and the bracket form (``e[1,12]``) otherwise, except for single indices below 10.
    """
    indices = blade_indices(mask)
    if len(indices) == 0:
        return "e"
    elif n <= 9 or (len(indices) == 1 and indices[0] < 10):
        return "e" + "".join(str(a) for a in indices)
    else:
        return "e[" + ",".join(str(a) for a in indices) + "]"

def _rational_string(x):
    if x.denominator == 1:
        return str(x.numerator)
    return "{0}/{1}".format(x.numerator, x.denominator)

def _term(c, name, complex):
    # returns (negative, text) for the coefficient c times the blade called name
    if complex:
        real, im = c.x, c.y
        if im and real:
            inner = _rational_string(real) + (" - " if im < 0 else " + ") + ("i" if abs(im) == 1 else _rational_string(abs(im)) + "*i")
            return False, "({0})*{1}".format(inner, name)
        elif im:
            factor = "i" if abs(im) == 1 else _rational_string(abs(im)) + "*i"
            return im < 0, "{0}*{1}".format(factor, name)
        c = real
    if abs(c) == 1:
        return c < 0, name
    return c < 0, "{0}*{1}".format(_rational_string(abs(c)), name)

def tostring(u):
    """
    Canonical text of ``u``: terms in ascending blade order joined by `` + `` and `` - ``, explicit ``*``, rationals as ``a/b``, unit coefficients omitted and ``0`` for the zero multivector. Complex coefficients are written ``(x + y*i)*blade`` or ``y*i*blade``.

    :py:func:`parse` reads this text back to the same multivector.
    """
    sig = u.signature
    out = []
    for m, c in u.items():
        negative, text = _term(c, blade_name(m, sig.n), sig.complex)
        if len(out) == 0:
            out.append("-" + text if negative else text)
        else:
            out.append((" - " if negative else " + ") + text)
    if len(out) == 0:
        return "0"
    return "".join(out)

def parse(text, signature):
    """
    Evaluate a multivector expression in ``signature``.

    Parameters
    ----------
    text : string
        sums, differences, products (explicit ``*``), division by scalars, non-negative integer powers (``**``), unary minus, parentheses, rational or decimal literals and blade symbols: ``e`` (identity), ``e3``, ``e13`` (digit concatenation, only for ``n <= 9``) or ``e[1,12]``, with strictly ascending indices. In complex mode, ``i`` and literals like ``2j`` are imaginary.

    signature : :py:class:`Signature <degenga.algebra.Signature>`
        the algebra to evaluate in

    Raises :py:class:`ParseError` with a 1-based column for any malformed input.
    """
    stripped = text.lstrip()
    offset = len(text) - len(stripped)
    try:
        pyast = ast.parse(stripped, mode="eval").body
    except SyntaxError as err:
        raise ParseError("invalid syntax", (err.offset or 1) + offset)
    except (RecursionError, MemoryError):
        raise ParseError("expression is nested too deeply", 1 + offset)

    def position(node):
        return getattr(node, "col_offset", 0) + 1 + offset

    def scalar(value, imag=0):
        return Multivector(signature, {0: signature.scalar(value, imag)})

    def blade(indices, node):
        for a in indices:
            if not 1 <= a <= signature.n:
                raise ParseError("blade index {0} is out of range 1..{1}".format(a, signature.n), position(node))
        for a, b in zip(indices[:-1], indices[1:]):
            if a >= b:
                raise ParseError("blade indices must be strictly ascending: {0}".format(",".join(str(x) for x in indices)), position(node))
        return signature.blade(blade_mask(indices))

    def literal(node):
        segment = ast.get_source_segment(stripped, node)
        if isinstance(node.value, bool) or not isinstance(node.value, (int, float, complex)):
            raise ParseError("unsupported literal {0}".format(segment), position(node))
        if isinstance(node.value, complex):
            if not signature.complex:
                raise ParseError("imaginary literal {0} in real mode; use --complex".format(segment), position(node))
            return scalar(0, fractions.Fraction(segment.rstrip("jJ")))
        if isinstance(node.value, float):
            return scalar(fractions.Fraction(segment))
        return scalar(node.value)

    def recurse(node):
        if isinstance(node, ast.Constant):
            return literal(node)

        elif isinstance(node, ast.Name):
            if node.id == "i":
                if not signature.complex:
                    raise ParseError("imaginary unit i in real mode; use --complex", position(node))
                return scalar(0, 1)
            m = re.match(r"^e([0-9]*)$", node.id)
            if m is None:
                raise ParseError("unrecognized symbol {0}".format(node.id), position(node))
            digits = m.group(1)
            if len(digits) > 1 and signature.n > 9:
                raise ParseError("digit-form blade {0} is ambiguous for n = {1}; write e[...]".format(node.id, signature.n), position(node))
            return blade([int(x) for x in digits], node)

        elif isinstance(node, ast.Subscript):
            if not isinstance(node.value, ast.Name) or node.value.id != "e":
                raise ParseError("only the blade symbol e can be indexed", position(node))
            index = node.slice
            if type(index).__name__ == "Index":
                index = index.value
            items = index.elts if isinstance(index, ast.Tuple) else [index]
            indices = []
            for x in items:
                if not isinstance(x, ast.Constant) or isinstance(x.value, bool) or not isinstance(x.value, int):
                    raise ParseError("blade indices must be integers", position(x))
                indices.append(x.value)
            return blade(indices, node)

        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -recurse(node.operand)

        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.UAdd):
            return recurse(node.operand)

        elif isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                right = node.right
                if not isinstance(right, ast.Constant) or isinstance(right.value, bool) or not isinstance(right.value, int) or right.value < 0:
                    raise ParseError("exponents must be non-negative integer literals", position(right))
                return recurse(node.left) ** right.value

            # left-nested chains (long sums) are folded iteratively
            chain = []
            while isinstance(node, ast.BinOp) and not isinstance(node.op, ast.Pow):
                if not isinstance(node.op, (ast.Add, ast.Sub, ast.Mult, ast.Div)):
                    raise ParseError("only binary operators supported: '+', '-', '*', '/', and '**'", position(node))
                chain.append((node.op, node.right))
                node = node.left

            out = recurse(node)
            for op, right in reversed(chain):
                value = recurse(right)
                if isinstance(op, ast.Add):
                    out = out + value
                elif isinstance(op, ast.Sub):
                    out = out - value
                elif isinstance(op, ast.Mult):
                    out = out * value
                else:
                    try:
                        out = out / value
                    except ZeroDivisionError:
                        raise ParseError("division by zero", position(right))
                    except AlgebraError:
                        raise ParseError("only division by a scalar is supported", position(right))
            return out

        else:
            raise ParseError("unsupported syntax {0}".format(ast.get_source_segment(stripped, node)), position(node))

    try:
        return recurse(pyast)
    except RecursionError:
        raise ParseError("expression is nested too deeply", 1 + offset)
