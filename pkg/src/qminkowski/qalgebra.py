"""Noncommutative polynomials and degree-truncated quotient algebras.

Words over a finite generator alphabet are tuples of generator ids; a
polynomial is a mapping from words to exact scalars.  A quotient is built
from degree <= 2 relations by padding each relation with all generator
words that keep the total degree inside the cap, then echelonising the
resulting rows over the scalar field.

The monomial order is degree-lexicographic: longer words are greater, and
words of equal length compare lexicographically with generator 0 < 1 < ...
Each echelon row is keyed by its greatest word (the pivot); the surviving
non-pivot words form the normal-form basis.  Because the pivot set is the
set of leading words of the row space, the basis and all normal forms are
canonical: they do not depend on relation order.
"""

from __future__ import annotations

from itertools import product

from .errors import DegreeError
from .exact import ONE, Scalar

__all__ = ["NCPoly", "TruncatedQuotient", "build_quotient", "all_words"]

Word = tuple


def _key(w):
    return (len(w), w)


def all_words(gens: int, length: int):
    """All words of exactly the given length, in lexicographic order."""
    return product(range(gens), repeat=length)


class NCPoly:
    """Finitely supported map from words to scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for w, c in terms.items():
                if c:
                    t[w] = c
        self.terms = t

    @staticmethod
    def zero() -> "NCPoly":
        return NCPoly()

    @staticmethod
    def one() -> "NCPoly":
        return NCPoly({(): ONE})

    @staticmethod
    def gen(i: int) -> "NCPoly":
        return NCPoly({(i,): ONE})

    @staticmethod
    def from_word(w, coeff=ONE) -> "NCPoly":
        if not isinstance(coeff, Scalar):
            coeff = Scalar(coeff)
        return NCPoly({tuple(w): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Length of the longest word; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(len(w) for w in self.terms)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        p = NCPoly.__new__(NCPoly)
        p.terms = out
        return p

    def __sub__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = -c if s is None else s - c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        p = NCPoly.__new__(NCPoly)
        p.terms = out
        return p

    def __neg__(self):
        p = NCPoly.__new__(NCPoly)
        p.terms = {w: -c for w, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        p = NCPoly.__new__(NCPoly)
        p.terms = out
        return p

    def scale(self, c) -> "NCPoly":
        if not isinstance(c, Scalar):
            c = Scalar(c)
        if not c:
            return NCPoly()
        p = NCPoly.__new__(NCPoly)
        p.terms = {w: c * v for w, v in self.terms.items()}
        return p

    def star(self, invmap=None) -> "NCPoly":
        """The antilinear antihomomorphism: reverse words, conjugate
        coefficients, optionally relabel generators through invmap."""
        out = {}
        for w, c in self.terms.items():
            rw = tuple(reversed(w))
            if invmap is not None:
                rw = tuple(invmap(g) for g in rw)
            out[rw] = out.get(rw, Scalar(0)) + c.conj()
        return NCPoly(out)

    def format(self, names=None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = lambda g: "g%d" % g
        bits = []
        for w in sorted(self.terms, key=_key):
            c = self.terms[w]
            word = "*".join(names(g) for g in w) if w else "1"
            bits.append("(%r)*%s" % (c, word))
        return " + ".join(bits)

    def __repr__(self):
        return self.format()


def _word_mul_rows(u, poly_terms, v):
    out = {}
    for w, c in poly_terms.items():
        key = u + w + v
        s = out.get(key)
        s = c if s is None else s + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


class TruncatedQuotient:
    """A free algebra modulo degree <= 2 relations, truncated at a degree cap.

    The reduction table maps each pivot word to its fully reduced
    replacement, so a normal form is a single substitution pass.
    """

    def __init__(self, gens: int, relations, cap: int):
        if cap < 2:
            raise DegreeError("degree cap must be at least 2")
        self.gens = gens
        self.cap = cap
        self.relation_set = tuple(relations)
        for r in self.relation_set:
            if r.degree() > 2:
                raise DegreeError("relations must have degree at most 2")
        self._table = self._build_table()
        self._basis = self._build_basis()

    def _build_table(self):
        ech = {}
        for rel in self.relation_set:
            if rel.is_zero():
                continue
            d = rel.degree()
            slack = self.cap - d
            for lu in range(slack + 1):
                for u in all_words(self.gens, lu):
                    for lv in range(slack - lu + 1):
                        for v in all_words(self.gens, lv):
                            row = _word_mul_rows(u, rel.terms, v)
                            self._insert(ech, row)
        # Substitute ascending so every stored tail is itself fully reduced.
        table = {}
        for lead in sorted(ech, key=_key):
            repl = {}
            for w, c in ech[lead].items():
                c = -c
                sub = table.get(w)
                if sub is None:
                    s = repl.get(w)
                    s = c if s is None else s + c
                    if s:
                        repl[w] = s
                    else:
                        repl.pop(w, None)
                else:
                    for w2, c2 in sub.items():
                        s = repl.get(w2)
                        cc = c * c2
                        s = cc if s is None else s + cc
                        if s:
                            repl[w2] = s
                        else:
                            repl.pop(w2, None)
            table[lead] = repl
        return table

    @staticmethod
    def _insert(ech, row):
        while row:
            lead = max(row, key=_key)
            piv = ech.get(lead)
            if piv is None:
                c = row.pop(lead)
                inv = ONE / c
                ech[lead] = {w: inv * v for w, v in row.items()}
                return
            c = row.pop(lead)
            for w, v in piv.items():
                s = row.get(w)
                cv = c * v
                s = -cv if s is None else s - cv
                if s:
                    row[w] = s
                else:
                    row.pop(w, None)

    def _build_basis(self):
        table = self._table
        per_degree = []
        for d in range(self.cap + 1):
            per_degree.append(tuple(w for w in all_words(self.gens, d)
                                    if w not in table))
        return tuple(per_degree)

    def is_basis_word(self, w) -> bool:
        return len(w) <= self.cap and w not in self._table

    def basis(self, degree: int):
        """Normal-form basis words of exactly the given degree."""
        if degree > self.cap:
            raise DegreeError("degree %d exceeds cap %d" % (degree, self.cap))
        return self._basis[degree]

    def basis_upto(self, degree: int):
        if degree > self.cap:
            raise DegreeError("degree %d exceeds cap %d" % (degree, self.cap))
        for d in range(degree + 1):
            yield from self._basis[d]

    def dimension_profile(self):
        """Number of basis words in each degree 0..cap."""
        return [len(b) for b in self._basis]

    def normal_form(self, p: NCPoly) -> NCPoly:
        if p.degree() > self.cap:
            raise DegreeError("degree %d exceeds cap %d"
                              % (p.degree(), self.cap))
        table = self._table
        out = {}
        for w, c in p.terms.items():
            sub = table.get(w)
            if sub is None:
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
            else:
                for w2, c2 in sub.items():
                    s = out.get(w2)
                    cc = c * c2
                    s = cc if s is None else s + cc
                    if s:
                        out[w2] = s
                    else:
                        out.pop(w2, None)
        q = NCPoly.__new__(NCPoly)
        q.terms = out
        return q


def build_quotient(gens: int, relations, cap: int) -> TruncatedQuotient:
    """Construct the truncated quotient of the free algebra on ``gens``
    generators by the given degree <= 2 relations."""
    return TruncatedQuotient(gens, relations, cap)
