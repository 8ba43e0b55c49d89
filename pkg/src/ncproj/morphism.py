"""Graded algebra homomorphisms ``phi: A -> B`` given by generator images."""
from __future__ import annotations

from typing import Sequence

from .errors import ContextMismatch, DegreeAboveBound, NotAMorphism
from .free import FreePoly, Word
from .groebner import GradedAlgebra
from .linalg import Matrix


class AlgebraMorphism:
    """``phi`` sends generator ``x_k`` of weight ``w`` to a homogeneous element
    of degree ``scale * w`` of the target.

    ``scale`` is 1 for degree-preserving maps; the inclusion of a Veronese
    subalgebra ``A^(n) -> A`` has ``scale = n``.
    """

    def __init__(self, source: GradedAlgebra, target: GradedAlgebra,
                 images: Sequence[FreePoly], scale: int = 1, check: bool = True,
                 name: str | None = None):
        if len(images) != source.ngens:
            raise ContextMismatch(f"{len(images)} images for {source.ngens} generators")
        self.source = source
        self.target = target
        self.scale = scale
        self.name = name
        self.images = []
        self._gen_vecs = []
        for k, img in enumerate(images):
            if not isinstance(img, FreePoly):
                img = target.free.one() * img
            if img.parent != target.free:
                img = FreePoly(target.free, img.terms)
            d = scale * source.weights[k]
            if img.terms and img.degree() != d:
                raise NotAMorphism(
                    f"image of {source.names[k]} has degree {img.degree()}, expected {d}"
                )
            self.images.append(img)
            self._gen_vecs.append(target.vector(img, d)[1] if d <= target.D else None)
        self._word_cache: dict[Word, list] = {(): [target.field.one]}
        self._mats: dict[int, Matrix] = {}
        if check:
            self.verify()

    @classmethod
    def identity(cls, a: GradedAlgebra) -> "AlgebraMorphism":
        return cls(a, a, [a.free.gen(k) for k in range(a.ngens)], check=False, name="id")

    @classmethod
    def by_names(cls, source: GradedAlgebra, target: GradedAlgebra, **images) -> "AlgebraMorphism":
        return cls(source, target, [images[n] for n in source.names])

    @property
    def certified_source_degree(self) -> int:
        """Largest source degree whose image lies inside the target's bound."""
        return min(self.source.D, self.target.D // self.scale)

    def apply_word(self, word: Word) -> list:
        hit = self._word_cache.get(word)
        if hit is not None:
            return hit
        d = self.source.free.degree(word)
        if self.scale * d > self.target.D:
            raise DegreeAboveBound(f"image degree {self.scale * d} beyond target bound {self.target.D}")
        head = self.apply_word(word[:-1])
        k = word[-1]
        dh = self.scale * self.source.free.degree(word[:-1])
        v = self.target.product(head, dh, self._gen_vecs[k], self.scale * self.source.weights[k])
        self._word_cache[word] = v
        return v

    def apply(self, vec: Sequence, degree: int) -> list:
        """Image of an element of ``source_degree`` given by coordinates."""
        out = self.target.zero_vector(self.scale * degree)
        for w, c in zip(self.source.basis(degree), vec):
            if c:
                for j, e in enumerate(self.apply_word(w)):
                    if e:
                        out[j] += c * e
        return out

    def apply_poly(self, f: FreePoly) -> tuple[int, list]:
        """Image of an arbitrary homogeneous free polynomial (need not be normal)."""
        d = f.degree()
        out = self.target.zero_vector(self.scale * d)
        for w, c in f.terms.items():
            for j, e in enumerate(self.apply_word(w)):
                if e:
                    out[j] += c * e
        return self.scale * d, out

    def matrix(self, degree: int) -> Matrix:
        """``A_degree -> B_{scale*degree}``, rows indexed by source normal words."""
        m = self._mats.get(degree)
        if m is None:
            rows = [self.apply_word(w) for w in self.source.basis(degree)]
            m = Matrix._trusted(self.target.field, rows, self.target.dim(self.scale * degree))
            self._mats[degree] = m
        return m

    def verify(self) -> None:
        """Every source relation must map to zero in the target (within bounds)."""
        if self.source.field != self.target.field:
            raise ContextMismatch("morphism between algebras over different fields")
        top = self.certified_source_degree
        for r in self.source.presentation.relations:
            if r.degree() > top:
                continue
            _, v = self.apply_poly(r)
            if any(v):
                raise NotAMorphism(f"relation {r} does not map to zero")

    def is_surjective(self, upto: int | None = None) -> bool:
        from .linalg import rank

        upto = self.certified_source_degree if upto is None else upto
        return all(
            rank(self.matrix(d)) == self.target.dim(self.scale * d) for d in range(upto + 1)
        )

    def __repr__(self):
        imgs = ", ".join(f"{n} -> {p}" for n, p in zip(self.source.names, self.images))
        return f"AlgebraMorphism({imgs}; scale={self.scale})"
