from dataclasses import dataclass, field

from screenlab.core import BraidingMatrix, PreconditionError

type Coloring = tuple[int, ...]


@dataclass(frozen=True)
class WordCombination:
    """Finite linear combination of colored words x_{f(1)}⊗...⊗x_{f(n)}."""
    terms: dict[Coloring, complex] = field(default_factory=dict)

    def __post_init__(self):
        terms = {tuple(int(c) for c in word): complex(c) for word, c in self.terms.items() if c != 0}
        lengths = {len(word) for word in terms}
        if len(lengths) > 1:
            raise PreconditionError(f"Words of mixed lengths {sorted(lengths)} in one combination.")
        object.__setattr__(self, "terms", terms)

    @property
    def degree(self) -> int:
        return len(next(iter(self.terms))) if self.terms else 0

    def colors(self) -> set[int]:
        return {c for word in self.terms for c in word}

    def norm(self) -> float:
        return sum(abs(c) ** 2 for c in self.terms.values()) ** 0.5

    def __add__(self, other: "WordCombination") -> "WordCombination":
        terms = dict(self.terms)
        for word, c in other.terms.items():
            terms[word] = terms.get(word, 0) + c
        return WordCombination(terms)

    def scale(self, c: complex) -> "WordCombination":
        return WordCombination({word: c * v for word, v in self.terms.items()})

    @classmethod
    def word(cls, *colors: int) -> "WordCombination":
        return cls({tuple(colors): 1})

    @classmethod
    def power(cls, color: int, n: int) -> "WordCombination":
        return cls({(color,) * n: 1})


def quantum_serre(q: BraidingMatrix, i: int, j: int) -> WordCombination:
    """x_i x_i x_j − (q_ii q_ij + q_ij) x_i x_j x_i + q_ii q_ij² x_j x_i x_i"""
    qii, qij = q.q(i, i), q.q(i, j)
    return WordCombination({
        (i, i, j): 1,
        (i, j, i): -(qii * qij + qij),
        (j, i, i): qii * qij ** 2,
    })
