from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..errors import InputError

# A monomial is the tuple of exponents of the generators, in generator order.
# Odd generators have exponent 0 or 1; read left to right, the odd generators
# present form the strictly increasing subset x^{i1} x^{i2} ... of the product.
SuperMonomial = Tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    @property
    def parity(self) -> int:
        return self.degree % 2


@dataclass(frozen=True)
class FreeAlgebra:
    """Free graded-commutative algebra 𝕜[y]⊗Λ(x) on finitely many generators.

    Even generators are polynomial (power-series once truncated), odd generators are exterior.
    With `laurent=True` even generators may carry negative exponents.

    Args:
        generators (Tuple[Generator, ...]): the generators, in the fixed order used by monomials
        laurent (bool, optional): allow negative exponents on even generators. Defaults to False.
    """
    generators: Tuple[Generator, ...]
    laurent: bool = False

    def __post_init__(self) -> None:
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise InputError(f"Generator names are not unique: {names}")

    @classmethod
    def from_degrees(cls, generators: Sequence[Tuple[str, int]], laurent: bool = False) -> "FreeAlgebra":
        return cls(tuple(Generator(name, degree) for name, degree in generators), laurent)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    @property
    def odd_indices(self) -> List[int]:
        return [i for i, g in enumerate(self.generators) if g.parity]

    @property
    def even_indices(self) -> List[int]:
        return [i for i, g in enumerate(self.generators) if not g.parity]

    def index(self, name: str) -> int:
        for i, g in enumerate(self.generators):
            if g.name == name:
                return i
        raise InputError(f"Unknown generator '{name}'; known: {self.names}")

    def parity(self, i: int) -> int:
        return self.generators[i].parity

    @property
    def one(self) -> SuperMonomial:
        return (0,) * len(self.generators)

    def generator_monomial(self, i: int) -> SuperMonomial:
        return tuple(1 if j == i else 0 for j in range(len(self.generators)))

    def monomial(self, exponents: Dict[str, int]) -> SuperMonomial:
        m = [0] * len(self.generators)
        for name, k in exponents.items():
            m[self.index(name)] = k
        mono = tuple(m)
        self.check_monomial(mono)
        return mono

    def check_monomial(self, m: SuperMonomial) -> None:
        for g, k in zip(self.generators, m):
            if g.parity and k not in (0, 1):
                raise InputError(f"Odd generator {g.name} has exponent {k}")
            if k < 0 and not self.laurent:
                raise InputError(f"Negative exponent on {g.name} outside Laurent mode")

    def monomial_degree(self, m: SuperMonomial) -> int:
        return sum(k * g.degree for g, k in zip(self.generators, m))

    def monomial_parity(self, m: SuperMonomial) -> int:
        return sum(k for g, k in zip(self.generators, m) if g.parity) % 2

    @staticmethod
    def monomial_order(m: SuperMonomial) -> int:
        return sum(m)

    def multiply_monomials(self, a: SuperMonomial, b: SuperMonomial) -> Optional[Tuple[int, SuperMonomial]]:
        """Product a·b as (sign, monomial), or None when an odd generator repeats."""
        odd = self.odd_indices
        odd_a = [i for i in odd if a[i]]
        odd_b = [j for j in odd if b[j]]
        if set(odd_a) & set(odd_b):
            return None
        swaps = sum(1 for i in odd_a for j in odd_b if i > j)
        return (-1 if swaps % 2 else 1), tuple(x + y for x, y in zip(a, b))

    def left_derivative(self, m: SuperMonomial, i: int) -> Optional[Tuple[int, SuperMonomial]]:
        """∂/∂g_i acting from the left: (coefficient, monomial), or None if the result is zero."""
        k = m[i]
        if k == 0:
            return None
        out = m[:i] + (k - 1,) + m[i + 1:]
        if not self.generators[i].parity:
            return k, out
        before = sum(1 for j in self.odd_indices if j < i and m[j])
        return (-1 if before % 2 else 1), out

    def right_derivative(self, m: SuperMonomial, i: int) -> Optional[Tuple[int, SuperMonomial]]:
        """∂/∂g_i acting from the right (g_i moved to the end before removal)."""
        k = m[i]
        if k == 0:
            return None
        out = m[:i] + (k - 1,) + m[i + 1:]
        if not self.generators[i].parity:
            return k, out
        after = sum(1 for j in self.odd_indices if j > i and m[j])
        return (-1 if after % 2 else 1), out

    def monomials_of_order(self, order: int) -> List[SuperMonomial]:
        """All non-Laurent monomials of polynomial order `order`, sorted lexicographically."""
        gens = self.generators

        def build(i: int, remaining: int) -> Iterator[Tuple[int, ...]]:
            if i == len(gens):
                if remaining == 0:
                    yield ()
                return
            top = min(1, remaining) if gens[i].parity else remaining
            for k in range(top + 1):
                for rest in build(i + 1, remaining - k):
                    yield (k,) + rest

        return sorted(build(0, order))

    def format_monomial(self, m: SuperMonomial) -> str:
        parts = []
        for g, k in zip(self.generators, m):
            if k == 1:
                parts.append(g.name)
            elif k != 0:
                parts.append(f"{g.name}^{k}")
        return "*".join(parts) if parts else "1"
