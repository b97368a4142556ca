"""
Arithmétique exacte des permutations et des partitions.

Conventions:
    - les points sont les entiers 0..d-1;
    - compose(p, q) applique d'abord le facteur de droite: compose(p, q)(x) = p(q(x));
    - une partition est toujours stockée triée par ordre décroissant.
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, List, Sequence, Tuple

from app.errors import PermutationError


@dataclass(frozen=True, order=True)
class Partition:
    """Partition d'un entier d (parties décroissantes, toutes >= 1)"""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if not parts:
            raise PermutationError("Une partition doit avoir au moins une partie")
        if parts[-1] < 1:
            raise PermutationError(f"Partie non positive dans {list(self.parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def is_trivial(self) -> bool:
        """Vrai si toutes les parties valent 1 (point non ramifié)"""
        return all(p == 1 for p in self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Permutation:
    """Bijection de {0, ..., d-1}, donnée par la liste de ses images"""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise PermutationError(f"Images invalides pour une permutation: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Construire une permutation à partir de cycles disjoints (points 0-indexés)"""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for x in cycle:
                if not 0 <= x < degree:
                    raise PermutationError(f"Point {x} hors de [0, {degree})")
                if x in seen:
                    raise PermutationError(f"Point {x} répété dans les cycles")
                seen.add(x)
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self, include_fixed: bool = True) -> List[Tuple[int, ...]]:
        """
        Décomposition en cycles disjoints

        Chaque cycle commence par son plus petit élément, et les cycles sont
        triés par plus petit élément.
        """
        return _cycles(self.images, include_fixed)


def _cycles(images: Sequence[int], include_fixed: bool = True) -> List[Tuple[int, ...]]:
    seen = [False] * len(images)
    result = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = images[x]
        if include_fixed or len(cycle) > 1:
            result.append(tuple(cycle))
    return result


def _check_degrees(p: Permutation, q: Permutation):
    if p.degree != q.degree:
        raise PermutationError(f"Degrés différents: {p.degree} et {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    Composer deux permutations, facteur de droite appliqué en premier

    Args:
        p: Permutation appliquée en second
        q: Permutation appliquée en premier

    Returns:
        Permutation x -> p(q(x))
    """
    _check_degrees(p, q)
    return Permutation(tuple(p.images[x] for x in q.images))


def inverse(p: Permutation) -> Permutation:
    """Permutation inverse"""
    images = [0] * p.degree
    for x, y in enumerate(p.images):
        images[y] = x
    return Permutation(tuple(images))


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """
    Conjuguer p par g

    Returns:
        g p g^-1, qui envoie g(x) sur g(p(x)) (renommage des points par g)
    """
    _check_degrees(p, g)
    images = [0] * p.degree
    for x in range(p.degree):
        images[g.images[x]] = g.images[p.images[x]]
    return Permutation(tuple(images))


def cycle_type(p: Permutation) -> Partition:
    """Type cyclique, points fixes compris"""
    return Partition(tuple(len(c) for c in p.cycles()))


def canonical_class_rep(pi: Partition) -> Permutation:
    """
    Représentant canonique de la classe de conjugaison de type pi

    Les cycles remplissent des entiers consécutifs dans l'ordre des parties:
    [3,2,1,1] donne (0 1 2)(3 4) sur 7 points.
    """
    cycles = []
    start = 0
    for part in pi.parts:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, pi.total)


def centralizer_order(pi: Partition) -> int:
    """Ordre du centralisateur: produit des i^k_i * k_i!"""
    order = 1
    for size, count in pi.multiplicities().items():
        order *= size ** count * factorial(count)
    return order


def centralizer_elements(p: Permutation) -> Iterator[Permutation]:
    """
    Énumérer le centralisateur d'un représentant canonique

    Les éléments sont construits directement depuis la structure cyclique
    (rotations dans chaque cycle, permutations des blocs de même longueur),
    sans filtrer le groupe symétrique. Ils sont produits un à un: rien n'est
    conservé entre deux éléments.

    Args:
        p: Permutation égale à canonical_class_rep(cycle_type(p))

    Returns:
        Itérateur sur les g tels que g p g^-1 = p
    """
    pi = cycle_type(p)
    if p != canonical_class_rep(pi):
        raise PermutationError("Le centralisateur n'est calculé que pour un représentant canonique")
    for images in _centralizer_images(pi):
        yield Permutation(images)


def _centralizer_images(pi: Partition) -> Iterator[Tuple[int, ...]]:
    # blocs (début, longueur) regroupés par longueur
    blocks_by_size = {}
    start = 0
    for part in pi.parts:
        blocks_by_size.setdefault(part, []).append(start)
        start += part
    groups = list(blocks_by_size.items())
    images = [0] * pi.total

    def fill(k):
        if k == len(groups):
            yield tuple(images)
            return
        size, starts = groups[k]
        for order in itertools.permutations(range(len(starts))):
            for shifts in itertools.product(range(size), repeat=len(starts)):
                for b, src in enumerate(starts):
                    dst = starts[order[b]]
                    for j in range(size):
                        images[src + j] = dst + (j + shifts[b]) % size
                yield from fill(k + 1)

    yield from fill(0)


def partitions_of(d: int, largest: int = None) -> Iterator[Partition]:
    """Toutes les partitions de d, en ordre lexicographique décroissant"""
    for parts in _partition_tuples(d, d if largest is None else largest):
        yield Partition(parts)


def _partition_tuples(d: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _partition_tuples(d - first, first):
            yield (first,) + rest
