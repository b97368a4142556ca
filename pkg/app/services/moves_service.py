"""
Mouvements sur les dessins et quotients flexibles

Les trois mouvements agissent sur la paire (alpha, beta):
    - échange des couleurs:  (beta, beta^-1 alpha beta)
    - mouvement des régions: (beta, gamma), les rôles tournent
    - réflexion:             (alpha^-1, beta^-1)

Toute composition de mouvements est un MoveElement (permutation des trois
rôles, avec ou sans réflexion). On n'agit qu'avec les éléments qui fixent le
triple ordonné (pi_1, pi_2, pi_3): ce sont exactement les composés qui
ramènent un dessin de la donnée dans la donnée.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from app.errors import DatumError, InvariantError
from app.services.datum_service import BranchDatum
from app.services.rigid_service import ConstellationPair, class_key
from app.utils.permutation_utils import compose, conjugate, inverse

logger = logging.getLogger(__name__)


def swap_colours(pair: ConstellationPair) -> ConstellationPair:
    """Échanger sommets noirs et blancs; alpha beta est conservé"""
    return ConstellationPair(pair.beta, conjugate(pair.alpha, inverse(pair.beta)))


def rotate_roles(pair: ConstellationPair) -> ConstellationPair:
    """Faire tourner les rôles: les types passent de (pi1, pi2, pi3) à (pi2, pi3, pi1)"""
    return pair.rotated()


def mirror(pair: ConstellationPair) -> ConstellationPair:
    """Réflexion: renverse l'orientation, conserve les trois types"""
    return ConstellationPair(inverse(pair.alpha), inverse(pair.beta))


# Permutations des rôles: le nouveau rôle i est tenu par l'ancien rôle role_perm[i].
# Chaque formule prend (a, b, c) avec a b c = 1 et rend le nouveau (alpha, beta).
_ROLE_FORMULAS = {
    (0, 1, 2): lambda a, b, c: (a, b),
    (1, 0, 2): lambda a, b, c: (b, conjugate(a, inverse(b))),
    (1, 2, 0): lambda a, b, c: (b, c),
    (2, 0, 1): lambda a, b, c: (c, a),
    # échange puis rotation
    (0, 2, 1): lambda a, b, c: (conjugate(a, inverse(b)), c),
    # rotation puis échange
    (2, 1, 0): lambda a, b, c: (c, conjugate(b, inverse(c))),
}

ROLE_PERMUTATIONS = tuple(_ROLE_FORMULAS)


@dataclass(frozen=True)
class MoveElement:
    """Élément du groupe (permutations des rôles) x (réflexion)"""

    role_perm: Tuple[int, int, int] = (0, 1, 2)
    mirrored: bool = False

    @property
    def is_identity(self) -> bool:
        return self.role_perm == (0, 1, 2) and not self.mirrored

    def then(self, other: "MoveElement") -> "MoveElement":
        """Composé: self d'abord, other ensuite"""
        role_perm = tuple(self.role_perm[i] for i in other.role_perm)
        return MoveElement(role_perm, self.mirrored != other.mirrored)

    def inverse(self) -> "MoveElement":
        role_perm = [0, 0, 0]
        for i, r in enumerate(self.role_perm):
            role_perm[r] = i
        return MoveElement(tuple(role_perm), self.mirrored)

    def permute(self, triple: Sequence) -> tuple:
        return tuple(triple[r] for r in self.role_perm)

    def apply(self, pair: ConstellationPair) -> ConstellationPair:
        alpha, beta = _ROLE_FORMULAS[self.role_perm](pair.alpha, pair.beta, pair.gamma)
        if self.mirrored:
            alpha, beta = inverse(alpha), inverse(beta)
        return ConstellationPair(alpha, beta)

    def __str__(self):
        roles = "".join(str(r + 1) for r in self.role_perm)
        return f"{roles}{'~' if self.mirrored else ''}"


def all_moves(include_mirror: bool = True) -> List[MoveElement]:
    flags = (False, True) if include_mirror else (False,)
    return [MoveElement(role_perm, flag) for flag in flags for role_perm in ROLE_PERMUTATIONS]


def stabilizer_moves(datum: BranchDatum, include_mirror: bool) -> List[MoveElement]:
    """
    Mouvements qui fixent le triple ordonné des partitions

    Args:
        datum: Donnée à 3 points
        include_mirror: Ajouter les éléments avec réflexion

    Returns:
        Liste des MoveElement, identité en tête
    """
    if datum.n != 3:
        raise DatumError(f"Les mouvements demandent 3 points de ramification (n = {datum.n})")
    triple = tuple(datum.partitions)
    return [m for m in all_moves(include_mirror) if m.permute(triple) == triple]


@dataclass(frozen=True)
class OrbitResult:
    """Nombre d'orbites et orbite de chaque classe rigide (par indice)"""

    count: int
    orbit_map: Dict[int, int]

    def to_json_dict(self) -> Dict[str, int]:
        return {str(i): orbit for i, orbit in sorted(self.orbit_map.items())}


def _orbits(rigid_reps: Sequence[ConstellationPair], datum: BranchDatum,
            moves: Sequence[MoveElement]) -> OrbitResult:
    keys = [class_key(pair) for pair in rigid_reps]
    index = {key: i for i, key in enumerate(keys)}
    if len(index) != len(keys):
        raise InvariantError("Deux représentants rigides ont la même clé")

    orbit_map = {}
    count = 0
    for first in range(len(rigid_reps)):
        if first in orbit_map:
            continue
        orbit_map[first] = count
        queue = deque([first])
        size = 0
        while queue:
            i = queue.popleft()
            size += 1
            for move in moves:
                image = move.apply(rigid_reps[i]).validate(datum)
                j = index.get(class_key(image))
                if j is None:
                    raise InvariantError(f"Le mouvement {move} sort des classes rigides de {datum}")
                if j not in orbit_map:
                    orbit_map[j] = count
                    queue.append(j)
        logger.debug(f"Orbite {count}: {size} classes rigides")
        count += 1
    return OrbitResult(count, orbit_map)


def count_flexible(rigid_reps: Sequence[ConstellationPair], datum: BranchDatum) -> OrbitResult:
    """Classes flexibles: orbites sous les mouvements sans réflexion"""
    result = _orbits(rigid_reps, datum, stabilizer_moves(datum, False))
    logger.info(f"{datum}: {result.count} classes flexibles")
    return result


def count_very_flexible(rigid_reps: Sequence[ConstellationPair], datum: BranchDatum) -> OrbitResult:
    """Classes très flexibles: orbites sous les mouvements et la réflexion"""
    result = _orbits(rigid_reps, datum, stabilizer_moves(datum, True))
    logger.info(f"{datum}: {result.count} classes très flexibles")
    return result
