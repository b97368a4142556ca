"""
Oracle par force brute pour les petits degrés

Tout le groupe symétrique est matérialisé dans un tableau numpy. Les paires
(alpha, beta) sont cherchées sans fixer alpha, les classes rigides sont les
orbites sous la conjugaison par les d! éléments, et les mouvements sont
recodés ici sur des tableaux. Ce module ne partage avec l'énumération rapide
que les primitives de permutation_utils.
"""

import itertools
import logging
from functools import lru_cache
from typing import List, NamedTuple, Tuple

import numpy as np

from app.config import Config
from app.errors import DatumError, DegreeTooLargeError, InvariantError
from app.services.datum_service import BranchDatum
from app.utils.permutation_utils import Permutation, cycle_type
from app.utils.union_find import DisjointSet

logger = logging.getLogger(__name__)


class OracleCounts(NamedTuple):
    rigid: int
    flexible: int
    very_flexible: int


class SymmetricGroupTable:
    """
    Table de S_d: permutations en ordre lexicographique, inverses, types cycliques

    Le code d'une permutation est son écriture en base d (chiffre de poids fort
    en premier), ce qui rend les codes croissants dans l'ordre de la table.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.perms = np.array(list(itertools.permutations(range(degree))), dtype=np.int64)
        self.inverses = np.argsort(self.perms, axis=1)
        self.weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
        self.codes = self.perms @ self.weights
        self.types = [cycle_type(Permutation(tuple(row))) for row in self.perms.tolist()]

    def __len__(self):
        return len(self.perms)

    def index_of(self, rows: np.ndarray) -> np.ndarray:
        """Indices dans la table des permutations données ligne par ligne"""
        return np.searchsorted(self.codes, np.atleast_2d(rows) @ self.weights)

    def indices_of_type(self, pi) -> np.ndarray:
        return np.array([i for i, t in enumerate(self.types) if t == pi], dtype=np.int64)

    def conjugates(self, p: np.ndarray) -> np.ndarray:
        """g p g^-1 pour tous les g de la table (une ligne par g)"""
        return np.take_along_axis(self.perms, p[self.inverses], axis=1)


@lru_cache(maxsize=None)
def symmetric_group(degree: int) -> SymmetricGroupTable:
    return SymmetricGroupTable(degree)


def _connected(a: np.ndarray, b: np.ndarray) -> bool:
    points = DisjointSet(range(len(a)))
    for x in range(len(a)):
        points.union(x, int(a[x]))
        points.union(x, int(b[x]))
    return points.count() == 1


def _invert(p: np.ndarray) -> np.ndarray:
    return np.argsort(p)


def _third(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _invert(a[b])


# Nouveau rôle i tenu par l'ancien rôle perm[i]; chaque formule rend (alpha, beta)
_MOVES = {
    (0, 1, 2): lambda a, b, c: (a, b),
    (1, 0, 2): lambda a, b, c: (b, _invert(b)[a[b]]),
    (1, 2, 0): lambda a, b, c: (b, c),
    (2, 0, 1): lambda a, b, c: (c, a),
    (0, 2, 1): lambda a, b, c: (_invert(b)[a[b]], c),
    (2, 1, 0): lambda a, b, c: (c, _invert(c)[b[c]]),
}


def _move_words(datum: BranchDatum, include_mirror: bool) -> List[Tuple[Tuple[int, ...], bool]]:
    triple = tuple(datum.partitions)
    words = []
    for perm in _MOVES:
        if tuple(triple[r] for r in perm) != triple:
            continue
        words.append((perm, False))
        if include_mirror:
            words.append((perm, True))
    return words


def _apply_word(word, a: np.ndarray, b: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    perm, mirrored = word
    alpha, beta = _MOVES[perm](a, b, _third(a, b))
    if mirrored:
        alpha, beta = _invert(alpha), _invert(beta)
    return alpha, beta


def brute_force_counts(datum: BranchDatum, max_degree: int = None) -> OracleCounts:
    """
    Compter les classes rigides, flexibles et très flexibles par force brute

    Args:
        datum: Donnée compatible à 3 points
        max_degree: Plafond du degré (par défaut Config.ORACLE_MAX_DEGREE)

    Returns:
        OracleCounts(rigid, flexible, very_flexible)
    """
    max_degree = Config.ORACLE_MAX_DEGREE if max_degree is None else max_degree
    if datum.n != 3:
        raise DatumError(f"L'oracle demande 3 points de ramification (n = {datum.n})")
    if datum.degree > max_degree:
        raise DegreeTooLargeError(f"L'oracle est limité au degré {max_degree} (reçu {datum.degree})")

    table = symmetric_group(datum.degree)
    pi1, pi2, pi3 = datum.partitions
    alphas = table.indices_of_type(pi1)
    betas = table.indices_of_type(pi2)
    third_ok = np.array([t == pi3 for t in table.types], dtype=bool)

    # toutes les paires valides, sans représentant canonique
    pairs = []
    if len(betas):
        beta_rows = table.perms[betas]
        for a in alphas.tolist():
            # gamma = (alpha beta)^-1 a le type de alpha beta
            products = table.perms[a][beta_rows]
            ok = third_ok[table.index_of(products)]
            for b in betas[ok].tolist():
                if _connected(table.perms[a], table.perms[b]):
                    pairs.append((a, b))

    # orbites sous la conjugaison simultanée par tout S_d
    label = {}
    for pair in pairs:
        if pair in label:
            continue
        a, b = pair
        ca = table.index_of(table.conjugates(table.perms[a])).tolist()
        cb = table.index_of(table.conjugates(table.perms[b])).tolist()
        members = set(zip(ca, cb))
        orbit = min(members)
        for member in members:
            label[member] = orbit
    classes = sorted(set(label.values()))
    rigid = len(classes)

    def quotient(include_mirror):
        orbits = DisjointSet(classes)
        for word in _move_words(datum, include_mirror):
            for a, b in classes:
                alpha, beta = _apply_word(word, table.perms[a], table.perms[b])
                image = (int(table.index_of(alpha)[0]), int(table.index_of(beta)[0]))
                if image not in label:
                    raise InvariantError(f"Oracle: l'image d'une paire sort de la donnée {datum}")
                orbits.union((a, b), label[image])
        return orbits.count()

    counts = OracleCounts(rigid, quotient(False), quotient(True))
    logger.info(f"Oracle {datum}: {counts.rigid}/{counts.flexible}/{counts.very_flexible} "
                f"({len(pairs)} paires)")
    return counts
