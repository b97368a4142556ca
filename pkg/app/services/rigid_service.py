"""
Énumération des classes rigides de dessins d'enfants

Un dessin est codé par une paire de permutations (alpha, beta) sur les d
arêtes: alpha tourne autour des sommets noirs, beta autour des sommets
blancs, et gamma = (alpha beta)^-1 tourne autour des régions. Deux paires
sont dans la même classe rigide si elles sont simultanément conjuguées.

La recherche fixe la permutation du point dont le centralisateur est le plus
petit (quitte à faire tourner les rôles), puis ramène chaque classe trouvée
dans l'ordre de la donnée. Les représentants rendus ont toujours alpha égal
au représentant canonique de pi_1.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, partial
from multiprocessing import Pool
from typing import Iterator, List, Optional, Sequence, Tuple

from app.errors import DatumError, InvariantError
from app.services.datum_service import BranchDatum, check_compatibility
from app.utils.permutation_utils import (
    Partition,
    Permutation,
    canonical_class_rep,
    centralizer_order,
    compose,
    cycle_type,
    inverse,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstellationPair:
    """Paire (alpha, beta) codant un dessin; gamma en est déduite"""

    alpha: Permutation
    beta: Permutation

    @cached_property
    def gamma(self) -> Permutation:
        return inverse(compose(self.alpha, self.beta))

    @property
    def degree(self) -> int:
        return self.alpha.degree

    def cycle_types(self) -> Tuple[Partition, Partition, Partition]:
        return cycle_type(self.alpha), cycle_type(self.beta), cycle_type(self.gamma)

    def rotated(self) -> "ConstellationPair":
        """(beta, gamma): les types passent de (pi1, pi2, pi3) à (pi2, pi3, pi1)"""
        return ConstellationPair(self.beta, self.gamma)

    def validate(self, datum: Optional[BranchDatum] = None) -> "ConstellationPair":
        """
        Revérifier les invariants de la paire

        Raises:
            InvariantError: produit non trivial, action non transitive ou
                types cycliques différents de ceux de la donnée
        """
        if self.alpha.degree != self.beta.degree:
            raise InvariantError("alpha et beta n'ont pas le même degré")
        if not compose(self.alpha, compose(self.beta, self.gamma)).is_identity():
            raise InvariantError("alpha beta gamma n'est pas l'identité")
        if not is_transitive(self):
            raise InvariantError("Le groupe engendré par alpha et beta n'est pas transitif")
        if datum is not None:
            expected = tuple(datum.partitions)
            if self.cycle_types() != expected:
                found = ", ".join(f"[{pi}]" for pi in self.cycle_types())
                raise InvariantError(f"Types cycliques {found} différents de la donnée {datum}")
        return self


@dataclass(frozen=True, order=True)
class RigidClassKey:
    """Sérialisation minimale de (alpha, beta) sur les conjugaisons permises"""

    data: bytes

    def __str__(self):
        return self.data.hex()


def _orbit_is_everything(generators: Sequence[Sequence[int]], degree: int) -> bool:
    seen = [False] * degree
    seen[0] = True
    todo = [0]
    count = 1
    while todo:
        x = todo.pop()
        for images in generators:
            y = images[x]
            if not seen[y]:
                seen[y] = True
                count += 1
                todo.append(y)
    return count == degree


def is_transitive(pair: ConstellationPair) -> bool:
    """Vrai si l'orbite de 0 sous alpha et beta est {0, ..., d-1}"""
    return _orbit_is_everything((pair.alpha.images, pair.beta.images), pair.degree)


def _aligning_images(alpha: Permutation) -> Tuple[int, ...]:
    """
    Conjugateur g tel que g alpha g^-1 soit le représentant canonique

    Cycles rangés par longueur décroissante, puis par plus petit élément.
    """
    cycles = sorted(alpha.cycles(), key=lambda c: (-len(c), c[0]))
    images = [0] * alpha.degree
    position = 0
    for cycle in cycles:
        for x in cycle:
            images[x] = position
            position += 1
    return tuple(images)


def _conjugate_images(p: Sequence[int], g: Sequence[int]) -> Tuple[int, ...]:
    images = [0] * len(p)
    for x, y in enumerate(p):
        images[g[x]] = g[y]
    return tuple(images)


def _relabel_from(alpha: Sequence[int], beta: Sequence[int], start: int) -> Tuple[int, ...]:
    """
    Renuméroter les points dans l'ordre de parcours depuis start

    Le parcours suit alpha puis beta depuis chaque point déjà numéroté; le
    résultat (alpha, beta renumérotées, concaténées) ne dépend que de la
    classe de conjugaison et de l'image de start.
    """
    degree = len(alpha)
    label = [-1] * degree
    label[start] = 0
    order = [start]
    for x in order:
        for y in (alpha[x], beta[x]):
            if label[y] == -1:
                label[y] = len(order)
                order.append(y)
    if len(order) != degree:
        raise InvariantError("Clé demandée pour une paire non transitive")
    relabelled = [0] * (2 * degree)
    for x in range(degree):
        relabelled[label[x]] = label[alpha[x]]
        relabelled[degree + label[x]] = label[beta[x]]
    return tuple(relabelled)


def class_key(pair: ConstellationPair) -> RigidClassKey:
    """
    Clé canonique de la classe rigide d'une paire

    La plus petite renumérotation par parcours, sur les points de départ pris
    dans les plus longs cycles de alpha, est ensuite conjuguée pour amener
    alpha sur son représentant canonique. Le centralisateur n'est jamais
    parcouru. La clé ne dépend que de la classe de conjugaison simultanée.
    """
    cycles = pair.alpha.cycles()
    longest = max(len(c) for c in cycles)
    starts = [x for c in cycles if len(c) == longest for x in c]
    best = min(_relabel_from(pair.alpha.images, pair.beta.images, s) for s in starts)

    d = pair.degree
    alpha, beta = best[:d], best[d:]
    g = _aligning_images(Permutation(alpha))
    return RigidClassKey(bytes(_conjugate_images(alpha, g) + _conjugate_images(beta, g)))


class BetaSearch:
    """
    Recherche avec retour arrière des beta compatibles avec un alpha fixé

    beta est construite cycle par cycle: chaque cycle part du plus petit point
    libre et sa longueur est choisie parmi les parties restantes de pi_2, en
    ordre décroissant. Le produit partiel delta = alpha beta est suivi à chaque
    affectation; un cycle de delta qui se ferme doit avoir une longueur encore
    disponible dans pi_3, et une chaîne ouverte ne peut dépasser la plus grande
    partie restante.
    """

    def __init__(self, alpha: Sequence[int], beta_type: Partition, gamma_type: Partition):
        self.alpha = tuple(alpha)
        self.degree = len(self.alpha)
        self.beta_left = Counter(beta_type.parts)
        self.gamma_left = Counter(gamma_type.parts)
        self.beta = [-1] * self.degree
        self.placed = [False] * self.degree
        self.delta = [-1] * self.degree
        self.delta_inv = [-1] * self.degree
        self.closed = [0] * self.degree

    def first_choices(self) -> List[Tuple[int, int]]:
        """Premiers points de choix: (longueur du cycle de 0, beta(0))"""
        choices = []
        for length in sorted(self.beta_left, reverse=True):
            if length == 1:
                choices.append((1, 0))
            else:
                choices.extend((length, x) for x in range(1, self.degree))
        return choices

    def search(self, prefix: Optional[Tuple[int, int]] = None) -> Iterator[Tuple[int, ...]]:
        """Générer les beta valides (transitivité comprise), éventuellement sous un préfixe"""
        for beta in self._open_cycle(prefix):
            if _orbit_is_everything((self.alpha, beta), self.degree):
                yield beta

    def _lengths(self) -> List[int]:
        return sorted((k for k, c in self.beta_left.items() if c > 0), reverse=True)

    def _open_cycle(self, prefix=None):
        try:
            start = self.placed.index(False)
        except ValueError:
            yield tuple(self.beta)
            return
        for length in self._lengths():
            if prefix is not None and length != prefix[0]:
                continue
            self.beta_left[length] -= 1
            self.placed[start] = True
            yield from self._grow(start, start, length - 1, prefix[1] if prefix else None)
            self.placed[start] = False
            self.beta_left[length] += 1

    def _grow(self, start, last, remaining, forced=None):
        if remaining == 0:
            if self._assign(last, start):
                yield from self._open_cycle()
                self._unassign(last)
            return
        for x in range(start + 1, self.degree):
            if self.placed[x] or (forced is not None and x != forced):
                continue
            if not self._assign(last, x):
                continue
            self.placed[x] = True
            yield from self._grow(start, x, remaining - 1)
            self.placed[x] = False
            self._unassign(last)

    def _max_gamma_part(self) -> int:
        return max((k for k, c in self.gamma_left.items() if c > 0), default=0)

    def _assign(self, y: int, z: int) -> bool:
        w = self.alpha[z]
        self.beta[y] = z
        self.delta[y] = w
        self.delta_inv[w] = y

        # suivre la chaîne de delta à partir de w
        t, steps = w, 1
        while t != y and self.delta[t] != -1:
            t = self.delta[t]
            steps += 1
        if t == y:
            if self.gamma_left[steps] > 0:
                self.gamma_left[steps] -= 1
                self.closed[y] = steps
                return True
        else:
            back, s = 0, y
            while self.delta_inv[s] != -1:
                s = self.delta_inv[s]
                back += 1
            if back + steps + 1 <= self._max_gamma_part():
                return True
        self._clear(y, w)
        return False

    def _unassign(self, y: int):
        if self.closed[y]:
            self.gamma_left[self.closed[y]] += 1
            self.closed[y] = 0
        self._clear(y, self.delta[y])

    def _clear(self, y: int, w: int):
        self.beta[y] = -1
        self.delta[y] = -1
        self.delta_inv[w] = -1


def _class_keys_under_prefix(prefix, alpha, beta_type, gamma_type) -> List[bytes]:
    """Tâche d'un worker: clés des classes rencontrées sous un préfixe"""
    fixed = Permutation(alpha)
    search = BetaSearch(alpha, beta_type, gamma_type)
    keys = {class_key(ConstellationPair(fixed, Permutation(beta))).data
            for beta in search.search(prefix)}
    return sorted(keys)


def search_shift(datum: BranchDatum) -> int:
    """
    Rotation des rôles sous laquelle chercher

    Le point placé en tête est celui dont le centralisateur est le plus petit;
    à égalité, la rotation la plus petite.
    """
    orders = [centralizer_order(pi) for pi in datum.partitions]
    return min(range(3), key=lambda k: (orders[k], k))


def enumerate_rigid_classes(datum: BranchDatum, jobs: int = 1) -> List[ConstellationPair]:
    """
    Un représentant par classe rigide de la donnée

    Args:
        datum: Donnée compatible à 3 points
        jobs: Nombre de processus; le résultat n'en dépend pas

    Returns:
        Représentants triés par clé canonique, alpha = représentant canonique de pi_1
    """
    if datum.n != 3:
        raise DatumError(f"L'énumération demande 3 points de ramification (n = {datum.n})")
    shift = search_shift(datum)
    parts = datum.partitions[shift:] + datum.partitions[:shift]
    frame = check_compatibility(datum.degree, parts) if shift else datum
    pi1, pi2, pi3 = frame.partitions
    alpha = canonical_class_rep(pi1)

    prefixes = BetaSearch(alpha.images, pi2, pi3).first_choices()
    task = partial(_class_keys_under_prefix, alpha=alpha.images, beta_type=pi2, gamma_type=pi3)
    logger.debug(f"{datum}: recherche sur {frame}, {len(prefixes)} préfixes, {jobs} processus")

    if jobs > 1 and len(prefixes) > 1:
        with Pool(processes=min(jobs, len(prefixes))) as pool:
            batches = pool.map(task, prefixes)
    else:
        batches = [task(prefix) for prefix in prefixes]

    d = datum.degree
    keys = set()
    for key in {key for batch in batches for key in batch}:
        pair = ConstellationPair(Permutation(tuple(key[:d])), Permutation(tuple(key[d:])))
        for _ in range((3 - shift) % 3):
            pair = pair.rotated()
        keys.add(class_key(pair).data)

    representatives = []
    for key in sorted(keys):
        pair = ConstellationPair(Permutation(tuple(key[:d])), Permutation(tuple(key[d:])))
        representatives.append(pair.validate(datum))
    logger.info(f"{datum}: {len(representatives)} classes rigides")
    return representatives
