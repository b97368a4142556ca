import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from app.errors import DatumError
from app.utils.permutation_utils import Partition, partitions_of
from app.utils.text_utils import format_datum_text, parse_datum_text

logger = logging.getLogger(__name__)

# La surface de base est toujours la sphère (chi = 2)
SPHERE = "sphere"


@dataclass(frozen=True)
class BranchDatum:
    """
    Donnée de ramification abstraite au-dessus de la sphère

    Le genre de la surface revêtante est déduit de la relation de
    Riemann-Hurwitz par check_compatibility.
    """

    degree: int
    partitions: Tuple[Partition, ...]
    cover_genus: int
    base: str = SPHERE

    @property
    def n(self) -> int:
        return len(self.partitions)

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.cover_genus

    @property
    def is_degenerate(self) -> bool:
        """Vrai si l'un des points marqués n'est pas ramifié"""
        return any(pi.is_trivial for pi in self.partitions)

    @property
    def branching_points(self) -> List[int]:
        return [j for j, pi in enumerate(self.partitions) if not pi.is_trivial]

    def canonical(self) -> "BranchDatum":
        """Même donnée, partitions en ordre lexicographique décroissant"""
        ordered = tuple(sorted(self.partitions, reverse=True))
        return BranchDatum(self.degree, ordered, self.cover_genus, self.base)

    def to_text(self) -> str:
        return format_datum_text(self.degree, self.partitions)

    def __str__(self):
        return self.to_text()


def check_compatibility(degree: int, partitions: Sequence[Partition],
                        expected_genus: Optional[int] = None) -> BranchDatum:
    """
    Vérifier la relation de Riemann-Hurwitz et calculer le genre du revêtement

    Args:
        degree: Degré d du revêtement
        partitions: Partitions pi_1..pi_n de d
        expected_genus: Genre annoncé par l'appelant, vérifié s'il est fourni

    Returns:
        BranchDatum compatible

    Raises:
        DatumError: somme incorrecte, parité ou genre négatif
    """
    if degree < 1:
        raise DatumError(f"Le degré doit être positif (reçu {degree})")
    if not partitions:
        raise DatumError("Il faut au moins une partition")

    partitions = tuple(partitions)
    for j, pi in enumerate(partitions, 1):
        if pi.total != degree:
            raise DatumError(f"La partition pi_{j} = [{pi}] a pour somme {pi.total}, pas {degree}")

    n = len(partitions)
    lengths = sum(pi.length for pi in partitions)
    twice_genus = degree * (n - 2) - lengths + 2
    if twice_genus % 2:
        raise DatumError(
            f"Relation de Riemann-Hurwitz: chi(revêtement) = {lengths + degree * (2 - n)} est impair"
        )
    genus = twice_genus // 2
    if genus < 0:
        raise DatumError(f"Relation de Riemann-Hurwitz: genre négatif ({genus})")
    if expected_genus is not None and expected_genus != genus:
        raise DatumError(f"Genre annoncé {expected_genus}, mais la relation impose {genus}")

    datum = BranchDatum(degree, partitions, genus)
    if datum.is_degenerate:
        logger.debug(f"Donnée dégénérée (point non ramifié): {datum}")
    return datum


def parse_datum(text: str, expected_genus: Optional[int] = None) -> BranchDatum:
    """Lire et valider une donnée écrite "d; pi1; pi2; pi3" """
    degree, partitions = parse_datum_text(text)
    return check_compatibility(degree, partitions, expected_genus)


def enumerate_compatible_data(degree: int) -> List[BranchDatum]:
    """
    Toutes les données compatibles à 3 points de ramification en degré donné

    Les partitions triviales sont exclues, et chaque triple n'apparaît qu'une
    fois, dans l'ordre lexicographique décroissant.
    """
    if degree < 2:
        raise DatumError(f"Le balayage demande un degré >= 2 (reçu {degree})")

    candidates = [pi for pi in partitions_of(degree) if not pi.is_trivial]
    data = []
    for triple in itertools.combinations_with_replacement(candidates, 3):
        try:
            data.append(check_compatibility(degree, triple))
        except DatumError:
            continue
    logger.info(f"Degré {degree}: {len(data)} données compatibles")
    return data
