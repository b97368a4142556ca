"""
Dessins d'enfants explicites: cartes combinatoires bipartites, export DOT et JSON
"""

import json
import logging
import os
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from app.errors import InvariantError, ParseError
from app.services.datum_service import BranchDatum
from app.services.rigid_service import ConstellationPair
from app.utils.file_utils import ensure_folder

logger = logging.getLogger(__name__)

Cycles = Tuple[Tuple[int, ...], ...]

JSON_FIELDS = ("black", "degree", "faces", "genus", "white")


@dataclass(frozen=True)
class CombinatorialMap:
    """
    Carte bipartite plongée

    Les arêtes sont numérotées 0..d-1; chaque sommet (ou région) est la liste
    cyclique de ses arêtes, dans l'ordre de rotation.
    """

    degree: int
    black: Cycles
    white: Cycles
    faces: Cycles
    genus: int

    @property
    def euler_characteristic(self) -> int:
        return len(self.black) + len(self.white) - self.degree + len(self.faces)

    def check(self) -> "CombinatorialMap":
        """Vérifier la formule d'Euler et que chaque arête a un sommet de chaque couleur"""
        if self.euler_characteristic != 2 - 2 * self.genus:
            raise InvariantError(
                f"Formule d'Euler: {self.euler_characteristic} != 2 - 2*{self.genus}"
            )
        edges = list(range(self.degree))
        for name, cycles in (("noirs", self.black), ("blancs", self.white), ("régions", self.faces)):
            if sorted(e for c in cycles for e in c) != edges:
                raise InvariantError(f"Les cycles {name} ne partitionnent pas les arêtes")
        return self


def _lengths(cycles: Cycles) -> List[int]:
    return sorted((len(c) for c in cycles), reverse=True)


def to_map(pair: ConstellationPair, datum: BranchDatum) -> CombinatorialMap:
    """
    Construire la carte d'une paire

    Sommets noirs = cycles de alpha, blancs = cycles de beta, régions = cycles
    de gamma. Le genre vient de la donnée et est revérifié par Euler.
    """
    cmap = CombinatorialMap(
        degree=pair.degree,
        black=tuple(pair.alpha.cycles()),
        white=tuple(pair.beta.cycles()),
        faces=tuple(pair.gamma.cycles()),
        genus=datum.cover_genus,
    ).check()
    expected = [list(pi.parts) for pi in datum.partitions]
    found = [_lengths(cmap.black), _lengths(cmap.white), _lengths(cmap.faces)]
    if found != expected:
        raise InvariantError(f"Valences {found} différentes de la donnée {datum}")
    return cmap


def _rotation(cycle: Sequence[int]) -> str:
    return ",".join(str(e) for e in cycle)


def emit_dot(cmap: CombinatorialMap, name: str = "dessin") -> str:
    """
    Multigraphe au format DOT

    Le plongement est conservé: l'attribut "rot" de chaque sommet donne
    l'ordre cyclique de ses arêtes, et chaque arête porte son numéro ("key").
    """
    black_of = {e: i for i, c in enumerate(cmap.black) for e in c}
    white_of = {e: i for i, c in enumerate(cmap.white) for e in c}

    lines = [
        f"graph {name} {{",
        f'  graph [degree={cmap.degree}, genus={cmap.genus}, faces="'
        + ";".join(_rotation(f) for f in cmap.faces) + '"];',
        '  node [shape=circle, label=""];',
    ]
    for i, cycle in enumerate(cmap.black):
        lines.append(f'  b{i} [style=filled, fillcolor=black, rot="{_rotation(cycle)}"];')
    for i, cycle in enumerate(cmap.white):
        lines.append(f'  w{i} [style=solid, fillcolor=white, rot="{_rotation(cycle)}"];')
    for e in range(cmap.degree):
        lines.append(f'  b{black_of[e]} -- w{white_of[e]} [key={e}, label="{e + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_json(cmap: CombinatorialMap) -> str:
    document = {
        "degree": cmap.degree,
        "black": [list(c) for c in cmap.black],
        "white": [list(c) for c in cmap.white],
        "faces": [list(c) for c in cmap.faces],
        "genus": cmap.genus,
    }
    return json.dumps(document, sort_keys=True) + "\n"


def parse_json(text: str) -> CombinatorialMap:
    """Relire un document produit par emit_json"""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON invalide: {e}") from None
    if not isinstance(document, dict) or tuple(sorted(document)) != JSON_FIELDS:
        raise ParseError(f"Champs attendus: {', '.join(JSON_FIELDS)}")
    try:
        cmap = CombinatorialMap(
            degree=int(document["degree"]),
            black=tuple(tuple(int(e) for e in c) for c in document["black"]),
            white=tuple(tuple(int(e) for e in c) for c in document["white"]),
            faces=tuple(tuple(int(e) for e in c) for c in document["faces"]),
            genus=int(document["genus"]),
        )
    except (TypeError, ValueError) as e:
        raise ParseError(f"Document de carte mal formé: {e}") from None
    try:
        return cmap.check()
    except InvariantError as e:
        raise ParseError(str(e)) from None


def write_maps(maps: Sequence[CombinatorialMap], folder: str, fmt: str) -> List[str]:
    """
    Écrire une carte par fichier class_<i>.<fmt> (i à partir de 1)

    Returns:
        Chemins écrits
    """
    ensure_folder(folder)
    paths = []
    for i, cmap in enumerate(maps, 1):
        text = emit_dot(cmap, name=f"class_{i}") if fmt == "dot" else emit_json(cmap)
        path = os.path.join(folder, f"class_{i}.{fmt}")
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        paths.append(path)
    logger.info(f"{len(paths)} dessins écrits dans {folder}")
    return paths
