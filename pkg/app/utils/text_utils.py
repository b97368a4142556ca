"""
Syntaxes textuelles des objets manipulés par la ligne de commande

    partition:    "3,2,1,1"
    permutation:  "(1 2 3)(4 5)"   points 1-indexés, points fixes omis
    donnée:       "7; 3,2,1,1; 3,2,1,1; 7"
"""

import re
from typing import List, Tuple

from app.errors import ParseError, PermutationError
from app.utils.permutation_utils import Partition, Permutation

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_partition(text: str) -> Partition:
    """
    Lire une partition écrite comme liste d'entiers séparés par des virgules

    Args:
        text: Texte du type "3,2,1,1" (l'ordre des parties est libre)

    Returns:
        Partition normalisée
    """
    fragments = [f.strip() for f in text.split(",")]
    if not fragments or any(not f for f in fragments):
        raise ParseError(f"Partition mal formée: '{text}'")
    try:
        parts = [int(f) for f in fragments]
    except ValueError:
        raise ParseError(f"Partition mal formée: '{text}'") from None
    try:
        return Partition(tuple(parts))
    except PermutationError as e:
        raise ParseError(str(e)) from None


def format_partition(pi: Partition) -> str:
    return ",".join(str(p) for p in pi.parts)


def parse_permutation(text: str, degree: int) -> Permutation:
    """
    Lire une permutation en notation cyclique 1-indexée

    Args:
        text: Cycles disjoints, par exemple "(1 2 3)(4 5)"; "()" pour l'identité
        degree: Nombre de points

    Returns:
        Permutation 0-indexée
    """
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise ParseError(f"Notation cyclique mal formée: '{text}'")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        try:
            cycles.append([int(t) - 1 for t in tokens])
        except ValueError:
            raise ParseError(f"Cycle mal formé: '({body})'") from None
    try:
        return Permutation.from_cycles(cycles, degree)
    except PermutationError as e:
        raise ParseError(str(e)) from None


def format_permutation(p: Permutation) -> str:
    """Notation cyclique 1-indexée, points fixes omis"""
    cycles = p.cycles(include_fixed=False)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles)


def parse_datum_text(text: str) -> Tuple[int, List[Partition]]:
    """
    Découper le texte d'une donnée de ramification

    Returns:
        Tuple (degré, liste des partitions); la compatibilité n'est pas vérifiée ici
    """
    fields = [f.strip() for f in text.split(";")]
    if len(fields) < 2:
        raise ParseError(f"Donnée mal formée (attendu 'd; pi1; pi2; ...'): '{text}'")
    try:
        degree = int(fields[0])
    except ValueError:
        raise ParseError(f"Degré invalide: '{fields[0]}'") from None
    return degree, [parse_partition(f) for f in fields[1:]]


def format_datum_text(degree: int, partitions) -> str:
    return "; ".join([str(degree)] + [format_partition(pi) for pi in partitions])
