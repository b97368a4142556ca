"""Exceptions de l'application.

Les services lèvent ces exceptions; la couche de commandes les traduit en
code de sortie (voir app/commands/__init__.py).
"""


class HurwitzError(Exception):
    """Classe de base de toutes les erreurs métier"""


class ParseError(HurwitzError, ValueError):
    """Texte mal formé (partition, permutation, donnée, document JSON)"""


class PermutationError(HurwitzError, ValueError):
    """Opération invalide sur des permutations (degrés différents, images invalides...)"""


class DatumError(HurwitzError, ValueError):
    """Donnée de ramification incompatible ou hors du domaine supporté"""


class DegreeTooLargeError(DatumError):
    """Degré au-delà de la limite configurée"""


class InvariantError(HurwitzError, RuntimeError):
    """Violation d'un invariant interne (signale un bug)"""
