"""
Commandes de la ligne de commande

Chaque commande rend un tuple (texte, code de sortie), comme les services
rendaient (résultat, code HTTP). Les erreurs métier sont converties ici.
"""

import functools

from app.errors import DatumError, InvariantError, ParseError, PermutationError

EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_INCOMPATIBLE = 2
EXIT_INVARIANT = 3

# Ordre important: DegreeTooLargeError hérite de DatumError
ERROR_CODES = (
    (ParseError, EXIT_PARSE_ERROR),
    (PermutationError, EXIT_PARSE_ERROR),
    (DatumError, EXIT_INCOMPATIBLE),
    (InvariantError, EXIT_INVARIANT),
)


def command(func):
    """Convertir les exceptions métier d'une commande en code de sortie"""
    @functools.wraps(func)
    def wrapper(app, *args, **kwargs):
        try:
            return func(app, *args, **kwargs)
        except tuple(cls for cls, _ in ERROR_CODES) as e:
            code = next(code for cls, code in ERROR_CODES if isinstance(e, cls))
            app.logger.error(f"{func.__name__}: {e}")
            return f"Erreur: {e}", code
    return wrapper
