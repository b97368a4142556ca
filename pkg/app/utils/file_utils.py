import os

from app.config import Config


def allowed_format(fmt, allowed=None):
    """
    Vérifier si le format de sortie est autorisé

    Args:
        fmt: Nom du format ('dot', 'json')
        allowed: Ensemble de formats (par défaut: Config.ALLOWED_FORMATS)

    Returns:
        Boolean: True si le format est autorisé, False sinon
    """
    allowed = Config.ALLOWED_FORMATS if allowed is None else allowed
    return bool(fmt) and fmt.lower() in allowed


def ensure_folder(folder):
    """Créer le dossier de sortie s'il n'existe pas"""
    os.makedirs(folder, exist_ok=True)
    return folder
