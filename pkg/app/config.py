import os

class Config:
    """Configuration de base de l'application"""
    # Dossier de sortie des dessins (DOT / JSON)
    OUTPUT_FOLDER = os.environ.get('HURWITZ_OUTPUT_FOLDER', 'data/dessins')
    ALLOWED_FORMATS = {'dot', 'json'}

    # Limites
    MAX_DEGREE = 16          # les clés canoniques tiennent sur un octet par point
    ORACLE_MAX_DEGREE = 6    # 6!^2 = 518400 paires au plus

    # Parallélisme par défaut de l'énumération rigide et du balayage
    JOBS = 1

    # Journalisation
    LOG_LEVEL = 'INFO'
    LOG_FORMAT = '%(asctime)s %(levelname)s [%(name)s] %(message)s'
    SHOW_PROGRESS = True

class DevelopmentConfig(Config):
    """Configuration de développement"""

class TestingConfig(Config):
    """Configuration de test"""
    OUTPUT_FOLDER = 'tests/data/dessins'
    LOG_LEVEL = 'WARNING'
    SHOW_PROGRESS = False

class ProductionConfig(Config):
    """Configuration de production"""
    LOG_LEVEL = 'WARNING'

# Configuration par défaut
config_by_name = {
    'dev': DevelopmentConfig,
    'test': TestingConfig,
    'prod': ProductionConfig,
}

# Configuration active (basée sur une variable d'environnement ou dev par défaut)
Config = config_by_name[os.environ.get('HURWITZ_ENV', 'dev')]
