import logging

from flask import Flask
from flask.logging import default_handler

from app.config import Config


def create_app(config_class=Config):
    """Factory pour créer l'application (configuration + journal)"""
    app = Flask(__name__)
    app.config.from_object(config_class)

    # Journal sur la sortie d'erreur: la sortie standard est réservée aux résultats
    default_handler.setFormatter(logging.Formatter(app.config['LOG_FORMAT']))
    app.logger.setLevel(app.config['LOG_LEVEL'])

    return app
