import os
import sys

from app import create_app
from app.cli import main

# Déterminer l'environnement
env = os.environ.get('HURWITZ_ENV', 'dev')

# Créer l'application
app = create_app()

if __name__ == '__main__':
    app.logger.debug(f"Environnement: {env}")
    sys.exit(main(app))
