"""
Ligne de commande: comptage des revêtements ramifiés de la sphère à 3 points
"""

import argparse
import sys

from app.commands import EXIT_OK, EXIT_PARSE_ERROR, census_commands, count_commands


class CommandParser(argparse.ArgumentParser):
    """Analyseur dont les erreurs d'usage sortent avec le code des textes mal formés"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE_ERROR, f"{self.prog}: erreur: {message}\n")


def build_parser():
    parser = CommandParser(
        prog='hurwitz',
        description='Nombres de Hurwitz rigides, flexibles et très flexibles '
                    'via les dessins d\'enfants',
        epilog='Les données égales à l\'ordre des partitions près ont les mêmes comptages; '
               'scan ne les liste qu\'une fois.',
    )
    subparsers = parser.add_subparsers(dest='command', help='Commande à exécuter')

    # Enregistrer les commandes
    count_commands.register(subparsers)
    census_commands.register(subparsers)
    return parser


def main(app, argv=None):
    """Fonction principale: rend le code de sortie"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help sort avec 0, une erreur d'usage avec EXIT_PARSE_ERROR
        return EXIT_OK if e.code is None else e.code

    # Si aucune commande n'est fournie, afficher l'aide
    if not args.command:
        parser.print_help()
        return EXIT_OK

    output, code = args.handler(app, args)
    if code == EXIT_OK:
        print(output)
    else:
        print(output, file=sys.stderr)
    return code
