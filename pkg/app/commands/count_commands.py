import json

from app.commands import EXIT_INVARIANT, EXIT_OK, command
from app.errors import DegreeTooLargeError
from app.services.datum_service import parse_datum
from app.services.oracle_service import brute_force_counts
from app.services.report_service import build_report
from app.services.rigid_service import enumerate_rigid_classes
from app.utils.text_utils import format_permutation


def load_datum(app, text):
    """Lire une donnée et vérifier le plafond de degré configuré"""
    datum = parse_datum(text)
    if datum.degree > app.config['MAX_DEGREE']:
        raise DegreeTooLargeError(
            f"Degré {datum.degree} au-delà de la limite {app.config['MAX_DEGREE']}"
        )
    return datum


@command
def cmd_check(app, datum_text):
    """Vérifier la compatibilité d'une donnée et donner le genre du revêtement"""
    datum = load_datum(app, datum_text)
    lines = [
        f"datum: {datum}",
        "compatible: yes",
        f"cover genus: {datum.cover_genus}",
        f"euler characteristic: {datum.euler_characteristic}",
        f"branching points: {len(datum.branching_points)} of {datum.n}",
    ]
    if datum.is_degenerate:
        lines.append("degenerate: yes (an all-ones partition marks an unbranched point)")
    return "\n".join(lines), EXIT_OK


@command
def cmd_count(app, datum_text, fmt='table', jobs=None):
    """Compter les classes rigides, flexibles et très flexibles"""
    datum = load_datum(app, datum_text)
    report = build_report(datum, jobs=jobs or app.config['JOBS'])
    if fmt == 'json':
        return json.dumps(report.to_dict(), sort_keys=True, indent=2), EXIT_OK
    return report.render_table(), EXIT_OK


def format_class_line(pair):
    return (f"alpha={format_permutation(pair.alpha)}; "
            f"beta={format_permutation(pair.beta)}; "
            f"gamma={format_permutation(pair.gamma)}")


@command
def cmd_classes(app, datum_text, jobs=None):
    """Lister un représentant par classe rigide"""
    datum = load_datum(app, datum_text)
    reps = enumerate_rigid_classes(datum, jobs=jobs or app.config['JOBS'])
    return "\n".join(format_class_line(pair) for pair in reps), EXIT_OK


def _format_counts(name, rigid, flexible, very_flexible):
    return f"{name}: rigid={rigid} flexible={flexible} very_flexible={very_flexible}"


@command
def cmd_oracle(app, datum_text, compare=False):
    """Comptage par force brute (degré <= 6), éventuellement comparé au calcul rapide"""
    datum = load_datum(app, datum_text)
    counts = brute_force_counts(datum, max_degree=app.config['ORACLE_MAX_DEGREE'])
    lines = [_format_counts("oracle", *counts)]
    if not compare:
        return "\n".join(lines), EXIT_OK

    report = build_report(datum, jobs=app.config['JOBS'])
    main_counts = (report.rigid, report.flexible, report.very_flexible)
    lines.append(_format_counts("main", *main_counts))
    if tuple(counts) != main_counts:
        app.logger.error(f"Désaccord oracle / calcul rapide sur {datum}")
        lines.append("match: no")
        return "\n".join(lines), EXIT_INVARIANT
    lines.append("match: yes")
    return "\n".join(lines), EXIT_OK


def register(subparsers):
    """Enregistrer les sous-commandes de comptage"""
    check_parser = subparsers.add_parser('check', help='Vérifier la compatibilité d\'une donnée')
    check_parser.add_argument('datum', help='Donnée "d; pi1; pi2; pi3"')
    check_parser.set_defaults(handler=lambda app, args: cmd_check(app, args.datum))

    count_parser = subparsers.add_parser('count', help='Compter les trois classes de revêtements')
    count_parser.add_argument('datum', help='Donnée "d; pi1; pi2; pi3"')
    count_parser.add_argument('--format', dest='fmt', choices=['table', 'json'], default='table')
    count_parser.add_argument('--jobs', type=int, default=None, help='Nombre de processus')
    count_parser.set_defaults(handler=lambda app, args: cmd_count(app, args.datum, args.fmt, args.jobs))

    classes_parser = subparsers.add_parser('classes', help='Lister les représentants des classes rigides')
    classes_parser.add_argument('datum', help='Donnée "d; pi1; pi2; pi3"')
    classes_parser.add_argument('--jobs', type=int, default=None, help='Nombre de processus')
    classes_parser.set_defaults(handler=lambda app, args: cmd_classes(app, args.datum, args.jobs))

    oracle_parser = subparsers.add_parser('oracle', help='Comptage par force brute (degré <= 6)')
    oracle_parser.add_argument('datum', help='Donnée "d; pi1; pi2; pi3"')
    oracle_parser.add_argument('--compare', action='store_true',
                               help='Comparer avec le calcul rapide')
    oracle_parser.set_defaults(handler=lambda app, args: cmd_oracle(app, args.datum, args.compare))
