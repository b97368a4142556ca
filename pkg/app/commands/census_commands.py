import sys
from multiprocessing import Pool

from tabulate import tabulate
from tqdm import tqdm

from app.commands import EXIT_OK, command
from app.commands.count_commands import load_datum
from app.errors import DegreeTooLargeError, ParseError
from app.services.datum_service import enumerate_compatible_data
from app.services.dessin_service import to_map, write_maps
from app.services.report_service import build_report, summarize_patterns
from app.services.rigid_service import enumerate_rigid_classes
from app.utils.file_utils import allowed_format


@command
def cmd_dessins(app, datum_text, out=None, fmt='dot', jobs=None):
    """Écrire un fichier DOT ou JSON par classe rigide"""
    if not allowed_format(fmt, app.config['ALLOWED_FORMATS']):
        raise ParseError(f"Format non autorisé: {fmt}")
    datum = load_datum(app, datum_text)
    reps = enumerate_rigid_classes(datum, jobs=jobs or app.config['JOBS'])
    maps = [to_map(pair, datum) for pair in reps]
    paths = write_maps(maps, out or app.config['OUTPUT_FOLDER'], fmt.lower())
    return "\n".join(paths), EXIT_OK


def is_prime(n):
    if n < 2:
        return False
    return all(n % k for k in range(2, int(n ** 0.5) + 1))


def _scan_entry(datum):
    """Tâche d'un worker du balayage"""
    return build_report(datum, jobs=1)


@command
def cmd_scan(app, degree, jobs=None):
    """
    Compter toutes les données compatibles à 3 points d'un degré donné

    Les données exceptionnelles (aucune réalisation) sont listées en premier,
    puis la table complète, puis le résumé.
    """
    if degree > app.config['MAX_DEGREE']:
        raise DegreeTooLargeError(f"Degré {degree} au-delà de la limite {app.config['MAX_DEGREE']}")
    data = enumerate_compatible_data(degree)
    jobs = jobs or app.config['JOBS']
    progress = dict(total=len(data), desc=f"degree {degree}", file=sys.stderr,
                    disable=not app.config['SHOW_PROGRESS'])

    if jobs > 1 and len(data) > 1:
        with Pool(processes=jobs) as pool:
            reports = list(tqdm(pool.imap(_scan_entry, data), **progress))
    else:
        reports = [_scan_entry(datum) for datum in tqdm(data, **progress)]

    exceptional = [r for r in reports if r.is_exceptional]
    prime = is_prime(degree)
    if exceptional and prime:
        app.logger.warning(f"Donnée exceptionnelle en degré premier {degree}: "
                           f"contre-exemple à la conjecture")

    lines = ["exceptional data:"]
    lines.extend(f"  {r.datum}  ({r.rigid}, {r.flexible}, {r.very_flexible})" for r in exceptional)
    if not exceptional:
        lines.append("  none")
    lines.append("")

    rows = [[r.datum, r.genus, r.rigid, r.flexible, r.very_flexible, r.relation,
             "exceptional" if r.is_exceptional else "realizable"] for r in reports]
    lines.append(tabulate(rows, headers=["datum", "genus", "rigid", "flexible",
                                         "very_flexible", "relation", "status"],
                          tablefmt="pretty", colalign=("left",) + ("right",) * 4 + ("left", "left")))
    lines.append("")
    patterns = summarize_patterns([r for r in reports if not r.is_exceptional])
    lines.append("relations: " + ", ".join(f"{shape} {n}" for shape, n in patterns.items()))
    lines.append(f"degree {degree} prime: {'yes' if prime else 'no'}")
    lines.append(f"exceptional: {len(exceptional)} / total: {len(reports)}")
    app.logger.info(f"Balayage du degré {degree}: {len(exceptional)} exceptionnelles sur {len(reports)}")
    return "\n".join(lines), EXIT_OK


def register(subparsers):
    """Enregistrer les sous-commandes de recensement"""
    dessins_parser = subparsers.add_parser('dessins', help='Écrire les dessins des classes rigides')
    dessins_parser.add_argument('datum', help='Donnée "d; pi1; pi2; pi3"')
    dessins_parser.add_argument('--out', default=None, help='Dossier de sortie')
    dessins_parser.add_argument('--format', dest='fmt', choices=['dot', 'json'], default='dot')
    dessins_parser.add_argument('--jobs', type=int, default=None, help='Nombre de processus')
    dessins_parser.set_defaults(
        handler=lambda app, args: cmd_dessins(app, args.datum, args.out, args.fmt, args.jobs))

    scan_parser = subparsers.add_parser('scan', help='Balayer toutes les données d\'un degré')
    scan_parser.add_argument('--degree', type=int, required=True, help='Degré d >= 2')
    scan_parser.add_argument('--jobs', type=int, default=None, help='Nombre de processus')
    scan_parser.set_defaults(handler=lambda app, args: cmd_scan(app, args.degree, args.jobs))
