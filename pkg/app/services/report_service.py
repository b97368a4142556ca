"""
Rapport de comptage: les trois nombres de Hurwitz et la table des 12 méthodes
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from tabulate import tabulate

from app.errors import InvariantError
from app.services.datum_service import BranchDatum
from app.services.moves_service import count_flexible, count_very_flexible
from app.services.rigid_service import enumerate_rigid_classes

logger = logging.getLogger(__name__)

# Les 12 méthodes de comptage, en ASCII: R_<marquage><signe>^<marquage><signe>
LABELS = (
    "R", "R_+", "R_*", "R_*+",
    "R^+", "R_+^+", "R_*^+", "R_*+^+",
    "R_*^*", "R_*+^*", "R_*^*+", "R_*+^*+",
)

# Valeur de chaque méthode en fonction de (rigide, flexible, très flexible)
_IDENTITIES = {
    "R": lambda r, f, v: v,
    "R_+": lambda r, f, v: v,
    "R_*+": lambda r, f, v: v,
    "R_*": lambda r, f, v: v,
    "R_+^+": lambda r, f, v: f,
    "R_*+^+": lambda r, f, v: f,
    "R_*+^*+": lambda r, f, v: r,
    "R_*+^*": lambda r, f, v: r,
    "R_*^*": lambda r, f, v: r,
    "R_*^+": lambda r, f, v: 2 * f,
    "R^+": lambda r, f, v: 2 * f,
    "R_*^*+": lambda r, f, v: 2 * r,
}

LEGEND = {
    "R": "all realizations, up to any homeomorphisms",
    "R_+": "positive realizations, up to any homeomorphisms",
    "R_*": "marked realizations, up to any homeomorphisms",
    "R_*+": "marked positive realizations, up to any homeomorphisms",
    "R^+": "all realizations, up to positive homeomorphisms",
    "R_+^+": "positive realizations, up to positive homeomorphisms (flexible)",
    "R_*^+": "marked realizations, up to positive homeomorphisms",
    "R_*+^+": "marked positive realizations, up to positive homeomorphisms",
    "R_*^*": "marked realizations, base map the identity",
    "R_*+^*": "marked positive realizations, base map the identity",
    "R_*^*+": "marked realizations, base map the identity, positive homeomorphisms",
    "R_*+^*+": "marked positive realizations, identity on the base, positive (rigid)",
}

# Nom classique de chacun des trois comptages
CONVENTIONS = {
    "rigid": "Hurwitz numbers as tabulated by Mednykh; rigid equivalence in Lando-Zvonkin",
    "flexible": "flexible equivalence in Lando-Zvonkin",
    "very_flexible": "Hurwitz numbers up to all homeomorphisms, mirror images identified",
}


def twelve_table(rigid: int, flexible: int, very_flexible: int) -> Dict[str, int]:
    """
    Remplir les 12 méthodes à partir des trois comptages distincts

    Raises:
        InvariantError: si rigide >= flexible >= très flexible >= 0 est violé,
            ou si les trois ne s'annulent pas ensemble
    """
    if not rigid >= flexible >= very_flexible >= 0:
        raise InvariantError(f"Comptages incohérents: {rigid} / {flexible} / {very_flexible}")
    if (rigid == 0) != (very_flexible == 0):
        raise InvariantError(f"Les comptages doivent s'annuler ensemble: {rigid} / {very_flexible}")
    return {label: _IDENTITIES[label](rigid, flexible, very_flexible) for label in LABELS}


def relation_pattern(rigid: int, flexible: int, very_flexible: int) -> str:
    """Écriture compacte comme "9>6>4" ou "3=3>2" """
    def sign(x, y):
        return "=" if x == y else ">"
    return (f"{rigid}{sign(rigid, flexible)}{flexible}"
            f"{sign(flexible, very_flexible)}{very_flexible}")


@dataclass(frozen=True)
class CountReport:
    datum: str
    rigid: int
    flexible: int
    very_flexible: int
    genus: int
    degenerate_flag: bool
    table: Dict[str, int] = field(default_factory=dict)
    flexible_orbits: Dict[str, int] = field(default_factory=dict)
    very_flexible_orbits: Dict[str, int] = field(default_factory=dict)

    @property
    def relation(self) -> str:
        return relation_pattern(self.rigid, self.flexible, self.very_flexible)

    @property
    def is_exceptional(self) -> bool:
        return self.rigid == 0

    def to_dict(self) -> Dict:
        return {
            "datum": self.datum,
            "genus": self.genus,
            "degenerate": self.degenerate_flag,
            "rigid": self.rigid,
            "flexible": self.flexible,
            "very_flexible": self.very_flexible,
            "relation": self.relation,
            "table": dict(self.table),
            "flexible_orbits": dict(self.flexible_orbits),
            "very_flexible_orbits": dict(self.very_flexible_orbits),
        }

    def render_table(self) -> str:
        header = [
            f"datum: {self.datum}",
            f"genus: {self.genus}{'  (degenerate)' if self.degenerate_flag else ''}",
            f"rigid: {self.rigid}  flexible: {self.flexible}  very flexible: {self.very_flexible}"
            f"  ({self.relation})",
        ]
        header.extend(f"  {name}: {text}" for name, text in CONVENTIONS.items())
        header.append("")
        rows = [[label, self.table[label], LEGEND[label]] for label in LABELS]
        return "\n".join(header) + tabulate(rows, headers=["method", "count", "meaning"],
                                            tablefmt="pretty", colalign=("left", "right", "left"))


def build_report(datum: BranchDatum, jobs: int = 1) -> CountReport:
    """Compter les trois classes d'une donnée et assembler le rapport"""
    reps = enumerate_rigid_classes(datum, jobs=jobs)
    flexible = count_flexible(reps, datum)
    very_flexible = count_very_flexible(reps, datum)
    table = twelve_table(len(reps), flexible.count, very_flexible.count)
    return CountReport(
        datum=datum.to_text(),
        rigid=len(reps),
        flexible=flexible.count,
        very_flexible=very_flexible.count,
        genus=datum.cover_genus,
        degenerate_flag=datum.is_degenerate,
        table=table,
        flexible_orbits=flexible.to_json_dict(),
        very_flexible_orbits=very_flexible.to_json_dict(),
    )


def summarize_patterns(reports: List[CountReport]) -> Dict[str, int]:
    """Nombre de données par forme de relation (">>", "=>", ...)"""
    tally = {}
    for report in reports:
        shape = "".join(c for c in report.relation if c in "=>")
        tally[shape] = tally.get(shape, 0) + 1
    return dict(sorted(tally.items()))
