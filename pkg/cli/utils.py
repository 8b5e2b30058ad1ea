import csv
import json
import sys
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

from loguru import logger
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.table import Table

from groups import FiniteGroup, UnknownGroupSpec, group_from_spec
from lambdaop import labelled_group

from .schema import GroupFile

console = Console()

NAMED_GROUPS = {"c1": "C1", "c2": "C2", "c3": "C3", "c4": "C4", "c5": "C5", "c2xc2": "C2xC2"}


def setup_logging(log_level: str = "WARNING") -> None:
    """Send loguru output to stderr at the given level"""
    logger.remove()
    logger.add(sys.stderr, level=log_level.upper())


def resolve_group(spec: str) -> FiniteGroup:
    """A group from a short description or a JSON Cayley-table file."""
    if spec.lower().endswith(".json"):
        try:
            data = GroupFile.model_validate(json.loads(Path(spec).read_text()))
        except (ValidationError, json.JSONDecodeError) as e:
            raise UnknownGroupSpec(f"{spec} is not a valid group file: {e}") from e
        labels = tuple(data.labels) if data.labels else None
        return FiniteGroup(tuple(tuple(row) for row in data.table), data.name, labels)
    key = spec.strip().lower()
    if key in NAMED_GROUPS:
        return labelled_group(NAMED_GROUPS[key])
    return group_from_spec(spec)


def display_table(title: str, header: Sequence[str], rows: Iterable[Sequence[str]], corner: str = "") -> None:
    """Display a labelled table"""
    table = Table(title=title, show_header=True, header_style="bold magenta")
    table.add_column(corner, style="bold")
    for column in header:
        table.add_column(column)
    for row in rows:
        table.add_row(*[str(cell) for cell in row])
    console.print(table)


def write_csv(path: Path, header: Optional[List[str]], rows: Iterable[Sequence]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        if header is not None:
            writer.writerow(header)
        writer.writerows(rows)
    logger.debug(f"Wrote {path}")


def write_json(path: Path, model: BaseModel) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(model.model_dump_json(indent=2, by_alias=True))
    logger.debug(f"Wrote {path}")