"""
Console and file reports for spectra, classifications and verification runs
"""

import csv
import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from cyclo import __version__
from cyclo.classify import ClassificationResult
from cyclo.equivalence import SwitchingWitness
from cyclo.gaussint import IntPoly, RadiusClass
from cyclo.harness import CheckStatus, EnumerationReport, TableReport
from cyclo.utils import format_duration, format_vertex_list


class Reporter:
    """Render results with rich and write JSON/CSV reports"""

    def __init__(self, console: Optional[Console] = None):
        self.console = console or Console()

    def print_header(self, title: str):
        self.console.print()
        self.console.print(Panel.fit(f"[bold cyan]🔷 cyclo v{__version__}[/bold cyan]  {title}", border_style="cyan"))
        self.console.print()

    def print_spectrum(self, poly: IntPoly, radius: RadiusClass, rank: Optional[int],
                       min_eigen: bool, eigenvalues: Sequence[float]):
        """
        Print the exact spectral facts of a matrix

        Args:
            poly: Characteristic polynomial
            radius: Exact radius class
            rank: Displaced rank, when the radius is at most 2
            min_eigen: Whether the least eigenvalue exceeds -sqrt 2
            eigenvalues: Floating-point eigenvalues, shown as a cross-check only
        """
        table = Table(show_header=False, box=None)
        table.add_column("Field", style="bold")
        table.add_column("Value")
        table.add_row("Characteristic polynomial", str(poly))
        color = self._radius_color(radius)
        table.add_row("Spectral radius", f"[{color}]{radius.value}[/{color}]")
        table.add_row("Displaced rank", str(rank) if rank is not None else "[dim]-[/dim]")
        table.add_row("λ_min > -√2", "yes" if min_eigen else "no")
        table.add_row("Eigenvalues (float)", "[dim]" + ", ".join(f"{x:.6f}" for x in eigenvalues) + "[/dim]")
        self.console.print(Panel(table, title="📐 Spectrum", border_style=color))

    def print_classification(self, result: ClassificationResult):
        color = self._radius_color(result.radius)
        lines = [f"[bold]Radius:[/bold] [{color}]{result.radius.value}[/{color}]"]
        if result.container is not None:
            lines.append(f"[bold]Container:[/bold] {escape(str(result.container.ref))}")
            lines.append(f"[bold]Vertices:[/bold] {format_vertex_list(result.container.vertices)}")
            lines.append(f"[bold]Witness:[/bold] [dim]{escape(self._witness_text(result.container.witness))}[/dim]")
        elif result.radius is not RadiusClass.GREATER_THAN_2:
            lines.append("[red]No container found[/red]")
        if result.lattice:
            lines.append(f"[bold]Lattice:[/bold] {escape(result.lattice)}")
        if result.notes:
            lines.append(f"[dim]Notes: {escape(', '.join(result.notes))}[/dim]")
        self.console.print(Panel("\n".join(lines), title="🧭 Classification", border_style=color))

    def print_equivalence(self, witness: Optional[SwitchingWitness], mode: str):
        if witness is None:
            self.console.print(Panel(f"[red]✗ Not {mode} equivalent[/red]", border_style="red"))
            return
        self.console.print(Panel(
            f"[green]✓ {mode.capitalize()} equivalent[/green]\n[dim]{escape(self._witness_text(witness))}[/dim]",
            border_style="green",
            title="🔁 Witness",
        ))

    def print_enumeration(self, report: EnumerationReport):
        table = Table(show_header=True, header_style="bold white", box=None)
        table.add_column("Quantity", style="cyan")
        table.add_column("Value", justify="right")
        table.add_row("Vertices", str(report.n))
        table.add_row("Filter", report.radius_filter.value)
        table.add_row("Assignments scanned", f"{report.scanned:,}")
        table.add_row("Assignments pruned", f"{report.pruned:,}")
        table.add_row("Total space", f"{report.total_space:,}")
        table.add_row("Connected digraphs", f"{report.connected:,}")
        table.add_row("Switching classes", f"{report.classes:,}")
        for radius, count in sorted(report.radius_counts.items()):
            table.add_row(f"  {radius}", str(count))
        self.console.print(table)
        self.console.print()
        for failure in report.failures:
            self.console.print(f"[red]  ✗ {escape(failure)}[/red]")
        color = "green" if report.passed else "red"
        reconciled = "reconciled" if report.is_reconciled else "NOT reconciled"
        self.console.print(Panel(
            f"[bold]{len(report.failures)} failures[/bold], counts {reconciled}\n"
            f"[dim]⏱  Total time: {format_duration(report.elapsed)}[/dim]",
            border_style=color,
            title="📈 Results",
        ))

    def print_table_report(self, report: TableReport):
        table = Table(show_header=True, header_style="bold white", box=None)
        table.add_column("Status", width=3, justify="center")
        table.add_column("Row", style="cyan")
        table.add_column("Relation")
        table.add_column("Detail", style="dim")
        for row in report.rows:
            color = self._status_color(row.status)
            table.add_row(
                f"[{color}]{self._status_icon(row.status)}[/{color}]",
                escape(row.row),
                escape(row.relation),
                escape(row.detail),
            )
        self.console.print(table)
        self.console.print()
        color = "green" if report.passed else "red"
        self.console.print(Panel(
            f"[bold]{report.count(CheckStatus.PASS)} passed[/bold], "
            f"{report.count(CheckStatus.SKIP)} skipped, {report.count(CheckStatus.FAIL)} failed\n"
            f"[dim]⏱  Total time: {format_duration(report.elapsed)}[/dim]",
            border_style=color,
            title=f"📈 {report.name}",
        ))

    def generate_json_report(self, data: Dict[str, Any], output_path: str):
        """Write a report dictionary as JSON, stamped with the tool version and time"""
        report = {'cyclo_version': __version__, 'generated': self._get_timestamp(), **data}
        Path(output_path).write_text(json.dumps(report, indent=2, ensure_ascii=False), encoding='utf-8')

    def generate_csv_report(self, report: TableReport, output_path: str):
        with open(output_path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f)
            writer.writerow(['Row', 'Relation', 'Status', 'Detail'])
            for row in report.rows:
                writer.writerow([row.row, row.relation, row.status.value, row.detail])

    @staticmethod
    def _witness_text(witness: SwitchingWitness) -> str:
        return json.dumps(witness.to_dict())

    @staticmethod
    def _radius_color(radius: RadiusClass) -> str:
        colors = {
            RadiusClass.LESS_THAN_2: "green",
            RadiusClass.EXACTLY_2: "yellow",
            RadiusClass.GREATER_THAN_2: "red",
        }
        return colors.get(radius, "white")

    @staticmethod
    def _status_icon(status: CheckStatus) -> str:
        icons = {CheckStatus.PASS: "✓", CheckStatus.FAIL: "✗", CheckStatus.SKIP: "○"}
        return icons.get(status, "?")

    @staticmethod
    def _status_color(status: CheckStatus) -> str:
        colors = {CheckStatus.PASS: "green", CheckStatus.FAIL: "red", CheckStatus.SKIP: "yellow"}
        return colors.get(status, "white")

    def _get_timestamp(self) -> str:
        return datetime.now().strftime("%Y-%m-%d %H:%M:%S")
