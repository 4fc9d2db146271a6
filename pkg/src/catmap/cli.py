"""Command-line entry points for the projection pipeline."""

from __future__ import annotations

import functools
import json
import sys

import click

from . import fracturedness as frac
from . import pipeline, render
from .dataset import DataError, deduplicate, load_csv
from .distance import DistanceMeasure
from .geometry import partition_to_json_dict
from .quality import PipelineConfig, compare_pipelines, report_csv, report_markdown


def _data_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except DataError as exc:
            click.echo(f"error: data: {exc}", err=True)
            sys.exit(1)
        except OSError as exc:
            click.echo(f"error: io: {exc}", err=True)
            sys.exit(1)

    return wrapper


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        click.echo(text, nl=False)


def _pipeline_options(fn):
    options = [
        click.option("--input", "input_path", required=True, help="CSV input file."),
        click.option("--distance", default="overlap", show_default=True,
                     help="Distance measure for MDS."),
        click.option("--method", default="mds", show_default=True,
                     type=click.Choice(["mds", "mca"])),
        click.option("--overlap-reduction/--no-overlap-reduction", default=True,
                     show_default=True),
        click.option("--seed", default=0, show_default=True, type=int),
        click.option("--output", default=None, help="Output file (default stdout)."),
    ]
    for opt in reversed(options):
        fn = opt(fn)
    return fn


def _load_and_project(input_path, distance, method, overlap_reduction, seed):
    table = load_csv(input_path)
    subsets = deduplicate(table)
    layout, radii = pipeline.project(
        subsets,
        method=method,
        measure=DistanceMeasure.parse(distance),
        overlap_reduction=overlap_reduction,
        seed=seed,
    )
    return table, subsets, layout, radii


@click.group()
def main():
    """Similarity-preserving data maps for categorical tables."""


@main.command("project")
@_pipeline_options
@_data_errors
def project_cmd(input_path, distance, method, overlap_reduction, seed, output):
    """Project a CSV into a 2-D layout (JSON)."""
    _, subsets, layout, radii = _load_and_project(
        input_path, distance, method, overlap_reduction, seed
    )
    doc = pipeline.layout_to_json_dict(layout, subsets, radii)
    _emit(json.dumps(doc, indent=2) + "\n", output)


@main.command("tessellate")
@_pipeline_options
@_data_errors
def tessellate_cmd(input_path, distance, method, overlap_reduction, seed, output):
    """Project and tessellate: Delaunay edges plus clipped Voronoi cells (JSON)."""
    _, _, layout, _ = _load_and_project(
        input_path, distance, method, overlap_reduction, seed
    )
    graph, partition = pipeline.tessellate(layout)
    _emit(json.dumps(partition_to_json_dict(partition, graph), indent=2) + "\n", output)


@main.command("fracturedness")
@_pipeline_options
@_data_errors
def fracturedness_cmd(input_path, distance, method, overlap_reduction, seed, output):
    """Fracturedness report for every attribute (JSON)."""
    _, subsets, layout, _ = _load_and_project(
        input_path, distance, method, overlap_reduction, seed
    )
    graph, _ = pipeline.tessellate(layout)
    report = frac.analyze(graph, subsets)
    _emit(json.dumps(frac.report_to_json_dict(report, subsets), indent=2) + "\n", output)


@main.command("metrics")
@click.option("--input", "input_path", required=True)
@click.option("--configs", default="mds:overlap,mds:jaccard,mca", show_default=True,
              help="Comma-separated pipeline configs, e.g. mds:overlap,mca.")
@click.option("--k", default=7, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--format", "fmt", default="markdown", show_default=True,
              type=click.Choice(["markdown", "csv"]))
@click.option("--output", default=None)
@_data_errors
def metrics_cmd(input_path, configs, k, seed, fmt, output):
    """Quality-metric comparison table across pipeline configs."""
    table = load_csv(input_path)
    parsed = [PipelineConfig.parse(s.strip(), seed=seed) for s in configs.split(",") if s.strip()]
    reports = compare_pipelines(table, parsed, k=k)
    text = report_csv(reports) if fmt == "csv" else report_markdown(reports)
    _emit(text, output)


@main.command("render")
@_pipeline_options
@click.option("--glyph", default="area_square", show_default=True,
              type=click.Choice(render.GLYPH_DESIGNS))
@click.option("--attribute", default=None, help="Primary (background) attribute.")
@click.option("--secondary-attribute", default=None, help="Outline attribute.")
@_data_errors
def render_cmd(input_path, distance, method, overlap_reduction, seed, output,
               glyph, attribute, secondary_attribute):
    """Render the full map as SVG."""
    _, subsets, layout, _ = _load_and_project(
        input_path, distance, method, overlap_reduction, seed
    )
    from .projection import normalize_layout

    layout = normalize_layout(layout, *pipeline.VIEWPORT, padding=40.0)
    graph, partition = pipeline.tessellate(layout)
    svg = render.render_map(
        layout, partition, graph, subsets,
        primary_attr=attribute,
        secondary_attr=secondary_attribute,
        spec=render.GlyphSpec(design=glyph),
    )
    _emit(svg, output)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8040, show_default=True, type=int)
@click.option("--data-dir", default=None, help="Directory of CSVs to preload.")
@click.option("--config", "config_path", default=None,
              help="key=value config file (host, port, data_dir, default_k).")
@_data_errors
def serve_cmd(host, port, data_dir, config_path):
    """Start the HTTP service."""
    import uvicorn

    from .service import create_app, read_config

    if config_path:
        cfg = read_config(config_path)
        host = cfg.get("host", host)
        port = int(cfg.get("port", port))
        data_dir = cfg.get("data_dir", data_dir)
    app = create_app(data_dir=data_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
