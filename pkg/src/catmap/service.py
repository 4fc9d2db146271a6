"""HTTP service exposing the projection pipeline.

Datasets are identified by the SHA-256 of their CSV bytes, which makes
uploads idempotent.  Computed artifacts are cached per parameter tuple;
one lock per cache key keeps identical concurrent requests from
recomputing the same layout.
"""

from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request, Response

from . import fracturedness as frac
from . import pipeline
from .dataset import (
    CategoricalTable,
    DataError,
    SubsetTable,
    deduplicate,
    load_csv,
)
from .distance import DistanceMeasure
from .projection import normalize_layout
from .quality import PipelineConfig, evaluate_layout, glyph_radii, run_pipeline
from .render import GLYPH_DESIGNS, GlyphSpec, render_map
from .selection import common_categories, selection_to_json_dict
from .geometry import partition_to_json_dict


@dataclass
class Dataset:
    dataset_id: str
    name: str
    table: CategoricalTable
    subsets: SubsetTable


@dataclass
class Store:
    datasets: dict[str, Dataset] = field(default_factory=dict)
    cache: dict[tuple, object] = field(default_factory=dict)
    _locks: dict[tuple, threading.Lock] = field(default_factory=dict)
    _guard: threading.Lock = field(default_factory=threading.Lock)

    def cached(self, key: tuple, compute):
        with self._guard:
            if key in self.cache:
                return self.cache[key]
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            with self._guard:
                if key in self.cache:
                    return self.cache[key]
            value = compute()
            with self._guard:
                self.cache[key] = value
            return value

    def add_csv(self, name: str, data: bytes, tmp_dir: Path) -> Dataset:
        dataset_id = hashlib.sha256(data).hexdigest()[:16]
        if dataset_id in self.datasets:
            return self.datasets[dataset_id]
        path = tmp_dir / f"{dataset_id}.csv"
        path.write_bytes(data)
        table = load_csv(path)
        ds = Dataset(dataset_id, name, table, deduplicate(table))
        self.datasets[dataset_id] = ds
        return ds


def read_config(path) -> dict[str, str]:
    """Minimal key=value config file; '#' starts a comment line."""
    out = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip().strip('"')
    return out


def _params(request: Request):
    q = request.query_params
    try:
        measure = DistanceMeasure.parse(q.get("distance", "overlap"))
    except DataError as exc:
        raise HTTPException(422, str(exc)) from None
    method = q.get("method", "mds")
    if method not in ("mds", "mca"):
        raise HTTPException(422, f"unknown method {method!r}")
    overlap = q.get("overlap", "true").lower() in ("1", "true", "yes", "on")
    try:
        seed = int(q.get("seed", "0"))
    except ValueError:
        raise HTTPException(422, "seed must be an integer") from None
    return measure, method, overlap, seed


def create_app(data_dir: str | None = None, work_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="categorical data map service")
    store = Store()
    tmp_dir = Path(work_dir) if work_dir else Path(data_dir or ".").resolve()
    tmp_dir = tmp_dir if tmp_dir.is_dir() else Path(".")
    upload_dir = tmp_dir / "_uploads"
    upload_dir.mkdir(exist_ok=True)

    if data_dir:
        for csv_path in sorted(Path(data_dir).glob("*.csv")):
            store.add_csv(csv_path.stem, csv_path.read_bytes(), upload_dir)

    def get_dataset(dataset_id: str) -> Dataset:
        ds = store.datasets.get(dataset_id)
        if ds is None:
            raise HTTPException(404, f"unknown dataset {dataset_id!r}")
        return ds

    def computed_layout(ds: Dataset, measure, method, overlap, seed):
        key = ("layout", ds.dataset_id, measure.value, method, overlap, seed)

        def compute():
            layout, _ = pipeline.project(
                ds.subsets, method=method, measure=measure,
                overlap_reduction=overlap, seed=seed,
            )
            layout = normalize_layout(layout, *pipeline.VIEWPORT, padding=40.0)
            return layout, glyph_radii(ds.subsets, layout)

        return store.cached(key, compute)

    @app.post("/datasets")
    async def upload(request: Request):
        data = await request.body()
        if not data:
            raise HTTPException(400, "empty request body")
        try:
            ds = store.add_csv("upload", data, upload_dir)
        except DataError as exc:
            raise HTTPException(400, str(exc)) from None
        return {"id": ds.dataset_id, "subsets": ds.subsets.n_subsets,
                "rows": ds.table.row_count}

    @app.get("/datasets")
    def list_datasets():
        return [
            {
                "id": ds.dataset_id,
                "name": ds.name,
                "rows": ds.table.row_count,
                "subsets": ds.subsets.n_subsets,
                "attributes": [
                    {"name": a, "categories": list(c)}
                    for a, c in zip(ds.table.schema.attributes, ds.table.schema.categories)
                ],
            }
            for ds in store.datasets.values()
        ]

    @app.get("/datasets/{dataset_id}/layout")
    def layout_endpoint(dataset_id: str, request: Request):
        ds = get_dataset(dataset_id)
        measure, method, overlap, seed = _params(request)
        layout, radii = computed_layout(ds, measure, method, overlap, seed)
        key = ("layout-json", dataset_id, measure.value, method, overlap, seed)
        body = store.cached(
            key,
            lambda: json.dumps(pipeline.layout_to_json_dict(layout, ds.subsets, radii)),
        )
        return Response(content=body, media_type="application/json")

    @app.get("/datasets/{dataset_id}/tessellation")
    def tessellation_endpoint(dataset_id: str, request: Request):
        ds = get_dataset(dataset_id)
        measure, method, overlap, seed = _params(request)
        layout, _ = computed_layout(ds, measure, method, overlap, seed)
        key = ("tess", dataset_id, measure.value, method, overlap, seed)

        def compute():
            graph, partition = pipeline.tessellate(layout)
            return json.dumps(partition_to_json_dict(partition, graph))

        return Response(content=store.cached(key, compute), media_type="application/json")

    @app.get("/datasets/{dataset_id}/fracturedness")
    def fracturedness_endpoint(dataset_id: str, request: Request):
        ds = get_dataset(dataset_id)
        measure, method, overlap, seed = _params(request)
        layout, _ = computed_layout(ds, measure, method, overlap, seed)
        key = ("frac", dataset_id, measure.value, method, overlap, seed)

        def compute():
            graph, _ = pipeline.tessellate(layout)
            report = frac.analyze(graph, ds.subsets)
            return json.dumps(frac.report_to_json_dict(report, ds.subsets))

        return Response(content=store.cached(key, compute), media_type="application/json")

    @app.get("/datasets/{dataset_id}/quality")
    def quality_endpoint(dataset_id: str, request: Request, k: int = 7):
        ds = get_dataset(dataset_id)
        measure, method, overlap, seed = _params(request)
        if k < 1 or k >= ds.subsets.n_subsets:
            raise HTTPException(422, "k must be in [1, n_subsets)")
        key = ("quality", dataset_id, measure.value, method, overlap, seed, k)

        def compute():
            config = PipelineConfig(
                method=method,
                measure=measure if method == "mds" else None,
                overlap_reduction=overlap,
                seed=seed,
            )
            layout, matrix = run_pipeline(ds.subsets, config, metric_measure=measure)
            report = evaluate_layout(matrix, layout, ds.subsets, config, k=k)
            return json.dumps(
                {
                    "config": config.label(),
                    "tw": report.tw,
                    "ct": report.ct,
                    "sc": report.sc,
                    "ns": report.ns,
                    "nhPerAttribute": report.nh_per_attribute,
                    "nhMean": report.nh_mean,
                    "nhMedian": report.nh_median,
                    "k": k,
                }
            )

        return Response(content=store.cached(key, compute), media_type="application/json")

    @app.post("/datasets/{dataset_id}/selection")
    async def selection_endpoint(dataset_id: str, request: Request):
        ds = get_dataset(dataset_id)
        measure, method, overlap, seed = _params(request)
        try:
            body = await request.json()
        except Exception:
            raise HTTPException(422, "body must be JSON") from None
        ids = body.get("ids") if isinstance(body, dict) else None
        if not isinstance(ids, list) or not ids or not all(isinstance(i, int) for i in ids):
            raise HTTPException(422, "body must be {\"ids\": [non-empty int list]}")
        layout, _ = computed_layout(ds, measure, method, overlap, seed)
        graph, _ = pipeline.tessellate(layout)
        report = frac.analyze(graph, ds.subsets)
        try:
            result = common_categories(ds.subsets, set(ids), report.ranking())
        except DataError as exc:
            raise HTTPException(422, str(exc)) from None
        return selection_to_json_dict(result)

    @app.get("/datasets/{dataset_id}/render.svg")
    def render_endpoint(dataset_id: str, request: Request):
        ds = get_dataset(dataset_id)
        measure, method, overlap, seed = _params(request)
        q = request.query_params
        attribute = q.get("attribute")
        secondary = q.get("secondary")
        glyph = q.get("glyph", "area_square")
        if glyph not in GLYPH_DESIGNS:
            raise HTTPException(422, f"unknown glyph {glyph!r}")
        for name in (attribute, secondary):
            if name is not None and name not in ds.table.schema.attributes:
                raise HTTPException(422, f"unknown attribute {name!r}")
        layout, _ = computed_layout(ds, measure, method, overlap, seed)
        key = ("svg", dataset_id, measure.value, method, overlap, seed,
               attribute, secondary, glyph)

        def compute():
            graph, partition = pipeline.tessellate(layout)
            return render_map(
                layout, partition, graph, ds.subsets,
                primary_attr=attribute, secondary_attr=secondary,
                spec=GlyphSpec(design=glyph),
            )

        return Response(content=store.cached(key, compute), media_type="image/svg+xml")

    return app
