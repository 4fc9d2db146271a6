"""Measure how well each attribute's categories stay contiguous.

Projects the table, builds the Delaunay neighbor graph of the layout, and
reports edge and component fracturedness per attribute.  Low values mean
the attribute's categories occupy compact regions of the map.
"""

from pathlib import Path

from catmap import pipeline
from catmap.dataset import deduplicate, load_csv
from catmap.fracturedness import analyze

DATA = Path(__file__).resolve().parents[1] / "data" / "titanic.csv"


def main():
    subsets = deduplicate(load_csv(DATA))
    layout, _ = pipeline.project(subsets, seed=0)
    graph, _ = pipeline.tessellate(layout)
    report = analyze(graph, subsets)

    print(f"{'attribute':10s} {'F_edge':>8s} {'F_comp':>8s}  per-category components")
    for attr in report.attributes:
        cats = ", ".join(f"{c.category}:{c.components}" for c in attr.categories)
        print(f"{attr.attribute:10s} {float(attr.f_edge):8.3f} "
              f"{float(attr.f_comp):8.3f}  {cats}")

    print("\nleast to most fractured:", " < ".join(report.ranking()))


if __name__ == "__main__":
    main()
