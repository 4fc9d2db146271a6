"""Project the Titanic table into the plane.

Loads the CSV, collapses duplicate rows into weighted subsets, builds the
overlap-distance matrix, and runs stress-majorization MDS followed by
overlap reduction.  Prints the final layout with per-point frequencies.
"""

from pathlib import Path

from catmap import pipeline
from catmap.dataset import deduplicate, load_csv

DATA = Path(__file__).resolve().parents[1] / "data" / "titanic.csv"


def main():
    table = load_csv(DATA)
    subsets = deduplicate(table)
    print(f"{table.row_count} rows collapse into {subsets.n_subsets} subsets\n")

    layout, radii = pipeline.project(subsets, seed=0)
    print(f"method={layout.method}  stress={layout.stress:.4f}  "
          f"iterations={layout.iterations_run}\n")

    print(f"{'subset':40s} {'count':>6s} {'x':>8s} {'y':>8s}")
    for i in range(subsets.n_subsets):
        label = " ".join(subsets.describe(i))
        x, y = layout.positions[i]
        print(f"{label:40s} {subsets.counts[i]:6d} {x:8.3f} {y:8.3f}")


if __name__ == "__main__":
    main()
