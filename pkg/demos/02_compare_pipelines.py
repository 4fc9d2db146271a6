"""Score several projection pipelines on the same table.

Runs MDS under two distance measures plus MCA, then prints the quality
table: trustworthiness, continuity, Shepard correlation, normalized
stress, and average/median neighborhood hit.
"""

from pathlib import Path

from catmap.dataset import load_csv
from catmap.distance import DistanceMeasure
from catmap.quality import PipelineConfig, compare_pipelines, report_markdown

DATA = Path(__file__).resolve().parents[1] / "data" / "titanic.csv"


def main():
    table = load_csv(DATA)
    configs = [
        PipelineConfig("mds", DistanceMeasure.OVERLAP, overlap_reduction=True),
        PipelineConfig("mds", DistanceMeasure.JACCARD),
        PipelineConfig("mca"),
    ]
    reports = compare_pipelines(table, configs, k=7)
    print(report_markdown(reports))


if __name__ == "__main__":
    main()
