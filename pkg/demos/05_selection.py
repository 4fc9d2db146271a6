"""Common-category analysis of a subset selection.

Picks the adult male subsets that did not survive and asks what they
share: the attributes that are uniform over the selection, the ones that
differ, and every other subset matching the shared categories.
"""

from pathlib import Path

from catmap.dataset import deduplicate, load_csv
from catmap.selection import common_categories

DATA = Path(__file__).resolve().parents[1] / "data" / "titanic.csv"


def main():
    subsets = deduplicate(load_csv(DATA))

    selection = {
        i
        for i in range(subsets.n_subsets)
        if {"Sex=Male", "Age=Adult", "Survived=No"} <= set(subsets.describe(i))
    }
    result = common_categories(subsets, selection)

    print("selected:", sorted(result.selected))
    print("common:  ", ", ".join(f"{a}={c}" for a, c in result.common.items()))
    print("distinct:", ", ".join(result.distinct))
    print("matching subsets:")
    for i in result.matching:
        print("  ", " ".join(subsets.describe(i)))


if __name__ == "__main__":
    main()
