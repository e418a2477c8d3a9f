#!/usr/bin/env python3
"""Fetch the non-bundled benchmark datasets into data/.

Downloads the original archives from the UCI repository, normalizes each
one into the loader's csv+schema format, applies the usual row-dropping for
missing values, and asserts the expected shapes. Usage:

    python3 tools/fetch_data.py            # all twelve
    python3 tools/fetch_data.py german tae # a subset

zoo and tic_tac_toe ship with the repository (tic_tac_toe is regenerated
by gen_tictactoe.py), so they are not fetched here.
"""

import sys
import urllib.request
from pathlib import Path

BASE = "https://archive.ics.uci.edu/ml/machine-learning-databases"
DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def fetch(path):
    url = f"{BASE}/{path}"
    print(f"  fetching {url}")
    with urllib.request.urlopen(url) as r:
        return r.read().decode("utf-8", errors="replace")


def write_dataset(slug, columns, rows, class_name, class_values=None):
    """Write slug.csv and slug.schema.

    `columns` is a list of (name, kind) with kind "numeric" or
    "categorical"; `rows` are lists of strings, one entry per column plus
    the class label last.
    """
    for row in rows:
        assert len(row) == len(columns) + 1, (slug, row)
    csv_path = DATA_DIR / f"{slug}.csv"
    with open(csv_path, "w") as f:
        f.write(",".join([name for name, _ in columns] + [class_name]) + "\n")
        for row in rows:
            f.write(",".join(row) + "\n")
    with open(DATA_DIR / f"{slug}.schema", "w") as f:
        f.write(f"class = {class_name}\n")
        for name, kind in columns:
            f.write(f"{name} = {kind}\n")
    n_classes = len({row[-1] for row in rows})
    if class_values is not None:
        assert n_classes == class_values, (slug, n_classes)
    print(f"  wrote {csv_path.name}: {len(rows)} rows, {n_classes} classes")


def split_rows(text, whitespace=False):
    return [ln.split() if whitespace else ln.split(",")
            for ln in text.splitlines() if ln.strip()]


def simple(slug, path, columns, class_name, n_rows, n_classes,
           whitespace=False, drop_missing=False):
    rows = []
    for parts in split_rows(fetch(path), whitespace):
        parts = [p.strip() for p in parts]
        if drop_missing and "?" in parts:
            continue
        rows.append(parts)
    assert len(rows) == n_rows, (slug, len(rows))
    write_dataset(slug, columns, rows, class_name, n_classes)


def abalone():
    cols = [("sex", "categorical")] + [
        (n, "numeric")
        for n in ["length", "diameter", "height", "whole_weight",
                  "shucked_weight", "viscera_weight", "shell_weight"]
    ]
    simple("abalone", "abalone/abalone.data", cols, "rings", 4177, 28)


def australian():
    kinds = ["categorical", "numeric", "numeric", "categorical", "categorical",
             "categorical", "numeric", "categorical", "categorical", "numeric",
             "categorical", "categorical", "numeric", "numeric"]
    cols = [(f"a{i + 1}", k) for i, k in enumerate(kinds)]
    simple("australian", "statlog/australian/australian.dat", cols, "approved",
           690, 2, whitespace=True)


def cmc():
    kinds = ["numeric", "categorical", "categorical", "numeric", "categorical",
             "categorical", "categorical", "categorical", "categorical"]
    names = ["wife_age", "wife_education", "husband_education", "children",
             "wife_religion", "wife_working", "husband_occupation",
             "living_standard", "media_exposure"]
    simple("cmc", "cmc/cmc.data", list(zip(names, kinds)), "method", 1473, 3)


def dermatology():
    # 33 graded clinical/histopathological findings plus age; the 8 rows
    # with unknown age are dropped, leaving 358
    cols = [(f"f{i + 1}", "categorical") for i in range(33)] + [("age", "numeric")]
    simple("dermatology", "dermatology/dermatology.data", cols, "diagnosis",
           358, 6, drop_missing=True)


def flag():
    raw = split_rows(fetch("flags/flag.data"))
    spec = [
        ("landmass", "categorical"), ("zone", "categorical"),
        ("area", "numeric"), ("population", "numeric"),
        ("language", "categorical"), ("religion", "class"),
        ("bars", "numeric"), ("stripes", "numeric"), ("colours", "numeric"),
        ("red", "categorical"), ("green", "categorical"),
        ("blue", "categorical"), ("gold", "categorical"),
        ("white", "categorical"), ("black", "categorical"),
        ("orange", "categorical"), ("mainhue", "categorical"),
        ("circles", "numeric"), ("crosses", "numeric"),
        ("saltires", "numeric"), ("quarters", "numeric"),
        ("sunstars", "numeric"), ("crescent", "categorical"),
        ("triangle", "categorical"), ("icon", "categorical"),
        ("animate", "categorical"), ("text", "categorical"),
        ("topleft", "categorical"), ("botright", "categorical"),
    ]
    class_at = [i for i, (_, k) in enumerate(spec) if k == "class"][0]
    cols = [(n, k) for n, k in spec if k != "class"]
    rows = []
    for parts in raw:
        parts = parts[1:]  # drop the country name
        assert len(parts) == len(spec), parts
        label = parts[class_at]
        feats = parts[:class_at] + parts[class_at + 1:]
        rows.append(feats + [label])
    assert len(rows) == 194, len(rows)
    write_dataset("flag", cols, rows, "religion", 8)


def german():
    numeric = {1, 4, 7, 10, 12, 15, 17}  # zero-based attribute positions
    cols = [(f"a{i + 1}", "numeric" if i in numeric else "categorical")
            for i in range(20)]
    simple("german", "statlog/german/german.data", cols, "risk", 1000, 2,
           whitespace=True)


def heart():
    numeric = {0, 3, 4, 7, 9, 10, 11}  # age, restbp, chol, maxhr, oldpeak, slope, ca
    names = ["age", "sex", "chest_pain", "rest_bp", "cholesterol",
             "fasting_sugar", "rest_ecg", "max_rate", "angina", "oldpeak",
             "slope", "vessels", "thal"]
    cols = [(n, "numeric" if i in numeric else "categorical")
            for i, n in enumerate(names)]
    simple("heart", "statlog/heart/heart.dat", cols, "disease", 270, 2,
           whitespace=True)


def japanese_credit():
    numeric = {1, 2, 7, 10, 13, 14}
    cols = [(f"a{i + 1}", "numeric" if i in numeric else "categorical")
            for i in range(15)]
    # rows containing any missing field are dropped: 690 -> 653
    simple("japanese_credit", "credit-screening/crx.data", cols, "approved",
           653, 2, drop_missing=True)


def molecular_biology():
    raw = split_rows(fetch(
        "molecular-biology/splice-junction-gene-sequences/splice.data"))
    cols = [(f"p{i + 1}", "categorical") for i in range(60)]
    rows = []
    for parts in raw:
        label = parts[0].strip()
        seq = parts[2].strip()
        assert len(seq) == 60, seq
        rows.append(list(seq) + [label])
    assert len(rows) == 3190, len(rows)
    write_dataset("molecular_biology", cols, rows, "junction", 3)


def nursery():
    names = ["parents", "has_nurs", "form", "children", "housing", "finance",
             "social", "health"]
    cols = [(n, "categorical") for n in names]
    simple("nursery", "nursery/nursery.data", cols, "recommendation",
           12960, 5)


def post_operative():
    names = ["core_temp", "surface_temp", "oxygen", "blood_pressure",
             "surface_stability", "core_stability", "bp_stability"]
    cols = [(n, "categorical") for n in names] + [("comfort", "numeric")]
    # 3 rows with unknown comfort are dropped: 90 -> 87
    simple("post_operative", "postoperative-patient-data/post-operative.data",
           cols, "discharge", 87, 3, drop_missing=True)


def tae():
    cols = [("native_speaker", "categorical"), ("instructor", "categorical"),
            ("course", "categorical"), ("semester", "categorical"),
            ("class_size", "numeric")]
    simple("tae", "tae/tae.data", cols, "rating", 151, 3)


FETCHERS = {
    "abalone": abalone,
    "australian": australian,
    "cmc": cmc,
    "dermatology": dermatology,
    "flag": flag,
    "german": german,
    "heart": heart,
    "japanese_credit": japanese_credit,
    "molecular_biology": molecular_biology,
    "nursery": nursery,
    "post_operative": post_operative,
    "tae": tae,
}


def main():
    wanted = sys.argv[1:] or sorted(FETCHERS)
    unknown = [w for w in wanted if w not in FETCHERS]
    if unknown:
        sys.exit(f"unknown dataset(s): {', '.join(unknown)}; "
                 f"choose from {', '.join(sorted(FETCHERS))}")
    DATA_DIR.mkdir(exist_ok=True)
    for name in wanted:
        print(f"{name}:")
        FETCHERS[name]()


if __name__ == "__main__":
    main()
