import shutil
import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from plot_regions import REGION_STYLE, assign_labels, label_row, load_rows, main, render

HEADER = (
    "alpha,beta,lhs_In,lhs_I2,lhs_InM1,lhs_GME,"
    "viol_In,viol_I2,viol_InM1,viol_GME,ppt_1v3,ppt_2v2"
)


def write_csv(path, rows):
    lines = [HEADER]
    for row in rows:
        lines.append(",".join(str(x) for x in row))
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def synthetic_csv(tmp_path):
    rows = [
        (1.0, 0.0, 0.5, -6.0, -3.0, 0.0, 1, 0, 0, 0, 0, 0),     # -> I
        (0.0, 1.0, -1.0, 1.0, 1.0, 1.0, 0, 1, 1, 1, 0, 0),      # -> II
        (0.0, 0.7, -0.9, -0.3, 0.3, 0.3, 0, 0, 1, 1, 0, 0),     # -> III
        (0.0, 0.0, -0.9, -3.2, -0.3, -0.2, 0, 0, 0, 0, 1, 1),   # -> PPT
        (0.3, 0.2, -0.5, -2.0, -0.8, -0.4, 0, 0, 0, 0, 1, 0),   # -> none
    ]
    return write_csv(tmp_path / "scan.csv", rows)


class TestLabeling:
    def test_precedence_order(self):
        row = {"viol_In": True, "viol_I2": True, "viol_GME": True, "ppt_both": True}
        assert label_row(row) == "I"
        row["viol_In"] = False
        assert label_row(row) == "II"
        row["viol_I2"] = False
        assert label_row(row) == "III"
        row["viol_GME"] = False
        assert label_row(row) == "PPT"
        row["ppt_both"] = False
        assert label_row(row) is None

    def test_labels_from_synthetic_file(self, tmp_path):
        rows = load_rows(synthetic_csv(tmp_path))
        assert assign_labels(rows) == ["I", "II", "III", "PPT", None]


class TestLoading:
    def test_missing_column_rejected(self, tmp_path):
        path = tmp_path / "broken.csv"
        path.write_text("alpha,beta,viol_In\n0.0,0.0,0\n")
        with pytest.raises(ValueError, match="ppt_1v3"):
            load_rows(str(path))

    def test_header_only_is_fine(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text(HEADER + "\n")
        assert load_rows(str(path)) == []


class TestRendering:
    def test_writes_image(self, tmp_path):
        out = tmp_path / "regions.png"
        render(synthetic_csv(tmp_path), str(out))
        assert out.exists() and out.stat().st_size > 0

    def test_empty_csv_renders_blank_simplex(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text(HEADER + "\n")
        out = tmp_path / "blank.png"
        assert main(["plot_regions.py", str(path), str(out)]) == 0
        assert out.exists()

    def test_legend_always_carries_all_four_entries(self, tmp_path):
        from plot_regions import build_figure

        fig, ax = build_figure(load_rows(synthetic_csv(tmp_path)))
        texts = [t.get_text() for t in ax.get_legend().get_texts()]
        assert len(texts) == 4
        for _, legend_text in REGION_STYLE.values():
            assert legend_text in texts

    def test_missing_column_exits_nonzero(self, tmp_path, capsys):
        path = tmp_path / "broken.csv"
        path.write_text("alpha,beta\n0,0\n")
        code = main(["plot_regions.py", str(path), str(tmp_path / "x.png")])
        assert code == 1
        assert "ppt_1v3" in capsys.readouterr().err

    def test_usage_error(self):
        assert main(["plot_regions.py"]) == 2


@pytest.fixture(scope="module")
def real_scan_csv(tmp_path_factory):
    exe = shutil.which("entclass")
    if exe is None:
        pytest.skip("entclass CLI is not on PATH")
    path = tmp_path_factory.mktemp("scan") / "scan001.csv"
    subprocess.run(
        [exe, "scan", "--step", "0.01", "--output", str(path)],
        check=True,
        capture_output=True,
    )
    return str(path)


class TestAgainstRealScan:
    def test_full_ride(self, tmp_path, real_scan_csv):
        from plot_regions import build_figure

        rows = load_rows(real_scan_csv)
        assert len(rows) == 5151
        labels = dict(zip(((r["alpha"], r["beta"]) for r in rows), assign_labels(rows)))
        # corner classification under the precedence rule
        assert labels[(1.0, 0.0)] == "I"
        assert labels[(0.0, 1.0)] == "II"
        assert labels[(0.0, 0.0)] == "PPT"
        # every legend region is populated somewhere on the grid
        present = set(labels.values())
        assert {"I", "II", "III", "PPT"} <= present

        fig, ax = build_figure(rows)
        texts = [t.get_text() for t in ax.get_legend().get_texts()]
        assert len(texts) == 4

        out = tmp_path / "regions.png"
        assert main(["plot_regions.py", real_scan_csv, str(out)]) == 0
        assert out.stat().st_size > 10_000
