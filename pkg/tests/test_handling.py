import io
import os
from fractions import Fraction

import pytest
import yaml

from trimoduli.handling import (atomic_write_text, clean_dir, graph_cache_path,
                                parse_clique_spec, parse_members, parse_range, read_text)
from trimoduli.hyperparams import HP, load_hp
from trimoduli.logger import Logger
from trimoduli.reporting import saveresultdir, stats_csv, yaml_report
from trimoduli.trigraph import GraphStats


def test_parse_range():
    assert parse_range("2..5") == range(2, 6)
    assert parse_range("7") == range(7, 8)
    assert len(parse_range("5..4")) == 0
    with pytest.raises(ValueError):
        parse_range("a..b")


def test_parse_members():
    assert parse_members("12, 4,8") == (4, 8, 12)
    with pytest.raises(ValueError):
        parse_members("")
    with pytest.raises(ValueError):
        parse_members("3,3")
    assert parse_clique_spec("n=19,members=12,15,16,18") == (19, (12, 15, 16, 18))
    with pytest.raises(ValueError):
        parse_clique_spec("19,12,15")


def test_atomic_write_and_clean(tmp_path):
    path = graph_cache_path(str(tmp_path), 12)
    assert path.endswith(os.path.join("trigraph-v1", "T12.txt"))
    atomic_write_text(path, "a\nb\n")
    assert read_text(path) == "a\nb\n"
    assert sorted(os.listdir(os.path.dirname(path))) == ["T12.txt"]
    assert clean_dir(str(tmp_path)) == 1
    assert not os.path.exists(path)


def test_load_hp(tmp_path):
    assert load_hp() == HP
    assert load_hp() is not HP
    cfg = tmp_path / "hp.yaml"
    cfg.write_text("c_max: 4\nseed: 5\n")
    hp = load_hp(str(cfg))
    assert (hp["c_max"], hp["seed"], hp["c_min"]) == (4, 5, HP["c_min"])
    cfg.write_text("- 1\n- 2\n")
    with pytest.raises(ValueError):
        load_hp(str(cfg))


def test_stats_csv_and_reports(tmp_path):
    rows = [GraphStats(5, 6, 6, 6, Fraction(1), Fraction(1)),
            GraphStats(6, 5, 10, 8, Fraction(1, 2), Fraction(4, 5))]
    assert stats_csv(rows).splitlines()[2] == "6,5,10,8,1/2,4/5"
    report = {"n": 5, "timings_ns": {"reduce": 10}}
    assert yaml.safe_load(yaml_report(report)) == report
    saveresultdir(str(tmp_path), {"seed": 1}, {"omega": 4})
    assert yaml.safe_load((tmp_path / "results.txt").read_text()) == {"omega": 4}


def test_logger_records_steps():
    stream = io.StringIO()
    logger = Logger(frequency=2, stream=stream)
    logger.log_start("scan")
    for step in range(1, 5):
        logger.log_step(step, omega=step + 1)
    logger.log_end("scan")
    header, rows = logger.get_logs()
    assert header == ["step", "omega"]
    assert rows == [[1, 2], [2, 3], [3, 4], [4, 5]]
    text = stream.getvalue()
    assert "scan started" in text and "scan finished" in text
    assert "#:      2 omega: 3" in text and "#:      1 " not in text
    quiet = io.StringIO()
    silent = Logger(silent=True, stream=quiet)
    silent.log("hidden")
    assert list(silent.progress(range(3))) == [0, 1, 2]
    assert quiet.getvalue() == ""
