"""End-to-end checks of the command-line harness. The binary path comes from
the MOTSS_CLI environment variable (set by ctest)."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("MOTSS_CLI", "motss")

EXAMPLE1 = "bounds 1,1 2,2\n1,2\n2,1\n1,1\n"
EXAMPLE2 = "bounds 1,1 2,2\n1,1\n1,2\n2,1\n"


def run(*args, expect=0):
    proc = subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=300
    )
    assert proc.returncode == expect, proc.stdout + proc.stderr
    return proc.stdout


def test_zvalue_closed_and_numeric():
    out = json.loads(
        run("zvalue", "--f", "gmean", "--bounds", "1,1", "9,4")
    )
    assert abs(out["result"]["z"]["value"] - 2.449490) < 1e-6
    assert out["result"]["z"]["method"]["type"] == "closed_form"

    out = json.loads(
        run(
            "zvalue", "--f", "amean", "--bounds", "1,1", "9,4",
            "--method", "numeric", "--resolution", "512",
        )
    )
    assert abs(out["result"]["z"]["value"] - 2.9270509831248424) < 1e-3


def test_zvalue_requires_canonical_bounds():
    out = json.loads(
        run("zvalue", "--f", "gmean", "--bounds", "1,1", "4,9", expect=1)
    )
    assert out["error"]["type"] == "not_canonical"
    out = json.loads(
        run(
            "zvalue", "--f", "gmean", "--bounds", "1,1", "4,9",
            "--canonicalize",
        )
    )
    assert out["result"]["canonical_permutation"] == [1, 0]
    assert abs(out["result"]["z"]["value"] - 6 ** 0.5) < 1e-12


def test_simulate_and_front_and_ratio(tmp_path):
    instance = tmp_path / "example1.txt"
    instance.write_text(EXAMPLE1)

    csv = run(
        "simulate", "--f", "max", "--instance", str(instance),
        "--policy", "accept-first",
    )
    assert csv.splitlines()[1] == "accepted,1,1,2"
    assert "t,p_1,p_2,accept" in csv

    csv = run("front", "--instance", str(instance))
    lines = csv.strip().splitlines()
    assert lines[0] == "member,p_1,p_2,source_indices"
    assert lines[1] == "1,1,2,1"
    assert lines[2] == "2,2,1,2"

    sigma = tmp_path / "example2.txt"
    sigma.write_text(EXAMPLE2)
    out = json.loads(
        run(
            "ratio", "--f", "max", "--instance", str(sigma),
            "--policy", "accept-first",
        )
    )
    assert out["result"]["report"]["value"] == 2.0
    assert out["result"]["report"]["witness"] == [1.0, 2.0]

    # BPP accepts (1,2); the other maximal element (2,1) drives the ratio to
    # M/m = 2, which equals the optimum z = max(sqrt(2), 2) for these bounds
    out = json.loads(
        run("ratio", "--f", "max", "--instance", str(sigma), "--policy", "bpp")
    )
    assert out["result"]["report"]["value"] == 2.0
    assert out["result"]["outcome"]["accepted_at"] == 2


def test_adversary_branches():
    for policy, length in (("bpp", 2), ("reject-all", 1)):
        out = json.loads(
            run(
                "adversary", "--f", "min", "--bounds", "1,1", "9,4",
                "--policy", policy,
            )
        )
        play = out["result"]["play"]
        assert len(play["realized_instance"]) == length
        assert abs(play["report"]["value"] - 2.0) < 1e-9


def test_verify_matches_bpp(tmp_path):
    out_path = tmp_path / "verify.json"
    out = json.loads(
        run(
            "verify", "--f", "max", "--bounds", "1,1", "9,4",
            "--grid", "3,3", "--horizon", "2", "--out", str(out_path),
        )
    )
    assert out["result"]["difference"] <= 1e-12
    assert out["result"]["minimax"]["instance_space_size"] == 90
    assert out_path.exists()
    table = (tmp_path / "verify.csv").read_text().splitlines()
    assert table[0] == "history,decision"
    assert len(table) == 1 + 90


def test_verify_over_budget_is_machine_readable():
    out = json.loads(
        run(
            "verify", "--f", "max", "--bounds", "1,1", "9,4",
            "--grid", "3,3", "--horizon", "3", "--budget", "10",
            expect=1,
        )
    )
    assert out["error"]["type"] == "budget_exceeded"


def test_sweep_writes_plot_ready_csv(tmp_path):
    out_path = tmp_path / "sweep.json"
    csv = run(
        "sweep", "--f", "gmean", "--steps", "4", "--count", "10",
        "--horizon", "4", "--resolution", "64", "--seed", "5",
        "--out", str(out_path),
    )
    lines = csv.strip().splitlines()
    assert lines[0] == "phi_1,phi_2,z_closed,z_numeric,empirical_worst_cr,instances"
    assert len(lines) == 5
    summary = json.loads(out_path.read_text())
    assert summary["result"]["max_closed_numeric_gap"] < 1e-6
    # empirical worst ratios never beat the optimum from above
    for row in summary["result"]["rows"]:
        assert row["empirical_worst_cr"] <= row["z_closed"] + 1e-9


def test_simulate_empty_instance_rejects_all(tmp_path):
    instance = tmp_path / "empty.txt"
    instance.write_text("bounds 1,1 2,2\n")
    csv = run("simulate", "--f", "max", "--instance", str(instance))
    assert csv.splitlines()[1] == "rejected_all,,1,1"


def test_zvalue_on_finite_grids_enumerates():
    out = json.loads(
        run(
            "zvalue", "--f", "identity", "--bounds", "1", "4",
            "--grid", "3", "--method", "numeric",
        )
    )
    assert out["result"]["z"]["value"] == 2.0
    assert out["result"]["z"]["method"]["type"] == "discrete_enumeration"


def test_adversary_with_numeric_witness():
    out = json.loads(
        run(
            "adversary", "--f", "gmean", "--bounds", "1,1", "9,4",
            "--policy", "accept-first", "--method", "numeric",
            "--resolution", "128",
        )
    )
    assert abs(out["result"]["play"]["report"]["value"] - 6 ** 0.5) < 1e-6


def test_seeded_runs_are_reproducible(tmp_path):
    a = run("sweep", "--f", "amean", "--steps", "3", "--count", "5",
            "--seed", "9", "--resolution", "64")
    b = run("sweep", "--f", "amean", "--steps", "3", "--count", "5",
            "--seed", "9", "--resolution", "64")
    assert a == b
