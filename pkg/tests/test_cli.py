"""Exit codes, output bytes, and JSON shapes of the command-line front-end."""

from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from orbitcode.cli import main

EX1 = ["--q", "2", "--blocks", "x^2+x+1;x^2+x+1", "--seed", "1,0,0,0;0,1,1,0"]
EX2 = ["--q", "2", "--blocks", "x^4+x^2+1", "--seed", "1,0,0,0;0,1,1,0"]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestOrbitCommand:
    def test_example_one_text(self, capsys):
        code, out, err = run(capsys, ["orbit", *EX1])
        assert code == 0
        assert err == ""
        assert out == (
            "classification: completely_reducible\n"
            "generator_order: 3\n"
            "orbit_length: 3\n"
            "min_distance: 4\n"
            "codeword 0: 1,0,0,0;0,1,1,0\n"
            "codeword 1: 1,0,0,1;0,1,0,0\n"
            "codeword 2: 1,0,1,1;0,1,1,1\n"
        )

    def test_example_two_text(self, capsys):
        code, out, err = run(capsys, ["orbit", *EX2])
        assert code == 0
        head, *words = out.strip().splitlines()[2:]
        assert head == "orbit_length: 6"
        assert len(words) == 7  # min_distance plus six codewords
        assert out.splitlines()[3] == "min_distance: 2"

    def test_json_payload(self, capsys):
        code, out, _ = run(capsys, ["orbit", *EX1, "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["classification"] == "completely_reducible"
        assert payload["orbit_length"] == 3
        assert payload["min_distance"] == 4
        assert payload["codewords"][0] == "1,0,0,0;0,1,1,0"

    def test_singleton_reports_none(self, capsys):
        code, out, _ = run(
            capsys, ["orbit", "--q", "2", "--blocks", "x+1;x+1", "--seed", "1,0;0,1"]
        )
        assert code == 0
        assert "min_distance: none" in out
        code, out, _ = run(
            capsys,
            ["orbit", "--q", "2", "--blocks", "x+1;x+1", "--seed", "1,0;0,1", "--format", "json"],
        )
        assert json.loads(out)["min_distance"] is None

    def test_output_is_deterministic(self, capsys):
        _, first, _ = run(capsys, ["orbit", *EX1, "--format", "json"])
        _, second, _ = run(capsys, ["orbit", *EX1, "--format", "json"])
        assert first == second


class TestPlueckerCommand:
    def test_both_routes_agree_on_example_one(self, capsys):
        code, out, _ = run(capsys, ["pluecker", *EX1, "--legend"])
        assert code == 0
        assert out == (
            "tuples: (1,2) (1,3) (1,4) (2,3) (2,4) (3,4)\n"
            "[1:1:0:0:0:0]\n"
            "[1:0:0:0:1:0]\n"
            "[1:1:1:1:1:0]\n"
            "AGREE\n"
        )

    def test_single_route_prints_no_verdict(self, capsys):
        code, out, _ = run(capsys, ["pluecker", *EX1, "--method", "orbit"])
        assert code == 0
        assert "AGREE" not in out
        assert out.count("[") == 3

    def test_routes_give_identical_points(self, capsys):
        _, via_orbit, _ = run(capsys, ["pluecker", *EX2, "--method", "orbit"])
        _, via_minors, _ = run(capsys, ["pluecker", *EX2, "--method", "minors"])
        assert via_orbit == via_minors

    def test_json_payload(self, capsys):
        code, out, _ = run(capsys, ["pluecker", *EX2, "--format", "json", "--legend"])
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["agree"] is True
        assert payload["n"] == 4 and payload["k"] == 2
        assert len(payload["points"]) == 6
        assert payload["legend"].startswith("(1,2)")

    def test_disagreement_exits_one(self, capsys, monkeypatch):
        import orbitcode.cli as cli

        real = cli.plucker_orbit
        monkeypatch.setattr(
            cli, "plucker_orbit", lambda g, s: tuple(reversed(real(g, s)))
        )
        code, out, _ = run(capsys, ["pluecker", *EX1])
        assert code == 1
        assert out.rstrip().endswith("DISAGREE")


class TestBallCommand:
    CENTER = ["--q", "2", "--center", "1,0,0,0;0,1,0,0"]

    def test_membership_both_routes(self, capsys):
        code, out, _ = run(
            capsys, ["ball", *self.CENTER, "--t", "1", "--query", "1,0,0,0;0,0,1,0"]
        )
        assert code == 0
        assert out == "member/member\n"

    def test_non_membership(self, capsys):
        code, out, _ = run(
            capsys, ["ball", *self.CENTER, "--t", "0", "--query", "1,0,0,0;0,0,1,0"]
        )
        assert code == 0
        assert out == "non-member/non-member\n"

    def test_enumerate_radius_two(self, capsys):
        code, out, _ = run(capsys, ["ball", *self.CENTER, "--t", "1", "--enumerate"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[-1] == "members: 19"
        assert len(lines) == 20
        assert "1,0,0,0;0,1,0,0" in lines  # the center itself

    def test_enumerate_json(self, capsys):
        code, out, _ = run(
            capsys, ["ball", *self.CENTER, "--t", "1", "--enumerate", "--format", "json"]
        )
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["count"] == 19
        assert len(payload["members"]) == 19

    def test_query_json(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "ball", *self.CENTER, "--t", "1",
                "--query", "0,0,1,0;0,0,0,1", "--format", "json",
            ],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["member_plucker"] is False
        assert payload["member_distance"] is False
        assert payload["agree"] is True

    def test_disagreement_exits_one(self, capsys, monkeypatch):
        import orbitcode.cli as cli

        monkeypatch.setattr(cli, "in_ball", lambda *a, **k: True)
        code, out, _ = run(
            capsys, ["ball", *self.CENTER, "--t", "0", "--query", "0,0,1,0;0,0,0,1"]
        )
        assert code == 1
        assert "DISAGREE" in out


class TestDistanceCommand:
    def test_reference_values(self, capsys):
        cases = [
            ("1,0,0,0;0,1,0,0", "1,0,0,0;0,1,0,0", "0"),
            ("1,0,0,0;0,1,0,0", "1,0,0,0;0,0,1,0", "2"),
            ("1,0,0,0;0,1,0,0", "0,0,1,0;0,0,0,1", "4"),
            ("1,0,0,0;0,1,1,0", "1,0,0,1;0,1,0,0", "4"),
        ]
        for u, v, expected in cases:
            code, out, _ = run(capsys, ["distance", "--q", "2", "--u", u, "--v", v])
            assert code == 0
            assert out == expected + "\n"

    def test_json(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "distance", "--q", "3", "--format", "json",
                "--u", "1,0,0;0,1,0", "--v", "1,0,1;0,1,2",
            ],
        )
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["distance"] == 2

    def test_extension_field_flag(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "distance", "--q", "4", "--modulus", "x^2+x+1",
                "--u", "1,0;0,1", "--v", "1,2;0,0",
            ],
        )
        assert code == 0
        assert out == "1\n"


class TestExitCodes:
    def test_singular_block_is_algebraic(self, capsys):
        code, _, err = run(
            capsys, ["orbit", "--q", "2", "--blocks", "x^2", "--seed", "1,0"]
        )
        assert code == 3
        assert "algebraic error" in err

    def test_non_prime_power_field_is_algebraic(self, capsys):
        code, _, err = run(
            capsys, ["distance", "--q", "6", "--u", "1,0", "--v", "0,1"]
        )
        assert code == 3
        assert "algebraic error" in err

    def test_reducible_modulus_is_algebraic(self, capsys):
        code, _, err = run(
            capsys,
            ["distance", "--q", "4", "--modulus", "x^2+1", "--u", "1,0", "--v", "0,1"],
        )
        assert code == 3

    def test_seed_width_is_usage(self, capsys):
        code, _, err = run(
            capsys, ["orbit", "--q", "2", "--blocks", "x^2+x+1;x^2+x+1", "--seed", "1,0,0;0,1,0"]
        )
        assert code == 2
        assert "orbitcode: error" in err

    def test_radius_above_dimension_is_usage(self, capsys):
        code, _, err = run(
            capsys,
            ["ball", "--q", "2", "--center", "1,0,0,0;0,1,0,0", "--t", "3", "--enumerate"],
        )
        assert code == 2

    def test_negative_radius_is_usage(self, capsys):
        code, _, _ = run(
            capsys,
            ["ball", "--q", "2", "--center", "1,0,0,0;0,1,0,0", "--t", "-1", "--enumerate"],
        )
        assert code == 2

    def test_query_ambient_mismatch_is_usage(self, capsys):
        code, _, _ = run(
            capsys,
            [
                "ball", "--q", "2", "--center", "1,0,0,0;0,1,0,0",
                "--t", "1", "--query", "1,0,0;0,1,0",
            ],
        )
        assert code == 2

    def test_query_dimension_mismatch_is_usage(self, capsys):
        code, _, _ = run(
            capsys,
            [
                "ball", "--q", "2", "--center", "1,0,0,0;0,1,0,0",
                "--t", "1", "--query", "1,0,0,0",
            ],
        )
        assert code == 2

    def test_missing_query_is_usage(self, capsys):
        code, _, err = run(
            capsys, ["ball", "--q", "2", "--center", "1,0,0,0;0,1,0,0", "--t", "1"]
        )
        assert code == 2
        assert "--query" in err

    def test_garbage_seed_is_usage(self, capsys):
        code, _, _ = run(
            capsys,
            ["orbit", "--q", "2", "--blocks", "x^2+x+1;x^2+x+1", "--seed", "1,0,zebra,0;0,1,1,0"],
        )
        assert code == 2

    def test_garbage_blocks_are_usage(self, capsys):
        code, _, _ = run(
            capsys, ["orbit", "--q", "2", "--blocks", "x^+", "--seed", "1,0,0,0;0,1,1,0"]
        )
        assert code == 2

    def test_distance_ambient_mismatch_is_usage(self, capsys):
        code, _, _ = run(
            capsys, ["distance", "--q", "2", "--u", "1,0,0", "--v", "1,0"]
        )
        assert code == 2

    def test_entry_code_out_of_range_is_usage(self, capsys):
        code, _, _ = run(
            capsys, ["distance", "--q", "2", "--u", "1,2", "--v", "1,0"]
        )
        assert code == 2


@pytest.mark.skipif(shutil.which("orbitcode") is None, reason="console script not on PATH")
def test_console_script_round_trip():
    proc = subprocess.run(
        ["orbitcode", "distance", "--q", "2", "--u", "1,0,0,0;0,1,0,0", "--v", "0,0,1,0;0,0,0,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "4\n"
