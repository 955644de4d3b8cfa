import json

from cgsig.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


class TestSig:
    def test_human(self, capsys):
        code, out, _ = run(capsys, "sig", "T(4,25)", "1/10")
        assert code == 0
        assert "signature = -15" in out

    def test_json_golden(self, capsys):
        payload = run_json(capsys, "sig", "T(4,25)", "1/10")
        assert payload == {
            "command": "sig",
            "inputs": {"knot": "T(4,25)", "angle": "1/10"},
            "result": {"value": -15, "at_jump": True},
        }

    def test_invalid_knot_exits_1(self, capsys):
        code, _, err = run(capsys, "sig", "T(2,4)", "1/3")
        assert code == 1
        assert "coprime" in err

    def test_invalid_angle_exits_1(self, capsys):
        code, _, err = run(capsys, "sig", "T(2,3)", "x/y")
        assert code == 1

    def test_trivial_angle_exits_1(self, capsys):
        code, _, err = run(capsys, "sig", "T(2,3)", "0/1")
        assert code == 1


class TestCg:
    def test_surgery(self, capsys):
        payload = run_json(capsys, "cg", "surgery", "T(4,25)", "--m", "10",
                           "--a", "1")
        assert payload["result"] == {"value": 2}
        assert payload["command"] == "cg surgery"

    def test_surgery_rational(self, capsys):
        payload = run_json(capsys, "cg", "surgery", "U", "--m", "3", "--q", "1",
                           "--a", "1")
        assert payload["result"] == {"value": 3}

    def test_lens(self, capsys):
        payload = run_json(capsys, "cg", "lens", "--p", "25", "--q", "4",
                           "--order", "5", "--a", "1")
        assert payload["result"] == {"value": 1}

    def test_bad_character_exits_1(self, capsys):
        code, _, err = run(capsys, "cg", "lens", "--p", "4", "--q", "3",
                           "--order", "2", "--a", "1")
        assert code == 1  # induced colour 0 mod 2: unsupported character


class TestObstruct:
    def test_obstructed(self, capsys):
        payload = run_json(capsys, "obstruct", "one-handle", "T(4,25)",
                           "--m", "10")
        assert payload["result"]["verdict"] == "obstructed"
        assert [1, 2] in payload["witnesses"]
        assert payload["skipped"] == []
        code, out, _ = run(capsys, "obstruct", "one-handle", "T(4,25)",
                           "--m", "10")
        assert code == 0  # verdicts never drive nonzero exit codes
        assert "obstructed" in out

    def test_pass(self, capsys):
        payload = run_json(capsys, "obstruct", "one-handle", "U", "--m", "5",
                           "--q", "4")
        assert payload["result"]["verdict"] == "pass"
        assert payload["witnesses"] == []

    def test_partial_pass_lists_skipped(self, capsys):
        payload = run_json(capsys, "obstruct", "one-handle", "U", "--m", "2",
                           "--q", "3")
        assert payload["result"]["verdict"] == "pass (partial)"
        assert payload["skipped"][0][0] == 1
        code, out, _ = run(capsys, "obstruct", "one-handle", "U", "--m", "2",
                           "--q", "3")
        assert code == 0 and "skipped characters" in out


class TestH1:
    def test_plumbing(self, capsys):
        payload = run_json(capsys, "h1", "--plumbing", "a=2", "n=65")
        assert payload["result"]["invariant_factors"] == [16900]
        assert payload["result"]["is_cyclic"] is True
        assert payload["result"]["one_handle_bound"] == 1

    def test_matrix_file(self, capsys, tmp_path):
        target = tmp_path / "m.json"
        target.write_text(json.dumps({"rows": [[2, 0], [0, 4]]}))
        payload = run_json(capsys, "h1", "--matrix", str(target))
        assert payload["result"]["invariant_factors"] == [2, 4]
        assert payload["result"]["min_generators"] == 2
        assert payload["result"]["order"] == 8

    def test_big_entries_serialize_as_strings(self, capsys, tmp_path):
        target = tmp_path / "big.json"
        target.write_text(json.dumps([[10 ** 20]]))
        payload = run_json(capsys, "h1", "--matrix", str(target))
        assert payload["result"]["order"] == str(10 ** 20)

    def test_requires_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "h1")
        assert code == 1

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "h1", "--matrix", "/nonexistent.json")
        assert code == 1


class TestFusionAndFamily:
    def test_minmax(self, capsys):
        payload = run_json(capsys, "fusion", "minmax", "--lens", "25,6")
        assert payload["result"]["bound"] == 0
        assert payload["result"]["surgery_parameters"] == [[25, 19]]

    def test_surgery(self, capsys):
        payload = run_json(capsys, "fusion", "surgery", "T(25,169)",
                           "--m", "65")
        assert payload["result"]["bound"] == 2
        assert payload["result"]["verdict"] == "obstructed"

    def test_family(self, capsys):
        payload = run_json(capsys, "family", "--v", "1")
        assert payload["result"] == {"bound": 1, "certificate": [2],
                                     "p": [5], "n_digits": [2]}

    def test_family_cap(self, capsys):
        code, _, err = run(capsys, "family", "--v", "5")
        assert code == 1


class TestArgErrors:
    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 1

    def test_missing_required(self, capsys):
        code, _, _ = run(capsys, "family")
        assert code == 1


def test_reproduce_paper(capsys):
    code, out, _ = run(capsys, "reproduce-paper")
    assert code == 0
    assert "all checks passed" in out
    payload = run_json(capsys, "reproduce-paper")
    assert payload["result"]["all_ok"] is True
    assert all(row["status"] == "ok" for row in payload["result"]["rows"])
