import json

import pytest

from omega_ideals.app import EXIT_PARSE_ERROR, EXIT_PRECONDITION, main


def _json(capsys, argv):
    assert main(argv + ["--json"]) == 0
    return json.loads(capsys.readouterr().out)


def test_omega_in_two_variables(capsys):
    out = _json(capsys, ["omega", "x^11*y^4, x^8*y^5, x^7*y^9, x^4*y^10, x^2*y^16", "--vars", "x,y"])
    assert out["value"] == {"exact": 19}
    assert out["method"][0] == "TWO_VARS"
    assert "certificate" not in out


def test_omega_with_verified_certificate(capsys):
    out = _json(capsys, ["omega", "x^2, x*y, y^2, x*z^2", "--verify"])
    assert out["value"] == {"exact": 3}
    assert out["method"] == ["DIM1"]
    assert out["certificate"]["factors"] == ["x", "z", "x + y + z"]
    assert out["verified"] is True


def test_omega_bounds_carry_reasons(capsys):
    out = _json(capsys, ["omega", "x^2*z, x^2*w, y*z, y*w, x*z^2", "--vars", "x,y,z,w"])
    assert out["value"] == {"lo": 3, "hi": 4}
    assert out["method"] == ["FALLBACK_BOUNDS"]
    assert out["reasons"]


def test_text_output(capsys):
    assert main(["omega", "x^4, y^3, z^2, x*y, y^2*z"]) == 0
    out = capsys.readouterr().out
    assert "omega = 5" in out
    assert "PRIMARY" in out


def test_json_output_is_deterministic(capsys):
    argv = ["decompose", "x^4, y^3, z^2, x*y, y^2*z", "--json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_decompose(capsys):
    out = _json(capsys, ["decompose", "x^2, x*y, y^2, x*z^2", "--canonical"])
    assert out["ring"] == ["x", "y", "z"]
    assert [c["prime"] for c in out["components"]] == [[0, 1], [0, 1, 2]]
    assert all(c["kind"] == "primary" for c in out["components"])
    out = _json(capsys, ["decompose", "x^4, y^3, z^2, x*y, y^2*z"])
    assert len(out["components"]) == 3


def test_noether(capsys):
    out = _json(capsys, ["noether", "x^3, y^2, z^2, x*y", "--verify"])
    assert (out["noether"], out["brute"]) == (4, 4)


def test_power(capsys):
    out = _json(capsys, ["power", "x^2, y^2", "2", "--vars", "x,y"])
    assert out["power"]["gens"] == [[4, 0], [2, 2], [0, 4]]
    assert out["omega"]["value"] == {"exact": 5}


def test_omega_linear(capsys):
    out = _json(capsys, ["omega-linear", "x^2, y^2", "--vars", "x,y", "--max-power", "2"])
    assert out["verdict"] == "not linear"
    assert [row["omega"]["exact"] for row in out["rows"]] == [3, 5]


def test_closure(capsys):
    out = _json(capsys, ["closure", "x^2, y^2", "--vars", "x,y"])
    assert out["closure"]["gens"] == [[2, 0], [1, 1], [0, 2]]
    assert out["integrally_closed"] is False


def test_closure_needs_two_variables(capsys):
    assert main(["closure", "x^2, y^2"]) == EXIT_PRECONDITION
    assert "error:" in capsys.readouterr().err


def test_compare(capsys):
    out = _json(capsys, ["compare", "x^3, x*y, y^2", "x^2, x*y, y^3", "--vars", "x,y"])
    assert out["omega_product"] == {"exact": 5}
    assert out["omega_intersection"] == {"exact": 3}
    assert all(out["inequalities"].values())


def test_edge_ideal(capsys, tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text("# pentagon\n1 2\n2 3\n3 4\n4 5\n5 1\n")
    out = _json(capsys, ["edge-ideal", "--graph", str(path), "--powers", "2"])
    assert out["omega"] == 5
    assert out["bipartite"] is False
    assert [row["omega"]["exact"] for row in out["rows"]] == [5, 10]


@pytest.mark.parametrize("argv", [
    ["omega", "x^-1"],
    ["omega", "x, w", "--vars", "x,y,z"],
    ["omega", "x", "--vars", "x,x"],
    ["edge-ideal", "--graph", "no/such/file.txt"],
])
def test_parse_errors_exit_with_two(capsys, argv):
    assert main(argv) == EXIT_PARSE_ERROR
    assert "error:" in capsys.readouterr().err


def test_parse_error_points_at_the_position(capsys):
    main(["omega", "x, w", "--vars", "x,y,z"])
    err = capsys.readouterr().err
    assert err.rstrip().endswith("^")


def test_oracle_commands(capsys):
    out = _json(capsys, ["oracle", "noether", "x^4, y^3, z^2"])
    assert out["brute"] == 7
    out = _json(capsys, ["oracle", "absorbing", "x*y", "--t-max", "3"])
    assert (out["t"], out["exhausted"]) == (2, True)
    out = _json(capsys, ["oracle", "binomial", "x*y, y*z, x*z", "--t", "3"])
    assert out["t"] == 3
    out = _json(capsys, ["oracle", "power-check", "x^2, y^3", "3", "--vars", "x,y"])
    assert out["holds"] is True
    assert out["omega_formula"] == out["omega_dispatcher"]["exact"]
    out = _json(capsys, ["oracle", "closure-member", "x^2, y^2", "x*y", "--vars", "x,y"])
    assert out["member"] is True


def test_oracle_sweep(capsys):
    out = _json(capsys, ["oracle", "sweep", "--count", "25", "--seed", "3"])
    assert out["checked"] == 25
    assert out["noether_mismatches"] == []
    assert out["sandwich_violations"] == []
    assert out["certificate_failures"] == []
