"""End-to-end checks of the homcat executable: exit codes, round trips, determinism."""
import json
import pathlib
import subprocess
import sys
import tempfile

HOMCAT, FIXTURES = sys.argv[1], pathlib.Path(sys.argv[2])
failures = []


def run(*args):
    p = subprocess.run([HOMCAT, *map(str, args)], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def expect(label, args, code):
    rc, out, err = run(*args)
    ok = rc == code
    print(f"{'ok  ' if ok else 'FAIL'} {label}: exit {rc} (want {code})")
    if not ok:
        failures.append(label)
        print(out[-2000:], err[-2000:])
    return out


def fx(name):
    return FIXTURES / name


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    expect("h4 hopf suite", ["check", fx("h4.json"), "--suite", "hopf"], 0)
    out = expect("bad antipode", ["check", fx("h4_bad_antipode.json"), "--suite", "hopf"], 1)
    rep = json.loads(out)
    anti = [c for c in rep["checks"] if c["name"] == "antipode"][0]
    if not anti["failures"] or not anti["failures"][0]["witness"]:
        failures.append("bad antipode witness")
    expect("missing file", ["check", tmp / "nonexistent.json"], 2)
    (tmp / "broken.json").write_text("{")
    expect("malformed json", ["check", tmp / "broken.json"], 2)
    (tmp / "schema.json").write_text(json.dumps({"schema_version": "homcat/0", "field": "Q"}))
    expect("unknown schema", ["check", tmp / "schema.json"], 2)
    h4 = json.loads(fx("h4.json").read_text())
    h4["hopf"]["alpha"] = [[0, 0, "1"], [1, 1, "1"], [2, 2, "1"]]
    (tmp / "singular.json").write_text(json.dumps(h4))
    expect("singular structure map", ["check", tmp / "singular.json"], 2)
    h4 = json.loads(fx("h4.json").read_text())
    h4["hopf"]["unit"] = [[0, 1.0]]
    (tmp / "float.json").write_text(json.dumps(h4))
    expect("float literal", ["check", tmp / "float.json"], 2)
    expect("suite without section", ["check", fx("c2.json"), "--suite", "doi"], 2)
    expect("bad field override", ["--field", "Fp:4", "check", fx("c2.json")], 2)
    expect("field override", ["--field", "Fp:5", "check", fx("h4.json")], 0)
    expect("yd suite", ["check", fx("h4_yd_modules.json"), "--suite", "yd"], 1)
    out = run("check", fx("h4_yd_modules.json"), "--suite", "yd")[1]
    eq = [c["passed"] for c in json.loads(out)["checks"] if c["name"].endswith("equivalent")]
    if eq != [True, True]:
        failures.append("yd equivalence flags")
    expect("morphism document", ["check", fx("c2_morphism.json")], 0)

    # construct: every output reloads and passes its own checks
    built = {
        "opposite": ["opposite", fx("h4.json")],
        "dual": ["dual", fx("h4.json")],
        "tensor": ["tensor", fx("c2.json"), fx("h4.json")],
        "twist": ["twist", fx("c4_classical.json"), "--aut", "g^3"],
        "yd_datum": ["yd_datum", fx("h4.json")],
        "double": ["double", fx("c2.json")],
        "induce": ["induce", fx("c2_morphism.json")],
        "cotensor": ["cotensor", fx("c2_morphism.json")],
    }
    for name, args in built.items():
        expect(f"construct {name}", ["construct", *args, "-o", tmp / f"{name}.json"], 0)
        expect(f"reload {name}", ["check", tmp / f"{name}.json"], 0)
    expect("construct smash", ["construct", "smash", tmp / "yd_datum.json", "-o", tmp / "smash.json"], 0)
    expect("reload smash", ["check", tmp / "smash.json"], 0)
    yd = json.loads((tmp / "yd_datum.json").read_text())
    if yd["hopf"]["dim"] != 16:
        failures.append("yd datum dim")
    dbl = json.loads((tmp / "double.json").read_text())
    if dbl["hopf"]["dim"] != 4:
        failures.append("double dim")
    expect("twist by a non-automorphism", ["construct", "twist", fx("c4_classical.json"), "--aut", "g^2",
                                           "-o", tmp / "x.json"], 1)
    expect("twist without --aut", ["construct", "twist", fx("c4_classical.json"), "-o", tmp / "x.json"], 2)

    # determinism: byte-identical reports and documents
    a = run("check", fx("h4.json"))[1]
    b = run("check", fx("h4.json"))[1]
    expect("construct again", ["construct", "yd_datum", fx("h4.json"), "-o", tmp / "yd2.json"], 0)
    if a != b or (tmp / "yd_datum.json").read_bytes() != (tmp / "yd2.json").read_bytes():
        failures.append("determinism")
    (tmp / "h4_copy.json").write_bytes(fx("h4.json").read_bytes())
    if json.loads(a)["input_digest"] != json.loads(run("check", tmp / "h4_copy.json")[1])["input_digest"]:
        failures.append("digest")

    # braid
    out = expect("braid yd", ["braid", tmp / "yd_datum.json", fx("yd_h4_q.json")], 0)
    rep = json.loads(out)
    if not all(rep["flags"].values()):
        failures.append("braid yd flags")
    expect("braid yd from datum document", ["braid", tmp / "yd_datum.json", tmp / "yd_datum.json", "unit"], 0)
    out = expect("braid perturbed", ["braid", tmp / "yd_datum.json", fx("yd_h4_q_perturbed.json")], 1)
    if json.loads(out)["checks"][0]["failures"][0]["witness"] == []:
        failures.append("perturbed witness")
    out = expect("braid A=k", ["braid", fx("ak_c2.json"), fx("ak_c2.json"), "unit", "regular"], 0)
    if not json.loads(out)["coquasitriangular"]["standard"]["passed"]:
        failures.append("coquasitriangular verdict")
    expect("braid A=k bad sigma", ["braid", fx("ak_c2.json"), fx("ak_c2_sigma_bad.json")], 1)
    expect("braid q dims mismatch", ["braid", fx("ak_c2.json"), fx("yd_h4_q.json")], 2)
    expect("braid without monoidal datum", ["braid", fx("h4.json"), fx("yd_h4_q.json")], 2)
    expect("braid text report", ["--report", "text", "braid", fx("ak_c2.json"), fx("ak_c2.json")], 0)

print(f"{len(failures)} failure(s)", failures)
sys.exit(1 if failures else 0)
