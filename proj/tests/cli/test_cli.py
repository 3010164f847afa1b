"""End-to-end checks of the cch binary: exit codes, error paths, schema
round-trips and byte-identical output across runs and thread counts.

Usage: test_cli.py CCH_BINARY REPO_ROOT
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

CCH = None
ROOT = None


def run(*args, threads=None):
    env = dict(os.environ)
    if threads is not None:
        env["OMP_NUM_THREADS"] = str(threads)
    return subprocess.run([CCH, *args], capture_output=True, text=True, env=env, timeout=120)


def data(name):
    return str(ROOT / "data" / name)


def write_doc(doc):
    f = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
    json.dump(doc, f)
    f.close()
    return f.name


class Schemas(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.input_schema = json.loads((ROOT / "schema" / "input.schema.json").read_text())
        cls.report_schema = json.loads((ROOT / "schema" / "report.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(cls.input_schema)
        jsonschema.Draft202012Validator.check_schema(cls.report_schema)

    def test_data_documents_validate(self):
        for path in sorted((ROOT / "data").glob("*.json")):
            with self.subTest(path=path.name):
                jsonschema.validate(json.loads(path.read_text()), self.input_schema)

    def test_reports_validate(self):
        commands = [
            ("cz", "--k-max", "4"),
            ("classify", "--k-max", "12"),
            ("buildings",),
            ("homology", "--degrees", "0..12"),
        ]
        for path in sorted((ROOT / "data").glob("*.json")):
            for cmd in commands:
                with self.subTest(path=path.name, cmd=cmd[0]):
                    r = run(*cmd, "--input", str(path), "--format", "json")
                    self.assertIn(r.returncode, (0, 4), r.stderr)
                    jsonschema.validate(json.loads(r.stdout), self.report_schema)
        r = run("cobordism", "--format", "json")
        self.assertEqual(r.returncode, 0)
        jsonschema.validate(json.loads(r.stdout), self.report_schema)

    def test_schema_rejects_unknown_field(self):
        doc = {"version": "1", "orbit_set": {"orbits": []}, "colour": "red"}
        with self.assertRaises(jsonschema.ValidationError):
            jsonschema.validate(doc, self.input_schema)


class ExitCodes(unittest.TestCase):
    def test_empty_orbit_set(self):
        r = run("cz", "--input", data("empty.json"))
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(len(r.stdout.strip().splitlines()), 1)  # header only
        j = json.loads(run("cz", "--input", data("empty.json"), "--format", "json").stdout)
        self.assertEqual(j["rows"], [])

    def test_malformed_rotation_names_field(self):
        doc = {"version": "1", "orbit_set": {"orbits": [
            {"name": "a", "type": "elliptic", "rotation": "4/3+eps", "action": "1"},
            {"name": "b", "type": "elliptic", "rotation": "1/0+eps", "action": "2"}]}}
        r = run("cz", "--input", write_doc(doc))
        self.assertEqual(r.returncode, 2)
        self.assertIn("orbit_set.orbits[1].rotation", r.stderr)

    def test_unknown_field_names_path(self):
        doc = {"version": "1", "model": {"kind": "lens_space", "n": 2, "genus": 0}}
        r = run("cz", "--input", write_doc(doc))
        self.assertEqual(r.returncode, 2)
        self.assertIn("model.genus", r.stderr)

    def test_bad_moduli_record(self):
        doc = json.loads(Path(data("balanced.json")).read_text())
        doc["moduli"][0]["sign"] = 3
        r = run("homology", "--input", write_doc(doc))
        self.assertEqual(r.returncode, 2)
        self.assertIn("moduli", r.stderr)

    def test_invalid_json(self):
        f = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
        f.write("{ not json")
        f.close()
        self.assertEqual(run("cz", "--input", f.name).returncode, 2)

    def test_bad_flags(self):
        self.assertEqual(run("cz").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("homology", "--input", data("s3.json"), "--degrees", "9").returncode, 2)
        self.assertEqual(run("homology", "--input", data("s3.json"), "--action-cap", "x/y").returncode, 2)
        self.assertEqual(run("buildings", "--input", data("s3.json"), "--budgets", "levels=two").returncode, 2)
        self.assertEqual(run("buildings", "--input", data("s3.json"), "--x", "nosuch").returncode, 2)

    def test_unbalanced_moduli_exit_4(self):
        r = run("homology", "--input", data("unbalanced.json"))
        self.assertEqual(r.returncode, 4)
        lines = r.stdout.splitlines()
        self.assertEqual(lines[0], "d^2 != 0: FAIL")
        self.assertIn("<d^2 a, c> = 1", lines[1])
        self.assertNotIn("degree", r.stdout)  # no ranks once the check fails
        j = json.loads(run("homology", "--input", data("unbalanced.json"), "--format", "json").stdout)
        self.assertFalse(j["d_squared"]["ok"])
        self.assertEqual(j["d_squared"]["witness"], {"class": 0, "degree": 2, "x": "a", "z": "c", "value": "1"})
        self.assertNotIn("total", j)


class Outputs(unittest.TestCase):
    def test_s3_table(self):
        j = json.loads(run("homology", "--input", data("s3.json"), "--format", "json").stdout)
        self.assertTrue(j["d_squared"]["ok"])
        ranks = {row["degree"]: row["rank"] for row in j["total"]}
        self.assertEqual(sorted(ranks), list(range(41)))
        for d, r in ranks.items():
            self.assertEqual(r, 1 if d >= 2 and d % 2 == 0 else 0, d)

    def test_lens2_table(self):
        text = run("homology", "--input", data("lens2.json")).stdout
        self.assertTrue(text.startswith("d^2 = 0: PASS\n"))
        j = json.loads(run("homology", "--input", data("lens2.json"), "--format", "json").stdout)
        ranks = {row["degree"]: row["rank"] for row in j["total"]}
        for d, r in ranks.items():
            want = 2 if d == 0 else (3 if d % 2 == 0 else 0)
            self.assertEqual(r, want, d)

    def test_cz_ellipsoid_gradings(self):
        j = json.loads(run("cz", "--input", data("ellipsoid_cobordism_upper.json"), "--format", "json").stdout)
        grading = {(row["orbit"], row["k"]): row["grading"] for row in j["rows"]}
        self.assertEqual(grading[("delta1", 1)], 2)
        self.assertEqual(grading[("delta1", 2)], 4)
        self.assertEqual(grading[("delta2", 1)], 6)
        self.assertEqual(grading[("delta1", 3)], 8)
        self.assertEqual(len(j["rows"]), 6)

    def test_classify_examples(self):
        self.assertIn("dynamically separated: PASS", run("classify", "--input", data("s3.json")).stdout)
        out = run("classify", "--input", data("ellipsoid.json")).stdout
        self.assertIn("FAIL condition II: gamma1 class 0, mu(^1) = 3 -> mu(^2) = 5 (increment 2)", out)
        self.assertIn("dynamically convex: FAIL", run("classify", "--input", data("planted_mu2.json")).stdout)

    def test_buildings_examples(self):
        j = json.loads(run("buildings", "--input", data("ellipsoid.json"), "--format", "json").stdout)
        self.assertIn("type_iii", {b["type"] for b in j["buildings"]})
        self.assertEqual(j["budgets"]["max_levels"], 3)
        j = json.loads(run("buildings", "--input", data("s3.json"), "--format", "json").stdout)
        self.assertTrue(j["lemmas"]["dynamically_separated"])
        self.assertNotIn("type_iii", {b["type"] for b in j["buildings"]})
        self.assertTrue(j["lemmas"]["pass"])

    def test_zero_budgets(self):
        zero = "levels=0,degree=0,branch=0,components=0,iterate=0"
        j = json.loads(run("buildings", "--input", data("ellipsoid.json"), "--budgets", zero, "--format", "json").stdout)
        self.assertEqual(j["buildings"], [])
        self.assertTrue(j["incomplete"])

    def test_flag_overrides_document(self):
        j = json.loads(run("cz", "--input", data("ellipsoid.json"), "--format", "json").stdout)
        self.assertEqual(j["k_max"], 6)
        j = json.loads(run("cz", "--input", data("ellipsoid.json"), "--k-max", "2", "--format", "json").stdout)
        self.assertEqual(j["k_max"], 2)
        j = json.loads(run("homology", "--input", data("s3.json"), "--degrees", "0..6", "--action-cap", "2",
                           "--format", "json").stdout)
        self.assertEqual(j["degrees"], [0, 6])
        self.assertEqual(j["action_cap"], "2")

    def test_condition_d(self):
        j = json.loads(run("buildings", "--input", data("hyperbolic_ladder.json"), "--format", "json").stdout)
        d = j["condition_d"]
        self.assertTrue(d["pass"])
        self.assertEqual([y["orbit"] for y in d["intermediates"]], ["b", "c^2"])
        self.assertEqual({b["type"] for b in j["buildings"]}, {"type_i", "type_ii"})

    def test_cobordism(self):
        j = json.loads(run("cobordism", "--format", "json").stdout)
        self.assertEqual(j["simple_matches"], [["delta1", "gamma1"], ["delta2", "gamma1^2"]])
        self.assertEqual(j["double_cover_index"], -2)


class Determinism(unittest.TestCase):
    def test_byte_identical(self):
        cases = [
            ("buildings", "--input", data("ellipsoid.json"), "--format", "json"),
            ("buildings", "--input", data("hyperbolic_ladder.json")),
            ("homology", "--input", data("lens2.json"), "--format", "json"),
            ("classify", "--input", data("ellipsoid.json"), "--format", "json"),
        ]
        for args in cases:
            with self.subTest(args=args):
                outs = {run(*args, threads=t).stdout for t in (1, 2, 4, 4)}
                self.assertEqual(len(outs), 1)


if __name__ == "__main__":
    CCH = sys.argv[1]
    ROOT = Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0]], verbosity=2)
