"""Validates the JSON output of every kronvp subcommand against schemas/.

Usage: test_schemas.py KRONVP_BINARY SCHEMA_DIR
"""

import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = None
SCHEMAS = None


def load_schema(name):
    with open(SCHEMAS / f"{name}.schema.json") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    return schema


def run(*args):
    proc = subprocess.run([str(BINARY), *args], capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        raise AssertionError(f"kronvp {' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    return json.loads(proc.stdout)


class SchemaTest(unittest.TestCase):
    def check(self, name, *args):
        doc = run(*args)
        jsonschema.validate(doc, load_schema(name))
        # serialization is stable: a second run gives identical text
        self.assertEqual(json.dumps(doc), json.dumps(run(*args)))
        return doc

    def test_kron(self):
        doc = self.check("kron", "kron", "--mu", "12,12", "--nu", "12,12", "--lam", "12,7,4,1")
        self.assertEqual(doc["g"], 0)
        self.check("kron", "kron", "--mu", "6,5,4,1", "--nu", "9,7", "--lam", "9,7")

    def test_atomic(self):
        self.assertEqual(self.check("atomic", "atomic", "--mu", "12,12", "--nu", "12,12", "--lam", "12,7,4,1")["atomic"], 32)
        self.check("atomic", "atomic", "--n", "3", "--m", "3", "--mu", "3,2,1", "--nu", "4,2", "--lam", "2,2,1,1")

    def test_oracle(self):
        self.check("oracle", "oracle", "--mu", "3,2", "--nu", "3,2", "--lam", "3,1,1")
        self.check("oracle", "oracle", "--lam", "3,1", "--n", "2", "--m", "3")

    def test_bravyi(self):
        self.check("bravyi", "bravyi", "--mu", "9,7", "--nu", "9,7", "--lam", "6,5,4,1")

    def test_reduced(self):
        self.check("reduced", "reduced", "--lam", "2", "--mu", "2", "--nu", "2")
        big = self.check("reduced", "reduced", "--lam", "18014398509481984", "--mu", "18014398509481984",
                         "--nu", "18014398509481984")
        self.assertEqual(big["value"], "9007199254740993")

    def test_stable(self):
        self.check("stable", "stable", "--u", "3", "--t", "2", "--s", "1", "--kmax", "5")

    def test_dilate(self):
        doc = self.check("dilate", "dilate", "--mu", "110,90", "--nu", "120,80", "--lam", "132,38,19,11",
                         "--kmax", "24", "--fit", "--max-period", "4", "--max-degree", "2")
        self.assertEqual(doc["fit"]["period"], 2)
        self.check("dilate", "dilate", "--mu", "7,4", "--nu", "8,3", "--lam", "6,3,2", "--kmax", "5",
                   "--method", "atomic224")
        self.check("dilate", "dilate", "--mu", "1,1", "--nu", "1,1", "--lam", "1,1", "--kmax", "6",
                   "--method", "oracle")

    def test_matrix(self):
        self.check("matrix", "matrix", "--n", "3", "--m", "3")
        self.check("matrix", "matrix", "--n", "2", "--m", "3", "--face", "s1")

    def test_vpcount(self):
        with tempfile.TemporaryDirectory() as d:
            path = pathlib.Path(d) / "a22.json"
            path.write_text(json.dumps({"rows": ["s0", "s1"], "columns": [[1, 0], [0, 1], [1, 1], [1, 2]]}))
            doc = self.check("vpcount", "vpcount", "--matrix", str(path), "--b", "[2,3]")
            self.assertEqual(doc["count"], 5)

    def test_lr(self):
        self.check("lr", "lr", "--n", "2", "--m", "3")
        self.check("lr", "lr", "--n", "4", "--m", "4")

    def test_holes(self):
        doc = self.check("holes", "holes", "--weight", "24")
        self.assertEqual(len(doc["points"]), 455)
        self.assertEqual(self.check("holes", "holes", "--weight", "0")["points"], [{"g": 1, "i": 0, "j": 0, "k": 0}])

    def test_holes_schema_rejects_malformed(self):
        schema = load_schema("holes")
        for bad in ({"weight": 2},
                    {"weight": 2, "points": [{"i": 0, "j": 0, "k": 0}]},
                    {"weight": 2, "points": [{"i": 0, "j": 0, "k": 0, "g": -1}]},
                    {"weight": 2, "points": [{"i": 0, "j": 0, "k": 0, "g": "1.5"}]}):
            with self.assertRaises(jsonschema.ValidationError):
                jsonschema.validate(bad, schema)
        jsonschema.validate({"weight": 2, "points": [{"i": 0, "j": 0, "k": 0, "g": "12345678901234567890"}]}, schema)

    def test_verify(self):
        proc = subprocess.run([str(BINARY), "verify", "--oracle-weight", "6", "--random", "20", "--holes-weight", "6"],
                              capture_output=True, text=True, check=False)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        jsonschema.validate(json.loads(proc.stdout), load_schema("verify"))


if __name__ == "__main__":
    BINARY = pathlib.Path(sys.argv[1])
    SCHEMAS = pathlib.Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0]], verbosity=2)
