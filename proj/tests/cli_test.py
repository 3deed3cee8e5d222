"""End-to-end checks of the truemper CLI: exit codes, JSON schemas, manifests."""

import filecmp
import json
import os
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema
from referencing import Registry, Resource

BINARY = pathlib.Path(sys.argv.pop(1)).resolve()
ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"
DOCS = ROOT / "docs"


def load_registry():
    resources = []
    for path in DOCS.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], Resource.from_contents(schema)))
    return Registry().with_resources(resources)


REGISTRY = load_registry()


def validate(instance, name):
    schema = REGISTRY.contents(f"urn:truemper:{name}")
    jsonschema.Draft202012Validator(schema, registry=REGISTRY).validate(instance)


def run(*args, env=None, cwd=None):
    full_env = dict(os.environ)
    full_env.pop("TRUEMPER_ORACLE_CAP", None)
    full_env.update(env or {})
    return subprocess.run([str(BINARY), *map(str, args)], capture_output=True, text=True, env=full_env, cwd=cwd)


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = pathlib.Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_recognize_long_pyramid(self):
        out = self.dir / "report.json"
        r = run("recognize", "only-pyramid", DATA / "long_pyramid.txt", "--json", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        report = json.loads(out.read_text())
        validate(report, "report")
        self.assertTrue(report["verdict"])
        manifest = json.loads((self.dir / "report.json.manifest.json").read_text())
        validate(manifest, "manifest")
        self.assertEqual(manifest["command"], "recognize")
        self.assertEqual(manifest["oracle_cap"], 14)

    def test_recognize_wheel(self):
        out = self.dir / "report.json"
        r = run("recognize", "only-prism", DATA / "w4.txt", "--witness", "--json", out)
        self.assertEqual(r.returncode, 1)
        self.assertIn('"kind":"wheel"', r.stdout)
        report = json.loads(out.read_text())
        validate(report, "report")
        self.assertEqual(report["witness"]["kind"], "wheel")

    def test_recognize_several_inputs(self):
        out = self.dir / "reports.json"
        r = run("recognize", "universally-signable", DATA / "c7.txt", DATA / "k23.txt", "--json", out)
        self.assertEqual(r.returncode, 1)
        reports = json.loads(out.read_text())
        validate(reports, "report")
        self.assertEqual([x["verdict"] for x in reports], [True, False])

    def test_malformed_input(self):
        r = run("recognize", "only-pyramid", DATA / "malformed.txt")
        self.assertEqual(r.returncode, 2)
        self.assertIn("line 3", r.stderr)
        self.assertEqual(run("recognize", "only-pyramid", self.dir / "missing.txt").returncode, 2)
        self.assertEqual(run("recognize", "nonsense", DATA / "c7.txt").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)

    def test_decompose_clique(self):
        out, dot = self.dir / "tree.json", self.dir / "tree.dot"
        r = run("decompose", "clique", DATA / "chordal.txt", "--json", out, "--dot", dot)
        self.assertEqual(r.returncode, 0, r.stderr)
        tree = json.loads(out.read_text())
        validate(tree, "clique-tree")
        leaves = [n["kind"] for n in tree["nodes"] if n["kind"] != "internal"]
        self.assertEqual(set(leaves), {"clique"})
        self.assertTrue(dot.read_text().startswith("digraph"))

    def test_decompose_2join(self):
        out = self.dir / "c9.json"
        r = run("decompose", "2join", DATA / "c9.txt", "--json", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        tree = json.loads(out.read_text())
        validate(tree, "2join-tree")
        self.assertEqual([n["kind"] for n in tree["nodes"]], ["no-2join"])

        out = self.dir / "composed.json"
        r = run("decompose", "2join", DATA / "composed_pyramids.txt", "--json", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        tree = json.loads(out.read_text())
        validate(tree, "2join-tree")
        self.assertGreaterEqual(sum(n["kind"] == "internal" for n in tree["nodes"]), 1)

    def test_generate_and_recognize(self):
        out = self.dir / "a"
        r = run("generate", "only-prism", "--seed", 7, "--size", 20, "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        graph = out / "only-prism-7.txt"
        recipe = json.loads((out / "only-prism-7.recipe.json").read_text())
        validate(recipe, "recipe")
        validate(json.loads((out / "manifest.json").read_text()), "manifest")
        self.assertEqual(run("recognize", "only-prism", graph).returncode, 0)

        again = self.dir / "b"
        run("generate", "only-prism", "--seed", 7, "--size", 20, "--out", again)
        self.assertTrue(filecmp.cmp(graph, again / "only-prism-7.txt", shallow=False))

        replayed = self.dir / "replayed.txt"
        r = run("generate", "--replay", out / "only-prism-7.recipe.json", "--out", replayed)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertTrue(filecmp.cmp(graph, replayed, shallow=False))

    def test_generate_planted(self):
        out = self.dir / "p"
        r = run("generate", "planted:prism", "--seed", 3, "--size", 12, "--count", 3, "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        files = sorted(out.glob("planted-prism-*.txt"))
        self.assertEqual(len(files), 3)
        for f in files:
            self.assertEqual(run("recognize", "only-pyramid", f).returncode, 1)
        self.assertEqual(run("generate", "planted:square", "--out", out).returncode, 2)

    def test_oracle(self):
        r = run("oracle", DATA / "k23.txt", "--kinds", "theta")
        self.assertEqual(r.returncode, 1)
        witness = json.loads(r.stdout)
        validate(witness, "witness")
        self.assertEqual(witness["kind"], "theta")

        r = run("oracle", DATA / "c7.txt")
        self.assertEqual(r.returncode, 0)
        self.assertIn("none", r.stdout)

        r = run("oracle", DATA / "c15.txt")
        self.assertEqual(r.returncode, 2)
        self.assertIn("oracle scale exceeded", r.stderr)
        self.assertEqual(run("oracle", DATA / "c15.txt", env={"TRUEMPER_ORACLE_CAP": "15"}).returncode, 0)
        self.assertEqual(run("oracle", DATA / "c15.txt", "--cap", 15).returncode, 0)
        self.assertEqual(run("oracle", DATA / "c7.txt", "--kinds", "square").returncode, 2)

    def test_rerun_reproduces_outputs(self):
        r = run("generate", "only-pyramid", "--seed", 11, "--size", 25, "--count", 2, "--out", "gen", cwd=self.dir)
        self.assertEqual(r.returncode, 0, r.stderr)
        gen = self.dir / "gen"
        original = {p.name: p.read_bytes() for p in gen.glob("*.txt")}
        manifest = self.dir / "gen.manifest.json"
        (gen / "manifest.json").rename(manifest)
        for p in gen.iterdir():
            p.unlink()
        r = run("rerun", manifest, cwd=self.dir)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual({p.name: p.read_bytes() for p in gen.glob("*.txt")}, original)

    def test_rerun_keeps_recorded_cap(self):
        manifest = self.dir / "oracle.manifest.json"
        r = run("oracle", DATA / "c15.txt", "--manifest", manifest, env={"TRUEMPER_ORACLE_CAP": "15"})
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(manifest.read_text())["oracle_cap"], 15)
        self.assertEqual(run("rerun", manifest).returncode, 0)


if __name__ == "__main__":
    unittest.main(verbosity=2)
