"""End-to-end checks of the wreath-stats executable (path given as argv[1])."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

CLI = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("WREATH_STATS_BUDGET", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def ok_json(*args):
    proc = run(*args)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def ok_csv(*args):
    proc = run("--format", "csv", *args)
    assert proc.returncode == 0, proc.stderr
    return list(csv.DictReader(io.StringIO(proc.stdout)))


def labels(n):
    return [row["label"] for row in ok_csv("classes", "--n", str(n), "--r", "2")]


class Classes(unittest.TestCase):
    def test_b2(self):
        rows = ok_csv("classes", "--n", "2", "--r", "2")
        self.assertEqual([r["label"] for r in rows], ["1,1;", "1;1", ";1,1", "2;", ";2"])
        self.assertEqual([int(r["class_size"]) for r in rows], [1, 2, 1, 2, 2])

    def test_min_cycle(self):
        rows = ok_csv("classes", "--n", "5", "--r", "2", "--min-cycle", "4")
        self.assertEqual([r["label"] for r in rows], ["5;", ";5"])

    def test_empty(self):
        rows = ok_csv("classes", "--n", "0", "--r", "3")
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]["label"], ";;")
        self.assertEqual(rows[0]["class_size"], "1")

    def test_envelope(self):
        out = ok_json("classes", "--n", "3", "--r", "2")
        self.assertEqual(out["command"], "classes")
        self.assertEqual(out["format_version"], 1)
        self.assertEqual(sum(int(c["class_size"]) for c in out["payload"]), 48)


class Moments(unittest.TestCase):
    def value(self, *args):
        return ok_json("moment", *args)["payload"]["value"]

    def test_examples(self):
        self.assertEqual(self.value("--stat", "des_b", "--class", "3;5", "--k", "1"), "4")
        self.assertEqual(self.value("--stat", "neg", "--class", "5;", "--method", "formula"), "-15/2")
        self.assertEqual(self.value("--stat", "des_b", "--class", ";1,1", "--method", "brute"), "2")
        self.assertEqual(self.value("--stat", "des_b", "--class", "5;", "--k", "2", "--method", "genfunc"),
                         self.value("--stat", "des_b", "--class", "5;", "--k", "2", "--method", "brute"))

    def test_auto_matches_brute(self):
        for n in (4, 5):
            for label in labels(n):
                for stat in ("des_b", "inv", "neg", "inv_b"):
                    for k in ("1", "2"):
                        with self.subTest(label=label, stat=stat, k=k):
                            auto = self.value("--stat", stat, "--class", label, "--k", k)
                            brute = self.value("--stat", stat, "--class", label, "--k", k, "--method", "brute")
                            self.assertEqual(auto, brute)

    def test_stat_file(self):
        payload = {"n": 3, "r": 2, "terms": [{"coeff": "1", "constraints": [[1, -2]]}]}
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump(payload, f)
        try:
            self.assertEqual(ok_json("moment", "--stat-file", f.name, "--class", "3;", "--method", "formula")
                             ["payload"]["value"], "1/4")
        finally:
            os.unlink(f.name)


class Other(unittest.TestCase):
    def test_genfunc(self):
        self.assertEqual(ok_json("genfunc", "--n", "2")["payload"]["coefficients"], ["0", "1", "6", "1"])
        self.assertEqual(ok_json("genfunc", "--class", "2;")["payload"]["coefficients"], ["0", "0", "2"])

    def test_descent_count(self):
        self.assertEqual(ok_csv("descent-count", "--class", "2;", "--d", "2"), [{"d": "2", "count": "2"}])

    def test_clt(self):
        rows = ok_csv("clt", "--n-list", "10,20,40")
        self.assertEqual([r["mean"] for r in rows], ["5", "10", "20"])

    def test_dist(self):
        rows = ok_csv("dist", "--stat", "des_b", "--group", "--n", "2")
        self.assertEqual([(r["value"], r["count"]) for r in rows], [("0", "1"), ("1", "6"), ("2", "1")])

    def test_degree(self):
        self.assertFalse(ok_json("degree", "--stat", "des_b", "--n", "3", "--m", "1")["payload"]["in_span"])
        self.assertTrue(ok_json("degree", "--stat", "neg", "--n", "3", "--m", "1")["payload"]["in_span"])

    def test_oie(self):
        out = ok_json("oie", "--builtin", "inv", "--n0", "4", "--k", "1")
        self.assertEqual(out["payload"]["coefficients"], ["0", "-1/4", "1/4"])

    def test_sample_is_seeded(self):
        a = run("--seed", "7", "sample", "--class", "3;", "--count", "3")
        b = run("sample", "--class", "3;", "--count", "3", "--seed", "7")
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, b.stdout)


class Parity(unittest.TestCase):
    def test_json_and_csv_agree(self):
        for stat in ("des_b", "inv_b"):
            js = ok_json("dist", "--stat", stat, "--class", "3,1;1")["payload"]
            rows = ok_csv("dist", "--stat", stat, "--class", "3,1;1")
            self.assertEqual({r["value"]: r["count"] for r in rows}, {e["value"]: e["count"] for e in js})
        js = ok_json("genfunc", "--n", "4")["payload"]["coefficients"]
        self.assertEqual([r["coefficient"] for r in ok_csv("genfunc", "--n", "4")], js)
        js = ok_json("moment", "--stat", "inv", "--class", "4;", "--k", "2")["payload"]
        row = ok_csv("moment", "--stat", "inv", "--class", "4;", "--k", "2")[0]
        self.assertEqual((row["value"], row["method"]), (js["value"], js["method"]))

    def test_deterministic_across_jobs(self):
        a = run("--jobs", "1", "dist", "--stat", "inv", "--class", "6;")
        b = run("--jobs", "4", "dist", "--stat", "inv", "--class", "6;")
        self.assertEqual(a.stdout, b.stdout)


class ExitCodes(unittest.TestCase):
    def test_precondition(self):
        proc = run("moment", "--stat", "inv", "--class", "2,2;", "--k", "2", "--method", "formula")
        self.assertEqual(proc.returncode, 2)
        self.assertIn("cycle of length <= mk", proc.stderr)

    def test_budget(self):
        self.assertEqual(run("--budget", "10", "moment", "--stat", "inv", "--class", "5;", "--method",
                             "brute").returncode, 3)
        self.assertEqual(run("moment", "--stat", "inv", "--class", "5;", "--method", "brute",
                             env={"WREATH_STATS_BUDGET": "10"}).returncode, 3)

    def test_parse(self):
        self.assertEqual(run("moment", "--stat", "inv", "--class", "x;").returncode, 4)
        self.assertEqual(run("bogus").returncode, 4)
        self.assertEqual(run("oie", "--builtin", "inv", "--n0", "4", "--exclude", "7,x").returncode, 4)


if __name__ == "__main__":
    CLI = sys.argv.pop(1)
    unittest.main(verbosity=1)
