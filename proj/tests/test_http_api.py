"""HTTP API test: starts `ugeo serve --port 0` and validates every response
against the committed schemas.

usage: test_http_api.py <ugeo binary> <schema dir>
"""

import json
import os
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema
import requests
from referencing import Registry, Resource

UGEO = sys.argv[1] if len(sys.argv) > 1 else "build/tools/ugeo"
SCHEMAS = pathlib.Path(sys.argv[2] if len(sys.argv) > 2 else "schemas")

PATH3 = {"variant": "plain", "vertices": 3, "edges": [[0, 1], [1, 2]], "token": 1}
PATH5 = {"variant": "plain", "vertices": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]], "token": 0}


def load_validators():
    docs = {p.name: json.loads(p.read_text()) for p in SCHEMAS.glob("*.schema.json")}
    registry = Registry().with_resources(
        (doc["$id"], Resource.from_contents(doc)) for doc in docs.values()
    )
    return {
        name.split(".")[0]: jsonschema.Draft202012Validator(doc, registry=registry)
        for name, doc in docs.items()
        if name != "common.schema.json"
    }


VALIDATORS = load_validators()


class Server:
    def __init__(self, env=None):
        self.proc = subprocess.Popen(
            [UGEO, "serve", "--port", "0"],
            stdout=subprocess.PIPE,
            text=True,
            env={**os.environ, **(env or {})},
        )
        line = self.proc.stdout.readline().strip()
        if not line.startswith("listening on "):
            self.stop()
            raise RuntimeError("server did not start: " + line)
        self.base = line[len("listening on ") :]

    def stop(self):
        self.proc.terminate()
        self.proc.wait(timeout=10)
        self.proc.stdout.close()


class ApiTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.server = Server({"GEO_CORS_ORIGIN": "http://localhost:5173"})
        cls.base = cls.server.base

    @classmethod
    def tearDownClass(cls):
        cls.server.stop()

    def call(self, method, path, schema, status, body=None):
        r = requests.request(method, self.base + path, json=body, timeout=30)
        self.assertEqual(r.status_code, status, r.text)
        self.assertEqual(r.headers["Content-Type"], "application/json")
        doc = r.json()
        VALIDATORS[schema].validate(doc)
        return doc

    def create(self, game, ai=()):
        return self.call("POST", "/api/games", "game", 201, {"game": game, "ai_players": list(ai)})

    def test_health(self):
        self.call("GET", "/api/health", "health", 200)

    def test_plain_game(self):
        g = self.create(PATH3)
        self.assertEqual(g["to_move"], 0)
        self.assertEqual(len(g["legal_moves"]), 2)
        got = self.call("GET", "/api/games/" + g["id"], "game", 200)
        self.assertEqual(got["state"], g["state"])
        hint = self.call("GET", f"/api/games/{g['id']}/hint", "hint", 200)
        self.assertEqual(hint["reason"], "winning_move")
        after = self.call("POST", f"/api/games/{g['id']}/moves", "game", 200, {"move": hint["move"]})
        self.assertTrue(after["terminal"])
        self.assertEqual(after["winner"], 0)

    def test_ai_reply(self):
        g = self.create(PATH5, ai=[1])
        r = self.call("POST", f"/api/games/{g['id']}/moves", "game", 200, {"type": "traverse", "to": 1})
        self.assertEqual(r["ai_reply"]["advice_quality"], "exact")
        self.assertEqual(len(r["history"]), 2)

    def test_variants(self):
        for game in (
            {"variant": "pass", "vertices": 2, "edges": [[0, 1]], "token": 0, "passes_remaining": 1},
            {"variant": "multitoken", "vertices": 4, "edges": [[0, 1], [2, 3]], "tokens": [0, 2]},
            {"variant": "sum", "components": [PATH3, {"vertices": 2, "edges": [[0, 1]], "token": 0}]},
            {"variant": "swapuno", "hands": [[{"color": 1, "rank": 1}], [{"color": 1, "rank": 2}]]},
        ):
            g = self.create(game)
            self.call("GET", f"/api/games/{g['id']}/hint", "hint", 200)
            move = g["legal_moves"][0]
            self.call("POST", f"/api/games/{g['id']}/moves", "game", 200, move)

    def test_errors(self):
        r = requests.post(self.base + "/api/games", data="{nope", timeout=30)
        self.assertEqual(r.status_code, 400)
        VALIDATORS["error"].validate(r.json())
        bad_token = {"variant": "plain", "vertices": 3, "edges": [[0, 1]], "token": 7}
        self.call("POST", "/api/games", "error", 422, bad_token)
        self.call("GET", "/api/games/missing", "error", 404)
        self.call("GET", "/api/games/missing/hint", "error", 404)
        g = self.create(PATH3)
        self.call("POST", f"/api/games/{g['id']}/moves", "error", 409, {"type": "traverse", "to": 1})
        self.call("POST", f"/api/games/{g['id']}/moves", "error", 400, {"type": "teleport"})

    def test_cors(self):
        r = requests.options(self.base + "/api/games", timeout=30)
        self.assertEqual(r.status_code, 204)
        self.assertEqual(r.headers["Access-Control-Allow-Origin"], "http://localhost:5173")
        r = requests.get(self.base + "/api/health", timeout=30)
        self.assertEqual(r.headers["Access-Control-Allow-Origin"], "http://localhost:5173")


class SnapshotTest(unittest.TestCase):
    def test_restart_restores_sessions(self):
        with tempfile.TemporaryDirectory() as snap:
            server = Server({"GEO_SNAPSHOT_DIR": snap})
            try:
                g = requests.post(server.base + "/api/games", json=PATH5, timeout=30).json()
                requests.post(
                    f"{server.base}/api/games/{g['id']}/moves", json={"type": "traverse", "to": 1}, timeout=30
                )
                before = requests.get(f"{server.base}/api/games/{g['id']}", timeout=30).json()
            finally:
                server.stop()
            server = Server({"GEO_SNAPSHOT_DIR": snap})
            try:
                after = requests.get(f"{server.base}/api/games/{g['id']}", timeout=30).json()
            finally:
                server.stop()
            self.assertEqual(after, before)
            VALIDATORS["game"].validate(after)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1])
