"""Validate CLI JSON output against docs/schemas. Usage: check_schemas.py BOTTKIT SCHEMA_DIR"""
import json
import subprocess
import sys

import jsonschema

bottkit, schema_dir = sys.argv[1], sys.argv[2]
cases = [
    ("cohomology", ["cohomology", "-g", "1,4", "-b", "Sym^3 Q(-4)", "-f", "json"]),
    ("cohomology", ["cohomology", "-g", "2,5", "-b", "S[2,1]Q + Q'(3)", "-w", "0,1", "-f", "json"]),
    ("violations", ["check", "-g", "1,5", "-b", "Sym^3 Q + Q", "--k-level", "1", "-f", "json"]),
    ("violations", ["check", "-g", "1,4", "-b", "O", "-c", "ottaviani", "-f", "json"]),
    ("complex", ["complex", "--which", "g25-fonarev", "-f", "json"]),
    ("complex", ["complex", "--which", "eagon", "-g", "2,5", "--j", "2", "-f", "json"]),
    ("criteria", ["criteria", "-g", "1,7", "-c", "beilinson", "-f", "json"]),
    ("criteria", ["criteria", "-g", "1,5", "-c", "main", "--k-level", "3", "-f", "json"]),
    ("acm-scan", ["acm-scan", "-g", "2,6", "--family", "schur", "--bound", "5", "-f", "json"]),
]
for schema, args in cases:
    out = subprocess.run([bottkit] + args, capture_output=True, text=True).stdout
    with open(f"{schema_dir}/{schema}.schema.json") as fh:
        jsonschema.validate(json.loads(out), json.load(fh))
    print("ok", schema, " ".join(args))
