"""Validates CLI JSON output against docs/output-schema.json."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

commands = [
    "theta eval --kind 2 --z 0.1 --q 0.3 --method product",
    "theta modular --kind 1 --z 0.2 --t 0.5",
    "elliptic modulus-from-c --c 2",
    "elliptic nome --k 0.5",
    "dist var --family theta2 --c 0.7 --route lambert",
    "dist cumulant --family theta3 --c 1 --order 4 --route eisenstein",
    "dist sample --family theta3 --c 1 --n 5 --route bernoulli",
    "bm green --process reflected --method spectral --alpha 0.7 --x 0.4 --y -0.5",
    "bm exit-sample --n 3 --dt 0.01",
    "kolmogorov pdf --h 1 --route elliptic",
    "kolmogorov sample --n 2 --steps 100",
    "verify --suite modular-1 table-1 ml-sech",
    "verify --list",
    "tables 1 --r 1 2",
    "tables 2",
]
failed = 0
for cmd in commands:
    out = subprocess.run([cli, *cmd.split()], capture_output=True, text=True, check=True).stdout
    errors = list(validator.iter_errors(json.loads(out)))
    for e in errors:
        print(f"{cmd}: {e.message}")
    failed += bool(errors)
print(f"{len(commands) - failed}/{len(commands)} outputs match the schema")
sys.exit(1 if failed else 0)
