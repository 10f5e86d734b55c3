"""
Checking a group given only by its multiplication table
=======================================================

Any finite group can be fed in as a JSON Cayley table.  The table is validated
(Latin square, identity row and column, associativity) before orders are
computed, and the bound checkers then apply to it like to any other group.
"""

import json
import tempfile
from pathlib import Path

import numpy as np

from psik import load_cayley, psi
from psik.cayley import CayleyTableError, cayley_from_json
from psik.verify import check_main_bound

# S_3 as permutations of {0, 1, 2}, multiplied by composition.
perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
index = {p: i for i, p in enumerate(perms)}
table = [[index[tuple(a[b[x]] for x in range(3))] for b in perms] for a in perms]

path = Path(tempfile.mkdtemp()) / "s3.json"
path.write_text(json.dumps({"n": 6, "identity": 0, "table": table}))
g = load_cayley(path, check="always")
print("psi(S3) =", psi(g, 1).value)
print(check_main_bound(g, 1).to_dict())

# A table that is not a group is refused with the offending cell named.
broken = np.array(table)
broken[[1, 2]] = broken[[2, 1]]
broken[1, 1], broken[1, 0] = broken[1, 0], broken[1, 1]
try:
    cayley_from_json({"n": 6, "identity": 0, "table": broken.tolist()}, check="always")
except CayleyTableError as exc:
    print("rejected:", exc)
