# %% [markdown]
# # Command line and regression corpus
#
# The same functionality is available as `lenumbers ...` (or
# `python -m lenumbers ...`).  Reports are JSON with sorted keys.

# %%
import json

from lenumbers import report
from lenumbers.cli import main

main(["analyze", "--poly", "(z^2-x^2-y^2)*(z-x)", "--vars", "x,y,z", "--format", "text"])

# %%
main(["classify", "--l0", "2", "--l1", "3", "--m", "2", "--format", "text"])
main(["charpolys", "--degree", "2", "--trace", "-1"])

# %% [markdown]
# The bundled corpus (JSON lines) is re-run with per-entry seeds.

# %%
results = report.run_corpus(report.read_corpus())
print(report.corpus_table(results))
print(json.dumps(sorted(report.load_schema()["required"])))
