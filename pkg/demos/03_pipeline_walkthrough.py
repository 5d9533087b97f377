# %% [markdown]
# # The staged pipeline on a toy configuration
#
# Every stage is a subcommand that reads and writes container files in
# one output directory, so each can be rerun on its own. This runs them
# in order on `configs/tiny.yaml`, then prints the report and renders the
# test predictions.

# %%
from pathlib import Path

from usrecon import container
from usrecon.cli import main

root = Path(__file__).resolve().parents[1]
cfg = root / "configs" / "tiny.yaml"
out = Path("demo_out/tiny")

for stage in ["phantoms", "simulate", "backproject", "saft", "lmbir", "train", "predict", "eval"]:
    assert main([stage, "--config", str(cfg), "--out", str(out)]) == 0, stage

# %% [markdown]
# The dataset container holds RF traces, the background reference, labels
# and back-projected network inputs; its header echoes the resolved config.

# %%
tensors, meta = container.load(out / "dataset.unds")
for name, arr in tensors.items():
    print(f"{name:>15} {arr.dtype} {arr.shape}")
print("geometry hash", meta["geometry_hash"])
print((out / "curves.csv").read_text())

# %%
main(["render", str(out / "ddl_test.unds"), "--out", str(out)])
main(["render", str(out / "phantoms.unds"), "--out", str(out)])
