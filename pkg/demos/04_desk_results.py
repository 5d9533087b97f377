# %% [markdown]
# # Desk-scale results
#
# Reads a finished desk run (`runs/desk`, produced with `configs/desk.yaml`),
# prints the method comparison and assembles a panel of test samples:
# ground truth, SAFT, L-MBIR and DDL in rows, one sample per column.
# Then the occlusion case: a rebar above a slow rectangle, which the
# delay-and-sum image shadows.

# %%
import sys
from pathlib import Path

import numpy as np

from usrecon import container, pipeline
from usrecon.classical import saft_reconstruct
from usrecon.config import RunConfig
from usrecon.geometry import RfData, remove_direct_arrival
from usrecon.linear_model import backproject, cached_system_matrix
from usrecon.metrics import fitted
from usrecon.phantom import occlusion_phantom
from usrecon.unet import NetworkParams, unet_forward
from usrecon.wave import simulate_all

root = Path(__file__).resolve().parents[1]
run = Path(sys.argv[1]) if len(sys.argv) > 1 else root / "runs" / "desk"
cfg = RunConfig.load(root / "configs" / "desk.yaml")
print((run / "summary_test.txt").read_text())

# %%
bp, _ = container.load(run / "backprojection.unds")
test = np.flatnonzero(bp["split"] == 2)[:4]
truth = bp["truth"][test]
rows = [truth] + [container.load(run / f"{m}_test.unds")[0]["recon"][:4] for m in ("saft", "lmbir", "ddl")]
# every reconstruction is shown in speed units after its best affine fit
panel = [[pipeline.render(fitted(img, g)) for img, g in zip(row, truth)] for row in rows]
pad = lambda a: np.pad(a, 1, constant_values=255)  # noqa: E731
grid = np.vstack([np.hstack([pad(p) for p in r]) for r in panel])
pipeline.write_pgm(run / "panel_test.pgm", grid)
print("wrote", run / "panel_test.pgm")

# %%
speed, mask = occlusion_phantom(cfg.phantom)
ds, _ = container.load(run / "dataset.unds")
rf = simulate_all(cfg.medium.fields(speed, cfg.sim.refine), cfg.array, cfg.grid, cfg.pulse, pipeline.dataset_sim_config(cfg))
rf = remove_direct_arrival(RfData(rf.traces.astype(np.float32).astype(float), cfg.array.fs),
                           RfData(ds["rf_reference"].astype(float), cfg.array.fs))
net = NetworkParams.load(run / "model.unds")
ddl = unet_forward(net, backproject(cached_system_matrix(cfg, run), rf), "eval")
saft = fitted(saft_reconstruct(rf, cfg.array, cfg.grid).values, speed)
bg = speed == cfg.phantom.c_background
for name, img in (("truth", speed), ("saft", saft), ("ddl", ddl)):
    c = (img[mask].mean() - img[bg].mean()) / (speed[mask].mean() - cfg.phantom.c_background)
    print(f"{name:>6}: contrast behind the rebar {c:5.2f}")
pipeline.write_pgm(run / "occlusion.pgm", np.hstack([pad(pipeline.render(i)) for i in (speed, saft, ddl)]))
