"""Local contraction against the remote transition amplitude in the toy model."""

from qnd.toy import ToyConfig, build_experiment_and_dynamics, local_amplitude, remote_amplitude, schwinger_variation, potential_variation

cfg = ToyConfig(dim=8, steps=4)
E, D = build_experiment_and_dynamics(cfg)
loc, rem = local_amplitude(E, D), remote_amplitude(cfg)
print(f"local  {loc:.12f}\nremote {rem:.12f}\n|diff| {abs(loc - rem):.2e}")

rep = schwinger_variation(ToyConfig(dim=8, steps=4, tav=0.05), potential_variation(cfg))
for tau, r in zip(rep.taus, rep.residuals):
    print(f"tau={tau:.4f}  residual={r:.3e}")
print("halving ratios:", [round(x, 2) for x in rep.ratios])
