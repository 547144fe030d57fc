"""A P system whose result is a non-integer.

Run:  python demos/03_real_valued_psystem.py
"""
import pathlib

from fuzzyhybrid import enumerate_step_outcomes, initial_configuration, parse_file, run, serialize

HERE = pathlib.Path(__file__).parent

system = parse_file(HERE / "half.gfps")
print(serialize(system).text)

report = run(system, seed=0, max_steps=100, trace=lambda n, sel, cfg: print(f"step {n}: {cfg}"))
print(report.to_text())

# %% Nondeterminism: every maximal choice, and what different seeds pick
choice = parse_file(HERE / "choice.gfps")
for cfg in enumerate_step_outcomes(initial_configuration(choice), choice):
    print("possible:", cfg)
for seed in range(4):
    print(f"seed {seed}:", run(choice, seed).to_text())

# %% Degrees combine along the way: meet on consumption, join on arrival
print(run(parse_file(HERE / "meet.gfps")).to_text())
print(run(parse_file(HERE / "negative.gfps")).to_text())
