"""
Digest bitstreams
=================

Digests chained through feedback make a bitstream for the frequency and
runs tests. Hashing bare counters does not: short inputs give products
whose entries never wrap around p.
"""

from cayleyhash import get_scheme
from cayleyhash.analysis import emit_stream, monobit_test, runs_test

params = get_scheme("bsv")
for mode in ("feedback", "independent"):
    data = emit_stream(params, 10 ** 5, seed=7, mode=mode)
    mono, runs = monobit_test(data), runs_test(data)
    print(f"{mode:12s} monobit p={mono.p_value:.4f} runs p={runs.p_value:.4f}")

print(emit_stream(params, 4096, seed=7) == emit_stream(params, 4096, seed=7))
