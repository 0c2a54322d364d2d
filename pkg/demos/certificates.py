"""
Lower-bound certificates
========================

Upper bounds come from evaluated layouts.  Lower bounds come from
certificates: three connected parts, pairwise non-adjacent, joined by paths
that keep clear of the third part, each part certified recursively.
"""

import dataclasses
import json

from lmwidth import CertificateError, certify_H_square, check_certificate, gen_H, graph_power, lmw_oracle

# %%
# H(1)^2 has width 2
# ------------------

sq = graph_power(gen_H(1).graph, 2)
cert = certify_H_square(1)
print(json.dumps(cert.to_json(), indent=1)[:600], "...")
print("validated bound:", check_certificate(sq, cert), " oracle:", lmw_oracle(sq)[0])

# %%
# H(2)^2 has width 4, without running the oracle on 121 vertices
# --------------------------------------------------------------

sq2 = graph_power(gen_H(2).graph, 2)
print("validated bound on H(2)^2:", check_certificate(sq2, certify_H_square(2)))

# %%
# A broken certificate
# --------------------
# Making two parts coincide is caught, and the error names the node.

core = cert.children[0]
broken = dataclasses.replace(cert, children=(dataclasses.replace(core, parts=(core.parts[0],) * 3),))
try:
    check_certificate(sq, broken)
except CertificateError as exc:
    print("rejected:", exc.node, exc.condition)
