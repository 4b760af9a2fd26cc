"""
Encoding and unencoding on the Hermitian curve
==============================================

A one-point code on the q=4 Hermitian curve Y^4 + Y = X^5 over GF(16),
encoded fast and naively, then recovered through the semi-grid path and
through the Groebner path.
"""

# %%
# The curve and its 64 rational points.
import random

from cabcodes import encode, encode_naive, hermitian, new_code, precompute, unencode
from cabcodes.codec import random_message

C, P = hermitian(4)
print(C.a, C.b, C.genus, P.n, P.is_semi_grid())

# %%
# A code of order m = 40.  k = m + 1 - g while 2g - 2 < m < n.
code = new_code(C, P, 40)
print(code.n, code.k, code.maximal_semigrid)

# %%
# Encode a random message both ways.
rng = random.Random(0)
msg = random_message(code, rng)
cw = encode(code, msg)
assert cw == encode_naive(code, msg)
print(cw[:8])

# %%
# Unencode via the semi-grid interpolation, then via the Groebner basis.
assert unencode(code, cw) == msg
precompute(code)
assert unencode(code, cw, force_general=True) == msg
print("round trip ok")
