"""Serial and parallel products of quadrupole chronons and the cyclic serial trace."""

import random

from qnd.quadrupole import parallel_product, random_quad, serial_product, trace_parallel, trace_serial

rng = random.Random(3)
a, b = random_quad(rng, 2), random_quad(rng, 2)
print("tr_s(a∘b) =", trace_serial(serial_product(a, b)), " tr_s(b∘a) =", trace_serial(serial_product(b, a)))
