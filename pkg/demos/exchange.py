"""Exchange statistics at three levels of nesting."""

from qnd.exterior import wedge
from qnd.network import exchange_test, nested_unit

u = nested_unit(1, 2)
r = exchange_test("within", u, (1, 2))
print("within:", r.kind, r.eigenvalue)
s = wedge(nested_unit(1, 2), nested_unit(3, 4))
print("across:", exchange_test("across", s, (1, 3)).note)
ga, gb = sorted(s.generators())
r = exchange_test("factor", s, (ga, gb))
print("factor:", r.kind, r.eigenvalue)
