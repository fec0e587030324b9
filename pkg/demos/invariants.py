"""Chronon number and path invariants of a three-node path net."""

from qnd.network import FiniteNet, chronon_number, path_invariant, path_invariant_oracle

net = FiniteNet(3, [(0, 1), (1, 2)])
state = net.state()
print("state:", state)
print("N(1):", chronon_number(state, 3))
n2 = path_invariant(2, state, 3)
print("N(2):", n2)
print("agrees with the literal sum:", n2 == path_invariant_oracle(2, state, 3))
