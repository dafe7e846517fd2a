"""Shared fixtures: small hand-checked combinatorial data used across tests."""

from simplepa import Chain


def chain_of(*sets) -> Chain:
    """Build a chain from explicit set literals."""
    return Chain.from_sets(sets)


# The twelve maximal nested sets over {0, 1, 2}, written out set by set.
VERTICES_N2 = [
    frozenset([chain_of({1, 2}, {2}), chain_of({1, 2})]),
    frozenset([chain_of({1, 2}, {2}), chain_of({2})]),
    frozenset([chain_of({0, 2}, {2}), chain_of({2})]),
    frozenset([chain_of({0, 2}, {2}), chain_of({0, 2})]),
    frozenset([chain_of({0, 2}, {0}), chain_of({0, 2})]),
    frozenset([chain_of({0, 2}, {0}), chain_of({0})]),
    frozenset([chain_of({0, 1}, {0}), chain_of({0})]),
    frozenset([chain_of({0, 1}, {0}), chain_of({0, 1})]),
    frozenset([chain_of({0, 1}, {1}), chain_of({0, 1})]),
    frozenset([chain_of({0, 1}, {1}), chain_of({1})]),
    frozenset([chain_of({1, 2}, {1}), chain_of({1})]),
    frozenset([chain_of({1, 2}, {1}), chain_of({1, 2})]),
]

# The twelve chains over {0, 1, 2}: six single sets, six two-set chains.
CHAINS_N2 = [
    chain_of({0}),
    chain_of({1}),
    chain_of({2}),
    chain_of({0, 1}),
    chain_of({0, 2}),
    chain_of({1, 2}),
    chain_of({0, 1}, {0}),
    chain_of({0, 2}, {0}),
    chain_of({0, 1}, {1}),
    chain_of({1, 2}, {1}),
    chain_of({0, 2}, {2}),
    chain_of({1, 2}, {2}),
]
