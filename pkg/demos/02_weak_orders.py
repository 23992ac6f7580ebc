#!/usr/bin/env python3
# Working with weak orders directly: construction, queries, transforms,
# and exhaustive enumeration.

from rankops import (
    enumerate_weak_orders,
    from_pairs,
    from_tiers,
    ordered_bell,
)

# A ten-alternative order with four tiers.
order = from_tiers(
    [{"x3"}, {"x6", "x8"}, {"x1", "x4", "x7", "x10"}, {"x2", "x5", "x9"}]
)
print("order:", order)
print("n =", order.n, " tiers =", order.num_tiers, " linear?", order.is_linear)
print("x6 dominates", order.dominated_count("x6"), "alternatives")

sig = order.tier_signature()
print("realised dominated-counts:", sorted(sig.realized))
print("tier sizes (top first):   ", [size for _, size in sig.sizes])

# One representative per tier forms the longest strict chain.
print("maximal chain:", " > ".join(order.maximal_chain()))

# Transforms always return new, validated orders.
print()
print("restricted to the chain:", order.restrict({"x3", "x6", "x1", "x2"}))
print("bottom tier removed:    ", order.truncate_bottom())
print("x6 cloned as x11:       ", order.duplicate("x6", "x11"))
print("x8 moved to the top:    ", order.ud_move("x8", 0))

# The same order can be recovered from an explicit relation.
pairs = {
    (a, b)
    for a in order.ground
    for b in order.ground
    if order.weakly_prefers(a, b)
}
assert from_pairs(order.ground, pairs) == order
print()
print("round trip through an explicit pair relation: ok")

# Every weak order on a small ground set, exactly once.
print()
for n in range(1, 6):
    print(f"weak orders on {n} alternatives: {ordered_bell(n)}")
print()
print("all 13 weak orders on {a, b, c}:")
for candidate in enumerate_weak_orders({"a", "b", "c"}):
    print("  ", candidate)
