#!/usr/bin/env python3
# How the four tie-aware rank operators differ on the same data.
#
# Two competitors share the best result and one trails behind. Depending
# on the convention, the trailing one is third (competition counting),
# second (dense counting), or something in between.

from rankops import dense, fractional, from_tiers, modified, standard

order = from_tiers([{"ana", "bo"}, {"cy"}])
print("order:", order)
print()

for name, operator in [
    ("standard  ", standard),
    ("modified  ", modified),
    ("fractional", fractional),
    ("dense     ", dense),
]:
    positions = operator(order)
    row = "  ".join(f"{alt}={positions[alt]}" for alt in order.sorted_alternatives())
    print(f"{name}  {row}")

# The dense rank numbers achievement levels, not people. That is the right
# tool for queries like "everyone earning one of the top 2 salaries":
print()
salaries = {"dee": 120, "eli": 120, "fay": 95, "gus": 80}
tiers: dict[int, set] = {}
for person, salary in salaries.items():
    tiers.setdefault(-salary, set()).add(person)
payroll = from_tiers([tiers[key] for key in sorted(tiers)])
levels = dense(payroll)
top_two = sorted(p for p in payroll.ground if levels[p] <= 2)
print("salary order:   ", payroll)
print("dense positions:", {p: int(levels[p]) for p in payroll.sorted_alternatives()})
print("top 2 salary levels reach:", top_two)

# With the standard rank the same filter would miss fay: dee and eli
# occupy positions 1 and 1, and fay is already at position 3.
top_two_standard = sorted(p for p in payroll.ground if standard(payroll)[p] <= 2)
print("same filter under standard rank:", top_two_standard)
