"""The hidden square inside every spanning-tree count.

For any connected circulant graph the count factors as

    tau = c * n * a(n)^2

where c is a tiny square-free constant determined by the parities of the
steps alone.  The integer sequences a(n) often satisfy short linear
recurrences; the most famous case is C_n(1,2), where a(n) is the n-th
Fibonacci number.
"""

from circtrees import decompose, expected_coefficient, sequence_a, tau_even
from circtrees.arithmetic import family_spec

print("tau = c n a^2 across a family (steps 1,3; c flips with parity):")
print(f"  {'n':>3} {'tau':>16} {'c':>2} {'a':>8}")
for n in range(7, 19):
    spec = family_spec((1, 3), "even", n)
    dec = decompose(spec, tau_even(spec))
    print(f"  {n:>3} {dec.tau:>16} {dec.coefficient:>2} {dec.a:>8}")

print()
print("The coefficient is predictable from step parities alone:")
for steps, family, n, label in [
        ((1, 2), "even", 9, "one odd step, odd order"),
        ((1, 3), "even", 10, "two odd steps, even order"),
        ((1, 3, 5), "even", 12, "three odd steps, even order"),
        ((1,), "diagonal", 5, "Moebius ladder, odd order"),
        ((1,), "diagonal", 6, "Moebius ladder, even order"),
        ((1, 2, 3), "diagonal", 7, "odd order"),
]:
    spec = family_spec(steps, family, n)
    print(f"  {str(spec):12s} c = {expected_coefficient(spec)}   ({label})")

print()
print("C_n(1,2): a(n) is the Fibonacci sequence")
print("  a(5..16) =", sequence_a((1, 2), "even", range(5, 17)))

print()
print("C_n(2,3): a(n) obeys a(n) = a(n-1) + a(n-2) + a(n-3) - a(n-4)")
values = sequence_a((2, 3), "even", range(7, 21))
print("  a(7..20) =", values)
by_n = dict(zip(range(7, 21), values))
holds = all(by_n[n] == by_n[n - 1] + by_n[n - 2] + by_n[n - 3] - by_n[n - 4]
            for n in range(11, 21))
print("  recursion verified on n = 11..20:", holds)

print()
print("Moebius ladders C_{2n}(1,n): tau = 3 n a^2 at odd n, 2 n a^2 at even n")
print("  a(2..13) =", sequence_a((1,), "diagonal", range(2, 14)))
