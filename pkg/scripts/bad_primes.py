"""Candidate primes of bad reduction for X_a and S_a with the verdict at each."""

from quintic75.fibration import bad_primes_k3, bad_primes_quintic, generic_config, quintic_resultants


def main():
    print(f"configuration over Q(b): {generic_config().describe()}")
    bad, merge, details, norms = bad_primes_k3(return_details=True)
    print("\nnorms:")
    for k, v in norms.items():
        print(f"  {k:16s} {v}")
    print("\nverdicts:")
    for p, v in sorted(details.items()):
        print(f"  p = {p:4d}  {v.status:5s}  {' | '.join(v.configs)}  {v.reason}")
    print(f"\nK3 bad primes: {sorted(bad)}   merge only: {sorted(merge)}")
    print("\nresultants against the singular parameters:")
    for lam, r in quintic_resultants().items():
        print(f"  lambda = {lam:7s}  {r}")
    print(f"quintic bad primes: {sorted(bad_primes_quintic())}")


if __name__ == "__main__":
    main()
