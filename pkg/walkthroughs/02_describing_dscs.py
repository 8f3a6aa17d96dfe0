"""
Describing direct sums of chains
================================

A description is a list of component classes with cardinal multiplicities
plus affine families of finite chains.  The expression grammar prints and
parses descriptions in a canonical form.
"""
from dscsib import (disjoint_increasing_capacity, format_dsc, increasing_analysis,
                    lambda_profile, parse)

d = parse("aleph1*w + aleph0*(w+1) + A^aleph1")
print(format_dsc(d), "| trivial part:", d.trivial_count(), "| non-trivial:", format_dsc(d.nontrivial()))

# one chain of every finite size
did = parse("Did")
prof = lambda_profile(did)
print("Did sizes 1..6 ->", [str(prof.lam(n)) for n in range(1, 7)])

d2 = parse("aleph3*C^1 + aleph2*C^2 + aleph1*C^3 + aleph1*w")
prof = lambda_profile(d2)
print("lambda_1..4 =", [str(prof.lam(n)) for n in range(1, 5)])

for text in ["aleph0*w", "aleph0*C^2", "Did", "3*C^2 + C^5"]:
    a = increasing_analysis(parse(text))
    print(f"{text:>12}: increasing={a.has_increasing} strict={a.has_strictly_increasing} "
          f"unbounded={a.has_increasing_unbounded} "
          f"capacity={disjoint_increasing_capacity(parse(text))}")

# sum over n of aleph_n copies of C^n, as a ladder family
print("ladder capacity:", disjoint_increasing_capacity(parse("Ladder(1,2)")))
