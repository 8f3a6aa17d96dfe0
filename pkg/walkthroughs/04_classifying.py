"""
Counting siblings
=================

The countable classifier returns 1, aleph0 or 2^aleph0; the general one
returns 1 or infinitely many.  Every verdict carries a certificate naming
the rule used and the data that makes its hypotheses true, and the
certificate can be re-checked independently.  Where no proven rule decides
the count, only bounds are reported.
"""
from dscsib import classify_countable, classify_general, parse, replay_certificate
from dscsib.generate import SAMPLE_DECLS

for text in ["aleph0*w", "Did", "aleph0*C^2 + C^7", "w + aleph0*C^2", "eta + C^2", "C^3 + C^5"]:
    d = parse(text)
    r = classify_countable(d)
    print(f"{text:>18}  {str(r.count):>18}  {r.rule:<26} replay={replay_certificate(d, r)}")

print()
for text in ["aleph1*C^1 + aleph0*C^3",
             "aleph3*C^1 + aleph2*C^2 + aleph1*C^3 + aleph1*w",
             "aleph1*C^1 + aleph0*C^2 + X(r1) + X(r2)",
             "aleph1*w + aleph0*(w+1) + aleph1*C^1"]:
    d = parse(text, SAMPLE_DECLS)
    r = classify_general(d)
    print(f"{text}\n    -> {r.count} by {r.rule}: {r.certificate.witness}")
