"""
Deciding embeddability
======================

An embedding of one DSC into another is an injective assignment of
components to components along which each chain embeds.  Counting
components per class turns this into a Hall condition with cardinal
multiplicities; when it holds an explicit transport plan is returned.
"""
from dscsib import dsc_embeds, equimorphic, parse, validate_assignment

src, tgt = parse("C^2 + C^2"), parse("w + C^2")
r = dsc_embeds(src, tgt)
print("embeds:", r.embeds)
for t in r.assignment:
    print("  ", t)
print("plan valid:", validate_assignment(src, tgt, r.assignment))

r = dsc_embeds(parse("2*C^2"), parse("C^5"))
print("2*C^2 -> C^5:", r.embeds, "| blocked by", r.violation)

# aleph1 singletons ride along the aleph1 disjoint copies of w
d = parse("aleph1*w + aleph0*(w+1) + aleph1*C^1")
print("example absorbs its singletons:", dsc_embeds(d, d.nontrivial()).embeds)

for a, b in [("aleph0*w + Did", "aleph0*w"), ("3*C^1", "4*C^1"), ("Did", "Did + C^3")]:
    print(f"{a} ~ {b}: {equimorphic(parse(a), parse(b))}")
