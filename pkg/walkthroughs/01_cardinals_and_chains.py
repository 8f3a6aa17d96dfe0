"""
Cardinals and chain types
=========================

Multiplicities live in a small cardinal system: naturals, aleph_k and
aleph_omega.  Component chains are finite chains, ordinals below w^w, their
reverses, eta with a finite tail, or opaque declared chains.
"""
from dscsib import aleph, cardinal_sum, finite, parse_chain
from dscsib.cardinal import mul
from dscsib.ordertype import chain_embeds, chain_sib, sibling_variants

# infinite sums absorb, products follow the larger factor
print(aleph(1) + aleph(0), mul(aleph(1), aleph(0)), finite(2) + finite(3))
print(cardinal_sum([aleph(n) for n in range(5)], unbounded=True))

# chain embeddability is decided in closed form
w1, w = parse_chain("w+1"), parse_chain("w")
print("w+1 -> w:", chain_embeds(w1, w), "  w -> eta:", chain_embeds(w, parse_chain("eta")))

# ordinals are rigid under mutual embedding; eta is not
for text in ["C^5", "w^2 + w*2", "eta", "rev(w)"]:
    print(f"{text:>10}: {chain_sib(parse_chain(text))} siblings")
print([str(t) for t in sibling_variants(parse_chain("eta"), 3)])
