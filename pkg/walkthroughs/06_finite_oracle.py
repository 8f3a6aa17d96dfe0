"""
The brute-force oracle
======================

For small finite DSCs the element-level search decides embeddability and
isomorphism directly.  Sweeping all pairs up to seven elements cross-checks
the symbolic engine and confirms that mutually embeddable finite DSCs are
isomorphic.
"""
from dscsib import FinitePoset, brute_embeds, check_mutual_embed_implies_iso, from_chain_sizes
from dscsib.embed import embeds
from dscsib.finite_oracle import all_chain_multisets

ok, f = brute_embeds(FinitePoset((2, 2)), FinitePoset((3, 2)))
print("{2,2} -> {3,2}:", ok, f)

shapes = all_chain_multisets(7)
mismatch = sum(embeds(from_chain_sizes(s), from_chain_sizes(t)) != brute_embeds(FinitePoset(s), FinitePoset(t))[0]
               for s in shapes for t in shapes)
print(f"{len(shapes) ** 2} pairs, {mismatch} disagreements with the symbolic engine")

r = check_mutual_embed_implies_iso(7)
print(f"{r.mutual} mutually embeddable pairs, {len(r.counterexamples)} non-isomorphic among them")
