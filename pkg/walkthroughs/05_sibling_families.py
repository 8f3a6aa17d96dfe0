"""
Building explicit siblings
==========================

Four generators produce pairwise non-isomorphic siblings: padding with
singletons, redistributing small components of a bounded DSC, keeping a
periodic sub-family of a strictly increasing family, and swapping a
component for one of its own siblings.  Every output is re-checked for
mutual embeddability with the input before it is returned.
"""
from dscsib import (bounded_family, component_swap_family, evens, format_dsc, isomorphic, odds,
                    padding_family, parse, parse_chain, qj_family)

print([format_dsc(x) for x in padding_family(parse("aleph0*w"), 3)])
print([format_dsc(bounded_family(parse("aleph0*C^2"), [t])) for t in (0, 1, 3, "aleph0")])

ev = qj_family(parse("Did"), evens(2))
od = qj_family(parse("Did"), odds())
print(format_dsc(ev), "vs", format_dsc(od), "isomorphic:", isomorphic(ev, od))

print([format_dsc(x) for x in component_swap_family(parse("2*eta"), parse_chain("eta"), 3)])
