"""Direct sums of chains: embeddability, sibling numbers and sibling families.

A direct sum of chains (DSC) is described symbolically by component classes
with cardinal multiplicities plus affine families of finite chains.  The
package decides embeddability between descriptions, classifies the number of
isomorphism classes of siblings, and builds explicit sibling families.
"""
from .cardinal import (ALEPH_0, ALEPH_1, ALEPH_OMEGA, ONE, ZERO, Cardinal, aleph,
                       cardinal_sum, finite, parse_cardinal)
from .classify import (Certificate, SibResult, classify, classify_countable, classify_general,
                       consistent, replay_certificate)
from .declarations import Declarations
from .dsc import (DID, EMPTY, ComponentClass, DscDescription, Family, chain_sizes,
                  disjoint_increasing_capacity, dsc, from_chain_sizes, increasing_analysis,
                  isomorphic, lambda_profile, normalize)
from .embed import EmbedResult, Transfer, dsc_embeds, embeds, equimorphic, validate_assignment
from .errors import DscError
from .finite_oracle import (FinitePoset, brute_embeds, brute_iso,
                            check_mutual_embed_implies_iso, induced_injection_check)
from .ordertype import (Declared, EtaTail, Fin, Ord, Rev, Sib, SibRange, chain_embeds,
                        chain_sib, omega, ordinal_from_cnf)
from .syntax import format_chain, format_dsc, parse, parse_chain
from .witness import (PeriodicSet, bounded_family, component_swap_family, evens, naturals,
                      odds, padding_family, qj_family, verify_family)

__version__ = "0.1.0"
