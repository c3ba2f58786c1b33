"""Graph calculus for simplicial props, properads and dioperads.

Modules, bottom up:

  graphs        colored wheel-free graphs, isomorphism, canonical codes, enumeration
  substitution  graph substitution, grafting, pasting-scheme closure
  ssets         finite simplicial sets, homology, Kan lifting
  categories    finite categories and functors
  properads     Gr-props, composition, underlying categories
  free          extension categories and truncated free constructions
  lifting       lifting properties and the morphism classifier
  corpus        the shipped fixture corpus
  checks        property suites run by ``calculate_props.py selftest``
"""
