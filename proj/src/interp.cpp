#include "treewqo/interp.hpp"

#include <stdexcept>

namespace treewqo {

void MonoidInterpretation::validate() const {
  morphism.validate();
  for (const auto& [r, a, b] : edges) {
    if (r < 0 || r >= monoid().size || a < 0 || a >= monoid().size || b < 0 || b >= monoid().size)
      throw std::invalid_argument("interpretation: edge triple element out of range");
  }
}

namespace {

LabelledGraph interpret_on(const MonoidInterpretation& i, const LabelledTree& t,
                           const std::vector<int>& verts) {
  LabelledGraph g = LabelledGraph::empty(static_cast<int>(verts.size()));
  std::vector<int> order(verts.size());
  for (std::size_t k = 0; k < verts.size(); ++k) order[k] = static_cast<int>(k);
  g.vorder = order;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      int x = verts[a], y = verts[b];
      int l = lca(t, x, y);
      int r = tlbl(t, t.root(), l);
      int lx = tlbl(t, l, x);
      int ly = tlbl(t, l, y);
      if (i.edges.count({r, lx, ly})) g.set_edge(static_cast<int>(a), static_cast<int>(b), true);
    }
  return g;
}

}  // namespace

LabelledGraph interpret(const MonoidInterpretation& i, const LabelledTree& t) {
  return interpret_on(i, t, leaves_in_order(t));
}

LabelledGraph interpret_marked(const MonoidInterpretation& i, const MarkedNestedTree& m) {
  std::vector<int> verts;
  for (int v : leaves_in_order(m.tree))
    if (m.mark(v) == Marking::M) verts.push_back(v);
  return interpret_on(i, m.tree, verts);
}

MonoidInterpretation builtin_interpretation(const std::string& name) {
  MonoidInterpretation i;
  if (name == "cliques") {
    i.morphism.monoid = trivial_monoid();
    i.morphism.alphabet = {"a"};
    i.morphism.image = {0};
    i.edges.insert({0, 0, 0});
    return i;
  }
  if (name == "edgeless") {
    i.morphism.monoid = trivial_monoid();
    i.morphism.alphabet = {"a"};
    i.morphism.image = {0};
    return i;
  }
  if (name == "paths") {
    // Words over {a, b} truncated to three letters.  Linear trees built from
    // cells (a, b) put lca(x, y) at x's cell; the x side is then the single
    // letter a, and the y side is b^j a for an interior leaf j cells down or
    // b^j for the final leaf.  Membership below accepts only j = 1, which
    // keeps exactly the consecutive pairs.
    FiniteMonoid m = truncation_monoid(2, 3);
    i.morphism.monoid = m;
    i.morphism.alphabet = {"a", "b"};
    i.morphism.image = {*m.element_by_name("a"), *m.element_by_name("b")};
    int a = *m.element_by_name("a");
    int ba = *m.element_by_name("ba");
    int b = *m.element_by_name("b");
    for (int r = 0; r < m.size; ++r) {
      i.edges.insert({r, a, ba});
      i.edges.insert({r, a, b});
    }
    return i;
  }
  throw std::invalid_argument("unknown builtin interpretation '" + name + "'");
}

}  // namespace treewqo
