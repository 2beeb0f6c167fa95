#pragma once

#include <string>
#include <vector>

#include "treewqo/split.hpp"
#include "treewqo/tree.hpp"

namespace treewqo {

// M nodes carry the structure that embeddings must preserve exactly, S nodes
// separate dummy regions, D nodes are padding that may be skipped over.
enum class Marking { M, S, D };

char marking_char(Marking m);
Marking marking_from_char(char c);

struct MarkedNestedTree {
  LabelledTree tree;
  Split split;
  std::vector<Marking> marking;  // by node id

  void validate() const;
  Marking mark(int v) const { return marking[static_cast<std::size_t>(v)]; }
};

}  // namespace treewqo
