#include "treewqo/marked_tree.hpp"

#include <stdexcept>

namespace treewqo {

char marking_char(Marking m) {
  switch (m) {
    case Marking::M: return 'M';
    case Marking::S: return 'S';
    case Marking::D: return 'D';
  }
  throw std::invalid_argument("marking: bad value");
}

Marking marking_from_char(char c) {
  switch (c) {
    case 'M': return Marking::M;
    case 'S': return Marking::S;
    case 'D': return Marking::D;
    default: throw std::invalid_argument(std::string("marking: bad character '") + c + "'");
  }
}

void MarkedNestedTree::validate() const {
  tree.validate();
  split.validate(tree);
  if (marking.size() != static_cast<std::size_t>(tree.size()))
    throw std::invalid_argument("marked tree: marking count mismatch");
}

}  // namespace treewqo
