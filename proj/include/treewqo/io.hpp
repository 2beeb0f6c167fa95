#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "treewqo/graph.hpp"
#include "treewqo/interp.hpp"
#include "treewqo/marked_tree.hpp"
#include "treewqo/monoid.hpp"
#include "treewqo/sequence.hpp"
#include "treewqo/split.hpp"
#include "treewqo/tree.hpp"

namespace treewqo {

using json = nlohmann::json;

// All parsers throw std::invalid_argument naming the offending field; the
// returned values are validated.

json monoid_to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const json& j);

// The morphism file carries alphabet and images only; the monoid is attached
// from its own file.
json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const json& j, FiniteMonoid monoid);

json graph_to_json(const LabelledGraph& g);
LabelledGraph graph_from_json(const json& j);

json order_to_json(const LabelOrder& o);
LabelOrder order_from_json(const json& j);

// Tree files are recursive: a leaf is {}, an internal node carries the two
// child edge labels and subtrees.  The header's mode selects whether edge
// labels are alphabet symbols (resolved through a morphism) or raw element
// indices; symbol spellings survive a round trip.
struct TreeDoc {
  LabelledTree tree;
  std::vector<std::string> edge_symbols;  // per node, empty when in element mode

  bool symbol_mode() const { return !edge_symbols.empty(); }
};

json tree_doc_to_json(const TreeDoc& d);
TreeDoc tree_doc_from_json(const json& j, const FiniteMonoid& monoid,
                           const Morphism* morphism = nullptr);

TreeDoc tree_doc_from_tree(LabelledTree t);

json split_to_json(const Split& s);
Split split_from_json(const json& j);

// Tree format plus height, split values and markings.
json marked_to_json(const MarkedNestedTree& m, const std::vector<std::string>& edge_symbols = {});
MarkedNestedTree marked_from_json(const json& j, const FiniteMonoid& monoid,
                                  const Morphism* morphism = nullptr);

json interp_to_json(const MonoidInterpretation& i);
MonoidInterpretation interp_from_json(const json& j);

using SequenceDoc = std::variant<RegularSequence, PeriodicSequence>;

json sequence_to_json(const SequenceDoc& s);
SequenceDoc sequence_from_json(const json& j);

// 64-bit FNV-1a over the raw bytes, as 16 hex digits.
std::string fnv1a_digest(const std::string& bytes);

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::uint64_t seed = 0;
  std::string version;
  double wall_ms = 0.0;
  std::string outcome;
  int workers = 1;
};

json manifest_to_json(const RunManifest& m);

// Throws std::invalid_argument with the path on missing or unreadable files.
std::string read_text(const std::string& path);
json load_json(const std::string& path);

// Writes to a sibling temporary file first and renames it into place.
void write_text_atomic(const std::string& path, const std::string& content);
void write_json_atomic(const std::string& path, const json& j);

}  // namespace treewqo
