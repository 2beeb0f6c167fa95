#include "treewqo/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace treewqo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

int get_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "': expected an integer");
  return v.get<int>();
}

std::string get_string(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field '") + key + "': expected a string");
  return v.get<std::string>();
}

std::vector<int> get_int_array(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) fail(std::string("field '") + key + "': expected an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) fail(std::string("field '") + key + "': expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::string> get_string_array(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) fail(std::string("field '") + key + "': expected an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) fail(std::string("field '") + key + "': expected strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

json pair_set_to_json(const LabelPairSet& s) {
  json out = json::array();
  for (const auto& [a, b] : s) out.push_back(json::array({a, b}));
  return out;
}

LabelPairSet pair_set_from_json(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) fail(std::string("field '") + key + "': expected an array of pairs");
  LabelPairSet out;
  for (const auto& x : v) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_string() || !x[1].is_string())
      fail(std::string("field '") + key + "': entries must be [label, label]");
    out.insert({x[0].get<std::string>(), x[1].get<std::string>()});
  }
  return out;
}

}  // namespace

json monoid_to_json(const FiniteMonoid& m) {
  json rows = json::array();
  for (int a = 0; a < m.size; ++a) {
    json row = json::array();
    for (int b = 0; b < m.size; ++b) row.push_back(m.mul(a, b));
    rows.push_back(std::move(row));
  }
  json j{{"size", m.size}, {"identity", m.identity}, {"table", rows}};
  if (!m.names.empty()) j["names"] = m.names;
  return j;
}

FiniteMonoid monoid_from_json(const json& j) {
  FiniteMonoid m;
  m.size = get_int(j, "size");
  m.identity = get_int(j, "identity");
  const json& table = field(j, "table");
  if (!table.is_array() || static_cast<int>(table.size()) != m.size)
    fail("field 'table': expected one row per element");
  for (int a = 0; a < m.size; ++a) {
    const json& row = table[static_cast<std::size_t>(a)];
    if (!row.is_array() || static_cast<int>(row.size()) != m.size)
      fail("table row " + std::to_string(a) + ": expected one entry per element");
    for (int b = 0; b < m.size; ++b) {
      const json& cell = row[static_cast<std::size_t>(b)];
      if (!cell.is_number_integer() || cell.get<int>() < 0 || cell.get<int>() >= m.size)
        fail("table cell (" + std::to_string(a) + ", " + std::to_string(b) +
             "): expected an element index");
      m.table.push_back(cell.get<int>());
    }
  }
  if (j.contains("names")) m.names = get_string_array(j, "names");
  m.ensure_names();
  m.validate();
  return m;
}

json morphism_to_json(const Morphism& m) {
  return json{{"alphabet", m.alphabet}, {"image", m.image}};
}

Morphism morphism_from_json(const json& j, FiniteMonoid monoid) {
  Morphism m;
  m.alphabet = get_string_array(j, "alphabet");
  m.image = get_int_array(j, "image");
  m.monoid = std::move(monoid);
  m.validate();
  return m;
}

json graph_to_json(const LabelledGraph& g) {
  json edges = json::array();
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.edge(u, v)) edges.push_back(json::array({u, v}));
  json j{{"n", g.n}, {"labels", g.labels}, {"vlabel", g.vlabel}, {"edges", edges}};
  if (g.vorder) j["vorder"] = *g.vorder;
  return j;
}

LabelledGraph graph_from_json(const json& j) {
  LabelledGraph g;
  g.n = get_int(j, "n");
  g.labels = get_string_array(j, "labels");
  g.vlabel = get_int_array(j, "vlabel");
  if (g.n < 0) fail("field 'n': expected a vertex count");
  g.adj.assign(static_cast<std::size_t>(g.n), std::vector<bool>(static_cast<std::size_t>(g.n), false));
  const json& edges = field(j, "edges");
  if (!edges.is_array()) fail("field 'edges': expected an array of pairs");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail("field 'edges': entries must be [u, v]");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v) fail("edge endpoints out of range");
    g.set_edge(u, v, true);
  }
  if (j.contains("vorder")) g.vorder = get_int_array(j, "vorder");
  g.validate();
  return g;
}

json order_to_json(const LabelOrder& o) {
  json le = json::array();
  for (std::size_t i = 0; i < o.labels.size(); ++i)
    for (std::size_t k = 0; k < o.labels.size(); ++k)
      if (i != k && o.le[i][k]) le.push_back(json::array({i, k}));
  return json{{"labels", o.labels}, {"le", le}};
}

LabelOrder order_from_json(const json& j) {
  LabelOrder o;
  o.labels = get_string_array(j, "labels");
  std::size_t n = o.labels.size();
  o.le.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) o.le[i][i] = true;
  const json& le = field(j, "le");
  if (!le.is_array()) fail("field 'le': expected an array of pairs");
  for (const auto& e : le) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail("field 'le': entries must be [i, j]");
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
      fail("field 'le': label index out of range");
    o.le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  }
  o.validate();
  return o;
}

namespace {

json tree_node_to_json(const TreeDoc& d, int v) {
  if (d.tree.is_leaf(v)) return json::object();
  int l = d.tree.left(v), r = d.tree.right(v);
  json jl, jr;
  if (d.symbol_mode()) {
    jl = d.edge_symbols[static_cast<std::size_t>(l)];
    jr = d.edge_symbols[static_cast<std::size_t>(r)];
  } else {
    jl = d.tree.edge_label(l);
    jr = d.tree.edge_label(r);
  }
  return json{{"l", jl},
              {"left", tree_node_to_json(d, l)},
              {"r", jr},
              {"right", tree_node_to_json(d, r)}};
}

struct TreeParser {
  const FiniteMonoid& monoid;
  const Morphism* morphism;
  bool symbols;
  TreeDoc doc;

  int resolve(const json& label) {
    if (symbols) {
      if (!label.is_string()) fail("tree: symbol mode expects string edge labels");
      auto idx = morphism->symbol_index(label.get<std::string>());
      if (!idx) fail("tree: unknown symbol '" + label.get<std::string>() + "'");
      return morphism->image[static_cast<std::size_t>(*idx)];
    }
    if (!label.is_number_integer()) fail("tree: element mode expects integer edge labels");
    int e = label.get<int>();
    if (e < 0 || e >= monoid.size) fail("tree: edge label out of range");
    return e;
  }

  int parse(const json& j, int parent, int elabel, const std::string& symbol, int depth) {
    if (!j.is_object()) fail("tree: nodes must be objects");
    int id = doc.tree.size();
    LabelledTree::Node n;
    n.parent = parent;
    n.edge_label = elabel;
    n.depth = depth;
    doc.tree.nodes.push_back(n);
    if (symbols) doc.edge_symbols.push_back(symbol);
    bool internal = j.contains("left") || j.contains("right") || j.contains("l") || j.contains("r");
    if (internal) {
      const json& jl = field(j, "l");
      const json& jr = field(j, "r");
      int el = resolve(jl);
      int l = parse(field(j, "left"), id, el, symbols ? jl.get<std::string>() : "", depth + 1);
      doc.tree.nodes[static_cast<std::size_t>(id)].left = l;
      int er = resolve(jr);
      int r = parse(field(j, "right"), id, er, symbols ? jr.get<std::string>() : "", depth + 1);
      doc.tree.nodes[static_cast<std::size_t>(id)].right = r;
    }
    return id;
  }
};

}  // namespace

json tree_doc_to_json(const TreeDoc& d) {
  return json{{"mode", d.symbol_mode() ? "symbols" : "elements"},
              {"root", tree_node_to_json(d, d.tree.root())}};
}

TreeDoc tree_doc_from_json(const json& j, const FiniteMonoid& monoid, const Morphism* morphism) {
  std::string mode = get_string(j, "mode");
  if (mode != "symbols" && mode != "elements") fail("field 'mode': expected symbols or elements");
  bool symbols = mode == "symbols";
  if (symbols && !morphism) fail("tree: symbol mode needs a morphism");
  TreeParser p{monoid, morphism, symbols, {}};
  p.doc.tree.monoid = monoid;
  p.parse(field(j, "root"), -1, -1, "", 0);
  p.doc.tree.validate();
  return std::move(p.doc);
}

TreeDoc tree_doc_from_tree(LabelledTree t) {
  TreeDoc d;
  d.tree = std::move(t);
  return d;
}

json split_to_json(const Split& s) { return json{{"height", s.height}, {"value", s.value}}; }

Split split_from_json(const json& j) {
  Split s;
  s.height = get_int(j, "height");
  s.value = get_int_array(j, "value");
  return s;
}

json marked_to_json(const MarkedNestedTree& m, const std::vector<std::string>& edge_symbols) {
  TreeDoc d;
  d.tree = m.tree;
  d.edge_symbols = edge_symbols;
  json j = tree_doc_to_json(d);
  j["height"] = m.split.height;
  j["split"] = m.split.value;
  json marks = json::array();
  for (Marking mk : m.marking) marks.push_back(std::string(1, marking_char(mk)));
  j["marking"] = marks;
  return j;
}

MarkedNestedTree marked_from_json(const json& j, const FiniteMonoid& monoid,
                                  const Morphism* morphism) {
  TreeDoc d = tree_doc_from_json(j, monoid, morphism);
  MarkedNestedTree m;
  m.tree = std::move(d.tree);
  m.split.height = get_int(j, "height");
  m.split.value = get_int_array(j, "split");
  const json& marks = field(j, "marking");
  if (!marks.is_array()) fail("field 'marking': expected an array");
  for (const auto& x : marks) {
    if (!x.is_string() || x.get<std::string>().size() != 1)
      fail("field 'marking': entries must be M, S or D");
    m.marking.push_back(marking_from_char(x.get<std::string>()[0]));
  }
  m.validate();
  return m;
}

json interp_to_json(const MonoidInterpretation& i) {
  json p = json::array();
  for (const auto& [a, b, c] : i.edges) p.push_back(json::array({a, b, c}));
  return json{{"monoid", monoid_to_json(i.monoid())},
              {"morphism", morphism_to_json(i.morphism)},
              {"P", p}};
}

MonoidInterpretation interp_from_json(const json& j) {
  FiniteMonoid m = monoid_from_json(field(j, "monoid"));
  MonoidInterpretation i;
  i.morphism = morphism_from_json(field(j, "morphism"), std::move(m));
  const json& p = field(j, "P");
  if (!p.is_array()) fail("field 'P': expected an array of triples");
  for (const auto& t : p) {
    if (!t.is_array() || t.size() != 3) fail("field 'P': entries must be [a, b, c]");
    for (const auto& x : t)
      if (!x.is_number_integer()) fail("field 'P': entries must be element indices");
    i.edges.insert({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  i.validate();
  return i;
}

json sequence_to_json(const SequenceDoc& s) {
  if (const auto* r = std::get_if<RegularSequence>(&s))
    return json{{"kind", "regular"},
                {"G", graph_to_json(r->base)},
                {"C", pair_set_to_json(r->close)},
                {"F", pair_set_to_json(r->far)}};
  const auto& p = std::get<PeriodicSequence>(s);
  return json{{"kind", "periodic"},
              {"w", p.word},
              {"C", pair_set_to_json(p.close)},
              {"F", pair_set_to_json(p.far)}};
}

SequenceDoc sequence_from_json(const json& j) {
  std::string kind = get_string(j, "kind");
  if (kind == "regular") {
    RegularSequence r;
    r.base = graph_from_json(field(j, "G"));
    r.close = pair_set_from_json(j, "C");
    r.far = pair_set_from_json(j, "F");
    r.validate();
    return r;
  }
  if (kind == "periodic") {
    PeriodicSequence p;
    p.word = get_string_array(j, "w");
    p.close = pair_set_from_json(j, "C");
    p.far = pair_set_from_json(j, "F");
    p.validate();
    return p;
  }
  fail("field 'kind': expected regular or periodic");
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

json manifest_to_json(const RunManifest& m) {
  json inputs = json::array();
  for (const auto& [path, digest] : m.inputs)
    inputs.push_back(json{{"path", path}, {"digest", digest}});
  return json{{"command", m.command}, {"inputs", inputs},     {"seed", m.seed},
              {"version", m.version}, {"wall_ms", m.wall_ms}, {"outcome", m.outcome},
              {"workers", m.workers}};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json load_json(const std::string& path) {
  std::string text = read_text(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("'" + path + "': not valid JSON");
  return j;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail("cannot write '" + tmp + "'");
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

void write_json_atomic(const std::string& path, const json& j) {
  write_text_atomic(path, j.dump(2) + "\n");
}

}  // namespace treewqo
