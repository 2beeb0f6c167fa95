#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "treewqo/io.hpp"
#include "treewqo/monoid.hpp"
#include "treewqo/sequence.hpp"
#include "treewqo/tree.hpp"

using namespace treewqo;

TEST_CASE("monoid json round trip and field errors") {
  FiniteMonoid z3 = cyclic_monoid(3);
  json j = monoid_to_json(z3);
  CHECK(j["size"] == 3);
  CHECK(j["identity"] == 0);
  CHECK(j["names"].size() == 3);
  FiniteMonoid back = monoid_from_json(j);
  CHECK(back.size == z3.size);
  CHECK(back.identity == z3.identity);
  CHECK(back.table == z3.table);
  CHECK(back.names == z3.names);

  json unnamed{{"size", 2}, {"identity", 0}, {"table", {{0, 1}, {1, 0}}}};
  CHECK(monoid_from_json(unnamed).names == std::vector<std::string>{"e0", "e1"});

  CHECK_THROWS_WITH_AS(monoid_from_json(json{{"identity", 0}}), "missing field 'size'",
                       std::invalid_argument);
  json bad = j;
  bad["table"] = json::array({json::array({0, 1, 2})});
  CHECK_THROWS_WITH_AS(monoid_from_json(bad), "field 'table': expected one row per element",
                       std::invalid_argument);
  bad = j;
  bad["table"][1] = json::array({0, 1});
  CHECK_THROWS_WITH_AS(monoid_from_json(bad), "table row 1: expected one entry per element",
                       std::invalid_argument);
  bad = j;
  bad["table"][0][1] = 9;
  CHECK_THROWS_WITH_AS(monoid_from_json(bad),
                       "table cell (0, 1): expected an element index", std::invalid_argument);
}

TEST_CASE("morphism json carries alphabet and images") {
  FiniteMonoid lz = left_zero_monoid(2);
  Morphism m{{"e", "a", "b"}, {0, 1, 2}, lz};
  json j = morphism_to_json(m);
  Morphism back = morphism_from_json(j, lz);
  CHECK(back.alphabet == m.alphabet);
  CHECK(back.image == m.image);
  CHECK(back.monoid.size == 3);

  json bad = j;
  bad["image"] = std::vector<int>{0, 1, 9};
  CHECK_THROWS_AS(morphism_from_json(bad, lz), std::invalid_argument);
  CHECK_THROWS_WITH_AS(morphism_from_json(json{{"alphabet", {"x"}}}, lz),
                       "missing field 'image'", std::invalid_argument);
}

TEST_CASE("graph json round trip keeps order and labels") {
  LabelledGraph g = LabelledGraph::path(4, "p");
  g.labels.push_back("q");
  g.vlabel[2] = 1;
  g.vorder = std::vector<int>{2, 0, 1, 3};
  g.validate();
  json j = graph_to_json(g);
  LabelledGraph back = graph_from_json(j);
  CHECK(back.n == 4);
  CHECK(back.labels == g.labels);
  CHECK(back.vlabel == g.vlabel);
  CHECK(back.adj == g.adj);
  CHECK(back.vorder == g.vorder);

  LabelledGraph plain = LabelledGraph::clique(3);
  CHECK(!graph_from_json(graph_to_json(plain)).vorder.has_value());

  json bad = j;
  bad["edges"].push_back(json::array({0, 0}));
  CHECK_THROWS_WITH_AS(graph_from_json(bad), "edge endpoints out of range",
                       std::invalid_argument);
  bad = j;
  bad["edges"] = 7;
  CHECK_THROWS_WITH_AS(graph_from_json(bad), "field 'edges': expected an array of pairs",
                       std::invalid_argument);
  bad = j;
  bad.erase("n");
  CHECK_THROWS_WITH_AS(graph_from_json(bad), "missing field 'n'", std::invalid_argument);
}

TEST_CASE("label order json stores the strict pairs") {
  LabelOrder o{{"x", "y"}, {{true, true}, {false, true}}};
  o.validate();
  json j = order_to_json(o);
  CHECK(j["le"] == json::array({json::array({0, 1})}));
  LabelOrder back = order_from_json(j);
  CHECK(back.labels == o.labels);
  CHECK(back.le == o.le);

  json bad = j;
  bad["le"].push_back(json::array({0, 5}));
  CHECK_THROWS_WITH_AS(order_from_json(bad), "field 'le': label index out of range",
                       std::invalid_argument);
}

TEST_CASE("tree json in element and symbol mode") {
  FiniteMonoid lz = left_zero_monoid(2);
  LabelledTree t = build_tree(lz, td_node(1, td_leaf(), 2, td_node(0, td_leaf(), 1, td_leaf())));
  TreeDoc d = tree_doc_from_tree(t);
  CHECK(!d.symbol_mode());
  json j = tree_doc_to_json(d);
  CHECK(j["mode"] == "elements");
  TreeDoc back = tree_doc_from_json(j, lz);
  CHECK(same_tree(back.tree, t));
  CHECK(back.tree.monoid.size == 3);

  // Two symbols with the same image keep their spelling through a round trip.
  Morphism mor{{"x", "y", "z"}, {1, 1, 2}, lz};
  json sym{{"mode", "symbols"},
           {"root", json{{"l", "x"}, {"left", json::object()}, {"r", "y"}, {"right", json::object()}}}};
  TreeDoc ds = tree_doc_from_json(sym, lz, &mor);
  CHECK(ds.symbol_mode());
  CHECK(ds.tree.edge_label(1) == 1);
  CHECK(ds.tree.edge_label(2) == 1);
  CHECK(ds.edge_symbols == std::vector<std::string>{"", "x", "y"});
  CHECK(tree_doc_to_json(ds) == sym);

  CHECK_THROWS_WITH_AS(tree_doc_from_json(json{{"mode", "weird"}, {"root", json::object()}}, lz),
                       "field 'mode': expected symbols or elements", std::invalid_argument);
  CHECK_THROWS_WITH_AS(tree_doc_from_json(sym, lz), "tree: symbol mode needs a morphism",
                       std::invalid_argument);
  json unk = sym;
  unk["root"]["l"] = "w";
  CHECK_THROWS_WITH_AS(tree_doc_from_json(unk, lz, &mor), "tree: unknown symbol 'w'",
                       std::invalid_argument);
  json mixed = sym;
  mixed["root"]["l"] = 1;
  CHECK_THROWS_WITH_AS(tree_doc_from_json(mixed, lz, &mor),
                       "tree: symbol mode expects string edge labels", std::invalid_argument);
  json range = j;
  range["root"]["l"] = 9;
  CHECK_THROWS_WITH_AS(tree_doc_from_json(range, lz), "tree: edge label out of range",
                       std::invalid_argument);
  json str = j;
  str["root"]["l"] = "a";
  CHECK_THROWS_WITH_AS(tree_doc_from_json(str, lz),
                       "tree: element mode expects integer edge labels", std::invalid_argument);
  json half{{"mode", "elements"}, {"root", json{{"l", 1}, {"left", json::object()}}}};
  CHECK_THROWS_WITH_AS(tree_doc_from_json(half, lz), "missing field 'r'", std::invalid_argument);
  json scalar{{"mode", "elements"}, {"root", 3}};
  CHECK_THROWS_WITH_AS(tree_doc_from_json(scalar, lz), "tree: nodes must be objects",
                       std::invalid_argument);
}

TEST_CASE("split and marked tree json") {
  Split s;
  s.height = 3;
  s.value = {1, 3, 2};
  json js = split_to_json(s);
  Split sback = split_from_json(js);
  CHECK(sback.height == 3);
  CHECK(sback.value == std::vector<int>{1, 3, 2});

  FiniteMonoid lz = left_zero_monoid(1);
  MarkedNestedTree m;
  m.tree = build_tree(lz, td_node(1, td_leaf(), 1, td_leaf()));
  m.split.height = 2;
  m.split.value = {1, 2, 2};
  m.marking = {Marking::M, Marking::D, Marking::M};
  m.validate();
  json jm = marked_to_json(m);
  CHECK(jm["height"] == 2);
  CHECK(jm["marking"] == json::array({"M", "D", "M"}));
  MarkedNestedTree mback = marked_from_json(jm, lz);
  CHECK(same_tree(mback.tree, m.tree));
  CHECK(mback.split.value == m.split.value);
  CHECK(mback.marking == m.marking);

  json badmark = jm;
  badmark["marking"][1] = "DD";
  CHECK_THROWS_WITH_AS(marked_from_json(badmark, lz), "field 'marking': entries must be M, S or D",
                       std::invalid_argument);
  badmark = jm;
  badmark["marking"][1] = "X";
  CHECK_THROWS_AS(marked_from_json(badmark, lz), std::invalid_argument);
}

TEST_CASE("interpretation json round trip") {
  MonoidInterpretation i;
  i.morphism = Morphism{{"e", "a", "b"}, {0, 1, 2}, left_zero_monoid(2)};
  i.edges = {{1, 2, 1}, {1, 1, 2}};
  i.validate();
  json j = interp_to_json(i);
  MonoidInterpretation back = interp_from_json(j);
  CHECK(back.edges == i.edges);
  CHECK(back.morphism.alphabet == i.morphism.alphabet);
  CHECK(back.monoid().size == 3);

  json bad = j;
  bad["P"].push_back(json::array({1, 2}));
  CHECK_THROWS_WITH_AS(interp_from_json(bad), "field 'P': entries must be [a, b, c]",
                       std::invalid_argument);
}

TEST_CASE("sequence json for both kinds") {
  SequenceDoc reg = split_permutation_sequence();
  json jr = sequence_to_json(reg);
  CHECK(jr["kind"] == "regular");
  SequenceDoc rback = sequence_from_json(jr);
  const auto& r = std::get<RegularSequence>(rback);
  const auto& r0 = std::get<RegularSequence>(reg);
  CHECK(r.base.adj == r0.base.adj);
  CHECK(r.close == r0.close);
  CHECK(r.far == r0.far);

  SequenceDoc per = split_permutation_periodic();
  json jp = sequence_to_json(per);
  CHECK(jp["kind"] == "periodic");
  CHECK(jp["w"] == json::array({"o", "b"}));
  SequenceDoc pback = sequence_from_json(jp);
  const auto& p = std::get<PeriodicSequence>(pback);
  const auto& p0 = std::get<PeriodicSequence>(per);
  CHECK(p.word == p0.word);
  CHECK(p.close == p0.close);
  CHECK(p.far == p0.far);

  json bad = jp;
  bad["kind"] = "spiral";
  CHECK_THROWS_WITH_AS(sequence_from_json(bad), "field 'kind': expected regular or periodic",
                       std::invalid_argument);
}

TEST_CASE("digest matches the reference vectors") {
  CHECK(fnv1a_digest("") == "cbf29ce484222325");
  CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_digest("abc") == "e71fa2190541574b");
}

TEST_CASE("run manifest serializes every field") {
  RunManifest m;
  m.command = "gap check";
  m.inputs = {{"a.json", fnv1a_digest("a")}};
  m.seed = 7;
  m.version = "0.1.0";
  m.wall_ms = 12.5;
  m.outcome = "verified";
  m.workers = 4;
  json j = manifest_to_json(m);
  CHECK(j["command"] == "gap check");
  CHECK(j["inputs"][0]["path"] == "a.json");
  CHECK(j["inputs"][0]["digest"] == "af63dc4c8601ec8c");
  CHECK(j["seed"] == 7);
  CHECK(j["version"] == "0.1.0");
  CHECK(j["wall_ms"] == 12.5);
  CHECK(j["outcome"] == "verified");
  CHECK(j["workers"] == 4);
}

TEST_CASE("atomic writes land complete files") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "treewqo_io_test";
  fs::create_directories(dir);
  std::string txt = (dir / "note.txt").string();
  write_text_atomic(txt, "hello\n");
  CHECK(read_text(txt) == "hello\n");
  CHECK(!fs::exists(txt + ".tmp"));

  std::string jsn = (dir / "doc.json").string();
  write_json_atomic(jsn, json{{"k", 1}});
  CHECK(load_json(jsn) == json{{"k", 1}});

  std::string broken = (dir / "broken.json").string();
  write_text_atomic(broken, "{nope");
  CHECK_THROWS_WITH_AS(load_json(broken), ("'" + broken + "': not valid JSON").c_str(),
                       std::invalid_argument);
  std::string missing = (dir / "missing.json").string();
  CHECK_THROWS_WITH_AS(read_text(missing), ("cannot read '" + missing + "'").c_str(),
                       std::invalid_argument);
  fs::remove_all(dir);
}
