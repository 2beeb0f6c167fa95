#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "treewqo/bough.hpp"
#include "treewqo/corpus.hpp"
#include "treewqo/gap.hpp"
#include "treewqo/graph.hpp"
#include "treewqo/interp.hpp"
#include "treewqo/io.hpp"
#include "treewqo/marked_tree.hpp"
#include "treewqo/monoid.hpp"
#include "treewqo/parallel.hpp"
#include "treewqo/sequence.hpp"
#include "treewqo/split.hpp"
#include "treewqo/transduce.hpp"
#include "treewqo/tree.hpp"

using namespace treewqo;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Ctx {
  std::string out = ".";
  double deadline_s = 0.0;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string outcome = "ok";

  Deadline deadline() const {
    return deadline_s > 0.0 ? Deadline::after_seconds(deadline_s) : Deadline::never();
  }

  json load(const std::string& path) {
    std::string text = read_text(path);
    inputs.emplace_back(path, fnv1a_digest(text));
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("'" + path + "': not valid JSON");
    return j;
  }

  void emit(const std::string& name, const json& j) {
    write_json_atomic(out + "/" + name, j);
    std::printf("wrote %s/%s\n", out.c_str(), name.c_str());
  }

  int refuted(const json& counterexample) {
    emit("counterexample.json", counterexample);
    outcome = "refuted";
    return 1;
  }

  int timed_out() {
    outcome = "deadline";
    std::fprintf(stderr, "deadline exceeded\n");
    return 2;
  }
};

json graph_artifact(const LabelledGraph& g) { return graph_to_json(g); }

json tree_artifact(const LabelledTree& t) { return tree_doc_to_json(tree_doc_from_tree(t)); }

json marked_artifact(const MarkedNestedTree& m) { return marked_to_json(m); }

json bough_artifact(const Bough& b) {
  return json{{"tree", tree_artifact(b.tree)},
              {"split", split_to_json(b.split)},
              {"backbone", b.backbone},
              {"level", b.level}};
}

json context_artifact(const BoughContext& c) {
  return json{{"t_root", tree_artifact(c.t_root)},   {"s_root", split_to_json(c.s_root)},
              {"hole", c.hole},                      {"t_left", tree_artifact(c.t_left)},
              {"s_left", split_to_json(c.s_left)},   {"m_left", c.m_left},
              {"t_right", tree_artifact(c.t_right)}, {"s_right", split_to_json(c.s_right)},
              {"m_right", c.m_right}};
}

Morphism* maybe_morphism(Ctx& ctx, const std::string& path, const FiniteMonoid& m,
                         std::optional<Morphism>& slot) {
  if (path.empty()) return nullptr;
  slot = morphism_from_json(ctx.load(path), m);
  return &*slot;
}

MarkedNestedTree load_marked(Ctx& ctx, const std::string& path, const FiniteMonoid& m,
                             const Morphism* mor) {
  return marked_from_json(ctx.load(path), m, mor);
}

std::vector<int> load_map(Ctx& ctx, const std::string& path) {
  json j = ctx.load(path);
  if (!j.is_array()) throw std::invalid_argument("'" + path + "': expected an array of node ids");
  std::vector<int> h;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw std::invalid_argument("'" + path + "': expected an array of node ids");
    h.push_back(e.get<int>());
  }
  return h;
}

BackboneRef backbone_from(const std::vector<int>& nodes, int level) {
  BackboneRef b;
  b.nodes = nodes;
  b.level = level;
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  for (int i = 0; i < argc; ++i) {
    if (i) ctx.command += ' ';
    ctx.command += argv[i];
  }

  CLI::App app{"monoid interpretations from trees: splits, embeddings, boughs, antichains"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--deadline", ctx.deadline_s, "wall-clock limit in seconds (0 = none)");
  app.add_option("--seed", ctx.seed, "seed for generated instances");
  app.add_option("--out", ctx.out, "output directory for artifacts and the manifest");
  app.add_option("--format", ctx.format, "artifact format")->check(CLI::IsMember({"json"}));

  std::function<int()> action;

  std::string in_monoid, in_morphism, in_tree, in_split, in_interp, in_seq, in_small, in_big,
      in_map, kind;
  std::vector<int> arg_nodes;
  int arg_level = 1, arg_min_dim = 1, arg_size = 0, arg_budget = 0, arg_x = 0, arg_y = 0,
      arg_rmin = 1, arg_rmax = 1, arg_target = 1, arg_count = 0, arg_bound = 0;
  bool flag_endpoints = false;

  auto* monoid = app.add_subcommand("monoid", "monoid table operations");
  monoid->require_subcommand(1);
  monoid->fallthrough();
  auto* monoid_check = monoid->add_subcommand("check", "validate a monoid file");
  monoid_check->fallthrough();
  monoid_check->add_option("--in", in_monoid, "monoid file")->required();
  monoid_check->callback([&] {
    action = [&] {
      FiniteMonoid m = monoid_from_json(ctx.load(in_monoid));
      std::printf("monoid of size %d, identity %s\n", m.size,
                  m.names[static_cast<std::size_t>(m.identity)].c_str());
      ctx.outcome = "valid";
      return 0;
    };
  });

  auto* tree = app.add_subcommand("tree", "tree file operations");
  tree->require_subcommand(1);
  tree->fallthrough();
  auto* tree_show = tree->add_subcommand("show", "summarize a tree file");
  tree_show->fallthrough();
  tree_show->add_option("--tree", in_tree, "tree file")->required();
  tree_show->add_option("--monoid", in_monoid, "monoid file")->required();
  tree_show->add_option("--morphism", in_morphism, "morphism file for symbol-mode trees");
  tree_show->callback([&] {
    action = [&] {
      FiniteMonoid m = monoid_from_json(ctx.load(in_monoid));
      std::optional<Morphism> mor;
      TreeDoc d = tree_doc_from_json(ctx.load(in_tree), m, maybe_morphism(ctx, in_morphism, m, mor));
      json per_node = json::array();
      for (int v = 0; v < d.tree.size(); ++v)
        per_node.push_back(json{{"parent", d.tree.parent(v)},
                                {"edge", v == d.tree.root() ? -1 : d.tree.edge_label(v)},
                                {"depth", d.tree.depth(v)},
                                {"leaf", d.tree.is_leaf(v)}});
      ctx.emit("tree-info.json", json{{"nodes", d.tree.size()},
                                      {"leaves", leaves_in_order(d.tree)},
                                      {"node", per_node}});
      ctx.outcome = "artifact";
      return 0;
    };
  });

  auto* interp = app.add_subcommand("interp", "interpretation operations");
  interp->require_subcommand(1);
  interp->fallthrough();
  auto* interp_run = interp->add_subcommand("run", "interpret a tree into a graph");
  interp_run->fallthrough();
  interp_run->add_option("--interp", in_interp, "interpretation file")->required();
  interp_run->add_option("--tree", in_tree, "tree file")->required();
  interp_run->callback([&] {
    action = [&] {
      MonoidInterpretation i = interp_from_json(ctx.load(in_interp));
      TreeDoc d = tree_doc_from_json(ctx.load(in_tree), i.monoid(), &i.morphism);
      ctx.emit("graph.json", graph_artifact(interpret(i, d.tree)));
      ctx.outcome = "artifact";
      return 0;
    };
  });

  auto* split = app.add_subcommand("split", "split construction and checks");
  split->require_subcommand(1);
  split->fallthrough();
  auto add_tree_inputs = [&](CLI::App* cmd) {
    cmd->fallthrough();
    cmd->add_option("--tree", in_tree, "tree file")->required();
    cmd->add_option("--monoid", in_monoid, "monoid file")->required();
    cmd->add_option("--morphism", in_morphism, "morphism file for symbol-mode trees");
  };
  auto load_tree = [&]() {
    FiniteMonoid m = monoid_from_json(ctx.load(in_monoid));
    std::optional<Morphism> mor;
    return tree_doc_from_json(ctx.load(in_tree), m, maybe_morphism(ctx, in_morphism, m, mor)).tree;
  };

  auto* split_build = split->add_subcommand("build", "search for an absorbing split");
  add_tree_inputs(split_build);
  split_build->add_option("--budget", arg_budget, "height budget (0 = three times the monoid size)");
  split_build->callback([&] {
    action = [&] {
      LabelledTree t = load_tree();
      int budget = arg_budget > 0 ? arg_budget : default_split_budget(t.monoid);
      ConstructOutcome c = construct_split(t, budget, ctx.deadline());
      if (c.status == SearchStatus::deadline) return ctx.timed_out();
      if (c.status == SearchStatus::absent)
        return ctx.refuted(json{{"budget", budget}, {"reason", "no split within the budget"}});
      std::printf("found a split of height %d\n", c.split->height);
      ctx.emit("split.json", split_to_json(*c.split));
      ctx.outcome = "found";
      return 0;
    };
  });

  auto* split_check = split->add_subcommand("check", "verify absorption and the fast product");
  add_tree_inputs(split_check);
  split_check->add_option("--split", in_split, "split file")->required();
  split_check->callback([&] {
    action = [&] {
      LabelledTree t = load_tree();
      Split s = split_from_json(ctx.load(in_split));
      s.validate(t);
      if (auto v = validate_ramseyan_parallel(t, s))
        return ctx.refuted(json{{"check", "absorption"},
                                {"leaf", v->leaf},
                                {"k", v->k},
                                {"pair", {v->x, v->y}},
                                {"absorbed", {v->xp, v->yp}}});
      if (auto bad = check_fast_tlbl_parallel(t, s))
        return ctx.refuted(
            json{{"check", "fast-product"}, {"x", bad->first}, {"y", bad->second}});
      std::printf("split is absorbing; fast products agree\n");
      ctx.outcome = "verified";
      return 0;
    };
  });

  auto* split_query = split->add_subcommand("query", "evaluate products and gaps for a node pair");
  add_tree_inputs(split_query);
  split_query->add_option("--split", in_split, "split file")->required();
  split_query->add_option("--x", arg_x, "ancestor node id")->required();
  split_query->add_option("--y", arg_y, "descendant node id")->required();
  split_query->callback([&] {
    action = [&] {
      LabelledTree t = load_tree();
      Split s = split_from_json(ctx.load(in_split));
      s.validate(t);
      json q{{"x", arg_x},
             {"y", arg_y},
             {"tlbl", tlbl(t, arg_x, arg_y)},
             {"fast_tlbl", fast_tlbl(t, s, arg_x, arg_y)},
             {"gap", gap_or_top(t, s, arg_x, arg_y)}};
      ctx.emit("query.json", q);
      ctx.outcome = "artifact";
      return 0;
    };
  });

  auto* gap = app.add_subcommand("gap", "marked embedding operations");
  gap->require_subcommand(1);
  gap->fallthrough();
  auto add_pair_inputs = [&](CLI::App* cmd) {
    cmd->fallthrough();
    cmd->add_option("--small", in_small, "marked tree file (pattern)")->required();
    cmd->add_option("--big", in_big, "marked tree file (host)")->required();
    cmd->add_option("--monoid", in_monoid, "monoid file")->required();
    cmd->add_option("--morphism", in_morphism, "morphism file for symbol-mode trees");
  };

  auto* gap_check = gap->add_subcommand("check", "verify a marked embedding map");
  add_pair_inputs(gap_check);
  gap_check->add_option("--map", in_map, "file holding the node map as a JSON array")->required();
  gap_check->callback([&] {
    action = [&] {
      FiniteMonoid m = monoid_from_json(ctx.load(in_monoid));
      std::optional<Morphism> mor;
      const Morphism* mp = maybe_morphism(ctx, in_morphism, m, mor);
      MarkedNestedTree small = load_marked(ctx, in_small, m, mp);
      MarkedNestedTree big = load_marked(ctx, in_big, m, mp);
      std::vector<int> h = load_map(ctx, in_map);
      if (auto f = check_marked_gap(small, big, h))
        return ctx.refuted(json{{"clause", f->clause}, {"nodes", f->nodes}});
      std::printf("map is a marked embedding\n");
      ctx.outcome = "verified";
      return 0;
    };
  });

  auto* gap_search = gap->add_subcommand("search", "search for a marked embedding");
  add_pair_inputs(gap_search);
  gap_search->callback([&] {
    action = [&] {
      FiniteMonoid m = monoid_from_json(ctx.load(in_monoid));
      std::optional<Morphism> mor;
      const Morphism* mp = maybe_morphism(ctx, in_morphism, m, mor);
      MarkedNestedTree small = load_marked(ctx, in_small, m, mp);
      MarkedNestedTree big = load_marked(ctx, in_big, m, mp);
      GapSearchResult r = search_marked_gap(small, big, ctx.deadline());
      if (r.status == SearchStatus::deadline) return ctx.timed_out();
      if (r.status == SearchStatus::absent)
        return ctx.refuted(json{{"reason", "no marked embedding exists"}});
      ctx.emit("map.json", json(r.map));
      ctx.outcome = "found";
      return 0;
    };
  });

  auto* gap_encode = gap->add_subcommand("encode", "encode a marked tree into node labels");
  gap_encode->fallthrough();
  gap_encode->add_option("--in", in_small, "marked tree file")->required();
  gap_encode->add_option("--monoid", in_monoid, "monoid file")->required();
  gap_encode->add_option("--morphism", in_morphism, "morphism file for symbol-mode trees");
  gap_encode->add_option("--bound", arg_bound, "chain bound (0 = longest non-dummy chain)");
  gap_encode->callback([&] {
    action = [&] {
      FiniteMonoid m = monoid_from_json(ctx.load(in_monoid));
      std::optional<Morphism> mor;
      MarkedNestedTree mt = load_marked(ctx, in_small, m, maybe_morphism(ctx, in_morphism, m, mor));
      int L = arg_bound > 0 ? arg_bound : longest_non_dummy_chain(mt);
      EncodedTree e = encode_dershowitz(mt, L);
      ctx.emit("encoded.json", json{{"bound", L},
                                    {"tree", tree_artifact(e.tree)},
                                    {"split", split_to_json(e.split)},
                                    {"labels", e.node_labels}});
      ctx.outcome = "artifact";
      return 0;
    };
  });

  auto* bough = app.add_subcommand("bough", "backbone and bough operations");
  bough->require_subcommand(1);
  bough->fallthrough();

  auto* bough_list = bough->add_subcommand("list", "enumerate maximal backbones at a level");
  add_tree_inputs(bough_list);
  bough_list->add_option("--split", in_split, "split file")->required();
  bough_list->add_option("--level", arg_level, "split level")->required();
  bough_list->add_option("--min-dim", arg_min_dim, "least dimension to report");
  bough_list->callback([&] {
    action = [&] {
      LabelledTree t = load_tree();
      Split s = split_from_json(ctx.load(in_split));
      s.validate(t);
      json out = json::array();
      for (const BackboneRef& b : enumerate_boughs(t, s, arg_level, arg_min_dim))
        out.push_back(json{{"nodes", b.nodes}, {"level", b.level}});
      ctx.emit("boughs.json", out);
      ctx.outcome = "artifact";
      return 0;
    };
  });

  auto add_backbone_inputs = [&](CLI::App* cmd) {
    add_tree_inputs(cmd);
    cmd->add_option("--split", in_split, "split file")->required();
    cmd->add_option("--nodes", arg_nodes, "backbone node ids in ancestor order")->required();
    cmd->add_option("--level", arg_level, "split level")->required();
  };

  auto* bough_decompose = bough->add_subcommand("decompose", "cut a host at a backbone");
  add_backbone_inputs(bough_decompose);
  bough_decompose->callback([&] {
    action = [&] {
      LabelledTree t = load_tree();
      Split s = split_from_json(ctx.load(in_split));
      s.validate(t);
      Decomposition d = decompose(t, s, backbone_from(arg_nodes, arg_level));
      json blocks = json::array();
      for (const auto& [a, b] : d.blocks) blocks.push_back(json::array({a, b}));
      ctx.emit("decomposition.json", json{{"context", context_artifact(d.context)},
                                          {"bough", bough_artifact(d.bough)},
                                          {"blocks", blocks}});
      ctx.outcome = "artifact";
      return 0;
    };
  });

  auto* bough_perfect = bough->add_subcommand("perfect", "search for a fifth-power certificate");
  add_backbone_inputs(bough_perfect);
  bough_perfect->add_option("--interp", in_interp, "interpretation file")->required();
  bough_perfect->callback([&] {
    action = [&] {
      MonoidInterpretation i = interp_from_json(ctx.load(in_interp));
      std::optional<Morphism> mor;
      FiniteMonoid m = monoid_from_json(ctx.load(in_monoid));
      TreeDoc d = tree_doc_from_json(ctx.load(in_tree), m, maybe_morphism(ctx, in_morphism, m, mor));
      Split s = split_from_json(ctx.load(in_split));
      s.validate(d.tree);
      Decomposition dec = decompose(d.tree, s, backbone_from(arg_nodes, arg_level));
      PerfectOutcome p = is_perfect_bough(i, dec.context, dec.bough, ctx.deadline());
      if (p.status == SearchStatus::deadline) return ctx.timed_out();
      if (p.status == SearchStatus::absent)
        return ctx.refuted(json{{"reason", "no certificate embeds the bough into its fifth power"}});
      ctx.emit("certificate.json", json{{"bough_leaves", p.certificate->bough_leaves},
                                        {"side", p.certificate->side},
                                        {"vertex_map", p.certificate->vertex_map}});
      ctx.outcome = "found";
      return 0;
    };
  });

  auto* seq = app.add_subcommand("seq", "sequence expansion and certification");
  seq->require_subcommand(1);
  seq->fallthrough();

  auto* seq_expand = seq->add_subcommand("expand", "expand a sequence to a graph");
  seq_expand->fallthrough();
  seq_expand->add_option("--seq", in_seq, "sequence file")->required();
  seq_expand->add_option("--size", arg_size, "number of copies resp. positions")->required();
  seq_expand->add_flag("--endpoints", flag_endpoints, "fold endpoint marks into vertex labels");
  seq_expand->callback([&] {
    action = [&] {
      SequenceDoc doc = sequence_from_json(ctx.load(in_seq));
      LabelledGraph g = std::visit(
          [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, RegularSequence>)
              return flag_endpoints ? with_endpoints_regular(s, arg_size)
                                    : expand_regular(s, arg_size);
            else
              return flag_endpoints ? with_endpoints_periodic(s, arg_size)
                                    : expand_periodic(s, arg_size);
          },
          doc);
      ctx.emit("graph.json", graph_artifact(g));
      ctx.outcome = "artifact";
      return 0;
    };
  });

  auto* seq_certify = seq->add_subcommand("certify", "prove the endpoint family an antichain");
  seq_certify->fallthrough();
  seq_certify->add_option("--seq", in_seq, "sequence file")->required();
  seq_certify->add_option("--rmin", arg_rmin, "least size");
  seq_certify->add_option("--rmax", arg_rmax, "greatest size")->required();
  seq_certify->callback([&] {
    action = [&] {
      SequenceDoc doc = sequence_from_json(ctx.load(in_seq));
      AntichainResult r = std::visit(
          [&](const auto& s) { return certify_endpoint_antichain(s, arg_rmin, arg_rmax, ctx.deadline()); },
          doc);
      if (r.status == SearchStatus::deadline) return ctx.timed_out();
      if (r.status == SearchStatus::found)
        return ctx.refuted(json{{"from_size", arg_rmin + r.from},
                                {"to_size", arg_rmin + r.to},
                                {"map", r.map}});
      std::printf("sizes %d..%d are pairwise incomparable\n", arg_rmin, arg_rmax);
      ctx.outcome = "verified";
      return 0;
    };
  });

  auto* transduce = app.add_subcommand("transduce", "arrow digraph and path extraction");
  transduce->require_subcommand(1);
  transduce->fallthrough();
  auto load_regular = [&]() {
    SequenceDoc doc = sequence_from_json(ctx.load(in_seq));
    if (!std::holds_alternative<RegularSequence>(doc))
      throw std::invalid_argument("transduce: sequence file must be regular");
    return std::get<RegularSequence>(doc);
  };

  auto* tr_arrows = transduce->add_subcommand("arrows", "emit the arrow digraph of an expansion");
  tr_arrows->fallthrough();
  tr_arrows->add_option("--seq", in_seq, "sequence file")->required();
  tr_arrows->add_option("--size", arg_size, "number of copies")->required();
  tr_arrows->callback([&] {
    action = [&] {
      RegularSequence s = load_regular();
      DirectedGraph d = phi_arrow(s, arg_size);
      json arcs = json::array();
      for (int u = 0; u < d.n; ++u)
        for (int v = 0; v < d.n; ++v)
          if (d.has(u, v)) arcs.push_back(json::array({u, v}));
      ctx.emit("arcs.json", json{{"n", d.n}, {"arcs", arcs}});
      ctx.outcome = "artifact";
      return 0;
    };
  });

  auto* tr_claims = transduce->add_subcommand("claims", "check the arrow structure claims");
  tr_claims->fallthrough();
  tr_claims->add_option("--seq", in_seq, "sequence file")->required();
  tr_claims->add_option("--size", arg_size, "number of copies")->required();
  tr_claims->callback([&] {
    action = [&] {
      RegularSequence s = load_regular();
      ArrowClaims c = check_arrow_claims(s, arg_size);
      if (!c.forward_bounded)
        return ctx.refuted(json{{"claim", "forward-bounded"},
                                {"arc", {c.forward_witness->first, c.forward_witness->second}}});
      if (!c.far_backward_regular) {
        auto [u, v, miss] = *c.far_witness;
        return ctx.refuted(
            json{{"claim", "far-backward-regular"}, {"source", u}, {"present", v}, {"missing", miss}});
      }
      ctx.emit("claims.json", json{{"forward_bounded", true},
                                   {"far_backward_regular", true},
                                   {"extends_prev", c.extends_prev},
                                   {"extends_same", c.extends_same}});
      ctx.outcome = "verified";
      return 0;
    };
  });

  auto* tr_path = transduce->add_subcommand("path", "extract a path from expansions");
  tr_path->fallthrough();
  tr_path->add_option("--seq", in_seq, "sequence file")->required();
  tr_path->add_option("--target", arg_target, "path length to produce")->required();
  tr_path->callback([&] {
    action = [&] {
      RegularSequence s = load_regular();
      TransduceOutcome t = transduce_paths(s, arg_target, ctx.deadline());
      if (t.status == SearchStatus::deadline) return ctx.timed_out();
      if (t.status == SearchStatus::absent)
        return ctx.refuted(json{{"reason", "no crossing path reaches the last copy"}});
      ctx.emit("path.json", json{{"easy", t.easy},
                                 {"r_used", t.r_used},
                                 {"kept", t.kept},
                                 {"graph", graph_artifact(t.result)}});
      ctx.outcome = "found";
      return 0;
    };
  });

  auto* corpus = app.add_subcommand("corpus", "generated instance corpora");
  corpus->require_subcommand(1);
  corpus->fallthrough();
  auto* corpus_gen = corpus->add_subcommand("gen", "write deterministic instance files");
  corpus_gen->fallthrough();
  corpus_gen->add_option("--kind", kind, "instance kind")
      ->check(CLI::IsMember({"tree", "split", "marked-pair", "sequence"}))
      ->required();
  corpus_gen->add_option("--count", arg_count, "number of files")->required();
  corpus_gen->add_option("--size", arg_size, "size bound (leaves resp. base vertices)");
  corpus_gen->callback([&] {
    action = [&] {
      Rng rng(ctx.seed);
      int size = arg_size > 0 ? arg_size : 12;
      for (int i = 0; i < arg_count; ++i) {
        std::string name = kind + "-" + (i < 10 ? "00" : i < 100 ? "0" : "") + std::to_string(i) +
                           ".json";
        if (kind == "tree") {
          const auto& monoids = corpus_monoids();
          const CorpusMonoid& cm = monoids[static_cast<std::size_t>(rng.below(monoids.size()))];
          int leaves = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(size)));
          LabelledTree t = random_tree(rng, cm.monoid, leaves, cm.identity_free);
          ctx.emit(name, json{{"monoid", monoid_to_json(cm.monoid)}, {"tree", tree_artifact(t)}});
        } else if (kind == "split") {
          auto si = random_split_instance(rng, ctx.deadline());
          if (!si) return ctx.timed_out();
          ctx.emit(name, json{{"monoid", monoid_to_json(si->tree.monoid)},
                              {"tree", tree_artifact(si->tree)},
                              {"split", split_to_json(si->split)}});
        } else if (kind == "marked-pair") {
          auto mp = random_marked_pair(rng, size, ctx.deadline());
          if (!mp) return ctx.timed_out();
          ctx.emit(name, json{{"monoid", monoid_to_json(mp->small.tree.monoid)},
                              {"interp", interp_to_json(mp->interp)},
                              {"small", marked_artifact(mp->small)},
                              {"big", marked_artifact(mp->big)},
                              {"map", mp->map_hint}});
        } else {
          ctx.emit(name, sequence_to_json(random_sequence(rng, size)));
        }
      }
      ctx.outcome = "artifact";
      return 0;
    };
  });

  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(ctx.out);
  auto t0 = std::chrono::steady_clock::now();
  int code = 2;
  try {
    code = action();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    ctx.outcome = std::string("error: ") + e.what();
    code = 2;
  }
  RunManifest m;
  m.command = ctx.command;
  m.inputs = ctx.inputs;
  m.seed = ctx.seed;
  m.version = kVersion;
  m.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  m.outcome = ctx.outcome;
  m.workers = worker_count();
  try {
    write_json_atomic(ctx.out + "/manifest.json", manifest_to_json(m));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: cannot write manifest: %s\n", e.what());
  }
  return code;
}
