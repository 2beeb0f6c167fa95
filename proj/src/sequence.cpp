#include "treewqo/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace treewqo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void check_label(const std::string& name) {
  if (name.empty()) fail("sequence: empty label");
  if (name == mark_first || name == mark_last) fail("sequence: label uses a reserved mark name");
  if (name.find('|') != std::string::npos) fail("sequence: label contains '|'");
}

void check_rules(const LabelPairSet& close, const LabelPairSet& far) {
  for (const auto& set : {close, far})
    for (const auto& [a, b] : set) {
      check_label(a);
      check_label(b);
    }
}

int intern(LabelledGraph& g, const std::string& name) {
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    if (g.labels[i] == name) return static_cast<int>(i);
  g.labels.push_back(name);
  return static_cast<int>(g.labels.size()) - 1;
}

LabelledGraph relabel_endpoints(LabelledGraph g, const std::vector<std::string>& names) {
  LabelledGraph out = g;
  out.labels.clear();
  out.vlabel.clear();
  for (int v = 0; v < g.n; ++v) out.vlabel.push_back(intern(out, names[static_cast<std::size_t>(v)]));
  out.validate();
  return out;
}

}  // namespace

void RegularSequence::validate() const {
  base.validate();
  if (base.n == 0) fail("sequence: empty base graph");
  for (const auto& name : base.labels) check_label(name);
  check_rules(close, far);
}

void PeriodicSequence::validate() const {
  if (word.empty()) fail("sequence: empty word");
  for (const auto& letter : word) check_label(letter);
  check_rules(close, far);
}

LabelledGraph expand_regular(const RegularSequence& s, int r) {
  s.validate();
  if (r < 1) fail("expand_regular: size must be positive");
  int n = s.base.n;
  LabelledGraph g;
  g.n = n * r;
  g.labels = s.base.labels;
  g.adj.assign(static_cast<std::size_t>(g.n), std::vector<bool>(static_cast<std::size_t>(g.n), false));
  for (int copy = 0; copy < r; ++copy)
    for (int u = 0; u < n; ++u) g.vlabel.push_back(s.base.vlabel[static_cast<std::size_t>(u)]);
  for (int ci = 0; ci < r; ++ci)
    for (int cj = ci; cj < r; ++cj)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (ci == cj && v <= u) continue;
          bool present;
          if (ci == cj) {
            present = s.base.edge(u, v);
          } else {
            LabelPair p{s.base.label_name(u), s.base.label_name(v)};
            present = (cj == ci + 1 ? s.close : s.far).count(p) > 0;
          }
          if (present) g.set_edge(ci * n + u, cj * n + v, true);
        }
  g.validate();
  return g;
}

LabelledGraph expand_periodic(const PeriodicSequence& s, int n) {
  s.validate();
  if (n < 1) fail("expand_periodic: size must be positive");
  int p = static_cast<int>(s.word.size());
  LabelledGraph g;
  g.n = p * n;
  g.adj.assign(static_cast<std::size_t>(g.n), std::vector<bool>(static_cast<std::size_t>(g.n), false));
  for (int i = 0; i < g.n; ++i) g.vlabel.push_back(intern(g, s.word[static_cast<std::size_t>(i % p)]));
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      LabelPair pr{s.word[static_cast<std::size_t>(i % p)], s.word[static_cast<std::size_t>(j % p)]};
      if ((j == i + 1 ? s.close : s.far).count(pr) > 0) g.set_edge(i, j, true);
    }
  g.validate();
  return g;
}

LabelledGraph with_endpoints_regular(const RegularSequence& s, int r) {
  LabelledGraph g = expand_regular(s, r);
  int n = s.base.n;
  std::vector<std::string> names;
  for (int v = 0; v < g.n; ++v) {
    std::string name = g.label_name(v);
    if (v / n == 0) name += std::string("|") + mark_first;
    if (v / n == r - 1) name += std::string("|") + mark_last;
    names.push_back(std::move(name));
  }
  return relabel_endpoints(std::move(g), names);
}

LabelledGraph with_endpoints_periodic(const PeriodicSequence& s, int n) {
  LabelledGraph g = expand_periodic(s, n);
  std::vector<std::string> names;
  for (int v = 0; v < g.n; ++v) {
    std::string name;
    if (v == 0) name = mark_first;
    if (v == g.n - 1) name += name.empty() ? mark_last : std::string("|") + mark_last;
    if (name.empty()) name = "_";
    names.push_back(std::move(name));
  }
  return relabel_endpoints(std::move(g), names);
}

bool far_is_close_complement(const PeriodicSequence& s) {
  s.validate();
  std::set<std::string> letters(s.word.begin(), s.word.end());
  for (const auto& a : letters)
    for (const auto& b : letters) {
      bool in_close = s.close.count({a, b}) > 0;
      bool in_far = s.far.count({a, b}) > 0;
      if (in_close == in_far) return false;
    }
  return true;
}

namespace {

AntichainResult antichain_over(std::vector<LabelledGraph> family, Deadline deadline) {
  return is_antichain(family, nullptr, false, deadline);
}

}  // namespace

AntichainResult certify_endpoint_antichain(const RegularSequence& s, int lo, int hi,
                                           Deadline deadline) {
  if (lo < 1 || hi < lo) fail("certify: invalid size range");
  std::vector<LabelledGraph> family;
  for (int r = lo; r <= hi; ++r) family.push_back(with_endpoints_regular(s, r));
  return antichain_over(std::move(family), deadline);
}

AntichainResult certify_endpoint_antichain(const PeriodicSequence& s, int lo, int hi,
                                           Deadline deadline) {
  if (lo < 1 || hi < lo) fail("certify: invalid size range");
  std::vector<LabelledGraph> family;
  for (int n = lo; n <= hi; ++n) family.push_back(with_endpoints_periodic(s, n));
  return antichain_over(std::move(family), deadline);
}

RegularSequence split_permutation_sequence() {
  RegularSequence s;
  s.base.n = 2;
  s.base.labels = {"o", "b"};
  s.base.vlabel = {0, 1};
  s.base.adj = {{false, true}, {true, false}};
  s.close = {{"o", "o"}};
  s.far = {{"o", "o"}, {"b", "o"}};
  return s;
}

PeriodicSequence split_permutation_periodic() {
  PeriodicSequence s;
  s.word = {"o", "b"};
  s.close = {{"o", "b"}};
  s.far = {{"o", "o"}, {"b", "o"}};
  return s;
}

}  // namespace treewqo
