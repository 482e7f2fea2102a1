// synco/units.cc

// Copyright 2026 The rrassess Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "rrassess/synco/units.h"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <unordered_map>

namespace rrassess::synco {

ProductionCounts &ProductionCounts::operator+=(const ProductionCounts &o) {
  w += o.w;
  s += o.s;
  c += o.c;
  t += o.t;
  ct += o.ct;
  dc += o.dc;
  cp += o.cp;
  cn += o.cn;
  vp += o.vp;
  return *this;
}

ProductionCounts operator+(ProductionCounts a, const ProductionCounts &b) {
  return a += b;
}

std::string_view BaseLabel(std::string_view label) {
  if (label.empty() || label[0] == '-') return label;
  const std::size_t cut = label.find_first_of("-=");
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

namespace {

using Labels = std::initializer_list<std::string_view>;

bool In(std::string_view label, Labels set) {
  const std::string_view base = BaseLabel(label);
  return std::find(set.begin(), set.end(), base) != set.end();
}

const std::unordered_map<std::string_view, std::vector<std::string_view>> &
HeadRules() {
  static const std::unordered_map<std::string_view,
                                  std::vector<std::string_view>>
      rules = {
          {"VP", {"TO", "VBD", "VBN", "MD", "VBZ", "VB", "VBG", "VBP", "VP",
                  "ADJP", "NN", "NNS", "NP"}},
          {"S", {"TO", "IN", "VP", "S", "SBAR", "ADJP", "UCP", "NP"}},
          {"SQ", {"VBZ", "VBD", "VBP", "VB", "MD", "VP", "SQ"}},
          {"SINV", {"VBZ", "VBD", "VBP", "VB", "MD", "VP", "S", "SINV",
                    "ADJP", "NP"}},
          {"SBAR", {"WHNP", "WHPP", "WHADVP", "WHADJP", "IN", "DT", "S",
                    "SQ", "SINV", "SBAR", "FRAG"}},
      };
  return rules;
}

const Labels kFinite = {"MD", "VBZ", "VBP", "VBD"};
const Labels kClauseLabels = {"S", "SINV", "SQ"};
const Labels kTLabels = {"S", "SBARQ", "SINV", "SQ"};

// Flattened view with parent links, built per tree.
struct Node {
  const ParseTree *tree;
  int parent;
  std::size_t index_in_parent;
  std::vector<int> children;
};

class Analyzer {
 public:
  explicit Analyzer(const ParseTree &root) { Add(&root, -1, 0); }

  ProductionCounts Count() {
    ProductionCounts pc;
    pc.s = 1;
    clause_.assign(nodes_.size(), false);
    tunit_.assign(nodes_.size(), false);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      clause_[i] = IsClause(static_cast<int>(i));
      tunit_[i] = IsTUnit(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const int id = static_cast<int>(i);
      if (Label(id) == "FRAG" && ParentIs(id, {"ROOT"})) {
        if (!AnyDescendant(id, clause_)) clause_[i] = true;
        if (!AnyDescendant(id, tunit_)) tunit_[i] = true;
      }
    }
    std::vector<bool> dc(nodes_.size(), false);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const int id = static_cast<int>(i);
      if (Label(id) == "SBAR")
        for (int ch : nodes_[i].children)
          if (clause_[ch] && In(Label(ch), kClauseLabels)) dc[i] = true;
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const int id = static_cast<int>(i);
      const ParseTree &n = *nodes_[i].tree;
      if (n.IsLeaf()) {
        if (!IsPunctuationTag(n.label) && n.label != "-NONE-") ++pc.w;
      }
      pc.c += clause_[i];
      pc.t += tunit_[i];
      pc.dc += dc[i];
      if (tunit_[i] && AnyDescendant(id, dc)) ++pc.ct;
      pc.cp += IsCoordinatePhrase(id);
      pc.cn += IsComplexNominal(id);
      pc.vp += IsCountedVerbPhrase(id);
    }
    return pc;
  }

 private:
  int Add(const ParseTree *t, int parent, std::size_t idx) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({t, parent, idx, {}});
    for (std::size_t k = 0; k < t->children.size(); ++k) {
      const int ch = Add(&t->children[k], id, k);
      nodes_[id].children.push_back(ch);
    }
    return id;
  }

  std::string_view Label(int id) const {
    return BaseLabel(nodes_[id].tree->label);
  }
  bool ParentIs(int id, Labels set) const {
    const int p = nodes_[id].parent;
    return p >= 0 && In(nodes_[p].tree->label, set);
  }
  int Head(int id) const {
    return nodes_[id].children[HeadChild(*nodes_[id].tree)];
  }
  bool HeadedBy(int id, Labels set) const {
    return !nodes_[id].children.empty() && In(Label(Head(id)), set);
  }
  int Sibling(int id, int offset) const {
    const int p = nodes_[id].parent;
    if (p < 0) return -1;
    const long k = static_cast<long>(nodes_[id].index_in_parent) + offset;
    const auto &sibs = nodes_[p].children;
    if (k < 0 || k >= static_cast<long>(sibs.size())) return -1;
    return sibs[k];
  }
  bool Dominates(int id, Labels set) const {
    for (int ch : nodes_[id].children)
      if (In(Label(ch), set) || Dominates(ch, set)) return true;
    return false;
  }
  bool AnyDescendant(int id, const std::vector<bool> &flag) const {
    for (int ch : nodes_[id].children)
      if (flag[ch] || AnyDescendant(ch, flag)) return true;
    return false;
  }
  bool HasAncestor(int id, Labels set) const {
    for (int p = nodes_[id].parent; p >= 0; p = nodes_[p].parent)
      if (In(Label(p), set)) return true;
    return false;
  }

  bool IsFiniteVp(int id) const {
    return Label(id) == "VP" && HeadedBy(id, kFinite);
  }

  bool IsClause(int id) const {
    if (!In(Label(id), kClauseLabels)) return false;
    const auto &ch = nodes_[id].children;
    if (ch.empty()) return false;
    if (ParentIs(id, {"ROOT"}) && Label(ch.front()) == "VP" &&
        HeadedBy(ch.front(), {"VB"}))
      return true;
    if (HeadedBy(id, kFinite)) return true;
    for (int c : ch) {
      if (Label(c) != "VP") continue;
      if (IsFiniteVp(c)) return true;
      bool has_cc = false, has_finite = false;
      for (int g : nodes_[c].children) {
        has_cc |= Label(g) == "CC";
        has_finite |= IsFiniteVp(g);
      }
      if (has_cc && has_finite) return true;
    }
    return false;
  }

  bool IsTUnit(int id) const {
    if (!In(Label(id), kTLabels)) return false;
    if (ParentIs(id, {"ROOT"})) return true;
    if (HasAncestor(id, {"SBAR", "VP"})) return false;
    for (int k = 1;; ++k) {
      const int sib = Sibling(id, -k);
      if (sib < 0) return false;
      if (In(Label(sib), kTLabels)) return true;
    }
  }

  bool IsCoordinatePhrase(int id) const {
    if (!In(Label(id), {"ADJP", "ADVP", "NP", "VP"})) return false;
    bool has_cc = false;
    std::size_t others = 0;
    for (int ch : nodes_[id].children) {
      if (Label(ch) == "CC")
        has_cc = true;
      else if (!IsPunctuationTag(nodes_[ch].tree->label))
        ++others;
    }
    return has_cc && others >= 2;
  }

  bool IsComplexNominal(int id) const {
    const std::string_view label = Label(id);
    if (label == "NP") {
      if (ParentIs(id, {"NP"})) return false;
      if (Dominates(id, {"JJ", "POS", "PP", "S", "VBG"})) return true;
      return HasCoordinatedNp(id);
    }
    if (label == "SBAR") {
      const auto &ch = nodes_[id].children;
      const int head = Head(id);
      const bool shape =
          Label(head) == "WHNP" ||
          (Label(head) == "IN" && (nodes_[head].tree->surface == "that" ||
                                   nodes_[head].tree->surface == "That" ||
                                   nodes_[head].tree->surface == "for" ||
                                   nodes_[head].tree->surface == "For")) ||
          Label(ch.front()) == "S";
      if (!shape) return false;
      const int next = Sibling(id, 1);
      return (next >= 0 && Label(next) == "VP") || ParentIs(id, {"VP"});
    }
    if (label == "S") {
      const int next = Sibling(id, 1);
      if (next < 0 || Label(next) != "VP") return false;
      for (int ch : nodes_[id].children)
        if (Label(ch) == "VP" && HeadedBy(ch, {"VBG", "TO"})) return true;
    }
    return false;
  }

  // An NP below `id` with a later NP sister and no CC right after it.
  bool HasCoordinatedNp(int id) const {
    for (int ch : nodes_[id].children) {
      if (Label(ch) == "NP") {
        const int next = Sibling(ch, 1);
        const bool cc_next = next >= 0 && Label(next) == "CC";
        bool later_np = false;
        for (int k = 1; Sibling(ch, k) >= 0; ++k)
          later_np |= Label(Sibling(ch, k)) == "NP";
        if (later_np && !cc_next) return true;
      }
      if (HasCoordinatedNp(ch)) return true;
    }
    return false;
  }

  bool IsCountedVerbPhrase(int id) const {
    const std::string_view label = Label(id);
    if (label == "VP") return ParentIs(id, {"S", "SINV", "SQ"});
    if (In(label, kFinite) && nodes_[id].tree->IsLeaf() &&
        ParentIs(id, {"SQ"})) {
      for (int sib : nodes_[nodes_[id].parent].children)
        if (Label(sib) == "VP") return false;
      return true;
    }
    return false;
  }

  std::vector<Node> nodes_;
  std::vector<bool> clause_, tunit_;
};

}  // namespace

std::size_t HeadChild(const ParseTree &node) {
  const auto &rules = HeadRules();
  auto it = rules.find(BaseLabel(node.label));
  if (it == rules.end()) return 0;
  for (std::string_view cat : it->second)
    for (std::size_t k = 0; k < node.children.size(); ++k)
      if (BaseLabel(node.children[k].label) == cat) return k;
  return 0;
}

ProductionCounts CountUnits(const std::vector<ParseTree> &trees) {
  ProductionCounts total;
  for (const auto &tree : trees) {
    const ParseTree rooted = WithRoot(tree);
    total += Analyzer(rooted).Count();
  }
  return total;
}

}  // namespace rrassess::synco
