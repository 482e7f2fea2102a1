// synco/tree.cc

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

#include "rrassess/synco/tree.h"

#include <cctype>

#include "rrassess/common/error.h"

namespace rrassess::synco {

namespace {

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  std::vector<ParseTree> ReadAll() {
    std::vector<ParseTree> trees;
    SkipSpace();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '(')
        Fail("expected '(' at top level");
      ParseTree t = ReadNode();
      if (t.label.empty()) t.label = "ROOT";
      trees.push_back(std::move(t));
      SkipSpace();
    }
    return trees;
  }

 private:
  [[noreturn]] void Fail(const std::string &msg) const {
    throw DataError("bracketed tree: " + msg + " (offset " +
                    std::to_string(pos_) + ")");
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string ReadAtom() {
    size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Precondition: text_[pos_] == '('.
  ParseTree ReadNode() {
    ++pos_;
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unbalanced brackets");
    ParseTree node;
    if (text_[pos_] != '(' && text_[pos_] != ')') node.label = ReadAtom();
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unbalanced brackets");
    if (text_[pos_] == ')') Fail("empty node");
    if (text_[pos_] != '(') {
      node.surface = ReadAtom();
      if (node.label.empty()) Fail("leaf without label");
      SkipSpace();
      if (pos_ >= text_.size()) Fail("unbalanced brackets");
      if (text_[pos_] != ')') Fail("leaf with more than one token");
      ++pos_;
      return node;
    }
    while (true) {
      SkipSpace();
      if (pos_ >= text_.size()) Fail("unbalanced brackets");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (text_[pos_] != '(') Fail("stray token inside internal node");
      node.children.push_back(ReadNode());
    }
    return node;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

void SerializeInto(const ParseTree &t, std::string *out) {
  out->push_back('(');
  out->append(t.label);
  if (t.IsLeaf()) {
    out->push_back(' ');
    out->append(t.surface);
  } else {
    for (const auto &c : t.children) {
      out->push_back(' ');
      SerializeInto(c, out);
    }
  }
  out->push_back(')');
}

void CollectLeaves(const ParseTree &t, std::vector<const ParseTree *> *out) {
  if (t.IsLeaf()) {
    out->push_back(&t);
    return;
  }
  for (const auto &c : t.children) CollectLeaves(c, out);
}

}  // namespace

std::vector<ParseTree> ParseBracketed(std::string_view text) {
  return BracketReader(text).ReadAll();
}

std::string Serialize(const ParseTree &tree) {
  std::string out;
  SerializeInto(tree, &out);
  return out;
}

ParseTree WithRoot(const ParseTree &tree) {
  if (tree.label == "ROOT") return tree;
  ParseTree root;
  root.label = "ROOT";
  root.children.push_back(tree);
  return root;
}

std::vector<const ParseTree *> Leaves(const ParseTree &tree) {
  std::vector<const ParseTree *> out;
  CollectLeaves(tree, &out);
  return out;
}

bool IsPunctuationTag(std::string_view tag) {
  return tag == "." || tag == "," || tag == ":" || tag == "``" ||
         tag == "''" || tag == "-LRB-" || tag == "-RRB-" || tag == "HYPH" ||
         tag == "NFP";
}

}  // namespace rrassess::synco
