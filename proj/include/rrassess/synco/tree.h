// synco/tree.h

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

#ifndef RRASSESS_SYNCO_TREE_H_
#define RRASSESS_SYNCO_TREE_H_

#include <string>
#include <string_view>
#include <vector>

namespace rrassess::synco {

/// Labeled ordered constituency tree in Penn bracket form. Preterminals are
/// collapsed into leaves: "(DT The)" is a leaf with label "DT" and surface
/// "The". Internal nodes have at least one child and an empty surface.
struct ParseTree {
  std::string label;
  std::vector<ParseTree> children;
  std::string surface;

  bool IsLeaf() const { return children.empty(); }
  bool operator==(const ParseTree &) const = default;
};

/// Parses zero or more top-level bracketed trees. Whitespace-insensitive.
/// A top-level group with an empty label, as in "( (S ...) )", is labeled
/// ROOT. Throws DataError on unbalanced brackets, empty nodes "()", or stray
/// tokens.
std::vector<ParseTree> ParseBracketed(std::string_view text);

/// Single-line bracketed form; ParseBracketed(Serialize(t)) == {t}.
std::string Serialize(const ParseTree &tree);

/// Tree rooted at ROOT: the tree itself if already labeled ROOT, otherwise a
/// ROOT node with the tree as its only child.
ParseTree WithRoot(const ParseTree &tree);

/// Leaves in order (preterminal label + surface).
std::vector<const ParseTree *> Leaves(const ParseTree &tree);

bool IsPunctuationTag(std::string_view tag);

}  // namespace rrassess::synco

#endif  // RRASSESS_SYNCO_TREE_H_
