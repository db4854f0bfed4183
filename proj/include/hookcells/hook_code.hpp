#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hookcells/errors.hpp"
#include "hookcells/hilbert.hpp"
#include "hookcells/partition.hpp"

namespace hookcells {

// One block of a hook code: the parts recorded at a given hand degree.
// parts has exactly delta_{degree+1} entries (trailing zeros kept) so block
// labels never shift; a block may have zero entries.
struct CodeBlock {
  int degree = 0;
  std::vector<int> parts;

  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }

  friend bool operator==(const CodeBlock&, const CodeBlock&) = default;
  friend auto operator<=>(const CodeBlock&, const CodeBlock&) = default;
};

// Difference-one hook code: one block per degree in [order, socle degree] of
// the diagonal lengths.  Staircase shapes carry no blocks.
class HookCode {
 public:
  HookCode() = default;
  explicit HookCode(std::vector<CodeBlock> blocks)
      : blocks_(std::move(blocks)) {
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (k > 0 && blocks_[k].degree != blocks_[k - 1].degree + 1)
        throw InvalidShape("hook-code block degrees must be consecutive");
      const auto& parts = blocks_[k].parts;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
          throw InvalidShape(
              "hook-code block parts must be non-negative and non-increasing");
      }
    }
  }

  const std::vector<CodeBlock>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }

  const CodeBlock& block_at(int degree) const {
    for (const auto& b : blocks_)
      if (b.degree == degree) return b;
    throw DegreeOutOfRange("no hook-code block at degree " +
                           std::to_string(degree));
  }

  // Total number of recorded hooks: the dimension of the cell.
  int size() const {
    int s = 0;
    for (const auto& b : blocks_) s += b.size();
    return s;
  }

  friend bool operator==(const HookCode&, const HookCode&) = default;
  friend auto operator<=>(const HookCode&, const HookCode&) = default;

 private:
  std::vector<CodeBlock> blocks_;
};

// Degree-i hands of P: end-of-row monomials x^{p_{r+1}-1} y^r of degree i,
// by increasing y-degree.
inline std::vector<Monomial> hands(const Partition& P, int degree) {
  std::vector<Monomial> out;
  for (int r = 0; r < P.rows(); ++r)
    if (P.row_length(r) - 1 + r == degree)
      out.push_back({P.row_length(r) - 1, r});
  return out;
}

inline HookCode hook_code(const Partition& P) {
  const HilbertFunction T = diagonal_lengths(P);
  const auto hooks = difference_one_hooks(P);
  std::vector<CodeBlock> blocks;
  for (int i = T.order(); i <= T.socle_degree(); ++i) {
    const auto hand_row = hands(P, i);
    const int used = T.delta(i + 1);
    if (static_cast<int>(hand_row.size()) < used)
      throw Error("fewer hands than block height at degree " +
                  std::to_string(i));
    CodeBlock block{i, std::vector<int>(static_cast<std::size_t>(used), 0)};
    for (int k = 0; k < used; ++k)
      for (const auto& h : hooks)
        if (h.hand == hand_row[static_cast<std::size_t>(k)])
          ++block.parts[static_cast<std::size_t>(k)];
    blocks.push_back(std::move(block));
  }
  return HookCode(std::move(blocks));
}

// Blockwise complement inside the box sequence of T: each block reflects to
// width - parts, reversed to stay non-increasing.
inline HookCode complement(const HookCode& code, const HilbertFunction& T) {
  std::vector<CodeBlock> blocks;
  for (int i = T.order(); i <= T.socle_degree(); ++i) {
    const auto box = T.box(i);
    const CodeBlock* src = nullptr;
    for (const auto& b : code.blocks())
      if (b.degree == i) src = &b;
    std::vector<int> parts(static_cast<std::size_t>(box.height), 0);
    if (src) {
      if (static_cast<int>(src->parts.size()) > box.height)
        throw BoxOverflow("hook-code block taller than its box");
      for (std::size_t k = 0; k < src->parts.size(); ++k) {
        if (src->parts[k] > box.width)
          throw BoxOverflow("hook-code part wider than its box");
        parts[k] = src->parts[k];
      }
    }
    std::vector<int> flipped;
    flipped.reserve(parts.size());
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
      flipped.push_back(box.width - *it);
    blocks.push_back(CodeBlock{i, std::move(flipped)});
  }
  for (const auto& b : code.blocks())
    if (b.degree < T.order() || b.degree > T.socle_degree())
      throw BoxOverflow("hook-code block outside the box degrees");
  return HookCode(std::move(blocks));
}

// The full-box code, the maximum element of the code lattice.
inline HookCode maximum_code(const HilbertFunction& T) {
  std::vector<CodeBlock> blocks;
  for (int i = T.order(); i <= T.socle_degree(); ++i) {
    const auto box = T.box(i);
    blocks.push_back(CodeBlock{
        i, std::vector<int>(static_cast<std::size_t>(box.height), box.width)});
  }
  return HookCode(std::move(blocks));
}

// All codes fitting the boxes of T: per block, non-increasing part vectors of
// length delta_{i+1} with entries in [0, 1+delta_i].  Product order, leftmost
// block most significant, descending within each block.
inline std::vector<HookCode> enumerate_codes(const HilbertFunction& T) {
  std::vector<std::vector<std::vector<int>>> per_block;
  for (int i = T.order(); i <= T.socle_degree(); ++i) {
    const auto box = T.box(i);
    std::vector<std::vector<int>> shapes;
    std::vector<int> current;
    auto dfs = [&](auto&& self, int k, int bound) -> void {
      if (k == box.height) {
        shapes.push_back(current);
        return;
      }
      for (int p = bound; p >= 0; --p) {
        current.push_back(p);
        self(self, k + 1, p);
        current.pop_back();
      }
    };
    dfs(dfs, 0, box.width);
    per_block.push_back(std::move(shapes));
  }
  std::vector<HookCode> out;
  std::vector<CodeBlock> current;
  auto assemble = [&](auto&& self, std::size_t b) -> void {
    if (b == per_block.size()) {
      out.push_back(HookCode(current));
      return;
    }
    for (const auto& shape : per_block[b]) {
      current.push_back(CodeBlock{T.order() + static_cast<int>(b), shape});
      self(self, b + 1);
      current.pop_back();
    }
  };
  assemble(assemble, 0);
  return out;
}

namespace detail {

inline std::string code_key(const HookCode& code) {
  std::ostringstream out;
  for (const auto& b : code.blocks()) {
    out << b.degree << ':';
    for (int p : b.parts) out << p << ',';
    out << ';';
  }
  return out.str();
}

struct BijectionTable {
  std::vector<Partition> partitions;
  std::map<std::string, std::size_t> index_by_code;
};

// Memoized enumerate-and-index bijection per diagonal-length sequence.
inline const BijectionTable& bijection_table(const HilbertFunction& T) {
  static std::mutex mutex;
  static std::map<std::vector<int>, BijectionTable> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.try_emplace(T.values());
  if (inserted) {
    it->second.partitions = enumerate_partitions(T);
    for (std::size_t k = 0; k < it->second.partitions.size(); ++k)
      it->second.index_by_code.emplace(
          code_key(hook_code(it->second.partitions[k])), k);
  }
  return it->second;
}

}  // namespace detail

// The unique P with diagonal lengths T and hook_code(P) = code.
inline Partition partition_from_code(const HookCode& code,
                                     const HilbertFunction& T) {
  // Double complement validates the fit and pads every block to its box
  // height, normalizing away omitted trailing zeros and empty blocks.
  const HookCode normalized = complement(complement(code, T), T);
  const auto& table = detail::bijection_table(T);
  const auto it = table.index_by_code.find(detail::code_key(normalized));
  if (it == table.index_by_code.end())
    throw BoxOverflow("code does not occur for these diagonal lengths");
  return table.partitions[it->second];
}

// Cover relations of the product lattice on codes: an edge points from each
// code to the codes obtained by deleting one box of one block.
struct CodeLattice {
  std::vector<HookCode> nodes;  // descending total size, then descending lex
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // larger -> smaller
};

inline CodeLattice hasse_diagram(const HilbertFunction& T) {
  CodeLattice lattice;
  lattice.nodes = enumerate_codes(T);
  std::sort(lattice.nodes.begin(), lattice.nodes.end(),
            [](const HookCode& a, const HookCode& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return b < a;
            });
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < lattice.nodes.size(); ++k)
    index.emplace(detail::code_key(lattice.nodes[k]), k);
  for (std::size_t k = 0; k < lattice.nodes.size(); ++k) {
    const auto& blocks = lattice.nodes[k].blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& parts = blocks[b].parts;
      for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] == 0) continue;
        // Only the last cell of a run of equal parts can be removed while
        // keeping the parts non-increasing.
        if (p + 1 < parts.size() && parts[p + 1] == parts[p]) continue;
        auto smaller = blocks;
        --smaller[b].parts[p];
        const auto it =
            index.find(detail::code_key(HookCode(std::move(smaller))));
        if (it != index.end()) lattice.edges.emplace_back(k, it->second);
      }
    }
  }
  return lattice;
}

// Text format: blocks separated by ';', each "degree:part,part,...".  An
// empty block prints as "degree:".
inline std::string format_code(const HookCode& code) {
  std::ostringstream out;
  bool first_block = true;
  for (const auto& b : code.blocks()) {
    if (!first_block) out << ';';
    first_block = false;
    out << b.degree << ':';
    for (std::size_t k = 0; k < b.parts.size(); ++k) {
      if (k > 0) out << ',';
      out << b.parts[k];
    }
  }
  return out.str();
}

// Human-readable form, one parenthesized block per degree: "(1)_4,(2,1)_5".
inline std::string format_code_human(const HookCode& code) {
  if (code.empty()) return "()";
  std::ostringstream out;
  bool first_block = true;
  for (const auto& b : code.blocks()) {
    if (!first_block) out << ',';
    first_block = false;
    out << '(';
    for (std::size_t k = 0; k < b.parts.size(); ++k) {
      if (k > 0) out << ',';
      out << b.parts[k];
    }
    out << ")_" << b.degree;
  }
  return out.str();
}

inline HookCode parse_code(const std::string& text) {
  if (text.empty()) return HookCode();
  std::vector<CodeBlock> blocks;
  std::size_t pos = 0;
  auto read_int = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, start);
    long long value = 0;
    for (std::size_t k = start; k < pos; ++k) {
      value = value * 10 + (text[k] - '0');
      if (value > 1000000) throw ParseError("value too large", start);
    }
    return static_cast<int>(value);
  };
  while (true) {
    CodeBlock block;
    block.degree = read_int("degree");
    if (pos == text.size() || text[pos] != ':')
      throw ParseError("expected ':'", pos);
    ++pos;
    while (pos < text.size() && text[pos] != ';') {
      block.parts.push_back(read_int("part"));
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    blocks.push_back(std::move(block));
    if (pos == text.size()) break;
    ++pos;  // skip ';'
  }
  return HookCode(std::move(blocks));
}

}  // namespace hookcells
