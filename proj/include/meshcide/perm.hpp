#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace meshcide {

/// Raised for malformed textual or JSON input. The message names the
/// offending token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of [1,n] in one-line notation. Positions and values are
/// both 1-based, so `w(i)` is the value at position i.
class Permutation {
 public:
  /// Throws ParseError unless `word` is a bijection on [1,n] with n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Order-isomorphic standardization of any sequence of distinct values.
  template <typename T>
  static Permutation standardize(std::span<const T> values);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> word() const { return word_; }

  /// Position holding value v.
  int position_of(int v) const;
  Permutation inverse() const;
  Permutation reverse() const;
  Permutation complement() const;

  /// Contiguous digits when n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

template <typename T>
Permutation Permutation::standardize(std::span<const T> values) {
  std::vector<int> order(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    int rank = 1;
    for (std::size_t j = 0; j < values.size(); ++j)
      if (values[j] < values[i]) ++rank;
    order[i] = rank;
  }
  return Permutation(std::move(order));
}

/// Accepts `42135` (all values <= 9) or `4,8,2,9,5,1,10,3,7,6`.
Permutation parse_permutation(std::string_view text);

/// Strictly increasing 1-based positions of an embedding into a host.
struct Occurrence {
  std::vector<int> positions;

  std::size_t size() const { return positions.size(); }
  int operator[](std::size_t i) const { return positions[i]; }
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

std::string to_string(const Occurrence& occ);

/// Values of `w` at the occurrence's positions.
std::vector<int> occurrence_values(const Permutation& w, const Occurrence& occ);

/// Calls `visit(positions)` for every classical occurrence of `p` in `w`, in
/// lexicographic order of positions. Prefixes that are not order isomorphic
/// to the corresponding prefix of `p` are pruned. `visit` returns false to
/// stop the search early; the function returns false iff it was stopped.
template <typename Visit>
bool for_each_classical_occurrence(const Permutation& p, const Permutation& w,
                                   Visit&& visit);

std::vector<Occurrence> classical_occurrences(const Permutation& p,
                                              const Permutation& w);

/// u ⊕ v: v shifted above and to the right of u.
Permutation direct_sum(const Permutation& u, const Permutation& v);

/// True iff some proper prefix w(1..m) is exactly {1..m}.
bool is_sum_decomposable(const Permutation& w);

std::uint64_t factorial(int n);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// The index-th permutation of S_n in lexicographic order (0-based).
Permutation nth_permutation(int n, std::uint64_t index);

// ---------------------------------------------------------------------------

namespace detail {

// Whether appending host value `v` to the partial occurrence `vals[0..depth)`
// keeps it order isomorphic to p(1..depth+1).
inline bool extends_isomorphically(std::span<const int> pattern,
                                   std::span<const int> vals, int depth, int v) {
  const int pv = pattern[static_cast<std::size_t>(depth)];
  for (int j = 0; j < depth; ++j) {
    const bool host_less = vals[static_cast<std::size_t>(j)] < v;
    const bool pattern_less = pattern[static_cast<std::size_t>(j)] < pv;
    if (host_less != pattern_less) return false;
  }
  return true;
}

}  // namespace detail

template <typename Visit>
bool for_each_classical_occurrence(const Permutation& p, const Permutation& w,
                                   Visit&& visit) {
  const int k = p.size();
  const int n = w.size();
  if (k > n) return true;
  std::vector<int> pos(static_cast<std::size_t>(k));
  std::vector<int> vals(static_cast<std::size_t>(k));
  const auto pattern = p.word();
  const auto host = w.word();

  // Iterative depth-first search; pos[d] is the candidate at depth d.
  int depth = 0;
  pos[0] = 0;
  while (depth >= 0) {
    int& cur = pos[static_cast<std::size_t>(depth)];
    ++cur;
    // Leave room for the remaining k-depth-1 letters.
    if (cur > n - (k - depth - 1)) {
      --depth;
      continue;
    }
    const int v = host[static_cast<std::size_t>(cur - 1)];
    if (!detail::extends_isomorphically(pattern, vals, depth, v)) continue;
    vals[static_cast<std::size_t>(depth)] = v;
    if (depth + 1 == k) {
      if (!visit(std::span<const int>(pos))) return false;
      continue;
    }
    ++depth;
    pos[static_cast<std::size_t>(depth)] = cur;
  }
  return true;
}

}  // namespace meshcide
