#include "meshcide/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace meshcide {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n == 0) throw ParseError("permutation must have length at least 1");
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n)
      throw ParseError("value " + std::to_string(v) + " is outside [1," +
                       std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v)]++)
      throw ParseError("value " + std::to_string(v) + " is duplicated");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

int Permutation::position_of(int v) const {
  const auto it = std::find(word_.begin(), word_.end(), v);
  return static_cast<int>(it - word_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::reverse() const {
  return Permutation(std::vector<int>(word_.rbegin(), word_.rend()));
}

Permutation Permutation::complement() const {
  std::vector<int> out(word_);
  for (int& v : out) v = size() + 1 - v;
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty permutation");

  std::vector<int> word;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw ParseError("invalid character '" + std::string(1, c) +
                         "' in permutation '" + std::string(text) + "'");
      word.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      std::string_view token = text.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("invalid permutation entry '" + std::string(token) + "'");
      word.push_back(v);
      start = end + 1;
    }
  }

  // Name the duplicated and the missing value together when both exist.
  const int n = static_cast<int>(word.size());
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n)
      throw ParseError("value " + std::to_string(v) + " is outside [1," +
                       std::to_string(n) + "] in '" + std::string(text) + "'");
    ++count[static_cast<std::size_t>(v)];
  }
  for (int v = 1; v <= n; ++v) {
    if (count[static_cast<std::size_t>(v)] > 1) {
      int missing = 1;
      while (count[static_cast<std::size_t>(missing)] != 0) ++missing;
      throw ParseError("value " + std::to_string(v) + " is duplicated and value " +
                       std::to_string(missing) + " is missing in '" +
                       std::string(text) + "'");
    }
  }
  return Permutation(std::move(word));
}

std::string to_string(const Occurrence& occ) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < occ.size(); ++i) out << (i ? "," : "") << occ[i];
  out << ')';
  return out.str();
}

std::vector<int> occurrence_values(const Permutation& w, const Occurrence& occ) {
  std::vector<int> vals;
  vals.reserve(occ.size());
  for (int i : occ.positions) vals.push_back(w(i));
  return vals;
}

std::vector<Occurrence> classical_occurrences(const Permutation& p,
                                              const Permutation& w) {
  std::vector<Occurrence> out;
  for_each_classical_occurrence(p, w, [&](std::span<const int> pos) {
    out.push_back(Occurrence{{pos.begin(), pos.end()}});
    return true;
  });
  return out;
}

Permutation direct_sum(const Permutation& u, const Permutation& v) {
  std::vector<int> word(u.word().begin(), u.word().end());
  for (int x : v.word()) word.push_back(x + u.size());
  return Permutation(std::move(word));
}

bool is_sum_decomposable(const Permutation& w) {
  int prefix_max = 0;
  for (int m = 1; m < w.size(); ++m) {
    prefix_max = std::max(prefix_max, w(m));
    if (prefix_max == m) return true;
  }
  return false;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Permutation nth_permutation(int n, std::uint64_t index) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> word;
  word.reserve(pool.size());
  for (int remaining = n; remaining > 0; --remaining) {
    const std::uint64_t block = factorial(remaining - 1);
    const auto pick = static_cast<std::size_t>(index / block);
    index %= block;
    word.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(std::move(word));
}

}  // namespace meshcide
