#include "meshcide/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "meshcide/parallel.hpp"

namespace meshcide {

std::uint64_t Fingerprint::offset_bits(int n) {
  std::uint64_t offset = 0;
  for (int m = 1; m < n; ++m) offset += factorial(m);
  return offset;
}

Fingerprint::Fingerprint(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw std::invalid_argument("fingerprint depth must be at least 1");
  if (n_max > 10) throw std::invalid_argument("fingerprint depth above 10 is not supported");
  words_.assign((offset_bits(n_max + 1) + 63) / 64, 0);
}

std::uint64_t Fingerprint::count(int n) const {
  std::uint64_t c = 0;
  for (std::uint64_t j = 0; j < level_size(n); ++j) c += test(n, j);
  return c;
}

std::optional<std::pair<int, std::uint64_t>> Fingerprint::first_difference(
    const Fingerprint& other) const {
  const int depth = std::min(n_max_, other.n_max_);
  for (int n = 1; n <= depth; ++n)
    for (std::uint64_t j = 0; j < level_size(n); ++j)
      if (test(n, j) != other.test(n, j)) return std::make_pair(n, j);
  return std::nullopt;
}

Fingerprint Fingerprint::truncated(int n) const {
  Fingerprint out(std::min(n, n_max_));
  const std::uint64_t bits = offset_bits(out.n_max_ + 1);
  for (std::uint64_t b = 0; b < bits; ++b)
    if ((words_[b / 64] >> (b % 64)) & 1U) out.words_[b / 64] |= std::uint64_t{1} << (b % 64);
  return out;
}

std::string Fingerprint::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(words_.size() * 16);
  for (std::uint64_t word : words_)
    for (int shift = 60; shift >= 0; shift -= 4) out += digits[(word >> shift) & 0xF];
  return out;
}

Fingerprint Fingerprint::from_hex(int n_max, const std::string& hex) {
  Fingerprint out(n_max);
  if (hex.size() != out.words_.size() * 16)
    throw ParseError("fingerprint hex has length " + std::to_string(hex.size()) +
                     ", expected " + std::to_string(out.words_.size() * 16));
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < 16; ++i) {
      const char c = hex[w * 16 + i];
      int d = 0;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else throw ParseError("invalid hex digit '" + std::string(1, c) + "' in fingerprint");
      word = (word << 4) | static_cast<std::uint64_t>(d);
    }
    out.words_[w] = word;
  }
  return out;
}

std::size_t Fingerprint::hash() const {
  std::size_t h = std::hash<int>{}(n_max_);
  for (std::uint64_t w : words_) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
  return h;
}

Fingerprint fingerprint(const MeshPattern& pi, int n_max, int threads) {
  Fingerprint out(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t total = factorial(n);
    std::vector<unsigned char> bits(total, 0);
    parallel_for(total, threads, [&](std::size_t begin, std::size_t end) {
      if (begin >= end) return;
      Permutation first = nth_permutation(n, begin);
      std::vector<int> word(first.word().begin(), first.word().end());
      for (std::size_t j = begin; j < end; ++j) {
        bits[j] = contains(pi, Permutation(word));
        std::next_permutation(word.begin(), word.end());
      }
    });
    for (std::uint64_t j = 0; j < total; ++j)
      if (bits[j]) out.set(n, j);
  }
  return out;
}

HostTable::HostTable(const Permutation& p, int n_max, int threads) : p_(p), n_max_(n_max) {
  if (n_max < 1 || n_max > 10) throw std::invalid_argument("host table depth must be in [1,10]");
  std::uint64_t hosts = 0;
  level_base_.push_back(0);
  for (int n = 1; n <= n_max; ++n) {
    hosts += factorial(n);
    level_base_.push_back(hosts);
  }
  std::vector<std::vector<std::uint64_t>> per_host(hosts);
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t base = level_base_[static_cast<std::size_t>(n - 1)];
    parallel_for(factorial(n), threads, [&](std::size_t begin, std::size_t end) {
      if (begin >= end) return;
      Permutation first = nth_permutation(n, begin);
      std::vector<int> word(first.word().begin(), first.word().end());
      for (std::size_t j = begin; j < end; ++j) {
        const Permutation w(word);
        std::vector<std::uint64_t> masks;
        for_each_classical_occurrence(p_, w, [&](std::span<const int> pos) {
          masks.push_back(occupied_squares(w, pos));
          return true;
        });
        std::sort(masks.begin(), masks.end(),
                  [](std::uint64_t a, std::uint64_t b) {
                    const int pa = std::popcount(a), pb = std::popcount(b);
                    return pa != pb ? pa < pb : a < b;
                  });
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
        std::vector<std::uint64_t> minimal;
        for (std::uint64_t m : masks) {
          const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                             [m](std::uint64_t s) { return (s & ~m) == 0; });
          if (!dominated) minimal.push_back(m);
        }
        per_host[base + j] = std::move(minimal);
        std::next_permutation(word.begin(), word.end());
      }
    });
  }
  start_.reserve(hosts + 1);
  for (const auto& masks : per_host) {
    start_.push_back(static_cast<std::uint32_t>(masks_.size()));
    masks_.insert(masks_.end(), masks.begin(), masks.end());
  }
  start_.push_back(static_cast<std::uint32_t>(masks_.size()));
}

bool HostTable::contains(const Mesh& mesh, int n, std::uint64_t j) const {
  const std::uint64_t h = level_base_[static_cast<std::size_t>(n - 1)] + j;
  const std::uint64_t shaded = mesh.bits();
  for (std::uint32_t i = start_[h]; i < start_[h + 1]; ++i)
    if ((masks_[i] & shaded) == 0) return true;
  return false;
}

Fingerprint HostTable::fingerprint(const Mesh& mesh) const {
  if (mesh.grid() != p_.size())
    throw std::invalid_argument("mesh grid does not match the host table pattern");
  Fingerprint out(n_max_);
  const std::uint64_t shaded = mesh.bits();
  for (int n = 1; n <= n_max_; ++n) {
    const std::uint64_t base = level_base_[static_cast<std::size_t>(n - 1)];
    const std::uint64_t total = factorial(n);
    for (std::uint64_t j = 0; j < total; ++j) {
      const std::uint64_t h = base + j;
      for (std::uint32_t i = start_[h]; i < start_[h + 1]; ++i)
        if ((masks_[i] & shaded) == 0) {
          out.set(n, j);
          break;
        }
    }
  }
  return out;
}

}  // namespace meshcide
