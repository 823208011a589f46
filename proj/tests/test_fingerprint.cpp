#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

TEST_CASE("fingerprint of 12 up to length 2") {
  const Fingerprint f = fingerprint(pat("12"), 2);
  CHECK_FALSE(f.test(1, 0));
  CHECK(f.test(2, 0));
  CHECK_FALSE(f.test(2, 1));
  CHECK(f.count(2) == 1);
}

TEST_CASE("fingerprints match the brute-force oracle") {
  for (int k = 1; k <= 2; ++k)
    for_each_pattern(k, [&](const MeshPattern& pi) {
      const Fingerprint f = fingerprint(pi, 5, 1);
      const auto bits = oracle::fingerprint(word(pi.p), pi.mesh.bits(), 5);
      std::size_t at = 0;
      for (int n = 1; n <= 5; ++n)
        for (std::uint64_t j = 0; j < factorial(n); ++j) REQUIRE(f.test(n, j) == bits[at++]);
    });
}

TEST_CASE("host tables reproduce direct fingerprints") {
  for (int k = 1; k <= 2; ++k)
    for (const Permutation& p : all_permutations(k)) {
      const HostTable table(p, 6, 2);
      for (std::uint64_t m = 0; m <= full_mask(k); ++m)
        REQUIRE(table.fingerprint(Mesh(k, m)) == fingerprint(MeshPattern(p, Mesh(k, m)), 6, 1));
    }
  std::mt19937_64 rng(13);
  const HostTable table(perm("132"), 6);
  for (int trial = 0; trial < 100; ++trial) {
    const Mesh m(3, rng() & full_mask(3));
    REQUIRE(table.fingerprint(m) == fingerprint(MeshPattern(perm("132"), m), 6));
  }
}

TEST_CASE("fingerprints do not depend on the thread count") {
  const MeshPattern pi = pat("231:(1,0)(3,2)");
  CHECK(fingerprint(pi, 7, 1) == fingerprint(pi, 7, 4));
  CHECK(HostTable(pi.p, 7, 1).fingerprint(pi.mesh) == HostTable(pi.p, 7, 3).fingerprint(pi.mesh));
}

TEST_CASE("fingerprint comparison and serialization") {
  const Fingerprint a = fingerprint(pat("231:(1,0)(3,1)(3,2)"), 6);
  const Fingerprint b = fingerprint(pat("231:(1,0)(3,2)"), 6);
  const auto diff = a.first_difference(b);
  REQUIRE(diff.has_value());
  CHECK(nth_permutation(diff->first, diff->second) == perm("42513"));
  CHECK_FALSE(a.first_difference(a).has_value());
  CHECK(Fingerprint::from_hex(6, a.hex()) == a);
  CHECK(a.truncated(4) == fingerprint(pat("231:(1,0)(3,1)(3,2)"), 4));
  CHECK_FALSE(a.truncated(4).first_difference(a).has_value());
  CHECK(a.hash() == Fingerprint::from_hex(6, a.hex()).hash());
  CHECK(default_fingerprint_depth(2) == 5);
  CHECK(default_fingerprint_depth(6) == 8);
}

TEST_CASE("meshes with no enclosed diagonal fingerprint like the classical pattern") {
  for (int k = 1; k <= 3; ++k)
    for (const Permutation& p : all_permutations(k)) {
      const HostTable table(p, k + 2);
      const Fingerprint classical = table.fingerprint(Mesh(k));
      for (std::uint64_t m = 0; m <= full_mask(k); ++m) {
        const MeshPattern pi(p, Mesh(k, m));
        if (enclosed_diagonals(pi).empty()) REQUIRE(table.fingerprint(pi.mesh) == classical);
      }
    }
}

TEST_CASE("equal fingerprints imply equal enclosed diagonals") {
  for (int k = 1; k <= 2; ++k)
    for (const Permutation& p : all_permutations(k)) {
      const HostTable table(p, k + 3);
      std::map<Fingerprint, MeshPattern> first;
      for (std::uint64_t m = 0; m <= full_mask(k); ++m) {
        const MeshPattern pi(p, Mesh(k, m));
        const auto [it, fresh] = first.try_emplace(table.fingerprint(pi.mesh), pi);
        if (!fresh) REQUIRE(same_enc(it->second, pi));
      }
    }
}
