#include <doctest.h>

#include "helpers.hpp"
#include "meshcide/partition.hpp"

using namespace testing;

namespace {

const char* kStubborn = "123:(0,0)(0,1)(1,0)(2,0)(2,2)(3,0)(3,2)(3,3)";
const char* kStubbornPlus = "123:(0,0)(0,1)(1,0)(2,0)(2,1)(2,2)(3,0)(3,2)(3,3)";

void check_verdict(const MeshPattern& a, const MeshPattern& b, const CoincidenceVerdict& v) {
  if (v.status == Status::Refuted) {
    REQUIRE(v.witness.has_value());
    REQUIRE(contains(a, v.witness->w) == v.witness->contains_first);
    REQUIRE(contains(b, v.witness->w) != v.witness->contains_first);
  }
  if (v.status == Status::ProvenCoincident) {
    REQUIRE(v.trace.has_value());
    REQUIRE(verify_trace(*v.trace, a.mesh, b.mesh));
    REQUIRE(fingerprint(a, v.depth) == fingerprint(b, v.depth));
  }
}

}  // namespace

TEST_CASE("decisions on known pairs") {
  const auto proven = decide_coincidence(pat("231:(1,0)(1,1)(3,1)(3,2)"), pat("231:(1,0)(3,1)(3,2)"), 7);
  CHECK(proven.status == Status::ProvenCoincident);
  REQUIRE(proven.trace.has_value());
  CHECK(verify_trace(*proven.trace, pat("231:(1,0)(1,1)(3,1)(3,2)").mesh, pat("231:(1,0)(3,1)(3,2)").mesh));

  const auto ex3 = decide_coincidence(pat("231:(1,0)(3,1)(3,2)"), pat("231:(1,0)(3,2)"), 7);
  CHECK(ex3.status == Status::Refuted);
  CHECK(ex3.witness->w == perm("42513"));
  CHECK_FALSE(ex3.witness->contains_first);

  const auto cell = decide_coincidence(pat("1:(0,0)(0,1)(1,0)"), pat("1:(1,1)(0,1)(1,0)"), 5);
  CHECK(cell.status == Status::Refuted);
  CHECK(cell.witness->w == perm("132"));
  CHECK(cell.witness->contains_first);

  const auto sparse = decide_coincidence(pat("231:(3,2)"), pat("231:(1,3)(3,2)"), 6);
  CHECK(sparse.status == Status::Refuted);
  CHECK(sparse.witness->w == perm("25314"));
  CHECK(sparse.witness->contains_first);

  const auto stubborn = decide_coincidence(pat(kStubborn), pat(kStubbornPlus), 8);
  CHECK(stubborn.status == Status::Undecided);
  CHECK(stubborn.depth == 8);
  CHECK_FALSE(stubborn.witness.has_value());
  CHECK_FALSE(stubborn.trace.has_value());
  CHECK(fingerprint(pat(kStubborn), 8) == fingerprint(pat(kStubbornPlus), 8));

  const auto same = decide_coincidence(pat("12:(0,0)"), pat("12:(0,0)"), 5);
  CHECK(same.status == Status::ProvenEqual);
  CHECK(same.trace->steps.empty());
}

TEST_CASE("a bivincular pair over 2341 is refuted by the lexicographically least witness") {
  const MeshPattern a = pat(
      "2341:(0,0)(0,1)(0,2)(0,3)(0,4)(1,0)(1,1)(1,2)(1,3)(1,4)(2,0)(2,1)(2,2)(2,3)(2,4)(3,2)(3,3)"
      "(4,0)(4,1)(4,2)(4,3)(4,4)");
  const MeshPattern b = pat(
      "2341:(0,0)(0,2)(0,3)(0,4)(1,0)(1,1)(1,2)(1,3)(1,4)(2,0)(2,1)(2,2)(2,3)(2,4)(3,0)(3,2)(3,3)"
      "(3,4)(4,0)(4,2)(4,3)(4,4)");
  CHECK(classify_family(a).bivincular);
  CHECK(classify_family(b).bivincular);
  CHECK(same_enc(a, b));
  const auto v = decide_coincidence(a, b, 7);
  REQUIRE(v.status == Status::Refuted);
  CHECK(v.witness->contains_first);
  // 345162 separates the pair the same way but is not least.
  CHECK(contains(a, perm("345162")));
  CHECK(avoids(b, perm("345162")));
  CHECK(v.witness->w <= perm("345162"));
  for (int n = 1; n < v.witness->w.size(); ++n)
    for (const Permutation& w : all_permutations(n)) REQUIRE(contains(a, w) == contains(b, w));
}

TEST_CASE("different underlying permutations") {
  const auto v = decide_coincidence(pat("12:(0,0)"), pat("132:(1,1)"), 5);
  CHECK(v.status == Status::Refuted);
  CHECK(v.witness->w == perm("12"));
  CHECK(v.witness->contains_first);
  const auto w = decide_coincidence(pat("132"), pat("12"), 5);
  CHECK(w.witness->w == perm("12"));
  CHECK_FALSE(w.witness->contains_first);
  const auto same_length = decide_coincidence(pat("12:(2,0)"), pat("21"), 5);
  CHECK(same_length.witness->w == perm("12"));
}

TEST_CASE("family classification") {
  const FamilyTags v = classify_family(
      pat("325614:(1,0)(1,1)(1,2)(1,3)(1,4)(1,5)(1,6)(2,0)(2,1)(2,2)(2,3)(2,4)(2,5)(2,6)"
          "(4,0)(4,1)(4,2)(4,3)(4,4)(4,5)(4,6)"));
  CHECK(v.vincular);
  CHECK(v.bivincular);
  CHECK_FALSE(v.sparse);
  CHECK(classify_family(pat("231:(3,2)")).sparse);
  CHECK(classify_family(pat("231:(1,3)(3,2)")).sparse);
  CHECK(classify_family(pat("2413")) == FamilyTags{true, true, true, true});
  CHECK_FALSE(classify_family(pat("231:(1,1)(2,1)")).isolating);
  CHECK(classify_family(pat("12:(0,2)(2,0)")).isolating);
}

TEST_CASE("vincular patterns of length 5 with equal enc have equal meshes") {
  const Permutation p = perm("25134");
  std::vector<MeshPattern> vincular;
  for (int cols = 0; cols < 64; ++cols) {
    Mesh m(5);
    for (int a = 0; a <= 5; ++a)
      if ((cols >> a) & 1)
        for (int b = 0; b <= 5; ++b) m.insert({a, b});
    vincular.emplace_back(p, m);
  }
  for (const MeshPattern& a : vincular)
    for (const MeshPattern& b : vincular) {
      REQUIRE(classify_family(a).vincular);
      if (same_enc(a, b)) {
        REQUIRE(a == b);
        REQUIRE(vincular_rule(a, b).has_value());
      } else {
        REQUIRE_FALSE(vincular_rule(a, b).has_value());
      }
    }
}

TEST_CASE("isolating meshes over 213 differing in one free square are proven") {
  const Permutation p = perm("213");
  const HostTable table(p, 6);
  int proven = 0;
  for (std::uint64_t m = 0; m <= full_mask(3); ++m) {
    const MeshPattern a(p, Mesh(3, m));
    if (!classify_family(a).isolating) continue;
    const Mesh core = enc_core(a);
    for (const MeshSquare& sq : Mesh::full(3).squares()) {
      if (a.mesh.has(sq)) continue;
      const MeshPattern b(p, a.mesh.with(sq));
      if (!classify_family(b).isolating || !same_enc(a, b) || enc_core(b) != core) continue;
      const auto trace = isolating_rule(a, b);
      REQUIRE(trace.has_value());
      REQUIRE(trace->steps.front().rule == Rule::Isolating);
      REQUIRE(verify_trace(*trace, a.mesh, b.mesh));
      REQUIRE(table.fingerprint(a.mesh) == table.fingerprint(b.mesh));
      ++proven;
    }
  }
  CHECK(proven > 0);
  CHECK_FALSE(isolating_rule(pat("12:(2,0)"), pat("12:(0,2)")).has_value());
  CHECK(isolating_rule(pat("12:(0,0)"), pat("12:(0,0)")).has_value());
}

TEST_CASE("the gamma rule") {
  CHECK(gamma_rule(gamma1(), gamma2()).has_value());
  CHECK(gamma_rule(gamma2(), gamma1()).has_value());
  const Symmetry inv = Symmetry::inverse();
  CHECK(gamma_rule(apply_symmetry(inv, gamma1()), apply_symmetry(inv, gamma2())).has_value());
  CHECK_FALSE(gamma_rule(gamma1(), gamma1()).has_value());
  CHECK(decide_coincidence(gamma1(), gamma1(), 5).status == Status::ProvenEqual);
  for (const Symmetry& s : Symmetry::all()) {
    const auto v = decide_coincidence(apply_symmetry(s, gamma1()), apply_symmetry(s, gamma2()), 6);
    CHECK(v.status == Status::ProvenCoincident);
    check_verdict(apply_symmetry(s, gamma1()), apply_symmetry(s, gamma2()), v);
  }
  DecideOptions off;
  off.use_gamma = false;
  CHECK(decide_coincidence(gamma1(), gamma2(), 6, off).status == Status::Undecided);
  for (int n = 1; n <= 6; ++n)
    for (const Permutation& w : all_permutations(n))
      REQUIRE(contains_gamma_oracle(w) == oracle::sum_decomposable(word(w)));
}

TEST_CASE("verdicts are invariant under the symmetries") {
  auto check = [](const MeshPattern& a, const MeshPattern& b, int depth) {
    const auto v = decide_coincidence(a, b, depth);
    check_verdict(a, b, v);
    for (const Symmetry& s : Symmetry::all()) {
      const MeshPattern sa = apply_symmetry(s, a), sb = apply_symmetry(s, b);
      const auto w = decide_coincidence(sa, sb, depth);
      REQUIRE(w.status == v.status);
      check_verdict(sa, sb, w);
    }
  };
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < 16; ++y)
      check(MeshPattern(perm("1"), Mesh(1, x)), MeshPattern(perm("1"), Mesh(1, y)), 5);

  // Pairs over 12 and 21 sharing a fingerprint, plus a sample of the rest.
  std::mt19937_64 rng(41);
  for (const Permutation& p : all_permutations(2)) {
    const HostTable table(p, 5);
    std::map<Fingerprint, std::vector<Mesh>> groups;
    for (std::uint64_t m = 0; m < 512; ++m) groups[table.fingerprint(Mesh(2, m))].emplace_back(2, m);
    std::vector<std::pair<Mesh, Mesh>> pairs;
    for (const auto& [f, members] : groups)
      for (const Mesh& a : members)
        for (const Mesh& b : members)
          if (a < b) pairs.emplace_back(a, b);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    if (pairs.size() > 250) pairs.erase(pairs.begin() + 250, pairs.end());
    for (int i = 0; i < 100; ++i) pairs.emplace_back(Mesh(2, rng() % 512), Mesh(2, rng() % 512));
    for (const auto& [a, b] : pairs) check(MeshPattern(p, a), MeshPattern(p, b), 5);
  }
}

TEST_CASE("a class without a unique smallest mesh") {
  PartitionOptions options;
  options.n_max = 6;
  const Partition part = partition_meshes(perm("231"), options);
  const Mesh start(3, {{1, 0}, {3, 1}, {3, 2}});
  const Mesh other(3, {{1, 0}, {1, 1}, {3, 2}});
  const MeshClass* home = nullptr;
  for (const MeshClass& c : part.classes)
    if (std::binary_search(c.meshes.begin(), c.meshes.end(), start)) home = &c;
  REQUIRE(home != nullptr);
  CHECK(home->proven());
  CHECK(std::binary_search(home->meshes.begin(), home->meshes.end(), other));
  std::vector<Mesh> minimal;
  for (const Mesh& m : home->meshes)
    if (std::none_of(home->meshes.begin(), home->meshes.end(),
                     [&](const Mesh& x) { return x != m && x.subset_of(m); }))
      minimal.push_back(m);
  CHECK(minimal.size() >= 2);
  CHECK(std::find(minimal.begin(), minimal.end(), start) != minimal.end());
  CHECK(std::find(minimal.begin(), minimal.end(), other) != minimal.end());
}

TEST_CASE("patterns with an embedded gamma pair share a fingerprint") {
  const MeshPattern a(perm("134652"),
                      Mesh(6, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 0}, {2, 3}, {2, 4}, {3, 0}, {3, 2},
                               {5, 2}, {5, 3}, {5, 4}, {5, 6}, {6, 0}}));
  const MeshPattern b(perm("134652"),
                      Mesh(6, {{0, 2}, {0, 3}, {1, 4}, {2, 0}, {2, 2}, {2, 3}, {3, 0}, {3, 2}, {3, 3},
                               {5, 2}, {5, 3}, {5, 4}, {5, 6}, {6, 0}}));
  CHECK(fingerprint(a, 7) == fingerprint(b, 7));
  CHECK(same_enc(a, b));
  CHECK(fingerprint(a, 7).count(7) > 0);
}
