#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

const Mesh kStubborn(3, {{0, 0}, {0, 1}, {1, 0}, {2, 0}, {2, 2}, {3, 0}, {3, 2}, {3, 3}});

}  // namespace

TEST_CASE("a shading chain over 12 closes into one class") {
  const Mesh pi1(2, {{2, 0}});
  const Mesh pi2(2, {{0, 0}, {1, 0}, {2, 0}});
  const Mesh pi2b(2, {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 0}});
  const Mesh pi3(2, {{0, 0}, {1, 1}, {2, 0}});
  const ClosureResult r = ssl_closure(perm("12"), {pi1});
  CHECK(r.complete);
  CHECK(r.same_class(pi1, pi2));
  CHECK(r.same_class(pi1, pi2b));
  CHECK(r.same_class(pi1, pi3));
  const auto proof = r.proof(pi1, pi3);
  REQUIRE(proof.has_value());
  std::string why;
  CHECK_MESSAGE(verify_trace(*proof, pi1, pi3, &why), why);
  CHECK(std::any_of(proof->steps.begin(), proof->steps.end(),
                    [](const ProofStep& s) { return s.rule == Rule::Closure; }));
}

TEST_CASE("three shadings of one mesh over 231") {
  const Mesh r(3, {{0, 0}, {3, 2}, {3, 3}});
  const Mesh r1 = r | Mesh(3, {{0, 2}});
  const Mesh r2 = r | Mesh(3, {{1, 3}, {2, 3}});
  const Mesh r3 = r | Mesh(3, {{0, 2}, {1, 3}, {2, 3}});
  const ClosureResult c = ssl_closure(perm("231"), {r});
  for (const Mesh& m : {r1, r2, r3}) {
    CHECK(c.same_class(r, m));
    std::string why;
    CHECK_MESSAGE(verify_trace(*c.proof(r, m), r, m, &why), why);
  }
}

TEST_CASE("a coincidence out of reach of shading") {
  const Mesh other = kStubborn | Mesh(3, {{2, 1}});
  CHECK_FALSE(ssl_closure(perm("123"), {kStubborn}).same_class(kStubborn, other));
  const ClosureResult both = ssl_closure(perm("123"), {kStubborn, other});
  CHECK(both.complete);
  CHECK_FALSE(both.same_class(kStubborn, other));
  CHECK_FALSE(both.proof(kStubborn, other).has_value());
}

TEST_CASE("closure classes partition the discovered meshes") {
  const ClosureResult r = ssl_closure(perm("132"), {Mesh(3, {{1, 1}}), Mesh(3, {{0, 3}, {2, 2}})});
  std::size_t total = 0;
  for (const auto& c : r.classes) {
    total += c.size();
    CHECK(std::is_sorted(c.begin(), c.end()));
  }
  CHECK(total == r.meshes.size());
  for (std::size_t i = 0; i < r.meshes.size(); ++i)
    CHECK(*r.class_index(r.meshes[i]) == static_cast<std::size_t>(r.class_of[i]));
  // Every class is closed under sandwiching.
  for (const auto& c : r.classes)
    for (const Mesh& lo : c)
      for (const Mesh& hi : c)
        if (lo.subset_of(hi))
          for (std::uint64_t d = hi.bits() & ~lo.bits(), sub = d;; sub = (sub - 1) & d) {
            REQUIRE(r.same_class(lo, lo | Mesh(3, sub)));
            if (sub == 0) break;
          }
}

TEST_CASE("an exhausted budget is reported") {
  const ClosureResult r = ssl_closure(perm("123"), {Mesh(3)}, 5);
  CHECK_FALSE(r.complete);
  CHECK(r.meshes.size() <= 5);
}

TEST_CASE("trace verification rejects unjustified links") {
  const Permutation p = perm("12");
  const Mesh a(2, {{2, 0}});
  const Mesh b(2, {{0, 0}, {1, 1}, {2, 0}});
  const ClosureResult r = ssl_closure(p, {a});
  ProofTrace good = *r.proof(a, b);
  CHECK(verify_trace(good, a, b));
  CHECK_FALSE(verify_trace(good, a, Mesh(2, {{2, 0}, {0, 2}})));

  ProofTrace tampered = good;
  tampered.steps.front().to = tampered.steps.front().to | Mesh(2, {{0, 2}});
  CHECK_FALSE(verify_trace(tampered, a, b));

  const ProofTrace closure_only{p, {ProofStep{Rule::Closure, a, b, std::nullopt,
                                              Mesh(2, {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 0}}),
                                              std::nullopt, {}}}};
  std::string why;
  CHECK_FALSE(verify_trace(closure_only, a, b, &why));
  CHECK_FALSE(why.empty());

  const ProofTrace classical{p, {ProofStep{Rule::Classical, a, Mesh(2), std::nullopt,
                                           std::nullopt, std::nullopt, {}}}};
  CHECK_FALSE(verify_trace(classical, a, Mesh(2)));
  const ProofTrace gamma{p, {ProofStep{Rule::Gamma, a, b, std::nullopt, std::nullopt,
                                       std::nullopt, {}}}};
  CHECK_FALSE(verify_trace(gamma, a, b));
  const ProofTrace isolating_alone{p, {ProofStep{Rule::Isolating, Mesh(2, {{2, 0}}),
                                                 Mesh(2, {{2, 0}, {0, 1}}), std::nullopt,
                                                 std::nullopt, std::nullopt, {}}}};
  CHECK_FALSE(verify_trace(isolating_alone, Mesh(2, {{2, 0}}), Mesh(2, {{2, 0}, {0, 1}})));
}

TEST_CASE("rule names") {
  for (Rule r : {Rule::SL, Rule::DSL, Rule::SSL, Rule::Closure, Rule::Gamma, Rule::Symmetry,
                 Rule::Vincular, Rule::Isolating, Rule::Classical})
    CHECK(parse_rule(to_string(r)) == r);
  CHECK(to_string(Rule::Closure) == "CLOSURE");
  CHECK_THROWS_AS(parse_rule("MAGIC"), ParseError);
}
