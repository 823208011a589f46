#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "meshcide/partition.hpp"

using namespace testing;

namespace {

const Partition& partition_12() {
  static const Partition part = [] {
    PartitionOptions options;
    options.n_max = 7;
    return partition_meshes(perm("12"), options);
  }();
  return part;
}

std::size_t total_meshes(const Partition& part) {
  std::size_t n = 0;
  for (const MeshClass& c : part.classes) n += c.meshes.size();
  return n;
}

}  // namespace

TEST_CASE("class counts for k <= 2") {
  PartitionOptions six;
  six.n_max = 6;
  const Partition one = partition_meshes(perm("1"), six);
  CHECK(one.classes.size() == 8);
  CHECK(one.proven_count() == 8);
  CHECK(total_meshes(one) == 16);

  const Partition& twelve = partition_12();
  CHECK(twelve.classes.size() == 220);
  CHECK(twelve.proven_count() == 220);
  CHECK(twelve.conjectured_count() == 0);
  CHECK(twelve.undecided_pairs() == 0);
  CHECK(twelve.soundness_violations == 0);
  CHECK(total_meshes(twelve) == 512);

  PartitionOptions seven;
  seven.n_max = 7;
  const Partition twentyone = partition_meshes(perm("21"), seven);
  CHECK(twentyone.classes.size() == 220);
  CHECK(twentyone.conjectured_count() == 0);
}

TEST_CASE("fingerprint groups agree with the oracle") {
  const Partition& part = partition_12();
  std::map<std::vector<bool>, std::set<std::uint64_t>> groups;
  for (std::uint64_t m = 0; m < 512; ++m)
    groups[oracle::fingerprint(word(perm("12")), m, 7)].insert(m);
  REQUIRE(groups.size() == part.classes.size());
  for (const MeshClass& c : part.classes) {
    std::set<std::uint64_t> members;
    for (const Mesh& m : c.meshes) members.insert(m.bits());
    CHECK(groups.at(oracle::fingerprint(word(perm("12")), c.meshes.front().bits(), 7)) ==
          members);
  }
}

TEST_CASE("classes are internally consistent") {
  const Partition& part = partition_12();
  const HostTable table(part.p, part.n_max);
  for (const MeshClass& c : part.classes) {
    CHECK(std::is_sorted(c.meshes.begin(), c.meshes.end()));
    std::size_t in_blocks = 0;
    for (const auto& block : c.blocks) in_blocks += block.size();
    CHECK(in_blocks == c.meshes.size());
    for (const Mesh& m : c.meshes) REQUIRE(table.fingerprint(m) == c.fingerprint);
    CHECK(c.enc == enc_signature(MeshPattern(part.p, c.representative())));
    CHECK(c.proof.size() + c.blocks.size() == c.meshes.size());
  }
}

TEST_CASE("without the gamma rule only the gamma pair is left open") {
  PartitionOptions options;
  options.n_max = 7;
  options.use_gamma = false;
  const Partition part = partition_meshes(perm("12"), options);
  CHECK(part.classes.size() == 220);
  REQUIRE(part.conjectured_count() == 1);
  for (const MeshClass& c : part.classes) {
    if (c.proven()) continue;
    REQUIRE(c.blocks.size() == 2);
    CHECK(std::find(c.meshes.begin(), c.meshes.end(), gamma1().mesh) != c.meshes.end());
    CHECK(std::find(c.meshes.begin(), c.meshes.end(), gamma2().mesh) != c.meshes.end());
    CHECK(c.undecided_pairs() == c.blocks[0].size() * c.blocks[1].size());
  }
}

TEST_CASE("a stubborn pair is conjectured over 123") {
  PartitionOptions options;
  options.n_max = 6;
  const Partition part = partition_meshes(perm("123"), options);
  const Mesh a(3, {{0, 0}, {0, 1}, {1, 0}, {2, 0}, {2, 2}, {3, 0}, {3, 2}, {3, 3}});
  const Mesh b = a | Mesh(3, {{2, 1}});
  const MeshClass* home = nullptr;
  for (const MeshClass& c : part.classes)
    if (std::binary_search(c.meshes.begin(), c.meshes.end(), a)) home = &c;
  REQUIRE(home != nullptr);
  CHECK(std::binary_search(home->meshes.begin(), home->meshes.end(), b));
  CHECK_FALSE(home->proven());
  auto block_of = [&](const Mesh& m) {
    for (std::size_t i = 0; i < home->blocks.size(); ++i)
      if (std::binary_search(home->blocks[i].begin(), home->blocks[i].end(), m)) return i;
    return home->blocks.size();
  };
  CHECK(block_of(a) != block_of(b));
  CHECK(part.soundness_violations == 0);
  CHECK(part.conjectured_count() > 0);
}

TEST_CASE("reports round trip and are re-verified") {
  PartitionOptions options;
  options.n_max = 5;
  const Partition part = partition_meshes(perm("21"), options);
  std::stringstream buffer;
  write_partition(buffer, part);
  const std::string text = buffer.str();
  const Partition back = read_partition(buffer);
  CHECK(back.p == part.p);
  CHECK(back.n_max == part.n_max);
  CHECK(back.use_gamma == part.use_gamma);
  REQUIRE(back.classes.size() == part.classes.size());
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    CHECK(back.classes[i].meshes == part.classes[i].meshes);
    CHECK(back.classes[i].blocks == part.classes[i].blocks);
    CHECK(back.classes[i].fingerprint == part.classes[i].fingerprint);
  }
  std::stringstream again;
  write_partition(again, back);
  CHECK(again.str() == text);

  // Swapping two representatives breaks the recorded fingerprints.
  const auto first = text.find("\"representative\"");
  const auto second = text.find("\"representative\"", first + 1);
  REQUIRE(second != std::string::npos);
  const auto end1 = text.find(']', text.find('[', first));
  std::string tampered = text;
  tampered.replace(first, end1 - first + 1, "\"representative\":[[0,0],[0,1],[0,2],[1,0],[1,1]]");
  std::stringstream bad(tampered);
  CHECK_THROWS_AS(read_partition(bad), std::runtime_error);
  std::stringstream junk("{\"p\": [1,2]\n");
  CHECK_THROWS_AS(read_partition(junk), std::runtime_error);
}

TEST_CASE("partition results do not depend on the thread count") {
  PartitionOptions one, four;
  one.n_max = four.n_max = 5;
  one.threads = 1;
  four.threads = 4;
  std::stringstream a, b;
  write_partition(a, partition_meshes(perm("12"), one));
  write_partition(b, partition_meshes(perm("12"), four));
  CHECK(a.str() == b.str());
}

TEST_CASE("partition arguments") {
  CHECK(default_partition_depth(2) == 7);
  CHECK(default_partition_depth(3) == 6);
  CHECK_THROWS_AS(partition_meshes(perm("1234")), std::length_error);
}
