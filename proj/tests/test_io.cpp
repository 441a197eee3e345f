#include <doctest.h>

#include <filesystem>

#include "vecbal/generate.hpp"
#include "vecbal/io.hpp"

using namespace vecbal;

TEST_CASE("instance json round-trip is exact") {
  Instance inst;
  inst.kind = Instance::Kind::Sequence;
  inst.seq = gen_sequence(25, 3, Dist::Ball, NormKind::l2(), 91);
  auto j = instance_to_json(inst);
  auto back = instance_from_json(j);
  CHECK(back.seq.d == 3);
  CHECK(back.seq.vectors == inst.seq.vectors);  // bitwise equality
}

TEST_CASE("sets instance with wdiag norm round-trips") {
  Instance inst;
  inst.kind = Instance::Kind::Sets;
  inst.sets = gen_sets(6, 2, Dist::ZeroSum, NormKind::weighted_diag({0.5, 2.0}), 7, 3);
  auto back = instance_from_json(instance_to_json(inst));
  CHECK(back.sets.sets == inst.sets.sets);
  CHECK(back.sets.norm.tag == NormKind::Tag::WeightedDiag);
  CHECK(back.sets.norm.weights == inst.sets.norm.weights);
}

TEST_CASE("atomic write then load") {
  auto dir = std::filesystem::temp_directory_path() / "vecbal_io_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "inst.json";
  Instance inst;
  inst.kind = Instance::Kind::Sequence;
  inst.seq = gen_sequence(4, 1, Dist::Ball, NormKind::linf(), 1);
  save_instance(path, inst);
  CHECK(!std::filesystem::exists(dir / "inst.json.tmp"));
  auto back = load_instance(path);
  CHECK(back.seq.vectors == inst.seq.vectors);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed instances are rejected") {
  CHECK_THROWS(instance_from_json(nlohmann::json{{"kind", "nonsense"}}));
  CHECK_THROWS(instance_from_json(nlohmann::json{{"kind", "sequence"}}));
  CHECK_THROWS_AS(load_instance("/nonexistent/path.json"), std::invalid_argument);
}

TEST_CASE("same seed gives identical instances") {
  auto a = gen_sequence(50, 4, Dist::Signs, NormKind::l1(), 123);
  auto b = gen_sequence(50, 4, Dist::Signs, NormKind::l1(), 123);
  CHECK(a.vectors == b.vectors);
  auto c = gen_sequence(50, 4, Dist::Signs, NormKind::l1(), 124);
  CHECK(a.vectors != c.vectors);
}

TEST_CASE("zerosum sets sum to zero") {
  auto sets = gen_sets(20, 3, Dist::ZeroSum, NormKind::l2(), 55, 5);
  for (const auto& s : sets.sets) {
    Vec sum(3, 0.0);
    for (const auto& v : s)
      for (std::size_t c = 0; c < 3; ++c) sum[c] += v[c];
    CHECK(norm(sum, NormKind::l2()) <= 1e-12);
    for (const auto& v : s) CHECK(in_unit_ball(v, NormKind::l2(), 1e-12));
  }
}
