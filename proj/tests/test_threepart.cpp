#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "stclab/threepart.hpp"
#include "test_util.hpp"

using namespace stclab;

namespace {

bool has_violation(const ValidationResult& r, const std::string& constraint) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const InstanceViolation& v) { return v.constraint == constraint; });
}

Partition canonical(Partition p) {
  for (auto& g : p.groups) std::sort(g.begin(), g.end());
  std::sort(p.groups.begin(), p.groups.end());
  return p;
}

}  // namespace

TEST_CASE("validate_instance examples") {
  // 30 = 1*30, 4*9 > 30, 2*11 < 30.
  CHECK(validate_instance(1, 30, {9, 10, 11}).ok());

  ValidationResult low = validate_instance(1, 30, {7, 11, 12});
  CHECK_FALSE(low.ok());
  CHECK(has_violation(low, "lower-bound"));  // 4*7 = 28 <= 30
  CHECK(low.violations.front().index == 0);

  CHECK(validate_instance(2, 60, {17, 17, 17, 23, 23, 23}).ok());

  ValidationResult bad_len = validate_instance(2, 60, {17, 17, 17, 23, 23});
  CHECK(has_violation(bad_len, "length"));

  ValidationResult bad_sum = validate_instance(1, 30, {9, 10, 12});
  CHECK(has_violation(bad_sum, "sum"));

  ValidationResult several = validate_instance(1, 30, {7, 11, 16});
  CHECK(has_violation(several, "lower-bound"));
  CHECK(has_violation(several, "upper-bound"));  // 2*16 >= 30
  CHECK(has_violation(several, "sum"));
}

TEST_CASE("normalize_instance examples") {
  // Scale up to a_min >= 8m: c = ceil(8/3) = 3.
  NormalizedInstance scaled = normalize_instance({1, 9, {3, 3, 3}});
  CHECK(scaled.scale == 3);
  CHECK(scaled.base.B == 27);
  CHECK(scaled.base.a == std::vector<long long>{9, 9, 9});
  CHECK(validate_instance(scaled.base.m, scaled.base.B, scaled.base.a).ok());
  CHECK(scaled.base.a.front() >= 8 * scaled.base.m);

  NormalizedInstance identity = normalize_instance({1, 30, {9, 10, 11}});
  CHECK(identity.scale == 1);
  CHECK(identity.perm == std::vector<int>{0, 1, 2});

  NormalizedInstance sorted = normalize_instance({1, 30, {11, 9, 10}});
  CHECK(sorted.base.a == std::vector<long long>{9, 10, 11});
  CHECK(sorted.perm == std::vector<int>{1, 2, 0});

  ThreePartitionInstance back = denormalize(sorted);
  CHECK(back.a == std::vector<long long>{11, 9, 10});
  CHECK(back.B == 30);
}

TEST_CASE("normalization round-trips on random valid instances") {
  std::mt19937_64 rng(404);
  int built = 0;
  while (built < 25) {
    int m = 1 + static_cast<int>(testutil::uniform_below(rng, 4));
    // Values clustered tightly around B/3 keep the strict bounds easy to hit.
    long long third = 10 + testutil::uniform_below(rng, 30);
    std::vector<long long> a(3 * m);
    long long sum = 0;
    for (auto& v : a) {
      v = third + testutil::uniform_below(rng, 5) - 2;
      sum += v;
    }
    if (sum % m != 0) continue;
    long long B = sum / m;
    ValidationResult check = validate_instance(m, B, a);
    if (!check.ok()) continue;
    ++built;

    NormalizedInstance ni = normalize_instance(*check.instance);
    CHECK(std::is_sorted(ni.base.a.begin(), ni.base.a.end()));
    CHECK(ni.base.a.front() >= 8 * ni.base.m);
    CHECK(ni.base.B >= 24 * ni.base.m);
    CHECK(validate_instance(ni.base.m, ni.base.B, ni.base.a).ok());
    ThreePartitionInstance back = denormalize(ni);
    CHECK(back.a == check.instance->a);
    CHECK(back.B == B);

    // Scaling preserves the answer.
    auto solved_orig = solve_3partition_bruteforce(*check.instance);
    auto solved_norm = solve_3partition_bruteforce(ni.base);
    CHECK(solved_orig.has_value() == solved_norm.has_value());
  }
}

TEST_CASE("solve_3partition_bruteforce examples") {
  auto trivial = solve_3partition_bruteforce({1, 30, {9, 10, 11}});
  REQUIRE(trivial.has_value());
  CHECK(trivial->groups == std::vector<std::vector<int>>{{0, 1, 2}});

  auto two = solve_3partition_bruteforce({2, 60, {16, 19, 25, 17, 20, 23}});
  REQUIRE(two.has_value());
  CHECK(two->groups == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});

  // Triple sums here can only hit 51, 57, 63, 69.
  CHECK_FALSE(solve_3partition_bruteforce({2, 60, {17, 17, 17, 23, 23, 23}}).has_value());

  CHECK_THROWS_AS(solve_3partition_bruteforce(
                      {6, 60, std::vector<long long>(18, 20)}),
                  std::invalid_argument);  // 3m = 18 beyond the guard
}

TEST_CASE("verify_partition examples") {
  ThreePartitionInstance d1{1, 30, {9, 10, 11}};
  CHECK(verify_partition(d1, {{{0, 1, 2}}}).ok);

  ThreePartitionInstance two{2, 60, {16, 19, 25, 17, 20, 23}};
  PartitionCheck bad_sum = verify_partition(two, {{{0, 1, 3}, {2, 4, 5}}});
  CHECK_FALSE(bad_sum.ok);
  CHECK(bad_sum.reason.find("sums to 52") != std::string::npos);

  PartitionCheck overlap = verify_partition(two, {{{0, 1, 2}, {2, 4, 5}}});
  CHECK_FALSE(overlap.ok);
  CHECK(overlap.reason.find("not a partition") != std::string::npos);

  PartitionCheck uncovered = verify_partition(two, {{{0, 1, 2}}});
  CHECK_FALSE(uncovered.ok);
}

TEST_CASE("solver output always verifies; verify ignores order") {
  std::mt19937_64 rng(505);
  int built = 0;
  while (built < 30) {
    int m = 1 + static_cast<int>(testutil::uniform_below(rng, 4));
    long long third = 12 + testutil::uniform_below(rng, 40);
    std::vector<long long> a(3 * m);
    long long sum = 0;
    for (auto& v : a) {
      v = third + testutil::uniform_below(rng, 7) - 3;
      sum += v;
    }
    if (sum % m != 0) continue;
    ValidationResult check = validate_instance(m, sum / m, a);
    if (!check.ok()) continue;
    ++built;

    auto solved = solve_3partition_bruteforce(*check.instance);
    if (!solved) continue;
    CHECK(verify_partition(*check.instance, *solved).ok);

    // Permute groups and members; still verifies.
    Partition shuffled = *solved;
    std::reverse(shuffled.groups.begin(), shuffled.groups.end());
    for (auto& g : shuffled.groups) std::reverse(g.begin(), g.end());
    CHECK(verify_partition(*check.instance, shuffled).ok);
    CHECK(canonical(shuffled).groups == canonical(*solved).groups);
  }
}
