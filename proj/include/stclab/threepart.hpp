#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stclab {

// 3-Partition instance: 3m positive integers summing to m*B, each one
// strictly between B/4 and B/2.
struct ThreePartitionInstance {
  int m = 0;
  long long B = 0;
  std::vector<long long> a;
};

struct InstanceViolation {
  std::string constraint;
  int index = -1;  // offending position, -1 for instance-wide constraints
  std::string detail;
};

struct ValidationResult {
  std::optional<ThreePartitionInstance> instance;
  std::vector<InstanceViolation> violations;

  bool ok() const { return instance.has_value(); }
};

// Checks every constraint with cross-multiplied integer comparisons
// (4*a_i > B and 2*a_i < B, never division) and reports all violations.
ValidationResult validate_instance(int m, long long B, std::vector<long long> a);

struct NormalizedInstance {
  ThreePartitionInstance base;  // sorted ascending, a[0] >= 8m
  long long scale = 1;          // integer multiplier applied to a and B
  std::vector<int> perm;        // perm[sorted_pos] = original index
};

// Sorts ascending (recording the permutation) and applies the smallest
// integer multiplier c = ceil(8m / min a) needed to reach a_i >= 8m.
// Scaling preserves validity and the yes/no answer.
NormalizedInstance normalize_instance(const ThreePartitionInstance& inst);

// Inverse of normalize_instance; throws if scale does not divide evenly.
ThreePartitionInstance denormalize(const NormalizedInstance& ni);

struct Partition {
  std::vector<std::vector<int>> groups;  // 0-indexed positions into a
};

inline constexpr int kMaxBruteforceSize = 15;  // 3m guard

// Backtracking over triples only (the B/4 < a_i < B/2 bounds force every
// B-sum group to have size 3). Deterministic: each group starts at the
// lowest unused index. Refuses instances with 3m > kMaxBruteforceSize.
std::optional<Partition> solve_3partition_bruteforce(
    const ThreePartitionInstance& inst);

struct PartitionCheck {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// True iff the groups partition [3m] and each sums to B.
PartitionCheck verify_partition(const ThreePartitionInstance& inst,
                                const Partition& p);

}  // namespace stclab
