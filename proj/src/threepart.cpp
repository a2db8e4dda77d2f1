#include "stclab/threepart.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stclab {

namespace {

using int128 = __int128;

std::string i128_str(int128 x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  std::string s;
  while (x != 0) {
    s += static_cast<char>('0' + static_cast<int>(neg ? -(x % 10) : x % 10));
    x /= 10;
  }
  if (neg) s += '-';
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

ValidationResult validate_instance(int m, long long B, std::vector<long long> a) {
  ValidationResult result;
  auto flag = [&](std::string constraint, int index, std::string detail) {
    result.violations.push_back({std::move(constraint), index, std::move(detail)});
  };

  if (m < 1) flag("m-positive", -1, "m = " + std::to_string(m));
  if (static_cast<long long>(a.size()) != 3LL * m)
    flag("length", -1, "expected 3m = " + std::to_string(3LL * m) +
                           " values, got " + std::to_string(a.size()));

  int128 sum = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sum += a[i];
    if (a[i] < 1)
      flag("positivity", static_cast<int>(i), "a[" + std::to_string(i) + "] = " + std::to_string(a[i]));
    // Strict bounds B/4 < a_i < B/2, cross-multiplied.
    if (static_cast<int128>(4) * a[i] <= B)
      flag("lower-bound", static_cast<int>(i),
           "4*a[" + std::to_string(i) + "] = " + i128_str(static_cast<int128>(4) * a[i]) +
               " <= B = " + std::to_string(B));
    if (static_cast<int128>(2) * a[i] >= B)
      flag("upper-bound", static_cast<int>(i),
           "2*a[" + std::to_string(i) + "] = " + i128_str(static_cast<int128>(2) * a[i]) +
               " >= B = " + std::to_string(B));
  }
  if (sum != static_cast<int128>(m) * B)
    flag("sum", -1, "sum a = " + i128_str(sum) + ", m*B = " +
                        i128_str(static_cast<int128>(m) * B));

  if (result.violations.empty())
    result.instance = ThreePartitionInstance{m, B, std::move(a)};
  return result;
}

NormalizedInstance normalize_instance(const ThreePartitionInstance& inst) {
  ValidationResult check = validate_instance(inst.m, inst.B, inst.a);
  if (!check.ok())
    throw std::invalid_argument("normalize_instance requires a valid instance (" +
                                check.violations.front().constraint + ")");

  const int n = static_cast<int>(inst.a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int i, int j) { return inst.a[i] < inst.a[j]; });

  NormalizedInstance ni;
  ni.perm = perm;
  ni.base.m = inst.m;
  ni.base.a.resize(n);
  for (int p = 0; p < n; ++p) ni.base.a[p] = inst.a[perm[p]];

  const long long target = 8LL * inst.m;
  const long long amin = ni.base.a.front();
  ni.scale = amin >= target ? 1 : (target + amin - 1) / amin;
  ni.base.B = inst.B * ni.scale;
  for (long long& v : ni.base.a) v *= ni.scale;
  return ni;
}

ThreePartitionInstance denormalize(const NormalizedInstance& ni) {
  const int n = static_cast<int>(ni.base.a.size());
  ThreePartitionInstance inst;
  inst.m = ni.base.m;
  if (ni.scale < 1 || ni.base.B % ni.scale != 0)
    throw std::logic_error("scale does not divide B");
  inst.B = ni.base.B / ni.scale;
  inst.a.resize(n);
  for (int p = 0; p < n; ++p) {
    if (ni.base.a[p] % ni.scale != 0)
      throw std::logic_error("scale does not divide a[" + std::to_string(p) + "]");
    inst.a[ni.perm[p]] = ni.base.a[p] / ni.scale;
  }
  return inst;
}

namespace {

bool fill_triples(const std::vector<long long>& a, long long B,
                  std::vector<char>& used, std::vector<std::vector<int>>& groups) {
  const int n = static_cast<int>(a.size());
  int first = -1;
  for (int i = 0; i < n; ++i)
    if (!used[i]) {
      first = i;
      break;
    }
  if (first < 0) return true;

  used[first] = 1;
  for (int j = first + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = 1;
    for (int l = j + 1; l < n; ++l) {
      if (used[l] || a[first] + a[j] + a[l] != B) continue;
      used[l] = 1;
      groups.push_back({first, j, l});
      if (fill_triples(a, B, used, groups)) return true;
      groups.pop_back();
      used[l] = 0;
    }
    used[j] = 0;
  }
  used[first] = 0;
  return false;
}

}  // namespace

std::optional<Partition> solve_3partition_bruteforce(
    const ThreePartitionInstance& inst) {
  ValidationResult check = validate_instance(inst.m, inst.B, inst.a);
  if (!check.ok())
    throw std::invalid_argument("solver requires a valid instance (" +
                                check.violations.front().constraint + ")");
  if (static_cast<int>(inst.a.size()) > kMaxBruteforceSize)
    throw std::invalid_argument("refusing brute force beyond 3m = " +
                                std::to_string(kMaxBruteforceSize) +
                                " (instance has " + std::to_string(inst.a.size()) + ")");

  std::vector<char> used(inst.a.size(), 0);
  std::vector<std::vector<int>> groups;
  if (!fill_triples(inst.a, inst.B, used, groups)) return std::nullopt;
  return Partition{std::move(groups)};
}

PartitionCheck verify_partition(const ThreePartitionInstance& inst,
                                const Partition& p) {
  const int n = static_cast<int>(inst.a.size());
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (size_t gi = 0; gi < p.groups.size(); ++gi) {
    long long sum = 0;
    for (int idx : p.groups[gi]) {
      if (idx < 0 || idx >= n)
        return {false, "group " + std::to_string(gi) + " has out-of-range index " +
                           std::to_string(idx)};
      if (seen[idx])
        return {false, "not a partition: index " + std::to_string(idx) +
                           " appears twice"};
      seen[idx] = 1;
      ++covered;
      sum += inst.a[idx];
    }
    if (sum != inst.B)
      return {false, "group " + std::to_string(gi) + " sums to " +
                         std::to_string(sum) + ", not B = " + std::to_string(inst.B)};
  }
  if (covered != n)
    return {false, "not a partition: " + std::to_string(n - covered) +
                       " indices uncovered"};
  return {true, ""};
}

}  // namespace stclab
