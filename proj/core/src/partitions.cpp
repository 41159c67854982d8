#include "hilbgen/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hilbgen/error.hpp"

namespace hilbgen {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw PreconditionError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(n_) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

BigInt Partition::centralizer_order() const {
  BigInt z = 1;
  auto m = multiplicities();
  for (int i = 1; i <= n_; ++i) {
    int a = m[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    BigInt ip;
    mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(a));
    z *= ip * factorial(static_cast<unsigned>(a));
  }
  return z;
}

BigInt Partition::class_size() const { return factorial(static_cast<unsigned>(n_)) / centralizer_order(); }

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw PreconditionError("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      current.push_back(k);
      rec(remaining - k, k);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int age(const Partition& p) { return p.n() - p.length(); }

namespace {

int orbit_count(const std::vector<int>& g, const std::vector<int>& h) {
  const int n = static_cast<int>(g.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int orbits = n;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --orbits;
    }
  };
  for (int x = 0; x < n; ++x) {
    unite(x, g[static_cast<std::size_t>(x)]);
    unite(x, h[static_cast<std::size_t>(x)]);
  }
  return orbits;
}

}  // namespace

std::vector<int> commuting_pairs_orbit_counts(int n, int bound) {
  if (n < 0) throw PreconditionError("commuting_pairs_orbit_counts: n must be non-negative");
  if (n > bound)
    throw PreconditionError("commuting_pairs_orbit_counts: n = " + std::to_string(n) +
                            " exceeds the brute-force bound " + std::to_string(bound));
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<int> counts;
  for (const auto& g : perms) {
    for (const auto& h : perms) {
      bool commute = true;
      for (int x = 0; x < n && commute; ++x)
        commute = g[static_cast<std::size_t>(h[static_cast<std::size_t>(x)])] ==
                  h[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])];
      if (commute) counts.push_back(orbit_count(g, h));
    }
  }
  std::sort(counts.begin(), counts.end(), std::greater<>());
  return counts;
}

}  // namespace hilbgen
