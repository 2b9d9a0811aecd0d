#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the symmetric-function or Chern machinery being checked.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "redchern/mpoly.hpp"
#include "redchern/rational.hpp"

namespace redchern::testing {

/// sigma_r(values) by enumerating all r-subsets.
inline Rational brute_esym(const std::vector<Rational>& values, int r) {
  if (r == 0) return 1;
  const int n = static_cast<int>(values.size());
  if (r > n) return 0;
  Rational total = 0;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.end() - r, pick.end(), true);
  do {
    Rational prod = 1;
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) prod *= values[static_cast<std::size_t>(i)];
    }
    total += prod;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

/// Numeric evaluation of p at a point (one value per variable).
inline Rational evaluate_at(const MPoly& p, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

/// Chern classes c_1..c_n of a bundle with the given numeric roots.
inline std::vector<Rational> chern_of_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c;
  for (int i = 1; i <= static_cast<int>(roots.size()); ++i) c.push_back(brute_esym(roots, i));
  return c;
}

inline std::vector<Rational> random_rationals(std::size_t count, std::mt19937_64& rng) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(make_rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1));
  }
  return out;
}

/// Random polynomial with up to `terms` terms and exponents below `max_exp`.
inline MPoly random_poly(const VarTable& vars, std::mt19937_64& rng, int terms = 5,
                         int max_exp = 3) {
  MPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size());
    for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(max_exp));
    p.add_term(e, make_rational(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 4) + 1));
  }
  return p;
}

/// Untruncated schoolbook product, then filtering by weighted degree.
inline MPoly naive_truncated_product(const MPoly& p, const MPoly& q, int cap) {
  MPoly out(p.vars());
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      Exponents e(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
      if (p.weighted_degree(e) <= cap) out.add_term(e, ca * cb);
    }
  }
  return out;
}

/// All partitions of d with at most k parts, by filtering every tuple in [0..d]^k.
inline std::set<std::vector<int>> brute_partitions(int d, int k) {
  std::set<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  const std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == t.size()) {
      int sum = 0;
      for (int x : t) sum += x;
      if (sum != d || !std::is_sorted(t.begin(), t.end(), std::greater<>())) return;
      std::vector<int> parts;
      for (int x : t) {
        if (x > 0) parts.push_back(x);
      }
      out.insert(parts);
      return;
    }
    for (int x = 0; x <= d; ++x) {
      t[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace redchern::testing
