#include "redchern/universal.hpp"

#include <algorithm>
#include <mutex>

#include "redchern/errors.hpp"

namespace redchern {

namespace {

void require_rank(int n, const Limits& limits) {
  if (n < 2 || n > limits.max_rank) {
    throw UsageError("rank " + std::to_string(n) + " outside the feasible range 2.." +
                     std::to_string(limits.max_rank));
  }
}

}  // namespace

std::vector<MPoly> YRootSet::forms() const {
  const VarTable vars = root_vars(n);
  std::vector<MPoly> out;
  out.reserve(coefficients.size());
  for (const auto& m : coefficients) {
    MPoly form(vars);
    Exponents e(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      e[i] = 1;
      form.add_term(e, m[i]);
      e[i] = 0;
    }
    out.push_back(std::move(form));
  }
  return out;
}

YRootSet y_roots(int n, const Limits& limits) {
  require_rank(n, limits);
  YRootSet out{n, {}};
  auto all = weak_compositions(n, n);
  const auto is_pure = [n](const std::vector<int>& m) {
    return std::find(m.begin(), m.end(), n) != m.end();
  };
  for (int i = 0; i < n; ++i) {
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    m[static_cast<std::size_t>(i)] = n;
    out.coefficients.push_back(std::move(m));
  }
  for (auto& m : all) {
    if (!is_pure(m)) out.coefficients.push_back(std::move(m));
  }
  return out;
}

VarTable s_vars(int n) { return VarTable::indexed("s", n, 1, true); }

VarTable u_vars(int n) { return VarTable::indexed("u", n - 1, 2, true); }

SExpansion s_in_elementary(int n, int r_max, const Limits& limits) {
  const YRootSet roots = y_roots(n, limits);
  if (r_max < 0 || r_max > n) throw UsageError("r_max outside 0..n");
  const auto sigma = elementary_of(roots.forms(), r_max, root_vars(n));
  SExpansion out{n, {}, {}, {}};
  for (int r = 1; r <= r_max; ++r) {
    MPoly s = express_in_elementary(sigma[static_cast<std::size_t>(r)]);
    Exponents lead_exp(static_cast<std::size_t>(n), 0);
    lead_exp[static_cast<std::size_t>(r - 1)] = 1;
    out.lead.push_back(s.coefficient(lead_exp));
    std::map<Partition, Rational, PartitionLess> lower;
    for (const auto& [e, c] : s.terms()) {
      if (e != lead_exp) lower.emplace(partition_from_multiplicities(e), c);
    }
    out.lower.push_back(std::move(lower));
    out.s.push_back(std::move(s));
  }
  return out;
}

UniversalPolys solve_psi(int n, const Limits& limits) {
  const SExpansion sx = s_in_elementary(n, n, limits);
  const VarTable svars = s_vars(n);
  UniversalPolys out;
  out.n = n;
  out.N = static_cast<int>(binomial(2 * n - 1, n).get_si());
  out.lead = sx.lead;
  out.lower = sx.lower;

  for (int r = 1; r <= n; ++r) {
    const auto ru = static_cast<std::size_t>(r - 1);
    if (sx.lead[ru] == 0) {
      throw InconsistencyError("zero leading coefficient for s_" + std::to_string(r));
    }
    MPoly rhs = MPoly::variable(svars, ru);
    for (const auto& [lambda, d] : sx.lower[ru]) {
      if (lambda.largest() >= r) {
        throw InconsistencyError("system for s_" + std::to_string(r) + " is not triangular");
      }
      MPoly e_lambda = MPoly::constant(svars, 1);
      for (int part : lambda.parts()) e_lambda *= out.psi[static_cast<std::size_t>(part - 1)];
      rhs -= d * e_lambda;
    }
    out.psi.push_back(Rational(1) / sx.lead[ru] * rhs);
  }

  // e_i = psi_i(s_1(e), ..., s_n(e)) must hold exactly.
  const VarTable evars = elementary_vars(n);
  for (int i = 1; i <= n; ++i) {
    const MPoly back = substitute(out.psi[static_cast<std::size_t>(i - 1)], sx.s);
    if (!(back == MPoly::variable(evars, static_cast<std::size_t>(i - 1)))) {
      throw InconsistencyError("psi_" + std::to_string(i) + "(s(e)) != e_" + std::to_string(i));
    }
  }
  return out;
}

std::vector<MPoly> compute_phi(const UniversalPolys& psi_part) {
  const int n = psi_part.n;
  if (static_cast<int>(psi_part.psi.size()) != n) throw UsageError("psi part is incomplete");
  const VarTable uvars = u_vars(n);
  std::vector<MPoly> images;
  images.emplace_back(uvars);  // s_1 -> 0
  for (int j = 2; j <= n; ++j) images.push_back(MPoly::variable(uvars, static_cast<std::size_t>(j - 2)));
  std::vector<MPoly> phi;
  for (int i = 2; i <= n; ++i) {
    MPoly p = substitute(psi_part.psi[static_cast<std::size_t>(i - 1)], images);
    if (p.constant_term() != 0) {
      throw InconsistencyError("phi_" + std::to_string(i) + " has a constant term");
    }
    phi.push_back(std::move(p));
  }
  return phi;
}

const UniversalPolys& universal_polys(int n, const Limits& limits) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, UniversalPolys> cache;
  {
    std::lock_guard lock(mutex);
    const auto it = cache.find({n, limits.max_rank});
    if (it != cache.end()) return it->second;
  }
  UniversalPolys u = solve_psi(n, limits);
  u.phi = compute_phi(u);
  std::lock_guard lock(mutex);
  return cache.try_emplace({n, limits.max_rank}, std::move(u)).first->second;
}

std::vector<MPoly> brauer_reduced(std::span<const MPoly> phi,
                                  std::span<const MPoly> pushforward_classes,
                                  const Reduction& reduce) {
  if (phi.size() != pushforward_classes.size()) {
    throw UsageError("expected " + std::to_string(phi.size()) + " pushforward classes, got " +
                     std::to_string(pushforward_classes.size()));
  }
  std::vector<MPoly> out;
  out.reserve(phi.size());
  for (const auto& p : phi) out.push_back(substitute(p, pushforward_classes, reduce));
  return out;
}

std::vector<MPoly> brauer_reduced(int n, std::span<const MPoly> pushforward_classes,
                                  const Reduction& reduce) {
  return brauer_reduced(universal_polys(n).phi, pushforward_classes, reduce);
}

}  // namespace redchern
