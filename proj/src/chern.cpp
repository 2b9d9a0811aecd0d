#include "redchern/chern.hpp"

#include <map>
#include <mutex>

#include "redchern/errors.hpp"
#include "redchern/symfun.hpp"

namespace redchern {

namespace {

void require_index(int n, int r) {
  if (n < 1) throw UsageError("rank must be at least 1");
  if (r < 1 || r > n) {
    throw UsageError("class index " + std::to_string(r) + " outside 1.." + std::to_string(n));
  }
}

// Chern-ring images of sigma_1(f) .. sigma_n(f), as polynomials in x1..xn.
const std::vector<MPoly>& shifted_elementary(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<MPoly>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    const RootSystem rs = make_root_system(n);
    auto sigma = elementary_of(rs.shifted, n, rs.vars);
    sigma.erase(sigma.begin());
    it = cache.emplace(n, std::move(sigma)).first;
  }
  return it->second;
}

// c_k(E (x) L), k = 1..n, in chern_vars(n) + t, from the roots x_i + t.
const std::vector<MPoly>& universal_twist(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<MPoly>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const Variable t{"t", 1};
  const VarTable xt = root_vars(n).extended(std::span(&t, 1));
  const VarTable ct = chern_vars(n).extended(std::span(&t, 1));
  const MPoly tvar = MPoly::variable(xt, "t");
  std::vector<MPoly> shifted;
  for (int i = 0; i < n; ++i) shifted.push_back(MPoly::variable(xt, static_cast<std::size_t>(i)) + tvar);
  const auto sigma = elementary_of(shifted, n, xt);

  std::vector<MPoly> classes;
  const auto nx = static_cast<std::size_t>(n);
  for (int k = 1; k <= n; ++k) {
    // Split by the power of t; each coefficient is symmetric in the x's.
    std::map<int, MPoly> by_t;
    for (const auto& [e, c] : sigma[static_cast<std::size_t>(k)].terms()) {
      auto [slot, inserted] = by_t.try_emplace(e[nx], root_vars(n));
      slot->second.add_term(Exponents(e.begin(), e.begin() + n), c);
    }
    MPoly ck(ct);
    for (const auto& [power, coeff] : by_t) {
      const MPoly in_c = relabel(express_in_elementary(coeff), chern_vars(n));
      for (const auto& [e, c] : in_c.terms()) {
        Exponents full = e;
        full.push_back(power);
        ck.add_term(full, c);
      }
    }
    classes.push_back(std::move(ck));
  }
  return cache.emplace(n, std::move(classes)).first->second;
}

}  // namespace

VarTable chern_vars(int n) { return VarTable::indexed("c", n, 1, true); }

ChernVector ChernVector::universal(int n) {
  if (n < 1) throw UsageError("rank must be at least 1");
  ChernVector cv{n, {}};
  const VarTable vars = chern_vars(n);
  for (int i = 0; i < n; ++i) cv.classes.push_back(MPoly::variable(vars, static_cast<std::size_t>(i)));
  return cv;
}

MPoly ChernVector::c(int i) const {
  if (i == 0) return MPoly::constant(ring(), 1);
  if (i < 0 || i > rank) return MPoly(ring());
  return classes[static_cast<std::size_t>(i - 1)];
}

RootSystem make_root_system(int n) {
  if (n < 1) throw UsageError("rank must be at least 1");
  RootSystem rs{n, root_vars(n), {}, {}};
  MPoly sum(rs.vars);
  for (int i = 0; i < n; ++i) {
    rs.roots.push_back(MPoly::variable(rs.vars, static_cast<std::size_t>(i)));
    sum += rs.roots.back();
  }
  const Rational inv_n(1, n);
  for (const auto& x : rs.roots) rs.shifted.push_back(x - inv_n * sum);
  return rs;
}

MPoly reduced_chern_roots(int n, int r) {
  require_index(n, r);
  const MPoly& sigma = shifted_elementary(n)[static_cast<std::size_t>(r - 1)];
  return relabel(express_in_elementary(sigma), chern_vars(n));
}

MPoly reduced_chern_formula(int n, int r) {
  require_index(n, r);
  const ChernVector cv = ChernVector::universal(n);
  const MPoly c1 = cv.c(1);
  MPoly out(chern_vars(n));
  for (int i = 0; i <= r; ++i) {
    Rational coeff(binomial(n - i, r - i));
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r - i));
    coeff /= scale;
    if ((r - i) % 2 == 1) coeff = -coeff;
    out += coeff * (pow(c1, static_cast<unsigned>(r - i)) * cv.c(i));
  }
  return out;
}

MPoly evaluate_chern(const MPoly& q, const ChernVector& cv, const Reduction& reduce) {
  if (q.vars().size() != static_cast<std::size_t>(cv.rank)) {
    throw UsageError("polynomial and bundle have different ranks");
  }
  return substitute(q, cv.classes, reduce);
}

ChernVector twist(const ChernVector& cv, const MPoly& line, const Reduction& reduce) {
  if (!(line.vars() == cv.ring())) throw UsageError("line class must live in the bundle's ring");
  const auto& universal = universal_twist(cv.rank);
  std::vector<MPoly> images = cv.classes;
  images.push_back(line);
  ChernVector out{cv.rank, {}};
  for (const auto& ck : universal) out.classes.push_back(substitute(ck, images, reduce));
  return out;
}

ChernVector twist(const ChernVector& cv, std::string_view line_name) {
  const Variable t{std::string(line_name), 1};
  const VarTable ring = cv.ring().extended(std::span(&t, 1));
  ChernVector lifted{cv.rank, {}};
  for (const auto& c : cv.classes) lifted.classes.push_back(embed(c, ring));
  return twist(lifted, MPoly::variable(ring, line_name));
}

MPoly det_class(const ChernVector& cv) { return cv.c(1); }

std::vector<MPoly> sym_power_det_inverse_chern(int n, int k_max, const Limits& limits) {
  if (n < 2 || n > limits.max_rank) {
    throw UsageError("rank " + std::to_string(n) + " outside the feasible range 2.." +
                     std::to_string(limits.max_rank));
  }
  const auto compositions = weak_compositions(n, n);
  if (k_max < 0 || k_max > static_cast<int>(compositions.size())) {
    throw UsageError("k_max outside 0..C(2n-1,n)");
  }
  // Roots in f-coordinates, then f_i -> x_i - (sum x)/n applied to each linear form.
  const RootSystem rs = make_root_system(n);
  const VarTable fvars = root_vars(n, "f");
  std::vector<MPoly> roots;
  roots.reserve(compositions.size());
  for (const auto& m : compositions) {
    MPoly form(fvars);
    Exponents e(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      e[i] = 1;
      form.add_term(e, m[i]);
      e[i] = 0;
    }
    roots.push_back(substitute(form, rs.shifted));
  }
  const auto sigma = elementary_of(roots, k_max, rs.vars);
  std::vector<MPoly> out;
  for (int k = 1; k <= k_max; ++k) {
    const MPoly& s = sigma[static_cast<std::size_t>(k)];
    out.push_back(relabel(express_in_elementary(s), chern_vars(n)));
  }
  return out;
}

MPoly reduce_hom(const MPoly& q) {
  const int n = static_cast<int>(q.vars().size());
  if (n < 1) return q;
  for (int i = 0; i < n; ++i) {
    if (q.vars()[static_cast<std::size_t>(i)].degree != i + 1) {
      throw UsageError("reduce_hom expects a Chern-class table with deg c_i = i");
    }
  }
  const MPoly in_roots = substitute(q, shifted_elementary(n));
  return relabel(express_in_elementary(in_roots), q.vars());
}

}  // namespace redchern
