#include "m2coh/extensions.hpp"

#include <algorithm>

namespace m2coh {

namespace {

bool lambda_is_zero(const RestrictedLieAlgebra& A) {
  for (int k = 1; k <= static_cast<int>(A.dim()); ++k)
    if (!is_zero_vec(A.field(), A.p_power_basis(k))) return false;
  return true;
}

} // namespace

CentralExtension extend(const RestrictedLieAlgebra& A, const RestrictedCochain2& c,
                        const std::string& name) {
  const Field& f = A.field();
  const auto p = A.dim();
  if (c.phi.p != p) throw DimensionMismatchError("cocycle/algebra dimension mismatch");

  D2StarValue d2s = d2_star(A, c);
  if (!d2s.is_zero(f))
    throw NotACocycleError("d^2*(phi, omega) != 0; the extension would not be restricted Lie");

  const std::size_t n = p + 1;
  PairIndex ix(p);

  std::vector<std::tuple<int, int, Vec>> brackets;
  for (std::size_t idx = 0; idx < ix.size(); ++idx) {
    auto [i, j] = ix.pair_at(idx);
    const Vec& base = A.bracket_basis(i, j);
    Vec v = zero_vec(f, n);
    std::copy(base.begin(), base.end(), v.begin());
    v[n - 1] = c.phi.sigma[idx];
    if (!is_zero_vec(f, v)) brackets.emplace_back(i, j, std::move(v));
  }
  // [e_i, c] = 0: nothing to add

  std::vector<Vec> p_map;
  for (int k = 1; k <= static_cast<int>(p); ++k) {
    Vec v = zero_vec(f, n);
    const Vec& base = A.p_power_basis(k);
    std::copy(base.begin(), base.end(), v.begin());
    v[n - 1] = c.omega.basis_values[static_cast<std::size_t>(k - 1)];
    p_map.push_back(std::move(v));
  }
  p_map.push_back(zero_vec(f, n)); // c^{[p]} = 0

  // grading: keep it when phi is homogeneous (c sits in phi's grade)
  std::vector<int> degrees;
  if (A.graded()) {
    int grade = 0;
    bool homogeneous = true;
    for (std::size_t idx = 0; idx < ix.size(); ++idx) {
      if (f.is_zero(c.phi.sigma[idx])) continue;
      auto [i, j] = ix.pair_at(idx);
      if (grade == 0)
        grade = i + j;
      else if (grade != i + j)
        homogeneous = false;
    }
    if (homogeneous) {
      degrees = A.degrees();
      degrees.push_back(grade); // grade 0 when phi = 0: c never appears in a bracket then
    }
  }

  RestrictedLieAlgebra total(f, n, std::move(brackets), std::move(p_map), std::move(degrees));
  return {name, A, c, std::move(total)};
}

std::vector<CentralExtension> extension_catalog(const RestrictedLieAlgebra& A) {
  const Field& f = A.field();
  const auto p = A.dim();
  const bool lz = lambda_is_zero(A);

  std::vector<CentralExtension> out;
  for (int k = 1; k <= static_cast<int>(p); ++k) {
    RestrictedCochain2 c(Cochain2::zero(f, p), bar_e(f, p, k));
    out.push_back(extend(A, c, "E_" + std::to_string(k)));
  }

  auto tilde_pair = [&](const Cochain2& phi) {
    return RestrictedCochain2(phi, OmegaMap::tilde(f, phi));
  };

  out.push_back(extend(A, tilde_pair(Cochain2::basis(f, p, 1, 4)), "(e^{1,4},0)"));
  if (lz) {
    if (p == 5) {
      out.push_back(extend(A, tilde_pair(xi_cocycle(f)), "(xi,~xi)"));
      out.push_back(extend(A, tilde_pair(phi_k(f, p, 6)), "(phi_6,~phi_6)"));
    } else {
      out.push_back(extend(A, tilde_pair(eta_cocycle(f, p)), "(eta,0)"));
      out.push_back(extend(A, tilde_pair(phi_k(f, p, static_cast<int>(p) + 1)),
                           "(phi_" + std::to_string(p + 1) + ",~phi_" + std::to_string(p + 1) + ")"));
    }
  } else if (p > 5) {
    out.push_back(extend(A, tilde_pair(eta_cocycle(f, p)), "(eta,0)"));
  }
  return out;
}

namespace {

struct WitnessSearch {
  const RestrictedLieAlgebra& total;
  const Field& f;
  std::uint64_t p;
  std::vector<std::vector<bool>> pair_live; // [i][j]: [e_i, e_j] != 0
  std::vector<int> factors;
  std::optional<PfoldWitness> found;

  explicit WitnessSearch(const RestrictedLieAlgebra& t)
      : total(t), f(t.field()), p(t.field().characteristic()),
        pair_live(t.dim() + 1, std::vector<bool>(t.dim() + 1, false)) {
    for (const auto& [i, j] : total.nonzero_pairs()) {
      pair_live[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      pair_live[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
    }
  }

  void run() {
    const auto n = static_cast<int>(total.dim());
    for (int first = 1; first <= n && !found; ++first)
      for (int second = 1; second <= n && !found; ++second) {
        if (second == first) continue;
        Vec b = total.bracket_basis(first, second);
        if (is_zero_vec(f, b)) continue;
        factors = {first, second};
        walk(b);
      }
  }

  void walk(const Vec& chain) {
    if (found) return;
    if (factors.size() == p) {
      found = PfoldWitness{factors, chain};
      return;
    }
    const auto n = static_cast<int>(total.dim());
    for (int next = 1; next <= n && !found; ++next) {
      // cheap liveness test before paying for the bracket
      bool live = false;
      for (std::size_t m = 0; m < chain.size() && !live; ++m)
        live = !f.is_zero(chain[m]) && pair_live[m + 1][static_cast<std::size_t>(next)];
      if (!live) continue;
      Vec b = total.bracket(chain, total.basis_element(next));
      if (is_zero_vec(f, b)) continue;
      factors.push_back(next);
      walk(b);
      factors.pop_back();
    }
  }
};

} // namespace

std::optional<PfoldWitness> pfold_bracket_witness(const CentralExtension& E) {
  WitnessSearch s(E.total);
  s.run();
  return s.found;
}

} // namespace m2coh
