#include <doctest.h>

#include "m2coh/cochain.hpp"
#include "m2coh/random.hpp"

using namespace m2coh;

TEST_CASE("pair and triple indexing") {
  PairIndex ix(5);
  CHECK(ix.size() == 10);
  CHECK(ix.index(1, 2) == 0);
  CHECK(ix.index(1, 5) == 3);
  CHECK(ix.index(2, 3) == 4);
  CHECK(ix.pair_at(9) == std::pair<int, int>{4, 5});
  TripleIndex tx(5);
  CHECK(tx.size() == 10);
  CHECK(tx.index(1, 2, 3) == 0);
  CHECK(tx.triple_at(9) == std::tuple<int, int, int>{3, 4, 5});
}

TEST_CASE("normalize_pair conventions") {
  PairIndex ix(5);
  SUBCASE("closed-form convention kills descending pairs") {
    CHECK(normalize_pair(ix, 2, 1, PairConvention::kill_descending).sign == 0);
  }
  SUBCASE("antisymmetric convention flips them") {
    auto s = normalize_pair(ix, 2, 1, PairConvention::antisymmetric);
    CHECK(s.sign == -1);
    CHECK(s.index == ix.index(1, 2));
  }
  SUBCASE("repeated index is zero under both") {
    CHECK(normalize_pair(ix, 3, 3, PairConvention::kill_descending).sign == 0);
    CHECK(normalize_pair(ix, 3, 3, PairConvention::antisymmetric).sign == 0);
  }
  SUBCASE("out of range is zero") {
    CHECK(normalize_pair(ix, 0, 2, PairConvention::antisymmetric).sign == 0);
    CHECK(normalize_pair(ix, 1, 6, PairConvention::antisymmetric).sign == 0);
  }
}

TEST_CASE("degree-1 differential") {
  Field f(5);
  RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 5));

  SUBCASE("d1(e^1) = 0: e_1 never appears in a bracket value") {
    CHECK(d1_generic(A, Cochain1::basis(f, 5, 1)).is_zero(f));
    CHECK(d1_closed(f, Cochain1::basis(f, 5, 1)).is_zero(f));
  }
  SUBCASE("d1(e^5) = e^{1,4} + e^{2,3}") {
    Cochain2 expect = Cochain2::zero(f, 5);
    expect.sigma[PairIndex(5).index(1, 4)] = f.one();
    expect.sigma[PairIndex(5).index(2, 3)] = f.one();
    CHECK(d1_generic(A, Cochain1::basis(f, 5, 5)).sigma == expect.sigma);
    CHECK(d1_closed(f, Cochain1::basis(f, 5, 5)).sigma == expect.sigma);
  }
  SUBCASE("d1(e^3) = e^{1,2}: the e^{2,1} symbol dies") {
    CHECK(d1_generic(A, Cochain1::basis(f, 5, 3)).sigma == Cochain2::basis(f, 5, 1, 2).sigma);
    CHECK(d1_closed(f, Cochain1::basis(f, 5, 3)).sigma == Cochain2::basis(f, 5, 1, 2).sigma);
  }
}

TEST_CASE("degree-2 differential closed forms") {
  Field f(7);
  RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 7));

  SUBCASE("d2(e^{1,j}) = -e^{1,2,j-2}") {
    Cochain3 img = d2_generic(A, Cochain2::basis(f, 7, 1, 5));
    Cochain3 expect = Cochain3::zero(f, 7);
    expect.tau[TripleIndex(7).index(1, 2, 3)] = f.neg(f.one());
    CHECK(img.tau == expect.tau);
    CHECK(d2_generic(A, Cochain2::basis(f, 7, 1, 4)).is_zero(f)); // j-2 = 2 collides
  }

  SUBCASE("coboundaries are cocycles: d2(phi_k) = 0") {
    for (int k = 3; k <= 7; ++k) {
      CHECK(d2_generic(A, phi_k(f, 7, k)).is_zero(f));
      CHECK(d2_closed(f, phi_k(f, 7, k)).is_zero(f));
    }
  }

  SUBCASE("grade-6 component: d2(s15 e^{1,5} + s24 e^{2,4}) = (-s15+s24) e^{1,2,3}") {
    Rng rng(3);
    Felt s15 = rng.felt(f), s24 = rng.felt(f);
    Cochain2 phi = Cochain2::zero(f, 7);
    phi.sigma[PairIndex(7).index(1, 5)] = s15;
    phi.sigma[PairIndex(7).index(2, 4)] = s24;
    Cochain3 img = d2_generic(A, phi);
    Cochain3 expect = Cochain3::zero(f, 7);
    expect.tau[TripleIndex(7).index(1, 2, 3)] = f.sub(s24, s15);
    CHECK(img.tau == expect.tau);
  }
}

TEST_CASE("closed and generic differentials agree on full bases") {
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    Field f(p);
    Rng rng(p);
    for (const Vec& lambda : {zero_vec(f, p), rng.vec(f, p)}) {
      RestrictedLieAlgebra A = make_m2(f, lambda);
      for (int k = 1; k <= static_cast<int>(p); ++k) {
        Cochain1 psi = Cochain1::basis(f, p, k);
        CHECK(d1_generic(A, psi).sigma == d1_closed(f, psi).sigma);
      }
      PairIndex ix(p);
      for (std::size_t n = 0; n < ix.size(); ++n) {
        auto [i, j] = ix.pair_at(n);
        Cochain2 phi = Cochain2::basis(f, p, i, j);
        CHECK(d2_generic(A, phi).tau == d2_closed(f, phi).tau);
      }
    }
  }
  // and over GF(25)
  Field fe(5, 2, 0);
  RestrictedLieAlgebra Ae = make_m2(fe, zero_vec(fe, 5));
  PairIndex ix(5);
  for (std::size_t n = 0; n < ix.size(); ++n) {
    auto [i, j] = ix.pair_at(n);
    CHECK(d2_generic(Ae, Cochain2::basis(fe, 5, i, j)).tau ==
          d2_closed(fe, Cochain2::basis(fe, 5, i, j)).tau);
  }
}

TEST_CASE("d2 after d1 vanishes on the full basis") {
  for (std::uint64_t p : {5ull, 7ull, 11ull}) {
    Field f(p);
    RestrictedLieAlgebra A = make_m2(f, zero_vec(f, p));
    for (int k = 1; k <= static_cast<int>(p); ++k)
      CHECK(d2_generic(A, d1_generic(A, Cochain1::basis(f, p, k))).is_zero(f));
  }
}

TEST_CASE("the differentials are graded maps") {
  Field f(7);
  RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 7));
  PairIndex ix(7);
  TripleIndex tx(7);
  for (std::size_t n = 0; n < ix.size(); ++n) {
    auto [i, j] = ix.pair_at(n);
    Cochain3 img = d2_generic(A, Cochain2::basis(f, 7, i, j));
    for (std::size_t m = 0; m < tx.size(); ++m) {
      if (f.is_zero(img.tau[m])) continue;
      auto [s, t, u] = tx.triple_at(m);
      CHECK(s + t + u == i + j);
    }
  }
  for (int k = 1; k <= 7; ++k) {
    Cochain2 img = d1_generic(A, Cochain1::basis(f, 7, k));
    for (std::size_t m = 0; m < ix.size(); ++m) {
      if (f.is_zero(img.sigma[m])) continue;
      auto [i, j] = ix.pair_at(m);
      CHECK(i + j == k);
    }
  }
}

TEST_CASE("graded kernels") {
  SUBCASE("grade 5 kernel is all of the component {e^{1,4}, e^{2,3}}") {
    Field f(7);
    RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 7));
    Subspace ker = kernel_basis(graded_matrix(A, 2, 5));
    CHECK(ker.dim() == 2);
  }

  SUBCASE("kernels vanish from grade p+2 on") {
    for (std::uint64_t p : {5ull, 7ull, 11ull}) {
      Field f(p);
      RestrictedLieAlgebra A = make_m2(f, zero_vec(f, p));
      for (int k = static_cast<int>(p) + 2; k <= 2 * static_cast<int>(p) - 1; ++k)
        CHECK(kernel_basis(graded_matrix(A, 2, k)).dim() == 0);
    }
  }

  SUBCASE("p=5 deviation: grade 7 kernel is one-dimensional") {
    Field f(5);
    RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 5));
    CHECK(kernel_basis(graded_matrix(A, 2, 7)).dim() == 1);
    CHECK(kernel_basis(graded_matrix(A, 2, 8)).dim() == 0);
  }

  SUBCASE("grades 8..p+1 are spanned by phi_k and satisfy the shifted relations") {
    Field f(11);
    RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 11));
    PairIndex ix(11);
    for (int k = 8; k <= 12; ++k) {
      auto cols = pair_indices_of_grade(ix, k);
      Subspace ker = kernel_basis(graded_matrix(A, 2, k));
      REQUIRE(ker.dim() == 1);
      // the grade-local coordinates of phi_k
      Vec local = zero_vec(f, cols.size());
      Cochain2 pk = phi_k(f, 11, k);
      for (std::size_t c = 0; c < cols.size(); ++c) local[c] = pk.sigma[cols[c]];
      CHECK(in_span(local, ker).has_value());
      // sigma_{i,j} + sigma_{i+1,j-i} = 0 for i >= 3 on the kernel vector
      for (std::size_t c = 0; c < cols.size(); ++c) {
        auto [i, j] = ix.pair_at(cols[c]);
        if (i < 3 || i + 1 >= j - i) continue;
        Felt a = ker.basis[0][c];
        Felt b = f.zero();
        for (std::size_t c2 = 0; c2 < cols.size(); ++c2)
          if (ix.pair_at(cols[c2]) == std::pair<int, int>{i + 1, j - i}) b = ker.basis[0][c2];
        CHECK(f.add(a, b) == f.zero());
      }
    }
  }

  SUBCASE("per-grade kernels add up to the full kernel") {
    for (std::uint64_t p : {5ull, 7ull, 11ull}) {
      Field f(p);
      RestrictedLieAlgebra A = make_m2(f, zero_vec(f, p));
      std::size_t sum = 0;
      for (int k = 3; k <= 2 * static_cast<int>(p) - 1; ++k)
        sum += kernel_basis(graded_matrix(A, 2, k)).dim();
      CHECK(sum == kernel_basis(d2_matrix(A)).dim());
    }
  }

  SUBCASE("grade range errors") {
    Field f(5);
    RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 5));
    CHECK_THROWS_AS(graded_matrix(A, 2, 2), GradeOutOfRangeError);
    CHECK_THROWS_AS(graded_matrix(A, 2, 10), GradeOutOfRangeError);
    CHECK_THROWS_AS(graded_matrix(A, 1, 0), GradeOutOfRangeError);
    CHECK_THROWS_AS(graded_matrix(A, 3, 6), GradeOutOfRangeError);
  }
}

TEST_CASE("named cocycles") {
  Field f(7);
  CHECK(phi_k(f, 7, 8).coeff(1, 7) == f.one());
  CHECK(phi_k(f, 7, 8).coeff(2, 6) == f.one());
  CHECK(eta_cocycle(f, 7).coeff(1, 6) == f.one());
  CHECK(eta_cocycle(f, 7).coeff(3, 4) == f.one());
  Field f5(5);
  CHECK(xi_cocycle(f5).coeff(2, 5) == f5.one());
  CHECK(xi_cocycle(f5).coeff(3, 4) == f5.from_int(-1));
  CHECK_THROWS_AS(phi_k(f, 7, 2), IndexOutOfRangeError);
  CHECK_THROWS_AS(eta_cocycle(f5, 5), IndexOutOfRangeError);
}
