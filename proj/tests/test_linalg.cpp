#include <doctest.h>

#include "m2coh/algebra.hpp"
#include "m2coh/cochain.hpp"
#include "m2coh/linalg.hpp"
#include "m2coh/random.hpp"
#include "m2coh/restricted.hpp"

using namespace m2coh;

namespace {

Matrix random_matrix(Rng& rng, const Field& f, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.felt(f);
  return m;
}

} // namespace

TEST_CASE("rref of the identity") {
  Field f(5);
  auto [r, piv, rank] = rref(Matrix::identity(f, 3));
  CHECK(r == Matrix::identity(f, 3));
  CHECK(piv == std::vector<std::size_t>{0, 1, 2});
  CHECK(rank == 3);
}

TEST_CASE("rank of a dependent 2x2") {
  Field f(5);
  Matrix m(f, 2, 2);
  m.at(0, 0) = f.from_int(1);
  m.at(0, 1) = f.from_int(2);
  m.at(1, 0) = f.from_int(2);
  m.at(1, 1) = f.from_int(4); // row 2 = 2 * row 1
  CHECK(rref(m).rank == 1);

  SUBCASE("kernel against the brute-force solution set") {
    Subspace ker = kernel_basis(m);
    CHECK(ker.dim() == 1);
    // enumerate all 25 vectors: the solutions are exactly the multiples of (3,1)
    std::vector<Vec> solutions;
    for (const Felt& a : f.elements())
      for (const Felt& b : f.elements()) {
        Vec x{a, b};
        if (is_zero_vec(f, m.apply(x))) solutions.push_back(x);
      }
    CHECK(solutions.size() == 5);
    CHECK(ker.basis[0] == Vec{f.from_int(3), f.from_int(1)});
    CHECK(std::count(solutions.begin(), solutions.end(), ker.basis[0]) == 1);
  }
}

TEST_CASE("kernel of the identity is zero") {
  Field f(7);
  CHECK(kernel_basis(Matrix::identity(f, 4)).dim() == 0);
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
  Rng rng(11);
  for (const Field& f : {Field(5), Field(5, 2, 0)}) {
    for (int trial = 0; trial < 25; ++trial) {
      Matrix m = random_matrix(rng, f, 1 + rng.index(6), 1 + rng.index(6));
      auto r1 = rref(m);
      auto r2 = rref(r1.reduced);
      CHECK(r1.reduced == r2.reduced);
      Subspace ker = kernel_basis(m);
      CHECK(ker.dim() + r1.rank == m.cols());
      for (const auto& x : ker.basis) CHECK(is_zero_vec(f, m.apply(x)));
    }
  }
}

TEST_CASE("in_span coordinates") {
  Field f(5);
  Subspace s{f, 2, {Vec{f.one(), f.zero()}}};
  CHECK(in_span(Vec{f.zero(), f.zero()}, s) == Vec{f.zero()});
  CHECK_FALSE(in_span(Vec{f.one(), f.one()}, s).has_value());
  CHECK_THROWS_AS(in_span(Vec{f.one()}, s), DimensionMismatchError);

  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, f, 4, 6);
    Subspace row{f, 6, {m.row(0), m.row(1)}};
    if (rref(Matrix::from_rows(f, row.basis, 6)).rank < 2) continue;
    Vec v = add_vec(f, scale_vec(f, rng.felt(f), m.row(0)), scale_vec(f, rng.felt(f), m.row(1)));
    auto coords = in_span(v, row);
    REQUIRE(coords.has_value());
    Vec rebuilt = zero_vec(f, 6);
    for (std::size_t i = 0; i < coords->size(); ++i)
      rebuilt = add_vec(f, rebuilt, scale_vec(f, (*coords)[i], row.basis[i]));
    CHECK(rebuilt == v);
  }
}

TEST_CASE("complement representatives") {
  Field f(5);
  Rng rng(17);
  SUBCASE("kernel equal to image gives nothing") {
    Matrix m = random_matrix(rng, f, 3, 5);
    Subspace ker = kernel_basis(m);
    CHECK(complement_representatives(ker, ker).empty());
  }
  SUBCASE("representatives complete an image basis of the kernel") {
    for (int trial = 0; trial < 15; ++trial) {
      Matrix m = random_matrix(rng, f, 2, 6);
      Subspace ker = kernel_basis(m);
      if (ker.dim() < 2) continue;
      // a random subspace inside the kernel
      std::vector<Vec> gens;
      for (std::size_t i = 0; i + 1 < ker.dim(); i += 2)
        gens.push_back(add_vec(f, scale_vec(f, rng.felt(f), ker.basis[i]),
                               scale_vec(f, rng.felt(f), ker.basis[i + 1])));
      Subspace image = image_basis(Matrix::from_rows(f, gens, 6).transpose());
      auto reps = complement_representatives(ker, image);
      CHECK(reps.size() == ker.dim() - image.dim());
      std::vector<Vec> all = image.basis;
      all.insert(all.end(), reps.begin(), reps.end());
      CHECK(rref(Matrix::from_rows(f, all, 6)).rank == all.size());
      CHECK(all.size() == ker.dim());
      for (const auto& r : reps) CHECK(in_span(r, ker).has_value());
    }
  }
  SUBCASE("image not contained in kernel throws") {
    Matrix m(f, 1, 2);
    m.at(0, 0) = f.one(); // kernel = span{(0,1)}
    Subspace ker = kernel_basis(m);
    Subspace image{f, 2, {Vec{f.one(), f.zero()}}};
    CHECK_THROWS_AS(complement_representatives(ker, image), ImageNotContainedError);
  }
}

TEST_CASE("differential matrices of the filiform algebra") {
  SUBCASE("rank of d1 is p-2 for p=5") {
    Field f(5);
    RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 5));
    CHECK(rref(d1_matrix(A)).rank == 3);
  }
  SUBCASE("kernel of d1 has dimension 2 for p=7") {
    Field f(7);
    RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 7));
    CHECK(kernel_basis(d1_matrix(A)).dim() == 2);
  }
  SUBCASE("e^{2,3} lies in span of the coboundaries plus e^{1,4} for p=5") {
    Field f(5);
    RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 5));
    Subspace cob = image_basis(d1_matrix(A));
    std::vector<Vec> gens = cob.basis;
    gens.push_back(Cochain2::basis(f, 5, 1, 4).sigma);
    Subspace span = image_basis(Matrix::from_rows(f, gens, gens[0].size()).transpose());
    CHECK(in_span(Cochain2::basis(f, 5, 2, 3).sigma, span).has_value());
    // phi_5 = e^{1,4} + e^{2,3} is the coboundary that links them
    CHECK(in_span(phi_k(f, 5, 5).sigma, cob).has_value());
  }
  SUBCASE("restricted degree-2 sizes for p=7, lambda=0") {
    Field f(7);
    RestrictedLieAlgebra A = make_m2(f, zero_vec(f, 7));
    Subspace ker = kernel_basis(d2_star_matrix(A));
    Subspace image = image_basis(d1_star_matrix(A));
    CHECK(ker.dim() == 15);
    CHECK(image.dim() == 5);
    CHECK(complement_representatives(ker, image).size() == 10); // p + 3
  }
}
