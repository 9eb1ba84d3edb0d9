#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "wedge/error.hpp"
#include "wedge/exterior.hpp"
#include "wedge/oracles.hpp"
#include "wedge/states.hpp"

using namespace wedge;
using testutil::unit;

TEST_CASE("orthonormal basis spans unit volume") {
  const std::vector<ComplexVector> e{unit(3, 0), unit(3, 1), unit(3, 2)};
  CHECK(exterior::wedge_norm_sq(e) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(exterior::wedge_norm_sq_square(e) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("parallel vectors have zero wedge") {
  std::mt19937_64 rng(3);
  const ComplexVector v = testutil::gaussian_vector(4, rng);
  const std::vector<ComplexVector> fam{v, 2.0 * v};
  CHECK(std::abs(exterior::wedge_norm_sq(fam)) < 1e-12);
  CHECK(std::abs(exterior::pairwise_wedge_sum(std::vector<ComplexVector>{v, v, v})) < 1e-12);
}

TEST_CASE("scaled basis gives 1/27 volume and 1/3 pair sum") {
  const double s = 1.0 / std::sqrt(3.0);
  const std::vector<ComplexVector> fam{s * unit(3, 0), s * unit(3, 1), s * unit(3, 2)};
  ComplexMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) m.row(i) = fam[static_cast<std::size_t>(i)].transpose();
  const double leibniz = std::norm(oracles::leibniz_determinant(m));
  CHECK(leibniz == doctest::Approx(1.0 / 27.0).epsilon(1e-14));
  CHECK(exterior::wedge_norm_sq(fam) == doctest::Approx(leibniz).epsilon(1e-13));
  CHECK(exterior::pairwise_wedge_sum(fam) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("a single vector's wedge is its squared norm") {
  const ComplexVector v = ComplexVector::Constant(2, Complex(1.0, 1.0));
  CHECK(exterior::wedge_norm_sq(std::vector<ComplexVector>{v}) == doctest::Approx(4.0));
}

TEST_CASE("Gram determinant agrees with |det|^2 and Leibniz on square families") {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto fam = testutil::gaussian_family(3, 3, rng);
    ComplexMatrix m(3, 3);
    for (int i = 0; i < 3; ++i) m.row(i) = fam[static_cast<std::size_t>(i)].transpose();
    const double oracle = std::norm(oracles::leibniz_determinant(m));
    const double scale = std::max(1.0, oracle);
    worst = std::max(worst, std::abs(exterior::wedge_norm_sq(fam) - oracle) / scale);
    worst = std::max(worst, std::abs(exterior::wedge_norm_sq_square(fam) - oracle) / scale);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("wedge norm is unitary invariant, scales quadratically and ignores order") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + t % 4;
    const int k = 1 + t % d;
    auto fam = testutil::gaussian_family(k, d, rng);
    const double base = exterior::wedge_norm_sq(fam);

    const ComplexMatrix u = random_unitary(d, 1000 + static_cast<std::uint64_t>(t));
    std::vector<ComplexVector> rotated;
    for (const auto& v : fam) rotated.push_back(u * v);
    CHECK(exterior::wedge_norm_sq(rotated) == doctest::Approx(base).epsilon(1e-10));

    const Complex c(0.3, -1.7);
    auto scaled = fam;
    scaled[0] *= c;
    CHECK(exterior::wedge_norm_sq(scaled) == doctest::Approx(std::norm(c) * base).epsilon(1e-10));

    auto swapped = fam;
    std::swap(swapped.front(), swapped.back());
    CHECK(exterior::wedge_norm_sq(swapped) == doctest::Approx(base).epsilon(1e-10));
  }
}

TEST_CASE("pair sum follows Lagrange's identity") {
  std::mt19937_64 rng(8);
  const auto fam = testutil::gaussian_family(5, 3, rng);
  double direct = 0.0;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      direct += exterior::wedge_norm_sq(std::vector<ComplexVector>{fam[i], fam[j]});
    }
  }
  CHECK(exterior::pairwise_wedge_sum(fam) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("subset and spectral order sums agree") {
  std::mt19937_64 rng(21);
  struct Shape {
    int count;
    int dim;
  };
  for (const Shape s : {Shape{3, 3}, Shape{6, 4}, Shape{4, 9}, Shape{9, 3}, Shape{2, 5}, Shape{8, 8}}) {
    const auto fam = testutil::gaussian_family(s.count, s.dim, rng);
    const int top = std::min(s.count, s.dim);
    const auto direct = exterior::order_sums(fam, top);
    const auto spectral = exterior::order_sums_spectral(fam, top);
    REQUIRE(direct.size() == spectral.size());
    for (int k = 2; k <= top; ++k) {
      CHECK(spectral[static_cast<std::size_t>(k)] ==
            doctest::Approx(direct[static_cast<std::size_t>(k)]).epsilon(1e-9));
    }
  }
}

TEST_CASE("orders beyond the ambient dimension vanish") {
  std::mt19937_64 rng(2);
  const auto fam = testutil::gaussian_family(5, 2, rng);
  const auto sums = exterior::order_sums(fam, 4);
  CHECK(sums[3] == 0.0);
  CHECK(sums[4] == 0.0);
  CHECK(sums[2] > 0.0);
}

TEST_CASE("binomial coefficients") {
  CHECK(exterior::binomial(9, 3) == 84.0);
  CHECK(exterior::binomial(5, 0) == 1.0);
  CHECK(exterior::binomial(3, 4) == 0.0);
}

TEST_CASE("invalid families are rejected") {
  const std::vector<ComplexVector> mixed{unit(3, 0), unit(2, 0)};
  CHECK_THROWS_WITH_AS(exterior::wedge_norm_sq(mixed), doctest::Contains("mixed dimensions"), ValidationError);
  const std::vector<ComplexVector> crowded{unit(2, 0), unit(2, 1), unit(2, 0)};
  CHECK_THROWS_WITH_AS(exterior::wedge_norm_sq(crowded), doctest::Contains("too many vectors for ambient dimension"),
                       ValidationError);
  CHECK_THROWS_AS(exterior::pairwise_wedge_sum(std::vector<ComplexVector>{unit(3, 0)}), ValidationError);
}
