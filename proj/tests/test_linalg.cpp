#include <doctest.h>

#include "asymcont/linalg.hpp"
#include "asymcont/states.hpp"
#include "support.hpp"

using namespace asymcont;
using testing::Gen;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

const DensityMatrix kPhi = phi_plus().projector();

}  // namespace

TEST_CASE("validate reports each defect") {
  CHECK(validate(2, 2, kPhi.matrix()).pass);

  CMatrix scaled = 0.9 * kPhi.matrix();
  Diagnostics d = validate(2, 2, scaled);
  CHECK_FALSE(d.pass);
  CHECK(d.trace_defect == doctest::Approx(0.1).epsilon(1e-12));

  CMatrix shifted = kPhi.matrix() - 1e-6 * CMatrix::Identity(4, 4);
  d = validate(2, 2, shifted);
  CHECK_FALSE(d.pass);
  CHECK(d.min_eigenvalue == doctest::Approx(-1e-6).epsilon(1e-6));

  CMatrix skew = kPhi.matrix();
  skew(0, 1) = Complex(0.0, 1e-3);
  d = validate(2, 2, skew);
  CHECK_FALSE(d.pass);
  CHECK(d.hermiticity_defect > 1e-4);

  d = validate(2, 3, kPhi.matrix());
  CHECK_FALSE(d.shape_ok);
  CHECK_FALSE(d.pass);
}

TEST_CASE("DensityMatrix rejects invalid input and carries diagnostics") {
  CMatrix bad = kPhi.matrix() - 1e-3 * CMatrix::Identity(4, 4);
  bad /= bad.trace().real();
  try {
    DensityMatrix rho(2, 2, bad);
    FAIL("expected InvalidState");
  } catch (const InvalidState& e) {
    CHECK(e.min_eigenvalue() < -1e-4);
  }
  CHECK_NOTHROW(DensityMatrix::unchecked(2, 2, bad));
}

TEST_CASE("PureState normalization") {
  CVector v(4);
  v << 1.0, 0.0, 0.0, 1.0;
  CHECK_THROWS_AS(PureState(2, 2, v), DomainError);
  CHECK_THROWS_AS(PureState(2, 3, v), DimensionMismatch);
  CHECK_THROWS_AS(PureState::normalized(2, 2, CVector::Zero(4)), DomainError);
  const PureState psi = PureState::normalized(2, 2, v);
  CHECK(psi.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("tensor groups the A factors and the B factors") {
  Gen g(11);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix a = g.density(2, 2);
    const DensityMatrix b = g.density(2, 3);
    const DensityMatrix ab = tensor(a, b);
    CHECK(ab.dim_a() == 4);
    CHECK(ab.dim_b() == 6);
    CHECK(std::abs(ab.matrix().trace() - Complex(1.0)) < 1e-12);
    if (trial < 5) {
      // grouped_product needs equal local dimensions, so compare a (x) a'.
      const DensityMatrix a2 = g.density(2, 2);
      CHECK(max_abs(tensor(a, a2).matrix() -
                    testing::grouped_product({a.matrix(), a2.matrix()}, 2, 2)) < 1e-14);
    }
  }
}

TEST_CASE("tensor_power") {
  Gen g(12);
  const DensityMatrix rho = g.density(2, 2);
  CHECK(max_abs(tensor_power(rho, 1).matrix() - rho.matrix()) == 0.0);

  const CMatrix oracle = testing::grouped_product({rho.matrix(), rho.matrix(), rho.matrix()}, 2, 2);
  CHECK(max_abs(tensor_power(rho, 3).matrix() - oracle) < 1e-14);

  for (int n = 1; n <= 6; ++n) {
    const DensityMatrix p = tensor_power(rho, n);
    CHECK(std::abs(p.matrix().trace().real() - 1.0) < 1e-10);
    if (n <= 5) CHECK(hermitian_eigenvalues(p.matrix()).minCoeff() >= -1e-8);
  }
  CHECK_THROWS_AS(tensor_power(rho, 7), SizeLimitError);
  CHECK_THROWS_AS(tensor_power(rho, 3, 63), SizeLimitError);
  CHECK(checked_power_side(4, 6, 4096) == 4096);
}

TEST_CASE("partial_trace") {
  const CMatrix ra = partial_trace(kPhi, Party::B);
  CHECK(max_abs(ra - 0.5 * CMatrix::Identity(2, 2)) < 1e-15);

  Gen g(13);
  const PureState prod = g.product(2, 3);
  const CMatrix pa = partial_trace(prod.projector(), Party::B);
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(pa);
  CHECK(es.eigenvalues()(1) == doctest::Approx(1.0).epsilon(1e-12));

  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = g.density(3, 2);
    const CMatrix reduced = partial_trace(rho, Party::B);
    CHECK(std::abs(reduced.trace().real() - 1.0) < 1e-12);
    CHECK(max_abs(reduced - testing::reduced_a_oracle(rho.matrix(), 3, 2)) < 1e-14);
    CHECK(partial_trace(rho, Party::A).rows() == 2);
  }
}

TEST_CASE("partial_transpose matches the index oracle and is an involution") {
  const RVector eig = hermitian_eigenvalues(partial_transpose(kPhi));
  CHECK(eig(0) == doctest::Approx(-0.5));
  for (int i = 1; i < 4; ++i) CHECK(eig(i) == doctest::Approx(0.5));

  Gen g(14);
  const std::pair<int, int> dims[] = {{2, 2}, {2, 3}, {3, 3}};
  for (auto [da, db] : dims) {
    for (int trial = 0; trial < 100; ++trial) {
      const DensityMatrix rho = g.density(da, db);
      const CMatrix pt = partial_transpose(rho);
      CHECK(max_abs(pt - testing::partial_transpose_oracle(rho.matrix(), da, db)) == 0.0);
      CHECK(max_abs(pt - pt.adjoint()) < 1e-15);
      CHECK(std::abs(pt.trace() - rho.matrix().trace()) < 1e-14);
      const DensityMatrix back = DensityMatrix::unchecked(da, db, pt);
      CHECK(max_abs(partial_transpose(back) - rho.matrix()) == 0.0);
    }
    const DensityMatrix product = g.product(da, db).projector();
    CHECK(hermitian_eigenvalues(partial_transpose(product)).minCoeff() >= -1e-12);
  }
}

TEST_CASE("trace_norm") {
  CHECK(trace_norm(CMatrix::Zero(3, 3)) == 0.0);
  CHECK(trace_norm(partial_transpose(kPhi)) == doctest::Approx(2.0).epsilon(1e-14));
  Gen g(15);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(trace_norm(g.density(2, 3).matrix()) == doctest::Approx(1.0).epsilon(1e-12));
    CMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = g.gaussian();
    CHECK(trace_norm(m) == doctest::Approx(testing::trace_norm_oracle(m)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(trace_norm(CMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("trace_distance is a metric and homogeneous along mixtures") {
  Gen g(16);
  const DensityMatrix zero = bell_state(Bell::PhiPlus).projector();
  const DensityMatrix orth = bell_state(Bell::PsiMinus).projector();
  CHECK(trace_distance(zero, orth) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(trace_distance(g.density(2, 2), g.density(2, 3)), DimensionMismatch);

  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix a = g.density(2, 2), b = g.density(2, 2), c = g.density(2, 2);
    const double ab = trace_distance(a, b);
    CHECK(trace_distance(a, a) < 1e-15);
    CHECK(ab == doctest::Approx(trace_distance(b, a)).epsilon(1e-14));
    CHECK(ab == doctest::Approx(testing::trace_distance_oracle(a.matrix(), b.matrix())).epsilon(1e-12));
    CHECK(ab <= trace_distance(a, c) + trace_distance(c, b) + 1e-9);
    const double p = g.uniform();
    CHECK(std::abs(trace_distance(a, mix(a, b, p)) - p * ab) <= 1e-9);
  }
}

TEST_CASE("mix") {
  Gen g(17);
  const DensityMatrix rho = g.density(2, 2), sigma = g.density(2, 2);
  CHECK(max_abs(mix(rho, sigma, 0.0).matrix() - rho.matrix()) < 1e-15);
  CHECK(max_abs(mix(rho, sigma, 1.0).matrix() - sigma.matrix()) < 1e-15);
  CHECK(max_abs(mix(rho, mix(rho, sigma, 0.5), 0.5).matrix() - mix(rho, sigma, 0.25).matrix()) < 1e-15);
  CHECK_THROWS_AS(mix(rho, sigma, 1.5), DomainError);

  // Mixing past a pure state leaves the state space.
  try {
    (void)mix(maximally_mixed(2, 2), kPhi, -0.9);
    FAIL("expected InvalidState");
  } catch (const InvalidState& e) {
    // 1.9 I/4 - 0.9 |Phi+><Phi+| has eigenvalue 1.9/4 - 0.9 on Phi+.
    CHECK(e.min_eigenvalue() == doctest::Approx(-0.425).epsilon(1e-12));
  }
}

TEST_CASE("schmidt_decompose") {
  const SchmidtForm phi = schmidt_decompose(phi_plus());
  REQUIRE(phi.coefficients().size() == 2);
  CHECK(phi.coefficients()[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(phi.coefficients()[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  Gen g(18);
  const SchmidtForm prod = schmidt_decompose(g.product(3, 2));
  CHECK(prod.coefficients()[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 1; i < prod.coefficients().size(); ++i) CHECK(prod.coefficients()[i] < 1e-7);

  for (int trial = 0; trial < 20; ++trial) {
    const PureState psi = g.pure(3, 3);
    const std::vector<double> sq = schmidt_decompose(psi).squares();
    const CVector& v = psi.amplitudes();
    const CMatrix ra = testing::reduced_a_oracle(v * v.adjoint(), 3, 3);
    Eigen::ComplexEigenSolver<CMatrix> es(ra);
    std::vector<double> spectrum;
    for (int i = 0; i < 3; ++i) spectrum.push_back(es.eigenvalues()(i).real());
    std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
    for (int i = 0; i < 3; ++i) CHECK(sq[i] == doctest::Approx(spectrum[i]).epsilon(1e-10));
    CHECK(std::accumulate(sq.begin(), sq.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::is_sorted(sq.rbegin(), sq.rend()));
  }

  CHECK_THROWS_AS(SchmidtForm({0.5, 0.8}), DomainError);
  CHECK_THROWS_AS(SchmidtForm({0.9, 0.1}), DomainError);
}
