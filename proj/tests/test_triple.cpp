#include <doctest.h>

#include <random>

#include "ncg/triple.hpp"
#include "ncg/triple_io.hpp"

using namespace ncg;

namespace {

CMatrix random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(m);
  return qr.householderQ();
}

}  // namespace

TEST_CASE("KO sign table round trips for all eight dimensions") {
  for (int n = 0; n < 8; ++n) {
    auto signs = signs_for_KO(n);
    auto back = classify_KO(signs);
    REQUIRE(back.has_value());
    CHECK(*back == n);
    CHECK(signs.epsilon_double_prime.has_value() == (n % 2 == 0));
  }
  // Combinations outside the table.
  CHECK(!classify_KO({-1, -1, 1}).has_value());
  CHECK(!classify_KO({-1, -1, -1}).has_value());
  CHECK(!classify_KO({1, -1, 1}).has_value());
}

TEST_CASE("two-point triples with D = 0 satisfy every axiom") {
  for (int ko : {0, 2, 6}) {
    auto t = make_two_point_triple(0.0, ko);
    auto rep = verify_axioms(t);
    CHECK(rep.all_pass);
    REQUIRE(rep.ko_dimension.has_value());
    CHECK(*rep.ko_dimension == ko);
  }
}

TEST_CASE("nonzero off-diagonal Dirac on the two-point space breaks the axioms") {
  // KO 6 (and KO 0 with a real parameter): only order one fails. KO 2 also
  // breaks the JD commutation, and KO 0 does so for a complex parameter.
  auto failing = [](const FiniteTriple& t) {
    auto rep = verify_axioms(t);
    CHECK(!rep.all_pass);
    std::vector<std::string> out;
    for (const auto& c : rep.checks)
      if (!c.pass) out.push_back(c.name);
    return out;
  };
  using V = std::vector<std::string>;
  CHECK(failing(make_two_point_triple(Complex(1.5, 0.5), 6)) == V{"order_one"});
  CHECK(failing(make_two_point_triple(Complex(1.5, 0.0), 0)) == V{"order_one"});
  CHECK(failing(make_two_point_triple(Complex(1.5, 0.5), 0)) == V{"JD_sign", "order_one"});
  CHECK(failing(make_two_point_triple(Complex(1.5, 0.0), 2)) == V{"JD_sign", "order_one"});
}

TEST_CASE("four-dimensional example triple passes and classifies as KO 6") {
  auto t = make_electrodynamics_triple(Complex(0, -1));
  auto rep = verify_axioms(t);
  CHECK(rep.all_pass);
  REQUIRE(rep.ko_dimension.has_value());
  CHECK(*rep.ko_dimension == 6);
}

TEST_CASE("verify_axioms rejects dimension mismatches") {
  auto t = make_electrodynamics_triple(0.0);
  t.dirac = CMatrix::Zero(3, 3);
  CHECK_THROWS_AS(verify_axioms(t), StructuralError);
}

TEST_CASE("block form of the real structure per KO dimension") {
  SUBCASE("KO 0: diagonal, symmetric blocks") {
    auto f = real_structure_form(make_two_point_triple(0.0, 0));
    CHECK(f.ok);
    CHECK(f.pattern == RealFormPattern::Diagonal);
    CHECK(f.ko == 0);
  }
  SUBCASE("KO 2: off-diagonal, bottom block -j^T") {
    auto f = real_structure_form(make_two_point_triple(0.0, 2));
    CHECK(f.ok);
    CHECK(f.pattern == RealFormPattern::OffDiagonal);
    CHECK(f.ko == 2);
  }
  SUBCASE("KO 6: off-diagonal, bottom block +j^T") {
    auto f = real_structure_form(make_electrodynamics_triple(Complex(0, -1)));
    CHECK(f.ok);
    CHECK(f.pattern == RealFormPattern::OffDiagonal);
    CHECK(f.ko == 6);
    CHECK(f.residual < 1e-12);
  }
}

TEST_CASE("block form is stable under a unitary change of basis") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    auto t = make_electrodynamics_triple(Complex(0.3, -0.8));
    const CMatrix V = random_unitary(rng, 4);
    for (auto& a : t.rep_basis) a = V * a * V.adjoint();
    t.dirac = V * (*t.dirac) * V.adjoint();
    t.grading = V * (*t.grading) * V.adjoint();
    // J' = V J V^H as an antilinear map has unitary part V U V^T.
    t.real->unitary = V * t.real->unitary * V.transpose();
    CHECK(verify_axioms(t).all_pass);
    auto f = real_structure_form(t);
    CHECK(f.ok);
    CHECK(f.ko == 6);
  }
}

TEST_CASE("two-point space admits no off-diagonal Dirac operator") {
  for (int ko : {0, 2, 6}) {
    auto t = make_two_point_triple(0.0, ko);
    CHECK(solve_dirac_space(t).empty());
  }
}

TEST_CASE("no antiunitary with KO-4 signs exists on the two-point space") {
  // With epsilon'' = +1 the unitary part must commute with diag(1,-1),
  // hence be diagonal; then U conj(U) has nonnegative diagonal and can
  // never equal -1. Certified by sampling the constrained space.
  CMatrix g = CMatrix::Zero(2, 2);
  g.diagonal() << 1, -1;
  MatrixSpace full;
  full.rows = full.cols = 2;
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      CMatrix e = CMatrix::Zero(2, 2);
      e(i, j) = 1.0;
      full.basis.push_back(e);
      e(i, j) = Complex(0, 1);
      full.basis.push_back(e);
    }
  std::vector<RealLinearMap> cons{[g](const CMatrix& u) {
    return CMatrix(u * g.conjugate() - g * u);
  }};
  auto space = real_null_space(full, cons);
  REQUIRE(!space.empty());
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 100; ++trial) {
    CMatrix u = CMatrix::Zero(2, 2);
    for (const auto& b : space) u += gauss(rng) * b;
    const double nrm = u.norm();
    if (nrm < 1e-12) continue;
    u /= nrm;
    CHECK((u * u.conjugate() + identity(2)).cwiseAbs().maxCoeff() > 0.9);
  }
}

TEST_CASE("admissible Dirac space of the four-dimensional example is two-dimensional") {
  auto t = make_electrodynamics_triple(0.0);
  auto basis = solve_dirac_space(t);
  REQUIRE(basis.size() == 2);
  for (const auto& D : basis) {
    // Sparsity: only the (0,1)/(1,0) and (2,3)/(3,2) entries, with the
    // second pair conjugate to the first.
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 4; ++j) {
        const bool allowed = (i == 0 && j == 1) || (i == 1 && j == 0) ||
                             (i == 2 && j == 3) || (i == 3 && j == 2);
        if (!allowed) CHECK(std::abs(D(i, j)) < 1e-9);
      }
    CHECK(std::abs(D(2, 3) - std::conj(D(0, 1))) < 1e-9);
    CHECK(std::abs(D(3, 2) - std::conj(D(1, 0))) < 1e-9);
    CHECK((D - D.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
  // The bundled Dirac operator lies in the solved space: project it onto
  // the span and check the residual.
  auto withd = make_electrodynamics_triple(Complex(0.7, -0.2));
  const CMatrix& D0 = *withd.dirac;
  RMatrix G(2, 2);
  RVector rhs(2);
  auto inner = [](const CMatrix& a, const CMatrix& b) {
    return (a.adjoint() * b).trace().real();
  };
  for (int i = 0; i < 2; ++i) {
    rhs(i) = inner(basis[static_cast<size_t>(i)], D0);
    for (int j = 0; j < 2; ++j)
      G(i, j) = inner(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
  }
  RVector c = G.ldlt().solve(rhs);
  CMatrix rec = c(0) * basis[0] + c(1) * basis[1];
  CHECK((rec - D0).cwiseAbs().maxCoeff() < 1e-9);
}
