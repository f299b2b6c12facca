#include "ncg/triple_io.hpp"

#include <fstream>

#include <json.hpp>

namespace ncg {

namespace {

using nlohmann::json;

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw StructuralError("matrix must be a nonempty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw StructuralError("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& e = row.at(static_cast<size_t>(c));
      if (!e.is_array() || e.size() != 2) throw StructuralError("entry must be [re, im]");
      m(i, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(i, c).real(), m(i, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

int sign_field(const json& j, const char* name) {
  const int v = j.at(name).get<int>();
  if (v != 1 && v != -1) throw StructuralError(std::string(name) + " must be +-1");
  return v;
}

}  // namespace

FiniteTriple parse_triple(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("bad JSON: ") + e.what());
  }
  try {
    FiniteTriple t;
    t.hilbert_dim = j.at("hilbert_dim").get<Eigen::Index>();
    for (const auto& s : j.at("algebra_summands"))
      t.algebra_summands.push_back(s.get<Eigen::Index>());
    for (const auto& m : j.at("rep_basis")) t.rep_basis.push_back(matrix_from_json(m));
    if (j.contains("dirac") && !j.at("dirac").is_null())
      t.dirac = matrix_from_json(j.at("dirac"));
    if (j.contains("grading") && !j.at("grading").is_null())
      t.grading = matrix_from_json(j.at("grading"));
    if (j.contains("real") && !j.at("real").is_null()) {
      const auto& r = j.at("real");
      RealStructure rs;
      rs.unitary = matrix_from_json(r.at("unitary"));
      rs.signs.epsilon = sign_field(r, "epsilon");
      rs.signs.epsilon_prime = sign_field(r, "epsilon_prime");
      if (r.contains("epsilon_double_prime") && !r.at("epsilon_double_prime").is_null())
        rs.signs.epsilon_double_prime = sign_field(r, "epsilon_double_prime");
      t.real = std::move(rs);
    }
    if (j.contains("tol") && !j.at("tol").is_null()) {
      t.tol.eps = j.at("tol").get<double>();
      if (!(t.tol.eps > 0)) throw StructuralError("tol must be positive");
    }
    return t;
  } catch (const json::exception& e) {
    throw StructuralError(std::string("bad triple document: ") + e.what());
  }
}

FiniteTriple load_triple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_triple(text);
}

std::string triple_to_json(const FiniteTriple& t) {
  json j;
  j["hilbert_dim"] = t.hilbert_dim;
  j["algebra_summands"] = t.algebra_summands;
  j["rep_basis"] = json::array();
  for (const auto& m : t.rep_basis) j["rep_basis"].push_back(matrix_to_json(m));
  j["dirac"] = t.dirac ? matrix_to_json(*t.dirac) : json();
  j["grading"] = t.grading ? matrix_to_json(*t.grading) : json();
  if (t.real) {
    json r;
    r["unitary"] = matrix_to_json(t.real->unitary);
    r["epsilon"] = t.real->signs.epsilon;
    r["epsilon_prime"] = t.real->signs.epsilon_prime;
    r["epsilon_double_prime"] = t.real->signs.epsilon_double_prime
                                    ? json(*t.real->signs.epsilon_double_prime)
                                    : json();
    j["real"] = std::move(r);
  } else {
    j["real"] = json();
  }
  j["tol"] = t.tol.eps;
  return j.dump(2);
}

FiniteTriple make_two_point_triple(Complex t_param, int ko) {
  FiniteTriple t;
  t.hilbert_dim = 2;
  t.algebra_summands = {1, 1};
  CMatrix p = CMatrix::Zero(2, 2), q = CMatrix::Zero(2, 2);
  p(0, 0) = 1;
  q(1, 1) = 1;
  t.rep_basis = {p, q};
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 1) = t_param;
  d(1, 0) = std::conj(t_param);
  t.dirac = d;
  CMatrix g = CMatrix::Zero(2, 2);
  g.diagonal() << 1, -1;
  t.grading = g;
  RealStructure rs;
  rs.signs = signs_for_KO(ko);
  CMatrix u(2, 2);
  switch (ko) {
    case 0: u = identity(2); break;
    case 2: u << 0, 1, -1, 0; break;
    case 6: u << 0, 1, 1, 0; break;
    default: throw StructuralError("no admissible two-point real structure for this KO");
  }
  rs.unitary = u;
  t.real = std::move(rs);
  return t;
}

FiniteTriple make_electrodynamics_triple(Complex d) {
  FiniteTriple t;
  t.hilbert_dim = 4;
  t.algebra_summands = {1, 1};
  CMatrix p = CMatrix::Zero(4, 4), q = CMatrix::Zero(4, 4);
  p(0, 0) = p(1, 1) = 1;
  q(2, 2) = q(3, 3) = 1;
  t.rep_basis = {p, q};
  CMatrix D = CMatrix::Zero(4, 4);
  D(0, 1) = d;
  D(1, 0) = std::conj(d);
  D(2, 3) = std::conj(d);
  D(3, 2) = d;
  t.dirac = D;
  CMatrix g = CMatrix::Zero(4, 4);
  g.diagonal() << 1, -1, -1, 1;
  t.grading = g;
  RealStructure rs;
  rs.signs = signs_for_KO(6);
  CMatrix u = CMatrix::Zero(4, 4);
  u(2, 0) = u(3, 1) = u(0, 2) = u(1, 3) = 1;
  rs.unitary = u;
  t.real = std::move(rs);
  return t;
}

}  // namespace ncg
