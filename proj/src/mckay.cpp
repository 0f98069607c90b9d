#include "kacwreath/mckay.hpp"

#include <utility>

namespace kw {

GammaDescriptor GammaDescriptor::trivial() { return {GroupKind::Trivial, 0, 0, 1}; }

GammaDescriptor GammaDescriptor::cyclic(int ell) {
  if (ell < 2) throw InputError("cyclic group needs l >= 2");
  return {GroupKind::Cyclic, ell, ell - 1, ell};
}

GammaDescriptor GammaDescriptor::binary_dihedral(int d) {
  if (d < 2) throw InputError("binary dihedral group needs d >= 2");
  return {GroupKind::BinaryDihedral, d, d + 2, 4L * d};
}

GammaDescriptor GammaDescriptor::binary_tetrahedral() { return {GroupKind::BinaryTetrahedral, 0, 6, 24}; }
GammaDescriptor GammaDescriptor::binary_octahedral() { return {GroupKind::BinaryOctahedral, 0, 7, 48}; }
GammaDescriptor GammaDescriptor::binary_icosahedral() { return {GroupKind::BinaryIcosahedral, 0, 8, 120}; }

namespace {

int parse_param(const std::string& name, std::size_t colon) {
  const std::string tail = name.substr(colon + 1);
  if (tail.empty() || tail.size() > 6) throw InputError("bad group parameter in \"" + name + "\"");
  for (char ch : tail)
    if (ch < '0' || ch > '9') throw InputError("bad group parameter in \"" + name + "\"");
  return std::stoi(tail);
}

}  // namespace

GammaDescriptor GammaDescriptor::parse(const std::string& name) {
  if (name == "trivial") return trivial();
  if (name == "binary_tetrahedral") return binary_tetrahedral();
  if (name == "binary_octahedral") return binary_octahedral();
  if (name == "binary_icosahedral") return binary_icosahedral();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    if (head == "cyclic") return cyclic(parse_param(name, colon));
    if (head == "binary_dihedral") return binary_dihedral(parse_param(name, colon));
  }
  throw InputError("unknown group \"" + name + "\"");
}

std::string GammaDescriptor::name() const {
  switch (kind) {
    case GroupKind::Trivial: return "trivial";
    case GroupKind::Cyclic: return "cyclic:" + std::to_string(param);
    case GroupKind::BinaryDihedral: return "binary_dihedral:" + std::to_string(param);
    case GroupKind::BinaryTetrahedral: return "binary_tetrahedral";
    case GroupKind::BinaryOctahedral: return "binary_octahedral";
    case GroupKind::BinaryIcosahedral: return "binary_icosahedral";
  }
  return "?";
}

IntMatrix AffineDynkin::finite_cartan() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i < size(); ++i) idx.push_back(i);
  return cartan.principal(idx);
}

namespace {

AffineDynkin from_edges(std::string type, std::size_t n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<long> marks) {
  AffineDynkin d;
  d.type = std::move(type);
  d.adjacency = IntMatrix(n, n);
  for (auto [a, b] : edges) {
    d.adjacency(a, b) = 1;
    d.adjacency(b, a) = 1;
  }
  d.cartan = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.cartan(i, j) = (i == j ? 2 : 0) - d.adjacency(i, j);
  d.marks = std::move(marks);
  return d;
}

}  // namespace

AffineDynkin affine_dynkin(const GammaDescriptor& g) {
  switch (g.kind) {
    case GroupKind::Trivial: {
      AffineDynkin d;
      d.type = "trivial";
      d.adjacency = IntMatrix(1, 1);
      d.cartan = IntMatrix(1, 1);
      d.marks = {1};
      return d;
    }
    case GroupKind::Cyclic: {
      const int ell = g.param;
      const std::string type = "A" + std::to_string(ell - 1) + "^(1)";
      if (ell == 2) {
        AffineDynkin d = from_edges(type, 2, {}, {1, 1});
        d.cartan(0, 1) = -2;
        d.cartan(1, 0) = -2;
        return d;
      }
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < ell; ++i) edges.emplace_back(i, (i + 1) % ell);
      return from_edges(type, ell, edges, std::vector<long>(ell, 1));
    }
    case GroupKind::BinaryDihedral: {
      // D_n^(1), n = d + 2: chain 1-2-...-(n-2), n-1 and n hang off n-2, 0 hangs off 2.
      const int n = g.param + 2;
      std::vector<std::pair<int, int>> edges{{0, 2}};
      for (int i = 1; i + 1 <= n - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n - 1);
      edges.emplace_back(n - 2, n);
      std::vector<long> marks(n + 1, 2);
      marks[0] = marks[1] = marks[n - 1] = marks[n] = 1;
      return from_edges("D" + std::to_string(n) + "^(1)", n + 1, edges, marks);
    }
    case GroupKind::BinaryTetrahedral:
      return from_edges("E6^(1)", 7, {{0, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}}, {1, 1, 2, 2, 3, 2, 1});
    case GroupKind::BinaryOctahedral:
      return from_edges("E7^(1)", 8, {{0, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}},
                        {1, 2, 2, 3, 4, 3, 2, 1});
    case GroupKind::BinaryIcosahedral:
      return from_edges("E8^(1)", 9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}},
                        {1, 2, 3, 4, 5, 6, 4, 2, 3});
  }
  throw InputError("unknown group kind");
}

// ---------------------------------------------------------------------------
// Cyclotomic numbers

Cyclotomic::Cyclotomic(int ell) : ell_(ell), coeffs_(ell) {
  if (ell < 1) throw InputError("cyclotomic order must be positive");
}

Cyclotomic::Cyclotomic(int ell, std::vector<Rational> coeffs) : Cyclotomic(ell) {
  // Fold into degrees < l using x^l = 1.
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i % ell] += coeffs[i];
}

Cyclotomic Cyclotomic::rational(int ell, const Rational& q) {
  Cyclotomic z(ell);
  z.coeffs_[0] = q;
  return z;
}

std::vector<Rational> Cyclotomic::canonical() const {
  const QPolynomial phi = cyclotomic(static_cast<unsigned>(ell_));
  const std::size_t dp = static_cast<std::size_t>(phi.degree());
  std::vector<Rational> v = coeffs_;
  for (std::size_t d = v.size(); d-- > dp;) {
    if (v[d] == 0) continue;
    const Rational f = v[d];  // phi is monic
    for (std::size_t j = 0; j <= dp; ++j) v[d - dp + j] -= f * Rational(phi.coeff(j));
  }
  v.resize(dp);
  return v;
}

bool Cyclotomic::is_rational() const {
  const auto v = canonical();
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw ArithmeticError("cyclotomic number is not rational");
  const auto v = canonical();
  return v.empty() ? Rational(0) : v[0];
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.ell_ == b.ell_ && a.canonical() == b.canonical();
}

std::string Cyclotomic::to_string() const {
  const auto v = canonical();
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + kw::to_string(v[i]) + ")";
    if (i >= 1) out += "z";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

void require_cyclic(const GammaDescriptor& g, std::size_t len) {
  if (!g.is_cyclic()) throw UnsupportedRegime("character transform is implemented only for cyclic groups");
  if (len != static_cast<std::size_t>(g.param)) throw InputError("class function length must equal l");
}

// sum_j zeta^{sign*i*j} v_j, each v_j itself an element of Q[x]/(x^l-1).
std::vector<Cyclotomic> dft(int ell, const std::vector<Cyclotomic>& v, int sign, const Rational& scale) {
  std::vector<Cyclotomic> out;
  out.reserve(ell);
  for (int i = 0; i < ell; ++i) {
    std::vector<Rational> acc(ell);
    for (int j = 0; j < ell; ++j) {
      const int shift = ((sign * i * j) % ell + ell) % ell;
      const auto& cj = v[j].coeffs();
      for (int t = 0; t < ell; ++t) acc[(t + shift) % ell] += scale * cj[t];
    }
    out.emplace_back(ell, std::move(acc));
  }
  return out;
}

}  // namespace

std::vector<Cyclotomic> lambda_from_c(const GammaDescriptor& g, const CyclicClassFunction& c) {
  require_cyclic(g, c.size());
  for (const auto& x : c)
    if (x.ell() != g.param) throw InputError("class function values live in the wrong cyclotomic field");
  return dft(g.param, c, 1, make_rational(1, g.param));
}

CyclicClassFunction c_from_lambda(const GammaDescriptor& g, const std::vector<Cyclotomic>& lambda) {
  require_cyclic(g, lambda.size());
  for (const auto& x : lambda)
    if (x.ell() != g.param) throw InputError("weight coordinates live in the wrong cyclotomic field");
  return dft(g.param, lambda, -1, Rational(1));
}

Rational c0_from_lambda(const AffineDynkin& d, const std::vector<Rational>& lambda) {
  if (lambda.size() != d.size()) throw InputError("lambda length does not match the diagram");
  Rational s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += Rational(d.marks[i]) * lambda[i];
  return s;
}

std::vector<BigInt> center_group(const GammaDescriptor& g) {
  if (g.kind == GroupKind::Trivial) throw InputError("trivial group has an empty finite diagram");
  const SmithResult snf = smith_normal_form(affine_dynkin(g).finite_cartan());
  std::vector<BigInt> out;
  for (const auto& f : snf.invariant_factors)
    if (f > 1) out.push_back(f);
  return out;
}

}  // namespace kw
