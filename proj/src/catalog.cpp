#include "fixlat/catalog.hpp"

#include <cctype>
#include <cmath>
#include <map>

namespace fixlat {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  CatalogSpec parse_all() {
    auto spec = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse group spec '" + s_ + "' at position " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a group name");
    return s_.substr(b, pos_ - b);
  }
  int integer() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected an integer");
    if (pos_ - b > 6) fail("integer too large");
    return std::stoi(s_.substr(b, pos_ - b));
  }

  CatalogSpec parse_spec() {
    CatalogSpec c;
    c.kind = ident();
    static const std::map<std::string, int> fixed = {{"A1", 0}, {"T3", 0}, {"Oct3", 0}, {"Ico3", 0},
                                                     {"A3", 0}, {"BC3", 0}, {"H3", 0}};
    static const std::map<std::string, int> param = {{"triv", 0}, {"I2", 0}, {"mu2", 0}, {"mu3", 0}, {"D3", 0}};
    if (fixed.count(c.kind)) return c;
    if (param.count(c.kind)) {
      expect(':');
      c.n = integer();
      return c;
    }
    if (c.kind == "J") {
      expect('(');
      c.args.push_back(parse_spec());
      expect(')');
      return c;
    }
    if (c.kind == "mixed") {
      expect('(');
      c.args.push_back(parse_spec());
      expect(',');
      c.args.push_back(parse_spec());
      expect(')');
      return c;
    }
    if (c.kind == "prod") {
      expect('(');
      c.args.push_back(parse_spec());
      while (eat(',')) c.args.push_back(parse_spec());
      expect(')');
      return c;
    }
    if (c.kind == "diag") {
      expect('(');
      c.args.push_back(parse_spec());
      expect(',');
      c.n = integer();
      expect(')');
      return c;
    }
    fail("unknown group name '" + c.kind + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

Mat rot2(double t) {
  Mat R(2, 2);
  R << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return R;
}

Mat rot_z(double t) { return block_diag({rot2(t), Mat::Identity(1, 1)}); }

Mat rot_x_pi() { return Eigen::Vector3d(1, -1, -1).asDiagonal().toDenseMatrix(); }

Mat cyclic3() {
  Mat P(3, 3);
  P << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  return P;
}

// Rotation by t about the unit vector u.
Mat rodrigues(Eigen::Vector3d u, double t) {
  u.normalize();
  Eigen::Matrix3d K;
  K << 0, -u.z(), u.y(), u.z(), 0, -u.x(), -u.y(), u.x(), 0;
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity() + std::sin(t) * K + (1 - std::cos(t)) * K * K;
  return R;
}

void need_param(const CatalogSpec& s, int lo) {
  if (s.n < lo) throw InvalidParameter(s.kind + " needs a parameter >= " + std::to_string(lo) + ", got " + std::to_string(s.n));
}

void check_mixed_pair(const CatalogSpec& K, const CatalogSpec& H) {
  bool ok = (K.kind == "Oct3" && H.kind == "T3") || (K.kind == "mu3" && H.kind == "mu3" && K.n == 2 * H.n) ||
            (K.kind == "D3" && H.kind == "mu3" && K.n == H.n) || (K.kind == "D3" && H.kind == "D3" && K.n == 2 * H.n);
  if (!ok)
    throw UnsupportedMixedPair("mixed(" + K.str() + "," + H.str() +
                               ") is not one of (Oct3,T3), (mu3:2m,mu3:m), (D3:m,mu3:m), (D3:2m,D3:m)");
}

FiniteLinearGroup build_raw(const CatalogSpec& s, int cap, const ToleranceProfile& tol) {
  const double tau = 2 * M_PI;
  const std::string& k = s.kind;
  if (k == "triv") {
    need_param(s, 1);
    return close({Mat::Identity(s.n, s.n)}, cap, tol);
  }
  if (k == "A1") return close({-Mat::Identity(1, 1)}, cap, tol);
  if (k == "I2") {
    need_param(s, 1);
    Mat refl = Eigen::Vector2d(1, -1).asDiagonal().toDenseMatrix();
    return close({rot2(tau / s.n), refl}, cap, tol);
  }
  if (k == "mu2") {
    need_param(s, 1);
    return close({rot2(tau / s.n)}, cap, tol);
  }
  if (k == "mu3") {
    need_param(s, 1);
    return close({rot_z(tau / s.n)}, cap, tol);
  }
  if (k == "D3") {
    need_param(s, 1);
    return close({rot_z(tau / s.n), rot_x_pi()}, cap, tol);
  }
  if (k == "T3") return close({cyclic3(), rot_x_pi()}, cap, tol);
  if (k == "Oct3") return close({rot_z(M_PI / 2), cyclic3()}, cap, tol);
  if (k == "Ico3") {
    const double phi = (1 + std::sqrt(5.0)) / 2;
    return close({cyclic3(), rot_x_pi(), rodrigues({0, 1, phi}, tau / 5)}, cap, tol);
  }
  if (k == "A3") return build(CatalogSpec::parse("mixed(Oct3,T3)"), cap, tol);
  if (k == "BC3") return build(CatalogSpec::parse("J(Oct3)"), cap, tol);
  if (k == "H3") return build(CatalogSpec::parse("J(Ico3)"), cap, tol);
  if (k == "J") return j_extension(build(s.args.at(0), cap, tol));
  if (k == "mixed") {
    check_mixed_pair(s.args.at(0), s.args.at(1));
    return mixed_group(build(s.args[0], cap, tol), build(s.args[1], cap, tol));
  }
  if (k == "prod") {
    auto G = build(s.args.at(0), cap, tol);
    for (std::size_t i = 1; i < s.args.size(); ++i) G = direct_product(G, build(s.args[i], cap, tol), cap);
    return G;
  }
  if (k == "diag") {
    need_param(s, 1);
    return diag_tensor(build(s.args.at(0), cap, tol), s.n);
  }
  throw ParseError("unknown group kind " + k);
}

}  // namespace

CatalogSpec CatalogSpec::parse(const std::string& text) { return Parser(text).parse_all(); }

std::string CatalogSpec::str() const {
  if (kind == "triv" || kind == "I2" || kind == "mu2" || kind == "mu3" || kind == "D3")
    return kind + ":" + std::to_string(n);
  if (args.empty()) return kind;
  std::string s = kind + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i].str();
  if (kind == "diag") s += "," + std::to_string(n);
  return s + ")";
}

FiniteLinearGroup build(const CatalogSpec& spec, int cap, const ToleranceProfile& tol) {
  auto G = build_raw(spec, cap, tol);
  G.set_name(spec.str());
  return G;
}

FiniteLinearGroup build(const std::string& spec, int cap, const ToleranceProfile& tol) {
  return build(CatalogSpec::parse(spec), cap, tol);
}

const std::vector<ClassificationRow>& classification_rows() {
  using P = Parity;
  static const std::vector<ClassificationRow> rows = {
      {"mu3:{n}", P::Any, "prod(mu2:{n},triv:1)", "triv:3", "mu3:{n}", 2, true},
      {"J(mu3:{n})", P::Even, "prod(mu2:{n},A1)", "prod(triv:2,A1)", "mu3:{n}", 2, false},
      {"J(mu3:{n})", P::Odd, "", "triv:3", "mu3:{n}", 3, true},
      {"mixed(mu3:{2n},mu3:{n})", P::Even, "", "triv:3", "mu3:{n}", 3, true},
      {"mixed(mu3:{2n},mu3:{n})", P::Odd, "prod(mu2:{n},A1)", "prod(triv:2,A1)", "mu3:{n}", 2, false},
      {"mixed(D3:{n},mu3:{n})", P::Any, "prod(I2:{n},triv:1)", "prod(I2:{n},triv:1)", "mu3:{n}", 1, true},
      {"D3:{n}", P::Any, "", "triv:3", "D3:{n}", 2, true},
      {"J(D3:{n})", P::Even, "prod(I2:{n},A1)", "prod(I2:{n},A1)", "D3:{n}", 1, true},
      {"J(D3:{n})", P::Odd, "", "prod(I2:{n},triv:1)", "D3:{n}", 2, false},
      {"mixed(D3:{2n},D3:{n})", P::Even, "", "prod(I2:{n},triv:1)", "D3:{n}", 2, false},
      {"mixed(D3:{2n},D3:{n})", P::Odd, "prod(I2:{n},A1)", "prod(I2:{n},A1)", "D3:{n}", 1, true},
      {"T3", P::Any, "", "triv:3", "T3", 2, true},
      {"J(T3)", P::Any, "", "prod(A1,A1,A1)", "T3", 2, false},
      {"mixed(Oct3,T3)", P::Any, "A3", "A3", "T3", 1, true},
      {"Oct3", P::Any, "", "triv:3", "Oct3", 2, true},
      {"J(Oct3)", P::Any, "BC3", "BC3", "Oct3", 1, true},
      {"Ico3", P::Any, "", "triv:3", "Ico3", 2, true},
      {"J(Ico3)", P::Any, "H3", "H3", "Ico3", 1, true},
  };
  return rows;
}

std::string instantiate(const std::string& tmpl, int n) {
  std::string out = tmpl;
  auto sub = [&](const std::string& pat, int v) {
    for (std::size_t p; (p = out.find(pat)) != std::string::npos;) out.replace(p, pat.size(), std::to_string(v));
  };
  sub("{2n}", 2 * n);
  sub("{n}", n);
  return out;
}

bool parity_ok(Parity p, int n) {
  return p == Parity::Any || (p == Parity::Even && n % 2 == 0) || (p == Parity::Odd && n % 2 != 0);
}

const char* to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even n";
    case Parity::Odd: return "odd n";
    default: return "";
  }
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> e = {
      {"triv:k", "k >= 1", "trivial group in R^k", false},
      {"A1", "", "reflection group of rank 1, {+1,-1} in R^1", false},
      {"I2:n", "n >= 1", "dihedral reflection group of order 2n in R^2", false},
      {"mu2:n", "n >= 1", "rotations by multiples of 2pi/n in R^2", false},
      {"mu3:n", "n >= 1", "cyclic rotation group about the z-axis in R^3", true},
      {"D3:n", "n >= 1", "dihedral rotation group of order 2n in R^3", true},
      {"T3", "", "rotation group of the regular tetrahedron, order 12", true},
      {"Oct3", "", "rotation group of the cube, order 24", true},
      {"Ico3", "", "rotation group of the icosahedron, order 60", true},
      {"A3", "", "reflection group mixed(Oct3,T3), order 24", false},
      {"BC3", "", "reflection group J(Oct3), order 48", false},
      {"H3", "", "reflection group J(Ico3), order 120", false},
      {"J(G)", "G without -I", "group generated by G and -I", false},
      {"mixed(K,H)", "(Oct3,T3), (mu3:2m,mu3:m), (D3:m,mu3:m), (D3:2m,D3:m)", "H together with -g for g in K\\H",
       false},
      {"prod(G,H,...)", "", "block-diagonal direct product", false},
      {"diag(G,m)", "m >= 1", "g acting diagonally on m copies", false},
  };
  return e;
}

}  // namespace fixlat
