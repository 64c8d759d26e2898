#include "hfischer/operators.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace hfischer {

namespace {

enum class Side { Wedge, Dot };

/// Generator e_j acting on blade b falls into the outer part when j is not in b and
/// into the inner part otherwise; e_j b is then a single signed blade.
bool lands_in(Side side, Blade b, int j) { return (side == Side::Dot) == b.contains(j); }

/// sum_j e_j (op) d_j P
CliffordPoly split_dirac(const CliffordPoly& p, Side side) {
  const int m = p.dimension();
  CliffordPoly out(m);
  for (const auto& [mono, q] : p.terms()) {
    for (int j = 1; j <= m; ++j) {
      if (mono.alpha[j - 1] == 0 || !lands_in(side, mono.blade, j)) continue;
      const auto [sign, blade] = blade_product_unchecked(Blade::from_mask(1U << (j - 1)), mono.blade);
      Rational c = q * mono.alpha[j - 1];
      if (sign < 0) c = -c;
      out.add_term({*mono.alpha.lowered(j), blade}, c);
    }
  }
  return out;
}

/// sum_j x_j e_j (op) P
CliffordPoly split_x(const CliffordPoly& p, Side side) {
  const int m = p.dimension();
  CliffordPoly out(m);
  for (const auto& [mono, q] : p.terms()) {
    for (int j = 1; j <= m; ++j) {
      if (!lands_in(side, mono.blade, j)) continue;
      const auto [sign, blade] = blade_product_unchecked(Blade::from_mask(1U << (j - 1)), mono.blade);
      out.add_term({mono.alpha.raised(j), blade}, sign < 0 ? Rational(-q) : q);
    }
  }
  return out;
}

template <typename Weight>
CliffordPoly diagonal(const CliffordPoly& p, Weight weight) {
  CliffordPoly out(p.dimension());
  for (const auto& [mono, q] : p.terms()) out.add_term(mono, q * weight(mono));
  return out;
}

CliffordPoly grade_parity(const CliffordPoly& p) {
  return diagonal(p, [](const Monomial& mono) { return mono.blade.grade() % 2 ? -1 : 1; });
}

}  // namespace

CliffordPoly dirac_plus(const CliffordPoly& p) { return split_dirac(p, Side::Wedge); }
CliffordPoly dirac_minus(const CliffordPoly& p) { return split_dirac(p, Side::Dot); }
CliffordPoly dirac(const CliffordPoly& p) { return dirac_plus(p) + dirac_minus(p); }
CliffordPoly dirac_tilde(const CliffordPoly& p) { return dirac_plus(p) - dirac_minus(p); }
CliffordPoly dirac_right(const CliffordPoly& p) { return dirac_tilde(grade_parity(p)); }

CliffordPoly x_mul(const CliffordPoly& p, XMode mode) {
  switch (mode) {
    case XMode::Wedge:
      return split_x(p, Side::Wedge);
    case XMode::Dot:
      return split_x(p, Side::Dot);
    case XMode::Full:
      return split_x(p, Side::Wedge) + split_x(p, Side::Dot);
  }
  throw std::logic_error("unreachable XMode");
}

CliffordPoly sandwich_x(const CliffordPoly& p) {
  const CliffordPoly q = grade_parity(p);
  return split_x(split_x(q, Side::Wedge), Side::Dot) - split_x(split_x(q, Side::Dot), Side::Wedge);
}

namespace by_definition {

CliffordPoly dirac_left(const CliffordPoly& p) {
  const int m = p.dimension();
  CliffordPoly out(m);
  for (int j = 1; j <= m; ++j) out += p.partial(j).left_multiply(Multivector::basis(m, Blade::generator(j, m)));
  return out;
}

CliffordPoly dirac_right(const CliffordPoly& p) {
  const int m = p.dimension();
  CliffordPoly out(m);
  for (int j = 1; j <= m; ++j) out += p.partial(j).right_multiply(Multivector::basis(m, Blade::generator(j, m)));
  return out;
}

CliffordPoly sandwich_x(const CliffordPoly& p) {
  const CliffordPoly x = CliffordPoly::vector_variable(p.dimension());
  return x * p * x;
}

CliffordPoly euler(const CliffordPoly& p) {
  CliffordPoly out(p.dimension());
  for (int j = 1; j <= p.dimension(); ++j) out += p.partial(j).times_variable(j);
  return out;
}

namespace {

/// e_j . P and e_j ^ P through the half-sum formulas of the split product.
CliffordPoly split_generator(const CliffordPoly& p, int j, bool inner) {
  const int m = p.dimension();
  const Multivector ej = Multivector::basis(m, Blade::generator(j, m));
  CliffordPoly out(m);
  for (const auto& [mono, q] : p.terms()) {
    const SplitProduct sp = vector_split_product(ej, Multivector::basis(m, mono.blade, q));
    for (const auto& [b, c] : (inner ? sp.inner : sp.outer).terms()) out.add_term({mono.alpha, b}, c);
  }
  return out;
}

}  // namespace

CliffordPoly ferm_plus(const CliffordPoly& p) {
  CliffordPoly out(p.dimension());
  for (int j = 1; j <= p.dimension(); ++j) out -= split_generator(split_generator(p, j, true), j, false);
  return out;
}

CliffordPoly ferm_minus(const CliffordPoly& p) {
  CliffordPoly out(p.dimension());
  for (int j = 1; j <= p.dimension(); ++j) out -= split_generator(split_generator(p, j, false), j, true);
  return out;
}

CliffordPoly laplacian(const CliffordPoly& p) {
  CliffordPoly out(p.dimension());
  for (int j = 1; j <= p.dimension(); ++j) out += p.partial(j).partial(j);
  return out;
}

}  // namespace by_definition

std::string_view primitive_name(Primitive p) {
  switch (p) {
    case Primitive::Identity: return "I";
    case Primitive::DPlus: return "dplus";
    case Primitive::DMinus: return "dminus";
    case Primitive::XWedge: return "xwedge";
    case Primitive::XDot: return "xdot";
    case Primitive::Euler: return "E";
    case Primitive::FermPlus: return "ferm_plus";
    case Primitive::FermMinus: return "ferm_minus";
    case Primitive::Parity: return "parity";
  }
  return "?";
}

OperatorSpec::OperatorSpec() : OperatorSpec(Primitive::Identity) {}

OperatorSpec::OperatorSpec(Primitive p) {
  auto node = std::make_shared<Node>();
  node->primitive = p;
  node_ = std::move(node);
}

OperatorSpec OperatorSpec::compose(const OperatorSpec& outer, const OperatorSpec& inner) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Compose;
  node->children = {outer, inner};
  return OperatorSpec(std::move(node));
}

OperatorSpec OperatorSpec::sum(const OperatorSpec& a, const OperatorSpec& b) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Sum;
  node->children = {a, b};
  return OperatorSpec(std::move(node));
}

OperatorSpec OperatorSpec::scaled(const Rational& c, const OperatorSpec& a) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Scaled;
  node->factor = c;
  node->children = {a};
  return OperatorSpec(std::move(node));
}

std::string OperatorSpec::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Leaf:
      return std::string(primitive_name(n.primitive));
    case Node::Kind::Compose:
      return n.children[0].to_string() + " o " + n.children[1].to_string();
    case Node::Kind::Sum:
      return "(" + n.children[0].to_string() + " + " + n.children[1].to_string() + ")";
    case Node::Kind::Scaled:
      return hfischer::to_string(n.factor) + "*(" + n.children[0].to_string() + ")";
  }
  return "?";
}

namespace {

std::string normalize_name(std::string_view name) {
  std::string out;
  for (char c : name) out.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return out;
}

const std::map<std::string, OperatorSpec, std::less<>>& derived_table() {
  static const auto table = [] {
    using namespace ops;
    const OperatorSpec a = euler() + ferm_plus();
    const OperatorSpec b = euler() + ferm_minus();
    std::map<std::string, OperatorSpec, std::less<>> t;
    t.emplace("DPLUS", dplus());
    t.emplace("DMINUS", dminus());
    t.emplace("XWEDGE", xwedge());
    t.emplace("XDOT", xdot());
    t.emplace("XFULL", xwedge() + xdot());
    t.emplace("DIRAC", dplus() + dminus());
    t.emplace("DIRAC_TILDE", dplus() - dminus());
    t.emplace("DIRAC_RIGHT", (dplus() - dminus()) * parity());
    t.emplace("LAPLACIAN", -1 * (dplus() * dminus() + dminus() * dplus()));
    t.emplace("LAPLACIAN_TILDE", -1 * (dplus() * dminus() - dminus() * dplus()));
    t.emplace("EULER", euler());
    t.emplace("FERM_PLUS", ferm_plus());
    t.emplace("FERM_MINUS", ferm_minus());
    t.emplace("A", a);
    t.emplace("B", b);
    t.emplace("X", xwedge() * a - xdot() * b);
    t.emplace("X_TILDE", xwedge() * a + xdot() * b);
    t.emplace("NORM_SQUARED", -1 * (xwedge() * xdot() + xdot() * xwedge()));
    t.emplace("SANDWICH_X", (xdot() * xwedge() - xwedge() * xdot()) * parity());
    t.emplace("PARITY", parity());
    t.emplace("IDENTITY", identity());
    return t;
  }();
  return table;
}

CliffordPoly apply_primitive(Primitive prim, const CliffordPoly& p) {
  const int m = p.dimension();
  switch (prim) {
    case Primitive::Identity: return p;
    case Primitive::DPlus: return dirac_plus(p);
    case Primitive::DMinus: return dirac_minus(p);
    case Primitive::XWedge: return x_mul(p, XMode::Wedge);
    case Primitive::XDot: return x_mul(p, XMode::Dot);
    case Primitive::Euler: return diagonal(p, [](const Monomial& t) { return t.alpha.degree(); });
    case Primitive::FermPlus: return diagonal(p, [](const Monomial& t) { return t.blade.grade(); });
    case Primitive::FermMinus: return diagonal(p, [m](const Monomial& t) { return m - t.blade.grade(); });
    case Primitive::Parity: return grade_parity(p);
  }
  throw std::logic_error("unreachable primitive");
}

Bidegree shift_of(Primitive prim) {
  switch (prim) {
    case Primitive::DPlus: return {-1, 1};
    case Primitive::DMinus: return {-1, -1};
    case Primitive::XWedge: return {1, 1};
    case Primitive::XDot: return {1, -1};
    default: return {0, 0};
  }
}

}  // namespace

OperatorSpec derived_operator(std::string_view name) {
  const auto& table = derived_table();
  const auto it = table.find(normalize_name(name));
  if (it == table.end()) throw std::invalid_argument("unknown operator: " + std::string(name));
  return it->second;
}

std::vector<std::string> derived_operator_names() {
  std::vector<std::string> out;
  for (const auto& [name, op] : derived_table()) out.push_back(name);
  return out;
}

CliffordPoly apply(const OperatorSpec& op, const CliffordPoly& p) {
  const auto& n = op.node();
  switch (n.kind) {
    case OperatorSpec::Node::Kind::Leaf:
      return apply_primitive(n.primitive, p);
    case OperatorSpec::Node::Kind::Compose:
      return apply(n.children[0], apply(n.children[1], p));
    case OperatorSpec::Node::Kind::Sum:
      return apply(n.children[0], p) + apply(n.children[1], p);
    case OperatorSpec::Node::Kind::Scaled:
      return n.factor * apply(n.children[0], p);
  }
  throw std::logic_error("unreachable node kind");
}

std::set<Bidegree> target_bidegrees(const OperatorSpec& op, int m, const std::set<Bidegree>& inputs) {
  const auto& n = op.node();
  switch (n.kind) {
    case OperatorSpec::Node::Kind::Leaf: {
      const Bidegree d = shift_of(n.primitive);
      std::set<Bidegree> out;
      for (const auto& b : inputs) {
        const Bidegree t{b.k + d.k, b.s + d.s};
        if (t.k >= 0 && t.s >= 0 && t.s <= m) out.insert(t);
      }
      return out;
    }
    case OperatorSpec::Node::Kind::Compose:
      return target_bidegrees(n.children[0], m, target_bidegrees(n.children[1], m, inputs));
    case OperatorSpec::Node::Kind::Sum: {
      auto out = target_bidegrees(n.children[0], m, inputs);
      out.merge(target_bidegrees(n.children[1], m, inputs));
      return out;
    }
    case OperatorSpec::Node::Kind::Scaled:
      return target_bidegrees(n.children[0], m, inputs);
  }
  throw std::logic_error("unreachable node kind");
}

OmegaWord::OmegaWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1]) throw std::invalid_argument("Omega-word letters must alternate");
  }
}

OmegaWord OmegaWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  for (char c : text) {
    if (c == 'w') {
      letters.push_back(Letter::Wedge);
    } else if (c == 'd') {
      letters.push_back(Letter::Dot);
    } else {
      throw std::invalid_argument("word letters must be 'w' (wedge) or 'd' (dot), got '" + std::string(1, c) + "'");
    }
  }
  return OmegaWord(std::move(letters));
}

int OmegaWord::grade_shift() const {
  int shift = 0;
  for (Letter l : letters_) shift += l == Letter::Wedge ? 1 : -1;
  return shift;
}

std::optional<Letter> OmegaWord::first_acting() const {
  if (letters_.empty()) return std::nullopt;
  return letters_.back();
}

std::string OmegaWord::to_string() const {
  std::string out;
  for (Letter l : letters_) out.push_back(l == Letter::Wedge ? 'w' : 'd');
  return out;
}

OperatorSpec OmegaWord::as_operator() const {
  OperatorSpec out = ops::identity();
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out = (*it == Letter::Wedge ? ops::xwedge() : ops::xdot()) * out;
  }
  return out;
}

CliffordPoly word_apply(const OmegaWord& w, const CliffordPoly& p) {
  CliffordPoly out = p;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out = x_mul(out, *it == Letter::Wedge ? XMode::Wedge : XMode::Dot);
  }
  return out;
}

RotorElement::RotorElement(std::vector<Multivector> factors)
    : m_(factors.empty() ? 0 : factors.front().dimension()),
      factors_(std::move(factors)),
      value_(factors_.empty() ? Multivector(1) : Multivector(m_)),
      inverse_(value_) {
  if (factors_.empty()) throw std::invalid_argument("rotor needs at least one factor");
  value_ = Multivector::scalar(m_, 1);
  inverse_ = Multivector::scalar(m_, 1);
  const Multivector minus_one = Multivector::scalar(m_, -1);
  for (const auto& u : factors_) {
    if (u.dimension() != m_) throw std::invalid_argument("rotor factors have mixed dimensions");
    if (u.is_zero() || !u.is_homogeneous(1)) throw std::invalid_argument("rotor factor is not a 1-vector");
    if (u * u != minus_one) throw std::invalid_argument("rotor factor is not a unit vector");
    value_ = value_ * u;
    inverse_ = (-u) * inverse_;  // u^{-1} = -u
  }
  matrix_.assign(m_, std::vector<Rational>(m_));
  for (int j = 1; j <= m_; ++j) {
    const Multivector image = inverse_ * Multivector::basis(m_, Blade::generator(j, m_)) * value_;
    if (!image.is_homogeneous(1)) throw std::logic_error("conjugation did not preserve vectors");
    for (int i = 1; i <= m_; ++i) matrix_[i - 1][j - 1] = image.coefficient(Blade::generator(i, m_));
  }
}

CliffordPoly h_action(const RotorElement& r, const CliffordPoly& p) {
  const int m = p.dimension();
  if (r.dimension() != m) throw std::invalid_argument("rotor and polynomial dimensions differ");
  const auto& mat = r.conjugation_matrix();

  // y_i = (r^{-1} x r)_i as scalar linear polynomials, with cached powers.
  std::vector<std::vector<CliffordPoly>> powers(m);
  for (int i = 0; i < m; ++i) {
    CliffordPoly y(m);
    for (int j = 0; j < m; ++j) y.add_term({MultiIndex::unit(m, j + 1), Blade{}}, mat[i][j]);
    powers[i].push_back(CliffordPoly::constant(Multivector::scalar(m, 1)));
    powers[i].push_back(std::move(y));
  }
  auto power = [&](int i, int e) -> const CliffordPoly& {
    while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };

  std::map<Blade, CliffordPoly> conjugated;  // r e_B r^{-1}
  CliffordPoly out(m);
  for (const auto& [mono, q] : p.terms()) {
    auto it = conjugated.find(mono.blade);
    if (it == conjugated.end()) {
      const Multivector v = r.value() * Multivector::basis(m, mono.blade) * r.inverse();
      it = conjugated.emplace(mono.blade, CliffordPoly::constant(v)).first;
    }
    CliffordPoly term = q * it->second;
    for (int i = 0; i < m; ++i) {
      if (mono.alpha[i] > 0) term = power(i, mono.alpha[i]) * term;
    }
    out += term;
  }
  return out;
}

Multivector rational_unit_vector(int m, std::span<const Rational> t) {
  check_dimension(m);
  if (t.size() != static_cast<std::size_t>(m - 1)) throw std::invalid_argument("need m-1 parameters");
  Rational n = 0;
  for (const auto& ti : t) n += ti * ti;
  std::vector<Rational> coords;
  for (const auto& ti : t) coords.push_back(2 * ti / (n + 1));
  coords.push_back((n - 1) / (n + 1));
  return Multivector::vector(m, coords);
}

}  // namespace hfischer
