#include "omalous/chow.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace omalous {

namespace {

struct SignedMonomial {
  Monomial mono;
  int sign;
};

// Product of two basis monomials under the family's relations, or nullopt
// when the product vanishes.
std::optional<SignedMonomial> multiply(const VarietySpec& variety, Monomial x, Monomial y) {
  if (x.degree == 0) return SignedMonomial{y, 1};
  if (y.degree == 0) return SignedMonomial{x, 1};
  const int degree = x.degree + y.degree;
  if (degree > variety.dimension()) return std::nullopt;
  switch (variety.family()) {
    case Family::hypersurface:
    case Family::cicy:
      return SignedMonomial{Monomial::hyperplane_power(degree), 1};
    case Family::blowup:
      // Only divisor * divisor survives; the intersection form is diagonal
      // with H^2 = 1 and E_i^2 = -1.
      if (x.index != y.index) return std::nullopt;
      return SignedMonomial{Monomial::point(), x.index == 0 ? 1 : -1};
    case Family::product: {
      const auto& p = variety.as<ProductPP>();
      const int h2_exp = x.index + y.index;
      const int h1_exp = degree - h2_exp;
      if (h1_exp > p.n || h2_exp > p.m) return std::nullopt;
      return SignedMonomial{Monomial::product(h1_exp, h2_exp), 1};
    }
  }
  return std::nullopt;
}

void require_family(const VarietySpec& variety, bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(what) + " is not a generator on " + variety.label());
}

}  // namespace

bool is_valid_monomial(const VarietySpec& variety, Monomial mono) {
  if (mono.degree < 0 || mono.degree > variety.dimension()) return false;
  switch (variety.family()) {
    case Family::hypersurface:
    case Family::cicy:
      return mono.index == 0;
    case Family::blowup:
      if (mono.degree == 1) return mono.index >= 0 && mono.index <= variety.as<BlowupPlane>().n;
      return mono.index == 0;
    case Family::product: {
      const auto& p = variety.as<ProductPP>();
      const int h2_exp = mono.index;
      const int h1_exp = mono.degree - h2_exp;
      return h2_exp >= 0 && h1_exp >= 0 && h1_exp <= p.n && h2_exp <= p.m;
    }
  }
  return false;
}

std::string render_monomial(const VarietySpec& variety, Monomial mono) {
  if (mono.degree == 0) return "1";
  switch (variety.family()) {
    case Family::hypersurface:
    case Family::cicy:
      return mono.degree == 1 ? "H" : "H^" + std::to_string(mono.degree);
    case Family::blowup:
      if (mono.degree == 2) return "pt";
      return mono.index == 0 ? "H" : "E" + std::to_string(mono.index);
    case Family::product: {
      const int h2_exp = mono.index;
      const int h1_exp = mono.degree - h2_exp;
      auto factor = [](const char* name, int e) {
        return e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e);
      };
      std::string out;
      if (h1_exp > 0) out = factor("h1", h1_exp);
      if (h2_exp > 0) out += (out.empty() ? "" : "*") + factor("h2", h2_exp);
      return out;
    }
  }
  return "?";
}

GradedClass GradedClass::constant(const VarietySpec& variety, const Rational& value) {
  return monomial(variety, Monomial::unit(), value);
}

GradedClass GradedClass::monomial(const VarietySpec& variety, Monomial mono, const Rational& coeff) {
  if (!is_valid_monomial(variety, mono)) {
    throw std::invalid_argument("monomial (" + std::to_string(mono.degree) + "," + std::to_string(mono.index) +
                                ") is outside the Chow ring of " + variety.label());
  }
  GradedClass out(variety);
  out.accumulate(mono, coeff);
  return out;
}

GradedClass GradedClass::hyperplane(const VarietySpec& variety) {
  require_family(variety, variety.family() != Family::product, "H");
  return monomial(variety, Monomial::hyperplane_power(1));
}

GradedClass GradedClass::exceptional(const VarietySpec& variety, int i) {
  require_family(variety, variety.family() == Family::blowup, "E_i");
  return monomial(variety, Monomial::exceptional(i));
}

GradedClass GradedClass::point(const VarietySpec& variety) {
  require_family(variety, variety.family() == Family::blowup, "pt");
  return monomial(variety, Monomial::point());
}

GradedClass GradedClass::h1(const VarietySpec& variety) {
  require_family(variety, variety.family() == Family::product, "h1");
  return monomial(variety, Monomial::product(1, 0));
}

GradedClass GradedClass::h2(const VarietySpec& variety) {
  require_family(variety, variety.family() == Family::product, "h2");
  return monomial(variety, Monomial::product(0, 1));
}

Rational GradedClass::coefficient(Monomial mono) const {
  auto it = coeffs_.find(mono);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool GradedClass::is_homogeneous(int degree) const {
  for (const auto& [mono, c] : coeffs_) {
    if (mono.degree != degree) return false;
  }
  return true;
}

bool GradedClass::has_integer_coefficients() const {
  for (const auto& [mono, c] : coeffs_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

GradedClass GradedClass::part(int degree) const {
  GradedClass out(variety_);
  for (const auto& [mono, c] : coeffs_) {
    if (mono.degree == degree) out.coeffs_.emplace(mono, c);
  }
  return out;
}

GradedClass GradedClass::truncated(int max_degree) const {
  GradedClass out(variety_);
  for (const auto& [mono, c] : coeffs_) {
    if (mono.degree <= max_degree) out.coeffs_.emplace(mono, c);
  }
  return out;
}

void GradedClass::accumulate(Monomial mono, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(mono, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  require_same_variety(variety_, other.variety_);
  for (const auto& [mono, c] : other.coeffs_) accumulate(mono, c);
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) {
  require_same_variety(variety_, other.variety_);
  for (const auto& [mono, c] : other.coeffs_) accumulate(mono, -c);
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [mono, c] : coeffs_) c *= scalar;
  return *this;
}

GradedClass operator*(const GradedClass& u, const GradedClass& v) {
  require_same_variety(u.variety_, v.variety_);
  GradedClass out(u.variety_);
  for (const auto& [x, cx] : u.coeffs_) {
    for (const auto& [y, cy] : v.coeffs_) {
      auto prod = multiply(u.variety_, x, y);
      if (!prod) continue;
      Rational term = cx * cy;
      if (prod->sign < 0) term = -term;
      out.accumulate(prod->mono, term);
    }
  }
  return out;
}

std::string GradedClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : coeffs_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.degree == 0) {
      out += omalous::to_string(magnitude);
    } else {
      if (magnitude != 1) out += omalous::to_string(magnitude) + "*";
      out += render_monomial(variety_, mono);
    }
  }
  return out;
}

GradedClass add(const GradedClass& u, const GradedClass& v) { return u + v; }

GradedClass mul(const GradedClass& u, const GradedClass& v) { return u * v; }

Rational integrate(const GradedClass& u) {
  const VarietySpec& variety = u.variety();
  const int top = variety.dimension();
  Monomial top_mono = Monomial::hyperplane_power(top);
  if (variety.family() == Family::blowup) top_mono = Monomial::point();
  if (variety.family() == Family::product) {
    const auto& p = variety.as<ProductPP>();
    top_mono = Monomial::product(p.n, p.m);
  }
  return u.coefficient(top_mono) * variety.top_normalization();
}

GradedClass truncated_inverse(const GradedClass& u) {
  if (u.part(0) != GradedClass::one(u.variety())) {
    throw std::invalid_argument("truncated_inverse needs degree-0 part equal to 1, got " + u.to_string());
  }
  // (1 + x)^-1 = sum (-x)^k; x is nilpotent of order dim+1.
  const GradedClass minus_x = GradedClass::one(u.variety()) - u;
  GradedClass result = GradedClass::one(u.variety());
  GradedClass term = result;
  for (int k = 1; k <= u.variety().dimension(); ++k) {
    term = term * minus_x;
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

GradedClass power(const GradedClass& u, long k) {
  if (k < 0) throw std::invalid_argument("negative exponent; use truncated_inverse");
  GradedClass result = GradedClass::one(u.variety());
  GradedClass base = u;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

GradedClass exponential(const GradedClass& d) {
  GradedClass result = GradedClass::one(d.variety());
  GradedClass term = result;
  for (int k = 1; k <= d.variety().dimension(); ++k) {
    term = term * d;
    term *= make_rational(1, k);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

namespace {

struct Factor {
  std::string name;
  int exponent = 1;
};

Factor parse_factor(const std::string& token) {
  Factor f;
  const auto caret = token.find('^');
  f.name = token.substr(0, caret);
  if (caret != std::string::npos) {
    const std::string exp = token.substr(caret + 1);
    if (exp.empty() || exp.size() > 3) throw std::invalid_argument("bad exponent in '" + token + "'");
    for (char ch : exp) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad exponent in '" + token + "'");
    }
    f.exponent = std::stoi(exp);
  }
  if (f.name.empty()) throw std::invalid_argument("empty factor in '" + token + "'");
  return f;
}

Monomial parse_monomial(const VarietySpec& variety, const std::vector<Factor>& factors, const std::string& term) {
  auto fail = [&]() -> Monomial {
    throw std::invalid_argument("'" + term + "' is not a basis monomial on " + variety.label());
  };
  if (factors.size() == 1 && factors[0].name == "1" && factors[0].exponent == 1) return Monomial::unit();
  Monomial mono;
  switch (variety.family()) {
    case Family::hypersurface:
    case Family::cicy:
      if (factors.size() != 1 || factors[0].name != "H") fail();
      mono = Monomial::hyperplane_power(factors[0].exponent);
      break;
    case Family::blowup: {
      if (factors.size() != 1 || factors[0].exponent != 1) fail();
      const std::string& name = factors[0].name;
      if (name == "H") {
        mono = Monomial::blowup_line();
      } else if (name == "pt") {
        mono = Monomial::point();
      } else if (name.size() > 1 && name[0] == 'E' && name.size() <= 6) {
        for (std::size_t i = 1; i < name.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(name[i]))) fail();
        }
        mono = Monomial::exceptional(std::stoi(name.substr(1)));
        if (mono.index < 1) fail();
      } else {
        fail();
      }
      break;
    }
    case Family::product: {
      int e1 = 0;
      int e2 = 0;
      for (const auto& f : factors) {
        if (f.name == "h1") {
          e1 += f.exponent;
        } else if (f.name == "h2") {
          e2 += f.exponent;
        } else {
          fail();
        }
      }
      mono = Monomial::product(e1, e2);
      break;
    }
  }
  if (mono.degree == 0 || !is_valid_monomial(variety, mono)) fail();
  return mono;
}

}  // namespace

GradedClass parse_class(const VarietySpec& variety, std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) throw std::invalid_argument("empty class expression");

  // Split into signed terms at top-level '+'/'-'.
  std::vector<std::string> terms;
  std::string current;
  for (std::size_t i = 0; i < compact.size(); ++i) {
    const char ch = compact[i];
    if ((ch == '+' || ch == '-') && !current.empty() && current != "+" && current != "-") {
      terms.push_back(current);
      current.clear();
    }
    current += ch;
  }
  terms.push_back(current);

  GradedClass out(variety);
  for (const std::string& raw : terms) {
    std::string body = raw;
    int sign = 1;
    if (body[0] == '+' || body[0] == '-') {
      sign = body[0] == '-' ? -1 : 1;
      body.erase(0, 1);
    }
    if (body.empty()) throw std::invalid_argument("dangling sign in '" + std::string(text) + "'");

    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (true) {
      const auto star = body.find('*', start);
      tokens.push_back(body.substr(start, star - start));
      if (star == std::string::npos) break;
      start = star + 1;
    }
    Rational coeff = 1;
    std::size_t first_factor = 0;
    if (std::isdigit(static_cast<unsigned char>(tokens[0][0]))) {
      coeff = parse_rational(tokens[0]);
      first_factor = 1;
    }
    Monomial mono = Monomial::unit();
    if (first_factor < tokens.size()) {
      std::vector<Factor> factors;
      for (std::size_t i = first_factor; i < tokens.size(); ++i) factors.push_back(parse_factor(tokens[i]));
      mono = parse_monomial(variety, factors, body);
    }
    out += GradedClass::monomial(variety, mono, coeff * sign);
  }
  return out;
}

}  // namespace omalous
