#include "omalous/riemann_roch.hpp"

#include "omalous/chern.hpp"
#include "omalous/variety.hpp"

namespace omalous {

namespace {

void require_matching_lengths(const BlowupSheafData& sheaf, const TwistSpec& twist) {
  if (sheaf.a_vec.size() != twist.q_vec.size()) {
    throw std::invalid_argument("sheaf has " + std::to_string(sheaf.a_vec.size()) + " exceptional coefficients, twist has " +
                                std::to_string(twist.q_vec.size()));
  }
}

GradedClass divisor(const VarietySpec& v, long h_coeff, const std::vector<long>& e_coeffs) {
  GradedClass d = GradedClass::hyperplane(v) * Rational(h_coeff);
  for (std::size_t i = 0; i < e_coeffs.size(); ++i) {
    d += GradedClass::exceptional(v, static_cast<int>(i) + 1) * Rational(e_coeffs[i]);
  }
  return d;
}

Rational half(const mpz_class& x) {
  Rational q(x, 2);
  q.canonicalize();
  return q;
}

}  // namespace

BlowupSheafData BlowupSheafData::dual() const {
  BlowupSheafData out = *this;
  out.a = -a;
  for (auto& x : out.a_vec) x = -x;
  return out;
}

BlowupSheafData BlowupSheafData::omalous_target(int n, long rank) {
  return {rank, 3, std::vector<long>(n, -1), 3L + n};
}

BlowupSheafData BlowupSheafData::structure_sheaf(int n) { return {1, 0, std::vector<long>(n, 0), 0}; }

TwistSpec TwistSpec::with_exceptional(int n, long p, int i) {
  TwistSpec t{p, std::vector<long>(n, 0)};
  if (i > 0) t.q_vec.at(i - 1) = 1;
  return t;
}

long euler_char(const BlowupSheafData& sheaf, const TwistSpec& twist) {
  require_matching_lengths(sheaf, twist);
  const mpz_class r = sheaf.rank;
  const mpz_class a = sheaf.a;
  const mpz_class p = twist.p;

  mpz_class exceptional_sq = 0;  // sum a_i (a_i - 1)
  mpz_class twist_sq = 0;        // sum q_i (q_i - 1)
  mpz_class pairing = 0;         // sum a_i q_i
  for (std::size_t i = 0; i < sheaf.a_vec.size(); ++i) {
    const mpz_class ai = sheaf.a_vec[i];
    const mpz_class qi = twist.q_vec[i];
    exceptional_sq += ai * (ai - 1);
    twist_sq += qi * (qi - 1);
    pairing += ai * qi;
  }

  Rational chi = -(Rational(sheaf.k) - half(a * (a + 3)) + half(exceptional_sq));
  chi += half(r * ((p + 1) * (p + 2) - twist_sq));
  chi += Rational(a * p - pairing);
  if (!is_integer(chi)) throw std::logic_error("Riemann-Roch produced non-integer " + to_string(chi));
  return to_long(chi);
}

Rational todd_euler_char(const BlowupSheafData& sheaf, const TwistSpec& twist) {
  require_matching_lengths(sheaf, twist);
  const int n = sheaf.points();
  const VarietySpec v = VarietySpec::blowup(n);
  const GradedClass pt = GradedClass::point(v);

  const GradedClass c1 = divisor(v, sheaf.a, sheaf.a_vec);
  GradedClass ch2 = c1 * c1 * make_rational(1, 2) - pt * Rational(sheaf.k);
  const GradedClass ch_sheaf = GradedClass::constant(v, sheaf.rank) + c1 + ch2;
  const GradedClass ch_twist = exponential(divisor(v, twist.p, twist.q_vec));

  const GradedClass k = canonical_class(v).divisor();
  const GradedClass todd =
      GradedClass::one(v) - k * make_rational(1, 2) + (k * k + pt * Rational(3 + n)) * make_rational(1, 12);
  return integrate(ch_sheaf * ch_twist * todd);
}

long h1_under_vanishing(const BlowupSheafData& sheaf, const TwistSpec& twist) {
  const long chi = euler_char(sheaf, twist);
  if (chi > 0) {
    throw std::domain_error("vanishing assumption violated: chi = " + std::to_string(chi) + " > 0");
  }
  return -chi;
}

MonadDimensions monad_dimensions(int n, long rank) {
  if (n < 3) throw HypothesisViolation("blow-up monad requires n >= 3 (got n = " + std::to_string(n) + ")");
  if (rank <= 3) throw HypothesisViolation("blow-up monad requires r > 3 (got r = " + std::to_string(rank) + ")");

  const BlowupSheafData e = BlowupSheafData::omalous_target(n, rank);
  const TwistSpec minus_h = TwistSpec::with_exceptional(n, -1, 0);

  MonadDimensions dims;
  // K_0 = H^1(E*(-1,0)), K_i = H^1(E(-1,0)); L_0 = H^1(E(-1,0)), L_i = H^1(E(-1,E_i)).
  dims.dim_k.push_back(h1_under_vanishing(e.dual(), minus_h));
  dims.dim_l.push_back(h1_under_vanishing(e, minus_h));
  for (int i = 1; i <= n; ++i) {
    dims.dim_k.push_back(h1_under_vanishing(e, minus_h));
    dims.dim_l.push_back(h1_under_vanishing(e, TwistSpec::with_exceptional(n, -1, i)));
  }
  dims.dim_w = 4L * n * (n - 1) - 3 + rank;

  auto check = [](long got, long want, const char* what) {
    if (got != want) {
      throw std::logic_error(std::string("Riemann-Roch dimension of ") + what + " = " + std::to_string(got) +
                             ", closed form " + std::to_string(want));
    }
  };
  check(dims.dim_k[0], n, "K_0");
  check(dims.dim_l[0], 2L * n - 3, "L_0");
  long total = dims.dim_k[0] + dims.dim_l[0];
  for (int i = 1; i <= n; ++i) {
    check(dims.dim_k[i], 2L * n - 3, "K_i");
    check(dims.dim_l[i], 2L * n - 4, "L_i");
    total += dims.dim_k[i] + dims.dim_l[i];
  }
  check(total + rank, dims.dim_w, "W (rank bookkeeping)");
  return dims;
}

}  // namespace omalous
