#include "cyclezeta/polynomial.hpp"

namespace cyclezeta {

ComplexPoly to_complex(const IntPoly& p) {
  ComplexPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, std::complex<double>(c.get_d(), 0.0));
  return out;
}

IntPoly dehomogenize_pairs(const IntPoly& form) {
  const int n = form.nvars() / 2;
  IntPoly out(n);
  Exponent e(n);
  for (const auto& [ex, c] : form.terms()) {
    for (int i = 0; i < n; ++i) e[i] = ex[2 * i];
    out.add_term(e, c);
  }
  return out;
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::vector<std::string> affine_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("z" + std::to_string(i + 1));
  return names;
}

std::string to_string(const IntPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace cyclezeta
