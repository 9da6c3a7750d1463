#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclezeta {

using Exponent = std::vector<int>;

namespace detail {
inline bool is_zero_coeff(const mpz_class& c) { return c == 0; }
inline bool is_zero_coeff(const std::complex<double>& c) { return c == 0.0; }
}  // namespace detail

// Sparse polynomial in nvars variables; zero coefficients are never stored.
template <class C>
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const C& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(int nvars, int index) {
    MultiPoly p(nvars);
    Exponent e(nvars, 0);
    e.at(index) = 1;
    p.add_term(e, C(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<Exponent, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const C& c) {
    if (detail::is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (detail::is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  // deg_i for every variable; all zeros for the zero polynomial.
  std::vector<int> degrees() const {
    std::vector<int> d(nvars_, 0);
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < nvars_; ++i) d[i] = std::max(d[i], e[i]);
    }
    return d;
  }

  int degree_in(int i) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  bool is_constant() const {
    for (const auto& [e, c] : terms_) {
      for (int x : e) {
        if (x != 0) return false;
      }
    }
    return true;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, C(0) - c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly(a.nvars_) - a; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(std::max(a.nvars_, b.nvars_));
    Exponent e(out.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < out.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly out = constant(nvars_, C(1));
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  MultiPoly scaled(const C& s) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_ = 0;
  std::map<Exponent, C> terms_;
};

using IntPoly = MultiPoly<mpz_class>;
using ComplexPoly = MultiPoly<std::complex<double>>;

ComplexPoly to_complex(const IntPoly& p);

// Substitutes 1 for every variable at an odd index: (X1,Y1,...,Xn,Yn) -> (x1..xn).
IntPoly dehomogenize_pairs(const IntPoly& form);

// Gcd of all coefficients (0 for the zero polynomial).
mpz_class content(const IntPoly& p);

// Renders with variables named by `names` (e.g. {"z1","z2"}), terms in
// descending exponent order.
std::string to_string(const IntPoly& p, const std::vector<std::string>& names);

std::vector<std::string> affine_names(int nvars);

}  // namespace cyclezeta
