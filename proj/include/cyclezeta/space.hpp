#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cyclezeta {

// Ambient space: P^n, (P^1)^n, or a binary product of those, always with its
// standard polarization (O(1), O(1,...,1), or the external tensor product).
class Space {
 public:
  enum class Kind { ProjSpace, P1Power, Product };

  static Space proj(int n);
  static Space p1_power(int n);
  static Space product(Space left, Space right);

  // Accepts "P2", "P1^3", "P2xP1", "P1^2xP2" (x is left-associative).
  static Space parse(std::string_view text);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  const Space& left() const { return *left_; }
  const Space& right() const { return *right_; }

  int dim() const;

  // Dimensions of the projective-space factors after flattening, e.g.
  // P1^2 -> {1,1}, P2xP1 -> {2,1}. A point (n = 0) contributes {0}.
  std::vector<int> factors() const;

  // Number of flattened factors belonging to the left operand of a product.
  int left_factor_count() const;

  // Top self-intersection deg(H^dim) = dim! / prod(n_i!).
  unsigned long top_degree() const;

  std::string to_string() const;

  friend bool operator==(const Space& a, const Space& b) { return a.to_string() == b.to_string(); }

 private:
  Space(Kind kind, int n) : kind_(kind), n_(n) {}

  Kind kind_;
  int n_ = 0;
  std::shared_ptr<const Space> left_;
  std::shared_ptr<const Space> right_;
};

}  // namespace cyclezeta
