#include "cyclezeta/space.hpp"

#include <cctype>

#include "cyclezeta/errors.hpp"

namespace cyclezeta {

Space Space::proj(int n) {
  if (n < 0) throw DomainError("P^n requires n >= 0");
  return Space(Kind::ProjSpace, n);
}

Space Space::p1_power(int n) {
  if (n < 0) throw DomainError("(P^1)^n requires n >= 0");
  return Space(Kind::P1Power, n);
}

Space Space::product(Space left, Space right) {
  Space s(Kind::Product, 0);
  s.left_ = std::make_shared<const Space>(std::move(left));
  s.right_ = std::make_shared<const Space>(std::move(right));
  return s;
}

namespace {

Space parse_atom(std::string_view t) {
  if (t.size() < 2 || (t[0] != 'P' && t[0] != 'p')) throw ParseError("bad space factor '" + std::string(t) + "'");
  std::size_t i = 1;
  int n = 0;
  std::size_t start = i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) n = n * 10 + (t[i++] - '0');
  if (i == start) throw ParseError("bad space factor '" + std::string(t) + "'");
  if (i == t.size()) return Space::proj(n);
  if (t[i] != '^' || n != 1) throw ParseError("only P1 may carry a power: '" + std::string(t) + "'");
  ++i;
  int power = 0;
  start = i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) power = power * 10 + (t[i++] - '0');
  if (i == start || i != t.size()) throw ParseError("bad power in '" + std::string(t) + "'");
  return Space::p1_power(power);
}

}  // namespace

Space Space::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == 'x' || text[i] == '*') {
      parts.push_back(text.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  Space acc = parse_atom(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) acc = product(acc, parse_atom(parts[i]));
  return acc;
}

int Space::dim() const {
  switch (kind_) {
    case Kind::ProjSpace:
    case Kind::P1Power:
      return n_;
    case Kind::Product:
      return left_->dim() + right_->dim();
  }
  return 0;
}

std::vector<int> Space::factors() const {
  switch (kind_) {
    case Kind::ProjSpace:
      return {n_};
    case Kind::P1Power:
      if (n_ == 0) return {0};
      return std::vector<int>(static_cast<std::size_t>(n_), 1);
    case Kind::Product: {
      auto f = left_->factors();
      auto g = right_->factors();
      f.insert(f.end(), g.begin(), g.end());
      return f;
    }
  }
  return {};
}

int Space::left_factor_count() const {
  if (kind_ != Kind::Product) throw DomainError("left_factor_count on a non-product space");
  return static_cast<int>(left_->factors().size());
}

unsigned long Space::top_degree() const {
  unsigned long num = 1;
  int total = 0;
  // Multinomial dim!/prod(n_i!) built incrementally to stay exact.
  for (int ni : factors()) {
    for (int j = 1; j <= ni; ++j) {
      ++total;
      num = num * static_cast<unsigned long>(total) / static_cast<unsigned long>(j);
    }
  }
  return num;
}

std::string Space::to_string() const {
  switch (kind_) {
    case Kind::ProjSpace:
      return "P" + std::to_string(n_);
    case Kind::P1Power:
      return "P1^" + std::to_string(n_);
    case Kind::Product:
      return left_->to_string() + "x" + right_->to_string();
  }
  return {};
}

}  // namespace cyclezeta
