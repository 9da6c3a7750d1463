#include <doctest.h>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/galois_field.hpp"

using namespace cyclezeta;

TEST_CASE("least irreducible moduli") {
  CHECK(least_irreducible(2, 2) == FpPoly{1, 1, 1});
  CHECK(least_irreducible(2, 3) == FpPoly{1, 1, 0, 1});
  CHECK(least_irreducible(3, 2) == FpPoly{1, 0, 1});
  CHECK(fp_poly_is_irreducible({1, 1, 0, 1}, 2));
  CHECK_FALSE(fp_poly_is_irreducible({1, 0, 1}, 2));
}

TEST_CASE("field axioms by brute force") {
  for (auto [p, m] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{2u, 4u}}) {
    GaloisField F(p, m);
    const auto n = F.order();
    for (GaloisField::Elem a = 0; a < n; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.pow(a, n) == a);
      for (GaloisField::Elem b = 0; b < n; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (GaloisField::Elem c = 0; c < n; c += 3) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
        }
      }
    }
  }
}

TEST_CASE("frobenius is additive and fixes the prime field") {
  GaloisField F(3, 3);
  for (GaloisField::Elem a = 0; a < F.order(); ++a) {
    CHECK(F.frobenius(a, 3) == a);
    if (a < 3) CHECK(F.frobenius(a, 1) == a);
    for (GaloisField::Elem b = 0; b < F.order(); b += 5) {
      CHECK(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
    }
  }
}

TEST_CASE("embedding is a ring homomorphism") {
  auto small = field_for(2, 2);
  auto big = field_for(2, 4);
  FieldEmbedding emb(small, big);
  for (GaloisField::Elem a = 0; a < small->order(); ++a) {
    CHECK(emb.preimage(emb.image(a)) == a);
    for (GaloisField::Elem b = 0; b < small->order(); ++b) {
      CHECK(emb.image(small->add(a, b)) == big->add(emb.image(a), emb.image(b)));
      CHECK(emb.image(small->mul(a, b)) == big->mul(emb.image(a), emb.image(b)));
    }
  }
  unsigned in_image = 0;
  for (GaloisField::Elem b = 0; b < big->order(); ++b) in_image += emb.contains(b) ? 1 : 0;
  CHECK(in_image == 4);
}

TEST_CASE("shared fields") {
  CHECK(field_for(5, 2).get() == field_for(5, 2).get());
  CHECK(field_for(5, 2)->order() == 25);
}
