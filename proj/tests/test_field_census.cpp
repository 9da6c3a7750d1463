#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "cyclezeta/errors.hpp"
#include "cyclezeta/field_census.hpp"

using namespace cyclezeta;

TEST_CASE("point_count examples") {
  CHECK(point_count(Space::proj(1), PrimePower::from_q(2), 1) == 3);
  CHECK(point_count(Space::proj(2), PrimePower::from_q(2), 2) == 21);
  CHECK(point_count(Space::p1_power(2), PrimePower::from_q(3), 1) == 16);
  CHECK(point_count(Space::parse("P2xP1"), PrimePower::from_q(2), 1) == 21);
}

TEST_CASE("closed_point_census examples") {
  auto c = closed_point_census(Space::proj(1), PrimePower::from_q(2), 2);
  CHECK(c.at(1) == 3);
  CHECK(c.at(2) == 1);
  CHECK(closed_point_census(Space::proj(1), PrimePower::from_q(3), 1).at(1) == 4);
  CHECK(closed_point_census(Space::proj(2), PrimePower::from_q(2), 2).at(2) == 7);
  auto p1sq = closed_point_census(Space::p1_power(2), PrimePower::from_q(2), 2);
  CHECK(p1sq.at(1) == 9);
  CHECK(p1sq.at(2) == 8);
}

TEST_CASE("irreducible_count examples") {
  CHECK(irreducible_count(PrimePower::from_q(2), 2) == 1);
  CHECK(irreducible_count(PrimePower::from_q(2), 3) == 2);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u}) CHECK(irreducible_count(PrimePower::from_q(q), 1) == q);
}

TEST_CASE("census sums back to point counts") {
  for (const char* s : {"P1", "P2", "P1^2", "P2xP1"}) {
    Space space = Space::parse(s);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
      PrimePower pq = PrimePower::from_q(q);
      auto c = closed_point_census(space, pq, 6);
      for (unsigned m = 1; m <= 6; ++m) {
        mpz_class sum = 0;
        for (unsigned d = 1; d <= m; ++d) {
          if (m % d == 0) sum += d * c.at(d);
        }
        CHECK(sum == point_count(space, pq, m));
      }
    }
  }
}

TEST_CASE("P1 census matches irreducible polynomials") {
  for (unsigned q : {2u, 3u, 5u}) {
    PrimePower pq = PrimePower::from_q(q);
    auto c = closed_point_census(Space::proj(1), pq, 8);
    CHECK(c.at(1) == q + 1);
    for (unsigned d = 2; d <= 8; ++d) CHECK(c.at(d) == irreducible_count(pq, d));
  }
}

TEST_CASE("prime powers") {
  CHECK_THROWS_AS(PrimePower::from_q(6), DomainError);
  CHECK_THROWS_AS(PrimePower::from_q(1), DomainError);
  PrimePower q = PrimePower::from_q(81);
  CHECK(q.p() == 3);
  CHECK(q.e() == 4);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
}

TEST_CASE("cache directory round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "cyclezeta_census_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  ::setenv("CYCLEZETA_CACHE_DIR", dir.c_str(), 1);
  auto first = cached_closed_point_census(Space::proj(2), PrimePower::from_q(3), 4);
  bool wrote = false;
  for (const auto& entry : fs::directory_iterator(dir)) wrote = wrote || entry.path().extension() == ".json";
  CHECK(wrote);
  auto second = cached_closed_point_census(Space::proj(2), PrimePower::from_q(3), 4);
  CHECK(first.b == second.b);
  CHECK(first.b == closed_point_census(Space::proj(2), PrimePower::from_q(3), 4).b);
  ::unsetenv("CYCLEZETA_CACHE_DIR");
  fs::remove_all(dir);
}
