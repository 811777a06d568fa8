#include <doctest.h>

#include <random>

#include "grobfan/term_order.hpp"

#include "helpers.hpp"

using namespace grobfan;
using namespace grobfan::testing;

namespace {

std::vector<size_t> natural(size_t n) {
  std::vector<size_t> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

TEST_CASE("lex with priority z,y,x ranks y^2 above x^3*y") {
  // priority z,y,x over variables (x,y,z) means rows e_z, e_y, e_x
  TermOrderMatrix m = TermOrderMatrix::lex({2, 1, 0});
  // y^2 vs x^3*y: difference (-3,1,0); e_z gives 0, e_y gives 1 > 0
  CHECK(m.compare(ev({0, 2, 0}), ev({3, 1, 0})) == Ordering::Greater);
  CHECK(m.compare(ev({3, 1, 0}), ev({0, 2, 0})) == Ordering::Less);
  CHECK(m.compare(ev({1, 2, 3}), ev({1, 2, 3})) == Ordering::Equal);
  // anything with z beats anything without
  CHECK(m.compare(ev({0, 0, 1}), ev({9, 9, 0})) == Ordering::Greater);
}

TEST_CASE("deglex hand check: degree first, then the priority permutation") {
  // deglex on (x,y) in declared order: rows (1,1), (1,0)
  TermOrderMatrix m = TermOrderMatrix::deglex({0, 1});
  // x^2 vs y^3: degrees 2 < 3
  CHECK(m.compare(ev({2, 0}), ev({0, 3})) == Ordering::Less);
  // y^3 vs x^2*y: equal degree 3, x-row decides: M(a-b) = (0, -2) lex-negative
  CHECK(m.compare(ev({0, 3}), ev({2, 1})) == Ordering::Less);
  CHECK(m.compare(ev({2, 1}), ev({0, 3})) == Ordering::Greater);
}

TEST_CASE("degrevlex equals its explicit matrix description") {
  // degrevlex in declared order on 3 variables = total degree row, then
  // reverse-lex tie-breaks -e_3, -e_2; TermOrderMatrix completes the
  // single degree row to exactly that.
  TermOrderMatrix completed(std::vector<IntVec>{iv({1, 1, 1})}, 3);
  TermOrderMatrix drl = TermOrderMatrix::degrevlex(natural(3));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(0, 5);
  for (int it = 0; it < 300; ++it) {
    ExpVec a = {d(rng), d(rng), d(rng)};
    ExpVec b = {d(rng), d(rng), d(rng)};
    CHECK(completed.compare(a, b) == drl.compare(a, b));
  }
  // spot value: x vs y at equal degree — last variable decides negatively
  CHECK(drl.compare(ev({1, 0, 0}), ev({0, 1, 0})) == Ordering::Greater);
  CHECK(drl.compare(ev({0, 1, 0}), ev({0, 0, 1})) == Ordering::Greater);
}

TEST_CASE("matrix rows with a lex-negative column are rejected") {
  // column 2 reads (-2, 1): first nonzero entry negative
  CHECK_THROWS_AS(TermOrderMatrix(std::vector<IntVec>{iv({1, -2}), iv({0, 1})}, 2),
                  OrderError);
  // an all-zero column is just as bad: completion would make 1 > x_2
  CHECK_THROWS_AS(TermOrderMatrix(std::vector<IntVec>{iv({1, 0})}, 2),
                  OrderError);
}

TEST_CASE("column condition accepts degrevlex-style negative tails") {
  // rows (1,1,1), (0,-1,-1): column signs decided by the first row
  TermOrderMatrix m(std::vector<IntVec>{iv({1, 1, 1}), iv({0, -1, -1})}, 3);
  CHECK(m.rows().size() == 3);  // completed to full rank
  CHECK(m.supplied_rows() == 2);
}

TEST_CASE("dependent supplied rows are dropped, completion restores rank") {
  TermOrderMatrix m(
      std::vector<IntVec>{iv({1, 1, 1}), iv({2, 2, 2}), iv({1, 0, 0})}, 3);
  CHECK(m.supplied_rows() == 2);
  CHECK(m.rows().size() == 3);
  // still a total order: distinct exponents never compare equal
  CHECK(m.compare(ev({0, 1, 0}), ev({0, 0, 1})) != Ordering::Equal);
}

TEST_CASE("weighted order uses the weight row first, tiebreak after") {
  TermOrderMatrix tie = TermOrderMatrix::lex(natural(2));
  TermOrderMatrix m = TermOrderMatrix::weighted(iv({1, 3}), tie);
  CHECK(m.compare(ev({2, 0}), ev({0, 1})) == Ordering::Less);     // weights 2 < 3
  CHECK(m.compare(ev({3, 0}), ev({0, 1})) == Ordering::Greater);  // tie at 3, lex
}

TEST_CASE("lex_sign matches compare") {
  TermOrderMatrix m = TermOrderMatrix::lex(natural(3));
  CHECK(m.lex_sign(iv({0, 0, -1})) == -1);
  CHECK(m.lex_sign(iv({0, 1, -5})) == 1);
  CHECK(m.lex_sign(iv({0, 0, 0})) == 0);
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(0, 4);
  TermOrderMatrix drl = TermOrderMatrix::degrevlex(natural(3));
  for (int it = 0; it < 200; ++it) {
    ExpVec a = {d(rng), d(rng), d(rng)};
    ExpVec b = {d(rng), d(rng), d(rng)};
    int s = drl.lex_sign(exp_diff(a, b));
    Ordering c = drl.compare(a, b);
    CHECK(s == static_cast<int>(c));
  }
}

TEST_CASE("term order axioms hold on random samples") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(0, 4);
  std::vector<TermOrderMatrix> orders = {
      TermOrderMatrix::lex(natural(3)),
      TermOrderMatrix::deglex({2, 0, 1}),
      TermOrderMatrix::degrevlex(natural(3)),
      TermOrderMatrix(std::vector<IntVec>{iv({3, 1, 2}), iv({1, 1, 0})}, 3)};
  for (const TermOrderMatrix& m : orders) {
    ExpVec zero = {0, 0, 0};
    for (int it = 0; it < 120; ++it) {
      ExpVec a = {d(rng), d(rng), d(rng)};
      ExpVec b = {d(rng), d(rng), d(rng)};
      ExpVec c = {d(rng), d(rng), d(rng)};
      // 1 is minimal
      if (a != zero) CHECK(m.compare(a, zero) == Ordering::Greater);
      // multiplicative: a < b iff a+c < b+c
      CHECK(m.compare(a, b) == m.compare(exp_add(a, c), exp_add(b, c)));
      // total on distinct exponents
      if (a != b) CHECK(m.compare(a, b) != Ordering::Equal);
    }
  }
}

TEST_CASE("directional order compares against -alpha and flags ties") {
  // alpha = (2,-1): directional order passes -alpha = (-2,1)
  DirectionalOrder o(iv({-2, 1}));
  // higher <-alpha, e> wins: e=(0,1) scores 1, e=(2,0) scores -4
  CHECK(o.compare(ev({0, 1}), ev({2, 0})) == Ordering::Greater);
  CHECK(o.compare(ev({2, 0}), ev({0, 1})) == Ordering::Less);
  CHECK(o.compare(ev({1, 1}), ev({1, 1})) == Ordering::Equal);
  // distinct exponents with the same score: (0,0) vs (1,2)
  CHECK_THROWS_AS(o.compare(ev({0, 0}), ev({1, 2})), GuardError);
}
