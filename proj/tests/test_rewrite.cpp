#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "permring/rewrite.hpp"

#include <random>

using namespace permring;

namespace {

BlockPerm P(const char* s) { return parse_block_perm(s); }

FormalSum sum(std::initializer_list<std::pair<const char*, int>> terms) {
  FormalSum s;
  bool first = true;
  for (auto [p, c] : terms) {
    if (first) s = FormalSum(P(p).index_set()), first = false;
    s.add(P(p), c);
  }
  return s;
}

AltVector alt(std::initializer_list<std::pair<const char*, int>> terms) { return AltVector::from(sum(terms)); }

const AltVector kStraightened1234 = alt({{"1,3/2,4", 1}, {"1,4/2,3", -1}, {"2,3/1,4", -1}, {"2,4/1,3", 1}, {"3,4/1,2", -1}});

}  // namespace

TEST_CASE("formal sums drop zeros and stay on one index set") {
  FormalSum s = FormalSum::of(P("1,2/3,4"), 2);
  s.add(P("1,2/3,4"), -2);
  CHECK(s.is_zero());
  CHECK_THROWS_AS(s.add(P("1,2/3,5"), 1), std::invalid_argument);
  CHECK_THROWS_AS(AltVector::from(FormalSum::of(P("1,2/3,4"))), std::invalid_argument);
  CHECK_THROWS_AS(AltVector::basis(P("1,2/3,4")), std::invalid_argument);
}

TEST_CASE("garnir_expand") {
  CHECK(garnir_expand(P("1,2/3,4"), 0) == kStraightened1234.as_formal_sum());

  // Second junction of (1,3/2,4/5,6): 4 < 5.
  CHECK(garnir_expand(P("1,3/2,4/5,6"), 1) ==
        sum({{"1,3/2,5/4,6", 1}, {"1,3/2,6/4,5", -1}, {"1,3/4,5/2,6", -1}, {"1,3/4,6/2,5", 1}, {"1,3/5,6/2,4", -1}}));
  // (1,3/2,5/4,6) has no violation at that junction: 5 > 4.
  CHECK_THROWS_AS(garnir_expand(P("1,3/2,5/4,6"), 1), std::invalid_argument);
  CHECK_THROWS_AS(garnir_expand(P("2,1/3,4"), 0), std::invalid_argument);
  CHECK_THROWS_AS(garnir_expand(P("1,2/3,4"), 1), std::invalid_argument);

  const BlockPerm x = P("1,2/3,4/5,6");
  for (std::size_t j : {0u, 1u}) {
    const FormalSum e = garnir_expand(x, j);
    CHECK(e.size() == 5);
    for (const auto& [y, c] : e.terms()) CHECK(prec_less(y, x));
  }
}

TEST_CASE("reduce") {
  CHECK(reduce(P("1,2/3,4")) == kStraightened1234);
  AltVector neg = kStraightened1234;
  neg *= -1;
  CHECK(reduce(P("2,1/3,4")) == neg);
  for (const auto& a : alt_basis(parse_index_set("1,2,3,4,5,6"))) CHECK(reduce(a) == AltVector::basis(a));
  CHECK(reduce(BlockPerm{}) == AltVector::basis(BlockPerm{}));
  CHECK(reduce(FormalSum(parse_index_set("1,2"))).is_zero());
}

TEST_CASE("coeff_via_rewrite") {
  CHECK(coeff_via_rewrite(P("1,3/2,4"), P("1,2/3,4")) == 1);
  CHECK(coeff_via_rewrite(P("7,9/5,6/2,3"), P("2,3/5,6/7,9")) == -1);
  CHECK(coeff_via_rewrite(P("7,9/5,6/2,3"), P("5,7/2,3/6,9")) == 0);
  CHECK(coeff_via_rewrite(P("7,9/5,6/2,3"), P("3,5/2,6/7,9")) == 0);
  CHECK_THROWS_AS(coeff_via_rewrite(P("1,2/3,4"), P("1,2/3,4")), std::invalid_argument);
  CHECK_THROWS_AS(coeff_via_rewrite(P("1,3/2,4"), P("1,2/3,5")), std::invalid_argument);
}

TEST_CASE("reduce agrees with a direct solve in the quotient by M_I") {
  for (oracle::Perm ground : {oracle::Perm{1, 2, 3, 4}, oracle::Perm{1, 2, 3, 4, 5, 6}, oracle::Perm{2, 3, 5, 6, 7, 9}}) {
    const oracle::Straightener st(ground);
    for (const auto& e : oracle::all_perms(ground)) {
      bool ascending = true;
      for (std::size_t i = 0; i < e.size(); i += 2) ascending = ascending && e[i] < e[i + 1];
      if (!ascending) continue;
      const BlockPerm x = BlockPerm::from_entries(e);
      const AltVector got = reduce(x);
      const auto want = st.coefficients(e);
      CHECK(got.size() == want.size());
      for (const auto& [a, c] : want) CHECK(got.coefficient(BlockPerm::from_entries(a)) == c);
    }
  }
}

TEST_CASE("rightmost and leftmost strategies agree") {
  for (const auto& e : oracle::all_perms({1, 2, 3, 4, 5, 6})) {
    const BlockPerm x = BlockPerm::from_entries(e);
    CHECK(reduce(x, RewriteStrategy::kRightmost) == reduce(x, RewriteStrategy::kLeftmost));
  }
  std::mt19937_64 rng(3);
  oracle::Perm e{1, 2, 3, 4, 5, 6, 7, 8};
  for (int t = 0; t < 100; ++t) {
    std::shuffle(e.begin(), e.end(), rng);
    const BlockPerm x = BlockPerm::from_entries(e);
    CHECK(reduce(x, RewriteStrategy::kRightmost) == reduce(x, RewriteStrategy::kLeftmost));
  }
}

TEST_CASE("reduce is linear and idempotent") {
  std::mt19937_64 rng(5);
  oracle::Perm e{1, 2, 3, 4, 5, 6};
  for (int t = 0; t < 50; ++t) {
    std::shuffle(e.begin(), e.end(), rng);
    const BlockPerm x = BlockPerm::from_entries(e);
    std::shuffle(e.begin(), e.end(), rng);
    const BlockPerm y = BlockPerm::from_entries(e);
    FormalSum s = FormalSum::of(x, Rational(3, 2));
    s.add(y, -2);
    AltVector want = reduce(x);
    want *= Rational(3, 2);
    AltVector ry = reduce(y);
    ry *= -2;
    want += ry;
    CHECK(reduce(s) == want);
    CHECK(reduce(reduce(s).as_formal_sum()) == reduce(s));
  }
}

TEST_CASE("every generator of M_I reduces to zero") {
  for (const auto& e : oracle::all_perms({1, 2, 3, 4, 5, 6})) {
    const BlockPerm x = BlockPerm::from_entries(e);
    for (std::size_t b = 0; b < 3; ++b) CHECK(reduce(swap_relation(x, b)).is_zero());
    for (std::size_t j = 0; j < 2; ++j) CHECK(reduce(garnir_relation(x, j)).is_zero());
  }
  std::mt19937_64 rng(9);
  oracle::Perm e{1, 2, 3, 4, 5, 6, 7, 8};
  for (int t = 0; t < 200; ++t) {
    std::shuffle(e.begin(), e.end(), rng);
    const BlockPerm x = BlockPerm::from_entries(e);
    CHECK(reduce(swap_relation(x, t % 4)).is_zero());
    CHECK(reduce(garnir_relation(x, t % 3)).is_zero());
  }
  CHECK_THROWS_AS(garnir_relation(P("1,2/3,4"), 1), std::invalid_argument);
  CHECK_THROWS_AS(swap_relation(P("1,2/3,4"), 2), std::invalid_argument);
}

TEST_CASE("ReductionTable matches reduce") {
  ReductionTable table(parse_index_set("1,2,3,4,5,6"));
  for (const auto& e : oracle::all_perms({1, 2, 3, 4, 5, 6})) {
    const BlockPerm x = BlockPerm::from_entries(e);
    CHECK(table.of(x) == reduce(x));
  }
  CHECK(table.cached() > 0);
  CHECK_THROWS_AS(table.of(P("1,2/3,4")), std::invalid_argument);
}

TEST_CASE("the support of reduce(x) lies weakly below x") {
  for (const auto& e : oracle::all_perms({1, 2, 3, 4, 5, 6})) {
    const BlockPerm x = block_normalize(BlockPerm::from_entries(e)).first;
    const AltVector r = reduce(x);
    for (const auto& [a, c] : r.terms()) CHECK((a == x || prec_less(a, x)));
  }
}

TEST_CASE("text form") {
  CHECK(to_string(kStraightened1234) == "(1,3/2,4) - (1,4/2,3) - (2,3/1,4) + (2,4/1,3) - (3,4/1,2)");
}
