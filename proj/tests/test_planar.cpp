#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles/catalan.hpp"
#include "qtl/planar.hpp"

using qtl::TLTangle;

namespace {

std::vector<TLTangle> all_small(int max_total) {
  std::vector<TLTangle> out;
  for (int m = 0; m <= max_total; ++m)
    for (int n = 0; m + n <= max_total; ++n)
      for (auto& t : qtl::enumerate_tl(m, n)) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("matching counts") {
  CHECK(qtl::enumerate_matchings(0).size() == 1);
  CHECK(qtl::enumerate_matchings(1).size() == 1);
  CHECK(qtl::enumerate_matchings(3).size() == 5);
  auto cat = oracle::catalan(10);
  for (int n = 0; n <= 10; ++n) CHECK(qtl::enumerate_matchings(n).size() == cat[n]);
}

TEST_CASE("matchings agree with brute force enumeration") {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::vector<int>> brute;
    for (auto& p : oracle::noncrossing_bruteforce(n)) brute.insert(p);
    std::set<std::vector<int>> ours;
    for (auto& t : qtl::enumerate_matchings(n)) ours.insert(t.partner());
    CHECK(ours == brute);
  }
}

TEST_CASE("enumeration order is lexicographic") {
  auto ms = qtl::enumerate_matchings(4);
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(ms[i - 1].partner() < ms[i].partner());
}

TEST_CASE("composition examples") {
  TLTangle id3 = TLTangle::identity(3);
  TLTangle lam = qtl::enumerate_tl(3, 3)[2];
  auto r = qtl::compose(lam, id3);
  CHECK(r.tangle == lam);
  CHECK(r.circles == 0);

  TLTangle alpha = qtl::enumerate_matchings(1)[0];
  auto c = qtl::compose(alpha, qtl::flip(alpha));
  CHECK(c.tangle == TLTangle::identity(0));
  CHECK(c.circles == 1);

  TLTangle e1 = qtl::compose(TLTangle::cap(2, 0), TLTangle::cup(0, 0)).tangle;
  CHECK(e1 == TLTangle::turnback(2, 0));
  auto ee = qtl::compose(e1, e1);
  CHECK(ee.tangle == e1);
  CHECK(ee.circles == 1);
  CHECK_THROWS_AS(qtl::compose(id3, e1), qtl::ValenceMismatch);
}

TEST_CASE("through degree") {
  CHECK(TLTangle::identity(4).through_degree() == 4);
  for (auto& a : qtl::enumerate_matchings(3)) CHECK(a.through_degree() == 0);
  CHECK(TLTangle::turnback(2, 0).through_degree() == 0);
}

TEST_CASE("text form") {
  TLTangle e1 = TLTangle::turnback(2, 0);
  CHECK(e1.str() == "2,2:[(1,2),(3,4)]");
  CHECK(TLTangle::parse(e1.str()) == e1);
  CHECK(TLTangle::parse("2,2:[(1,3),(2,4)]") == TLTangle::identity(2));
  CHECK_THROWS_AS(TLTangle::parse("2,2:[(1,3),(2,5)]"), qtl::ParseError);
  CHECK(TLTangle::parse("0,0:[]") == TLTangle::identity(0));
  CHECK_THROWS_AS(TLTangle::parse("2,2:[(1,4),(2,3)]"), qtl::MalformedDiagram);
  CHECK(qtl::parse_word("1,2,3") == qtl::CupCapWord{1, 2, 3});
  CHECK(qtl::word_str({2, 1}) == "2,1");
}

TEST_CASE("decomposition examples") {
  auto [I, J] = qtl::cup_cap_decompose(TLTangle::identity(5));
  CHECK(I.empty());
  CHECK(J.empty());
  auto [I1, J1] = qtl::cup_cap_decompose(TLTangle::turnback(2, 0));
  CHECK(I1 == qtl::CupCapWord{1});
  CHECK(J1 == qtl::CupCapWord{1});
}

TEST_CASE("decomposition round trip and canonicity") {
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) {
      if ((m + n) % 2) continue;
      for (auto& t : qtl::enumerate_tl(m, n)) {
        auto [I, J] = qtl::cup_cap_decompose(t);
        CHECK(qtl::is_canonical_word(n, I));
        CHECK(qtl::is_canonical_word(m, J));
        auto r = qtl::compose(qtl::cap_tangle(m, J), qtl::cup_tangle(n, I));
        CHECK(r.circles == 0);
        CHECK(r.tangle == t);
      }
    }
}

TEST_CASE("canonical words are in bijection with cap tangles") {
  for (int n = 0; n <= 9; ++n)
    for (int t = n % 2; t <= n; t += 2) {
      auto words = qtl::enumerate_words(n, t);
      std::set<TLTangle> caps;
      for (auto& w : words) caps.insert(qtl::cap_tangle(n, w));
      CHECK(caps.size() == words.size());
      // cap tangles (n,t) with through degree t are all TL (n,t) tangles of that degree
      std::size_t expected = 0;
      for (auto& x : qtl::enumerate_tl(n, t))
        if (x.through_degree() == t) ++expected;
      CHECK(words.size() == expected);
    }
}

TEST_CASE("flip properties") {
  CHECK(qtl::flip(TLTangle::identity(3)) == TLTangle::identity(3));
  CHECK(qtl::flip(qtl::cup_tangle(6, {2, 1})) == qtl::cap_tangle(6, {2, 1}));
  for (auto& t : all_small(12)) CHECK(qtl::flip(qtl::flip(t)) == t);
}

TEST_CASE("associativity and anti-homomorphism") {
  std::mt19937 rng(3);
  for (int it = 0; it < 300; ++it) {
    std::uniform_int_distribution<int> sz(0, 3);
    int a = sz(rng) * 2, b = sz(rng) * 2, c = sz(rng) * 2, d = sz(rng) * 2;
    auto ts1 = qtl::enumerate_tl(a, b), ts2 = qtl::enumerate_tl(b, c), ts3 = qtl::enumerate_tl(c, d);
    const auto& x = ts1[rng() % ts1.size()];
    const auto& y = ts2[rng() % ts2.size()];
    const auto& z = ts3[rng() % ts3.size()];
    auto xy = qtl::compose(x, y);
    auto left = qtl::compose(xy.tangle, z);
    auto yz = qtl::compose(y, z);
    auto right = qtl::compose(x, yz.tangle);
    CHECK(left.tangle == right.tangle);
    CHECK(left.circles + xy.circles == right.circles + yz.circles);
    CHECK(xy.tangle.through_degree() <= std::min(x.through_degree(), y.through_degree()));
    auto f = qtl::compose(qtl::flip(y), qtl::flip(x));
    CHECK(f.tangle == qtl::flip(xy.tangle));
    CHECK(f.circles == xy.circles);
  }
}
