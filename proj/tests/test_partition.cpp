#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncb/partition.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace ncb;

namespace {

// Independent oracle: all set partitions of {1..n} via restricted growth
// strings.
std::vector<std::vector<Block>> all_set_partitions(int n) {
  std::vector<std::vector<Block>> out;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int groups) {
    if (i == n) {
      std::vector<Block> blocks(static_cast<std::size_t>(groups));
      for (int j = 0; j < n; ++j) blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(j)])].push_back(j + 1);
      out.push_back(std::move(blocks));
      return;
    }
    for (int g = 0; g <= groups; ++g) {
      assign[static_cast<std::size_t>(i)] = g;
      rec(i + 1, g == groups ? groups + 1 : groups);
    }
  };
  rec(0, 0);
  return out;
}

// Independent crossing test: exists a < b < c < d with a~c, b~d in
// different blocks.
bool has_crossing(const std::vector<Block>& blocks, const GroundOrder& order) {
  std::vector<int> owner(static_cast<std::size_t>(order.size()));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int x : blocks[i]) owner[static_cast<std::size_t>(order.rank(x))] = static_cast<int>(i);
  }
  const int N = order.size();
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      for (int c = b + 1; c < N; ++c)
        for (int d = c + 1; d < N; ++d)
          if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b]) return true;
  return false;
}

}  // namespace

TEST_CASE("non-crossing test on known patterns") {
  GroundOrder a4(GroundOrder::Kind::A, 4);
  CHECK_FALSE(is_noncrossing({{1, 3}, {2, 4}}, a4));
  CHECK(is_noncrossing({{1, 4}, {2, 3}}, a4));
  GroundOrder b4(GroundOrder::Kind::B, 4);
  CHECK(is_noncrossing({{1, 2, -1, -2}, {3, 4}, {-3, -4}}, b4));
  CHECK_THROWS_AS(is_noncrossing({{1, 2}, {2, 3, 4}}, a4), std::invalid_argument);
  CHECK_THROWS_AS(is_noncrossing({{1, 2}}, a4), std::invalid_argument);
}

TEST_CASE("type B ground order is 1..n then -1..-n") {
  GroundOrder b3(GroundOrder::Kind::B, 3);
  CHECK(b3.elements() == std::vector<int>{1, 2, 3, -1, -2, -3});
  CHECK(b3.less(3, -1));
  CHECK(b3.less(-1, -2));
  CHECK_THROWS_AS(b3.rank(4), std::invalid_argument);
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_nca(1).size() == 1);
  CHECK(enumerate_nca(1).front() == NCPartitionA::full(1));
  CHECK(enumerate_nca(3).size() == 5);
  CHECK(enumerate_nca(4).size() == 14);
  // first emitted is the discrete partition, last the full one
  const auto all = enumerate_nca(4);
  CHECK(all.front() == NCPartitionA::discrete(4));
  CHECK(all.back() == NCPartitionA::full(4));
  CHECK_THROWS_AS(enumerate_nca(0), std::domain_error);
  CHECK_THROWS_AS(enumerate_ncb(0), std::domain_error);
}

TEST_CASE("enumeration agrees with the brute-force filter") {
  for (int n = 1; n <= 4; ++n) {
    GroundOrder order(GroundOrder::Kind::A, n);
    std::set<NCPartitionA> expected;
    for (const auto& blocks : all_set_partitions(n)) {
      if (!has_crossing(blocks, order)) expected.insert(NCPartitionA(n, blocks));
    }
    const auto got = enumerate_nca(n);
    CHECK(expected == std::set<NCPartitionA>(got.begin(), got.end()));
    CHECK(got.size() == expected.size());  // no duplicates
  }
  // n=4: exactly the two-crossing pattern is excluded
  CHECK(all_set_partitions(4).size() == 15);
  CHECK(enumerate_nca(4).size() == 14);
}

TEST_CASE("type B enumeration = inversion-invariant filter of NC([±n])") {
  for (int n = 1; n <= 3; ++n) {
    // enumerate NC partitions of the 2n-point ordered set, relabel into
    // [±n], keep the inversion-invariant ones
    GroundOrder order(GroundOrder::Kind::B, n);
    std::set<NCPartitionB> expected;
    for_each_nca(2 * n, [&](const NCPartitionA& p) {
      std::vector<Block> relabeled;
      for (const Block& b : p.blocks()) {
        Block rb;
        for (int r : b) rb.push_back(order.element(r - 1));
        relabeled.push_back(std::move(rb));
      }
      std::set<Block> index;
      for (Block b : relabeled) {
        std::sort(b.begin(), b.end());
        index.insert(std::move(b));
      }
      for (const Block& b : relabeled) {
        Block neg;
        for (int x : b) neg.push_back(-x);
        std::sort(neg.begin(), neg.end());
        if (!index.count(neg)) return;
      }
      expected.insert(NCPartitionB(n, relabeled));
    });
    const auto got = enumerate_ncb(n);
    CHECK(got.size() == expected.size());
    CHECK(std::set<NCPartitionB>(got.begin(), got.end()) == expected);
  }
  CHECK(enumerate_ncb(1).size() == 2);
  CHECK(enumerate_ncb(2).size() == 6);
  CHECK(enumerate_ncb(3).size() == 20);
}

TEST_CASE("kreweras complements, worked examples") {
  const auto p = parse_nca("{(1,2),(3,4)}");
  CHECK(to_string(kreweras(p)) == "{(1),(2,4),(3)}");
  for (int n = 1; n <= 5; ++n) {
    CHECK(kreweras(NCPartitionA::discrete(n)) == NCPartitionA::full(n));
    CHECK(kreweras(NCPartitionA::full(n)) == NCPartitionA::discrete(n));
  }
  const auto pi = parse_ncb("{(1,-2),(-1,2),(3,4),(-3,-4)}");
  CHECK(kreweras(pi) == parse_ncb("{(1,-1),(2,4),(-2,-4),(3),(-3)}"));
}

TEST_CASE("kreweras identities at n = 4") {
  for (const auto& p : enumerate_nca(4)) {
    CHECK(kreweras(kreweras(p), KrewerasSide::Left) == p);
    CHECK(p.block_count() + kreweras(p).block_count() == 5);
  }
  for (const auto& pi : enumerate_ncb(3)) {
    const auto kr = kreweras(pi);
    CHECK(kreweras(kr, KrewerasSide::Left) == pi);
    CHECK(pi.block_count() + kr.block_count() == 7);
    CHECK(pi.zero_block().has_value() != kr.zero_block().has_value());
    CHECK(kreweras(abs_map(pi)) == abs_map(kr));
  }
}

TEST_CASE("kreweras involution and block counts up to n = 6") {
  for (const auto& p : enumerate_nca(6)) {
    CHECK(kreweras(kreweras(p), KrewerasSide::Left) == p);
    CHECK(p.block_count() + kreweras(p).block_count() == 7);
  }
  for_each_ncb(6, [](const NCPartitionB& pi) {
    const auto kr = kreweras(pi);
    CHECK(kreweras(kr, KrewerasSide::Left) == pi);
    CHECK(pi.block_count() + kr.block_count() == 13);
  });
  for_each_ncb(5, [](const NCPartitionB& pi) {
    CHECK(kreweras(abs_map(pi)) == abs_map(kreweras(pi)));
  });
}

TEST_CASE("refinement order") {
  const auto p = parse_nca("{(1),(2,4),(3)}");
  const auto q = parse_nca("{(1),(2,3,4)}");
  CHECK(refinement_leq(p, q));
  CHECK_FALSE(refinement_leq(parse_nca("{(1,2),(3,4)}"), parse_nca("{(1,4),(2,3)}")));
  for (const auto& r : enumerate_nca(4)) {
    CHECK(refinement_leq(NCPartitionA::discrete(4), r));
    CHECK(refinement_leq(r, NCPartitionA::full(4)));
  }
  CHECK_THROWS_AS(refinement_leq(parse_nca("{(1)}"), parse_nca("{(1),(2)}")), std::domain_error);
}

TEST_CASE("meet and join against brute force at n = 4") {
  const auto all = enumerate_nca(4);
  for (const auto& p : all) {
    CHECK(meet(p, NCPartitionA::full(4)) == p);
    CHECK(join(p, NCPartitionA::discrete(4)) == p);
  }
  // the closure example: partition-lattice join of {(1,3)} and {(2,4)} crosses
  const auto j = join(parse_nca("{(1,3),(2),(4)}"), parse_nca("{(2,4),(1),(3)}"));
  CHECK(j == NCPartitionA::full(4));
  for (const auto& p : all) {
    for (const auto& q : all) {
      const auto m = meet(p, q);
      const auto jn = join(p, q);
      for (const auto& r : all) {
        if (refinement_leq(r, p) && refinement_leq(r, q)) CHECK(refinement_leq(r, m));
        if (refinement_leq(p, r) && refinement_leq(q, r)) CHECK(refinement_leq(jn, r));
      }
    }
  }
}

TEST_CASE("absolute value map") {
  CHECK(abs_map(parse_ncb("{(1,2,-1,-2),(3,4),(-3,-4)}")) == parse_nca("{(1,2),(3,4)}"));
  CHECK(abs_map(parse_ncb("{(1,-2),(-1,2),(3,4),(-3,-4)}")) == parse_nca("{(1,2),(3,4)}"));
  CHECK(abs_map(NCPartitionB::discrete(3)) == NCPartitionA::discrete(3));
  CHECK(abs_map(NCPartitionB::full(3)) == NCPartitionA::full(3));
}

TEST_CASE("fibers have size n+1, project correctly and partition NC^(B)") {
  const auto p = parse_nca("{(1,2),(3,4)}");
  const auto fiber = abs_fiber(p);
  REQUIRE(fiber.size() == 5);
  const std::set<NCPartitionB> as_set(fiber.begin(), fiber.end());
  CHECK(as_set.count(parse_ncb("{(1,2,-1,-2),(3,4),(-3,-4)}")) == 1);
  CHECK(as_set.count(parse_ncb("{(1,-2),(-1,2),(3,4),(-3,-4)}")) == 1);
  for (const auto& pi : fiber) CHECK(abs_map(pi) == p);

  // 1_n lifts: one zero-block partition plus n without
  for (int n = 1; n <= 4; ++n) {
    const auto top_fiber = abs_fiber(NCPartitionA::full(n));
    CHECK(top_fiber.size() == static_cast<std::size_t>(n) + 1);
    int with_zero = 0;
    bool has_full = false;
    for (const auto& pi : top_fiber) {
      with_zero += pi.zero_block().has_value();
      has_full = has_full || pi == NCPartitionB::full(n);
    }
    CHECK(with_zero == 1);
    CHECK(has_full);
  }

  // fibers tile NC^(B)(n), cross-checked against the enumeration
  for (int n = 1; n <= 4; ++n) {
    std::set<NCPartitionB> seen;
    for_each_nca(n, [&](const NCPartitionA& q) {
      for (const auto& pi : abs_fiber(q)) CHECK(seen.insert(pi).second);
    });
    CHECK(seen.size() == enumerate_ncb(n).size());
  }
}

TEST_CASE("zero blocks") {
  CHECK(parse_ncb("{(1,-1),(2),(-2)}").zero_block() == Block{1, -1});
  CHECK_FALSE(parse_ncb("{(1,2),(-1,-2)}").zero_block().has_value());
}

TEST_CASE("type B validation rejects broken partitions") {
  CHECK_THROWS_AS(NCPartitionB(2, {{1, 2}, {-1}, {-2}}), std::invalid_argument);  // not invariant
  CHECK_THROWS_AS(NCPartitionB(2, {{1, -1}, {2, -2}}), std::invalid_argument);    // crossing
  CHECK_THROWS_AS(NCPartitionA(0, {}), std::domain_error);
  // (1,-2),(2,-1) is nested in the ground order, hence fine
  CHECK_NOTHROW(NCPartitionB(2, {{1, -2}, {2, -1}}));
}

TEST_CASE("text and json round trips are bit exact on canonical forms") {
  for (const auto& p : enumerate_nca(4)) {
    CHECK(parse_nca(to_string(p)) == p);
    CHECK(nca_from_json(to_json_string(p)) == p);
  }
  for (const auto& pi : enumerate_ncb(3)) {
    CHECK(parse_ncb(to_string(pi)) == pi);
    CHECK(ncb_from_json(to_json_string(pi)) == pi);
  }
  CHECK(parse_nca(" { ( 1 , 2 ) , ( 3 ) } ") == parse_nca("{(1,2),(3)}"));
  CHECK(to_json_string(parse_nca("{(1,2),(3,4)}")) ==
        R"({"blocks":[[1,2],[3,4]],"n":4,"type":"A"})");
  CHECK_THROWS_AS(parse_nca("{(1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_nca("{}"), std::invalid_argument);
}
