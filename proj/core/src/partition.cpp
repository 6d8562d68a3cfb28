#include "ncb/partition.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncb {

namespace {

using json = nlohmann::json;

std::string block_str(const Block& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(b[i]);
  }
  s += ')';
  return s;
}

// Sorts elements within blocks, and blocks by their minima, under `order`.
std::vector<Block> canonicalize(std::vector<Block> blocks, const GroundOrder& order) {
  for (Block& b : blocks) {
    std::sort(b.begin(), b.end(), [&](int a, int c) { return order.less(a, c); });
  }
  std::sort(blocks.begin(), blocks.end(), [&](const Block& x, const Block& y) {
    return order.less(x.front(), y.front());
  });
  return blocks;
}

void validate_partition(const std::vector<Block>& blocks, const GroundOrder& order) {
  std::vector<char> seen(order.size(), 0);
  int covered = 0;
  for (const Block& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    for (int x : b) {
      const int r = order.rank(x);  // throws on foreign elements
      if (seen[r]) {
        throw std::invalid_argument("element " + std::to_string(x) + " appears in two blocks");
      }
      seen[r] = 1;
      ++covered;
    }
  }
  if (covered != order.size()) throw std::invalid_argument("blocks do not cover the ground set");
}

// Two disjoint blocks cross iff, scanning the ground order restricted to
// their union, the block label changes at least three times.
bool blocks_cross(const Block& x, const Block& y, const GroundOrder& order) {
  std::vector<std::pair<int, int>> merged;  // (rank, label)
  merged.reserve(x.size() + y.size());
  for (int a : x) merged.emplace_back(order.rank(a), 0);
  for (int a : y) merged.emplace_back(order.rank(a), 1);
  std::sort(merged.begin(), merged.end());
  int switches = 0;
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i].second != merged[i - 1].second) ++switches;
  }
  return switches >= 3;
}

bool any_crossing(const std::vector<Block>& blocks, const GroundOrder& order) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks_cross(blocks[i], blocks[j], order)) return true;
    }
  }
  return false;
}

// Kreweras complement on an arbitrary ordered ground set. Complement point
// i sits after ground element i (Right) or before it (Left); two complement
// points share a block iff no block of `blocks` has elements strictly on
// both circular sides of them.
std::vector<Block> kreweras_blocks(const std::vector<Block>& blocks, const GroundOrder& order,
                                   KrewerasSide side) {
  const int N = order.size();
  std::vector<int> block_of(N, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) block_of[order.rank(x)] = static_cast<int>(b);
  }

  // prefix[b][r] = number of block-b elements among ranks < r
  std::vector<std::vector<int>> prefix(blocks.size(), std::vector<int>(N + 1, 0));
  for (int r = 0; r < N; ++r) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      prefix[b][r + 1] = prefix[b][r] + (block_of[r] == static_cast<int>(b) ? 1 : 0);
    }
  }
  auto count_in = [&](std::size_t b, int lo, int hi) {  // ranks in [lo, hi)
    if (lo >= hi) return 0;
    return prefix[b][hi] - prefix[b][lo];
  };

  // Slot i (0-based) follows ground rank i on the Right, precedes it on the
  // Left. For slots i < j the forward arc of ground ranks is:
  //   Right: [i+1, j+1)    Left: [i, j)
  // and the complementary arc is the rest.
  auto separated = [&](int i, int j) {
    const int lo = side == KrewerasSide::Right ? i + 1 : i;
    const int hi = side == KrewerasSide::Right ? j + 1 : j;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const int inside = count_in(b, lo, hi);
      const int total = static_cast<int>(blocks[b].size());
      if (inside > 0 && inside < total) return true;
    }
    return false;
  };

  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      if (!separated(i, j)) parent[find(j)] = find(i);
    }
  }

  std::map<int, Block> classes;
  for (int r = 0; r < N; ++r) classes[find(r)].push_back(order.element(r));
  std::vector<Block> out;
  out.reserve(classes.size());
  for (auto& [root, cls] : classes) out.push_back(std::move(cls));
  return canonicalize(std::move(out), order);
}

bool refinement_leq_blocks(const std::vector<Block>& p, const std::vector<Block>& q,
                           const GroundOrder& order) {
  std::vector<int> q_block(order.size(), -1);
  for (std::size_t b = 0; b < q.size(); ++b) {
    for (int x : q[b]) q_block[order.rank(x)] = static_cast<int>(b);
  }
  for (const Block& b : p) {
    const int owner = q_block[order.rank(b.front())];
    for (int x : b) {
      if (q_block[order.rank(x)] != owner) return false;
    }
  }
  return true;
}

std::vector<Block> meet_blocks(const std::vector<Block>& p, const std::vector<Block>& q,
                               const GroundOrder& order) {
  std::vector<int> pb(order.size()), qb(order.size());
  for (std::size_t b = 0; b < p.size(); ++b)
    for (int x : p[b]) pb[order.rank(x)] = static_cast<int>(b);
  for (std::size_t b = 0; b < q.size(); ++b)
    for (int x : q[b]) qb[order.rank(x)] = static_cast<int>(b);
  std::map<std::pair<int, int>, Block> cells;
  for (int r = 0; r < order.size(); ++r) {
    cells[{pb[r], qb[r]}].push_back(order.element(r));
  }
  std::vector<Block> out;
  for (auto& [key, cell] : cells) out.push_back(std::move(cell));
  return canonicalize(std::move(out), order);
}

std::vector<Block> join_blocks(const std::vector<Block>& p, const std::vector<Block>& q,
                               const GroundOrder& order) {
  // Partition-lattice join via union-find over elements.
  const int N = order.size();
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite_block = [&](const Block& b) {
    for (std::size_t i = 1; i < b.size(); ++i) {
      parent[find(order.rank(b[i]))] = find(order.rank(b[0]));
    }
  };
  for (const Block& b : p) unite_block(b);
  for (const Block& b : q) unite_block(b);

  std::map<int, Block> classes;
  for (int r = 0; r < N; ++r) classes[find(r)].push_back(order.element(r));
  std::vector<Block> out;
  for (auto& [root, cls] : classes) out.push_back(std::move(cls));
  out = canonicalize(std::move(out), order);

  // Non-crossing closure: merge crossing pairs to a fixed point.
  for (;;) {
    bool merged = false;
    for (std::size_t i = 0; i < out.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < out.size() && !merged; ++j) {
        if (blocks_cross(out[i], out[j], order)) {
          out[i].insert(out[i].end(), out[j].begin(), out[j].end());
          out.erase(out.begin() + static_cast<long>(j));
          out = canonicalize(std::move(out), order);
          merged = true;
        }
      }
    }
    if (!merged) break;
  }
  return out;
}

// Enumerates every non-crossing partition of the ordered list `elems`,
// appending blocks to `acc` around the recursive calls. See the header for
// the documented order.
void enumerate_nc_of(const std::vector<int>& elems, std::vector<Block>& acc,
                     const std::function<void(const std::vector<Block>&)>& emit) {
  if (elems.empty()) {
    emit(acc);
    return;
  }
  const int first = elems.front();
  const std::vector<int> rest(elems.begin() + 1, elems.end());
  const std::size_t m = rest.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Block head{first};
    std::vector<std::vector<int>> gaps;
    std::vector<int> gap;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (std::uint64_t{1} << k)) {
        head.push_back(rest[k]);
        gaps.push_back(std::move(gap));
        gap.clear();
      } else {
        gap.push_back(rest[k]);
      }
    }
    gaps.push_back(std::move(gap));

    acc.push_back(std::move(head));
    std::function<void(std::size_t)> fill = [&](std::size_t g) {
      if (g == gaps.size()) {
        emit(acc);
        return;
      }
      enumerate_nc_of(gaps[g], acc, [&](const std::vector<Block>&) { fill(g + 1); });
    };
    fill(0);
    acc.pop_back();
  }
}

Block negate_block(const Block& b) {
  Block out;
  out.reserve(b.size());
  for (int x : b) out.push_back(-x);
  return out;
}

std::vector<Block> parse_blocks(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw std::invalid_argument("partition literal must be wrapped in {...}: " + s);
  }
  std::vector<Block> blocks;
  std::size_t i = 1;
  const std::size_t end = s.size() - 1;
  while (i < end) {
    if (s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw std::invalid_argument("expected '(' in partition literal: " + s);
    const std::size_t close = s.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in: " + s);
    Block b;
    std::size_t j = i + 1;
    while (j < close) {
      std::size_t k = s.find(',', j);
      if (k == std::string::npos || k > close) k = close;
      const std::string tok = s.substr(j, k - j);
      if (tok.empty()) throw std::invalid_argument("empty entry in partition literal: " + s);
      char* endp = nullptr;
      const long v = std::strtol(tok.c_str(), &endp, 10);
      if (endp == tok.c_str() || *endp != '\0') {
        throw std::invalid_argument("bad entry '" + tok + "' in partition literal");
      }
      b.push_back(static_cast<int>(v));
      j = k + 1;
    }
    if (b.empty()) throw std::invalid_argument("empty block in partition literal: " + s);
    blocks.push_back(std::move(b));
    i = close + 1;
  }
  if (blocks.empty()) throw std::invalid_argument("partition literal has no blocks: " + s);
  return blocks;
}

}  // namespace

// Avoids revalidating partitions produced by trusted internal constructions.
class PartitionFactory {
 public:
  static NCPartitionA make_a(int n, std::vector<Block> blocks) {
    return NCPartitionA(NCPartitionA::Trusted{}, n, std::move(blocks));
  }
  static NCPartitionB make_b(int n, std::vector<Block> blocks) {
    return NCPartitionB(NCPartitionB::Trusted{}, n, std::move(blocks));
  }
};

GroundOrder::GroundOrder(Kind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) throw std::domain_error("ground set needs n >= 1");
}

int GroundOrder::rank(int x) const {
  if (kind_ == Kind::A) {
    if (x < 1 || x > n_) throw std::invalid_argument("element " + std::to_string(x) + " outside [n]");
    return x - 1;
  }
  if (x >= 1 && x <= n_) return x - 1;
  if (x <= -1 && x >= -n_) return n_ + (-x) - 1;
  throw std::invalid_argument("element " + std::to_string(x) + " outside [±n]");
}

int GroundOrder::element(int rank) const {
  if (rank < 0 || rank >= size()) throw std::invalid_argument("rank out of range");
  if (kind_ == Kind::A) return rank + 1;
  return rank < n_ ? rank + 1 : -(rank - n_ + 1);
}

bool GroundOrder::contains(int x) const {
  if (x == 0) return false;
  return kind_ == Kind::A ? (x >= 1 && x <= n_) : (std::abs(x) >= 1 && std::abs(x) <= n_);
}

std::vector<int> GroundOrder::elements() const {
  std::vector<int> out(size());
  for (int r = 0; r < size(); ++r) out[r] = element(r);
  return out;
}

bool is_noncrossing(const std::vector<Block>& blocks, const GroundOrder& order) {
  validate_partition(blocks, order);
  return !any_crossing(blocks, order);
}

NCPartitionA::NCPartitionA(int n, std::vector<Block> blocks) : n_(n) {
  if (n < 1) throw std::domain_error("NCPartitionA needs n >= 1");
  GroundOrder order(GroundOrder::Kind::A, n);
  validate_partition(blocks, order);
  blocks_ = canonicalize(std::move(blocks), order);
  if (any_crossing(blocks_, order)) throw std::invalid_argument("partition is crossing");
}

NCPartitionA::NCPartitionA(Trusted, int n, std::vector<Block> blocks)
    : n_(n), blocks_(std::move(blocks)) {}

NCPartitionA NCPartitionA::discrete(int n) {
  if (n < 1) throw std::domain_error("NCPartitionA needs n >= 1");
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return PartitionFactory::make_a(n, std::move(blocks));
}

NCPartitionA NCPartitionA::full(int n) {
  if (n < 1) throw std::domain_error("NCPartitionA needs n >= 1");
  Block all(n);
  std::iota(all.begin(), all.end(), 1);
  return PartitionFactory::make_a(n, {all});
}

bool NCPartitionA::operator<(const NCPartitionA& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return blocks_ < o.blocks_;
}

NCPartitionB::NCPartitionB(int n, std::vector<Block> blocks) : n_(n) {
  if (n < 1) throw std::domain_error("NCPartitionB needs n >= 1");
  GroundOrder order(GroundOrder::Kind::B, n);
  validate_partition(blocks, order);
  blocks_ = canonicalize(std::move(blocks), order);
  if (any_crossing(blocks_, order)) throw std::invalid_argument("partition is crossing");

  std::set<Block> index(blocks_.begin(), blocks_.end());
  int invariant = 0;
  for (const Block& b : blocks_) {
    Block neg = canonicalize({negate_block(b)}, order).front();
    if (!index.count(neg)) {
      throw std::invalid_argument("partition is not inversion invariant: block " + block_str(b));
    }
    if (neg == b) ++invariant;
  }
  if (invariant > 1) throw std::invalid_argument("more than one inversion-invariant block");
}

NCPartitionB::NCPartitionB(Trusted, int n, std::vector<Block> blocks)
    : n_(n), blocks_(std::move(blocks)) {}

NCPartitionB NCPartitionB::discrete(int n) {
  if (n < 1) throw std::domain_error("NCPartitionB needs n >= 1");
  GroundOrder order(GroundOrder::Kind::B, n);
  std::vector<Block> blocks;
  for (int x : order.elements()) blocks.push_back({x});
  return PartitionFactory::make_b(n, std::move(blocks));
}

NCPartitionB NCPartitionB::full(int n) {
  if (n < 1) throw std::domain_error("NCPartitionB needs n >= 1");
  return PartitionFactory::make_b(n, {GroundOrder(GroundOrder::Kind::B, n).elements()});
}

std::optional<Block> NCPartitionB::zero_block() const {
  GroundOrder order(GroundOrder::Kind::B, n_);
  for (const Block& b : blocks_) {
    if (canonicalize({negate_block(b)}, order).front() == b) return b;
  }
  return std::nullopt;
}

bool NCPartitionB::operator<(const NCPartitionB& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return blocks_ < o.blocks_;
}

NCPartitionA kreweras(const NCPartitionA& p, KrewerasSide side) {
  GroundOrder order(GroundOrder::Kind::A, p.n());
  return PartitionFactory::make_a(p.n(), kreweras_blocks(p.blocks(), order, side));
}

NCPartitionB kreweras(const NCPartitionB& p, KrewerasSide side) {
  GroundOrder order(GroundOrder::Kind::B, p.n());
  // checked constructor: the complement must again be inversion invariant
  return NCPartitionB(p.n(), kreweras_blocks(p.blocks(), order, side));
}

bool refinement_leq(const NCPartitionA& p, const NCPartitionA& q) {
  if (p.n() != q.n()) throw std::domain_error("refinement_leq: mismatched n");
  return refinement_leq_blocks(p.blocks(), q.blocks(), GroundOrder(GroundOrder::Kind::A, p.n()));
}

bool refinement_leq(const NCPartitionB& p, const NCPartitionB& q) {
  if (p.n() != q.n()) throw std::domain_error("refinement_leq: mismatched n");
  return refinement_leq_blocks(p.blocks(), q.blocks(), GroundOrder(GroundOrder::Kind::B, p.n()));
}

NCPartitionA meet(const NCPartitionA& p, const NCPartitionA& q) {
  if (p.n() != q.n()) throw std::domain_error("meet: mismatched n");
  return PartitionFactory::make_a(
      p.n(), meet_blocks(p.blocks(), q.blocks(), GroundOrder(GroundOrder::Kind::A, p.n())));
}

NCPartitionA join(const NCPartitionA& p, const NCPartitionA& q) {
  if (p.n() != q.n()) throw std::domain_error("join: mismatched n");
  return PartitionFactory::make_a(
      p.n(), join_blocks(p.blocks(), q.blocks(), GroundOrder(GroundOrder::Kind::A, p.n())));
}

NCPartitionB meet(const NCPartitionB& p, const NCPartitionB& q) {
  if (p.n() != q.n()) throw std::domain_error("meet: mismatched n");
  return NCPartitionB(p.n(),
                      meet_blocks(p.blocks(), q.blocks(), GroundOrder(GroundOrder::Kind::B, p.n())));
}

NCPartitionB join(const NCPartitionB& p, const NCPartitionB& q) {
  if (p.n() != q.n()) throw std::domain_error("join: mismatched n");
  return NCPartitionB(p.n(),
                      join_blocks(p.blocks(), q.blocks(), GroundOrder(GroundOrder::Kind::B, p.n())));
}

void for_each_nca(int n, const std::function<void(const NCPartitionA&)>& fn) {
  if (n < 1) throw std::domain_error("enumerate_nca needs n >= 1");
  GroundOrder order(GroundOrder::Kind::A, n);
  std::vector<Block> acc;
  enumerate_nc_of(order.elements(), acc, [&](const std::vector<Block>& blocks) {
    fn(PartitionFactory::make_a(n, canonicalize(blocks, order)));
  });
}

std::vector<NCPartitionA> enumerate_nca(int n) {
  std::vector<NCPartitionA> out;
  for_each_nca(n, [&](const NCPartitionA& p) { out.push_back(p); });
  return out;
}

const std::vector<NCPartitionA>& nca_cache(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<NCPartitionA>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_nca(n)).first;
  return it->second;
}

void for_each_ncb(int n, const std::function<void(const NCPartitionB&)>& fn) {
  if (n < 1) throw std::domain_error("enumerate_ncb needs n >= 1");
  for_each_nca(n, [&](const NCPartitionA& p) {
    for (const NCPartitionB& pi : abs_fiber(p)) fn(pi);
  });
}

std::vector<NCPartitionB> enumerate_ncb(int n) {
  std::vector<NCPartitionB> out;
  for_each_ncb(n, [&](const NCPartitionB& p) { out.push_back(p); });
  return out;
}

NCPartitionA abs_map(const NCPartitionB& pi) {
  std::set<Block> uniq;
  for (const Block& b : pi.blocks()) {
    std::set<int> abs_set;
    for (int x : b) abs_set.insert(std::abs(x));
    uniq.insert(Block(abs_set.begin(), abs_set.end()));
  }
  return NCPartitionA(pi.n(), std::vector<Block>(uniq.begin(), uniq.end()));
}

namespace {

// Lifts `p` to the unique element of NC^(B)(n) whose zero-block has
// absolute value `p.blocks()[chosen]`. Every other block of p sits inside
// one circular gap of the chosen block and is lifted to the region of
// [±n] \ zero-block that projects onto that gap.
NCPartitionB lift_with_zero_block(const NCPartitionA& p, std::size_t chosen) {
  const Block& a = p.blocks()[chosen];
  const int lo = a.front(), hi = a.back();
  std::vector<Block> out;
  Block zero = a;
  for (int x : a) zero.push_back(-x);
  out.push_back(std::move(zero));
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    if (i == chosen) continue;
    const Block& f = p.blocks()[i];
    Block x;
    if (f.front() > lo && f.back() < hi) {
      x = f;  // interior gap: all representatives positive
    } else {
      // outside gap: elements above the chosen block stay positive,
      // elements below it flip sign (region (max a, -min a) of the circle)
      for (int e : f) x.push_back(e > hi ? e : -e);
    }
    out.push_back(x);
    out.push_back(negate_block(x));
  }
  return NCPartitionB(p.n(), std::move(out));
}

}  // namespace

std::vector<NCPartitionB> abs_fiber(const NCPartitionA& p) {
  std::vector<NCPartitionB> fiber;
  fiber.reserve(static_cast<std::size_t>(p.n()) + 1);
  for (std::size_t m = 0; m < p.blocks().size(); ++m) {
    fiber.push_back(lift_with_zero_block(p, m));
  }
  const NCPartitionA q = kreweras(p);
  for (std::size_t m = 0; m < q.blocks().size(); ++m) {
    fiber.push_back(kreweras(lift_with_zero_block(q, m), KrewerasSide::Left));
  }
  return fiber;
}

std::string to_string(const NCPartitionA& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    if (i) s += ',';
    s += block_str(p.blocks()[i]);
  }
  return s + "}";
}

std::string to_string(const NCPartitionB& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    if (i) s += ',';
    s += block_str(p.blocks()[i]);
  }
  return s + "}";
}

namespace {

int infer_n(const std::vector<Block>& blocks) {
  int n = 0;
  for (const Block& b : blocks)
    for (int x : b) n = std::max(n, std::abs(x));
  return n;
}

}  // namespace

NCPartitionA parse_nca(std::string_view text) {
  auto blocks = parse_blocks(text);
  const int n = infer_n(blocks);
  return NCPartitionA(n, std::move(blocks));
}

NCPartitionB parse_ncb(std::string_view text) {
  auto blocks = parse_blocks(text);
  const int n = infer_n(blocks);
  return NCPartitionB(n, std::move(blocks));
}

std::string to_json_string(const NCPartitionA& p) {
  json j{{"n", p.n()}, {"type", "A"}, {"blocks", p.blocks()}};
  return j.dump();
}

std::string to_json_string(const NCPartitionB& p) {
  json j{{"n", p.n()}, {"type", "B"}, {"blocks", p.blocks()}};
  return j.dump();
}

namespace {

std::pair<int, std::vector<Block>> partition_from_json(std::string_view text, const char* want) {
  json j = json::parse(text);
  if (!j.contains("n") || !j.contains("type") || !j.contains("blocks")) {
    throw std::invalid_argument("partition json needs n/type/blocks");
  }
  if (j["type"] != want) throw std::invalid_argument("partition json has wrong type tag");
  return {j["n"].get<int>(), j["blocks"].get<std::vector<Block>>()};
}

}  // namespace

NCPartitionA nca_from_json(std::string_view text) {
  auto [n, blocks] = partition_from_json(text, "A");
  return NCPartitionA(n, std::move(blocks));
}

NCPartitionB ncb_from_json(std::string_view text) {
  auto [n, blocks] = partition_from_json(text, "B");
  return NCPartitionB(n, std::move(blocks));
}

}  // namespace ncb
