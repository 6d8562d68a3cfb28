#include "ncb/formal_space.hpp"

#include "ncb/freeprob.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncb {

namespace {

void add_to(std::map<FormalSpaceB::Word, Rational>& m, const FormalSpaceB::Word& k, Rational v) {
  auto it = m.find(k);
  if (it == m.end()) {
    if (v != 0) m.emplace(k, std::move(v));
    return;
  }
  it->second += v;
  if (it->second == 0) m.erase(it);
}

void add_to(std::map<FormalSpaceB::VWord, Rational>& m, const FormalSpaceB::VWord& k, Rational v) {
  auto it = m.find(k);
  if (it == m.end()) {
    if (v != 0) m.emplace(k, std::move(v));
    return;
  }
  it->second += v;
  if (it->second == 0) m.erase(it);
}

FormalSpaceB::Word concat(const FormalSpaceB::Word& a, const FormalSpaceB::Word& b) {
  FormalSpaceB::Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string word_str(const FormalSpaceB::Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += "g" + std::to_string(w[i] + 1);
  }
  return s.empty() ? "I" : s;
}

std::string vword_str(const FormalSpaceB::VWord& vw) {
  std::string s = word_str(vw.pre);
  if (s == "I") s.clear();
  if (!s.empty()) s += ' ';
  s += "x" + std::to_string(vw.xi + 1);
  const std::string post = word_str(vw.post);
  if (post != "I") s += ' ' + post;
  return s;
}

}  // namespace

FormalSpaceB FormalSpaceB::from_cumulants(std::vector<SeriesB> prescriptions) {
  if (prescriptions.empty()) throw std::domain_error("FormalSpaceB: need at least one pair");
  FormalSpaceB s;
  s.pair_count_ = static_cast<int>(prescriptions.size());
  s.prescriptions_ = std::move(prescriptions);
  s.degree_bound_ = -1;
  return s;
}

FormalSpaceB FormalSpaceB::from_moment_tables(int pair_count, int degree_bound,
                                              std::map<Word, Rational> phi_table,
                                              std::map<VWord, Rational> f_table) {
  if (pair_count < 1) throw std::domain_error("FormalSpaceB: need at least one pair");
  if (degree_bound < 1) throw std::domain_error("FormalSpaceB: degree bound must be >= 1");
  FormalSpaceB s;
  s.pair_count_ = pair_count;
  s.degree_bound_ = degree_bound;
  s.phi_table_ = std::move(phi_table);
  s.f_table_ = std::move(f_table);
  for (const auto& [w, v] : s.phi_table_) {
    if (w.empty() || static_cast<int>(w.size()) > degree_bound) {
      throw std::invalid_argument("moment table entry outside degree range: " + word_str(w));
    }
    for (int g : w) {
      if (g < 0 || g >= pair_count) throw std::invalid_argument("moment table entry with unknown generator");
    }
  }
  for (const auto& [vw, v] : s.f_table_) {
    const int len = static_cast<int>(vw.pre.size() + 1 + vw.post.size());
    if (len > degree_bound) {
      throw std::invalid_argument("vector moment entry outside degree range: " + vword_str(vw));
    }
    if (vw.xi < 0 || vw.xi >= pair_count) throw std::invalid_argument("vector moment entry with unknown slot");
  }
  // Tables are total up to the bound: missing entries are an error now, not
  // a silent zero later.
  for (const Word& w : s.words_up_to(degree_bound)) {
    if (!s.phi_table_.count(w)) throw std::invalid_argument("moment table incomplete at: " + word_str(w));
  }
  for (const VWord& vw : s.vwords_up_to(degree_bound)) {
    if (!s.f_table_.count(vw)) throw std::invalid_argument("vector moment table incomplete at: " + vword_str(vw));
  }
  return s;
}

FormalSpaceB::Element FormalSpaceB::unit() const { return Element{{Word{}, Rational(1)}}; }

FormalSpaceB::Element FormalSpaceB::zero() const { return Element{}; }

FormalSpaceB::Element FormalSpaceB::generator(int i) const {
  if (i < 0 || i >= pair_count_) throw std::domain_error("generator index out of range");
  return Element{{Word{i}, Rational(1)}};
}

FormalSpaceB::Vector FormalSpaceB::vector_generator(int i) const {
  if (i < 0 || i >= pair_count_) throw std::domain_error("vector generator index out of range");
  return Vector{{VWord{{}, i, {}}, Rational(1)}};
}

std::pair<FormalSpaceB::Element, FormalSpaceB::Vector> FormalSpaceB::pair(int i) const {
  return {generator(i), vector_generator(i)};
}

FormalSpaceB::Element FormalSpaceB::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) add_to(out, concat(wa, wb), ca * cb);
  }
  return out;
}

FormalSpaceB::Element FormalSpaceB::add(const Element& a, const Element& b) const {
  Element out = a;
  for (const auto& [w, c] : b) add_to(out, w, c);
  return out;
}

FormalSpaceB::Element FormalSpaceB::scale(const Rational& r, const Element& a) const {
  Element out;
  if (r == 0) return out;
  for (const auto& [w, c] : a) out.emplace(w, r * c);
  return out;
}

FormalSpaceB::Vector FormalSpaceB::zero_vector() const { return Vector{}; }

FormalSpaceB::Vector FormalSpaceB::vadd(const Vector& v, const Vector& w) const {
  Vector out = v;
  for (const auto& [k, c] : w) add_to(out, k, c);
  return out;
}

FormalSpaceB::Vector FormalSpaceB::vscale(const Rational& r, const Vector& v) const {
  Vector out;
  if (r == 0) return out;
  for (const auto& [k, c] : v) out.emplace(k, r * c);
  return out;
}

FormalSpaceB::Vector FormalSpaceB::act_left(const Element& a, const Vector& v) const {
  Vector out;
  for (const auto& [w, ca] : a) {
    for (const auto& [vw, cv] : v) {
      add_to(out, VWord{concat(w, vw.pre), vw.xi, vw.post}, ca * cv);
    }
  }
  return out;
}

FormalSpaceB::Vector FormalSpaceB::act_right(const Vector& v, const Element& a) const {
  Vector out;
  for (const auto& [vw, cv] : v) {
    for (const auto& [w, ca] : a) {
      add_to(out, VWord{vw.pre, vw.xi, concat(vw.post, w)}, cv * ca);
    }
  }
  return out;
}

Rational FormalSpaceB::phi(const Element& a) const {
  Rational acc(0);
  for (const auto& [w, c] : a) acc += c * word_moment(w);
  return acc;
}

Rational FormalSpaceB::f(const Vector& v) const {
  Rational acc(0);
  for (const auto& [vw, c] : v) acc += c * vword_moment(vw);
  return acc;
}

Rational FormalSpaceB::word_moment(const Word& w) const {
  if (w.empty()) return Rational(1);
  if (cumulant_mode()) return cumulant_word_moment(w);
  if (static_cast<int>(w.size()) > degree_bound_) {
    throw std::domain_error("moment query beyond the degree bound: " + word_str(w));
  }
  auto it = phi_table_.find(w);
  if (it == phi_table_.end()) throw std::domain_error("moment table has no entry for: " + word_str(w));
  return it->second;
}

Rational FormalSpaceB::vword_moment(const VWord& vw) const {
  if (cumulant_mode()) return cumulant_vword_moment(vw);
  const int len = static_cast<int>(vw.pre.size() + 1 + vw.post.size());
  if (len > degree_bound_) {
    throw std::domain_error("vector moment query beyond the degree bound: " + vword_str(vw));
  }
  auto it = f_table_.find(vw);
  if (it == f_table_.end()) throw std::domain_error("vector moment table has no entry for: " + vword_str(vw));
  return it->second;
}

// Sum over non-crossing partitions with generator-pure blocks, decomposed
// by the block through position 0: that block takes a subset of the later
// positions carrying the same generator, and each gap it cuts is an
// independent subproblem.
Rational FormalSpaceB::cumulant_word_moment(const Word& w) const {
  if (w.empty()) return Rational(1);
  auto memo = phi_memo_.find(w);
  if (memo != phi_memo_.end()) return memo->second;

  const int g = w.front();
  const SeriesB& r = prescriptions_[static_cast<std::size_t>(g)];
  std::vector<int> matches;
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (w[j] == g) matches.push_back(static_cast<int>(j));
  }
  Rational acc(0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << matches.size()); ++mask) {
    std::vector<int> block{0};
    for (std::size_t k = 0; k < matches.size(); ++k) {
      if (mask & (std::uint32_t{1} << k)) block.push_back(matches[k]);
    }
    const int card = static_cast<int>(block.size());
    if (card > r.order()) continue;  // cumulants beyond the prescription vanish
    const Rational kappa = r.coeff(card).prime;
    if (kappa == 0) continue;
    Rational term = kappa;
    block.push_back(static_cast<int>(w.size()));  // sentinel closing the last gap
    for (int t = 0; t + 1 < static_cast<int>(block.size()); ++t) {
      const Word gap(w.begin() + block[t] + 1, w.begin() + block[t + 1]);
      if (gap.empty()) continue;
      term *= cumulant_word_moment(gap);
      if (term == 0) break;
    }
    acc += term;
  }
  phi_memo_.emplace(w, acc);
  return acc;
}

Rational FormalSpaceB::cumulant_vword_moment(const VWord& vw) const {
  auto memo = f_memo_.find(vw);
  if (memo != f_memo_.end()) return memo->second;

  const int L = static_cast<int>(vw.pre.size() + 1 + vw.post.size());
  const int vslot = static_cast<int>(vw.pre.size());
  auto token_id = [&](int i) {
    if (i < vslot) return vw.pre[static_cast<std::size_t>(i)];
    if (i == vslot) return vw.xi;
    return vw.post[static_cast<std::size_t>(i - vslot - 1)];
  };

  const int g = token_id(0);
  const SeriesB& r = prescriptions_[static_cast<std::size_t>(g)];
  std::vector<int> matches;
  for (int j = 1; j < L; ++j) {
    if (token_id(j) == g) matches.push_back(j);
  }
  Rational acc(0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << matches.size()); ++mask) {
    std::vector<int> block{0};
    for (std::size_t k = 0; k < matches.size(); ++k) {
      if (mask & (std::uint32_t{1} << k)) block.push_back(matches[k]);
    }
    const int card = static_cast<int>(block.size());
    const bool through_slot =
        std::find(block.begin(), block.end(), vslot) != block.end();
    if (card > r.order()) continue;
    const Rational kappa = through_slot ? r.coeff(card).double_prime / card : r.coeff(card).prime;
    if (kappa == 0) continue;
    Rational term = kappa;
    block.push_back(L);
    for (int t = 0; t + 1 < static_cast<int>(block.size()); ++t) {
      const int lo = block[t] + 1, hi = block[t + 1];
      if (lo >= hi) continue;
      if (vslot >= lo && vslot < hi) {
        VWord sub;
        for (int i = lo; i < vslot; ++i) sub.pre.push_back(token_id(i));
        sub.xi = vw.xi;
        for (int i = vslot + 1; i < hi; ++i) sub.post.push_back(token_id(i));
        term *= cumulant_vword_moment(sub);
      } else {
        Word gap;
        for (int i = lo; i < hi; ++i) gap.push_back(token_id(i));
        term *= cumulant_word_moment(gap);
      }
      if (term == 0) break;
    }
    acc += term;
  }
  f_memo_.emplace(vw, acc);
  return acc;
}

std::vector<FormalSpaceB::Word> FormalSpaceB::words_up_to(int length) const {
  std::vector<Word> out;
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= length; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (int g = 0; g < pair_count_; ++g) {
        Word e = w;
        e.push_back(g);
        out.push_back(e);
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<FormalSpaceB::VWord> FormalSpaceB::vwords_up_to(int length) const {
  std::vector<VWord> out;
  std::vector<Word> all_words{Word{}};
  for (const Word& w : words_up_to(length - 1)) all_words.push_back(w);
  for (const Word& pre : all_words) {
    for (const Word& post : all_words) {
      if (static_cast<int>(pre.size() + 1 + post.size()) > length) continue;
      for (int x = 0; x < pair_count_; ++x) out.push_back(VWord{pre, x, post});
    }
  }
  return out;
}

FormalSpaceB FormalSpaceB::materialized(int bound) const {
  std::map<Word, Rational> phi_table;
  std::map<VWord, Rational> f_table;
  for (const Word& w : words_up_to(bound)) phi_table.emplace(w, word_moment(w));
  for (const VWord& vw : vwords_up_to(bound)) f_table.emplace(vw, vword_moment(vw));
  return from_moment_tables(pair_count_, bound, std::move(phi_table), std::move(f_table));
}

void FormalSpaceB::set_word_moment(const Word& w, Rational value) {
  if (cumulant_mode()) throw std::domain_error("set_word_moment: space is cumulant-generated");
  if (!phi_table_.count(w)) throw std::domain_error("set_word_moment: no such table entry");
  phi_table_[w] = std::move(value);
}

void FormalSpaceB::set_vword_moment(const VWord& vw, Rational value) {
  if (cumulant_mode()) throw std::domain_error("set_vword_moment: space is cumulant-generated");
  if (!f_table_.count(vw)) throw std::domain_error("set_vword_moment: no such table entry");
  f_table_[vw] = std::move(value);
}

FormalSpaceB make_free_pair(const SeriesB& r1, const SeriesB& r2, int order) {
  if (r1.order() != r2.order()) throw std::domain_error("make_free_pair: prescriptions differ in order");
  if (r1.order() < order) throw std::domain_error("make_free_pair: prescriptions shorter than requested order");
  return FormalSpaceB::from_cumulants({r1, r2});
}

namespace {

// All label tuples in {0..k-1}^n, optionally restricted to consecutive
// labels being distinct.
void for_each_labels(int k, int n, bool alternating, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      fn(labels);
      return;
    }
    for (int v = 0; v < k; ++v) {
      if (alternating && i > 0 && labels[static_cast<std::size_t>(i) - 1] == v) continue;
      labels[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

std::string labels_str(const std::vector<int>& labels) {
  std::string s = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(labels[i] + 1);
  }
  return s + ")";
}

bool all_equal(const std::vector<int>& labels) {
  return std::all_of(labels.begin(), labels.end(), [&](int v) { return v == labels.front(); });
}

}  // namespace

FreenessReport mixed_cumulant_check(const FormalSpaceB& space, int depth) {
  FreenessReport report;
  report.depth = depth;
  const int k = space.pair_count();
  for (int n = 2; n <= depth && report.witness.empty(); ++n) {
    for_each_labels(k, n, false, [&](const std::vector<int>& labels) {
      if (!report.witness.empty() || all_equal(labels)) return;

      std::vector<std::pair<FormalSpaceB::Element, FormalSpaceB::Vector>> pairs;
      std::vector<FormalSpaceB::Element> algebra;
      for (int l : labels) {
        pairs.push_back(space.pair(l));
        algebra.push_back(space.generator(l));
      }
      const DualScalar kb = cumulant_b(space, pairs);
      if (!kb.is_zero()) {
        report.witness = "kappa^(B)_" + std::to_string(n) + " at labels " + labels_str(labels) +
                         " = " + to_string(kb);
        return;
      }
      const Rational ka = cumulant_a(space, algebra);
      if (ka != 0) {
        report.witness = "kappa^(A)_" + std::to_string(n) + " at labels " + labels_str(labels) +
                         " = " + rat_str(ka);
        return;
      }
      for (int m = 1; m <= n; ++m) {
        std::vector<FormalSpaceB::Element> others;
        for (int i = 0; i < n; ++i) {
          if (i != m - 1) others.push_back(space.generator(labels[static_cast<std::size_t>(i)]));
        }
        const Rational kap = cumulant_a_prime(
            space, others, space.vector_generator(labels[static_cast<std::size_t>(m) - 1]), m);
        if (kap != 0) {
          report.witness = "kappa^(A')_" + std::to_string(n) + ";" + std::to_string(m) +
                           " at labels " + labels_str(labels) + " = " + rat_str(kap);
          return;
        }
      }
    });
  }
  report.pass = report.witness.empty();
  return report;
}

FreenessReport free_independence_moment_check(const FormalSpaceB& space, int depth) {
  FreenessReport report;
  report.depth = depth;
  const int k = space.pair_count();

  std::vector<FormalSpaceB::Element> centered;
  for (int i = 0; i < k; ++i) {
    const FormalSpaceB::Element g = space.generator(i);
    centered.push_back(space.add(g, space.scale(-space.phi(g), space.unit())));
  }

  // Alternating centered products have vanishing expectation.
  for (int n = 2; n <= depth && report.witness.empty(); ++n) {
    for_each_labels(k, n, true, [&](const std::vector<int>& labels) {
      if (!report.witness.empty()) return;
      FormalSpaceB::Element prod = space.unit();
      for (int l : labels) prod = space.mul(prod, centered[static_cast<std::size_t>(l)]);
      const Rational value = space.phi(prod);
      if (value != 0) {
        report.witness = "phi of alternating centered word at labels " + labels_str(labels) +
                         " = " + rat_str(value);
      }
    });
  }

  // f(a_m ... a_1 xi b_1 ... b_n) obeys the delta-product formula for
  // centered a's and b's with consecutive labels distinct around xi.
  for (int total = 1; total <= depth && report.witness.empty(); ++total) {
    for (int m = 0; m < total && report.witness.empty(); ++m) {
      const int n = total - 1 - m;
      for_each_labels(k, total, true, [&](const std::vector<int>& labels) {
        if (!report.witness.empty()) return;
        // labels = (i_m, ..., i_1, h, j_1, ..., j_n), consecutive distinct
        const int h = labels[static_cast<std::size_t>(m)];
        FormalSpaceB::Vector v = space.vector_generator(h);
        for (int r = 1; r <= m; ++r) {
          v = space.act_left(centered[static_cast<std::size_t>(labels[static_cast<std::size_t>(m - r)])], v);
        }
        for (int r = 1; r <= n; ++r) {
          v = space.act_right(v, centered[static_cast<std::size_t>(labels[static_cast<std::size_t>(m + r)])]);
        }
        const Rational lhs = space.f(v);
        Rational rhs(0);
        if (m == n) {
          rhs = space.f(space.vector_generator(h));
          for (int r = 1; r <= n && rhs != 0; ++r) {
            const int ir = labels[static_cast<std::size_t>(m - r)];
            const int jr = labels[static_cast<std::size_t>(m + r)];
            if (ir != jr) {
              rhs = 0;
              break;
            }
            rhs *= space.phi(space.mul(centered[static_cast<std::size_t>(ir)],
                                       centered[static_cast<std::size_t>(jr)]));
          }
        }
        if (lhs != rhs) {
          report.witness = "xi-word moment at labels " + labels_str(labels) + " (m=" +
                           std::to_string(m) + ", n=" + std::to_string(n) + "): f = " +
                           rat_str(lhs) + ", formula = " + rat_str(rhs);
        }
      });
    }
  }

  report.pass = report.witness.empty();
  return report;
}

std::pair<SeriesB, SeriesB> r_sum_product(const FormalSpaceB& space, const FreenessReport& cert,
                                          int order) {
  if (!cert.pass) throw std::domain_error("r_sum_product: freeness certificate does not pass");
  if (cert.depth < order) {
    throw std::domain_error("r_sum_product: freeness certificate depth below requested order");
  }
  if (space.pair_count() < 2) throw std::domain_error("r_sum_product: space needs two marked pairs");

  const auto [a1, x1] = space.pair(0);
  const auto [a2, x2] = space.pair(1);

  const std::pair<FormalSpaceB::Element, FormalSpaceB::Vector> sum{space.add(a1, a2),
                                                                   space.vadd(x1, x2)};
  const std::pair<FormalSpaceB::Element, FormalSpaceB::Vector> product{
      space.mul(a1, a2), space.vadd(space.act_left(a1, x2), space.act_right(x1, a2))};

  return {r_transform_b(space, sum, order), r_transform_b(space, product, order)};
}

}  // namespace ncb
