#include "ncb/permutation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace ncb {

namespace {

using json = nlohmann::json;

// Ground-order key on [±n]: 1..n then -1..-n.
int bkey(int x, int n) { return x > 0 ? x - 1 : n + (-x) - 1; }

std::vector<std::vector<int>> parse_cycle_groups(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  std::vector<std::vector<int>> groups;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + s);
    const std::size_t close = s.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in: " + s);
    std::vector<int> cyc;
    std::size_t j = i + 1;
    while (j < close) {
      std::size_t k = s.find(',', j);
      if (k == std::string::npos || k > close) k = close;
      const std::string tok = s.substr(j, k - j);
      if (tok.empty()) throw std::invalid_argument("empty entry in cycle: " + s);
      char* endp = nullptr;
      const long v = std::strtol(tok.c_str(), &endp, 10);
      if (endp == tok.c_str() || *endp != '\0') {
        throw std::invalid_argument("bad cycle entry '" + tok + "'");
      }
      cyc.push_back(static_cast<int>(v));
      j = k + 1;
    }
    groups.push_back(std::move(cyc));  // "()" yields an empty cycle, i.e. identity
    i = close + 1;
  }
  return groups;
}

}  // namespace

Permutation::Permutation(int n) : n_(n), img_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::domain_error("Permutation needs n >= 1");
  for (int i = 1; i <= n; ++i) img_[i - 1] = i;
}

Permutation::Permutation(int n, std::vector<int> images) : n_(n), img_(std::move(images)) {
  if (n < 1) throw std::domain_error("Permutation needs n >= 1");
  if (static_cast<int>(img_.size()) != n) throw std::invalid_argument("image array has wrong size");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("images are not a bijection of [n]");
    seen[v - 1] = 1;
  }
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("permutation applied outside [n]");
  return img_[i - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) inv[img_[i - 1] - 1] = i;
  return Permutation(n_, std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n_; ++i) {
    if (img_[i - 1] != i) return false;
  }
  return true;
}

bool Permutation::operator<(const Permutation& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return img_ < o.img_;
}

SignedPermutation::SignedPermutation(int n) : n_(n), img_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::domain_error("SignedPermutation needs n >= 1");
  for (int i = 1; i <= n; ++i) img_[i - 1] = i;
}

SignedPermutation::SignedPermutation(int n, std::vector<int> images)
    : n_(n), img_(std::move(images)) {
  if (n < 1) throw std::domain_error("SignedPermutation needs n >= 1");
  if (static_cast<int>(img_.size()) != n) throw std::invalid_argument("image array has wrong size");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : img_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a - 1]) throw std::invalid_argument("images are not a signed bijection");
    seen[a - 1] = 1;
  }
}

int SignedPermutation::operator()(int x) const {
  const int a = std::abs(x);
  if (a < 1 || a > n_) throw std::invalid_argument("signed permutation applied outside [±n]");
  return x > 0 ? img_[a - 1] : -img_[a - 1];
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    const int v = img_[i - 1];
    inv[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(n_, std::move(inv));
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= n_; ++i) {
    if (img_[i - 1] != i) return false;
  }
  return true;
}

bool SignedPermutation::operator<(const SignedPermutation& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return img_ < o.img_;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::domain_error("compose: mismatched groups");
  std::vector<int> img(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) img[i - 1] = a(b(i));
  return Permutation(a.n(), std::move(img));
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.n() != b.n()) throw std::domain_error("compose: mismatched groups");
  std::vector<int> img(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) img[i - 1] = a(b(i));
  return SignedPermutation(a.n(), std::move(img));
}

std::vector<std::vector<int>> cycles(const Permutation& t) {
  std::vector<std::vector<int>> out;
  std::vector<char> done(static_cast<std::size_t>(t.n()), 0);
  for (int i = 1; i <= t.n(); ++i) {
    if (done[i - 1]) continue;
    std::vector<int> cyc;
    int x = i;
    do {
      cyc.push_back(x);
      done[x - 1] = 1;
      x = t(x);
    } while (x != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::vector<int>> cycles(const SignedPermutation& t) {
  const int n = t.n();
  std::vector<std::vector<int>> out;
  std::vector<char> done(static_cast<std::size_t>(2 * n), 0);
  for (int r = 0; r < 2 * n; ++r) {
    const int start = r < n ? r + 1 : -(r - n + 1);
    if (done[bkey(start, n)]) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      cyc.push_back(x);
      done[bkey(x, n)] = 1;
      x = t(x);
    } while (x != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::vector<int>> orbits(const Permutation& t) {
  auto out = cycles(t);
  for (auto& o : out) std::sort(o.begin(), o.end());
  return out;
}

std::vector<std::vector<int>> orbits(const SignedPermutation& t) {
  auto out = cycles(t);
  const int n = t.n();
  for (auto& o : out) {
    std::sort(o.begin(), o.end(), [&](int a, int b) { return bkey(a, n) < bkey(b, n); });
  }
  return out;
}

namespace {

template <class Perm>
std::string cycle_string(const Perm& t) {
  std::string s;
  for (const auto& cyc : cycles(t)) {
    if (cyc.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(cyc[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace

std::string to_cycle_string(const Permutation& t) { return cycle_string(t); }
std::string to_cycle_string(const SignedPermutation& t) { return cycle_string(t); }

Permutation parse_permutation(std::string_view text, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[i - 1] = i;
  std::vector<char> moved(static_cast<std::size_t>(n), 0);
  for (const auto& cyc : parse_cycle_groups(text)) {
    if (cyc.size() < 2) continue;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n) throw std::invalid_argument("cycle entry outside [n]");
      if (moved[from - 1]) throw std::invalid_argument("cycles are not disjoint");
      moved[from - 1] = 1;
      img[from - 1] = to;
    }
  }
  return Permutation(n, std::move(img));
}

SignedPermutation parse_signed_permutation(std::string_view text, int n) {
  std::vector<int> full(static_cast<std::size_t>(2 * n));  // keyed by bkey
  for (int i = 1; i <= n; ++i) {
    full[bkey(i, n)] = i;
    full[bkey(-i, n)] = -i;
  }
  std::vector<char> moved(static_cast<std::size_t>(2 * n), 0);
  for (const auto& cyc : parse_cycle_groups(text)) {
    if (cyc.size() < 2) continue;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from == 0 || std::abs(from) > n || to == 0 || std::abs(to) > n) {
        throw std::invalid_argument("cycle entry outside [±n]");
      }
      if (moved[bkey(from, n)]) throw std::invalid_argument("cycles are not disjoint");
      moved[bkey(from, n)] = 1;
      full[bkey(from, n)] = to;
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (full[bkey(-i, n)] != -full[bkey(i, n)]) {
      throw std::invalid_argument("cycles violate the symmetry tau(-i) = -tau(i)");
    }
  }
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[i - 1] = full[bkey(i, n)];
  return SignedPermutation(n, std::move(img));
}

std::string to_json_string(const Permutation& t) {
  return json{{"group", "S"}, {"n", t.n()}, {"images", t.images()}}.dump();
}

std::string to_json_string(const SignedPermutation& t) {
  return json{{"group", "W"}, {"n", t.n()}, {"images", t.images()}}.dump();
}

Permutation permutation_from_json(std::string_view text) {
  json j = json::parse(text);
  if (j.value("group", "S") != "S") throw std::invalid_argument("expected group S");
  return Permutation(j.at("n").get<int>(), j.at("images").get<std::vector<int>>());
}

SignedPermutation signed_permutation_from_json(std::string_view text) {
  json j = json::parse(text);
  if (j.value("group", "W") != "W") throw std::invalid_argument("expected group W");
  return SignedPermutation(j.at("n").get<int>(), j.at("images").get<std::vector<int>>());
}

}  // namespace ncb
