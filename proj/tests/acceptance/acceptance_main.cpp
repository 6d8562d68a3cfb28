// Acceptance suite: one machine-checked line per criterion, exact
// arithmetic throughout, with pinned size parameters and wall-clock
// budgets. Exit code 0 iff every criterion passes.

#include "ncb/verify.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
  int number;
  std::string description;
  std::string property;
  ncb::VerifyParams params;
  double budget_seconds;
};

}  // namespace

int main() {
  using ncb::VerifyParams;

  std::vector<Criterion> criteria;
  auto add = [&](int number, std::string description, std::string property, VerifyParams params,
                 double budget) {
    criteria.push_back({number, std::move(description), std::move(property), params, budget});
  };

  VerifyParams p;

  p = {};
  p.n = 10;
  add(1, "cardinalities: card NC^(A)(n) = C(2n,n)/(n+1) for n<=10, card NC^(B)(n) = C(2n,n) for n<=8",
      "cardinalities", p, 60.0);

  p = {};
  p.n = 6;
  add(2, "Abs is an (n+1)-to-1 cover of NC^(A)(n) and fibers partition NC^(B)(n), n<=6",
      "abs-cover", p, 30.0);

  p = {};
  p.n = 5;
  add(3, "Kreweras suite: Kr'∘Kr = id, block-count identities, Kr∘Abs = Abs∘Kr, n<=5",
      "kreweras", p, 60.0);

  p = {};
  p.n = 5;
  add(4, "order isomorphisms NC^(A)(n) ≅ [e,c] (n<=5) and NC^(B)(n) ≅ [eps,omega] (n<=4), "
         "iota(Kr(p)) = iota(p)^{-1}c, length identity",
      "embedding", p, 60.0);

  p = {};
  add(5, "word length = Cayley BFS distance (S_4, W_3); cover cases = length+order characterization",
      "word-length", p, 30.0);

  p = {};
  p.n = 4;
  p.samples = 20;
  add(6, "restricted-convolution bridge on [eps,omega] for n = 2..4, 20 samples, with the W_2 "
         "negative control",
      "bridge", p, 60.0);

  p = {};
  p.order = 7;
  p.samples = 50;
  add(7, "NC^(B)-summation boxconv equals the dual-scalar type-A boxconv, order 7, 50 samples",
      "theorem-5-3", p, 120.0);

  p = {};
  p.order = 5;
  p.samples = 20;
  add(8, "boxconv_b is associative and unital at order 5; zeta' and random leads invert",
      "boxconv-algebra", p, 60.0);

  p = {};
  p.order = 6;
  add(9, "cumulant engine: explicit low-order formulas, moment<->cumulant round trips at order 6, "
         "componentwise description, recurrence, scalar vanishing",
      "cumulant-engine", p, 120.0);

  p = {};
  p.order = 6;
  add(10, "M = R boxconv_b zeta' at order 6 with the order-2 expansion reproduced term by term",
      "moment-r-transform", p, 60.0);

  p = {};
  p.order = 5;
  add(11, "freeness suite: constructed pairs pass both characterizations, equivalence on positive "
          "and perturbed instances",
      "freeness", p, 120.0);

  p = {};
  p.order = 5;
  add(11, "sum and product R-transform theorems at order 5 with the intermediate identity",
      "theorem-7-3", p, 120.0);

  p = {};
  p.samples = 10;
  add(12, "order-1..3 boxconv_a coefficients match the closed formulas at 10 random points",
      "eq-5-4", p, 30.0);

  int failures = 0;
  double total = 0.0;
  for (const auto& crit : criteria) {
    const ncb::VerificationReport rep = ncb::run_verify(crit.property, crit.params);
    const bool in_budget = rep.seconds < crit.budget_seconds;
    const bool ok = rep.pass && in_budget;
    total += rep.seconds;
    std::printf("criterion %2d [%s] %-22s %6.2fs  %s\n", crit.number, ok ? "PASS" : "FAIL",
                crit.property.c_str(), rep.seconds, crit.description.c_str());
    if (!rep.pass) std::printf("             detail: %s\n", rep.detail.c_str());
    if (rep.pass && !in_budget) {
      std::printf("             over budget: %.2fs > %.2fs\n", rep.seconds, crit.budget_seconds);
    }
    if (!ok) ++failures;
    std::fflush(stdout);
  }
  std::printf("%d/%zu acceptance checks passed (%.2fs total)\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
