// ncb — exact-arithmetic toolkit for non-crossing partition lattices of
// types A and B, hyperoctahedral Cayley-graph order, boxed convolutions and
// type-B free cumulants. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include "ncb/cayley.hpp"
#include "ncb/embed.hpp"
#include "ncb/formal_space.hpp"
#include "ncb/freeprob.hpp"
#include "ncb/partition.hpp"
#include "ncb/series.hpp"
#include "ncb/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using json = nlohmann::json;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  std::string format = "text";
  std::uint64_t seed = 1;
  int bound = -1;  // overrides the per-command default when >= 0
};

bool looks_type_b(const std::string& literal) { return literal.find('-') != std::string::npos; }

int enum_bound(const GlobalOpts& g, bool type_b) {
  if (g.bound > 0) return g.bound;
  return type_b ? 6 : 8;
}

json partition_json(const ncb::NCPartitionA& p) { return json::parse(ncb::to_json_string(p)); }
json partition_json(const ncb::NCPartitionB& p) { return json::parse(ncb::to_json_string(p)); }

// --- space description files -------------------------------------------
//
// Cumulant mode:
//   {"pairs":[{"name":"g1","R":[[1,1],[0,0]]},{"name":"g2","R":[[1,0],[2,3]]}]}
// Moment mode:
//   {"degree_bound":4, "generators":["g1","g2"],
//    "moments":[{"word":"g1 g1","value":"3/2"}, {"word":"g1 x2","value":2}, ...]}
// In words, "x" or "xK" marks the vector slot (bare "x" means x1).

std::vector<std::string> space_names(const json& j) {
  std::vector<std::string> names;
  if (j.contains("pairs")) {
    for (const auto& p : j.at("pairs")) names.push_back(p.at("name").get<std::string>());
  } else {
    names = j.at("generators").get<std::vector<std::string>>();
  }
  return names;
}

ncb::Rational value_from_json(const json& v) {
  if (v.is_number_integer()) return ncb::Rational(v.get<long>());
  if (v.is_string()) return ncb::rat_parse(v.get<std::string>());
  throw std::invalid_argument("moment values must be integers or 'p/q' strings");
}

ncb::FormalSpaceB space_from_json(const json& j) {
  const auto names = space_names(j);
  auto name_index = [&](const std::string& tok) -> int {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == tok) return static_cast<int>(i);
    }
    throw std::invalid_argument("unknown generator '" + tok + "' in space description");
  };

  if (j.contains("pairs")) {
    std::vector<ncb::SeriesB> prescriptions;
    for (const auto& p : j.at("pairs")) {
      prescriptions.push_back(ncb::parse_series_b(p.at("R").dump()));
    }
    return ncb::FormalSpaceB::from_cumulants(std::move(prescriptions));
  }

  const int bound = j.at("degree_bound").get<int>();
  const int k = static_cast<int>(names.size());
  std::map<ncb::FormalSpaceB::Word, ncb::Rational> phi_table;
  std::map<ncb::FormalSpaceB::VWord, ncb::Rational> f_table;
  for (const auto& entry : j.at("moments")) {
    std::istringstream words(entry.at("word").get<std::string>());
    ncb::FormalSpaceB::Word pre, post;
    std::optional<int> slot;
    std::string tok;
    while (words >> tok) {
      if (tok == "x" || (tok.size() > 1 && tok[0] == 'x' &&
                         tok.find_first_not_of("0123456789", 1) == std::string::npos)) {
        if (slot) {
          throw std::invalid_argument("word has two vector slots: " +
                                      entry.at("word").get<std::string>());
        }
        slot = tok == "x" ? 0 : std::stoi(tok.substr(1)) - 1;
        if (*slot < 0 || *slot >= k) throw std::invalid_argument("vector slot index out of range");
      } else {
        (slot ? post : pre).push_back(name_index(tok));
      }
    }
    const ncb::Rational value = value_from_json(entry.at("value"));
    if (slot) {
      f_table[{pre, *slot, post}] = value;
    } else {
      if (pre.empty()) throw std::invalid_argument("empty word in moment table");
      phi_table[pre] = value;
    }
  }
  return ncb::FormalSpaceB::from_moment_tables(k, bound, std::move(phi_table), std::move(f_table));
}

// --- subcommand bodies ---------------------------------------------------

int run_enum(const GlobalOpts& g, const std::string& type, int n, bool count_only) {
  const bool type_b = type == "B";
  const int bound = enum_bound(g, type_b);
  if (n < 1 || n > bound) {
    std::cerr << "enum: n must be between 1 and " << bound << " (raise with --bound)\n";
    return kExitUsage;
  }
  if (count_only) {
    long count = 0;
    if (type_b) {
      ncb::for_each_ncb(n, [&](const ncb::NCPartitionB&) { ++count; });
    } else {
      ncb::for_each_nca(n, [&](const ncb::NCPartitionA&) { ++count; });
    }
    std::cout << count << "\n";
    return 0;
  }
  if (g.format == "json") {
    json arr = json::array();
    if (type_b) {
      ncb::for_each_ncb(n, [&](const ncb::NCPartitionB& p) { arr.push_back(partition_json(p)); });
    } else {
      ncb::for_each_nca(n, [&](const ncb::NCPartitionA& p) { arr.push_back(partition_json(p)); });
    }
    std::cout << arr.dump() << "\n";
    return 0;
  }
  if (type_b) {
    ncb::for_each_ncb(n, [&](const ncb::NCPartitionB& p) { std::cout << ncb::to_string(p) << "\n"; });
  } else {
    ncb::for_each_nca(n, [&](const ncb::NCPartitionA& p) { std::cout << ncb::to_string(p) << "\n"; });
  }
  return 0;
}

int run_kreweras(const GlobalOpts& g, const std::string& literal, bool left) {
  const ncb::KrewerasSide side = left ? ncb::KrewerasSide::Left : ncb::KrewerasSide::Right;
  if (looks_type_b(literal)) {
    const auto result = ncb::kreweras(ncb::parse_ncb(literal), side);
    std::cout << (g.format == "json" ? ncb::to_json_string(result) : ncb::to_string(result)) << "\n";
  } else {
    const auto result = ncb::kreweras(ncb::parse_nca(literal), side);
    std::cout << (g.format == "json" ? ncb::to_json_string(result) : ncb::to_string(result)) << "\n";
  }
  return 0;
}

int run_abs(const GlobalOpts& g, const std::string& literal) {
  const auto result = ncb::abs_map(ncb::parse_ncb(literal));
  std::cout << (g.format == "json" ? ncb::to_json_string(result) : ncb::to_string(result)) << "\n";
  return 0;
}

int run_fiber(const GlobalOpts& g, const std::string& literal) {
  const auto fiber = ncb::abs_fiber(ncb::parse_nca(literal));
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& pi : fiber) arr.push_back(partition_json(pi));
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& pi : fiber) std::cout << ncb::to_string(pi) << "\n";
  }
  return 0;
}

int run_iota(const GlobalOpts& g, const std::string& literal, bool use_gamma, bool inverse,
             const std::string& group, int n) {
  if (inverse) {
    if (n < 1) {
      std::cerr << "iota --inverse needs --n\n";
      return kExitUsage;
    }
    if (group == "W") {
      const auto pi = ncb::iota_inverse(ncb::parse_signed_permutation(literal, n));
      std::cout << (g.format == "json" ? ncb::to_json_string(pi) : ncb::to_string(pi)) << "\n";
    } else {
      const auto p = ncb::iota_inverse(ncb::parse_permutation(literal, n));
      std::cout << (g.format == "json" ? ncb::to_json_string(p) : ncb::to_string(p)) << "\n";
    }
    return 0;
  }
  std::string out;
  if (looks_type_b(literal)) {
    const auto t = ncb::iota_b(ncb::parse_ncb(literal));
    out = g.format == "json" ? ncb::to_json_string(t) : ncb::to_cycle_string(t);
  } else if (use_gamma) {
    const auto t = ncb::iota_gamma(ncb::parse_nca(literal));
    out = g.format == "json" ? ncb::to_json_string(t) : ncb::to_cycle_string(t);
  } else {
    const auto t = ncb::iota_a(ncb::parse_nca(literal));
    out = g.format == "json" ? ncb::to_json_string(t) : ncb::to_cycle_string(t);
  }
  std::cout << out << "\n";
  return 0;
}

int run_interval(const GlobalOpts& g, const std::string& group, int n, const std::string& top,
                 bool count_only) {
  const int bound = g.bound > 0 ? g.bound : 6;
  if (n < 1 || n > bound) {
    std::cerr << "interval: n must be between 1 and " << bound << " (raise with --bound)\n";
    return kExitUsage;
  }
  auto print_elems = [&](const auto& elems) {
    if (count_only) {
      std::cout << elems.size() << "\n";
    } else if (g.format == "json") {
      json arr = json::array();
      for (const auto& t : elems) arr.push_back(json::parse(ncb::to_json_string(t)));
      std::cout << arr.dump() << "\n";
    } else {
      for (const auto& t : elems) std::cout << ncb::to_cycle_string(t) << "\n";
    }
  };
  if (group == "W") {
    ncb::SignedPermutation t = top == "omega"   ? ncb::omega_b(n)
                               : top == "gamma" ? ncb::gamma_b(n)
                                                : ncb::parse_signed_permutation(top, n);
    print_elems(ncb::interval(t));
  } else {
    ncb::Permutation t = top == "c" ? ncb::long_cycle_a(n) : ncb::parse_permutation(top, n);
    print_elems(ncb::interval(t));
  }
  return 0;
}

int run_boxconv(const GlobalOpts& g, const std::string& type, const std::string& f_str,
                const std::string& g_str, int order, bool check_5_3) {
  const int max_order = g.bound > 0 ? g.bound : 8;
  auto checked_order = [&](int parsed) {
    const int n = order > 0 ? order : parsed;
    if (n > max_order) {
      throw std::invalid_argument("order " + std::to_string(n) + " exceeds bound " +
                                  std::to_string(max_order) + " (raise with --bound)");
    }
    return n;
  };
  if (type == "A") {
    ncb::SeriesA f = ncb::parse_series_a(f_str);
    ncb::SeriesA h = ncb::parse_series_a(g_str);
    const int n = checked_order(f.order());
    std::cout << ncb::to_string(ncb::boxconv_a(f.truncate(n), h.truncate(n))) << "\n";
    return 0;
  }
  ncb::SeriesB f = ncb::parse_series_b(f_str);
  ncb::SeriesB h = ncb::parse_series_b(g_str);
  const int n = checked_order(f.order());
  f = f.truncate(n);
  h = h.truncate(n);
  const ncb::SeriesB direct = type == "AC" ? ncb::boxconv_a_dual(f, h) : ncb::boxconv_b(f, h);
  std::cout << ncb::to_string(direct) << "\n";
  if (check_5_3) {
    const ncb::SeriesB other = type == "AC" ? ncb::boxconv_b(f, h) : ncb::boxconv_a_dual(f, h);
    if (!(direct == other)) {
      std::cerr << "check-5-3: NC^(B) summation and dual type-A summation disagree\n";
      return kExitVerificationFailure;
    }
    std::cout << "check-5-3: pass\n";
  }
  return 0;
}

int run_cumulant(const GlobalOpts& g, const std::string& type, const std::string& moments,
                 const std::string& cumulants, const std::string& space_file,
                 const std::string& pair_name, int order) {
  if (!space_file.empty()) {
    std::ifstream in(space_file);
    if (!in) {
      std::cerr << "cumulant: cannot open " << space_file << "\n";
      return kExitUsage;
    }
    json j = json::parse(in);
    const ncb::FormalSpaceB space = space_from_json(j);
    const auto names = space_names(j);
    int index = 0;
    if (!pair_name.empty()) {
      index = -1;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == pair_name) index = static_cast<int>(i);
      }
      if (index < 0) {
        std::cerr << "cumulant: unknown pair '" << pair_name << "'\n";
        return kExitUsage;
      }
    }
    const int n = order > 0 ? order : 5;
    const int max_order = g.bound > 0 ? g.bound : 8;
    if (n > max_order) {
      std::cerr << "cumulant: order " << n << " exceeds bound " << max_order
                << " (raise with --bound)\n";
      return kExitUsage;
    }
    const auto couple = space.pair(index);
    const ncb::SeriesB m = ncb::moment_series_b(space, couple, n);
    const ncb::SeriesB r = ncb::r_transform_b(space, couple, n);
    const bool consistent = m == ncb::boxconv_b(r, ncb::zeta_b(n));
    if (g.format == "json") {
      json out{{"pair", names[static_cast<std::size_t>(index)]},
               {"order", n},
               {"moments", json::parse(ncb::to_string(m))},
               {"r_transform", json::parse(ncb::to_string(r))},
               {"moment_r_consistent", consistent}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "M = " << ncb::to_string(m) << "\n";
      std::cout << "R = " << ncb::to_string(r) << "\n";
      std::cout << "M = R boxconv_b zeta': " << (consistent ? "ok" : "FAIL") << "\n";
    }
    return consistent ? 0 : kExitVerificationFailure;
  }

  if (moments.empty() == cumulants.empty()) {
    std::cerr << "cumulant: pass exactly one of --moments / --cumulants (or --space)\n";
    return kExitUsage;
  }
  if (type == "A") {
    if (!moments.empty()) {
      const auto m = ncb::parse_series_a(moments);
      std::cout << ncb::to_string(ncb::SeriesA(ncb::cumulants_from_moments_a(m.coeffs()))) << "\n";
    } else {
      const auto k = ncb::parse_series_a(cumulants);
      std::cout << ncb::to_string(ncb::SeriesA(ncb::moments_from_cumulants_a(k.coeffs()))) << "\n";
    }
  } else {
    if (!moments.empty()) {
      std::cout << ncb::to_string(ncb::cumulants_from_moments_b(ncb::parse_series_b(moments))) << "\n";
    } else {
      std::cout << ncb::to_string(ncb::moments_from_cumulants_b(ncb::parse_series_b(cumulants))) << "\n";
    }
  }
  return 0;
}

int run_verify(const GlobalOpts& g, const std::string& property, int n, int order, int samples,
               bool list_only) {
  if (list_only) {
    for (const auto& id : ncb::verify_ids()) std::cout << id << "\n";
    return 0;
  }
  ncb::VerifyParams params;
  params.n = n;
  params.order = order;
  params.samples = samples;
  params.seed = g.seed;
  const ncb::VerificationReport rep = ncb::run_verify(property, params);
  if (g.format == "json") {
    json out{{"property", rep.property},
             {"params", rep.params},
             {"verdict", rep.pass ? "pass" : "fail"},
             {"detail", rep.detail},
             {"seconds", rep.seconds}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << rep.property << " [" << rep.params << "]: " << (rep.pass ? "pass" : "FAIL")
              << " (" << rep.detail << ")\n";
  }
  return rep.pass ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-crossing partition lattices of types A and B, Cayley-graph order,\n"
               "boxed convolution and type-B free cumulants — exact arithmetic throughout"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --format/--seed/--bound after the subcommand too

  GlobalOpts global;
  app.add_option("--format", global.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", global.seed, "seed for randomized checks");
  app.add_option("--bound", global.bound, "override the default size bound");

  std::string enum_type;
  int enum_n = 0;
  bool enum_count = false;
  auto* cmd_enum = app.add_subcommand("enum", "enumerate NC^(A)(n) or NC^(B)(n)");
  cmd_enum->add_option("type", enum_type, "lattice type")->required()->check(CLI::IsMember({"A", "B"}));
  cmd_enum->add_option("n", enum_n, "ground-set parameter")->required();
  cmd_enum->add_flag("--count", enum_count, "print only the cardinality");

  std::string kw_literal;
  bool kw_left = false;
  auto* cmd_kw = app.add_subcommand("kreweras", "Kreweras complement of a partition literal");
  cmd_kw->add_option("partition", kw_literal, "partition literal, e.g. \"{(1,2),(3,4)}\"")->required();
  cmd_kw->add_flag("--left", kw_left, "left complement Kr' instead of Kr");

  std::string abs_literal;
  auto* cmd_abs = app.add_subcommand("abs", "absolute value of a type-B partition");
  cmd_abs->add_option("partition", abs_literal, "type-B partition literal")->required();

  std::string fiber_literal;
  auto* cmd_fiber = app.add_subcommand("fiber", "the n+1 type-B partitions above a type-A partition");
  cmd_fiber->add_option("partition", fiber_literal, "type-A partition literal")->required();

  std::string iota_literal, iota_group = "S";
  int iota_n = 0;
  bool iota_gamma_flag = false, iota_inverse_flag = false;
  auto* cmd_iota = app.add_subcommand("iota", "lattice <-> Cayley interval embeddings");
  cmd_iota->add_option("argument", iota_literal, "partition literal (forward) or cycles (--inverse)")
      ->required();
  cmd_iota->add_flag("--gamma", iota_gamma_flag, "use the [eps,gamma] embedding of NC^(A)(n)");
  cmd_iota->add_flag("--inverse", iota_inverse_flag, "map a permutation back to its partition");
  cmd_iota->add_option("--group", iota_group, "S or W (with --inverse)")->check(CLI::IsMember({"S", "W"}));
  cmd_iota->add_option("--n", iota_n, "group rank (with --inverse)");

  std::string int_group = "S", int_top;
  int int_n = 0;
  bool int_count = false;
  auto* cmd_int = app.add_subcommand("interval", "the interval [e, top] in the Cayley-graph order");
  cmd_int->add_option("--group", int_group, "S or W")->check(CLI::IsMember({"S", "W"}));
  cmd_int->add_option("--n", int_n, "group rank")->required();
  cmd_int->add_option("--top", int_top, "c, omega, gamma, or a cycle literal");
  cmd_int->add_flag("--count", int_count, "print only the cardinality");

  std::string bc_type, bc_f, bc_g;
  int bc_order = 0;
  bool bc_check = false;
  auto* cmd_bc = app.add_subcommand("boxconv", "boxed convolution of truncated series");
  cmd_bc->add_option("type", bc_type, "A (scalar), B (NC^(B) sums) or AC (dual-scalar type A)")
      ->required()
      ->check(CLI::IsMember({"A", "B", "AC"}));
  cmd_bc->add_option("f", bc_f, "series literal, e.g. \"[1,1,1]\" or \"[[1,0],[2,3]]\"")->required();
  cmd_bc->add_option("g", bc_g, "series literal")->required();
  cmd_bc->add_option("--order", bc_order, "truncate both operands to this order");
  cmd_bc->add_flag("--check-5-3", bc_check, "evaluate both boxconv_b implementations and compare");

  std::string cu_type = "A", cu_moments, cu_cumulants, cu_space, cu_pair;
  int cu_order = 0;
  auto* cmd_cu = app.add_subcommand("cumulant", "moment <-> cumulant dictionaries and space files");
  cmd_cu->add_option("type", cu_type, "A or B")->check(CLI::IsMember({"A", "B"}));
  cmd_cu->add_option("--moments", cu_moments, "moment series literal -> prints cumulants");
  cmd_cu->add_option("--cumulants", cu_cumulants, "cumulant series literal -> prints moments");
  cmd_cu->add_option("--space", cu_space, "space description file (JSON)");
  cmd_cu->add_option("--pair", cu_pair, "marked pair name inside the space file");
  cmd_cu->add_option("--order", cu_order, "truncation order for space-file series");

  std::string vf_property;
  int vf_n = -1, vf_order = -1, vf_samples = -1;
  bool vf_list = false;
  auto* cmd_vf = app.add_subcommand("verify", "machine-check one property family");
  cmd_vf->add_option("property", vf_property, "property id (see --list)");
  cmd_vf->add_option("--n", vf_n, "size parameter");
  cmd_vf->add_option("--order", vf_order, "truncation order / depth");
  cmd_vf->add_option("--samples", vf_samples, "number of random samples");
  cmd_vf->add_flag("--list", vf_list, "list property ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_enum->parsed()) return run_enum(global, enum_type, enum_n, enum_count);
    if (cmd_kw->parsed()) return run_kreweras(global, kw_literal, kw_left);
    if (cmd_abs->parsed()) return run_abs(global, abs_literal);
    if (cmd_fiber->parsed()) return run_fiber(global, fiber_literal);
    if (cmd_iota->parsed()) {
      return run_iota(global, iota_literal, iota_gamma_flag, iota_inverse_flag, iota_group, iota_n);
    }
    if (cmd_int->parsed()) {
      if (int_top.empty()) int_top = int_group == "W" ? "omega" : "c";
      return run_interval(global, int_group, int_n, int_top, int_count);
    }
    if (cmd_bc->parsed()) return run_boxconv(global, bc_type, bc_f, bc_g, bc_order, bc_check);
    if (cmd_cu->parsed()) {
      return run_cumulant(global, cu_type, cu_moments, cu_cumulants, cu_space, cu_pair, cu_order);
    }
    if (cmd_vf->parsed()) {
      if (!vf_list && vf_property.empty()) {
        std::cerr << "verify: property id required (try --list)\n";
        return kExitUsage;
      }
      return run_verify(global, vf_property, vf_n, vf_order, vf_samples, vf_list);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
