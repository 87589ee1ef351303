// symlev: command-line front end and verification driver.
//
// Exit codes: 0 success, 1 property failure, 2 usage error, 3 cap abort.

#include "symlev/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace symlev;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kCap = 3 };

struct Globals {
  std::string format = "text";
  VerifyConfig cfg;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) throw precondition_error("not an integer list: " + s);
    out.push_back(v);
  }
  return out;
}

std::string spaced(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

json symbol_json(const Symbol& s) { return {{"A", s.A}, {"B", s.B}}; }

Symbol symbol_from_json(const json& j) {
  Symbol s{make_half(j.at("A").get<std::vector<int>>()), make_half(j.at("B").get<std::vector<int>>())};
  return s;
}

// ---------------------------------------------------------------- mn

int cmd_mn_value(const Globals& g, const std::string& part, const std::string& cyc) {
  Partition l = parse_ints(part);
  CycleType rho = ascending(parse_ints(cyc));
  require_partition(l);
  if (size_of(l) != size_of(rho)) throw precondition_error("partition and cycle type sizes differ");
  const long long v = mn_value(l, rho);
  if (g.format == "json")
    std::cout << json{{"partition", l}, {"cycles", rho}, {"value", v}}.dump() << "\n";
  else
    std::cout << v << "\n";
  return kOk;
}

int cmd_mn_table(const Globals& g, int n) {
  auto T = char_table(n);
  if (g.format == "json") {
    std::cout << json{{"N", n}, {"rows", T.rows}, {"columns", T.columns}, {"values", T.values}}.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "lambda";
    for (auto& c : T.columns) std::cout << "," << spaced(c);
    std::cout << "\n";
    for (std::size_t r = 0; r < T.rows.size(); ++r) {
      std::cout << spaced(T.rows[r]);
      for (std::size_t c = 0; c < T.columns.size(); ++c) std::cout << "," << T.at(r, c);
      std::cout << "\n";
    }
  } else {
    for (std::size_t r = 0; r < T.rows.size(); ++r) {
      std::cout << std::left << std::setw(2 * n + 2) << to_string(T.rows[r]);
      for (std::size_t c = 0; c < T.columns.size(); ++c) std::cout << std::right << std::setw(6) << T.at(r, c);
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_mn_nonvanishing(const Globals& g, int n, int a, const std::string& variant) {
  if (variant != "x" && variant != "y") throw precondition_error("variant must be x or y");
  const XyVariant v = variant == "x" ? XyVariant::x : XyVariant::y;
  auto set = nonvanishing_set(n, a, v);
  if (g.format == "json") {
    json e = json::array();
    for (auto& x : set) e.push_back({{"lambda", x.lambda}, {"value", x.value}});
    std::cout << json{{"N", n}, {"a", a}, {"variant", variant}, {"cycle_type", xy_cycle_type(n, a, v)}, {"count", set.size()}, {"entries", e}}.dump()
              << "\n";
  } else {
    if (g.format == "csv") std::cout << "lambda,value\n";
    for (auto& x : set) std::cout << (g.format == "csv" ? spaced(x.lambda) + "," : to_string(x.lambda) + " ") << x.value << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- symbols

int cmd_symbols_enumerate(const Globals& g, int n, const std::string& defect, std::optional<int> level_cap) {
  EnumerateOptions opt;
  opt.level_cap = level_cap;
  if (!level_cap && n > g.cfg.rank_cap) throw cap_exceeded("rank " + std::to_string(n) + " exceeds rank cap; use --level-cap or raise --rank-cap");
  auto syms = enumerate_symbols(n, DefectClass::parse(defect), opt);
  if (g.format == "json") {
    json arr = json::array();
    for (auto& s : syms) arr.push_back(symbol_json(s));
    std::cout << json{{"rank", n}, {"defect", defect}, {"count", syms.size()}, {"symbols", arr}}.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "A,B,defect,level\n";
    for (auto& s : syms) std::cout << spaced(s.A) << "," << spaced(s.B) << "," << symlev::defect(s) << "," << level(s) << "\n";
  } else {
    for (auto& s : syms) std::cout << to_string(s) << " defect " << symlev::defect(s) << " level " << level(s) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- howe

const char* dual_name(DualType t) { return t == DualType::B ? "B" : t == DualType::C ? "C" : "D"; }

DualType parse_dual(const std::string& s) {
  if (s == "B") return DualType::B;
  if (s == "C") return DualType::C;
  if (s == "D") return DualType::D;
  throw precondition_error("dual type must be B, C or D");
}

json kappa_json(const KappaComponent& k) { return {{"symbol", symbol_json(k.symbol)}, {"dim", k.dim}}; }

json descriptor_json(const SeriesDescriptor& d) {
  return {{"type", dual_name(d.type)}, {"q_odd", d.q_odd},  {"dim_vsharp", d.dim_vsharp}, {"plus", kappa_json(d.plus)}, {"minus", kappa_json(d.minus)},
          {"dim_v0", d.dim_v0},        {"a", d.a},          {"psi0", d.psi0},             {"v0_sign", d.v0_sign}};
}

SeriesDescriptor descriptor_from_json(const json& j) {
  SeriesDescriptor d;
  d.type = parse_dual(j.at("type").get<std::string>());
  d.q_odd = j.value("q_odd", true);
  d.dim_vsharp = j.at("dim_vsharp").get<int>();
  for (auto [key, part] : {std::pair{"plus", &d.plus}, std::pair{"minus", &d.minus}}) {
    if (!j.contains(key)) continue;
    part->symbol = symbol_from_json(j.at(key).at("symbol"));
    part->dim = j.at(key).at("dim").get<int>();
  }
  d.a = j.value("a", std::vector<int>{});
  int sa = 0;
  for (int x : d.a) sa += x;
  d.dim_v0 = j.value("dim_v0", 2 * sa);
  d.psi0 = j.value("psi0", 0LL);
  d.v0_sign = j.value("v0_sign", 1);
  return d;
}

HoweSide default_side(DualType t) { return t == DualType::D ? HoweSide::O_even : t == DualType::C ? HoweSide::SO_odd : HoweSide::Sp; }

int cmd_howe_map(const std::string& path, const std::string& side_flag, bool no_hypothesis) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw precondition_error(std::string("malformed descriptor: ") + e.what());
  }
  const json& dj = j.contains("descriptor") ? j.at("descriptor") : j;
  SeriesDescriptor d;
  try {
    d = descriptor_from_json(dj);
  } catch (const json::exception& e) {
    throw precondition_error(std::string("malformed descriptor: ") + e.what());
  }
  std::string side_name = side_flag.empty() ? j.value("side", std::string()) : side_flag;
  const HoweSide side = side_name.empty() ? default_side(d.type) : parse_howe_side(side_name);
  auto h = howe_map(d, side, {.require_hypothesis = !no_hypothesis});
  json out{{"side", to_string(h.side)},
           {"level", h.level.str()},
           {"dominant", h.dominant},
           {"twists", {{"sigma_swap", h.sigma_swap}, {"sgn_transpose", h.sgn_transpose}}},
           {"orientation_transposed", h.orientation_transposed},
           {"sp_case", h.sp_case ? std::string(1, h.sp_case) : std::string()},
           {"main_symbol", symbol_json(h.main_symbol)},
           {"s_prime", symbol_json(h.s_prime)},
           {"link", h.link == LinkKind::split ? "split" : "nonsplit"},
           {"max_in_A", h.max_in_A},
           {"rule", h.rule == HoweRule::even ? "even" : "odd"},
           {"target_group", h.target_group == TargetGroup::Sp ? "Sp" : h.target_group == TargetGroup::O_even ? "O-even" : "SO-odd"},
           {"target_dim", h.target_dim},
           {"target_sign", h.target_sign},
           {"v0_negated", h.v0_negated},
           {"source", descriptor_json(h.source)},
           {"normalized", descriptor_json(h.normalized)},
           {"target", descriptor_json(h.target)},
           {"round_trip", reconstruct_source(h, d.rank()) == d}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_howe_verify(const Globals& g, int rank_n, std::optional<int> max_level, const std::string& report) {
  if (rank_n > g.cfg.rank_cap) throw cap_exceeded("rank exceeds rank cap");
  auto sw = sweep_main_piece(rank_n, max_level);
  if (report == "csv") {
    std::cout << "source_A,source_B,s_prime_A,s_prime_B,level,defect_ok,rank_ok,linked_ok,unique,partners\n";
    for (auto& c : sw.checks)
      std::cout << spaced(c.source.A) << "," << spaced(c.source.B) << "," << spaced(c.s_prime.A) << "," << spaced(c.s_prime.B) << ","
                << level(c.oriented) << "," << c.defect_ok << "," << c.rank_ok << "," << c.linked_ok << "," << c.unique() << "," << c.partners.size()
                << "\n";
  } else if (report == "json") {
    json arr = json::array();
    for (auto& c : sw.checks)
      arr.push_back({{"source", symbol_json(c.source)}, {"s_prime", symbol_json(c.s_prime)}, {"level", level(c.oriented)}, {"ok", c.ok()}});
    std::cout << json{{"rank", rank_n}, {"even_sources", sw.even_sources}, {"odd_sources", sw.odd_sources}, {"failures", sw.failures}, {"checks", arr}}.dump()
              << "\n";
  } else {
    std::cout << "even sources " << sw.even_sources << ", odd sources " << sw.odd_sources << ", failures " << sw.failures << "\n";
  }
  return sw.ok() ? kOk : kFail;
}

// ---------------------------------------------------------------- group

struct GroupArgs {
  std::string family = "sl";
  int n = 2;
  std::uint64_t q = 2;
  bool projective = false;
  bool as_matrices = false;

  void add(CLI::App* app) {
    app->add_option("--family", family, "gl, sl, gu, su, sp, so+, so-, so, omega+, omega-, omega, alt, sym")->required();
    app->add_option("--n", n, "dimension or degree")->required();
    app->add_option("--q", q, "field size");
    app->add_flag("--projective", projective, "quotient by the scalars in the group");
    app->add_flag("--as-matrices", as_matrices, "permutation groups as permutation matrices");
  }
  BuiltGroup build(const Globals& g) const {
    GroupSpec s;
    s.family = parse_group_family(family);
    s.N = n;
    s.q = q;
    s.projective = projective;
    s.as_matrices = as_matrices;
    s.cap = g.cfg.order_cap;
    return build_group(s);
  }
};

int cmd_group_build(const Globals& g, const GroupArgs& a) {
  auto G = a.build(g);
  if (g.format == "json") {
    json cls = json::array();
    for (std::size_t k = 0; k < G->class_count(); ++k)
      cls.push_back({{"index", k}, {"rep", G->class_rep(k)}, {"size", G->class_size(k)}, {"element_order", G->element_order(G->class_rep(k))}});
    std::cout << json{{"group", describe(G.spec)}, {"order", G->order()}, {"class_count", G->class_count()}, {"center_scalars", G.center_scalars.size()}, {"classes", cls}}
                     .dump()
              << "\n";
  } else if (g.format == "csv") {
    std::cout << "class,rep,size,element_order\n";
    for (std::size_t k = 0; k < G->class_count(); ++k)
      std::cout << k << "," << G->class_rep(k) << "," << G->class_size(k) << "," << G->element_order(G->class_rep(k)) << "\n";
  } else {
    std::cout << describe(G.spec) << " order " << G->order() << " classes " << G->class_count() << "\n";
  }
  return kOk;
}

int cmd_group_coverage(const Globals& g, const GroupArgs& a, std::optional<std::size_t> cls, bool exclude_center) {
  auto G = a.build(g);
  if (g.format == "csv") {
    std::cout << "class";
    for (std::size_t k = 0; k < G->class_count(); ++k) std::cout << "," << k;
    std::cout << "\n";
    for (std::size_t i = 0; i < G->class_count(); ++i) {
      auto hit = class_square_classes(*G, i);
      std::cout << i;
      for (bool b : hit) std::cout << "," << (b ? 1 : 0);
      std::cout << "\n";
    }
    return kOk;
  }
  if (!cls) {
    auto found = find_covering_classes(*G, {g.cfg.workers, g.cfg.work_cap});
    json out{{"group", describe(G.spec)}, {"covering_classes", found.covering}};
    if (g.format == "json")
      std::cout << out.dump() << "\n";
    else
      std::cout << describe(G.spec) << " covering classes " << out["covering_classes"].dump() << "\n";
    return kOk;
  }
  if (*cls >= G->class_count()) throw precondition_error("class index out of range");
  std::vector<GroupTable::Index> excl;
  if (exclude_center)
    for (std::size_t k = 0; k < G->class_count(); ++k)
      if (G->class_size(k) == 1 && G->class_rep(k) != G->identity()) excl.push_back(G->class_rep(k));
  auto r = class_square_coverage(*G, *cls, excl, {g.cfg.workers, g.cfg.work_cap});
  const bool covered = exclude_center ? r.covers_all_but_excluded : r.covers_all;
  std::vector<std::size_t> missing;
  for (auto x : r.missing_class_reps) missing.push_back(G->class_of(x));
  if (g.format == "json") {
    std::cout << json{{"group", describe(G.spec)},
                      {"class", *cls},
                      {"class_size", r.class_size},
                      {"covered", covered},
                      {"exclude_center", exclude_center},
                      {"excluded", excl},
                      {"missing_class_reps", r.missing_class_reps},
                      {"missing_classes", missing}}
                     .dump()
              << "\n";
  } else {
    std::cout << describe(G.spec) << " class " << *cls << (covered ? " covers" : " does not cover") << (exclude_center ? " (center excluded)" : "")
              << ", missing classes " << json(missing).dump() << "\n";
  }
  return kOk;
}

int cmd_group_frobenius(const Globals& g, int n, const std::string& xs, const std::string& ys, const std::string& gs) {
  GroupSpec s;
  s.family = GroupFamily::Symmetric;
  s.N = n;
  s.cap = g.cfg.order_cap;
  auto S = build_group(s);
  CycleType x = ascending(parse_ints(xs)), y = ascending(parse_ints(ys)), z = ascending(parse_ints(gs));
  const std::size_t cx = class_with_cycle_type(*S, x), cy = class_with_cycle_type(*S, y), cz = class_with_cycle_type(*S, z);
  const Rational formula = frobenius_count_formula_sn(n, x, y, z);
  const std::uint64_t direct = frobenius_count_direct(*S, cx, cy, S->class_rep(cz));
  const bool equal = formula == Rational(direct);
  if (g.format == "json")
    std::cout << json{{"N", n}, {"x", x}, {"y", y}, {"g", z}, {"formula", to_string(formula)}, {"direct", direct}, {"equal", equal}}.dump() << "\n";
  else
    std::cout << "formula " << to_string(formula) << " direct " << direct << (equal ? " equal" : " DIFFER") << "\n";
  return equal ? kOk : kFail;
}

// ---------------------------------------------------------------- verify and report

json result_json(const PropertyResult& r) {
  return {{"name", r.name},     {"anchor", r.anchor},   {"status", r.cap_abort ? "cap_abort" : r.passed ? "pass" : "fail"},
          {"counts", r.counts}, {"detail", r.detail},   {"seconds", r.seconds}};
}

json config_json(const VerifyConfig& c) {
  return {{"rank_cap", c.rank_cap},     {"howe_rank_cap", c.howe_rank_cap},   {"bijection_rank", c.bijection_rank}, {"order_cap", c.order_cap},
          {"work_cap", c.work_cap},     {"workers", c.workers},               {"seed", c.seed},                     {"random_symbols", c.random_symbols},
          {"s7_samples", c.s7_samples}};
}

int exit_for(const std::vector<PropertyResult>& rs) {
  bool cap = false, fail = false;
  for (auto& r : rs) {
    cap = cap || r.cap_abort;
    fail = fail || !r.passed;
  }
  return cap ? kCap : fail ? kFail : kOk;
}

json run_suite(const Globals& g, const std::string& suite, std::vector<PropertyResult>& results) {
  json props = json::array();
  std::size_t passed = 0;
  for (auto& p : suite_properties(suite)) {
    results.push_back(run_property(p, g.cfg));
    passed += results.back().passed;
    props.push_back(result_json(results.back()));
  }
  return {{"schema", 1},
          {"tool", "symlev"},
          {"suite", suite},
          {"config", config_json(g.cfg)},
          {"properties", props},
          {"summary", {{"total", results.size()}, {"passed", passed}, {"failed", results.size() - passed}}}};
}

int cmd_verify(const Globals& g, const std::string& suite) {
  std::vector<PropertyResult> rs;
  json doc = run_suite(g, suite, rs);
  if (g.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "name,status,seconds\n";
    for (auto& r : rs) std::cout << r.name << "," << result_json(r)["status"].get<std::string>() << "," << r.seconds << "\n";
  } else {
    for (auto& r : rs)
      std::cout << (r.passed ? "PASS " : r.cap_abort ? "CAP  " : "FAIL ") << std::left << std::setw(18) << r.name << std::fixed << std::setprecision(2)
                << std::right << std::setw(8) << r.seconds << "s  " << r.anchor << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
  }
  return exit_for(rs);
}

int cmd_report(const Globals& g, const std::string& suite, const std::string& path) {
  suite_properties(suite);
  std::ofstream out(path);
  if (!out) {
    std::cerr << "symlev: cannot write " << path << "\n";
    return kUsage;
  }
  std::vector<PropertyResult> rs;
  json doc = run_suite(g, suite, rs);
  out << doc.dump(2) << "\n";
  out.close();
  if (!out) {
    std::cerr << "symlev: write to " << path << " failed\n";
    return kUsage;
  }
  std::cout << path << ": " << rs.size() << " properties\n";
  return exit_for(rs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symlev: symbol calculus, character values and small-group verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value file; flags override it");

  Globals g;
  app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--workers", g.cfg.workers, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", g.cfg.seed, "seed for sampled properties");
  app.add_option("--rank-cap", g.cfg.rank_cap, "largest symbol rank enumerated")->check(CLI::PositiveNumber);
  app.add_option("--howe-rank-cap", g.cfg.howe_rank_cap, "largest rank in the main-piece sweep")->check(CLI::PositiveNumber);
  app.add_option("--order-cap", g.cfg.order_cap, "largest group enumerated")->check(CLI::PositiveNumber);
  app.add_option("--work-cap", g.cfg.work_cap, "largest class-square product count")->check(CLI::PositiveNumber);
  app.add_option("--random-symbols", g.cfg.random_symbols, "random symbols in the identity check")->check(CLI::NonNegativeNumber);
  app.add_option("--s7-samples", g.cfg.s7_samples, "sampled class triples of S_7")->check(CLI::NonNegativeNumber);

  std::function<int()> action;

  auto* mn = app.add_subcommand("mn", "symmetric group characters");
  mn->require_subcommand(1);
  std::string part, cycles, variant = "x";
  int n = 0, a = 0;
  auto* mv = mn->add_subcommand("value", "one character value");
  mv->add_option("--partition", part)->required();
  mv->add_option("--cycles", cycles)->required();
  mv->callback([&] { action = [&] { return cmd_mn_value(g, part, cycles); }; });
  auto* mt = mn->add_subcommand("table", "character table, classes as columns");
  mt->add_option("--n", n)->required();
  mt->callback([&] { action = [&] { return cmd_mn_table(g, n); }; });
  auto* mz = mn->add_subcommand("nonvanishing", "partitions with nonzero value at x or y");
  mz->add_option("--n", n)->required();
  mz->add_option("--a", a)->required();
  mz->add_option("--variant", variant)->check(CLI::IsMember({"x", "y"}));
  mz->callback([&] { action = [&] { return cmd_mn_nonvanishing(g, n, a, variant); }; });

  auto* sy = app.add_subcommand("symbols", "symbol enumeration");
  sy->require_subcommand(1);
  std::string defect = "any";
  std::optional<int> level_cap;
  auto* se = sy->add_subcommand("enumerate", "reduced symbols of a rank");
  se->add_option("--rank", n)->required()->check(CLI::NonNegativeNumber);
  se->add_option("--defect", defect, "any, even, odd or a residue 0..3 mod 4");
  se->add_option("--level-cap", level_cap);
  se->callback([&] { action = [&] { return cmd_symbols_enumerate(g, n, defect, level_cap); }; });

  auto* ho = app.add_subcommand("howe", "symbol-level Howe correspondence");
  ho->require_subcommand(1);
  std::string desc, side, report = "text";
  bool no_hyp = false;
  std::optional<int> max_level;
  auto* hm = ho->add_subcommand("map", "map a series descriptor");
  hm->add_option("--desc", desc, "descriptor JSON file")->required();
  hm->add_option("--side", side, "O-even, SO-odd or Sp; default from the descriptor type");
  hm->add_flag("--no-hypothesis", no_hyp, "skip the rank hypothesis");
  hm->callback([&] { action = [&] { return cmd_howe_map(desc, side, no_hyp); }; });
  auto* hv = ho->add_subcommand("verify", "main-piece sweep");
  hv->add_option("--rank", n)->required()->check(CLI::PositiveNumber);
  hv->add_option("--max-level", max_level);
  hv->add_option("--report", report)->check(CLI::IsMember({"json", "csv", "text"}));
  hv->callback([&] { action = [&] { return cmd_howe_verify(g, n, max_level, report); }; });

  auto* gr = app.add_subcommand("group", "enumerated finite groups");
  gr->require_subcommand(1);
  GroupArgs ga;
  std::optional<std::size_t> cls;
  bool exclude_center = false;
  std::string xs, ys, zs;
  auto* gb = gr->add_subcommand("build", "order and classes");
  ga.add(gb);
  gb->callback([&] { action = [&] { return cmd_group_build(g, ga); }; });
  auto* gc = gr->add_subcommand("coverage", "class squares");
  ga.add(gc);
  gc->add_option("--class", cls, "class index");
  gc->add_flag("--exclude-center", exclude_center, "ignore nonidentity central elements");
  gc->callback([&] { action = [&] { return cmd_group_coverage(g, ga, cls, exclude_center); }; });
  auto* gf = gr->add_subcommand("frobenius", "class-product count in S_N");
  gf->add_option("--n", n)->required();
  gf->add_option("--x", xs)->required();
  gf->add_option("--y", ys)->required();
  gf->add_option("--g", zs)->required();
  gf->callback([&] { action = [&] { return cmd_group_frobenius(g, n, xs, ys, zs); }; });

  std::string suite = "all", out;
  auto* ve = app.add_subcommand("verify", "run a property suite");
  ve->add_option("suite", suite, "symbols, howe, groups or all")->check(CLI::IsMember({"symbols", "howe", "groups", "all"}));
  ve->callback([&] { action = [&] { return cmd_verify(g, suite); }; });
  auto* re = app.add_subcommand("report", "write a JSON report");
  re->add_option("--suite", suite, "none, symbols, howe, groups or all")->check(CLI::IsMember({"none", "symbols", "howe", "groups", "all"}));
  re->add_option("--out", out, "output path")->required();
  re->callback([&] { action = [&] { return cmd_report(g, suite, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const cap_exceeded& e) {
    std::cerr << "symlev: cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const precondition_error& e) {
    std::cerr << "symlev: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "symlev: internal error: " << e.what() << "\n";
    return kFail;
  }
}
