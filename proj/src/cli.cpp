#include "weylexp/cli.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <thread>
#include <type_traits>

#include <CLI11.hpp>

#include "weylexp/exponents.hpp"
#include "weylexp/report.hpp"
#include "weylexp/verify.hpp"

namespace weylexp {

namespace {

enum class Format { Table, Json, Csv };

struct RunConfig {
  std::string kinds;
  std::string ranks;
  int max_degree = kMaxExponentDegree;
  Format format = Format::Table;
  std::string cache_dir;
  bool allow_large = false;
  unsigned jobs = 1;
  std::size_t orbit_cap = OrbitLimits{}.stream_cap;
  bool timings = false;
};

/// Adds the flags shared by every subcommand.
void add_common(CLI::App *cmd, RunConfig &cfg) {
  const std::map<std::string, Format> formats{
      {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  cmd->add_option("--format", cfg.format, "Output format: table, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->option_text("table|json|csv");
  cmd->add_option("--cache-dir", cfg.cache_dir, "Directory for memoized phi images")
      ->envname(kCacheEnvVar);
  cmd->add_flag("--allow-large", cfg.allow_large, "Permit E7 and E8");
  cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--orbit-cap", cfg.orbit_cap, "Maximum orbit size to enumerate")
      ->check(CLI::PositiveNumber);
}

void add_selection(CLI::App *cmd, RunConfig &cfg, bool required) {
  auto *k = cmd->add_option("--kind", cfg.kinds, "Family letter(s), e.g. A or B,C or E6");
  if (required)
    k->required();
  cmd->add_option("--rank", cfg.ranks, "Rank(s), e.g. 3, 2-4 or 2,3");
}

void add_degree(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--max-degree", cfg.max_degree, "Highest degree (2, 3 or 4)")
      ->check(CLI::Range(2, kMaxExponentDegree));
}

struct Context {
  RunConfig cfg;
  std::optional<PhiCache> cache;

  PhiOptions phi() const {
    PhiOptions o;
    o.stream_cap = cfg.orbit_cap;
    o.cache = cache ? &*cache : nullptr;
    return o;
  }
  void open_cache() {
    if (!cfg.cache_dir.empty())
      cache.emplace(cfg.cache_dir);
  }
};

/// Runs fn over items on up to `jobs` threads; results keep input order.
template <class T, class F>
auto run_jobs(const std::vector<T> &items, unsigned jobs, F fn) {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned width = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < width; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  std::vector<R> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i])
      std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

std::vector<int> parse_ranks(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  auto to_int = [&](const std::string &s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size())
        throw std::invalid_argument(s);
      return v;
    } catch (const std::exception &) {
      throw UsageError("malformed rank '" + s + "'");
    }
  };
  while (std::getline(ss, part, ',')) {
    auto dash = part.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(to_int(part));
    } else {
      int lo = to_int(part.substr(0, dash)), hi = to_int(part.substr(dash + 1));
      if (lo > hi)
        throw UsageError("empty rank range '" + part + "'");
      for (int r = lo; r <= hi; ++r)
        out.push_back(r);
    }
  }
  return out;
}

std::string ok_label(bool ok) { return ok ? "true" : "false"; }

// ---------------------------------------------------------------------------

int cmd_orbit(const Context &ctx, const std::string &family, int rank, const std::string &weight,
              std::ostream &out) {
  const auto kind = RootSystemKind::parse(family, rank);
  require_size_gate(kind, ctx.cfg.allow_large);
  const RootSystem rs = RootSystem::build(kind);
  auto emit = [&]<Scalar R>(const Weight<R> &chi) {
    if (static_cast<int>(chi.size()) != rs.rank())
      throw UsageError("weight has " + std::to_string(chi.size()) + " coordinates, rank is " +
                       std::to_string(rs.rank()));
    const auto orb = orbit<R>(rs, chi, ctx.cfg.orbit_cap);
    switch (ctx.cfg.format) {
    case Format::Json: {
      Json list = Json::array();
      for (const auto &w : orb) {
        Json coords = Json::array();
        for (const auto &c : w.coords) {
          if constexpr (std::is_same_v<R, GoldenInt>)
            coords.push_back(golden_to_json(c));
          else
            coords.push_back(int_to_json(c));
        }
        list.push_back(coords);
      }
      out << Json{{"schema", kSchemaVersion}, {"kind", kind_to_json(kind)},
                  {"weight", to_string(chi)}, {"size", orb.size()}, {"orbit", list}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::Csv:
      for (const auto &w : orb) {
        std::vector<std::string> cells;
        for (const auto &c : w.coords)
          cells.push_back(to_string(c));
        out << csv_line(cells);
      }
      break;
    case Format::Table:
      for (const auto &w : orb)
        out << to_string(w) << '\n';
      out << "size " << orb.size() << '\n';
      break;
    }
  };
  if (rs.crystallographic())
    emit(parse_weight<Int>(weight));
  else
    emit(parse_weight<GoldenInt>(weight));
  return kExitOk;
}

int cmd_phi(const Context &ctx, const std::string &weight_text, std::ostream &out) {
  const auto kinds = parse_kind_selection(ctx.cfg.kinds, ctx.cfg.ranks);
  if (kinds.size() != 1)
    throw UsageError("phi takes exactly one root system");
  const auto kind = kinds.front();
  require_size_gate(kind, ctx.cfg.allow_large);
  const RootSystem rs = RootSystem::build(kind);
  const int d = ctx.cfg.max_degree;
  auto emit = [&]<Scalar R>(const Weight<R> &chi) {
    if (static_cast<int>(chi.size()) != rs.rank())
      throw UsageError("weight has wrong number of coordinates");
    // Integral types always divide exactly; over Z[tau] degrees >= 3 may
    // not, and those are shown as i! * phi^(i).
    std::vector<SparsePoly<R>> comps;
    if constexpr (std::is_same_v<R, Int>)
      comps = phi_rho_components<R>(rs, chi, d, ctx.phi());
    else
      comps = phi_rho_scaled_components<R>(rs, chi, d, ctx.phi());
    std::vector<std::string> label(static_cast<std::size_t>(d) + 1), value(label.size());
    for (int i = 1; i <= d; ++i) {
      const auto k = static_cast<std::size_t>(i);
      auto p = comps[k];
      const Int fact = universal_phi(i).denominator();
      label[k] = "phi^(" + std::to_string(i) + ")";
      if (!std::is_same_v<R, Int>) {
        if (p.try_divide(fact))
          comps[k] = p;
        else
          label[k] = std::to_string(i) + "!*" + label[k];
      }
      value[k] = to_string(comps[k]);
    }
    switch (ctx.cfg.format) {
    case Format::Json: {
      Json c = Json::object();
      for (int i = 1; i <= d; ++i)
        c[std::to_string(i)] = Json{{"label", label[static_cast<std::size_t>(i)]},
                                    {"value", value[static_cast<std::size_t>(i)]}};
      out << Json{{"schema", kSchemaVersion}, {"kind", kind_to_json(kind)},
                  {"weight", to_string(chi)}, {"orbit_size", to_string(comps[0].coefficient(Monomial(chi.size())))},
                  {"components", c}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::Csv:
      out << csv_line({"degree", "label", "value"});
      for (int i = 1; i <= d; ++i)
        out << csv_line({std::to_string(i), label[static_cast<std::size_t>(i)], value[static_cast<std::size_t>(i)]});
      break;
    case Format::Table:
      for (int i = 1; i <= d; ++i)
        out << label[static_cast<std::size_t>(i)] << "(rho" << to_string(chi) << ") = "
            << value[static_cast<std::size_t>(i)] << '\n';
      break;
    }
  };
  const std::size_t n = static_cast<std::size_t>(rs.rank());
  if (rs.crystallographic())
    emit(weight_text.empty() ? Weight<Int>::fundamental(n, 0) : parse_weight<Int>(weight_text));
  else
    emit(weight_text.empty() ? Weight<GoldenInt>::fundamental(n, 0)
                             : parse_weight<GoldenInt>(weight_text));
  return kExitOk;
}

int cmd_dynkin(const Context &ctx, std::ostream &out) {
  const auto kinds = parse_kind_selection(ctx.cfg.kinds, ctx.cfg.ranks);
  for (const auto &k : kinds) {
    require_size_gate(k, ctx.cfg.allow_large);
    if (!k.crystallographic())
      throw UsageError("dynkin needs a crystallographic root system");
  }
  struct Row {
    RootSystemKind kind;
    std::vector<Int> orbit, via_q;
    Int gcd;
  };
  auto rows = run_jobs(kinds, ctx.cfg.jobs, [&](const RootSystemKind &k) {
    const RootSystem rs = RootSystem::build(k);
    Row r{k, {}, {}, 0};
    const auto q = normalized_q(rs);
    for (std::size_t j = 0; j < static_cast<std::size_t>(k.rank); ++j) {
      r.orbit.push_back(dynkin_index_orbit(rs, j, ctx.cfg.orbit_cap));
      r.via_q.push_back(divide_by_form(
          phi_rho<Int>(rs, Weight<Int>::fundamental(static_cast<std::size_t>(k.rank), j), 2, ctx.phi()),
          q));
      r.gcd = gcd_int(r.gcd, r.orbit.back());
    }
    return r;
  });
  bool ok = true;
  Json reports = Json::array();
  std::vector<std::vector<std::string>> table{{"kind", "weight", "orbit", "via_q", "agree"}};
  std::string csv = csv_line({"kind", "weight", "orbit", "via_q", "agree"});
  for (const auto &r : rows) {
    Json per = Json::array();
    for (std::size_t j = 0; j < r.orbit.size(); ++j) {
      const bool agree = r.orbit[j] == r.via_q[j];
      ok = ok && agree;
      std::vector<std::string> cells{r.kind.name(), "w" + std::to_string(j + 1), r.orbit[j].get_str(),
                                     r.via_q[j].get_str(), ok_label(agree)};
      table.push_back(cells);
      csv += csv_line(cells);
      per.push_back(Json{{"weight", j + 1},
                         {"orbit", int_to_json(r.orbit[j])},
                         {"via_q", int_to_json(r.via_q[j])}});
    }
    table.push_back({r.kind.name(), "gcd", r.gcd.get_str(), "", ""});
    csv += csv_line({r.kind.name(), "gcd", r.gcd.get_str(), "", ""});
    reports.push_back(Json{{"kind", kind_to_json(r.kind)}, {"indices", per}, {"gcd", int_to_json(r.gcd)}});
  }
  switch (ctx.cfg.format) {
  case Format::Json:
    out << Json{{"schema", kSchemaVersion}, {"dynkin", reports}}.dump(2) << '\n';
    break;
  case Format::Csv:
    out << csv;
    break;
  case Format::Table:
    out << align_columns(table);
    break;
  }
  return ok ? kExitOk : kExitFailure;
}

struct Batch {
  std::vector<ExponentReport> reports;
  std::vector<H2Report> h2;
};

Batch compute_batch(const Context &ctx, const std::vector<RootSystemKind> &kinds,
                    std::optional<std::uint64_t> probe, int max_degree) {
  std::vector<RootSystemKind> crystal;
  bool want_h2 = false;
  for (const auto &k : kinds) {
    if (k.crystallographic()) {
      require_size_gate(k, ctx.cfg.allow_large);
      crystal.push_back(k);
    } else {
      want_h2 = true;
    }
  }
  Batch b;
  b.reports = run_jobs(crystal, ctx.cfg.jobs, [&](const RootSystemKind &k) {
    ExponentOptions o;
    o.max_degree = max_degree;
    o.phi = ctx.phi();
    o.allow_large = ctx.cfg.allow_large;
    o.record_timings = ctx.cfg.timings;
    o.basis_probe_seed = probe;
    return compute_exponent_report(RootSystem::build(k), o);
  });
  if (want_h2)
    b.h2.push_back(h2_tau2(ctx.phi()));
  return b;
}

bool batch_ok(const Batch &b) {
  for (const auto &r : b.reports)
    if (!r.ok())
      return false;
  for (const auto &h : b.h2)
    if (!h.is_sqrt5 || !h.omega2_agrees)
      return false;
  return true;
}

void emit_batch(const Context &ctx, const Batch &b, std::ostream &out) {
  switch (ctx.cfg.format) {
  case Format::Json: {
    Json reports = Json::array();
    for (const auto &r : b.reports)
      reports.push_back(to_json(r, ctx.cfg.timings));
    Json h2 = Json::array();
    for (const auto &h : b.h2)
      h2.push_back(to_json(h));
    out << Json{{"schema", kSchemaVersion}, {"reports", reports}, {"h2", h2}}.dump(2) << '\n';
    break;
  }
  case Format::Csv:
    out << render_csv(b.reports, b.h2);
    break;
  case Format::Table:
    out << render_table(b.reports, b.h2);
    for (const auto &r : b.reports) {
      for (const auto &v : r.violations)
        out << r.kind.name() << ": " << v << '\n';
      if (!r.basis_probe_tau.empty()) {
        out << r.kind.name() << ": after a random basis change tau =";
        for (const auto &[i, t] : r.basis_probe_tau)
          out << ' ' << t.get_str();
        out << '\n';
      }
      if (ctx.cfg.timings)
        for (const auto &[k, v] : r.timings)
          out << r.kind.name() << ": " << k << " " << v << "s\n";
    }
    break;
  }
}

int cmd_exponents(const Context &ctx, std::optional<std::uint64_t> probe, std::ostream &out) {
  const Batch b = compute_batch(ctx, parse_kind_selection(ctx.cfg.kinds, ctx.cfg.ranks), probe,
                                ctx.cfg.max_degree);
  emit_batch(ctx, b, out);
  return batch_ok(b) ? kExitOk : kExitFailure;
}

int cmd_torsion(const Context &ctx, std::ostream &out) {
  const auto kinds = parse_kind_selection(ctx.cfg.kinds, ctx.cfg.ranks);
  for (const auto &k : kinds)
    if (!k.crystallographic())
      throw UsageError("torsion bounds need a crystallographic root system");
  const Batch b = compute_batch(ctx, kinds, std::nullopt, kMaxExponentDegree);
  switch (ctx.cfg.format) {
  case Format::Json: {
    Json list = Json::array();
    for (const auto &r : b.reports) {
      Json t = to_json(r.torsion);
      t["kind"] = kind_to_json(r.kind);
      list.push_back(t);
    }
    out << Json{{"schema", kSchemaVersion}, {"torsion_bounds", list}}.dump(2) << '\n';
    break;
  }
  case Format::Csv:
  case Format::Table: {
    std::vector<std::vector<std::string>> rows{{"kind", "degree3", "degree4", "ch4_total", "ch4_2primary"}};
    for (const auto &r : b.reports) {
      const auto &t = r.torsion;
      rows.push_back({r.kind.name(), t.bounds.count(3) ? t.bounds.at(3).get_str() : "-",
                      t.bounds.count(4) ? t.bounds.at(4).get_str() : "-",
                      t.ch4 ? std::to_string(t.ch4->total) : "-",
                      t.ch4 ? std::to_string(t.ch4->two_primary) : "-"});
    }
    if (ctx.cfg.format == Format::Csv)
      for (const auto &row : rows)
        out << csv_line(row);
    else
      out << align_columns(rows);
    break;
  }
  }
  return batch_ok(b) ? kExitOk : kExitFailure;
}

int cmd_h2(const Context &ctx, std::ostream &out) {
  const auto t0 = std::chrono::steady_clock::now();
  const H2Report h = h2_tau2(ctx.phi());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  switch (ctx.cfg.format) {
  case Format::Json: {
    Json j = to_json(h);
    if (ctx.cfg.timings)
      j["timings"] = Json{{"total", secs}};
    out << j.dump(2) << '\n';
    break;
  }
  case Format::Csv:
    out << csv_line({"tau2", "is_sqrt5", "w1^2", "w2^2", "w1*w2"});
    out << csv_line({to_string(h.tau2), ok_label(h.is_sqrt5), to_string(h.form[0]),
                     to_string(h.form[1]), to_string(h.form[2])});
    break;
  case Format::Table: {
    SparsePoly<GoldenInt> form(2);
    form.add_term(Monomial({2, 0}), h.form[0]);
    form.add_term(Monomial({0, 2}), h.form[1]);
    form.add_term(Monomial({1, 1}), h.form[2]);
    out << "phi^(2)(rho(w1)) = " << to_string(form) << '\n';
    out << "phi^(2)(rho(w2)) equal: " << ok_label(h.omega2_agrees) << '\n';
    out << "tau2 = " << to_string(h.tau2) << '\n';
    out << "is_sqrt5 = " << ok_label(h.is_sqrt5) << '\n';
    if (ctx.cfg.timings)
      out << "time " << secs << "s\n";
    break;
  }
  }
  return h.is_sqrt5 && h.omega2_agrees ? kExitOk : kExitFailure;
}

int cmd_verify(const Context &ctx, std::uint64_t seed, bool perturb, int max_rank, int sets,
               std::ostream &out) {
  VerifyOptions vo;
  vo.seed = seed;
  vo.symmetric_sets = sets;
  vo.max_degree = ctx.cfg.max_degree;
  vo.phi = ctx.phi();
  // the verify scope is small; a tighter default cap keeps a broken fixture quick
  if (vo.phi.stream_cap == OrbitLimits{}.stream_cap)
    vo.phi.stream_cap = OrbitLimits{}.orbit_cap;

  std::vector<CheckResult> results;
  if (perturb) {
    for (auto c : verify_root_system(perturbed_fixture(), vo)) {
      c.subject += "-perturbed";
      results.push_back(std::move(c));
    }
  } else {
    const auto kinds = ctx.cfg.kinds.empty() ? default_verify_scope(max_rank)
                                             : parse_kind_selection(ctx.cfg.kinds, ctx.cfg.ranks);
    for (const auto &k : kinds) {
      require_size_gate(k, ctx.cfg.allow_large);
      if (!k.crystallographic())
        throw UsageError("verify covers crystallographic root systems; use h2 for H2");
    }
    auto per_kind = run_jobs(kinds, ctx.cfg.jobs, [&](const RootSystemKind &k) {
      return verify_root_system(RootSystem::build(k), vo);
    });
    for (auto &v : per_kind)
      results.insert(results.end(), v.begin(), v.end());
  }

  std::size_t failed = 0;
  for (const auto &c : results)
    failed += c.passed ? 0 : 1;
  switch (ctx.cfg.format) {
  case Format::Json: {
    Json list = Json::array();
    for (const auto &c : results)
      list.push_back(to_json(c));
    out << Json{{"schema", kSchemaVersion}, {"seed", seed}, {"checks", list}, {"failed", failed}}.dump(2)
        << '\n';
    break;
  }
  case Format::Csv:
    out << csv_line({"status", "check", "subject", "detail"});
    for (const auto &c : results)
      out << csv_line({c.passed ? "PASS" : "FAIL", c.name, c.subject, c.detail});
    break;
  case Format::Table:
    for (const auto &c : results)
      out << (c.passed ? "PASS " : "FAIL ") << c.name << ' ' << c.subject << ": " << c.detail << '\n';
    out << results.size() << " checks, " << failed << " failed\n";
    break;
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_table(const Context &ctx, int max_rank, std::ostream &out) {
  auto kinds = table_scope(max_rank, ctx.cfg.allow_large);
  kinds.push_back({Family::H2, 2});
  const Batch b = compute_batch(ctx, kinds, std::nullopt, ctx.cfg.max_degree);
  emit_batch(ctx, b, out);
  return batch_ok(b) ? kExitOk : kExitFailure;
}

} // namespace

std::vector<RootSystemKind> parse_kind_selection(const std::string &kinds, const std::string &ranks) {
  if (kinds.empty())
    throw UsageError("--kind is required");
  const std::vector<int> rank_list = ranks.empty() ? std::vector<int>{} : parse_ranks(ranks);
  std::vector<RootSystemKind> out;
  std::stringstream ss(kinds);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::string family = part;
    std::optional<int> own_rank;
    // "E6" carries its rank; "H2" is a family name in its own right
    std::size_t split = family.size();
    while (split > 1 && std::isdigit(static_cast<unsigned char>(family[split - 1])))
      --split;
    if (split < family.size() && family != "H2" && family != "h2") {
      own_rank = std::stoi(family.substr(split));
      family = family.substr(0, split);
    }
    if (own_rank) {
      out.push_back(RootSystemKind::parse(family, own_rank));
    } else if (rank_list.empty()) {
      out.push_back(RootSystemKind::parse(family, std::nullopt));
    } else {
      for (int r : rank_list)
        out.push_back(RootSystemKind::parse(family, r));
    }
  }
  return out;
}

std::vector<RootSystemKind> table_scope(int max_rank, bool allow_large) {
  std::vector<RootSystemKind> all;
  for (int n = 1; n <= 5; ++n)
    all.push_back({Family::A, n});
  for (int n = 2; n <= 4; ++n)
    all.push_back({Family::B, n});
  for (int n = 2; n <= 4; ++n)
    all.push_back({Family::C, n});
  all.push_back({Family::D, 4});
  all.push_back({Family::G, 2});
  all.push_back({Family::F, 4});
  all.push_back({Family::E, 6});
  if (allow_large) {
    all.push_back({Family::E, 7});
    all.push_back({Family::E, 8});
  }
  std::vector<RootSystemKind> out;
  for (const auto &k : all)
    if (k.rank <= max_rank)
      out.push_back(k);
  return out;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exponents of Weyl group actions on weight lattices"};
  app.name("weylexp");
  app.require_subcommand(1);

  Context ctx;
  RunConfig &cfg = ctx.cfg;

  std::string orbit_family, orbit_weight;
  int orbit_rank = 0;
  auto *orbit_cmd = app.add_subcommand("orbit", "List the Weyl orbit of a weight");
  orbit_cmd->add_option("family", orbit_family, "Family letter or H2")->required();
  orbit_cmd->add_option("rank", orbit_rank, "Rank")->required();
  orbit_cmd->add_option("weight", orbit_weight, "Coordinates in the fundamental weights, e.g. 1,0")
      ->required();
  add_common(orbit_cmd, cfg);

  std::string phi_weight;
  auto *phi_cmd = app.add_subcommand("phi", "Graded images phi^(i)(rho(chi))");
  add_selection(phi_cmd, cfg, true);
  add_degree(phi_cmd, cfg);
  phi_cmd->add_option("--weight", phi_weight, "Weight chi (default w1)");
  add_common(phi_cmd, cfg);

  auto *dynkin_cmd = app.add_subcommand("dynkin", "Dynkin indices of the fundamental weights");
  add_selection(dynkin_cmd, cfg, true);
  add_common(dynkin_cmd, cfg);

  std::optional<std::uint64_t> probe;
  auto *exp_cmd = app.add_subcommand("exponents", "Exponents tau_i with Dynkin and torsion data");
  add_selection(exp_cmd, cfg, true);
  add_degree(exp_cmd, cfg);
  exp_cmd->add_flag("--timings", cfg.timings, "Include timings in the output");
  exp_cmd->add_option("--probe-basis", probe,
                      "Also recompute tau after a random unimodular basis change (seed)");
  add_common(exp_cmd, cfg);

  auto *tor_cmd = app.add_subcommand("torsion-bounds", "Torsion annihilator bounds");
  add_selection(tor_cmd, cfg, true);
  add_common(tor_cmd, cfg);

  auto *h2_cmd = app.add_subcommand("h2", "Second exponent of H2 over Z[tau]");
  h2_cmd->add_flag("--timings", cfg.timings, "Include the run time");
  add_common(h2_cmd, cfg);

  std::uint64_t seed = 1;
  bool perturb = false;
  int verify_max_rank = 4, sets = 500;
  auto *verify_cmd = app.add_subcommand("verify", "Run the consistency suite");
  add_selection(verify_cmd, cfg, false);
  add_degree(verify_cmd, cfg);
  verify_cmd->add_option("--seed", seed, "Seed for the randomized checks");
  verify_cmd->add_flag("--perturb", perturb, "Run on a perturbed Cartan matrix (negative control)");
  verify_cmd->add_option("--max-rank", verify_max_rank, "Largest rank in the default scope")
      ->check(CLI::Range(1, 8));
  verify_cmd->add_option("--sets", sets, "Random sets per symmetric-sum check")
      ->check(CLI::PositiveNumber);
  add_common(verify_cmd, cfg);

  int table_max_rank = 6;
  auto *table_cmd = app.add_subcommand("table", "Full tau / Dynkin / torsion table");
  table_cmd->add_option("--max-rank", table_max_rank, "Largest rank included")
      ->check(CLI::Range(1, 8));
  add_degree(table_cmd, cfg);
  table_cmd->add_flag("--timings", cfg.timings, "Include timings in the output");
  add_common(table_cmd, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ctx.open_cache();
    if (*orbit_cmd)
      return cmd_orbit(ctx, orbit_family, orbit_rank, orbit_weight, out);
    if (*phi_cmd)
      return cmd_phi(ctx, phi_weight, out);
    if (*dynkin_cmd)
      return cmd_dynkin(ctx, out);
    if (*exp_cmd)
      return cmd_exponents(ctx, probe, out);
    if (*tor_cmd)
      return cmd_torsion(ctx, out);
    if (*h2_cmd)
      return cmd_h2(ctx, out);
    if (*verify_cmd)
      return cmd_verify(ctx, seed, perturb, verify_max_rank, sets, out);
    if (*table_cmd)
      return cmd_table(ctx, table_max_rank, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error &e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

} // namespace weylexp
