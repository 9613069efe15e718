#include "weylexp/report.hpp"

#include <algorithm>
#include <sstream>

namespace weylexp {

Json int_to_json(const Int &x) {
  if (x.fits_slong_p())
    return Json(x.get_si());
  return Json(x.get_str());
}

Int int_from_json(const Json &j) {
  if (j.is_number_integer())
    return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string())
    return parse_int(j.get<std::string>());
  throw UsageError("expected an integer in JSON");
}

Json golden_to_json(const GoldenInt &x) {
  return Json{{"a", int_to_json(x.a())}, {"b", int_to_json(x.b())}, {"display", to_string(x)}};
}

GoldenInt golden_from_json(const Json &j) {
  return GoldenInt(int_from_json(j.at("a")), int_from_json(j.at("b")));
}

Json kind_to_json(const RootSystemKind &kind) {
  return Json{{"name", kind.name()}, {"family", family_letter(kind.family)}, {"rank", kind.rank}};
}

RootSystemKind kind_from_json(const Json &j) {
  return RootSystemKind::parse(j.at("family").get<std::string>(), j.at("rank").get<int>());
}

namespace {

Json int_map_to_json(const std::map<int, Int> &m) {
  Json out = Json::object();
  for (const auto &[k, v] : m)
    out[std::to_string(k)] = int_to_json(v);
  return out;
}

std::map<int, Int> int_map_from_json(const Json &j) {
  std::map<int, Int> out;
  for (const auto &[k, v] : j.items())
    out[std::stoi(k)] = int_from_json(v);
  return out;
}

Json observation_to_json(const LatticeObservation &o) {
  return Json{{"degree", o.degree},           {"rank_L", o.rank_L},
              {"rank_M", o.rank_M},           {"rank_sum", o.rank_sum},
              {"M_in_span_L", o.m_in_span_l}, {"L_in_span_M", o.l_in_span_m},
              {"L_in_M", o.l_in_m}};
}

LatticeObservation observation_from_json(const Json &j) {
  LatticeObservation o;
  o.degree = j.at("degree").get<int>();
  o.rank_L = j.at("rank_L").get<std::size_t>();
  o.rank_M = j.at("rank_M").get<std::size_t>();
  o.rank_sum = j.at("rank_sum").get<std::size_t>();
  o.m_in_span_l = j.at("M_in_span_L").get<bool>();
  o.l_in_span_m = j.at("L_in_span_M").get<bool>();
  o.l_in_m = j.at("L_in_M").get<bool>();
  return o;
}

} // namespace

Json to_json(const TorsionBounds &t) {
  Json out{{"bounds", int_map_to_json(t.bounds)}};
  if (t.ch4)
    out["ch4"] = Json{{"total", t.ch4->total}, {"two_primary", t.ch4->two_primary}};
  else
    out["ch4"] = nullptr;
  return out;
}

TorsionBounds torsion_bounds_from_json(const Json &j) {
  TorsionBounds t;
  t.bounds = int_map_from_json(j.at("bounds"));
  if (j.contains("ch4") && !j.at("ch4").is_null())
    t.ch4 = Ch4Constants{j.at("ch4").at("total").get<int>(), j.at("ch4").at("two_primary").get<int>()};
  return t;
}

Json to_json(const ExponentReport &r, bool with_timings) {
  Json out{{"schema", kSchemaVersion},
           {"kind", kind_to_json(r.kind)},
           {"max_degree", r.max_degree},
           {"tau", int_map_to_json(r.tau)},
           {"dynkin_per_weight", int_map_to_json(r.dynkin_per_weight)},
           {"dynkin_gcd", int_to_json(r.dynkin_gcd)},
           {"torsion", to_json(r.torsion)}};
  Json obs = Json::array();
  for (const auto &o : r.observations)
    obs.push_back(observation_to_json(o));
  out["observations"] = obs;
  if (!r.basis_probe_tau.empty())
    out["basis_probe_tau"] = int_map_to_json(r.basis_probe_tau);
  out["violations"] = r.violations;
  if (with_timings) {
    Json t = Json::object();
    for (const auto &[k, v] : r.timings)
      t[k] = v;
    out["timings"] = t;
  }
  return out;
}

ExponentReport exponent_report_from_json(const Json &j) {
  if (j.at("schema").get<int>() != kSchemaVersion)
    throw UsageError("unsupported report schema");
  ExponentReport r;
  r.kind = kind_from_json(j.at("kind"));
  r.max_degree = j.at("max_degree").get<int>();
  r.tau = int_map_from_json(j.at("tau"));
  r.dynkin_per_weight = int_map_from_json(j.at("dynkin_per_weight"));
  r.dynkin_gcd = int_from_json(j.at("dynkin_gcd"));
  r.torsion = torsion_bounds_from_json(j.at("torsion"));
  for (const auto &o : j.at("observations"))
    r.observations.push_back(observation_from_json(o));
  if (j.contains("basis_probe_tau"))
    r.basis_probe_tau = int_map_from_json(j.at("basis_probe_tau"));
  r.violations = j.at("violations").get<std::vector<std::string>>();
  if (j.contains("timings"))
    for (const auto &[k, v] : j.at("timings").items())
      r.timings[k] = v.get<double>();
  return r;
}

Json to_json(const H2Report &r) {
  Json form = Json::array();
  for (const auto &c : r.form)
    form.push_back(golden_to_json(c));
  return Json{{"schema", kSchemaVersion},
              {"kind", kind_to_json({Family::H2, 2})},
              {"tau2", golden_to_json(r.tau2)},
              {"is_sqrt5", r.is_sqrt5},
              {"form", Json{{"monomials", {"w1^2", "w2^2", "w1*w2"}}, {"coefficients", form}}},
              {"omega2_agrees", r.omega2_agrees}};
}

H2Report h2_report_from_json(const Json &j) {
  if (j.at("schema").get<int>() != kSchemaVersion)
    throw UsageError("unsupported report schema");
  H2Report r;
  r.tau2 = golden_from_json(j.at("tau2"));
  r.is_sqrt5 = j.at("is_sqrt5").get<bool>();
  const auto &coeffs = j.at("form").at("coefficients");
  if (coeffs.size() != 3)
    throw UsageError("H2 form needs three coefficients");
  for (std::size_t i = 0; i < 3; ++i)
    r.form[i] = golden_from_json(coeffs[i]);
  r.omega2_agrees = j.at("omega2_agrees").get<bool>();
  return r;
}

Json to_json(const CheckResult &c) {
  return Json{{"check", c.name}, {"subject", c.subject}, {"passed", c.passed}, {"detail", c.detail}};
}

// ---------------------------------------------------------------------------

std::string align_columns(const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> width;
  for (const auto &row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c)
        width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream out;
  for (const auto &row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size())
        line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::string csv_line(const std::vector<std::string> &cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i)
      line += ',';
    const auto &c = cells[i];
    if (c.find_first_of(",\"\n") != std::string::npos) {
      line += '"';
      for (char ch : c)
        line += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      line += '"';
    } else {
      line += c;
    }
  }
  return line + '\n';
}

namespace {

const std::vector<std::string> kHeader = {"kind", "tau2",     "tau3",     "tau4", "dynkin",
                                          "gcd",  "torsion3", "torsion4", "ch4",  "status"};

std::string lookup(const std::map<int, Int> &m, int k) {
  auto it = m.find(k);
  return it == m.end() ? "-" : it->second.get_str();
}

std::vector<std::string> row_of(const ExponentReport &r, char sep) {
  std::string dynkin;
  for (const auto &[j, d] : r.dynkin_per_weight)
    dynkin += (dynkin.empty() ? "" : std::string(1, sep)) + d.get_str();
  std::string ch4 = "-";
  if (r.torsion.ch4)
    ch4 = std::to_string(r.torsion.ch4->total) + "/" + std::to_string(r.torsion.ch4->two_primary);
  return {r.kind.name(),
          lookup(r.tau, 2),
          lookup(r.tau, 3),
          lookup(r.tau, 4),
          dynkin,
          r.dynkin_gcd.get_str(),
          lookup(r.torsion.bounds, 3),
          lookup(r.torsion.bounds, 4),
          ch4,
          r.ok() ? "ok" : "VIOLATION"};
}

std::vector<std::string> h2_row(const H2Report &h) {
  return {"H2", to_string(h.tau2), "-", "-", "-", "-", "-", "-", "-",
          h.is_sqrt5 ? "sqrt5" : "not-sqrt5"};
}

} // namespace

std::string render_table(const std::vector<ExponentReport> &reports, const std::vector<H2Report> &h2) {
  std::vector<std::vector<std::string>> rows{kHeader};
  for (const auto &r : reports)
    rows.push_back(row_of(r, ','));
  for (const auto &h : h2)
    rows.push_back(h2_row(h));
  return align_columns(rows);
}

std::string render_csv(const std::vector<ExponentReport> &reports, const std::vector<H2Report> &h2) {
  std::string out = csv_line(kHeader);
  for (const auto &r : reports)
    out += csv_line(row_of(r, ';'));
  for (const auto &h : h2)
    out += csv_line(h2_row(h));
  return out;
}

} // namespace weylexp
