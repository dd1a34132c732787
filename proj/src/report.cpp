#include "pqs/report.hpp"

#include "pqs/error.hpp"
#include "pqs/presets.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pqs {

using nlohmann::ordered_json;

namespace {

std::string rat(const Rational& r) { return to_string(r); }

Rational rat_from(const ordered_json& j) { return parse_rational(j.get<std::string>()); }

ordered_json to_json(const Signature& s) { return s.to_string(); }

ordered_json to_json(const CoverageGap& g) {
  ordered_json j;
  j["k2"] = g.k2;
  j["group_order"] = g.group_order;
  j["signature_pairs"] = g.signature_pairs;
  j["t1"] = to_json(g.t1);
  j["t2"] = to_json(g.t2);
  return j;
}

ordered_json to_json(const SkippedTask& s) {
  ordered_json j;
  j["reason"] = s.reason;
  j["k2"] = s.k2;
  j["group_order"] = s.group_order;
  j["group"] = s.group;
  j["t1"] = to_json(s.t1);
  j["t2"] = to_json(s.t2);
  return j;
}

ordered_json to_json(const HodgeCheck& h) {
  ordered_json j;
  j["pg_check"] = h.pg_check;
  j["dimV"] = h.dimV;
  j["h11X"] = h.h11X;
  return j;
}

ordered_json to_json(const SearchCaps& c) {
  ordered_json j;
  j["max_group_order"] = c.max_group_order;
  j["max_r"] = c.max_r;
  j["max_m"] = c.max_m;
  j["orbit_cap"] = c.orbit_cap;
  j["aut_cap"] = c.aut_cap;
  return j;
}

ordered_json to_json(const ReportHeader& h) {
  ordered_json params;
  params["chi"] = h.chi;
  params["k2"] = h.k2 ? ordered_json(*h.k2) : ordered_json(nullptr);
  params["gamma"] = h.gamma ? ordered_json(rat(*h.gamma)) : ordered_json(nullptr);
  if (h.k2_window)
    params["k2_window"] = ordered_json::array({h.k2_window->first, h.k2_window->second});
  else
    params["k2_window"] = nullptr;
  params["groups"] = h.groups;
  params["groups_are_catalog"] = h.groups_are_catalog;
  params["basket"] = h.basket ? ordered_json(h.basket->to_string()) : ordered_json(nullptr);
  params["dedup"] = h.dedup;
  ordered_json j;
  j["params"] = std::move(params);
  j["caps"] = to_json(h.caps);
  j["tool_version"] = h.tool_version;
  return j;
}

ordered_json to_json(const ReportFamily& f) {
  ordered_json group;
  group["name"] = f.group.name;
  group["order"] = f.group.order;
  group["degree"] = f.group.degree;
  group["generators"] = f.group.generators;
  ordered_json j;
  j["group"] = std::move(group);
  j["t1"] = to_json(f.t1);
  j["t2"] = to_json(f.t2);
  j["systems"] = f.systems;
  j["basket"] = f.basket.to_string();
  j["invariants"] = to_json(f.invariants);
  j["orbit_size"] = f.orbit_size;
  j["warnings"] = f.warnings;
  j["hodge"] = to_json(f.hodge);
  j["dual"] = to_json(f.dual);
  return j;
}

Signature sig_from(const ordered_json& j) { return Signature::parse(j.get<std::string>()); }

CoverageGap gap_from(const ordered_json& j) {
  return CoverageGap{j.at("k2").get<long long>(), j.at("group_order").get<std::size_t>(),
                     j.at("signature_pairs").get<std::size_t>(), sig_from(j.at("t1")),
                     sig_from(j.at("t2"))};
}

SkippedTask skipped_from(const ordered_json& j) {
  return SkippedTask{j.at("reason").get<std::string>(), j.at("k2").get<long long>(),
                     j.at("group_order").get<std::size_t>(), j.at("group").get<std::string>(),
                     sig_from(j.at("t1")), sig_from(j.at("t2"))};
}

HodgeCheck hodge_from(const ordered_json& j) {
  return HodgeCheck{j.at("pg_check").get<long long>(), j.at("dimV").get<long long>(),
                    j.at("h11X").get<long long>()};
}

SearchCaps caps_from(const ordered_json& j) {
  SearchCaps c;
  c.max_group_order = j.at("max_group_order").get<std::size_t>();
  c.max_r = j.at("max_r").get<unsigned>();
  c.max_m = j.at("max_m").get<unsigned>();
  c.orbit_cap = j.at("orbit_cap").get<std::size_t>();
  c.aut_cap = j.at("aut_cap").get<std::size_t>();
  return c;
}

ReportHeader header_from(const ordered_json& j) {
  ReportHeader h;
  const auto& p = j.at("params");
  h.chi = p.at("chi").get<long long>();
  if (!p.at("k2").is_null()) h.k2 = p.at("k2").get<long long>();
  if (!p.at("gamma").is_null()) h.gamma = rat_from(p.at("gamma"));
  if (!p.at("k2_window").is_null())
    h.k2_window = std::make_pair(p.at("k2_window").at(0).get<long long>(),
                                 p.at("k2_window").at(1).get<long long>());
  h.groups = p.at("groups").get<std::vector<std::string>>();
  h.groups_are_catalog = p.at("groups_are_catalog").get<bool>();
  if (!p.at("basket").is_null()) h.basket = Basket::parse(p.at("basket").get<std::string>());
  h.dedup = p.at("dedup").get<std::string>();
  h.caps = caps_from(j.at("caps"));
  h.tool_version = j.at("tool_version").get<std::string>();
  return h;
}

ReportFamily family_from(const ordered_json& j) {
  ReportFamily f;
  const auto& g = j.at("group");
  f.group.name = g.at("name").get<std::string>();
  f.group.order = g.at("order").get<std::size_t>();
  f.group.degree = g.at("degree").get<std::size_t>();
  f.group.generators = g.at("generators").get<std::vector<std::string>>();
  f.t1 = sig_from(j.at("t1"));
  f.t2 = sig_from(j.at("t2"));
  f.systems = j.at("systems").get<std::vector<std::string>>();
  f.basket = Basket::parse(j.at("basket").get<std::string>());
  f.invariants = invariant_record_from_json(j.at("invariants"));
  f.orbit_size = j.at("orbit_size").get<std::size_t>();
  f.warnings = j.at("warnings").get<std::vector<std::string>>();
  f.hodge = hodge_from(j.at("hodge"));
  f.dual = invariant_record_from_json(j.at("dual"));
  return f;
}

ReportGroup report_group(const FiniteGroup& g) {
  ReportGroup out{g.name(), g.order(), g.degree(), {}};
  for (const auto& p : g.generators()) out.generators.push_back(to_cycle_string(p));
  return out;
}

}  // namespace

ordered_json to_json(const InvariantRecord& r) {
  ordered_json j;
  j["g1"] = r.g1;
  j["g2"] = r.g2;
  j["KX2"] = rat(r.KX2);
  j["KS2"] = rat(r.KS2);
  j["e"] = rat(r.eS);
  j["chi"] = r.chi;
  j["pg"] = r.pg;
  j["q"] = r.q;
  j["tau"] = rat(r.tau);
  j["gamma"] = rat(r.gamma);
  j["mu"] = rat(r.mu);
  j["l"] = r.l;
  j["c"] = r.c;
  j["I"] = r.I;
  j["I_alt"] = r.I_alt;
  j["k"] = rat(r.k);
  j["e_basket"] = rat(r.e_basket);
  j["B"] = rat(r.B);
  return j;
}

InvariantRecord invariant_record_from_json(const ordered_json& j) {
  InvariantRecord r;
  r.g1 = j.at("g1").get<long long>();
  r.g2 = j.at("g2").get<long long>();
  r.KX2 = rat_from(j.at("KX2"));
  r.KS2 = rat_from(j.at("KS2"));
  r.eS = rat_from(j.at("e"));
  r.chi = j.at("chi").get<long long>();
  r.pg = j.at("pg").get<long long>();
  r.q = j.at("q").get<long long>();
  r.tau = rat_from(j.at("tau"));
  r.gamma = rat_from(j.at("gamma"));
  r.mu = rat_from(j.at("mu"));
  r.l = j.at("l").get<long long>();
  r.c = j.at("c").get<long long>();
  r.I = j.at("I").get<long long>();
  r.I_alt = j.at("I_alt").get<long long>();
  r.k = rat_from(j.at("k"));
  r.e_basket = rat_from(j.at("e_basket"));
  r.B = rat_from(j.at("B"));
  return r;
}

Report make_report(const SearchParams& params, const SearchResult& result) {
  Report r;
  auto& h = r.header;
  h.chi = params.chi;
  h.k2 = params.k2;
  h.gamma = params.gamma;
  if (params.gamma) {
    if (params.k2_window_set) h.k2_window = std::make_pair(params.k2_min, params.k2_max);
  }
  for (const auto& g : params.groups) h.groups.push_back(g->name());
  h.groups_are_catalog = params.groups.empty() || params.groups_are_catalog;
  h.basket = params.basket;
  h.dedup = to_string(params.dedup);
  h.caps = params.caps;
  for (const auto& f : result.families) {
    ReportFamily rf;
    rf.group = report_group(*f.datum.group);
    rf.t1 = f.t1;
    rf.t2 = f.t2;
    rf.systems = {format_system(f.datum.sys1), format_system(f.datum.sys2)};
    rf.basket = f.basket;
    rf.invariants = f.invariants;
    rf.orbit_size = f.orbit_size;
    rf.warnings = f.warnings;
    rf.hodge = f.hodge;
    rf.dual = f.dual;
    r.families.push_back(std::move(rf));
  }
  r.coverage_gaps = result.coverage_gaps;
  r.skipped = result.skipped;
  r.warnings = result.warnings;
  return r;
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["header"] = to_json(r.header);
  ordered_json families = ordered_json::array();
  for (const auto& f : r.families) families.push_back(to_json(f));
  j["families"] = std::move(families);
  ordered_json gaps = ordered_json::array(), skipped = ordered_json::array();
  for (const auto& g : r.coverage_gaps) gaps.push_back(to_json(g));
  for (const auto& s : r.skipped) skipped.push_back(to_json(s));
  ordered_json footer;
  footer["coverage_gaps"] = std::move(gaps);
  footer["skipped"] = std::move(skipped);
  footer["warnings"] = r.warnings;
  j["footer"] = std::move(footer);
  return j;
}

Report report_from_json(const ordered_json& j) {
  try {
    Report r;
    r.header = header_from(j.at("header"));
    for (const auto& f : j.at("families")) r.families.push_back(family_from(f));
    const auto& footer = j.at("footer");
    for (const auto& g : footer.at("coverage_gaps")) r.coverage_gaps.push_back(gap_from(g));
    for (const auto& s : footer.at("skipped")) r.skipped.push_back(skipped_from(s));
    r.warnings = footer.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed report: ") + e.what());
  }
}

std::string dump_report(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_report(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ErrorKind::Parse, e.byte, "malformed JSON");
  }
  return report_from_json(j);
}

GroupPtr parse_group_line(std::string_view line) {
  struct Token {
    std::string_view text;
    std::size_t start;
  };
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < line.size();) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), start});
  }
  if (tokens.empty()) throw ParseError(ErrorKind::Parse, 1, "empty group line");
  const std::string name(tokens[0].text);
  if (tokens.size() == 1) return group_preset(name);
  std::size_t degree = 0;
  for (char c : tokens[1].text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || degree > 100000)
      throw ParseError(ErrorKind::Parse, tokens[1].start + 1, "expected a degree");
    degree = degree * 10 + static_cast<std::size_t>(c - '0');
  }
  if (degree == 0) throw ParseError(ErrorKind::Parse, tokens[1].start + 1, "degree must be >= 1");
  std::vector<Permutation> gens;
  for (std::size_t t = 2; t < tokens.size(); ++t) {
    try {
      gens.push_back(parse_permutation(tokens[t].text, degree));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), tokens[t].start + e.position(),
                       "bad generator '" + std::string(tokens[t].text) + "'");
    }
  }
  return make_group(std::move(gens), degree, name);
}

std::vector<GroupPtr> read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read group file '" + path + "'");
  std::vector<GroupPtr> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_group_line(line));
    } catch (const Error& e) {
      throw Error(e.kind(), path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace pqs
