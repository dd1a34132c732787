#include "pqs/cli.hpp"

#include "pqs/error.hpp"
#include "pqs/presets.hpp"
#include "pqs/report.hpp"
#include "pqs/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace pqs {

namespace {

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::pair<long long, long long> parse_window(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw Error(ErrorKind::Usage, "--k2-window expects a..b, got '" + text + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    auto a_text = text.substr(0, dots), b_text = text.substr(dots + 2);
    long long a = std::stoll(a_text, &used_a), b = std::stoll(b_text, &used_b);
    if (used_a != a_text.size() || used_b != b_text.size()) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Usage, "--k2-window expects a..b, got '" + text + "'");
  }
}

void print_record(std::ostream& out, const InvariantRecord& r, const std::string& indent) {
  out << indent << "g1 = " << r.g1 << ", g2 = " << r.g2 << "\n"
      << indent << "K_X^2 = " << to_string(r.KX2) << "\n"
      << indent << "K_S^2 = " << to_string(r.KS2) << "\n"
      << indent << "e(S) = " << to_string(r.eS) << "\n"
      << indent << "chi = " << r.chi << ", p_g = " << r.pg << ", q = " << r.q << "\n"
      << indent << "tau = " << to_string(r.tau) << "\n"
      << indent << "gamma = " << to_string(r.gamma) << ", mu = " << to_string(r.mu)
      << ", l = " << r.l << ", c = " << r.c << "\n"
      << indent << "I = " << r.I << ", I_alt = " << r.I_alt << "\n"
      << indent << "k = " << to_string(r.k) << ", e = " << to_string(r.e_basket)
      << ", B = " << to_string(r.B) << "\n";
}

void print_datum(std::ostream& out, const SurfaceDatum& d) {
  auto basket = compute_basket(d);
  auto inv = surface_invariants(d, basket);
  auto dual_datum = dual_surface(d);
  auto dual_basket = compute_basket(dual_datum);
  auto dual = surface_invariants(dual_datum, dual_basket);
  auto hodge = h2_quotient_check(d, inv);
  out << "group: " << (d.group->name().empty() ? "(unnamed)" : d.group->name()) << " (order "
      << d.group->order() << ")\n";
  out << "sys1: " << format_system(d.sys1) << "\n";
  out << "sys2: " << format_system(d.sys2) << "\n";
  out << "basket: " << basket.to_string() << "\n";
  out << "invariants:\n";
  print_record(out, inv, "  ");
  out << "hodge: p_g = " << hodge.pg_check << ", dim V = " << hodge.dimV
      << ", h11(X) = " << hodge.h11X << "\n";
  out << "dual surface:\n";
  out << "  basket: " << dual_basket.to_string() << "\n";
  print_record(out, dual, "  ");
  for (const auto& f : advisory_flags(inv, dual)) out << "warning: " << f << "\n";
}

GroupPtr group_from_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    auto groups = read_group_file(spec.substr(1));
    if (groups.size() != 1)
      throw Error(ErrorKind::Usage, "group file '" + spec.substr(1) + "' must contain exactly one group");
    return groups[0];
  }
  return parse_group_line(spec);
}

GroupPtr group_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) return group_from_spec(j.get<std::string>());
  const auto name = j.at("name").get<std::string>();
  const auto degree = j.at("degree").get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto& g : j.at("generators")) gens.push_back(parse_permutation(g.get<std::string>(), degree));
  return make_group(std::move(gens), degree, name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_classify(const SearchParams& p, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  auto result = classify(p);
  auto report = make_report(p, result);
  auto text = dump_report(report);
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error(ErrorKind::Io, "cannot write '" + out_path + "'");
    f << text;
  }
  err << result.families.size() << " families\n";
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";
  for (const auto& s : result.skipped)
    err << "skipped: " << s.group << " " << s.t1.to_string() << " " << s.t2.to_string() << ": "
        << s.reason << "\n";
  for (const auto& g : result.coverage_gaps)
    err << "coverage gap: no group of order " << g.group_order << " (K^2 = " << g.k2 << ", "
        << g.signature_pairs << " signature pairs, first " << g.t1.to_string() << " "
        << g.t2.to_string() << ")\n";
  return result.coverage_gaps.empty() ? kExitOk : kExitCoverageGap;
}

int cmd_invariants(const std::string& group, const std::string& sys1, const std::string& sys2,
                   const std::string& in_path, std::ostream& out) {
  if (!in_path.empty()) {
    if (!group.empty() || !sys1.empty() || !sys2.empty())
      throw Error(ErrorKind::Usage, "--in excludes --group, --sys1 and --sys2");
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(read_file(in_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(ErrorKind::Parse, e.byte, "malformed JSON in '" + in_path + "'");
    }
    try {
      std::vector<nlohmann::ordered_json> items;
      if (j.contains("families")) {
        for (const auto& f : j.at("families")) items.push_back(f);
      } else {
        items.push_back(j);
      }
      for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& item = items[i];
        auto g = group_from_json(item.at("group"));
        std::string s1, s2;
        if (item.contains("systems")) {
          s1 = item.at("systems").at(0).get<std::string>();
          s2 = item.at("systems").at(1).get<std::string>();
        } else {
          s1 = item.at("sys1").get<std::string>();
          s2 = item.at("sys2").get<std::string>();
        }
        SurfaceDatum d{g, parse_system(g, s1), parse_system(g, s2)};
        validate(d);
        if (i) out << "\n";
        print_datum(out, d);
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, "malformed input '" + in_path + "': " + e.what());
    }
    return kExitOk;
  }
  if (group.empty() || sys1.empty() || sys2.empty())
    throw Error(ErrorKind::Usage, "invariants needs --group, --sys1 and --sys2, or --in");
  auto g = group_from_spec(group);
  SurfaceDatum d{g, parse_system(g, sys1), parse_system(g, sys2)};
  validate(d);
  print_datum(out, d);
  return kExitOk;
}

int cmd_verify(const std::string& rows_path, const VerifyOptions& options, std::ostream& out) {
  auto rows = read_rows_file(rows_path);
  VerifyOptions opts = options;
  opts.on_row = [&out](const RowCheck& c) { out << format_row_check(c) << std::endl; };
  auto checks = verify_rows(rows, opts);
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& c : checks) {
    if (c.status == RowStatus::Pass) ++pass;
    else if (c.status == RowStatus::Fail) ++fail;
    else ++skipped;
  }
  out << "summary: " << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
  return fail ? kExitError : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Product-quotient surfaces with p_g = q = 0", "pqs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto* classify_cmd = app.add_subcommand("classify", "Search for surfaces and write a JSON report");
  long long chi = 0;
  std::optional<long long> k2;
  std::string gamma_text, window_text, groups_text, dedup_text = "hurwitz+aut+swap", out_path;
  SearchCaps caps;
  unsigned jobs = 1;
  classify_cmd->add_option("--chi", chi, "holomorphic Euler characteristic")->required();
  classify_cmd->add_option("--k2", k2, "target K_S^2");
  classify_cmd->add_option("--gamma", gamma_text, "target gamma, p/q");
  classify_cmd->add_option("--k2-window", window_text, "K^2 range a..b for --gamma");
  classify_cmd->add_option("--groups", groups_text, "name,... or @file");
  classify_cmd->add_option("--dedup", dedup_text, "hurwitz|hurwitz+aut|hurwitz+aut+swap");
  classify_cmd->add_option("--max-group-order", caps.max_group_order);
  classify_cmd->add_option("--max-m", caps.max_m);
  classify_cmd->add_option("--max-r", caps.max_r);
  classify_cmd->add_option("--out", out_path, "report file (default stdout)");
  classify_cmd->add_option("--jobs", jobs, "worker threads");

  auto* inv_cmd = app.add_subcommand("invariants", "Invariants of one surface datum");
  std::string group_text, sys1_text, sys2_text, in_path;
  inv_cmd->add_option("--group", group_text, "preset name, \"name degree gens...\" or @file");
  inv_cmd->add_option("--sys1", sys1_text, "(m1,...,mr):[g1,...,gr]");
  inv_cmd->add_option("--sys2", sys2_text, "(n1,...,ns):[h1,...,hs]");
  inv_cmd->add_option("--in", in_path, "JSON datum or report");

  auto* verify_cmd = app.add_subcommand("verify-tables", "Check table rows against the search");
  std::string rows_path, subset_text = "small", verify_dedup = "hurwitz+aut+swap";
  unsigned verify_jobs = 1;
  verify_cmd->add_option("--rows", rows_path, "rows file");
  verify_cmd->add_option("--subset", subset_text, "small|all");
  verify_cmd->add_option("--dedup", verify_dedup, "hurwitz|hurwitz+aut|hurwitz+aut+swap");
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*classify_cmd) {
      SearchParams p;
      p.chi = chi;
      p.k2 = k2;
      if (!gamma_text.empty()) p.gamma = parse_rational(gamma_text);
      if (!window_text.empty()) {
        auto [a, b] = parse_window(window_text);
        p.k2_min = a;
        p.k2_max = b;
        p.k2_window_set = true;
      }
      if (!groups_text.empty()) {
        if (groups_text[0] == '@') {
          p.groups = read_group_file(groups_text.substr(1));
          p.groups_are_catalog = true;
        } else {
          for (const auto& name : split_top_level(groups_text)) p.groups.push_back(group_preset(name));
        }
        if (p.groups.empty()) throw Error(ErrorKind::Usage, "--groups names no group");
      }
      p.dedup = parse_dedup_mode(dedup_text);
      p.caps = caps;
      p.jobs = jobs;
      check_params(p);
      return cmd_classify(p, out_path, out, err);
    }
    if (*inv_cmd) return cmd_invariants(group_text, sys1_text, sys2_text, in_path, out);
    if (*verify_cmd) {
      if (rows_path.empty()) throw Error(ErrorKind::Usage, "verify-tables needs --rows FILE");
      VerifyOptions options;
      options.subset = parse_row_subset(subset_text);
      options.dedup = parse_dedup_mode(verify_dedup);
      options.jobs = verify_jobs;
      return cmd_verify(rows_path, options, out);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Usage) {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    }
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace pqs
