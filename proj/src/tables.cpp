#include "pqs/tables.hpp"

#include "pqs/error.hpp"
#include "pqs/presets.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace pqs {

namespace {

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based column of text[0]
};

Field trim(std::string_view line, std::size_t begin, std::size_t end) {
  while (begin < end && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
  return {line.substr(begin, end - begin), begin + 1};
}

long long parse_int(const Field& f, std::size_t line) {
  std::size_t i = 0;
  bool negative = false;
  if (i < f.text.size() && (f.text[i] == '-' || f.text[i] == '+')) negative = f.text[i++] == '-';
  if (i == f.text.size())
    throw ParseError(ErrorKind::Parse, f.column, "line " + std::to_string(line) + ": expected an integer");
  long long v = 0;
  for (; i < f.text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(f.text[i])) || v > 1'000'000'000)
      throw ParseError(ErrorKind::Parse, f.column + i,
                       "line " + std::to_string(line) + ": expected an integer");
    v = v * 10 + (f.text[i] - '0');
  }
  return negative ? -v : v;
}

template <class F>
auto with_offset(const Field& f, std::size_t line, F parse) {
  try {
    return parse(f.text);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), f.column + e.position() - 1,
                     "line " + std::to_string(line) + ": bad field '" + std::string(f.text) + "'");
  } catch (const Error& e) {
    throw ParseError(e.kind(), f.column, "line " + std::to_string(line) + ": " + e.what());
  }
}

TableRow parse_row(std::string_view line, std::size_t number) {
  std::vector<Field> fields;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '|') {
      fields.push_back(trim(line, begin, i));
      begin = i + 1;
    }
  }
  if (fields.size() != 6 && fields.size() != 8)
    throw ParseError(ErrorKind::Parse, 1,
                     "line " + std::to_string(number) + ": expected 6 or 8 '|'-separated fields, got " +
                         std::to_string(fields.size()));
  TableRow row;
  row.line = number;
  row.k2 = parse_int(fields[0], number);
  row.basket = with_offset(fields[1], number, [](std::string_view t) { return Basket::parse(t); });
  row.t1 = with_offset(fields[2], number, [](std::string_view t) { return Signature::parse(t); });
  row.t2 = with_offset(fields[3], number, [](std::string_view t) { return Signature::parse(t); });
  if (fields[4].text.empty())
    throw ParseError(ErrorKind::Parse, fields[4].column,
                     "line " + std::to_string(number) + ": missing group name");
  row.group = std::string(fields[4].text);
  row.N = parse_int(fields[5], number);
  if (row.N < 0)
    throw ParseError(ErrorKind::Parse, fields[5].column, "line " + std::to_string(number) + ": N must be >= 0");
  if (fields.size() == 8) {
    row.h1 = std::string(fields[6].text);
    row.pi1 = std::string(fields[7].text);
  }
  return row;
}

bool same_pair(const Family& f, const TableRow& r) {
  return (f.t1 == r.t1 && f.t2 == r.t2) || (f.t1 == r.t2 && f.t2 == r.t1);
}

}  // namespace

std::vector<TableRow> parse_rows(std::string_view text) {
  std::vector<TableRow> rows;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    ++number;
    pos = nl + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    rows.push_back(parse_row(line, number));
  }
  return rows;
}

std::vector<TableRow> read_rows_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot read rows file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_rows(ss.str());
}

RowSubset parse_row_subset(std::string_view text) {
  if (text == "small") return RowSubset::Small;
  if (text == "all") return RowSubset::All;
  throw Error(ErrorKind::Usage, "unknown subset '" + std::string(text) + "' (expected small or all)");
}

bool in_small_subset(const FiniteGroup& g) {
  if (g.order() <= 64) return true;
  static const std::vector<std::string> extra = {"A5", "S5", "A6", "PSL(2,7)"};
  return std::find(extra.begin(), extra.end(), g.name()) != extra.end();
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

std::vector<RowCheck> verify_rows(const std::vector<TableRow>& rows, const VerifyOptions& options) {
  std::vector<RowCheck> checks;
  {
    std::map<std::tuple<long long, Basket, Signature, Signature, std::string>, std::size_t> index;
    for (const auto& r : rows) {
      auto lo = std::min(r.t1, r.t2), hi = std::max(r.t1, r.t2);
      auto key = std::make_tuple(r.k2, r.basket, lo, hi, r.group);
      if (auto it = index.find(key); it != index.end()) {
        checks[it->second].row.N += r.N;
        checks[it->second].lines.push_back(r.line);
        continue;
      }
      index.emplace(key, checks.size());
      RowCheck c;
      c.row = r;
      c.lines = {r.line};
      checks.push_back(std::move(c));
    }
  }

  std::map<std::string, GroupPtr> groups;
  std::map<std::string, std::string> group_errors;
  std::map<std::tuple<long long, Basket, std::string>, SearchResult> runs;
  for (auto& c : checks) {
    const auto& r = c.row;
    GroupPtr g;
    if (auto it = groups.find(r.group); it != groups.end()) {
      g = it->second;
    } else if (auto e = group_errors.find(r.group); e != group_errors.end()) {
      c.reason = e->second;
    } else {
      try {
        g = group_preset(r.group);
        groups.emplace(r.group, g);
      } catch (const Error& err) {
        c.reason = "group not available in the preset catalog: " + std::string(err.what());
        group_errors.emplace(r.group, c.reason);
      }
    }
    if (!g) {
      c.status = RowStatus::Skipped;
    } else if (is_hard_order(g->order())) {
      c.status = RowStatus::Skipped;
      c.reason = "group order " + std::to_string(g->order()) +
                 " is one of the orders (512, 1024, 1536, ...) that have to be treated by hand "
                 "separately";
    } else if (options.subset == RowSubset::Small && !in_small_subset(*g)) {
      c.status = RowStatus::Skipped;
      c.reason = "group of order " + std::to_string(g->order()) + " is outside the small subset";
    } else if (g->order() > options.caps.max_group_order) {
      c.status = RowStatus::Skipped;
      c.reason = "group order exceeds max_group_order";
    } else {
      auto key = std::make_tuple(r.k2, r.basket, r.group);
      auto it = runs.find(key);
      if (it == runs.end()) {
        SearchParams p;
        p.chi = 1;
        p.k2 = r.k2;
        p.groups = {g};
        p.basket = r.basket;
        p.dedup = options.dedup;
        p.caps = options.caps;
        p.jobs = options.jobs;
        it = runs.emplace(key, classify(p)).first;
      }
      const auto& result = it->second;
      for (const auto& f : result.families)
        if (same_pair(f, r)) c.families.push_back(f);
      c.found = c.families.size();
      bool skipped_task = std::any_of(result.skipped.begin(), result.skipped.end(), [&](const SkippedTask& s) {
        return (s.t1 == r.t1 && s.t2 == r.t2) || (s.t1 == r.t2 && s.t2 == r.t1);
      });
      if (c.found == static_cast<std::size_t>(r.N) && !skipped_task) {
        c.status = RowStatus::Pass;
      } else {
        c.status = RowStatus::Fail;
        c.reason = skipped_task ? "search for this signature pair was cut off by a cap"
                                : "expected N=" + std::to_string(r.N) + ", found " + std::to_string(c.found);
      }
    }
    if (options.on_row) options.on_row(c);
  }
  return checks;
}

std::string format_row_check(const RowCheck& c) {
  std::ostringstream out;
  out << to_string(c.status) << " line";
  if (c.lines.size() > 1) out << "s";
  out << " ";
  for (std::size_t i = 0; i < c.lines.size(); ++i) out << (i ? "," : "") << c.lines[i];
  out << ": " << c.row.k2 << " | " << c.row.basket.to_string() << " | " << c.row.t1.to_short_string()
      << " | " << c.row.t2.to_short_string() << " | " << c.row.group << " | N=" << c.row.N;
  if (c.status != RowStatus::Skipped) out << ": found " << c.found;
  if (!c.reason.empty() && c.status != RowStatus::Pass) out << " (" << c.reason << ")";
  return out.str();
}

}  // namespace pqs
