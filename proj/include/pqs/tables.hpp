#pragma once

#include "pqs/basket.hpp"
#include "pqs/dedup.hpp"
#include "pqs/search.hpp"
#include "pqs/signature.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pqs {

/// One line of a rows file:
///   k2 | basket | t1 | t2 | group | N [| H1 | pi1]
/// H1 and pi1 are carried along but never checked.
struct TableRow {
  long long k2 = 0;
  Basket basket;
  Signature t1, t2;
  std::string group;
  long long N = 0;
  std::optional<std::string> h1, pi1;
  std::size_t line = 0;
};

/// '#' starts a comment; blank lines are ignored. Errors name the line and
/// carry the 1-based column.
std::vector<TableRow> parse_rows(std::string_view text);
std::vector<TableRow> read_rows_file(const std::string& path);

enum class RowSubset { Small, All };
RowSubset parse_row_subset(std::string_view text);

/// |G| <= 64, or one of A5, S5, A6, PSL(2,7).
bool in_small_subset(const FiniteGroup& g);

enum class RowStatus { Pass, Fail, Skipped };
const char* to_string(RowStatus s);

/// Rows with the same (k2, basket, t1, t2, group) are checked together
/// against the sum of their N.
struct RowCheck {
  TableRow row;  // N is the aggregated count
  std::vector<std::size_t> lines;
  RowStatus status = RowStatus::Skipped;
  std::size_t found = 0;
  std::string reason;
  std::vector<Family> families;
};

struct VerifyOptions {
  RowSubset subset = RowSubset::Small;
  DedupMode dedup = DedupMode::HurwitzAutSwap;
  SearchCaps caps = [] {
    SearchCaps c;
    c.aut_cap = 1500;
    return c;
  }();
  unsigned jobs = 1;
  std::function<void(const RowCheck&)> on_row;
};

std::vector<RowCheck> verify_rows(const std::vector<TableRow>& rows, const VerifyOptions& options);

/// "PASS line 12: 8 | {} | 2,5^2 | 3^4 | A5 | N=1: found 1"
std::string format_row_check(const RowCheck& c);

}  // namespace pqs
