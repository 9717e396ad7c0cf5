// Command-line front end. Talks to the engine exclusively through the
// C API in surf4/surf4.h; structured results arrive as JSON and are
// re-rendered here as aligned tables or CSV.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surf4/surf4.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct ResultDeleter {
  void operator()(surf4_result* r) const { surf4_result_free(r); }
};
using ResultPtr = std::unique_ptr<surf4_result, ResultDeleter>;

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitUsage);
}

void require_ok(surf4_status s, const std::string& what) {
  if (s != SURF4_OK) die(what + ": " + surf4_status_str(s));
}

json parse_result(const ResultPtr& r) {
  return json::parse(surf4_result_json(r.get()));
}

// ---- rendering ------------------------------------------------------

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

void print_csv_row(const std::vector<std::string>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << csv_quote(row[i]);
  }
  std::cout << "\n";
}

// Left-aligned columns padded to the widest cell.
void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size())
        line.append(width[i] - row[i].size(), ' ');
    }
    std::cout << line << "\n";
  }
}

std::string field_str(const json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  return j.dump();
}

std::string join(const json& arr, const std::string& sep) {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += field_str(x);
  }
  return out;
}

std::string solutions_str(const json& arr) {
  std::string out;
  for (const auto& s : arr) {
    if (!out.empty()) out += "; ";
    out += "n=" + s["n"].dump() + " b=" + s["b"].dump() + " r=" + s["r"].dump();
  }
  return out.empty() ? "-" : out;
}

void render_records(const json& doc, const std::string& format,
                    const std::vector<std::string>& cols, const char* rows_key,
                    bool reasons_join) {
  std::vector<std::vector<std::string>> table;
  table.push_back(cols);
  for (const auto& rec : doc[rows_key]) {
    std::vector<std::string> row;
    for (const auto& col : cols) {
      if (col == "reasons" && reasons_join)
        row.push_back(join(rec["reasons"], "; "));
      else if (col == "b_solutions")
        row.push_back(solutions_str(rec["b_solutions"]));
      else
        row.push_back(field_str(rec[col]));
    }
    table.push_back(std::move(row));
  }
  if (format == "csv")
    for (const auto& row : table) print_csv_row(row);
  else
    print_table(table);
}

// ---- flag parsing ---------------------------------------------------

std::pair<int64_t, int64_t> parse_window(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) die("window must look like A..B: " + s);
  try {
    int64_t lo = std::stoll(s.substr(0, pos));
    int64_t hi = std::stoll(s.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    die("window must look like A..B: " + s);
  }
}

// a_lo..a_hi,b_lo..b_hi,n_lo..n_hi,r_lo..r_hi[,d_min]
std::vector<int64_t> parse_box(const std::string& s) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    parts.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4 && parts.size() != 5)
    die("box must be four intervals a,b,n,r plus an optional d_min: " + s);
  std::vector<int64_t> box;
  for (size_t i = 0; i < 4; ++i) {
    auto [lo, hi] = parse_window(parts[i]);
    box.push_back(lo);
    box.push_back(hi);
  }
  try {
    box.push_back(parts.size() == 5 ? std::stoll(parts[4]) : 13);
  } catch (const std::exception&) {
    die("d_min must be an integer: " + parts[4]);
  }
  return box;
}

// ---- subcommands ----------------------------------------------------

int cmd_invariants(int64_t a, int64_t b, int64_t n, int64_t r,
                   const std::string& format) {
  surf4_result* raw = nullptr;
  require_ok(surf4_invariants(a, b, n, r, &raw), "invariants");
  ResultPtr res(raw);
  if (format == "json") {
    std::cout << surf4_result_json(res.get()) << "\n";
    return kExitOk;
  }
  json doc = parse_result(res);
  const std::vector<std::string> keys = {"d", "pi", "k_squared", "chi",
                                         "dp_residual"};
  if (format == "csv") {
    std::vector<std::string> hdr(keys), row;
    for (const auto& k : keys) row.push_back(doc[k].dump());
    print_csv_row(hdr);
    print_csv_row(row);
  } else {
    std::vector<std::vector<std::string>> table;
    for (const auto& k : keys) table.push_back({k, doc[k].dump()});
    print_table(table);
  }
  return kExitOk;
}

int cmd_ruled(int64_t a, const std::string& format) {
  surf4_result* raw = nullptr;
  require_ok(surf4_classify_ruled(a, &raw), "ruled");
  ResultPtr res(raw);
  if (format == "json") {
    std::cout << surf4_result_json(res.get()) << "\n";
    return kExitOk;
  }
  render_records(parse_result(res), format,
                 {"a", "d", "pi", "verdict", "branch", "reasons"}, "records",
                 true);
  return kExitOk;
}

int cmd_fn_systems(int64_t n_lo, int64_t n_hi, bool strict,
                   const std::string& format) {
  surf4_result* raw = nullptr;
  require_ok(surf4_classify_fn_systems(n_lo, n_hi, strict ? 1 : 0, &raw),
             "fn-systems");
  ResultPtr res(raw);
  if (format == "json") {
    std::cout << surf4_result_json(res.get()) << "\n";
    return kExitOk;
  }
  json doc = parse_result(res);
  render_records(doc, format,
                 {"a", "d", "f_value", "divisibility_ok", "pi", "verdict",
                  "b_solutions", "reasons"},
                 "candidates", true);
  if (format != "csv") {
    const json& summary = doc["summary"];
    std::cout << "\n";
    std::cout << "max degree = " << summary["max_degree"].dump() << "\n";
    std::cout << "surviving d > 12: "
              << (summary["surviving_d_gt_12"].empty()
                      ? "(none)"
                      : summary["surviving_d_gt_12"].dump())
              << "\n";
    for (const auto& note : summary["notes"])
      std::cout << note.get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::vector<int64_t>& box, bool do_cross_validate,
               const std::string& format) {
  if (do_cross_validate) {
    surf4_result* raw = nullptr;
    int pass = 0;
    require_ok(surf4_cross_validate(box.data(), &pass, &raw), "oracle");
    ResultPtr res(raw);
    if (format == "json") {
      std::cout << surf4_result_json(res.get()) << "\n";
    } else {
      json doc = parse_result(res);
      std::cout << "cross-validation: " << (pass ? "PASS" : "FAIL") << "\n";
      std::cout << "d > 12 pairs: "
                << (doc["d_gt_12_pairs"].empty() ? "(none)"
                                                 : doc["d_gt_12_pairs"].dump())
                << "\n";
      for (const auto& w : doc["warnings"])
        std::cout << "warning: " << w.get<std::string>() << "\n";
      if (!pass) {
        std::cout << "extra tuples: " << doc["extra"].dump() << "\n";
        std::cout << "missing tuples: " << doc["missing"].dump() << "\n";
      }
    }
    return pass ? kExitOk : kExitVerificationFailure;
  }

  surf4_result* raw = nullptr;
  require_ok(surf4_oracle_enumerate(box.data(), &raw), "oracle");
  ResultPtr res(raw);
  if (format == "json") {
    std::cout << surf4_result_json(res.get()) << "\n";
    return kExitOk;
  }
  json doc = parse_result(res);
  render_records(doc, format, {"a", "b", "n", "r", "d", "pi"}, "tuples",
                 false);
  if (format != "csv")
    std::cout << "\ncount = " << doc["count"].dump() << "\n";
  return kExitOk;
}

int cmd_verify_paper(const std::string& format) {
  surf4_result* raw = nullptr;
  int all_pass = 0;
  require_ok(surf4_verify_paper(&all_pass, &raw), "verify-paper");
  ResultPtr res(raw);
  if (format == "json") {
    std::cout << surf4_result_json(res.get()) << "\n";
  } else {
    json doc = parse_result(res);
    render_records(doc, format,
                   {"status", "criterion", "claim_id", "citation", "expected",
                    "computed"},
                   "entries", false);
    if (format != "csv") {
      const json& summary = doc["summary"];
      std::cout << "\n"
                << summary["pass"].dump() << "/" << summary["total"].dump()
                << " checks passed\n";
    }
  }
  return all_pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surf4: exact numerical classification of smooth rational "
               "surfaces in P^4"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  bool strict = false;
  app.add_flag("--strict", strict,
               "Use the strict bound-polynomial cutoff (< 0 instead of <= 0)");
  std::string n_window = "0..20";
  app.add_option("--n-window", n_window,
                 "Range of Hirzebruch indices n to list solutions for (A..B)")
      ->capture_default_str();
  std::string box_spec = "3..9,0..60,0..6,0..120,13";
  app.add_option("--box", box_spec,
                 "Search box a,b,n,r as comma-separated A..B intervals plus "
                 "an optional d_min")
      ->capture_default_str();

  auto* inv = app.add_subcommand(
      "invariants", "Degree, sectional genus, K^2, chi and the double point "
                    "residual of aC_0 + bf - E_1 - ... - E_r on F_n");
  int64_t a = 0, b = 0, n = 0, r = 0;
  inv->add_option("-a", a, "Coefficient of C_0")->required();
  inv->add_option("-b", b, "Coefficient of f")->required();
  inv->add_option("-n", n, "Hirzebruch index")->required();
  inv->add_option("-r", r, "Number of blown-up points")->required();

  auto* ruled = app.add_subcommand(
      "ruled", "Classification table for a-ruled rational surfaces");
  int64_t ruled_a = 0;
  ruled->add_option("-a", ruled_a, "Ruling degree (>= 1)")->required();

  auto* fn = app.add_subcommand(
      "fn-systems", "Candidate enumeration for linear systems with simple "
                    "base points on F_n");

  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force enumeration over a raw (a, b, n, r) box");
  bool do_cross_validate = false;
  oracle->add_flag("--cross-validate", do_cross_validate,
                   "Compare the enumeration against the classifier route");

  auto* verify = app.add_subcommand(
      "verify-paper", "Run every reproduction check and report PASS/FAIL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(a, b, n, r, format);
    if (ruled->parsed()) return cmd_ruled(ruled_a, format);
    if (fn->parsed()) {
      auto [lo, hi] = parse_window(n_window);
      return cmd_fn_systems(lo, hi, strict, format);
    }
    if (oracle->parsed())
      return cmd_oracle(parse_box(box_spec), do_cross_validate, format);
    if (verify->parsed()) return cmd_verify_paper(format);
  } catch (const std::exception& e) {
    die(e.what());
  }
  return kExitUsage;
}
