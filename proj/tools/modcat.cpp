// modcat: exact counts and conversions for k-associative parenthesization
// classes and their Catalan-object incarnations.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modcat/modcat.hpp"

namespace {

using modcat::Int;
using modcat::MultiDegree;
using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

int oracle_bound(int fallback) {
  if (const char* env = std::getenv("MODCAT_ORACLE_MAX_N")) {
    try {
      std::size_t used = 0;
      int value = std::stoi(env, &used);
      if (used == std::string(env).size() && value >= 0) return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("MODCAT_ORACLE_MAX_N must be a nonnegative integer");
  }
  return fallback;
}

std::string to_string(const Int& v) { return v.str(); }

// ---------------------------------------------------------------------------
// table

Int table_cell(const std::string& which, int k, int n) {
  if (which == "C") return modcat::c_modular_alt(k, n);
  if (which == "M") return modcat::m_general_alt(k, n);
  if (which == "D") return n == 0 ? Int(1) : modcat::d_intersections(k, n);
  return n == 0 ? Int(1) : modcat::largest_class_size_formula(n, k);  // largest
}

std::string row_label(const std::string& which, int k) {
  char letter = which == "largest" ? 'L' : which[0];
  return std::string(1, letter) + "(" + std::to_string(k) + ",n)";
}

int run_table(const std::string& which, int kmax, int nmax, const std::string& format) {
  std::vector<std::vector<Int>> rows;
  for (int k = 1; k <= kmax; ++k) {
    rows.emplace_back();
    for (int n = 0; n <= nmax; ++n) rows.back().push_back(table_cell(which, k, n));
  }
  std::vector<Int> catalan_row;
  if (which == "C")
    for (int n = 0; n <= nmax; ++n) catalan_row.push_back(modcat::catalan(n));

  if (format == "json") {
    json out;
    out["schema"] = "modcat/1";
    out["kind"] = "table";
    out["which"] = which;
    out["kmax"] = kmax;
    out["nmax"] = nmax;
    out["rows"] = json::array();
    for (int k = 1; k <= kmax; ++k) {
      json row;
      row["k"] = k;
      row["values"] = json::array();
      for (const Int& v : rows[static_cast<std::size_t>(k - 1)])
        row["values"].push_back(to_string(v));
      out["rows"].push_back(std::move(row));
    }
    if (which == "C") {
      out["catalan"] = json::array();
      for (const Int& v : catalan_row) out["catalan"].push_back(to_string(v));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (format == "csv") {
    std::cout << "k";
    for (int n = 0; n <= nmax; ++n) std::cout << "," << n;
    std::cout << "\n";
    for (int k = 1; k <= kmax; ++k) {
      std::cout << k;
      for (const Int& v : rows[static_cast<std::size_t>(k - 1)]) std::cout << "," << v;
      std::cout << "\n";
    }
    if (which == "C") {
      std::cout << "catalan";
      for (const Int& v : catalan_row) std::cout << "," << v;
      std::cout << "\n";
    }
    return 0;
  }

  // text: aligned columns
  std::vector<std::string> labels = {"n"};
  for (int k = 1; k <= kmax; ++k) labels.push_back(row_label(which, k));
  if (which == "C") labels.push_back("C_n");
  std::size_t label_width = 0;
  for (const std::string& l : labels) label_width = std::max(label_width, l.size());

  std::vector<std::size_t> column_width(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) {
    std::size_t w = std::to_string(n).size();
    for (const auto& row : rows)
      w = std::max(w, to_string(row[static_cast<std::size_t>(n)]).size());
    if (which == "C")
      w = std::max(w, to_string(catalan_row[static_cast<std::size_t>(n)]).size());
    column_width[static_cast<std::size_t>(n)] = w;
  }

  auto emit_row = [&](const std::string& label, auto&& cell_text) {
    std::cout << label << std::string(label_width - label.size(), ' ');
    for (int n = 0; n <= nmax; ++n) {
      std::string cell = cell_text(n);
      std::cout << "  " << std::string(column_width[static_cast<std::size_t>(n)] - cell.size(), ' ')
                << cell;
    }
    std::cout << "\n";
  };
  emit_row("n", [](int n) { return std::to_string(n); });
  for (int k = 1; k <= kmax; ++k)
    emit_row(row_label(which, k), [&](int n) {
      return to_string(rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)]);
    });
  if (which == "C")
    emit_row("C_n", [&](int n) { return to_string(catalan_row[static_cast<std::size_t>(n)]); });
  return 0;
}

// ---------------------------------------------------------------------------
// count

Int count_by_oracle(const std::string& which, int k, int n) {
  const int bound = oracle_bound(12);
  if (which == "C") {
    if (n > bound)
      throw std::invalid_argument("oracle method: n = " + std::to_string(n) +
                                  " exceeds the exhaustive bound " + std::to_string(bound));
    std::set<modcat::OmegaVector> distinct;
    modcat::for_each_binary_tree(
        n, [&](const modcat::BinaryTree& t) { distinct.insert(modcat::eval_omega(t, k)); });
    return Int(distinct.size());
  }
  if (which == "M") {
    if (n > bound)
      throw std::invalid_argument("oracle method: n = " + std::to_string(n) +
                                  " exceeds the exhaustive bound " + std::to_string(bound));
    Int count = 0;
    modcat::for_each_plane_tree(n, [&](const MultiDegree& d) {
      for (int v : d)
        if (v > k) return;
      ++count;
    });
    return count;
  }
  return n == 0 ? Int(1) : modcat::d_intersections_brute(k, n, bound);
}

int run_count(const std::string& which, int k, int n, const std::string& method) {
  Int value;
  if (method == "oracle") {
    value = count_by_oracle(which, k, n);
  } else if (method == "series") {
    int order = n + 1;
    if (which == "C")
      value = modcat::series_c(k, order).coeff(n + 1);
    else if (which == "M")
      value = modcat::series_m(k, order).coeff(n + 1);
    else
      value = modcat::series_d(k, order).coeff(n + 1);
  } else if (method == "msf") {
    if (which == "C")
      value = modcat::c_modular_msf(k, n);
    else if (which == "M")
      value = modcat::m_general_msf(k, n);
    else
      throw std::invalid_argument("method msf does not apply to D");
  } else {  // alt
    if (which == "C")
      value = modcat::c_modular_alt(k, n);
    else if (which == "M")
      value = modcat::m_general_alt(k, n);
    else
      value = n == 0 ? Int(1) : modcat::d_intersections(k, n);
  }
  std::cout << value << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// canon

MultiDegree parse_tree_input(const std::string& text, const std::string& from) {
  if (from == "tree") return modcat::binary_to_plane(modcat::parse_tree(text));
  std::vector<int> seq = modcat::parse_sequence(text);
  if (from == "depths") return modcat::binary_to_plane(modcat::from_left_depth(seq));
  modcat::require_multi_degree(seq, "canon");
  return seq;
}

int run_canon(const std::string& text, const std::string& from, int k,
              const std::string& format, bool with_members) {
  MultiDegree d = parse_tree_input(text, from);
  MultiDegree canonical = modcat::canonicalize(d, k);
  Int size = modcat::k_class_size(canonical, k);
  std::string tree_form = modcat::format_tree(modcat::plane_to_binary(canonical));

  std::vector<MultiDegree> members;
  if (with_members) {
    modcat::for_each_plane_tree(static_cast<int>(d.size()) - 1, [&](const MultiDegree& m) {
      if (modcat::canonicalize(m, k) == canonical) members.push_back(m);
    });
  }

  if (format == "json") {
    json out;
    out["schema"] = "modcat/1";
    out["k"] = k;
    out["canonical"] = modcat::format_sequence(canonical);
    out["tree"] = tree_form;
    out["size"] = to_string(size);
    if (with_members) {
      out["members"] = json::array();
      for (const MultiDegree& m : members) out["members"].push_back(modcat::format_sequence(m));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "canonical: " << modcat::format_sequence(canonical) << "\n"
            << "tree: " << tree_form << "\n"
            << "size: " << size << "\n";
  if (with_members)
    for (const MultiDegree& m : members)
      std::cout << "member: " << modcat::format_sequence(m) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// convert

MultiDegree convert_parse(const std::string& from, const std::string& value) {
  if (from == "tree") return modcat::binary_to_plane(modcat::parse_tree(value));
  if (from == "depths")
    return modcat::binary_to_plane(modcat::from_left_depth(modcat::parse_sequence(value)));
  if (from == "degrees") {
    std::vector<int> seq = modcat::parse_sequence(value);
    modcat::require_multi_degree(seq, "convert");
    return seq;
  }
  if (from == "dyck") return modcat::dyck_to_plane(modcat::parse_dyck(value));
  if (from == "partition") {
    std::vector<int> lambda = modcat::parse_sequence(value);
    return modcat::dyck_to_plane(
        modcat::partition_to_dyck(lambda, static_cast<int>(lambda.size())));
  }
  if (from == "syt")
    return modcat::dyck_to_plane(modcat::syt_to_dyck(modcat::parse_syt(value)));
  if (from == "perm")
    return modcat::binary_to_plane(modcat::tr(modcat::parse_perm(value)));
  throw std::invalid_argument("unknown format '" + from + "'");
}

std::string convert_render(const std::string& to, const MultiDegree& d) {
  if (to == "tree") return modcat::format_tree(modcat::plane_to_binary(d));
  if (to == "depths") return modcat::format_sequence(modcat::left_depth_from_multi_degree(d));
  if (to == "degrees") return modcat::format_sequence(d);
  if (to == "dyck") return modcat::plane_to_dyck(d).steps;
  if (to == "partition")
    return modcat::format_sequence(modcat::dyck_to_partition(modcat::plane_to_dyck(d)));
  if (to == "syt") return modcat::format_syt(modcat::dyck_to_syt(modcat::plane_to_dyck(d)));
  if (to == "perm") return modcat::format_perm(modcat::tr_inverse(modcat::plane_to_binary(d)));
  throw std::invalid_argument("unknown format '" + to + "'");
}

int run_convert(const std::string& from, const std::string& to, const std::string& value) {
  std::cout << convert_render(to, convert_parse(from, value)) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyReport {
  int failures = 0;

  void line(bool ok, const std::string& text) {
    if (!ok) ++failures;
    std::cout << (ok ? "ok" : "FAIL") << ": " << text << "\n";
  }
};

void verify_table1(VerifyReport& report) {
  int matches = 0;
  const int cells = 9 * (modcat::kReferenceNMax + 1);
  for (int k = 1; k <= modcat::kReferenceKMax; ++k)
    for (int n = 0; n <= modcat::kReferenceNMax; ++n) {
      Int expected = modcat::kReferenceTable[k - 1][n];
      if (modcat::c_modular_alt(k, n) == expected && modcat::c_modular_msf(k, n) == expected)
        ++matches;
      else
        report.line(false, "table1 cell k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  for (int n = 0; n <= modcat::kReferenceNMax; ++n) {
    if (modcat::catalan(n) == modcat::kReferenceTable[8][n])
      ++matches;
    else
      report.line(false, "table1 catalan cell n=" + std::to_string(n));
  }
  report.line(matches == cells,
              "table1: " + std::to_string(matches) + "/" + std::to_string(cells) +
                  " cells match");
}

void verify_formulas(VerifyReport& report) {
  bool equal = true;
  for (int k = 1; k <= 8 && equal; ++k)
    for (int n = 0; n <= 30 && equal; ++n)
      equal = modcat::c_modular_msf(k, n) == modcat::c_modular_alt(k, n) &&
              modcat::m_general_msf(k, n) == modcat::m_general_alt(k, n);
  report.line(equal, "formulas: positive and alternating sums agree (k <= 8, n <= 30)");

  bool series_ok = true;
  for (int k = 1; k <= 8 && series_ok; ++k) {
    modcat::TruncatedSeries c = modcat::series_c(k, 30);
    modcat::TruncatedSeries m = modcat::series_m(k, 30);
    for (int n = 0; n <= 29 && series_ok; ++n)
      series_ok = c.coeff(n + 1) == modcat::c_modular_alt(k, n) &&
                  m.coeff(n + 1) == modcat::m_general_alt(k, n);
  }
  report.line(series_ok, "formulas: series coefficients match to order 30");

  bool residual_ok = true;
  for (int k = 1; k <= 6 && residual_ok; ++k) {
    modcat::TruncatedSeries c = modcat::series_c(k, 30);
    modcat::TruncatedSeries z = modcat::TruncatedSeries::z(30);
    residual_ok =
        (((c - z).pow(k) - c.pow(k) + c.pow(k - 1)) * c.pow(2) - z * c.pow(k)).is_zero();
  }
  report.line(residual_ok, "formulas: algebraic series relation holds to order 30 (k <= 6)");
}

void verify_bijections(VerifyReport& report) {
  bool round_trips = true;
  for (int n = 0; n <= 7 && round_trips; ++n) {
    modcat::for_each_plane_tree(n, [&](const MultiDegree& d) {
      modcat::BinaryTree t = modcat::plane_to_binary(d);
      if (modcat::binary_to_plane(t) != d) round_trips = false;
      modcat::DyckPath p = modcat::plane_to_dyck(d);
      if (modcat::dyck_to_plane(p) != d) round_trips = false;
      if (modcat::partition_to_dyck(modcat::dyck_to_partition(p), n) != p) round_trips = false;
      if (modcat::syt_to_dyck(modcat::dyck_to_syt(p)) != p) round_trips = false;
      if (modcat::tr(modcat::tr_inverse(t)) != t) round_trips = false;
      if (modcat::from_left_depth(modcat::left_depth(t)) != t) round_trips = false;
    });
  }
  report.line(round_trips, "bijections: all round trips hold (n <= 7)");

  bool families_ok = true;
  for (int n = 0; n <= 6 && families_ok; ++n)
    for (int k = 1; k <= 3 && families_ok; ++k) {
      for (const std::string& id : modcat::motzkin_family_ids())
        families_ok =
            families_ok && modcat::count_family(id, k, n) == modcat::m_general_alt(k - 1, n);
      for (const std::string& id : modcat::catalan_family_ids())
        families_ok =
            families_ok && modcat::count_family(id, k, n) == modcat::c_modular_alt(k, n);
    }
  report.line(families_ok, "bijections: family counts match (n <= 6, k <= 3)");
}

void verify_oracle(VerifyReport& report) {
  const int bound = std::min(oracle_bound(9), 6);
  bool ok = true;
  for (int n = 0; n <= bound && ok; ++n) {
    for (int k = 1; k <= 4 && ok; ++k) {
      std::map<modcat::OmegaVector, std::set<MultiDegree>> omega_groups;
      modcat::for_each_binary_tree(n, [&](const modcat::BinaryTree& t) {
        omega_groups[modcat::eval_omega(t, k)].insert(modcat::binary_to_plane(t));
      });
      std::set<std::set<MultiDegree>> omega_partition;
      for (auto& [v, members] : omega_groups) omega_partition.insert(members);

      std::set<std::set<MultiDegree>> closure_partition;
      for (const auto& component : modcat::classes_by_rewrite_closure(n, k, bound)) {
        std::set<MultiDegree> members;
        for (const modcat::BinaryTree& t : component) members.insert(modcat::binary_to_plane(t));
        closure_partition.insert(members);
      }

      std::set<std::set<MultiDegree>> canonical_partition;
      for (const modcat::KComponent& c : modcat::k_components(n, k, true))
        canonical_partition.insert(std::set<MultiDegree>(c.members.begin(), c.members.end()));

      ok = omega_partition == closure_partition && omega_partition == canonical_partition &&
           Int(omega_partition.size()) == modcat::c_modular_alt(k, n);
    }
  }
  report.line(ok, "oracle: ring evaluation, rewrite closure, and canonical forms give the same "
                  "partitions (n <= " +
                      std::to_string(bound) + ", k <= 4)");
}

int run_verify(const std::string& suite) {
  VerifyReport report;
  if (suite == "table1" || suite == "all") verify_table1(report);
  if (suite == "formulas" || suite == "all") verify_formulas(report);
  if (suite == "bijections" || suite == "all") verify_bijections(report);
  if (suite == "oracle" || suite == "all") verify_oracle(report);
  if (report.failures == 0) {
    std::cout << "verify " << suite << ": all checks passed\n";
    return 0;
  }
  std::cout << "verify " << suite << ": " << report.failures << " check(s) failed\n";
  return kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of k-associative parenthesization classes"};
  app.require_subcommand(1);

  // table
  std::string table_which = "C", table_format = "text";
  int kmax = 8, nmax = 14;
  CLI::App* table = app.add_subcommand("table", "print a count table");
  table->add_option("--which", table_which, "C, M, D, or largest")
      ->check(CLI::IsMember({"C", "M", "D", "largest"}));
  table->add_option("--kmax", kmax, "largest modulus row")->check(CLI::Range(1, 64));
  table->add_option("--nmax", nmax, "largest column")->check(CLI::Range(0, 128));
  table->add_option("--format", table_format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // count
  std::string count_which = "C", count_method = "alt";
  int count_k = 0, count_n = 0;
  CLI::App* count = app.add_subcommand("count", "print one count");
  count->add_option("--which", count_which, "C, M, or D")
      ->check(CLI::IsMember({"C", "M", "D"}));
  count->add_option("-k,--modulus", count_k, "modulus k")->required()->check(CLI::Range(0, 64));
  count->add_option("-n,--size", count_n, "problem size n")
      ->required()
      ->check(CLI::Range(0, 100000));
  count->add_option("--method", count_method, "msf, alt, series, or oracle")
      ->check(CLI::IsMember({"msf", "alt", "series", "oracle"}));

  // canon
  std::string canon_tree, canon_from = "tree", canon_format = "text";
  int canon_k = 0;
  bool canon_members = false;
  CLI::App* canon = app.add_subcommand("canon", "canonical class representative of a tree");
  canon->add_option("--tree", canon_tree, "the tree, in the --from format")->required();
  canon->add_option("--from", canon_from, "tree, degrees, or depths")
      ->check(CLI::IsMember({"tree", "degrees", "depths"}));
  canon->add_option("-k,--modulus", canon_k, "modulus k")->required()->check(CLI::Range(1, 64));
  canon->add_option("--format", canon_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  canon->add_flag("--members", canon_members, "list every member of the class");

  // convert
  std::string convert_from, convert_to, convert_value;
  CLI::App* convert = app.add_subcommand("convert", "convert between object families");
  const std::vector<std::string> formats = {"tree",      "depths", "degrees", "dyck",
                                            "partition", "syt",    "perm"};
  convert->add_option("--from", convert_from, "source format")
      ->required()
      ->check(CLI::IsMember(formats));
  convert->add_option("--to", convert_to, "target format")
      ->required()
      ->check(CLI::IsMember(formats));
  convert->add_option("value", convert_value, "the object to convert")->required();

  // verify
  std::string verify_suite;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_suite, "table1, formulas, bijections, oracle, or all")
      ->required()
      ->check(CLI::IsMember({"table1", "formulas", "bijections", "oracle", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (table->parsed()) return run_table(table_which, kmax, nmax, table_format);
    if (count->parsed()) return run_count(count_which, count_k, count_n, count_method);
    if (canon->parsed())
      return run_canon(canon_tree, canon_from, canon_k, canon_format, canon_members);
    if (convert->parsed()) return run_convert(convert_from, convert_to, convert_value);
    if (verify->parsed()) return run_verify(verify_suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
