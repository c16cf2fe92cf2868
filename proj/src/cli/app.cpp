#include "semi/cli/app.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "semi/cli/document.hpp"
#include "semi/cli/table_io.hpp"
#include "semi/enumerate.hpp"
#include "semi/factor.hpp"
#include "semi/theorems.hpp"

namespace semi::cli {

namespace {

// Raised for bad option values that CLI11 cannot see (index out of range,
// malformed --set).
class UsageError : public Error {
 public:
  using Error::Error;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe_witness(const CayleyTable& t, const AssocWitness& w) {
  std::ostringstream s;
  s << "(" << w.i << "*" << w.j << ")*" << w.k << " = " << t(t(w.i, w.j), w.k)
    << " but " << w.i << "*(" << w.j << "*" << w.k << ") = " << t(w.i, t(w.j, w.k));
  return s.str();
}

// Prints the witness and returns false for a non-associative table.
bool report_associativity(const CayleyTable& t, std::ostream& out) {
  if (t.is_semigroup()) return true;
  out << "not associative: " << describe_witness(t, *t.witness()) << "\n";
  return false;
}

Element parse_index(long long value, std::size_t n, const char* what) {
  if (value < 0 || static_cast<std::size_t>(value) >= n) {
    throw UsageError(std::string(what) + " " + std::to_string(value) +
                     " is outside [0, " + std::to_string(n) + ")");
  }
  return static_cast<Element>(value);
}

// "0,2,3" or "0 2 3", braces optional.
ElementSet parse_set(const std::string& text, std::size_t n) {
  std::string cleaned;
  for (char c : text) {
    cleaned += (c == ',' || c == '{' || c == '}') ? ' ' : c;
  }
  std::istringstream in(cleaned);
  ElementSet s(n);
  std::string token;
  while (in >> token) {
    long long v = 0;
    std::size_t used = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw UsageError("malformed set member '" + token + "'");
    s.insert(parse_index(v, n, "set member"));
  }
  if (s.empty()) throw UsageError("--set must name at least one element");
  return s;
}

void print_factorization(const Factorization& f, std::ostream& out) {
  const char* left = "T_L";
  const char* right = "T_R";
  if (f.kind == FactorizationKind::RightGroup) {
    left = "H'";
    right = "RZ'";
  } else if (f.kind == FactorizationKind::LeftGroup) {
    left = "LZ'";
    right = "H'";
  }
  out << "T = " << f.product.to_string() << "  " << left << " = " << f.left.to_string()
      << "  " << right << " = " << f.right.to_string() << "\n";
}

void print_partition(const char* name, const Partition& p, std::ostream& out) {
  out << name << " classes:";
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    out << " " << p.classes[c].to_string();
    if (p.non_idempotent_class == c) out << " (non-idempotent)";
  }
  out << "\n";
}

void print_analysis(const CayleyTable& t, const AnalysisDocument& doc,
                    std::ostream& out) {
  out << "order: " << doc.order << "\n";
  out << "digest: " << doc.digest << "\n";
  out << "associative: " << yes_no(t.is_semigroup()) << "\n";
  if (!report_associativity(t, out)) {
    out << "idempotents: " << doc.idempotents.to_string() << "\n";
    return;
  }
  const auto& p = *doc.predicates;
  out << "band: " << yes_no(p.band) << "\n";
  out << "left zero: " << yes_no(p.left_zero) << "\n";
  out << "right zero: " << yes_no(p.right_zero) << "\n";
  out << "rectangular band: " << yes_no(p.rectangular_band) << "\n";
  out << "right group: " << yes_no(p.right_group) << "\n";
  out << "left group: " << yes_no(p.left_group) << "\n";
  out << "idempotents: " << doc.idempotents.to_string() << "\n";
  for (const auto& prof : doc.profiles) {
    const auto e = std::to_string(prof.e);
    out << "\n";
    out << "LZ(" << e << ") = " << prof.lz.to_string() << "\n";
    out << "RZ(" << e << ") = " << prof.rz.to_string() << "\n";
    out << e << "S" << e << " = " << prof.local_monoid.to_string() << "\n";
    out << "S" << e << " = " << prof.left_monoid.to_string() << "\n";
    out << e << "S = " << prof.right_monoid.to_string() << "\n";
    out << "lidentity(" << e << ") & ridentity(" << e
        << ") = " << prof.zero_maximal.to_string() << "\n";
    out << "H(" << e << ") = " << prof.h.to_string() << "\n";
    out << "RG(" << e << ") = " << prof.rg.to_string() << "\n";
    out << "LG(" << e << ") = " << prof.lg.to_string() << "\n";
  }
  out << "\n";
  print_partition("LZ", *doc.lz_partition, out);
  print_partition("RZ", *doc.rz_partition, out);
  if (doc.factorizations) {
    for (const auto& fs : *doc.factorizations) {
      const std::pair<const char*, const std::optional<std::vector<Factorization>>*>
          lists[] = {{"rect-band", &fs.rect_band},
                     {"right-group", &fs.right_group},
                     {"left-group", &fs.left_group}};
      for (const auto& [name, list] : lists) {
        out << "\n" << name << " factorizations through " << fs.e << ": ";
        if (!*list) {
          out << "skipped (budget)\n";
          continue;
        }
        out << (*list)->size() << "\n";
        for (const auto& f : **list) print_factorization(f, out);
      }
    }
  }
}

void print_violations(const std::vector<Violation>& violations, bool with_table,
                      std::ostream& out) {
  for (const auto& v : violations) {
    out << v.theorem << ": ";
    if (with_table) out << v.table << ": ";
    out << v.witness << "\n";
  }
  out << violations.size() << (violations.size() == 1 ? " violation\n" : " violations\n");
}

struct Options {
  std::string file;
  bool json = false;
  bool factorizations = false;
  long long e = -1;
  std::string kind = "rect";
  bool enumerate = false;
  std::string set;
  std::size_t order = 0;
  bool count_only = false;
  bool check_theorems = false;
  unsigned jobs = 1;
  bool allow_long = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const auto t = parse_table_file(o.file);
  if (!report_associativity(t, out)) return kExitDomain;
  out << "associative (order " << t.order() << ")\n";
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto t = parse_table_file(o.file);
  const auto doc = analyze(t, o.factorizations);
  if (o.json) {
    out << dump(doc);
  } else {
    print_analysis(t, doc, out);
  }
  return t.is_semigroup() ? kExitOk : kExitDomain;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  const auto t = parse_table_file(o.file);
  const auto e = parse_index(o.e, t.order(), "--e");
  if (!report_associativity(t, out)) return kExitDomain;

  FactorizationKind kind = FactorizationKind::RectBand;
  if (o.kind == "right-group") kind = FactorizationKind::RightGroup;
  if (o.kind == "left-group") kind = FactorizationKind::LeftGroup;

  if (o.enumerate) {
    std::vector<Factorization> list;
    switch (kind) {
      case FactorizationKind::RectBand:
        list = enumerate_rect_bands(t, e);
        break;
      case FactorizationKind::RightGroup:
        list = enumerate_right_subgroups(t, e);
        break;
      case FactorizationKind::LeftGroup:
        list = enumerate_left_subgroups(t, e);
        break;
    }
    out << kind_name(kind) << " factorizations through " << e << ": " << list.size()
        << "\n";
    for (const auto& f : list) print_factorization(f, out);
    return kExitOk;
  }

  ElementSet subset;
  if (!o.set.empty()) {
    subset = parse_set(o.set, t.order());
  } else if (kind == FactorizationKind::RightGroup) {
    subset = max_right_subgroup(t, e);
  } else if (kind == FactorizationKind::LeftGroup) {
    subset = max_left_subgroup(t, e);
  } else {
    throw UsageError("--kind rect needs --set or --enumerate");
  }
  Factorization f;
  switch (kind) {
    case FactorizationKind::RectBand:
      f = rect_band_factorize(t, subset, e);
      break;
    case FactorizationKind::RightGroup:
      f = right_group_factorize(t, subset, e);
      break;
    case FactorizationKind::LeftGroup:
      f = left_group_factorize(t, subset, e);
      break;
  }
  print_factorization(f, out);
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.order == 0 || o.order > kMaxEnumerationOrder) {
    throw UsageError("--order must be in [1, " +
                     std::to_string(kMaxEnumerationOrder) + "]");
  }
  if (o.order == kMaxEnumerationOrder && !o.allow_long) {
    throw UsageError("order 5 visits 183732 tables; pass --allow-long to run it");
  }
  EnumerationOptions options;
  options.allow_long = o.allow_long;
  options.jobs = o.jobs;
  if (!o.count_only) {
    options.on_first_row = [&out](const FirstRowCount& c) {
      out << "first row";
      for (auto x : c.row) out << " " << x;
      out << ": " << c.count << "\n";
      out.flush();
    };
  }
  Visitor visitor;
  if (o.check_theorems) {
    visitor = [](const CayleyTable& t, std::vector<Violation>& v) {
      auto found = check_all_theorems(t);
      v.insert(v.end(), found.begin(), found.end());
    };
  }
  const auto report = enumerate_semigroups(o.order, visitor, options);
  if (o.count_only) {
    out << report.labeled_count << "\n";
  } else {
    out << "order " << report.order << ": " << report.labeled_count
        << " semigroups, " << report.tables_visited << " search nodes\n";
    err << "elapsed " << report.elapsed.count() << " s\n";
  }
  if (o.check_theorems) {
    print_violations(report.violations, true, out);
    if (!report.violations.empty()) return kExitDomain;
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto t = parse_table_file(o.file);
  if (!report_associativity(t, out)) return kExitDomain;
  const auto violations = check_all_theorems(t);
  print_violations(violations, false, out);
  return violations.empty() ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Idempotent-anchored structure of finite semigroups given by Cayley "
               "tables. Elements are 0-based."};
  app.name("semi");
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check associativity");
  validate->add_option("file", o.file, "Table file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Report idempotent structure");
  analyze_cmd->add_option("file", o.file, "Table file")->required();
  analyze_cmd->add_flag("--json", o.json, "Emit the analysis document as JSON");
  analyze_cmd->add_flag("--factorizations", o.factorizations,
                        "Include factorization enumerations");

  auto* factorize = app.add_subcommand("factorize", "Factor a subsemigroup through e");
  factorize->add_option("file", o.file, "Table file")->required();
  factorize->add_option("--e", o.e, "Idempotent anchor")->required();
  factorize->add_option("--kind", o.kind, "rect, right-group or left-group")
      ->check(CLI::IsMember({"rect", "right-group", "left-group"}));
  factorize->add_flag("--enumerate", o.enumerate, "List every factorization through e");
  factorize->add_option("--set", o.set, "Subsemigroup to factor, e.g. 0,1");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate labeled semigroups");
  enumerate->add_option("--order", o.order, "Order n")->required();
  enumerate->add_flag("--count-only", o.count_only, "Print only the count");
  enumerate->add_flag("--check-theorems", o.check_theorems,
                      "Check every claim on every table");
  enumerate->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::Range(1U, 256U));
  enumerate->add_flag("--allow-long", o.allow_long, "Permit order 5");

  auto* check = app.add_subcommand("check", "Check every claim on one table");
  check->add_option("file", o.file, "Table file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (factorize->parsed()) return cmd_factorize(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    return cmd_check(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace semi::cli
