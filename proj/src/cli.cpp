#include "permsing/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <variant>

#include "permsing/classifier.hpp"
#include "permsing/error.hpp"
#include "permsing/oracle.hpp"
#include "permsing/report_io.hpp"
#include "permsing/strata.hpp"

namespace permsing::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw InvalidInput("unknown format '" + s + "'");
}

// Raw option values as CLI11 fills them; validated into a request below.
struct RawOptions {
  int n = 0;
  int d = 0;
  int p = -1;
  int max_n = 0;
  int max_d = 0;
  std::int64_t q = 0;
  int jump = 0;
  std::vector<std::int64_t> qs;
  std::string group;
  std::string group_name;
  std::string format;
  bool csv = false;
  bool no_transposition = false;
};

struct ClassifyRequest {
  PermutationGroup group;
  Characteristic p;
  Format format;
};
struct DimRequest {
  int n, d;
  Characteristic p;
  Format format;
};
struct StrataRequest {
  int n, d;
  std::optional<Characteristic> p;
  bool transposition_free;
  Format format;
};
struct SupRequest {
  int n;
  Characteristic p;
  bool transposition_free;
  Format format;
};
struct TableRequest {
  int max_n, max_d;
  Characteristic p;
  Format format;
};
struct AsCountRequest {
  int p;
  std::int64_t q;
  int jump;
  Format format;
};
struct VerifyRequest {
  int p, n, d;
  std::vector<std::int64_t> qs;
  Format format;
};
struct TameRequest {
  std::int64_t q;
  int n;
  Format format;
};

using CliRequest = std::variant<ClassifyRequest, DimRequest, StrataRequest, SupRequest, TableRequest, AsCountRequest,
                                VerifyRequest, TameRequest>;

void require_positive(int v, const char* name) {
  if (v < 1) throw InvalidInput(std::string("--") + name + " must be positive");
}
void require_non_negative(int v, const char* name) {
  if (v < 0) throw InvalidInput(std::string("--") + name + " must be non-negative");
}

Format format_or(const RawOptions& o, Format fallback) { return o.format.empty() ? fallback : parse_format(o.format); }

// Table sizes beyond these are refused rather than left to run.
constexpr int kMaxTableDegree = 64;
constexpr int kMaxTableDiscriminant = 1000;
constexpr int kMaxPartitionDegree = 40;

std::string row_csv(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

void emit_rows(std::ostream& out, Format format, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  if (format == Format::Csv) {
    out << row_csv(header) << "\n";
    for (const auto& r : rows) out << row_csv(r) << "\n";
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << cells[c];
      if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string delta_string(const std::vector<int>& delta) { return partition_to_string(delta); }

void execute(const ClassifyRequest& req, std::ostream& out) {
  auto report = classify(req.group, req.p);
  if (req.format == Format::Json) {
    out << to_json(report).dump(2) << "\n";
  } else if (req.format == Format::Text) {
    out << report_to_text(report);
  } else {
    throw InvalidInput("classify supports text or json output");
  }
}

void execute(const DimRequest& req, std::ostream& out) {
  auto dim = dim_connected(req.n, req.d, req.p);
  if (req.format == Format::Json) {
    out << json{{"n", req.n}, {"d", req.d}, {"p", req.p.value()}, {"dim", to_json(dim)}}.dump(2) << "\n";
  } else {
    out << dim.to_string() << "\n";
  }
}

void execute(const StrataRequest& req, std::ostream& out) {
  auto strata = enumerate_strata(req.n, req.d);
  if (req.format == Format::Json) {
    json arr = json::array();
    for (const auto& s : strata) {
      json row{{"nu", s.nu}, {"delta", s.delta}};
      if (req.p) {
        row["dim_sum"] = to_json(stratum_dim_sum(s, *req.p));
        row["bound"] = to_json(refined_stratum_value(s, *req.p, req.transposition_free));
      }
      arr.push_back(row);
    }
    json doc{{"n", req.n}, {"d", req.d}, {"transposition_free", req.transposition_free}, {"strata", arr}};
    doc["p"] = req.p ? json(req.p->value()) : json(nullptr);
    out << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::string> header{"nu", "delta"};
  if (req.p) {
    header.push_back("dim_sum");
    header.push_back("bound");
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : strata) {
    std::vector<std::string> row{partition_to_string(s.nu), delta_string(s.delta)};
    if (req.p) {
      row.push_back(stratum_dim_sum(s, *req.p).to_string());
      row.push_back(refined_stratum_value(s, *req.p, req.transposition_free).to_string());
    }
    rows.push_back(row);
  }
  emit_rows(out, req.format, header, rows);
}

void execute(const SupRequest& req, std::ostream& out) {
  auto gs = global_sup(req.n, req.p, req.transposition_free);
  if (req.format == Format::Json) {
    json parts = json::array();
    for (const auto& [nu, bound] : gs.per_partition)
      parts.push_back({{"nu", nu},
                       {"bound", to_json(bound.value)},
                       {"rule", to_string(bound.rule)},
                       {"eventually_decreasing", bound.eventually_decreasing}});
    out << json{{"n", req.n},
                {"p", req.p.value()},
                {"transposition_free", req.transposition_free},
                {"sup", to_json(gs.sup)},
                {"limit_minus_infinity", gs.limit_minus_infinity},
                {"worst", gs.worst},
                {"partitions", parts}}
               .dump(2)
        << "\n";
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [nu, bound] : gs.per_partition)
    rows.push_back({partition_to_string(nu), bound.value.to_string(), to_string(bound.rule),
                    bound.eventually_decreasing ? "true" : "false"});
  if (req.format == Format::Text) {
    out << "sup: " << gs.sup.to_string() << "\n"
        << "limit_minus_infinity: " << (gs.limit_minus_infinity ? "true" : "false") << "\n"
        << "worst: " << (gs.worst.empty() ? std::string("none") : partition_to_string(gs.worst)) << "\n";
  }
  emit_rows(out, req.format, {"nu", "bound", "rule", "eventually_decreasing"}, rows);
}

void execute(const TableRequest& req, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  json arr = json::array();
  for (int n = 1; n <= req.max_n; ++n) {
    for (int d = 0; d <= req.max_d; ++d) {
      auto dim = dim_connected(n, d, req.p);
      auto excess = dim - ExtHalf::from_halves(d);
      rows.push_back({std::to_string(n), std::to_string(d), std::to_string(req.p.value()), dim.to_string(), excess.to_string()});
      arr.push_back({{"n", n}, {"d", d}, {"p", req.p.value()}, {"dim", to_json(dim)}, {"dim_minus_half_d", to_json(excess)}});
    }
  }
  if (req.format == Format::Json) {
    out << arr.dump(2) << "\n";
    return;
  }
  emit_rows(out, req.format, {"n", "d", "p", "dim", "dim_minus_half_d"}, rows);
}

void execute(const AsCountRequest& req, std::ostream& out) {
  auto count = as_class_count(req.p, req.q, req.jump);
  if (req.format == Format::Json) {
    out << json{{"p", req.p}, {"q", req.q}, {"jump", req.jump}, {"count", count}}.dump(2) << "\n";
  } else if (req.format == Format::Csv) {
    out << "p,q,jump,count\n" << req.p << "," << req.q << "," << req.jump << "," << count << "\n";
  } else {
    out << count << "\n";
  }
}

void execute(const VerifyRequest& req, std::ostream& out) {
  auto check = verify_dimension_growth(req.p, req.n, req.d, req.qs);
  auto measured = [](const GrowthRow& r) {
    return r.measured_dimension ? r.measured_dimension->to_string() : std::string("none");
  };
  if (req.format == Format::Json) {
    json rows = json::array();
    for (const auto& r : check.rows)
      rows.push_back({{"q", r.q},
                      {"count", r.count},
                      {"expected", r.expected},
                      {"measured_dimension", r.measured_dimension ? to_json(*r.measured_dimension) : json(nullptr)}});
    out << json{{"p", req.p}, {"n", req.n}, {"d", req.d}, {"jump", check.jump}, {"predicted", to_json(check.predicted)},
                {"rows", rows}, {"ok", check.ok}}
               .dump(2)
        << "\n";
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : check.rows)
    rows.push_back({std::to_string(r.q), std::to_string(r.count), std::to_string(r.expected), measured(r)});
  if (req.format == Format::Text)
    out << "predicted: " << check.predicted.to_string() << "\njump: " << check.jump << "\nok: " << (check.ok ? "true" : "false")
        << "\n";
  emit_rows(out, req.format, {"q", "count", "expected", "measured_dimension"}, rows);
}

void execute(const TameRequest& req, std::ostream& out) {
  auto count = tame_totally_ramified_count(req.q, req.n);
  if (req.format == Format::Json) {
    out << json{{"q", req.q}, {"n", req.n}, {"count", count}}.dump(2) << "\n";
  } else if (req.format == Format::Csv) {
    out << "q,n,count\n" << req.q << "," << req.n << "," << count << "\n";
  } else {
    out << count << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for quotient singularities of permutation actions"};
  app.require_subcommand(1);
  RawOptions o;
  const std::string formats = "Output format: text, json or csv";

  auto* classify_cmd = app.add_subcommand("classify", "Classify A^n/G in characteristic p");
  classify_cmd->add_option("--n", o.n, "Degree")->required();
  classify_cmd->add_option("--p", o.p, "Characteristic (0 or prime)")->required();
  auto* group_opt = classify_cmd->add_option("--group", o.group, "Generators in cycle notation, ';'-separated");
  auto* name_opt = classify_cmd->add_option("--group-name", o.group_name, "Sn, An, cyclic:k, klein4 or trivial");
  group_opt->excludes(name_opt);
  classify_cmd->add_option("--format", o.format, formats);

  auto* dim_cmd = app.add_subcommand("dim", "Dimension of the connected locus of degree n, discriminant d");
  dim_cmd->add_option("--n", o.n)->required();
  dim_cmd->add_option("--d", o.d)->required();
  dim_cmd->add_option("--p", o.p)->required();
  dim_cmd->add_option("--format", o.format, formats);

  auto* strata_cmd = app.add_subcommand("strata", "List strata (nu, delta)");
  strata_cmd->add_option("--n", o.n)->required();
  strata_cmd->add_option("--d", o.d)->required();
  strata_cmd->add_option("--p", o.p);
  strata_cmd->add_flag("--no-transposition", o.no_transposition);
  strata_cmd->add_option("--format", o.format, formats);

  auto* sup_cmd = app.add_subcommand("sup", "Supremum of dim - d/2 over nontrivial strata");
  sup_cmd->add_option("--n", o.n)->required();
  sup_cmd->add_option("--p", o.p)->required();
  sup_cmd->add_flag("--no-transposition", o.no_transposition);
  sup_cmd->add_option("--format", o.format, formats);

  auto* table_cmd = app.add_subcommand("table", "Table of dim and dim - d/2");
  table_cmd->add_option("--max-n", o.max_n)->required();
  table_cmd->add_option("--max-d", o.max_d)->required();
  table_cmd->add_option("--p", o.p)->required();
  table_cmd->add_flag("--csv", o.csv);
  table_cmd->add_option("--format", o.format, formats);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force finite field checks");
  oracle_cmd->require_subcommand(1);
  auto* as_cmd = oracle_cmd->add_subcommand("as-count", "Artin-Schreier classes with a given jump");
  as_cmd->add_option("--p", o.p)->required();
  as_cmd->add_option("--q", o.q)->required();
  as_cmd->add_option("--jump", o.jump)->required();
  as_cmd->add_option("--format", o.format, formats);
  auto* verify_cmd = oracle_cmd->add_subcommand("verify", "Compare class counts against predicted dimension");
  verify_cmd->add_option("--p", o.p)->required();
  verify_cmd->add_option("--n", o.n)->required();
  verify_cmd->add_option("--d", o.d)->required();
  verify_cmd->add_option("--q", o.qs)->required()->delimiter(',');
  verify_cmd->add_option("--format", o.format, formats);
  auto* tame_cmd = oracle_cmd->add_subcommand("tame", "Count tame totally ramified extensions");
  tame_cmd->add_option("--q", o.q)->required();
  tame_cmd->add_option("--n", o.n)->required();
  tame_cmd->add_option("--format", o.format, formats);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::optional<CliRequest> request;
  try {
    if (classify_cmd->parsed()) {
      require_positive(o.n, "n");
      auto p = Characteristic::of(o.p);
      if ((group_opt->count() > 0) == (name_opt->count() > 0))
        throw InvalidInput("classify needs exactly one of --group or --group-name");
      PermutationGroup group = group_opt->count() > 0 ? group_closure(parse_generators(o.group, o.n), o.n)
                                                      : named_group(o.group_name, o.n);
      request = ClassifyRequest{std::move(group), p, format_or(o, Format::Json)};
    } else if (dim_cmd->parsed()) {
      require_positive(o.n, "n");
      require_non_negative(o.d, "d");
      request = DimRequest{o.n, o.d, Characteristic::of(o.p), format_or(o, Format::Text)};
    } else if (strata_cmd->parsed()) {
      require_positive(o.n, "n");
      require_non_negative(o.d, "d");
      if (o.n > kMaxPartitionDegree) throw InvalidInput("--n is limited to 40");
      std::optional<Characteristic> p;
      if (o.p != -1) p = Characteristic::of(o.p);
      request = StrataRequest{o.n, o.d, p, o.no_transposition, format_or(o, Format::Text)};
    } else if (sup_cmd->parsed()) {
      require_positive(o.n, "n");
      if (o.n > kMaxPartitionDegree) throw InvalidInput("--n is limited to 40");
      request = SupRequest{o.n, Characteristic::of(o.p), o.no_transposition, format_or(o, Format::Text)};
    } else if (table_cmd->parsed()) {
      require_positive(o.max_n, "max-n");
      require_non_negative(o.max_d, "max-d");
      if (o.max_n > kMaxTableDegree || o.max_d > kMaxTableDiscriminant) throw InvalidInput("table size too large");
      Format f = o.csv ? Format::Csv : format_or(o, Format::Text);
      request = TableRequest{o.max_n, o.max_d, Characteristic::of(o.p), f};
    } else if (as_cmd->parsed()) {
      request = AsCountRequest{o.p, o.q, o.jump, format_or(o, Format::Text)};
    } else if (verify_cmd->parsed()) {
      request = VerifyRequest{o.p, o.n, o.d, o.qs, format_or(o, Format::Text)};
    } else if (tame_cmd->parsed()) {
      request = TameRequest{o.q, o.n, format_or(o, Format::Text)};
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::visit([&](const auto& req) { execute(req, out); }, *request);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace permsing::cli
