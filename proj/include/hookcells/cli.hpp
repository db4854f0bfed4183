#pragma once

// Command-line surface: enumeration tables, kappa reports, decompositions,
// counting distributions, lattice diagrams, and oracle verification runs.
//
// Formats: tsv (default), json, markdown; lattice emits dot.  Exit codes:
// 0 success or agreement, 1 usage error, 2 verification disagreement,
// 3 budget exhausted.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookcells/cell_oracle.hpp"
#include "hookcells/components.hpp"
#include "hookcells/counting.hpp"
#include "hookcells/errors.hpp"
#include "hookcells/hilbert.hpp"
#include "hookcells/hook_code.hpp"
#include "hookcells/kappa.hpp"
#include "hookcells/partition.hpp"

namespace hookcells::cli {

enum class Format { tsv, json, markdown, dot };

inline Format parse_format(const std::string& name) {
  if (name == "tsv") return Format::tsv;
  if (name == "json") return Format::json;
  if (name == "markdown") return Format::markdown;
  if (name == "dot") return Format::dot;
  throw Error("unknown format '" + name + "'");
}

namespace detail {

using nlohmann::json;

inline std::string bool_text(bool value) { return value ? "true" : "false"; }

inline std::string dash_if_empty(std::string text) {
  return text.empty() ? "-" : text;
}

inline json partition_json(const Partition& P) {
  json j;
  j["parts"] = P.parts();
  j["text"] = format_partition(P);
  return j;
}

inline json hilbert_json(const HilbertFunction& T) {
  json j;
  j["values"] = T.values();
  j["text"] = format_hilbert(T);
  return j;
}

inline json code_json(const HookCode& code) {
  json blocks = json::array();
  for (const auto& b : code.blocks()) {
    json jb;
    jb["degree"] = b.degree;
    jb["parts"] = b.parts;
    blocks.push_back(std::move(jb));
  }
  json j;
  j["blocks"] = std::move(blocks);
  j["text"] = format_code(code);
  return j;
}

inline json profile_json(const GeneratorProfile& profile) {
  json j;
  j["start_degree"] = profile.start_degree;
  j["counts"] = profile.counts;
  return j;
}

// "13:4,14:2,15:0,16:1" style degree:count pairs.
inline std::string profile_text(const GeneratorProfile& profile) {
  std::ostringstream out;
  for (std::size_t k = 0; k < profile.counts.size(); ++k) {
    if (k > 0) out << ',';
    out << (profile.start_degree + static_cast<int>(k)) << ':'
        << profile.counts[k];
  }
  return out.str();
}

inline std::string monomials_text(const std::vector<Monomial>& monomials) {
  std::ostringstream out;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    if (k > 0) out << ' ';
    out << to_string(monomials[k]);
  }
  return dash_if_empty(out.str());
}

inline json monomials_json(const std::vector<Monomial>& monomials) {
  json j = json::array();
  for (const auto& m : monomials) j.push_back(to_string(m));
  return j;
}

// Per-block tau statistics in the code text layout: "4:0,-1;5:".
inline std::string tau_text(const HookCode& code, const HilbertFunction& T) {
  std::ostringstream out;
  bool first = true;
  for (const auto& block : code.blocks()) {
    if (!first) out << ';';
    first = false;
    out << block.degree << ':';
    if (block.parts.empty()) continue;
    const auto stats =
        hookcells::detail::block_stats_from(block, T.delta(block.degree));
    for (std::size_t k = 0; k < stats.tau.size(); ++k) {
      if (k > 0) out << ',';
      out << stats.tau[k];
    }
  }
  return out.str();
}

inline json tau_json(const HookCode& code, const HilbertFunction& T) {
  json j = json::array();
  for (const auto& block : code.blocks()) {
    json jb;
    jb["degree"] = block.degree;
    if (block.parts.empty()) {
      jb["values"] = json::array();
    } else {
      const auto stats =
          hookcells::detail::block_stats_from(block, T.delta(block.degree));
      jb["values"] = stats.tau;
    }
    j.push_back(std::move(jb));
  }
  return j;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string tsv_table(const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (k > 0) out << '\t';
    out << header[k];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out << '\t';
      out << row[k];
    }
    out << '\n';
  }
  return out.str();
}

inline std::string markdown_table(
    const std::vector<std::string>& header,
    const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  out << '|';
  for (const auto& h : header) out << ' ' << h << " |";
  out << "\n|";
  for (std::size_t k = 0; k < header.size(); ++k) out << " --- |";
  out << '\n';
  for (const auto& row : rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << cell << " |";
    out << '\n';
  }
  return out.str();
}

inline std::string key_value_report(
    Format format, const std::vector<std::pair<std::string, std::string>>& items) {
  if (format == Format::markdown) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, value] : items) rows.push_back({key, value});
    return markdown_table({"field", "value"}, rows);
  }
  std::ostringstream out;
  for (const auto& [key, value] : items) out << key << '\t' << value << '\n';
  return out.str();
}

}  // namespace detail

inline std::string render_enumerate(const HilbertFunction& T, Format format) {
  const auto partitions = enumerate_partitions(T);
  if (format == Format::json) {
    detail::json rows = detail::json::array();
    for (const auto& P : partitions) {
      const HookCode code = hook_code(P);
      detail::json row;
      row["partition"] = detail::partition_json(P);
      row["hook_code"] = detail::code_json(code);
      row["dimension"] = code.size();
      rows.push_back(std::move(row));
    }
    detail::json j;
    j["T"] = detail::hilbert_json(T);
    j["partitions"] = std::move(rows);
    return detail::dump(j);
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& P : partitions) {
    const HookCode code = hook_code(P);
    rows.push_back({format_partition(P),
                    detail::dash_if_empty(format == Format::markdown
                                              ? format_code_human(code)
                                              : format_code(code)),
                    std::to_string(code.size())});
  }
  const std::vector<std::string> header{"partition", "hook_code", "dimension"};
  return format == Format::markdown ? detail::markdown_table(header, rows)
                                    : detail::tsv_table(header, rows);
}

inline std::string render_kappa(const Partition& P, Format format) {
  const HilbertFunction T = diagonal_lengths(P);
  const HookCode code = hook_code(P);
  const GeneratorProfile profile = beta_profile(P);
  const GeneratorProfile betti = monomial_betti(P);
  if (format == Format::json) {
    detail::json j;
    j["partition"] = detail::partition_json(P);
    j["T"] = detail::hilbert_json(T);
    j["hook_code"] = detail::code_json(code);
    j["kappa"] = profile.total();
    j["beta_profile"] = detail::profile_json(profile);
    j["monomial_betti"] = detail::profile_json(betti);
    j["special"] = is_special(P);
    return detail::dump(j);
  }
  const bool human = format == Format::markdown;
  return detail::key_value_report(
      format,
      {{"partition", format_partition(P)},
       {"T", format_hilbert(T)},
       {"hook_code", detail::dash_if_empty(human ? format_code_human(code)
                                                 : format_code(code))},
       {"kappa", std::to_string(profile.total())},
       {"beta_profile", detail::profile_text(profile)},
       {"monomial_betti", detail::profile_text(betti)},
       {"special", detail::bool_text(is_special(P))}});
}

inline std::string render_decompose(const Partition& P, Format format) {
  const auto components = decompose(P);
  if (format == Format::json) {
    detail::json rows = detail::json::array();
    for (const auto& entry : components) {
      detail::json row;
      row["degree"] = entry.degree;
      row["T"] = detail::hilbert_json(entry.lengths);
      row["P"] = detail::partition_json(entry.partition);
      row["V1"] = detail::monomials_json(entry.sets.border);
      row["V2"] = detail::monomials_json(entry.sets.hands);
      rows.push_back(std::move(row));
    }
    detail::json j;
    j["partition"] = detail::partition_json(P);
    j["components"] = std::move(rows);
    return detail::dump(j);
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& entry : components) {
    rows.push_back({std::to_string(entry.degree), format_hilbert(entry.lengths),
                    format_partition(entry.partition),
                    detail::monomials_text(entry.sets.border),
                    detail::monomials_text(entry.sets.hands)});
  }
  const std::vector<std::string> header{"degree", "T", "P", "V1", "V2"};
  return format == Format::markdown ? detail::markdown_table(header, rows)
                                    : detail::tsv_table(header, rows);
}

inline std::string render_count(const HilbertFunction& T, std::optional<int> k,
                                Format format) {
  const KappaDistribution dist = kappa_distribution(T);
  const int generic = kappa_T(T);

  struct Row {
    int k = 0;
    Count mu;
    Count cumulative;
    bool special = false;
  };
  std::vector<Row> rows;
  Count running = 0;
  for (std::size_t u = 0; u < dist.counts.size(); ++u) {
    Row row;
    row.k = dist.start + static_cast<int>(u);
    row.mu = dist.counts[u];
    running += dist.counts[u];
    row.cumulative = running;
    row.special = row.k != generic;
    rows.push_back(std::move(row));
  }
  if (k) {
    Row row;
    row.k = *k;
    row.mu = dist.at(*k);
    row.cumulative = 0;
    for (const auto& existing : rows)
      if (existing.k <= *k) row.cumulative = existing.cumulative;
    row.special = *k != generic;
    rows.assign(1, std::move(row));
  }

  auto text = [](const Count& value) {
    std::ostringstream out;
    out << value;
    return out.str();
  };

  if (format == Format::json) {
    detail::json jrows = detail::json::array();
    for (const auto& row : rows) {
      detail::json jr;
      jr["k"] = row.k;
      jr["mu"] = text(row.mu);
      jr["cumulative"] = text(row.cumulative);
      jr["special"] = row.special;
      jrows.push_back(std::move(jr));
    }
    detail::json j;
    j["T"] = detail::hilbert_json(T);
    j["start"] = dist.start;
    j["rows"] = std::move(jrows);
    j["total"] = text(dist.total);
    j["special_count"] = text(dist.special);
    return detail::dump(j);
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows)
    cells.push_back({std::to_string(row.k), text(row.mu), text(row.cumulative),
                     detail::bool_text(row.special)});
  const std::vector<std::string> header{"k", "mu", "cumulative", "special"};
  return format == Format::markdown ? detail::markdown_table(header, cells)
                                    : detail::tsv_table(header, cells);
}

inline std::string render_table(const HilbertFunction& T, Format format) {
  const CodeLattice lattice = hasse_diagram(T);
  if (format == Format::json) {
    detail::json rows = detail::json::array();
    for (const auto& code : lattice.nodes) {
      const Partition P = partition_from_code(code, T);
      detail::json row;
      row["partition"] = detail::partition_json(P);
      row["hook_code"] = detail::code_json(code);
      row["tau"] = detail::tau_json(code, T);
      row["kappa"] = kappa(P);
      row["dimension"] = code.size();
      row["special"] = is_special(P);
      rows.push_back(std::move(row));
    }
    detail::json j;
    j["T"] = detail::hilbert_json(T);
    j["rows"] = std::move(rows);
    return detail::dump(j);
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& code : lattice.nodes) {
    const Partition P = partition_from_code(code, T);
    rows.push_back({format_partition(P),
                    detail::dash_if_empty(format == Format::markdown
                                              ? format_code_human(code)
                                              : format_code(code)),
                    detail::dash_if_empty(detail::tau_text(code, T)),
                    std::to_string(kappa(P)), std::to_string(code.size()),
                    detail::bool_text(is_special(P))});
  }
  const std::vector<std::string> header{"partition", "hook_code", "tau",
                                        "kappa",     "dimension", "special"};
  return format == Format::markdown ? detail::markdown_table(header, rows)
                                    : detail::tsv_table(header, rows);
}

inline std::string render_lattice(const HilbertFunction& T) {
  const CodeLattice lattice = hasse_diagram(T);
  std::ostringstream out;
  out << "digraph hook_code_lattice {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box];\n";
  for (std::size_t k = 0; k < lattice.nodes.size(); ++k) {
    const auto& code = lattice.nodes[k];
    const Partition P = partition_from_code(code, T);
    out << "  n" << k << " [label=\"" << format_partition(P) << " | "
        << format_code_human(code) << " | " << kappa(P) << "\"";
    if (is_special(P)) out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  auto edges = lattice.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [from, to] : edges)
    out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

struct VerifyReport {
  Partition partition;
  int prime = 0;
  long long tuples_tested = 0;
  long long accepted = 0;
  int min_mu_total = 0;
  GeneratorProfile min_mu_profile;
  int formula_kappa = 0;
  GeneratorProfile formula_profile;
  bool agree = false;
};

inline VerifyReport run_verify(const Partition& P, std::optional<int> field,
                               long long budget) {
  if (budget < 1) throw Error("budget must be at least 1");
  const HilbertFunction T = diagonal_lengths(P);
  const int bound = T.socle_degree() + 1;

  OracleCount count;
  if (field) {
    const PrimeModulus p(*field);
    if (p.value() <= T.socle_degree())
      throw Error("prime must exceed socle degree " +
                  std::to_string(T.socle_degree()));
    count = oracle_kappa_at(P, p, budget);
  } else {
    count = oracle_kappa(P, budget);
  }

  VerifyReport report;
  report.partition = P;
  report.prime = count.prime;
  report.tuples_tested = count.tuples_tested;
  report.accepted = count.accepted;
  report.min_mu_total = count.total;
  report.formula_kappa = kappa(P);
  report.formula_profile = beta_profile(P);

  report.min_mu_profile.start_degree = report.formula_profile.start_degree;
  for (int degree = report.formula_profile.start_degree; degree <= bound;
       ++degree)
    report.min_mu_profile.counts.push_back(
        count.profile[static_cast<std::size_t>(degree)]);

  report.agree = report.min_mu_total == report.formula_kappa;
  for (int degree = 0; degree <= bound; ++degree) {
    const int offset = degree - report.formula_profile.start_degree;
    const int expected =
        offset >= 0 &&
                offset < static_cast<int>(report.formula_profile.counts.size())
            ? report.formula_profile.counts[static_cast<std::size_t>(offset)]
            : 0;
    if (count.profile[static_cast<std::size_t>(degree)] != expected)
      report.agree = false;
  }
  return report;
}

inline std::string render_verify(const VerifyReport& report, Format format) {
  if (format == Format::json) {
    detail::json j;
    j["partition"] = detail::partition_json(report.partition);
    j["prime"] = report.prime;
    j["tuples_tested"] = report.tuples_tested;
    j["accepted"] = report.accepted;
    j["min_mu_total"] = report.min_mu_total;
    j["min_mu_profile"] = detail::profile_json(report.min_mu_profile);
    j["formula_kappa"] = report.formula_kappa;
    j["formula_profile"] = detail::profile_json(report.formula_profile);
    j["agree"] = report.agree;
    return detail::dump(j);
  }
  return detail::key_value_report(
      format,
      {{"partition", format_partition(report.partition)},
       {"prime", std::to_string(report.prime)},
       {"tuples_tested", std::to_string(report.tuples_tested)},
       {"accepted", std::to_string(report.accepted)},
       {"min_mu_total", std::to_string(report.min_mu_total)},
       {"min_mu_profile", detail::profile_text(report.min_mu_profile)},
       {"formula_kappa", std::to_string(report.formula_kappa)},
       {"formula_profile", detail::profile_text(report.formula_profile)},
       {"agree", detail::bool_text(report.agree)}});
}

inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"hook codes, cells, and generator counts of height-two "
               "graded ideals"};
  app.require_subcommand(1);

  std::string input;
  std::string format_name;
  int k_value = 0;
  int field_value = 0;
  long long budget = 1000000;

  auto add_format = [&format_name](CLI::App* command) {
    return command->add_option("--format", format_name,
                               "output format: tsv, json, markdown, dot");
  };

  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "list the partitions with the given diagonal lengths");
  cmd_enumerate->add_option("T", input, "diagonal lengths, e.g. 1,2,3,4,2")
      ->required();
  add_format(cmd_enumerate);

  auto* cmd_kappa = app.add_subcommand(
      "kappa", "generic minimal generator count of a partition's cell");
  cmd_kappa->add_option("P", input, "partition, e.g. 15,12^4")->required();
  add_format(cmd_kappa);

  auto* cmd_decompose = app.add_subcommand(
      "decompose", "single-block components of a partition");
  cmd_decompose->add_option("P", input, "partition, e.g. 5,5,5,3,1,1,1")
      ->required();
  add_format(cmd_decompose);

  auto* cmd_count = app.add_subcommand(
      "count", "distribution of kappa over the partitions of T");
  cmd_count->add_option("T", input, "diagonal lengths, e.g. 1,2,3,4,2")
      ->required();
  auto* k_option =
      cmd_count->add_option("--k", k_value, "report a single kappa value");
  add_format(cmd_count);

  auto* cmd_table = app.add_subcommand(
      "table", "per-partition table: code, tau, kappa, dimension");
  cmd_table->add_option("T", input, "diagonal lengths, e.g. 1,2,3,4,2,0")
      ->required();
  add_format(cmd_table);

  auto* cmd_lattice = app.add_subcommand(
      "lattice", "specialization diagram of the hook codes in DOT form");
  cmd_lattice->add_option("T", input, "diagonal lengths, e.g. 1,2,3,4,2")
      ->required();
  auto* lattice_format = add_format(cmd_lattice);

  auto* cmd_verify = app.add_subcommand(
      "verify", "check the formulas against the linear-algebra oracle");
  cmd_verify->add_option("P", input, "partition, e.g. 5,3,1")->required();
  auto* field_option = cmd_verify->add_option(
      "--field", field_value, "prime field; default: ladder of primes");
  cmd_verify->add_option("--budget", budget,
                         "tuple budget for the oracle scan");
  add_format(cmd_verify);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    Format format = Format::tsv;
    if (format_name.empty()) {
      if (cmd_lattice->parsed()) format = Format::dot;
    } else {
      format = parse_format(format_name);
    }
    if (format == Format::dot && !cmd_lattice->parsed())
      throw Error("format dot is only available for lattice");
    if (cmd_lattice->parsed() && lattice_format->count() > 0 &&
        format != Format::dot)
      throw Error("lattice output is dot only");

    if (cmd_enumerate->parsed()) {
      out << render_enumerate(parse_hilbert(input), format);
      return 0;
    }
    if (cmd_kappa->parsed()) {
      out << render_kappa(parse_partition(input), format);
      return 0;
    }
    if (cmd_decompose->parsed()) {
      out << render_decompose(parse_partition(input), format);
      return 0;
    }
    if (cmd_count->parsed()) {
      std::optional<int> k;
      if (k_option->count() > 0) k = k_value;
      out << render_count(parse_hilbert(input), k, format);
      return 0;
    }
    if (cmd_table->parsed()) {
      out << render_table(parse_hilbert(input), format);
      return 0;
    }
    if (cmd_lattice->parsed()) {
      out << render_lattice(parse_hilbert(input));
      return 0;
    }
    if (cmd_verify->parsed()) {
      std::optional<int> field;
      if (field_option->count() > 0) field = field_value;
      const VerifyReport report =
          run_verify(parse_partition(input), field, budget);
      out << render_verify(report, format);
      if (!report.agree) {
        err << "error: Disagreement: oracle minimum differs from the "
               "formulas\n";
        return 2;
      }
      return 0;
    }
  } catch (const BudgetExhausted& e) {
    err << "error: BudgetExhausted: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace hookcells::cli
