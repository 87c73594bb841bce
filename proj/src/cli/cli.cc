// Copyright 2026 The Chernoff Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chernoff/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "chernoff/bounds.h"
#include "chernoff/errors.h"
#include "chernoff/mechanisms.h"
#include "chernoff/oracles.h"
#include "chernoff/verification.h"

namespace chernoff {
namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, std::int64_t, std::uint64_t, bool,
                          std::string>;

std::string CellText(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return FormatDecimal(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

Json JsonNumber(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::strtod(FormatDecimal(value).c_str(), nullptr);
}

Json CellJson(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return JsonNumber(v);
        } else {
          return v;
        }
      },
      cell);
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c == '\n' ? ' ' : c;
  }
  return quoted + "\"";
}

// A flat record plus an optional table; the shape every subcommand except
// `compare` emits.
struct Document {
  std::vector<std::pair<std::string, Cell>> fields;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::string table_key = "rows";

  void Add(std::string key, Cell value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
};

void WriteTableText(std::ostream& out, const std::vector<std::string>& columns,
                    const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& values) {
    for (std::size_t c = 0; c < values.size(); ++c) {
      out << values[c];
      if (c + 1 < values.size()) {
        out << std::string(width[c] - values[c].size() + 2, ' ');
      }
    }
    out << '\n';
  };
  line(columns);
  for (const auto& row : cells) line(row);
}

void Render(const Document& doc, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kJson: {
      Json json = Json::object();
      for (const auto& [key, value] : doc.fields) json[key] = CellJson(value);
      if (!doc.columns.empty()) {
        Json table = Json::array();
        for (const auto& row : doc.rows) {
          Json item = Json::object();
          for (std::size_t c = 0; c < doc.columns.size(); ++c) {
            item[doc.columns[c]] = CellJson(row[c]);
          }
          table.push_back(std::move(item));
        }
        json[doc.table_key] = std::move(table);
      }
      out << json.dump(2) << '\n';
      return;
    }
    case OutputFormat::kCsv: {
      std::vector<std::string> header;
      std::vector<std::vector<Cell>> rows;
      if (doc.columns.empty()) {
        std::vector<Cell> values;
        for (const auto& [key, value] : doc.fields) {
          header.push_back(key);
          values.push_back(value);
        }
        rows.push_back(std::move(values));
      } else {
        header = doc.columns;
        rows = doc.rows;
      }
      for (std::size_t c = 0; c < header.size(); ++c) {
        out << (c ? "," : "") << CsvField(header[c]);
      }
      out << '\n';
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << (c ? "," : "") << CsvField(CellText(row[c]));
        }
        out << '\n';
      }
      return;
    }
    case OutputFormat::kText: {
      for (const auto& [key, value] : doc.fields) {
        out << key << ": " << CellText(value) << '\n';
      }
      if (!doc.columns.empty()) {
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : doc.rows) {
          std::vector<std::string> texts;
          for (const Cell& cell : row) texts.push_back(CellText(cell));
          cells.push_back(std::move(texts));
        }
        WriteTableText(out, doc.columns, cells);
      }
      return;
    }
  }
}

// Typed, validated access to the raw string flags of one request.
class Flags {
 public:
  explicit Flags(const CommandRequest& request) : request_(request) {}

  void AllowOnly(const std::set<std::string>& allowed,
                 const std::string& context) const {
    for (const auto& [key, value] : request_.parameters) {
      if (key != "format" && !allowed.count(key)) {
        throw DomainError("--" + key + " is not accepted by " + context);
      }
    }
  }

  bool Has(const std::string& key) const {
    return request_.parameters.count(key) != 0;
  }

  const std::string& Text(const std::string& key) const {
    auto it = request_.parameters.find(key);
    if (it == request_.parameters.end()) {
      throw DomainError(request_.subcommand + " requires --" + key);
    }
    return it->second;
  }

  double Real(const std::string& key) const {
    return ParseReal(key, Text(key));
  }

  std::int64_t Integer(const std::string& key) const {
    const std::string& text = Text(key);
    std::int64_t value = 0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw DomainError("--" + key + " expects an integer, got '" + text + "'");
    }
    return value;
  }

  std::uint64_t Unsigned(const std::string& key) const {
    const std::string& text = Text(key);
    std::uint64_t value = 0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw DomainError("--" + key + " expects a nonnegative integer, got '" +
                        text + "'");
    }
    return value;
  }

  std::vector<double> RealList(const std::string& key) const {
    const std::string& text = Text(key);
    std::vector<double> values;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      values.push_back(ParseReal(key, text.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return values;
  }

  template <typename T>
  std::optional<T> Maybe(const std::string& key,
                         T (Flags::*get)(const std::string&) const) const {
    if (!Has(key)) return std::nullopt;
    return (this->*get)(key);
  }

 private:
  static double ParseReal(const std::string& key, const std::string& text) {
    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() ||
        !std::isfinite(value)) {
      throw DomainError("--" + key + " expects a finite decimal, got '" +
                        text + "'");
    }
    return value;
  }

  const CommandRequest& request_;
};

int RunBound(const Flags& flags, OutputFormat format, std::ostream& out) {
  const std::string kind = flags.Text("kind");
  const std::string context = "bound --kind " + kind;
  auto tail = [&](Direction direction) {
    return TailQuery{flags.Integer("n"), flags.Real("p"), flags.Real("t"),
                     direction};
  };
  auto relative = [&](Direction direction) {
    return MultiplicativeQuery{flags.Real("mu"), flags.Real("delta"),
                               direction,
                               flags.Maybe<std::int64_t>("n", &Flags::Integer)};
  };

  BoundResult result;
  if (kind == "kl-upper" || kind == "kl-lower") {
    flags.AllowOnly({"kind", "n", "p", "t"}, context);
    result = KlTailBound(
        tail(kind == "kl-upper" ? Direction::kUpper : Direction::kLower));
  } else if (kind == "mult-upper" || kind == "mult-lower") {
    flags.AllowOnly({"kind", "mu", "delta"}, context);
    result = MultiplicativeBound(relative(
        kind == "mult-upper" ? Direction::kUpper : Direction::kLower));
  } else if (kind == "simple-lower" || kind == "simple-upper" ||
             kind == "two-sided") {
    flags.AllowOnly({"kind", "mu", "delta", "n"}, context);
    const Direction direction = kind == "simple-lower"   ? Direction::kLower
                                : kind == "simple-upper" ? Direction::kUpper
                                                         : Direction::kTwoSided;
    result = SimplifiedBound(relative(direction));
  } else if (kind == "threshold") {
    flags.AllowOnly({"kind", "mu", "t"}, context);
    result = AbsoluteThresholdBound(flags.Real("mu"), flags.Real("t"));
  } else if (kind == "su-weak") {
    flags.AllowOnly({"kind", "n", "t"}, context);
    result = SteinkeUllmanBound(flags.Integer("n"), flags.Real("t"));
  } else if (kind == "hypergeometric") {
    flags.AllowOnly({"kind", "population", "red", "draws", "t"}, context);
    result = HypergeometricBound(flags.Integer("population"),
                                 flags.Integer("red"), flags.Integer("draws"),
                                 flags.Real("t"));
  } else if (kind == "moment" || kind == "ik") {
    flags.AllowOnly({"kind", "n", "p", "t", "lambda"}, context);
    const LambdaMethod method = kind == "moment"
                                    ? LambdaMethod::kMoment
                                    : LambdaMethod::kIk;
    const TailQuery query = tail(Direction::kUpper);
    const double lambda = flags.Has("lambda")
                              ? flags.Real("lambda")
                              : OptimalLambda(query.p, query.t, method);
    result = ParametricBound(query, lambda, method);
  } else {
    throw DomainError("unknown bound kind '" + kind + "'");
  }

  Document doc;
  doc.Add("kind", result.name);
  doc.Add("value", result.value);
  doc.Add("log_value", result.log_value);
  doc.Add("vacuous", result.vacuous);
  for (const auto& [key, value] : result.inputs) doc.Add(key, value);
  if (!result.note.empty()) doc.Add("note", result.note);
  Render(doc, format, out);
  return kExitOk;
}

SampleModel ParseModel(const Flags& flags, std::set<std::string>& allowed) {
  const std::string name = flags.Text("model");
  if (name == "iid") {
    allowed.insert({"n", "p"});
    return IidModel{flags.Integer("n"), flags.Real("p")};
  }
  if (name == "heterogeneous") {
    allowed.insert("probs");
    return HeterogeneousModel{flags.RealList("probs")};
  }
  if (name == "urn") {
    allowed.insert({"population", "red", "draws"});
    return UrnSpec{flags.Integer("population"), flags.Integer("red"),
                   flags.Integer("draws")};
  }
  throw DomainError("unknown model '" + name +
                    "' (expected iid, heterogeneous or urn)");
}

unsigned Threads(const Flags& flags) {
  if (!flags.Has("threads")) return 0;
  const std::uint64_t threads = flags.Unsigned("threads");
  if (threads > 1024) throw DomainError("--threads must be <= 1024");
  return static_cast<unsigned>(threads);
}

SimulationSpec ParseSimulation(const Flags& flags,
                               std::set<std::string>& allowed) {
  SimulationSpec spec{ParseModel(flags, allowed), 100'000, 0};
  if (flags.Has("trials")) spec.trials = flags.Unsigned("trials");
  spec.seed = flags.Unsigned("seed");
  spec.Validate();
  return spec;
}

int RunCompare(const Flags& flags, OutputFormat format, std::ostream& out) {
  std::set<std::string> allowed = {"model", "t", "steps", "trials", "seed",
                                   "threads"};
  const SimulationSpec spec = ParseSimulation(flags, allowed);
  flags.AllowOnly(allowed, "compare");
  std::vector<double> deviations;
  if (flags.Has("t")) {
    if (flags.Has("steps")) {
      throw DomainError("compare takes either --t or --steps, not both");
    }
    deviations = flags.RealList("t");
  } else {
    const std::int64_t steps =
        flags.Has("steps") ? flags.Integer("steps") : 10;
    if (steps < 1 || steps > 10'000) {
      throw DomainError("--steps must be in [1, 10000]");
    }
    const double p = spec.MeanParameter();
    for (std::int64_t j = 0; j <= steps; ++j) {
      deviations.push_back((1.0 - p) * static_cast<double>(j) /
                           static_cast<double>(steps));
    }
  }
  out << RenderTable(BoundScorecard(spec, deviations, Threads(flags)), format);
  return kExitOk;
}

int RunSimulate(const Flags& flags, OutputFormat format, std::ostream& out) {
  std::set<std::string> allowed = {"model", "trials", "seed", "k", "threads"};
  const SimulationSpec spec = ParseSimulation(flags, allowed);
  flags.AllowOnly(allowed, "simulate");
  const auto histogram = SimulateHistogram(spec, Threads(flags));
  const std::int64_t size = spec.Size();

  long double total = 0.0L;
  for (std::size_t s = 0; s < histogram.size(); ++s) {
    total += static_cast<long double>(s) * histogram[s];
  }
  Document doc;
  doc.Add("model", std::string(ModelName(spec.model)));
  doc.Add("size", size);
  doc.Add("trials", spec.trials);
  doc.Add("seed", spec.seed);
  doc.Add("mean", static_cast<double>(total / spec.trials));
  doc.Add("expected_mean", spec.MeanParameter() * static_cast<double>(size));
  if (flags.Has("k")) {
    const std::int64_t k = flags.Integer("k");
    const EmpiricalTail tail = EmpiricalTailFromHistogram(histogram, k, spec.seed);
    doc.Add("k", k);
    doc.Add("estimate", tail.estimate);
    doc.Add("standard_error", tail.standard_error);
    doc.Add("exact", ExactModelTail(spec.model, k));
  }

  doc.table_key = "histogram";
  doc.columns = {"k", "count", "empirical_tail", "exact_tail"};
  std::uint64_t at_least = spec.trials;
  for (std::int64_t k = 0; k <= size; ++k) {
    doc.rows.push_back({k, histogram[k],
                        static_cast<double>(at_least) /
                            static_cast<double>(spec.trials),
                        ExactModelTail(spec.model, k)});
    at_least -= histogram[k];
  }
  Render(doc, format, out);
  return kExitOk;
}

int RunSelect(const Flags& flags, OutputFormat format, std::ostream& out) {
  flags.AllowOnly({"matrix", "gamma", "samples", "seed"}, "select");
  const std::string path = flags.Text("matrix");
  std::ifstream file(path);
  if (!file) throw IoError("cannot open score matrix '" + path + "'");
  const ScoreMatrix scores = ReadScoreMatrix(file);
  if (file.bad()) throw IoError("error reading '" + path + "'");
  const double gamma = flags.Real("gamma");
  const SelectorDistribution dist = MakeSelectorDistribution(scores, gamma);
  const AccuracyReport accuracy = AccuracyGap(scores, gamma);

  const std::uint64_t samples =
      flags.Has("samples") ? flags.Unsigned("samples") : 0;
  if (samples > 100'000'000) throw ResourceError("--samples above 1e8");
  std::vector<std::uint64_t> counts;
  Document doc;
  doc.Add("rows", static_cast<std::uint64_t>(scores.rows()));
  doc.Add("cols", static_cast<std::uint64_t>(scores.cols()));
  doc.Add("gamma", gamma);
  doc.Add("log_normalizer", dist.log_normalizer);
  doc.Add("expected_score", accuracy.expected_score);
  doc.Add("max_score", accuracy.max_score);
  doc.Add("gap", accuracy.gap);
  doc.Add("gap_limit", accuracy.limit);
  doc.Add("gap_within", accuracy.within);
  if (samples > 0) {
    const std::uint64_t seed = flags.Unsigned("seed");
    counts.assign(scores.rows(), 0);
    for (std::size_t row : SampleSelector(dist, seed, samples)) ++counts[row];
    doc.Add("samples", samples);
    doc.Add("seed", seed);
  } else if (flags.Has("seed")) {
    flags.Unsigned("seed");
  }

  const std::vector<double> sums = scores.RowSums();
  doc.table_key = "distribution";
  doc.columns = {"row", "row_sum", "probability"};
  if (samples > 0) doc.columns.push_back("count");
  for (std::size_t i = 0; i < scores.rows(); ++i) {
    std::vector<Cell> row = {static_cast<std::uint64_t>(i), sums[i],
                             dist.probabilities[i]};
    if (samples > 0) row.emplace_back(counts[i]);
    doc.rows.push_back(std::move(row));
  }
  Render(doc, format, out);
  return kExitOk;
}

int RunVerify(const Flags& flags, OutputFormat format, std::ostream& out) {
  flags.AllowOnly({"suite", "max-n", "seed", "threads"}, "verify");
  SuiteOptions options;
  options.max_n = flags.Maybe<std::int64_t>("max-n", &Flags::Integer);
  options.seed = flags.Maybe<std::uint64_t>("seed", &Flags::Unsigned);
  options.threads = Threads(flags);
  const std::string suite = flags.Has("suite") ? flags.Text("suite") : "all";
  const std::vector<SuiteReport> reports = RunNamedSuite(suite, options);

  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  Document doc;
  doc.table_key = "suites";
  doc.columns = {"suite", "checks", "failures", "worst_slack", "first_failure"};
  for (const SuiteReport& report : reports) {
    checks += report.checks();
    failures += report.failures();
    doc.rows.push_back({report.name(), report.checks(), report.failures(),
                        report.worst_slack(), report.first_failure()});
  }
  const bool passed = failures == 0;

  if (format == OutputFormat::kText) {
    for (const SuiteReport& report : reports) {
      out << report.name() << ": " << report.checks() << " checks, "
          << report.failures() << " failures, worst slack "
          << FormatDecimal(report.worst_slack()) << '\n';
      if (!report.passed()) {
        out << "  first failure: " << report.first_failure() << '\n';
      }
    }
    if (passed) {
      out << "checks: all pass\n";
    } else {
      out << "checks: " << failures << " of " << checks << " failed\n";
    }
  } else {
    doc.Add("checks", checks);
    doc.Add("failures", failures);
    doc.Add("passed", passed);
    Render(doc, format, out);
  }
  return passed ? kExitOk : kExitVerificationFailed;
}

std::string OneLine(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

struct FlagSpec {
  const char* name;
  const char* help;
};

const std::map<std::string, std::vector<FlagSpec>>& SubcommandFlags() {
  static const std::map<std::string, std::vector<FlagSpec>> flags = {
      {"bound",
       {{"kind", "bound name"},
        {"n", "number of variables"},
        {"p", "mean parameter"},
        {"t", "deviation (absolute threshold for --kind threshold)"},
        {"mu", "mean mu"},
        {"delta", "relative deviation"},
        {"population", "urn population N"},
        {"red", "red balls P"},
        {"draws", "draws n"},
        {"lambda", "parameter for moment/ik kinds"}}},
      {"compare",
       {{"model", "iid, heterogeneous or urn"},
        {"n", "iid size"},
        {"p", "iid success probability"},
        {"probs", "comma-separated probabilities"},
        {"population", "urn population"},
        {"red", "urn red balls"},
        {"draws", "urn draws"},
        {"t", "comma-separated deviations"},
        {"steps", "evenly spaced deviations on [0, 1 - p]"},
        {"trials", "Monte Carlo trials"},
        {"seed", "RNG seed"},
        {"threads", "worker threads (0 = hardware)"}}},
      {"verify",
       {{"suite", "suite name or all"},
        {"max-n", "enumeration size override"},
        {"seed", "RNG seed for randomized suites"},
        {"threads", "worker threads (0 = hardware)"}}},
      {"simulate",
       {{"model", "iid, heterogeneous or urn"},
        {"n", "iid size"},
        {"p", "iid success probability"},
        {"probs", "comma-separated probabilities"},
        {"population", "urn population"},
        {"red", "urn red balls"},
        {"draws", "urn draws"},
        {"trials", "Monte Carlo trials"},
        {"seed", "RNG seed"},
        {"k", "tail threshold"},
        {"threads", "worker threads (0 = hardware)"}}},
      {"select",
       {{"matrix", "score matrix CSV path"},
        {"gamma", "selector base, > 1"},
        {"samples", "number of draws"},
        {"seed", "RNG seed"}}},
  };
  return flags;
}

}  // namespace

OutputFormat ParseOutputFormat(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw DomainError("unknown format '" + name + "' (expected json, csv or text)");
}

std::string FormatDecimal(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string RenderTable(const std::vector<ScorecardRow>& rows,
                        OutputFormat format) {
  if (rows.empty()) throw DomainError("cannot render an empty table");
  static const std::vector<std::string> kColumns = {
      "t",  "k",              "exact",      "empirical",
      "kl", "multiplicative", "simplified", "steinke_ullman"};
  auto values = [](const ScorecardRow& row) {
    return std::vector<double>{row.t,  static_cast<double>(row.k),
                               row.exact, row.empirical, row.kl,
                               row.multiplicative, row.simplified,
                               row.steinke_ullman};
  };
  std::ostringstream out;
  if (format == OutputFormat::kJson) {
    Json table = Json::array();
    for (const ScorecardRow& row : rows) {
      Json item = Json::object();
      const std::vector<double> v = values(row);
      for (std::size_t c = 0; c < kColumns.size(); ++c) {
        item[kColumns[c]] = c == 1 ? Json(row.k) : JsonNumber(v[c]);
      }
      table.push_back(std::move(item));
    }
    out << table.dump(2) << '\n';
    return out.str();
  }
  std::vector<std::vector<std::string>> cells;
  for (const ScorecardRow& row : rows) {
    std::vector<std::string> texts;
    const std::vector<double> v = values(row);
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
      texts.push_back(c == 1 ? std::to_string(row.k) : FormatDecimal(v[c]));
    }
    cells.push_back(std::move(texts));
  }
  if (format == OutputFormat::kText) {
    WriteTableText(out, kColumns, cells);
    return out.str();
  }
  for (std::size_t c = 0; c < kColumns.size(); ++c) {
    out << (c ? "," : "") << kColumns[c];
  }
  out << '\n';
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
  return out.str();
}

int Dispatch(const CommandRequest& request, std::ostream& out,
             std::ostream& err) {
  try {
    const Flags flags(request);
    int status = kExitOk;
    if (request.subcommand == "bound") {
      status = RunBound(flags, request.format, out);
    } else if (request.subcommand == "compare") {
      status = RunCompare(flags, request.format, out);
    } else if (request.subcommand == "verify") {
      status = RunVerify(flags, request.format, out);
    } else if (request.subcommand == "simulate") {
      status = RunSimulate(flags, request.format, out);
    } else if (request.subcommand == "select") {
      status = RunSelect(flags, request.format, out);
    } else {
      throw DomainError("unknown subcommand '" + request.subcommand + "'");
    }
    out.flush();
    if (!out) throw IoError("failed to write output");
    return status;
  } catch (const IoError& e) {
    err << "chernoff: " << OneLine(e.what()) << '\n';
    return kExitIoError;
  } catch (const std::exception& e) {
    err << "chernoff: " << OneLine(e.what()) << '\n';
    return kExitDomainError;
  }
}

int RunCommandLine(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app("Concentration-inequality toolkit", "chernoff");
  app.require_subcommand(1);
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::string> formats;
  for (const auto& [command, specs] : SubcommandFlags()) {
    CLI::App* sub = app.add_subcommand(command);
    for (const FlagSpec& spec : specs) {
      sub->add_option(std::string("--") + spec.name, values[command][spec.name],
                      spec.help);
    }
    formats[command] = "text";
    sub->add_option("--format", formats[command], "json, csv or text");
  }

  if (argc > 1 && argv[1][0] != '-' &&
      !SubcommandFlags().count(argv[1])) {
    err << "chernoff: unknown subcommand '" << argv[1] << "'\n";
    return kExitDomainError;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "chernoff: " << OneLine(e.what()) << '\n';
    return kExitDomainError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  CommandRequest request;
  request.subcommand = chosen->get_name();
  for (const FlagSpec& spec : SubcommandFlags().at(request.subcommand)) {
    if (chosen->count(std::string("--") + spec.name) > 0) {
      request.parameters[spec.name] = values[request.subcommand][spec.name];
    }
  }
  try {
    request.format = ParseOutputFormat(formats[request.subcommand]);
  } catch (const DomainError& e) {
    err << "chernoff: " << e.what() << '\n';
    return kExitDomainError;
  }
  return Dispatch(request, out, err);
}

}  // namespace chernoff
