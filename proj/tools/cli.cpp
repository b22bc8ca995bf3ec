#include "cli.hpp"

#include "fishlab/error.hpp"
#include "fishlab/io.hpp"
#include "fishlab/matrices.hpp"
#include "fishlab/oracle.hpp"
#include "fishlab/permutations.hpp"
#include "fishlab/posets.hpp"
#include "fishlab/sequences.hpp"
#include "fishlab/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

namespace fishlab::cli {
namespace {

using io::Json;

// Writes either bare text records or one JSON array holding every record.
class Emitter {
public:
  Emitter(std::ostream& out, bool json, bool blank_separated)
      : out_(out), json_(json), blank_separated_(blank_separated) {}

  void emit(const Json& record, const std::string& text) {
    if (json_) {
      out_ << (count_ == 0 ? "[\n" : ",\n") << record.dump();
    } else {
      if (blank_separated_ && count_ > 0) out_ << '\n';
      out_ << text;
      if (text.empty() || text.back() != '\n') out_ << '\n';
    }
    ++count_;
  }

  void finish() {
    if (!json_) return;
    out_ << (count_ == 0 ? "[]\n" : "\n]\n");
  }

private:
  std::ostream& out_;
  bool json_;
  bool blank_separated_;
  std::size_t count_ = 0;
};

struct Options {
  std::string cls;
  std::string bijection;
  std::string suite;
  std::string format = "lines";
  std::string csv;
  int n = 0;
  int d = 0;
  int max_n = 0;
  int max_d = 3;
  bool with_covers = false;
};

Json optional_list(const std::vector<int>& values) {
  Json out = Json::array();
  for (int v : values) out.push_back(v == 0 ? Json(nullptr) : Json(v));
  return out;
}

Json matrix_stats(const TriMatrix& a) {
  const auto kind = classify(a);
  std::vector<int> rmin, rmax;
  for (int j = 1; j <= a.dim(); ++j) {
    const bool empty = a.zero_column(j);
    rmin.push_back(empty ? 0 : column_extremes(a, j).rmin);
    rmax.push_back(empty ? 0 : column_extremes(a, j).rmax);
  }
  Json j = io::matrix_json(a);
  j["weight"] = a.weight();
  j["rmin"] = optional_list(rmin);
  j["rmax"] = optional_list(rmax);
  j["index"] = kind.fishburn ? Json(index_row(a)) : Json(nullptr);
  j["fishburn"] = kind.fishburn;
  j["column_restricted"] = kind.column_restricted;
  return j;
}

void require_enumerable(int n, int d) {
  if (n < 1) throw InputError("--n must be positive");
  if (d < 0) throw InputError("--d must be nonnegative");
  if (n > kMaxEnumerateN)
    throw ResourceError("--n " + std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(kMaxEnumerateN));
}

int run_enumerate(const Options& opt, std::ostream& out) {
  require_enumerable(opt.n, opt.d);
  const bool json = opt.format == "json";
  const bool matrix = opt.cls == "fishburn" || opt.cls == "colres";
  Emitter emitter(out, json, matrix);
  if (opt.cls == "seq") {
    for (const auto& x : enumerate_d_ascent_sequences(opt.n, opt.d))
      emitter.emit(io::sequence_json(x, opt.d), io::format_line(x));
  } else if (opt.cls == "perm") {
    for (const auto& pi : enumerate_difference_permutations(opt.n, opt.d))
      emitter.emit(io::permutation_json(pi), io::format_line(pi.values()));
  } else if (opt.cls == "poset") {
    for (const auto& p : enumerate_difference_posets(opt.n, opt.d))
      emitter.emit(io::poset_json(p, opt.with_covers), io::format_line(p.omega()));
  } else {
    const auto all = opt.cls == "fishburn" ? enumerate_fishburn(opt.n)
                                           : enumerate_column_restricted(opt.n);
    for (const auto& a : all) emitter.emit(io::matrix_json(a), io::format_matrix(a));
  }
  emitter.finish();
  return kExitOk;
}

// Reads all of `in`; returns the items and whether the input was JSON.
std::pair<std::vector<io::InputItem>, bool> read_input(std::istream& in, io::ItemShape shape) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto first = text.find_first_not_of(" \t\r\n");
  std::istringstream stream(text);
  return {io::read_items(stream, shape), first != std::string::npos && text[first] == '['};
}

// Applies `handle` to each item, reporting failures on `err`.
template <class Handle>
int for_each_item(const std::vector<io::InputItem>& items, bool json_input, std::ostream& err,
                  Handle handle) {
  int status = kExitOk;
  for (const auto& item : items) {
    const std::string where = (json_input ? "item " : "line ") + std::to_string(item.line) + ": ";
    if (!item.error.empty()) {
      err << where << item.error << '\n';
      status = kExitFailure;
      continue;
    }
    try {
      handle(item);
    } catch (const InputError& e) {
      err << where << e.what() << '\n';
      status = kExitFailure;
    } catch (const DomainError& e) {
      err << where << e.what() << '\n';
      status = kExitFailure;
    }
  }
  return status;
}

int run_map(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  if (opt.d < 0) throw InputError("--d must be nonnegative");
  const std::string& b = opt.bijection;
  const bool matrix = b.starts_with("theta");
  const auto [items, json_input] =
      read_input(in, matrix ? io::ItemShape::matrix : io::ItemShape::integer_list);
  Emitter emitter(out, opt.format == "json", matrix);
  const int d = opt.d;

  const int status = for_each_item(items, json_input, err, [&](const io::InputItem& item) {
    if (b == "phi") {
      const auto x = phi(Permutation(item.values), d);
      emitter.emit(io::sequence_json(x, d), io::format_line(x));
    } else if (b == "phi-inv") {
      const auto pi = phi_inv(item.values, d);
      emitter.emit(io::permutation_json(pi), io::format_line(pi.values()));
    } else if (b == "psi") {
      const auto x = psi(FactorialPoset(item.values), d);
      emitter.emit(io::sequence_json(x, d), io::format_line(x));
    } else if (b == "psi-inv") {
      const auto p = psi_inv(item.values, d);
      emitter.emit(io::poset_json(p, opt.with_covers), io::format_line(p.omega()));
    } else {
      const auto a = TriMatrix::from_rows(item.rows);
      const auto image = b == "theta" ? theta(a) : b == "theta-inv" ? theta_inv(a) : theta_bar(a);
      emitter.emit(io::matrix_json(image), io::format_matrix(image));
    }
  });
  emitter.finish();
  return status;
}

int run_stats(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  if (opt.d < 0) throw InputError("--d must be nonnegative");
  const bool matrix = opt.cls == "matrix";
  const auto [items, json_input] =
      read_input(in, matrix ? io::ItemShape::matrix : io::ItemShape::integer_list);
  const int d = opt.d;

  return for_each_item(items, json_input, err, [&](const io::InputItem& item) {
    Json j;
    if (opt.cls == "seq") {
      if (!is_d_ascent_sequence(item.values, d))
        throw DomainError("not a " + std::to_string(d) + "-ascent sequence");
      j = io::sequence_json(item.values, d);
      j["dAsc"] = d_ascent_set(item.values, d);
      j["dasc"] = d_ascent_count(item.values, d);
    } else if (opt.cls == "perm") {
      const Permutation pi(item.values);
      const auto act = active_elements(pi, d);
      j = io::permutation_json(pi);
      j["d"] = d;
      j["Act"] = act;
      j["act"] = act.size();
      j["Ascbot"] = ascent_bottoms(pi);
      j["difference"] = is_difference_permutation(pi, d);
    } else if (opt.cls == "poset") {
      const FactorialPoset p(item.values);
      j = io::poset_json(p, opt.with_covers);
      j["d"] = d;
      j["A"] = nonzero_labels(p);
      j["Act"] = active_elements(p, d);
      j["difference"] = is_difference_poset(p, d);
    } else {
      j = matrix_stats(TriMatrix::from_rows(item.rows));
    }
    out << j.dump() << '\n';
  });
}

int run_verify(const Options& opt, std::ostream& out) {
  static const std::map<std::string, verify::Suite> suites{
      {"perm", verify::Suite::perm},     {"poset", verify::Suite::poset},
      {"matrix", verify::Suite::matrix}, {"counts", verify::Suite::counts},
      {"all", verify::Suite::all}};
  const auto report = verify::run_suite(suites.at(opt.suite), opt.max_n, opt.max_d);
  out << verify::format_report(report);
  return report.passed() ? kExitOk : kExitFailure;
}

int run_count(const Options& opt, std::ostream& out) {
  if (opt.max_n < 1) throw InputError("--max-n must be positive");
  if (opt.max_d < 0) throw InputError("--max-d must be nonnegative");
  const auto table = oracle::build_count_table(opt.max_n, opt.max_d);
  out << table.to_markdown();
  if (!opt.csv.empty()) {
    std::ofstream file(opt.csv);
    file << table.to_csv();
    if (!file) throw ResourceError("cannot write " + opt.csv);
  }
  bool agree = true;
  for (const auto& row : table.rows()) {
    if (row.cls.ends_with("-oracle")) continue;
    const auto twin = table.find(row.cls + "-oracle", row.n, row.d);
    agree = agree && twin && *twin == row.count;
  }
  return agree ? kExitOk : kExitFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Enumerate, map and verify d-ascent sequences, difference permutations, "
               "factorial posets and Fishburn matrices",
               "fishlab"};
  app.require_subcommand(1, 1);
  const auto format_check = CLI::IsMember({"json", "lines"});

  auto* enumerate = app.add_subcommand("enumerate", "List every object of a class");
  enumerate->add_option("--class", opt.cls, "Object class")
      ->required()
      ->check(CLI::IsMember({"seq", "perm", "poset", "fishburn", "colres"}));
  enumerate->add_option("--n", opt.n, "Length, size or weight")->required();
  enumerate->add_option("--d", opt.d, "Difference parameter (ignored for matrices)");
  enumerate->add_option("--format", opt.format, "Output format")->check(format_check);
  enumerate->add_flag("--with-covers", opt.with_covers, "Add Hasse covers to JSON posets");

  auto* map = app.add_subcommand("map", "Apply a bijection to objects read from stdin");
  map->add_option("--bijection", opt.bijection, "Bijection to apply")
      ->required()
      ->check(CLI::IsMember(
          {"phi", "phi-inv", "psi", "psi-inv", "theta", "theta-inv", "theta-bar"}));
  map->add_option("--d", opt.d, "Difference parameter");
  map->add_option("--format", opt.format, "Output format")->check(format_check);
  map->add_flag("--with-covers", opt.with_covers, "Add Hasse covers to JSON posets");

  auto* stats = app.add_subcommand("stats", "Print statistics of objects read from stdin");
  stats->add_option("--class", opt.cls, "Object class")
      ->required()
      ->check(CLI::IsMember({"seq", "perm", "poset", "matrix"}));
  stats->add_option("--d", opt.d, "Difference parameter");

  auto* verify_cmd = app.add_subcommand("verify", "Check every property exhaustively");
  verify_cmd->add_option("--suite", opt.suite, "Property suite")
      ->required()
      ->check(CLI::IsMember({"perm", "poset", "matrix", "counts", "all"}));
  verify_cmd->add_option("--max-n", opt.max_n, "Largest size")->required();
  verify_cmd->add_option("--max-d", opt.max_d, "Largest difference parameter")->capture_default_str();

  auto* count = app.add_subcommand("count", "Tabulate class sizes from both enumerators");
  count->add_option("--max-n", opt.max_n, "Largest size")->required();
  count->add_option("--max-d", opt.max_d, "Largest difference parameter")->required();
  count->add_option("--csv", opt.csv, "Also write the table as CSV");

  std::vector<const char*> argv{"fishlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(opt, out);
    if (map->parsed()) return run_map(opt, in, out, err);
    if (stats->parsed()) return run_stats(opt, in, out, err);
    if (verify_cmd->parsed()) return run_verify(opt, out);
    return run_count(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace fishlab::cli
