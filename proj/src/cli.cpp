// cli.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "strfun/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "strfun/error.hpp"
#include "strfun/hankel.hpp"
#include "strfun/invariants.hpp"
#include "strfun/io.hpp"
#include "strfun/lifting.hpp"
#include "strfun/models.hpp"
#include "strfun/realization.hpp"

namespace strfun::cli {

namespace {

using io::Json;

struct Options {
  std::string mode = "rational";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::size_t limit = kDefaultWitnessLimit;
  std::string input = "-";
  std::string output;

  // gen
  std::string gen_model = "hmm";
  std::size_t states = 2;
  std::size_t alphabet = 2;
  std::size_t order = 2;
  std::size_t dim = 2;
  bool gussf = false;
  std::size_t n = 5;

  // tabulate
  std::string model_file;

  // hankel, rank
  std::size_t rows = 1;
  std::size_t cols = 1;

  // realize, check-gnd, lift-check, slc-probe
  std::size_t d = 1;
  bool probe = false;
  std::string lift_model = "gnd";
  std::string params_file;
  std::string a_file;
  std::string b_file;
  std::size_t horizon = 6;
};

// Anything that should end the run with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Session {
 public:
  explicit Session(std::istream& in) : in_(in) {}

  Json load(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw InputError("standard input can only be read once");
      stdin_used_ = true;
      return io::read_json(in_, "<stdin>");
    }
    if (!std::filesystem::exists(path)) throw InputError(path + ": no such file");
    std::ifstream file(path);
    if (!file) throw InputError(path + ": cannot open");
    return io::read_json(file, path);
  }

  // Runs `parse` on a loaded document, naming the file in any error.
  template <class F>
  auto parse(const std::string& path, F&& parse) {
    const Json j = load(path);
    try {
      return parse(j);
    } catch (const Error& e) {
      throw InputError(display(path) + ": " + e.what());
    }
  }

  static std::string display(const std::string& path) { return path == "-" ? "<stdin>" : path; }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

void write_output(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty() || opt.output == "-") {
    out << text;
    return;
  }
  const std::filesystem::path target(opt.output);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError(opt.output + ": cannot write");
    file << text;
    if (!file.flush()) throw InputError(opt.output + ": write failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError(opt.output + ": " + ec.message());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <class S>
class Runner {
 public:
  Runner(const Options& opt, std::istream& in, std::ostream& out)
      : opt_(opt), mode_(make_mode(opt)), session_(in), out_(out) {}

  int gen() {
    const Alphabet alphabet = Alphabet::of_size(opt_.alphabet);
    Json j;
    if (opt_.gen_model == "hmm") {
      j = io::hmm_to_json(convert_hmm<S>(random_hmm(opt_.states, alphabet, opt_.seed)));
    } else if (opt_.gen_model == "markov") {
      j = io::markov_to_json(convert_markov<S>(random_markov(alphabet, opt_.seed)));
    } else if (opt_.gen_model == "trace") {
      j = io::trace_to_json(convert_trace<S>(random_trace_model(opt_.order, alphabet, opt_.seed)));
    } else if (opt_.gen_model == "realization") {
      j = io::realization_to_json(
          convert_realization<S>(random_realization(opt_.dim, alphabet, opt_.seed, opt_.gussf)));
    } else {
      j = io::table_to_json(convert_table<S>(random_stochastic_table(alphabet, opt_.n, opt_.seed)));
      j["kind"] = "stochastic";
    }
    emit(j);
    return kExitOk;
  }

  int tabulate() {
    TableKind kind = TableKind::kRaw;
    const QuasiRealization<S> r = session_.parse(opt_.model_file, [&](const Json& j) {
      switch (io::model_file_type(j)) {
        case io::ModelFile::kHmm: {
          const auto h = io::hmm_from_json<S>(j);
          kind = h.constrained(mode_) ? TableKind::kStochastic : TableKind::kUnconstrained;
          return hmm_to_realization(h);
        }
        case io::ModelFile::kMarkov:
          kind = TableKind::kStochastic;
          return markov_realization(io::markov_from_json<S>(j));
        case io::ModelFile::kTrace:
          return trace_to_realization(io::trace_from_json<S>(j));
        case io::ModelFile::kRealization:
          break;
      }
      return io::realization_from_json<S>(j);
    });
    const auto raw = realization_to_table(r, opt_.n);
    const auto values = raw.values();
    const DistributionTable<S> table(raw.alphabet(), raw.length(), std::vector<S>(values.begin(), values.end()),
                                     kind, mode_);
    emit(io::table_to_json(table));
    return kExitOk;
  }

  int hankel() {
    const auto table = load_table(opt_.input);
    std::ostringstream csv;
    io::write_hankel_csv(csv, build_partial_hankel(table, opt_.rows, opt_.cols));
    write_output(opt_, csv.str(), out_);
    return kExitOk;
  }

  int rank_cmd() {
    const auto table = load_table(opt_.input);
    const auto h = build_partial_hankel(table, opt_.rows, opt_.cols);
    Json j = io::rank_report_to_json(rank(h, mode_), table.alphabet());
    j["N"] = opt_.rows;
    j["M"] = opt_.cols;
    emit(j);
    return kExitOk;
  }

  int realize() {
    const auto table = load_table(opt_.input);
    const GeneratorConditions c = check_generator_conditions(table, opt_.d, mode_);
    if (!c.passed()) {
      Json j{{"error", "table is not in the image of the dimension-" + std::to_string(opt_.d) + " model"}};
      j["conditions"] = io::conditions_to_json(c, table.alphabet());
      emit(j);
      return kExitCheckFailed;
    }
    emit(io::realization_to_json(extract_realization(table, opt_.d, mode_)));
    return kExitOk;
  }

  int check_gnd() {
    const auto table = load_table(opt_.input);
    const auto report = check_membership_gnd(table, opt_.d, mode_, opt_.limit);
    Json j = io::membership_to_json(report, table.alphabet());
    if (opt_.probe) j["conjecture_probe"] = io::probe_to_json(probe_conjecture(table, opt_.d, mode_));
    emit(j);
    return report.passed ? kExitOk : kExitCheckFailed;
  }

  int check_markov() {
    const auto table = load_table(opt_.input);
    const auto report = check_markov_invariants(table, mode_, opt_.limit);
    emit(io::membership_to_json(report, table.alphabet()));
    return report.passed ? kExitOk : kExitCheckFailed;
  }

  int lift_check() {
    const auto table = load_table(opt_.input);
    LiftReport report;
    if (opt_.lift_model == "gnd") {
      if (!opt_.params_file.empty()) throw InputError("--params only applies to --model hmm");
      report = check_lift_finite(table, opt_.d, mode_);
    } else {
      std::optional<HmmParams<S>> params;
      if (!opt_.params_file.empty()) {
        params = session_.parse(opt_.params_file, [](const Json& j) { return io::hmm_from_json<S>(j); });
      }
      report = check_lift_hmm(table, opt_.d, params, mode_);
    }
    Json j{{"model", opt_.lift_model}};
    j.update(io::lift_report_to_json(report, table.alphabet()));
    emit(j);
    return report.equivalence_holds ? kExitOk : kExitCheckFailed;
  }

  int slc() {
    const auto a = load_realization(opt_.a_file);
    const auto b = load_realization(opt_.b_file);
    const auto result = slc_probe(a, b, opt_.d, opt_.horizon, mode_);
    Json j{{"d", opt_.d}, {"horizon", opt_.horizon}};
    j.update(io::slc_result_to_json(result, a.alphabet));
    j.update(io::mode_to_json(mode_));
    emit(j);
    return result.holds ? kExitOk : kExitCheckFailed;
  }

 private:
  static ArithmeticMode make_mode(const Options& opt) {
    return opt.mode == "float" ? ArithmeticMode::floating(opt.tol) : ArithmeticMode::exact();
  }

  static QuasiRealization<S> markov_realization(const MarkovParams<S>& m) {
    // A Markov chain is the HMM whose state is the last symbol emitted.
    HmmParams<S> h;
    h.alphabet = m.alphabet;
    h.A = m.M;
    h.E = Matrix<S>::identity(m.alphabet.size());
    h.pi = m.pi;
    return hmm_to_realization(h);
  }

  DistributionTable<S> load_table(const std::string& path) {
    return session_.parse(path, [&](const Json& j) { return io::table_from_json<S>(j, mode_); });
  }

  QuasiRealization<S> load_realization(const std::string& path) {
    return session_.parse(path, [&](const Json& j) {
      switch (io::model_file_type(j)) {
        case io::ModelFile::kHmm:
          return hmm_to_realization(io::hmm_from_json<S>(j));
        case io::ModelFile::kMarkov:
          return markov_realization(io::markov_from_json<S>(j));
        case io::ModelFile::kTrace:
          return trace_to_realization(io::trace_from_json<S>(j));
        case io::ModelFile::kRealization:
          break;
      }
      return io::realization_from_json<S>(j);
    });
  }

  void emit(const Json& j) { write_output(opt_, dump(j), out_); }

  const Options& opt_;
  ArithmeticMode mode_;
  Session session_;
  std::ostream& out_;
};

template <class S>
int dispatch(const std::string& command, const Options& opt, std::istream& in, std::ostream& out) {
  Runner<S> runner(opt, in, out);
  if (command == "gen") return runner.gen();
  if (command == "tabulate") return runner.tabulate();
  if (command == "hankel") return runner.hankel();
  if (command == "rank") return runner.rank_cmd();
  if (command == "realize") return runner.realize();
  if (command == "check-gnd") return runner.check_gnd();
  if (command == "check-markov") return runner.check_markov();
  if (command == "lift-check") return runner.lift_check();
  return runner.slc();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"String functions: Hankel ranks, realizations and model invariants", "strfun"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--mode", opt.mode, "Arithmetic: exact rationals or floats")
      ->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--tol", opt.tol, "Relative zero tolerance in float mode")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Generator seed");
  app.add_option("--limit", opt.limit, "Maximum number of witnesses to report");
  app.add_option("--input,-i", opt.input, "Distribution file, '-' for standard input");
  app.add_option("--output,-o", opt.output, "Write the report here instead of standard output");

  auto* gen = app.add_subcommand("gen", "Emit a seeded random model or table");
  gen->add_option("--model", opt.gen_model, "hmm, markov, trace, realization or table")
      ->check(CLI::IsMember({"hmm", "markov", "trace", "realization", "table"}));
  gen->add_option("--states", opt.states, "Hidden states (hmm)")->check(CLI::PositiveNumber);
  gen->add_option("--alphabet", opt.alphabet, "Alphabet size")->check(CLI::Range(1, 36));
  gen->add_option("--order", opt.order, "Matrix order (trace)")->check(CLI::PositiveNumber);
  gen->add_option("--dim", opt.dim, "Dimension (realization)")->check(CLI::PositiveNumber);
  gen->add_flag("--gussf", opt.gussf, "Make the realization satisfy y^T sum_a T_a = y^T");
  gen->add_option("--n", opt.n, "Word length (table)");

  auto* tab = app.add_subcommand("tabulate", "Tabulate a model file over Sigma^n");
  tab->add_option("--model", opt.model_file, "Model file, '-' for standard input")->required();
  tab->add_option("--n", opt.n, "Word length")->required();

  auto* hank = app.add_subcommand("hankel", "Print the Hankel minor P_{N,M} as CSV");
  hank->add_option("--N", opt.rows, "Maximum suffix (row) length")->required();
  hank->add_option("--M", opt.cols, "Maximum prefix (column) length")->required();

  auto* rnk = app.add_subcommand("rank", "Rank of the Hankel minor P_{N,M}");
  rnk->add_option("--N", opt.rows, "Maximum suffix (row) length")->required();
  rnk->add_option("--M", opt.cols, "Maximum prefix (column) length")->required();

  auto* real = app.add_subcommand("realize", "Extract a realization of dimension <= d");
  real->add_option("--d", opt.d, "Dimension bound")->required()->check(CLI::PositiveNumber);

  auto* gnd = app.add_subcommand("check-gnd", "Membership in the dimension-d model");
  gnd->add_option("--d", opt.d, "Dimension bound")->required()->check(CLI::PositiveNumber);
  gnd->add_flag("--probe-conjecture", opt.probe, "Also compare all-split minors with the rank conditions");

  app.add_subcommand("check-markov", "Markov determinant invariants");

  auto* lift = app.add_subcommand("lift-check", "Lifting equivalence at length n+1");
  lift->add_option("--model", opt.lift_model, "gnd or hmm")->check(CLI::IsMember({"gnd", "hmm"}));
  lift->add_option("--d", opt.d, "Dimension bound or number of hidden states")
      ->required()
      ->check(CLI::PositiveNumber);
  lift->add_option("--params", opt.params_file, "HMM parameter file certifying membership");

  auto* slc = app.add_subcommand("slc-probe", "Compare two generators up to a horizon");
  slc->add_option("--a", opt.a_file, "First model file")->required();
  slc->add_option("--b", opt.b_file, "Second model file")->required();
  slc->add_option("--d", opt.d, "Dimension bound")->required()->check(CLI::PositiveNumber);
  slc->add_option("--horizon", opt.horizon, "Word length compared after the short agreement");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return opt.mode == "float" ? dispatch<double>(command, opt, in, out)
                               : dispatch<Rational>(command, opt, in, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace strfun::cli
