// io.cpp
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

#include "strfun/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "strfun/error.hpp"

namespace strfun::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(Errc::kParseError, "field '" + path + "': " + what);
}

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string join(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

const Json& field(const Json& obj, std::string_view key, const std::string& path) {
  if (!obj.is_object()) fail(path.empty() ? "$" : path, "expected an object");
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) fail(join(path, key), "missing");
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

template <class S>
std::vector<S> vector_from_json(const Json& j, const std::string& path, std::size_t expected) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != expected) {
    fail(path, "expected " + std::to_string(expected) + " entries, found " + std::to_string(j.size()));
  }
  std::vector<S> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar_from_json<S>(j[i], join(path, i)));
  return out;
}

template <class S>
Matrix<S> matrix_from_json(const Json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.size() != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  }
  Matrix<S> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = vector_from_json<S>(j[i], join(path, i), cols);
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

template <class S>
Json vector_to_json(const std::vector<S>& v) {
  Json out = Json::array();
  for (const S& x : v) out.push_back(scalar_to_json(x));
  return out;
}

template <class S>
Json matrix_to_json(const Matrix<S>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const S& x : m.row(i)) row.push_back(scalar_to_json(x));
    out.push_back(std::move(row));
  }
  return out;
}

// One d x d matrix per symbol, keyed by symbol.
template <class S>
std::vector<Matrix<S>> matrices_from_json(const Json& j, const std::string& path, const Alphabet& alphabet,
                                          std::size_t d) {
  if (!j.is_object()) fail(path, "expected an object keyed by symbol");
  std::vector<Matrix<S>> out;
  for (const auto& symbol : alphabet.symbols()) {
    out.push_back(matrix_from_json<S>(field(j, symbol, path), join(path, symbol), d, d));
  }
  if (j.size() != alphabet.size()) fail(path, "has keys that are not alphabet symbols");
  return out;
}

template <class S>
Json matrices_to_json(const std::vector<Matrix<S>>& ms, const Alphabet& alphabet) {
  Json out = Json::object();
  for (std::size_t a = 0; a < ms.size(); ++a) out[alphabet.symbol(static_cast<Letter>(a))] = matrix_to_json(ms[a]);
  return out;
}

void check_type(const Json& j, std::string_view expected) {
  if (j.is_object() && j.contains("type")) {
    const Json& t = j["type"];
    if (!t.is_string() || t.get<std::string>() != expected) {
      fail("type", "expected \"" + std::string(expected) + "\"");
    }
  }
}

Json words_to_json(const std::vector<Word>& words, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(alphabet.format(w));
  return out;
}

Json fact_to_json(const MembershipFact& f) {
  return Json{{"in_image", f.in_image}, {"evidence", std::string(evidence_name(f.evidence))}};
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_word(const Word& w, const Alphabet& alphabet) {
  return w.empty() ? std::string("ε") : csv_cell(alphabet.format(w));
}

}  // namespace

Json read_json(std::istream& in, std::string_view source) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::kParseError, std::string(source) + ": malformed JSON: " + e.what());
  }
}

template <>
Rational scalar_from_json<Rational>(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    // The shortest round-trip text of a JSON float is the decimal in the file.
    if (j.is_number_float()) return parse_rational(j.dump());
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "expected a number or a rational string");
}

template <>
double scalar_from_json<double>(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>()).get_d();
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a number or a rational string");
}

template <>
Json scalar_to_json<Rational>(const Rational& v) {
  return format_rational(v);
}

template <>
Json scalar_to_json<double>(const double& v) {
  return v;
}

Alphabet alphabet_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of symbols");
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(join(path, i), "expected a string");
    symbols.push_back(j[i].get<std::string>());
  }
  try {
    return Alphabet(std::move(symbols));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json alphabet_to_json(const Alphabet& alphabet) { return alphabet.symbols(); }

Json mode_to_json(const ArithmeticMode& mode) {
  Json out{{"mode", std::string(mode.name())}};
  if (!mode.is_exact()) out["tolerance"] = mode.tolerance;
  return out;
}

template <class S>
DistributionTable<S> table_from_json(const Json& j, const ArithmeticMode& mode) {
  const Alphabet alphabet = alphabet_from_json(field(j, "alphabet", ""), "alphabet");
  const std::size_t n = size_from_json(field(j, "n", ""), "n");
  TableKind kind = TableKind::kRaw;
  if (j.contains("kind")) {
    const Json& k = j["kind"];
    if (!k.is_string()) fail("kind", "expected a string");
    try {
      kind = parse_table_kind(k.get<std::string>());
    } catch (const Error& e) {
      fail("kind", e.what());
    }
  }
  const Json& values = field(j, "values", "");
  const std::size_t count = word_count(alphabet.size(), n);
  std::vector<S> out(count, S(0));
  if (values.is_array()) {
    out = vector_from_json<S>(values, "values", count);
  } else if (values.is_object()) {
    std::vector<bool> seen(count, false);
    for (const auto& [key, value] : values.items()) {
      const std::string path = join("values", key);
      Word w;
      try {
        w = alphabet.parse(key);
      } catch (const Error& e) {
        fail(path, e.what());
      }
      if (w.size() != n) fail(path, "word length " + std::to_string(w.size()) + " differs from n");
      const std::size_t idx = lex_index(w, alphabet.size());
      if (seen[idx]) fail(path, "word listed twice");
      seen[idx] = true;
      out[idx] = scalar_from_json<S>(value, path);
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (!seen[i]) {
        fail("values", "missing word '" + alphabet.format(words_of_length(alphabet, n)[i]) + "'");
      }
    }
  } else {
    fail("values", "expected an object keyed by word");
  }
  try {
    return DistributionTable<S>(alphabet, n, std::move(out), kind, mode);
  } catch (const Error& e) {
    if (e.code() == Errc::kInvalidTable) fail("values", e.what());
    throw;
  }
}

template <class S>
Json table_to_json(const DistributionTable<S>& table) {
  Json values = Json::object();
  const auto words = words_of_length(table.alphabet(), table.length());
  const auto vals = table.values();
  for (std::size_t i = 0; i < words.size(); ++i) values[table.alphabet().format(words[i])] = scalar_to_json(vals[i]);
  return Json{{"alphabet", alphabet_to_json(table.alphabet())},
              {"n", table.length()},
              {"kind", std::string(table_kind_name(table.kind()))},
              {"values", std::move(values)}};
}

ModelFile model_file_type(const Json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  if (!j.contains("type")) return ModelFile::kRealization;
  const Json& t = j["type"];
  if (!t.is_string()) fail("type", "expected a string");
  const std::string s = t.get<std::string>();
  if (s == "hmm") return ModelFile::kHmm;
  if (s == "markov") return ModelFile::kMarkov;
  if (s == "trace") return ModelFile::kTrace;
  if (s == "realization") return ModelFile::kRealization;
  fail("type", "unknown model type '" + s + "'");
}

template <class S>
QuasiRealization<S> realization_from_json(const Json& j) {
  check_type(j, "realization");
  QuasiRealization<S> r;
  r.alphabet = alphabet_from_json(field(j, "alphabet", ""), "alphabet");
  const std::size_t d = size_from_json(field(j, "d", ""), "d");
  r.T = matrices_from_json<S>(field(j, "T", ""), "T", r.alphabet, d);
  r.x = vector_from_json<S>(field(j, "x", ""), "x", d);
  r.y = vector_from_json<S>(field(j, "y", ""), "y", d);
  if (j.contains("gussf")) {
    if (!j["gussf"].is_boolean()) fail("gussf", "expected a boolean");
  }
  r.gussf = gussf_holds(r);
  return r;
}

template <class S>
Json realization_to_json(const QuasiRealization<S>& r) {
  return Json{{"type", "realization"},
              {"alphabet", alphabet_to_json(r.alphabet)},
              {"d", r.dim()},
              {"T", matrices_to_json(r.T, r.alphabet)},
              {"x", vector_to_json(r.x)},
              {"y", vector_to_json(r.y)},
              {"gussf", r.gussf}};
}

template <class S>
HmmParams<S> hmm_from_json(const Json& j) {
  check_type(j, "hmm");
  HmmParams<S> h;
  h.alphabet = alphabet_from_json(field(j, "alphabet", ""), "alphabet");
  const Json& pi = field(j, "pi", "");
  if (!pi.is_array()) fail("pi", "expected an array");
  const std::size_t l = pi.size();
  h.pi = vector_from_json<S>(pi, "pi", l);
  h.A = matrix_from_json<S>(field(j, "A", ""), "A", l, l);
  h.E = matrix_from_json<S>(field(j, "E", ""), "E", l, h.alphabet.size());
  try {
    h.validate();
  } catch (const Error& e) {
    fail("$", e.what());
  }
  return h;
}

template <class S>
Json hmm_to_json(const HmmParams<S>& h) {
  return Json{{"type", "hmm"},
              {"alphabet", alphabet_to_json(h.alphabet)},
              {"A", matrix_to_json(h.A)},
              {"E", matrix_to_json(h.E)},
              {"pi", vector_to_json(h.pi)}};
}

template <class S>
MarkovParams<S> markov_from_json(const Json& j) {
  check_type(j, "markov");
  MarkovParams<S> m;
  m.alphabet = alphabet_from_json(field(j, "alphabet", ""), "alphabet");
  const std::size_t k = m.alphabet.size();
  m.pi = vector_from_json<S>(field(j, "pi", ""), "pi", k);
  m.M = matrix_from_json<S>(field(j, "M", ""), "M", k, k);
  try {
    m.validate();
  } catch (const Error& e) {
    fail("$", e.what());
  }
  return m;
}

template <class S>
Json markov_to_json(const MarkovParams<S>& m) {
  return Json{{"type", "markov"},
              {"alphabet", alphabet_to_json(m.alphabet)},
              {"pi", vector_to_json(m.pi)},
              {"M", matrix_to_json(m.M)}};
}

template <class S>
TraceModel<S> trace_from_json(const Json& j) {
  check_type(j, "trace");
  TraceModel<S> t;
  t.alphabet = alphabet_from_json(field(j, "alphabet", ""), "alphabet");
  const std::size_t r = size_from_json(field(j, "r", ""), "r");
  if (r == 0) fail("r", "order must be at least 1");
  t.X = matrices_from_json<S>(field(j, "X", ""), "X", t.alphabet, r);
  return t;
}

template <class S>
Json trace_to_json(const TraceModel<S>& t) {
  return Json{{"type", "trace"},
              {"alphabet", alphabet_to_json(t.alphabet)},
              {"r", t.order()},
              {"X", matrices_to_json(t.X, t.alphabet)}};
}

Json rank_report_to_json(const RankReport& r, const Alphabet& alphabet) {
  Json out{{"rank", r.rank},
           {"pivot_rows", words_to_json(r.pivot_rows, alphabet)},
           {"pivot_cols", words_to_json(r.pivot_cols, alphabet)}};
  out.update(mode_to_json(r.mode));
  return out;
}

Json conditions_to_json(const GeneratorConditions& c, const Alphabet& alphabet) {
  Json out{{"d", c.d},
           {"n", c.n},
           {"rank_short", c.rank_short},
           {"rank_half_rows", c.rank_half_rows},
           {"rank_half_cols", c.rank_half_cols},
           {"condition_a", c.condition_a},
           {"condition_b", c.condition_b}};
  if (c.offending_word) {
    out["offending_word"] = alphabet.format(*c.offending_word);
    out["offending_axis"] = c.offending_axis;
  }
  out.update(mode_to_json(c.short_report.mode));
  return out;
}

template <class S>
Json membership_to_json(const MembershipReport<S>& r, const Alphabet& alphabet) {
  Json out{{"model", std::string(model_kind_name(r.model))}, {"d", r.d}, {"n", r.n}, {"passed", r.passed}};
  if (r.model == ModelKind::kFiniteDim) {
    out["condition_a"] = Json{{"rank_found", r.condition_a.rank_found},
                              {"bound", r.condition_a.bound},
                              {"pass", r.condition_a.pass}};
    Json b{{"rank_half_rows", r.condition_b.rank_half_rows},
           {"rank_half_cols", r.condition_b.rank_half_cols},
           {"rank_short", r.condition_b.rank_short},
           {"pass", r.condition_b.pass}};
    if (r.condition_b.offending_word) {
      b["offending_word"] = alphabet.format(*r.condition_b.offending_word);
      b["offending_axis"] = r.condition_b.offending_axis;
    }
    out["condition_b"] = std::move(b);
  } else {
    out["max_column_family_rank"] = r.condition_a.rank_found;
    out["membership_guaranteed"] = r.membership_guaranteed;
    out["verdict"] = !r.passed                   ? "determinants-fail"
                     : r.membership_guaranteed ? "member"
                                               : "determinants-pass (membership not guaranteed)";
  }
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(Json{{"row_words", words_to_json(w.row_words, alphabet)},
                             {"col_words", words_to_json(w.col_words, alphabet)},
                             {"det_value", scalar_to_json(w.det_value)}});
  }
  out["witnesses"] = std::move(witnesses);
  out.update(mode_to_json(r.mode));
  return out;
}

Json lift_report_to_json(const LiftReport& r, const Alphabet& alphabet) {
  Json shifts = Json::object();
  for (std::size_t a = 0; a < r.shifts.size(); ++a) {
    shifts[alphabet.symbol(static_cast<Letter>(a))] = fact_to_json(r.shifts[a]);
  }
  Json out{{"n", r.n},
           {"d_or_l", r.d_or_l},
           {"whole_in_image", r.whole_in_image},
           {"all_shifts_in_image", r.all_shifts_in_image},
           {"marginal_in_image", r.marginal_in_image},
           {"equivalence_holds", r.equivalence_holds},
           {"whole", fact_to_json(r.whole)},
           {"shifts", std::move(shifts)},
           {"marginal", fact_to_json(r.marginal)}};
  out.update(mode_to_json(r.mode));
  return out;
}

Json slc_result_to_json(const SlcProbeResult& r, const Alphabet& alphabet) {
  Json out{{"holds", r.holds}, {"agree_short", r.agree_short}, {"agree_horizon", r.agree_horizon}};
  out["distinguishing_word"] = r.distinguishing_word ? Json(alphabet.format(*r.distinguishing_word)) : Json();
  return out;
}

Json probe_to_json(const ConjectureProbe& p) {
  return Json{{"max_split_rank", p.max_split_rank},
              {"minors_vanish", p.minors_vanish},
              {"conditions_pass", p.conditions_pass},
              {"hit", p.hit}};
}

Json classify_to_json(const ClassifyReport& r) {
  return Json{{"classification", std::string(classification_name(r.classification))},
              {"nonnegative", r.nonnegative},
              {"total_is_one", r.total_is_one},
              {"finite", r.finite},
              {"marginal_consistent", r.marginal_consistent},
              {"note", r.note}};
}

template <class S>
void write_hankel_csv(std::ostream& out, const PartialHankel<S>& h) {
  out << "suffix\\prefix";
  for (const Word& w : h.col_words) out << ',' << csv_word(w, h.alphabet);
  out << '\n';
  for (std::size_t i = 0; i < h.row_words.size(); ++i) {
    out << csv_word(h.row_words[i], h.alphabet);
    for (std::size_t j = 0; j < h.col_words.size(); ++j) {
      const Json cell = scalar_to_json(h.entries(i, j));
      out << ',' << (cell.is_string() ? cell.get<std::string>() : cell.dump());
    }
    out << '\n';
  }
}

#define STRFUN_INSTANTIATE_IO(S)                                                    \
  template DistributionTable<S> table_from_json(const Json&, const ArithmeticMode&); \
  template Json table_to_json(const DistributionTable<S>&);                         \
  template QuasiRealization<S> realization_from_json(const Json&);                  \
  template Json realization_to_json(const QuasiRealization<S>&);                    \
  template HmmParams<S> hmm_from_json(const Json&);                                 \
  template Json hmm_to_json(const HmmParams<S>&);                                   \
  template MarkovParams<S> markov_from_json(const Json&);                           \
  template Json markov_to_json(const MarkovParams<S>&);                             \
  template TraceModel<S> trace_from_json(const Json&);                              \
  template Json trace_to_json(const TraceModel<S>&);                                \
  template Json membership_to_json(const MembershipReport<S>&, const Alphabet&);    \
  template void write_hankel_csv(std::ostream&, const PartialHankel<S>&);

STRFUN_INSTANTIATE_IO(Rational)
STRFUN_INSTANTIATE_IO(double)

}  // namespace strfun::io
