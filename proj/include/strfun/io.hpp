// io.hpp
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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "strfun/hankel.hpp"
#include "strfun/invariants.hpp"
#include "strfun/lifting.hpp"
#include "strfun/models.hpp"
#include "strfun/realization.hpp"
#include "strfun/table.hpp"

namespace strfun::io {

using Json = nlohmann::ordered_json;

// Parses a whole JSON document; syntax errors become ParseError naming `source`.
Json read_json(std::istream& in, std::string_view source);

// Scalars are written as "num/den" strings in rational mode and as numbers
// in float mode. Either form is accepted on input.
template <class S>
S scalar_from_json(const Json& j, const std::string& path);
template <class S>
Json scalar_to_json(const S& v);
template <>
Rational scalar_from_json<Rational>(const Json& j, const std::string& path);
template <>
double scalar_from_json<double>(const Json& j, const std::string& path);
template <>
Json scalar_to_json<Rational>(const Rational& v);
template <>
Json scalar_to_json<double>(const double& v);

Alphabet alphabet_from_json(const Json& j, const std::string& path);
Json alphabet_to_json(const Alphabet& alphabet);

Json mode_to_json(const ArithmeticMode& mode);

// {"alphabet": [...], "n": 3, "kind": "stochastic", "values": {"010": "1/8", ...}}
// with every word of Sigma^n listed exactly once.
template <class S>
DistributionTable<S> table_from_json(const Json& j, const ArithmeticMode& mode);
template <class S>
Json table_to_json(const DistributionTable<S>& table);

enum class ModelFile { kHmm, kMarkov, kTrace, kRealization };
// Reads the "type" field; a file without one is taken to be a realization.
ModelFile model_file_type(const Json& j);

template <class S>
QuasiRealization<S> realization_from_json(const Json& j);
template <class S>
Json realization_to_json(const QuasiRealization<S>& r);

template <class S>
HmmParams<S> hmm_from_json(const Json& j);
template <class S>
Json hmm_to_json(const HmmParams<S>& h);

template <class S>
MarkovParams<S> markov_from_json(const Json& j);
template <class S>
Json markov_to_json(const MarkovParams<S>& m);

template <class S>
TraceModel<S> trace_from_json(const Json& j);
template <class S>
Json trace_to_json(const TraceModel<S>& t);

Json rank_report_to_json(const RankReport& r, const Alphabet& alphabet);
Json conditions_to_json(const GeneratorConditions& c, const Alphabet& alphabet);
template <class S>
Json membership_to_json(const MembershipReport<S>& r, const Alphabet& alphabet);
Json lift_report_to_json(const LiftReport& r, const Alphabet& alphabet);
Json slc_result_to_json(const SlcProbeResult& r, const Alphabet& alphabet);
Json probe_to_json(const ConjectureProbe& p);
Json classify_to_json(const ClassifyReport& r);

// Header row of column (prefix) words, then one row per suffix word. The
// empty word is written as "ε".
template <class S>
void write_hankel_csv(std::ostream& out, const PartialHankel<S>& h);

}  // namespace strfun::io
