/*
   Copyright 2026 linpoly contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINPOLY_REPORT_HPP
#define LINPOLY_REPORT_HPP

#include <json.hpp>

#include "linpoly/linearize.hpp"
#include "linpoly/rootspace.hpp"
#include "linpoly/symmod.hpp"
#include "linpoly/textio.hpp"

namespace linpoly {

inline constexpr const char* kVersion = "0.1.0";

using ojson = nlohmann::ordered_json;

/// Envelope for every CLI emission: command, echoed inputs, payload,
/// version, seed and timing.  Outputs are deterministic for a fixed seed;
/// timing is informational only.
struct Report {
    std::string command;
    ojson inputs = ojson::object();
    ojson outputs = ojson::object();
    std::string version = kVersion;
    u64 seed = kDefaultSeed;
    double timing_ms = 0.0;

    ojson to_json() const;
};

ojson linpoly_json(const LinPolyF& L);
ojson linpoly_json(const LinPolyR& L);
ojson matrix_json(const Matrix<FFElem>& M);

ojson linearization_json(const LinearizationReport<FFElem>& r);
ojson linearization_json(const LinearizationReport<RatFun>& r);
ojson affine_json(const AffineMultipleReport<FFElem>& r);
ojson affine_json(const AffineMultipleReport<RatFun>& r);
ojson evalmap_json(const EvalMapReport& r);
ojson pairdep_json(const PairDependenceReport& r);
ojson directsum_json(const DirectSumReport& r);
ojson symwitness_json(const SymWitnessReport& r);

}  // namespace linpoly

#endif
