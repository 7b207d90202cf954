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

#include "linpoly/report.hpp"

namespace linpoly {

ojson Report::to_json() const {
    ojson j;
    j["command"] = command;
    j["version"] = version;
    j["seed"] = seed;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["timing_ms"] = timing_ms;
    return j;
}

namespace {

template <class K>
ojson linpoly_json_impl(const LinPoly<K>& L, std::string (*coeff_text)(const K&)) {
    ojson j;
    j["q"] = L.q();
    j["qdeg"] = L.qdeg();
    ojson coeffs = ojson::array();
    for (const K& c : L.coeffs()) coeffs.push_back(coeff_text(c));
    j["coeffs"] = coeffs;
    j["text"] = poly_to_text(lin_decode(L));
    return j;
}

std::string ff_text(const FFElem& a) { return elem_to_text(a); }
std::string rf_text(const RatFun& a) { return ratfun_to_text(a); }

template <class K>
ojson linearization_json_impl(const LinearizationReport<K>& r, std::string (*coeff_text)(const K&)) {
    ojson j;
    j["f"] = poly_to_text(r.f);
    j["q"] = r.q;
    j["d"] = r.d;
    j["L"] = linpoly_json_impl(r.lin, coeff_text);
    ojson dep = ojson::array();
    for (const K& c : r.dependence) dep.push_back(coeff_text(c));
    j["dependence"] = dep;
    j["residues_computed"] = r.residues_computed;
    return j;
}

template <class K>
ojson affine_json_impl(const AffineMultipleReport<K>& r, std::string (*coeff_text)(const K&)) {
    ojson j;
    j["f"] = poly_to_text(r.f);
    j["q"] = r.q;
    j["dprime"] = r.dprime;
    j["L"] = linpoly_json_impl(r.lin, coeff_text);
    j["constant"] = coeff_text(r.constant);
    return j;
}

}  // namespace

ojson linpoly_json(const LinPolyF& L) { return linpoly_json_impl<FFElem>(L, ff_text); }
ojson linpoly_json(const LinPolyR& L) { return linpoly_json_impl<RatFun>(L, rf_text); }

ojson matrix_json(const Matrix<FFElem>& M) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(elem_to_text(M.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ojson linearization_json(const LinearizationReport<FFElem>& r) {
    return linearization_json_impl<FFElem>(r, ff_text);
}
ojson linearization_json(const LinearizationReport<RatFun>& r) {
    return linearization_json_impl<RatFun>(r, rf_text);
}
ojson affine_json(const AffineMultipleReport<FFElem>& r) { return affine_json_impl<FFElem>(r, ff_text); }
ojson affine_json(const AffineMultipleReport<RatFun>& r) { return affine_json_impl<RatFun>(r, rf_text); }

ojson evalmap_json(const EvalMapReport& r) {
    ojson j;
    j["n"] = r.n;
    j["r"] = r.r;
    j["coefficient_field"] = r.K.description();
    j["dim_forms"] = r.monomials.size();
    ojson monos = ojson::array();
    for (std::size_t i = 0; i < r.monomials.size(); ++i) monos.push_back(r.monomials.exponents(i));
    j["monomials"] = monos;
    j["matrix"] = matrix_json(r.matrix);
    ojson kernel = ojson::array();
    for (const auto& v : r.kernel) {
        ojson k;
        ojson coeffs = ojson::array();
        for (const FFElem& c : v) coeffs.push_back(elem_to_text(c));
        k["coeffs"] = coeffs;
        k["form"] = form_to_text(v, r.monomials);
        kernel.push_back(k);
    }
    j["kernel"] = kernel;
    j["injective"] = r.injective;
    j["basis_provenance"] = r.basis_provenance;
    return j;
}

ojson pairdep_json(const PairDependenceReport& r) {
    ojson j;
    j["alpha"] = elem_to_text(r.alpha);
    j["beta"] = elem_to_text(r.beta);
    j["coefficient_field"] = r.K.description();
    if (r.m)
        j["m"] = *r.m;
    else
        j["m"] = ojson();  // none up to cap
    j["cap"] = r.cap;
    j["gamma"] = elem_to_text(r.gamma);
    j["gamma_degree"] = r.gamma_degree;
    j["bound"] = r.bound;
    j["degree_matches_m"] = r.degree_matches_m;
    return j;
}

ojson directsum_json(const DirectSumReport& r) {
    ojson j;
    j["dims"] = r.dims;
    j["total"] = r.total;
    j["is_direct"] = r.is_direct;
    return j;
}

ojson symwitness_json(const SymWitnessReport& r) {
    ojson j;
    j["L"] = linpoly_json(r.L);
    j["r"] = r.r;
    j["P"] = poly_to_text(r.P);
    j["L_P"] = linpoly_json(r.L_P);
    j["dim_roots_LP"] = r.dim_roots_LP;
    j["dim_forms"] = r.dim_forms;
    j["eval_injective"] = r.eval_injective;
    j["monomials_all_roots"] = r.monomials_all_roots;
    j["monomial_root_checks"] = r.monomial_root_checks;
    j["dims_consistent"] = r.dims_consistent;
    return j;
}

}  // namespace linpoly
