/*
 * Copyright 2026 The reesdet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string_view>

// Labels attached to every theorem-derived number in reports. This is the
// only place the labels are spelled out.
namespace reesdet::sources {

inline constexpr std::string_view gs_conditions = "Prop 3.2";
inline constexpr std::string_view gs_generic_ordinary = "Cor 3.3";
inline constexpr std::string_view gs_generic_symmetric = "Cor 3.4";
inline constexpr std::string_view gs_generic_alternating = "Cor 3.5";
inline constexpr std::string_view gs_max_derivation = "Prop 3.2 (min over failing j)";

inline constexpr std::string_view abw_resolution = "Prop 4.1";
inline constexpr std::string_view ku_resolution = "Cor 5.4.2";
inline constexpr std::string_view max_pdim = "Lemma 4.3";
inline constexpr std::string_view min_gens = "Lemma 4.4";
inline constexpr std::string_view sigma = "Lemma 4.6";
inline constexpr std::string_view regularity_two_minors = "Thm 5.2.4";
inline constexpr std::string_view regularity_square = "Thm 5.2.6";
inline constexpr std::string_view regularity_minors = "Thm 5.2.8";

inline constexpr std::string_view specialization_i = "Prop 4.7(i)";
inline constexpr std::string_view specialization_ii = "Prop 4.7(ii)";
inline constexpr std::string_view specialization_iii = "Prop 4.7(iii)";
inline constexpr std::string_view specialization_iv = "Prop 4.7(iv)";
inline constexpr std::string_view specialization_v = "Prop 4.7(v)";

inline constexpr std::string_view linfib_i = "Cor 4.8(i)";
inline constexpr std::string_view linfib_ii = "Cor 4.8(ii)";
inline constexpr std::string_view linfib_iii = "Cor 4.8(iii)";
inline constexpr std::string_view linfib_iv = "Cor 4.8(iv)";
inline constexpr std::string_view linfib_v = "Cor 4.8(v)";
inline constexpr std::string_view linfib_vi = "Cor 4.8(vi)";
inline constexpr std::string_view linfib_vii = "Cor 4.8(vii)";

inline constexpr std::string_view bound_hypotheses_i = "Cor 5.1.4(i)";
inline constexpr std::string_view bound_hypotheses_ii = "Cor 5.1.4(ii)";
inline constexpr std::string_view bound_hypotheses_iii = "Cor 5.1.4(iii)";
inline constexpr std::string_view bound_hypotheses_iv = "Cor 5.1.4(iv)";
inline constexpr std::string_view bound_hypotheses_v = "Cor 5.1.4(v)";

inline constexpr std::string_view status_ordinary = "Prop 5.2.1";
inline constexpr std::string_view status_symmetric = "Prop 5.3.1";
inline constexpr std::string_view status_alternating = "Prop 5.4.1";

inline constexpr std::string_view maximal_minors = "Thm 5.2.2";
inline constexpr std::string_view maximal_minors_a = "Thm 5.2.2a";
inline constexpr std::string_view maximal_minors_b = "Thm 5.2.2b";
inline constexpr std::string_view maximal_minors_c = "Thm 5.2.2c";
inline constexpr std::string_view maximal_minors_cor_a = "Cor 5.2.3a";
inline constexpr std::string_view maximal_minors_cor_b = "Cor 5.2.3b";
inline constexpr std::string_view maximal_minors_cor_c = "Cor 5.2.3c";
inline constexpr std::string_view maximal_minors_cor_d = "Cor 5.2.3d";
inline constexpr std::string_view two_minors_a = "Thm 5.2.4a";
inline constexpr std::string_view two_minors_b = "Thm 5.2.4b";
inline constexpr std::string_view two_minors_cor = "Cor 5.2.5";
inline constexpr std::string_view square_submaximal = "Thm 5.2.6";
inline constexpr std::string_view square_submaximal_cor = "Cor 5.2.7";
inline constexpr std::string_view ordinary_minors = "Thm 5.2.8";
inline constexpr std::string_view symmetric_submaximal = "Prop 5.3.2";
inline constexpr std::string_view submaximal_pfaffians = "Thm 5.4.3";
inline constexpr std::string_view submaximal_pfaffians_a = "Thm 5.4.3a";
inline constexpr std::string_view submaximal_pfaffians_b = "Thm 5.4.3b";
inline constexpr std::string_view submaximal_pfaffians_c = "Thm 5.4.3c";
inline constexpr std::string_view submaximal_pfaffians_d = "Thm 5.4.3d";
inline constexpr std::string_view submaximal_pfaffians_cor_a = "Cor 5.4.4a";
inline constexpr std::string_view submaximal_pfaffians_cor_b = "Cor 5.4.4b";
inline constexpr std::string_view submaximal_pfaffians_cor_c = "Cor 5.4.4c";
inline constexpr std::string_view submaximal_pfaffians_cor_d = "Cor 5.4.4d";
inline constexpr std::string_view submaximal_pfaffians_cor_e = "Cor 5.4.4e";
inline constexpr std::string_view pfaffians_n_minus_2 = "Thm 5.4.5";
inline constexpr std::string_view pfaffians_n_minus_2_a = "Thm 5.4.5a";
inline constexpr std::string_view pfaffians_n_minus_2_b = "Thm 5.4.5b";
inline constexpr std::string_view pfaffians_six = "Cor 5.4.6";
inline constexpr std::string_view pfaffians_four = "Thm 5.4.7";
inline constexpr std::string_view pfaffians_general = "Thm 5.4.8";

inline constexpr std::string_view generic_height = "generic height formula";
inline constexpr std::string_view groebner = "Groebner computation";
inline constexpr std::string_view expansion = "exact expansion";
inline constexpr std::string_view input = "input";

}  // namespace reesdet::sources
