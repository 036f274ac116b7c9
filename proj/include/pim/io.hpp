// Copyright 2026 The pimat Authors
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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pim/core.hpp"
#include "pim/numrange.hpp"
#include "pim/similar.hpp"

namespace pim::io {

// Accepts "a", "bi", "a+bi", "a-bi" (also "i" and "-i").
cplx parse_complex(std::string_view text);
std::vector<cplx> parse_complex_list(std::string_view text);
std::string format_complex(cplx z, int precision = 10);

CMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const CMatrix& A);
CMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const CMatrix& A);

JordanData jordan_from_json(const nlohmann::json& j);
nlohmann::json jordan_to_json(const JordanData& J);
JordanData read_jordan_file(const std::string& path);

void write_csv(const std::string& path, const NRRegion& region);

struct SvgLayer {
  std::vector<cplx> points;
  bool closed = true;
  std::string stroke;
  std::string fill = "none";
};
std::string svg_document(const std::vector<SvgLayer>& layers);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pim::io
