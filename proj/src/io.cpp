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

#include "pim/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace pim::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_scalar(std::string_view text) {
  throw Error(ErrorKind::InvalidInput, "cannot parse complex number '" + std::string(text) + "'");
}

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) bad_scalar(whole);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    bad_scalar(whole);
  }
  return v;
}

// Imaginary coefficient; a bare sign means ±1.
double parse_imag(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, whole);
}

}  // namespace

cplx parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_scalar(text);
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
  s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag(s, text)};
  return {parse_real(s.substr(0, split), text), parse_imag(s.substr(split), text)};
}

std::vector<cplx> parse_complex_list(std::string_view text) {
  std::vector<cplx> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_complex(cplx z, int precision) {
  auto clean = [](double v) { return std::abs(v) < 1e-14 ? 0.0 : v; };
  const double re = clean(z.real());
  const double im = clean(z.imag());
  std::ostringstream os;
  os << std::setprecision(precision);
  if (im == 0.0) {
    os << re;
  } else if (re == 0.0) {
    os << im << "i";
  } else {
    os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return os.str();
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw Error(ErrorKind::InvalidInput, "matrix file needs rows, cols and data");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
    throw Error(ErrorKind::InvalidInput, "rows and cols must be integers");
  }
  const long rows = j["rows"].get<long>();
  const long cols = j["cols"].get<long>();
  if (rows < 1 || cols < 1) throw Error(ErrorKind::InvalidInput, "rows and cols must be positive");
  const auto& data = j["data"];
  if (!data.is_array() || static_cast<long>(data.size()) != rows * cols) {
    throw Error(ErrorKind::InvalidInput, "data length does not equal rows*cols");
  }
  CMatrix A(rows, cols);
  for (long k = 0; k < rows * cols; ++k) {
    const auto& e = data[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw Error(ErrorKind::InvalidInput, "each entry must be a pair [re, im]");
    }
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw Error(ErrorKind::InvalidInput, "matrix entries must be finite");
    }
    A(k / cols, k % cols) = cplx(re, im);
  }
  return A;
}

nlohmann::json matrix_to_json(const CMatrix& A) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index k = 0; k < A.cols(); ++k) {
      data.push_back({A(i, k).real(), A(i, k).imag()});
    }
  }
  return {{"rows", A.rows()}, {"cols", A.cols()}, {"data", data}};
}

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace

CMatrix read_matrix_file(const std::string& path) { return matrix_from_json(read_json(path)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

void write_matrix_file(const std::string& path, const CMatrix& A) {
  write_text_file(path, matrix_to_json(A).dump() + "\n");
}

JordanData jordan_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
    throw Error(ErrorKind::InvalidInput, "Jordan file needs a blocks array");
  }
  JordanData J;
  for (const auto& b : j["blocks"]) {
    if (!b.is_object() || !b.contains("eig") || !b.contains("sizes")) {
      throw Error(ErrorKind::InvalidInput, "each block needs eig and sizes");
    }
    const auto& e = b["eig"];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw Error(ErrorKind::InvalidInput, "eig must be a pair [re, im]");
    }
    JordanGroup g{cplx(e[0].get<double>(), e[1].get<double>()), {}};
    if (!b["sizes"].is_array()) throw Error(ErrorKind::InvalidInput, "sizes must be an array");
    for (const auto& s : b["sizes"]) {
      if (!s.is_number_integer()) throw Error(ErrorKind::InvalidInput, "sizes must be integers");
      g.sizes.push_back(s.get<int>());
    }
    J.groups.push_back(g);
  }
  J.normalize(0.0);
  return J;
}

nlohmann::json jordan_to_json(const JordanData& J) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& g : J.groups) {
    blocks.push_back({{"eig", {g.eig.real(), g.eig.imag()}}, {"sizes", g.sizes}});
  }
  return {{"blocks", blocks}};
}

JordanData read_jordan_file(const std::string& path) { return jordan_from_json(read_json(path)); }

void write_csv(const std::string& path, const NRRegion& region) {
  std::ostringstream os;
  os << std::setprecision(17) << "theta,support,re,im\n";
  for (const auto& s : region.samples) {
    os << s.theta << "," << s.support << "," << s.boundary.real() << "," << s.boundary.imag()
       << "\n";
  }
  write_text_file(path, os.str());
}

std::string svg_document(const std::vector<SvgLayer>& layers) {
  const double size = 480.0;
  auto px = [&](cplx z) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << (z.real() + 1.2) / 2.4 * size << ","
       << (1.2 - z.imag()) / 2.4 * size;
    return os.str();
  };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "  <circle cx=\"" << size / 2 << "\" cy=\"" << size / 2 << "\" r=\"" << size / 2.4
     << "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4,3\"/>\n";
  for (const auto& layer : layers) {
    os << "  <" << (layer.closed ? "polygon" : "polyline") << " points=\"";
    for (std::size_t k = 0; k < layer.points.size(); ++k) {
      os << (k ? " " : "") << px(layer.points[k]);
    }
    os << "\" fill=\"" << layer.fill << "\" stroke=\"" << layer.stroke
       << "\" stroke-width=\"1.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pim::io
