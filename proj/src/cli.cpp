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

#include "pim/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "pim/factor.hpp"
#include "pim/io.hpp"
#include "pim/livsic.hpp"
#include "pim/modelspace.hpp"
#include "pim/numrange.hpp"
#include "pim/predicates.hpp"
#include "pim/similar.hpp"
#include "pim/synth.hpp"
#include "pim/usim.hpp"

namespace pim::cli {

namespace {

double env_tol(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const double x = std::strtod(v, &end);
  if (end == v || *end != '\0') {
    throw Error(ErrorKind::InvalidInput, std::string(name) + " is not a decimal number");
  }
  return x;
}

std::string list(const std::vector<cplx>& zs) {
  if (zs.empty()) return "(none)";
  std::string out;
  for (std::size_t k = 0; k < zs.size(); ++k) out += (k ? ", " : "") + io::format_complex(zs[k]);
  return out;
}

void print_matrix(std::ostream& out, const CMatrix& A) { out << io::matrix_to_json(A).dump() << "\n"; }

struct Options {
  std::string a_path, b_path, jordan_path, kind = "svd", method = "auto", csv, svg;
  std::string roots, xis, lambdas;
  int samples = 0;
  int degree = kDefaultDegreeCap;
  bool has_lambdas = false;
};

int cmd_check(const Options& o, const ToleranceCfg& cfg, std::ostream& out) {
  const CMatrix A = io::read_matrix_file(o.a_path);
  require_square(A, "matrix");
  const PIClassification c = classify(A, cfg);
  if (!c.is_pi) {
    out << "not a partial isometry, rank " << c.rank << "\n";
    out << "residual |AA*A - A|_F: " << c.pi_residual << "\n";
    return 1;
  }
  out << "partial isometry, rank " << c.rank << ", defect " << c.defect << ", "
      << (c.is_unitary ? "unitary" : c.is_cnu ? "cnu" : "with unitary part") << "\n";
  out << "size: " << A.rows() << "\n";
  out << "disk spectrum: " << list(c.disk_spectrum) << "\n";
  out << "circle spectrum: " << list(c.circle_spectrum) << "\n";
  out << "residual |AA*A - A|_F: " << c.pi_residual << "\n";
  return 0;
}

int cmd_factor(const Options& o, const ToleranceCfg& cfg, std::ostream& out) {
  const CMatrix A = io::read_matrix_file(o.a_path);
  nlohmann::json j;
  if (o.kind == "svd") {
    const SvdCanonical s = svd_canonical(A, cfg);
    j = {{"U", io::matrix_to_json(s.U)}, {"r", s.r}, {"V", io::matrix_to_json(s.V)}};
  } else if (o.kind == "polar") {
    const PolarFactors p = polar_factor(A, cfg);
    j = {{"W", io::matrix_to_json(p.W)}, {"P", io::matrix_to_json(p.P)},
         {"Q", io::matrix_to_json(p.Q)}};
  } else if (o.kind == "pipolar") {
    const PiPolar p = pi_polar(A, cfg);
    j = {{"E", io::matrix_to_json(p.E)}, {"R", io::matrix_to_json(p.R)}};
  } else {
    j = {{"pinv", io::matrix_to_json(pseudoinverse(A, cfg))}};
  }
  out << j.dump() << "\n";
  return 0;
}

std::string jordan_text(const JordanData& J) {
  std::ostringstream os;
  for (std::size_t k = 0; k < J.groups.size(); ++k) {
    os << (k ? "; " : "") << io::format_complex(J.groups[k].eig) << ": [";
    for (std::size_t i = 0; i < J.groups[k].sizes.size(); ++i) {
      os << (i ? "," : "") << J.groups[k].sizes[i];
    }
    os << "]";
  }
  return os.str();
}

int cmd_similar(const Options& o, const ToleranceCfg& cfg, std::ostream& out) {
  if (o.jordan_path.empty() == o.a_path.empty()) {
    throw Error(ErrorKind::InvalidInput, "give exactly one of --jordan or --matrix");
  }
  const JordanData J =
      o.jordan_path.empty() ? jordan_of(io::read_matrix_file(o.a_path), cfg) : io::read_jordan_file(o.jordan_path);
  const bool yes = similar_to_pi(J, cfg);
  out << "jordan data: " << jordan_text(J) << "\n";
  out << (yes ? "similar to a partial isometry" : "not similar to a partial isometry") << "\n";
  return yes ? 0 : 1;
}

int report_usim(const UsimVerdict& v, std::ostream& out) {
  if (v.kind == UsimKind::No) {
    out << "not unitarily similar: word " << v.witness->pretty() << " gives "
        << io::format_complex(v.value_a) << " vs " << io::format_complex(v.value_b) << "\n";
    return 1;
  }
  if (v.kind == UsimKind::UpToDegree) {
    out << "unitarily similar up to degree " << v.degree << " (all compared traces agree)\n";
  } else {
    out << "unitarily similar\n";
  }
  return 0;
}

int cmd_usim(const Options& o, const ToleranceCfg& cfg, std::ostream& out) {
  const CMatrix A = io::read_matrix_file(o.a_path);
  const CMatrix B = io::read_matrix_file(o.b_path);
  require_square(A, "first matrix");
  require_square(B, "second matrix");
  if (A.rows() != B.rows()) throw Error(ErrorKind::ShapeMismatch, "matrices differ in size");
  std::string method = o.method;
  if (method == "auto") {
    const bool pis = is_partial_isometry(A, cfg) && is_partial_isometry(B, cfg);
    const Eigen::Index n = A.rows();
    if (pis && n >= 2 && n <= 4) {
      method = "pi-small";
    } else if (pis && defect(A, cfg) == 1 && defect(B, cfg) == 1) {
      method = "defect1";
    } else {
      method = "words";
    }
  }
  out << "method: " << method << "\n";
  if (method == "words") return report_usim(unitarily_similar(A, B, cfg, o.degree), out);
  const bool yes = method == "pi-small" ? pi_usim_small(A, B, cfg) : defect_one_usim(A, B, cfg);
  out << (yes ? "unitarily similar" : "not unitarily similar") << "\n";
  return yes ? 0 : 1;
}

int cmd_livsic(const Options& o, const ToleranceCfg& cfg, std::ostream& out) {
  const CMatrix A = io::read_matrix_file(o.a_path);
  const LivsicFunction L = livsic_build(A, cfg);
  out << "defect " << L.r << "\n";
  if (L.r == 1) {
    const BlaschkeProduct b = livsic_defect1(A, cfg);
    const RatioFit fit = blaschke_ratio(L, b, livsic_sample_points(16), cfg);
    out << "blaschke product: zero order " << b.zero_order << ", zeros " << list(b.zeros)
        << ", constant " << io::format_complex(fit.constant) << "\n";
  }
  const int k = o.samples > 0 ? o.samples : 4;
  for (const cplx& z : livsic_sample_points(k)) {
    const CMatrix w = livsic_eval(L, z, cfg);
    out << "w(" << io::format_complex(z, 6) << ") = [";
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      out << (i ? "; " : "");
      for (Eigen::Index j = 0; j < w.cols(); ++j) out << (j ? ", " : "") << io::format_complex(w(i, j));
    }
    out << "]\n";
  }
  if (o.b_path.empty()) return 0;
  const LivsicComparison c = livsic_equivalent(A, io::read_matrix_file(o.b_path), cfg);
  out << verdict_name(c.verdict) << " (largest sampled gap " << c.gap << ")\n";
  return c.verdict == LivsicVerdict::NotEquivalent ? 1 : 0;
}

ModelParams params_from_matrix(const CMatrix& A, const ToleranceCfg& cfg) {
  const BlaschkeProduct b = livsic_defect1(A, cfg);
  ModelParams p;
  p.lambdas = b.zeros;
  p.lambdas.insert(p.lambdas.end(), static_cast<std::size_t>(b.zero_order - 1), 0.0);
  return p;
}

int cmd_numrange(const Options& o, const ToleranceCfg& cfg, std::ostream& out) {
  if (o.has_lambdas == !o.a_path.empty()) {
    throw Error(ErrorKind::InvalidInput, "give exactly one of a matrix file or --lambdas");
  }
  std::string method = o.method == "auto" ? (o.has_lambdas ? "both" : "sweep") : o.method;
  CMatrix A;
  ModelParams p;
  bool have_params = o.has_lambdas;
  if (o.has_lambdas) {
    p.lambdas = io::parse_complex_list(o.lambdas);
    p.validate(cfg);
    A = model_matrix(p);
  } else {
    A = io::read_matrix_file(o.a_path);
    if (method != "sweep") {
      p = params_from_matrix(A, cfg);
      have_params = true;
    }
  }
  std::optional<NRRegion> sweep, inter;
  if (method == "sweep" || method == "both") {
    sweep = nr_sweep(A, o.samples);
    double hmax = -INFINITY;
    for (const auto& s : sweep->samples) hmax = std::max(hmax, s.support);
    out << "sweep: " << o.samples << " directions, numerical radius " << std::setprecision(10)
        << hmax << "\n";
  }
  if (method == "blaschke" || method == "both") {
    inter = nr_intersection(p, o.samples, cfg);
    out << "intersection: " << o.samples << " polygons, " << inter->vertices->size()
        << " vertices\n";
  }
  if (sweep && inter) out << "hausdorff distance: " << nr_hausdorff(*sweep, *inter) << "\n";
  if (!o.csv.empty()) io::write_csv(o.csv, sweep ? *sweep : *inter);
  if (!o.svg.empty()) {
    std::vector<io::SvgLayer> layers;
    if (have_params) {
      for (int k = 0; k < 3; ++k) {
        layers.push_back({nr_polygon_Q(p, std::polar(1.0, 2.0 * M_PI * k / 3.0), cfg), true,
                          "#4477aa", "none"});
      }
    }
    if (inter) layers.push_back({*inter->vertices, true, "#228833", "#22883333"});
    if (sweep) layers.push_back({boundary_points(*sweep), true, "#cc3311", "none"});
    io::write_text_file(o.svg, io::svg_document(layers));
  }
  return 0;
}

}  // namespace

ToleranceCfg tolerance_from_env() {
  ToleranceCfg cfg;
  cfg.abs_tol = env_tol("PIM_ABS_TOL", cfg.abs_tol);
  cfg.rank_rel_tol = env_tol("PIM_RANK_REL_TOL", cfg.rank_rel_tol);
  cfg.unimodular_tol = env_tol("PIM_UNIMODULAR_TOL", cfg.unimodular_tol);
  cfg.validate();
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial isometry toolkit", "pimat"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Classify a matrix");
  check->add_option("matrix", o.a_path, "Matrix JSON file")->required();

  auto* factor = app.add_subcommand("factor", "Factor a matrix");
  factor->add_option("--kind", o.kind)->check(CLI::IsMember({"svd", "polar", "pipolar", "pseudo"}));
  factor->add_option("matrix", o.a_path)->required();

  auto* synth = app.add_subcommand("synth", "Build a partial isometry");
  synth->require_subcommand(1);
  auto* synth_roots = synth->add_subcommand("roots", "From characteristic roots");
  synth_roots->add_option("--roots", o.roots)->required();
  auto* synth_super = synth->add_subcommand("superdiag", "Upper triangular with given diagonal");
  synth_super->add_option("--xi", o.xis)->required();

  auto* similar = app.add_subcommand("similar", "Decide similarity to a partial isometry");
  similar->add_option("--jordan", o.jordan_path);
  similar->add_option("--matrix", o.a_path);

  auto* realize = app.add_subcommand("realize", "Realize Jordan data by a partial isometry");
  realize->add_option("--jordan", o.jordan_path)->required();

  auto* usim = app.add_subcommand("usim", "Decide unitary similarity");
  usim->add_option("a", o.a_path)->required();
  usim->add_option("b", o.b_path)->required();
  usim->add_option("--method", o.method)
      ->check(CLI::IsMember({"auto", "words", "defect1", "pi-small"}));
  usim->add_option("--degree", o.degree, "Word degree cap for n >= 5");

  auto* dil = app.add_subcommand("dilate", "Partial isometric dilation of a contraction");
  dil->add_option("matrix", o.a_path)->required();

  auto* liv = app.add_subcommand("livsic", "Characteristic function");
  liv->add_option("matrix", o.a_path)->required();
  liv->add_option("--compare", o.b_path);
  liv->add_option("--samples", o.samples);

  auto* model = app.add_subcommand("model", "Model matrix");
  model->add_option("--lambdas", o.lambdas)->required();

  auto* nr = app.add_subcommand("numrange", "Numerical range");
  nr->add_option("matrix", o.a_path);
  auto* nr_lambdas = nr->add_option("--lambdas", o.lambdas);
  nr->add_option("--samples", o.samples)->required();
  nr->add_option("--method", o.method)->check(CLI::IsMember({"auto", "sweep", "blaschke", "both"}));
  nr->add_option("--csv", o.csv);
  nr->add_option("--svg", o.svg);

  std::vector<std::string> owned{"pimat"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : owned) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  o.has_lambdas = nr_lambdas->count() > 0;

  try {
    const ToleranceCfg cfg = tolerance_from_env();
    if (check->parsed()) return cmd_check(o, cfg, out);
    if (factor->parsed()) return cmd_factor(o, cfg, out);
    if (synth_roots->parsed()) {
      print_matrix(out, synth_from_roots(io::parse_complex_list(o.roots), cfg));
      return 0;
    }
    if (synth_super->parsed()) {
      print_matrix(out, synth_superdiagonal(io::parse_complex_list(o.xis), cfg));
      return 0;
    }
    if (similar->parsed()) return cmd_similar(o, cfg, out);
    if (realize->parsed()) {
      print_matrix(out, realize_similar_pi(io::read_jordan_file(o.jordan_path), cfg));
      return 0;
    }
    if (usim->parsed()) return cmd_usim(o, cfg, out);
    if (dil->parsed()) {
      print_matrix(out, dilate(io::read_matrix_file(o.a_path), cfg));
      return 0;
    }
    if (liv->parsed()) return cmd_livsic(o, cfg, out);
    if (model->parsed()) {
      ModelParams p{io::parse_complex_list(o.lambdas)};
      p.validate(cfg);
      print_matrix(out, model_matrix(p));
      return 0;
    }
    if (nr->parsed()) return cmd_numrange(o, cfg, out);
  } catch (const Error& e) {
    err << e.report() << "\n";
    return is_numerical(e.kind()) ? 3 : 2;
  }
  return 2;
}

}  // namespace pim::cli
