#include "hpspec/cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hpspec/error.hpp"
#include "hpspec/fourier_side.hpp"
#include "hpspec/json_emit.hpp"
#include "hpspec/kernels.hpp"
#include "hpspec/lft.hpp"
#include "hpspec/log_grid.hpp"
#include "hpspec/paley_wiener.hpp"
#include "hpspec/spectra.hpp"
#include "hpspec/truncation.hpp"

namespace hpspec {

namespace {

double parse_real(const std::string& s, const std::string& whole) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw Error(ErrorCode::ParseError, "cannot parse complex literal '" + whole + "'");
  }
  return v;
}

Json point_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json point_json(const ExtendedPoint& p) {
  if (p.infinite) return "infinity";
  return point_json(p.value);
}

Json map_json(const AffineMap& m) { return Json{{"mu", m.mu}, {"w0", point_json(m.w0)}}; }

LFTMap build_map(const JobConfig& cfg) {
  const bool affine = cfg.mu.has_value() || cfg.w0.has_value();
  if (affine == cfg.coefficients.has_value()) {
    throw Error(ErrorCode::ParseError, "give exactly one map: --mu/--w0 or --coeffs a,b,c,d");
  }
  if (cfg.coefficients) {
    const auto& c = *cfg.coefficients;
    return LFTMap::from_coefficients(c[0], c[1], c[2], c[3]);
  }
  if (!cfg.mu) throw Error(ErrorCode::ParseError, "--mu is required with --w0");
  return LFTMap::make(*cfg.mu, cfg.w0.value_or(cplx{}));
}

void write_output(const JobConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.output) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open output file " + *cfg.output);
  file << text;
}

int run_classify(const JobConfig& cfg, std::ostream& out) {
  Json j;
  try {
    const LFTMap map = build_map(cfg);
    const MapClass mc = classify(map);
    const Conjugation conj = normalize_conjugation(map);
    j["class"] = to_string(mc.kind);
    Json fps = Json::array();
    auto fp_json = [](const FixedPoint& fp) {
      return Json{{"point", point_json(fp.point)}, {"multiplier", fp.multiplier}, {"role", to_string(fp.role)}};
    };
    if (mc.finite) fps.push_back(fp_json(*mc.finite));
    fps.push_back(fp_json(mc.at_infinity));
    j["fixed_points"] = fps;
    j["angular_derivative"] = angular_derivative_infinity(map);
    j["bounded"] = true;
    j["canonical_form"] = Json{{"form", to_string(conj.form)},
                               {"mu", conj.canonical.mu()},
                               {"w0", point_json(conj.canonical.w0())}};
    j["conjugator"] = map_json(conj.conjugator);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotBounded && e.code() != ErrorCode::NotSelfMap) throw;
    j = Json{{"bounded", false}, {"error", std::string(to_string(e.code()))}, {"reason", e.what()}};
  }
  write_output(cfg, emit_json(j), out);
  return 0;
}

int run_spectrum(const JobConfig& cfg, std::ostream& out) {
  const LFTMap map = build_map(cfg);
  const SpaceParams space = cfg.space();
  const SpectralSet set = spectrum(space, map, cfg.essential);
  Json j;
  j["kind"] = to_string(set.kind());
  j["space"] = space.name();
  j["essential"] = cfg.essential;
  Json params;
  if (set.kind() == SpectralSet::Kind::ParabolicArcClosure) {
    params["w0"] = point_json(set.w0());
  } else {
    params["radius"] = set.radius();
  }
  j["parameters"] = params;
  j["radius"] = spectral_radius(space, map);
  Json samples = Json::array();
  for (const auto& p : sample_set(set, cfg.samples)) samples.push_back(point_json(p));
  j["samples"] = samples;
  write_output(cfg, emit_json(j), out);
  return 0;
}

int run_verify(const JobConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.space = cfg.space();
  opt.seed = cfg.seed;
  opt.tol = cfg.tol;
  const auto results = run_verification(cfg.suite, opt);
  bool all = true;
  Json checks = Json::array();
  char line[512];
  for (const auto& r : results) {
    const char* status = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
    all = all && r.passed;
    std::snprintf(line, sizeof line, "[%s] %-12s %-56s value=%s tol=%s%s%s\n", status, r.suite.c_str(),
                  r.name.c_str(), format_double(r.value).c_str(), format_double(r.tolerance).c_str(),
                  r.detail.empty() ? "" : "  ", r.detail.c_str());
    out << line;
    checks.push_back(Json{{"suite", r.suite},
                          {"name", r.name},
                          {"value", r.value},
                          {"tolerance", r.tolerance},
                          {"status", status},
                          {"detail", r.detail}});
  }
  out << (all ? "all checks passed\n" : "some checks FAILED\n");
  if (cfg.output) {
    Json j{{"space", opt.space.name()}, {"suite", cfg.suite}, {"seed", cfg.seed}, {"passed", all},
           {"checks", checks}};
    std::ofstream file(*cfg.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open output file " + *cfg.output);
    file << emit_json(j);
  }
  return all ? 0 : 1;
}

int run_pseudospec(const JobConfig& cfg, std::ostream& out) {
  const LFTMap map = build_map(cfg);
  const SpaceParams space = cfg.space();
  const Conjugation conj = normalize_conjugation(map);
  const FourierOpDescriptor desc = fourier_descriptor(conj.canonical, space);
  const auto& g = cfg.grid;
  const LogGrid grid = desc.kind == FourierOpDescriptor::Kind::Multiplication
                           ? LogGrid(g.t_min.value_or(1e-3), g.ratio.value_or(1.005), g.size.value_or(2048))
                           : LogGrid::for_dilation(desc.mu, g.t_min.value_or(1e-4), g.size.value_or(2048),
                                                   g.ratio.value_or(1.01));
  const TruncatedOperator op = build_truncation(desc, space, grid);
  const Rectangle& r = cfg.rect;
  if (r.nx == 0 || r.ny == 0) throw Error(ErrorCode::InvalidArgument, "nx and ny must be positive");
  std::vector<cplx> lambdas;
  lambdas.reserve(r.nx * r.ny);
  auto axis = [](double lo, double hi, std::size_t n, std::size_t k) {
    return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  };
  for (std::size_t iy = 0; iy < r.ny; ++iy) {
    for (std::size_t ix = 0; ix < r.nx; ++ix) {
      lambdas.emplace_back(axis(r.re_min, r.re_max, r.nx, ix), axis(r.im_min, r.im_max, r.ny, iy));
    }
  }
  const auto sig = min_singular_grid(op, lambdas);
  std::string csv = "re,im,sigma_min\r\n";
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    csv += format_double(lambdas[i].real()) + "," + format_double(lambdas[i].imag()) + "," +
           format_double(sig[i]) + "\r\n";
  }
  write_output(cfg, csv, out);
  return 0;
}

int run_transform(const JobConfig& cfg, std::ostream& out) {
  const SpaceParams space = cfg.space();
  if (!cfg.at) throw Error(ErrorCode::ParseError, "transform needs --at w");
  const cplx w = *cfg.at;
  if (!(w.imag() > 0.0)) throw Error(ErrorCode::InvalidArgument, "--at must lie in the upper half-plane");
  std::vector<cplx> kernels = cfg.kernels;
  std::vector<double> pe = cfg.power_exp;
  std::vector<cplx> disc = cfg.disc_powers;
  if (pe.size() % 3 != 0) throw Error(ErrorCode::ParseError, "--power-exp takes p,re_c,im_c");
  if (kernels.empty() && pe.empty() && disc.empty()) {
    if (space.has_kernel()) {
      kernels.push_back(I);
      disc.push_back(0.0);
    } else {
      pe = {1.0, -1.0, 0.0};
    }
  }
  Json items = Json::array();
  auto item = [&](const std::string& name, cplx closed, cplx other, const std::string& other_name) {
    items.push_back(Json{{"name", name},
                         {"closed_form", point_json(closed)},
                         {other_name, point_json(other)},
                         {"abs_diff", std::abs(closed - other)}});
  };
  for (const auto& w0 : kernels) {
    char name[128];
    std::snprintf(name, sizeof name, "kernel at %g%+gi", w0.real(), w0.imag());
    item(name, kernel_halfplane(space, w0, w), synthesize(kernel_density(space, w0), w).value, "synthesized");
  }
  for (std::size_t k = 0; k < pe.size(); k += 3) {
    const auto f = FourierSideFunction::power_exp(pe[k], {pe[k + 1], pe[k + 2]});
    char name[128];
    std::snprintf(name, sizeof name, "t^%g e^((%g%+gi) t)", pe[k], pe[k + 1], pe[k + 2]);
    item(name, density_to_function(f)(w), synthesize(f, w).value, "synthesized");
  }
  for (const auto& s : disc) {
    const auto f = DiscFunction::power_at_one(s);
    char name[128];
    std::snprintf(name, sizeof name, "J((1-z)^(%g%+gi))", s.real(), s.imag());
    item(name, apply_J(space, f)(w), apply_J_pointwise(space, f, w), "pointwise");
  }
  Json j{{"space", space.name()}, {"at", point_json(w)}, {"items", items}};
  write_output(cfg, emit_json(j), out);
  return 0;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) parts.push_back(cur);
  return parts;
}

}  // namespace

SpaceParams JobConfig::space() const {
  if (!space_given) {
    const double a = alpha.value_or(-1.0);
    return a == -1.0 ? SpaceParams::hardy() : SpaceParams::make(SpaceKind::Bergman, a);
  }
  const double a = alpha.value_or(kind == SpaceKind::Hardy ? -1.0 : 0.0);
  return SpaceParams::make(kind, a);
}

cplx parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s += ch;
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
  s.pop_back();
  // split at the last sign that is not a leading sign or part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_real(part, text);
  };
  if (split == std::string::npos) return {0.0, imag_of(s)};
  return {parse_real(s.substr(0, split), text), imag_of(s.substr(split))};
}

JobConfig parse_args(int argc, const char* const* argv) {
  JobConfig cfg;
  CLI::App app{"Spectra of linear fractional composition operators on the upper half-plane", "hpspec"};
  app.require_subcommand(1);

  std::string space_name;
  std::string mu_text, w0_text, coeffs_text, at_text;
  std::vector<std::string> kernel_texts, disc_texts, pe_texts;
  double alpha = 0.0;

  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--space", space_name, "hardy | bergman | dirichlet");
    sub->add_option("--alpha", alpha, "weight alpha (>= -1)");
  };
  auto add_map = [&](CLI::App* sub) {
    sub->add_option("--mu", mu_text, "slope mu > 0");
    sub->add_option("--w0", w0_text, "translation w0, e.g. 2i or 1+1i");
    sub->add_option("--coeffs", coeffs_text, "raw coefficients a,b,c,d of (aw+b)/(cw+d)");
  };
  std::string output;
  auto* classify_cmd = app.add_subcommand("classify", "classify a map and give its normal form");
  add_map(classify_cmd);
  add_space(classify_cmd);
  classify_cmd->add_option("--output,-o", output, "output file");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "closed-form spectrum and samples");
  add_map(spectrum_cmd);
  add_space(spectrum_cmd);
  spectrum_cmd->add_option("--samples", cfg.samples, "number of sample points");
  spectrum_cmd->add_flag("--essential", cfg.essential, "report the essential spectrum (identical)");
  spectrum_cmd->add_option("--output,-o", output, "output file");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  add_space(verify_cmd);
  verify_cmd->add_option("--suite", cfg.suite, "all | constants | reproducing | isometry | parabolic | "
                                               "hyperbolic | nonauto | dirichlet | radius");
  verify_cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
  verify_cmd->add_option("--output,-o", output, "JSON report file");
  verify_cmd->add_option("--tol-reproducing", cfg.tol.reproducing, "reproducing relative tolerance");
  verify_cmd->add_option("--tol-isometry", cfg.tol.isometry, "isometry relative tolerance");
  verify_cmd->add_option("--tol-adjoint", cfg.tol.adjoint, "adjoint identity tolerance");
  verify_cmd->add_option("--tol-eigen", cfg.tol.eigen_residual, "eigenfunction residual tolerance");
  verify_cmd->add_option("--tol-norm", cfg.tol.norm, "operator norm tolerance");
  verify_cmd->add_option("--tol-weyl", cfg.tol.weyl_hyperbolic, "hyperbolic Weyl ratio tolerance");

  auto* pseudo_cmd = app.add_subcommand("pseudospec", "smallest singular values of a truncation on a grid");
  add_map(pseudo_cmd);
  add_space(pseudo_cmd);
  pseudo_cmd->add_option("--re-min", cfg.rect.re_min, "grid rectangle");
  pseudo_cmd->add_option("--re-max", cfg.rect.re_max, "grid rectangle");
  pseudo_cmd->add_option("--im-min", cfg.rect.im_min, "grid rectangle");
  pseudo_cmd->add_option("--im-max", cfg.rect.im_max, "grid rectangle");
  pseudo_cmd->add_option("--nx", cfg.rect.nx, "grid columns");
  pseudo_cmd->add_option("--ny", cfg.rect.ny, "grid rows");
  double t_min = 0.0, ratio = 0.0;
  std::size_t size = 0;
  auto* t_min_opt = pseudo_cmd->add_option("--t-min", t_min, "grid t_min");
  auto* ratio_opt = pseudo_cmd->add_option("--ratio", ratio, "grid ratio (target ratio for dilations)");
  auto* size_opt = pseudo_cmd->add_option("--size", size, "number of bins");
  pseudo_cmd->add_option("--output,-o", output, "CSV file");

  auto* transform_cmd = app.add_subcommand("transform", "compare closed forms with synthesis and J");
  add_space(transform_cmd);
  transform_cmd->add_option("--at", at_text, "evaluation point in the upper half-plane")->required();
  transform_cmd->add_option("--kernel", kernel_texts, "kernel point w0 (repeatable)");
  transform_cmd->add_option("--power-exp", pe_texts, "density t^p e^{ct} as p,re_c,im_c (repeatable)");
  transform_cmd->add_option("--disc-power", disc_texts, "exponent s of (1-z)^s (repeatable)");
  transform_cmd->add_option("--output,-o", output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }

  CLI::App* active = nullptr;
  for (auto* sub : {classify_cmd, spectrum_cmd, verify_cmd, pseudo_cmd, transform_cmd}) {
    if (sub->parsed()) active = sub;
  }
  if (active == classify_cmd) cfg.command = Command::Classify;
  else if (active == spectrum_cmd) cfg.command = Command::Spectrum;
  else if (active == verify_cmd) cfg.command = Command::Verify;
  else if (active == pseudo_cmd) cfg.command = Command::Pseudospec;
  else cfg.command = Command::Transform;

  if (active->count("--alpha") > 0) {
    if (!(alpha >= -1.0)) throw Error(ErrorCode::ParseError, "alpha must be >= -1");
    cfg.alpha = alpha;
  }
  if (!space_name.empty()) {
    cfg.space_given = true;
    if (space_name == "hardy") cfg.kind = SpaceKind::Hardy;
    else if (space_name == "bergman") cfg.kind = SpaceKind::Bergman;
    else if (space_name == "dirichlet") cfg.kind = SpaceKind::Dirichlet;
    else throw Error(ErrorCode::ParseError, "unknown space '" + space_name + "'");
  }
  if (!mu_text.empty()) cfg.mu = parse_real(mu_text, mu_text);
  if (!w0_text.empty()) cfg.w0 = parse_complex(w0_text);
  if (!coeffs_text.empty()) {
    const auto parts = split_commas(coeffs_text);
    if (parts.size() != 4) throw Error(ErrorCode::ParseError, "--coeffs needs four values a,b,c,d");
    cfg.coefficients = std::array<cplx, 4>{parse_complex(parts[0]), parse_complex(parts[1]),
                                           parse_complex(parts[2]), parse_complex(parts[3])};
  }
  if (!output.empty()) cfg.output = output;
  if (t_min_opt->count() > 0) cfg.grid.t_min = t_min;
  if (ratio_opt->count() > 0) cfg.grid.ratio = ratio;
  if (size_opt->count() > 0) cfg.grid.size = size;
  if (!at_text.empty()) cfg.at = parse_complex(at_text);
  for (const auto& k : kernel_texts) cfg.kernels.push_back(parse_complex(k));
  for (const auto& d : disc_texts) cfg.disc_powers.push_back(parse_complex(d));
  for (const auto& p : pe_texts) {
    const auto parts = split_commas(p);
    if (parts.size() != 3) throw Error(ErrorCode::ParseError, "--power-exp needs p,re_c,im_c");
    for (const auto& x : parts) cfg.power_exp.push_back(parse_real(x, p));
  }
  return cfg;
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Classify: return run_classify(config, out);
      case Command::Spectrum: return run_spectrum(config, out);
      case Command::Verify: return run_verify(config, out);
      case Command::Pseudospec: return run_pseudospec(config, out);
      case Command::Transform: return run_transform(config, out);
    }
  } catch (const Error& e) {
    err << "hpspec: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const Error& e) {
    err << "hpspec: " << e.what() << "\n";
    return 2;
  }
  return run(cfg, out, err);
}

}  // namespace hpspec
