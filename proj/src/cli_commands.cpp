#include "morse/cli.hpp"

#include "morse/debranges.hpp"
#include "morse/errors.hpp"
#include "morse/m_function.hpp"
#include "morse/special_functions.hpp"
#include "morse/spectrum.hpp"
#include "morse/table.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

namespace morse::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  auto dot = path.find_last_of('.');
  auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

struct NamedTable {
  std::string name;
  Table table;
};

// Writes tables to --out (first table at the path itself, others with _name
// suffixes) or stdout. Summary lines go to stdout as '#' comments, or to
// stderr when stdout carries JSON.
void emit(const RunConfig& rc, std::ostream& out, std::ostream& err,
          const std::vector<NamedTable>& tables, const std::vector<std::string>& summary) {
  bool json = rc.output_format == OutputFormat::json;
  if (!rc.output_path.empty()) {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      std::string path = i == 0 ? rc.output_path : with_suffix(rc.output_path, "_" + tables[i].name);
      std::ofstream f(path);
      if (!f) throw UsageError("cannot open output file " + path);
      if (json)
        f << to_json(tables[i].table) << "\n";
      else
        write_csv(f, tables[i].table, i == 0 ? summary : std::vector<std::string>{});
    }
    for (auto& s : summary) out << "# " << s << "\n";
    return;
  }
  if (json) {
    if (tables.size() == 1) {
      out << to_json(tables[0].table) << "\n";
    } else {
      out << "{\n";
      for (std::size_t i = 0; i < tables.size(); ++i)
        out << "\"" << tables[i].name << "\": " << to_json(tables[i].table) << (i + 1 < tables.size() ? ",\n" : "\n");
      out << "}\n";
    }
    for (auto& s : summary) err << "# " << s << "\n";
    return;
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    std::vector<std::string> comments = i == 0 ? summary : std::vector<std::string>{};
    if (tables.size() > 1) comments.push_back("table: " + tables[i].name);
    write_csv(out, tables[i].table, comments);
  }
}

struct Globals {
  int digits = 34;
  std::string format = "csv";
  std::string out;
  unsigned long long seed = 42;
};

void add_globals(CLI::App& app, Globals& g) {
  app.add_option("--precision-digits", g.digits, "working decimal digits (16..100)")
      ->check(CLI::Range(16, 100));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--seed", g.seed, "seed for sampled checks");
}

RunConfig make_config(const Globals& g) {
  RunConfig rc;
  rc.precision = PrecisionConfig::for_digits(g.digits);
  rc.output_format = g.format == "json" ? OutputFormat::json : OutputFormat::csv;
  rc.output_path = g.out;
  rc.seed = g.seed;
  return rc;
}

Cell num(double v) { return v; }

// ---------------------------------------------------------------- eval

struct EvalOpts {
  double kappa = 0, mu_re = 0, mu_im = 0, x = 0;
};

void run_eval(const RunConfig& rc, const EvalOpts& o, std::ostream& out, std::ostream& err) {
  WhittakerParams p{o.kappa, {o.mu_re, o.mu_im}, o.x};
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  Table t{{"function", "significand_re", "significand_im", "scale", "is_real", "value_re", "value_im",
           "decimal"},
          {}};
  auto row = [&](const std::string& name, const ScaledValue& v, DisplayFunction f,
                 const WhittakerParams& q) {
    t.add_row({name, num(v.significand().real()), num(v.significand().imag()),
               num(static_cast<double>(v.scale())), v.is_real_certified() ? "true" : "false",
               num(v.real()), num(v.imag()), render_high_precision(f, q, rc.precision)});
  };
  row("W", whittaker_w(p, rc.precision), DisplayFunction::whittaker_w, p);
  row("M_regularized", whittaker_m_regularized(p, rc.precision),
      DisplayFunction::whittaker_m_regularized, p);
  if (o.kappa == 0) {
    WhittakerParams q{0, p.mu, o.x / 2};
    row("K(w=x/2)", k_bessel(p.mu, o.x / 2, rc.precision), DisplayFunction::k_bessel, q);
  }
  emit(rc, out, err, {{"eval", t}},
       {"kappa=" + format_double(o.kappa) + " mu=" + format_double(o.mu_re) + "+" +
        format_double(o.mu_im) + "i x=" + format_double(o.x),
        "digits=" + std::to_string(rc.precision.working_digits)});
}

// ---------------------------------------------------------------- zeros

struct ZeroOpts {
  double k = 0, u0 = 0, T = 0, step = 0;
};

void run_zeros(const RunConfig& rc, const ZeroOpts& o, std::ostream& out, std::ostream& err) {
  if (!(o.T > 0)) throw UsageError("--T must be positive");
  MorseProblem prob{o.k, o.u0, 0};
  ScanOptions opt;
  opt.precision = rc.precision;
  auto imag = dirichlet_zero_scan(prob, o.T, o.step, opt);
  auto real = exceptional_real_zeros(prob, opt);
  Table t{{"axis", "index", "coordinate", "energy", "residual"}, {}};
  for (auto& z : real.zeros)
    t.add_row({"real", num(z.index), num(z.coordinate), num(z.energy), num(z.residual)});
  for (auto& z : imag)
    t.add_row({"imaginary", num(z.index), num(z.coordinate), num(z.energy), num(z.residual)});
  long total = 2 * static_cast<long>(imag.size()) + 2 * static_cast<long>(real.zeros.size()) +
               (real.double_zero_at_origin ? 2 : 0);
  emit(rc, out, err, {{"zeros", t}},
       {"k=" + format_double(o.k) + " u0=" + format_double(o.u0) + " T=" + format_double(o.T),
        "imaginary-axis zeros (t > 0): " + std::to_string(imag.size()),
        "real-axis zeros (mu > 0): " + std::to_string(real.zeros.size()),
        std::string("double zero at mu = 0: ") + (real.double_zero_at_origin ? "yes" : "no"),
        "mu-plane count (both signs): " + std::to_string(total)});
}

// ---------------------------------------------------------------- count

struct CountOpts {
  double k = 0, u0 = 0, T = 0;
  int checkpoints = 10;
};

void run_count(const RunConfig& rc, const CountOpts& o, std::ostream& out, std::ostream& err) {
  if (!(o.T > 2)) throw UsageError("--T must exceed 2");
  if (o.checkpoints < 1) throw UsageError("--checkpoints must be >= 1");
  ScanOptions opt;
  opt.precision = rc.precision;
  auto rep = counting_report({o.k, o.u0, 0}, o.T, o.checkpoints, opt);
  Table t{{"T", "observed", "main_term", "diff"}, {}};
  for (auto& r : rep.rows)
    t.add_row({num(r.T), num(static_cast<double>(r.observed)), num(r.main_term), num(r.diff)});
  emit(rc, out, err, {{"count", t}},
       {"k=" + format_double(o.k) + " u0=" + format_double(o.u0),
        "main term c1*T*log(T) + c2*T with c1=" + format_double(rep.c1) +
            " c2=" + format_double(rep.c2),
        "max|diff|=" + format_double(rep.max_abs_diff) + " slope=" + format_double(rep.slope) +
            " |slope|*T=" + format_double(rep.drift)});
}

// ---------------------------------------------------------------- weyl

struct WeylOpts {
  double k = 0, u0 = 0;
  std::vector<double> T_list;
};

void run_weyl(const RunConfig& rc, const WeylOpts& o, std::ostream& out, std::ostream& err) {
  if (o.T_list.empty()) throw UsageError("--T-list needs at least one value");
  Table t{{"T", "weyl_integral", "closed_form", "closed_form_count", "diff"}, {}};
  for (double T : o.T_list) {
    if (!(T > 0)) throw UsageError("--T-list values must be positive");
    double I = weyl_integral(o.k, o.u0, T);
    double cf = weyl_closed_form(o.u0, T);
    t.add_row({num(T), num(I), num(cf), num(cf / kPi), num(I - cf / kPi)});
  }
  emit(rc, out, err, {{"weyl", t}},
       {"k=" + format_double(o.k) + " u0=" + format_double(o.u0),
        "weyl_integral = (1/pi) int sqrt(T - V); closed_form = sqrt(T) log sqrt(T) + (2 log 2 - 1 - u0) sqrt(T)",
        "diff = weyl_integral - closed_form/pi"});
}

// ---------------------------------------------------------------- mfunc

struct MfuncOpts {
  double k = 0, u0 = 0, alpha = 0;
  std::vector<double> grid;
  bool verify = false;
};

bool run_m_verify(const RunConfig& rc, const MfuncOpts& o, std::vector<std::string>& lines) {
  bool all = true;
  std::mt19937_64 rng(rc.seed);
  std::uniform_real_distribution<double> ere(-20, 20), eim(0.5, 20);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    std::complex<double> E(ere(rng), eim(rng));
    double r = riccati_residual(o.k, o.u0, E, 1e-4, rc.precision) / (1 + std::abs(E));
    worst = std::max(worst, r);
  }
  bool ok = worst <= 1e-5;
  all &= ok;
  lines.push_back(std::string("riccati: ") + (ok ? "PASS" : "FAIL") +
                  " max residual/(1+|E|)=" + format_double(worst));

  auto h = herglotz_sweep(o.k, o.u0, 100, rc.seed, 100, 0.1, rc.precision);
  ok = h.violations == 0;
  all &= ok;
  lines.push_back(std::string("herglotz: ") + (ok ? "PASS" : "FAIL") + " violations=" +
                  std::to_string(h.violations) + " min Im m=" + format_double(h.min_imag));

  ScanOptions opt;
  opt.precision = rc.precision;
  auto c = pole_zero_correspondence({o.k, o.u0, 0}, 5, false, opt);
  ok = c.pole_matches == 5 && c.zero_matches == 5 && c.interlaced;
  all &= ok;
  lines.push_back(std::string("pole/zero: ") + (ok ? "PASS" : "FAIL") + " poles " +
                  std::to_string(c.pole_matches) + "/5 zeros " + std::to_string(c.zero_matches) +
                  "/5 interlaced=" + (c.interlaced ? "yes" : "no"));

  std::vector<double> sups;
  for (double R : {20.0, 40.0, 80.0}) sups.push_back(asymptotic_sup(o.k, o.u0, R, 9, 0.1, rc.precision));
  ok = std::isfinite(sups[0]) && sups[2] <= sups[1];
  all &= ok;
  lines.push_back(std::string("asymptotics: ") + (ok ? "PASS" : "FAIL") + " sup|m - iz| at 20,40,80 = " +
                  format_double(sups[0]) + ", " + format_double(sups[1]) + ", " + format_double(sups[2]));
  return all;
}

int run_mfunc(const RunConfig& rc, const MfuncOpts& o, std::ostream& out, std::ostream& err) {
  if (o.grid.size() != 6) throw UsageError("--e-grid needs re_min re_max n_re im_min im_max n_im");
  int nre = static_cast<int>(o.grid[2]), nim = static_cast<int>(o.grid[5]);
  if (nre < 1 || nim < 1 || nre * static_cast<long>(nim) > 1000000)
    throw UsageError("--e-grid counts must be positive");
  std::vector<std::complex<double>> Es;
  for (int i = 0; i < nre; ++i) {
    double re = nre == 1 ? o.grid[0] : o.grid[0] + (o.grid[1] - o.grid[0]) * i / (nre - 1);
    for (int j = 0; j < nim; ++j) {
      double im = nim == 1 ? o.grid[3] : o.grid[3] + (o.grid[4] - o.grid[3]) * j / (nim - 1);
      Es.push_back({re, im});
    }
  }
  Table t{{"E_re", "E_im", "m_re", "m_im"}, {}};
  int poles = 0;
  for (auto E : Es) {
    std::complex<double> m;
    try {
      m = m_table(o.k, o.u0, o.alpha, {E}, rc.precision).front().value;
    } catch (const PoleError&) {
      m = {std::nan(""), std::nan("")};
      ++poles;
    }
    t.add_row({num(E.real()), num(E.imag()), num(m.real()), num(m.imag())});
  }
  std::vector<std::string> summary{"k=" + format_double(o.k) + " u0=" + format_double(o.u0) +
                                   " alpha=" + format_double(o.alpha),
                                   "rows at poles (nan): " + std::to_string(poles)};
  bool ok = true;
  if (o.verify) ok = run_m_verify(rc, o, summary);
  emit(rc, out, err, {{"mfunc", t}}, summary);
  return ok ? kOk : kNumeric;
}

// ---------------------------------------------------------------- debranges

struct DbOpts {
  double u = 0, t_max = 15;
  int samples = 500;
};

int run_debranges(const RunConfig& rc, const DbOpts& o, std::ostream& out, std::ostream& err) {
  if (o.samples < 100) throw UsageError("--samples must be >= 100");
  if (!(o.t_max > 0)) throw UsageError("--t-max must be positive");
  auto hb = hermite_biehler_check(o.u, o.samples, rc.seed, false, rc.precision);
  auto il = ab_zero_interlacing(o.u, o.t_max, false, rc.precision);

  Table margins{{"z_re", "z_im", "margin_log10"}, {}};
  for (std::size_t i = 0; i < hb.points.size(); ++i)
    margins.add_row({num(hb.points[i].real()), num(hb.points[i].imag()), num(hb.margins[i])});

  Table zeros{{"kind", "index", "t", "energy"}, {}};
  for (std::size_t i = 0; i < il.a_zeros.size(); ++i)
    zeros.add_row({"A", num(static_cast<double>(i)), num(il.a_zeros[i]), num(il.a_zeros[i] * il.a_zeros[i])});
  for (std::size_t i = 0; i < il.b_zeros.size(); ++i)
    zeros.add_row({"B", num(static_cast<double>(i)), num(il.b_zeros[i]), num(il.b_zeros[i] * il.b_zeros[i])});

  Table ident{{"z_re", "z_im", "m_re", "m_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_diff",
               "m_principal_re", "m_principal_im"},
              {}};
  std::mt19937_64 rng(rc.seed + 1);
  std::uniform_real_distribution<double> zre(-20, 20), zim(0.05, 10);
  double worst = 0;
  int skipped = 0;
  for (int i = 0; i < 50; ++i) {
    std::complex<double> z(zre(rng), zim(rng));
    try {
      auto d = debranges_m(o.u, z, rc.precision);
      std::complex<double> mp = m_principal(-0.5, o.u, z, rc.precision);
      worst = std::max(worst, d.identity_rel_diff);
      ident.add_row({num(z.real()), num(z.imag()), num(d.value.real()), num(d.value.imag()),
                     num(d.lhs.real()), num(d.lhs.imag()), num(d.rhs.real()), num(d.rhs.imag()),
                     num(d.identity_rel_diff), num(mp.real()), num(mp.imag())});
    } catch (const PoleError&) {
      ++skipped;
    }
  }

  // Margin histogram, 10 bins over [min, max].
  std::vector<std::string> summary;
  summary.push_back("u=" + format_double(o.u) + " samples=" + std::to_string(hb.samples));
  summary.push_back(std::string("hermite-biehler: ") + (hb.violations == 0 ? "PASS" : "FAIL") +
                    " violations=" + std::to_string(hb.violations) +
                    " min margin=" + format_double(hb.min_margin) +
                    " mean margin=" + format_double(hb.mean_margin));
  double lo = *std::min_element(hb.margins.begin(), hb.margins.end());
  double hi = *std::max_element(hb.margins.begin(), hb.margins.end());
  std::vector<int> bins(10, 0);
  for (double m : hb.margins) {
    int b = hi > lo ? static_cast<int>((m - lo) / (hi - lo) * 10) : 0;
    ++bins[std::clamp(b, 0, 9)];
  }
  for (int b = 0; b < 10; ++b)
    summary.push_back("margin bin [" + fixed(lo + (hi - lo) * b / 10, 4) + ", " +
                      fixed(lo + (hi - lo) * (b + 1) / 10, 4) + "): " + std::to_string(bins[b]));
  summary.push_back(std::string("interlacing up to t=") + format_double(o.t_max) + ": " +
                    (il.interlaced ? "PASS" : "FAIL") + " A-zeros=" + std::to_string(il.a_zeros.size()) +
                    " B-zeros=" + std::to_string(il.b_zeros.size()));
  summary.push_back(std::string("identity: ") + (worst <= 1e-8 ? "PASS" : "FAIL") +
                    " max rel diff=" + format_double(worst) + " skipped=" + std::to_string(skipped));
  emit(rc, out, err, {{"margins", margins}, {"zeros", zeros}, {"identity", ident}}, summary);
  bool ok = hb.violations == 0 && il.interlaced && worst <= 1e-8;
  return ok ? kOk : kNumeric;
}

// ---------------------------------------------------------------- compare-zeta

struct ZetaOpts {
  std::string file;
  double k = 0, u0 = 0, T = 50;
  int checkpoints = 10;
};

void run_compare_zeta(const RunConfig& rc, const ZetaOpts& o, std::ostream& out, std::ostream& err) {
  if (!(o.T > 2)) throw UsageError("--T must exceed 2");
  if (o.checkpoints < 1) throw UsageError("--checkpoints must be >= 1");
  ZetaZeroFile zf;
  try {
    zf = read_zeta_zero_file(o.file);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  if (zf.gammas.back() < o.T)
    throw DataError("zero file ends at gamma=" + format_double(zf.gammas.back()) + " < T");
  ScanOptions opt;
  opt.precision = rc.precision;
  auto rep = counting_report({o.k, o.u0, 0}, o.T, o.checkpoints, opt);
  Table t{{"T", "zeta_per_sign", "zeta_observed", "zeta_main", "zeta_diff", "whittaker_observed",
           "whittaker_main", "whittaker_diff"},
          {}};
  for (auto& r : rep.rows) {
    auto per_sign = std::upper_bound(zf.gammas.begin(), zf.gammas.end(), r.T) - zf.gammas.begin();
    double zo = 2.0 * static_cast<double>(per_sign);
    double zm = zeta_main_term(r.T);
    t.add_row({num(r.T), num(static_cast<double>(per_sign)), num(zo), num(zm), num(zo - zm),
               num(static_cast<double>(r.observed)), num(r.main_term), num(r.diff)});
  }
  emit(rc, out, err, {{"compare_zeta", t}},
       {"zero file: " + o.file + " (" + std::to_string(zf.gammas.size()) + " ordinates, max " +
            format_double(zf.gammas.back()) + ")",
        "zeta main term coefficients: c1 = 1/pi = " + fixed(1 / kPi, 12) +
            ", c2 = (1/pi)(-log(2 pi) - 1) = " + fixed((-std::log(2 * kPi) - 1) / kPi, 12),
        "whittaker main term coefficients: c1 = " + fixed(rep.c1, 12) + ", c2 = " + fixed(rep.c2, 12),
        "k=" + format_double(o.k) + " u0=" + format_double(o.u0)});
}

}  // namespace

ZetaZeroFile read_zeta_zero_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open zero file " + path);
  ZetaZeroFile z;
  z.path = path;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(b, e - b + 1);
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(v))
      throw std::runtime_error("malformed value on line " + std::to_string(lineno));
    if (!(v > 0)) throw std::runtime_error("non-positive ordinate on line " + std::to_string(lineno));
    if (!z.gammas.empty() && !(v > z.gammas.back()))
      throw std::runtime_error("ordinates not strictly increasing at line " + std::to_string(lineno));
    z.gammas.push_back(v);
  }
  if (z.gammas.empty()) throw std::runtime_error("zero file is empty");
  return z;
}

double zeta_main_term(double T) {
  return T * std::log(T) / kPi + (-std::log(2 * kPi) - 1) / kPi * T;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morse half-line spectra, Whittaker zeros and related checks", "morse-cli"};
  app.require_subcommand(1);
  Globals g;
  add_globals(app, g);
  std::function<int(const RunConfig&)> action;

  EvalOpts eo;
  auto* eval = app.add_subcommand("eval", "W, regularized M and K-Bessel at one point.\n"
                                          "Columns: function,significand_re,significand_im,scale,is_real,value_re,value_im,decimal");
  eval->add_option("--kappa", eo.kappa)->required();
  eval->add_option("--mu-re", eo.mu_re);
  eval->add_option("--mu-im", eo.mu_im);
  eval->add_option("--x", eo.x)->required();
  eval->callback([&] { action = [&](const RunConfig& rc) { run_eval(rc, eo, out, err); return 0; }; });

  ZeroOpts zo;
  auto* zeros = app.add_subcommand("zeros", "Zeros of Z(mu) = W_{-k,mu}(e^u0).\n"
                                            "Columns: axis,index,coordinate,energy,residual");
  zeros->add_option("--k", zo.k)->required();
  zeros->add_option("--u0", zo.u0);
  zeros->add_option("--T", zo.T)->required();
  zeros->add_option("--step", zo.step, "scan step (default 0.25 pi / log max(T, e^2))");
  zeros->callback([&] { action = [&](const RunConfig& rc) { run_zeros(rc, zo, out, err); return 0; }; });

  CountOpts co;
  auto* count = app.add_subcommand("count", "Observed mu-plane zero count vs main term.\n"
                                            "Columns: T,observed,main_term,diff");
  count->add_option("--k", co.k)->required();
  count->add_option("--u0", co.u0);
  count->add_option("--T", co.T)->required();
  count->add_option("--checkpoints", co.checkpoints);
  count->callback([&] { action = [&](const RunConfig& rc) { run_count(rc, co, out, err); return 0; }; });

  WeylOpts wo;
  auto* weyl = app.add_subcommand("weyl", "Weyl phase-space integral vs closed form.\n"
                                          "Columns: T,weyl_integral,closed_form,closed_form_count,diff");
  weyl->add_option("--k", wo.k)->required();
  weyl->add_option("--u0", wo.u0);
  weyl->add_option("--T-list", wo.T_list)->required()->expected(1, -1);
  weyl->callback([&] { action = [&](const RunConfig& rc) { run_weyl(rc, wo, out, err); return 0; }; });

  MfuncOpts mo;
  auto* mfunc = app.add_subcommand("mfunc", "Weyl-Titchmarsh m-function over an E grid.\n"
                                            "Columns: E_re,E_im,m_re,m_im");
  mfunc->add_option("--k", mo.k)->required();
  mfunc->add_option("--u0", mo.u0);
  mfunc->add_option("--alpha", mo.alpha);
  mfunc->add_option("--e-grid", mo.grid, "re_min re_max n_re im_min im_max n_im")
      ->required()
      ->expected(6);
  mfunc->add_flag("--verify", mo.verify, "run Riccati, Herglotz, pole/zero and asymptotic checks");
  mfunc->callback([&] { action = [&](const RunConfig& rc) { return run_mfunc(rc, mo, out, err); }; });

  DbOpts dbo;
  auto* db = app.add_subcommand("debranges", "Structure-function checks.\n"
                                             "Columns: z_re,z_im,margin_log10 (+ _zeros: kind,index,t,energy;"
                                             " _identity: z, m, lhs, rhs, rel_diff, m_principal)");
  db->add_option("--u", dbo.u);
  db->add_option("--t-max", dbo.t_max);
  db->add_option("--samples", dbo.samples);
  db->callback([&] { action = [&](const RunConfig& rc) { return run_debranges(rc, dbo, out, err); }; });

  ZetaOpts zeo;
  auto* cz = app.add_subcommand("compare-zeta", "Zeta zero counts next to Whittaker zero counts.\n"
                                                "Columns: T,zeta_per_sign,zeta_observed,zeta_main,zeta_diff,"
                                                "whittaker_observed,whittaker_main,whittaker_diff");
  cz->add_option("--zeros-file", zeo.file)->required();
  cz->add_option("--k", zeo.k);
  cz->add_option("--u0", zeo.u0);
  cz->add_option("--T", zeo.T);
  cz->add_option("--checkpoints", zeo.checkpoints);
  cz->callback([&] { action = [&](const RunConfig& rc) { run_compare_zeta(rc, zeo, out, err); return 0; }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    return action(make_config(g));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kInsufficientData;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
}

namespace {
std::vector<std::string> prefixed(const char* cmd, const std::vector<std::string>& args) {
  std::vector<std::string> v{cmd};
  v.insert(v.end(), args.begin(), args.end());
  return v;
}
}  // namespace

int cmd_eval(const std::vector<std::string>& a, std::ostream& o, std::ostream& e) { return run(prefixed("eval", a), o, e); }
int cmd_zeros(const std::vector<std::string>& a, std::ostream& o, std::ostream& e) { return run(prefixed("zeros", a), o, e); }
int cmd_count(const std::vector<std::string>& a, std::ostream& o, std::ostream& e) { return run(prefixed("count", a), o, e); }
int cmd_weyl(const std::vector<std::string>& a, std::ostream& o, std::ostream& e) { return run(prefixed("weyl", a), o, e); }
int cmd_mfunc(const std::vector<std::string>& a, std::ostream& o, std::ostream& e) { return run(prefixed("mfunc", a), o, e); }
int cmd_debranges(const std::vector<std::string>& a, std::ostream& o, std::ostream& e) { return run(prefixed("debranges", a), o, e); }
int cmd_compare_zeta(const std::vector<std::string>& a, std::ostream& o, std::ostream& e) { return run(prefixed("compare-zeta", a), o, e); }

}  // namespace morse::cli
