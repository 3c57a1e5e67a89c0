// Command-line front end: turns library computations into reproducible
// JSON/CSV artifacts.  Talks to the library exclusively through the C API.
//
// Exit codes: 0 = all numerical targets met, 2 = a computation failed or a
// target was missed, 3 = malformed request.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "expsum/expsum.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 2;
constexpr int kExitUsage = 3;

// ------------------------------------------------------------------
// Serialization: shortest round-trip doubles, verified on the spot.
// ------------------------------------------------------------------

std::string fmt_double(double x) {
  if (!std::isfinite(x)) {
    std::cerr << "internal error: non-finite value in output\n";
    std::exit(kExitNumerical);
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, res.ptr);
  // The emitted text must parse back to the identical bit pattern.
  const double back = std::strtod(s.c_str(), nullptr);
  if (std::memcmp(&back, &x, sizeof x) != 0) {
    std::cerr << "internal error: float round-trip failed for " << s << "\n";
    std::exit(kExitNumerical);
  }
  return s;
}

class JsonObj {
public:
  JsonObj& field(const char* k, int v) {
    key(k);
    body_ += std::to_string(v);
    return *this;
  }
  JsonObj& field(const char* k, double v) {
    key(k);
    body_ += fmt_double(v);
    return *this;
  }
  JsonObj& field(const char* k, const std::string& v) {
    key(k);
    body_ += '"';
    for (char c : v) {  // method names and error text: escape the minimum
      if (c == '"' || c == '\\') body_ += '\\';
      body_ += c;
    }
    body_ += '"';
    return *this;
  }
  std::string str() const { return "{" + body_ + "}"; }

private:
  void key(const char* k) {
    if (!body_.empty()) body_ += ',';
    body_ += '"';
    body_ += k;
    body_ += "\":";
  }
  std::string body_;
};

std::string csv_row(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += cells[i];
  }
  return s;
}

// ------------------------------------------------------------------
// Output sink and shared configuration
// ------------------------------------------------------------------

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file) {
      std::cerr << "error: cannot open output file " << path << "\n";
      return false;
    }
    stream = file.get();
    return true;
  }
  void line(const std::string& s) { *stream << s << "\n"; }
};

struct Common {
  std::vector<int> n_list;
  int k = 0;
  int k_max = 0;
  std::vector<int> r_list;
  std::vector<std::string> methods;
  std::string format = "json";
  std::string out_path;
  std::vector<std::string> tol_kv;
};

// Parses --tol KEY=VAL pairs against a per-command whitelist.
bool parse_tols(const std::vector<std::string>& kv,
                const std::vector<std::string>& allowed,
                std::map<std::string, double>* out) {
  for (const std::string& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: --tol expects KEY=VAL, got '" << s << "'\n";
      return false;
    }
    const std::string key = s.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      std::cerr << "error: unknown tolerance key '" << key << "'\n";
      return false;
    }
    const std::string val = s.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(val.c_str(), &end);
    if (end == val.c_str() || *end != '\0' || !(v > 0.0)) {
      std::cerr << "error: tolerance '" << key << "' needs a positive number\n";
      return false;
    }
    (*out)[key] = v;
  }
  return true;
}

int status_exit(ex_status s) {
  return s == EX_USAGE_ERROR ? kExitUsage : kExitNumerical;
}

// Emits a machine-readable error record and returns the exit code.
int emit_error(Output& out, ex_status s) {
  JsonObj o;
  o.field("error", std::string(ex_status_name(s)))
      .field("message", std::string(ex_last_error()));
  out.line(o.str());
  return status_exit(s);
}

struct ZeroListDeleter {
  void operator()(ex_zero_list* p) const { ex_zero_list_free(p); }
};
using ZeroListPtr = std::unique_ptr<ex_zero_list, ZeroListDeleter>;

std::vector<ex_zero> list_items(const ex_zero_list* list) {
  std::vector<ex_zero> v(ex_zero_list_size(list));
  for (std::size_t i = 0; i < v.size(); ++i) ex_zero_list_get(list, i, &v[i]);
  return v;
}

int default_order(ex_zero_method m) {
  switch (m) {
    case EX_ZEROS_CURVE_EXPANSION: return 2;
    case EX_ZEROS_SADDLE_EXPANSION: return 4;
    default: return 0;
  }
}

std::string zero_json(const ex_zero& e, const double* distance) {
  JsonObj o;
  o.field("k", e.k)
      .field("n", e.n)
      .field("method", std::string(ex_zero_method_name(ex_zero_method(e.method))))
      .field("r", e.order_r)
      .field("re", e.value.re)
      .field("im", e.value.im)
      .field("residual", e.residual)
      .field("error_bound", e.error_bound);
  if (distance) o.field("oracle_distance", *distance);
  return o.str();
}

std::string zero_csv(const ex_zero& e, const double* distance) {
  std::vector<std::string> cells = {
      std::to_string(e.k),
      std::to_string(e.n),
      ex_zero_method_name(ex_zero_method(e.method)),
      std::to_string(e.order_r),
      fmt_double(e.value.re),
      fmt_double(e.value.im),
      fmt_double(e.residual),
      fmt_double(e.error_bound)};
  if (distance) cells.push_back(fmt_double(*distance));
  return csv_row(cells);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// ------------------------------------------------------------------
// Commands
// ------------------------------------------------------------------

int cmd_szego_curve(int samples, const Common& c) {
  Output out;
  if (!out.open(c.out_path)) return kExitNumerical;
  const bool csv = c.format == "csv";
  if (csv) out.line("theta,r,re,im");
  for (int i = 0; i < samples; ++i) {
    const double theta = -kPi + 2.0 * kPi * i / (samples - 1);
    ex_curve_sample s;
    const ex_status st = ex_szego_point(theta, &s);
    if (st != EX_OK) return emit_error(out, st);
    if (csv) {
      out.line(csv_row({fmt_double(s.theta), fmt_double(s.r),
                        fmt_double(s.z.re), fmt_double(s.z.im)}));
    } else {
      JsonObj o;
      o.field("theta", s.theta).field("r", s.r).field("re", s.z.re).field(
          "im", s.z.im);
      out.line(o.str());
    }
  }
  return kExitOk;
}

int cmd_zeros(const Common& c) {
  std::map<std::string, double> tol;
  if (!parse_tols(c.tol_kv, {"residual"}, &tol)) return kExitUsage;
  Output out;
  if (!out.open(c.out_path)) return kExitNumerical;

  const int m = ex_zero_method_parse(c.methods.at(0).c_str());
  const int n = c.n_list.at(0);
  const int r = c.r_list.empty() ? default_order(ex_zero_method(m))
                                 : c.r_list.front();
  ex_zero_list* raw = nullptr;
  const ex_status st =
      ex_zeros_compute(n, c.k, c.k == 0 ? 0 : (c.k_max ? c.k_max : c.k),
                       ex_zero_method(m), r, &raw);
  if (st != EX_OK) return emit_error(out, st);
  ZeroListPtr list(raw);

  // The certified solvers promise residual <= 1e-12; an explicit --tol
  // residual applies to every method.
  const bool certified = (m == EX_ZEROS_ORACLE || m == EX_ZEROS_NEWTON);
  const double target = tol.count("residual")
                            ? tol.at("residual")
                            : (certified ? 1e-12 : 0.0);
  bool met = true;
  if (c.format == "csv") out.line("k,n,method,r,re,im,residual,error_bound");
  for (const ex_zero& e : list_items(list.get())) {
    if (target > 0.0 && e.residual > target) met = false;
    out.line(c.format == "csv" ? zero_csv(e, nullptr) : zero_json(e, nullptr));
  }
  return met ? kExitOk : kExitNumerical;
}

int cmd_compare(const Common& c) {
  std::map<std::string, double> tol;
  if (!parse_tols(c.tol_kv, {"match"}, &tol)) return kExitUsage;
  Output out;
  if (!out.open(c.out_path)) return kExitNumerical;

  const int ma = ex_zero_method_parse(c.methods.at(0).c_str());
  const int mb = ex_zero_method_parse(c.methods.at(1).c_str());
  const int ra = c.r_list.empty() ? default_order(ex_zero_method(ma))
                                  : c.r_list.front();
  const int rb = c.r_list.size() < 2 ? default_order(ex_zero_method(mb))
                                     : c.r_list[1];

  if (c.format == "csv") {
    out.line("k,n,method,r,re,im,residual,error_bound,oracle_distance");
  }
  std::vector<double> all_dist;
  std::vector<double> ln_n, ln_max;
  bool certified = true;
  double cert_max = 0.0;
  for (int n : c.n_list) {
    ex_zero_list* rawa = nullptr;
    ex_status st = ex_zeros_compute(n, c.k, c.k == 0 ? 0 : (c.k_max ? c.k_max : c.k),
                                    ex_zero_method(ma), ra, &rawa);
    if (st != EX_OK) return emit_error(out, st);
    ZeroListPtr la(rawa);
    ex_zero_list* rawb = nullptr;
    st = ex_zeros_compute(n, c.k, c.k == 0 ? 0 : (c.k_max ? c.k_max : c.k),
                          ex_zero_method(mb), rb, &rawb);
    if (st != EX_OK) return emit_error(out, st);
    ZeroListPtr lb(rawb);

    // Both methods index their records by k, so the per-k distance table is
    // a direct join; rows carry the first method's records.
    const auto items_a = list_items(la.get());
    const auto items_b = list_items(lb.get());
    std::map<int, const ex_zero*> by_k;
    for (const ex_zero& e : items_b) by_k[e.k] = &e;
    double max_d = 0.0;
    for (const ex_zero& e : items_a) {
      const auto it = by_k.find(e.k);
      if (it == by_k.end()) continue;
      const double d = std::hypot(e.value.re - it->second->value.re,
                                  e.value.im - it->second->value.im);
      out.line(c.format == "csv" ? zero_csv(e, &d) : zero_json(e, &d));
      all_dist.push_back(d);
      max_d = std::max(max_d, d);
    }

    // A set-level target additionally requires the strict nearest-neighbor
    // matching (no index trust) to be unambiguous.
    if (tol.count("match")) {
      const ex_zero_list* pred = la.get();
      const ex_zero_list* ref = lb.get();
      if (ex_zero_list_size(pred) > ex_zero_list_size(ref)) std::swap(pred, ref);
      double matched_max = 0.0;
      st = ex_match_zeros(pred, ref, nullptr, nullptr, &matched_max, nullptr);
      if (st != EX_OK) return emit_error(out, st);
      cert_max = std::max(cert_max, matched_max);
      if (matched_max > tol.at("match")) certified = false;
    }

    if (max_d > 0.0) {
      ln_n.push_back(std::log(double(n)));
      ln_max.push_back(std::log(max_d));
    }
  }

  const double max_all =
      all_dist.empty() ? 0.0 : *std::max_element(all_dist.begin(), all_dist.end());
  if (c.format != "csv") {
    JsonObj o;
    o.field("max_distance", max_all)
        .field("median_distance", all_dist.empty() ? 0.0 : median(all_dist))
        .field("count", int(all_dist.size()));
    if (tol.count("match")) o.field("matched_max_distance", cert_max);
    if (c.n_list.size() >= 2 && ln_n.size() == c.n_list.size()) {
      // Least-squares slope of ln(max distance) against ln n.
      double mx = 0, my = 0;
      for (std::size_t i = 0; i < ln_n.size(); ++i) {
        mx += ln_n[i];
        my += ln_max[i];
      }
      mx /= ln_n.size();
      my /= ln_n.size();
      double num = 0, den = 0;
      for (std::size_t i = 0; i < ln_n.size(); ++i) {
        num += (ln_n[i] - mx) * (ln_max[i] - my);
        den += (ln_n[i] - mx) * (ln_n[i] - mx);
      }
      o.field("slope", num / den);
    }
    out.line(o.str());
  }
  return certified ? kExitOk : kExitNumerical;
}

int cmd_fn_eval(double re, double im, const Common& c) {
  std::map<std::string, double> tol;
  if (!parse_tols(c.tol_kv, {"discrepancy"}, &tol)) return kExitUsage;
  Output out;
  if (!out.open(c.out_path)) return kExitNumerical;

  static const std::map<std::string, ex_fn_method> kMethods = {
      {"quadrature", EX_FN_QUADRATURE},
      {"residue", EX_FN_RESIDUE},
      {"parametrix", EX_FN_PARAMETRIX},
      {"local", EX_FN_LOCAL},
      {"outer", EX_FN_OUTER}};
  const ex_fn_method method = kMethods.at(c.methods.at(0));
  const int n = c.n_list.at(0);
  int r = 0;
  if (!c.r_list.empty()) {
    r = c.r_list.front();
  } else if (method == EX_FN_LOCAL) {
    r = 1;
  } else if (method == EX_FN_OUTER) {
    r = 2;
  }

  const ex_complex z{re, im};
  ex_complex value;
  double est = 0.0;
  ex_status st = ex_fn_eval(n, z, method, r, &value, &est);
  if (st != EX_OK) return emit_error(out, st);
  // Cross-check against the independent route.
  const ex_fn_method check_method =
      method == EX_FN_RESIDUE ? EX_FN_QUADRATURE : EX_FN_RESIDUE;
  ex_complex check;
  st = ex_fn_eval(n, z, check_method, 0, &check, nullptr);
  if (st != EX_OK) return emit_error(out, st);
  const double disc = std::hypot(value.re - check.re, value.im - check.im);

  if (c.format == "csv") {
    out.line(
        "n,method,r,z_re,z_im,value_re,value_im,error_estimate,check_re,"
        "check_im,discrepancy");
    out.line(csv_row({std::to_string(n), c.methods.at(0), std::to_string(r),
                      fmt_double(z.re), fmt_double(z.im), fmt_double(value.re),
                      fmt_double(value.im), fmt_double(est),
                      fmt_double(check.re), fmt_double(check.im),
                      fmt_double(disc)}));
  } else {
    JsonObj o;
    o.field("n", n)
        .field("method", c.methods.at(0))
        .field("r", r)
        .field("z_re", z.re)
        .field("z_im", z.im)
        .field("value_re", value.re)
        .field("value_im", value.im)
        .field("error_estimate", est)
        .field("check_re", check.re)
        .field("check_im", check.im)
        .field("discrepancy", disc);
    out.line(o.str());
  }
  const bool met = !tol.count("discrepancy") || disc <= tol.at("discrepancy");
  return met ? kExitOk : kExitNumerical;
}

int cmd_stirling(const Common& c) {
  std::map<std::string, double> tol;
  if (!parse_tols(c.tol_kv, {"stirling_rel"}, &tol)) return kExitUsage;
  Output out;
  if (!out.open(c.out_path)) return kExitNumerical;

  const int n = c.n_list.at(0);
  ex_complex quad;
  double check = 0.0, disc = 0.0;
  const ex_status st = ex_stirling(n, &quad, &check, &disc);
  if (st != EX_OK) return emit_error(out, st);
  const double rel = disc / check;

  if (c.format == "csv") {
    out.line("n,method,value_re,value_im,check_value,discrepancy,relative_error");
    out.line(csv_row({std::to_string(n), "quadrature", fmt_double(quad.re),
                      fmt_double(quad.im), fmt_double(check), fmt_double(disc),
                      fmt_double(rel)}));
  } else {
    JsonObj o;
    o.field("n", n)
        .field("method", std::string("quadrature"))
        .field("value_re", quad.re)
        .field("value_im", quad.im)
        .field("check_value", check)
        .field("discrepancy", disc)
        .field("relative_error", rel);
    out.line(o.str());
  }
  const double target = tol.count("stirling_rel") ? tol.at("stirling_rel") : 1e-11;
  return rel <= target ? kExitOk : kExitNumerical;
}

int cmd_erfc_zeros(int count, const Common& c) {
  std::map<std::string, double> tol;
  if (!parse_tols(c.tol_kv, {"residual"}, &tol)) return kExitUsage;
  Output out;
  if (!out.open(c.out_path)) return kExitNumerical;

  const double target = tol.count("residual") ? tol.at("residual") : 1e-12;
  bool met = true;
  std::vector<std::string> records;
  for (int k = 1; k <= count; ++k) {
    ex_complex w;
    double resid = 0.0;
    const ex_status st = ex_erfc_zero(k, &w, &resid);
    if (st != EX_OK) return emit_error(out, st);
    if (resid > target) met = false;
    if (c.format == "csv") {
      records.push_back(csv_row({std::to_string(k), fmt_double(w.re),
                                 fmt_double(w.im), fmt_double(resid)}));
    } else {
      JsonObj o;
      o.field("k", k).field("re", w.re).field("im", w.im).field("residual",
                                                                resid);
      records.push_back(o.str());
    }
  }
  if (c.format == "csv") {
    out.line("k,re,im,residual");
    for (const std::string& r : records) out.line(r);
  } else {
    // This command emits one JSON array rather than JSON lines.
    std::string s = "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (i) s += ",";
      s += records[i];
    }
    s += "]";
    out.line(s);
  }
  return met ? kExitOk : kExitNumerical;
}

void add_common(CLI::App* sub, Common& c, bool multi_n, bool needs_n) {
  if (needs_n) {
    auto* opt = sub->add_option("--n", c.n_list,
                                multi_n ? "degree parameter(s) n"
                                        : "degree parameter n");
    opt->required();
    if (!multi_n) opt->expected(1);
  }
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "output file (default: stdout)");
}

void add_zero_flags(CLI::App* sub, Common& c, int method_count) {
  sub->add_option("--k", c.k, "first zero index")->check(CLI::NonNegativeNumber);
  sub->add_option("--k-max", c.k_max, "last zero index")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--r", c.r_list, "expansion order(s)")
      ->expected(1, method_count);
  auto* m = sub->add_option("--method", c.methods, "zero-location method(s)");
  m->expected(method_count)
      ->check(CLI::Validator(
          [](std::string& s) {
            return ex_zero_method_parse(s.c_str()) < 0
                       ? "unknown method '" + s + "'"
                       : std::string();
          },
          "METHOD"));
  sub->add_option("--tol", c.tol_kv, "tolerance override KEY=VAL");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Zeros of the rescaled exponential partial sums p_{n-1}(nz): limit "
      "curve, transform evaluation, and certified zero locations"};
  app.require_subcommand(1);

  Common c;
  int samples = 1000;
  double z_re = 0.0, z_im = 0.0;
  int erfc_count = 3;

  auto* sc_curve = app.add_subcommand(
      "szego-curve", "sample the limit curve |z e^{1-z}| = 1, |z| <= 1");
  sc_curve->add_option("--samples", samples, "number of samples over [-pi, pi]")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  add_common(sc_curve, c, false, false);

  auto* sc_zeros =
      app.add_subcommand("zeros", "locate zeros by the chosen method");
  add_common(sc_zeros, c, false, true);
  add_zero_flags(sc_zeros, c, 1);

  auto* sc_compare = app.add_subcommand(
      "compare", "match two methods' zero sets and report distances");
  add_common(sc_compare, c, true, true);
  add_zero_flags(sc_compare, c, 2);

  auto* sc_fn = app.add_subcommand(
      "fn-eval", "evaluate the transform F_n by one route, check by another");
  add_common(sc_fn, c, false, true);
  sc_fn->add_option("--re", z_re, "Re z")->capture_default_str();
  sc_fn->add_option("--im", z_im, "Im z")->capture_default_str();
  sc_fn->add_option("--r", c.r_list, "expansion order")->expected(1);
  sc_fn->add_option("--method", c.methods, "evaluation route")
      ->expected(1)
      ->check(CLI::IsMember({"quadrature", "residue", "parametrix", "local",
                             "outer"}));
  sc_fn->add_option("--tol", c.tol_kv, "tolerance override KEY=VAL");

  auto* sc_stirling = app.add_subcommand(
      "stirling", "normalizing constant G_n: quadrature vs closed form");
  add_common(sc_stirling, c, false, true);
  sc_stirling->add_option("--tol", c.tol_kv, "tolerance override KEY=VAL");

  auto* sc_erfc = app.add_subcommand(
      "erfc-zeros", "second-quadrant zeros of erfc, ordered by modulus");
  sc_erfc->add_option("--k-max", erfc_count, "number of zeros")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  add_common(sc_erfc, c, false, false);
  sc_erfc->add_option("--tol", c.tol_kv, "tolerance override KEY=VAL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // Range shape is a request-validity question, not a numerical one.
  if (c.k_max && c.k && c.k_max < c.k) {
    std::cerr << "error: --k-max must be >= --k\n";
    return kExitUsage;
  }
  if (c.k == 0 && c.k_max > 0) c.k = 1;

  // The curve is a plot artifact, so it defaults to CSV; everything else
  // defaults to JSON.
  CLI::App* active = app.get_subcommands().front();
  if (active->count("--format") == 0 && sc_curve->parsed()) c.format = "csv";

  if (sc_curve->parsed()) return cmd_szego_curve(samples, c);
  if (sc_zeros->parsed()) {
    if (c.methods.empty()) c.methods = {"oracle"};
    return cmd_zeros(c);
  }
  if (sc_compare->parsed()) {
    if (c.methods.empty()) {
      std::cerr << "error: compare needs --method A --method B\n";
      return kExitUsage;
    }
    return cmd_compare(c);
  }
  if (sc_fn->parsed()) {
    if (c.methods.empty()) c.methods = {"quadrature"};
    return cmd_fn_eval(z_re, z_im, c);
  }
  if (sc_stirling->parsed()) return cmd_stirling(c);
  if (sc_erfc->parsed()) return cmd_erfc_zeros(erfc_count, c);
  return kExitUsage;
}
