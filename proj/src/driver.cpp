#include "hopfkit/driver.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/bicross.hpp"
#include "hopfkit/constructions.hpp"
#include "hopfkit/integrals.hpp"
#include "hopfkit/io.hpp"
#include "hopfkit/qsl2.hpp"
#include "hopfkit/radford.hpp"
#include "json.hpp"

namespace hopfkit {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr long long kDefaultWindow = 4;
constexpr unsigned kDefaultDegree = 6;

std::string jstr(const std::string& s) { return nlohmann::json(s).dump(); }

struct Resolved {
  enum class Kind { finite, bicross, qsl } kind = Kind::finite;
  HopfPtr h;         // finite
  unsigned n = 0;    // bicross
  std::string display;
};

bool parse_uint(const std::string& s, unsigned& out) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
    return false;
  out = static_cast<unsigned>(std::stoul(s));
  return true;
}

// Recursive preset grammar; `field_used` records whether a group preset
// consumed the --field override.
HopfPtr resolve_finite(const std::string& target, const DriverOptions& opts, bool& field_used);

HopfPtr resolve_group(const std::string& arg, const DriverOptions& opts, bool& field_used) {
  FieldSpec f = FieldSpec::rationals();
  std::string display = "group:" + arg;
  if (opts.field) {
    f = parse_field_spec(*opts.field);
    field_used = true;
    display += "/" + f.str();
  }
  if (arg == "S3") return group_algebra(GroupTable::symmetric3(), f, display);
  unsigned n = 0;
  if (arg.size() >= 2 && arg[0] == 'C' && parse_uint(arg.substr(1), n) && n >= 1)
    return group_algebra(GroupTable::cyclic(n), f, display);
  fail(errc::unknown_preset, "unknown group preset \"group:" + arg + "\" (expected C<n> or S3)");
}

HopfPtr resolve_finite(const std::string& target, const DriverOptions& opts, bool& field_used) {
  if (target == "sweedler") return sweedler();
  auto colon = target.find(':');
  std::string head = target.substr(0, colon == std::string::npos ? target.size() : colon);
  std::string rest = colon == std::string::npos ? std::string{} : target.substr(colon + 1);

  if (head == "taft" && !rest.empty()) {
    unsigned n = 0;
    if (!parse_uint(rest, n) || n < 2)
      fail(errc::unknown_preset, "taft preset needs an order n >= 2, got \"" + rest + "\"");
    return taft(n);
  }
  if (head == "group" && !rest.empty()) return resolve_group(rest, opts, field_used);
  if (head == "dual" && !rest.empty()) return dual(resolve_finite(rest, opts, field_used));
  if (head == "op" && !rest.empty()) return op(resolve_finite(rest, opts, field_used));
  if (head == "cop" && !rest.empty()) return cop(resolve_finite(rest, opts, field_used));
  if (head == "tensor" && !rest.empty()) {
    // First split of the argument into two resolvable targets wins.
    for (std::size_t pos = rest.find(':'); pos != std::string::npos;
         pos = rest.find(':', pos + 1)) {
      try {
        bool fu_left = false, fu_right = false;
        HopfPtr left = resolve_finite(rest.substr(0, pos), opts, fu_left);
        HopfPtr right = resolve_finite(rest.substr(pos + 1), opts, fu_right);
        field_used = field_used || fu_left || fu_right;
        return tensor_product(left, right);
      } catch (const error&) {
        continue;
      }
    }
    fail(errc::unknown_preset,
         "tensor preset needs two resolvable components, got \"" + rest + "\"");
  }

  // Fall back to a structure-constant file.
  if (std::filesystem::exists(target)) return load_algebra(target);
  fail(errc::unknown_preset, "unknown preset or missing file \"" + target + "\"");
}

Resolved resolve_target(const std::string& target, const DriverOptions& opts) {
  Resolved r;
  auto colon = target.find(':');
  std::string head = target.substr(0, colon == std::string::npos ? target.size() : colon);

  if (head == "bicross") {
    unsigned n = 0;
    if (colon == std::string::npos || !parse_uint(target.substr(colon + 1), n) || n < 2)
      fail(errc::unknown_preset, "bicross preset needs an order n >= 2");
    if (opts.field)
      fail(errc::invalid_argument, "bicross presets fix their own field Q(zeta_n)");
    r.kind = Resolved::Kind::bicross;
    r.n = n;
    r.display = target;
    return r;
  }
  if (target == "qsl2") {
    if (opts.field) fail(errc::invalid_argument, "qsl2 fixes its own field Q(q)");
    r.kind = Resolved::Kind::qsl;
    r.display = target;
    return r;
  }

  bool field_used = false;
  r.h = resolve_finite(target, opts, field_used);
  if (opts.field && !field_used)
    fail(errc::invalid_argument,
         "--field applies only to group presets; target \"" + target + "\" does not take it");
  r.kind = Resolved::Kind::finite;
  r.display = r.h->name();
  return r;
}

VerificationReport mainss_not_applicable(const std::string& which) {
  VerificationReport rep;
  rep.not_applicable("mainss-finite-dimension",
                     which + " is infinite dimensional; the six-condition semisimplicity "
                             "battery is defined for finite-dimensional presentations only");
  return rep;
}

std::string window_desc(const Resolved& r, long long K, unsigned D) {
  switch (r.kind) {
    case Resolved::Kind::bicross: return "window |k| <= " + std::to_string(K);
    case Resolved::Kind::qsl: return "degree <= " + std::to_string(D);
    case Resolved::Kind::finite: return "";
  }
  return "";
}

VerificationReport run_verify(const Resolved& r, const std::string& battery, long long K,
                              unsigned D, unsigned long bound) {
  if (r.kind == Resolved::Kind::finite) {
    const HopfPtr& h = r.h;
    if (battery == "axioms") return verify_axioms(*h);
    if (battery == "integrals") return integrals_battery(h);
    if (battery == "radford") return radford_battery(h);
    if (battery == "mainss") return semisimplicity_battery(h, compute_integrals(h));
    if (battery == "all") {
      VerificationReport rep = verify_axioms(*h);
      rep.merge(integrals_battery(h));
      rep.merge(radford_battery(h));
      return rep;
    }
  } else if (r.kind == Resolved::Kind::bicross) {
    BicrossEngine eng(r.n);
    if (battery == "axioms") return eng.axioms_window(K);
    if (battery == "integrals") return eng.integrals_window(K);
    if (battery == "radford") return eng.radford_window(K);
    if (battery == "mainss") return mainss_not_applicable("H_" + std::to_string(r.n));
    if (battery == "all") {
      VerificationReport rep = eng.battery(K);
      rep.merge(mainss_not_applicable("H_" + std::to_string(r.n)));
      return rep;
    }
  } else {
    if (battery == "axioms") return qsl_axioms(D);
    if (battery == "integrals") return verify_left_integral(D);
    if (battery == "radford") {
      VerificationReport rep = verify_chi_alpha(D);
      rep.merge(qsl_order_checks(bound));
      return rep;
    }
    if (battery == "mainss") return mainss_not_applicable("k[SL_q(2)]");
    if (battery == "all") {
      VerificationReport rep = qsl_battery(D);
      rep.merge(mainss_not_applicable("k[SL_q(2)]"));
      return rep;
    }
  }
  fail(errc::unknown_preset, "unknown battery \"" + battery +
                                 "\" (expected axioms, integrals, radford, mainss, or all)");
}

// ---------------------------------------------------------------------------
// Inspect

std::string element_table(const HopfPtr& h, const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < h->dim(); ++i) {
    std::vector<Scalar> col;
    col.reserve(h->dim());
    for (std::size_t r = 0; r < h->dim(); ++r) col.push_back(m.at(r, i));
    if (!out.empty()) out += "; ";
    out += h->basis_names()[i] + " -> " + h->element(std::move(col)).str();
  }
  return out;
}

VerificationReport inspect_finite(const HopfPtr& h, const std::string& what,
                                  unsigned long bound_opt) {
  VerificationReport rep;
  unsigned long bound = bound_opt ? bound_opt : default_order_bound(h);
  IntegralData integrals = compute_integrals(h);
  if (what == "integrals") {
    rep.pass("integral-left-H", "value: " + integrals.left_H.str());
    rep.pass("integral-right-H", "value: " + integrals.right_H.str());
    rep.pass("integral-left-Hstar", "value: " + integrals.left_Hstar.str());
    rep.pass("integral-right-Hstar", "value: " + integrals.right_Hstar.str());
    return rep;
  }
  if (what == "grouplikes") {
    GrouplikeData gl = compute_grouplikes(h, integrals);
    rep.pass("grouplike-alpha", "value: " + gl.alpha.str());
    rep.pass("grouplike-alpha-inverse", "value: " + gl.alpha_inv.str());
    rep.pass("grouplike-g", "value: " + gl.g.str());
    rep.pass("grouplike-g-inverse", "value: " + gl.g_inv.str());
    rep.pass("order-alpha", "value: " + order_of_character(gl.alpha, bound).str() + "; bound " +
                                std::to_string(bound));
    rep.pass("order-g", "value: " + order_of_grouplike(gl.g, bound).str() + "; bound " +
                            std::to_string(bound));
    return rep;
  }
  if (what == "nakayama") {
    GrouplikeData gl = compute_grouplikes(h, integrals);
    Matrix chi = nakayama_chi(h, integrals);
    Matrix omega = nakayama_omega(h, integrals);
    rep.pass("nakayama-chi", "value: " + element_table(h, chi));
    rep.pass("nakayama-omega", "value: " + element_table(h, omega));
    bool agree = chi == chi_closed_form(h, gl) && chi == chi_conjugated_form(h, gl);
    rep.add("nakayama-chi-closed-forms-agree", agree, agree ? "" : "closed forms disagree",
            "linear solve vs alpha(h2) S^-2(h1) vs alpha(h1) g^-1 S^2(h2) g");
    return rep;
  }
  if (what == "orders") {
    GrouplikeData gl = compute_grouplikes(h, integrals);
    AntipodeOrders orders = antipode_orders(h, gl, bound);
    std::string b = "; bound " + std::to_string(bound);
    rep.pass("order-antipode", "value: " + orders.antipode.str() + b);
    rep.pass("order-antipode-squared", "value: " + orders.antipode_squared.str() + b);
    rep.pass("order-alpha", "value: " + orders.alpha.str() + b);
    rep.pass("order-g", "value: " + orders.g.str() + b);
    return rep;
  }
  fail(errc::unknown_preset, "unknown inspect topic \"" + what +
                                 "\" (expected integrals, grouplikes, nakayama, or orders)");
}

VerificationReport inspect_bicross(unsigned n, const std::string& what, long long K,
                                   unsigned long bound_opt) {
  BicrossEngine eng(n);
  unsigned long bound = bound_opt ? bound_opt : 100;
  VerificationReport rep;
  if (what == "integrals") {
    rep.pass("integral-right-Hstar", "value: " + eng.integral_lambda().str());
    rep.not_applicable("integral-left-H",
                       "H_n has no nonzero integrals in H itself (infinite dimensional); the "
                       "co-Frobenius structure lives in the functional integrals");
    return rep;
  }
  if (what == "grouplikes") {
    SparseElement g = eng.distinguished_g(std::max(K, static_cast<long long>(n)));
    BicrossCharacter alpha = eng.distinguished_alpha(K);
    rep.pass("grouplike-g", "value: " + g.str());
    rep.pass("grouplike-alpha", "value: alpha(c (x) e) = " + alpha.on_c.str() +
                                    "; alpha(x (x) e) = " + alpha.on_x.str() +
                                    "; alpha(1 (x) a) = " + alpha.on_a.str());
    rep.pass("order-alpha", "value: " + eng.order_of_character(alpha, bound).str() + "; bound " +
                                std::to_string(bound));
    rep.pass("order-g", "value: " + eng.order_of_grouplike(g, bound).str() + "; bound " +
                            std::to_string(bound));
    return rep;
  }
  if (what == "nakayama") {
    VerificationReport win = eng.integrals_window(K);
    for (const char* name : {"bicross-nakayama-commutation", "bicross-alpha-character"})
      if (const CheckResult* c = win.find(name)) rep.checks.push_back(*c);
    BicrossCharacter alpha = eng.distinguished_alpha(K);
    rep.pass("nakayama-alpha-values", "value: alpha(c (x) e) = " + alpha.on_c.str() +
                                          "; alpha(1 (x) a) = " + alpha.on_a.str());
    return rep;
  }
  if (what == "orders") {
    SparseElement g = eng.distinguished_g(std::max(K, static_cast<long long>(n)));
    BicrossCharacter alpha = eng.distinguished_alpha(K);
    std::string b = "; bound " + std::to_string(bound);
    rep.pass("order-antipode", "value: " + eng.order_of_antipode(K, bound).str() + b);
    rep.pass("order-alpha", "value: " + eng.order_of_character(alpha, bound).str() + b);
    rep.pass("order-g", "value: " + eng.order_of_grouplike(g, bound).str() + b);
    return rep;
  }
  fail(errc::unknown_preset, "unknown inspect topic \"" + what +
                                 "\" (expected integrals, grouplikes, nakayama, or orders)");
}

VerificationReport inspect_qsl(const std::string& what, unsigned D, unsigned long bound_opt) {
  VerificationReport rep;
  unsigned long bound = bound_opt ? bound_opt : 12;
  if (what == "integrals") {
    std::string vals = "lambda(1) = " + lambda_eval(qsl_one()).str();
    for (unsigned m = 1; m <= std::min(D, 4u); ++m) {
      if (2 * m > D) break;
      QslElement bm = qsl_monomial(0, m, m, 0);
      vals += "; lambda(b^" + std::to_string(m) + " c^" + std::to_string(m) +
              ") = " + lambda_eval(bm).str();
    }
    vals += "; lambda(da) = " + lambda_eval(normal_form("da")).str();
    rep.pass("integral-left-Hstar", "value: " + vals);
    rep.not_applicable("integral-left-H",
                       "k[SL_q(2)] has no nonzero integrals in H itself; lambda spans the "
                       "one-dimensional space of left integrals in the finite dual");
    return rep;
  }
  if (what == "grouplikes") {
    std::vector<Scalar> av = qsl_alpha_values();
    rep.pass("grouplike-g", "value: 1 (the distinguished grouplike is trivial: lambda(h_1) h_2 "
                            "= lambda(h) 1)");
    rep.pass("grouplike-alpha", "value: alpha(a) = " + av[0].str() + "; alpha(b) = " +
                                    av[1].str() + "; alpha(c) = " + av[2].str() +
                                    "; alpha(d) = " + av[3].str());
    // alpha^m(a) = q^{-2m} never returns to 1: report the honest search.
    unsigned long m = 1;
    for (; m <= bound; ++m)
      if (av[0].pow(static_cast<long long>(m)).is_one() &&
          av[3].pow(static_cast<long long>(m)).is_one())
        break;
    OrderResult oa{m <= bound ? std::optional<unsigned long>(m) : std::nullopt, bound};
    rep.pass("order-alpha", "value: " + oa.str() + "; bound " + std::to_string(bound));
    rep.pass("order-g", "value: 1");
    return rep;
  }
  if (what == "nakayama") {
    rep.pass("nakayama-chi-a", "value: " + qsl_chi(QslGen::a).str());
    rep.pass("nakayama-chi-b", "value: " + qsl_chi(QslGen::b).str());
    rep.pass("nakayama-chi-c", "value: " + qsl_chi(QslGen::c).str());
    rep.pass("nakayama-chi-d", "value: " + qsl_chi(QslGen::d).str());
    VerificationReport ca = verify_chi_alpha(std::max(D, 2u));
    for (const char* name : {"qsl-chi-intertwines", "qsl-chi-closed-form"})
      if (const CheckResult* c = ca.find(name)) rep.checks.push_back(*c);
    return rep;
  }
  if (what == "orders") {
    rep.pass("order-antipode", "value: " + qsl_antipode_order(bound).str() + "; bound " +
                                   std::to_string(bound));
    rep.pass("order-antipode-squared",
             "value: " + [&] {
               // S^2 scales b by q^2; the same search on the squared map.
               QslElement b = qsl_gen(QslGen::b);
               for (unsigned long m = 1; m <= bound; ++m)
                 if (qsl_antipode(b, 2 * static_cast<long long>(m)) == b)
                   return std::to_string(m);
               return "exceeds-bound(" + std::to_string(bound) + ")";
             }() + "; bound " + std::to_string(bound));
    return rep;
  }
  fail(errc::unknown_preset, "unknown inspect topic \"" + what +
                                 "\" (expected integrals, grouplikes, nakayama, or orders)");
}

}  // namespace

const char* engine_version() { return kVersion; }

std::string ReportDocument::json() const {
  std::size_t passes = 0, fails = 0, nas = 0;
  for (const CheckResult& c : report.checks) {
    if (c.status == CheckStatus::pass) ++passes;
    else if (c.status == CheckStatus::fail) ++fails;
    else ++nas;
  }
  std::ostringstream out;
  out << "{\"engine\":" << jstr(engine) << ",\"command\":" << jstr(command)
      << ",\"target\":" << jstr(target) << ",\"battery\":" << jstr(battery)
      << ",\"window\":" << jstr(window) << ",\"status\":" << jstr(ok() ? "pass" : "fail")
      << ",\"checks\":" << report.checks.size() << ",\"passed\":" << passes
      << ",\"failed\":" << fails << ",\"not_applicable\":" << nas << "}\n";
  for (const CheckResult& c : report.checks)
    out << "{\"check\":" << jstr(c.name) << ",\"status\":" << jstr(to_string(c.status))
        << ",\"witness\":" << jstr(c.witness) << ",\"detail\":" << jstr(c.detail) << "}\n";
  return out.str();
}

std::string ReportDocument::table() const {
  std::size_t name_w = 5;  // "CHECK"
  for (const CheckResult& c : report.checks) name_w = std::max(name_w, c.name.size());
  constexpr std::size_t status_w = 14;  // "not-applicable"
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(s.size() < w ? w - s.size() : 0, ' ');
  };
  std::ostringstream out;
  out << "target: " << target << "\nbattery: " << battery;
  if (!window.empty()) out << "   (" << window << ")";
  out << "\nengine: " << engine << "\nstatus: " << (ok() ? "pass" : "FAIL") << "\n\n";
  out << pad("CHECK", name_w) << "  " << pad("STATUS", status_w) << "  DETAIL\n";
  for (const CheckResult& c : report.checks) {
    std::string info = c.detail;
    if (!c.witness.empty()) {
      if (!info.empty()) info += "  ";
      info += "witness: " + c.witness;
    }
    out << pad(c.name, name_w) << "  " << pad(to_string(c.status), status_w) << "  " << info
        << "\n";
  }
  return out.str();
}

ReportDocument cmd_verify(const std::string& target, const std::string& battery,
                          const DriverOptions& opts) {
  Resolved r = resolve_target(target, opts);
  long long K = opts.window.value_or(kDefaultWindow);
  unsigned D = opts.degree.value_or(kDefaultDegree);
  if (K < 0) fail(errc::invalid_argument, "window must be nonnegative");
  ReportDocument doc;
  doc.engine = std::string("hopfkit ") + kVersion;
  doc.command = "verify";
  doc.target = r.display;
  doc.battery = battery;
  doc.window = window_desc(r, K, D);
  doc.report = run_verify(r, battery, K, D, opts.order_bound.value_or(12));
  return doc;
}

ReportDocument cmd_inspect(const std::string& target, const std::string& what,
                           const DriverOptions& opts) {
  Resolved r = resolve_target(target, opts);
  long long K = opts.window.value_or(kDefaultWindow);
  unsigned D = opts.degree.value_or(kDefaultDegree);
  if (K < 0) fail(errc::invalid_argument, "window must be nonnegative");
  ReportDocument doc;
  doc.engine = std::string("hopfkit ") + kVersion;
  doc.command = "inspect";
  doc.target = r.display;
  doc.battery = what;
  doc.window = window_desc(r, K, D);
  unsigned long bound = opts.order_bound.value_or(0);
  switch (r.kind) {
    case Resolved::Kind::finite: doc.report = inspect_finite(r.h, what, bound); break;
    case Resolved::Kind::bicross: doc.report = inspect_bicross(r.n, what, K, bound); break;
    case Resolved::Kind::qsl: doc.report = inspect_qsl(what, D, bound); break;
  }
  return doc;
}

std::string export_preset(const std::string& target, const DriverOptions& opts) {
  Resolved r = resolve_target(target, opts);
  if (r.kind != Resolved::Kind::finite)
    fail(errc::invalid_argument,
         "only finite-dimensional presentations export to structure-constant files");
  return export_algebra(*r.h);
}

}  // namespace hopfkit
