#include "hopfkit/qsl2.hpp"

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

namespace {

void add_term(std::map<PBWMonomial, Scalar>& m, const PBWMonomial& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) m.erase(it);
}

void add_tensor_term(std::map<std::pair<PBWMonomial, PBWMonomial>, Scalar>& m,
                     const PBWMonomial& l, const PBWMonomial& r, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(l, r);
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) m.erase(it);
}

std::string power_str(const char* g, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return std::string(g) + "^" + std::to_string(e);
}

// Right-multiplication of a normal monomial by one generator, rewritten to
// the PBW basis through the closed commutation forms.  At most two terms.
void mono_times_gen(const PBWMonomial& m, QslGen g, const Scalar& coeff,
                    std::map<PBWMonomial, Scalar>& out) {
  Scalar q = qsl_q();
  switch (g) {
    case QslGen::a: {
      if (m.l == 0) {
        // c^k a = q^k a c^k and b^j a = q^j a b^j.
        add_term(out, PBWMonomial{m.i + 1, m.j, m.k, 0},
                 coeff * q.pow(static_cast<long long>(m.j) + m.k));
      } else {
        // d^l a = d^{l-1} + q^{2l-1} b c d^{l-1} via da = 1 + q bc.
        add_term(out, PBWMonomial{0, m.j, m.k, m.l - 1}, coeff);
        add_term(out, PBWMonomial{0, m.j + 1, m.k + 1, m.l - 1},
                 coeff * q.pow(2ll * m.l - 1));
      }
      return;
    }
    case QslGen::b:
      // d^l b = q^l b d^l; b commutes with c.
      add_term(out, PBWMonomial{m.i, m.j + 1, m.k, m.l}, coeff * q.pow(m.l));
      return;
    case QslGen::c:
      // d^l c = q^l c d^l.
      add_term(out, PBWMonomial{m.i, m.j, m.k + 1, m.l}, coeff * q.pow(m.l));
      return;
    case QslGen::d: {
      if (m.i == 0) {
        add_term(out, PBWMonomial{0, m.j, m.k, m.l + 1}, coeff);
      } else {
        // c^k d = q^{-k} d c^k, b^j d = q^{-j} d b^j, then
        // a^i d = a^{i-1} (1 + q^{-1} bc).
        Scalar base = coeff * q.pow(-static_cast<long long>(m.j) - m.k);
        add_term(out, PBWMonomial{m.i - 1, m.j, m.k, 0}, base);
        add_term(out, PBWMonomial{m.i - 1, m.j + 1, m.k + 1, 0}, base * q.inv());
      }
      return;
    }
  }
  fail(errc::internal, "unknown generator");
}

QslElement element_times_gen(const QslElement& u, QslGen g) {
  QslElement out;
  for (const auto& [m, c] : u.terms) mono_times_gen(m, g, c, out.terms);
  return out;
}

QslElement element_times_mono(const QslElement& u, const PBWMonomial& m, const Scalar& c) {
  QslElement cur = qsl_scale(c, u);
  for (unsigned t = 0; t < m.i; ++t) cur = element_times_gen(cur, QslGen::a);
  for (unsigned t = 0; t < m.j; ++t) cur = element_times_gen(cur, QslGen::b);
  for (unsigned t = 0; t < m.k; ++t) cur = element_times_gen(cur, QslGen::c);
  for (unsigned t = 0; t < m.l; ++t) cur = element_times_gen(cur, QslGen::d);
  return cur;
}

QslTensor tensor_mul(const QslTensor& s, const QslTensor& t) {
  QslTensor out;
  for (const auto& [ps, cs] : s.terms)
    for (const auto& [pt, ct] : t.terms) {
      QslElement left = qsl_mul(qsl_monomial(ps.first.i, ps.first.j, ps.first.k, ps.first.l),
                                qsl_monomial(pt.first.i, pt.first.j, pt.first.k, pt.first.l));
      if (left.is_zero()) continue;
      QslElement right = qsl_mul(qsl_monomial(ps.second.i, ps.second.j, ps.second.k, ps.second.l),
                                 qsl_monomial(pt.second.i, pt.second.j, pt.second.k, pt.second.l));
      if (right.is_zero()) continue;
      Scalar cc = cs * ct;
      for (const auto& [lm, lc] : left.terms)
        for (const auto& [rm, rc] : right.terms) add_tensor_term(out.terms, lm, rm, cc * lc * rc);
    }
  return out;
}

QslTensor gen_comul(QslGen g) {
  QslTensor out;
  Scalar one = Scalar::one(qsl_field());
  switch (g) {
    case QslGen::a:
      add_tensor_term(out.terms, PBWMonomial{1, 0, 0, 0}, PBWMonomial{1, 0, 0, 0}, one);
      add_tensor_term(out.terms, PBWMonomial{0, 1, 0, 0}, PBWMonomial{0, 0, 1, 0}, one);
      break;
    case QslGen::b:
      add_tensor_term(out.terms, PBWMonomial{1, 0, 0, 0}, PBWMonomial{0, 1, 0, 0}, one);
      add_tensor_term(out.terms, PBWMonomial{0, 1, 0, 0}, PBWMonomial{0, 0, 0, 1}, one);
      break;
    case QslGen::c:
      add_tensor_term(out.terms, PBWMonomial{0, 0, 1, 0}, PBWMonomial{1, 0, 0, 0}, one);
      add_tensor_term(out.terms, PBWMonomial{0, 0, 0, 1}, PBWMonomial{0, 0, 1, 0}, one);
      break;
    case QslGen::d:
      add_tensor_term(out.terms, PBWMonomial{0, 0, 1, 0}, PBWMonomial{0, 1, 0, 0}, one);
      add_tensor_term(out.terms, PBWMonomial{0, 0, 0, 1}, PBWMonomial{0, 0, 0, 1}, one);
      break;
  }
  return out;
}

QslTensor comul_monomial(const PBWMonomial& m) {
  QslTensor acc;
  add_tensor_term(acc.terms, PBWMonomial{}, PBWMonomial{}, Scalar::one(qsl_field()));
  for (unsigned t = 0; t < m.i; ++t) acc = tensor_mul(acc, gen_comul(QslGen::a));
  for (unsigned t = 0; t < m.j; ++t) acc = tensor_mul(acc, gen_comul(QslGen::b));
  for (unsigned t = 0; t < m.k; ++t) acc = tensor_mul(acc, gen_comul(QslGen::c));
  for (unsigned t = 0; t < m.l; ++t) acc = tensor_mul(acc, gen_comul(QslGen::d));
  return acc;
}

// One application of S (or S^{-1}): the anti-algebra extension of the
// generator images lands directly in normal form,
// S(a^i b^j c^k d^l) = (-1)^{j+k} q^{j-k} a^l b^j c^k d^i.
QslElement antipode_once(const QslElement& u, bool inverse) {
  Scalar q = qsl_q();
  QslElement out;
  for (const auto& [m, c] : u.terms) {
    long long e = static_cast<long long>(m.j) - static_cast<long long>(m.k);
    Scalar sc = q.pow(inverse ? -e : e);
    if ((m.j + m.k) % 2 == 1) sc = -sc;
    add_term(out.terms, PBWMonomial{m.l, m.j, m.k, m.i}, c * sc);
  }
  return out;
}

std::string degree_desc(unsigned D, std::size_t count) {
  return "degree <= " + std::to_string(D) + ", " + std::to_string(count) + " basis monomials";
}

const char* kWindowNote = "qsl-window-note";
const char* kWindowNoteText =
    "functional identities are verified on the stated degree window only; "
    "the basis is infinite, so window checks do not certify them globally";

}  // namespace

// ---------------------------------------------------------------------------
// Field and value types

const FieldSpec& qsl_field() {
  static const FieldSpec f = FieldSpec::rational_functions("q");
  return f;
}

Scalar qsl_q() { return Scalar::generator(qsl_field()); }

std::string PBWMonomial::str() const {
  const std::pair<const char*, unsigned> parts[] = {{"a", i}, {"b", j}, {"c", k}, {"d", l}};
  std::string out;
  for (const auto& [g, e] : parts) {
    std::string p = power_str(g, e);
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out.empty() ? "1" : out;
}

Scalar QslElement::coeff(const PBWMonomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Scalar::zero(qsl_field()) : it->second;
}

std::string QslElement::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string cs = c.str();
    bool neg = cs.size() > 1 && cs[0] == '-' && (-c).str() == cs.substr(1);
    if (out.empty()) {
      if (neg) {
        out += "-";
        cs = cs.substr(1);
      }
    } else {
      out += neg ? " - " : " + ";
      if (neg) cs = cs.substr(1);
    }
    if (cs == "1")
      out += m.str();
    else if (cs.find_first_of("+-/ ") != std::string::npos)
      out += "(" + cs + ")*" + m.str();
    else
      out += cs + "*" + m.str();
  }
  return out;
}

std::string QslTensor::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [pr, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string cs = c.str();
    if (cs != "1") out += "(" + cs + ")*";
    out += "(" + pr.first.str() + ") (x) (" + pr.second.str() + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Construction and arithmetic

QslElement qsl_zero() { return QslElement{}; }

QslElement qsl_one() {
  QslElement out;
  out.terms.emplace(PBWMonomial{}, Scalar::one(qsl_field()));
  return out;
}

QslElement qsl_monomial(unsigned i, unsigned j, unsigned k, unsigned l) {
  if (i > 0 && l > 0)
    fail(errc::invalid_argument, "PBW monomial needs i = 0 or l = 0, got a^" + std::to_string(i) +
                                     "...d^" + std::to_string(l));
  QslElement out;
  out.terms.emplace(PBWMonomial{i, j, k, l}, Scalar::one(qsl_field()));
  return out;
}

QslElement qsl_gen(QslGen g) {
  switch (g) {
    case QslGen::a: return qsl_monomial(1, 0, 0, 0);
    case QslGen::b: return qsl_monomial(0, 1, 0, 0);
    case QslGen::c: return qsl_monomial(0, 0, 1, 0);
    case QslGen::d: return qsl_monomial(0, 0, 0, 1);
  }
  fail(errc::internal, "unknown generator");
}

QslElement qsl_add(const QslElement& u, const QslElement& v) {
  QslElement out = u;
  for (const auto& [m, c] : v.terms) add_term(out.terms, m, c);
  return out;
}

QslElement qsl_scale(const Scalar& c, const QslElement& u) {
  QslElement out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : u.terms) out.terms.emplace(m, c * v);
  return out;
}

QslElement normal_form(const std::vector<QslGen>& word) {
  QslElement acc = qsl_one();
  for (QslGen g : word) acc = element_times_gen(acc, g);
  return acc;
}

QslElement normal_form(std::string_view word) {
  std::vector<QslGen> gens;
  gens.reserve(word.size());
  for (char ch : word) {
    switch (ch) {
      case 'a': gens.push_back(QslGen::a); break;
      case 'b': gens.push_back(QslGen::b); break;
      case 'c': gens.push_back(QslGen::c); break;
      case 'd': gens.push_back(QslGen::d); break;
      default:
        fail(errc::invalid_argument, std::string("generator word may only contain a, b, c, d; got '") +
                                         ch + "'");
    }
  }
  return normal_form(gens);
}

QslElement qsl_mul(const QslElement& u, const QslElement& v) {
  QslElement out;
  for (const auto& [m, c] : v.terms) {
    QslElement part = element_times_mono(u, m, c);
    for (const auto& [pm, pc] : part.terms) add_term(out.terms, pm, pc);
  }
  return out;
}

QslTensor qsl_comul(const QslElement& u) {
  QslTensor out;
  for (const auto& [m, c] : u.terms) {
    QslTensor dm = comul_monomial(m);
    for (const auto& [pr, cm] : dm.terms) add_tensor_term(out.terms, pr.first, pr.second, c * cm);
  }
  return out;
}

Scalar qsl_counit(const QslElement& u) {
  // eps is the algebra map a, d -> 1 and b, c -> 0.
  Scalar s = Scalar::zero(qsl_field());
  for (const auto& [m, c] : u.terms)
    if (m.j == 0 && m.k == 0) s = s + c;
  return s;
}

QslElement qsl_antipode(const QslElement& u, long long power) {
  QslElement out = u;
  bool inverse = power < 0;
  long long steps = inverse ? -power : power;
  for (long long t = 0; t < steps; ++t) out = antipode_once(out, inverse);
  return out;
}

Scalar lambda_eval(const QslElement& u) {
  const FieldSpec& f = qsl_field();
  Scalar s = Scalar::zero(f);
  for (const auto& [m, c] : u.terms) {
    if (m.i != 0 || m.l != 0 || m.j != m.k) continue;
    Scalar v = quantum_integer(static_cast<long long>(m.j) + 1, f).inv();
    if (m.j % 2 == 1) v = -v;
    s = s + c * v;
  }
  return s;
}

std::vector<PBWMonomial> qsl_basis_window(unsigned D) {
  std::vector<PBWMonomial> out;
  for (unsigned i = 0; i <= D; ++i)
    for (unsigned j = 0; i + j <= D; ++j)
      for (unsigned k = 0; i + j + k <= D; ++k)
        for (unsigned l = 0; i + j + k + l <= D; ++l) {
          if (i > 0 && l > 0) continue;
          out.push_back(PBWMonomial{i, j, k, l});
        }
  return out;
}

std::vector<Scalar> qsl_alpha_values() {
  Scalar q = qsl_q();
  const FieldSpec& f = qsl_field();
  return {q.pow(-2), Scalar::zero(f), Scalar::zero(f), q.pow(2)};
}

Scalar qsl_alpha_eval(const PBWMonomial& m) {
  if (m.j > 0 || m.k > 0) return Scalar::zero(qsl_field());
  return qsl_q().pow(2ll * (static_cast<long long>(m.l) - static_cast<long long>(m.i)));
}

QslElement qsl_chi(QslGen g) {
  Scalar q = qsl_q();
  switch (g) {
    case QslGen::a: return qsl_scale(q.pow(-2), qsl_gen(QslGen::a));
    case QslGen::b: return qsl_gen(QslGen::b);
    case QslGen::c: return qsl_gen(QslGen::c);
    case QslGen::d: return qsl_scale(q.pow(2), qsl_gen(QslGen::d));
  }
  fail(errc::internal, "unknown generator");
}

OrderResult qsl_antipode_order(unsigned long bound) {
  std::vector<QslElement> cur = {qsl_gen(QslGen::a), qsl_gen(QslGen::b), qsl_gen(QslGen::c),
                                 qsl_gen(QslGen::d)};
  const std::vector<QslElement> orig = cur;
  for (unsigned long m = 1; m <= bound; ++m) {
    bool identity = true;
    for (std::size_t t = 0; t < cur.size(); ++t) {
      cur[t] = antipode_once(cur[t], false);
      if (!(cur[t] == orig[t])) identity = false;
    }
    if (identity) return OrderResult{m, bound};
  }
  return OrderResult{std::nullopt, bound};
}

// ---------------------------------------------------------------------------
// Verification

VerificationReport verify_left_integral(unsigned D) {
  VerificationReport rep;
  std::vector<PBWMonomial> W = qsl_basis_window(D);
  const std::string wd = degree_desc(D, W.size());
  QslElement one = qsl_one();

  {  // h_1 lambda(h_2) = lambda(h) 1
    bool ok = true;
    std::string wit;
    for (const PBWMonomial& m : W) {
      QslElement h = qsl_monomial(m.i, m.j, m.k, m.l);
      QslTensor d = qsl_comul(h);
      QslElement lhs;
      for (const auto& [pr, c] : d.terms) {
        Scalar v = lambda_eval(qsl_monomial(pr.second.i, pr.second.j, pr.second.k, pr.second.l));
        if (!v.is_zero()) add_term(lhs.terms, pr.first, c * v);
      }
      QslElement rhs = qsl_scale(lambda_eval(h), one);
      if (!(lhs == rhs)) {
        ok = false;
        wit = "h = " + m.str() + ": h_1 lambda(h_2) = " + lhs.str() + ", lambda(h) 1 = " + rhs.str();
        break;
      }
    }
    rep.add("qsl-left-integral", ok, wit, wd);
  }

  {  // pinned values of lambda
    Scalar q = qsl_q();
    const FieldSpec& f = qsl_field();
    bool ok = lambda_eval(qsl_one()).is_one();
    std::string wit = ok ? "" : "lambda(1) != 1";
    Scalar two = q + q.inv();
    if (ok && !(lambda_eval(qsl_monomial(0, 1, 1, 0)) == -two.inv())) {
      ok = false;
      wit = "lambda(bc) != -1/(q + q^-1)";
    }
    if (ok && !(lambda_eval(qsl_monomial(0, 2, 2, 0)) == quantum_integer(3, f).inv())) {
      ok = false;
      wit = "lambda(b^2c^2) != 1/[3]";
    }
    Scalar q2p1 = q * q + Scalar::one(f);
    if (ok && !(lambda_eval(normal_form("da")) == q2p1.inv())) {
      ok = false;
      wit = "lambda(da) != 1/(q^2 + 1)";
    }
    if (ok && !(lambda_eval(normal_form("ad")) == q * q * q2p1.inv())) {
      ok = false;
      wit = "lambda(ad) != q^2/(q^2 + 1)";
    }
    if (ok) {
      for (const PBWMonomial& m : W) {
        bool diagonal = m.i == 0 && m.l == 0 && m.j == m.k;
        if (diagonal) continue;
        if (!lambda_eval(qsl_monomial(m.i, m.j, m.k, m.l)).is_zero()) {
          ok = false;
          wit = "lambda(" + m.str() + ") != 0";
          break;
        }
      }
    }
    rep.add("qsl-lambda-values", ok, wit,
            "lambda((bc)^m) = (-1)^m/[m+1], zero off the diagonal pattern; " + wd);
  }

  rep.not_applicable(kWindowNote, kWindowNoteText);
  return rep;
}

VerificationReport verify_chi_alpha(unsigned D) {
  VerificationReport rep;
  if (D < 2) fail(errc::invalid_argument, "chi/alpha verification needs degree window D >= 2");
  std::vector<PBWMonomial> W = qsl_basis_window(D);
  const std::string wd = degree_desc(D, W.size());
  const std::vector<QslGen> gens = {QslGen::a, QslGen::b, QslGen::c, QslGen::d};
  const char* names = "abcd";

  {  // (u -> lambda)(y) = (lambda <- chi(u))(y) on the window
    bool ok = true;
    std::string wit;
    for (std::size_t t = 0; t < gens.size() && ok; ++t) {
      QslElement u = qsl_gen(gens[t]);
      QslElement xu = qsl_chi(gens[t]);
      for (const PBWMonomial& m : W) {
        QslElement y = qsl_monomial(m.i, m.j, m.k, m.l);
        Scalar lhs = lambda_eval(qsl_mul(y, u));
        Scalar rhs = lambda_eval(qsl_mul(xu, y));
        if (!(lhs == rhs)) {
          ok = false;
          wit = std::string("u = ") + names[t] + ", y = " + m.str() + ": lambda(y u) = " +
                lhs.str() + ", lambda(chi(u) y) = " + rhs.str();
          break;
        }
      }
    }
    rep.add("qsl-chi-intertwines", ok, wit, wd);
  }

  {  // S^4(h) = g (alpha -> h <- alpha^-1) g^-1 with g = 1: the conjugation
     // formula collapses to the two-sided alpha twist.
    bool ok = true;
    std::string wit;
    Scalar q = qsl_q();
    for (const PBWMonomial& m : W) {
      QslElement h = qsl_monomial(m.i, m.j, m.k, m.l);
      QslTensor d = qsl_comul(h);
      // alpha -> h = alpha(h_2) h_1, then <- alpha^-1 takes alpha^-1(h_1) h_2
      // with alpha^-1 = alpha o S, i.e. q^{2(i-l)} on the b,c-free monomials.
      QslElement twisted;
      for (const auto& [pr, c] : d.terms) {
        Scalar av = qsl_alpha_eval(pr.second);
        if (!av.is_zero()) add_term(twisted.terms, pr.first, c * av);
      }
      QslElement both;
      for (const auto& [tm, tc] : twisted.terms) {
        QslTensor dt = qsl_comul(qsl_monomial(tm.i, tm.j, tm.k, tm.l));
        for (const auto& [pr, c] : dt.terms) {
          const PBWMonomial& f = pr.first;
          if (f.j > 0 || f.k > 0) continue;
          Scalar ainv = q.pow(2ll * (static_cast<long long>(f.i) - static_cast<long long>(f.l)));
          add_term(both.terms, pr.second, tc * c * ainv);
        }
      }
      if (!(both == qsl_antipode(h, 4))) {
        ok = false;
        wit = "h = " + m.str() + ": alpha -> h <- alpha^-1 = " + both.str() + ", S^4(h) = " +
              qsl_antipode(h, 4).str();
        break;
      }
    }
    rep.add("s4-radford-formula", ok, wit, wd + "; distinguished grouplike g = 1");
  }

  {  // chi(u) = alpha(u_2) S^{-2}(u_1)
    bool ok = true;
    std::string wit;
    for (std::size_t t = 0; t < gens.size(); ++t) {
      QslElement u = qsl_gen(gens[t]);
      QslTensor d = qsl_comul(u);
      QslElement closed;
      for (const auto& [pr, c] : d.terms) {
        Scalar av = qsl_alpha_eval(pr.second);
        if (av.is_zero()) continue;
        QslElement s2 =
            qsl_antipode(qsl_monomial(pr.first.i, pr.first.j, pr.first.k, pr.first.l), -2);
        for (const auto& [sm, sc] : s2.terms) add_term(closed.terms, sm, c * av * sc);
      }
      if (!(closed == qsl_chi(gens[t]))) {
        ok = false;
        wit = std::string("chi(") + names[t] + ") = " + qsl_chi(gens[t]).str() +
              ", alpha(u_2) S^-2(u_1) = " + closed.str();
        break;
      }
    }
    rep.add("qsl-chi-closed-form", ok, wit, "generators a, b, c, d");
  }

  {  // lambda(h_1) h_2 = lambda(h) 1: the distinguished grouplike of H is 1
    bool ok = true;
    std::string wit;
    QslElement one = qsl_one();
    for (const PBWMonomial& m : W) {
      QslElement h = qsl_monomial(m.i, m.j, m.k, m.l);
      QslTensor d = qsl_comul(h);
      QslElement lhs;
      for (const auto& [pr, c] : d.terms) {
        Scalar v = lambda_eval(qsl_monomial(pr.first.i, pr.first.j, pr.first.k, pr.first.l));
        if (!v.is_zero()) add_term(lhs.terms, pr.second, c * v);
      }
      QslElement rhs = qsl_scale(lambda_eval(h), one);
      if (!(lhs == rhs)) {
        ok = false;
        wit = "h = " + m.str() + ": lambda(h_1) h_2 = " + lhs.str() + ", lambda(h) 1 = " + rhs.str();
        break;
      }
    }
    rep.add("qsl-distinguished-g-trivial", ok, wit, wd);
  }

  {  // alpha is a character compatible with every defining relation
    bool ok = true;
    std::string wit;
    std::vector<Scalar> av = qsl_alpha_values();
    if (!(av[0] * av[3]).is_one()) {
      ok = false;
      wit = "alpha(a) alpha(d) != 1";
    }
    for (std::size_t s = 0; s < gens.size() && ok; ++s)
      for (std::size_t t = 0; t < gens.size(); ++t) {
        QslElement prod = qsl_mul(qsl_gen(gens[s]), qsl_gen(gens[t]));
        Scalar direct = Scalar::zero(qsl_field());
        for (const auto& [m, c] : prod.terms) direct = direct + c * qsl_alpha_eval(m);
        if (!(direct == av[s] * av[t])) {
          ok = false;
          wit = std::string("alpha(") + names[s] + names[t] + ") != alpha(" + names[s] +
                ") alpha(" + names[t] + ")";
          break;
        }
      }
    rep.add("qsl-alpha-character", ok, wit,
            "alpha(a) = q^-2, alpha(b) = alpha(c) = 0, alpha(d) = q^2; all 16 generator products");
  }

  rep.not_applicable(kWindowNote, kWindowNoteText);
  return rep;
}

VerificationReport qsl_axioms(unsigned D) {
  VerificationReport rep;
  if (D < 1) fail(errc::invalid_argument, "axioms window needs D >= 1");
  Scalar q = qsl_q();
  const FieldSpec& f = qsl_field();
  QslElement one = qsl_one();

  {  // the seven defining relations vanish under normal_form
    struct Rel {
      const char* lhs;
      const char* rhs;
      Scalar factor;
      QslElement shift;
    };
    std::vector<Rel> rels = {{"ba", "ab", q, qsl_zero()},
                             {"ca", "ac", q, qsl_zero()},
                             {"db", "bd", q, qsl_zero()},
                             {"dc", "cd", q, qsl_zero()},
                             {"bc", "cb", Scalar::one(f), qsl_zero()},
                             {"da", "bc", q, qsl_one()},
                             {"ad", "bc", q.inv(), qsl_one()}};
    bool ok = true;
    std::string wit;
    for (const Rel& r : rels) {
      QslElement want = qsl_add(qsl_scale(r.factor, normal_form(r.rhs)), r.shift);
      if (!(normal_form(r.lhs) == want)) {
        ok = false;
        wit = std::string(r.lhs) + " does not rewrite to its relation image";
        break;
      }
    }
    rep.add("qsl-defining-relations", ok, wit, "all seven defining relations");
  }

  {  // normal_form is idempotent on expanded basis words
    bool ok = true;
    std::string wit;
    for (const PBWMonomial& m : qsl_basis_window(D)) {
      std::vector<QslGen> word;
      for (unsigned t = 0; t < m.i; ++t) word.push_back(QslGen::a);
      for (unsigned t = 0; t < m.j; ++t) word.push_back(QslGen::b);
      for (unsigned t = 0; t < m.k; ++t) word.push_back(QslGen::c);
      for (unsigned t = 0; t < m.l; ++t) word.push_back(QslGen::d);
      if (!(normal_form(word) == qsl_monomial(m.i, m.j, m.k, m.l))) {
        ok = false;
        wit = m.str();
        break;
      }
    }
    rep.add("qsl-normal-form-idempotent", ok, wit, degree_desc(D, qsl_basis_window(D).size()));
  }

  {  // association-order independence on deterministic random words
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> len_dist(2, 8);
    std::uniform_int_distribution<int> gen_dist(0, 3);
    bool ok = true;
    std::string wit;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      int len = len_dist(rng);
      std::vector<QslGen> word;
      std::string word_str;
      for (int t = 0; t < len; ++t) {
        int g = gen_dist(rng);
        word.push_back(static_cast<QslGen>(g));
        word_str += "abcd"[g];
      }
      QslElement left = normal_form(word);
      QslElement right = qsl_gen(word.back());
      for (std::size_t t = word.size() - 1; t-- > 0;) right = qsl_mul(qsl_gen(word[t]), right);
      QslElement split = qsl_mul(normal_form(std::vector<QslGen>(word.begin(), word.begin() + len / 2)),
                                 normal_form(std::vector<QslGen>(word.begin() + len / 2, word.end())));
      if (!(left == right) || !(left == split)) {
        ok = false;
        wit = "word " + word_str;
      }
    }
    rep.add("qsl-association-independence", ok, wit,
            "40 deterministic pseudo-random words, three association orders");
  }

  std::vector<PBWMonomial> W2 = qsl_basis_window(std::min(D, 2u));
  std::vector<PBWMonomial> W3 = qsl_basis_window(std::min(D, 3u));
  std::vector<QslElement> E2, E3;
  for (const PBWMonomial& m : W2) E2.push_back(qsl_monomial(m.i, m.j, m.k, m.l));
  for (const PBWMonomial& m : W3) E3.push_back(qsl_monomial(m.i, m.j, m.k, m.l));

  {  // associativity on degree <= 2 triples
    bool ok = true;
    std::string wit;
    for (std::size_t u = 0; u < E2.size() && ok; ++u)
      for (std::size_t v = 0; v < E2.size() && ok; ++v)
        for (std::size_t w = 0; w < E2.size(); ++w)
          if (!(qsl_mul(qsl_mul(E2[u], E2[v]), E2[w]) == qsl_mul(E2[u], qsl_mul(E2[v], E2[w])))) {
            ok = false;
            wit = "(" + W2[u].str() + ", " + W2[v].str() + ", " + W2[w].str() + ")";
            break;
          }
    rep.add("associativity", ok, wit, degree_desc(std::min(D, 2u), W2.size()) + ", all triples");
  }

  {  // unit
    bool ok = true;
    std::string wit;
    for (const PBWMonomial& m : qsl_basis_window(D)) {
      QslElement h = qsl_monomial(m.i, m.j, m.k, m.l);
      if (!(qsl_mul(one, h) == h) || !(qsl_mul(h, one) == h)) {
        ok = false;
        wit = m.str();
        break;
      }
    }
    rep.add("unit", ok, wit, degree_desc(D, qsl_basis_window(D).size()));
  }

  {  // coassociativity on degree <= 3
    bool ok = true;
    std::string wit;
    for (std::size_t u = 0; u < E3.size(); ++u) {
      QslTensor d = qsl_comul(E3[u]);
      std::map<std::tuple<PBWMonomial, PBWMonomial, PBWMonomial>, Scalar> lhs, rhs;
      for (const auto& [pr, c] : d.terms) {
        QslTensor dl = qsl_comul(qsl_monomial(pr.first.i, pr.first.j, pr.first.k, pr.first.l));
        for (const auto& [ip, ic] : dl.terms) {
          auto key = std::make_tuple(ip.first, ip.second, pr.second);
          auto it = lhs.find(key);
          Scalar v = c * ic;
          if (it == lhs.end()) {
            if (!v.is_zero()) lhs.emplace(key, v);
          } else {
            it->second = it->second + v;
            if (it->second.is_zero()) lhs.erase(it);
          }
        }
        QslTensor dr = qsl_comul(qsl_monomial(pr.second.i, pr.second.j, pr.second.k, pr.second.l));
        for (const auto& [ip, ic] : dr.terms) {
          auto key = std::make_tuple(pr.first, ip.first, ip.second);
          auto it = rhs.find(key);
          Scalar v = c * ic;
          if (it == rhs.end()) {
            if (!v.is_zero()) rhs.emplace(key, v);
          } else {
            it->second = it->second + v;
            if (it->second.is_zero()) rhs.erase(it);
          }
        }
      }
      if (!(lhs == rhs)) {
        ok = false;
        wit = W3[u].str();
        break;
      }
    }
    rep.add("coassociativity", ok, wit, degree_desc(std::min(D, 3u), W3.size()));
  }

  {  // counit axiom
    bool ok = true;
    std::string wit;
    for (std::size_t u = 0; u < E3.size(); ++u) {
      QslTensor d = qsl_comul(E3[u]);
      QslElement left, right;
      for (const auto& [pr, c] : d.terms) {
        if (pr.first.j == 0 && pr.first.k == 0) add_term(right.terms, pr.second, c);
        if (pr.second.j == 0 && pr.second.k == 0) add_term(left.terms, pr.first, c);
      }
      if (!(left == E3[u]) || !(right == E3[u])) {
        ok = false;
        wit = W3[u].str();
        break;
      }
    }
    rep.add("counit", ok, wit, degree_desc(std::min(D, 3u), W3.size()));
  }

  {  // comultiplication is multiplicative on degree <= 3 pairs
    bool ok = true;
    std::string wit;
    std::vector<QslTensor> dd;
    dd.reserve(E3.size());
    for (const QslElement& e : E3) dd.push_back(qsl_comul(e));
    for (std::size_t u = 0; u < E3.size() && ok; ++u)
      for (std::size_t v = 0; v < E3.size(); ++v)
        if (!(qsl_comul(qsl_mul(E3[u], E3[v])) == tensor_mul(dd[u], dd[v]))) {
          ok = false;
          wit = "(" + W3[u].str() + ", " + W3[v].str() + ")";
          break;
        }
    rep.add("comult-multiplicative", ok, wit, degree_desc(std::min(D, 3u), W3.size()) + ", all pairs");
  }

  {  // counit is multiplicative
    bool ok = qsl_counit(one).is_one();
    std::string wit = ok ? "" : "eps(1) != 1";
    for (std::size_t u = 0; u < E3.size() && ok; ++u)
      for (std::size_t v = 0; v < E3.size(); ++v)
        if (!(qsl_counit(qsl_mul(E3[u], E3[v])) == qsl_counit(E3[u]) * qsl_counit(E3[v]))) {
          ok = false;
          wit = "(" + W3[u].str() + ", " + W3[v].str() + ")";
          break;
        }
    rep.add("counit-multiplicative", ok, wit, degree_desc(std::min(D, 3u), W3.size()) + ", all pairs");
  }

  {  // antipode identity on degree <= 2
    bool ok = true;
    std::string wit;
    for (std::size_t u = 0; u < E2.size(); ++u) {
      QslTensor d = qsl_comul(E2[u]);
      QslElement left, right;
      for (const auto& [pr, c] : d.terms) {
        QslElement sl = qsl_antipode(qsl_monomial(pr.first.i, pr.first.j, pr.first.k, pr.first.l));
        QslElement rr = qsl_monomial(pr.second.i, pr.second.j, pr.second.k, pr.second.l);
        for (const auto& [pm, pc] : qsl_mul(sl, rr).terms) add_term(left.terms, pm, c * pc);
        QslElement ll = qsl_monomial(pr.first.i, pr.first.j, pr.first.k, pr.first.l);
        QslElement sr = qsl_antipode(rr);
        for (const auto& [pm, pc] : qsl_mul(ll, sr).terms) add_term(right.terms, pm, c * pc);
      }
      QslElement target = qsl_scale(qsl_counit(E2[u]), one);
      if (!(left == target) || !(right == target)) {
        ok = false;
        wit = W2[u].str();
        break;
      }
    }
    rep.add("antipode", ok, wit, degree_desc(std::min(D, 2u), W2.size()));
  }

  {  // S is anti-multiplicative and S o S^{-1} = id on the window
    bool ok = true;
    std::string wit;
    for (std::size_t u = 0; u < E2.size() && ok; ++u) {
      if (!(qsl_antipode(qsl_antipode(E2[u]), -1) == E2[u]) ||
          !(qsl_antipode(qsl_antipode(E2[u], -1)) == E2[u])) {
        ok = false;
        wit = "S o S^-1 at " + W2[u].str();
        break;
      }
      for (std::size_t v = 0; v < E2.size(); ++v)
        if (!(qsl_antipode(qsl_mul(E2[u], E2[v])) ==
              qsl_mul(qsl_antipode(E2[v]), qsl_antipode(E2[u])))) {
          ok = false;
          wit = "S(uv) != S(v)S(u) at (" + W2[u].str() + ", " + W2[v].str() + ")";
          break;
        }
    }
    rep.add("qsl-antipode-antihomomorphism", ok, wit,
            degree_desc(std::min(D, 2u), W2.size()) + ", all pairs");
  }

  return rep;
}

VerificationReport qsl_order_checks(unsigned long bound) {
  VerificationReport rep;
  OrderResult os = qsl_antipode_order(bound);
  {
    bool ok = os.exceeds_bound();
    rep.add("qsl-antipode-infinite-order", ok,
            ok ? "" : "order(S) = " + os.str(),
            "value: " + os.str() + "; S^2 scales b by q^2 and q is not a root of unity");
  }
  {  // S^{2m}(b) = q^{2m} b for 1 <= m <= bound
    bool ok = true;
    std::string wit;
    Scalar q = qsl_q();
    QslElement bgen = qsl_gen(QslGen::b);
    for (unsigned long m = 1; m <= bound; ++m) {
      QslElement got = qsl_antipode(bgen, 2ll * static_cast<long long>(m));
      QslElement want = qsl_scale(q.pow(2ll * static_cast<long long>(m)), bgen);
      if (!(got == want) || got == bgen) {
        ok = false;
        wit = "m = " + std::to_string(m);
        break;
      }
    }
    rep.add("qsl-antipode-power-scaling", ok, wit,
            "S^{2m}(b) = q^{2m} b != b for 1 <= m <= " + std::to_string(bound));
  }
  return rep;
}

VerificationReport qsl_battery(unsigned D) {
  VerificationReport rep;
  rep.merge(qsl_axioms(D));
  rep.merge(verify_left_integral(D));
  rep.merge(verify_chi_alpha(D));
  rep.merge(qsl_order_checks(12));

  // Keep a single window disclosure.
  bool seen = false;
  VerificationReport out;
  for (const CheckResult& c : rep.checks) {
    if (c.name == kWindowNote) {
      if (seen) continue;
      seen = true;
    }
    out.checks.push_back(c);
  }
  return out;
}

}  // namespace hopfkit
