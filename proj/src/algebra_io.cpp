#include "hopfkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace hopfkit {

namespace {

using nlohmann::json;

std::string quote(const std::string& s) { return json(s).dump(); }

[[noreturn]] void bad_line(const std::string& origin, std::size_t line, const std::string& what) {
  fail(errc::parse_error, origin + ":" + std::to_string(line) + ": " + what);
}

// Strict unsigned index from a JSON field.
std::size_t get_index(const json& j, const char* key, std::size_t dim, const std::string& origin,
                      std::size_t line) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    bad_line(origin, line, std::string("expected unsigned index field \"") + key + "\"");
  std::size_t v = j[key].get<std::size_t>();
  if (v >= dim)
    bad_line(origin, line,
             std::string("index \"") + key + "\" = " + std::to_string(v) +
                 " out of range for dim " + std::to_string(dim));
  return v;
}

Scalar get_coeff(const json& j, const FieldSpec& f, const std::string& origin, std::size_t line) {
  if (!j.contains("c") || !j["c"].is_string())
    bad_line(origin, line, "expected string field \"c\" with a canonical scalar");
  try {
    return Scalar::parse(f, j["c"].get<std::string>());
  } catch (const error& e) {
    bad_line(origin, line, std::string("bad scalar: ") + e.what());
  }
}

}  // namespace

FieldSpec parse_field_spec(const std::string& spec) {
  if (spec == "Q") return FieldSpec::rationals();
  if (spec == "Qq") return FieldSpec::rational_functions("q");
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (!arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos) {
      if (head == "Fp") return FieldSpec::prime_field(Int(arg));
      if ((head == "cyclotomic" || head == "zeta") && arg.size() <= 6) {
        unsigned long n = std::stoul(arg);
        if (n >= 1) return FieldSpec::cyclotomic(static_cast<unsigned>(n));
      }
    }
  }
  fail(errc::parse_error,
       "unrecognized field spec \"" + spec + "\" (expected Q, Fp:<p>, cyclotomic:<n>, or Qq)");
}

std::string export_algebra(const HopfPresentation& h) {
  std::ostringstream out;
  out << "{\"record\":\"hopf\",\"name\":" << quote(h.name()) << ",\"field\":"
      << quote(h.field().str()) << ",\"dim\":" << h.dim() << "}\n";

  out << "{\"record\":\"basis\",\"names\":[";
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (i) out << ",";
    out << quote(h.basis_names()[i]);
  }
  out << "]}\n";

  for (std::size_t i = 0; i < h.dim(); ++i)
    if (!h.unit()[i].is_zero())
      out << "{\"record\":\"unit\",\"i\":" << i << ",\"c\":" << quote(h.unit()[i].str()) << "}\n";

  for (std::size_t i = 0; i < h.dim(); ++i)
    if (!h.counit(i).is_zero())
      out << "{\"record\":\"counit\",\"i\":" << i << ",\"c\":" << quote(h.counit(i).str())
          << "}\n";

  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      for (const auto& [k, c] : h.mult(i, j))
        out << "{\"record\":\"mult\",\"i\":" << i << ",\"j\":" << j << ",\"k\":" << k
            << ",\"c\":" << quote(c.str()) << "}\n";

  for (std::size_t i = 0; i < h.dim(); ++i)
    for (const ComultTerm& t : h.comult(i))
      out << "{\"record\":\"comult\",\"i\":" << i << ",\"l\":" << t.left << ",\"r\":" << t.right
          << ",\"c\":" << quote(t.coeff.str()) << "}\n";

  // S(e_i) = sum_j c e_j reads off column i of the antipode matrix.
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) {
      Scalar c = h.antipode().at(j, i);
      if (!c.is_zero())
        out << "{\"record\":\"antipode\",\"i\":" << i << ",\"j\":" << j
            << ",\"c\":" << quote(c.str()) << "}\n";
    }

  return out.str();
}

void export_algebra_file(const HopfPresentation& h, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(errc::io_error, "cannot open " + path + " for writing");
  f << export_algebra(h);
  if (!f) fail(errc::io_error, "write failed for " + path);
}

HopfPtr parse_algebra(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  bool have_header = false;
  bool have_basis = false, have_unit = false, have_counit = false;
  bool have_mult = false, have_comult = false, have_antipode = false;
  HopfBuilder b;
  std::string name;
  std::optional<Matrix> antipode;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      bad_line(origin, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("record") || !j["record"].is_string())
      bad_line(origin, line_no, "expected an object with a \"record\" tag");
    std::string rec = j["record"].get<std::string>();

    if (rec == "hopf") {
      if (have_header) bad_line(origin, line_no, "duplicate header record");
      if (!j.contains("name") || !j["name"].is_string())
        bad_line(origin, line_no, "header needs a string \"name\"");
      if (!j.contains("field") || !j["field"].is_string())
        bad_line(origin, line_no, "header needs a string \"field\"");
      if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        bad_line(origin, line_no, "header needs a positive \"dim\"");
      name = j["name"].get<std::string>();
      try {
        b.field = parse_field_spec(j["field"].get<std::string>());
      } catch (const error& e) {
        bad_line(origin, line_no, e.what());
      }
      b.dim = j["dim"].get<std::size_t>();
      b.unit.assign(b.dim, Scalar::zero(b.field));
      b.counit.assign(b.dim, Scalar::zero(b.field));
      b.mult.assign(b.dim, std::vector<SparseVec>(b.dim));
      b.comult.assign(b.dim, {});
      antipode.emplace(b.dim, b.dim, b.field);
      have_header = true;
      continue;
    }
    if (!have_header) bad_line(origin, line_no, "first record must be the \"hopf\" header");

    if (rec == "basis") {
      if (have_basis) bad_line(origin, line_no, "duplicate basis record");
      if (!j.contains("names") || !j["names"].is_array() || j["names"].size() != b.dim)
        bad_line(origin, line_no,
                 "basis record needs exactly " + std::to_string(b.dim) + " names");
      for (const auto& n : j["names"]) {
        if (!n.is_string()) bad_line(origin, line_no, "basis names must be strings");
        b.basis_names.push_back(n.get<std::string>());
      }
      have_basis = true;
    } else if (rec == "unit") {
      std::size_t i = get_index(j, "i", b.dim, origin, line_no);
      b.unit[i] = get_coeff(j, b.field, origin, line_no);
      have_unit = true;
    } else if (rec == "counit") {
      std::size_t i = get_index(j, "i", b.dim, origin, line_no);
      b.counit[i] = get_coeff(j, b.field, origin, line_no);
      have_counit = true;
    } else if (rec == "mult") {
      std::size_t i = get_index(j, "i", b.dim, origin, line_no);
      std::size_t jj = get_index(j, "j", b.dim, origin, line_no);
      std::size_t k = get_index(j, "k", b.dim, origin, line_no);
      if (b.mult[i][jj].count(k))
        bad_line(origin, line_no, "duplicate mult entry (" + std::to_string(i) + ", " +
                                      std::to_string(jj) + ", " + std::to_string(k) + ")");
      b.mult[i][jj].emplace(k, get_coeff(j, b.field, origin, line_no));
      have_mult = true;
    } else if (rec == "comult") {
      std::size_t i = get_index(j, "i", b.dim, origin, line_no);
      std::size_t l = get_index(j, "l", b.dim, origin, line_no);
      std::size_t r = get_index(j, "r", b.dim, origin, line_no);
      b.comult[i].push_back(ComultTerm{l, r, get_coeff(j, b.field, origin, line_no)});
      have_comult = true;
    } else if (rec == "antipode") {
      std::size_t i = get_index(j, "i", b.dim, origin, line_no);
      std::size_t jj = get_index(j, "j", b.dim, origin, line_no);
      if (!antipode->at(jj, i).is_zero())
        bad_line(origin, line_no, "duplicate antipode entry (" + std::to_string(i) + ", " +
                                      std::to_string(jj) + ")");
      antipode->set(jj, i, get_coeff(j, b.field, origin, line_no));
      have_antipode = true;
    } else {
      bad_line(origin, line_no, "unknown record type \"" + rec + "\"");
    }
  }

  if (!have_header) fail(errc::parse_error, origin + ": empty file (no \"hopf\" header)");
  std::vector<std::pair<bool, const char*>> tables = {{have_basis, "basis"},
                                                      {have_unit, "unit"},
                                                      {have_counit, "counit"},
                                                      {have_mult, "mult"},
                                                      {have_comult, "comult"},
                                                      {have_antipode, "antipode"}};
  for (const auto& [present, table] : tables)
    if (!present)
      fail(errc::parse_error, origin + ": missing table: " + std::string(table));

  // Canonical comult order (the builder requires sorted terms; reloading a
  // hand-edited file must not depend on line order).
  for (auto& terms : b.comult)
    std::sort(terms.begin(), terms.end(), [](const ComultTerm& x, const ComultTerm& y) {
      return std::pair(x.left, x.right) < std::pair(y.left, y.right);
    });
  b.antipode = std::move(*antipode);
  return b.build(name);
}

HopfPtr load_algebra(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_algebra(buf.str(), path);
}

}  // namespace hopfkit
