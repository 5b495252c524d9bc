#include "tropfrac/io.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

namespace tropfrac {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) { throw ParseError(field + ": " + what); }

ExtendedNumber entry(const json& x, const std::string& field) {
  if (x.is_number_integer()) return x.is_number_unsigned() ? ExtendedNumber(Rational(std::to_string(x.get<std::uint64_t>())))
                                                           : ExtendedNumber(Rational(std::to_string(x.get<std::int64_t>())));
  if (x.is_number_float()) fail(field, "non-integer JSON number; write exact values as strings such as \"5/2\"");
  if (!x.is_string()) fail(field, "expected an integer, a rational string or \"-inf\"");
  const std::string& s = x.get_ref<const std::string&>();
  if (s == "-inf") return ExtendedNumber::neg_inf();
  if (s == "+inf" || s == "inf") fail(field, "+inf is not allowed");
  try {
    return ExtendedNumber(parse_rational(s));
  } catch (const std::invalid_argument&) {
    fail(field, "'" + s + "' is not an exact rational or \"-inf\"");
  }
}

Vector vec(const json& x, const std::string& field, std::optional<std::size_t> len = std::nullopt) {
  if (!x.is_array()) fail(field, "expected an array");
  if (len && x.size() != *len)
    fail(field, "expected " + std::to_string(*len) + " entries, found " + std::to_string(x.size()));
  Vector out;
  for (std::size_t k = 0; k < x.size(); ++k) out.push_back(entry(x[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

TropMatrix mat(const json& x, const std::string& field, std::optional<std::size_t> rows = std::nullopt,
               std::optional<std::size_t> cols = std::nullopt) {
  if (!x.is_array() || x.empty()) fail(field, "expected a non-empty array of rows");
  if (rows && x.size() != *rows)
    fail(field, "expected " + std::to_string(*rows) + " rows, found " + std::to_string(x.size()));
  std::size_t c = cols ? *cols : (x[0].is_array() ? x[0].size() : 0);
  if (c == 0) fail(field, "rows must be non-empty arrays");
  TropMatrix M(x.size(), c);
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vector r = vec(x[i], field + "[" + std::to_string(i) + "]", c);
    for (std::size_t j = 0; j < c; ++j) M.set(i, j, r[j]);
  }
  return M;
}

const json& need(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(key, "missing");
  return doc.at(key);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t k = 0; k < e.byte && k < text.size(); ++k) line += text[k] == '\n';
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

json out_entry(const ExtendedNumber& x) {
  if (x.is_finite() && x.value().get_den() == 1 && x.value().get_num().fits_slong_p())
    return json(x.value().get_num().get_si());
  return json(format(x));
}

std::string row_text(const Vector& r) {
  std::string s = "[";
  for (std::size_t k = 0; k < r.size(); ++k) s += (k ? ", " : "") + out_entry(r[k]).dump();
  return s + "]";
}

std::string matrix_text(const TropMatrix& M) {
  std::string s = "[\n";
  for (std::size_t i = 0; i < M.rows(); ++i) s += "    " + row_text(M.row(i)) + (i + 1 < M.rows() ? ",\n" : "\n");
  return s + "  ]";
}

}  // namespace

std::string format(const ExtendedNumber& x) { return x.str(); }

HomogeneousInstance InstanceDocument::homogeneous() const {
  if (homogeneous_form) return maximize ? make_homogeneous(C, D, v, u) : make_homogeneous(C, D, u, v);
  if (!maximize) return homogenize(original);
  LfpInstance dual = original;
  std::swap(dual.p, dual.q);
  std::swap(dual.r, dual.s);
  return homogenize(dual);
}

std::size_t InstanceDocument::variables() const { return homogeneous_form ? C.cols() - 1 : original.n(); }

InstanceDocument parse_instance(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
  static const std::set<std::string> original_keys{"A", "B", "c", "d", "p", "q", "r", "s"};
  static const std::set<std::string> homogeneous_keys{"C", "D", "u", "v"};
  bool has_o = false, has_h = false;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& k = it.key();
    if (original_keys.count(k)) has_o = true;
    else if (homogeneous_keys.count(k)) has_h = true;
    else if (k != "objective" && k != "name" && k != "comment") fail(k, "unknown field");
  }
  if (has_o == has_h) throw ParseError("instance: give either A,B,c,d,p,q,r,s or C,D,u,v");

  InstanceDocument out;
  if (doc.contains("objective")) {
    const json& o = doc["objective"];
    if (o == "maximize") out.maximize = true;
    else if (o != "minimize") fail("objective", "expected \"minimize\" or \"maximize\"");
  }
  if (has_h) {
    out.homogeneous_form = true;
    out.C = mat(need(doc, "C"), "C");
    out.D = mat(need(doc, "D"), "D", out.C.rows(), out.C.cols());
    out.u = vec(need(doc, "u"), "u", out.C.cols());
    out.v = vec(need(doc, "v"), "v", out.C.cols());
  } else {
    LfpInstance& I = out.original;
    I.A = mat(need(doc, "A"), "A");
    const std::size_t m = I.A.rows(), n = I.A.cols();
    I.B = mat(need(doc, "B"), "B", m, n);
    I.c = vec(need(doc, "c"), "c", m);
    I.d = vec(need(doc, "d"), "d", m);
    I.p = vec(need(doc, "p"), "p", n);
    I.q = vec(need(doc, "q"), "q", n);
    I.r = entry(need(doc, "r"), "r");
    I.s = entry(need(doc, "s"), "s");
  }
  return out;
}

std::string serialize_instance(const InstanceDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"objective\": \"" << (doc.maximize ? "maximize" : "minimize") << "\",\n";
  if (doc.homogeneous_form) {
    os << "  \"C\": " << matrix_text(doc.C) << ",\n";
    os << "  \"D\": " << matrix_text(doc.D) << ",\n";
    os << "  \"u\": " << row_text(doc.u) << ",\n";
    os << "  \"v\": " << row_text(doc.v) << "\n";
  } else {
    const LfpInstance& I = doc.original;
    os << "  \"A\": " << matrix_text(I.A) << ",\n";
    os << "  \"B\": " << matrix_text(I.B) << ",\n";
    os << "  \"c\": " << row_text(I.c) << ",\n";
    os << "  \"d\": " << row_text(I.d) << ",\n";
    os << "  \"p\": " << row_text(I.p) << ",\n";
    os << "  \"q\": " << row_text(I.q) << ",\n";
    os << "  \"r\": " << out_entry(I.r).dump() << ",\n";
    os << "  \"s\": " << out_entry(I.s).dump() << "\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

std::vector<std::size_t> strategy(const json& x, const std::string& field) {
  if (!x.is_array()) fail(field, "expected an array of 1-based node indices");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const json& e = x[k];
    if (!e.is_number_integer() || e.get<std::int64_t>() < 1)
      fail(field + "[" + std::to_string(k) + "]", "expected a positive integer");
    out.push_back(static_cast<std::size_t>(e.get<std::int64_t>() - 1));
  }
  return out;
}

std::string strategy_text(const std::vector<std::size_t>& s) {
  std::string t = "[";
  for (std::size_t k = 0; k < s.size(); ++k) t += (k ? ", " : "") + std::to_string(s[k] + 1);
  return t + "]";
}

}  // namespace

CertificateDocument parse_certificate(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("certificate: expected a JSON object");
  const json& type = need(doc, "type");
  CertificateDocument out;
  if (type == "optimality") {
    const json& l = need(doc, "lambda");
    ExtendedNumber lam = entry(l, "lambda");
    if (!lam.is_finite()) fail("lambda", "must be finite");
    out.opt.lambda = lam.value();
    out.opt.tau.succ = strategy(need(doc, "tau"), "tau");
    if (doc.contains("witness")) out.opt.witness = vec(doc["witness"], "witness");
  } else if (type == "unboundedness") {
    out.optimality = false;
    out.unb.sigma.succ = strategy(need(doc, "sigma"), "sigma");
  } else {
    fail("type", "expected \"optimality\" or \"unboundedness\"");
  }
  return out;
}

std::string serialize_certificate(const CertificateDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  if (doc.optimality) {
    os << "  \"type\": \"optimality\",\n";
    os << "  \"lambda\": \"" << to_string(doc.opt.lambda) << "\",\n";
    os << "  \"tau\": " << strategy_text(doc.opt.tau.succ);
    if (doc.opt.witness) os << ",\n  \"witness\": " << row_text(*doc.opt.witness);
    os << "\n";
  } else {
    os << "  \"type\": \"unboundedness\",\n";
    os << "  \"sigma\": " << strategy_text(doc.unb.sigma.succ) << "\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tropfrac
