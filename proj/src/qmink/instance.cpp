#include "qmink/instance.hpp"

#include "qmink/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace qmink {

using nlohmann::json;

namespace {

void require_shape(const Mat &m, size_t rows, size_t cols, const char *what) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeError(std::string(what) + " must be " + std::to_string(rows) + "x" +
                     std::to_string(cols));
}

bool is_sign(const Scalar &v) { return v == Scalar(1) || v == Scalar(-1); }

mpz_class parse_integer(const json &j, const std::string &where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned())
      return mpz_class(std::to_string(j.get<std::uint64_t>()));
    return mpz_class(std::to_string(j.get<std::int64_t>()));
  }
  // Decimal strings carry integers beyond the 64-bit JSON range.
  if (j.is_string()) {
    const auto &s = j.get_ref<const std::string &>();
    size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
      return mpz_class(s);
  }
  throw ParseError(where + ": expected an integer");
}

Scalar parse_scalar(const json &j, const std::string &where) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError(where + ": scalar must be [re_num, re_den, im_num, im_den]");
  mpz_class a = parse_integer(j[0], where), b = parse_integer(j[1], where);
  mpz_class c = parse_integer(j[2], where), d = parse_integer(j[3], where);
  if (sgn(b) <= 0 || sgn(d) <= 0)
    throw ParseError(where + ": denominators must be positive");
  return Scalar::from_parts(a, b, c, d);
}

Scalar parse_parameter(const json &j, const std::string &where) {
  if (j.is_number_integer())
    return Scalar(mpq_class(parse_integer(j, where)));
  return parse_scalar(j, where);
}

Mat parse_mat(const json &j, const std::string &where, size_t rows, size_t cols) {
  if (!j.is_object())
    throw ParseError(where + ": matrix must be an object");
  for (const auto &[key, _] : j.items())
    if (key != "rows" && key != "cols" && key != "entries")
      throw ParseError(where + ": unknown matrix key '" + key + "'");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError(where + ": matrix needs rows, cols and entries");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw ParseError(where + ": rows/cols must be non-negative integers");
  auto r = j["rows"].get<size_t>(), c = j["cols"].get<size_t>();
  if (r != rows || c != cols)
    throw ParseError(where + ": expected shape " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  const json &e = j["entries"];
  if (!e.is_array() || e.size() != r * c)
    throw ParseError(where + ": expected " + std::to_string(r * c) + " entries");
  std::vector<Scalar> entries;
  entries.reserve(e.size());
  for (size_t k = 0; k < e.size(); ++k)
    entries.push_back(parse_scalar(e[k], where + "[" + std::to_string(k) + "]"));
  return Mat(r, c, std::move(entries));
}

json integer_json(const mpz_class &z) {
  if (z.fits_slong_p())
    return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json scalar_json(const Scalar &s) {
  return json::array({integer_json(s.re().get_num()), integer_json(s.re().get_den()),
                      integer_json(s.im().get_num()), integer_json(s.im().get_den())});
}

} // namespace

void check_instance(const PoincareInstance &inst) {
  require_shape(inst.E, 4, 1, "E");
  require_shape(inst.Eprime, 1, 4, "Eprime");
  require_shape(inst.X, 4, 4, "X");
  require_shape(inst.R, 16, 16, "R");
  require_shape(inst.Z, 16, 4, "Z");
  require_shape(inst.T, 16, 1, "T");
  if (!is_sign(inst.q))
    throw ConstraintError("q must be 1 or -1, got " + inst.q.to_string());
  if (!is_sign(inst.s))
    throw ConstraintError("s must be 1 or -1, got " + inst.s.to_string());
  if (!inst.X.is_invertible())
    throw ConstraintError("X is singular");
}

Scalar sqrt_q(const PoincareInstance &inst) {
  return inst.q == Scalar(1) ? Scalar(1) : Scalar::i();
}

PoincareInstance parse_instance(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object())
    throw ParseError("instance must be a JSON object");
  static const std::set<std::string> keys{"name", "q", "s", "E", "Eprime",
                                          "X",    "R", "Z", "T"};
  for (const auto &[key, _] : j.items())
    if (!keys.count(key))
      throw ParseError("unknown key '" + key + "'");
  for (const auto &key : keys)
    if (!j.contains(key))
      throw ParseError("missing key '" + key + "'");
  if (!j["name"].is_string())
    throw ParseError("name must be a string");

  PoincareInstance inst;
  inst.name = j["name"].get<std::string>();
  inst.q = parse_parameter(j["q"], "q");
  inst.s = parse_parameter(j["s"], "s");
  inst.E = parse_mat(j["E"], "E", 4, 1);
  inst.Eprime = parse_mat(j["Eprime"], "Eprime", 1, 4);
  inst.X = parse_mat(j["X"], "X", 4, 4);
  inst.R = parse_mat(j["R"], "R", 16, 16);
  inst.Z = parse_mat(j["Z"], "Z", 16, 4);
  inst.T = parse_mat(j["T"], "T", 16, 1);
  check_instance(inst);
  return inst;
}

PoincareInstance load_instance(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open instance file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

namespace {

// One scalar per entry and one matrix row per line.
std::string mat_text(const Mat &m) {
  std::string out = "{\"rows\": " + std::to_string(m.rows()) +
                    ", \"cols\": " + std::to_string(m.cols()) + ", \"entries\": [";
  for (size_t r = 0; r < m.rows(); ++r) {
    out += "\n    ";
    for (size_t c = 0; c < m.cols(); ++c) {
      out += scalar_json(m(r, c)).dump();
      if (r + 1 < m.rows() || c + 1 < m.cols())
        out += c + 1 < m.cols() ? ", " : ",";
    }
  }
  return out + "\n  ]}";
}

} // namespace

std::string instance_to_json(const PoincareInstance &inst) {
  std::string out = "{\n  \"name\": " + json(inst.name).dump() + ",\n";
  out += "  \"q\": " + scalar_json(inst.q).dump() + ",\n";
  out += "  \"s\": " + scalar_json(inst.s).dump() + ",\n";
  const std::pair<const char *, const Mat *> mats[] = {{"E", &inst.E}, {"Eprime", &inst.Eprime},
                                                       {"X", &inst.X}, {"R", &inst.R},
                                                       {"Z", &inst.Z}, {"T", &inst.T}};
  for (size_t i = 0; i < 6; ++i)
    out += std::string("  \"") + mats[i].first + "\": " + mat_text(*mats[i].second) +
           (i + 1 < 6 ? ",\n" : "\n");
  return out + "}\n";
}

void write_instance(const PoincareInstance &inst, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot write instance file '" + path.string() + "'");
  out << instance_to_json(inst);
}

PoincareInstance builtin(std::string_view name) {
  if (name != "classical")
    throw UnknownInstance("unknown built-in instance '" + std::string(name) + "'");
  PoincareInstance inst;
  inst.name = "classical";
  inst.q = 1;
  inst.s = 1;
  // E is the spinor epsilon, E_{01} = 1, E_{10} = -1.
  inst.E = Mat(4, 1, {0, 1, -1, 0});
  inst.Eprime = Mat(1, 4, {0, 1, -1, 0});
  inst.X = flip(2, 2);
  inst.R = flip(4, 4);
  inst.Z = Mat(16, 4);
  inst.T = Mat(16, 1);
  return inst;
}

} // namespace qmink
