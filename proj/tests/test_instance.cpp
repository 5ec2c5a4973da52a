#include "qmink/calculus.hpp"
#include "qmink/errors.hpp"
#include "qmink/instance.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

using namespace qmink;

namespace {

std::string classical_json() { return instance_to_json(builtin("classical")); }

std::string with_edit(const std::function<void(nlohmann::json &)> &edit) {
  auto j = nlohmann::json::parse(classical_json());
  edit(j);
  return j.dump();
}

const ValidationCheck *find_check(const ValidationReport &r, const std::string &name) {
  for (const auto &c : r.checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

} // namespace

TEST(Instance, ClassicalData) {
  const PoincareInstance c = builtin("classical");
  EXPECT_EQ(c.name, "classical");
  EXPECT_EQ(c.q, Scalar(1));
  EXPECT_EQ(c.s, Scalar(1));
  EXPECT_EQ(c.R, flip(4, 4));
  EXPECT_TRUE(c.Z.is_zero());
  EXPECT_TRUE(c.T.is_zero());
  EXPECT_EQ(c.E(1, 0), Scalar(1));
  EXPECT_EQ(c.E(2, 0), Scalar(-1));
  EXPECT_NO_THROW(check_instance(c));
  EXPECT_THROW(builtin("kappa"), UnknownInstance);
}

TEST(Instance, ConstraintViolations) {
  PoincareInstance c = builtin("classical");
  c.q = 2;
  EXPECT_THROW(check_instance(c), ConstraintError);
  c = builtin("classical");
  c.X = Mat(4, 4);
  EXPECT_THROW(check_instance(c), ConstraintError);
  c = builtin("classical");
  c.Z = Mat(4, 4);
  EXPECT_THROW(check_instance(c), ShapeError);
}

TEST(Instance, SqrtQBranch) {
  PoincareInstance c = builtin("classical");
  EXPECT_EQ(sqrt_q(c), Scalar(1));
  c.q = -1;
  EXPECT_EQ(sqrt_q(c), Scalar::i());
}

TEST(Instance, JsonRoundTrip) {
  const PoincareInstance c = builtin("classical");
  EXPECT_EQ(parse_instance(classical_json()), c);
  const auto path = std::filesystem::temp_directory_path() / "qmink_roundtrip.json";
  write_instance(c, path);
  EXPECT_EQ(load_instance(path), c);
  std::filesystem::remove(path);
}

TEST(Instance, BigIntegersAsStrings) {
  const std::string text = with_edit([](nlohmann::json &j) {
    j["T"]["entries"][3] = {"123456789012345678901234567890", 7, 0, 1};
  });
  const PoincareInstance p = parse_instance(text);
  EXPECT_EQ(p.T(3, 0), Scalar(mpq_class("123456789012345678901234567890/7")));
  EXPECT_EQ(parse_instance(instance_to_json(p)), p);
}

TEST(Instance, ParseErrors) {
  EXPECT_THROW(parse_instance("{"), ParseError);
  EXPECT_THROW(parse_instance(with_edit([](nlohmann::json &j) { j["extra"] = 1; })), ParseError);
  EXPECT_THROW(parse_instance(with_edit([](nlohmann::json &j) { j.erase("T"); })), ParseError);
  EXPECT_THROW(parse_instance(with_edit([](nlohmann::json &j) { j["X"]["rows"] = 3; })),
               ParseError);
  EXPECT_THROW(
      parse_instance(with_edit([](nlohmann::json &j) { j["E"]["entries"][0] = {1, 0, 0, 1}; })),
      ParseError);
  EXPECT_THROW(
      parse_instance(with_edit([](nlohmann::json &j) { j["E"]["entries"][0] = {1, 1, 0}; })),
      ParseError);
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), IoError);
}

TEST(Validate, ClassicalAllPass) {
  const ValidationReport r = validate_instance(builtin("classical"));
  EXPECT_TRUE(r.overall);
  ASSERT_FALSE(r.checks.empty());
  for (const auto &c : r.checks) {
    EXPECT_TRUE(c.pass) << c.name;
    EXPECT_TRUE(c.residual.empty()) << c.name;
  }
}

TEST(Validate, SingularXIsAFailedCheck) {
  PoincareInstance c = builtin("classical");
  c.X = Mat(4, 4);
  ValidationReport r;
  ASSERT_NO_THROW(r = validate_instance(c));
  EXPECT_FALSE(r.overall);
  ASSERT_NE(find_check(r, "X_invertible"), nullptr);
  EXPECT_FALSE(find_check(r, "X_invertible")->pass);
}

TEST(Validate, ObstructionIsOnlyAWarning) {
  PoincareInstance c = builtin("classical");
  for (size_t r = 0; r < 16; ++r)
    for (size_t k = 0; k < 4; ++k)
      c.Z(r, k) = long((3 * r + 5 * k) % 7) - 3;
  const ValidationReport rep = validate_instance(c);
  const ValidationCheck *f = find_check(rep, "f_tilde_zero");
  ASSERT_NE(f, nullptr);
  EXPECT_FALSE(f->pass);
  EXPECT_TRUE(f->warning_only);
  EXPECT_TRUE(rep.overall);
}

TEST(Validate, FlipWithConstantTermHasNoObstruction) {
  // With R the flip and Z = 0 the T-terms of F~ cancel identically:
  // (1(x)R)(R(x)1)(1(x)T) sends x to T(x)x, which is T(x)1 applied to x.
  PoincareInstance c = builtin("classical");
  for (size_t r = 0; r < 16; ++r)
    c.T(r, 0) = Scalar(long(r % 5) - 2, long(r % 3));
  const Mat r = c.R;
  const Mat lhs = kron(c.T, Mat::identity(4));
  const Mat rhs = kron(Mat::identity(4), r) * kron(r, Mat::identity(4)) * kron(Mat::identity(4), c.T);
  EXPECT_EQ(lhs, rhs);
  EXPECT_TRUE(f_tilde(c).is_zero());
  const ValidationCheck *f = find_check(validate_instance(c), "f_tilde_zero");
  ASSERT_NE(f, nullptr);
  EXPECT_TRUE(f->pass);
}
