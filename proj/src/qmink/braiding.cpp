#include "qmink/braiding.hpp"

#include "qmink/errors.hpp"

#include <array>
#include <mutex>

namespace qmink {

std::string poincare_name(Letter l) {
  if (l < 16)
    return "L" + std::to_string(l / 4) + std::to_string(l % 4);
  return "y" + std::to_string(l - 16);
}

BPoly p_entry(size_t a, size_t b) {
  if (a < 4 && b < 4)
    return BPoly::gen(lambda_letter(a, b));
  if (a < 4)
    return BPoly::gen(y_letter(a));
  if (b == 4)
    return BPoly(1);
  return {};
}

namespace {

// Row/column of P holding the letter.
std::pair<size_t, size_t> p_position(Letter l) {
  if (l < 16)
    return {l / 4, l % 4};
  return {static_cast<size_t>(l - 16), 4};
}

BTensor delta_letter(Letter l) {
  auto [a, b] = p_position(l);
  BTensor out;
  for (size_t c = 0; c < 5; ++c) {
    BPoly left = p_entry(a, c), right = p_entry(c, b);
    if (left.is_zero() || right.is_zero())
      continue;
    out[{left.terms().begin()->first, right.terms().begin()->first}] += 1;
  }
  return out;
}

BTensor delta_word(const Word &w) {
  BTensor acc{{{Word{}, Word{}}, Scalar(1)}};
  for (Letter l : w) {
    BTensor d = delta_letter(l);
    BTensor next;
    for (const auto &[lw, lc] : acc)
      for (const auto &[dw, dc] : d) {
        Scalar &slot = next[{lw.first + dw.first, lw.second + dw.second}];
        slot += lc * dc;
      }
    acc = std::move(next);
  }
  return acc;
}

Scalar counit_word(const Word &w) {
  for (Letter l : w) {
    auto [a, b] = p_position(l);
    if (a != b)
      return 0;
  }
  return 1;
}

} // namespace

BTensor delta_b(const BPoly &p) {
  BTensor out;
  for (const auto &[w, c] : p.terms())
    for (const auto &[ww, wc] : delta_word(w)) {
      Scalar &slot = out[ww];
      slot += c * wc;
      if (slot.is_zero())
        out.erase(ww);
    }
  return out;
}

Scalar counit(const BPoly &p) {
  Scalar out;
  for (const auto &[w, c] : p.terms())
    out += c * counit_word(w);
  return out;
}

Mat build_rq(const PoincareInstance &inst, const MetricTensor &g, const Scalar &b) {
  // Block position -> pair index 5a + b.
  std::array<size_t, 25> pos{};
  size_t n = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      pos[n++] = 5 * i + j;
  for (size_t i = 0; i < 4; ++i)
    pos[n++] = 5 * i + 4;
  for (size_t j = 0; j < 4; ++j)
    pos[n++] = 20 + j;
  pos[n++] = 24;

  const Mat rz = inst.R * inst.Z;
  const Mat corner = (inst.R - Mat::identity(16)) * inst.T;
  Mat block(25, 25);
  for (size_t r = 0; r < 16; ++r) {
    for (size_t c = 0; c < 16; ++c)
      block(r, c) = inst.R(r, c);
    for (size_t c = 0; c < 4; ++c) {
      block(r, 16 + c) = inst.Z(r, c);
      block(r, 20 + c) = -rz(r, c);
    }
    block(r, 24) = corner(r, 0) + b * g.g(r / 4, r % 4);
  }
  for (size_t c = 0; c < 4; ++c) {
    block(16 + c, 20 + c) = 1;
    block(20 + c, 16 + c) = 1;
  }
  block(24, 24) = 1;

  Mat out(25, 25);
  for (size_t r = 0; r < 25; ++r)
    for (size_t c = 0; c < 25; ++c)
      out(pos[r], pos[c]) = block(r, c);
  return out;
}

YangBaxterResult yang_baxter_check(const Mat &w) {
  if (!w.is_square())
    throw ShapeError("Yang-Baxter check needs a square matrix");
  size_t d = 0;
  while (d * d < w.rows())
    ++d;
  if (d * d != w.rows() || d == 0)
    throw ShapeError("Yang-Baxter check needs a d^2 x d^2 matrix");
  const Mat one = Mat::identity(d);
  const Mat w1 = kron(w, one), w2 = kron(one, w);
  Mat diff = w1 * w2 * w1 - w2 * w1 * w2;
  return {diff.is_zero(), diff.witness()};
}

CqtEvaluator::CqtEvaluator(const PoincareInstance &inst, const Scalar &b, const Scalar &k,
                           RBase base)
    : inst_(inst), b_(b), k_(k), metric_(qmink::metric(inst)),
      rq_(build_rq(inst, metric_, b)),
      table_(base == RBase::Direct ? rq_ : rq_.inverse()) {
  if (!(k == Scalar(1) || k == Scalar(-1)))
    throw ConstraintError("k must be 1 or -1");
}

Scalar CqtEvaluator::r_letters(Letter a, Letter c) const {
  auto [j, k] = p_position(a);
  auto [i, l] = p_position(c);
  return table_(5 * i + j, 5 * k + l);
}

Scalar CqtEvaluator::split_left(const Word &a, const Word &c, size_t pos) const {
  const Word u = a.sub(0, pos), v = a.sub(pos, a.size() - pos);
  Scalar out;
  for (const auto &[cc, coef] : delta_word(c)) {
    Scalar left = r_word(u, cc.first);
    if (left.is_zero())
      continue;
    out += coef * left * r_word(v, cc.second);
  }
  return out;
}

Scalar CqtEvaluator::split_right(const Word &a, const Word &c, size_t pos) const {
  const Word head = c.sub(0, pos), tail = c.sub(pos, c.size() - pos);
  Scalar out;
  for (const auto &[aa, coef] : delta_word(a)) {
    Scalar left = r_word(aa.first, tail);
    if (left.is_zero())
      continue;
    out += coef * left * r_word(aa.second, head);
  }
  return out;
}

Scalar CqtEvaluator::r_word(const Word &a, const Word &c) const {
  if (a.empty())
    return counit_word(c);
  if (c.empty())
    return counit_word(a);
  if (a.size() == 1 && c.size() == 1)
    return r_letters(a[0], c[0]);
  {
    std::shared_lock lock(memo_mutex_);
    if (auto it = memo_.find({a, c}); it != memo_.end())
      return it->second;
  }
  Scalar out = a.size() >= 2 ? split_left(a, c, 1) : split_right(a, c, c.size() - 1);
  std::unique_lock lock(memo_mutex_);
  memo_.emplace(std::pair{a, c}, out);
  return out;
}

Scalar CqtEvaluator::r_word_split(const Word &a, const Word &c, size_t left_split,
                                  size_t right_split) const {
  if (left_split > 0 && left_split < a.size())
    return split_left(a, c, left_split);
  if (right_split > 0 && right_split < c.size())
    return split_right(a, c, right_split);
  return r_word(a, c);
}

Scalar CqtEvaluator::r_eval(const BPoly &a, const BPoly &c) const {
  Scalar out;
  for (const auto &[wa, ca] : a.terms())
    for (const auto &[wc, cc] : c.terms())
      out += ca * cc * r_word(wa, wc);
  return out;
}

Mat reconstruct_rpp(const CqtEvaluator &ev) {
  Mat out(25, 25);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j)
      for (size_t k = 0; k < 5; ++k)
        for (size_t l = 0; l < 5; ++l)
          out(5 * i + j, 5 * k + l) = ev.r_eval(p_entry(j, k), p_entry(i, l));
  return out;
}

CqtCheckResult product_law_check(const CqtEvaluator &ev) {
  const Mat one = Mat::identity(5);
  const Mat rpp = reconstruct_rpp(ev);
  const Mat left_law = kron(rpp, one) * kron(one, rpp);
  const Mat right_law = kron(one, rpp) * kron(rpp, one);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j1 = 0; j1 < 5; ++j1)
      for (size_t j2 = 0; j2 < 5; ++j2)
        for (size_t k1 = 0; k1 < 5; ++k1)
          for (size_t k2 = 0; k2 < 5; ++k2)
            for (size_t l = 0; l < 5; ++l) {
              Scalar lhs = ev.r_eval(p_entry(j1, k1) * p_entry(j2, k2), p_entry(i, l));
              if (!(lhs == left_law(25 * i + 5 * j1 + j2, 25 * k1 + 5 * k2 + l)))
                return {false, "R^{P(x)P,P} mismatch at P_" + std::to_string(j1) +
                                   std::to_string(k1) + " P_" + std::to_string(j2) +
                                   std::to_string(k2) + " (x) P_" + std::to_string(i) +
                                   std::to_string(l)};
              // Same index ranges reused as (i1, i2, j) x (k, l1, l2).
              const size_t i1 = i, i2 = j1, j = j2, k = k1, l1 = k2, l2 = l;
              Scalar rhs = ev.r_eval(p_entry(j, k), p_entry(i1, l1) * p_entry(i2, l2));
              if (!(rhs == right_law(25 * i1 + 5 * i2 + j, 25 * k + 5 * l1 + l2)))
                return {false, "R^{P,P(x)P} mismatch at P_" + std::to_string(j) +
                                   std::to_string(k) + " (x) P_" + std::to_string(i1) +
                                   std::to_string(l1) + " P_" + std::to_string(i2) +
                                   std::to_string(l2)};
            }
  return {true, ""};
}

CqtCheckResult star_cqt_check(const CqtEvaluator &ev) {
  std::vector<BPoly> gens{BPoly(1)};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      gens.push_back(BPoly::gen(lambda_letter(i, j)));
  for (size_t i = 0; i < 4; ++i)
    gens.push_back(BPoly::gen(y_letter(i)));
  auto star = [](const BPoly &p) { return p.star([](Letter l) { return l; }); };
  for (const auto &p : gens)
    for (const auto &q : gens) {
      Scalar lhs = ev.r_eval(star(q), star(p)).conj();
      Scalar rhs = ev.r_eval(p, q);
      if (!(lhs == rhs))
        return {false, "p=" + p.to_string(poincare_name) + ", q=" + q.to_string(poincare_name) +
                           ": " + lhs.to_string() + " != " + rhs.to_string()};
    }
  return {true, ""};
}

CqtCheckResult ct_check_matrix(const Mat &rpp) {
  if (!rpp.is_invertible())
    return {false, "R^{PP} is singular"};
  Mat diff = rpp.inverse() - rpp;
  return {diff.is_zero(), diff.is_zero() ? "" : "R^-1 - R at " + diff.witness()};
}

CqtCheckResult ct_check(const CqtEvaluator &ev) { return ct_check_matrix(reconstruct_rpp(ev)); }

LorentzRBlocks lorentz_r_blocks(const PoincareInstance &inst, const Scalar &k) {
  if (!(k == Scalar(1) || k == Scalar(-1)))
    throw ConstraintError("k must be 1 or -1");
  check_instance(inst);
  const Mat tau = flip(2, 2);
  const Mat L = inst.s * sqrt_q(inst) * (Mat::identity(4) + inst.q * (inst.E * inst.Eprime));
  LorentzRBlocks out;
  out.ww = k * L;
  out.wwbar = k * inst.X;
  out.wbarw = inst.q * k * inst.X.inverse();
  out.wbarwbar = k * (tau * L * tau);
  return out;
}

std::vector<IntertwinerResult> lorentz_intertwiner_check(const LorentzAlgebra &alg,
                                                         const LorentzRBlocks &blocks) {
  const PolyMat w = w_matrix(), wb = wbar_matrix();
  struct Case {
    const char *name;
    const PolyMat *v;
    const PolyMat *z;
    const Mat *r;
  };
  const std::array<Case, 4> cases{{{"w,w", &w, &w, &blocks.ww},
                                   {"w,wbar", &w, &wb, &blocks.wwbar},
                                   {"wbar,w", &wb, &w, &blocks.wbarw},
                                   {"wbar,wbar", &wb, &wb, &blocks.wbarwbar}}};
  std::vector<IntertwinerResult> out;
  for (const auto &cs : cases) {
    PolyMat diff = tensor(*cs.z, *cs.v) * *cs.r - *cs.r * tensor(*cs.v, *cs.z);
    IntertwinerResult res{cs.name, true, ""};
    for (size_t r = 0; r < 4 && res.pass; ++r)
      for (size_t c = 0; c < 4 && res.pass; ++c) {
        NCPoly nf = alg.quotient.normal_form(diff(r, c));
        if (!nf.is_zero()) {
          res.pass = false;
          res.witness = "(" + std::to_string(r) + "," + std::to_string(c) +
                        ") = " + nf.to_string(lorentz_name);
        }
      }
    out.push_back(std::move(res));
  }
  return out;
}

} // namespace qmink
