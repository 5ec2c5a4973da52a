#include "qmink/calculus.hpp"

#include "qmink/errors.hpp"

#include <algorithm>

namespace qmink {

Mat f_tilde(const PoincareInstance &inst) {
  const Mat i4 = Mat::identity(4);
  const Mat &R = inst.R, &Z = inst.Z, &T = inst.T;
  Mat inner = kron(i4, Z) * Z - kron(Z, i4) * Z + kron(T, i4) -
              kron(i4, R) * kron(R, i4) * kron(i4, T);
  return kron(R - Mat::identity(16), i4) * inner;
}

Form1 &Form1::operator+=(const Form1 &o) {
  for (size_t i = 0; i < 4; ++i)
    coords[i] += o.coords[i];
  return *this;
}

bool Form1::is_zero() const {
  for (const auto &c : coords)
    if (!c.is_zero())
      return false;
  return true;
}

FirstOrderCalculus::FirstOrderCalculus(MinkowskiAlgebra alg)
    : alg_(std::move(alg)), metric_(qmink::metric(alg_.instance)) {
  const Mat obstruction = f_tilde(alg_.instance);
  if (!obstruction.is_zero())
    throw CalculusObstruction("F~ is nonzero at " + obstruction.witness() +
                              "; no covariant 4-dimensional calculus exists");
  const Mat &R = alg_.instance.R;
  const Mat &Z = alg_.instance.Z;
  for (Letter i = 0; i < 4; ++i)
    for (Letter j = 0; j < 4; ++j)
      for (Letter k = 0; k < 4; ++k) {
        NCPoly c(Z(4 * i + j, k));
        for (Letter l = 0; l < 4; ++l)
          c.add(Word{l}, R(4 * i + j, 4 * k + l));
        left_[i][j][k] = std::move(c);
      }
}

void FirstOrderCalculus::check_degree(const NCPoly &p) const {
  if (p.degree() > static_cast<int>(quotient().degree_cap()))
    throw DegreeError("polynomial of degree " + std::to_string(p.degree()) +
                      " exceeds the degree cap");
}

Form1 FirstOrderCalculus::right_multiply(const Form1 &omega, const NCPoly &a) const {
  Form1 out;
  for (size_t k = 0; k < 4; ++k)
    out.coords[k] = quotient().multiply(omega.coords[k], a);
  return out;
}

Form1 FirstOrderCalculus::left_multiply(const NCPoly &a, const Form1 &omega) const {
  Form1 out;
  for (const auto &[w, c] : a.terms()) {
    Form1 cur = omega;
    for (size_t pos = w.size(); pos-- > 0;) {
      Letter i = w[pos];
      Form1 next;
      for (size_t j = 0; j < 4; ++j) {
        if (cur.coords[j].is_zero())
          continue;
        for (size_t k = 0; k < 4; ++k)
          if (!left_[i][j][k].is_zero())
            next.coords[k] += quotient().multiply(left_[i][j][k], cur.coords[j]);
      }
      cur = std::move(next);
    }
    for (auto &x : cur.coords)
      x *= c;
    out += cur;
  }
  return out;
}

Form1 FirstOrderCalculus::differential(const NCPoly &p) const {
  check_degree(p);
  Form1 out;
  for (const auto &[w, c] : p.terms()) {
    for (size_t m = 0; m < w.size(); ++m) {
      Form1 piece;
      piece.coords[w[m]] = quotient().normal_form(NCPoly(w.sub(m + 1, w.size() - m - 1), c));
      out += left_multiply(NCPoly(w.sub(0, m)), piece);
    }
  }
  return out;
}

NCPoly FirstOrderCalculus::partial_word(size_t i, const Word &w) const {
  if (w.empty())
    return {};
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find({i, w}); it != memo_.end())
      return it->second;
  }
  const Letter k = w[0];
  const Word rest = w.sub(1, w.size() - 1);
  NCPoly out;
  if (k == i)
    out += NCPoly(rest);
  for (size_t l = 0; l < 4; ++l) {
    const NCPoly &coeff = left_[k][l][i];
    if (coeff.is_zero())
      continue;
    NCPoly inner = partial_word(l, rest);
    if (!inner.is_zero())
      out += coeff * inner;
  }
  out = quotient().normal_form(out);
  std::lock_guard lock(memo_mutex_);
  memo_.emplace(std::pair{i, w}, out);
  return out;
}

NCPoly FirstOrderCalculus::partial(size_t i, const NCPoly &p) const {
  if (i >= 4)
    throw std::out_of_range("partial index must be 0..3");
  check_degree(p);
  NCPoly out;
  for (const auto &[w, c] : p.terms())
    out += partial_word(i, w) * c;
  return out;
}

NCPoly FirstOrderCalculus::box(const NCPoly &p) const {
  NCPoly out;
  for (size_t i = 0; i < 4; ++i) {
    NCPoly di = partial(i, p);
    if (di.is_zero())
      continue;
    for (size_t j = 0; j < 4; ++j)
      if (!metric_.g(i, j).is_zero())
        out += partial(j, di) * metric_.g(i, j);
  }
  return out;
}

NCPoly FirstOrderCalculus::momentum_lower(size_t l, const NCPoly &p) const {
  return partial(l, p) * Scalar::i();
}

NCPoly FirstOrderCalculus::momentum(size_t k, const NCPoly &p) const {
  NCPoly out;
  for (size_t l = 0; l < 4; ++l)
    if (!metric_.g(k, l).is_zero())
      out += momentum_lower(l, p) * metric_.g(k, l);
  return out;
}

FirstOrderCalculus make_calculus(const MinkowskiAlgebra &alg) { return FirstOrderCalculus(alg); }

namespace {

void record(SweepResult &res, bool ok, const std::string &what) {
  ++res.cases;
  if (!ok && res.pass) {
    res.pass = false;
    res.witness = what;
  }
}

std::string name_of(const Word &w) {
  return NCPoly(w).to_string(coordinate_name);
}

} // namespace

SweepResult check_partial_exchange(const FirstOrderCalculus &c, size_t n) {
  SweepResult res;
  const Mat &R = c.algebra().instance.R;
  for (const auto &w : c.quotient().basis_up_to(n)) {
    NCPoly a(w);
    std::array<NCPoly, 4> first;
    for (size_t i = 0; i < 4; ++i)
      first[i] = c.partial(i, a);
    for (size_t k = 0; k < 4; ++k)
      for (size_t l = 0; l < 4; ++l) {
        NCPoly lhs = c.partial(l, first[k]);
        NCPoly rhs;
        for (size_t i = 0; i < 4; ++i)
          for (size_t j = 0; j < 4; ++j)
            if (!R(4 * i + j, 4 * k + l).is_zero())
              rhs += c.partial(j, first[i]) * R(4 * i + j, 4 * k + l);
        record(res, lhs == rhs,
               "d" + std::to_string(l) + "d" + std::to_string(k) + "(" + name_of(w) + ")");
      }
  }
  return res;
}

SweepResult check_differential_partials(const FirstOrderCalculus &c, size_t n) {
  SweepResult res;
  for (const auto &w : c.quotient().basis_up_to(n)) {
    NCPoly a(w);
    Form1 da = c.differential(a);
    bool ok = true;
    for (size_t i = 0; i < 4; ++i)
      ok = ok && da.coords[i] == c.partial(i, a);
    record(res, ok, "d(" + name_of(w) + ")");
  }
  return res;
}

SweepResult check_leibniz(const FirstOrderCalculus &c, size_t n) {
  SweepResult res;
  auto basis = c.quotient().basis_up_to(n);
  for (const auto &wa : basis)
    for (const auto &wb : basis) {
      if (wa.size() + wb.size() > n)
        continue;
      NCPoly a(wa), b(wb);
      Form1 lhs = c.differential(c.quotient().multiply(a, b));
      Form1 rhs = c.left_multiply(a, c.differential(b)) + c.right_multiply(c.differential(a), b);
      record(res, lhs == rhs, "d(" + name_of(wa) + " * " + name_of(wb) + ")");
    }
  return res;
}

SweepResult check_box_commutes(const FirstOrderCalculus &c, size_t n) {
  SweepResult res;
  for (const auto &w : c.quotient().basis_up_to(n)) {
    NCPoly a(w);
    NCPoly boxed = c.box(a);
    for (size_t i = 0; i < 4; ++i)
      record(res, c.box(c.partial(i, a)) == c.partial(i, boxed),
             "[box, d" + std::to_string(i) + "](" + name_of(w) + ")");
  }
  return res;
}

SweepResult check_ideal_compatibility(const FirstOrderCalculus &c, size_t n) {
  SweepResult res;
  const auto &q = c.quotient();
  // Free words of length <= n - 2 as left and right padding.
  std::vector<std::vector<Word>> by_len{{Word{}}};
  for (size_t d = 1; d + 2 <= n; ++d) {
    std::vector<Word> next;
    for (const auto &w : by_len.back())
      for (Letter l = 0; l < 4; ++l)
        next.push_back(w + Word{l});
    by_len.push_back(std::move(next));
  }
  for (size_t r = 0; r < q.relations().size(); ++r) {
    const NCPoly &rel = q.relations()[r];
    size_t room = n - static_cast<size_t>(std::max(rel.degree(), 0));
    for (size_t du = 0; du <= room && du < by_len.size(); ++du)
      for (size_t dv = 0; du + dv <= room && dv < by_len.size(); ++dv)
        for (const auto &u : by_len[du])
          for (const auto &v : by_len[dv]) {
            NCPoly elem = NCPoly(u) * rel * NCPoly(v);
            bool ok = c.differential(elem).is_zero();
            for (size_t i = 0; i < 4 && ok; ++i)
              ok = c.partial(i, elem).is_zero();
            record(res, ok,
                   "d(u r" + std::to_string(r) + " v) with u=" + name_of(u) +
                       ", v=" + name_of(v));
          }
    if (rel.degree() + 1 <= static_cast<int>(n))
      for (size_t j = 0; j < 4; ++j) {
        Form1 dxj;
        dxj.coords[j] = NCPoly(1);
        record(res, c.left_multiply(rel, dxj).is_zero(),
               "r" + std::to_string(r) + " * dx" + std::to_string(j));
      }
  }
  return res;
}

} // namespace qmink
