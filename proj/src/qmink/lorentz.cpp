#include "qmink/lorentz.hpp"

#include "qmink/errors.hpp"

namespace qmink {

std::string lorentz_name(Letter l) {
  std::string base = l < 4 ? "w" : "wb";
  size_t idx = l % 4;
  return base + std::to_string(idx / 2 + 1) + std::to_string(idx % 2 + 1);
}

NCPoly lorentz_star(const NCPoly &p) {
  return p.star([](Letter l) { return static_cast<Letter>(l < 4 ? l + 4 : l - 4); });
}

PolyMat operator*(const PolyMat &a, const PolyMat &b) {
  PolyMat out(a.n_);
  for (size_t i = 0; i < a.n_; ++i)
    for (size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero())
        continue;
      for (size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero())
          out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

PolyMat operator*(const Mat &a, const PolyMat &b) {
  PolyMat out(b.n_);
  for (size_t i = 0; i < b.n_; ++i)
    for (size_t k = 0; k < b.n_; ++k)
      if (!a(i, k).is_zero())
        for (size_t j = 0; j < b.n_; ++j)
          out(i, j) += b(k, j) * a(i, k);
  return out;
}

PolyMat operator*(const PolyMat &a, const Mat &b) {
  PolyMat out(a.n_);
  for (size_t i = 0; i < a.n_; ++i)
    for (size_t k = 0; k < a.n_; ++k)
      for (size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero())
          out(i, j) += a(i, k) * b(k, j);
  return out;
}

PolyMat operator-(const PolyMat &a, const PolyMat &b) {
  PolyMat out(a);
  for (size_t k = 0; k < out.entries_.size(); ++k)
    out.entries_[k] -= b.entries_[k];
  return out;
}

PolyMat tensor(const PolyMat &v, const PolyMat &z) {
  size_t n = v.size(), m = z.size();
  PolyMat out(n * m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < m; ++l)
          out(m * i + j, m * k + l) = v(i, k) * z(j, l);
  return out;
}

PolyMat w_matrix() {
  PolyMat w(2);
  for (size_t A = 0; A < 2; ++A)
    for (size_t B = 0; B < 2; ++B)
      w(A, B) = NCPoly::gen(w_letter(A, B));
  return w;
}

PolyMat wbar_matrix() {
  PolyMat w(2);
  for (size_t A = 0; A < 2; ++A)
    for (size_t B = 0; B < 2; ++B)
      w(A, B) = NCPoly::gen(wbar_letter(A, B));
  return w;
}

std::vector<NCPoly> lorentz_relations(const PoincareInstance &inst) {
  const PolyMat ww = tensor(w_matrix(), w_matrix());
  std::vector<NCPoly> base;
  // (w (x) w) E = E
  for (size_t r = 0; r < 4; ++r) {
    NCPoly rel(-inst.E(r, 0));
    for (size_t c = 0; c < 4; ++c)
      rel += ww(r, c) * inst.E(c, 0);
    base.push_back(std::move(rel));
  }
  // E' (w (x) w) = E'
  for (size_t c = 0; c < 4; ++c) {
    NCPoly rel(-inst.Eprime(0, c));
    for (size_t r = 0; r < 4; ++r)
      rel += ww(r, c) * inst.Eprime(0, r);
    base.push_back(std::move(rel));
  }
  // X (w (x) wbar) = (wbar (x) w) X
  PolyMat diff = inst.X * tensor(w_matrix(), wbar_matrix()) -
                 tensor(wbar_matrix(), w_matrix()) * inst.X;
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 4; ++c)
      base.push_back(diff(r, c));

  std::vector<NCPoly> out = base;
  for (const auto &rel : base)
    out.push_back(lorentz_star(rel));
  return out;
}

LorentzAlgebra make_lorentz(const PoincareInstance &inst, size_t cap) {
  return LorentzAlgebra{TruncatedQuotient(8, lorentz_relations(inst), cap)};
}

PolyMat lambda_entries() {
  const Mat &v = spinor_vector_map();
  return v.inverse() * tensor(w_matrix(), wbar_matrix()) * v;
}

InvarianceResult lambda_invariance_check(const LorentzAlgebra &alg, const Mat &g) {
  if (alg.quotient.degree_cap() < 4)
    throw DegreeError("Lorentz invariance needs a degree cap of at least 4");
  const PolyMat lambda = lambda_entries();
  InvarianceResult res;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      NCPoly acc(-g(i, j));
      for (size_t k = 0; k < 4; ++k)
        for (size_t l = 0; l < 4; ++l)
          if (!g(k, l).is_zero())
            acc += lambda(i, k) * lambda(j, l) * g(k, l);
      NCPoly r = alg.quotient.normal_form(acc);
      if (!r.is_zero() && res.pass) {
        res.pass = false;
        res.witness = "(" + std::to_string(i) + "," + std::to_string(j) +
                      ") = " + r.to_string(lorentz_name);
      }
      res.residual[i][j] = std::move(r);
    }
  return res;
}

bool lambda_is_real(const LorentzAlgebra &alg) {
  const PolyMat lambda = lambda_entries();
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      if (!alg.quotient.normal_form(lorentz_star(lambda(i, j)) - lambda(i, j)).is_zero())
        return false;
  return true;
}

} // namespace qmink
