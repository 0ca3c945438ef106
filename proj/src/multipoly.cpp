#include "genus2/multipoly.hpp"

#include <numeric>

namespace g2 {

MultiPoly MultiPoly::variable(int arity, int index, int power) {
  MultiPoly p(arity);
  Exp e(static_cast<size_t>(arity), 0);
  e[static_cast<size_t>(index)] = power;
  p.terms_[e] = Rat(1);
  return p;
}

MultiPoly MultiPoly::constant(int arity, const Rat& value) {
  MultiPoly p(arity);
  if (value != 0) p.terms_[Exp(static_cast<size_t>(arity), 0)] = value;
  return p;
}

MultiPoly MultiPoly::elementary_symmetric(int arity, int k) {
  MultiPoly p(arity);
  if (k == 0) return constant(arity, Rat(1));
  if (k > arity) return p;
  // iterate over k-subsets
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Exp e(static_cast<size_t>(arity), 0);
    for (int i : idx) e[static_cast<size_t>(i)] = 1;
    p.terms_[e] = Rat(1);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == arity - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MultiPoly::add_term(const Exp& e, const Rat& c) {
  require(static_cast<int>(e.size()) == arity_, "exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require(arity_ == o.arity_, "arity mismatch");
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  require(arity_ == o.arity_, "arity mismatch");
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require(arity_ == o.arity_, "arity mismatch");
  MultiPoly r(arity_);
  Exp sum(static_cast<size_t>(arity_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (size_t i = 0; i < sum.size(); ++i) sum[i] = e1[i] + e2[i];
      r.add_term(sum, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
  MultiPoly r(arity_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly r = constant(arity_, Rat(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
  require(static_cast<int>(perm.size()) == arity_, "permutation arity mismatch");
  MultiPoly r(arity_);
  Exp pe(static_cast<size_t>(arity_));
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < pe.size(); ++i) pe[static_cast<size_t>(perm[i])] = e[i];
    r.add_term(pe, c);
  }
  return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& x) const {
  require(static_cast<int>(x.size()) == arity_, "evaluation arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < x.size(); ++i)
      if (e[i] > 0) t *= pow_rat(x[i], static_cast<unsigned long>(e[i]));
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::subst(const std::vector<MultiPoly>& repl) const {
  require(static_cast<int>(repl.size()) == arity_, "substitution arity mismatch");
  int out_arity = repl.empty() ? arity_ : repl[0].arity();
  MultiPoly acc(out_arity);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(out_arity, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * repl[i].pow(e[i]);
    acc = acc + t;
  }
  return acc;
}

} // namespace g2
