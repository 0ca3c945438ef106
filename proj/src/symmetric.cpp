#include "genus2/symmetric.hpp"

#include <numeric>

namespace g2 {

bool is_symmetric(const MultiPoly& p) {
  int n = p.arity();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i + 1 < n; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i + 1)]);
    if (!(p.permuted(perm) == p)) return false;
  }
  return true;
}

MultiPoly symmetric_reduce(const MultiPoly& p) {
  if (!is_symmetric(p)) fail(Err::NotSymmetric, "polynomial is not symmetric");
  int n = p.arity();
  std::vector<MultiPoly> elem;
  elem.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) elem.push_back(MultiPoly::elementary_symmetric(n, k));

  MultiPoly rest = p;
  MultiPoly out(n); // exponent vector indexes e_1..e_n
  while (!rest.is_zero()) {
    const auto& [lead, coef] = *rest.terms().rbegin();
    // the lex-leading exponent of a symmetric polynomial is non-increasing
    for (size_t i = 0; i + 1 < lead.size(); ++i)
      require(lead[i] >= lead[i + 1], "leading exponent not sorted for symmetric input");
    MultiPoly::Exp emono(static_cast<size_t>(n), 0);
    MultiPoly expansion = MultiPoly::constant(n, coef);
    for (int i = 0; i < n; ++i) {
      int next = (i + 1 < n) ? lead[static_cast<size_t>(i + 1)] : 0;
      int d = lead[static_cast<size_t>(i)] - next;
      emono[static_cast<size_t>(i)] = d;
      if (d > 0) expansion = expansion * elem[static_cast<size_t>(i)].pow(d);
    }
    out.add_term(emono, coef);
    rest = rest - expansion;
  }
  return out;
}

} // namespace g2
