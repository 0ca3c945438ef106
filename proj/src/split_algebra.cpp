#include "genus2/split_algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <memory>
#include <numeric>

namespace g2 {

const std::vector<std::array<std::array<int, 2>, 3>>& six_point_matchings() {
  static const auto matchings = [] {
    std::vector<std::array<std::array<int, 2>, 3>> out;
    // lexicographic: always pair the smallest free point with each candidate
    auto rec = [&](auto&& self, std::vector<int> rem, std::vector<std::array<int, 2>> acc) -> void {
      if (rem.empty()) {
        out.push_back({acc[0], acc[1], acc[2]});
        return;
      }
      int a = rem[0];
      for (size_t k = 1; k < rem.size(); ++k) {
        int b = rem[static_cast<size_t>(k)];
        std::vector<int> next;
        for (int x : rem)
          if (x != a && x != b) next.push_back(x);
        auto acc2 = acc;
        acc2.push_back({a, b});
        self(self, next, acc2);
      }
    };
    rec(rec, {0, 1, 2, 3, 4, 5}, {});
    return out;
  }();
  return matchings;
}

const std::vector<std::array<std::array<int, 3>, 2>>& six_point_triple_partitions() {
  static const auto parts = [] {
    std::vector<std::array<std::array<int, 3>, 2>> out;
    for (int i = 1; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        std::array<int, 3> t{0, i, j};
        std::array<int, 3> c{};
        int k = 0;
        for (int x = 1; x < 6; ++x)
          if (x != i && x != j) c[static_cast<size_t>(k++)] = x;
        out.push_back({t, c});
      }
    return out;
  }();
  return parts;
}

namespace {

// ---------------------------------------------------------------------------
// Monomial tables. Basis monomials r2^k2...r6^k6 with k_i < i (720 of them;
// r1 is eliminated by the linear relation T1). Products of two basis
// monomials have digits k_i <= 2(i-1), indexed in the "extended" range.
// ---------------------------------------------------------------------------

constexpr int kBasis = 720;
constexpr int kExt = 10395; // prod (2i-1), i=2..6
constexpr int kVars = 5;    // digits for r2..r6

struct Tables {
  std::array<int32_t, kExt> ext2basis;
  std::array<int32_t, kBasis> basis2ext;
  std::array<std::array<int8_t, kVars>, kBasis> basis_digits;

  Tables() {
    ext2basis.fill(-1);
    for (int ext = 0; ext < kExt; ++ext) {
      int v = ext;
      std::array<int, kVars> d{};
      bool in_basis = true;
      for (int i = 0; i < kVars; ++i) {
        int radix = 2 * (i + 2) - 1;
        d[static_cast<size_t>(i)] = v % radix;
        v /= radix;
        if (d[static_cast<size_t>(i)] > i + 1) in_basis = false;
      }
      if (!in_basis) continue;
      int b = 0;
      for (int i = kVars - 1; i >= 0; --i) b = b * (i + 2) + d[static_cast<size_t>(i)];
      ext2basis[static_cast<size_t>(ext)] = b;
      basis2ext[static_cast<size_t>(b)] = ext;
      for (int i = 0; i < kVars; ++i)
        basis_digits[static_cast<size_t>(b)][static_cast<size_t>(i)] = static_cast<int8_t>(d[static_cast<size_t>(i)]);
    }
  }
};

const Tables& tbl() {
  static const Tables t;
  return t;
}

bool in_basis_digits(const std::array<int, kVars>& d) {
  for (int i = 0; i < kVars; ++i)
    if (d[static_cast<size_t>(i)] > i + 1) return false;
  return true;
}

int32_t basis_encode(const std::array<int, kVars>& d) {
  int32_t b = 0;
  for (int i = kVars - 1; i >= 0; --i) b = b * (i + 2) + d[static_cast<size_t>(i)];
  return b;
}

// ---------------------------------------------------------------------------
// Coefficient rings.
// ---------------------------------------------------------------------------

struct RatRing {
  using T = Rat;
  T zero() const { return Rat(0); }
  T one() const { return Rat(1); }
  static bool is_zero(const T& a) { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T from_rat(const Rat& v) const { return v; }
};

// Z/p in Montgomery form (values are a*2^64 mod p); p odd, p < 2^63.
struct ZpRing {
  uint64_t p;
  uint64_t npinv; // -p^{-1} mod 2^64
  uint64_t r1;    // 2^64 mod p, the unit
  uint64_t r2;    // 2^128 mod p

  explicit ZpRing(uint64_t prime) : p(prime) {
    uint64_t x = p; // Newton lifting of p^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) x *= 2 - p * x;
    npinv = ~x + 1;
    r1 = static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) % p);
    r2 = static_cast<uint64_t>(static_cast<unsigned __int128>(r1) * r1 % p);
  }

  using T = uint64_t;
  T zero() const { return 0; }
  T one() const { return r1; }
  static bool is_zero(T a) { return a == 0; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T mul(T a, T b) const { // REDC
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    uint64_t m = static_cast<uint64_t>(t) * npinv;
    uint64_t u = static_cast<uint64_t>((t + static_cast<unsigned __int128>(m) * p) >> 64);
    return u >= p ? u - p : u;
  }
  T neg(T a) const { return a ? p - a : 0; }
  T to_mont(uint64_t plain) const { return mul(plain, r2); }
  uint64_t from_mont(T a) const { return mul(a, 1); }
  T from_rat(const Rat& v) const {
    uint64_t n = mpz_fdiv_ui(num(v).get_mpz_t(), p);
    uint64_t d = mpz_fdiv_ui(den(v).get_mpz_t(), p);
    require(d != 0, "denominator divisible by working prime");
    auto mm = [&](uint64_t x, uint64_t y) {
      return static_cast<uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    uint64_t inv = 1, base = d, e = p - 2;
    while (e) {
      if (e & 1) inv = mm(inv, base);
      base = mm(base, base);
      e >>= 1;
    }
    return to_mont(mm(n, inv));
  }
};

// ---------------------------------------------------------------------------
// The normal-form engine for one monic sextic over one coefficient ring.
// ---------------------------------------------------------------------------

template <class Ring>
class Engine {
public:
  using T = typename Ring::T;
  struct Term {
    int32_t idx;
    T c;
  };
  using Elem = std::vector<Term>; // sorted by idx, no zero coefficients

  // monic[k] = coefficient of x^k as an exact rational; monic[6] = 1.
  Engine(const Ring& ring, const std::array<Rat, 7>& monic) : ring_(ring) {
    build_tails(monic);
  }

  const Ring& ring() const { return ring_; }

  Elem constant(const T& v) const {
    Elem e;
    if (!Ring::is_zero(v)) e.push_back({0, v});
    return e;
  }

  // NF of r_i (1-based variable index)
  Elem var(int i) const {
    if (i == 1) return var1_;
    std::array<int, kVars> d{};
    d[static_cast<size_t>(i - 2)] = 1;
    return Elem{{basis_encode(d), ring_.one()}};
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].idx < b[j].idx)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].idx < a[i].idx) {
        out.push_back(b[j++]);
      } else {
        T s = ring_.add(a[i].c, b[j].c);
        if (!Ring::is_zero(s)) out.push_back({a[i].idx, s});
        ++i, ++j;
      }
    }
    return out;
  }

  Elem sub(const Elem& a, const Elem& b) const { return add(a, negate(b)); }

  Elem negate(Elem a) const {
    for (auto& t : a) t.c = ring_.neg(t.c);
    return a;
  }

  Elem scale(Elem a, const T& s) const {
    if (Ring::is_zero(s)) return Elem{};
    for (auto& t : a) t.c = ring_.mul(t.c, s);
    return a;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    if (a.empty() || b.empty()) return Elem{};
    if (ext_buf_.empty()) {
      ext_buf_.assign(kExt, ring_.zero());
      dense_buf_.assign(kBasis, ring_.zero());
    }
    const auto& tables = tbl();
    // accumulate in product-exponent space first; digit-wise sums never
    // carry between mixed-radix positions, so ext indices just add
    for (const auto& ta : a) {
      int32_t ea = tables.basis2ext[static_cast<size_t>(ta.idx)];
      for (const auto& tb : b) {
        T& slot = ext_buf_[static_cast<size_t>(ea + tables.basis2ext[static_cast<size_t>(tb.idx)])];
        slot = ring_.add(slot, ring_.mul(ta.c, tb.c));
      }
    }
    // one reduction per populated product monomial
    for (int32_t s = 0; s < kExt; ++s) {
      T& c = ext_buf_[static_cast<size_t>(s)];
      if (Ring::is_zero(c)) continue;
      int32_t direct = tables.ext2basis[static_cast<size_t>(s)];
      if (direct >= 0) {
        dense_buf_[static_cast<size_t>(direct)] = ring_.add(dense_buf_[static_cast<size_t>(direct)], c);
      } else {
        for (const auto& tr : reduce_ext(s))
          dense_buf_[static_cast<size_t>(tr.idx)] =
              ring_.add(dense_buf_[static_cast<size_t>(tr.idx)], ring_.mul(c, tr.c));
      }
      c = ring_.zero();
    }
    Elem out;
    for (int32_t i = 0; i < kBasis; ++i) {
      T& c = dense_buf_[static_cast<size_t>(i)];
      if (Ring::is_zero(c)) continue;
      out.push_back({i, c});
      c = ring_.zero();
    }
    return out;
  }

  // NF of a monomial in all six variables (exponents unrestricted).
  Elem monomial_elem(const std::vector<int>& e6) const {
    std::array<int, kVars> d{};
    for (int i = 0; i < kVars; ++i) d[static_cast<size_t>(i)] = e6[static_cast<size_t>(i + 1)];
    Elem out = in_basis_digits(d) ? Elem{{basis_encode(d), ring_.one()}} : reduce_monomial(d);
    for (int k = 0; k < e6[0]; ++k) out = mul(out, var1_);
    return out;
  }

  // True when the element is a scalar; stores the value.
  bool scalar_of(const Elem& e, T& out) const {
    out = ring_.zero();
    if (e.empty()) return true;
    if (e.size() == 1 && e[0].idx == 0) {
      out = e[0].c;
      return true;
    }
    return false;
  }

private:
  Ring ring_;
  // negated tails of the triangular set: r_v^v == negtail_[v] in the quotient
  std::array<std::vector<std::pair<std::array<int, kVars>, T>>, 7> negtail_;
  Elem var1_;
  mutable std::vector<const Elem*> extmemo_ = std::vector<const Elem*>(kExt, nullptr);
  mutable std::unordered_map<uint64_t, Elem> genmemo_; // key: packed digits
  mutable std::vector<T> ext_buf_, dense_buf_;         // scratch for mul, zeroed between calls

  static uint64_t pack_digits(const std::array<int, kVars>& e) {
    uint64_t key = 0;
    for (int i = 0; i < kVars; ++i) key = (key << 8) | static_cast<uint64_t>(e[static_cast<size_t>(i)]);
    return key;
  }

  Elem compress(const std::vector<T>& dense) const {
    Elem out;
    for (int i = 0; i < kBasis; ++i)
      if (!Ring::is_zero(dense[static_cast<size_t>(i)])) out.push_back({i, dense[static_cast<size_t>(i)]});
    return out;
  }

  // T_v = p[r_v,...,r_6] = sum_k c_k h_{k-(6-v)}(r_v..r_6), monic of degree v
  // in r_v; all tail monomials lie inside the reduced basis.
  void build_tails(const std::array<Rat, 7>& monic) {
    for (int v = 1; v <= 6; ++v) {
      int m = 6 - v;
      std::map<std::array<int, kVars>, Rat> tail; // includes r1 slot handled below
      std::array<int, kVars + 1> head{};          // exponents over r1..r6
      head[static_cast<size_t>(v - 1)] = v;
      // enumerate h_j(r_v..r_6) for j = 0..v and accumulate c_{m+j} * h_j
      std::vector<int> expnt(static_cast<size_t>(7 - v), 0);
      auto emit = [&](const std::vector<int>& es, const Rat& coef) {
        std::array<int, kVars + 1> full{};
        for (size_t t = 0; t < es.size(); ++t) full[static_cast<size_t>(v - 1) + t] = es[t];
        if (full == head) return; // leading term r_v^v, removed
        std::array<int, kVars> digits{};
        require(full[0] == 0 || v == 1, "tail term contains r1");
        for (int i = 0; i < kVars; ++i) digits[static_cast<size_t>(i)] = full[static_cast<size_t>(i + 1)];
        require(in_basis_digits(digits), "tail term outside reduced basis");
        auto [it, fresh] = tail.emplace(digits, -coef);
        if (!fresh) it->second -= coef;
      };
      // compositions of j into 7-v ordered parts
      auto rec = [&](auto&& self, size_t pos, int left, const Rat& coef) -> void {
        if (pos + 1 == expnt.size()) {
          expnt[pos] = left;
          emit(expnt, coef);
          return;
        }
        for (int t = 0; t <= left; ++t) {
          expnt[pos] = t;
          self(self, pos + 1, left - t, coef);
        }
      };
      for (int j = 0; j <= v; ++j) {
        const Rat& ck = monic[static_cast<size_t>(m + j)];
        if (ck == 0) continue;
        if (expnt.empty()) {
          require(v == 0, "unreachable");
        }
        rec(rec, 0, j, ck);
      }
      auto& dst = negtail_[static_cast<size_t>(v)];
      for (const auto& [digits, coef] : tail) {
        if (coef == 0) continue;
        dst.emplace_back(digits, ring_.from_rat(coef));
      }
    }
    // var1: special-case v=1, where the "tail" legitimately includes r2..r6
    // and a constant; rebuild it directly: r1 = -c5 - (r2+...+r6).
    {
      negtail_[1].clear();
      std::map<std::array<int, kVars>, Rat> t1;
      t1[{}] = -monic[5];
      for (int i = 0; i < kVars; ++i) {
        std::array<int, kVars> d{};
        d[static_cast<size_t>(i)] = 1;
        t1[d] = Rat(-1);
      }
      std::vector<T> dense(kBasis, ring_.zero());
      for (const auto& [digits, coef] : t1) {
        if (coef == 0) continue;
        negtail_[1].emplace_back(digits, ring_.from_rat(coef));
        dense[static_cast<size_t>(basis_encode(digits))] = ring_.from_rat(coef);
      }
      var1_ = compress(dense);
    }
  }

  const Elem& reduce_ext(int32_t ext) const {
    const Elem*& slot = extmemo_[static_cast<size_t>(ext)];
    if (!slot) {
      std::array<int, kVars> d{};
      int v = ext;
      for (int i = 0; i < kVars; ++i) {
        int radix = 2 * (i + 2) - 1;
        d[static_cast<size_t>(i)] = v % radix;
        v /= radix;
      }
      slot = &reduce_monomial(d);
    }
    return *slot;
  }

  // Normal form of a monomial not in the reduced basis. Rewrites r_v^v ->
  // negtail_[v] on the highest overflowing variable; the rewrite leaves
  // lower-variable digits alone and strictly drops the digit of r_v, so
  // (k2,...,k6) strictly decreases lexicographically: the recursion is
  // well-founded and every distinct monomial is computed exactly once.
  const Elem& reduce_monomial(const std::array<int, kVars>& e) const {
    uint64_t key = pack_digits(e);
    auto hit = genmemo_.find(key);
    if (hit != genmemo_.end()) return hit->second;

    int v = 0;
    for (int i = kVars - 1; i >= 0; --i)
      if (e[static_cast<size_t>(i)] >= i + 2) {
        v = i + 2;
        break;
      }
    require(v >= 2, "reduce_monomial called on a basis monomial");
    std::array<int, kVars> e2 = e;
    e2[static_cast<size_t>(v - 2)] -= v;

    std::vector<T> dense(kBasis, ring_.zero());
    for (const auto& [td, tc] : negtail_[static_cast<size_t>(v)]) {
      std::array<int, kVars> s = e2;
      for (int i = 0; i < kVars; ++i) s[static_cast<size_t>(i)] += td[static_cast<size_t>(i)];
      if (in_basis_digits(s)) {
        int32_t b = basis_encode(s);
        dense[static_cast<size_t>(b)] = ring_.add(dense[static_cast<size_t>(b)], tc);
      } else {
        for (const auto& tr : reduce_monomial(s))
          dense[static_cast<size_t>(tr.idx)] =
              ring_.add(dense[static_cast<size_t>(tr.idx)], ring_.mul(tc, tr.c));
      }
    }
    // unordered_map references stay valid across rehashing
    return genmemo_.emplace(key, compress(dense)).first->second;
  }
};

// ---------------------------------------------------------------------------
// Shared evaluation plumbing.
// ---------------------------------------------------------------------------

std::array<Rat, 7> monic_coefficients(const UniPoly& f) {
  if (f.is_zero() || f.degree() != 6 || f.leading() == 0)
    fail(Err::LeadingCoefficientZero, "split algebra needs a sextic with nonzero leading coefficient");
  std::array<Rat, 7> monic;
  for (int k = 0; k <= 6; ++k) monic[static_cast<size_t>(k)] = f[static_cast<size_t>(k)] / f.leading();
  return monic;
}

template <class Ring>
typename Engine<Ring>::Elem eval_poly(const Engine<Ring>& eng, const MultiPoly& expr) {
  require(expr.arity() == 6, "split algebra expressions use six root variables");
  typename Engine<Ring>::Elem acc;
  for (const auto& [e, c] : expr.terms()) {
    auto term = eng.monomial_elem(e);
    acc = eng.add(acc, eng.scale(std::move(term), eng.ring().from_rat(c)));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Public exact-rational entry points.
// ---------------------------------------------------------------------------

} // namespace

Rat split_algebra_value(const UniPoly& f, const MultiPoly& expr) {
  Engine<RatRing> eng(RatRing{}, monic_coefficients(f));
  auto elem = eval_poly(eng, expr);
  Rat out;
  if (!eng.scalar_of(elem, out))
    fail(Err::NotSymmetric, "normal form is not a scalar; expression is not symmetric");
  return out;
}

Rat split_algebra_value_product(const UniPoly& f, const std::vector<MultiPoly>& factors) {
  Engine<RatRing> eng(RatRing{}, monic_coefficients(f));
  auto acc = eng.constant(Rat(1));
  for (const auto& factor : factors) acc = eng.mul(acc, eval_poly(eng, factor));
  Rat out;
  if (!eng.scalar_of(acc, out))
    fail(Err::NotSymmetric, "normal form is not a scalar; expression is not symmetric");
  return out;
}

// ---------------------------------------------------------------------------
// The five invariant expressions over prime fields with CRT reconstruction.
// ---------------------------------------------------------------------------

namespace {

const std::vector<uint64_t>& prime_pool(size_t n) {
  static std::vector<uint64_t> primes;
  static Int cursor = Int(1) << 62;
  while (primes.size() < n) {
    Int next;
    mpz_nextprime(next.get_mpz_t(), cursor.get_mpz_t());
    cursor = next;
    primes.push_back(mpz_get_ui(next.get_mpz_t()));
  }
  return primes;
}

int pair_id(int i, int j) { // 0 <= i < j < 6
  static const auto table = [] {
    std::array<std::array<int, 6>, 6> t{};
    int n = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = n++;
    return t;
  }();
  return table[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

// Which of the five expressions a given prime still has to deliver.
using NeedMask = std::array<bool, 5>;

// Expression values mod p at the roots of the given monic sextic; only the
// masked entries are computed (the rest stay zero).
std::array<uint64_t, 5> quintuple_mod_p(uint64_t p, const std::array<Rat, 7>& monic, const NeedMask& need) {
  ZpRing ring(p);
  Engine<ZpRing> eng(ring, monic);
  using Elem = Engine<ZpRing>::Elem;

  std::array<Elem, 6> vars;
  for (int i = 0; i < 6; ++i) vars[static_cast<size_t>(i)] = eng.var(i + 1);

  std::array<Elem, 15> sq, spair, qpair;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      int id = pair_id(i, j);
      auto diff = eng.sub(vars[static_cast<size_t>(i)], vars[static_cast<size_t>(j)]);
      sq[static_cast<size_t>(id)] = eng.mul(diff, diff);
      if (need[4]) {
        spair[static_cast<size_t>(id)] = eng.add(vars[static_cast<size_t>(i)], vars[static_cast<size_t>(j)]);
        qpair[static_cast<size_t>(id)] = eng.mul(vars[static_cast<size_t>(i)], vars[static_cast<size_t>(j)]);
      }
    }

  auto sq_of = [&](int i, int j) -> const Elem& { return sq[static_cast<size_t>(pair_id(std::min(i, j), std::max(i, j)))]; };

  Elem SA, SB, SC, SD, SE;

  if (need[0]) {
    for (const auto& m : six_point_matchings()) {
      auto prod = eng.mul(sq_of(m[0][0], m[0][1]), sq_of(m[1][0], m[1][1]));
      prod = eng.mul(prod, sq_of(m[2][0], m[2][1]));
      SA = eng.add(SA, prod);
    }
  }

  if (need[1] || need[2]) {
    auto tri_of = [&](const std::array<int, 3>& t) {
      auto prod = eng.mul(sq_of(t[0], t[1]), sq_of(t[1], t[2]));
      return eng.mul(prod, sq_of(t[2], t[0]));
    };
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& [t, c] : six_point_triple_partitions()) {
      auto tp = eng.mul(tri_of(t), tri_of(c));
      if (need[1]) SB = eng.add(SB, tp);
      if (need[2]) {
        // sum over the six bijections between the triples
        Elem inner;
        for (const auto& perm : perms) {
          auto cross = eng.mul(sq_of(t[0], c[static_cast<size_t>(perm[0])]), sq_of(t[1], c[static_cast<size_t>(perm[1])]));
          cross = eng.mul(cross, sq_of(t[2], c[static_cast<size_t>(perm[2])]));
          inner = eng.add(inner, cross);
        }
        SC = eng.add(SC, eng.mul(tp, inner));
      }
    }
  }

  if (need[3]) {
    SD = eng.constant(ring.one());
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) SD = eng.mul(SD, sq_of(i, j));
  }

  if (need[4]) {
    // product over matchings of det [[1, s_k, p_k]], rows sorted by the
    // pair's smallest element (the enumeration already yields them sorted)
    SE = eng.constant(ring.one());
    for (const auto& m : six_point_matchings()) {
      std::array<int, 3> id{};
      for (int k = 0; k < 3; ++k) id[static_cast<size_t>(k)] = pair_id(m[static_cast<size_t>(k)][0], m[static_cast<size_t>(k)][1]);
      const Elem& s1 = spair[static_cast<size_t>(id[0])];
      const Elem& s2 = spair[static_cast<size_t>(id[1])];
      const Elem& s3 = spair[static_cast<size_t>(id[2])];
      const Elem& q1 = qpair[static_cast<size_t>(id[0])];
      const Elem& q2 = qpair[static_cast<size_t>(id[1])];
      const Elem& q3 = qpair[static_cast<size_t>(id[2])];
      Elem det = eng.sub(eng.mul(s2, q3), eng.mul(s3, q2));
      det = eng.sub(det, eng.sub(eng.mul(s1, q3), eng.mul(s3, q1)));
      det = eng.add(det, eng.sub(eng.mul(s1, q2), eng.mul(s2, q1)));
      SE = eng.mul(SE, det);
    }
  }

  std::array<uint64_t, 5> out{};
  const Elem* elems[5] = {&SA, &SB, &SC, &SD, &SE};
  for (int k = 0; k < 5; ++k) {
    if (!need[static_cast<size_t>(k)]) continue;
    uint64_t v;
    require(eng.scalar_of(*elems[static_cast<size_t>(k)], v), "invariant normal form is not scalar");
    out[static_cast<size_t>(k)] = ring.from_mont(v);
  }
  return out;
}

} // namespace

std::array<Rat, 5> invariant_expressions_split(const UniPoly& f) {
  std::array<Rat, 7> monic = monic_coefficients(f);

  // integer rescaling: phat(x) = L^6 * (f/lc)(x/L) is monic over Z
  Int L(1);
  for (int k = 0; k < 6; ++k) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den(monic[static_cast<size_t>(k)]).get_mpz_t());
  std::array<Rat, 7> scaled;
  std::array<Int, 7> chat;
  scaled[6] = Rat(1);
  chat[6] = 1;
  for (int k = 0; k < 6; ++k) {
    Rat v = monic[static_cast<size_t>(k)] * pow_rat(Rat(L), static_cast<unsigned long>(6 - k));
    require(is_integer(v), "rescaled coefficient not integral");
    scaled[static_cast<size_t>(k)] = v;
    chat[static_cast<size_t>(k)] = num(v);
  }

  // Fujiwara: |roots of phat| <= 2 * max_k |c_k|^(1/(6-k))
  Int R(1);
  for (int k = 0; k < 6; ++k) {
    Int a = abs(chat[static_cast<size_t>(k)]);
    if (a == 0) continue;
    Int root;
    mpz_root(root.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(6 - k));
    root += 1;
    if (root > R) R = root;
  }
  R *= 2;

  // per-expression magnitude bounds on the scaled values: term counts times
  // |r_i - r_j| <= 2R, |r_i + r_j| <= 2R, |r_i r_j| <= R^2, |det| <= 12R^3
  Int twoR = 2 * R;
  auto ipow = [](const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
  };
  const std::array<Int, 5> bound = {15 * ipow(twoR, 6), 10 * ipow(twoR, 12), 60 * ipow(twoR, 18),
                                    ipow(twoR, 30), ipow(12 * R * R * R, 15)};

  // per-expression prime counts for CRT over the symmetric range; the last
  // expression gets a spare prime since its sign feeds downstream decisions
  std::array<size_t, 5> nk{};
  for (int k = 0; k < 5; ++k) {
    Int prod(1), target = 2 * bound[static_cast<size_t>(k)] + 1;
    size_t i = 0;
    while (prod <= target) {
      prod *= Int(prime_pool(i + 1)[i]);
      ++i;
    }
    nk[static_cast<size_t>(k)] = i;
  }
  nk[4] += 1;
  size_t nprimes = *std::max_element(nk.begin(), nk.end());
  const auto& primes = prime_pool(nprimes);

  std::vector<std::array<uint64_t, 5>> residues;
  residues.reserve(nprimes);
  for (size_t i = 0; i < nprimes; ++i) {
    NeedMask need{};
    for (int k = 0; k < 5; ++k) need[static_cast<size_t>(k)] = i < nk[static_cast<size_t>(k)];
    residues.push_back(quintuple_mod_p(primes[i], scaled, need));
  }

  std::array<Rat, 5> out;
  static const unsigned long degs[5] = {6, 12, 18, 30, 45};
  for (int k = 0; k < 5; ++k) {
    size_t n = nk[static_cast<size_t>(k)];
    Int M(1);
    for (size_t i = 0; i < n; ++i) M *= Int(primes[i]);
    Int x(0);
    for (size_t i = 0; i < n; ++i) {
      Int pi(primes[i]);
      Int Mi = M / pi;
      Int inv;
      mpz_invert(inv.get_mpz_t(), Mi.get_mpz_t(), pi.get_mpz_t());
      x += Int(residues[i][static_cast<size_t>(k)]) * inv % pi * Mi;
    }
    x %= M;
    if (x < 0) x += M;
    if (2 * x > M) x -= M;
    out[static_cast<size_t>(k)] = rat(x, ipow(L, degs[static_cast<size_t>(k)]));
  }
  return out;
}

} // namespace g2
