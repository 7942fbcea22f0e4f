#include "polar/gf.hpp"

#include <stdexcept>

namespace polar {

namespace {

constexpr int kMaxOrder = 1024;

// Returns (p, e) with q = p^e, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return {0, 0};
  return {p, e};
}

std::vector<int> digits(int idx, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int idx = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) idx = idx * p + d[i];
  return idx;
}

}  // namespace

FieldPtr Field::create(int q) {
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument("field order must be an odd prime power >= 3, got " +
                                std::to_string(q));
  if (q > kMaxOrder)
    throw std::invalid_argument("field order " + std::to_string(q) + " exceeds the supported maximum " +
                                std::to_string(kMaxOrder));
  auto [p, e] = prime_power(q);
  if (p == 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");

  std::shared_ptr<Field> f(new Field());
  f->q_ = q;
  f->p_ = p;
  f->e_ = e;
  if (e == 1)
    f->build_prime();
  else
    f->build_extension();
  f->finish();
  return f;
}

void Field::build_prime() {
  const int q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      add_[a * q + b] = static_cast<std::uint16_t>((a + b) % q);
      mul_[a * q + b] = static_cast<std::uint16_t>((a * b) % q);
    }
}

void Field::build_extension() {
  const int q = q_, p = p_, e = e_;
  add_.resize(q * q);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p, e);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p, e);
      std::vector<int> s(e);
      for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = static_cast<std::uint16_t>(from_digits(s, p));
    }
  }

  // Candidates c_0 + c_1 x + ... + c_{e-1} x^{e-1} + x^e in increasing index
  // order; the first one whose quotient ring has no zero divisors wins.
  std::vector<std::vector<int>> dig(q);
  for (int a = 0; a < q; ++a) dig[a] = digits(a, p, e);
  for (int cand = 0; cand < q; ++cand) {
    const auto& c = dig[cand];
    if (c[0] == 0) continue;
    mul_.assign(q * q, 0);
    bool field = true;
    for (int a = 1; a < q && field; ++a) {
      for (int b = a; b < q; ++b) {
        std::vector<int> prod(2 * e - 1, 0);
        for (int i = 0; i < e; ++i)
          for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p;
        for (int k = 2 * e - 2; k >= e; --k) {
          int t = prod[k];
          if (t == 0) continue;
          prod[k] = 0;
          // x^k = x^{k-e} * x^e = -x^{k-e} * sum c_i x^i
          for (int i = 0; i < e; ++i) prod[k - e + i] = ((prod[k - e + i] - t * c[i]) % p + p) % p;
        }
        prod.resize(e);
        int r = from_digits(prod, p);
        if (r == 0) {
          field = false;
          break;
        }
        mul_[a * q + b] = mul_[b * q + a] = static_cast<std::uint16_t>(r);
      }
    }
    if (field) {
      modulus_.assign(c.begin(), c.end());
      modulus_.push_back(1);
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found for q = " + std::to_string(q));
}

void Field::finish() {
  const int q = q_;
  neg_.resize(q);
  inv_.assign(q, 0);
  square_.assign(q, 0);
  sqrt_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<std::uint16_t>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint16_t>(b);
    }
  }
  // Ascending scan records the smaller root first.
  for (int b = q - 1; b >= 0; --b) {
    int s = mul_[b * q + b];
    square_[s] = 1;
    sqrt_[s] = static_cast<std::uint16_t>(b);
  }

  bool found = false;
  for (int c = 1; c < q; ++c) {
    Elem zc{static_cast<std::uint16_t>(c)};
    if (!is_square(zc) && !is_square(sub(one(), zc))) {
      z_ = zc;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no admissible non-square z for q = " + std::to_string(q));

  half_ = inv(from_int(2));

  omega_.clear();
  for (int c = 1; c < q; ++c) {
    Elem a{static_cast<std::uint16_t>(c)};
    if (a.v < neg(a).v) omega_.push_back(a);
  }

  for (int c = 1; c < q; ++c) {
    Elem g{static_cast<std::uint16_t>(c)};
    Elem x = g;
    int ord = 1;
    while (x != one()) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

Elem Field::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint16_t>(r)};
}

Elem Field::at(int idx) const {
  if (idx < 0 || idx >= q_)
    throw std::out_of_range("field index " + std::to_string(idx) + " outside [0, " + std::to_string(q_) + ")");
  return Elem{static_cast<std::uint16_t>(idx)};
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return Elem{inv_[a.v]};
}

Elem Field::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Elem Field::sqrt(Elem a) const {
  if (!is_square(a)) throw std::domain_error("sqrt of non-square " + to_string(a));
  return Elem{sqrt_[a.v]};
}

bool Field::in_omega(Elem a) const { return !a.is_zero() && a.v < neg(a).v; }

Elem Field::omega_rep(Elem a) const {
  if (a.is_zero()) throw std::domain_error("zero has no representative in omega");
  return in_omega(a) ? a : neg(a);
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (int c = 0; c < q_; ++c) out.emplace_back(static_cast<std::uint16_t>(c));
  return out;
}

}  // namespace polar
