#include <stdexcept>

#include "polar/suborbits.hpp"

namespace polar {

namespace {

BigInt qpow(long long q, int e) {
  if (e < 0) throw std::domain_error("negative exponent in length formula");
  return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e));
}

BigInt exact_div(const BigInt& num, const BigInt& den, const SuborbitLabel& l) {
  if (num % den != 0) throw std::domain_error("length of " + to_string(l) + " is not an integer");
  return num / den;
}

void check_range(int nu, const SuborbitLabel& l) {
  // Field-independent part of label_valid; b is not checked here.
  auto bad = [&] { throw std::invalid_argument("label " + to_string(l) + " is out of range for nu=" + std::to_string(nu)); };
  int r = l.r;
  switch (l.family) {
    case Family::Phi0: if (r != 0) bad(); break;
    case Family::Phi1:
    case Family::Phi3:
    case Family::Phi7: if (r < 1 || r > nu / 2) bad(); break;
    case Family::Phi2: if (r < 0 || r > (nu - 1) / 2) bad(); break;
    case Family::Phi4: if (nu < 2 || r < 0 || r > (nu - 1) / 2) bad(); break;
    case Family::Phi5: if (r < 1 || r > (nu - 1) / 2) bad(); break;
    case Family::Phi6: if (r < 1 || r > (nu - 2) / 2) bad(); break;
    case Family::Phi8: if (r < 2 || r > nu / 2) bad(); break;
  }
}

}  // namespace

BigInt suborbit_size(long long q, int nu, const SuborbitLabel& l) {
  check_range(nu, l);
  int r = l.r;
  BigInt gl = order_gl(nu, q);
  switch (l.family) {
    case Family::Phi0: return 1;
    case Family::Phi1:
      return exact_div(gl, order_sp(2 * r, q) * order_gl(nu - 2 * r, q) * qpow(q, 2 * r * (nu - 2 * r)), l);
    case Family::Phi2:
      return exact_div((q + 1) * gl,
                       order_sp(2 * r, q) * order_gl(nu - 2 * r - 1, q) * 2 * qpow(q, (2 * r + 1) * (nu - 2 * r - 1)), l);
    case Family::Phi3:
      return exact_div((q + 1) * gl,
                       order_sp(2 * r - 2, q) * order_gl(nu - 2 * r, q) * 2 * qpow(q, 2 * r * (nu - 2 * r) + 2 * r - 1), l);
    case Family::Phi4:
      if (r == 0) return exact_div(gl, order_gl(nu - 2, q) * qpow(q, 2 * (nu - 2)), l);
      [[fallthrough]];
    case Family::Phi5: {
      int m = nu - 1 - 2 * r;
      return exact_div((q + 1) * gl,
                       2 * order_sp(2 * r - 2, q) * order_gl(m, q) * qpow(q, (2 * r + 1) * m + 2 * r - 1), l);
    }
    case Family::Phi6:
      return exact_div(gl, order_sp(2 * r, q) * order_gl(nu - 2 * r - 2, q) * qpow(q, (2 * r + 2) * (nu - 2 * r - 2)), l);
    case Family::Phi7:
      return exact_div(2 * gl, order_sp(2 * r - 2, q) * order_gl(nu - 2 * r, q) * qpow(q, 2 * r * (nu - 2 * r)), l);
    case Family::Phi8:
      return exact_div(gl, order_sp(2 * r - 4, q) * order_gl(nu - 2 * r, q) * qpow(q, 2 * r * (nu - 2 * r) + 4 * r - 5), l);
  }
  throw std::logic_error("unknown family");
}

BigInt suborbit_size_displayed(long long q, int nu, const SuborbitLabel& l) {
  check_range(nu, l);
  int r = l.r;
  BigInt gl = order_gl(nu, q);
  switch (l.family) {
    case Family::Phi4:
      return exact_div((q + 1) * gl,
                       order_sp(2 * r - 2, q) * order_gl(nu - 2 * r - 1, q) * 2 * qpow(q, (2 * r + 1) * (nu - 2 * r) - 2), l);
    case Family::Phi5:
      return exact_div((q + 1) * gl,
                       order_sp(2 * r - 2, q) * order_gl(nu - 2 * r - 1, q) * 2 * qpow(q, (2 * r + 1) * nu - 4 * (r * r + 1)),
                       l);
    case Family::Phi8:
      return exact_div(gl, order_sp(2 * r - 2, q) * order_gl(nu - 2 * r, q) * qpow(q, 2 * r * (nu - 2 * r) + 4 * r - 5), l);
    default: return suborbit_size(q, nu, l);
  }
}

}  // namespace polar
