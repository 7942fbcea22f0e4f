#pragma once

#include <compare>
#include <string>
#include <vector>

#include "polar/geometry.hpp"

namespace polar {

enum class Family { Phi0, Phi1, Phi2, Phi3, Phi4, Phi5, Phi6, Phi7, Phi8 };

// One G01-orbit on Lambda. `a` is used by Phi2/Phi3, `b` (an element of
// Omega) by Phi7; both stay 0 otherwise.
struct SuborbitLabel {
  Family family = Family::Phi0;
  int r = 0;
  int a = 0;
  Elem b{};

  friend auto operator<=>(const SuborbitLabel&, const SuborbitLabel&) = default;
};

// Compact form: phi0, phi1(1), phi2(0;a=1), phi7(1;b=1).
std::string to_string(const SuborbitLabel& l);
// Throws std::invalid_argument on grammar errors; range checks are separate.
SuborbitLabel parse_label(const std::string& s, const Field& F);

bool label_valid(const Field& F, int nu, const SuborbitLabel& l);
void require_label(const Field& F, int nu, const SuborbitLabel& l);
// Phi0 first, then family, r, a, b in Omega order.
std::vector<SuborbitLabel> all_labels(const Field& F, int nu);
int rank_g0(int q, int nu);

// Orbit representatives of O_1 / O_2 on alternate matrices.
enum class AltFormKind {
  Zero,              // 0
  LeadingZero,       // [0, A_2r, 0]
  Standard,          // [A_2r, 0]
  DoubleLeadingZero, // [0^(2), A_2r, 0]   (O_2 only)
  KBlock,            // [K, A_{2r-4}, 0]   (O_2 only)
};

struct AltCanonicalForm {
  AltFormKind kind = AltFormKind::Zero;
  int r = 0;

  friend auto operator<=>(const AltCanonicalForm&, const AltCanonicalForm&) = default;
};

std::string to_string(const AltCanonicalForm& f);
Mat realize_form(FieldPtr f, int nu, const AltCanonicalForm& form);
// Every form of O_i on K_nu (i = 1 or 2), including zero.
std::vector<AltCanonicalForm> all_alt_forms(int nu, int i);
// T in O_i: block lower triangular with i x i leading block.
bool in_block_triangular(const Mat& T, int i);

struct CanonicalResult {
  Mat T;
  AltCanonicalForm form;
};

// T in O_i with T^t X T = realize_form(form).
CanonicalResult o1_canonicalize(const Mat& x);
CanonicalResult o2_canonicalize(const Mat& x);
CanonicalResult oi_canonicalize(const Mat& x, int i);

Vertex representative(const OrthoSpace& sp, const SuborbitLabel& l);

struct Classification {
  SuborbitLabel label;
  // g01_act(witness, representative(label)) == v.
  G01Element witness;
};

Classification classify(const OrthoSpace& sp, const Vertex& v);

// Orbit lengths from stabilizer orders; these agree with brute-force orbit
// enumeration and sum to q^{nu(nu+3)/2}.
BigInt suborbit_size(long long q, int nu, const SuborbitLabel& l);
// The closed forms as commonly displayed. They differ from the true lengths
// for Phi4(0) except at (q, nu) = (3, 2), for Phi5(r > 1) and for Phi8.
// Throws std::domain_error where a displayed quotient is not an integer.
BigInt suborbit_size_displayed(long long q, int nu, const SuborbitLabel& l);

}  // namespace polar
