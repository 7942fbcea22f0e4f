#include <regex>
#include <stdexcept>

#include "polar/suborbits.hpp"

namespace polar {

namespace {

// C-style truncation, so (nu - 2) / 2 is 0 at nu = 1.
int half_floor(int n) { return n / 2; }

struct Range {
  int lo, hi;
};

Range r_range(Family fam, int nu) {
  switch (fam) {
    case Family::Phi0: return {0, 0};
    case Family::Phi1: return {1, nu / 2};
    case Family::Phi2: return {0, (nu - 1) / 2};
    case Family::Phi3: return {1, nu / 2};
    case Family::Phi4: return nu >= 2 ? Range{0, (nu - 1) / 2} : Range{0, -1};
    case Family::Phi5: return {1, (nu - 1) / 2};
    case Family::Phi6: return {1, (nu - 2) / 2};
    case Family::Phi7: return {1, nu / 2};
    case Family::Phi8: return {2, nu / 2};
  }
  return {0, -1};
}

}  // namespace

std::string to_string(const SuborbitLabel& l) {
  std::string s = "phi" + std::to_string(static_cast<int>(l.family));
  switch (l.family) {
    case Family::Phi0: return s;
    case Family::Phi2:
    case Family::Phi3: return s + "(" + std::to_string(l.r) + ";a=" + std::to_string(l.a) + ")";
    case Family::Phi7: return s + "(" + std::to_string(l.r) + ";b=" + std::to_string(l.b.v) + ")";
    default: return s + "(" + std::to_string(l.r) + ")";
  }
}

SuborbitLabel parse_label(const std::string& s, const Field& F) {
  static const std::regex re(R"(phi([0-8])(?:\((\d+)(?:;([ab])=(\d+))?\))?)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("malformed suborbit label '" + s + "'");
  SuborbitLabel l;
  l.family = static_cast<Family>(std::stoi(m[1]));
  bool has_r = m[2].matched;
  if (l.family == Family::Phi0) {
    if (has_r) throw std::invalid_argument("phi0 takes no parameters");
    return l;
  }
  if (!has_r) throw std::invalid_argument("label '" + s + "' needs a parameter r");
  l.r = std::stoi(m[2]);
  bool needs_a = l.family == Family::Phi2 || l.family == Family::Phi3;
  bool needs_b = l.family == Family::Phi7;
  std::string key = m[3].matched ? m[3].str() : "";
  if (needs_a != (key == "a") || needs_b != (key == "b"))
    throw std::invalid_argument("label '" + s + "' has the wrong parameter set");
  if (needs_a) l.a = std::stoi(m[4]);
  if (needs_b) {
    int idx = std::stoi(m[4]);
    if (idx >= F.order()) throw std::invalid_argument("b=" + m[4].str() + " is not a field element");
    l.b = F.at(idx);
  }
  return l;
}

bool label_valid(const Field& F, int nu, const SuborbitLabel& l) {
  Range rg = r_range(l.family, nu);
  if (l.r < rg.lo || l.r > rg.hi) return false;
  bool uses_a = l.family == Family::Phi2 || l.family == Family::Phi3;
  if (uses_a ? (l.a != 0 && l.a != 1) : l.a != 0) return false;
  if (l.family == Family::Phi7) return F.in_omega(l.b);
  return l.b.is_zero();
}

void require_label(const Field& F, int nu, const SuborbitLabel& l) {
  if (!label_valid(F, nu, l))
    throw std::invalid_argument("label " + to_string(l) + " is out of range for q=" + std::to_string(F.order()) +
                                ", nu=" + std::to_string(nu));
}

std::vector<SuborbitLabel> all_labels(const Field& F, int nu) {
  std::vector<SuborbitLabel> out;
  for (int fi = 0; fi <= 8; ++fi) {
    Family fam = static_cast<Family>(fi);
    Range rg = r_range(fam, nu);
    for (int r = rg.lo; r <= rg.hi; ++r) {
      if (fam == Family::Phi2 || fam == Family::Phi3) {
        for (int a = 0; a < 2; ++a) out.push_back({fam, r, a, Elem{}});
      } else if (fam == Family::Phi7) {
        for (Elem b : F.omega()) out.push_back({fam, r, 0, b});
      } else {
        out.push_back({fam, r, 0, Elem{}});
      }
    }
  }
  return out;
}

int rank_g0(int q, int nu) {
  return (q + 7) / 2 * half_floor(nu) + 4 * half_floor(nu - 1) + half_floor(nu - 2) + 3;
}

}  // namespace polar
