#pragma once

// The group (Z_p)^nu acting freely and transitively on the r = p^nu plates,
// the induced action on configurations, and a sampling-based equivariance
// audit for preference oracles.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cakecut/config.hpp"

namespace cakecut {

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace detail

// Elementary abelian group (Z_p)^nu with elements stored as nu base-p
// digits, most significant first. Plates 1..r are identified with group
// elements through the mixed-radix encoding of plate-1, which makes the
// regular action free and transitive. For nu = 1 this is the cyclic
// rotation of a round table; for nu = 2, the high digit picks the table
// and the low digit the seat.
class PToralGroup {
 public:
  using Element = std::vector<int>;

  // nu = 0 yields the trivial group on a single plate.
  PToralGroup(int p, int nu, bool require_prime = true) : p_(p), nu_(nu) {
    if (p < 2 || nu < 0) throw std::invalid_argument("group needs p >= 2 and nu >= 0");
    if (require_prime && !detail::is_prime(p)) {
      throw std::invalid_argument("p must be prime");
    }
    if (!detail::is_prime(p) && nu > 1) {
      throw std::invalid_argument("composite moduli are only supported cyclically (nu = 1)");
    }
    long long r = 1;
    for (int i = 0; i < nu; ++i) {
      r *= p;
      if (r > 1'000'000) throw std::invalid_argument("group order too large");
    }
    r_ = static_cast<int>(r);
  }

  // Cyclic fallback for composite r: still a free transitive action, but
  // with no prime-power existence guarantee attached.
  static PToralGroup cyclic(int r) { return PToralGroup(r, 1, /*require_prime=*/false); }

  int p() const { return p_; }
  int nu() const { return nu_; }
  int order() const { return r_; }

  Element identity() const { return Element(nu_, 0); }

  Element add(const Element& a, const Element& b) const {
    check_element(a);
    check_element(b);
    Element out(nu_);
    for (int i = 0; i < nu_; ++i) out[i] = (a[i] + b[i]) % p_;
    return out;
  }

  Element negate(const Element& a) const {
    check_element(a);
    Element out(nu_);
    for (int i = 0; i < nu_; ++i) out[i] = (p_ - a[i]) % p_;
    return out;
  }

  // Reduces arbitrary integer digits (negative allowed) into canonical form.
  Element reduce(const std::vector<int>& raw) const {
    if (static_cast<int>(raw.size()) != nu_) {
      throw std::invalid_argument("group element has wrong number of digits");
    }
    Element out(nu_);
    for (int i = 0; i < nu_; ++i) {
      int d = raw[i] % p_;
      if (d < 0) d += p_;
      out[i] = d;
    }
    return out;
  }

  Element element(int index) const {
    if (index < 0 || index >= r_) throw std::invalid_argument("group element index out of range");
    Element out(nu_);
    for (int i = nu_ - 1; i >= 0; --i) {
      out[i] = index % p_;
      index /= p_;
    }
    return out;
  }

  int index_of(const Element& e) const {
    check_element(e);
    int idx = 0;
    for (int i = 0; i < nu_; ++i) idx = idx * p_ + e[i];
    return idx;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(r_);
    for (int i = 0; i < r_; ++i) out.push_back(element(i));
    return out;
  }

  // Regular action on plates 1..r.
  int act(const Element& g, int plate) const {
    if (plate < 1 || plate > r_) throw std::invalid_argument("plate out of range");
    return index_of(add(element(plate - 1), g)) + 1;
  }

 private:
  void check_element(const Element& e) const {
    if (static_cast<int>(e.size()) != nu_) {
      throw std::invalid_argument("group element has wrong number of digits");
    }
    for (int d : e) {
      if (d < 0 || d >= p_) throw std::invalid_argument("group element digit out of range");
    }
  }

  int p_;
  int nu_;
  int r_;
};

namespace detail {

inline Allocation act_alloc(const PToralGroup& g, const PToralGroup::Element& e,
                            const Allocation& alloc) {
  Allocation out;
  out.reserve(alloc.size());
  for (int plate : alloc) out.push_back(g.act(e, plate));
  return out;
}

}  // namespace detail

// Relabels plates: the cut is unchanged, the allocation is composed with
// the plate action. Injectivity survives since the action is a bijection.
inline NaturalConfig act_config(const PToralGroup& g, const PToralGroup::Element& e,
                                const NaturalConfig& c) {
  if (g.order() != c.r) throw std::invalid_argument("group order and plate count differ");
  return NaturalConfig(c.cut, detail::act_alloc(g, e, c.alloc), c.r);
}

inline AuxConfig act_config(const PToralGroup& g, const PToralGroup::Element& e,
                            const AuxConfig& c) {
  if (g.order() != c.r) throw std::invalid_argument("group order and plate count differ");
  return AuxConfig(c.cut, detail::act_alloc(g, e, c.alloc), c.r);
}

struct EquivarianceViolation {
  int sample = 0;  // index into the sample list
  int player = 0;
  int plate = 0;
  PToralGroup::Element g;
};

// Checks prefers(c, j, i) == prefers(g.c, j, g.i) over every sample, player,
// plate and group element. The report is sample-relative: an empty list is
// a pass on this sample set only.
template <class Oracle>
std::vector<EquivarianceViolation> audit_equivariance(const Oracle& oracle,
                                                      const std::vector<NaturalConfig>& samples,
                                                      const PToralGroup& group) {
  std::vector<EquivarianceViolation> violations;
  const auto elems = group.elements();
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const NaturalConfig& c = samples[s];
    if (c.r != group.order()) throw std::invalid_argument("sample plate count differs from group order");
    std::vector<NaturalConfig> moved;
    moved.reserve(elems.size());
    for (const auto& g : elems) moved.push_back(act_config(group, g, c));
    for (int j = 1; j <= oracle.player_count(); ++j) {
      for (int i = 1; i <= group.order(); ++i) {
        for (std::size_t gi = 0; gi < elems.size(); ++gi) {
          bool base = oracle.prefers(c, j, i);
          bool image = oracle.prefers(moved[gi], j, group.act(elems[gi], i));
          if (base != image) {
            violations.push_back(
                EquivarianceViolation{static_cast<int>(s), j, i, elems[gi]});
          }
        }
      }
    }
  }
  return violations;
}

}  // namespace cakecut
