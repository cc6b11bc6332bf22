#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "diffhopf/diffpoly.hpp"

namespace diffhopf {

/// A differential K-algebra homomorphism given on generators.
///
/// The image of d^k(y) is d^k applied to the image of y unless an explicit
/// override is registered for that derived variable. Overrides exist so that
/// deliberately non-differential maps can be built and then rejected by the
/// axiom checkers.
class RingHom {
 public:
  RingHom(RingPtr source, RingPtr target, std::vector<Element> images, std::map<Var, Element> overrides = {});

  RingHom(const RingHom& other);
  RingHom& operator=(const RingHom& other);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }
  const std::map<Var, Element>& overrides() const { return overrides_; }

  Element apply(const Element& x) const;
  Element image(Var v) const;

  /// Sends leg c of a tensor power to homs[c]; all homs share one target.
  static RingHom on_tensor_power(const RingPtr& power, const std::vector<const RingHom*>& homs);

  /// Post-composition with a shift into a bigger tensor power.
  RingHom shifted_into(const RingPtr& target, std::uint32_t gen_offset, std::uint32_t den_offset) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Element> images_;
  std::map<Var, Element> overrides_;
  std::vector<Element> inverse_images_;  // image of 1/d_i
  mutable std::mutex cache_mutex_;
  mutable std::map<Var, Element> cache_;
};

/// The identity on a ring.
RingHom identity_hom(const RingPtr& ring);

}  // namespace diffhopf
