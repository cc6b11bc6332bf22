#include "diffhopf/ring_hom.hpp"
#include <map>

#include "diffhopf/error.hpp"

namespace diffhopf {

namespace {

// Products and sums are formed without intermediate reduction; the fraction
// is reduced once at the end.
struct Raw {
  Poly num;
  std::vector<std::uint32_t> den;
};

Raw raw_of(const Element& x) { return Raw{x.numerator(), x.denominator_exponents()}; }

Raw raw_mul(const Raw& a, const Raw& b) {
  Raw r{a.num * b.num, a.den};
  for (std::size_t i = 0; i < r.den.size(); ++i) r.den[i] += b.den[i];
  return r;
}

Raw raw_pow(const Raw& a, std::uint32_t e) {
  Raw r{a.num.pow(e), a.den};
  for (auto& d : r.den) d *= e;
  return r;
}

Element apply_raw(const RingHom& hom, const Poly& p, const Raw& extra) {
  const RingPtr& target = hom.target();
  std::map<std::uint32_t, Raw> var_cache;
  std::map<std::vector<std::uint32_t>, Poly> by_den;
  for (const auto& term : p.terms()) {
    Raw prod{Poly(term.coeff), extra.den};
    for (const auto& [key, e] : term.mono.factors()) {
      auto it = var_cache.find(key);
      if (it == var_cache.end()) it = var_cache.emplace(key, raw_of(hom.image(Var::from_key(key)))).first;
      prod = raw_mul(prod, e == 1 ? it->second : raw_pow(it->second, e));
    }
    auto [slot, fresh] = by_den.try_emplace(prod.den, std::move(prod.num));
    if (!fresh) slot->second = slot->second + prod.num;
  }
  if (by_den.empty()) return Element(target);
  std::vector<std::uint32_t> top(target->num_denominators(), 0);
  for (const auto& [den, num] : by_den)
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = std::max(top[i], den[i]);
  Poly sum;
  for (const auto& [den, num] : by_den) {
    Poly lifted = num;
    for (std::size_t i = 0; i < top.size(); ++i)
      if (top[i] > den[i]) lifted = lifted * target->denominator(static_cast<std::uint32_t>(i)).pow(top[i] - den[i]);
    sum = sum + lifted;
  }
  return Element(target, extra.num * sum, top);
}

Element apply_poly_raw(const RingHom& hom, const Poly& p) {
  return apply_raw(hom, p, Raw{Poly(Scalar(1)), std::vector<std::uint32_t>(hom.target()->num_denominators(), 0)});
}

}  // namespace

RingHom::RingHom(RingPtr source, RingPtr target, std::vector<Element> images, std::map<Var, Element> overrides)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), overrides_(std::move(overrides)) {
  if (images_.size() != source_->num_generators())
    throw Error(Errc::InvalidArgument, "homomorphism needs one image per generator");
  for (const auto& img : images_)
    if (img.ring().get() != target_.get())
      throw Error(Errc::PresentationMismatch, "generator image lives in the wrong presentation");
  for (const auto& [v, img] : overrides_)
    if (img.ring().get() != target_.get())
      throw Error(Errc::PresentationMismatch, "override image lives in the wrong presentation");
  for (std::uint32_t i = 0; i < source_->num_denominators(); ++i) {
    Element d = apply_poly_raw(*this, source_->denominator(i));
    auto inv = d.inverse();
    if (!inv)
      throw Error(Errc::NonUnitDenominatorImage,
                  "image of denominator " + std::to_string(i + 1) + " is not a unit in the target");
    inverse_images_.push_back(std::move(*inv));
  }
}

RingHom::RingHom(const RingHom& other)
    : source_(other.source_),
      target_(other.target_),
      images_(other.images_),
      overrides_(other.overrides_),
      inverse_images_(other.inverse_images_) {}

RingHom& RingHom::operator=(const RingHom& other) {
  if (this == &other) return *this;
  source_ = other.source_;
  target_ = other.target_;
  images_ = other.images_;
  overrides_ = other.overrides_;
  inverse_images_ = other.inverse_images_;
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.clear();
  return *this;
}

Element RingHom::image(Var v) const {
  if (auto it = overrides_.find(v); it != overrides_.end()) return it->second;
  if (v.order == 0) return images_.at(v.gen);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = cache_.find(v); it != cache_.end()) return it->second;
  }
  Element r = image(Var{v.gen, v.order - 1}).derive();
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(v, r);
  return r;
}

Element RingHom::apply(const Element& x) const {
  if (x.ring().get() != source_.get())
    throw Error(Errc::PresentationMismatch, "element does not belong to the homomorphism's source");
  Raw extra{Poly(Scalar(1)), std::vector<std::uint32_t>(target_->num_denominators(), 0)};
  const auto& den = x.denominator_exponents();
  for (std::uint32_t i = 0; i < den.size(); ++i)
    if (den[i] > 0) extra = raw_mul(extra, raw_pow(raw_of(inverse_images_[i]), den[i]));
  return apply_raw(*this, x.numerator(), extra);
}

RingHom RingHom::on_tensor_power(const RingPtr& power, const std::vector<const RingHom*>& homs) {
  if (homs.size() != power->legs()) throw Error(Errc::InvalidArgument, "one homomorphism per tensor leg required");
  const RingPtr& target = homs.front()->target();
  const std::uint32_t n = power->base_generators();
  std::vector<Element> images;
  std::map<Var, Element> overrides;
  for (std::uint32_t c = 0; c < homs.size(); ++c) {
    if (homs[c]->target().get() != target.get())
      throw Error(Errc::PresentationMismatch, "tensor-leg homomorphisms need a common target");
    for (const auto& img : homs[c]->images()) images.push_back(img);
    for (const auto& [v, img] : homs[c]->overrides()) overrides.emplace(Var{v.gen + c * n, v.order}, img);
  }
  return RingHom(power, target, std::move(images), std::move(overrides));
}

RingHom RingHom::shifted_into(const RingPtr& target, std::uint32_t gen_offset, std::uint32_t den_offset) const {
  std::vector<Element> images;
  for (const auto& img : images_) images.push_back(img.embedded(target, gen_offset, den_offset));
  std::map<Var, Element> overrides;
  for (const auto& [v, img] : overrides_) overrides.emplace(v, img.embedded(target, gen_offset, den_offset));
  return RingHom(source_, target, std::move(images), std::move(overrides));
}

RingHom identity_hom(const RingPtr& ring) {
  std::vector<Element> images;
  for (std::uint32_t j = 0; j < ring->num_generators(); ++j) images.push_back(Element::generator(ring, j));
  return RingHom(ring, ring, std::move(images));
}

}  // namespace diffhopf
