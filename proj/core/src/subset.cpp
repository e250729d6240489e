#include "isgd/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace isgd {

Subset::Subset(std::size_t universe, const std::vector<ElementId>& members) : mask_(universe, false) {
  for (ElementId x : members) insert(x);
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  s.mask_.assign(universe, true);
  return s;
}

std::size_t Subset::count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<ElementId> Subset::elements() const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.emplace_back(i);
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.contains(ElementId{i})) return false;
  return true;
}

Subset Subset::operator&(const Subset& other) const {
  if (universe() != other.universe()) throw std::invalid_argument("subset universes differ");
  Subset out(universe());
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] && other.mask_[i];
  return out;
}

Subset Subset::operator|(const Subset& other) const {
  if (universe() != other.universe()) throw std::invalid_argument("subset universes differ");
  Subset out(universe());
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] || other.mask_[i];
  return out;
}

Subset PartialMap::domain() const {
  Subset out(universe());
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != kUndefined) out.insert(ElementId{i});
  return out;
}

Subset PartialMap::image() const {
  Subset out(universe());
  for (std::uint32_t y : image_)
    if (y != kUndefined && y < image_.size()) out.insert(ElementId{y});
  return out;
}

Subset PartialMap::preimage(const Subset& target) const {
  Subset out(universe());
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != kUndefined && target.contains(ElementId{image_[i]})) out.insert(ElementId{i});
  return out;
}

Subset PartialMap::apply(const Subset& source) const {
  Subset out(universe());
  for (ElementId x : source.elements()) {
    auto y = (*this)(x);
    if (y && y->index() < universe()) out.insert(*y);
  }
  return out;
}

PartialMap PartialMap::identity_on(const Subset& s) {
  PartialMap m(s.universe());
  for (ElementId x : s.elements()) m.set(x, x);
  return m;
}

}  // namespace isgd
