#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "isgd/ids.hpp"

namespace isgd {

/// A subset of a finite carrier {0, ..., n-1}, stored as a membership mask.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : mask_(universe, false) {}
  Subset(std::size_t universe, const std::vector<ElementId>& members);

  static Subset full(std::size_t universe);

  std::size_t universe() const { return mask_.size(); }
  bool contains(ElementId x) const { return x.index() < mask_.size() && mask_[x.index()]; }
  void insert(ElementId x) { mask_.at(x.index()) = true; }
  void erase(ElementId x) { mask_.at(x.index()) = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<ElementId> elements() const;

  bool is_subset_of(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  Subset operator|(const Subset& other) const;

  bool operator==(const Subset&) const = default;

 private:
  std::vector<bool> mask_;
};

/// A finite partial function on a carrier {0, ..., n-1}. Out-of-range values
/// are representable so that malformed input survives until validation.
class PartialMap {
 public:
  PartialMap() = default;
  explicit PartialMap(std::size_t universe) : image_(universe, kUndefined) {}

  std::size_t universe() const { return image_.size(); }
  std::optional<ElementId> operator()(ElementId x) const {
    if (x.index() >= image_.size() || image_[x.index()] == kUndefined) return std::nullopt;
    return ElementId{image_[x.index()]};
  }
  bool defined_at(ElementId x) const { return (*this)(x).has_value(); }
  void set(ElementId x, ElementId y) { image_.at(x.index()) = y.value; }
  void unset(ElementId x) { image_.at(x.index()) = kUndefined; }

  /// Points where the map is defined.
  Subset domain() const;
  /// Values taken, restricted to the carrier.
  Subset image() const;
  /// {x : f(x) defined and f(x) in target}.
  Subset preimage(const Subset& target) const;
  /// {f(x) : x in source, f(x) defined}.
  Subset apply(const Subset& source) const;

  static PartialMap identity_on(const Subset& s);

  bool operator==(const PartialMap&) const = default;

 private:
  std::vector<std::uint32_t> image_;
};

}  // namespace isgd
