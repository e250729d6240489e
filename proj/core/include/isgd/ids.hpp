#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

namespace isgd {

// Dense index into one of the interned name tables. The tag keeps arrows,
// objects and carrier elements from being mixed up.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}
  constexpr explicit Id(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr explicit Id(int v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }
  constexpr auto operator<=>(const Id&) const = default;
};

using ObjectId = Id<struct ObjectTag>;
using ArrowId = Id<struct ArrowTag>;
using ElementId = Id<struct ElementTag>;

inline constexpr std::uint32_t kUndefined = std::numeric_limits<std::uint32_t>::max();

}  // namespace isgd

template <class Tag>
struct std::hash<isgd::Id<Tag>> {
  std::size_t operator()(isgd::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
