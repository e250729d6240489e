#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "isgd/globalize.hpp"
#include "oracles.hpp"

namespace fixtures {

inline std::filesystem::path data(const std::string& name) { return std::filesystem::path(ISGD_DATA_DIR) / name; }

// Classes of a library quotient, as name-level seed sets in class order.
inline std::vector<std::set<oracle::Seed>> classes(const isgd::PartialAction& x, const isgd::Quotient& q) {
  std::vector<std::set<oracle::Seed>> out;
  for (std::size_t c = 0; c < q.class_count(); ++c) {
    std::set<oracle::Seed> block;
    for (const auto& p : q.members(isgd::ElementId{c}))
      block.insert({x.structure().name(p.arrow), x.element_name(p.point)});
    out.push_back(block);
  }
  return out;
}

inline isgd::ActionPtr share(isgd::PartialAction a) { return std::make_shared<const isgd::PartialAction>(std::move(a)); }

}  // namespace fixtures
