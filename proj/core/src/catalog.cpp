#include "isgd/catalog.hpp"

#include <random>
#include <stdexcept>

#include "isgd/globalize.hpp"

namespace isgd {

namespace {

struct ArrowSpec {
  const char* name;
  const char* dom;
  const char* cod;
};

// rows[i][j] is the product of arrow i and arrow j, "-" when undefined.
StructurePtr from_rows(const std::vector<const char*>& objects, const std::vector<ArrowSpec>& arrows,
                       const std::vector<std::vector<const char*>>& rows) {
  SemigroupoidTable table;
  for (const char* o : objects) table.add_object(o);
  for (const auto& a : arrows) table.add_arrow(a.name, *table.find_object(a.dom), *table.find_object(a.cod));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const std::string cell = rows[i][j];
      if (cell != "-") table.set_product(ArrowId{i}, ArrowId{j}, *table.find_arrow(cell));
    }
  }
  return std::make_shared<const InverseSemigroupoid>(make_inverse_semigroupoid(table));
}

// Builds an action from per-arrow domains and maps given by element names.
class ActionBuilder {
 public:
  ActionBuilder(StructurePtr structure, std::vector<std::string> carrier)
      : structure_(std::move(structure)), carrier_(std::move(carrier)) {
    for (std::size_t i = 0; i < structure_->size(); ++i) {
      domains_.emplace_back(carrier_.size());
      maps_.emplace_back(carrier_.size());
    }
  }

  ElementId element(const std::string& name) const {
    for (std::size_t i = 0; i < carrier_.size(); ++i)
      if (carrier_[i] == name) return ElementId{i};
    throw std::out_of_range(name);
  }

  ActionBuilder& domain(const std::string& arrow, const std::vector<std::string>& members) {
    auto& d = domains_[structure_->arrow(arrow).index()];
    d = Subset(carrier_.size());
    for (const auto& m : members) d.insert(element(m));
    return *this;
  }

  ActionBuilder& map(const std::string& arrow, const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto& m = maps_[structure_->arrow(arrow).index()];
    m = PartialMap(carrier_.size());
    for (const auto& [x, y] : pairs) m.set(element(x), element(y));
    return *this;
  }

  ActionBuilder& identity(const std::string& arrow) {
    const ArrowId s = structure_->arrow(arrow);
    maps_[s.index()] = PartialMap::identity_on(domains_[s.index()]);
    return *this;
  }

  ActionPtr build() const {
    return std::make_shared<const PartialAction>(structure_, carrier_, domains_, maps_);
  }

 private:
  StructurePtr structure_;
  std::vector<std::string> carrier_;
  std::vector<Subset> domains_;
  std::vector<PartialMap> maps_;
};

ActionPtr reference_four_point(const std::vector<std::string>& x_a) {
  ActionBuilder b(reference_structure(), {"1", "2", "3", "4"});
  b.domain("b*", {"1", "2"}).domain("b*b", {"1", "2"}).domain("b", {"1", "4"}).domain("bb*", {"1", "4"});
  b.domain("a*", {"1"}).domain("a*a", {"1"}).domain("a", x_a).domain("aa*", {"3", "4"});
  b.map("b", {{"1", "1"}, {"2", "4"}}).map("b*", {{"1", "1"}, {"4", "2"}});
  b.map("a", {{"1", "4"}}).map("a*", {{"4", "1"}});
  for (const char* e : {"a*a", "aa*", "b*b", "bb*"}) b.identity(e);
  return b.build();
}

std::string point_name(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

std::vector<std::size_t> CatalogEntry::global_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < actions.size(); ++i)
    if (actions[i].global) out.push_back(i);
  return out;
}

StructurePtr reference_structure() {
  static const StructurePtr structure = from_rows(
      {"u", "v"},
      {{"a", "u", "v"}, {"a*", "v", "u"}, {"b", "u", "u"}, {"b*", "u", "u"},
       {"a*a", "u", "u"}, {"aa*", "v", "v"}, {"b*b", "u", "u"}, {"bb*", "u", "u"}},
      {
          // a     a*     b      b*     a*a    aa*    b*b    bb*
          {"-", "aa*", "a", "a", "a", "-", "a", "a"},                   // a
          {"a*a", "-", "-", "-", "-", "a*", "-", "-"},                  // a*
          {"-", "a*", "a*a", "bb*", "a*a", "-", "b", "a*a"},            // b
          {"-", "a*", "b*b", "a*a", "a*a", "-", "a*a", "b*"},           // b*
          {"-", "a*", "a*a", "a*a", "a*a", "-", "a*a", "a*a"},          // a*a
          {"a", "-", "-", "-", "-", "aa*", "-", "-"},                   // aa*
          {"-", "a*", "a*a", "b*", "a*a", "-", "b*b", "a*a"},           // b*b
          {"-", "a*", "b", "a*a", "a*a", "-", "a*a", "bb*"},            // bb*
      });
  return structure;
}

static ActionPtr build_reference_global_action() {
  ActionBuilder b(reference_structure(), {"1", "2", "3"});
  for (ArrowId s : reference_structure()->arrows()) {
    const std::string name = reference_structure()->name(s);
    b.domain(name, {"1", "2", "3"});
    if (name == "a")
      b.map(name, {{"1", "2"}, {"2", "3"}, {"3", "1"}});
    else if (name == "a*")
      b.map(name, {{"2", "1"}, {"3", "2"}, {"1", "3"}});
    else
      b.identity(name);
  }
  return b.build();
}

ActionPtr reference_global_action() {
  static const ActionPtr action = build_reference_global_action();
  return action;
}
ActionPtr reference_partial_action() {
  static const ActionPtr action = reference_four_point({"4"});
  return action;
}
ActionPtr reference_partial_action_broken() {
  static const ActionPtr action = reference_four_point({"3"});
  return action;
}

StructurePtr cyclic_group(std::size_t n) {
  SemigroupoidTable table;
  const ObjectId o = table.add_object("o");
  for (std::size_t i = 0; i < n; ++i) table.add_arrow("g" + std::to_string(i), o, o);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.set_product(ArrowId{i}, ArrowId{j}, ArrowId{(i + j) % n});
  return std::make_shared<const InverseSemigroupoid>(make_inverse_semigroupoid(table));
}

namespace {

// Partial injections of {0..n-1} as image vectors, -1 for undefined.
void partial_injections(std::size_t n, std::vector<int>& current, std::vector<bool>& used,
                        std::vector<std::vector<int>>& out) {
  if (current.size() == n) {
    out.push_back(current);
    return;
  }
  current.push_back(-1);
  partial_injections(n, current, used, out);
  current.pop_back();
  for (std::size_t y = 0; y < n; ++y) {
    if (used[y]) continue;
    used[y] = true;
    current.push_back(static_cast<int>(y));
    partial_injections(n, current, used, out);
    current.pop_back();
    used[y] = false;
  }
}

std::string injection_name(const std::vector<int>& f) {
  std::string out;
  for (int y : f) out += y < 0 ? "_" : std::to_string(y + 1);
  return out;
}

std::vector<std::vector<int>> all_partial_injections(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<bool> used(n, false);
  partial_injections(n, current, used, out);
  return out;
}

}  // namespace

StructurePtr symmetric_inverse_monoid(std::size_t n) {
  const auto maps = all_partial_injections(n);
  SemigroupoidTable table;
  const ObjectId o = table.add_object("o");
  for (const auto& f : maps) table.add_arrow(injection_name(f), o, o);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      std::vector<int> st(n, -1);  // apply maps[j] first
      for (std::size_t x = 0; x < n; ++x)
        if (maps[j][x] >= 0) st[x] = maps[i][static_cast<std::size_t>(maps[j][x])];
      table.set_product(ArrowId{i}, ArrowId{j}, *table.find_arrow(injection_name(st)));
    }
  }
  return std::make_shared<const InverseSemigroupoid>(make_inverse_semigroupoid(table));
}

StructurePtr pair_groupoid(std::size_t n) {
  SemigroupoidTable table;
  for (std::size_t i = 0; i < n; ++i) table.add_object("o" + std::to_string(i + 1));
  // arrow "p<i><j>" goes from object j to object i
  auto id = [n](std::size_t i, std::size_t j) { return ArrowId{i * n + j}; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table.add_arrow("p" + std::to_string(i + 1) + std::to_string(j + 1), ObjectId{j}, ObjectId{i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) table.set_product(id(i, j), id(j, k), id(i, k));
  return std::make_shared<const InverseSemigroupoid>(make_inverse_semigroupoid(table));
}

StructurePtr two_element_semilattice() {
  static const StructurePtr structure =
      from_rows({"o"}, {{"e", "o", "o"}, {"f", "o", "o"}}, {{"e", "f"}, {"f", "f"}});
  return structure;
}

StructurePtr trivial_monoid() {
  static const StructurePtr structure = from_rows({"o"}, {{"1", "o", "o"}}, {{"1"}});
  return structure;
}

ActionPtr regular_action(const StructurePtr& structure) {
  const auto& isg = *structure;
  std::vector<std::string> carrier;
  for (ArrowId r : isg.arrows()) carrier.push_back(isg.name(r));
  std::vector<Subset> domains;
  std::vector<PartialMap> maps;
  for (ArrowId s : isg.arrows()) {
    Subset d(carrier.size());
    PartialMap m(carrier.size());
    for (ArrowId r : isg.arrows()) {
      if (isg.cod(r) == isg.cod(s)) d.insert(ElementId{r.index()});
      if (isg.composable(s, r)) m.set(ElementId{r.index()}, ElementId{isg.mul(s, r).index()});
    }
    domains.push_back(std::move(d));
    maps.push_back(std::move(m));
  }
  return std::make_shared<const PartialAction>(structure, std::move(carrier), std::move(domains), std::move(maps));
}

ActionPtr natural_action(const StructurePtr& structure, std::size_t n) {
  const auto& isg = *structure;
  const auto injections = all_partial_injections(n);
  std::vector<std::string> carrier;
  for (std::size_t i = 0; i < n; ++i) carrier.push_back(point_name(i));
  std::vector<Subset> domains;
  std::vector<PartialMap> maps;
  for (ArrowId s : isg.arrows()) {
    const auto& f = injections.at(s.index());
    if (injection_name(f) != isg.name(s)) throw std::invalid_argument("natural_action: not a symmetric inverse monoid");
    Subset d(n);
    PartialMap m(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (f[x] < 0) continue;
      const ElementId y{static_cast<std::size_t>(f[x])};
      d.insert(y);
      m.set(ElementId{x}, y);
    }
    domains.push_back(std::move(d));
    maps.push_back(std::move(m));
  }
  return std::make_shared<const PartialAction>(structure, std::move(carrier), std::move(domains), std::move(maps));
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry reference{"reference", reference_structure(), {}};
    auto global = reference_global_action();
    Subset first_two(3, {ElementId{0u}, ElementId{1u}});
    reference.actions.push_back({"reference_global", global, true});
    reference.actions.push_back({"reference_partial", reference_partial_action(), false});
    reference.actions.push_back(
        {"reference_restricted", std::make_shared<const PartialAction>(restrict(*global, first_two)), false});
    out.push_back(std::move(reference));
  }
  for (std::size_t n : {2u, 3u}) {
    auto g = cyclic_group(n);
    out.push_back({"Z" + std::to_string(n), g, {{"Z" + std::to_string(n) + "_regular", regular_action(g), true}}});
  }
  for (std::size_t n : {2u, 3u}) {
    auto m = symmetric_inverse_monoid(n);
    out.push_back({"I" + std::to_string(n), m, {{"I" + std::to_string(n) + "_natural", natural_action(m, n), true}}});
  }
  for (std::size_t n : {2u, 3u}) {
    auto g = pair_groupoid(n);
    out.push_back(
        {"pair" + std::to_string(n), g, {{"pair" + std::to_string(n) + "_translation", regular_action(g), true}}});
  }
  {
    auto s = two_element_semilattice();
    ActionBuilder same(s, {"1", "2"});
    same.domain("e", {"1", "2"}).domain("f", {"1", "2"}).identity("e").identity("f");
    ActionBuilder nested(s, {"1", "2"});
    nested.domain("e", {"1", "2"}).domain("f", {"1"}).identity("e").identity("f");
    out.push_back({"semilattice2", s,
                   {{"semilattice2_identity", same.build(), true}, {"semilattice2_nested", nested.build(), true}}});
  }
  {
    auto t = trivial_monoid();
    ActionBuilder point(t, {"x"});
    point.domain("1", {"x"}).identity("1");
    out.push_back({"trivial", t, {{"trivial_point", point.build(), true}}});
  }
  return out;
}

PartialAction random_partial_action(const CatalogEntry& entry, std::size_t global_index, std::uint64_t seed) {
  const TaggedAction& chosen = entry.actions.at(global_index);
  if (!chosen.global) throw std::invalid_argument("random_partial_action: action '" + chosen.name + "' is not global");
  const PartialAction& source = *chosen.action;
  const std::size_t n = source.carrier_size();
  if (n == 0) return source;

  // Raw engine output only, so draws are identical on every standard library.
  std::mt19937_64 engine(seed);
  Subset subset(n);
  while (subset.empty()) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 64 == 0) bits = engine();
      if ((bits >> (i % 64)) & 1u) subset.insert(ElementId{i});
    }
  }
  return restrict(source, subset, Coverage::kTrim);
}

CatalogEntry grow_catalog(const CatalogEntry& entry) {
  CatalogEntry grown = entry;
  for (const auto& tagged : entry.actions) {
    if (tagged.global) continue;
    Globalization glob = build_globalization(tagged.action);
    grown.actions.push_back({tagged.name + "_globalized", glob.global_action, true});
  }
  return grown;
}

}  // namespace isgd
