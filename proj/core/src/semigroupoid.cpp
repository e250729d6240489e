#include "isgd/semigroupoid.hpp"

#include <sstream>
#include <stdexcept>

#include "isgd/errors.hpp"

namespace isgd {

ObjectId SemigroupoidTable::add_object(std::string name) {
  object_names_.push_back(std::move(name));
  return ObjectId{object_names_.size() - 1};
}

ArrowId SemigroupoidTable::add_arrow(std::string name, ObjectId dom, ObjectId cod) {
  if (dom.index() >= object_count() || cod.index() >= object_count())
    throw StructureError("arrow '" + name + "' refers to an undeclared object");
  const std::size_t old_n = arrow_names_.size();
  arrow_names_.push_back(std::move(name));
  dom_.push_back(dom);
  cod_.push_back(cod);
  grow_products(old_n);
  return ArrowId{old_n};
}

void SemigroupoidTable::grow_products(std::size_t old_n) {
  const std::size_t n = arrow_names_.size();
  std::vector<std::uint32_t> next(n * n, kUndefined);
  for (std::size_t i = 0; i < old_n; ++i)
    for (std::size_t j = 0; j < old_n; ++j) next[i * n + j] = products_[i * old_n + j];
  products_ = std::move(next);
}

void SemigroupoidTable::set_product(ArrowId s, ArrowId t, ArrowId st) {
  const std::size_t n = arrow_count();
  if (s.index() >= n || t.index() >= n) throw StructureError("product of undeclared arrow");
  products_[s.index() * n + t.index()] = st.value;
}

void SemigroupoidTable::clear_product(ArrowId s, ArrowId t) {
  const std::size_t n = arrow_count();
  products_.at(s.index() * n + t.index()) = kUndefined;
}

std::optional<ArrowId> SemigroupoidTable::product(ArrowId s, ArrowId t) const {
  const std::size_t n = arrow_count();
  const std::uint32_t v = products_.at(s.index() * n + t.index());
  if (v == kUndefined) return std::nullopt;
  return ArrowId{v};
}

std::optional<ObjectId> SemigroupoidTable::find_object(std::string_view name) const {
  for (std::size_t i = 0; i < object_names_.size(); ++i)
    if (object_names_[i] == name) return ObjectId{i};
  return std::nullopt;
}

std::optional<ArrowId> SemigroupoidTable::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrow_names_.size(); ++i)
    if (arrow_names_[i] == name) return ArrowId{i};
  return std::nullopt;
}

std::vector<ArrowId> SemigroupoidTable::arrows() const {
  std::vector<ArrowId> out;
  out.reserve(arrow_count());
  for (std::size_t i = 0; i < arrow_count(); ++i) out.emplace_back(i);
  return out;
}

std::vector<ObjectId> SemigroupoidTable::objects() const {
  std::vector<ObjectId> out;
  for (std::size_t i = 0; i < object_count(); ++i) out.emplace_back(i);
  return out;
}

namespace {

void check_structure(const SemigroupoidTable& table) {
  const std::size_t n = table.arrow_count();
  for (ArrowId s : table.arrows()) {
    if (table.dom(s).index() >= table.object_count() || table.cod(s).index() >= table.object_count())
      throw StructureError("arrow '" + table.arrow_name(s) + "' refers to an undeclared object");
    for (ArrowId t : table.arrows()) {
      auto st = table.product(s, t);
      if (st && st->index() >= n)
        throw StructureError("product " + table.arrow_name(s) + " " + table.arrow_name(t) +
                             " names an undeclared arrow");
    }
  }
}

std::string names(const SemigroupoidTable& table, std::initializer_list<ArrowId> ids) {
  std::string out = "(";
  bool first = true;
  for (ArrowId id : ids) {
    if (!first) out += ",";
    out += table.arrow_name(id);
    first = false;
  }
  return out + ")";
}

}  // namespace

ValidationReport validate_semigroupoid(const SemigroupoidTable& table) {
  check_structure(table);
  ValidationReport report;
  const auto arrows = table.arrows();

  for (ArrowId s : arrows) {
    for (ArrowId t : arrows) {
      auto st = table.product(s, t);
      if (table.composable(s, t) && !st) {
        report.add({"totality", "product undefined on composable pair " + names(table, {s, t}), {s, t}, {}});
      } else if (!table.composable(s, t) && st) {
        report.add({"definedness", "product defined on non-composable pair " + names(table, {s, t}),
                    {s, t}, {}});
      }
      if (st && table.composable(s, t)) {
        if (table.dom(*st) != table.dom(t))
          report.add({"domain", "d(st) != d(t) for " + names(table, {s, t}), {s, t}, {}});
        if (table.cod(*st) != table.cod(s))
          report.add({"codomain", "c(st) != c(s) for " + names(table, {s, t}), {s, t}, {}});
      }
    }
  }

  for (ArrowId p : arrows) {
    for (ArrowId s : arrows) {
      if (!table.composable(p, s)) continue;
      auto ps = table.product(p, s);
      for (ArrowId t : arrows) {
        if (!table.composable(s, t)) continue;
        auto st = table.product(s, t);
        if (!ps || !st) continue;
        auto left = table.product(*ps, t);
        auto right = table.product(p, *st);
        if (!left || !right) continue;  // reported as totality or coherence
        if (*left != *right) {
          report.add({"associativity",
                      "(ps)t = " + table.arrow_name(*left) + " but p(st) = " + table.arrow_name(*right) +
                          " for (p,s,t) = " + names(table, {p, s, t}),
                      {p, s, t}, {}});
        }
      }
    }
  }
  return report;
}

InverseSemigroupoid::InverseSemigroupoid(SemigroupoidTable table, std::vector<ArrowId> inverse)
    : table_(std::move(table)), inverse_(std::move(inverse)) {}

ArrowId InverseSemigroupoid::mul(ArrowId s, ArrowId t) const {
  auto st = table_.product(s, t);
  if (!st) throw std::logic_error("mul on non-composable pair (" + name(s) + "," + name(t) + ")");
  return *st;
}

bool InverseSemigroupoid::is_idempotent(ArrowId s) const {
  auto ss = table_.product(s, s);
  return ss && *ss == s;
}

ArrowId InverseSemigroupoid::arrow(std::string_view n) const {
  auto s = table_.find_arrow(n);
  if (!s) throw std::out_of_range("unknown arrow '" + std::string(n) + "'");
  return *s;
}

namespace {

bool is_pseudo_inverse(const SemigroupoidTable& table, ArrowId s, ArrowId c) {
  if (!table.composable(s, c) || !table.composable(c, s)) return false;
  auto sc = table.product(s, c);
  auto cs = table.product(c, s);
  if (!sc || !cs) return false;
  auto scs = table.product(*sc, s);
  auto csc = table.product(*cs, c);
  return scs && csc && *scs == s && *csc == c;
}

}  // namespace

InverseInference infer_inverses(const SemigroupoidTable& table,
                                const std::optional<std::vector<ArrowId>>& declared) {
  InverseInference result;
  result.report = validate_semigroupoid(table);
  if (!result.report.ok()) return result;

  std::vector<ArrowId> inverse(table.arrow_count());
  for (ArrowId s : table.arrows()) {
    std::vector<ArrowId> found;
    for (ArrowId c : table.arrows())
      if (is_pseudo_inverse(table, s, c)) found.push_back(c);
    if (found.empty()) {
      result.report.add({"inverse-missing", "no pseudo-inverse for " + table.arrow_name(s), {s}, {}});
    } else if (found.size() > 1) {
      result.report.add({"inverse-not-unique",
                         "pseudo-inverses " + table.arrow_name(found[0]) + " and " +
                             table.arrow_name(found[1]) + " both invert " + table.arrow_name(s),
                         {s, found[0], found[1]}, {}});
    } else {
      inverse[s.index()] = found.front();
    }
  }

  if (declared && result.report.ok()) {
    if (declared->size() != table.arrow_count()) {
      result.report.add({"inverse-declared", "declared inverse map does not cover every arrow", {}, {}});
    } else {
      for (ArrowId s : table.arrows()) {
        ArrowId d = (*declared)[s.index()];
        if (d != inverse[s.index()]) {
          std::string shown = d.index() < table.arrow_count() ? table.arrow_name(d) : "?";
          result.report.add({"inverse-declared",
                             "declared inverse of " + table.arrow_name(s) + " is " + shown +
                                 " but the unique pseudo-inverse is " + table.arrow_name(inverse[s.index()]),
                             {s}, {}});
        }
      }
    }
  }

  if (result.report.ok()) result.structure = InverseSemigroupoid(table, std::move(inverse));
  return result;
}

InverseSemigroupoid make_inverse_semigroupoid(const SemigroupoidTable& table) {
  auto inferred = infer_inverses(table);
  if (!inferred.structure) {
    std::ostringstream os;
    os << "not an inverse semigroupoid: " << inferred.report;
    throw ValidationError(os.str(), inferred.report);
  }
  return std::move(*inferred.structure);
}

std::vector<ArrowId> idempotents(const InverseSemigroupoid& isg) {
  std::vector<ArrowId> out;
  for (ArrowId s : isg.arrows())
    if (isg.is_idempotent(s)) out.push_back(s);
  return out;
}

bool is_identity(const InverseSemigroupoid& isg, ArrowId e) {
  for (ArrowId s : isg.arrows()) {
    if (isg.composable(e, s) && isg.mul(e, s) != s) return false;
    if (isg.composable(s, e) && isg.mul(s, e) != s) return false;
  }
  return true;
}

bool natural_leq(const InverseSemigroupoid& isg, ArrowId s, ArrowId t) {
  if (isg.dom(s) != isg.dom(t) || isg.cod(s) != isg.cod(t)) return false;
  return s == isg.mul(t, isg.mul(isg.inverse(s), s));
}

bool OrderCharacterizations::agree() const {
  if (!same_endpoints) return true;
  return right_self == right_idempotent && right_self == left_self && right_self == left_idempotent;
}

OrderCharacterizations natural_leq_characterizations(const InverseSemigroupoid& isg, ArrowId s,
                                                     ArrowId t) {
  OrderCharacterizations c;
  c.same_endpoints = isg.dom(s) == isg.dom(t) && isg.cod(s) == isg.cod(t);
  if (!c.same_endpoints) return c;
  const ArrowId s_star = isg.inverse(s);
  c.right_self = s == isg.mul(t, isg.mul(s_star, s));
  c.left_self = s == isg.mul(isg.mul(s, s_star), t);
  for (ArrowId e : idempotents(isg)) {
    if (isg.composable(t, e) && isg.mul(t, e) == s) c.right_idempotent = true;
    if (isg.composable(e, t) && isg.mul(e, t) == s) c.left_idempotent = true;
  }
  return c;
}

}  // namespace isgd
