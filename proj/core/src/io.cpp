#include "isgd/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "isgd/errors.hpp"
#include "json.hpp"

namespace isgd {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    out.push_back({number++, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<Token> tokenize(std::string_view line, std::size_t offset = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({std::string(line.substr(i, j - i)), offset + i + 1});
    i = j;
  }
  return out;
}

bool blank(std::string_view line) { return tokenize(line).empty(); }

std::size_t first_column(std::string_view line) {
  auto t = tokenize(line);
  return t.empty() ? 1 : t.front().column;
}

// "[name arg] rest" -> {name, arg, rest-offset}; throws on malformed headers.
struct Header {
  std::string kind;
  std::string arg;
  std::string_view rest;
  std::size_t rest_offset;
};

Header parse_header(const Line& line) {
  const std::size_t open = line.text.find('[');
  const std::size_t close = line.text.find(']', open);
  if (close == std::string_view::npos) throw ParseError(line.number, open + 1, "unterminated section header");
  auto inner = tokenize(line.text.substr(open + 1, close - open - 1), open + 1);
  if (inner.empty() || inner.size() > 2) throw ParseError(line.number, open + 1, "malformed section header");
  Header h{inner[0].text, inner.size() == 2 ? inner[1].text : "", line.text.substr(close + 1), close + 1};
  return h;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  enum class Section { kNone, kObjects, kArrows, kMul, kInverse };
  Section section = Section::kNone;
  StructureFile file;
  SemigroupoidTable& table = file.table;
  std::vector<std::uint32_t> inverse;
  bool has_inverse = false;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> product_line;
  std::set<std::string> seen_sections;
  std::size_t last_line = 1;

  auto object = [&](const Token& t, std::size_t line) {
    auto o = table.find_object(t.text);
    if (!o) throw ParseError(line, t.column, "unknown object '" + t.text + "'");
    return *o;
  };
  auto arrow = [&](const Token& t, std::size_t line) {
    auto a = table.find_arrow(t.text);
    if (!a) throw ParseError(line, t.column, "unknown arrow '" + t.text + "'");
    return *a;
  };

  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    last_line = line.number;
    const std::size_t col = first_column(line.text);
    if (line.text[col - 1] == '[') {
      Header h = parse_header(line);
      if (!h.arg.empty() || !blank(h.rest)) throw ParseError(line.number, col, "unexpected text in section header");
      if (!seen_sections.insert(h.kind).second) throw ParseError(line.number, col, "duplicate section [" + h.kind + "]");
      if (h.kind == "objects") section = Section::kObjects;
      else if (h.kind == "arrows") section = Section::kArrows;
      else if (h.kind == "mul") section = Section::kMul;
      else if (h.kind == "inverse") {
        section = Section::kInverse;
        has_inverse = true;
        inverse.assign(table.arrow_count(), kUndefined);
      } else {
        throw ParseError(line.number, col, "unknown section [" + h.kind + "]");
      }
      continue;
    }
    auto tokens = tokenize(line.text);
    switch (section) {
      case Section::kNone:
        throw ParseError(line.number, col, "content before the first section");
      case Section::kObjects:
        for (const Token& t : tokens) {
          if (table.find_object(t.text)) throw ParseError(line.number, t.column, "duplicate object '" + t.text + "'");
          table.add_object(t.text);
        }
        break;
      case Section::kArrows: {
        if (tokens.size() != 5 || tokens[1].text != ":" || tokens[3].text != "->")
          throw ParseError(line.number, col, "expected 'name : dom -> cod'");
        if (table.find_arrow(tokens[0].text))
          throw ParseError(line.number, tokens[0].column, "duplicate arrow '" + tokens[0].text + "'");
        const ObjectId d = object(tokens[2], line.number);
        const ObjectId c = object(tokens[4], line.number);
        table.add_arrow(tokens[0].text, d, c);
        break;
      }
      case Section::kMul: {
        if (tokens.size() != 4 || tokens[2].text != "=") throw ParseError(line.number, col, "expected 's t = u'");
        const ArrowId s = arrow(tokens[0], line.number);
        const ArrowId t = arrow(tokens[1], line.number);
        const ArrowId u = arrow(tokens[3], line.number);
        if (!table.composable(s, t))
          throw ParseError(line.number, col, "pair (" + tokens[0].text + "," + tokens[1].text + ") is not composable");
        if (!product_line.emplace(std::pair{s.index(), t.index()}, line.number).second)
          throw ParseError(line.number, col, "duplicate product for (" + tokens[0].text + "," + tokens[1].text + ")");
        table.set_product(s, t, u);
        break;
      }
      case Section::kInverse: {
        if (tokens.size() != 3 || tokens[1].text != "=") throw ParseError(line.number, col, "expected 's = t'");
        const ArrowId s = arrow(tokens[0], line.number);
        const ArrowId t = arrow(tokens[2], line.number);
        if (inverse.size() != table.arrow_count())
          throw ParseError(line.number, col, "[inverse] must follow [arrows]");
        if (inverse[s.index()] != kUndefined)
          throw ParseError(line.number, col, "duplicate inverse for '" + tokens[0].text + "'");
        inverse[s.index()] = t.value;
        break;
      }
    }
  }

  for (ArrowId s : table.arrows()) {
    for (ArrowId t : table.arrows()) {
      if (table.composable(s, t) && !table.product(s, t))
        throw ParseError(last_line, 1,
                         "missing product for composable pair (" + table.arrow_name(s) + "," + table.arrow_name(t) + ")");
    }
  }
  if (has_inverse) {
    std::vector<ArrowId> declared;
    for (ArrowId s : table.arrows()) {
      if (inverse[s.index()] == kUndefined)
        throw ParseError(last_line, 1, "[inverse] has no entry for '" + table.arrow_name(s) + "'");
      declared.emplace_back(inverse[s.index()]);
    }
    file.declared_inverse = std::move(declared);
  }
  return file;
}

std::string read_structure_ref(std::string_view text) {
  for (const Line& line : split_lines(text)) {
    auto tokens = tokenize(line.text);
    if (tokens.empty()) continue;
    if (tokens.size() == 3 && tokens[0].text == "structure" && tokens[1].text == "=") return tokens[2].text;
    throw ParseError(line.number, tokens.front().column, "expected 'structure = <path>' header");
  }
  throw ParseError(1, 1, "missing 'structure = <path>' header");
}

ActionFile parse_action(std::string_view text, StructurePtr structure) {
  if (!structure) throw std::invalid_argument("parse_action: null structure");
  const auto& isg = *structure;
  std::string ref;
  std::vector<std::string> carrier;
  std::map<std::string, std::size_t> index;
  bool in_carrier = false, carrier_done = false;
  struct Pending {
    std::size_t line;
    std::vector<Token> tokens;
  };
  std::vector<std::optional<Pending>> domain_lines(isg.size()), map_lines(isg.size());
  std::size_t last_line = 1;

  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    last_line = line.number;
    const std::size_t col = first_column(line.text);
    auto tokens = tokenize(line.text);
    if (ref.empty()) {
      if (tokens.size() != 3 || tokens[0].text != "structure" || tokens[1].text != "=")
        throw ParseError(line.number, col, "expected 'structure = <path>' header");
      ref = tokens[2].text;
      continue;
    }
    if (line.text[col - 1] == '[') {
      Header h = parse_header(line);
      in_carrier = false;
      if (h.kind == "carrier") {
        if (carrier_done || !h.arg.empty() || !blank(h.rest))
          throw ParseError(line.number, col, "malformed or duplicate [carrier] section");
        in_carrier = carrier_done = true;
        continue;
      }
      if (h.kind != "domain" && h.kind != "map") throw ParseError(line.number, col, "unknown section [" + h.kind + "]");
      if (!carrier_done) throw ParseError(line.number, col, "[carrier] must come first");
      auto s = isg.table().find_arrow(h.arg);
      if (!s) throw ParseError(line.number, col, "unknown arrow '" + h.arg + "'");
      auto rest = tokenize(h.rest, h.rest_offset);
      if (rest.empty() || rest.front().text != "=")
        throw ParseError(line.number, h.rest_offset + 1, "expected '=' after section header");
      rest.erase(rest.begin());
      auto& slot = (h.kind == "domain" ? domain_lines : map_lines)[s->index()];
      if (slot) throw ParseError(line.number, col, "duplicate [" + h.kind + " " + h.arg + "]");
      slot = Pending{line.number, std::move(rest)};
      continue;
    }
    if (!in_carrier) throw ParseError(line.number, col, "content outside a section");
    for (const Token& t : tokens) {
      if (t.text.find("->") != std::string::npos)
        throw ParseError(line.number, t.column, "element names may not contain '->'");
      if (!index.emplace(t.text, carrier.size()).second)
        throw ParseError(line.number, t.column, "duplicate element '" + t.text + "'");
      carrier.push_back(t.text);
    }
  }
  if (ref.empty()) throw ParseError(1, 1, "missing 'structure = <path>' header");

  auto element = [&](const std::string& name, std::size_t line, std::size_t column) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line, column, "unknown element '" + name + "'");
    return ElementId{it->second};
  };

  auto resolve_domain = [&](const Pending& d) {
    Subset dom(carrier.size());
    for (const Token& t : d.tokens) {
      const ElementId x = element(t.text, d.line, t.column);
      if (dom.contains(x)) throw ParseError(d.line, t.column, "duplicate element '" + t.text + "'");
      dom.insert(x);
    }
    return dom;
  };
  auto resolve_map = [&](const Pending& m) {
    PartialMap f(carrier.size());
    for (const Token& t : m.tokens) {
      const auto arrow_at = t.text.find("->");
      if (arrow_at == std::string::npos || arrow_at == 0 || arrow_at + 2 == t.text.size())
        throw ParseError(m.line, t.column, "expected 'x->y'");
      const ElementId x = element(t.text.substr(0, arrow_at), m.line, t.column);
      const ElementId y = element(t.text.substr(arrow_at + 2), m.line, t.column + arrow_at + 2);
      if (f.defined_at(x)) throw ParseError(m.line, t.column, "map assigns two values to '" + carrier[x.index()] + "'");
      f.set(x, y);
    }
    return f;
  };

  // Errors inside present sections take precedence over missing sections.
  std::vector<Subset> domains(isg.size(), Subset(carrier.size()));
  std::vector<PartialMap> maps(isg.size(), PartialMap(carrier.size()));
  for (ArrowId s : isg.arrows()) {
    const auto& d = domain_lines[s.index()];
    const auto& m = map_lines[s.index()];
    if (d) domains[s.index()] = resolve_domain(*d);
    if (m) maps[s.index()] = resolve_map(*m);
  }
  for (ArrowId s : isg.arrows()) {
    if (!domain_lines[s.index()]) throw ParseError(last_line, 1, "missing [domain " + isg.name(s) + "]");
    if (!map_lines[s.index()]) throw ParseError(last_line, 1, "missing [map " + isg.name(s) + "]");
  }
  return ActionFile{ref, PartialAction(std::move(structure), std::move(carrier), std::move(domains), std::move(maps))};
}

std::string print_structure(const SemigroupoidTable& table, const std::optional<std::vector<ArrowId>>& inverse) {
  std::ostringstream os;
  os << "[objects]\n";
  for (ObjectId u : table.objects()) os << table.object_name(u) << '\n';
  os << "\n[arrows]\n";
  for (ArrowId s : table.arrows())
    os << table.arrow_name(s) << " : " << table.object_name(table.dom(s)) << " -> " << table.object_name(table.cod(s))
       << '\n';
  os << "\n[mul]\n";
  for (ArrowId s : table.arrows())
    for (ArrowId t : table.arrows())
      if (auto st = table.product(s, t))
        os << table.arrow_name(s) << ' ' << table.arrow_name(t) << " = " << table.arrow_name(*st) << '\n';
  if (inverse) {
    os << "\n[inverse]\n";
    for (ArrowId s : table.arrows()) os << table.arrow_name(s) << " = " << table.arrow_name((*inverse)[s.index()]) << '\n';
  }
  return os.str();
}

std::string print_structure(const InverseSemigroupoid& isg) {
  std::vector<ArrowId> inverse;
  for (ArrowId s : isg.arrows()) inverse.push_back(isg.inverse(s));
  return print_structure(isg.table(), inverse);
}

std::string print_action(const PartialAction& action, std::string_view structure_ref) {
  const auto& isg = action.structure();
  std::ostringstream os;
  os << "structure = " << structure_ref << "\n\n[carrier]\n";
  for (std::size_t i = 0; i < action.carrier().size(); ++i) os << (i ? " " : "") << action.carrier()[i];
  os << "\n\n";
  for (ArrowId s : isg.arrows()) {
    os << "[domain " << isg.name(s) << "] =";
    for (ElementId x : action.domain(s).elements()) os << ' ' << action.element_name(x);
    os << '\n';
  }
  os << '\n';
  for (ArrowId s : isg.arrows()) {
    os << "[map " << isg.name(s) << "] =";
    for (ElementId x : action.map(s).domain().elements())
      os << ' ' << action.element_name(x) << "->" << action.element_name(*action.map(s)(x));
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

StructurePtr load_structure(const std::filesystem::path& path) {
  StructureFile file = parse_structure(read_file(path));
  auto inferred = infer_inverses(file.table, file.declared_inverse);
  if (!inferred.structure) {
    std::ostringstream os;
    os << path.string() << " is not an inverse semigroupoid: " << inferred.report;
    throw ValidationError(os.str(), inferred.report);
  }
  return std::make_shared<const InverseSemigroupoid>(std::move(*inferred.structure));
}

ActionFile load_action(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const std::string ref = read_structure_ref(text);
  std::filesystem::path structure_path = ref;
  if (structure_path.is_relative()) structure_path = path.parent_path() / structure_path;
  return parse_action(text, load_structure(structure_path));
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string class_set(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (ElementId c : s.elements()) {
    out += (first ? "" : ", ") + class_label(c);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string format_seed(const PartialAction& action, Seed p) {
  return "(" + action.structure().name(p.arrow) + "," + action.element_name(p.point) + ")";
}

std::string structure_dot(const InverseSemigroupoid& isg) {
  const auto& table = isg.table();
  std::ostringstream os;
  os << "digraph semigroupoid {\n";
  for (ObjectId u : table.objects()) os << "  " << dot_quote(table.object_name(u)) << ";\n";
  for (ArrowId s : isg.arrows())
    os << "  " << dot_quote(table.object_name(isg.dom(s))) << " -> " << dot_quote(table.object_name(isg.cod(s)))
       << " [label=" << dot_quote(isg.name(s)) << "];\n";
  os << "}\n";
  return os.str();
}

std::string globalization_dot(const Globalization& glob) {
  const PartialAction& x = *glob.input;
  const Quotient& q = glob.quotient;
  std::ostringstream os;
  os << "graph globalization {\n";
  for (std::size_t c = 0; c < q.class_count(); ++c) {
    const ElementId id{c};
    os << "  subgraph cluster_" << class_label(id) << " {\n    label=" << dot_quote(class_label(id)) << ";\n";
    for (const Seed& p : q.members(id)) os << "    " << dot_quote(format_seed(x, p)) << ";\n";
    os << "  }\n";
  }
  const auto& seeds = q.seeds();
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = i + 1; j < seeds.size(); ++j)
      if (tilde(x, seeds[i], seeds[j]))
        os << "  " << dot_quote(format_seed(x, seeds[i])) << " -- " << dot_quote(format_seed(x, seeds[j])) << ";\n";
  os << "}\n";
  return os.str();
}

std::string globalization_table(const Globalization& glob) {
  const PartialAction& x = *glob.input;
  const PartialAction& e = *glob.global_action;
  const auto& isg = x.structure();
  const Quotient& q = glob.quotient;
  std::ostringstream os;
  os << "seeds: " << q.seeds().size() << "\n";
  os << "classes: " << q.class_count() << "\n";
  for (std::size_t c = 0; c < q.class_count(); ++c) {
    os << "  " << class_label(ElementId{c}) << " = {";
    bool first = true;
    for (const Seed& p : q.members(ElementId{c})) {
      os << (first ? "" : ", ") << format_seed(x, p);
      first = false;
    }
    os << "}\n";
  }
  os << "families:\n";
  for (ArrowId s : isg.arrows()) os << "  E_" << isg.name(s) << " = " << class_set(e.domain(s)) << "\n";
  os << "eta:\n";
  for (ArrowId s : isg.arrows()) {
    os << "  eta_" << isg.name(s) << ":";
    bool first = true;
    for (ElementId c : e.map(s).domain().elements()) {
      os << (first ? " " : ", ") << class_label(c) << " -> " << class_label(*e.map(s)(c));
      first = false;
    }
    os << "\n";
  }
  os << "embedding i:\n";
  for (ElementId p : x.elements())
    os << "  " << x.element_name(p) << " -> " << class_label(glob.canonical_embedding(p)) << "\n";
  return os.str();
}

std::string globalization_json(const Globalization& glob) {
  using nlohmann::ordered_json;
  const PartialAction& x = *glob.input;
  const PartialAction& e = *glob.global_action;
  const auto& isg = x.structure();
  const Quotient& q = glob.quotient;
  auto seed_json = [&](Seed p) { return ordered_json::array({isg.name(p.arrow), x.element_name(p.point)}); };

  ordered_json doc;
  doc["seeds"] = ordered_json::array();
  for (const Seed& p : q.seeds()) doc["seeds"].push_back(seed_json(p));
  doc["classes"] = ordered_json::array();
  for (std::size_t c = 0; c < q.class_count(); ++c) {
    ordered_json cls;
    cls["label"] = class_label(ElementId{c});
    cls["representative"] = seed_json(q.representative(ElementId{c}));
    cls["members"] = ordered_json::array();
    for (const Seed& p : q.members(ElementId{c})) cls["members"].push_back(seed_json(p));
    doc["classes"].push_back(std::move(cls));
  }
  doc["families"] = ordered_json::array();
  doc["eta"] = ordered_json::array();
  for (ArrowId s : isg.arrows()) {
    ordered_json fam;
    fam["arrow"] = isg.name(s);
    fam["classes"] = ordered_json::array();
    for (ElementId c : e.domain(s).elements()) fam["classes"].push_back(class_label(c));
    doc["families"].push_back(std::move(fam));

    ordered_json eta;
    eta["arrow"] = isg.name(s);
    eta["pairs"] = ordered_json::array();
    for (ElementId c : e.map(s).domain().elements())
      eta["pairs"].push_back(ordered_json::array({class_label(c), class_label(*e.map(s)(c))}));
    doc["eta"].push_back(std::move(eta));
  }
  doc["embedding"] = ordered_json::array();
  for (ElementId p : x.elements())
    doc["embedding"].push_back(ordered_json::array({x.element_name(p), class_label(glob.canonical_embedding(p))}));
  return doc.dump(2) + "\n";
}

}  // namespace isgd
