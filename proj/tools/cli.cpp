#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "isgd/catalog.hpp"
#include "isgd/errors.hpp"
#include "isgd/globalize.hpp"
#include "isgd/io.hpp"
#include "isgd/morphism.hpp"

namespace isgd::cli {

namespace {

namespace fs = std::filesystem;

// Thrown by command bodies to select exit code 1 after printing a report.
struct Failed {};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::shared_ptr<const PartialAction> share(PartialAction a) {
  return std::make_shared<const PartialAction>(std::move(a));
}

// "label: OK|FAIL" followed by the violations and notes, one per line.
void verdict(std::ostream& out, const std::string& label, const ValidationReport& report) {
  out << label << ": " << (report.ok() ? "OK" : "FAIL") << '\n';
  for (const auto& v : report.violations()) out << "  [" << v.axiom << "] " << v.message << '\n';
  for (const auto& n : report.notes()) out << "  note: " << n << '\n';
}

void require_valid(const PartialAction& action, const std::string& label, std::ostream& out) {
  ValidationReport report = validate_p_axioms(action);
  if (!report.ok()) {
    verdict(out, label, report);
    throw Failed{};
  }
}

int validate_files(const std::vector<std::string>& files, std::ostream& out) {
  bool all_ok = true;
  for (const auto& file : files) {
    const fs::path path(file);
    ValidationReport report;
    if (path.extension() == ".isgd") {
      StructureFile parsed = parse_structure(read_file(path));
      report = validate_semigroupoid(parsed.table);
      if (report.ok()) report.merge(infer_inverses(parsed.table, parsed.declared_inverse).report);
    } else {
      std::optional<ActionFile> parsed;
      try {
        parsed.emplace(load_action(path));
      } catch (const ValidationError& e) {
        verdict(out, file, e.report());
        all_ok = false;
        continue;
      }
      report = validate_p_axioms(parsed->action);
      report.merge(validate_e_axioms(parsed->action));
    }
    verdict(out, file, report);
    all_ok = all_ok && report.ok();
  }
  return all_ok ? kOk : kValidationFailure;
}

int restrict_command(const std::string& file, const std::string& subset_text, bool trim, std::ostream& out) {
  ActionFile parsed = load_action(file);
  require_valid(parsed.action, file, out);
  Subset subset(parsed.action.carrier_size());
  for (const auto& name : split(subset_text, ',')) {
    auto x = parsed.action.find_element(name);
    if (!x) throw std::runtime_error("unknown element '" + name + "' in --subset");
    subset.insert(*x);
  }
  out << print_action(restrict(parsed.action, subset, trim ? Coverage::kTrim : Coverage::kStrict),
                      parsed.structure_ref);
  return kOk;
}

int globalize_command(const std::string& file, const std::string& format, std::ostream& out) {
  ActionFile parsed = load_action(file);
  require_valid(parsed.action, file, out);
  Globalization glob = build_globalization(share(std::move(parsed.action)));
  if (format == "dot")
    out << globalization_dot(glob);
  else if (format == "json")
    out << globalization_json(glob);
  else
    out << globalization_table(glob);
  return kOk;
}

SFunction parse_embedding(const std::string& text, const ActionPtr& source, const ActionPtr& target) {
  std::vector<ElementId> map(source->carrier_size(), ElementId{kUndefined});
  for (const auto& pair : split(text, ',')) {
    const auto at = pair.find("->");
    if (at == std::string::npos) throw std::runtime_error("--embedding entries look like x->y, got '" + pair + "'");
    auto x = source->find_element(pair.substr(0, at));
    auto y = target->find_element(pair.substr(at + 2));
    if (!x || !y) throw std::runtime_error("--embedding names an unknown element in '" + pair + "'");
    map[x->index()] = *y;
  }
  for (ElementId x : source->elements())
    if (map[x.index()].value == kUndefined)
      throw std::runtime_error("--embedding has no image for '" + source->element_name(x) + "'");
  return make_s_function(source, target, std::move(map));
}

int mediate_command(const std::string& file, const std::string& target_file, const std::string& embedding,
                    bool strict, std::uint64_t bound, std::ostream& out) {
  ActionFile source_file = load_action(file);
  ActionFile target_file_parsed = load_action(target_file);
  require_valid(source_file.action, file, out);
  require_valid(target_file_parsed.action, target_file, out);
  if (!(source_file.action.structure() == target_file_parsed.action.structure()))
    throw std::runtime_error("source and target act by different structures");
  // Share one structure so both ends compare equal by identity as well.
  ActionPtr source = share(std::move(source_file.action));
  ActionPtr target = share(PartialAction(source->structure_ptr(), target_file_parsed.action.carrier(),
                                         [&] {
                                           std::vector<Subset> d;
                                           for (ArrowId s : source->structure().arrows())
                                             d.push_back(target_file_parsed.action.domain(s));
                                           return d;
                                         }(),
                                         [&] {
                                           std::vector<PartialMap> m;
                                           for (ArrowId s : source->structure().arrows())
                                             m.push_back(target_file_parsed.action.map(s));
                                           return m;
                                         }()));
  SFunction j = parse_embedding(embedding, source, target);
  GlobalizationTriple triple = [&] {
    try {
      return GlobalizationTriple::make(j, strict ? TargetCheck::kStrict : TargetCheck::kReflector);
    } catch (const ValidationError& e) {
      out << "target: FAIL\n" << e.report();
      throw Failed{};
    }
  }();
  Globalization glob = build_globalization(source);
  SFunction sigma = mediating(glob, triple);

  out << "sigma:\n";
  for (ElementId c : glob.global_action->elements())
    out << "  " << class_label(c) << " -> " << target->element_name(sigma(c)) << "\n";
  std::vector<bool> hit(target->carrier_size(), false);
  bool injective = true;
  for (ElementId c : glob.global_action->elements()) {
    if (hit[sigma(c).index()]) injective = false;
    hit[sigma(c).index()] = true;
  }
  out << "injective: " << (injective ? "yes" : "no") << "\n";
  ValidationReport universal = verify_universal(glob, triple, sigma, bound);
  verdict(out, "universal", universal);
  ValidationReport fibers = check_fiber_injectivity(sigma, glob);
  verdict(out, "fiber injectivity", fibers);
  return universal.ok() && fibers.ok() ? kOk : kValidationFailure;
}

int check_command(const std::string& file, bool props, std::ostream& out) {
  ActionFile parsed = load_action(file);
  const PartialAction& action = parsed.action;
  ValidationReport p = validate_p_axioms(action);
  ValidationReport e = validate_e_axioms(action);
  const bool agree = p.ok() == e.ok();
  verdict(out, "P axioms", p);
  verdict(out, "E axioms", e);
  out << "P/E agreement: " << (agree ? "yes" : "NO") << "\n";
  bool ok = p.ok() && e.ok() && agree;
  if (p.ok()) {
    GlobalDiagnostic g = global_diagnostic(action);
    out << "global: " << (is_global(action) ? "yes" : "no")
        << (g.agree() ? "" : " (characterizations disagree)") << "\n";
    ok = ok && g.agree();
  }
  if (props && p.ok()) {
    ValidationReport d = check_derived_propositions(action);
    verdict(out, "derived propositions", d);
    ok = ok && d.ok();
  }
  return ok ? kOk : kValidationFailure;
}

int catalog_command(const std::string& dir, std::ostream& out) {
  for (const CatalogEntry& entry : catalog()) {
    out << entry.name << " (" << entry.structure->size() << " arrows)";
    for (const auto& a : entry.actions) out << " " << a.name << (a.global ? "[global]" : "");
    out << "\n";
    if (dir.empty()) continue;
    fs::create_directories(dir);
    const std::string structure_file = entry.name + ".isgd";
    std::ofstream(fs::path(dir) / structure_file) << print_structure(*entry.structure);
    for (const auto& a : entry.actions)
      std::ofstream(fs::path(dir) / (a.name + ".pact")) << print_action(*a.action, structure_file);
  }
  return kOk;
}

int sample_command(const std::string& name, const std::string& action_name, std::uint64_t seed, std::ostream& out) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.name != name) continue;
    std::size_t index = entry.actions.size();
    for (std::size_t i = 0; i < entry.actions.size(); ++i)
      if (entry.actions[i].global && (action_name.empty() || entry.actions[i].name == action_name)) {
        index = i;
        break;
      }
    if (index == entry.actions.size()) throw std::runtime_error("no matching global action in '" + name + "'");
    out << print_action(random_partial_action(entry, index, seed), entry.name + ".isgd");
    return kOk;
  }
  throw std::runtime_error("unknown catalog entry '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite inverse semigroupoids, partial actions and their globalizations", "isgd"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::vector<std::string> files;
  auto* validate = app.add_subcommand("validate", "Check structure (.isgd) and action (.pact) files");
  validate->add_option("files", files, "Files to check")->required();
  validate->callback([&] { action = [&] { return validate_files(files, out); }; });

  std::string file, subset, format = "table", target, embedding, entry_name, action_name, out_dir;
  bool trim = false, strict = false, props = false;
  std::uint64_t bound = kDefaultExhaustiveBound, seed = 0;

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict an action to a subset of its carrier");
  restrict_cmd->add_option("action", file, "Action file")->required();
  restrict_cmd->add_option("--subset", subset, "Comma-separated carrier elements")->required();
  restrict_cmd->add_flag("--trim", trim, "Drop points outside every idempotent domain instead of failing");
  restrict_cmd->callback([&] { action = [&] { return restrict_command(file, subset, trim, out); }; });

  auto* globalize = app.add_subcommand("globalize", "Build the universal globalization");
  globalize->add_option("action", file, "Action file")->required();
  globalize->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "dot", "json"}));
  globalize->callback([&] { action = [&] { return globalize_command(file, format, out); }; });

  auto* mediate = app.add_subcommand("mediate", "Mediating map from the globalization to a global target");
  mediate->add_option("action", file, "Action file")->required();
  mediate->add_option("--target", target, "Global target action file")->required();
  mediate->add_option("--embedding", embedding, "Map as x->y pairs separated by commas")->required();
  mediate->add_flag("--strict", strict, "Require the target map to be an embedding");
  mediate->add_option("--bound", bound, "Largest candidate count for the uniqueness scan");
  mediate->callback([&] { action = [&] { return mediate_command(file, target, embedding, strict, bound, out); }; });

  auto* check = app.add_subcommand("check", "Axiom audit of an action");
  check->add_option("action", file, "Action file")->required();
  check->add_flag("--props", props, "Also run the derived propositions");
  check->callback([&] { action = [&] { return check_command(file, props, out); }; });

  auto* draw = app.add_subcommand("draw", "Graphviz rendering of a structure");
  draw->add_option("structure", file, "Structure file")->required();
  draw->callback([&] {
    action = [&] {
      out << structure_dot(*load_structure(file));
      return int(kOk);
    };
  });

  auto* catalog_cmd = app.add_subcommand("catalog", "List the built-in examples");
  catalog_cmd->add_option("--out", out_dir, "Write every entry as files into this directory");
  catalog_cmd->callback([&] { action = [&] { return catalog_command(out_dir, out); }; });

  auto* sample = app.add_subcommand("sample", "Random restriction of a catalog action");
  sample->add_option("entry", entry_name, "Catalog entry")->required();
  sample->add_option("--action", action_name, "Global action name (first global by default)");
  sample->add_option("--seed", seed, "Generator seed")->required();
  sample->callback([&] { action = [&] { return sample_command(entry_name, action_name, seed, out); }; });

  std::vector<std::string> argv_store{"isgd"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    return action();
  } catch (const Failed&) {
    return kValidationFailure;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const CoverageError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const WellDefinednessError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace isgd::cli
