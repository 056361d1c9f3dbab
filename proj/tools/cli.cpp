#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "landin/error.hpp"
#include "landin/instances.hpp"
#include "landin/serialize.hpp"
#include "landin/spec_text.hpp"

namespace landin::cli {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::parse, "cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedSpec {
  std::vector<ProcessSpec> specs;
  std::vector<PrefixLanguage> parts;  // in process-name order
  SymbolSet sigma;                    // union of the declared alphabets
};

LoadedSpec load_spec(const std::string& path) {
  if (path.empty()) raise(Errc::parse, "this command needs --in FILE");
  LoadedSpec loaded;
  loaded.specs = parse_spec(slurp(path));
  if (loaded.specs.empty()) raise(Errc::parse, "\"" + path + "\" declares no processes");
  for (const ProcessSpec& spec : loaded.specs) {
    loaded.parts.push_back(spec.expand());
    loaded.sigma.insert(spec.alphabet.begin(), spec.alphabet.end());
  }
  return loaded;
}

int choose_depth(const RunConfig& config, const std::vector<PrefixLanguage>& parts) {
  if (config.depth) return *config.depth;
  int depth = parts.front().depth();
  for (const PrefixLanguage& part : parts) depth = std::min(depth, part.depth());
  return depth;
}

std::string text_trace(const Trace& t) { return t.empty() ? "·" : t.flat(); }

std::string language_text(const PrefixLanguage& lang) {
  std::string out = "alphabet:";
  for (const Symbol& s : lang.alphabet()) out += " " + s.name();
  out += "\ndepth: " + std::to_string(lang.depth()) + "\ntraces:\n";
  for (const Trace& t : lang.traces()) out += "  " + text_trace(t) + "\n";
  return out;
}

std::string vector_language_text(const VectorLanguage& lang) {
  std::string out = "alphabets:";
  for (const SymbolSet& c : lang.alphabet_vector().components()) {
    out += " {";
    bool first = true;
    for (const Symbol& s : c) {
      if (!first) out += ",";
      out += s.name();
      first = false;
    }
    out += "}";
  }
  out += "\ndepth: " + std::to_string(lang.depth()) + "\nvectors:\n";
  for (const VectorString& v : lang.vectors()) {
    out += "  (";
    for (size_t i = 0; i < v.dimension(); ++i) {
      if (i) out += ",";
      out += text_trace(v.part(i));
    }
    out += ")\n";
  }
  return out;
}

std::string report_line(const CheckReport& r) {
  std::string out = std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.check + " depth=" +
                    std::to_string(r.depth) + " " + r.instance;
  if (r.counterexample)
    out += " | witness=" + r.counterexample->witness + " lhs=" + r.counterexample->lhs +
           " rhs=" + r.counterexample->rhs;
  return out + "\n";
}

bool is_json_fixture(const std::string& path) {
  return path.size() > 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

CheckReport run_fixture(const std::string& path, const std::string& requested) {
  json j = json::parse(slurp(path), nullptr, false);
  if (j.is_discarded()) raise(Errc::parse, "fixture \"" + path + "\" is not valid JSON");
  std::string id_name = j.at("check").get<std::string>();
  if (!requested.empty() && requested != "SUITE" && requested != id_name)
    raise(Errc::check_id, "fixture runs " + id_name + ", not " + requested);

  if (id_name == "DERIVED_HOM") {
    PrefixLanguage source = prefix_language_from_json(j.at("source").dump());
    PrefixLanguage target = prefix_language_from_json(j.at("target").dump());
    SymbolSet sigma = set_union(source.alphabet(), target.alphabet());
    PartialAlgebra a = f_of_language(source, sigma);
    PartialAlgebra b = f_of_language(target, sigma);

    std::map<std::string, Term> images;
    images.emplace("ε", Term::epsilon());
    for (const Symbol& s : sigma) images.emplace(s.name(), Term::var(0));
    for (const auto& [name, flat] : j.at("map").items()) {
      Symbol s = Symbol::intern(name);
      if (!source.alphabet().count(s)) raise(Errc::symbol, "map key outside αL: " + name);
      images.insert_or_assign(
          name,
          Term::spine(Term::var(0), trace_from_flat(flat.get<std::string>(), target.alphabet())));
    }
    DerivedHom h{Derivor::of(Signature::language(sigma), std::move(images)),
                 j.at("phi").get<std::map<std::string, std::string>>(),
                 j.value("strong", false)};

    CheckReport report;
    report.check = "DERIVED_HOM";
    report.instance = path;
    report.depth = source.depth();
    report.pass = true;
    // locate the offending carrier point when the check fails
    try {
      if (!check_derived_hom(h, a, b, true)) {
        report.pass = false;
        PartialAlgebra db = derived_algebra(h.d, b);
        std::optional<Counterexample> cex;
        for (const Trace& s : source.traces()) {
          for (const Symbol& sym : source.alphabet()) {
            Trace succ = s.append(sym);
            if (!source.contains(succ)) continue;
            std::optional<Elem> mapped = db.index_of(h.phi.at(s.name()));
            std::optional<Elem> stepped =
                mapped ? db.apply1(sym.name(), *mapped) : std::nullopt;
            std::string lhs = h.phi.at(succ.name());
            std::string rhs = stepped ? db.name_of(*stepped) : "undefined";
            if (lhs != rhs) {
              cex = Counterexample{succ.name(), lhs, rhs};
              break;
            }
          }
          if (cex) break;
        }
        report.counterexample =
            cex ? cex : std::optional<Counterexample>(Counterexample{"φ", "not a homomorphism", ""});
      }
    } catch (const Error& e) {
      report.pass = false;
      report.counterexample = Counterexample{"φ", e.what(), ""};
    }
    return report;
  }

  std::optional<CheckId> id = parse_check_id(id_name);
  if (!id) raise(Errc::check_id, "unknown check \"" + id_name + "\"");
  CheckInstance inst;
  inst.description = path;
  for (const auto& part : j.at("parts"))
    inst.parts.push_back(prefix_language_from_json(part.dump()));
  if (j.contains("sigma")) {
    for (const auto& name : j.at("sigma")) inst.sigma.insert(Symbol::intern(name.get<std::string>()));
  }
  if (j.contains("claimed")) inst.claimed = algebra_from_json(j.at("claimed").dump());
  int depth = j.contains("depth") ? j.at("depth").get<int>()
                                  : choose_depth(RunConfig{}, inst.parts);
  return run_check(*id, inst, depth);
}

RunResult finish_reports(const RunConfig& config, const std::vector<CheckReport>& reports) {
  RunResult result;
  bool all_pass = std::all_of(reports.begin(), reports.end(),
                              [](const CheckReport& r) { return r.pass; });
  if (config.format == "text") {
    for (const CheckReport& r : reports) result.output += report_line(r);
  } else {
    result.output = to_json(reports, 2) + "\n";
  }
  result.exit_code = all_pass ? 0 : 1;
  return result;
}

RunResult dispatch(const RunConfig& config) {
  RunResult result;

  if (config.command == "compose" || config.command == "vfs") {
    LoadedSpec loaded = load_spec(config.input_path);
    int depth = choose_depth(config, loaded.parts);
    if (config.command == "compose") {
      PrefixLanguage composed = compose_parallel(loaded.parts, depth);
      result.output = config.format == "text" ? language_text(composed)
                                              : to_json(composed, 2) + "\n";
    } else {
      VectorLanguage v = vfs(loaded.parts, depth);
      result.output = config.format == "text" ? vector_language_text(v)
                                              : to_json(v, 2) + "\n";
    }
    return result;
  }

  if (config.command == "algebra") {
    LoadedSpec loaded = load_spec(config.input_path);
    if (config.format == "dot") {
      if (loaded.specs.size() != 1)
        raise(Errc::parse, "dot output needs exactly one process");
      result.output = to_dot(f_of_language(loaded.parts.front(), loaded.sigma),
                             loaded.specs.front().name);
      return result;
    }
    json out = json::array();
    for (size_t i = 0; i < loaded.specs.size(); ++i) {
      json entry;
      entry["process"] = loaded.specs[i].name;
      entry["algebra"] = json::parse(to_json(f_of_language(loaded.parts[i], loaded.sigma)));
      out.push_back(std::move(entry));
    }
    result.output = out.dump(2) + "\n";
    return result;
  }

  if (config.command == "closure") {
    LoadedSpec loaded = load_spec(config.input_path);
    std::vector<PartialAlgebra> factors;
    for (const PrefixLanguage& part : loaded.parts)
      factors.push_back(f_of_language(part, loaded.sigma));
    PartialAlgebra closed = algebraic_closure(direct_product(factors));
    result.output = config.format == "dot" ? to_dot(closed, "closure")
                                           : to_json(closed, 2) + "\n";
    return result;
  }

  if (config.command == "nf") {
    LoadedSpec loaded = load_spec(config.input_path);
    std::vector<SymbolSet> alphabets;
    for (const PrefixLanguage& part : loaded.parts) alphabets.push_back(part.alphabet());
    AlphabetVector av(std::move(alphabets));
    std::vector<VectorOp> word;
    std::istringstream in(config.word);
    std::string token;
    while (in >> token) {
      Symbol s = Symbol::intern(token);
      std::optional<VectorOp> op = av.vop(s);
      if (!op) raise(Errc::symbol, "\"" + token + "\" is not declared by any process");
      word.push_back(*op);
    }
    std::vector<VectorOp> normal = normal_form(std::move(word));
    for (size_t i = 0; i < normal.size(); ++i) {
      if (i) result.output += " ";
      result.output += normal[i].symbol().name();
    }
    result.output += "\n";
    return result;
  }

  if (config.command == "check") {
    if (!config.input_path.empty() && is_json_fixture(config.input_path))
      return finish_reports(config, {run_fixture(config.input_path, config.check_target)});

    GenParams params;
    params.max_alphabet = config.max_alphabet;
    params.max_components = config.max_components;
    params.max_depth = config.max_depth;
    if (params.max_alphabet < 1 || params.max_alphabet > 5 || params.max_components < 1 ||
        params.max_depth < 1)
      raise(Errc::parse, "generator bounds: 1 <= max-alphabet <= 5, others >= 1");
    if (config.check_target == "SUITE" || config.check_target.empty()) {
      if (!config.input_path.empty()) {
        LoadedSpec loaded = load_spec(config.input_path);
        CheckInstance inst{loaded.sigma, loaded.parts, {}, std::nullopt, config.input_path};
        int depth = choose_depth(config, loaded.parts);
        std::vector<CheckReport> reports;
        for (CheckId id : all_check_ids()) reports.push_back(run_check(id, inst, depth));
        return finish_reports(config, reports);
      }
      return finish_reports(config, run_suite(config.seed, config.instances, params));
    }
    std::optional<CheckId> id = parse_check_id(config.check_target);
    if (!id) raise(Errc::check_id, "unknown check \"" + config.check_target + "\"");
    if (!config.input_path.empty()) {
      LoadedSpec loaded = load_spec(config.input_path);
      CheckInstance inst{loaded.sigma, loaded.parts, {}, std::nullopt, config.input_path};
      return finish_reports(config, {run_check(*id, inst, choose_depth(config, loaded.parts))});
    }
    return finish_reports(config, run_suite_for(*id, config.seed, config.instances, params));
  }

  raise(Errc::parse, "unknown command \"" + config.command + "\"");
}

}  // namespace

RunResult run_command(const RunConfig& config) {
  try {
    if (config.format != "json" && config.format != "dot" && config.format != "text")
      raise(Errc::parse, "format must be json, dot or text");
    return dispatch(config);
  } catch (const Error& e) {
    RunResult result;
    result.exit_code = 2;
    result.diagnostics = std::string(e.what()) + "\n";
    return result;
  } catch (const std::exception& e) {
    RunResult result;
    result.exit_code = 2;
    result.diagnostics = std::string("error: ") + e.what() + "\n";
    return result;
  }
}

}  // namespace landin::cli
