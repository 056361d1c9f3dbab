#include "landin/serialize.hpp"

#include <json.hpp>

#include "landin/error.hpp"

namespace landin {

using nlohmann::json;

namespace {

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::parse, "malformed JSON");
  return j;
}

// json access errors (missing keys, wrong types) surface as parse errors
template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(Errc::parse, std::string(what) + ": " + e.what());
  }
}

json alphabet_json(const SymbolSet& alphabet) {
  json out = json::array();
  for (const Symbol& s : alphabet) out.push_back(s.name());
  return out;
}

SymbolSet alphabet_from_json(const json& j) {
  if (!j.is_array()) raise(Errc::parse, "alphabet must be an array of strings");
  SymbolSet out;
  for (const auto& name : j) out.insert(Symbol::intern(name.get<std::string>()));
  return out;
}

}  // namespace

std::string to_json(const PrefixLanguage& lang, int indent) {
  json j;
  j["alphabet"] = alphabet_json(lang.alphabet());
  j["depth"] = lang.depth();
  json traces = json::array();
  for (const Trace& t : lang.traces()) traces.push_back(t.flat());
  j["traces"] = std::move(traces);
  return dump(j, indent);
}

PrefixLanguage prefix_language_from_json(const std::string& text) {
  return guarded("prefix language", [&] {
    json j = parse_json(text);
    SymbolSet alphabet = alphabet_from_json(j.at("alphabet"));
    int depth = j.at("depth").get<int>();
    std::set<Trace> traces;
    for (const auto& flat : j.at("traces"))
      traces.insert(trace_from_flat(flat.get<std::string>(), alphabet));
    return PrefixLanguage::make(std::move(alphabet), std::move(traces), depth);
  });
}

std::string to_json(const VectorString& v) {
  json j = json::array();
  for (size_t i = 0; i < v.dimension(); ++i) j.push_back(v.part(i).flat());
  return j.dump();
}

std::string to_json(const VectorLanguage& lang, int indent) {
  json j;
  json alphabets = json::array();
  for (const SymbolSet& c : lang.alphabet_vector().components())
    alphabets.push_back(alphabet_json(c));
  j["alphabets"] = std::move(alphabets);
  j["depth"] = lang.depth();
  json vectors = json::array();
  for (const VectorString& v : lang.vectors()) {
    json row = json::array();
    for (size_t i = 0; i < v.dimension(); ++i) row.push_back(v.part(i).flat());
    vectors.push_back(std::move(row));
  }
  j["vectors"] = std::move(vectors);
  return dump(j, indent);
}

VectorLanguage vector_language_from_json(const std::string& text) {
  return guarded("vector language", [&] {
    json j = parse_json(text);
    std::vector<SymbolSet> components;
    for (const auto& c : j.at("alphabets")) components.push_back(alphabet_from_json(c));
    AlphabetVector av(std::move(components));
    int depth = j.at("depth").get<int>();
    std::set<VectorString> vectors;
    for (const auto& row : j.at("vectors")) {
      if (!row.is_array() || row.size() != av.dimension())
        raise(Errc::parse, "vector row has the wrong dimension");
      std::vector<Trace> parts;
      for (size_t i = 0; i < av.dimension(); ++i)
        parts.push_back(trace_from_flat(row[i].get<std::string>(), av.component(i)));
      vectors.insert(VectorString(std::move(parts)));
    }
    return VectorLanguage::make(std::move(av), std::move(vectors), depth);
  });
}

std::string to_json(const PartialAlgebra& a, int indent) {
  json j;
  json sig = json::object();
  for (const auto& [op, arity] : a.signature().ops()) sig[op] = arity;
  j["signature"] = std::move(sig);
  j["carrier"] = a.carrier();
  json tables = json::object();
  for (const auto& [op, table] : a.tables()) {
    json rows = json::array();
    if (table.arity == 0) {
      rows.push_back(json::array({a.name_of(table.constant)}));
    } else if (table.arity == 1) {
      for (size_t i = 0; i < a.size(); ++i)
        if (table.unary[i] != kUndef)
          rows.push_back(json::array(
              {a.name_of(static_cast<Elem>(i)), a.name_of(table.unary[i])}));
    } else {
      for (const auto& [args, result] : table.general) {
        json row = json::array();
        for (Elem e : args) row.push_back(a.name_of(e));
        row.push_back(a.name_of(result));
        rows.push_back(std::move(row));
      }
    }
    tables[op] = std::move(rows);
  }
  j["tables"] = std::move(tables);
  return dump(j, indent);
}

PartialAlgebra algebra_from_json(const std::string& text) {
  return guarded("algebra", [&] {
    json j = parse_json(text);
    std::map<std::string, int> ops;
    for (const auto& [op, arity] : j.at("signature").items()) ops.emplace(op, arity.get<int>());
    Signature sig = Signature::of(std::move(ops));
    std::vector<std::string> carrier = j.at("carrier").get<std::vector<std::string>>();
    PartialAlgebra::Entries entries;
    for (const auto& [op, rows] : j.at("tables").items()) {
      std::optional<int> arity = sig.arity(op);
      if (!arity) raise(Errc::parse, "table for unknown operator \"" + op + "\"");
      for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != *arity + 1)
          raise(Errc::parse, "table row for \"" + op + "\" has the wrong width");
        std::vector<std::string> args;
        for (int k = 0; k < *arity; ++k)
          args.push_back(row[static_cast<size_t>(k)].get<std::string>());
        entries[op][args] = row[row.size() - 1].get<std::string>();
      }
    }
    return PartialAlgebra::make(std::move(sig), std::move(carrier), entries);
  });
}

namespace {

json report_json(const CheckReport& report) {
  json j;
  j["check"] = report.check;
  j["instance"] = report.instance;
  j["pass"] = report.pass;
  j["depth"] = report.depth;
  if (report.counterexample) {
    json cex;
    cex["witness"] = report.counterexample->witness;
    cex["lhs"] = report.counterexample->lhs;
    cex["rhs"] = report.counterexample->rhs;
    j["counterexample"] = std::move(cex);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace

std::string to_json(const CheckReport& report, int indent) {
  return dump(report_json(report), indent);
}

std::string to_json(const std::vector<CheckReport>& reports, int indent) {
  json j = json::array();
  for (const CheckReport& r : reports) j.push_back(report_json(r));
  return dump(j, indent);
}

std::string to_json(const Simulation& f, int indent) {
  json j;
  json map = json::object();
  for (const auto& [sym, image] : f.symbol_map()) map[sym.name()] = image.flat();
  j["map"] = std::move(map);
  j["strong"] = f.strong();
  j["depth"] = f.depth();
  return dump(j, indent);
}

std::string to_json(const Derivor& d, int indent) {
  json j;
  json map = json::object();
  for (const auto& [op, image] : d.images()) map[op] = image.str();
  j["map"] = std::move(map);
  return dump(j, indent);
}

}  // namespace landin
