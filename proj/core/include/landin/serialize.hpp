#pragma once

#include <string>

#include "landin/category.hpp"

namespace landin {

/// Canonical JSON forms. Objects keep their keys alphabetical and arrays
/// follow the library's canonical orders, so equal values serialize to
/// identical bytes. `indent` < 0 emits compact one-line JSON.

std::string to_json(const PrefixLanguage& lang, int indent = -1);
PrefixLanguage prefix_language_from_json(const std::string& text);

std::string to_json(const VectorString& v);
std::string to_json(const VectorLanguage& lang, int indent = -1);
VectorLanguage vector_language_from_json(const std::string& text);

std::string to_json(const PartialAlgebra& a, int indent = -1);
PartialAlgebra algebra_from_json(const std::string& text);

std::string to_json(const CheckReport& report, int indent = -1);
std::string to_json(const std::vector<CheckReport>& reports, int indent = -1);

std::string to_json(const Simulation& f, int indent = -1);
std::string to_json(const Derivor& d, int indent = -1);

}  // namespace landin
